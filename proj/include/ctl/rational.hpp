#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ctl/error.hpp"

namespace ctl {

struct overflow_error : error {
  explicit overflow_error(const std::string& what) : error(what) {}
};

namespace detail {

inline int64_t checked_narrow(__int128 v, const char* ctx) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw overflow_error(std::string("integer overflow in ") + ctx);
  return static_cast<int64_t>(v);
}

}  // namespace detail

// Exact rational number on 64-bit numerator/denominator.  All intermediate
// products run through 128 bits and overflow raises instead of wrapping.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t n) : num_(n), den_(1) {}
  Rational(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int64_t as_integer() const {
    if (den_ != 1) throw error("rational " + str() + " is not an integer");
    return num_;
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                 static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return make(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return make(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw error("rational division by zero");
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return make(n, d);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static Rational make(__int128 n, __int128 d) {
    Rational r;
    if (d < 0) { n = -n; d = -d; }
    if (n == 0) { r.num_ = 0; r.den_ = 1; return r; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    r.num_ = detail::checked_narrow(n / a, "rational");
    r.den_ = detail::checked_narrow(d / a, "rational");
    return r;
  }

  void normalize() {
    if (den_ == 0) throw error("rational with zero denominator");
    *this = make(num_, den_);
  }

  int64_t num_;
  int64_t den_;
};

}  // namespace ctl
