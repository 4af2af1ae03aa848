#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "ctl/cyclotomic.hpp"

namespace ctl {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

// Element of F_{p^k} in the polynomial basis modulo the field's defining
// polynomial.  Coefficients are ints in [0, p).
class FqScalar {
 public:
  FqScalar() = default;
  FqScalar(FqFieldPtr fld, std::vector<int> coeffs);

  const FqFieldPtr& field() const { return fld_; }
  const std::vector<int>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  friend bool operator==(const FqScalar& a, const FqScalar& b);
  friend bool operator!=(const FqScalar& a, const FqScalar& b) { return !(a == b); }

  FqScalar operator-() const;
  friend FqScalar operator+(const FqScalar& a, const FqScalar& b);
  friend FqScalar operator-(const FqScalar& a, const FqScalar& b);
  friend FqScalar operator*(const FqScalar& a, const FqScalar& b);
  FqScalar inverse() const;
  FqScalar pow(int64_t e) const;

  // Multiplicative order; element must be nonzero.
  int multiplicative_order() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const FqScalar& s) {
    return os << s.str();
  }

 private:
  FqFieldPtr fld_;
  std::vector<int> c_;
};

// F_{p^k} = F_p[x] / (f) for a monic irreducible f of degree k.
class FqField : public std::enable_shared_from_this<FqField> {
 public:
  // Builds F_{p^k} with f = the first irreducible degree-k factor of the
  // m-th cyclotomic polynomial over F_p, in ascending lexicographic order
  // of (constant, ..., leading) coefficient tuples; k is the order of
  // p modulo m.  The class of x is then a primitive m-th root of unity.
  static FqFieldPtr for_roots_of_unity(int p, int m);

  int p() const { return p_; }
  int k() const { return k_; }
  int m() const { return m_; }
  const std::vector<int>& modulus() const { return f_; }

  FqScalar zero() const;
  FqScalar one() const;
  FqScalar from_integer(int64_t v) const;
  FqScalar zeta() const;  // the fixed primitive m-th root of unity (class of x)

 private:
  friend class FqScalar;
  FqField(int p, int m, int k, std::vector<int> f)
      : p_(p), m_(m), k_(k), f_(std::move(f)) {}

  int p_;
  int m_;
  int k_;
  std::vector<int> f_;  // monic, degree k: f_[0..k], f_[k] == 1
};

// The reduction of cyclotomic integers into a finite field of
// characteristic p that contains all m-th roots of unity, m the p'-part
// of the given exponent.  Roots of unity of p-power order map to 1; the
// fixed primitive m-th root maps to the field's distinguished zeta.
class ReductionContext {
 public:
  ReductionContext() = default;
  ReductionContext(int p, int group_exponent);

  int p() const { return p_; }
  int exponent() const { return exponent_; }
  int m() const { return m_; }  // p'-part of exponent
  const FqFieldPtr& field() const { return fld_; }

  // Ring homomorphism on algebraic integers of Q(zeta_e), e | exponent.
  FqScalar star(const Cyclotomic& x) const;

  bool compatible_with(const ReductionContext& other) const {
    return p_ == other.p_ && exponent_ == other.exponent_;
  }

 private:
  int p_ = 0;
  int exponent_ = 1;
  int m_ = 1;
  FqFieldPtr fld_;
};

}  // namespace ctl
