#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ctl/rational.hpp"

namespace ctl {

// Euler totient and the integer coefficients of the n-th cyclotomic
// polynomial (cached per n).
int euler_phi(int n);
const std::vector<int64_t>& cyclotomic_polynomial(int n);

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1},
// reduced modulo the n-th cyclotomic polynomial.  Equality of values at a
// common conductor is equality of coefficient vectors; mixed-conductor
// operations lift both operands to the lcm.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  Cyclotomic(const Rational& r) : n_(1), c_(1) { c_[0] = r; }
  Cyclotomic(int64_t v) : n_(1), c_(1) { c_[0] = Rational(v); }

  // zeta_n^k
  static Cyclotomic root_of_unity(int n, int64_t k);
  static Cyclotomic zero_at(int n);
  static Cyclotomic from_coeffs(int n, std::vector<Rational> coeffs);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws if not rational
  bool is_integral() const;         // all power-basis coefficients integral

  // Exact value comparison across conductors.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic inverse() const;  // throws on zero
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  // Galois action zeta -> zeta^j (j coprime to conductor) and complex
  // conjugation zeta -> zeta^{-1}.
  Cyclotomic galois(int64_t j) const;
  Cyclotomic conj() const { return galois(-1); }

  // Rewrite at conductor m (current conductor must divide m).
  Cyclotomic lift(int m) const;

  // Exact division by a rational integer; throws unless every coefficient
  // is divisible (valid test for algebraic-integer quotients since the
  // power basis is an integral basis).
  Cyclotomic divide_exact(int64_t d) const;

  // Root-of-unity detection: if this value is a root of unity, set order
  // and exponent with *this == zeta_order^exponent and return true.
  bool as_root_of_unity(int* order, int* exponent) const;

  // Deterministic total order at equal conductor (lexicographic on the
  // coefficient vector, larger coefficient first).  Used for reproducible
  // character orderings.
  static int cmp(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) {
    return os << z.str();
  }

 private:
  static std::vector<Rational> reduce_mod_phi(int n, std::vector<Rational> poly);

  int n_;                    // conductor
  std::vector<Rational> c_;  // phi(n) coefficients
};

}  // namespace ctl
