#include "ctl/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ctl {

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact polynomial division of integer polynomials, remainder must vanish.
std::vector<int64_t> poly_div_exact(std::vector<int64_t> num,
                                    const std::vector<int64_t>& den) {
  std::vector<int64_t> q(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    int64_t lead = num[i + den.size() - 1];
    if (lead % den.back() != 0) throw internal_error("cyclotomic division");
    int64_t f = lead / den.back();
    q[i] = f;
    for (size_t j = 0; j < den.size(); ++j)
      num[i + j] = detail::checked_narrow(
          static_cast<__int128>(num[i + j]) - static_cast<__int128>(f) * den[j],
          "cyclotomic polynomial");
  }
  for (int64_t r : num)
    if (r != 0) throw internal_error("cyclotomic division remainder");
  return q;
}

}  // namespace

const std::vector<int64_t>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<int64_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x)
  std::vector<int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

std::vector<Rational> Cyclotomic::reduce_mod_phi(int n, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi.size()) - 1;  // = euler_phi(n)
  for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
    Rational f = poly[i];
    if (f.is_zero()) continue;
    // x^i = x^{i-deg} * (x^deg) and x^deg = -(phi - x^deg)
    for (int j = 0; j < deg; ++j)
      poly[i - deg + j] -= f * Rational(phi[j]);
    poly[i] = Rational(0);
  }
  poly.resize(deg);
  return poly;
}

Cyclotomic Cyclotomic::zero_at(int n) {
  Cyclotomic z;
  z.n_ = n;
  z.c_.assign(euler_phi(n), Rational(0));
  return z;
}

Cyclotomic Cyclotomic::from_coeffs(int n, std::vector<Rational> coeffs) {
  Cyclotomic z;
  z.n_ = n;
  coeffs.resize(std::max<size_t>(coeffs.size(), euler_phi(n)), Rational(0));
  z.c_ = reduce_mod_phi(n, std::move(coeffs));
  return z;
}

Cyclotomic Cyclotomic::root_of_unity(int n, int64_t k) {
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> poly(k + 1, Rational(0));
  poly[k] = Rational(1);
  return from_coeffs(n, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  for (const auto& r : c_)
    if (!r.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw error("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

bool Cyclotomic::is_integral() const {
  for (const auto& r : c_)
    if (!r.is_integer()) return false;
  return true;
}

Cyclotomic Cyclotomic::lift(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw error("conductor lift must be to a multiple");
  const int64_t step = m / n_;
  std::vector<Rational> poly(static_cast<size_t>(euler_phi(n_) - 1) * step + 1,
                             Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
  return from_coeffs(m, std::move(poly));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  int m = std::lcm(a.n_, b.n_);
  return a.lift(m).c_ == b.lift(m).c_;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& r : z.c_) r = -r;
  return z;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.lift(m) + b.lift(m);
  }
  Cyclotomic z = a;
  for (size_t i = 0; i < z.c_.size(); ++i) z.c_[i] += b.c_[i];
  return z;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    int m = std::lcm(a.n_, b.n_);
    return a.lift(m) * b.lift(m);
  }
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Cyclotomic::from_coeffs(a.n_, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw error("cyclotomic division by zero");
  if (is_rational()) {
    Cyclotomic z = zero_at(n_);
    z.c_[0] = Rational(1) / c_[0];
    return z;
  }
  // Extended Euclid in Q[x] against Phi_n: find u with u*this = 1 mod Phi.
  const auto& phi_int = cyclotomic_polynomial(n_);
  std::vector<Rational> r0(phi_int.begin(), phi_int.end());
  std::vector<Rational> r1(c_.begin(), c_.end());
  while (!r1.empty() && r1.back().is_zero()) r1.pop_back();
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coeffs of *this
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  while (true) {
    trim(r1);
    if (r1.empty()) throw internal_error("cyclotomic inverse: zero remainder chain");
    if (r1.size() == 1) {
      // r1 = constant: 1 = (s1/r1) * this  mod Phi
      Cyclotomic u = zero_at(n_);
      std::vector<Rational> s = s1;
      for (auto& x : s) x /= r1[0];
      return from_coeffs(n_, std::move(s));
    }
    // r0 = q*r1 + rem
    std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
                            Rational(0));
    std::vector<Rational> rem = r0;
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
      Rational f = rem[i + r1.size() - 1] / r1.back();
      q[i] = f;
      if (f.is_zero()) continue;
      for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= f * r1[j];
    }
    trim(rem);
    // s_next = s0 - q*s1
    std::vector<Rational> snext = s0;
    snext.resize(std::max(snext.size(), q.size() + s1.size() - 1), Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i].is_zero()) continue;
      for (size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }
}

Cyclotomic Cyclotomic::galois(int64_t j) const {
  int64_t jj = j % n_;
  if (jj < 0) jj += n_;
  if (std::gcd(jj, static_cast<int64_t>(n_)) != 1)
    throw error("galois exponent not coprime to conductor");
  std::vector<Rational> poly(static_cast<size_t>(n_), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    poly[(i * jj) % n_] += c_[i];
  }
  return from_coeffs(n_, std::move(poly));
}

Cyclotomic Cyclotomic::divide_exact(int64_t d) const {
  if (d == 0) throw error("division by zero");
  Cyclotomic z = *this;
  for (auto& r : z.c_) r /= Rational(d);
  return z;
}

bool Cyclotomic::as_root_of_unity(int* order, int* exponent) const {
  // Roots of unity in Q(zeta_n) have order dividing lcm(2, n).
  const int bound = std::lcm(2, n_);
  if (is_zero()) return false;
  Cyclotomic p = *this;
  for (int k = 1; k <= bound; ++k) {
    if (p == Cyclotomic(1)) {
      // this^k == 1; this == zeta_k^e for some e
      for (int e = 0; e < k; ++e) {
        if (*this == root_of_unity(k, e)) {
          if (order) *order = k;
          if (exponent) *exponent = e;
          return true;
        }
      }
      throw internal_error("root of unity without exponent");
    }
    p = p * (*this);
  }
  return false;
}

int Cyclotomic::cmp(const Cyclotomic& a, const Cyclotomic& b) {
  int m = std::lcm(a.n_, b.n_);
  Cyclotomic x = a.lift(m), y = b.lift(m);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == y.c_[i]) continue;
    return y.c_[i] < x.c_[i] ? -1 : 1;  // larger coefficient sorts first
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[0].str();
    } else {
      if (c_[i] != Rational(1)) os << c_[i].str() << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ctl
