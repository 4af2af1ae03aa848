#include "ctl/fq.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ctl {

namespace {

int mod_norm(int64_t v, int p) {
  int r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

// Remainder of a mod b over F_p, b monic-normalized in place by caller.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  // b need not be monic: use inverse of leading coefficient
  int lead = b[db];
  int lead_inv = 1;
  {
    // Fermat inverse
    int64_t base = lead, acc = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
    }
    lead_inv = static_cast<int>(acc);
  }
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    int f = static_cast<int>(static_cast<int64_t>(a[da]) * lead_inv % p);
    if (f != 0)
      for (int j = 0; j <= db; ++j)
        a[da - db + j] = mod_norm(a[da - db + j] - static_cast<int64_t>(f) * b[j], p);
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

bool divides_poly(const std::vector<int>& divisor, std::vector<int> target, int p) {
  return poly_mod(std::move(target), divisor, p).empty();
}

}  // namespace

FqFieldPtr FqField::for_roots_of_unity(int p, int m) {
  if (m % p == 0) throw internal_error("root-of-unity order divisible by p");
  // k = multiplicative order of p mod m
  int k = 1;
  {
    int64_t acc = p % m;
    while (acc != 1 % m) {
      acc = acc * p % m;
      ++k;
      if (k > m) throw internal_error("order computation failed");
    }
  }
  if (m == 1) k = 1;
  // Phi_m over F_p
  const auto& phi = cyclotomic_polynomial(m);
  std::vector<int> phi_p(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) phi_p[i] = mod_norm(phi[i], p);
  while (phi_p.size() > 1 && phi_p.back() == 0) phi_p.pop_back();

  if (static_cast<int>(phi_p.size()) - 1 == k) {
    // Phi_m itself is the unique (hence smallest) irreducible factor.
    return FqFieldPtr(new FqField(p, m, k, std::move(phi_p)));
  }
  // Enumerate monic degree-k polynomials in ascending lexicographic order of
  // (c_0, ..., c_{k-1}) and take the first divisor of Phi_m.  Every
  // irreducible factor of Phi_m has degree exactly k, so the first divisor
  // found is irreducible.
  std::vector<int> cand(k + 1, 0);
  cand[k] = 1;
  int64_t total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (int64_t code = 0; code < total; ++code) {
    int64_t c = code;
    for (int i = k - 1; i >= 0; --i) {
      // most significant digit is c_{k-1}: ascending lex on (c_0,...,c_{k-1})
      cand[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (divides_poly(cand, phi_p, p))
      return FqFieldPtr(new FqField(p, m, k, cand));
  }
  throw internal_error("no irreducible factor found");
}

FqScalar FqField::zero() const {
  return FqScalar(shared_from_this(), std::vector<int>(k_, 0));
}

FqScalar FqField::one() const { return from_integer(1); }

FqScalar FqField::from_integer(int64_t v) const {
  std::vector<int> c(k_, 0);
  c[0] = mod_norm(v, p_);
  return FqScalar(shared_from_this(), std::move(c));
}

FqScalar FqField::zeta() const {
  std::vector<int> c(k_, 0);
  if (k_ == 1) {
    // x reduced modulo the linear modulus f = x + f0: x == -f0
    c[0] = mod_norm(-f_[0], p_);
  } else {
    c[1] = 1;
  }
  return FqScalar(shared_from_this(), std::move(c));
}

FqScalar::FqScalar(FqFieldPtr fld, std::vector<int> coeffs)
    : fld_(std::move(fld)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != fld_->k())
    throw internal_error("Fq coefficient length");
}

bool FqScalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

bool FqScalar::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool operator==(const FqScalar& a, const FqScalar& b) {
  if (a.fld_.get() != b.fld_.get() &&
      (a.fld_->p() != b.fld_->p() || a.fld_->modulus() != b.fld_->modulus()))
    throw error("comparing scalars from different fields");
  return a.c_ == b.c_;
}

FqScalar FqScalar::operator-() const {
  std::vector<int> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = mod_norm(-c_[i], fld_->p());
  return FqScalar(fld_, std::move(c));
}

FqScalar operator+(const FqScalar& a, const FqScalar& b) {
  std::vector<int> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = mod_norm(a.c_[i] + b.c_[i], a.fld_->p());
  return FqScalar(a.fld_, std::move(c));
}

FqScalar operator-(const FqScalar& a, const FqScalar& b) { return a + (-b); }

FqScalar operator*(const FqScalar& a, const FqScalar& b) {
  const int p = a.fld_->p();
  const int k = a.fld_->k();
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < k; ++j)
      prod[i + j] = mod_norm(prod[i + j] + static_cast<int64_t>(a.c_[i]) * b.c_[j], p);
  }
  auto rem = poly_mod(std::move(prod), a.fld_->modulus(), p);
  rem.resize(k, 0);
  return FqScalar(a.fld_, std::move(rem));
}

FqScalar FqScalar::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FqScalar acc = fld_->one(), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FqScalar FqScalar::inverse() const {
  if (is_zero()) throw error("Fq division by zero");
  // x^(q-2) with q = p^k
  int64_t q = 1;
  for (int i = 0; i < fld_->k(); ++i) q *= fld_->p();
  return pow(q - 2);
}

int FqScalar::multiplicative_order() const {
  if (is_zero()) throw error("order of zero");
  FqScalar acc = *this;
  int ord = 1;
  int64_t q = 1;
  for (int i = 0; i < fld_->k(); ++i) q *= fld_->p();
  while (!acc.is_one()) {
    acc = acc * (*this);
    ++ord;
    if (ord >= q) throw internal_error("order overflow");
  }
  return ord;
}

std::string FqScalar::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

ReductionContext::ReductionContext(int p, int group_exponent)
    : p_(p), exponent_(group_exponent) {
  m_ = exponent_;
  while (m_ % p_ == 0) m_ /= p_;
  fld_ = FqField::for_roots_of_unity(p_, m_);
}

FqScalar ReductionContext::star(const Cyclotomic& x) const {
  if (exponent_ % x.conductor() != 0)
    throw precondition_error("conductor " + std::to_string(x.conductor()) +
                             " incompatible with reduction context exponent " +
                             std::to_string(exponent_));
  if (!x.is_integral())
    throw precondition_error("star reduction requires an algebraic integer");
  const Cyclotomic lifted = x.lift(exponent_);
  // zeta_e = zeta_{p^a} * zeta_m' component-wise via CRT, e = p^a * m',
  // m' | m.  p-power roots reduce to 1, so zeta_e maps to zeta^(m/m' * inv)
  // where inv = (p^a)^{-1} mod m'.
  int e = exponent_;
  int pa = 1;
  while (e % p_ == 0) {
    e /= p_;
    pa *= p_;
  }
  const int mprime = e;  // p'-part of exponent_ (= m_)
  int inv = 1;
  if (mprime > 1) {
    // inverse of pa mod mprime
    int64_t base = pa % mprime, acc = 1;
    for (int t = euler_phi(mprime) - 1; t > 0; --t) acc = acc * base % mprime;
    inv = static_cast<int>(acc);
  }
  const FqScalar z = fld_->zeta();
  FqScalar result = fld_->zero();
  const auto& coeffs = lifted.coeffs();
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    // zeta_exponent^j -> zeta_m'^(j * inv) -> z^( (m_/mprime) * j * inv )
    int64_t ex = mprime == 1 ? 0
                             : static_cast<int64_t>(j % mprime) * inv % mprime *
                                   (m_ / mprime) % m_;
    result = result + fld_->from_integer(coeffs[j].as_integer()) * z.pow(ex);
  }
  return result;
}

}  // namespace ctl
