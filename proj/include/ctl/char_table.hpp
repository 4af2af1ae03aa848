#pragma once

#include <memory>
#include <vector>

#include "ctl/cyclotomic.hpp"
#include "ctl/group.hpp"

namespace ctl {

// Exact class function on a group, values stored per conjugacy class in the
// group's fixed class order.
class Character {
 public:
  Character() = default;
  Character(GroupPtr g, std::vector<Cyclotomic> values);

  const GroupPtr& group() const { return g_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& value_on_class(int c) const { return values_[c]; }
  Cyclotomic value_at(const Perm& x) const;

  // Value at the identity class; throws when that value is not a rational
  // integer.
  int64_t degree() const;

  friend Character operator+(const Character& a, const Character& b);
  friend Character operator*(const Character& a, const Character& b);  // tensor
  friend bool operator==(const Character& a, const Character& b);
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

  // Exact inner product (1/|G|) sum chi(g) psi(g^{-1}).
  Cyclotomic inner(const Character& other) const;
  bool is_irreducible() const;

  // chi^x with chi^x(g) = chi(x g x^{-1}); x must normalize the group.
  Character conjugate_by(const Perm& x) const;
  Character complex_conjugate() const;
  bool is_linear() const { return degree() == 1; }

  // Multiplicative order of a linear character.
  int linear_order() const;

  // kernel as a subgroup
  GroupPtr kernel() const;

 private:
  GroupPtr g_;
  std::vector<Cyclotomic> values_;
};

// forward-declared in group.hpp as an opaque cache slot
class CharacterTable {
 public:
  // Computes (or returns the cached) ordinary character table; exact values,
  // deterministic order by (degree, value tuple).
  static std::shared_ptr<const CharacterTable> of(GroupPtr g);

  const GroupPtr& group() const { return g_; }
  int size() const { return static_cast<int>(irr_.size()); }
  const Character& irr(int i) const { return irr_[i]; }
  const std::vector<Character>& irreducibles() const { return irr_; }

  // Index of an irreducible equal to chi; throws if absent.
  int index_of(const Character& chi) const;

  // Exact row/column orthogonality; throws internal_error on violation.
  void verify_orthogonality() const;

 private:
  friend std::shared_ptr<const CharacterTable> build_table(GroupPtr g);
  GroupPtr g_;
  std::vector<Character> irr_;
};

Character trivial_character(GroupPtr g);

// Restriction and induction (exact); decompose returns (irr index,
// multiplicity) pairs of nonzero multiplicity for the class function.
Character restrict_to(const Character& chi, GroupPtr h);
Character induce_to(const Character& theta, GroupPtr g);
std::vector<std::pair<int, int64_t>> decompose(const Character& f);

// Inflation along a surjection and deflation of a character trivial on the
// kernel.
Character inflate(const Character& chi_of_quotient, const GroupHom& proj);
Character deflate(const Character& chi, const GroupHom& proj);

// Irr(G | theta): indices of irreducibles of g whose restriction to the
// subgroup of theta contains theta (theta irreducible).
std::vector<int> irr_over(GroupPtr g, const Character& theta);

// Defect-zero characters: chi(1)_p == |G|_p.
std::vector<int> dz_set(GroupPtr g, int p);
// Relative defect zero over theta in Irr(N), N normal.
std::vector<int> rdz_set(GroupPtr g, GroupPtr n, const Character& theta, int p);
// Linear characters as table indices; lin_pprime keeps those of p'-order.
std::vector<int> lin_set(GroupPtr g);
std::vector<int> lin_pprime_set(GroupPtr g, int p);

// All chi in Irr(J) with Res_N(chi) == theta; empty when theta is not
// J-invariant.
std::vector<Character> extensions_of(const Character& theta, GroupPtr j);

// Whether theta^x == theta for all x in j.
bool is_invariant_under(const Character& theta, const PermGroup& j);

int64_t p_part(int64_t n, int p);

}  // namespace ctl
