#pragma once

#include <optional>

#include "ctl/block.hpp"
#include "ctl/rep.hpp"

namespace ctl {

// Factor set of a projective representation associated with a triple:
// constant on cosets of the normal subgroup, values are roots of unity,
// stored on a fixed transversal.
class FactorSet {
 public:
  FactorSet() = default;
  FactorSet(GroupPtr g, GroupPtr n, std::vector<int> transversal,
            std::vector<int> coset_of_element,
            std::vector<std::vector<Cyclotomic>> values);

  const GroupPtr& group() const { return g_; }
  const GroupPtr& normal() const { return n_; }
  int cosets() const { return static_cast<int>(transversal_.size()); }
  int coset_of(const Perm& x) const { return coset_of_element_[g_->index_of(x)]; }
  const Perm& coset_rep(int c) const { return g_->element(transversal_[c]); }
  const Cyclotomic& at_cosets(int c1, int c2) const { return values_[c1][c2]; }
  const Cyclotomic& at(const Perm& a, const Perm& b) const {
    return values_[coset_of(a)][coset_of(b)];
  }

  bool is_trivial() const;
  // cocycle identity alpha(a,b) alpha(ab,c) == alpha(a,bc) alpha(b,c),
  // exhaustive over coset triples; also checks root-of-unity values and the
  // normalization alpha(1,.) = alpha(.,1) = 1.
  void verify() const;

  // least common multiple of the multiplicative orders of all values
  int value_group_order() const;

 private:
  GroupPtr g_, n_;
  std::vector<int> transversal_;
  std::vector<int> coset_of_element_;
  std::vector<std::vector<Cyclotomic>> values_;
};

// Projective representation associated with a character triple (G, N, theta):
// restriction to N is a linear representation affording theta, and
// P(ng) = P(n)P(g), P(gn) = P(g)P(n).  Stored as the base representation
// plus one intertwiner per coset of the fixed transversal.
class ProjRep {
 public:
  ProjRep() = default;

  const GroupPtr& group() const { return g_; }
  const GroupPtr& normal() const { return n_; }
  const Character& theta() const { return theta_; }
  const MatrixRep& base() const { return base_; }
  const FactorSet& factor_set() const { return alpha_; }
  int rep_degree() const { return base_.rep_degree(); }

  Mat at(const Perm& x) const;
  Mat sum_over(const std::vector<Perm>& subset) const;

  // scale by a coset function (values must be constant on cosets when the
  // function comes from Lin(H/M) or a coboundary solution)
  ProjRep twisted(const std::vector<Cyclotomic>& per_coset_scalar) const;
  ProjRep restricted(GroupPtr smaller_g) const;  // same N inside smaller_g

  // The defining invariants, exhaustive over the group: the product rule
  // against the factor set, the two-sided N-translation rules, the
  // normalization of alpha, and scalarity on the centralizer of N.
  void verify_associated() const;

  friend ProjRep make_proj_rep(GroupPtr g, GroupPtr n, MatrixRep base,
                               std::vector<int> transversal,
                               std::vector<Mat> intertwiners);

 private:
  GroupPtr g_, n_;
  Character theta_;
  MatrixRep base_;
  std::vector<int> transversal_;        // element indices, [0] = identity
  std::vector<int> coset_of_element_;   // per |G| element
  std::vector<Mat> intertwiners_;       // per coset, [0] = identity matrix
  FactorSet alpha_;
};

// Assembles a ProjRep from parts and computes/validates its factor set.
ProjRep make_proj_rep(GroupPtr g, GroupPtr n, MatrixRep base,
                      std::vector<int> transversal,
                      std::vector<Mat> intertwiners);

// Builds a ProjRep from per-element matrix values of a map already known to
// translate correctly under N.
ProjRep proj_rep_from_values(GroupPtr g, GroupPtr n,
                             const std::vector<Mat>& per_element);

// Canonical projective representation of a triple: base affording theta,
// intertwiners taken from honest character extensions on the cyclic-over-N
// subgroups (this keeps every factor-set value a root of unity).
ProjRep projective_rep_for_triple(GroupPtr g, GroupPtr n, const Character& theta);
// Same with a prescribed base representation of N.
ProjRep projective_rep_with_base(GroupPtr g, GroupPtr n, const MatrixRep& base);

// Induced projective representation: from (H, M, theta) to (G, N, Ind theta)
// for G = NH, M = N cap H, as a block matrix over M-coset representatives of
// N.  Sets *induced_irreducible when non-null; the factor sets coincide via
// G/N ~ H/M (verified).
ProjRep induce_proj(const ProjRep& p, GroupPtr g, GroupPtr n,
                    bool* induced_irreducible = nullptr);

// Tensor product on a direct product of triples.
ProjRep tensor_proj(const ProjRep& a, const ProjRep& b,
                    const DirectProductData& prod);

// Wreath construction: copies of p tensored and composed with the
// tensor-factor permutation action of the top symmetric group.
ProjRep wreath_proj(const ProjRep& p, const WreathProductData& w);

// Realization of the transported pair on a second group acting on N with
// the same automorphism image.  aut_image(g) is the permutation of N's
// element list induced by conjugation.
struct ButterflyResult {
  GroupPtr h2;
  ProjRep upper;
  ProjRep lower;
};
ButterflyResult butterfly_transport(const ProjRep& p1, const ProjRep& p1_lower,
                                    GroupPtr g1, GroupPtr h1, GroupPtr g2);

// Central extension of G by the cyclic value group of a factor set.
class CentralExtension {
 public:
  struct Elem {
    int g;  // element index in the base group
    int z;  // exponent in the cyclic value group
    friend bool operator==(const Elem& a, const Elem& b) {
      return a.g == b.g && a.z == b.z;
    }
  };

  CentralExtension(GroupPtr g, FactorSet alpha);

  const GroupPtr& base() const { return g_; }
  int value_order() const { return zorder_; }
  int64_t order() const { return g_->order() * zorder_; }

  Elem mul(const Elem& a, const Elem& b) const;
  Elem identity() const { return {g_->identity_index(), 0}; }
  Elem rep(int g_index) const { return {g_index, 0}; }
  int eps(const Elem& e) const { return e.g; }

  // the linear lift D(g, z) = zeta^z P(g) of a projective representation
  // with this factor set
  Mat lift(const ProjRep& p, const Elem& e) const;

  // exhaustive checks: associativity via the cocycle, centrality of the
  // kernel of eps, multiplicativity of the lift, and faithfulness of the
  // value-group constituent of the lifted character.
  void verify(const ProjRep& p) const;

 private:
  int alpha_exponent(int c1, int c2) const;  // value as a power of zeta_zorder

  GroupPtr g_;
  FactorSet alpha_;
  int zorder_ = 1;
};

// Sum of P over a conjugation-closed subset: the scalar of the resulting
// scalar matrix (must be an algebraic integer) and its reduction.  The
// empty set gives zero.
std::pair<Cyclotomic, FqScalar> class_sum_scalar(const ProjRep& p,
                                                 const std::vector<Perm>& subset,
                                                 const ReductionContext& ctx);

}  // namespace ctl
