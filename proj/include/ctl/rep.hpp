#pragma once

#include "ctl/char_table.hpp"
#include "ctl/matrix.hpp"

namespace ctl {

// Exact matrix representation with one matrix per group element.
class MatrixRep {
 public:
  MatrixRep() = default;
  MatrixRep(GroupPtr g, std::vector<Mat> per_element);

  // Deterministic representation affording an irreducible character: the
  // image of the central idempotent on a monomial module induced from a
  // multiplicity-one linear character of a cyclic subgroup.  Degree is
  // capped at 12.
  static MatrixRep affording(const Character& chi);

  const GroupPtr& group() const { return g_; }
  int rep_degree() const { return mats_.empty() ? 0 : mats_[0].rows(); }
  const Mat& at_index(int elem_idx) const { return mats_[elem_idx]; }
  const Mat& at(const Perm& p) const { return mats_[g_->index_of(p)]; }

  Character character() const;  // traces
  // M(g)M(h) == M(gh) over all pairs.
  void verify_multiplicative() const;
  // restriction to a subgroup
  MatrixRep restricted(GroupPtr h) const;

 private:
  GroupPtr g_;
  std::vector<Mat> mats_;
};

// One-dimensional space of intertwiners S with b(x) S = S a(x) for all x;
// returns a nonzero S (first nonzero entry normalized to 1); throws if the
// space is not one-dimensional.
Mat schur_intertwiner(const MatrixRep& a, const MatrixRep& b);

// Same for explicit generator images: finds S with bmats[i] S = S amats[i].
Mat schur_intertwiner(const std::vector<Mat>& amats, const std::vector<Mat>& bmats);

}  // namespace ctl
