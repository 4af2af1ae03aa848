#pragma once

#include <optional>
#include <vector>

#include "ctl/char_table.hpp"
#include "ctl/fq.hpp"

namespace ctl {

// Central character of an irreducible: lambda(C^+) = (|C| chi(g) / chi(1))^*
// per conjugacy class, reduced into the context field.
std::vector<FqScalar> central_character(const Character& chi,
                                        const ReductionContext& ctx);

// Checks lambda(C_i)lambda(C_j) == sum_k a_ijk lambda(C_k) for all pairs.
bool is_multiplicative(const PermGroup& g, const std::vector<FqScalar>& lambda,
                       const ReductionContext& ctx);

struct Block {
  GroupPtr group;
  int p = 0;
  int id = 0;
  std::vector<int> members;       // irreducible indices, ascending
  std::vector<FqScalar> lambda;   // shared central character, one per class
  int defect = 0;
  GroupPtr defect_group;          // one representative
};

// The p-blocks of a group under a fixed reduction context.  The context
// exponent must be a multiple of the group exponent; a parent group's
// context is reused for its subgroups so that all reductions land in one
// field.
class BlockSet {
 public:
  static std::shared_ptr<const BlockSet> of(GroupPtr g, int p,
                                            const ReductionContext& ctx);

  const GroupPtr& group() const { return g_; }
  int p() const { return p_; }
  const ReductionContext& context() const { return ctx_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const Block& block(int i) const { return blocks_[i]; }
  int block_of_irr(int irr_index) const { return irr_to_block_[irr_index]; }
  const Block& block_of(const Character& chi) const;
  int principal_id() const;
  // Index of the block with this lambda table, or -1.
  int find_by_lambda(const std::vector<FqScalar>& lambda) const;

 private:
  GroupPtr g_;
  int p_ = 0;
  ReductionContext ctx_;
  std::vector<Block> blocks_;
  std::vector<int> irr_to_block_;
};

// lambda_b evaluated on the sum over a subset of the ambient group's
// elements that happens to lie in b's group and be closed under its
// conjugation; the empty set gives 0.
FqScalar lambda_on_subset(const Block& b, const ReductionContext& ctx,
                          const std::vector<Perm>& subset);

// Induced block b^G via the transfer of central characters:
// lambda(Cl_G(x)^+) := lambda_b((Cl_G(x) cap H)^+).  Defined exactly when
// that map is multiplicative for G's structure constants; returns the id of
// the matching block of G, or nullopt when undefined.
std::optional<int> induce_block(const Block& b, GroupPtr g,
                                const ReductionContext& ctx);

// Whether B (a block of g) covers b (a block of a normal subgroup):
// some chi in B restricts with a constituent in b.
bool covers(const Block& big, const Block& small);

// Defect group computation from a defect class: the first class (in class
// order) with nonvanishing lambda and minimal centralizer p-valuation; the
// returned subgroup is a Sylow p-subgroup of the centralizer of its
// representative.
GroupPtr compute_defect_group(GroupPtr g, const Block& b,
                              const ReductionContext& ctx);

// Ramification subgroup of b (a block of n normal in g): generated by n and
// every x whose <n,x>-class sum has nonvanishing reduced scalar for some
// block of <n,x> covering b.
GroupPtr dade_ramification(GroupPtr g, GroupPtr n, const Block& b,
                           const ReductionContext& ctx);

// Searches xi in Lin(G/K) such that theta' = xi * theta_tilde satisfies
// bl(Res_J theta') == bl(Res_{J cap H} phi_tilde)^J for every N <= J <= G.
// Preconditions: K/N and G/K abelian, both restrictions irreducible, the
// defect-group centralizer inside H, and the middle-layer blocks matched;
// violations raise precondition_error with the failing item named.
std::optional<Character> find_block_compatible_extension(
    GroupPtr g, GroupPtr k, GroupPtr n, GroupPtr h, const Character& theta_tilde,
    const Character& phi_tilde, const ReductionContext& ctx);

}  // namespace ctl
