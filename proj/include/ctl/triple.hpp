#pragma once

#include <optional>
#include <string>

#include "ctl/proj_rep.hpp"

namespace ctl {

// Character triple: N normal in G, theta in Irr(N) G-invariant.
struct CharTriple {
  GroupPtr g;
  GroupPtr n;
  Character theta;

  void validate() const;
};

enum class RelLevel { g, c, b };
std::string level_name(RelLevel l);

struct Verdict {
  bool holds = false;
  std::string failed_condition;  // empty when holds
  std::string witness;           // smallest offending object, printable

  static Verdict ok() { return {true, "", ""}; }
  static Verdict fail(std::string cond, std::string wit) {
    return {false, std::move(cond), std::move(wit)};
  }
};

// A pair of character triples with chosen projective representations and a
// shared reduction context.
struct TriplePair {
  CharTriple upper;  // (G, N, theta)
  CharTriple lower;  // (H, M, phi)
  ProjRep p_upper;
  ProjRep p_lower;
  ReductionContext ctx;

  void validate_shape() const;  // H <= G, N cap H = M, reps match triples
};

// Builds a pair from linear data: characters of G and H restricting
// irreducibly to N and M; the projective representations are the linear
// representations affording them.
TriplePair make_linear_pair(GroupPtr g, GroupPtr n, GroupPtr h, GroupPtr m,
                            const Character& theta_tilde,
                            const Character& phi_tilde,
                            const ReductionContext& ctx);

// Builds a pair from canonical projective representations of both triples,
// aligning the lower one by the rescale search at the requested level;
// throws if no alignment exists.
TriplePair make_pair_canonical(GroupPtr g, GroupPtr n, const Character& theta,
                               GroupPtr h, GroupPtr m, const Character& phi,
                               const ReductionContext& ctx, RelLevel level);

// The relation check at level g, c or b.  Level g: group conditions plus
// exact factor-set restriction equality.  Level c: additionally the scalar
// agreement on the centralizer of N.  Level b: additionally the defect-group
// centralizer condition and the class-sum scalar agreement over the
// ramification subgroup of bl(theta).
Verdict check_relation(const TriplePair& pair, RelLevel level);

// sigma_J: Char(J | theta) -> Char(J cap H | phi) induced by the pair.
Character sigma_apply(const TriplePair& pair, GroupPtr j, const Character& psi);

// For irreducible psi in Irr(J | theta): the e x e matrices Q, one per
// element of J and constant on N-cosets, with Q tensor P|_J affording psi.
std::vector<Mat> proj_complement(const ProjRep& p, GroupPtr j,
                                 const Character& psi);

// Properties of the sigma maps over all intermediate subgroups:
// restriction compatibility, multiplicativity by characters of J/N,
// H-conjugacy equivariance, bijectivity when J = N(J cap H), and
// surjectivity for abelian J/N with extendable theta.  Also records
// whether injectivity held in the surjectivity cases.
struct SigmaReport {
  bool ok = true;
  std::string detail;
  int surjective_cases = 0;
  int injective_in_surjective_cases = 0;
};
SigmaReport verify_sigma_properties(const TriplePair& pair);

// Definition-level block condition: bl(psi) == bl(sigma_J(psi))^J for every
// intermediate J and psi in Irr(J | theta) with irreducible image.
Verdict definitional_block_check(const TriplePair& pair);

// Equivalent-condition evaluation for linear pairs: the centralizer
// constituent equality together with the block equalities over the
// cyclic-over-N intermediates.
Verdict extension_criterion(GroupPtr g, GroupPtr n, GroupPtr h, GroupPtr m,
                            const Character& theta_tilde,
                            const Character& phi_tilde,
                            const ReductionContext& ctx);

// Keeps p_upper and replaces p_lower by a scalar twist making the requested
// level hold: solves the coboundary equation between the factor sets on H/M
// and then enumerates residual linear-character twists in deterministic
// order.  Returns the adjusted pair, or nullopt.
std::optional<TriplePair> rescale_search(const TriplePair& pair, RelLevel level);

// Relation normal with respect to H0 (M <= H0 normal in H): for every
// linear iota of H0/(M C_{H0}(N)) there must be a twist of p_lower on the
// iota-stabilizer restricting to iota on H0 that preserves the relation.
Verdict check_normal_wrt(const TriplePair& pair, RelLevel level, GroupPtr h0);

// Quotient descent by Z normal in G with Z <= C_G(N) and Z cap N = 1;
// kind "p" needs a central p-subgroup, "pprime" a p'-subgroup, "central"
// iterates the p-part then the p'-part of a central Z.  The output pair is
// validated at the input level.
enum class QuotientKind { p_group, pprime_group, central };
TriplePair quotient_descend(const TriplePair& pair, GroupPtr z, RelLevel level,
                            QuotientKind kind);

// Composition along a shared middle triple; for level b the defect-group
// centralizer condition for the lower block is required in G.
TriplePair compose_relations(const TriplePair& pair1, const TriplePair& pair2,
                             RelLevel level);

// Linear-system solver modulo m (m arbitrary); returns one solution of
// A x = b mod m or nullopt.
std::optional<std::vector<int64_t>> solve_linear_mod(
    const std::vector<std::vector<int64_t>>& a, const std::vector<int64_t>& b,
    int64_t m);

}  // namespace ctl
