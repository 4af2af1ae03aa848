#pragma once

#include <map>

#include "ctl/triple.hpp"

namespace ctl {

// Weight (R, phi): a p-subgroup R together with a defect-zero character of
// N_G(R)/R.  The quotient realization is carried along so characters can be
// moved between the quotient and N_G(R).
struct Weight {
  GroupPtr g;            // ambient group
  int p = 0;
  GroupPtr r;            // the p-subgroup
  GroupPtr normalizer;   // N_G(R)
  QuotientData quot;     // N_G(R) -> N_G(R)/R
  Character phi;         // character of quot.group, defect zero

  Character phi_on_normalizer() const;  // inflation to N_G(R)
  void validate() const;
};

// conjugate weight w^x = (x^{-1} R x, phi^x)
Weight conjugate_weight(const Weight& w, const Perm& x);
bool weights_equal(const Weight& a, const Weight& b);
bool weights_conjugate(const PermGroup& amb, const Weight& a, const Weight& b);

// Block of the ambient group attached to the weight; the induced block is
// always defined for weights (verified by the multiplicativity test).
int weight_block(const Weight& w, const ReductionContext& ctx);

// One weight per orbit, deterministic order (by p-subgroup class, then
// character index in the quotient table).
std::vector<Weight> enumerate_weights(GroupPtr g, int p);
// Weights attached to one block / lying over a central p'-linear character.
std::vector<Weight> enumerate_weights_of_block(GroupPtr g, int p, int block_id,
                                               const ReductionContext& ctx);
std::vector<Weight> enumerate_weights_over_central(GroupPtr g, int p,
                                                   const Character& nu);

int p_regular_class_count(const PermGroup& g, int p);

// mu.(R, phi) = (R, mu' phi) for a p'-linear character of G.
Weight lin_action(const Character& mu, const Weight& w);

// Weights of gtilde covering w, for g normal in gtilde of p'-index (the
// covering radical stays R and the correspondence is restriction).
std::vector<Weight> covering_weights_pprime(GroupPtr gtilde, GroupPtr g,
                                            const Weight& w,
                                            const ReductionContext& ctx);

// The local correspondent of w across the p-layer determined by the radical
// of wtilde: the subgroup S = image of N_{M}(Rtilde) in N_{gtilde}(Rtilde)/Rtilde
// together with the correspondent character on it.  The correspondent is
// canonical here because the block of the weight character is of defect
// zero, which pins the unique invariant character of the unique local
// block.  Returns nullopt when the structural covering conditions fail.
struct LocalCorrespondent {
  GroupPtr s;         // subgroup of wtilde's local quotient
  Character pi_bar;   // the correspondent on s
};
std::optional<LocalCorrespondent> local_correspondent(GroupPtr gtilde, GroupPtr g,
                                                      const Weight& wtilde,
                                                      const Weight& w,
                                                      const ReductionContext& ctx);

// General covering test between a weight of gtilde and one of g (g normal in
// gtilde).
bool weight_covers(GroupPtr gtilde, GroupPtr g, const Weight& wtilde,
                   const Weight& w, const ReductionContext& ctx);
// Orbit-level: every weight orbit of g covered by the orbit of wtilde.
std::vector<Weight> covered_weight_orbits(GroupPtr gtilde, GroupPtr g,
                                          const Weight& wtilde,
                                          const std::vector<Weight>& g_orbit_reps,
                                          const ReductionContext& ctx);

// ---- bijection verification ----

struct BijectionReport {
  bool bijective = true;
  bool blockwise = true;
  bool equivariant = true;
  std::vector<std::string> violations;
  bool all_ok() const { return bijective && blockwise && equivariant; }
};

// domain[i] maps to codomain[omega[i]]; block preservation via induced
// blocks; equivariance under the given p'-linear characters (acting by
// multiplication / the weight action) and conjugating elements.
BijectionReport verify_bijection(GroupPtr g, const std::vector<Character>& domain,
                                 const std::vector<Weight>& codomain,
                                 const std::vector<int>& omega,
                                 const ReductionContext& ctx,
                                 const std::vector<Character>& lin_actors,
                                 const std::vector<Perm>& conj_actors);

// ---- going-up construction for p'-index ----

struct LiftInput {
  GroupPtr a;        // ambient group (>= gtilde)
  GroupPtr gtilde;   // normal in a
  GroupPtr g;        // normal in a, g <= gtilde, gtilde/g abelian p'
  std::vector<Character> domain;   // I subset Irr(g)
  std::vector<Weight> weights;     // orbit representatives, one per domain entry
  std::vector<int> omega;          // domain -> weights
  std::vector<TriplePair> certs;   // per domain char: (A_chi, G, chi) level b
  ReductionContext ctx;
};

struct LiftOutput {
  std::vector<Character> domain_tilde;   // Irr(gtilde | I)
  std::vector<Weight> weights_tilde;
  std::vector<int> omega_tilde;
  std::vector<TriplePair> certs_tilde;
  BijectionReport report;
};

LiftOutput lift_bijection_pprime(const LiftInput& in);

// ---- criterion harness ----

struct Thm54Input {
  GroupPtr a;              // = gtilde . e (semidirect, e complement)
  GroupPtr e;              // complement subgroup of a
  GroupPtr gtilde;         // normal in a
  GroupPtr gtilde_prime;   // normal in a
  GroupPtr g;              // normal in a
  std::vector<int> btilde;            // block ids of gtilde forming B-tilde
  std::vector<Character> itilde;      // subset of Irr(btilde)
  std::vector<Weight> atilde;         // weight orbit reps of gtilde
  std::vector<int> omega_tilde;       // itilde -> atilde
  std::map<int, Character> chi0_selector;  // optional explicit selections
  std::map<int, Weight> weight_selector;
  bool derive_ivb_from_cyclic_count = false;
  ReductionContext ctx;
};

struct HypothesisFailure {
  std::string label;    // "stability", "i.a", ..., "iv.b"
  std::string witness;
};

struct Thm54Output {
  bool ok = false;
  std::vector<HypothesisFailure> failures;
  std::vector<Character> domain;        // I = Irr(G | Itilde)
  std::vector<Weight> weight_orbits;    // representatives of A / ~Gtilde'
  std::vector<int> omega;               // domain -> weight_orbits
  std::vector<TriplePair> certs;        // per transversal character
  std::vector<Verdict> cert_verdicts;   // relation + normality results
  bool has_failure(const std::string& label) const;
};

Thm54Output thm54_construct_and_verify(const Thm54Input& in);

}  // namespace ctl
