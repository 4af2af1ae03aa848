#include "ctl/block.hpp"

#include <algorithm>
#include <map>

namespace ctl {

std::vector<FqScalar> central_character(const Character& chi,
                                        const ReductionContext& ctx) {
  if (!chi.is_irreducible())
    throw precondition_error("central character requires an irreducible");
  const GroupPtr& g = chi.group();
  const auto& cls = g->classes();
  const int64_t deg = chi.degree();
  std::vector<FqScalar> lambda;
  lambda.reserve(cls.size());
  for (size_t c = 0; c < cls.size(); ++c) {
    Cyclotomic v = chi.value_on_class(static_cast<int>(c)) *
                   Cyclotomic(Rational(static_cast<int64_t>(cls[c].members.size())));
    // the quotient is an algebraic integer; division is exact in the power basis
    Cyclotomic q = v.divide_exact(deg);
    if (!q.is_integral())
      throw internal_error("central character value is not integral");
    lambda.push_back(ctx.star(q));
  }
  return lambda;
}

bool is_multiplicative(const PermGroup& g, const std::vector<FqScalar>& lambda,
                       const ReductionContext& ctx) {
  const auto& sc = g.structure_constants();
  const int k = static_cast<int>(lambda.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      FqScalar rhs = ctx.field()->zero();
      for (int t = 0; t < k; ++t) {
        if (sc[i][j][t] == 0) continue;
        rhs = rhs + ctx.field()->from_integer(sc[i][j][t]) * lambda[t];
      }
      if (!(lambda[i] * lambda[j] == rhs)) return false;
    }
  return true;
}

std::shared_ptr<const BlockSet> BlockSet::of(GroupPtr g, int p,
                                             const ReductionContext& ctx) {
  if (ctx.p() != p || ctx.exponent() % g->exponent() != 0)
    throw precondition_error("reduction context does not match the group/prime");
  auto key = std::make_pair(p, ctx.exponent());
  auto it = g->block_cache.find(key);
  if (it != g->block_cache.end()) return it->second;

  auto table = CharacterTable::of(g);
  auto bs = std::shared_ptr<BlockSet>(new BlockSet());
  bs->g_ = g;
  bs->p_ = p;
  bs->ctx_ = ctx;
  bs->irr_to_block_.assign(table->size(), -1);

  std::vector<std::vector<FqScalar>> lambdas;
  for (int i = 0; i < table->size(); ++i)
    lambdas.push_back(central_character(table->irr(i), ctx));

  for (int i = 0; i < table->size(); ++i) {
    if (bs->irr_to_block_[i] >= 0) continue;
    Block blk;
    blk.group = g;
    blk.p = p;
    blk.id = static_cast<int>(bs->blocks_.size());
    blk.lambda = lambdas[i];
    for (int j = i; j < table->size(); ++j) {
      if (bs->irr_to_block_[j] >= 0) continue;
      bool same = true;
      for (size_t c = 0; c < blk.lambda.size() && same; ++c)
        same = lambdas[j][c] == blk.lambda[c];
      if (same) {
        blk.members.push_back(j);
        bs->irr_to_block_[j] = blk.id;
      }
    }
    // defect from degrees: p^(nu(|G|) - d) = min over members of chi(1)_p
    int64_t min_p_part = p_part(g->order(), p);
    for (int mi : blk.members)
      min_p_part = std::min(min_p_part, p_part(table->irr(mi).degree(), p));
    int nu_g = 0;
    for (int64_t q = p_part(g->order(), p); q > 1; q /= p) ++nu_g;
    int nu_min = 0;
    for (int64_t q = min_p_part; q > 1; q /= p) ++nu_min;
    blk.defect = nu_g - nu_min;
    bs->blocks_.push_back(std::move(blk));
  }
  for (auto& blk : bs->blocks_)
    blk.defect_group = compute_defect_group(g, blk, ctx);
  g->block_cache.emplace(key, bs);
  return bs;
}

const Block& BlockSet::block_of(const Character& chi) const {
  auto table = CharacterTable::of(g_);
  return blocks_[irr_to_block_[table->index_of(chi)]];
}

int BlockSet::principal_id() const {
  auto table = CharacterTable::of(g_);
  return irr_to_block_[table->index_of(trivial_character(g_))];
}

int BlockSet::find_by_lambda(const std::vector<FqScalar>& lambda) const {
  for (const auto& b : blocks_) {
    bool same = true;
    for (size_t c = 0; c < lambda.size() && same; ++c)
      same = b.lambda[c] == lambda[c];
    if (same) return b.id;
  }
  return -1;
}

FqScalar lambda_on_subset(const Block& b, const ReductionContext& ctx,
                          const std::vector<Perm>& subset) {
  FqScalar acc = ctx.field()->zero();
  if (subset.empty()) return acc;
  const GroupPtr& h = b.group;
  std::map<int, int> class_count;
  for (const auto& x : subset) ++class_count[h->class_of(h->index_of(x))];
  const auto& cls = h->classes();
  for (auto [c, count] : class_count) {
    if (count != static_cast<int>(cls[c].members.size()))
      throw precondition_error("subset is not closed under conjugation");
    acc = acc + b.lambda[c];
  }
  return acc;
}

std::optional<int> induce_block(const Block& b, GroupPtr g,
                                const ReductionContext& ctx) {
  const GroupPtr& h = b.group;
  if (!g->contains_subgroup(*h))
    throw precondition_error("block induction needs a subgroup");
  auto gblocks = BlockSet::of(g, b.p, ctx);
  const auto& cls = g->classes();
  std::vector<FqScalar> candidate;
  candidate.reserve(cls.size());
  for (const auto& c : cls) {
    std::vector<Perm> inter;
    for (int m : c.members) {
      const Perm& x = g->element(m);
      if (h->contains(x)) inter.push_back(x);
    }
    candidate.push_back(lambda_on_subset(b, ctx, inter));
  }
  if (!is_multiplicative(*g, candidate, ctx)) return std::nullopt;
  int id = gblocks->find_by_lambda(candidate);
  if (id < 0)
    throw internal_error("multiplicative induced map does not match a block");
  return id;
}

bool covers(const Block& big, const Block& small) {
  if (big.p != small.p)
    throw precondition_error("blocks at different primes cannot be compared");
  const GroupPtr& g = big.group;
  const GroupPtr& n = small.group;
  if (!g->contains_subgroup(*n) || !is_normal(*g, *n))
    throw precondition_error("covering requires a normal subgroup");
  auto tg = CharacterTable::of(g);
  auto tn = CharacterTable::of(n);
  for (int i : big.members) {
    Character res = restrict_to(tg->irr(i), n);
    for (int j : small.members)
      if (!res.inner(tn->irr(j)).is_zero()) return true;
  }
  return false;
}

GroupPtr compute_defect_group(GroupPtr g, const Block& b,
                              const ReductionContext& ctx) {
  (void)ctx;
  const auto& cls = g->classes();
  auto nu = [&](int64_t n) {
    int v = 0;
    while (n % b.p == 0) {
      n /= b.p;
      ++v;
    }
    return v;
  };
  int best = -1;
  int best_defect = 0;
  for (size_t c = 0; c < cls.size(); ++c) {
    if (b.lambda[c].is_zero()) continue;
    int class_defect = nu(g->order() / cls[c].members.size());
    if (best < 0 || class_defect < best_defect) {
      best = static_cast<int>(c);
      best_defect = class_defect;
    }
  }
  if (best < 0) throw internal_error("block has no nonvanishing class");
  if (best_defect != b.defect)
    throw internal_error("defect-class valuation does not match the degree defect");
  auto cent = centralizer_of_element(*g, g->element(cls[best].rep));
  auto d = sylow_subgroup(*cent, b.p);
  int64_t expected = 1;
  for (int i = 0; i < b.defect; ++i) expected *= b.p;
  if (d->order() != expected) throw internal_error("defect group order mismatch");
  return d;
}

GroupPtr dade_ramification(GroupPtr g, GroupPtr n, const Block& b,
                           const ReductionContext& ctx) {
  if (!g->contains_subgroup(*n) || !is_normal(*g, *n))
    throw precondition_error("ramification subgroup needs a normal subgroup");
  if (b.group != n)
    throw precondition_error("block does not belong to the subgroup");
  std::vector<Perm> gens = n->generators();
  for (const auto& x : g->elements()) {
    if (n->contains(x)) continue;
    std::vector<Perm> jg = n->generators();
    jg.push_back(x);
    auto j = generated_subgroup(*g, jg);
    auto jblocks = BlockSet::of(j, b.p, ctx);
    // the <n,x>-class of x
    std::vector<Perm> cl;
    for (const auto& y : j->elements()) cl.push_back(x.conjugated_by(y));
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    bool qualifies = false;
    for (int bi = 0; bi < jblocks->size() && !qualifies; ++bi) {
      const Block& cover = jblocks->block(bi);
      if (!covers(cover, b)) continue;
      if (!lambda_on_subset(cover, ctx, cl).is_zero()) qualifies = true;
    }
    if (qualifies) gens.push_back(x);
  }
  return generated_subgroup(*g, gens);
}

std::optional<Character> find_block_compatible_extension(
    GroupPtr g, GroupPtr k, GroupPtr n, GroupPtr h, const Character& theta_tilde,
    const Character& phi_tilde, const ReductionContext& ctx) {
  const int p = ctx.p();
  if (!g->contains_subgroup(*k) || !is_normal(*g, *k))
    throw precondition_error("middle subgroup is not normal");
  if (!k->contains_subgroup(*n) || !is_normal(*g, *n))
    throw precondition_error("bottom subgroup is not normal");
  auto m = intersect(*h, *n);
  Character theta = restrict_to(theta_tilde, n);
  Character phi = restrict_to(phi_tilde, m);
  if (!theta.is_irreducible())
    throw precondition_error("restriction of the upper character is reducible");
  if (!phi.is_irreducible())
    throw precondition_error("restriction of the lower character is reducible");
  auto is_abelian = [](const PermGroup& x) {
    for (const auto& a : x.generators())
      for (const auto& b : x.generators())
        if (!(a * b == b * a)) return false;
    return true;
  };
  if (!is_abelian(*quotient(g, k).group))
    throw precondition_error("upper quotient is not abelian");
  if (!is_abelian(*quotient(k, n).group))
    throw precondition_error("middle quotient is not abelian");
  auto mblocks = BlockSet::of(m, p, ctx);
  const Block& bl_phi = mblocks->block_of(phi);
  auto cgd = centralizer(*g, *bl_phi.defect_group);
  if (!h->contains_subgroup(*cgd))
    throw precondition_error(
        "centralizer of the defect group is not inside the lower group");
  {
    auto kblocks = BlockSet::of(k, p, ctx);
    auto hk = intersect(*h, *k);
    auto hkblocks = BlockSet::of(hk, p, ctx);
    const Block& lower = hkblocks->block_of(restrict_to(phi_tilde, hk));
    auto ind = induce_block(lower, k, ctx);
    if (!ind || *ind != kblocks->block_of(restrict_to(theta_tilde, k)).id)
      throw precondition_error("middle-layer block induction mismatch");
  }

  auto qk = quotient(g, k);
  auto intermediates = subgroups_between(g, n);
  for (int li : lin_set(qk.group)) {
    Character xi = inflate(CharacterTable::of(qk.group)->irr(li), qk.projection);
    Character cand = xi * theta_tilde;
    bool ok = true;
    for (const auto& j : intermediates) {
      auto jblocks = BlockSet::of(j, p, ctx);
      auto jh = intersect(*j, *h);
      auto jhblocks = BlockSet::of(jh, p, ctx);
      const Block& lower = jhblocks->block_of(restrict_to(phi_tilde, jh));
      auto ind = induce_block(lower, j, ctx);
      if (!ind || *ind != jblocks->block_of(restrict_to(cand, j)).id) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  return std::nullopt;
}

}  // namespace ctl
