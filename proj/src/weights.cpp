#include "ctl/weights.hpp"

#include <algorithm>
#include <set>

namespace ctl {

Character Weight::phi_on_normalizer() const {
  return inflate(phi, quot.projection);
}

void Weight::validate() const {
  if (p_part(r->order(), p) != r->order())
    throw precondition_error("weight radical is not a p-subgroup");
  if (!(phi.group() == quot.group) && !subgroups_equal(*phi.group(), *quot.group))
    throw precondition_error("weight character is not on the local quotient");
  // defect zero on the quotient
  if (p_part(phi.degree(), p) != p_part(quot.group->order(), p))
    throw precondition_error("weight character is not of defect zero");
  if (!phi.is_irreducible())
    throw precondition_error("weight character is not irreducible");
}

Weight conjugate_weight(const Weight& w, const Perm& x) {
  Weight out;
  out.g = w.g;
  out.p = w.p;
  out.r = conjugate_subgroup(*w.g, *w.r, x);
  out.normalizer = normalizer(*w.g, *out.r);
  out.quot = quotient(out.normalizer, out.r);
  std::vector<Cyclotomic> vals(out.quot.group->num_classes());
  std::vector<char> have(out.quot.group->num_classes(), 0);
  for (const auto& z : out.normalizer->elements()) {
    int c = out.quot.group->class_of(
        out.quot.group->index_of(out.quot.projection.apply(z)));
    if (have[c]) continue;
    have[c] = 1;
    vals[c] = w.phi.value_at(w.quot.projection.apply(x * z * x.inverse()));
  }
  out.phi = Character(out.quot.group, std::move(vals));
  return out;
}

bool weights_equal(const Weight& a, const Weight& b) {
  if (!subgroups_equal(*a.r, *b.r)) return false;
  for (const auto& z : a.normalizer->elements()) {
    Cyclotomic va = a.phi.value_at(a.quot.projection.apply(z));
    Cyclotomic vb = b.phi.value_at(b.quot.projection.apply(z));
    if (!(va == vb)) return false;
  }
  return true;
}

bool weights_conjugate(const PermGroup& amb, const Weight& a, const Weight& b) {
  if (a.r->order() != b.r->order()) return false;
  for (const auto& x : amb.elements()) {
    if (!subgroups_equal(*conjugate_subgroup(amb, *a.r, x), *b.r)) continue;
    if (weights_equal(conjugate_weight(a, x), b)) return true;
  }
  return false;
}

int weight_block(const Weight& w, const ReductionContext& ctx) {
  auto nblocks = BlockSet::of(w.normalizer, w.p, ctx);
  const Block& local = nblocks->block_of(w.phi_on_normalizer());
  auto ind = induce_block(local, w.g, ctx);
  if (!ind)
    throw internal_error("weight block induction came out undefined");
  return *ind;
}

std::vector<Weight> enumerate_weights(GroupPtr g, int p) {
  std::vector<Weight> out;
  for (const auto& r : p_subgroup_classes(*g, p)) {
    Weight proto;
    proto.g = g;
    proto.p = p;
    proto.r = r;
    proto.normalizer = normalizer(*g, *r);
    proto.quot = quotient(proto.normalizer, r);
    auto table = CharacterTable::of(proto.quot.group);
    for (int i : dz_set(proto.quot.group, p)) {
      Weight w = proto;
      w.phi = table->irr(i);
      w.validate();
      bool fused = false;
      for (const auto& seen : out)
        if (subgroups_equal(*seen.r, *w.r) && weights_conjugate(*g, seen, w))
          fused = true;
      if (!fused) out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<Weight> enumerate_weights_of_block(GroupPtr g, int p, int block_id,
                                               const ReductionContext& ctx) {
  std::vector<Weight> out;
  for (auto& w : enumerate_weights(g, p))
    if (weight_block(w, ctx) == block_id) out.push_back(std::move(w));
  return out;
}

std::vector<Weight> enumerate_weights_over_central(GroupPtr g, int p,
                                                   const Character& nu) {
  if (nu.degree() != 1 || nu.linear_order() % p == 0)
    throw precondition_error("central filter needs a p'-linear character");
  std::vector<Weight> out;
  for (auto& w : enumerate_weights(g, p)) {
    // phi must lie over nu on the center
    Character infl = w.phi_on_normalizer();
    Character res = restrict_to(infl, nu.group());
    Character nu_scaled = nu;
    bool over = true;
    for (int c = 0; c < nu.group()->num_classes(); ++c) {
      Cyclotomic expect = nu.value_on_class(c) * Cyclotomic(Rational(infl.degree()));
      if (!(res.value_on_class(c) == expect)) over = false;
    }
    if (over) out.push_back(std::move(w));
  }
  return out;
}

int p_regular_class_count(const PermGroup& g, int p) {
  int count = 0;
  for (const auto& c : g.classes())
    if (c.element_order % p != 0) ++count;
  return count;
}

Weight lin_action(const Character& mu, const Weight& w) {
  if (mu.degree() != 1 || mu.linear_order() % w.p == 0)
    throw precondition_error("weight action needs a p'-linear character");
  Character on_norm = restrict_to(mu, w.normalizer);
  Character deflated = deflate(on_norm, w.quot.projection);
  Weight out = w;
  out.phi = w.phi * deflated;
  out.validate();
  return out;
}

std::vector<Weight> covering_weights_pprime(GroupPtr gtilde, GroupPtr g,
                                            const Weight& w,
                                            const ReductionContext& ctx) {
  (void)ctx;
  if (!gtilde->contains_subgroup(*g) || !is_normal(*gtilde, *g))
    throw precondition_error("covering needs a normal subgroup");
  if ((gtilde->order() / g->order()) % w.p == 0)
    throw precondition_error(
        "index divisible by p: the general correspondence across a p-layer is "
        "not available here");
  auto big_norm = normalizer(*gtilde, *w.r);
  auto qt = quotient(big_norm, w.r);
  // image of N_G(R) inside the quotient, and w.phi transferred onto it
  std::vector<Perm> img;
  for (const auto& z : w.normalizer->elements())
    img.push_back(qt.projection.apply(z));
  auto s = group_from_elements(qt.group->degree(), std::move(img));
  std::vector<Cyclotomic> vals(s->num_classes());
  std::vector<char> have(s->num_classes(), 0);
  for (const auto& z : w.normalizer->elements()) {
    int c = s->class_of(s->index_of(qt.projection.apply(z)));
    if (have[c]) continue;
    have[c] = 1;
    vals[c] = w.phi.value_at(w.quot.projection.apply(z));
  }
  Character phi_s(s, std::move(vals));
  auto table = CharacterTable::of(qt.group);
  std::vector<Weight> out;
  for (int i : dz_set(qt.group, w.p)) {
    if (restrict_to(table->irr(i), s).inner(phi_s).is_zero()) continue;
    Weight cover;
    cover.g = gtilde;
    cover.p = w.p;
    cover.r = w.r;
    cover.normalizer = big_norm;
    cover.quot = qt;
    cover.phi = table->irr(i);
    cover.validate();
    out.push_back(std::move(cover));
  }
  return out;
}

namespace {

// character of a subgroup image under a projection, moved from another
// quotient realization of the same group
Character transfer_character(const Character& phi, const QuotientData& from,
                             const GroupPtr& src, const GroupHom& to,
                             const GroupPtr& target) {
  std::vector<Cyclotomic> vals(target->num_classes());
  std::vector<char> have(target->num_classes(), 0);
  for (const auto& z : src->elements()) {
    int c = target->class_of(target->index_of(to.apply(z)));
    if (have[c]) continue;
    have[c] = 1;
    vals[c] = phi.value_at(from.projection.apply(z));
  }
  for (char h : have)
    if (!h) throw internal_error("transfer did not reach every class");
  return Character(target, std::move(vals));
}

}  // namespace

std::optional<LocalCorrespondent> local_correspondent(GroupPtr gtilde, GroupPtr g,
                                                      const Weight& wtilde,
                                                      const Weight& w,
                                                      const ReductionContext& ctx) {
  if (!gtilde->contains_subgroup(*g) || !is_normal(*gtilde, *g))
    throw precondition_error("covering needs a normal subgroup");
  const GroupPtr& r = w.r;
  const GroupPtr& rt = wtilde.r;
  // R = Rtilde cap G and Rtilde normalizes R and fixes (R, phi)
  if (!subgroups_equal(*intersect(*rt, *g), *r)) return std::nullopt;
  for (const auto& x : rt->generators())
    if (!subgroups_equal(*conjugate_subgroup(*gtilde, *r, x), *r))
      return std::nullopt;
  for (const auto& x : rt->elements())
    if (!weights_equal(conjugate_weight(w, x), w)) return std::nullopt;
  // M = N_G(R) Rtilde, a p-power extension of N_G(R)
  auto m = join_subgroups(*gtilde, *w.normalizer, *rt);
  auto qm = quotient(m, r);
  std::vector<Perm> nimg, dimg;
  for (const auto& z : w.normalizer->elements()) nimg.push_back(qm.projection.apply(z));
  for (const auto& z : rt->elements()) dimg.push_back(qm.projection.apply(z));
  auto nbar = group_from_elements(qm.group->degree(), std::move(nimg));
  auto dbar = group_from_elements(qm.group->degree(), std::move(dimg));
  Character phi_bar =
      transfer_character(w.phi, w.quot, w.normalizer, qm.projection, nbar);
  // unique block of M/R covering bl(phi); its defect group must be D-bar
  auto nbar_blocks = BlockSet::of(nbar, w.p, ctx);
  const Block& b_phi = nbar_blocks->block_of(phi_bar);
  auto m_blocks = BlockSet::of(qm.group, w.p, ctx);
  int cover_id = -1;
  for (int i = 0; i < m_blocks->size(); ++i) {
    if (covers(m_blocks->block(i), b_phi)) {
      if (cover_id >= 0)
        throw internal_error("covering block across the p-layer is not unique");
      cover_id = i;
    }
  }
  if (cover_id < 0) throw internal_error("no covering block across the p-layer");
  if (!subgroups_conjugate(*qm.group, *m_blocks->block(cover_id).defect_group,
                           *dbar))
    return std::nullopt;
  // L = C-part of N_{M/R}(D); the defect-zero block below pins a unique
  // invariant character of a unique local block
  auto nmd = normalizer(*qm.group, *dbar);
  auto l = intersect(*nmd, *nbar);
  auto nmd_blocks = BlockSet::of(nmd, w.p, ctx);
  int brauer_id = -1;
  for (int i = 0; i < nmd_blocks->size(); ++i) {
    auto ind = induce_block(nmd_blocks->block(i), qm.group, ctx);
    if (!ind || *ind != cover_id) continue;
    if (!subgroups_conjugate(*nmd, *nmd_blocks->block(i).defect_group, *dbar))
      continue;
    if (brauer_id >= 0)
      throw internal_error("local correspondent block is not unique");
    brauer_id = i;
  }
  if (brauer_id < 0) throw internal_error("no local correspondent block");
  auto l_blocks = BlockSet::of(l, w.p, ctx);
  int covered_id = -1;
  for (int i = 0; i < l_blocks->size(); ++i) {
    if (covers(nmd_blocks->block(brauer_id), l_blocks->block(i))) {
      if (covered_id >= 0)
        throw internal_error("covered local block is not unique");
      covered_id = i;
    }
  }
  if (covered_id < 0) throw internal_error("no covered local block");
  auto tl = CharacterTable::of(l);
  std::vector<int> invariant;
  for (int i : l_blocks->block(covered_id).members) {
    bool inv = true;
    for (const auto& x : dbar->generators())
      if (!(tl->irr(i).conjugate_by(x) == tl->irr(i))) inv = false;
    if (inv) invariant.push_back(i);
  }
  if (invariant.size() != 1)
    throw internal_error("local correspondent character is not pinned");
  Character pi_phi = tl->irr(invariant[0]);
  // pi-bar on S = image of N_M(Rtilde) in N_{gtilde}(Rtilde)/Rtilde:
  // value at the image of z is pi_phi at the L-part of the qm-image of z
  auto nm_rt = normalizer(*m, *rt);
  const QuotientData& qt = wtilde.quot;
  std::vector<Perm> simg;
  for (const auto& z : nm_rt->elements())
    simg.push_back(qt.projection.apply(z));
  auto s = group_from_elements(qt.group->degree(), std::move(simg));
  std::vector<Cyclotomic> vals(s->num_classes());
  std::vector<char> have(s->num_classes(), 0);
  for (const auto& z : nm_rt->elements()) {
    int c = s->class_of(s->index_of(qt.projection.apply(z)));
    if (have[c]) continue;
    Perm zq = qm.projection.apply(z);
    for (const auto& d : dbar->elements()) {
      Perm cc = d.inverse() * zq;
      if (l->contains(cc)) {
        vals[c] = pi_phi.value_at(cc);
        have[c] = 1;
        break;
      }
    }
  }
  for (char h : have)
    if (!h) throw internal_error("correspondent character transfer incomplete");
  Character pi_bar(s, std::move(vals));
  if (!pi_bar.is_irreducible())
    throw internal_error("correspondent character is not irreducible");
  return LocalCorrespondent{s, pi_bar};
}

bool weight_covers(GroupPtr gtilde, GroupPtr g, const Weight& wtilde,
                   const Weight& w, const ReductionContext& ctx) {
  auto corr = local_correspondent(gtilde, g, wtilde, w, ctx);
  if (!corr) return false;
  Character res = restrict_to(wtilde.phi, corr->s);
  return !res.inner(corr->pi_bar).is_zero();
}

std::vector<Weight> covered_weight_orbits(GroupPtr gtilde, GroupPtr g,
                                          const Weight& wtilde,
                                          const std::vector<Weight>& g_orbit_reps,
                                          const ReductionContext& ctx) {
  std::vector<Weight> out;
  for (const auto& w : g_orbit_reps) {
    bool covered = false;
    for (const auto& x : gtilde->elements()) {
      Weight moved = conjugate_weight(w, x);
      // cheap filter: the moved radical must be Rtilde cap G
      if (!subgroups_equal(*intersect(*wtilde.r, *g), *moved.r)) continue;
      if (weight_covers(gtilde, g, wtilde, moved, ctx)) {
        covered = true;
        break;
      }
    }
    if (covered) out.push_back(w);
  }
  return out;
}

BijectionReport verify_bijection(GroupPtr g, const std::vector<Character>& domain,
                                 const std::vector<Weight>& codomain,
                                 const std::vector<int>& omega,
                                 const ReductionContext& ctx,
                                 const std::vector<Character>& lin_actors,
                                 const std::vector<Perm>& conj_actors) {
  BijectionReport report;
  auto violation = [&](bool* flag, const std::string& msg) {
    *flag = false;
    report.violations.push_back(msg);
  };
  if (omega.size() != domain.size())
    violation(&report.bijective, "map size does not match the domain");
  std::set<int> hit;
  for (int v : omega) {
    if (v < 0 || v >= static_cast<int>(codomain.size()) || !hit.insert(v).second)
      violation(&report.bijective, "map is not injective into the codomain");
  }
  if (hit.size() != codomain.size())
    violation(&report.bijective, "map is not onto the codomain");
  // block preservation
  auto gblocks = BlockSet::of(g, ctx.p(), ctx);
  for (size_t i = 0; i < domain.size() && i < omega.size(); ++i) {
    int chi_block = gblocks->block_of(domain[i]).id;
    int w_block = weight_block(codomain[omega[i]], ctx);
    if (chi_block != w_block)
      violation(&report.blockwise,
                "block mismatch at domain index " + std::to_string(i));
  }
  auto find_domain = [&](const Character& chi) {
    for (size_t i = 0; i < domain.size(); ++i)
      if (domain[i] == chi) return static_cast<int>(i);
    return -1;
  };
  auto find_weight_orbit = [&](const Weight& w) {
    for (size_t i = 0; i < codomain.size(); ++i)
      if (weights_conjugate(*g, codomain[i], w)) return static_cast<int>(i);
    return -1;
  };
  for (const auto& mu : lin_actors) {
    for (size_t i = 0; i < domain.size(); ++i) {
      int j = find_domain(domain[i] * restrict_to(mu, g));
      if (j < 0) {
        violation(&report.equivariant, "domain is not stable under the action");
        continue;
      }
      Weight expect = lin_action(restrict_to(mu, g), codomain[omega[i]]);
      if (find_weight_orbit(expect) != omega[j])
        violation(&report.equivariant,
                  "linear action does not intertwine at index " + std::to_string(i));
    }
  }
  for (const auto& x : conj_actors) {
    for (size_t i = 0; i < domain.size(); ++i) {
      int j = find_domain(domain[i].conjugate_by(x));
      if (j < 0) {
        violation(&report.equivariant, "domain is not conjugation-stable");
        continue;
      }
      Weight expect = conjugate_weight(codomain[omega[i]], x);
      if (find_weight_orbit(expect) != omega[j])
        violation(&report.equivariant,
                  "conjugation does not intertwine at index " + std::to_string(i));
    }
  }
  return report;
}

LiftOutput lift_bijection_pprime(const LiftInput& in) {
  const GroupPtr& a = in.a;
  const GroupPtr& gt = in.gtilde;
  const GroupPtr& g = in.g;
  if (!a->contains_subgroup(*gt) || !is_normal(*a, *gt) ||
      !a->contains_subgroup(*g) || !is_normal(*a, *g) ||
      !gt->contains_subgroup(*g))
    throw precondition_error("lift needs G <= Gtilde both normal in the ambient");
  {
    auto q = quotient(gt, g);
    bool abelian = true;
    for (const auto& x : q.group->generators())
      for (const auto& y : q.group->generators())
        if (!(x * y == y * x)) abelian = false;
    if (!abelian || q.group->order() % in.ctx.p() == 0)
      throw precondition_error("Gtilde/G must be an abelian p'-group");
  }
  // input verification
  {
    std::vector<Perm> actors(a->generators());
    BijectionReport base = verify_bijection(g, in.domain, in.weights, in.omega,
                                            in.ctx, {}, actors);
    if (!base.all_ok())
      throw precondition_error("input bijection fails verification: " +
                               (base.violations.empty() ? std::string("?")
                                                        : base.violations[0]));
  }
  for (size_t i = 0; i < in.domain.size(); ++i) {
    const TriplePair& cert = in.certs.at(i);
    if (!(cert.upper.theta == in.domain[i]))
      throw precondition_error("certificate does not carry its character");
    if (!check_relation(cert, RelLevel::b).holds)
      throw precondition_error("certificate fails the relation at index " +
                               std::to_string(i));
    // chi must extend to its stabilizer in Gtilde
    std::vector<Perm> stab;
    for (const auto& x : gt->elements())
      if (in.domain[i].conjugate_by(x) == in.domain[i]) stab.push_back(x);
    auto gtchi = group_from_elements(gt->degree(), std::move(stab));
    if (extensions_of(in.domain[i], gtchi).empty())
      throw precondition_error("character does not extend to its stabilizer");
  }

  LiftOutput out;
  // domain upstairs: Irr(Gtilde | I)
  auto ttable = CharacterTable::of(gt);
  for (int i = 0; i < ttable->size(); ++i) {
    Character res = restrict_to(ttable->irr(i), g);
    bool over = false;
    for (const auto& chi : in.domain)
      if (!res.inner(chi).is_zero()) over = true;
    if (over) out.domain_tilde.push_back(ttable->irr(i));
  }

  auto weight_orbit_index = [&](const Weight& w) {
    for (size_t i = 0; i < out.weights_tilde.size(); ++i)
      if (weights_conjugate(*gt, out.weights_tilde[i], w))
        return static_cast<int>(i);
    out.weights_tilde.push_back(w);
    return static_cast<int>(out.weights_tilde.size() - 1);
  };

  for (const auto& chit : out.domain_tilde) {
    // all choices of chi below chit must give the same lifted weight
    std::optional<Weight> lifted;
    std::optional<TriplePair> cert_new;
    for (size_t i = 0; i < in.domain.size(); ++i) {
      const Character& chi = in.domain[i];
      if (restrict_to(chit, g).inner(chi).is_zero()) continue;
      const TriplePair& cert = in.certs[i];
      const Weight& w = in.weights[in.omega[i]];
      // stabilizer of chi in Gtilde
      std::vector<Perm> stab;
      for (const auto& x : gt->elements())
        if (chi.conjugate_by(x) == chi) stab.push_back(x);
      auto gtchi = group_from_elements(gt->degree(), std::move(stab));
      // Clifford correspondent of chit over chi
      Character chihat;
      {
        bool found = false;
        for (const auto& ext : extensions_of(chi, gtchi)) {
          if (induce_to(ext, gt) == chit) {
            chihat = ext;
            found = true;
            break;
          }
        }
        if (!found)
          throw internal_error("no Clifford correspondent among the extensions");
      }
      // phi-hat = sigma_{Gtilde_chi}(chihat), restricted to N_{Gtilde}(R)_phi
      Character phihat_full = sigma_apply(cert, gtchi, chihat);
      // N_{Gtilde}(R)_phi
      auto nt = normalizer(*gt, *w.r);
      std::vector<Perm> pstab;
      for (const auto& x : nt->elements())
        if (weights_equal(conjugate_weight(w, x), w)) pstab.push_back(x);
      auto ntphi = group_from_elements(gt->degree(), std::move(pstab));
      if (!gtchi->contains_subgroup(*ntphi))
        throw internal_error("weight stabilizer escapes the character stabilizer");
      Character phihat = restrict_to(phihat_full, ntphi);
      if (!phihat.is_irreducible())
        throw internal_error("lifted local character is not irreducible");
      Character phit = induce_to(phihat, nt);
      if (!phit.is_irreducible())
        throw internal_error("induced local character is not irreducible");
      // form the weight of Gtilde
      Weight wt;
      wt.g = gt;
      wt.p = in.ctx.p();
      wt.r = w.r;
      wt.normalizer = nt;
      wt.quot = quotient(nt, w.r);
      wt.phi = deflate(phit, wt.quot.projection);
      wt.validate();
      if (lifted) {
        if (!weights_conjugate(*gt, *lifted, wt))
          throw internal_error("lifted weight depends on the constituent choice");
      } else {
        lifted = wt;
      }
      // certificate upstairs (built once, from the first constituent)
      if (!cert_new) {
        // A-hat: stabilizer of chihat among elements normalizing Gtilde_chi
        std::vector<Perm> ahat_elems;
        for (const auto& x : cert.upper.g->elements()) {
          if (!subgroups_equal(*conjugate_subgroup(*a, *gtchi, x), *gtchi))
            continue;
          if (chihat.conjugate_by(x) == chihat) ahat_elems.push_back(x);
        }
        auto ahat = group_from_elements(a->degree(), std::move(ahat_elems));
        auto q = proj_complement(cert.p_upper, gtchi, chihat);
        // base affording chihat on Gtilde_chi
        std::vector<Mat> base_mats;
        for (int idx = 0; idx < gtchi->order(); ++idx)
          base_mats.push_back(Mat::kronecker(
              q[idx], cert.p_upper.at(gtchi->element(idx))));
        MatrixRep base1(gtchi, std::move(base_mats));
        ProjRep phat = projective_rep_with_base(ahat, gtchi, base1);
        // U on A-hat from the kron structure
        const int e = static_cast<int>(chihat.degree() / chi.degree());
        const int d = cert.p_upper.rep_degree();
        auto unkron = [&](const Mat& t) {
          Mat u(e, e);
          for (int rr = 0; rr < e; ++rr)
            for (int cc = 0; cc < e; ++cc) u.at(rr, cc) = t.at(rr * d, cc * d);
          if (!(t == Mat::kronecker(u, Mat::identity(d))))
            throw internal_error("lift factorization failed");
          return u;
        };
        // N-hat: elements of the certificate's H stabilizing Gtilde_chi and
        // phihat_full
        std::vector<Perm> nhat_elems;
        auto jh = intersect(*gtchi, *cert.lower.g);
        for (const auto& x : cert.lower.g->elements()) {
          if (!subgroups_equal(*conjugate_subgroup(*a, *gtchi, x), *gtchi))
            continue;
          if (!subgroups_equal(*conjugate_subgroup(*a, *jh, x), *jh)) continue;
          if (phihat_full.conjugate_by(x) == phihat_full) nhat_elems.push_back(x);
        }
        auto nhat = group_from_elements(a->degree(), std::move(nhat_elems));
        std::vector<Mat> lower_vals;
        for (int idx = 0; idx < nhat->order(); ++idx) {
          const Perm& x = nhat->element(idx);
          Mat t = phat.at(x) *
                  Mat::kronecker(Mat::identity(e), cert.p_upper.at(x)).inverse();
          lower_vals.push_back(
              Mat::kronecker(unkron(t), cert.p_lower.at(x)));
        }
        ProjRep phat_lower = proj_rep_from_values(nhat, jh, lower_vals);
        // induce both to the full stabilizers
        auto a_chit = join_subgroups(*a, *gt, *ahat);
        bool irr1 = false;
        ProjRep up_new = induce_proj(phat, a_chit, gt, &irr1);
        auto na_phit = join_subgroups(*a, *nt, *nhat);
        bool irr2 = false;
        ProjRep low_new = induce_proj(phat_lower, na_phit, nt, &irr2);
        if (!irr1 || !irr2)
          throw internal_error("lifted inductions are not irreducible");
        TriplePair uppair;
        uppair.upper = {a_chit, gt, up_new.theta()};
        uppair.lower = {na_phit, nt, low_new.theta()};
        uppair.p_upper = up_new;
        uppair.p_lower = low_new;
        uppair.ctx = in.ctx;
        if (!(up_new.theta() == chit))
          throw internal_error("lifted certificate affords the wrong character");
        cert_new = uppair;
      }
    }
    if (!lifted) throw internal_error("no constituent below a lifted character");
    out.omega_tilde.push_back(weight_orbit_index(*lifted));
    out.certs_tilde.push_back(*cert_new);
  }
  // verify the lifted bijection: blockwise, Lin(Gtilde/G)- and A-equivariant
  std::vector<Character> lin_actors;
  {
    auto q = quotient(gt, g);
    auto tq = CharacterTable::of(q.group);
    for (int i : lin_set(q.group))
      lin_actors.push_back(inflate(tq->irr(i), q.projection));
  }
  out.report = verify_bijection(gt, out.domain_tilde, out.weights_tilde,
                                out.omega_tilde, in.ctx, lin_actors,
                                a->generators());
  for (auto& cert : out.certs_tilde) {
    Verdict v = check_relation(cert, RelLevel::b);
    if (!v.holds) {
      out.report.violations.push_back("lifted certificate fails: " +
                                      v.failed_condition);
      out.report.blockwise = false;
    }
  }
  return out;
}

}  // namespace ctl
