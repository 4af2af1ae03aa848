#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctl/proj_rep.hpp"

using namespace ctl;

TEST_CASE("matrix representation affording: trivial and sign of S3") {
  auto s3 = PermGroup::symmetric(3);
  auto t = CharacterTable::of(s3);
  MatrixRep triv = MatrixRep::affording(t->irr(0));
  CHECK(triv.rep_degree() == 1);
  for (int i = 0; i < s3->order(); ++i)
    CHECK(triv.at_index(i).at(0, 0) == Cyclotomic(1));
  MatrixRep sgn = MatrixRep::affording(t->irr(1));
  for (int i = 0; i < s3->order(); ++i) {
    Cyclotomic v = sgn.at_index(i).at(0, 0);
    CHECK((v == Cyclotomic(1) || v == Cyclotomic(-1)));
  }
}

TEST_CASE("matrix representation affording: exact degree-2 of S3") {
  auto s3 = PermGroup::symmetric(3);
  auto t = CharacterTable::of(s3);
  MatrixRep rep = MatrixRep::affording(t->irr(2));
  CHECK(rep.rep_degree() == 2);
  rep.verify_multiplicative();
  CHECK(rep.character() == t->irr(2));
}

TEST_CASE("matrix representations for the acceptance groups") {
  for (const char* name : {"Q8", "SL23", "A4", "D8"}) {
    auto g = PermGroup::named(name);
    auto t = CharacterTable::of(g);
    for (int i = 0; i < t->size(); ++i) {
      MatrixRep rep = MatrixRep::affording(t->irr(i));
      rep.verify_multiplicative();
      CHECK(rep.character() == t->irr(i));
    }
  }
}

TEST_CASE("projective representation of a linear-extendable triple") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  ProjRep p = projective_rep_for_triple(s3, a3, trivial_character(a3));
  p.verify_associated();
  CHECK(p.rep_degree() == 1);
  CHECK(p.factor_set().is_trivial());
}

TEST_CASE("projective representation with N = G is the linear one") {
  auto s3 = PermGroup::symmetric(3);
  auto t = CharacterTable::of(s3);
  ProjRep p = projective_rep_for_triple(s3, s3, t->irr(2));
  p.verify_associated();
  CHECK(p.factor_set().is_trivial());
  CHECK(p.factor_set().cosets() == 1);
}

TEST_CASE("projective representation for (SL23, Q8, 2-dim)") {
  auto sl = PermGroup::sl23();
  auto q8 = sylow_subgroup(*sl, 2);
  auto tq = CharacterTable::of(q8);
  Character theta = tq->irr(4);
  REQUIRE(theta.degree() == 2);
  ProjRep p = projective_rep_for_triple(sl, q8, theta);
  p.verify_associated();
  const FactorSet& a = p.factor_set();
  for (int i = 0; i < a.cosets(); ++i)
    for (int j = 0; j < a.cosets(); ++j) {
      int order = 0, expo = 0;
      REQUIRE(a.at_cosets(i, j).as_root_of_unity(&order, &expo));
      CHECK((order == 1 || order == 3));
    }
}

TEST_CASE("genuinely nontrivial factor set: (Q8, Z(Q8), faithful)") {
  auto q8 = PermGroup::quaternion8();
  auto z = center(*q8);
  REQUIRE(z->order() == 2);
  auto tz = CharacterTable::of(z);
  Character theta = tz->irr(1);
  ProjRep p = projective_rep_for_triple(q8, z, theta);
  p.verify_associated();
  CHECK_FALSE(p.factor_set().is_trivial());
}

TEST_CASE("non-invariant theta is rejected") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  Character omega = CharacterTable::of(a3)->irr(1);
  CHECK_THROWS_AS(projective_rep_for_triple(s3, a3, omega), precondition_error);
}

TEST_CASE("induced projective representation: reducible flag case") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  auto h = generated_subgroup(*s3, {Perm::from_cycles(3, "(0 1)")});
  auto m = trivial_subgroup(*s3);
  ProjRep p = projective_rep_for_triple(h, m, trivial_character(m));
  bool irr = true;
  ProjRep ind = induce_proj(p, s3, a3, &irr);
  CHECK_FALSE(irr);
  CHECK(ind.rep_degree() == 3);
  CHECK(ind.factor_set().is_trivial());
  CHECK(ind.at(Perm(3)).trace() == Cyclotomic(3));
}

TEST_CASE("induced projective representation: irreducible case in Q16") {
  // Q16 = <a, b | a^8 = 1, b^2 = a^4, b a b^-1 = a^-1> via its regular action
  std::vector<std::pair<int, int>> elems;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 8; ++i) elems.push_back({i, j});
  auto mul = [](std::pair<int, int> x, std::pair<int, int> y) {
    int i = x.first, j = x.second, k = y.first, l = y.second;
    int kk = j ? (8 - k) % 8 : k;
    int ii = (i + kk) % 8;
    int jj = j + l;
    if (jj >= 2) {
      jj -= 2;
      ii = (ii + 4) % 8;
    }
    return std::make_pair(ii, jj);
  };
  auto index_of = [&](std::pair<int, int> e) { return e.second * 8 + e.first; };
  auto perm_of = [&](std::pair<int, int> e) {
    std::vector<int> img(16);
    for (const auto& x : elems) img[index_of(x)] = index_of(mul(e, x));
    return Perm(img);
  };
  auto q16 = PermGroup::from_generators(16, {perm_of({1, 0}), perm_of({0, 1})});
  REQUIRE(q16->order() == 16);
  auto h = generated_subgroup(*q16, {perm_of({1, 0})});
  auto m = generated_subgroup(*q16, {perm_of({2, 0})});
  auto n = generated_subgroup(*q16, {perm_of({2, 0}), perm_of({0, 1})});
  REQUIRE(h->order() == 8);
  REQUIRE(m->order() == 4);
  REQUIRE(n->order() == 8);
  auto tm = CharacterTable::of(m);
  int faithful = -1;
  for (int i = 0; i < tm->size(); ++i)
    if (tm->irr(i).degree() == 1 && tm->irr(i).linear_order() == 4) faithful = i;
  REQUIRE(faithful >= 0);
  Character theta = tm->irr(faithful);
  REQUIRE(is_invariant_under(theta, *h));
  ProjRep p = projective_rep_for_triple(h, m, theta);
  p.verify_associated();
  bool irr = false;
  ProjRep ind = induce_proj(p, q16, n, &irr);
  CHECK(irr);
  ind.verify_associated();
  CHECK(ind.rep_degree() == 2);
}

TEST_CASE("induction with H = G and M = N is the identity operation") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  ProjRep p = projective_rep_for_triple(s3, a3, trivial_character(a3));
  bool irr = false;
  ProjRep same = induce_proj(p, s3, a3, &irr);
  CHECK(irr);
  for (int i = 0; i < s3->order(); ++i)
    CHECK(same.at(s3->element(i)) == p.at(s3->element(i)));
}

TEST_CASE("linear induced projective representation matches induction") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  auto h = generated_subgroup(*s3, {Perm::from_cycles(3, "(0 1)")});
  auto m = trivial_subgroup(*s3);
  ProjRep p = projective_rep_for_triple(h, m, trivial_character(m));
  ProjRep ind = induce_proj(p, s3, a3);
  Character by_rep = ind.base().character();
  Character by_ind = induce_to(trivial_character(m), a3);
  CHECK(by_rep == by_ind);
}

TEST_CASE("tensor product of projective representations") {
  auto sl = PermGroup::sl23();
  auto q8 = sylow_subgroup(*sl, 2);
  Character theta = CharacterTable::of(q8)->irr(4);
  ProjRep p1 = projective_rep_for_triple(sl, q8, theta);
  auto c2 = PermGroup::cyclic(2);
  ProjRep p2 = projective_rep_for_triple(c2, c2, trivial_character(c2));
  auto prod = direct_product(sl, c2);
  ProjRep t = tensor_proj(p1, p2, prod);
  t.verify_associated();
  const FactorSet& a1 = p1.factor_set();
  const FactorSet& at = t.factor_set();
  for (int i = 0; i < sl->order(); i += 5)
    for (int j = 0; j < sl->order(); j += 5) {
      Perm x = prod.embed(sl->element(i), Perm(c2->degree()));
      Perm y = prod.embed(sl->element(j), Perm(c2->degree()));
      CHECK(at.at(x, y) == a1.at(sl->element(i), sl->element(j)));
    }
}

TEST_CASE("tensor factor set is the product of the inflated factor sets") {
  auto q8 = PermGroup::quaternion8();
  auto z = center(*q8);
  Character theta = CharacterTable::of(z)->irr(1);
  ProjRep p1 = projective_rep_for_triple(q8, z, theta);
  ProjRep p2 = projective_rep_for_triple(q8, z, theta);
  auto prod = direct_product(q8, q8);
  ProjRep t = tensor_proj(p1, p2, prod);
  t.verify_associated();
  for (int i = 0; i < q8->order(); i += 3)
    for (int j = 0; j < q8->order(); j += 3)
      for (int k = 0; k < q8->order(); k += 3)
        for (int l = 0; l < q8->order(); l += 3) {
          Perm x = prod.embed(q8->element(i), q8->element(k));
          Perm y = prod.embed(q8->element(j), q8->element(l));
          Cyclotomic expect = p1.factor_set().at(q8->element(i), q8->element(j)) *
                              p2.factor_set().at(q8->element(k), q8->element(l));
          CHECK(t.factor_set().at(x, y) == expect);
        }
}

TEST_CASE("wreath construction with one copy is the original") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  ProjRep p = projective_rep_for_triple(s3, a3, trivial_character(a3));
  auto w = wreath_product(s3, 1);
  ProjRep pw = wreath_proj(p, w);
  pw.verify_associated();
  CHECK(pw.rep_degree() == p.rep_degree());
  CHECK(pw.factor_set().is_trivial() == p.factor_set().is_trivial());
}

TEST_CASE("wreath construction with two copies") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  ProjRep p = projective_rep_for_triple(s3, a3, trivial_character(a3));
  auto w = wreath_product(s3, 2);
  ProjRep pw = wreath_proj(p, w);
  pw.verify_associated();
  CHECK(pw.normal()->order() == 9);
  CHECK(pw.group()->order() == 72);
}

TEST_CASE("central extension of a trivial factor set is a direct product") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  ProjRep p = projective_rep_for_triple(s3, a3, trivial_character(a3));
  CentralExtension ext(s3, p.factor_set());
  CHECK(ext.value_order() == 1);
  CHECK(ext.order() == 6);
  ext.verify(p);
}

TEST_CASE("central extension for the SL(2,3) factor set") {
  auto sl = PermGroup::sl23();
  auto q8 = sylow_subgroup(*sl, 2);
  Character theta = CharacterTable::of(q8)->irr(4);
  ProjRep p = projective_rep_for_triple(sl, q8, theta);
  CentralExtension ext(sl, p.factor_set());
  CHECK(ext.order() == sl->order() * ext.value_order());
  ext.verify(p);
}

TEST_CASE("central extension for the Q8-over-center factor set") {
  auto q8 = PermGroup::quaternion8();
  auto z = center(*q8);
  Character theta = CharacterTable::of(z)->irr(1);
  ProjRep p = projective_rep_for_triple(q8, z, theta);
  CentralExtension ext(q8, p.factor_set());
  CHECK(ext.value_order() > 1);
  ext.verify(p);
}

TEST_CASE("class sum scalars") {
  auto s3 = PermGroup::symmetric(3);
  auto t = CharacterTable::of(s3);
  ReductionContext ctx(3, s3->exponent());
  ProjRep p = projective_rep_for_triple(s3, s3, t->irr(1));
  std::vector<Perm> transpositions;
  for (const auto& x : s3->elements())
    if (x.order() == 2) transpositions.push_back(x);
  auto [scalar, star] = class_sum_scalar(p, transpositions, ctx);
  CHECK(scalar == Cyclotomic(-3));
  CHECK(star.is_zero());
  auto [s1, f1] = class_sum_scalar(p, {Perm(3)}, ctx);
  CHECK(s1 == Cyclotomic(1));
  CHECK(f1.is_one());
  auto [s0, f0] = class_sum_scalar(p, {}, ctx);
  CHECK(s0.is_zero());
  CHECK(f0.is_zero());
}

TEST_CASE("class sum scalar matches the central character") {
  auto sl = PermGroup::sl23();
  auto t = CharacterTable::of(sl);
  for (int p : {2, 3}) {
    ReductionContext ctx(p, sl->exponent());
    for (int i : {0, 3, 6}) {
      ProjRep rep = projective_rep_for_triple(sl, sl, t->irr(i));
      auto lambda = central_character(t->irr(i), ctx);
      const auto& cls = sl->classes();
      for (size_t c = 0; c < cls.size(); ++c) {
        std::vector<Perm> members;
        for (int mi : cls[c].members) members.push_back(sl->element(mi));
        auto [scalar, star] = class_sum_scalar(rep, members, ctx);
        CHECK(star == lambda[c]);
      }
    }
  }
}

TEST_CASE("butterfly transport between two overgroups of A3") {
  // one ambient product, two overgroups of N = A3 with the same (trivial)
  // action: G1 = N x C2, G2 = N x C4
  auto a3 = PermGroup::alternating(3);
  auto big = direct_product(a3, PermGroup::cyclic(4));
  auto amb = big.group;
  std::vector<Perm> ngens;
  for (const auto& s : a3->generators()) ngens.push_back(big.embed(s, Perm(4)));
  auto n_shared = generated_subgroup(*amb, ngens);
  Perm c4 = big.embed(Perm(3), Perm::from_cycles(4, "(0 1 2 3)"));
  Perm c2 = c4 * c4;
  auto g1p = generated_subgroup(*amb, {ngens[0], c2});
  auto g2p = generated_subgroup(*amb, {ngens[0], c4});
  ProjRep q1 = projective_rep_for_triple(g1p, n_shared, trivial_character(n_shared));
  ButterflyResult res = butterfly_transport(q1, q1, g1p, g1p, g2p);
  res.upper.verify_associated();
  res.lower.verify_associated();
  CHECK(res.upper.group() == g2p);
  CHECK(subgroups_equal(*res.h2, *g2p));
}

TEST_CASE("butterfly transport rejects mismatched automorphism images") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  ProjRep p = projective_rep_for_triple(s3, a3, trivial_character(a3));
  CHECK_THROWS_AS(butterfly_transport(p, p, s3, s3, a3), precondition_error);
}
