#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ctl/char_table.hpp"

using namespace ctl;

namespace {

std::vector<int64_t> degrees(const CharacterTable& t) {
  std::vector<int64_t> out;
  for (int i = 0; i < t.size(); ++i) out.push_back(t.irr(i).degree());
  return out;
}

}  // namespace

TEST_CASE("degrees of the small tables") {
  CHECK(degrees(*CharacterTable::of(PermGroup::symmetric(3))) ==
        std::vector<int64_t>({1, 1, 2}));
  CHECK(degrees(*CharacterTable::of(PermGroup::symmetric(4))) ==
        std::vector<int64_t>({1, 1, 2, 3, 3}));
  CHECK(degrees(*CharacterTable::of(PermGroup::alternating(4))) ==
        std::vector<int64_t>({1, 1, 1, 3}));
  CHECK(degrees(*CharacterTable::of(PermGroup::quaternion8())) ==
        std::vector<int64_t>({1, 1, 1, 1, 2}));
  CHECK(degrees(*CharacterTable::of(PermGroup::dihedral(8))) ==
        std::vector<int64_t>({1, 1, 1, 1, 2}));
  CHECK(degrees(*CharacterTable::of(PermGroup::sl23())) ==
        std::vector<int64_t>({1, 1, 1, 2, 2, 2, 3}));
  CHECK(degrees(*CharacterTable::of(PermGroup::alternating(5))) ==
        std::vector<int64_t>({1, 3, 3, 4, 5}));
}

TEST_CASE("C2 table is the expected one, trivial character first") {
  auto t = CharacterTable::of(PermGroup::cyclic(2));
  REQUIRE(t->size() == 2);
  CHECK(t->irr(0).values() == std::vector<Cyclotomic>({Cyclotomic(1), Cyclotomic(1)}));
  CHECK(t->irr(1).values() ==
        std::vector<Cyclotomic>({Cyclotomic(1), Cyclotomic(-1)}));
}

TEST_CASE("the number of irreducibles equals the number of classes") {
  for (const char* name : {"S3", "S4", "A4", "D8", "Q8", "SL23", "A5", "GL23"}) {
    auto g = PermGroup::named(name);
    CHECK(CharacterTable::of(g)->size() == g->num_classes());
  }
}

TEST_CASE("orthogonality is verified at build time") {
  for (const char* name : {"S3", "A4", "SL23"}) {
    auto t = CharacterTable::of(PermGroup::named(name));
    CHECK_NOTHROW(t->verify_orthogonality());
  }
}

TEST_CASE("restriction of an irreducible to the group itself") {
  auto g = PermGroup::symmetric(3);
  auto t = CharacterTable::of(g);
  for (int i = 0; i < t->size(); ++i)
    CHECK(restrict_to(t->irr(i), g) == t->irr(i));
}

TEST_CASE("induction from A3 of a nontrivial linear gives the degree-2") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  auto ta3 = CharacterTable::of(a3);
  Character omega = ta3->irr(1);
  CHECK(omega.degree() == 1);
  Character ind = induce_to(omega, s3);
  CHECK(ind.degree() == 2);
  CHECK(ind.is_irreducible());
  auto parts = decompose(ind);
  REQUIRE(parts.size() == 1);
  CHECK(CharacterTable::of(s3)->irr(parts[0].first).degree() == 2);
}

TEST_CASE("induction of the trivial character of the trivial subgroup") {
  auto s3 = PermGroup::symmetric(3);
  auto one = trivial_subgroup(*s3);
  Character ind = induce_to(trivial_character(one), s3);
  CHECK(ind.degree() == 6);
  for (int c = 1; c < s3->num_classes(); ++c)
    CHECK(ind.value_on_class(c).is_zero());
}

TEST_CASE("Frobenius reciprocity holds exactly") {
  auto s4 = PermGroup::symmetric(4);
  auto d8 = sylow_subgroup(*s4, 2);
  auto tg = CharacterTable::of(s4);
  auto th = CharacterTable::of(d8);
  for (int i = 0; i < th->size(); ++i)
    for (int j = 0; j < tg->size(); ++j) {
      Cyclotomic lhs = induce_to(th->irr(i), s4).inner(tg->irr(j));
      Cyclotomic rhs = th->irr(i).inner(restrict_to(tg->irr(j), d8));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Clifford: restriction to a normal subgroup is orbit-homogeneous") {
  auto s4 = PermGroup::symmetric(4);
  auto v4 = p_core(*s4, 2);
  auto tg = CharacterTable::of(s4);
  for (int i = 0; i < tg->size(); ++i) {
    Character res = restrict_to(tg->irr(i), v4);
    auto parts = decompose(res);
    for (size_t a = 1; a < parts.size(); ++a)
      CHECK(parts[a].second == parts[0].second);
  }
}

TEST_CASE("defect zero and p'-linear sets") {
  auto s3 = PermGroup::symmetric(3);
  auto dz2 = dz_set(s3, 2);
  REQUIRE(dz2.size() == 1);
  CHECK(CharacterTable::of(s3)->irr(dz2[0]).degree() == 2);
  CHECK(dz_set(s3, 3).empty());
  auto lp = lin_pprime_set(s3, 2);
  REQUIRE(lp.size() == 1);
  CHECK(CharacterTable::of(s3)->irr(lp[0]) == trivial_character(s3));
  CHECK(lin_pprime_set(s3, 3).size() == 2);
}

TEST_CASE("extensions of the trivial character are the inflated linears") {
  auto s4 = PermGroup::symmetric(4);
  auto v4 = p_core(*s4, 2);
  auto exts = extensions_of(trivial_character(v4), s4);
  CHECK(exts.size() == 2);
  for (const auto& e : exts) CHECK(e.degree() == 1);
}

TEST_CASE("extensions of the Q8 2-dimensional character into SL(2,3)") {
  auto sl = PermGroup::sl23();
  auto q8 = sylow_subgroup(*sl, 2);
  auto tq = CharacterTable::of(q8);
  Character theta = tq->irr(tq->size() - 1);
  REQUIRE(theta.degree() == 2);
  auto exts = extensions_of(theta, sl);
  CHECK(exts.size() == 3);
}

TEST_CASE("non-invariant characters have no extensions") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  Character omega = CharacterTable::of(a3)->irr(1);
  CHECK_FALSE(is_invariant_under(omega, *s3));
  CHECK(extensions_of(omega, s3).empty());
}

TEST_CASE("irr_over lists the constituents above a normal-subgroup character") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  auto over_triv = irr_over(s3, trivial_character(a3));
  CHECK(over_triv.size() == 2);
  Character omega = CharacterTable::of(a3)->irr(1);
  auto over_omega = irr_over(s3, omega);
  REQUIRE(over_omega.size() == 1);
  CHECK(CharacterTable::of(s3)->irr(over_omega[0]).degree() == 2);
}

TEST_CASE("inflate and deflate through a quotient") {
  auto s4 = PermGroup::symmetric(4);
  auto v4 = p_core(*s4, 2);
  auto q = quotient(s4, v4);
  auto tq = CharacterTable::of(q.group);
  for (int i = 0; i < tq->size(); ++i) {
    Character inf = inflate(tq->irr(i), q.projection);
    CHECK(inf.degree() == tq->irr(i).degree());
    CHECK(deflate(inf, q.projection) == tq->irr(i));
  }
  auto ts4 = CharacterTable::of(s4);
  Character deg3 = ts4->irr(3);
  CHECK_THROWS_AS(deflate(deg3, q.projection), precondition_error);
}

TEST_CASE("relative defect zero for S3 over A3") {
  auto s3 = PermGroup::symmetric(3);
  auto a3 = PermGroup::alternating(3);
  CHECK(rdz_set(s3, a3, trivial_character(a3), 2).empty());
  CHECK(rdz_set(s3, a3, trivial_character(a3), 3).size() == 2);
}
