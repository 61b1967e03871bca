#include <gtest/gtest.h>

#include "oracle.hpp"
#include "properties.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/structure.hpp"

using namespace ringlab;

namespace {

std::vector<Elem> m(const ElementSet& s) { return s.members(); }

}  // namespace

TEST(Structure, ZmodSetsMatchNumberTheory) {
  for (std::size_t n = 1; n <= 40; ++n) {
    auto r = zmod(n);
    SCOPED_TRACE(n);
    EXPECT_EQ(units(*r).size(), oracle::zn_unit_count(n));
    EXPECT_EQ(m(jacobson(*r)), oracle::zn_radical(n));
    EXPECT_EQ(m(delta(*r)), oracle::zn_radical(n));
    EXPECT_EQ(m(nilpotents(*r)), oracle::zn_radical(n));
    EXPECT_EQ(center(*r).size(), n);
  }
}

TEST(Structure, KnownSmallSets) {
  EXPECT_EQ(m(delta(*zmod(9))), (std::vector<Elem>{0, 3, 6}));
  EXPECT_EQ(m(delta(*zmod(4))), (std::vector<Elem>{0, 2}));
  EXPECT_EQ(m(idempotents(*zmod(6))), (std::vector<Elem>{0, 1, 3, 4}));
  auto ut = upper_triangular(2, *zmod(2));
  EXPECT_EQ(ut->order(), 8u);
  EXPECT_EQ(units(*ut).size(), 2u);
  EXPECT_EQ(jacobson(*ut).size(), 2u);
  EXPECT_EQ(center(*ut).size(), 2u);
}

// Every default-corpus ring against the brute-force oracles.
TEST(Structure, CorpusSetsMatchOracles) {
  const auto& corpus = props::shared_corpus();
  for (const auto& e : corpus.entries()) {
    SCOPED_TRACE(e.spec);
    const auto t = oracle::copy(*e.ring);
    EXPECT_EQ(m(units(*e.ring)), oracle::members(oracle::units(t)));
    EXPECT_EQ(m(delta(*e.ring)), oracle::delta(t));
    EXPECT_EQ(m(jacobson(*e.ring)), oracle::jacobson(t));
    EXPECT_EQ(m(idempotents(*e.ring)), oracle::idempotents(t));
    EXPECT_EQ(m(nilpotents(*e.ring)), oracle::nilpotents(t));
    EXPECT_EQ(m(center(*e.ring)), oracle::center(t));
  }
}

TEST(Structure, SetsAreCachedPerRing) {
  auto r = zmod(12);
  EXPECT_EQ(&delta(*r), &delta(*r));
  EXPECT_EQ(&jacobson_quotient(*r), &jacobson_quotient(*r));
}

TEST(Structure, CrossRingSetOperationsThrow) {
  auto a = zmod(4), b = zmod(4);
  try {
    (void)units(*a).is_subset_of(units(*b));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cross_ring);
  }
}

TEST(Structure, QuotientOfZ9ByThree) {
  auto r = zmod(9);
  const Elem g[] = {3};
  auto q = quotient(*r, ideal_closure(*r, g, Sidedness::two));
  EXPECT_EQ(q.ring->order(), 3u);
  EXPECT_EQ(q.representatives, (std::vector<Elem>{0, 1, 2}));
  EXPECT_EQ(q.ring->label(1), "1+I");
  EXPECT_EQ(q.projection[4], 1u);
}

TEST(Structure, OneSidedIdealsAreRejectedByQuotient) {
  auto r = matrix_ring(2, *zmod(2));
  Elem e11 = 0;
  for (Elem a : idempotents(*r).members())
    if (a != r->zero() && a != r->one()) {
      e11 = a;
      break;
    }
  const Elem g[] = {e11};
  auto left = ideal_closure(*r, g, Sidedness::left);
  EXPECT_FALSE(is_ideal(*r, left.members, Sidedness::two));
  try {
    quotient(*r, left);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_two_sided);
  }
}

TEST(Structure, CornerHasIdentityE) {
  auto r = matrix_ring(2, *zmod(3));
  for (Elem e : idempotents(*r).members()) {
    if (e == r->zero()) continue;
    auto c = corner(*r, e);
    EXPECT_EQ(c.embedding[c.ring->one()], e);
    // Units of eRe are the u with u + (1 - e) a unit of R.
    const Elem f = r->sub(r->one(), e);
    for (Elem x = 0; x < c.ring->order(); ++x)
      EXPECT_EQ(c.ring->is_unit(x), r->is_unit(r->add(c.embedding[x], f)));
  }
  try {
    corner(*r, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_idempotent);
  }
}

TEST(Structure, UnitGeneratedSubring) {
  // Units of Z2[x]/(x^3) generate the whole ring.
  auto r = trunc_poly(*zmod(2), 3);
  EXPECT_EQ(unit_generated_subring(*r).ring->order(), 8u);
  // In UT(2, Z2) the units {1, 1+e12} generate the constant-diagonal subring.
  auto ut = upper_triangular(2, *zmod(2));
  auto s = unit_generated_subring(*ut);
  EXPECT_EQ(s.ring->order(), 4u);
  EXPECT_TRUE(is_good_subring(*ut, s));
}

TEST(Structure, IdempotentsLiftInFiniteRings) {
  for (const char* spec : {"Zn(12)", "UT(2, Zn(4))", "Mat(2, Zn(4))", "Trunc(Zn(6), 2)"}) {
    auto r = eval_spec(spec);
    EXPECT_TRUE(idempotents_lift(*r).all_lift) << spec;
  }
}

TEST(Structure, PrimitiveCentralIdempotents) {
  EXPECT_EQ(primitive_central_idempotents(*zmod(30)).size(), 3u);
  EXPECT_EQ(primitive_central_idempotents(*matrix_ring(2, *zmod(2))).size(), 1u);
}

TEST(Structure, ParsesSetNames) {
  EXPECT_EQ(parse_structure_set("delta"), StructureSet::delta);
  EXPECT_STREQ(structure_set_name(StructureSet::jacobson), "jacobson");
  try {
    parse_structure_set("radical");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_set);
  }
}
