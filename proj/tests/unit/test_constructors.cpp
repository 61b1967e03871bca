#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/structure.hpp"

using namespace ringlab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::internal;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t out = 1;
  while (e--) out *= b;
  return out;
}

}  // namespace

TEST(Constructors, GaloisFields) {
  for (std::size_t q : {2, 3, 4, 5, 7, 8, 9}) {
    auto f = galois_field(q);
    SCOPED_TRACE(q);
    EXPECT_EQ(f->order(), q);
    EXPECT_EQ(units(*f).size(), q - 1);
    EXPECT_EQ(center(*f).size(), q);
  }
  EXPECT_EQ(galois_field(8)->characteristic(), 2u);
  EXPECT_EQ(galois_field(9)->characteristic(), 3u);
  EXPECT_EQ(code_of([] { galois_field(6); }), ErrorCode::unsupported_order);
  EXPECT_EQ(code_of([] { galois_field(16); }), ErrorCode::unsupported_order);
}

TEST(Constructors, MatrixUnitCounts) {
  EXPECT_EQ(units(*matrix_ring(2, *zmod(2))).size(), oracle::gl_order(2, 2));
  EXPECT_EQ(units(*matrix_ring(2, *zmod(3))).size(), oracle::gl_order(2, 3));
  EXPECT_EQ(units(*matrix_ring(3, *zmod(2))).size(), oracle::gl_order(3, 2));
  // GL2(Z4) -> GL2(Z2) is onto with kernel I + 2 M2(Z4) of size 16.
  EXPECT_EQ(units(*matrix_ring(2, *zmod(4))).size(), 16 * oracle::gl_order(2, 2));
  EXPECT_EQ(units(*matrix_ring(2, *galois_field(4))).size(), oracle::gl_order(2, 4));
}

TEST(Constructors, TriangularFamiliesHaveExpectedOrders) {
  auto z2 = zmod(2), z3 = zmod(3);
  EXPECT_EQ(upper_triangular(3, *z3)->order(), 729u);
  EXPECT_EQ(constant_diag_triangular(3, *z2)->order(), 16u);
  EXPECT_EQ(constant_diag_triangular(4, *z2)->order(), ipow(2, 7));
  EXPECT_EQ(trunc_poly(*z3, 3)->order(), 27u);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      SCOPED_TRACE(std::to_string(n) + "," + std::to_string(k));
      EXPECT_EQ(shaped_triangular(TriangularShape::Snm, n, k, *z2)->order(), ipow(2, n * k));
      EXPECT_EQ(shaped_triangular(TriangularShape::Tnm, n, k, *z2)->order(), ipow(2, n + k - 1));
    }
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_EQ(shaped_triangular(TriangularShape::Un, n, 0, *z2)->order(), ipow(2, 2 * n - 2));
}

TEST(Constructors, PatternJacobsonIsStrictlyUpperPart) {
  // For these shapes over a field, J is everything off the diagonal.
  auto z3 = zmod(3);
  for (auto r : {upper_triangular(3, *z3), constant_diag_triangular(3, *z3), shaped_triangular(TriangularShape::Snm, 2, 2, *z3),
                 shaped_triangular(TriangularShape::Un, 4, 0, *z3)}) {
    SCOPED_TRACE(r->name());
    const auto diag = r->name().rfind("UT", 0) == 0 ? 27u : 3u;
    EXPECT_EQ(jacobson(*r).size() * diag, r->order());
  }
}

TEST(Constructors, ProductIndexing) {
  auto p = product(*zmod(2), *zmod(3));
  EXPECT_EQ(p->order(), 6u);
  EXPECT_EQ(units(*p).size(), 2u);
  EXPECT_EQ(p->mul(1 * 3 + 2, 1 * 3 + 2), 1u * 3 + 1);
}

TEST(Constructors, TrivialExtensionLayout) {
  auto r = zmod(4);
  auto t = trivial_extension(*r);
  EXPECT_EQ(t->order(), 16u);
  for (Elem a = 0; a < 16; ++a) {
    EXPECT_EQ(t->is_unit(a), r->is_unit(a / 4));
    EXPECT_EQ(delta(*t).contains(a), delta(*r).contains(a / 4));
  }
}

TEST(Constructors, GroupRings) {
  auto z4 = zmod(4);
  auto rg = group_ring(z4, GroupTable::preset("C2"));
  EXPECT_EQ(rg.ring->order(), 16u);
  auto aug = augmentation_ideal(rg);
  EXPECT_EQ(aug.members.size(), 4u);
  EXPECT_TRUE(is_ideal(*rg.ring, aug.members, Sidedness::two));

  auto s3 = group_ring(zmod(2), GroupTable::preset("S3"));
  EXPECT_EQ(s3.ring->order(), 64u);
  EXPECT_LT(center(*s3.ring).size(), 64u);

  auto sub = group_subring(s3, {0, 1, 2});
  EXPECT_EQ(sub.sub.ring->order(), 8u);
  EXPECT_EQ(code_of([] { GroupTable::preset("C9"); }), ErrorCode::unknown_group);
}

TEST(Constructors, SkewTruncatedPolynomials) {
  auto f4 = galois_field(4);
  auto frob = EndoMap::frobenius(*f4);
  auto r = skew_trunc(*f4, frob, 2);
  EXPECT_EQ(r->order(), 16u);
  EXPECT_EQ(units(*r).size(), 12u);
  EXPECT_TRUE(is_alpha_compatible(*f4, frob));
  EXPECT_LT(center(*r).size(), 16u);
  EXPECT_EQ(code_of([] { EndoMap::frobenius(*zmod(4)); }), ErrorCode::not_endomorphism);
  EXPECT_EQ(code_of([&] { EndoMap::by_name(*f4, "twist"); }), ErrorCode::unknown_name);
  std::vector<Elem> bogus(4, 1);
  EXPECT_EQ(code_of([&] { EndoMap(*f4, bogus, "bogus"); }), ErrorCode::not_endomorphism);
}

TEST(Constructors, OrderCapIsEnforced) {
  const auto saved = order_cap();
  set_order_cap(100);
  EXPECT_EQ(code_of([] { matrix_ring(2, *zmod(4)); }), ErrorCode::order_cap);
  EXPECT_EQ(code_of([] { product(*zmod(11), *zmod(11)); }), ErrorCode::order_cap);
  EXPECT_NO_THROW(product(*zmod(10), *zmod(10)));
  set_order_cap(saved);
  EXPECT_EQ(order_cap(), kDefaultOrderCap);
}

TEST(Constructors, RejectBadParameters) {
  EXPECT_EQ(code_of([] { zmod(0); }), ErrorCode::bad_params);
  EXPECT_EQ(code_of([] { matrix_ring(0, *zmod(2)); }), ErrorCode::bad_params);
}

TEST(Constructors, EveryTableIsARing) {
  ringlab::Evaluator ev;
  for (const char* spec : {"Snm(2, 3, Zn(2))", "Tnm(2, 2, Zn(3))", "Un(4, Zn(2))", "SD(3, Zn(3))", "Grp(Zn(2), C2xC2)",
                           "SkewTrunc(GF(4), frob, 3)", "Triv(UT(2, Zn(2)))"}) {
    auto r = ev.eval(spec);
    SCOPED_TRACE(spec);
    if (r->order() <= 64) EXPECT_TRUE(oracle::is_ring(oracle::copy(*r)));
  }
}
