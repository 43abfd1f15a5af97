#include <gtest/gtest.h>

#include "deltaring/analysis.hpp"
#include "deltaring/constructions.hpp"
#include "oracle.hpp"

namespace dr = deltaring;
using dr::Element;
using oracle::to_set;

namespace {

struct Case {
  dr::RingPtr ring;
  oracle::Ring arith;  // built from arithmetic, not from the tables
};

std::vector<Case> cases() {
  return {
      {dr::zn(2), oracle::zn(2)},
      {dr::zn(4), oracle::zn(4)},
      {dr::zn(6), oracle::zn(6)},
      {dr::zn(8), oracle::zn(8)},
      {dr::zn(9), oracle::zn(9)},
      {dr::upper_triangular(2, dr::zn(2)), oracle::matrices(2, 2, true)},
      {dr::upper_triangular(2, dr::zn(3)), oracle::matrices(2, 3, true)},
      {dr::upper_triangular(3, dr::zn(2)), oracle::matrices(3, 2, true)},
      {dr::matrix_ring(2, dr::zn(2)), oracle::matrices(2, 2, false)},
      {dr::product(dr::zn(2), dr::zn(4)),
       oracle::product(oracle::zn(2), oracle::zn(4))},
      {dr::product(dr::zn(3), dr::zn(4)),
       oracle::product(oracle::zn(3), oracle::zn(4))},
  };
}

}  // namespace

TEST(Analysis, TablesMatchArithmetic) {
  for (auto const& c : cases()) {
    auto const& r = *c.ring;
    ASSERT_EQ(static_cast<int>(r.size()), c.arith.size) << r.name();
    EXPECT_EQ(static_cast<int>(r.one().index), c.arith.one) << r.name();
    for (int x = 0; x < c.arith.size; ++x) {
      for (int y = 0; y < c.arith.size; ++y) {
        ASSERT_EQ(static_cast<int>(r.add_nc(x, y)), c.arith.add(x, y));
        ASSERT_EQ(static_cast<int>(r.mul_nc(x, y)), c.arith.mul(x, y));
      }
    }
  }
}

TEST(Analysis, DistinguishedSetsMatchOracle) {
  for (auto const& c : cases()) {
    auto const& r = *c.ring;
    auto const& o = c.arith;
    SCOPED_TRACE(r.name());
    EXPECT_EQ(to_set(dr::units(r)), oracle::units(o));
    EXPECT_EQ(to_set(dr::idempotents(r)), oracle::idempotents(o));
    EXPECT_EQ(to_set(dr::nilpotents(r)), oracle::nilpotents(o));
    EXPECT_EQ(to_set(dr::center(r)), oracle::center(o));
    EXPECT_EQ(to_set(dr::jacobson_radical(r)), oracle::jacobson(o));
    EXPECT_EQ(to_set(dr::delta(r)), oracle::delta(o));
    EXPECT_EQ(to_set(dr::qnil(r)), oracle::qnil(o));
    for (int a = 0; a < o.size; a += 3) {
      EXPECT_EQ(to_set(dr::comm(r, Element(a))), oracle::comm(o, a));
      EXPECT_EQ(to_set(dr::comm2(r, Element(a))), oracle::comm2(o, a));
    }
  }
}

TEST(Analysis, DeltaFormsAgree) {
  for (auto const& c : cases()) {
    auto const forms = dr::delta_alternative_forms(*c.ring);
    auto const& d = dr::delta(*c.ring);
    EXPECT_EQ(forms.plus_unit, d) << c.ring->name();
    EXPECT_EQ(forms.right_times_unit_plus_one, d) << c.ring->name();
    EXPECT_EQ(forms.left_times_unit_plus_one, d) << c.ring->name();
  }
}

// Small hand-derived instances.
TEST(Analysis, KnownSets) {
  auto z4 = dr::zn(4);
  EXPECT_EQ(dr::units(*z4).indices(), (std::vector<dr::index_type>{1, 3}));
  EXPECT_EQ(dr::delta(*z4).indices(), (std::vector<dr::index_type>{0, 2}));
  EXPECT_EQ(dr::jacobson_radical(*z4), dr::delta(*z4));

  auto z6 = dr::zn(6);
  EXPECT_EQ(dr::idempotents(*z6).indices(),
            (std::vector<dr::index_type>{0, 1, 3, 4}));
  EXPECT_EQ(dr::delta(*z6).indices(), (std::vector<dr::index_type>{0}));

  auto t2 = dr::upper_triangular(2, dr::zn(2));
  // Delta(T_2(Z_2)) = {0, E_12}.
  EXPECT_EQ(dr::delta(*t2).indices(), (std::vector<dr::index_type>{0, 2}));
  EXPECT_TRUE(dr::is_nilpotent(*t2, Element(2)));
  EXPECT_FALSE(dr::is_nilpotent(*t2, Element(4)));
}

TEST(Analysis, ProductOfFieldsHasTrivialDelta) {
  // Z_2 x Z_2: every nonzero element is an idempotent, Delta = {0}.
  auto r = dr::product(dr::zn(2), dr::zn(2));
  EXPECT_EQ(dr::delta(*r).count(), 1u);
  EXPECT_EQ(dr::idempotents(*r).count(), 4u);
}

TEST(Analysis, Annihilators) {
  auto z12 = dr::zn(12);
  EXPECT_EQ(dr::ann_left(*z12, Element(4)).indices(),
            (std::vector<dr::index_type>{0, 3, 6, 9}));
  auto t2 = dr::upper_triangular(2, dr::zn(2));
  auto const o = oracle::matrices(2, 2, true);
  for (int a = 0; a < 8; ++a) {
    auto const l = oracle::select(o, [&](int x) { return o.mul(x, a) == 0; });
    auto const r = oracle::select(o, [&](int x) { return o.mul(a, x) == 0; });
    EXPECT_EQ(to_set(dr::ann_left(*t2, Element(a))), l);
    EXPECT_EQ(to_set(dr::ann_right(*t2, Element(a))), r);
  }
}

TEST(Analysis, IdealTest) {
  auto z8 = dr::zn(8);
  EXPECT_TRUE(dr::is_two_sided_ideal(*z8, dr::make_set(*z8, {0, 2, 4, 6})));
  EXPECT_FALSE(dr::is_two_sided_ideal(*z8, dr::make_set(*z8, {0, 4, 6})));
  EXPECT_FALSE(dr::is_two_sided_ideal(*z8, dr::make_set(*z8, {0, 1})));
}

// Delta is closed under subtraction, products and unit multiples on every
// case (property form of the subring statements).
TEST(Analysis, DeltaSubringProperties) {
  for (auto const& c : cases()) {
    auto const& r = *c.ring;
    auto const& d = dr::delta(r);
    auto const us = dr::units(r).indices();
    ASSERT_TRUE(d.contains(r.zero()));
    ASSERT_TRUE(dr::jacobson_radical(r).is_subset_of(d)) << r.name();
    for (auto x : d.indices()) {
      for (auto y : d.indices()) {
        ASSERT_TRUE(d.contains(Element(r.sub_nc(x, y))));
        ASSERT_TRUE(d.contains(Element(r.mul_nc(x, y))));
      }
      for (auto u : us) {
        ASSERT_TRUE(d.contains(Element(r.mul_nc(u, x))));
        ASSERT_TRUE(d.contains(Element(r.mul_nc(x, u))));
      }
    }
  }
}
