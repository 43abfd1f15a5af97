#include <gtest/gtest.h>

#include "deltaring/analysis.hpp"
#include "deltaring/classify.hpp"
#include "deltaring/constructions.hpp"
#include "deltaring/ring_spec.hpp"
#include "oracle.hpp"

namespace dr = deltaring;
using dr::Element;
using dr::Search;

TEST(Classify, SpectralSetsMatchOracle) {
  dr::RingBuilder b;
  for (auto const* spec : {"Z2", "Z4", "Z6", "Z9", "T(2, Z2)", "T(2, Z3)",
                           "M(2, Z2)", "prod(Z2, Z4)", "H(1, 1, Z2)",
                           "dorroh(Z2, self)", "table:rings/f4.json"}) {
    auto const r = b.build(spec);
    auto const o = oracle::from(*r);
    SCOPED_TRACE(spec);
    auto const sweep = dr::is_delta_quasipolar(*r, Search::exhaustive);
    ASSERT_EQ(sweep.certificates.size(), r->size());
    for (int a = 0; a < o.size; ++a) {
      auto const want = oracle::delta_spectral(o, a);
      EXPECT_EQ(oracle::to_set(dr::delta_spectral_idempotents(*r, Element(a))),
                want);
      EXPECT_EQ(oracle::to_set(sweep.certificates[a].idempotents), want);
    }
    EXPECT_EQ(sweep.verdict.holds, oracle::delta_quasipolar(o));
    EXPECT_EQ(dr::is_abelian(*r).holds, oracle::abelian(o));
    EXPECT_EQ(dr::is_local(*r).holds, oracle::local(o));
  }
}

TEST(Classify, FirstWitnessStopsAtLowestFailure) {
  auto m2 = dr::matrix_ring(2, dr::zn(2));
  auto const quick = dr::is_delta_quasipolar(*m2, Search::first_witness);
  auto const full = dr::is_delta_quasipolar(*m2, Search::exhaustive);
  EXPECT_FALSE(quick.verdict.holds);
  EXPECT_EQ(quick.verdict.witness, full.verdict.witness);
  EXPECT_EQ(quick.verdict.failures.size(), 1u);
  EXPECT_GT(full.verdict.failures.size(), 1u);
}

TEST(Classify, KnownClassifications) {
  dr::RingBuilder b;
  auto const z2 = dr::classification_report(*b.build("Z2"));
  EXPECT_TRUE(z2.uniquely_clean.holds);
  EXPECT_TRUE(z2.delta_quasipolar.holds);
  EXPECT_TRUE(z2.j_quasipolar.holds);

  auto const z4 = dr::classification_report(*b.build("Z4"));
  EXPECT_TRUE(z4.delta_quasipolar.holds);
  EXPECT_TRUE(z4.local.holds);
  EXPECT_EQ(z4.delta, 2u);

  auto const z3 = dr::classification_report(*b.build("Z3"));
  EXPECT_FALSE(z3.delta_quasipolar.holds);
  EXPECT_TRUE(z3.local.holds);
  EXPECT_TRUE(z3.clean.holds);

  auto const t2 = dr::classification_report(*b.build("T(2, Z2)"));
  EXPECT_TRUE(t2.delta_quasipolar.holds);
  EXPECT_FALSE(t2.abelian.holds);
  EXPECT_FALSE(t2.uniquely_clean.holds);
}

TEST(Classify, SpectralIdempotentOfT2Element) {
  // a = [[1,1],[0,0]] (index 6). [[0,1],[0,1]] commutes with a but not with
  // E_11, so E_11 is excluded by the comm2 condition even though a + E_11 =
  // E_12 lies in Delta.
  auto t2 = dr::upper_triangular(2, dr::zn(2));
  Element const a(6);
  EXPECT_EQ(dr::delta_spectral_idempotents(*t2, a).indices(),
            (std::vector<dr::index_type>{6}));
  EXPECT_TRUE(dr::comm(*t2, a).contains(Element(3)));
  EXPECT_FALSE(dr::comm2(*t2, a).contains(Element(4)));
  EXPECT_TRUE(dr::delta(*t2).contains(t2->add(a, Element(4))));
  EXPECT_FALSE(dr::is_spectral_idempotent(*t2, a, Element(4),
                                          dr::SpectralFlavor::delta));
  EXPECT_TRUE(dr::is_spectral_idempotent(*t2, a, Element(6),
                                         dr::SpectralFlavor::delta));
}

TEST(Classify, SpectralPredicateAgreesWithSetRoute) {
  dr::RingBuilder b;
  for (auto const* spec : {"Z8", "T(2, Z2)", "M(2, Z2)", "prod(Z2, Z3)"}) {
    auto const r = b.build(spec);
    for (auto flavor : {dr::SpectralFlavor::delta, dr::SpectralFlavor::jacobson,
                        dr::SpectralFlavor::quasipolar,
                        dr::SpectralFlavor::unit}) {
      for (dr::index_type a = 0; a < r->size(); ++a) {
        auto const set = dr::spectral_idempotents(*r, Element(a), flavor);
        for (dr::index_type p = 0; p < r->size(); ++p) {
          bool const idem = r->mul_nc(p, p) == p;
          ASSERT_EQ(set.contains(Element(p)),
                    idem && dr::is_spectral_idempotent(*r, Element(a),
                                                       Element(p), flavor))
              << spec << " " << dr::to_string(flavor) << " a=" << a
              << " p=" << p;
        }
      }
    }
  }
}

TEST(Classify, CleanDecompositions) {
  auto z6 = dr::zn(6);
  // Id(Z_6) = {0, 1, 3, 4}; only -1 = 5 is a unit, so 0 = 1 + 5 uniquely.
  auto const c = dr::clean_certificate(*z6, Element(0), dr::CleanKind::clean);
  ASSERT_EQ(c.decompositions.size(), 1u);
  EXPECT_EQ(c.decompositions[0].idempotent, Element(1));
  EXPECT_EQ(c.decompositions[0].rest, Element(5));

  auto const uc = dr::check_clean(*z6, dr::CleanKind::uniquely_clean);
  auto const o = oracle::zn(6);
  bool unique = true;
  auto const us = oracle::units(o);
  for (int a = 0; a < 6; ++a) {
    int count = 0;
    for (int e : oracle::idempotents(o)) {
      count += us.count(o.sub(a, e)) != 0 ? 1 : 0;
    }
    unique &= count == 1;
  }
  EXPECT_EQ(uc.verdict.holds, unique);
}

TEST(Classify, StrictCommutingOnlyCountsCommutingPairs) {
  auto t2 = dr::upper_triangular(2, dr::zn(2));
  dr::CleanOptions loose;
  dr::CleanOptions strict{true};
  for (dr::index_type a = 0; a < 8; ++a) {
    auto const l = dr::clean_certificate(
        *t2, Element(a), dr::CleanKind::uniquely_delta_clean, loose);
    auto const s = dr::clean_certificate(
        *t2, Element(a), dr::CleanKind::uniquely_delta_clean, strict);
    std::size_t commuting = 0;
    for (auto const& d : l.decompositions) {
      commuting += d.commuting ? 1 : 0;
    }
    EXPECT_EQ(l.qualifying, l.decompositions.size());
    EXPECT_EQ(s.qualifying, commuting);
  }
}

TEST(Classify, PiRegularWitness) {
  auto z8 = dr::zn(8);
  for (dr::index_type a = 0; a < 8; ++a) {
    auto const w = dr::pi_regular_witness(*z8, Element(a));
    ASSERT_TRUE(w.has_value());
    auto const [n, b] = *w;
    EXPECT_EQ(z8->pow(Element(a), n),
              z8->mul(z8->pow(Element(a), n + 1), b));
  }
  EXPECT_TRUE(dr::is_strongly_pi_regular(*dr::matrix_ring(2, dr::zn(2))).holds);
}
