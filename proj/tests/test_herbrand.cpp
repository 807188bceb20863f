#include "oracles.hpp"
#include "ramfilt/herbrand.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ramfilt;

namespace {

RamificationProfile p3_profile() { return RamificationProfile(3, {{1, 2}, {2, 1}}); }
RamificationProfile p2_profile() { return RamificationProfile(2, {{1, 1}, {3, 1}}); }

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

TEST(BuildPsi, SlopesFollowTheIndexTable) {
    const auto psi = build_psi(p3_profile());
    ASSERT_EQ(psi.segments().size(), 3u);
    EXPECT_EQ(psi.segments()[0].slope, 1);
    EXPECT_EQ(psi.segments()[1].slope, 9);
    EXPECT_EQ(psi.segments()[2].slope, 27);
    EXPECT_EQ(psi.segments()[0].start, 0);
    EXPECT_EQ(*psi.segments()[0].end, 1);
    EXPECT_EQ(*psi.segments()[1].end, 2);
    EXPECT_FALSE(psi.segments()[2].end.has_value());
    EXPECT_EQ(psi.value_at_zero(), 0);
    EXPECT_TRUE(psi.is_convex());
}

TEST(BuildPsi, EmptyProfileIsIdentity) {
    const auto psi = build_psi(RamificationProfile::trivial(5));
    ASSERT_EQ(psi.segments().size(), 1u);
    EXPECT_EQ(psi.segments()[0].slope, 1);
    for (long v : {0L, 1L, 7L, 1000L}) EXPECT_EQ(psi(q(v)), v);
    EXPECT_EQ(psi(q(7, 3)), q(7, 3));
}

TEST(BuildPsi, ValuesMatchIntegrationOracle) {
    const auto prof = p2_profile();
    const auto psi = build_psi(prof);
    for (long v : {1L, 3L, 4L}) EXPECT_EQ(psi(q(v)), oracle::psi_by_integration(prof, q(v))) << v;
    EXPECT_EQ(psi(q(1)), 1);
    EXPECT_EQ(psi(q(3)), 5);
    EXPECT_EQ(psi(q(4)), 9);
}

TEST(PsiEval, Examples) {
    EXPECT_EQ(psi_eval(build_psi(p3_profile()), q(2)), 10);
    EXPECT_EQ(psi_eval(build_psi(p3_profile()), q(0)), 0);
    EXPECT_EQ(psi_eval(build_psi(p2_profile()), q(3, 2)), 2);
    EXPECT_EQ(oracle::psi_by_integration(p3_profile(), q(2)), 10);
    EXPECT_EQ(oracle::psi_by_integration(p2_profile(), q(3, 2)), 2);
}

TEST(PsiEval, RejectsNegativeArgument) {
    EXPECT_THROW(psi_eval(build_psi(p2_profile()), q(-1, 2)), ValidationError);
}

TEST(PhiEval, Examples) {
    EXPECT_EQ(phi_eval(build_psi(p3_profile()), q(10)), 2);
    EXPECT_EQ(phi_eval(build_psi(p3_profile()), q(0)), 0);
    EXPECT_EQ(phi_eval(build_psi(p2_profile()), q(9)), 4);
    EXPECT_THROW(phi_eval(build_psi(p2_profile()), q(-3)), ValidationError);
}

TEST(PiecewiseLinearFn, InverseFunctionIsConcaveWithReciprocalSlopes) {
    const auto psi = build_psi(p3_profile());
    const auto phi = psi.inverse();
    EXPECT_TRUE(phi.is_concave());
    EXPECT_EQ(phi.segments()[1].slope, q(1, 9));
    EXPECT_EQ(phi.segments()[1].start, 1);
    EXPECT_EQ(*phi.segments()[1].end, 10);
    EXPECT_EQ(phi(q(10)), 2);
    EXPECT_EQ(phi.inverse(), psi);
}

TEST(PiecewiseLinearFn, RejectsMalformedSegments) {
    using S = PiecewiseLinearFn::Segment;
    EXPECT_THROW(PiecewiseLinearFn({}, 0), ValidationError);
    EXPECT_THROW(PiecewiseLinearFn({S{q(1), std::nullopt, q(1)}}, 0), ValidationError);
    EXPECT_THROW(PiecewiseLinearFn({S{q(0), q(1), q(1)}}, 0), ValidationError);
    EXPECT_THROW(PiecewiseLinearFn({S{q(0), q(1), q(1)}, S{q(2), std::nullopt, q(1)}}, 0), ValidationError);
    EXPECT_THROW(PiecewiseLinearFn({S{q(0), std::nullopt, q(0)}}, 0), ValidationError);
    EXPECT_THROW(PiecewiseLinearFn({S{q(0), q(0), q(1)}, S{q(0), std::nullopt, q(1)}}, 0), ValidationError);
}

TEST(PsiProperties, RecurrenceAgreesWithIntegrationOnRandomProfiles) {
    std::mt19937_64 rng(20240611);
    const oracle::ProfileShape shape{{2, 3, 5}, 6, 50, 4};
    for (int iter = 0; iter < 400; ++iter) {
        const auto prof = oracle::random_profile(rng, shape);
        const auto psi = build_psi(prof);
        EXPECT_TRUE(psi.is_convex());
        for (const auto& seg : psi.segments()) EXPECT_EQ(seg.slope.get_den(), 1);
        for (const auto& b : prof.breaks()) {
            const Rational t(static_cast<long>(b.t));
            ASSERT_EQ(psi(t), oracle::psi_by_integration(prof, t));
        }
    }
}

TEST(PsiProperties, PhiInvertsPsiOnRandomRationals) {
    std::mt19937_64 rng(77);
    const oracle::ProfileShape shape{{2, 3, 5}, 5, 30, 3};
    for (int iter = 0; iter < 100; ++iter) {
        const auto prof = oracle::random_profile(rng, shape);
        const auto psi = build_psi(prof);
        const long top = (prof.empty() ? 0 : prof.breaks().back().t) + 10;
        std::uniform_int_distribution<long> den(1, 97);
        for (int k = 0; k < 50; ++k) {
            const long d = den(rng);
            const long n = std::uniform_int_distribution<long>(0, top * d)(rng);
            const Rational v = q(n, d);
            ASSERT_EQ(phi_eval(psi, psi_eval(psi, v)), v);
        }
    }
}
