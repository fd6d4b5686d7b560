#include "frolicher/adiabatic.hpp"
#include "frolicher/catalog.hpp"
#include "frolicher/errors.hpp"
#include "frolicher/inequalities.hpp"

#include <gtest/gtest.h>

using namespace frolicher;

namespace {

MetricOperators operators(const std::string &name, std::optional<std::uint64_t> seed = std::nullopt) {
    InvariantComplexStructure s = catalog_entry(name);
    HermitianMetric g = seed ? HermitianMetric::random(s.n, *seed) : HermitianMetric::identity(s.n);
    return build_operators(orthonormalize(s, g));
}

}  // namespace

TEST(PsdGap, Basics) {
    CMatrix a = CMatrix::Identity(3, 3);
    a(2, 2) = 4.0;
    EXPECT_DOUBLE_EQ(psd_gap(a, CMatrix::Identity(3, 3)), 0.0);
    EXPECT_DOUBLE_EQ(psd_gap(CMatrix::Identity(3, 3), a), -3.0);
    CMatrix bad = CMatrix::Zero(3, 3);
    bad(0, 1) = 1.0;
    EXPECT_THROW(psd_gap(bad, a), UsageError);
    EXPECT_THROW(psd_gap(a, bad), UsageError);
    EXPECT_THROW(psd_gap(a, CMatrix::Identity(2, 2)), UsageError);
}

TEST(PsdGap, VerdictTolerance) {
    CMatrix a = CMatrix::Identity(2, 2), b = CMatrix::Identity(2, 2);
    b(0, 0) += 1e-15;
    InequalityVerdict v = psd_verdict("x", 0, 0.5, a, b, 1e-10, true);
    EXPECT_TRUE(v.holds);
    b(0, 0) += 1e-3;
    v = psd_verdict("x", 0, 0.5, a, b, 1e-10, true);
    EXPECT_FALSE(v.holds);
    EXPECT_TRUE(v.failed());
    v.asserted = false;
    EXPECT_FALSE(v.failed());
}

// Flat torus: Delta = Delta' + Delta'' = 2 Delta'' = 0 on invariant forms.
TEST(PsdGap, TorusLaplacians) {
    MetricOperators o = operators("torus2", 2);
    EXPECT_NEAR(psd_gap(o.lap, 2.0 * o.lap_dbar), 0.0, 1e-14);
}

TEST(Hypothesis, GroundTruth) {
    EXPECT_TRUE(check_hypothesis(operators("torus3")).pass);
    EXPECT_TRUE(check_hypothesis(operators("torus2", 4)).pass);
    HypothesisCheck iw = check_hypothesis(operators("iwasawa"));
    EXPECT_FALSE(iw.pass);
    // degree 0 constants are always in the kernel of [tau, tau^*]
    EXPECT_TRUE(iw.holds[0]);
    EXPECT_FALSE(iw.holds[1]);
    EXPECT_FALSE(check_hypothesis(operators("calabi_eckmann")).pass);
}

TEST(Constants, IwasawaDegreeOne) {
    MetricOperators o = operators("iwasawa");
    DegreeConstants c = degree_constants(o, 1);
    // Delta'' on degree 1 has smallest positive eigenvalue 1 (etabar^3)
    EXPECT_NEAR(c.dbar_gap, 1.0, 1e-12);
    EXPECT_GT(c.torsion_max, 0.0);
    EXPECT_NEAR(c.h0, std::min(1.0, c.dbar_gap / c.torsion_max), 1e-15);
    EXPECT_EQ(degree_constants(operators("torus2"), 1).h0, 1.0);
}

// Delta_h - h^2 Delta = (1-h)h(Delta'' - h[tau,tau^*]) assembled from the
// pieces directly: Delta_h = h^2 Delta' + Delta'' + h mixed and
// Delta = Delta' + Delta'' + mixed give (1 - h^2) Delta'' + (h - h^2) mixed.
TEST(Core, RescaledMinusFullAgainstAssembly) {
    MetricOperators o = operators("kodaira_thurston", 3);
    for (double h : {0.5, 0.1}) {
        CMatrix lhs = (1 - h * h) * o.lap_dbar + (h - h * h) * o.mixed;
        CMatrix lap_h = rescale(o, h).lap_h;
        EXPECT_LE((lap_h - h * h * o.lap - lhs).norm(), 1e-12 * (1 + o.lap.norm()));
    }
    HypothesisCheck hyp = check_hypothesis(o);
    auto v = check_core_inequalities(o, hyp);
    int seen = 0;
    for (const auto &x : v)
        if (x.name == "rescaled_minus_h2_full") {
            ++seen;
            EXPECT_TRUE(x.holds) << x.k << " " << x.param << " " << x.gap;
        }
    EXPECT_EQ(seen, 5 * 5);
}

TEST(Core, NoAssertedFailuresOnCatalog) {
    for (const auto &name : catalog_names())
        for (std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{5}}) {
            MetricOperators o = operators(name, seed);
            HypothesisCheck hyp = check_hypothesis(o);
            for (const auto &v : check_core_inequalities(o, hyp)) EXPECT_FALSE(v.failed()) << name << " " << v.name;
        }
}

TEST(Core, LowerBoundConstantIsSufficient) {
    MetricOperators o = operators("iwasawa", 2);
    for (const auto &v : check_core_inequalities(o, check_hypothesis(o)))
        if (v.name == "lower_bound_rescaled") EXPECT_LE(v.constants.at("minimal_C"), v.constants.at("C") + 1e-9);
}

// Where the hypothesis fails the statements are only reported.
TEST(Core, HypothesisGatesAssertion) {
    MetricOperators o = operators("iwasawa");
    HypothesisCheck hyp = check_hypothesis(o);
    for (const auto &v : check_core_inequalities(o, hyp))
        if (v.name == "kernel_equality" || v.name == "dbar_laplacian_dominates_torsion")
            EXPECT_EQ(v.asserted, bool(hyp.holds[v.k]));
}

TEST(Appendix, SktModels) {
    for (const char *name : {"torus2", "kodaira_thurston", "calabi_eckmann"}) {
        InvariantComplexStructure s = catalog_entry(name);
        HermitianMetric g = HermitianMetric::identity(s.n);
        ASSERT_TRUE(check_skt(s, g).skt) << name;
        auto v = check_appendix(build_operators(orthonormalize(s, g)), true);
        EXPECT_FALSE(v.empty());
        for (const auto &x : v) EXPECT_TRUE(x.holds) << name << " " << x.name << " k=" << x.k << " " << x.gap;
    }
    for (const auto &x : check_appendix(operators("iwasawa"), false)) EXPECT_FALSE(x.asserted);
}
