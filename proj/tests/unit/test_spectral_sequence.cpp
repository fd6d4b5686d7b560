#include "frolicher/catalog.hpp"
#include "frolicher/pages.hpp"
#include "frolicher/tower.hpp"

#include <gtest/gtest.h>
#include <random>

using namespace frolicher;

namespace {

MetricOperators operators(const std::string &name, std::optional<std::uint64_t> seed = std::nullopt) {
    InvariantComplexStructure s = catalog_entry(name);
    HermitianMetric g = seed ? HermitianMetric::random(s.n, *seed) : HermitianMetric::identity(s.n);
    return build_operators(orthonormalize(s, g));
}

int cell(int n, int p, int q) { return p * (n + 1) + q; }

}  // namespace

// Dolbeault numbers of the Iwasawa model, counted by hand from the left
// invariant forms: h^{1,0} = 3 (eps^1, eps^2, eps^3 are dbar-closed), h^{0,1}
// = 2 (epsbar^3 is not closed).  d_1: E_1^{1,0} -> E_1^{2,0} sends eps^3 to
// -eps^12, so E_2^{1,0} = 2 and b_1 = 4.
TEST(Pages, IwasawaByHand) {
    PageTable t = pages_by_filtration(build_exact_complex(catalog_entry("iwasawa")));
    EXPECT_TRUE(t.exact);
    EXPECT_EQ(t.dim(1, 1, 0), 3);
    EXPECT_EQ(t.dim(1, 0, 1), 2);
    EXPECT_EQ(t.total(1, 1), 5);
    EXPECT_EQ(t.dim(2, 1, 0), 2);
    EXPECT_EQ(t.total(2, 1), 4);
    EXPECT_EQ(t.rank(1, 1, 0), 1);
    EXPECT_EQ(t.betti[1], 4);
    EXPECT_EQ(t.degeneration_page, 2);
    EXPECT_EQ(t.total(1, 5), 5);
    EXPECT_EQ(t.m(1, 1), 1);
    EXPECT_EQ(t.m(2, 1), 0);
}

TEST(Pages, TorusAndKodairaThurston) {
    PageTable torus = pages_by_filtration(build_exact_complex(catalog_entry("torus2")));
    for (int k = 0; k <= 4; ++k) {
        EXPECT_EQ(torus.total(1, k), binomial(4, k));
        EXPECT_EQ(torus.betti[k], binomial(4, k));
    }
    EXPECT_EQ(torus.degeneration_page, 1);
    PageTable kt = pages_by_filtration(build_exact_complex(catalog_entry("kodaira_thurston")));
    EXPECT_EQ(kt.degeneration_page, 1);
    EXPECT_EQ(kt.betti[1], 3);
    PageTable three = pages_by_filtration(build_exact_complex(catalog_entry("three_step")));
    EXPECT_EQ(three.degeneration_page, 3);
}

TEST(Pages, ThreeMethodsAgree) {
    for (const auto &name : catalog_names()) {
        InvariantComplexStructure s = catalog_entry(name);
        PageTable exact = pages_by_filtration(build_exact_complex(s));
        PageTable zig = pages_by_zigzag(build_exact_complex(s));
        PageTable flt = pages_by_filtration(build_complex(s));
        PageTable zig_flt = pages_by_zigzag(build_complex(s));
        EXPECT_EQ(exact.dims, zig.dims) << name;
        EXPECT_EQ(exact.dims, flt.dims) << name;
        EXPECT_EQ(exact.dims, zig_flt.dims) << name;
        HarmonicTower tower = harmonic_tower(operators(name, 7), exact.max_page);
        for (int r = 1; r <= exact.max_page; ++r)
            for (int p = 0; p <= s.n; ++p)
                for (int q = 0; q <= s.n; ++q) EXPECT_EQ(tower.dim(r, p, q), exact.dim(r, p, q)) << name << " r=" << r;
    }
}

TEST(Pages, StatisticsHold) {
    for (const auto &name : catalog_names()) {
        InvariantComplexStructure s = catalog_entry(name);
        FloatComplex c = build_complex(s);
        PageTable t = pages_by_filtration(build_exact_complex(s));
        auto stats = page_statistics(t, is_unimodular(c));
        EXPECT_FALSE(stats.empty());
        for (const auto &st : stats) EXPECT_TRUE(st.pass) << name << " " << st.name << " " << st.detail;
        for (int r = 1; r <= t.max_page; ++r)
            for (int k = 0; k <= 2 * s.n; ++k)
                EXPECT_EQ(t.total(r, k), t.betti[k] + (k > 0 ? t.m(r, k - 1) : 0) + t.m(r, k)) << name;
    }
}

// A corrupted table must be caught by the statistics.
TEST(Pages, StatisticsDetectCorruption) {
    PageTable t = pages_by_filtration(build_exact_complex(catalog_entry("iwasawa")));
    t.dims[2][cell(3, 1, 0)] += 1;
    bool any_failed = false;
    for (const auto &st : page_statistics(t, true)) any_failed |= !st.pass;
    EXPECT_TRUE(any_failed);
}

// H_1^{0,1} on the Iwasawa model with the standard metric is spanned by
// etabar^1 and etabar^2.
TEST(Tower, IwasawaHarmonicFrame) {
    MetricOperators o = operators("iwasawa");
    const ExteriorBasis &b = *o.basis;
    HarmonicTower t = harmonic_tower(o, 3);
    const CMatrix &f = t.level(1).frames[cell(3, 0, 1)];
    ASSERT_EQ(f.cols(), 2);
    CMatrix projector = f * f.adjoint();
    CMatrix expected = CMatrix::Zero(3, 3);
    int off = b.bidegree_offset(0, 1);
    for (int a : {0, 1}) {
        int i = b.index_of(b.barred(a)) - off;
        expected(i, i) = 1.0;
    }
    EXPECT_LE((projector - expected).norm(), 1e-13);
    EXPECT_EQ(t.level(1).d[cell(3, 1, 0)].cols(), 3);
    EXPECT_EQ(t.rank(1, 1, 0), 1);
    EXPECT_EQ(t.total(2, 1), 4);
}

TEST(Tower, LevelsAreNested) {
    for (const char *name : {"iwasawa", "three_step", "calabi_eckmann"}) {
        HarmonicTower t = harmonic_tower(operators(name, 4), 4);
        for (int r = 2; r <= t.max_page(); ++r)
            for (std::size_t c = 0; c < t.level(r).frames.size(); ++c) {
                const CMatrix &inner = t.level(r).frames[c], &outer = t.level(r - 1).frames[c];
                if (inner.cols() == 0) continue;
                CMatrix outside = inner - outer * (outer.adjoint() * inner);
                EXPECT_LE(outside.norm(), 1e-12) << name << " r=" << r;
                EXPECT_LE((inner.adjoint() * inner - CMatrix::Identity(inner.cols(), inner.cols())).norm(), 1e-12);
            }
        for (int r = 1; r <= t.max_page(); ++r) EXPECT_LE(filtration_inclusion_residual(operators(name, 4), t, r), 1e-10);
    }
}

// D_2 does not depend on the choice of u_1: adding a dbar-closed form k to
// u_1 changes del u_1 by del k, whose harmonic part lies in the image of d_1
// and is therefore orthogonal to H_2.
TEST(Tower, SecondMapIndependentOfChain) {
    MetricOperators o = operators("three_step", 3);
    const ExteriorBasis &b = *o.basis;
    HarmonicTower t = harmonic_tower(o, 3);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> normal;
    int checked = 0;
    for (int p = 0; p <= 2; ++p)
        for (int q = 1; q <= 3; ++q) {
            Bidegree src{p + 1, q - 1};
            if (src.p > 3) continue;
            CMatrix closed = null_space(bidegree_block(b, o.dbar, src, 0, 1), o.scale);
            if (closed.cols() == 0) continue;
            CVector coef(closed.cols());
            for (int i = 0; i < coef.size(); ++i) coef(i) = cplx(normal(rng), normal(rng));
            CVector k = closed * coef;
            CVector dk = bidegree_block(b, o.del, src, 1, 0) * k;
            const CMatrix &frame = t.level(2).frames[cell(3, p + 2, q - 1)];
            if (frame.cols() == 0 || p + 2 > 3) continue;
            EXPECT_LE((frame.adjoint() * dk).norm(), 1e-11 * (1 + dk.norm())) << p << "," << q;
            checked += dk.norm() > 1e-8;
        }
    EXPECT_GT(checked, 0);
}

TEST(Tower, ZigzagChainSolvesSystem) {
    MetricOperators o = operators("three_step");
    const ExteriorBasis &b = *o.basis;
    HarmonicTower t = harmonic_tower(o, 3);
    const CMatrix &alpha = t.level(2).frames[cell(3, 0, 1)];
    ASSERT_GT(alpha.cols(), 0);
    double residual = -1;
    std::vector<CMatrix> u = zigzag_chain(o, 0, 1, alpha, 1, residual);
    ASSERT_EQ(u.size(), 1u);
    EXPECT_LE(residual, 1e-12);
    CMatrix lhs = bidegree_block(b, o.dbar, {1, 0}, 0, 1) * u[0];
    CMatrix rhs = bidegree_block(b, o.del, {0, 1}, 1, 0) * alpha;
    EXPECT_LE((lhs - rhs).norm(), 1e-12);
}

// ker of D_r D_r^* + D_r^* D_r is E_{r+1}.
TEST(Tower, FormalLaplacianKernel) {
    for (const char *name : {"iwasawa", "three_step"}) {
        InvariantComplexStructure s = catalog_entry(name);
        PageTable pages = pages_by_filtration(build_exact_complex(s));
        MetricOperators o = operators(name, 2);
        HarmonicTower t = harmonic_tower(o, pages.max_page);
        for (int r = 1; r < pages.max_page; ++r)
            for (int k = 0; k <= 2 * s.n; ++k)
                EXPECT_EQ(formal_laplacian_kernel(t, r, k, o.scale), pages.total(r + 1, k)) << name << " r=" << r;
    }
}

TEST(Tower, SecondPageIsTildeKernel) {
    for (const auto &name : catalog_names()) {
        MetricOperators o = operators(name);
        InvariantComplexStructure s = catalog_entry(name);
        PageTable pages = pages_by_filtration(build_exact_complex(s));
        const ExteriorBasis &b = *o.basis;
        for (int p = 0; p <= s.n; ++p)
            for (int q = 0; q <= s.n; ++q) {
                int off = b.bidegree_offset(p, q), d = b.bidegree_dim(p, q);
                CMatrix blk = o.lap_tilde.block(off, off, d, d);
                EXPECT_EQ(d - numerical_rank(blk, o.scale * o.scale), pages.dim(2, p, q)) << name;
            }
    }
}
