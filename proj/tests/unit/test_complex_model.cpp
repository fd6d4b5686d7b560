#include "frolicher/catalog.hpp"
#include "frolicher/complex.hpp"
#include "frolicher/errors.hpp"
#include "frolicher/manifold_io.hpp"
#include "oracles/exterior_oracle.hpp"

#include <gtest/gtest.h>
#include <random>

using namespace frolicher;

namespace {

// Matrix of a generator rule computed by the word-based oracle, in the
// library's basis order.
CMatrix oracle_matrix(const ExteriorBasis &b, const std::vector<oracle::Form> &rule) {
    CMatrix m = CMatrix::Zero(b.size(), b.size());
    for (int col = 0; col < b.size(); ++col) {
        oracle::Word w;
        for (int g = 0; g < 2 * b.n(); ++g)
            if (b.mask(col) & (Mask(1) << g)) w.push_back(g);
        for (const auto &[word, c] : oracle::apply(rule, w)) {
            Mask m_out = 0;
            for (int g : word) m_out |= Mask(1) << g;
            m(b.index_of(m_out), col) += c;
        }
    }
    return m;
}

// Random two-step nilpotent structure in dimension 3: eps^1, eps^2 closed and
// d eps^3 a combination of eps^12, eps^1 epsbar^1, ..., with small integers.
InvariantComplexStructure random_two_step(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> coef(-2, 2);
    InvariantComplexStructure s{"random", 3, {}, {}};
    auto rational = [&] { return GaussianRational(mpq_class(coef(rng)), mpq_class(coef(rng))); };
    GaussianRational a = rational();
    if (!a.is_zero()) s.partial.push_back({2, 0, 1, a});
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            GaussianRational c = rational();
            if (!c.is_zero()) s.dbar.push_back({2, j, k, c});
        }
    return s;
}

}  // namespace

TEST(GaussianRational, ArithmeticAndParsing) {
    GaussianRational a(mpq_class(1, 2), mpq_class(3));
    GaussianRational b(mpq_class(-2), mpq_class(1, 3));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a - a, GaussianRational(0));
    EXPECT_EQ(kImaginaryUnit * kImaginaryUnit, GaussianRational(-1));
    EXPECT_EQ(GaussianRational::parse_rational("-3/6"), mpq_class(-1, 2));
    EXPECT_THROW(GaussianRational::parse_rational("1/0"), ParseError);
    EXPECT_THROW(GaussianRational::parse_rational("1.5"), ParseError);
    EXPECT_THROW(GaussianRational(0).inverse(), NumericError);
}

TEST(ExteriorBasis, OrderingAndBlocks) {
    ExteriorBasis b(3);
    EXPECT_EQ(b.size(), 64);
    EXPECT_EQ(b.degree_dim(3), 20);
    EXPECT_EQ(b.bidegree_dim(1, 2), 9);
    for (int i = 1; i < b.size(); ++i) {
        Bidegree prev = b.bidegree(i - 1), cur = b.bidegree(i);
        EXPECT_TRUE(prev.total() < cur.total() || (prev.total() == cur.total() && prev.p <= cur.p));
    }
    EXPECT_EQ(b.label(b.bidegree_offset(1, 1)), "e1^eb1");
    EXPECT_EQ(b.label(0), "1");
    EXPECT_THROW(ExteriorBasis(5), ConfigurationError);
    EXPECT_THROW(ExteriorBasis(0), ConfigurationError);
}

TEST(ExteriorBasis, WedgeSign) {
    EXPECT_EQ(wedge_sign(0b001, 0b010), 1);
    EXPECT_EQ(wedge_sign(0b010, 0b001), -1);
    EXPECT_EQ(wedge_sign(0b011, 0b100), 1);
    EXPECT_EQ(wedge_sign(0b100, 0b011), 1);
    EXPECT_EQ(wedge_sign(0b010, 0b101), -1);
    EXPECT_EQ(wedge_sign(0b011, 0b001), 0);
}

TEST(Complex, IwasawaGeneratorValues) {
    ExactComplex c = build_exact_complex(catalog_entry("iwasawa"));
    const ExteriorBasis &b = *c.basis;
    int e3 = b.index_of(b.unbarred(2));
    int e12 = b.index_of(b.unbarred(0) | b.unbarred(1));
    int eb3 = b.index_of(b.barred(2));
    int eb12 = b.index_of(b.barred(0) | b.barred(1));
    EXPECT_EQ(c.del(e12, e3), GaussianRational(-1));
    EXPECT_EQ(c.dbar(eb12, eb3), GaussianRational(-1));
    EXPECT_TRUE(bidegree_block(b, c.dbar, {1, 0}, 0, 1).is_zero());
}

TEST(Complex, MatchesWordOracleOnCatalog) {
    for (const auto &name : catalog_names()) {
        SCOPED_TRACE(name);
        auto s = catalog_entry(name);
        FloatComplex c = build_complex(s);
        auto rules = oracle::generator_rules(s);
        EXPECT_LE((c.del - oracle_matrix(*c.basis, rules.del)).norm(), 1e-14);
        EXPECT_LE((c.dbar - oracle_matrix(*c.basis, rules.dbar)).norm(), 1e-14);
        ExactComplex e = build_exact_complex(s);
        EXPECT_LE((to_complex(e.del) - c.del).norm(), 1e-14);
        EXPECT_TRUE((e.del * e.del).is_zero());
        EXPECT_TRUE((e.dbar * e.dbar).is_zero());
        EXPECT_TRUE((e.del * e.dbar + e.dbar * e.del).is_zero());
    }
}

TEST(Complex, ConjugationExchangesDelAndDbar) {
    for (const auto &name : catalog_names()) {
        SCOPED_TRACE(name);
        FloatComplex c = build_complex(catalog_entry(name));
        CMatrix p = conjugation_matrix(*c.basis);
        EXPECT_LE((p * p - CMatrix::Identity(p.rows(), p.cols())).norm(), 0.0);
        EXPECT_LE((conjugate_operator(*c.basis, c.del) - c.dbar).norm(), 1e-14);
    }
}

TEST(Complex, RandomTwoStepStructuresAgreeWithOracle) {
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 25; ++trial) {
        auto s = random_two_step(rng);
        FloatComplex c = build_complex(s);
        auto rules = oracle::generator_rules(s);
        ASSERT_LE((c.del - oracle_matrix(*c.basis, rules.del)).norm(), 1e-13);
        ASSERT_LE((c.dbar - oracle_matrix(*c.basis, rules.dbar)).norm(), 1e-13);
        ASSERT_LE(identity_residuals(c).max(), 1e-12);
        ExactComplex e = build_exact_complex(s);
        for (int k = 0; k <= 6; ++k)
            ASSERT_EQ(exact_rank(degree_block(*e.basis, e.d(), k)), numerical_rank(degree_block(*c.basis, c.d(), k)));
    }
}

TEST(Complex, RejectsStructureWithNonzeroSquare) {
    InvariantComplexStructure s{"broken", 2, {}, {}};
    s.partial.push_back({0, 0, 1, Coefficient::rational(1)});
    s.dbar.push_back({1, 0, 0, Coefficient::rational(1)});
    try {
        build_exact_complex(s);
        FAIL() << "expected ModelInvalidError";
    } catch (const ModelInvalidError &e) {
        SCOPED_TRACE(e.what());
        EXPECT_NE(std::string(e.what()).find("del^2 = 0"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("epsbar^2"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("block (0,1)->(2,1)"), std::string::npos);
    }
    EXPECT_THROW(build_complex(s), ModelInvalidError);
}

TEST(Complex, UnimodularityFlag) {
    EXPECT_TRUE(is_unimodular(build_complex(catalog_entry("iwasawa"))));
    EXPECT_TRUE(is_unimodular(build_complex(catalog_entry("calabi_eckmann"))));
}

TEST(Catalog, LookupAndSize) {
    EXPECT_GE(catalog_names().size(), 6u);
    EXPECT_THROW(catalog_entry("hopf"), LookupError);
    for (const auto &name : catalog_names()) EXPECT_TRUE(catalog_entry(name).is_exact());
}

TEST(ManifoldIo, ParsesFractionsAndRoundTrips) {
    auto doc = nlohmann::json::parse(R"({
        "name": "kt", "n": 2,
        "dbar": [{"i": 2, "j": 1, "k": 1, "re": "1/2", "im": 0}],
        "metric": [[[2, 0], [0, 0]], [[0, 0], [1, 0]]]})");
    ModelFile f = parse_model(doc);
    ASSERT_EQ(f.structure.dbar.size(), 1u);
    EXPECT_EQ(*f.structure.dbar[0].coef.exact, GaussianRational(mpq_class(1, 2)));
    ASSERT_TRUE(f.metric && f.metric->exact);
    ModelFile again = parse_model(structure_to_json(f.structure));
    EXPECT_EQ(*again.structure.dbar[0].coef.exact, GaussianRational(mpq_class(1, 2)));
}

TEST(ManifoldIo, FloatInputIsInexact) {
    auto doc = nlohmann::json::parse(R"({"n": 2, "dbar": [{"i": 2, "j": 1, "k": 1, "re": 0.5}]})");
    EXPECT_FALSE(parse_model(doc).structure.is_exact());
}

TEST(ManifoldIo, ErrorsNameTheField) {
    auto bad_order = nlohmann::json::parse(R"({"n": 3, "partial": [{"i": 3, "j": 2, "k": 1, "re": 1}]})");
    try {
        parse_model(bad_order);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("partial[0]"), std::string::npos);
    }
    auto bad_index = nlohmann::json::parse(R"({"n": 2, "dbar": [{"i": 3, "j": 1, "k": 1, "re": 1}]})");
    try {
        parse_model(bad_index);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("dbar[0].i"), std::string::npos);
    }
    EXPECT_THROW(parse_model(nlohmann::json::parse(R"({"n": 9})")), ConfigurationError);
    EXPECT_THROW(parse_model(nlohmann::json::parse(R"({"n": 2, "dbar": [{"i": 1, "j": 1, "k": 1, "re": "x"}]})")),
                 ParseError);
}
