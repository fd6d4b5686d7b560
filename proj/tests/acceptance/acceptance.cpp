// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "frolicher/adiabatic.hpp"
#include "frolicher/catalog.hpp"
#include "frolicher/inequalities.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace frolicher;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string &what) {
        if (pass) detail << "first failure: " << what;
        pass = false;
    }
};

double spectral_norm(const CMatrix &m) {
    RVector s = singular_values(m);
    return s.size() ? s(0) : 0.0;
}

MetricOperators operators(const InvariantComplexStructure &s, const HermitianMetric &g) {
    return build_operators(orthonormalize(s, g));
}

std::vector<HermitianMetric> metrics_for(int n, int random_count) {
    std::vector<HermitianMetric> out{HermitianMetric::identity(n)};
    for (int seed = 1; seed <= random_count; ++seed) out.push_back(HermitianMetric::random(n, seed));
    return out;
}

PageTable exact_pages(const InvariantComplexStructure &s) { return pages_by_filtration(build_exact_complex(s)); }

const std::vector<std::string> &names() {
    static const std::vector<std::string> n = catalog_names();
    return n;
}

void double_complex(Outcome &o) {
    for (const auto &name : names()) {
        ExactComplex c = build_exact_complex(catalog_entry(name));
        if (!(c.del * c.del).is_zero()) o.fail(name + ": del^2");
        if (!(c.dbar * c.dbar).is_zero()) o.fail(name + ": dbar^2");
        if (!(c.del * c.dbar + c.dbar * c.del).is_zero()) o.fail(name + ": del dbar + dbar del");
    }
    o.detail << (o.pass ? "" : "; ") << names().size() << " entries, exact over Q(i)";
}

// Delta'' = Delta'_tau + [Lambda,[Lambda,(i/2) del dbar omega]] - X_omega and
// [del, dbar^*] = -[tau, dbar^*] = -[del, taubar^*], residual <= 1e-10 ||Delta''||.
void bkn_anchor(Outcome &o) {
    double worst = 0;
    int runs = 0;
    for (const auto &name : names()) {
        InvariantComplexStructure s = catalog_entry(name);
        for (const auto &g : metrics_for(s.n, 5)) {
            MetricOperators ops = operators(s, g);
            const double tol = 1e-10 * spectral_norm(ops.lap_dbar);
            for (const auto &c : verify_identities(ops, {})) {
                if (c.name != "dbar_laplacian_via_torsion" && c.name != "del_dbar_star_via_tau" &&
                    c.name != "del_dbar_star_via_taubar")
                    continue;
                worst = std::max(worst, c.residual / std::max(spectral_norm(ops.lap_dbar), 1e-300));
                if (c.residual > tol) o.fail(name + " " + c.name);
            }
            ++runs;
        }
    }
    o.detail << (o.pass ? "" : "; ") << runs << " metric models, worst residual/||Delta''|| " << worst;
}

void rescaling(Outcome &o) {
    double worst_conj = 0, worst_spec = 0;
    for (const auto &name : names()) {
        InvariantComplexStructure s = catalog_entry(name);
        MetricOperators ops = operators(s, HermitianMetric::random(s.n, 1));
        const std::vector<double> hs{1.0, 0.5, 0.125, 1.0 / 64};
        for (double h : hs) {
            RescaledOperators r = rescale(ops, h);
            CMatrix conj = r.theta.cast<cplx>().asDiagonal() * r.lap_omega_h * r.theta.cwiseInverse().cast<cplx>().asDiagonal();
            double rel = spectral_norm(r.lap_h - conj) / std::max(1.0, spectral_norm(r.lap_h));
            worst_conj = std::max(worst_conj, rel);
            if (rel > 1e-11) o.fail(name + " conjugation");
        }
        for (const auto &c : compare_rescaled_spectra(ops, hs, 1e-9)) {
            worst_spec = std::max(worst_spec, c.difference / std::max(c.tolerance, 1e-300) * 1e-9);
            if (!c.pass) o.fail(name + " spectra");
        }
        // kernel dimension at every grid point from the numerical ranks of d_h
        PageTable pages = exact_pages(s);
        for (double h : geometric_grid(10)) {
            RescaledOperators r = rescale(ops, h);
            std::vector<int> rank(2 * s.n + 2, 0);
            for (int k = 0; k < 2 * s.n; ++k) rank[k + 1] = numerical_rank(degree_block(*ops.basis, r.d_h, k), ops.scale);
            for (int k = 0; k <= 2 * s.n; ++k)
                if (ops.basis->degree_dim(k) - rank[k] - rank[k + 1] != pages.betti[k])
                    o.fail(name + " dim ker Delta_h at h=" + std::to_string(h));
        }
    }
    o.detail << (o.pass ? "" : "; ") << "worst conjugation residual " << worst_conj
             << ", worst spectral difference (norm-relative) " << worst_spec;
}

void three_way_pages(Outcome &o) {
    for (const auto &name : names()) {
        InvariantComplexStructure s = catalog_entry(name);
        ExactComplex c = build_exact_complex(s);
        PageTable filt = pages_by_filtration(c), zig = pages_by_zigzag(c);
        MetricOperators ops = operators(s, HermitianMetric::identity(s.n));
        HarmonicTower tower = harmonic_tower(ops, filt.max_page);
        if (filt.dims != zig.dims) o.fail(name + " filtration vs chain");
        const ExteriorBasis &b = *ops.basis;
        for (int r = 1; r <= filt.max_page; ++r)
            for (int p = 0; p <= s.n; ++p)
                for (int q = 0; q <= s.n; ++q) {
                    if (tower.dim(r, p, q) != filt.dim(r, p, q)) o.fail(name + " tower");
                    if (r != 2) continue;
                    int off = b.bidegree_offset(p, q), d = b.bidegree_dim(p, q);
                    CMatrix blk = ops.lap_tilde.block(off, off, d, d);
                    if (d - numerical_rank(blk, ops.scale * ops.scale) != filt.dim(2, p, q)) o.fail(name + " ker tilde");
                }
    }
    o.detail << (o.pass ? "" : "; ") << "filtration, zig-zag, harmonic tower, ker of the tilde Laplacian";
}

void headline(Outcome &o) {
    InvariantComplexStructure iw = catalog_entry("iwasawa");
    PageTable pages = exact_pages(iw);
    DecayAnalysis d = analyze_decay(operators(iw, HermitianMetric::identity(3)));
    int c1 = d.classes.count(1, 1), c2 = d.classes.count(2, 1);
    if (c1 != 5 || pages.total(1, 1) != 5) o.fail("count(O(h^2)) in degree 1");
    if (c2 != 4 || pages.total(2, 1) != 4 || pages.betti[1] != 4) o.fail("count(O(h^4)) in degree 1");
    double worst = 0;
    for (const auto &row : d.classes.slope)
        for (double s : row)
            if (std::isfinite(s)) worst = std::max(worst, std::abs(s - std::round(s)));
    if (worst > 0.25 || d.classes.unclassified()) o.fail("slope window");
    int cells = 0;
    for (const auto &name : names()) {
        InvariantComplexStructure s = catalog_entry(name);
        PageTable t = exact_pages(s);
        DecayAnalysis a = analyze_decay(operators(s, HermitianMetric::identity(s.n)));
        if (a.classes.unclassified()) o.fail(name + " unclassified slopes");
        for (const auto &v : compare_counts(a.classes, t)) {
            ++cells;
            if (!v.pass) o.fail(name + " r=" + std::to_string(v.r) + " k=" + std::to_string(v.k));
        }
    }
    o.detail << (o.pass ? "" : "; ") << "Iwasawa degree 1: c1=" << c1 << " c2=" << c2 << ", worst slope offset " << worst
             << ", " << cells << " (r,k) cells on the catalog";
}

void bookkeeping(Outcome &o) {
    int samples = 0;
    for (const auto &name : names()) {
        InvariantComplexStructure s = catalog_entry(name);
        MetricOperators ops = operators(s, HermitianMetric::random(s.n, 2));
        for (double h : {0.5, 0.125}) {
            DistributionData d = distribution_functions(ops, h);
            for (const auto &c : check_distribution(d)) {
                samples += c.samples;
                if (!c.counting_identity) o.fail(name + " N = F + b + F");
                if (!c.coexact_exact) o.fail(name + " F = G");
            }
        }
        PageTable t = exact_pages(s);
        for (int r = 1; r <= t.max_page; ++r)
            for (int k = 0; k <= 2 * s.n; ++k)
                if (t.total(r, k) != t.betti[k] + (k ? t.m(r, k - 1) : 0) + t.m(r, k)) o.fail(name + " dim E_r^k");
    }
    o.detail << (o.pass ? "" : "; ") << samples << " spectral sample points";
}

void duality(Outcome &o) {
    for (const auto &name : names()) {
        InvariantComplexStructure s = catalog_entry(name);
        PageTable t = exact_pages(s);
        for (int r = 1; r <= t.max_page; ++r)
            for (int k = 0; k <= 2 * s.n; ++k)
                if (t.total(r, k) != t.total(r, 2 * s.n - k)) o.fail(name + " page duality");
        EigenSweep sw = sweep_parallel(operators(s, HermitianMetric::random(s.n, 3)), geometric_grid(10));
        for (const auto &c : spectral_duality(sw, 1e-9))
            if (!c.pass) o.fail(name + " spectral duality");
    }
    o.detail << (o.pass ? "" : "; ") << "page dimensions and spectra on the h grid";
}

void metric_independence(Outcome &o) {
    for (const char *name : {"iwasawa", "kodaira_thurston"}) {
        InvariantComplexStructure s = catalog_entry(name);
        DecayAnalysis a = analyze_decay(operators(s, HermitianMetric::random(s.n, 11)));
        DecayAnalysis b = analyze_decay(operators(s, HermitianMetric::random(s.n, 12)));
        IndependenceVerdict v = compare_classifications(a.classes, b.classes, 3);
        if (!v.pass) o.fail(std::string(name) + ": " + v.detail);
    }
    o.detail << (o.pass ? "" : "; ") << "seeds 11 and 12 on Iwasawa and Kodaira-Thurston";
}

void hypothesis(Outcome &o) {
    auto check = [&](const char *name) {
        InvariantComplexStructure s = catalog_entry(name);
        return check_hypothesis(operators(s, HermitianMetric::identity(s.n))).pass;
    };
    bool torus = check("torus3"), iw = check("iwasawa"), ce = check("calabi_eckmann");
    if (!torus) o.fail("torus");
    if (iw) o.fail("iwasawa passes");
    if (ce) o.fail("calabi_eckmann passes");
    o.detail << (o.pass ? "" : "; ") << "torus " << (torus ? "passes" : "fails") << ", Iwasawa "
             << (iw ? "passes" : "fails") << ", Calabi-Eckmann " << (ce ? "passes" : "fails");
}

void inequalities(Outcome &o) {
    int asserted = 0, reported = 0, strict = 0;
    for (const auto &name : names()) {
        InvariantComplexStructure s = catalog_entry(name);
        for (const auto &g : metrics_for(s.n, 1)) {
            MetricOperators ops = operators(s, g);
            std::vector<InequalityVerdict> all = check_core_inequalities(ops, check_hypothesis(ops));
            for (auto &v : check_appendix(ops, check_skt(s, g).skt)) all.push_back(v);
            for (const auto &v : all) {
                (v.asserted ? asserted : reported)++;
                if (v.failed()) o.fail(name + " " + v.name + " k=" + std::to_string(v.k));
                // the pinned rule without the roundoff floor
                if (v.asserted && v.kind == "psd" && v.gap < -1e-10 * v.norm) ++strict;
            }
        }
    }
    o.detail << (o.pass ? "" : "; ") << asserted << " asserted, " << reported << " reported only, " << strict
             << " below -1e-10 ||A-B|| before the roundoff floor";
}

void degeneration(Outcome &o) {
    for (const auto &name : names()) {
        InvariantComplexStructure s = catalog_entry(name);
        PageTable t = exact_pages(s);
        EigenSweep sw = sweep_parallel(operators(s, HermitianMetric::identity(s.n)), geometric_grid(10));
        for (int r : {1, 2}) {
            DegenerationVerdict v = degeneration_criterion(sw, t, r);
            if (!v.pass) o.fail(name + " r=" + std::to_string(r) + " " + v.detail);
        }
    }
    o.detail << (o.pass ? "" : "; ") << "r = 1, 2 on " << names().size() << " entries";
}

}  // namespace

int main() {
    struct Item {
        const char *title;
        std::function<void(Outcome &)> run;
    };
    const std::vector<Item> items{
        {"double-complex axioms", double_complex},
        {"BKN identity and commutation anchors", bkn_anchor},
        {"rescaling conjugation, isospectrality, kernel dimension", rescaling},
        {"three-way page agreement", three_way_pages},
        {"decay counts equal page dimensions", headline},
        {"distribution functions and page bookkeeping", bookkeeping},
        {"duality of pages and spectra", duality},
        {"metric independence of decay counts", metric_independence},
        {"kernel inclusion hypothesis ground truth", hypothesis},
        {"operator inequality suite", inequalities},
        {"degeneration criterion", degeneration},
    };
    int failed = 0;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < items.size(); ++i) {
        Outcome o;
        try {
            items[i].run(o);
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, items[i].title, o.detail.str().c_str());
        std::fflush(stdout);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu criteria, %d failed, %.1f s\n", items.size(), failed, secs);
    return failed ? 1 : 0;
}
