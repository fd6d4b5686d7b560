#include "frolicher/report.hpp"

#include "frolicher/catalog.hpp"
#include "frolicher/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace frolicher {

using nlohmann::json;

bool AnalysisResult::all_asserted_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict &v) { return !v.asserted || v.pass; });
}

MetricChoice choose_metric(const ModelFile &model, const std::optional<std::string> &metric_path,
                           const std::optional<std::uint64_t> &seed) {
    const int n = model.structure.n;
    MetricChoice c;
    if (metric_path) {
        c.source = "file";
        c.metric = load_metric(*metric_path);
    } else if (seed) {
        c.source = "random";
        c.seed = seed;
        c.metric = HermitianMetric::random(n, *seed);
    } else if (model.metric) {
        c.source = "model";
        c.metric = *model.metric;
    } else {
        c.metric = HermitianMetric::identity(n);
    }
    if (c.metric.n() != n)
        throw ConfigurationError("metric has size " + std::to_string(c.metric.n()) + " but the model has n = " +
                                 std::to_string(n));
    c.metric.validate();
    return c;
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json page_json(const PageTable &t) {
    json pages = json::array();
    for (int r = 1; r <= t.max_page; ++r) {
        json grid = json::array();
        for (int p = 0; p <= t.n; ++p) {
            json row = json::array();
            for (int q = 0; q <= t.n; ++q) row.push_back(t.dim(r, p, q));
            grid.push_back(row);
        }
        json totals = json::array();
        for (int k = 0; k <= 2 * t.n; ++k) totals.push_back(t.total(r, k));
        pages.push_back({{"r", r}, {"dims", grid}, {"totals", totals}});
    }
    return pages;
}

bool same_dims(const PageTable &a, const PageTable &b, int depth, std::string &where) {
    for (int r = 1; r <= depth; ++r)
        for (int p = 0; p <= a.n; ++p)
            for (int q = 0; q <= a.n; ++q)
                if (a.dim(r, p, q) != b.dim(r, p, q)) {
                    where = a.method + " vs " + b.method + " at r=" + std::to_string(r) + " (" + std::to_string(p) +
                            "," + std::to_string(q) + ")";
                    return false;
                }
    return true;
}

int kernel_dim(const CMatrix &m, double scale) {
    return int(m.cols()) - numerical_rank(m, scale);
}

struct Collector {
    std::vector<Verdict> &out;
    void add(const std::string &name, bool pass, const std::string &detail = "", bool asserted = true) {
        out.push_back({name, pass, asserted, detail});
    }
};

json verdicts_json(const std::vector<Verdict> &vs) {
    json arr = json::array();
    for (const auto &v : vs)
        arr.push_back({{"name", v.name}, {"pass", v.pass}, {"asserted", v.asserted}, {"detail", v.detail}});
    return arr;
}

// One summary row per inequality name.
json inequality_summary(const std::vector<InequalityVerdict> &vs) {
    std::map<std::string, json> rows;
    for (const auto &v : vs) {
        json &row = rows[v.name];
        if (row.is_null()) row = {{"checked", 0}, {"asserted", 0}, {"failed", 0}, {"violations", 0}, {"worst_ratio", 0.0}};
        row["checked"] = row["checked"].get<int>() + 1;
        if (v.asserted) row["asserted"] = row["asserted"].get<int>() + 1;
        if (v.failed()) row["failed"] = row["failed"].get<int>() + 1;
        if (!v.holds) row["violations"] = row["violations"].get<int>() + 1;
        // how far below zero the gap went, in units of the tolerance
        double ratio = v.kind == "psd" ? (v.tolerance > 0 ? -v.gap / v.tolerance : (v.gap < 0 ? 1e300 : 0.0))
                                       : (v.tolerance > 0 ? v.gap / v.tolerance : 0.0);
        row["worst_ratio"] = std::max(row["worst_ratio"].get<double>(), ratio);
        for (const auto &[key, value] : v.constants) row["constants"][key] = value;
    }
    json out = json::object();
    for (auto &[name, row] : rows) out[name] = row;
    return out;
}

}  // namespace

DecayAnalysis sweep_only(const InvariantComplexStructure &s, const MetricChoice &metric, const AnalysisOptions &opt) {
    OrthonormalModel model = orthonormalize(s, metric.metric);
    MetricOperators ops = build_operators(model);
    SweepOptions so;
    so.j_max = opt.j_max;
    so.parallel = opt.parallel;
    return analyze_decay(ops, so);
}

AnalysisResult analyze(const InvariantComplexStructure &s, const MetricChoice &metric, const AnalysisOptions &opt) {
    AnalysisResult res;
    Collector vc{res.verdicts};
    json &rep = res.report;
    rep["schema"] = kReportSchema;
    rep["tool_version"] = kToolVersion;
    rep["model"] = {{"name", s.name}, {"n", s.n}, {"structure", structure_to_json(s)}};
    rep["metric"] = {{"source", metric.source}, {"gram", metric_to_json(metric.metric)}};
    if (metric.seed) rep["metric"]["seed"] = *metric.seed;
    rep["tolerances"] = {{"inequality_rel", opt.tol},
                         {"rank_rel", kRankTolerance},
                         {"floor_factor", kFloorFactor},
                         {"slope_window", 0.25},
                         {"spectrum_rel", 1e-9}};

    // complex
    FloatComplex fc = build_complex(s);
    const bool exact = opt.exact && s.is_exact();
    std::optional<ExactComplex> ec;
    if (exact) {
        ec = build_exact_complex(s);
        bool ok = (ec->del * ec->del).is_zero() && (ec->dbar * ec->dbar).is_zero() &&
                  (ec->del * ec->dbar + ec->dbar * ec->del).is_zero();
        vc.add("double_complex_exact", ok, "del^2, dbar^2, del dbar + dbar del over Q(i)");
    }
    IdentityResiduals ir = identity_residuals(fc);
    vc.add("double_complex_float", ir.max() <= 1e-12 * std::max(1.0, fc.del.norm() + fc.dbar.norm()),
           "max residual " + fmt(ir.max()));
    const bool unimodular = is_unimodular(fc);
    rep["complex"] = {{"exact", exact}, {"unimodular", unimodular}, {"float_residual", ir.max()}};

    // pages
    PageTable filt = exact ? pages_by_filtration(*ec) : pages_by_filtration(fc);
    PageTable zig = exact ? pages_by_zigzag(*ec) : pages_by_zigzag(fc);
    res.pages = filt;
    const int depth = filt.max_page;
    std::string where;
    vc.add("pages_filtration_vs_chain", same_dims(filt, zig, depth, where), where);
    if (exact) {
        PageTable ff = pages_by_filtration(fc);
        where.clear();
        vc.add("pages_exact_vs_float", same_dims(filt, ff, depth, where), where);
    }

    OrthonormalModel model = orthonormalize(s, metric.metric);
    MetricOperators ops = build_operators(model);
    HarmonicTower tower = harmonic_tower(ops, depth);
    {
        bool ok = true;
        std::ostringstream d;
        for (int r = 1; r <= depth; ++r)
            for (int p = 0; p <= s.n; ++p)
                for (int q = 0; q <= s.n; ++q)
                    if (tower.dim(r, p, q) != filt.dim(r, p, q)) {
                        ok = false;
                        d << "r=" << r << " (" << p << "," << q << ") ";
                    }
        vc.add("pages_tower_vs_filtration", ok, d.str());
    }
    {
        const ExteriorBasis &b = *ops.basis;
        bool ok = true;
        std::ostringstream d;
        for (int p = 0; p <= s.n; ++p)
            for (int q = 0; q <= s.n; ++q) {
                int off = b.bidegree_offset(p, q), dim = b.bidegree_dim(p, q);
                CMatrix blk = ops.lap_tilde.block(off, off, dim, dim);
                if (kernel_dim(blk, ops.scale * ops.scale) != filt.dim(2, p, q)) {
                    ok = false;
                    d << "(" << p << "," << q << ") ";
                }
            }
        vc.add("pseudo_laplacian_kernel_is_second_page", ok, d.str());
    }
    {
        bool ok = true;
        for (int r = 1; r < depth; ++r)
            for (int k = 0; k <= 2 * s.n; ++k)
                if (formal_laplacian_kernel(tower, r, k, ops.scale) != filt.total(r + 1, k)) ok = false;
        vc.add("formal_page_laplacian_kernel", ok);
        double inc = 0;
        for (int r = 1; r <= depth; ++r) inc = std::max(inc, filtration_inclusion_residual(ops, tower, r));
        vc.add("tower_filtration_inclusion", inc <= 1e-9 * ops.scale, "residual " + fmt(inc));
    }
    for (const auto &c : page_statistics(filt, unimodular)) vc.add("page_" + c.name, c.pass, c.detail);
    {
        json betti = filt.betti;
        json m = json::array();
        for (int r = 1; r <= depth; ++r) {
            json row = json::array();
            for (int k = 0; k <= 2 * s.n; ++k) row.push_back(filt.m(r, k));
            m.push_back(row);
        }
        rep["pages"] = {{"method", filt.method},
                        {"exact", filt.exact},
                        {"pages", page_json(filt)},
                        {"betti", betti},
                        {"m", m},
                        {"degeneration_page", filt.degeneration_page},
                        {"realization", "omega-harmonic tower"}};
    }

    // identities
    {
        json ids = json::array();
        for (const auto &c : verify_identities(ops)) {
            bool asserted = unimodular || !c.needs_unimodular;
            vc.add("identity_" + c.name, c.pass,
                   "residual " + fmt(c.residual) + (asserted ? "" : "; model not unimodular, reported only"), asserted);
            ids.push_back({{"name", c.name},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"needs_unimodular", c.needs_unimodular}});
        }
        rep["identities"] = ids;
    }

    // sweep and classification
    SweepOptions so;
    so.j_max = opt.j_max;
    so.parallel = opt.parallel;
    res.decay = analyze_decay(ops, so);
    const EigenSweep &sw = res.decay.sweep;
    const DecayClassification &cl = res.decay.classes;
    {
        bool kernel_ok = true;
        for (int k = 0; k <= 2 * s.n; ++k)
            if (sw.kernel[k] != filt.betti[k]) kernel_ok = false;
        vc.add("sweep_kernel_is_betti", kernel_ok);
        vc.add("decay_all_classified", cl.unclassified() == 0, std::to_string(cl.unclassified()) + " unclassified");
        res.counts = compare_counts(cl, filt);
        std::ostringstream d;
        bool ok = true;
        for (const auto &v : res.counts)
            if (!v.pass) {
                ok = false;
                d << "r=" << v.r << " k=" << v.k << ": dim " << v.dim << " count " << v.count << "; ";
            }
        vc.add("decay_counts_match_pages", ok, d.str());
        for (int r = 1; r <= std::min(2, depth); ++r) {
            DegenerationVerdict dv = degeneration_criterion(sw, filt, r);
            vc.add("degeneration_criterion_r" + std::to_string(r), dv.pass,
                   std::string("criterion ") + (dv.criterion ? "holds" : "fails") + ", pages " +
                       (dv.degenerates ? "degenerate" : "do not degenerate") + (dv.vacuous ? " (vacuous)" : "") +
                       (dv.detail.empty() ? "" : "; " + dv.detail));
        }
        if (unimodular) {
            bool dual = true;
            for (const auto &c : spectral_duality(sw)) dual = dual && c.pass;
            vc.add("spectral_duality", dual);
            ResidualCheck cs = conjugate_star_intertwines(ops, 0.5);
            vc.add(cs.name, cs.pass, "residual " + fmt(cs.residual));
        }
        bool spectra = true;
        double worst = 0;
        for (const auto &c : compare_rescaled_spectra(ops, {1.0, 0.5, 0.125, 1.0 / 64})) {
            spectra = spectra && c.pass;
            worst = std::max(worst, c.difference / std::max(c.tolerance, 1e-300) * 1e-9);
        }
        vc.add("rescaled_spectra_agree", spectra, "worst relative difference " + fmt(worst));
        DistributionData dd = distribution_functions(ops, 0.25);
        bool count_ok = true, fg_ok = true;
        for (const auto &c : check_distribution(dd)) {
            count_ok = count_ok && c.counting_identity;
            fg_ok = fg_ok && c.coexact_exact;
        }
        vc.add("distribution_counting_identity", count_ok);
        vc.add("distribution_coexact_equals_exact", fg_ok);
        for (const auto &c : pure_type_energy_identities(ops, tower, 0.5))
            vc.add("energy_" + c.name, c.pass, "residual " + fmt(c.residual));

        json counts = json::array();
        for (int r = 0; r <= page_depth(filt); ++r) {
            json row = json::array();
            for (int k = 0; k <= 2 * s.n; ++k) row.push_back(cl.count(r, k));
            counts.push_back(row);
        }
        json kernel = sw.kernel;
        rep["sweep"] = {{"j_max", int(sw.h.size()) - 1},
                        {"extended", res.decay.extended},
                        {"kernel", kernel},
                        {"grid_points", sw.h.size()},
                        {"fit_points", cl.tail}};
        rep["classification"] = {{"counts", counts}, {"unclassified", cl.unclassified()}};
        json cmp = json::array();
        for (const auto &v : res.counts)
            cmp.push_back({{"r", v.r}, {"k", v.k}, {"dim", v.dim}, {"count", v.count}, {"pass", v.pass}});
        rep["page_counts"] = cmp;
    }

    // inequalities
    {
        HypothesisCheck hyp = check_hypothesis(ops, opt.tol);
        json worst = hyp.worst;
        json holds = json::array();
        for (bool b : hyp.holds) holds.push_back(b);
        rep["hypothesis"] = {{"pass", hyp.pass}, {"worst", worst}, {"holds", holds}, {"tolerance", hyp.tolerance}};
        vc.add("kernel_inclusion_hypothesis", hyp.pass, hyp.pass ? "holds in degrees 1..n" : "fails in some degree 1..n",
               opt.assert_hypothesis);
        if (hyp.pass) {
            bool e2 = true;
            for (int k = 0; k <= 2 * s.n; ++k) e2 = e2 && filt.total(2, k) == filt.betti[k];
            vc.add("hypothesis_implies_second_page_degeneration", e2);
        }
        SktCheck skt = check_skt(s, metric.metric, opt.tol);
        rep["skt"] = {{"skt", skt.skt}, {"exact", skt.exact}, {"residual", skt.residual}};

        InequalityOptions io;
        io.tol = opt.tol;
        auto core = check_core_inequalities(ops, hyp, io);
        auto app = check_appendix(ops, skt.skt, io);
        auto add_group = [&](const std::vector<InequalityVerdict> &vs) {
            std::map<std::string, std::pair<bool, int>> by_name;  // pass, failures
            for (const auto &v : vs) {
                auto &e = by_name.try_emplace(v.name, true, 0).first->second;
                if (v.failed()) {
                    e.first = false;
                    ++e.second;
                }
            }
            for (const auto &[name, e] : by_name)
                vc.add("inequality_" + name, e.first, e.second ? std::to_string(e.second) + " asserted violations" : "");
        };
        add_group(core);
        add_group(app);
        rep["inequalities"] = {{"core", inequality_summary(core)}, {"appendix", inequality_summary(app)}};
    }

    rep["verdicts"] = verdicts_json(res.verdicts);
    rep["all_asserted_pass"] = res.all_asserted_pass();
    return res;
}

std::string eigenvalue_csv(const EigenSweep &s) {
    std::ostringstream out;
    out << "k,i,h,lambda\n";
    for (int k = 0; k <= 2 * s.n; ++k)
        for (int i = 0; i < s.degree_dim(k); ++i)
            for (size_t j = 0; j < s.h.size(); ++j)
                out << k << "," << i << "," << fmt(s.h[j]) << "," << fmt(s.spectra[j][k](i)) << "\n";
    return out.str();
}

std::string classification_csv(const DecayClassification &c) {
    std::ostringstream out;
    out << "k,i,slope,class\n";
    for (int k = 0; k <= 2 * c.n; ++k)
        for (size_t i = 0; i < c.cls[k].size(); ++i) {
            int v = c.cls[k][i];
            std::string cls = v == kInfiniteClass ? "inf" : v == kUnclassified ? "unclassified" : std::to_string(v);
            double slope = c.slope[k][i];
            out << k << "," << i << "," << (std::isfinite(slope) ? fmt(slope) : std::string(std::isnan(slope) ? "nan" : "inf"))
                << "," << cls << "\n";
        }
    return out.str();
}

std::string verdict_csv(const std::vector<CountVerdict> &v) {
    std::ostringstream out;
    out << "r,k,dimEr,count,pass\n";
    for (const auto &c : v) out << c.r << "," << c.k << "," << c.dim << "," << c.count << "," << (c.pass ? 1 : 0) << "\n";
    return out.str();
}

json catalog_listing() {
    json arr = json::array();
    for (const auto &name : catalog_names()) {
        InvariantComplexStructure s = catalog_entry(name);
        arr.push_back({{"name", name},
                       {"n", s.n},
                       {"description", catalog_description(name)},
                       {"partial_terms", s.partial.size()},
                       {"dbar_terms", s.dbar.size()}});
    }
    return arr;
}

}  // namespace frolicher
