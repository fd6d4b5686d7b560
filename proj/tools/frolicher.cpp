// Command-line front end: analyze, sweep, catalog.

#include "frolicher/catalog.hpp"
#include "frolicher/errors.hpp"
#include "frolicher/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace frolicher;

namespace {

enum Exit { kOk = 0, kVerdictFailed = 1, kBadInput = 2, kNumericFailure = 3 };

struct Common {
    std::string model;
    std::optional<std::string> metric;
    std::optional<std::uint64_t> seed;
    int j_max = 10;
    double tol = 1e-10;
    bool exact = true;
    bool serial = false;
    std::optional<std::string> emit;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("model", c.model, "catalog name or model JSON file")->required();
    cmd->add_option("--metric", c.metric, "Gram matrix JSON file for the (1,0)-coframe");
    cmd->add_option("--seed", c.seed, "use a seeded random positive definite metric");
    cmd->add_option("--j-max", c.j_max, "grid h_j = 2^-j for j = 0..J")->check(CLI::Range(5, 40));
    cmd->add_option("--tol", c.tol, "relative tolerance of the inequality checks")->check(CLI::PositiveNumber);
    cmd->add_flag("--exact,!--float", c.exact, "exact arithmetic for the pages when possible (default)");
    cmd->add_flag("--serial", c.serial, "run the sweep with the serial reference loop");
    cmd->add_option("--emit", c.emit, "directory for report.json and CSV tables");
}

ModelFile resolve_model(const std::string &arg) {
    if (fs::exists(arg) || arg.ends_with(".json")) return load_model(arg);
    return ModelFile{catalog_entry(arg), std::nullopt};
}

AnalysisOptions options_of(const Common &c) {
    AnalysisOptions o;
    o.j_max = c.j_max;
    o.tol = c.tol;
    o.exact = c.exact;
    o.parallel = !c.serial;
    return o;
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

fs::path prepare_dir(const std::string &dir) {
    fs::path p(dir);
    fs::create_directories(p);
    return p;
}

int run_analyze(const Common &c, bool check_hypothesis) {
    ModelFile model = resolve_model(c.model);
    MetricChoice metric = choose_metric(model, c.metric, c.seed);
    AnalysisOptions opt = options_of(c);
    opt.assert_hypothesis = check_hypothesis;
    AnalysisResult res = analyze(model.structure, metric, opt);
    std::string text = res.report.dump(2) + "\n";
    if (c.emit) {
        fs::path dir = prepare_dir(*c.emit);
        write_file(dir / "report.json", text);
        write_file(dir / "eigenvalues.csv", eigenvalue_csv(res.decay.sweep));
        write_file(dir / "classification.csv", classification_csv(res.decay.classes));
        write_file(dir / "verdicts.csv", verdict_csv(res.counts));
    } else {
        std::cout << text;
    }
    int failed = 0;
    for (const auto &v : res.verdicts)
        if (v.asserted && !v.pass) {
            std::cerr << "FAIL " << v.name << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
            ++failed;
        }
    std::cerr << model.structure.name << ": " << res.verdicts.size() << " verdicts, " << failed << " asserted failures\n";
    return failed ? kVerdictFailed : kOk;
}

int run_sweep(const Common &c) {
    ModelFile model = resolve_model(c.model);
    MetricChoice metric = choose_metric(model, c.metric, c.seed);
    AnalysisOptions opt = options_of(c);
    DecayAnalysis d = sweep_only(model.structure, metric, opt);
    if (!c.emit) {
        std::cout << eigenvalue_csv(d.sweep);
        return kOk;
    }
    fs::path dir = prepare_dir(*c.emit);
    write_file(dir / "eigenvalues.csv", eigenvalue_csv(d.sweep));
    write_file(dir / "classification.csv", classification_csv(d.classes));
    const InvariantComplexStructure &s = model.structure;
    PageTable pages = (opt.exact && s.is_exact()) ? pages_by_filtration(build_exact_complex(s))
                                                  : pages_by_filtration(build_complex(s));
    write_file(dir / "verdicts.csv", verdict_csv(compare_counts(d.classes, pages)));
    return kOk;
}

int run_catalog(bool as_json) {
    nlohmann::json list = catalog_listing();
    if (as_json) {
        std::cout << list.dump(2) << "\n";
        return kOk;
    }
    for (const auto &e : list)
        std::cout << e["name"].get<std::string>() << "\tn=" << e["n"].get<int>() << "\t"
                  << e["description"].get<std::string>() << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Frolicher spectral sequence and adiabatic-limit workbench"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Common analyze_opts, sweep_opts;
    bool check_hypothesis = false;
    auto *analyze_cmd = app.add_subcommand("analyze", "full analysis with a JSON report");
    add_common(analyze_cmd, analyze_opts);
    analyze_cmd->add_flag("--check-hypothesis", check_hypothesis,
                          "treat the kernel inclusion ker D'' in ker [tau,tau*] as an asserted verdict");

    auto *sweep_cmd = app.add_subcommand("sweep", "eigenvalue sweep as CSV");
    add_common(sweep_cmd, sweep_opts);

    bool catalog_json = false;
    auto *catalog_cmd = app.add_subcommand("catalog", "list built-in models");
    catalog_cmd->add_flag("--json", catalog_json, "print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze_opts, check_hypothesis);
        if (*sweep_cmd) return run_sweep(sweep_opts);
        if (*catalog_cmd) return run_catalog(catalog_json);
    } catch (const ConfigurationError &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kBadInput;
    } catch (const LookupError &e) {
        std::cerr << "lookup error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ModelInvalidError &e) {
        std::cerr << "invalid model: " << e.what() << "\n";
        return kBadInput;
    } catch (const MetricError &e) {
        std::cerr << "metric error: " << e.what() << "\n";
        return kBadInput;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kBadInput;
    } catch (const NumericError &e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const InconsistencyError &e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericFailure;
    }
    return kOk;
}
