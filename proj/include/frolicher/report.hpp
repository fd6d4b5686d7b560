#pragma once

#include "frolicher/adiabatic.hpp"
#include "frolicher/inequalities.hpp"
#include "frolicher/manifold_io.hpp"

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace frolicher {

inline constexpr const char *kToolVersion = "0.3.0";
inline constexpr const char *kReportSchema = "frolicher-report/1";

// How the metric of an analysis was chosen.
struct MetricChoice {
    std::string source = "identity";  // identity | file | random | model
    std::optional<std::uint64_t> seed;
    HermitianMetric metric;
};

MetricChoice choose_metric(const ModelFile &model, const std::optional<std::string> &metric_path,
                           const std::optional<std::uint64_t> &seed);

struct AnalysisOptions {
    int j_max = 10;
    double tol = 1e-10;
    bool exact = true;  // use exact arithmetic for the pages when the constants allow it
    bool assert_hypothesis = false;
    bool parallel = true;
};

struct Verdict {
    std::string name;
    bool pass = false;
    bool asserted = true;
    std::string detail;
};

struct AnalysisResult {
    nlohmann::json report;
    std::vector<Verdict> verdicts;
    DecayAnalysis decay;
    PageTable pages;
    std::vector<CountVerdict> counts;

    bool all_asserted_pass() const;
};

// Complex validation, pages by three methods, operator identities, the h
// sweep with decay classification and its comparison with the pages, and the
// inequality suite.
AnalysisResult analyze(const InvariantComplexStructure &s, const MetricChoice &metric, const AnalysisOptions &opt);

// Sweep-only run for CSV output.
DecayAnalysis sweep_only(const InvariantComplexStructure &s, const MetricChoice &metric, const AnalysisOptions &opt);

// CSV tables: (k, i, h, lambda); (k, i, slope, class); (r, k, dimEr, count, pass).
std::string eigenvalue_csv(const EigenSweep &s);
std::string classification_csv(const DecayClassification &c);
std::string verdict_csv(const std::vector<CountVerdict> &v);

// Listing of the built-in models.
nlohmann::json catalog_listing();

}  // namespace frolicher
