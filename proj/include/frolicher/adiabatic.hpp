#pragma once

#include "frolicher/pages.hpp"
#include "frolicher/tower.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace frolicher {

// h_j = 2^{-j}, j = 0..j_max.
std::vector<double> geometric_grid(int j_max);

// Spectra of Delta_h on each total degree along an h grid.  The nonzero
// eigenvalues are the squared singular values of the degree blocks of d_h
// (k -> k+1 and k-1 -> k); d_h = theta d theta^{-1} has constant rank, so
// the kernel entries are stored as exact zeros.
struct EigenSweep {
    int n = 0;
    std::vector<double> h;
    std::vector<int> rank;                     // rank of d on degree k (k -> k+1)
    std::vector<int> kernel;                   // dim ker Delta_h on degree k
    std::vector<std::vector<RVector>> spectra;  // [j][k], ascending
    std::vector<std::vector<bool>> resolved;   // [j][k]: smallest nonzero eigenvalue above the precision floor

    const RVector &at(int j, int k) const { return spectra[j][k]; }
    int degree_dim(int k) const { return int(spectra.front()[k].size()); }
};

// Relative floor on singular values: sigma_min >= kFloorFactor * eps * sigma_max.
inline constexpr double kFloorFactor = 1e3;

// Ascending spectrum of Delta_h on degree k from the singular values of d_h.
RVector rescaled_spectrum(const MetricOperators &ops, const std::vector<int> &rank, double h, int k, bool *resolved = nullptr);
std::vector<int> degree_ranks(const MetricOperators &ops);

EigenSweep sweep_serial(const MetricOperators &ops, const std::vector<double> &grid);
EigenSweep sweep_parallel(const MetricOperators &ops, const std::vector<double> &grid);

// Spectrum of the Laplacian of (d, omega_h) on degree k, computed as the
// generalized Hermitian problem (W Delta_{omega_h}, W) with W the omega_h Gram
// matrix.  Independent of the d_h route above.
RVector omega_h_spectrum(const MetricOperators &ops, double h, int k);

inline constexpr int kInfiniteClass = 1 << 20;
inline constexpr int kUnclassified = -1;

struct DecayClassification {
    int n = 0;
    int tail = 4;
    double window = 0.25;
    std::vector<std::vector<double>> slope;  // [k][i]: fitted order rho (lambda ~ h^{2 rho}); +inf on the kernel
    std::vector<std::vector<int>> cls;       // [k][i]: rounded order, kInfiniteClass or kUnclassified
    std::vector<std::vector<int>> fit_points;  // [k]: grid indices used for the fit

    // c_r^k = #{i : class >= r}
    int count(int r, int k) const;
    int unclassified() const;
};

// Least-squares slope of log lambda against log h over the last `tail`
// resolved grid points with h <= 1/4, halved and rounded when within `window`
// of an integer.
DecayClassification classify_decay(const EigenSweep &sweep, int tail = 4, double window = 0.25);

struct SweepOptions {
    int j_max = 10;
    int extension = 4;  // extra halvings tried once when a slope is unclassifiable
    bool parallel = true;
    int tail = 4;
    double window = 0.25;
};

struct DecayAnalysis {
    EigenSweep sweep;
    DecayClassification classes;
    bool extended = false;
};

// Sweep plus classification, with one grid extension on unclassifiable slopes.
DecayAnalysis analyze_decay(const MetricOperators &ops, const SweepOptions &opt = {});

struct CountVerdict {
    int r = 0, k = 0;
    int dim = 0;    // dim E_r^k
    int count = 0;  // c_r^k
    bool pass = false;
};

// c_r^k against dim E_r^k for r = 1..max(degeneration page, 3) (capped at the
// table), every k.
std::vector<CountVerdict> compare_counts(const DecayClassification &c, const PageTable &pages);
int page_depth(const PageTable &pages);

struct DegenerationVerdict {
    int r = 0;
    bool criterion = false;    // delta_h / h^{2r} grows by >= 2 per halving on the tail, k = 1..n
    bool degenerates = false;  // pages: E_r = E_infinity
    bool vacuous = false;      // no positive eigenvalues in degrees 1..n
    bool pass = false;
    std::string detail;
};

DegenerationVerdict degeneration_criterion(const EigenSweep &sweep, const PageTable &pages, int r, int tail = 4);

struct IndependenceVerdict {
    bool pass = false;
    std::string detail;
};
IndependenceVerdict compare_classifications(const DecayClassification &a, const DecayClassification &b, int max_r);

// Distribution functions at a fixed h.  The omega_h-orthogonal splitting
// ker ⊕ Im d ⊕ Im d*_{omega_h} of each degree is built explicitly and the
// restricted spectra give F (on Im d*) and G (on Im d).
struct DistributionData {
    double h = 0;
    int n = 0;
    std::vector<int> betti;
    std::vector<RVector> full;    // spectrum of Delta_h per degree
    std::vector<RVector> coexact;  // Delta_{omega_h} on Im d*_{omega_h} (F)
    std::vector<RVector> exact;    // Delta_{omega_h} on Im d (G)
    double invariance_residual = 0;

    int N(int k, double lambda) const;
    int F(int k, double lambda) const;  // F^{-1} = 0
    int G(int k, double lambda) const;  // G^{2n+1} = 0
};

DistributionData distribution_functions(const MetricOperators &ops, double h);

struct DistributionCheck {
    int k = 0;
    int samples = 0;
    bool counting_identity = false;  // N^k = F^{k-1} + b_k + F^k
    bool coexact_exact = false;      // F^k = G^{k+1}
    std::string detail;
};
// Samples lambda at 0, between consecutive distinct eigenvalues and above the
// top of the spectrum.
std::vector<DistributionCheck> check_distribution(const DistributionData &data);

struct SpectrumComparison {
    double h = 0;
    int k = 0;
    double difference = 0;  // max |lambda_i - mu_i|
    double tolerance = 0;
    bool pass = false;
};
// Delta_h (d_h route) against Delta_{omega_h} (generalized problem).
std::vector<SpectrumComparison> compare_rescaled_spectra(const MetricOperators &ops, const std::vector<double> &hs,
                                                         double rel = 1e-9);
// lambda_i^k(h) against lambda_i^{2n-k}(h) along a sweep.
std::vector<SpectrumComparison> spectral_duality(const EigenSweep &sweep, double rel = 1e-9);

struct ResidualCheck {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
};

// Delta_h (star P) = (star P) conj(Delta_h): the map u -> star(conj u)
// intertwines degrees k and 2n-k.
ResidualCheck conjugate_star_intertwines(const MetricOperators &ops, double h);

// Energy identities for pure-type forms: random forms in every (p,q) for the
// quadratic-form identities, the tower maps D_r for the adjoint scaling.
std::vector<ResidualCheck> pure_type_energy_identities(const MetricOperators &ops, const HarmonicTower &tower, double h,
                                                       std::uint64_t seed = 1);

}  // namespace frolicher
