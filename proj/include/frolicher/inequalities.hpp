#pragma once

#include "frolicher/laplacians.hpp"

#include <map>
#include <string>
#include <vector>

namespace frolicher {

// Smallest eigenvalue of a - b.  Throws UsageError if a or b is not
// self-adjoint.
double psd_gap(const CMatrix &a, const CMatrix &b);

// One operator inequality a >= b in a fixed degree (or a residual check when
// kind == "residual").
struct InequalityVerdict {
    std::string name;
    std::string kind = "psd";
    int k = 0;
    double param = 0;  // h or delta
    double gap = 0;    // min eigenvalue of a - b, or the residual
    double norm = 0;   // ||a - b||
    double tolerance = 0;
    bool asserted = true;  // false when the hypothesis of the statement fails
    bool holds = false;
    std::map<std::string, double> constants;
    std::string note;

    bool failed() const { return asserted && !holds; }
};

// a >= b certified when min eig(a - b) >= -(tol * ||a - b|| + 64 eps (||a|| + ||b||)).
InequalityVerdict psd_verdict(const std::string &name, int k, double param, const CMatrix &a, const CMatrix &b,
                              double tol, bool asserted);

struct HypothesisCheck {
    std::vector<double> worst;  // [k]: max ||[tau,tau^*] u|| over an orthonormal frame of ker Delta''
    std::vector<bool> holds;    // [k]
    double tolerance = 0;
    bool pass = false;          // holds for k = 1..n
};

// ker Delta'' inside ker [tau, tau^*], degree by degree.
HypothesisCheck check_hypothesis(const MetricOperators &ops, double tol = 1e-10);

struct DegreeConstants {
    int k = 0;
    double dbar_gap = 0;     // smallest positive eigenvalue of Delta'' (0 if none)
    double torsion_max = 0;  // largest eigenvalue of [tau, tau^*]
    double h0 = 1;           // min(dbar_gap / torsion_max, 1), 1 when torsion_max = 0
};
DegreeConstants degree_constants(const MetricOperators &ops, int k);

struct InequalityOptions {
    std::vector<double> h_grid{0.5, 0.25, 0.1, 0.05, 0.01};
    std::vector<double> h0_fractions{0.99, 0.5, 0.1, 0.01};
    std::vector<double> deltas{0.5, 1.0, 2.0};
    double tol = 1e-10;
};

// The lower bound for Delta_h with the constant 4 max[tau,tau^*], the bound
// Delta_h - h^2 Delta >= (1-h)h(Delta'' - h[tau,tau^*]), and, in degrees where
// the hypothesis holds, Delta'' >= h[tau,tau^*], Delta_h >= h^2 Delta and
// ker Delta_h = ker Delta for h < h0(k).
std::vector<InequalityVerdict> check_core_inequalities(const MetricOperators &ops, const HypothesisCheck &hyp,
                                                       const InequalityOptions &opt = {});

// Comparisons of Delta' and Delta'' and of Delta_h with h Delta, h^2 Delta
// that need del dbar omega = 0; asserted only when `skt` is set.
std::vector<InequalityVerdict> check_appendix(const MetricOperators &ops, bool skt, const InequalityOptions &opt = {});

}  // namespace frolicher
