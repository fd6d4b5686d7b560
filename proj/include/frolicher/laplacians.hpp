#pragma once

#include "frolicher/metric.hpp"

#include <memory>
#include <string>
#include <vector>

namespace frolicher {

// Graded commutator [A, B] = AB - (-1)^{deg A * deg B} BA.
CMatrix graded_commutator(const CMatrix &a, int deg_a, const CMatrix &b, int deg_b);

// True when op maps every (p,q) block into (p+a, q+b) only.
bool has_type(const ExteriorBasis &basis, const CMatrix &op, int a, int b, double tol = 1e-12);

// Operators of a metric model that do not depend on the rescaling parameter.
// Everything is expressed in the orthonormal coframe, so adjoints are
// conjugate transposes.
struct MetricOperators {
    std::shared_ptr<const ExteriorBasis> basis;
    int n = 0;

    CMatrix del, dbar, del_star, dbar_star, d, d_star;
    CMatrix lefschetz, lambda, star;

    CMatrix del_omega;      // (del omega) ^ .      type (2,1)
    CMatrix dbar_omega;     // (dbar omega) ^ .     type (1,2)
    CMatrix ddbar_omega;    // (i/2)(del dbar omega) ^ .
    CMatrix tau, tau_bar;   // [Lambda, del omega ^ .], its conjugate
    CMatrix tau_star, tau_bar_star;
    CMatrix x_omega, x_omega_bar;              // [del omega ^, (del omega ^)^*] and conjugate
    CMatrix tau_commutator, tau_bar_commutator;  // [tau, tau^*], [taubar, taubar^*]

    CMatrix lap_del, lap_dbar, lap;  // Delta', Delta'', Delta
    CMatrix mixed;                   // [del, dbar^*] + [dbar, del^*]
    CMatrix lap_del_tau;             // [del + tau, (del + tau)^*]
    CMatrix lap_dbar_tau_bar;        // [dbar + taubar, (dbar + taubar)^*]

    CMatrix dbar_harmonic_projector;  // p'' onto ker Delta''
    CMatrix lap_tilde;                // del p'' del^* + del^* p'' del + Delta''

    double scale = 1.0;  // ||del|| + ||dbar||, reference size for tolerances
};

MetricOperators build_operators(const OrthonormalModel &model);

// h-dependent operators.  Delta_h = h^2 Delta' + Delta'' + h * mixed is
// unitarily conjugate (by theta = h^p) to the Laplacian of omega_h.
struct RescaledOperators {
    double h = 1.0;
    CMatrix d_h, d_h_star, lap_h;
    CMatrix d_star_omega_h, lap_omega_h;  // adjoint and Laplacian for the omega_h inner product
    RVector theta;                        // diagonal of theta
    RVector weights;                      // diagonal of the omega_h Gram matrix
};

RescaledOperators rescale(const MetricOperators &ops, double h);

struct IdentityCheck {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    // Integrates by parts (adjoints through the star, torsion formulas), so
    // only valid when d vanishes on forms of degree 2n - 1.
    bool needs_unimodular = false;
};

// Numerical verification of the operator identities the rest of the
// workbench relies on: Kahler identities, Hodge star formulas, the
// del/dbar torsion formulas, the Bismut-type Laplacian identity and the
// rescaling conjugation (at each h in `hs`).
std::vector<IdentityCheck> verify_identities(const MetricOperators &ops, const std::vector<double> &hs = {1.0, 0.5, 0.1});

// Restriction of a degree-preserving operator to total degree k.
CMatrix degree_part(const ExteriorBasis &b, const CMatrix &op, int k);

}  // namespace frolicher
