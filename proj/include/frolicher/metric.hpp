#pragma once

#include "frolicher/complex.hpp"

#include <cstdint>
#include <optional>

namespace frolicher {

// Invariant Hermitian metric given by the Gram matrix g_ij = <eps^i, eps^j>
// of the (1,0)-coframe.
struct HermitianMetric {
    CMatrix gram;
    std::optional<ExactMatrix> exact;  // present when every entry is in Q(i)

    static HermitianMetric identity(int n);
    // g = A A^H + n I with A having seeded standard normal entries.
    static HermitianMetric random(int n, std::uint64_t seed);
    static HermitianMetric from_exact(const ExactMatrix &g);

    int n() const { return int(gram.rows()); }
    // Throws MetricError (with the smallest eigenvalue) unless g is
    // Hermitian positive definite.
    void validate() const;
};

// The model rewritten in a coframe eta = C eps that is orthonormal for the
// metric (g = L L^H, C = L^{-1}).  All metric operators below act in the
// eta basis, where the inner product on forms is the standard one.
struct OrthonormalModel {
    InvariantComplexStructure structure;  // constants with respect to eta
    FloatComplex complex;
    HermitianMetric metric;
    CMatrix lower;     // L
    CMatrix coframe;   // C = L^{-1}
};

OrthonormalModel orthonormalize(const InvariantComplexStructure &s, const HermitianMetric &g);

// Coordinates change on the whole algebra induced by eps^j = sum_b L_jb eta^b:
// maps eps-coordinates of a form to its eta-coordinates.
CMatrix coframe_change_operator(const ExteriorBasis &b, const CMatrix &lower);

// Gram matrix of the eps-monomials induced by g (determinants of minors).
CMatrix induced_gram(const ExteriorBasis &b, const CMatrix &g);

// omega = i sum_a eta^a ^ etabar^a, as coordinates.
CVector fundamental_form(const ExteriorBasis &b);
CMatrix lefschetz_operator(const ExteriorBasis &b);  // L = omega ^ .
CMatrix dual_lefschetz_operator(const ExteriorBasis &b);  // Lambda = L^H

// C-linear Hodge star with u ^ *conj(v) = <u, v> omega^n / n!.
CMatrix hodge_star(const ExteriorBasis &b);

// Pointwise weight of the omega_h inner product relative to omega, including
// the volume factor: h^{-2(n-p)} on (p,q)-forms.
RVector rescaled_weights(const ExteriorBasis &b, double h);
// theta = h^p on (p,q)-forms.
RVector theta_weights(const ExteriorBasis &b, double h);
// <u, v>_{omega_h} for forms in eta coordinates.
cplx rescaled_inner(const ExteriorBasis &b, const CVector &u, const CVector &v, double h);

struct SktCheck {
    bool skt = false;
    bool exact = false;  // decided in Q(i)
    double residual = 0;  // ||del dbar omega|| (float path)
};
// Whether del dbar omega = 0.  Uses exact arithmetic when both the structure
// and the metric are exact.
SktCheck check_skt(const InvariantComplexStructure &s, const HermitianMetric &g, double tol = 1e-10);

ExactMatrix exact_inverse(const ExactMatrix &m);

}  // namespace frolicher
