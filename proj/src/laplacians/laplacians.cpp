#include "frolicher/laplacians.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace frolicher {

CMatrix graded_commutator(const CMatrix &a, int deg_a, const CMatrix &b, int deg_b) {
    bool odd = ((deg_a * deg_b) % 2) != 0;
    return odd ? CMatrix(a * b + b * a) : CMatrix(a * b - b * a);
}

bool has_type(const ExteriorBasis &basis, const CMatrix &op, int a, int b, double tol) {
    for (int col = 0; col < basis.size(); ++col) {
        Bidegree src = basis.bidegree(col);
        for (int row = 0; row < basis.size(); ++row) {
            Bidegree tgt = basis.bidegree(row);
            if (tgt.p == src.p + a && tgt.q == src.q + b) continue;
            if (std::abs(op(row, col)) > tol) return false;
        }
    }
    return true;
}

CMatrix degree_part(const ExteriorBasis &b, const CMatrix &op, int k) {
    return op.block(b.degree_offset(k), b.degree_offset(k), b.degree_dim(k), b.degree_dim(k));
}

MetricOperators build_operators(const OrthonormalModel &model) {
    MetricOperators o;
    o.basis = model.complex.basis;
    const ExteriorBasis &b = *o.basis;
    o.n = b.n();
    o.del = model.complex.del;
    o.dbar = model.complex.dbar;
    o.del_star = o.del.adjoint();
    o.dbar_star = o.dbar.adjoint();
    o.d = o.del + o.dbar;
    o.d_star = o.d.adjoint();
    o.scale = std::max(1.0, o.del.norm() + o.dbar.norm());

    o.lefschetz = lefschetz_operator(b);
    o.lambda = o.lefschetz.adjoint();
    o.star = hodge_star(b);

    CVector omega = fundamental_form(b);
    o.del_omega = wedge_operator(b, CVector(o.del * omega));
    o.dbar_omega = wedge_operator(b, CVector(o.dbar * omega));
    o.ddbar_omega = wedge_operator(b, CVector(cplx(0.0, 0.5) * (o.del * (o.dbar * omega))));

    o.tau = graded_commutator(o.lambda, -2, o.del_omega, 3);
    o.tau_bar = graded_commutator(o.lambda, -2, o.dbar_omega, 3);
    o.tau_star = o.tau.adjoint();
    o.tau_bar_star = o.tau_bar.adjoint();
    o.x_omega = graded_commutator(o.del_omega, 3, o.del_omega.adjoint(), -3);
    o.x_omega_bar = graded_commutator(o.dbar_omega, 3, o.dbar_omega.adjoint(), -3);
    o.tau_commutator = graded_commutator(o.tau, 1, o.tau_star, -1);
    o.tau_bar_commutator = graded_commutator(o.tau_bar, 1, o.tau_bar_star, -1);

    o.lap_del = graded_commutator(o.del, 1, o.del_star, -1);
    o.lap_dbar = graded_commutator(o.dbar, 1, o.dbar_star, -1);
    o.lap = graded_commutator(o.d, 1, o.d_star, -1);
    o.mixed = graded_commutator(o.del, 1, o.dbar_star, -1) + graded_commutator(o.dbar, 1, o.del_star, -1);
    CMatrix dt = o.del + o.tau;
    o.lap_del_tau = graded_commutator(dt, 1, dt.adjoint(), -1);
    CMatrix dbt = o.dbar + o.tau_bar;
    o.lap_dbar_tau_bar = graded_commutator(dbt, 1, dbt.adjoint(), -1);

    // ker Delta'' = ker dbar  intersected with  ker dbar^*
    CMatrix harmonic = null_space(vstack(o.dbar, o.dbar_star), o.scale);
    o.dbar_harmonic_projector = harmonic * harmonic.adjoint();
    o.lap_tilde = o.del * o.dbar_harmonic_projector * o.del_star + o.del_star * o.dbar_harmonic_projector * o.del +
                  o.lap_dbar;
    return o;
}

RescaledOperators rescale(const MetricOperators &o, double h) {
    const ExteriorBasis &b = *o.basis;
    RescaledOperators r;
    r.h = h;
    r.d_h = h * o.del + o.dbar;
    r.d_h_star = h * o.del_star + o.dbar_star;
    r.lap_h = r.d_h * r.d_h_star + r.d_h_star * r.d_h;
    r.theta = theta_weights(b, h);
    r.weights = rescaled_weights(b, h);
    r.d_star_omega_h = r.weights.cwiseInverse().asDiagonal() * o.d_star * r.weights.asDiagonal();
    r.lap_omega_h = o.d * r.d_star_omega_h + r.d_star_omega_h * o.d;
    return r;
}

namespace {

IdentityCheck compare(const std::string &name, const CMatrix &lhs, const CMatrix &rhs, bool by_parts = false,
                      double rel = 1e-10) {
    IdentityCheck c;
    c.needs_unimodular = by_parts;
    c.name = name;
    c.residual = (lhs - rhs).norm();
    c.tolerance = rel * std::max(1.0, lhs.norm() + rhs.norm());
    c.pass = c.residual <= c.tolerance;
    return c;
}

}  // namespace

std::vector<IdentityCheck> verify_identities(const MetricOperators &o, const std::vector<double> &hs) {
    const ExteriorBasis &b = *o.basis;
    const int size = b.size();
    std::vector<IdentityCheck> out;

    RVector k_minus_n(size), parity(size);
    for (int i = 0; i < size; ++i) {
        k_minus_n(i) = b.degree(i) - o.n;
        parity(i) = (b.degree(i) % 2) ? -1.0 : 1.0;
    }
    out.push_back(compare("lefschetz_commutator", graded_commutator(o.lefschetz, 2, o.lambda, -2),
                          CMatrix(k_minus_n.cast<cplx>().asDiagonal())));
    out.push_back(compare("star_squared", o.star * o.star, CMatrix(parity.cast<cplx>().asDiagonal())));
    out.push_back(compare("star_unitary", o.star.adjoint() * o.star, CMatrix::Identity(size, size)));
    out.push_back(compare("lambda_via_star", o.lambda, o.star.inverse() * o.lefschetz * o.star));
    out.push_back(compare("del_star_via_star", o.del_star, -o.star * o.dbar * o.star, true));
    out.push_back(compare("dbar_star_via_star", o.dbar_star, -o.star * o.del * o.star, true));
    // [del, dbar^*] = -[del, taubar^*] = -[tau, dbar^*]
    CMatrix c1 = graded_commutator(o.del, 1, o.dbar_star, -1);
    out.push_back(compare("del_dbar_star_via_taubar", c1, -graded_commutator(o.del, 1, o.tau_bar_star, -1), true));
    out.push_back(compare("del_dbar_star_via_tau", c1, -graded_commutator(o.tau, 1, o.dbar_star, -1), true));
    // Delta'' = Delta'_tau + [Lambda, [Lambda, (i/2) del dbar omega]] - X_omega
    CMatrix inner = graded_commutator(o.lambda, -2, o.ddbar_omega, 4);
    out.push_back(compare("dbar_laplacian_via_torsion", o.lap_dbar,
                          o.lap_del_tau + graded_commutator(o.lambda, -2, inner, 2) - o.x_omega, true));
    // and its conjugate for Delta'
    CMatrix inner_bar = graded_commutator(o.lambda, -2, conjugate_operator(b, o.ddbar_omega), 4);
    out.push_back(compare("del_laplacian_via_torsion", o.lap_del,
                          o.lap_dbar_tau_bar + graded_commutator(o.lambda, -2, inner_bar, 2) - o.x_omega_bar, true));

    for (double h : hs) {
        RescaledOperators r = rescale(o, h);
        char buf[32];
        std::snprintf(buf, sizeof buf, "(h=%g)", h);
        std::string tag = buf;
        out.push_back(compare("rescaled_expansion" + tag, r.lap_h, h * h * o.lap_del + o.lap_dbar + h * o.mixed));
        CMatrix conj = r.theta.cast<cplx>().asDiagonal() * r.lap_omega_h * r.theta.cwiseInverse().cast<cplx>().asDiagonal();
        out.push_back(compare("rescaled_conjugation" + tag, r.lap_h, conj));
        CMatrix dh_conj = h * o.dbar + o.del;
        out.push_back(compare("d_h_star_via_star" + tag, r.d_h_star, -o.star * dh_conj * o.star, true));
        // adjoints for omega_h: del^* scales by h^2, dbar^* is unchanged
        CMatrix wi = r.weights.cwiseInverse().cast<cplx>().asDiagonal();
        CMatrix w = r.weights.cast<cplx>().asDiagonal();
        out.push_back(compare("del_star_omega_h" + tag, wi * o.del_star * w, h * h * o.del_star));
        out.push_back(compare("dbar_star_omega_h" + tag, wi * o.dbar_star * w, o.dbar_star));
    }
    return out;
}

}  // namespace frolicher
