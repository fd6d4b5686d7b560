#include "frolicher/inequalities.hpp"

#include "frolicher/adiabatic.hpp"
#include "frolicher/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace frolicher {

namespace {

void require_self_adjoint(const CMatrix &m, const char *which) {
    if (m.rows() != m.cols()) throw UsageError(std::string(which) + " operand is not square");
    if (hermitian_residual(m) > 1e-10 * std::max(1.0, m.norm()))
        throw UsageError(std::string(which) + " operand is not self-adjoint");
}

// Both kernels have dimension b_k (d_h is conjugate to d), so the kernel of
// Delta_h is spanned by its b_k lowest eigenvectors.
CMatrix lowest_eigenvectors(const CMatrix &m, int count) {
    if (count <= 0) return CMatrix(m.rows(), 0);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(CMatrix(0.5 * (m + m.adjoint())));
    return es.eigenvectors().leftCols(count);
}

double spectral_norm(const CMatrix &m) {
    RVector sv = singular_values(m);
    return sv.size() ? sv(0) : 0.0;
}

}  // namespace

double psd_gap(const CMatrix &a, const CMatrix &b) {
    require_self_adjoint(a, "left");
    require_self_adjoint(b, "right");
    if (a.rows() != b.rows()) throw UsageError("operands act on different spaces");
    return min_eigenvalue(a - b);
}

InequalityVerdict psd_verdict(const std::string &name, int k, double param, const CMatrix &a, const CMatrix &b,
                              double tol, bool asserted) {
    InequalityVerdict v;
    v.name = name;
    v.k = k;
    v.param = param;
    v.asserted = asserted;
    v.gap = psd_gap(a, b);
    v.norm = spectral_norm(a - b);
    const double eps = std::numeric_limits<double>::epsilon();
    v.tolerance = tol * v.norm + 64 * eps * (spectral_norm(a) + spectral_norm(b));
    v.holds = v.gap >= -v.tolerance;
    return v;
}

HypothesisCheck check_hypothesis(const MetricOperators &o, double tol) {
    const ExteriorBasis &b = *o.basis;
    HypothesisCheck c;
    c.tolerance = tol * std::max(1.0, spectral_norm(o.tau_commutator));
    c.pass = true;
    for (int k = 0; k <= 2 * o.n; ++k) {
        CMatrix frame = null_space(vstack(degree_block(b, o.dbar, k), degree_block(b, o.dbar_star, k, -1)), o.scale);
        CMatrix image = degree_part(b, o.tau_commutator, k) * frame;
        double worst = 0;
        for (int j = 0; j < image.cols(); ++j) worst = std::max(worst, image.col(j).norm());
        c.worst.push_back(worst);
        c.holds.push_back(worst <= c.tolerance);
        if (k >= 1 && k <= o.n && worst > c.tolerance) c.pass = false;
    }
    return c;
}

DegreeConstants degree_constants(const MetricOperators &o, int k) {
    const ExteriorBasis &b = *o.basis;
    DegreeConstants c;
    c.k = k;
    RVector ev = hermitian_eigenvalues(degree_part(b, o.lap_dbar, k));
    double cut = kRankTolerance * std::max(1.0, ev.size() ? ev(ev.size() - 1) : 0.0) * std::max(1, int(ev.size()));
    for (int i = 0; i < ev.size(); ++i)
        if (ev(i) > cut) {
            c.dbar_gap = ev(i);
            break;
        }
    c.torsion_max = std::max(0.0, max_eigenvalue(degree_part(b, o.tau_commutator, k)));
    double tcut = kRankTolerance * std::max(1.0, spectral_norm(o.tau_commutator));
    if (c.torsion_max <= tcut || c.dbar_gap == 0.0)
        c.h0 = 1.0;
    else
        c.h0 = std::min(c.dbar_gap / c.torsion_max, 1.0);
    return c;
}

std::vector<InequalityVerdict> check_core_inequalities(const MetricOperators &o, const HypothesisCheck &hyp,
                                                       const InequalityOptions &opt) {
    const ExteriorBasis &b = *o.basis;
    std::vector<InequalityVerdict> out;
    const std::vector<int> ranks = degree_ranks(o);
    const double torsion_bound = 4.0 * std::max(0.0, max_eigenvalue(o.tau_commutator));

    for (int k = 0; k <= 2 * o.n; ++k) {
        const int dim = b.degree_dim(k);
        const CMatrix id = CMatrix::Identity(dim, dim);
        CMatrix lap = degree_part(b, o.lap, k);
        CMatrix lap1 = degree_part(b, o.lap_del, k);
        CMatrix lap2 = degree_part(b, o.lap_dbar, k);
        CMatrix tt = degree_part(b, o.tau_commutator, k);

        for (double h : opt.h_grid) {
            CMatrix lap_h = degree_part(b, rescale(o, h).lap_h, k);
            CMatrix base = 0.75 * lap2 + h * h * lap1;
            auto v = psd_verdict("lower_bound_rescaled", k, h, lap_h, base - torsion_bound * h * h * id, opt.tol, true);
            v.constants["C"] = torsion_bound;
            v.constants["minimal_C"] = std::max(0.0, max_eigenvalue(base - lap_h) / (h * h));
            out.push_back(v);
            if (h > 0 && h < 1)
                out.push_back(psd_verdict("rescaled_minus_h2_full", k, h, lap_h - h * h * lap,
                                          (1 - h) * h * (lap2 - h * tt), opt.tol, true));
        }

        DegreeConstants dc = degree_constants(o, k);
        const int betti = dim - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
        bool hypothesis = hyp.holds.at(k);
        const char *why = hypothesis ? "" : "kernel inclusion fails in this degree; reported only";
        for (double f : opt.h0_fractions) {
            double h = f * dc.h0;
            auto v = psd_verdict("dbar_laplacian_dominates_torsion", k, h, lap2, h * tt, opt.tol, hypothesis);
            v.constants["delta_dbar"] = dc.dbar_gap;
            v.constants["C_k"] = dc.torsion_max;
            v.constants["h0"] = dc.h0;
            v.note = why;
            out.push_back(v);

            CMatrix lap_h = degree_part(b, rescale(o, h).lap_h, k);
            auto w = psd_verdict("rescaled_dominates_h2_full", k, h, lap_h, h * h * lap, opt.tol, hypothesis);
            w.constants["h0"] = dc.h0;
            w.note = why;
            out.push_back(w);

            // ker Delta_h = ker Delta: the Delta_h-harmonic frame is annihilated by Delta
            InequalityVerdict kv;
            kv.name = "kernel_equality";
            kv.kind = "residual";
            kv.k = k;
            kv.param = h;
            kv.asserted = hypothesis;
            kv.note = why;
            kv.constants["h0"] = dc.h0;
            CMatrix frame = lowest_eigenvectors(lap_h, betti);
            kv.gap = frame.cols() ? (lap * frame).norm() : 0.0;
            kv.norm = spectral_norm(lap);
            kv.tolerance = 1e-8 * std::max(1.0, kv.norm);
            kv.holds = kv.gap <= kv.tolerance;
            out.push_back(kv);
        }
    }
    return out;
}

std::vector<InequalityVerdict> check_appendix(const MetricOperators &o, bool skt, const InequalityOptions &opt) {
    const ExteriorBasis &b = *o.basis;
    std::vector<InequalityVerdict> out;
    const double c = std::max(0.0, max_eigenvalue(o.tau_bar_commutator));
    const char *why = skt ? "" : "metric is not SKT; reported only";
    auto push = [&](InequalityVerdict v) {
        v.note = why;
        v.constants["C"] = c;
        out.push_back(std::move(v));
    };
    for (int k = 0; k <= 2 * o.n; ++k) {
        const int dim = b.degree_dim(k);
        const CMatrix id = CMatrix::Identity(dim, dim);
        CMatrix lap = degree_part(b, o.lap, k);
        CMatrix lap1 = degree_part(b, o.lap_del, k);
        CMatrix lap2 = degree_part(b, o.lap_dbar, k);
        CMatrix tt = degree_part(b, o.tau_commutator, k);
        CMatrix ttb = degree_part(b, o.tau_bar_commutator, k);
        CMatrix xb = degree_part(b, o.x_omega_bar, k);

        for (double delta : opt.deltas) {
            push(psd_verdict("del_laplacian_upper", k, delta, (1 + delta) * lap2 + (1 + 1 / delta) * ttb, lap1, opt.tol,
                             skt));
            push(psd_verdict("del_laplacian_lower", k, delta, lap1, lap2 / (1 + delta) - tt / delta, opt.tol, skt));
        }
        for (double h : opt.h_grid) {
            if (!(h > 0 && h < 1)) continue;
            CMatrix lap_h = degree_part(b, rescale(o, h).lap_h, k);
            CMatrix torsion_term = (1 - h) * xb - ttb;
            push(psd_verdict("dbar_dominates_scaled_del", k, h, lap2, h * lap1 + h * xb - h / (1 - h) * ttb, opt.tol,
                             skt));
            push(psd_verdict("rescaled_minus_h_full", k, h, lap_h - h * lap, h * torsion_term, opt.tol, skt));
            push(psd_verdict("rescaled_minus_h_full_constant", k, h, lap_h - h * lap, -c * h * id, opt.tol, skt));
            push(psd_verdict("rescaled_minus_h2_full_skt", k, h, lap_h - h * h * lap, h * h * torsion_term, opt.tol,
                             skt));
            push(psd_verdict("rescaled_minus_h2_full_constant", k, h, lap_h - h * h * lap, -c * h * h * id, opt.tol,
                             skt));
        }
    }
    return out;
}

}  // namespace frolicher
