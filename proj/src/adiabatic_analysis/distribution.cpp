#include "frolicher/adiabatic.hpp"

#include "frolicher/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace frolicher {

namespace {

int count_le(const RVector &v, double lambda) {
    int c = 0;
    for (int i = 0; i < v.size(); ++i)
        if (v(i) <= lambda) ++c;
    return c;
}

double max_abs(const RVector &v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

int DistributionData::N(int k, double lambda) const { return count_le(full[k], lambda); }
int DistributionData::F(int k, double lambda) const {
    if (k < 0 || k > 2 * n) return 0;
    return count_le(coexact[k], lambda);
}
int DistributionData::G(int k, double lambda) const {
    if (k < 0 || k > 2 * n) return 0;
    return count_le(exact[k], lambda);
}

DistributionData distribution_functions(const MetricOperators &o, double h) {
    const ExteriorBasis &b = *o.basis;
    const int top = 2 * o.n;
    DistributionData out;
    out.h = h;
    out.n = o.n;
    RescaledOperators r = rescale(o, h);
    std::vector<int> rank = degree_ranks(o);

    // Work in S-coordinates (S = W^{1/2}) where the omega_h product is standard.
    RVector s = r.weights.cwiseSqrt();
    CMatrix sym = s.cast<cplx>().asDiagonal() * r.lap_omega_h * s.cwiseInverse().cast<cplx>().asDiagonal();
    CMatrix s_full = s.cast<cplx>().asDiagonal();

    for (int k = 0; k <= top; ++k) {
        out.full.push_back(rescaled_spectrum(o, rank, h, k));
        out.betti.push_back(b.degree_dim(k) - rank[k] - (k > 0 ? rank[k - 1] : 0));
        CMatrix s_k = degree_part(b, s_full, k);
        CMatrix lap_k = degree_part(b, sym, k);
        CMatrix image_d = k > 0 ? CMatrix(s_k * degree_block(b, o.d, k - 1)) : CMatrix(b.degree_dim(k), 0);
        CMatrix image_dstar = k < top ? CMatrix(s_k * degree_block(b, r.d_star_omega_h, k + 1, -1))
                                      : CMatrix(b.degree_dim(k), 0);
        double ref = std::max(1.0, lap_k.norm());
        auto restricted = [&](const CMatrix &gens) {
            CMatrix q = gens.cols() ? range_basis(gens, o.scale) : CMatrix(b.degree_dim(k), 0);
            if (q.cols() == 0) return RVector();
            CMatrix compressed = q.adjoint() * lap_k * q;
            out.invariance_residual =
                std::max(out.invariance_residual, (lap_k * q - q * compressed).norm() / ref);
            return hermitian_eigenvalues(compressed);
        };
        out.exact.push_back(restricted(image_d));
        out.coexact.push_back(restricted(image_dstar));
    }
    if (out.invariance_residual > 1e-8)
        throw NumericError("three-space splitting not invariant at h=" + std::to_string(h) +
                           " (residual " + std::to_string(out.invariance_residual) + ")");
    return out;
}

std::vector<DistributionCheck> check_distribution(const DistributionData &d) {
    std::vector<DistributionCheck> out;
    const int top = 2 * d.n;
    for (int k = 0; k <= top; ++k) {
        std::vector<double> vals;
        auto add = [&](const RVector &v) {
            for (int i = 0; i < v.size(); ++i) vals.push_back(v(i));
        };
        add(d.full[k]);
        if (k > 0) add(d.coexact[k - 1]);
        add(d.coexact[k]);
        if (k < top) add(d.exact[k + 1]);
        std::sort(vals.begin(), vals.end());
        double top_val = vals.empty() ? 0.0 : vals.back();
        double gap = 1e-9 * std::max(1.0, top_val);
        std::vector<double> samples{0.0};
        for (size_t i = 0; i + 1 < vals.size(); ++i)
            if (vals[i + 1] - vals[i] > gap) samples.push_back(0.5 * (vals[i] + vals[i + 1]));
        samples.push_back(2.0 * top_val + 1.0);

        DistributionCheck c;
        c.k = k;
        c.samples = int(samples.size());
        c.counting_identity = true;
        c.coexact_exact = true;
        std::ostringstream detail;
        for (double lam : samples) {
            int lhs = d.N(k, lam);
            int rhs = d.F(k - 1, lam) + d.betti[k] + d.F(k, lam);
            if (lhs != rhs) {
                c.counting_identity = false;
                detail << "N(" << lam << ")=" << lhs << " vs " << rhs << "; ";
            }
            if (d.F(k, lam) != d.G(k + 1, lam)) {
                c.coexact_exact = false;
                detail << "F(" << lam << ")=" << d.F(k, lam) << " vs G=" << d.G(k + 1, lam) << "; ";
            }
        }
        c.detail = detail.str();
        out.push_back(c);
    }
    return out;
}

std::vector<SpectrumComparison> compare_rescaled_spectra(const MetricOperators &o, const std::vector<double> &hs,
                                                         double rel) {
    std::vector<SpectrumComparison> out;
    std::vector<int> rank = degree_ranks(o);
    for (double h : hs)
        for (int k = 0; k <= 2 * o.n; ++k) {
            RVector a = rescaled_spectrum(o, rank, h, k);
            RVector b = omega_h_spectrum(o, h, k);
            SpectrumComparison c;
            c.h = h;
            c.k = k;
            c.difference = (a - b).cwiseAbs().maxCoeff();
            c.tolerance = rel * std::max(1.0, std::max(max_abs(a), max_abs(b)));
            c.pass = c.difference <= c.tolerance;
            out.push_back(c);
        }
    return out;
}

std::vector<SpectrumComparison> spectral_duality(const EigenSweep &s, double rel) {
    std::vector<SpectrumComparison> out;
    const int top = 2 * s.n;
    for (size_t j = 0; j < s.h.size(); ++j)
        for (int k = 0; k <= s.n; ++k) {
            const RVector &a = s.spectra[j][k];
            const RVector &b = s.spectra[j][top - k];
            SpectrumComparison c;
            c.h = s.h[j];
            c.k = k;
            if (a.size() != b.size()) {
                c.difference = INFINITY;
            } else {
                c.difference = a.size() ? (a - b).cwiseAbs().maxCoeff() : 0.0;
            }
            c.tolerance = rel * std::max(1.0, std::max(max_abs(a), max_abs(b)));
            c.pass = c.difference <= c.tolerance;
            out.push_back(c);
        }
    return out;
}

ResidualCheck conjugate_star_intertwines(const MetricOperators &o, double h) {
    RescaledOperators r = rescale(o, h);
    CMatrix j = o.star * conjugation_matrix(*o.basis);
    ResidualCheck c;
    c.name = "conjugate_star_intertwines";
    c.residual = (r.lap_h * j - j * r.lap_h.conjugate()).norm();
    c.tolerance = 1e-10 * std::max(1.0, r.lap_h.norm());
    c.pass = c.residual <= c.tolerance;
    return c;
}

std::vector<ResidualCheck> pure_type_energy_identities(const MetricOperators &o, const HarmonicTower &tower, double h,
                                                       std::uint64_t seed) {
    const ExteriorBasis &b = *o.basis;
    const int n = o.n;
    RescaledOperators r = rescale(o, h);
    const RVector &w = r.weights;
    auto norm_h = [&](const CVector &v) { return (v.adjoint() * w.cast<cplx>().asDiagonal() * v)(0, 0).real(); };
    auto sq = [](const CVector &v) { return v.squaredNorm(); };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;

    ResidualCheck form{"rescaled_quadratic_form", 0, 1e-12, true};
    ResidualCheck energy{"omega_h_energy", 0, 1e-12, true};
    ResidualCheck pure{"pure_type_expansion", 0, 1e-12, true};
    ResidualCheck dsplit{"differential_splitting", 0, 1e-12, true};
    ResidualCheck dstar_split{"codifferential_splitting", 0, 1e-12, true};
    auto record = [](ResidualCheck &c, double lhs, double rhs) {
        c.residual = std::max(c.residual, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    };

    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            CVector u = CVector::Zero(b.size());
            for (int i = 0; i < b.bidegree_dim(p, q); ++i)
                u(b.bidegree_offset(p, q) + i) = cplx(normal(rng), normal(rng));
            double factor = std::pow(h, 2 * (n - p));
            double lhs = (u.adjoint() * r.lap_h * u)(0, 0).real();
            CVector lap_u = r.lap_omega_h * u;
            double mid = factor * (u.adjoint() * w.cast<cplx>().asDiagonal() * lap_u)(0, 0).real();
            CVector du = o.d * u;
            CVector dsu = r.d_star_omega_h * u;
            double right = factor * (norm_h(du) + norm_h(dsu));
            record(form, lhs, mid);
            record(energy, mid, right);
            double expansion = h * h * (u.adjoint() * o.lap_del * u)(0, 0).real() +
                               (u.adjoint() * o.lap_dbar * u)(0, 0).real();
            record(pure, lhs, expansion);

            // components of du in (p+s, q-s+1) and of d^*u in (p-s, q+s-1)
            double split = 0, split_star = 0;
            CVector dsu_plain = o.d_star * u;
            for (int s = 0; s <= 1; ++s) {
                auto part = [&](const CVector &v, int tp, int tq) {
                    if (tp < 0 || tq < 0 || tp > n || tq > n) return 0.0;
                    return sq(v.segment(b.bidegree_offset(tp, tq), b.bidegree_dim(tp, tq)));
                };
                split += std::pow(h, 2 * s) * part(du, p + s, q - s + 1);
                split_star += std::pow(h, 2 * s) * part(dsu_plain, p - s, q + s - 1);
            }
            record(dsplit, factor * norm_h(du), split);
            record(dstar_split, factor * norm_h(dsu), split_star);
        }

    ResidualCheck adjoint{"page_adjoint_scaling", 0, 1e-12, true};
    for (int level = 1; level <= tower.max_page(); ++level) {
        const TowerLevel &lv = tower.level(level);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                int tp = p + level, tq = q - level + 1;
                if (tp > n || tq < 0 || tq > n) continue;
                const CMatrix &dr = lv.d[p * (n + 1) + q];
                if (dr.size() == 0) continue;
                const CMatrix &fs = lv.frames[p * (n + 1) + q];
                const CMatrix &ft = lv.frames[tp * (n + 1) + tq];
                RVector ws = w.segment(b.bidegree_offset(p, q), b.bidegree_dim(p, q));
                RVector wt = w.segment(b.bidegree_offset(tp, tq), b.bidegree_dim(tp, tq));
                CMatrix gs = fs.adjoint() * ws.cast<cplx>().asDiagonal() * fs;
                CMatrix gt = ft.adjoint() * wt.cast<cplx>().asDiagonal() * ft;
                CMatrix adj_h = gs.inverse() * dr.adjoint() * gt;
                CMatrix expected = std::pow(h, 2 * level) * dr.adjoint();
                adjoint.residual = std::max(adjoint.residual, (adj_h - expected).norm() / std::max(1.0, dr.norm()));
            }
    }

    std::vector<ResidualCheck> out{form, energy, pure, dsplit, dstar_split, adjoint};
    for (auto &c : out) c.pass = c.residual <= c.tolerance;
    return out;
}

}  // namespace frolicher
