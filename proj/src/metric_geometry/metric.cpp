#include "frolicher/metric.hpp"

#include "frolicher/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace frolicher {

HermitianMetric HermitianMetric::identity(int n) {
    return from_exact(ExactMatrix::Identity(n));
}

HermitianMetric HermitianMetric::from_exact(const ExactMatrix &g) {
    HermitianMetric m;
    m.gram = to_complex(g);
    m.exact = g;
    return m;
}

HermitianMetric HermitianMetric::random(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = normal(rng);
            double im = normal(rng);
            a(i, j) = cplx(re, im);
        }
    HermitianMetric m;
    m.gram = a * a.adjoint() + double(n) * CMatrix::Identity(n, n);
    m.gram = 0.5 * (m.gram + m.gram.adjoint());
    return m;
}

void HermitianMetric::validate() const {
    if (gram.rows() != gram.cols() || gram.rows() == 0) throw MetricError("metric must be a non-empty square matrix", 0.0);
    double scale = std::max(1.0, gram.norm());
    if (hermitian_residual(gram) > 1e-12 * scale) throw MetricError("metric is not Hermitian", 0.0);
    double smallest = min_eigenvalue(gram);
    if (!(smallest > 1e-14 * scale))
        throw MetricError("metric is not positive definite (smallest eigenvalue " + std::to_string(smallest) + ")",
                          smallest);
}

namespace {

// Right wedge of v by a 1-form x (coordinates indexed by generator bit).
CVector wedge_one_form(const ExteriorBasis &b, const CVector &v, const std::vector<std::pair<Mask, cplx>> &x) {
    CVector out = CVector::Zero(b.size());
    for (int t = 0; t < b.size(); ++t) {
        if (v(t) == cplx(0.0)) continue;
        for (const auto &[g, c] : x) {
            int sign = wedge_sign(b.mask(t), g);
            if (sign) out(b.index_of(b.mask(t) | g)) += double(sign) * v(t) * c;
        }
    }
    return out;
}

cplx det_of(const CMatrix &m) { return m.size() == 0 ? cplx(1.0) : m.determinant(); }

std::vector<int> bits_of(Mask m, int shift, int n) {
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (m & (Mask(1) << (a + shift))) out.push_back(a);
    return out;
}

CMatrix minor_of(const CMatrix &g, const std::vector<int> &rows, const std::vector<int> &cols) {
    CMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = g(rows[i], cols[j]);
    return m;
}

}  // namespace

OrthonormalModel orthonormalize(const InvariantComplexStructure &s, const HermitianMetric &g) {
    s.validate_shape();
    if (g.n() != s.n)
        throw ConfigurationError("metric size " + std::to_string(g.n()) + " does not match model dimension " +
                                 std::to_string(s.n));
    g.validate();
    const int n = s.n;
    Eigen::LLT<CMatrix> llt(g.gram);
    if (llt.info() != Eigen::Success) throw MetricError("Cholesky factorization failed", min_eigenvalue(g.gram));
    CMatrix lower = llt.matrixL();
    CMatrix coframe = lower.inverse();

    // del eta^a = sum_i C_ai del eps^i, expanded through eps^j = sum_b L_jb eta^b.
    std::vector<CMatrix> a_new(n, CMatrix::Zero(n, n)), b_new(n, CMatrix::Zero(n, n));
    for (int a = 0; a < n; ++a) {
        for (const auto &t : s.partial) {
            cplx f = coframe(a, t.i) * t.coef.value;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) a_new[a](p, q) += f * lower(t.j, p) * lower(t.k, q);
        }
        for (const auto &t : s.dbar) {
            cplx f = coframe(a, t.i) * t.coef.value;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) b_new[a](p, q) += f * lower(t.j, p) * std::conj(lower(t.k, q));
        }
    }
    InvariantComplexStructure eta{s.name, n, {}, {}};
    for (int a = 0; a < n; ++a) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                cplx c = a_new[a](p, q) - a_new[a](q, p);
                if (c != cplx(0.0)) eta.partial.push_back({a, p, q, Coefficient(c)});
            }
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (b_new[a](p, q) != cplx(0.0)) eta.dbar.push_back({a, p, q, Coefficient(b_new[a](p, q))});
    }
    OrthonormalModel out{eta, build_complex(eta), g, lower, coframe};
    return out;
}

CMatrix coframe_change_operator(const ExteriorBasis &b, const CMatrix &lower) {
    const int n = b.n();
    std::vector<std::vector<std::pair<Mask, cplx>>> images(2 * n);
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < n; ++c) {
            if (lower(j, c) == cplx(0.0)) continue;
            images[j].push_back({b.unbarred(c), lower(j, c)});
            images[n + j].push_back({b.barred(c), std::conj(lower(j, c))});
        }
    CMatrix m = CMatrix::Zero(b.size(), b.size());
    for (int col = 0; col < b.size(); ++col) {
        CVector v = CVector::Zero(b.size());
        v(0) = 1.0;
        for (Mask rest = b.mask(col); rest; rest &= rest - 1) v = wedge_one_form(b, v, images[std::countr_zero(rest)]);
        m.col(col) = v;
    }
    return m;
}

CMatrix induced_gram(const ExteriorBasis &b, const CMatrix &g) {
    const int n = b.n();
    CMatrix gc = g.conjugate();
    CMatrix out = CMatrix::Zero(b.size(), b.size());
    for (int s = 0; s < b.size(); ++s)
        for (int t = 0; t < b.size(); ++t) {
            if (b.bidegree(s) != b.bidegree(t)) continue;
            Mask ms = b.mask(s), mt = b.mask(t);
            out(t, s) = det_of(minor_of(g, bits_of(ms, 0, n), bits_of(mt, 0, n))) *
                        det_of(minor_of(gc, bits_of(ms, n, n), bits_of(mt, n, n)));
        }
    return out;
}

CVector fundamental_form(const ExteriorBasis &b) {
    CVector w = CVector::Zero(b.size());
    for (int a = 0; a < b.n(); ++a) w(b.index_of(b.unbarred(a) | b.barred(a))) = cplx(0.0, 1.0);
    return w;
}

CMatrix lefschetz_operator(const ExteriorBasis &b) { return wedge_operator(b, fundamental_form(b)); }

CMatrix dual_lefschetz_operator(const ExteriorBasis &b) { return lefschetz_operator(b).adjoint(); }

CMatrix hodge_star(const ExteriorBasis &b) {
    const int n = b.n();
    const Mask full = (Mask(1) << (2 * n)) - 1;
    // omega^n / n! = i^n (-1)^{n(n-1)/2} e_full
    cplx vol = std::pow(cplx(0.0, 1.0), n) * (((n * (n - 1) / 2) & 1) ? -1.0 : 1.0);
    CMatrix star = CMatrix::Zero(b.size(), b.size());
    for (int col = 0; col < b.size(); ++col) {
        Mask t = b.mask(col);
        Bidegree bd = b.bidegree_of(t);
        double s = ((bd.p * bd.q) & 1) ? -1.0 : 1.0;
        Mask st = b.swap_bars(t);
        Mask rest = full & ~st;
        star(b.index_of(rest), col) = vol * s * double(wedge_sign(st, rest));
    }
    return star;
}

RVector rescaled_weights(const ExteriorBasis &b, double h) {
    RVector w(b.size());
    for (int i = 0; i < b.size(); ++i) w(i) = std::pow(h, -2.0 * (b.n() - b.bidegree(i).p));
    return w;
}

RVector theta_weights(const ExteriorBasis &b, double h) {
    RVector w(b.size());
    for (int i = 0; i < b.size(); ++i) w(i) = std::pow(h, b.bidegree(i).p);
    return w;
}

cplx rescaled_inner(const ExteriorBasis &b, const CVector &u, const CVector &v, double h) {
    RVector w = rescaled_weights(b, h);
    cplx acc = 0.0;
    for (int i = 0; i < b.size(); ++i) acc += w(i) * u(i) * std::conj(v(i));
    return acc;
}

ExactMatrix exact_inverse(const ExactMatrix &m) {
    const int n = m.rows();
    if (m.cols() != n) throw NumericError("exact_inverse: matrix not square");
    ExactMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> pivots = row_reduce(aug);
    if (int(pivots.size()) < n || pivots[n - 1] != n - 1) throw NumericError("exact_inverse: singular matrix");
    return aug.block(0, n, n, n);
}

SktCheck check_skt(const InvariantComplexStructure &s, const HermitianMetric &g, double tol) {
    SktCheck out;
    if (s.is_exact() && g.exact) {
        ExactComplex c = build_exact_complex(s);
        const ExteriorBasis &b = *c.basis;
        ExactMatrix ginv = exact_inverse(*g.exact);
        // omega = i sum_ij (g^{-1})_ji eps^i ^ epsbar^j
        ExactMatrix w(b.size(), 1);
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < s.n; ++j) w(b.index_of(b.unbarred(i) | b.barred(j)), 0) = kImaginaryUnit * ginv(j, i);
        ExactMatrix ddbar = c.del * (c.dbar * w);
        out.exact = true;
        out.skt = ddbar.is_zero();
        out.residual = to_complex(ddbar).norm();
        return out;
    }
    OrthonormalModel m = orthonormalize(s, g);
    const ExteriorBasis &b = *m.complex.basis;
    CVector ddbar = m.complex.del * (m.complex.dbar * fundamental_form(b));
    out.residual = ddbar.norm();
    double scale = std::max(1.0, m.complex.del.norm() * m.complex.dbar.norm());
    out.skt = out.residual <= tol * scale;
    return out;
}

}  // namespace frolicher
