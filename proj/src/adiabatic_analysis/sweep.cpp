#include "frolicher/adiabatic.hpp"

#include "frolicher/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace frolicher {

std::vector<double> geometric_grid(int j_max) {
    if (j_max < 0) throw ConfigurationError("grid depth must be non-negative");
    std::vector<double> g;
    for (int j = 0; j <= j_max; ++j) g.push_back(std::ldexp(1.0, -j));
    return g;
}

std::vector<int> degree_ranks(const MetricOperators &o) {
    const ExteriorBasis &b = *o.basis;
    std::vector<int> rank(2 * o.n + 1, 0);
    for (int k = 0; k < 2 * o.n; ++k) rank[k] = numerical_rank(degree_block(b, o.d, k), o.scale);
    return rank;
}

RVector rescaled_spectrum(const MetricOperators &o, const std::vector<int> &rank, double h, int k, bool *resolved) {
    const ExteriorBasis &b = *o.basis;
    const int top = 2 * o.n;
    const int dim = b.degree_dim(k);
    RVector out_sv, in_sv;
    if (k < top) out_sv = singular_values(h * degree_block(b, o.del, k) + degree_block(b, o.dbar, k));
    if (k > 0) in_sv = singular_values(h * degree_block(b, o.del, k - 1) + degree_block(b, o.dbar, k - 1));
    int r_out = k < top ? rank[k] : 0;
    int r_in = k > 0 ? rank[k - 1] : 0;

    std::vector<double> vals(dim - r_out - r_in, 0.0);
    double smax = 0, smin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < r_out; ++i) {
        vals.push_back(out_sv(i) * out_sv(i));
        smax = std::max(smax, out_sv(i));
        smin = std::min(smin, out_sv(i));
    }
    for (int i = 0; i < r_in; ++i) {
        vals.push_back(in_sv(i) * in_sv(i));
        smax = std::max(smax, in_sv(i));
        smin = std::min(smin, in_sv(i));
    }
    if (resolved) {
        const double eps = std::numeric_limits<double>::epsilon();
        *resolved = (r_out + r_in == 0) || smin >= kFloorFactor * eps * smax;
    }
    if (int(vals.size()) != dim) throw NumericError("rank bookkeeping failed in degree " + std::to_string(k));
    std::sort(vals.begin(), vals.end());
    return Eigen::Map<RVector>(vals.data(), dim);
}

namespace {

EigenSweep prepare(const MetricOperators &o, const std::vector<double> &grid) {
    EigenSweep s;
    s.n = o.n;
    s.h = grid;
    s.rank = degree_ranks(o);
    const ExteriorBasis &b = *o.basis;
    for (int k = 0; k <= 2 * o.n; ++k)
        s.kernel.push_back(b.degree_dim(k) - s.rank[k] - (k > 0 ? s.rank[k - 1] : 0));
    s.spectra.assign(grid.size(), std::vector<RVector>(2 * o.n + 1));
    s.resolved.assign(grid.size(), std::vector<bool>(2 * o.n + 1, false));
    return s;
}

void fill(const MetricOperators &o, EigenSweep &s, int cell) {
    const int degrees = 2 * s.n + 1;
    int j = cell / degrees, k = cell % degrees;
    bool ok = false;
    s.spectra[j][k] = rescaled_spectrum(o, s.rank, s.h[j], k, &ok);
    s.resolved[j][k] = ok;
}

}  // namespace

EigenSweep sweep_serial(const MetricOperators &o, const std::vector<double> &grid) {
    EigenSweep s = prepare(o, grid);
    const int cells = int(grid.size()) * (2 * o.n + 1);
    for (int c = 0; c < cells; ++c) fill(o, s, c);
    return s;
}

EigenSweep sweep_parallel(const MetricOperators &o, const std::vector<double> &grid) {
    EigenSweep s = prepare(o, grid);
    const int cells = int(grid.size()) * (2 * o.n + 1);
    // vector<bool> packs bits, so collect flags separately
    std::vector<char> flags(cells, 0);
    std::vector<RVector> spectra(cells);
    std::string failure;
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < cells; ++c) {
        const int degrees = 2 * s.n + 1;
        int j = c / degrees, k = c % degrees;
        try {
            bool ok = false;
            spectra[c] = rescaled_spectrum(o, s.rank, s.h[j], k, &ok);
            flags[c] = ok;
        } catch (const std::exception &e) {
#pragma omp critical
            failure = e.what();
        }
    }
    if (!failure.empty()) throw NumericError(failure);
    const int degrees = 2 * s.n + 1;
    for (int c = 0; c < cells; ++c) {
        s.spectra[c / degrees][c % degrees] = spectra[c];
        s.resolved[c / degrees][c % degrees] = flags[c] != 0;
    }
    return s;
}

RVector omega_h_spectrum(const MetricOperators &o, double h, int k) {
    RescaledOperators r = rescale(o, h);
    const ExteriorBasis &b = *o.basis;
    // W is diagonal, so (W L, W) reduces to the Hermitian S L S^{-1}, S = W^{1/2}.
    RVector s = r.weights.cwiseSqrt();
    CMatrix sym = s.cast<cplx>().asDiagonal() * r.lap_omega_h * s.cwiseInverse().cast<cplx>().asDiagonal();
    CMatrix part = degree_part(b, sym, k);
    if (hermitian_residual(part) > 1e-8 * std::max(1.0, part.norm()))
        throw NumericError("omega_h Laplacian is not self-adjoint at h=" + std::to_string(h));
    return hermitian_eigenvalues(part);
}

}  // namespace frolicher
