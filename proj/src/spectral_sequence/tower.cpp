#include "frolicher/tower.hpp"

#include "frolicher/errors.hpp"

#include <algorithm>

namespace frolicher {

int HarmonicTower::dim(int r, int p, int q) const {
    if (p < 0 || q < 0 || p > n || q > n) return 0;
    return int(level(std::min(r, max_page())).frames[p * (n + 1) + q].cols());
}

int HarmonicTower::total(int r, int k) const {
    int s = 0;
    for (int p = 0; p <= k; ++p) s += dim(r, p, k - p);
    return s;
}

namespace {

bool in_range(int n, int p, int q) { return p >= 0 && q >= 0 && p <= n && q <= n; }

CMatrix block_of(const MetricOperators &o, const CMatrix &op, int p, int q, int a, int b) {
    const ExteriorBasis &bs = *o.basis;
    int n = bs.n();
    int rows = in_range(n, p + a, q + b) ? bs.bidegree_dim(p + a, q + b) : 0;
    int cols = in_range(n, p, q) ? bs.bidegree_dim(p, q) : 0;
    if (rows == 0 || cols == 0) return CMatrix::Zero(rows, cols);
    return op.block(bs.bidegree_offset(p + a, q + b), bs.bidegree_offset(p, q), rows, cols);
}

int bdim(const ExteriorBasis &b, int p, int q) { return in_range(b.n(), p, q) ? b.bidegree_dim(p, q) : 0; }

}  // namespace

int HarmonicTower::rank(int r, int p, int q) const {
    if (!in_range(n, p, q)) return 0;
    const CMatrix &d = level(r).d[p * (n + 1) + q];
    return numerical_rank(d, 1.0);
}

std::vector<CMatrix> zigzag_chain(const MetricOperators &o, int p, int q, const CMatrix &alpha, int length,
                                  double &residual) {
    const ExteriorBasis &b = *o.basis;
    residual = 0;
    std::vector<CMatrix> u;
    if (length <= 0) return u;
    std::vector<int> var_off, eq_off;
    int ncols = 0, nrows = 0;
    for (int j = 1; j <= length; ++j) {
        var_off.push_back(ncols);
        ncols += bdim(b, p + j, q - j);
        eq_off.push_back(nrows);
        nrows += bdim(b, p + j, q - j + 1);
    }
    CMatrix k = CMatrix::Zero(nrows, ncols);
    CMatrix rhs = CMatrix::Zero(nrows, alpha.cols());
    auto place = [](CMatrix &m, int r0, int c0, const CMatrix &blk) {
        if (blk.size()) m.block(r0, c0, blk.rows(), blk.cols()) = blk;
    };
    for (int j = 1; j <= length; ++j) {
        place(k, eq_off[j - 1], var_off[j - 1], block_of(o, o.dbar, p + j, q - j, 0, 1));
        if (j >= 2) place(k, eq_off[j - 1], var_off[j - 2], -block_of(o, o.del, p + j - 1, q - j + 1, 1, 0));
    }
    place(rhs, eq_off[0], 0, CMatrix(block_of(o, o.del, p, q, 1, 0) * alpha));
    CMatrix sol = pseudo_inverse(k, o.scale) * rhs;
    if (nrows) residual = (k * sol - rhs).norm();
    for (int j = 1; j <= length; ++j) u.push_back(sol.block(var_off[j - 1], 0, bdim(b, p + j, q - j), alpha.cols()));
    return u;
}

HarmonicTower harmonic_tower(const MetricOperators &o, int max_page) {
    const ExteriorBasis &b = *o.basis;
    const int n = b.n();
    const int cells = (n + 1) * (n + 1);
    HarmonicTower t;
    t.n = n;

    TowerLevel first;
    first.r = 1;
    first.frames.resize(cells);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            CMatrix stacked = vstack(block_of(o, o.dbar, p, q, 0, 1), block_of(o, o.dbar_star, p, q, 0, -1));
            if (stacked.rows() == 0)
                first.frames[p * (n + 1) + q] = CMatrix::Identity(b.bidegree_dim(p, q), b.bidegree_dim(p, q));
            else
                first.frames[p * (n + 1) + q] = null_space(stacked, o.scale);
        }
    t.levels.push_back(first);

    for (int r = 1; r <= max_page; ++r) {
        TowerLevel &lv = t.levels.back();
        lv.d.assign(cells, CMatrix());
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                const CMatrix &frame = lv.frames[p * (n + 1) + q];
                int tp = p + r, tq = q - r + 1;
                if (!in_range(n, tp, tq) || frame.cols() == 0) {
                    int rows = in_range(n, tp, tq) ? int(lv.frames[tp * (n + 1) + tq].cols()) : 0;
                    lv.d[p * (n + 1) + q] = CMatrix::Zero(rows, frame.cols());
                    continue;
                }
                double residual = 0;
                CMatrix image;
                if (r == 1) {
                    image = block_of(o, o.del, p, q, 1, 0) * frame;
                } else {
                    auto u = zigzag_chain(o, p, q, frame, r - 1, residual);
                    image = block_of(o, o.del, p + r - 1, q - r + 1, 1, 0) * u.back();
                }
                lv.chain_residual = std::max(lv.chain_residual, residual);
                lv.d[p * (n + 1) + q] = lv.frames[tp * (n + 1) + tq].adjoint() * image;
            }
        if (lv.chain_residual > 1e-8 * o.scale)
            throw InconsistencyError("zig-zag chain does not extend at page " + std::to_string(r));
        if (r == max_page) break;

        TowerLevel next;
        next.r = r + 1;
        next.frames.resize(cells);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                const CMatrix &frame = lv.frames[p * (n + 1) + q];
                CMatrix out = lv.d[p * (n + 1) + q];
                int sp = p - r, sq = q + r - 1;
                CMatrix in_adj = in_range(n, sp, sq) ? CMatrix(lv.d[sp * (n + 1) + sq].adjoint())
                                                      : CMatrix::Zero(0, frame.cols());
                CMatrix stacked = vstack(out.rows() ? out : CMatrix::Zero(0, frame.cols()),
                                         in_adj.rows() ? in_adj : CMatrix::Zero(0, frame.cols()));
                CMatrix coords = stacked.rows() ? null_space(stacked, o.scale)
                                                : CMatrix(CMatrix::Identity(frame.cols(), frame.cols()));
                next.frames[p * (n + 1) + q] = frame.cols() ? CMatrix(frame * coords) : frame;
            }
        t.levels.push_back(next);
    }
    return t;
}

int formal_laplacian_kernel(const HarmonicTower &t, int r, int k, double scale) {
    const int n = t.n;
    const TowerLevel &lv = t.level(r);
    auto offsets = [&](int deg, std::vector<int> &off) {
        int total = 0;
        off.assign(n + 1, -1);
        for (int p = 0; p <= n; ++p) {
            int q = deg - p;
            if (!in_range(n, p, q)) continue;
            off[p] = total;
            total += int(lv.frames[p * (n + 1) + q].cols());
        }
        return total;
    };
    // D_r assembled from degree deg to deg + 1.
    auto assemble = [&](int deg) {
        std::vector<int> src, tgt;
        int cols = offsets(deg, src);
        int rows = offsets(deg + 1, tgt);
        CMatrix m = CMatrix::Zero(rows, cols);
        for (int p = 0; p <= n; ++p) {
            int q = deg - p;
            if (!in_range(n, p, q) || !in_range(n, p + r, q - r + 1)) continue;
            const CMatrix &blk = lv.d[p * (n + 1) + q];
            if (blk.size()) m.block(tgt[p + r], src[p], blk.rows(), blk.cols()) = blk;
        }
        return m;
    };
    std::vector<int> tmp;
    int dim = offsets(k, tmp);
    if (dim == 0) return 0;
    CMatrix out = (k + 1 <= 2 * n) ? assemble(k) : CMatrix::Zero(0, dim);
    CMatrix in = (k - 1 >= 0) ? assemble(k - 1) : CMatrix::Zero(dim, 0);
    CMatrix lap = CMatrix::Zero(dim, dim);
    if (out.rows()) lap += out.adjoint() * out;
    if (in.cols()) lap += in * in.adjoint();
    RVector ev = hermitian_eigenvalues(lap);
    double cut = dim * std::max(scale * scale, ev.size() ? ev(ev.size() - 1) : 0.0) * 1e-10;
    int kernel = 0;
    for (int i = 0; i < ev.size(); ++i)
        if (ev(i) <= cut) ++kernel;
    return kernel;
}

double filtration_inclusion_residual(const MetricOperators &o, const HarmonicTower &t, int r) {
    const ExteriorBasis &b = *o.basis;
    const int n = b.n();
    double worst = 0;
    for (int l = r; l <= t.max_page(); ++l) {
        const TowerLevel &lv = t.level(l);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                const CMatrix &frame = lv.frames[p * (n + 1) + q];
                if (frame.cols() == 0) continue;
                double residual = 0;
                auto u = zigzag_chain(o, p, q, frame, l - 1, residual);
                CMatrix full = CMatrix::Zero(b.size(), frame.cols());
                full.block(b.bidegree_offset(p, q), 0, frame.rows(), frame.cols()) = frame;
                for (int j = 1; j <= l - 1; ++j) {
                    if (!in_range(n, p + j, q - j) || u[j - 1].rows() == 0) continue;
                    double sign = (j % 2) ? -1.0 : 1.0;
                    full.block(b.bidegree_offset(p + j, q - j), 0, u[j - 1].rows(), frame.cols()) += sign * u[j - 1];
                }
                CMatrix image = o.d * full;
                // components of d a~ with filtration index below p + r
                for (int row = 0; row < b.size(); ++row)
                    if (b.bidegree(row).p < p + r) worst = std::max(worst, image.row(row).norm());
            }
    }
    return worst;
}

}  // namespace frolicher
