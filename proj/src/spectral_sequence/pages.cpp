#include "frolicher/pages.hpp"

#include "frolicher/errors.hpp"

#include <algorithm>

namespace frolicher {

int PageTable::dim(int r, int p, int q) const {
    if (p < 0 || q < 0 || p > n || q > n) return 0;
    r = std::min(r, max_page);
    return dims.at(r)[p * (n + 1) + q];
}

int PageTable::total(int r, int k) const {
    int s = 0;
    for (int p = 0; p <= k; ++p) s += dim(r, p, k - p);
    return s;
}

int PageTable::rank(int r, int p, int q) const {
    if (p < 0 || q < 0 || p > n || q > n || r < 1 || r >= int(d_rank.size())) return 0;
    return d_rank[r][p * (n + 1) + q];
}

int PageTable::m(int r, int k) const {
    int s = 0;
    for (int l = std::max(r, 1); l < int(d_rank.size()); ++l)
        for (int p = 0; p <= k; ++p) s += rank(l, p, k - p);
    return s;
}

int default_max_page(int n) { return std::max(n + 2, 4); }

namespace {

template <class Ops>
struct Context {
    Ops ops;
    const ExteriorBasis &b;
    typename Ops::Matrix del, dbar, d;
};

// Index inside the total-degree-k block where F^p A^k starts.
int filtration_start(const ExteriorBasis &b, int k, int p) {
    int n = b.n();
    if (k < 0 || k > 2 * n) return 0;
    int lo = std::max(0, k - n), hi = std::min(k, n);
    if (p <= lo) return 0;
    if (p > hi) return b.degree_dim(k);
    return b.bidegree_offset(p, k - p) - b.degree_offset(k);
}

template <class Ops>
typename Ops::Matrix degree_op(const Context<Ops> &c, int k) {
    // d from degree k to k + 1; empty when either side is out of range
    int n = c.b.n();
    int rows = (k + 1 >= 0 && k + 1 <= 2 * n) ? c.b.degree_dim(k + 1) : 0;
    int cols = (k >= 0 && k <= 2 * n) ? c.b.degree_dim(k) : 0;
    if (rows == 0 || cols == 0) return Ops::zero(rows, cols);
    return Ops::block(c.d, c.b.degree_offset(k + 1), c.b.degree_offset(k), rows, cols);
}

// Basis (columns, in degree-k coordinates) of Z_r^p = {x in F^p A^k : dx in F^{p+r}}.
template <class Ops>
typename Ops::Matrix cycles(const Context<Ops> &c, int k, int p, int r) {
    int n = c.b.n();
    if (k < 0 || k > 2 * n) return Ops::zero(0, 0);
    int dim = c.b.degree_dim(k);
    int start = filtration_start(c.b, k, p);
    int count = dim - start;
    if (count == 0) return Ops::zero(dim, 0);
    typename Ops::Matrix kernel;
    if (k + 1 > 2 * n || r <= 0) {
        kernel = Ops::zero(count, count);
        for (int i = 0; i < count; ++i) kernel(i, i) = 1;
    } else {
        int row0 = filtration_start(c.b, k + 1, p);
        int row1 = filtration_start(c.b, k + 1, p + r);
        typename Ops::Matrix d = degree_op(c, k);
        typename Ops::Matrix constraint = Ops::block(d, row0, start, row1 - row0, count);
        kernel = c.ops.null_space(constraint);
    }
    typename Ops::Matrix out = Ops::zero(dim, kernel.cols());
    Ops::place(out, start, 0, kernel);
    return out;
}

template <class Ops>
int filtration_dim(const Context<Ops> &c, int p, int q, int r) {
    if (r == 0) return c.b.bidegree_dim(p, q);
    int k = p + q;
    auto z = cycles(c, k, p, r);
    auto lower = cycles(c, k, p + 1, r - 1);
    typename Ops::Matrix boundaries = Ops::zero(z.rows(), 0);
    if (k - 1 >= 0) {
        auto src = cycles(c, k - 1, p - r + 1, r - 1);
        boundaries = Ops::product(degree_op(c, k - 1), src);
    }
    return int(z.cols()) - c.ops.rank(Ops::hstack(lower, boundaries));
}

// ---- zig-zag method -------------------------------------------------------

struct Slot {
    Bidegree bd;
    int offset;
    int dim;
};

template <class Ops>
typename Ops::Matrix bidegree_op(const Context<Ops> &c, const typename Ops::Matrix &op, Bidegree src, int a, int bs) {
    int n = c.b.n();
    auto valid = [&](Bidegree x) { return x.p >= 0 && x.q >= 0 && x.p <= n && x.q <= n; };
    Bidegree tgt{src.p + a, src.q + bs};
    int rows = valid(tgt) ? c.b.bidegree_dim(tgt.p, tgt.q) : 0;
    int cols = valid(src) ? c.b.bidegree_dim(src.p, src.q) : 0;
    if (rows == 0 || cols == 0) return Ops::zero(rows, cols);
    return Ops::block(op, c.b.bidegree_offset(tgt.p, tgt.q), c.b.bidegree_offset(src.p, src.q), rows, cols);
}

template <class Ops>
std::vector<Slot> layout(const Context<Ops> &c, const std::vector<Bidegree> &bds, int &total) {
    std::vector<Slot> out;
    total = 0;
    for (Bidegree bd : bds) {
        int dim = c.b.bidegree_dim(bd.p, bd.q);
        out.push_back({bd, total, dim});
        total += dim;
    }
    return out;
}

// Columns spanning the alpha-components of solutions of
//   dbar a = 0, del a = dbar u_1, del u_1 = dbar u_2, ..., del u_{r-2} = dbar u_{r-1}.
template <class Ops>
typename Ops::Matrix forward_chains(const Context<Ops> &c, int p, int q, int r) {
    std::vector<Bidegree> vars, eqs;
    for (int j = 0; j < r; ++j) vars.push_back({p + j, q - j});
    eqs.push_back({p, q + 1});
    for (int j = 1; j < r; ++j) eqs.push_back({p + j, q - j + 1});
    int ncols = 0, nrows = 0;
    auto var = layout(c, vars, ncols);
    auto eq = layout(c, eqs, nrows);
    typename Ops::Matrix system = Ops::zero(nrows, ncols);
    Ops::place(system, eq[0].offset, var[0].offset, bidegree_op(c, c.dbar, vars[0], 0, 1));
    for (int j = 1; j < r; ++j) {
        Ops::place(system, eq[j].offset, var[j - 1].offset, bidegree_op(c, c.del, vars[j - 1], 1, 0));
        Ops::place(system, eq[j].offset, var[j].offset, Ops::negate(bidegree_op(c, c.dbar, vars[j], 0, 1)));
    }
    auto kernel = c.ops.null_space(system);
    return Ops::block(kernel, 0, 0, var[0].dim, kernel.cols());
}

// Columns spanning Y_r^{p,q}: dbar of (p, q-1) plus del of y_{p-1}, where
// y_{p-r+1}, ..., y_{p-1} satisfy dbar y_{first} = 0, del y_l + dbar y_{l+1} = 0.
template <class Ops>
typename Ops::Matrix backward_boundaries(const Context<Ops> &c, int p, int q, int r) {
    int dim = c.b.bidegree_dim(p, q);
    typename Ops::Matrix out = bidegree_op(c, c.dbar, {p, q - 1}, 0, 1);
    if (out.rows() != dim) out = Ops::zero(dim, 0);
    if (r < 2 || p - 1 < 0 || q > c.b.n()) return out;
    int k1 = p + q - 1;
    int first = std::max(0, p - r + 1);
    std::vector<Bidegree> vars, eqs;
    for (int l = first; l <= p - 1; ++l) vars.push_back({l, k1 - l});
    eqs.push_back({first, k1 - first + 1});
    for (int l = first; l <= p - 2; ++l) eqs.push_back({l + 1, k1 - l});
    int ncols = 0, nrows = 0;
    auto var = layout(c, vars, ncols);
    auto eq = layout(c, eqs, nrows);
    if (var.back().dim == 0) return out;
    typename Ops::Matrix system = Ops::zero(nrows, ncols);
    Ops::place(system, eq[0].offset, var[0].offset, bidegree_op(c, c.dbar, vars[0], 0, 1));
    for (std::size_t i = 1; i < eqs.size(); ++i) {
        Ops::place(system, eq[i].offset, var[i - 1].offset, bidegree_op(c, c.del, vars[i - 1], 1, 0));
        Ops::place(system, eq[i].offset, var[i].offset, bidegree_op(c, c.dbar, vars[i], 0, 1));
    }
    auto kernel = c.ops.null_space(system);
    auto ends = Ops::block(kernel, var.back().offset, 0, var.back().dim, kernel.cols());
    auto image = Ops::product(bidegree_op(c, c.del, vars.back(), 1, 0), ends);
    return Ops::hstack(out, image);
}

template <class Ops>
int zigzag_dim(const Context<Ops> &c, int p, int q, int r) {
    if (r == 0) return c.b.bidegree_dim(p, q);
    auto x = forward_chains(c, p, q, r);
    auto y = backward_boundaries(c, p, q, r);
    return c.ops.rank(x) - c.ops.rank(y);
}

// Betti numbers, d_r ranks from the dimensions, degeneration page.
template <class Ops>
void finish(const Context<Ops> &c, PageTable &t) {
    const int n = t.n;
    t.betti.assign(2 * n + 1, 0);
    std::vector<int> rank_d(2 * n + 2, 0);
    for (int k = 0; k <= 2 * n; ++k) rank_d[k] = c.ops.rank(degree_op(c, k));
    for (int k = 0; k <= 2 * n; ++k) t.betti[k] = c.b.degree_dim(k) - rank_d[k] - (k > 0 ? rank_d[k - 1] : 0);

    t.d_rank.assign(t.max_page, std::vector<int>((n + 1) * (n + 1), 0));
    for (int r = 1; r < t.max_page; ++r) {
        // d_r runs along (p,q) -> (p+r, q-r+1); walk each chain from its start.
        for (int p0 = 0; p0 <= n; ++p0)
            for (int q0 = 0; q0 <= n; ++q0) {
                int pp = p0 - r, qq = q0 + r - 1;
                if (pp >= 0 && qq >= 0 && pp <= n && qq <= n) continue;  // not a chain start
                int incoming = 0;
                for (int p = p0, q = q0; p <= n && q >= 0 && q <= n; p += r, q -= r - 1) {
                    int out = t.dim(r, p, q) - t.dim(r + 1, p, q) - incoming;
                    bool last = p + r > n || q - r + 1 < 0 || q - r + 1 > n;
                    if (out < 0 || (last && out != 0))
                        throw InconsistencyError("page dimensions are not those of a spectral sequence at E_" +
                                                 std::to_string(r) + "^{" + std::to_string(p) + "," +
                                                 std::to_string(q) + "} (" + t.method + ")");
                    t.d_rank[r][p * (n + 1) + q] = out;
                    incoming = out;
                }
            }
    }
    t.degeneration_page = t.max_page;
    for (int r = 1; r <= t.max_page; ++r) {
        bool ok = true;
        for (int k = 0; k <= 2 * n; ++k) ok = ok && t.total(r, k) == t.betti[k];
        if (ok) {
            t.degeneration_page = r;
            break;
        }
    }
}

template <class Ops, class Dim>
PageTable build_table(const Context<Ops> &c, int max_page, const std::string &method, bool exact, Dim dim_of) {
    PageTable t;
    t.n = c.b.n();
    t.max_page = max_page < 0 ? default_max_page(t.n) : max_page;
    t.method = method;
    t.exact = exact;
    t.dims.assign(t.max_page + 1, std::vector<int>((t.n + 1) * (t.n + 1), 0));
    for (int r = 0; r <= t.max_page; ++r)
        for (int p = 0; p <= t.n; ++p)
            for (int q = 0; q <= t.n; ++q) t.dims[r][p * (t.n + 1) + q] = dim_of(c, p, q, r);
    finish(c, t);
    return t;
}

Context<ExactOps> exact_context(const ExactComplex &c) { return {ExactOps{}, *c.basis, c.del, c.dbar, c.d()}; }

Context<FloatOps> float_context(const FloatComplex &c) {
    FloatOps ops;
    ops.scale = std::max(1.0, c.del.norm() + c.dbar.norm());
    return {ops, *c.basis, c.del, c.dbar, c.d()};
}

}  // namespace

PageTable pages_by_filtration(const ExactComplex &c, int max_page) {
    return build_table(exact_context(c), max_page, "filtration", true, filtration_dim<ExactOps>);
}
PageTable pages_by_filtration(const FloatComplex &c, int max_page) {
    return build_table(float_context(c), max_page, "filtration", false, filtration_dim<FloatOps>);
}
PageTable pages_by_zigzag(const ExactComplex &c, int max_page) {
    return build_table(exact_context(c), max_page, "zigzag", true, zigzag_dim<ExactOps>);
}
PageTable pages_by_zigzag(const FloatComplex &c, int max_page) {
    return build_table(float_context(c), max_page, "zigzag", false, zigzag_dim<FloatOps>);
}

std::vector<StatisticCheck> page_statistics(const PageTable &t, bool serre_duality) {
    std::vector<StatisticCheck> out;
    const int n = t.n;
    {
        StatisticCheck c{"page_dimension_identity", true, ""};
        for (int r = 1; r <= t.max_page; ++r)
            for (int k = 0; k <= 2 * n; ++k) {
                int rhs = t.betti[k] + (k > 0 ? t.m(r, k - 1) : 0) + t.m(r, k);
                if (t.total(r, k) != rhs) {
                    c.pass = false;
                    c.detail = "r=" + std::to_string(r) + " k=" + std::to_string(k) + ": " +
                               std::to_string(t.total(r, k)) + " != " + std::to_string(rhs);
                }
            }
        out.push_back(c);
    }
    {
        StatisticCheck c{"euler_characteristic_constant", true, ""};
        auto chi = [&](int r) {
            int s = 0;
            for (int k = 0; k <= 2 * n; ++k) s += (k % 2 ? -1 : 1) * t.total(r, k);
            return s;
        };
        for (int r = 1; r <= t.max_page; ++r)
            if (chi(r) != chi(0)) {
                c.pass = false;
                c.detail = "chi(E_" + std::to_string(r) + ") = " + std::to_string(chi(r));
            }
        out.push_back(c);
    }
    {
        StatisticCheck c{"pages_decrease", true, ""};
        for (int r = 1; r <= t.max_page; ++r)
            for (int p = 0; p <= n; ++p)
                for (int q = 0; q <= n; ++q)
                    if (t.dim(r, p, q) > t.dim(r - 1, p, q)) c.pass = false;
        out.push_back(c);
    }
    {
        StatisticCheck c{"limit_page_is_betti", true, ""};
        for (int k = 0; k <= 2 * n; ++k)
            if (t.total(t.max_page, k) != t.betti[k]) c.pass = false;
        out.push_back(c);
    }
    if (serre_duality) {
        StatisticCheck c{"duality_symmetry", true, ""};
        for (int r = 1; r <= t.max_page; ++r)
            for (int p = 0; p <= n; ++p)
                for (int q = 0; q <= n; ++q)
                    if (t.dim(r, p, q) != t.dim(r, n - p, n - q)) {
                        c.pass = false;
                        c.detail = "r=" + std::to_string(r) + " (" + std::to_string(p) + "," + std::to_string(q) + ")";
                    }
        out.push_back(c);
        StatisticCheck pd{"total_degree_duality", true, ""};
        for (int r = 1; r <= t.max_page; ++r)
            for (int k = 0; k <= 2 * n; ++k)
                if (t.total(r, k) != t.total(r, 2 * n - k)) {
                    pd.pass = false;
                    pd.detail = "r=" + std::to_string(r) + " k=" + std::to_string(k);
                }
        out.push_back(pd);
    }
    return out;
}

}  // namespace frolicher
