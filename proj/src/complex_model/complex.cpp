#include "frolicher/complex.hpp"

#include "frolicher/errors.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace frolicher {

bool InvariantComplexStructure::is_exact() const {
    for (const auto &t : partial)
        if (!t.coef.exact) return false;
    for (const auto &t : dbar)
        if (!t.coef.exact) return false;
    return true;
}

void InvariantComplexStructure::validate_shape() const {
    if (n < 1 || n > kMaxDimension)
        throw ConfigurationError("complex dimension must be between 1 and " + std::to_string(kMaxDimension));
    auto in_range = [&](int x) { return x >= 0 && x < n; };
    for (const auto &t : partial) {
        if (!in_range(t.i) || !in_range(t.j) || !in_range(t.k))
            throw ModelInvalidError("partial term index out of range in model '" + name + "'");
        if (t.j >= t.k) throw ModelInvalidError("partial term needs j < k in model '" + name + "'");
    }
    for (const auto &t : dbar)
        if (!in_range(t.i) || !in_range(t.j) || !in_range(t.k))
            throw ModelInvalidError("dbar term index out of range in model '" + name + "'");
}

namespace {

template <class Scalar>
Scalar scalar_of(const Coefficient &c);
template <>
cplx scalar_of<cplx>(const Coefficient &c) {
    return c.value;
}
template <>
GaussianRational scalar_of<GaussianRational>(const Coefficient &c) {
    if (!c.exact) throw ConfigurationError("structure constant is not exact");
    return *c.exact;
}

cplx conj_of(const cplx &x) { return std::conj(x); }
GaussianRational conj_of(const GaussianRational &x) { return x.conj(); }

template <class Scalar>
using GeneratorImages = std::vector<std::vector<std::pair<Mask, Scalar>>>;

template <class Scalar>
void generator_images(const InvariantComplexStructure &s, GeneratorImages<Scalar> &del, GeneratorImages<Scalar> &dbar) {
    const int n = s.n;
    del.assign(2 * n, {});
    dbar.assign(2 * n, {});
    for (const auto &t : s.partial) {
        Scalar c = scalar_of<Scalar>(t.coef);
        del[t.i].push_back({(Mask(1) << t.j) | (Mask(1) << t.k), c});
        // dbar epsbar^i = conj(del eps^i)
        dbar[n + t.i].push_back({(Mask(1) << (n + t.j)) | (Mask(1) << (n + t.k)), conj_of(c)});
    }
    for (const auto &t : s.dbar) {
        Scalar c = scalar_of<Scalar>(t.coef);
        dbar[t.i].push_back({(Mask(1) << t.j) | (Mask(1) << (n + t.k)), c});
        // del epsbar^i = conj(dbar eps^i) = sum conj(c) epsbar^j ^ eps^k = -conj(c) eps^k ^ epsbar^j
        del[n + t.i].push_back({(Mask(1) << t.k) | (Mask(1) << (n + t.j)), -conj_of(c)});
    }
}

template <class Matrix, class Scalar>
Matrix derivation_matrix(const ExteriorBasis &b, const GeneratorImages<Scalar> &images) {
    Matrix m = Matrix::Zero(b.size(), b.size());
    for (int col = 0; col < b.size(); ++col) {
        Mask s = b.mask(col);
        int position = 0;
        for (Mask rest = s; rest; rest &= rest - 1, ++position) {
            int g = std::countr_zero(rest);
            Mask prefix = s & ((Mask(1) << g) - 1);
            Mask suffix = s & ~((Mask(1) << (g + 1)) - 1);
            int lead = (position & 1) ? -1 : 1;
            for (const auto &[t, coef] : images[g]) {
                if (t & (prefix | suffix)) continue;
                int sign = lead * wedge_sign(prefix, t) * wedge_sign(prefix | t, suffix);
                int row = b.index_of(prefix | t | suffix);
                if (sign > 0)
                    m(row, col) += coef;
                else
                    m(row, col) -= coef;
            }
        }
    }
    return m;
}

std::string generator_name(const ExteriorBasis &b, int bit) {
    return bit < b.n() ? "eps^" + std::to_string(bit + 1) : "epsbar^" + std::to_string(bit - b.n() + 1);
}

void report_failure(const ExteriorBasis &b, const std::string &model, const char *identity, int bit, int a, int c) {
    int p = bit < b.n() ? 1 : 0, q = 1 - p;
    auto pair = [](int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; };
    throw ModelInvalidError("model '" + model + "' violates " + identity + " on " + generator_name(b, bit) +
                            ", block " + pair(p, q) + "->" + pair(p + a, q + c));
}

template <class Matrix>
void check_generators(const std::string &model, const ExteriorBasis &b, const Matrix &del, const Matrix &dbar,
                      const auto &is_zero_col) {
    int off = b.degree_offset(1);
    int dim = b.degree_dim(1);
    Matrix del1 = del.block(0, off, b.size(), dim);
    Matrix dbar1 = dbar.block(0, off, b.size(), dim);
    Matrix dd = del * del1;
    Matrix bb = dbar * dbar1;
    Matrix mixed = del * dbar1 + dbar * del1;
    for (int j = 0; j < dim; ++j) {
        int bit = std::countr_zero(b.mask(off + j));
        if (!is_zero_col(dd, j)) report_failure(b, model, "del^2 = 0", bit, 2, 0);
        if (!is_zero_col(bb, j)) report_failure(b, model, "dbar^2 = 0", bit, 0, 2);
        if (!is_zero_col(mixed, j)) report_failure(b, model, "del dbar + dbar del = 0", bit, 1, 1);
    }
}

template <class Matrix>
Matrix block_impl(const ExteriorBasis &b, const Matrix &op, int k, int shift) {
    int top = 2 * b.n();
    if (k < 0 || k > top) throw LookupError("degree out of range");
    int t = k + shift;
    int rows = (t < 0 || t > top) ? 0 : b.degree_dim(t);
    if (rows == 0) return Matrix::Zero(0, b.degree_dim(k));
    return op.block(b.degree_offset(t), b.degree_offset(k), rows, b.degree_dim(k));
}

template <class Matrix>
Matrix bidegree_block_impl(const ExteriorBasis &b, const Matrix &op, Bidegree src, int a, int bs) {
    int n = b.n();
    if (src.p < 0 || src.q < 0 || src.p > n || src.q > n) throw LookupError("bidegree out of range");
    int tp = src.p + a, tq = src.q + bs;
    int cols = b.bidegree_dim(src.p, src.q);
    if (tp < 0 || tq < 0 || tp > n || tq > n) return Matrix::Zero(0, cols);
    return op.block(b.bidegree_offset(tp, tq), b.bidegree_offset(src.p, src.q), b.bidegree_dim(tp, tq), cols);
}

}  // namespace

FloatComplex build_complex(const InvariantComplexStructure &s) {
    s.validate_shape();
    auto basis = std::make_shared<const ExteriorBasis>(s.n);
    GeneratorImages<cplx> del, dbar;
    generator_images(s, del, dbar);
    FloatComplex c{basis, derivation_matrix<CMatrix>(*basis, del), derivation_matrix<CMatrix>(*basis, dbar)};
    double scale = std::max(1.0, c.del.norm() + c.dbar.norm());
    double tol = 1e-12 * scale * scale;
    check_generators(s.name, *basis, c.del, c.dbar, [&](const CMatrix &m, int j) { return m.col(j).norm() <= tol; });
    return c;
}

ExactComplex build_exact_complex(const InvariantComplexStructure &s) {
    s.validate_shape();
    if (!s.is_exact()) throw ConfigurationError("model '" + s.name + "' has inexact structure constants");
    auto basis = std::make_shared<const ExteriorBasis>(s.n);
    GeneratorImages<GaussianRational> del, dbar;
    generator_images(s, del, dbar);
    ExactComplex c{basis, derivation_matrix<ExactMatrix>(*basis, del), derivation_matrix<ExactMatrix>(*basis, dbar)};
    check_generators(s.name, *basis, c.del, c.dbar, [](const ExactMatrix &m, int j) {
        for (int i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
        return true;
    });
    return c;
}

CMatrix degree_block(const ExteriorBasis &b, const CMatrix &op, int k, int shift) {
    return block_impl(b, op, k, shift);
}
ExactMatrix degree_block(const ExteriorBasis &b, const ExactMatrix &op, int k, int shift) {
    return block_impl(b, op, k, shift);
}
CMatrix bidegree_block(const ExteriorBasis &b, const CMatrix &op, Bidegree src, int a, int bs) {
    return bidegree_block_impl(b, op, src, a, bs);
}
ExactMatrix bidegree_block(const ExteriorBasis &b, const ExactMatrix &op, Bidegree src, int a, int bs) {
    return bidegree_block_impl(b, op, src, a, bs);
}

CMatrix assemble_total(const FloatComplex &c, int k, double h) {
    return h * degree_block(*c.basis, c.del, k) + degree_block(*c.basis, c.dbar, k);
}

CMatrix conjugation_matrix(const ExteriorBasis &b) {
    CMatrix p = CMatrix::Zero(b.size(), b.size());
    for (int col = 0; col < b.size(); ++col) {
        Mask s = b.mask(col);
        Bidegree bd = b.bidegree_of(s);
        p(b.index_of(b.swap_bars(s)), col) = ((bd.p * bd.q) & 1) ? -1.0 : 1.0;
    }
    return p;
}

CMatrix conjugate_operator(const ExteriorBasis &b, const CMatrix &a) {
    CMatrix p = conjugation_matrix(b);
    return p * a.conjugate() * p;
}

CMatrix wedge_operator(const ExteriorBasis &b, const CVector &form) {
    CMatrix m = CMatrix::Zero(b.size(), b.size());
    for (int t = 0; t < b.size(); ++t) {
        if (form(t) == cplx(0.0)) continue;
        Mask tm = b.mask(t);
        for (int col = 0; col < b.size(); ++col) {
            int sign = wedge_sign(tm, b.mask(col));
            if (sign) m(b.index_of(tm | b.mask(col)), col) += double(sign) * form(t);
        }
    }
    return m;
}

ExactMatrix wedge_operator(const ExteriorBasis &b, const std::vector<GaussianRational> &form) {
    ExactMatrix m(b.size(), b.size());
    for (int t = 0; t < b.size(); ++t) {
        if (form[t].is_zero()) continue;
        Mask tm = b.mask(t);
        for (int col = 0; col < b.size(); ++col) {
            int sign = wedge_sign(tm, b.mask(col));
            if (sign > 0) m(b.index_of(tm | b.mask(col)), col) += form[t];
            if (sign < 0) m(b.index_of(tm | b.mask(col)), col) -= form[t];
        }
    }
    return m;
}

double IdentityResiduals::max() const { return std::max({del_squared, dbar_squared, anticommutator, d_squared}); }

IdentityResiduals identity_residuals(const FloatComplex &c) {
    IdentityResiduals r;
    r.del_squared = (c.del * c.del).cwiseAbs().maxCoeff();
    r.dbar_squared = (c.dbar * c.dbar).cwiseAbs().maxCoeff();
    r.anticommutator = (c.del * c.dbar + c.dbar * c.del).cwiseAbs().maxCoeff();
    CMatrix d = c.d();
    r.d_squared = (d * d).cwiseAbs().maxCoeff();
    return r;
}

bool is_unimodular(const FloatComplex &c, double tol) {
    CMatrix d = c.d();
    CMatrix top = degree_block(*c.basis, d, 2 * c.n() - 1);
    return top.norm() <= tol * std::max(1.0, d.norm());
}

}  // namespace frolicher
