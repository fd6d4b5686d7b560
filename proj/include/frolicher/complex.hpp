#pragma once

#include "frolicher/exterior.hpp"
#include "frolicher/structure.hpp"

#include <memory>
#include <string>

namespace frolicher {

// The double complex (Lambda^{.,.}, del, dbar) of a finite model.  Operators
// act on the whole exterior algebra in the order fixed by ExteriorBasis;
// del has type (1,0) and dbar type (0,1).
template <class Matrix>
struct BigradedComplex {
    std::shared_ptr<const ExteriorBasis> basis;
    Matrix del;
    Matrix dbar;

    int n() const { return basis->n(); }
    Matrix d() const { return del + dbar; }
};

using ExactComplex = BigradedComplex<ExactMatrix>;
using FloatComplex = BigradedComplex<CMatrix>;

// Builds del and dbar by extending the generator rules as anti-derivations,
// then checks del^2 = dbar^2 = del dbar + dbar del = 0 on the generators.
// Throws ModelInvalidError naming the identity and generator that fail.
FloatComplex build_complex(const InvariantComplexStructure &s);
// Same over Q(i).  Throws ConfigurationError if some constant is inexact.
ExactComplex build_exact_complex(const InvariantComplexStructure &s);

// Block of a full operator from total degree k to total degree k + shift.
CMatrix degree_block(const ExteriorBasis &b, const CMatrix &op, int k, int shift = 1);
ExactMatrix degree_block(const ExteriorBasis &b, const ExactMatrix &op, int k, int shift = 1);
// Block from bidegree (p,q) to (p+a, q+b).
CMatrix bidegree_block(const ExteriorBasis &b, const CMatrix &op, Bidegree src, int a, int bshift);
ExactMatrix bidegree_block(const ExteriorBasis &b, const ExactMatrix &op, Bidegree src, int a, int bshift);

// h * del + dbar restricted to total degree k.
CMatrix assemble_total(const FloatComplex &c, int k, double h);

// Complex conjugation u -> conj(u) as `P * conj_entries(u)`; P is a signed
// permutation matrix with P^2 = 1.
CMatrix conjugation_matrix(const ExteriorBasis &b);
// Conjugates an operator: u -> conj(A conj(u)).
CMatrix conjugate_operator(const ExteriorBasis &b, const CMatrix &a);

// Left wedge multiplication by the form with coordinates `form`.
CMatrix wedge_operator(const ExteriorBasis &b, const CVector &form);
ExactMatrix wedge_operator(const ExteriorBasis &b, const std::vector<GaussianRational> &form);

struct IdentityResiduals {
    double del_squared = 0;
    double dbar_squared = 0;
    double anticommutator = 0;
    double d_squared = 0;
    double max() const;
};
IdentityResiduals identity_residuals(const FloatComplex &c);

// d vanishes on top-minus-one forms (the model is unimodular).
bool is_unimodular(const FloatComplex &c, double tol = 1e-10);

}  // namespace frolicher
