#pragma once

#include "frolicher/gaussian_rational.hpp"
#include "frolicher/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frolicher {

// A structure constant.  `exact` is present when the value came in as an
// integer or a fraction and is therefore representable in Q(i).
struct Coefficient {
    cplx value{0.0, 0.0};
    std::optional<GaussianRational> exact;

    Coefficient() = default;
    Coefficient(const GaussianRational &q) : value(q.to_complex()), exact(q) {}
    Coefficient(cplx v) : value(v) {}
    static Coefficient rational(long re, long im = 0) { return GaussianRational(mpq_class(re), mpq_class(im)); }
};

// del eps^i contains coef * eps^j ^ eps^k  (j < k).  Indices are 0-based.
struct PartialTerm {
    int i, j, k;
    Coefficient coef;
};

// dbar eps^i contains coef * eps^j ^ epsbar^k.  Indices are 0-based.
struct DbarTerm {
    int i, j, k;
    Coefficient coef;
};

// Left-invariant complex structure given by the action of del and dbar on the
// invariant (1,0)-coframe.  Values on the conjugate coframe follow by
// conjugation.
struct InvariantComplexStructure {
    std::string name;
    int n = 0;
    std::vector<PartialTerm> partial;
    std::vector<DbarTerm> dbar;

    bool is_exact() const;
    // Index-range and ordering checks; throws ModelInvalidError.
    void validate_shape() const;
};

}  // namespace frolicher
