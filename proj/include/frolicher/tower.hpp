#pragma once

#include "frolicher/laplacians.hpp"

#include <vector>

namespace frolicher {

// Realization of the pages by nested spaces of dbar-harmonic forms
// H_1 > H_2 > ... inside each Lambda^{p,q}, with d_r realized as a matrix
// D_r between the orthonormal frames of H_r.
struct TowerLevel {
    int r = 1;
    std::vector<CMatrix> frames;  // [p*(n+1)+q]: orthonormal columns, bidegree coordinates
    std::vector<CMatrix> d;       // [p*(n+1)+q]: D_r out of (p,q), frame coordinates
    double chain_residual = 0;    // worst residual of the zig-zag systems at this level
};

struct HarmonicTower {
    int n = 0;
    std::vector<TowerLevel> levels;  // levels[0] is r = 1

    int max_page() const { return int(levels.size()); }
    const TowerLevel &level(int r) const { return levels.at(r - 1); }
    int dim(int r, int p, int q) const;
    int total(int r, int k) const;
    int rank(int r, int p, int q) const;  // numerical rank of D_r out of (p,q)
};

HarmonicTower harmonic_tower(const MetricOperators &ops, int max_page);

// Solves dbar u_1 = del a, dbar u_{j+1} = del u_j (j < r-1) with minimum
// norm for every column a of `alpha` in bidegree (p,q).  Returns the u_j
// stacked (u_1 first) and reports the residual.
std::vector<CMatrix> zigzag_chain(const MetricOperators &ops, int p, int q, const CMatrix &alpha, int length,
                                  double &residual);

// Kernel dimension of the formal page Laplacian D_r D_r^* + D_r^* D_r on
// the degree-k part of H_r.  Equals dim E_{r+1}^k.
int formal_laplacian_kernel(const HarmonicTower &t, int r, int k, double scale);

// For every representative a in H_l (l >= r), completes it along its chain to
// a~ = a - u_1 + u_2 - ... and measures the components of d a~ in filtration
// levels below p + r.  Zero means d maps the realized piece into A_{p+r}.
double filtration_inclusion_residual(const MetricOperators &ops, const HarmonicTower &t, int r);

}  // namespace frolicher
