#pragma once

#include "frolicher/complex.hpp"

#include <string>
#include <vector>

namespace frolicher {

// Dimensions of the Frolicher pages E_r^{p,q} for r = 0..max_page, together
// with the quantities derived from them.
struct PageTable {
    int n = 0;
    int max_page = 0;
    std::string method;
    bool exact = false;
    std::vector<std::vector<int>> dims;    // dims[r][p * (n + 1) + q]
    std::vector<std::vector<int>> d_rank;  // d_rank[r][...] = rank d_r out of (p,q); r >= 1
    std::vector<int> betti;                // b_0 .. b_2n
    int degeneration_page = 1;             // least r >= 1 with E_r = E_infinity

    int dim(int r, int p, int q) const;
    int total(int r, int k) const;  // sum over p + q = k
    int rank(int r, int p, int q) const;
    // m_r^k: sum over l >= r of the ranks of d_l leaving total degree k.
    int m(int r, int k) const;
};

// d_r is zero for r > n, so every page from n + 1 on is E_infinity; this
// computes a few more for display.
int default_max_page(int n);

// Filtration method: E_r^{p,q} = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1})
// inside total degree p + q.
PageTable pages_by_filtration(const ExactComplex &c, int max_page = -1);
PageTable pages_by_filtration(const FloatComplex &c, int max_page = -1);

// Zig-zag method: E_r = X_r / Y_r with X_r the dbar-closed forms admitting a
// chain del a = dbar u_1, del u_1 = dbar u_2, ... of length r - 1 and Y_r the
// dbar-exact forms plus del of the ends of such chains one degree down.
PageTable pages_by_zigzag(const ExactComplex &c, int max_page = -1);
PageTable pages_by_zigzag(const FloatComplex &c, int max_page = -1);

struct StatisticCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Internal consistency of a table: dim E_r^k = b_k + m_r^{k-1} + m_r^k,
// constancy of the Euler characteristic across pages, monotonicity, and
// (when `serre_duality` is set, i.e. the model is unimodular) the symmetries
// E_r^{p,q} = E_r^{n-p,n-q} and E_r^k = E_r^{2n-k}.
std::vector<StatisticCheck> page_statistics(const PageTable &t, bool serre_duality);

}  // namespace frolicher
