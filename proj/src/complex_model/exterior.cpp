#include "frolicher/exterior.hpp"

#include "frolicher/errors.hpp"

#include <algorithm>
#include <bit>

namespace frolicher {

namespace {

// Subsets of {0..n-1} of size k, lexicographic on the sorted tuple.
void combinations(int n, int k, int start, Mask acc, std::vector<Mask> &out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (int i = start; i <= n - k; ++i) combinations(n, k - 1, i + 1, acc | (Mask(1) << i), out);
}

}  // namespace

int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int swaps = 0;
    for (Mask rest = b; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        Mask above = (j + 1 >= 32) ? 0 : (~Mask(0) << (j + 1));
        swaps += std::popcount(a & above);
    }
    return (swaps & 1) ? -1 : 1;
}

ExteriorBasis::ExteriorBasis(int n) : n_(n) {
    if (n < 1 || n > kMaxDimension)
        throw ConfigurationError("complex dimension must be between 1 and " + std::to_string(kMaxDimension) +
                                 ", got " + std::to_string(n));
    index_of_.assign(std::size_t(1) << (2 * n), -1);
    bidegree_offset_.assign((n + 1) * (n + 1), 0);
    for (int k = 0; k <= 2 * n; ++k) {
        degree_offset_.push_back(size());
        for (int p = std::max(0, k - n); p <= std::min(k, n); ++p) {
            int q = k - p;
            bidegree_offset_[p * (n + 1) + q] = size();
            std::vector<Mask> is, js;
            combinations(n, p, 0, 0, is);
            combinations(n, q, 0, 0, js);
            for (Mask i : is)
                for (Mask j : js) {
                    Mask m = i | (j << n);
                    index_of_[m] = size();
                    masks_.push_back(m);
                }
        }
    }
    degree_offset_.push_back(size());
}

Bidegree ExteriorBasis::bidegree_of(Mask m) const {
    Mask low = (Mask(1) << n_) - 1;
    return {std::popcount(m & low), std::popcount(m >> n_)};
}

int ExteriorBasis::bidegree_offset(int p, int q) const {
    if (p < 0 || q < 0 || p > n_ || q > n_) throw LookupError("bidegree out of range");
    return bidegree_offset_[p * (n_ + 1) + q];
}

int ExteriorBasis::bidegree_dim(int p, int q) const {
    if (p < 0 || q < 0 || p > n_ || q > n_) return 0;
    return binomial(n_, p) * binomial(n_, q);
}

Mask ExteriorBasis::swap_bars(Mask m) const {
    Mask low = (Mask(1) << n_) - 1;
    return ((m & low) << n_) | (m >> n_);
}

std::string ExteriorBasis::label(int index) const {
    Mask m = masks_[index];
    if (m == 0) return "1";
    std::string out;
    for (int b = 0; b < 2 * n_; ++b) {
        if (!(m & (Mask(1) << b))) continue;
        if (!out.empty()) out += "^";
        out += b < n_ ? "e" + std::to_string(b + 1) : "eb" + std::to_string(b - n_ + 1);
    }
    return out;
}

}  // namespace frolicher
