#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace frolicher {

inline constexpr int kMaxDimension = 4;

struct Bidegree {
    int p = 0;
    int q = 0;
    int total() const { return p + q; }
    auto operator<=>(const Bidegree &) const = default;
};

// A monomial of the exterior algebra on eps^1..eps^n, epsbar^1..epsbar^n.
// Bit a-1 is eps^a, bit n+a-1 is epsbar^a; the monomial is the wedge of its
// generators in increasing bit order.
using Mask = std::uint32_t;

// Sign of e_a ^ e_b relative to e_{a|b}; zero when they share a generator.
int wedge_sign(Mask a, Mask b);

// Ordered monomial basis of the full exterior algebra (dimension 4^n).
// Order: total degree, then p, then lexicographic (I, J) with I the unbarred
// and J the barred index tuple.  Every (p,q) block and every total-degree
// block is a contiguous index range.
class ExteriorBasis {
  public:
    explicit ExteriorBasis(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(masks_.size()); }

    Mask mask(int index) const { return masks_[index]; }
    int index_of(Mask m) const { return index_of_[m]; }
    Bidegree bidegree(int index) const { return bidegree_of(masks_[index]); }
    int degree(int index) const { return bidegree(index).total(); }
    Bidegree bidegree_of(Mask m) const;

    int degree_offset(int k) const { return degree_offset_[k]; }
    int degree_dim(int k) const { return degree_offset_[k + 1] - degree_offset_[k]; }
    int bidegree_offset(int p, int q) const;
    int bidegree_dim(int p, int q) const;

    Mask unbarred(int a) const { return Mask(1) << a; }      // a is 0-based
    Mask barred(int a) const { return Mask(1) << (n_ + a); }  // a is 0-based
    // The involution exchanging eps^a and epsbar^a.
    Mask swap_bars(Mask m) const;

    // Human readable label like "e1^e3^eb2"; "1" for the unit.
    std::string label(int index) const;

  private:
    int n_;
    std::vector<Mask> masks_;
    std::vector<int> index_of_;
    std::vector<int> degree_offset_;
    std::vector<int> bidegree_offset_;  // (p, q) -> offset, size (n+1)^2
};

// Binomial coefficient for the small sizes used here.
int binomial(int n, int k);

}  // namespace frolicher
