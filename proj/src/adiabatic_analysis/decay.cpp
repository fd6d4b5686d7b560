#include "frolicher/adiabatic.hpp"

#include "frolicher/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace frolicher {

int DecayClassification::count(int r, int k) const {
    int c = 0;
    for (int v : cls[k])
        if (v != kUnclassified && v >= r) ++c;
    return c;
}

int DecayClassification::unclassified() const {
    int c = 0;
    for (const auto &row : cls) c += int(std::count(row.begin(), row.end(), kUnclassified));
    return c;
}

namespace {

// Last `tail` resolved grid indices with h <= 1/4 for degree k.
std::vector<int> tail_points(const EigenSweep &s, int k, int tail) {
    std::vector<int> pts;
    for (int j = int(s.h.size()) - 1; j >= 0 && int(pts.size()) < tail; --j)
        if (s.h[j] <= 0.25 && s.resolved[j][k]) pts.push_back(j);
    std::reverse(pts.begin(), pts.end());
    return pts;
}

double fitted_slope(const EigenSweep &s, int k, int i, const std::vector<int> &pts) {
    double mx = 0, my = 0;
    for (int j : pts) {
        mx += std::log(s.h[j]);
        my += std::log(s.spectra[j][k](i));
    }
    mx /= pts.size();
    my /= pts.size();
    double sxy = 0, sxx = 0;
    for (int j : pts) {
        double dx = std::log(s.h[j]) - mx;
        sxy += dx * (std::log(s.spectra[j][k](i)) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace

DecayClassification classify_decay(const EigenSweep &s, int tail, double window) {
    if (tail < 2) throw ConfigurationError("slope fits need at least two points");
    int below = 0;
    for (double h : s.h)
        if (h <= 0.25) ++below;
    if (below < tail)
        throw ConfigurationError("grid has " + std::to_string(below) + " points with h <= 1/4, need " + std::to_string(tail));

    DecayClassification c;
    c.n = s.n;
    c.tail = tail;
    c.window = window;
    const double inf = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 2 * s.n; ++k) {
        const int dim = s.degree_dim(k);
        std::vector<int> pts = tail_points(s, k, tail);
        c.fit_points.push_back(pts);
        std::vector<double> slopes(dim, inf);
        std::vector<int> cls(dim, kInfiniteClass);
        for (int i = s.kernel[k]; i < dim; ++i) {
            if (int(pts.size()) < tail) {
                slopes[i] = std::numeric_limits<double>::quiet_NaN();
                cls[i] = kUnclassified;
                continue;
            }
            double rho = fitted_slope(s, k, i, pts) / 2.0;
            slopes[i] = rho;
            double r = std::round(rho);
            cls[i] = std::abs(rho - r) <= window ? std::max(0, int(r)) : kUnclassified;
        }
        c.slope.push_back(slopes);
        c.cls.push_back(cls);
    }
    return c;
}

DecayAnalysis analyze_decay(const MetricOperators &o, const SweepOptions &opt) {
    DecayAnalysis a;
    auto run = [&](int j_max) {
        auto grid = geometric_grid(j_max);
        a.sweep = opt.parallel ? sweep_parallel(o, grid) : sweep_serial(o, grid);
        a.classes = classify_decay(a.sweep, opt.tail, opt.window);
    };
    run(opt.j_max);
    if (a.classes.unclassified() > 0 && opt.extension > 0) {
        run(opt.j_max + opt.extension);
        a.extended = true;
    }
    return a;
}

int page_depth(const PageTable &pages) { return std::min(std::max(pages.degeneration_page, 3), pages.max_page); }

std::vector<CountVerdict> compare_counts(const DecayClassification &c, const PageTable &pages) {
    std::vector<CountVerdict> out;
    const int depth = page_depth(pages);
    for (int r = 1; r <= depth; ++r)
        for (int k = 0; k <= 2 * c.n; ++k) {
            CountVerdict v;
            v.r = r;
            v.k = k;
            v.dim = pages.total(r, k);
            v.count = c.count(r, k);
            v.pass = v.dim == v.count;
            out.push_back(v);
        }
    return out;
}

DegenerationVerdict degeneration_criterion(const EigenSweep &s, const PageTable &pages, int r, int tail) {
    DegenerationVerdict v;
    v.r = r;
    v.degenerates = pages.degeneration_page <= r;
    v.criterion = true;
    v.vacuous = true;
    std::ostringstream detail;
    for (int k = 1; k <= s.n; ++k) {
        if (s.kernel[k] >= s.degree_dim(k)) continue;
        v.vacuous = false;
        std::vector<int> pts = tail_points(s, k, tail);
        if (int(pts.size()) < 2) {
            v.criterion = false;
            detail << "k=" << k << ": too few resolved points; ";
            continue;
        }
        bool grows = true;
        double worst = std::numeric_limits<double>::infinity();
        for (size_t a = 0; a + 1 < pts.size(); ++a) {
            int j0 = pts[a], j1 = pts[a + 1];
            double r0 = s.spectra[j0][k](s.kernel[k]) / std::pow(s.h[j0], 2 * r);
            double r1 = s.spectra[j1][k](s.kernel[k]) / std::pow(s.h[j1], 2 * r);
            double factor = std::pow(r1 / r0, 1.0 / (j1 - j0));  // per halving
            worst = std::min(worst, factor);
            if (factor < 2.0) grows = false;
        }
        if (!grows) {
            v.criterion = false;
            detail << "k=" << k << ": growth factor " << worst << " < 2; ";
        }
    }
    v.pass = v.criterion == v.degenerates;
    if (v.vacuous) detail << "no positive eigenvalues in degrees 1..n";
    v.detail = detail.str();
    return v;
}

IndependenceVerdict compare_classifications(const DecayClassification &a, const DecayClassification &b, int max_r) {
    IndependenceVerdict v;
    v.pass = a.n == b.n;
    std::ostringstream detail;
    if (!v.pass) detail << "dimension mismatch";
    for (int r = 0; v.pass && r <= max_r; ++r)
        for (int k = 0; k <= 2 * a.n; ++k)
            if (a.count(r, k) != b.count(r, k)) {
                v.pass = false;
                detail << "r=" << r << " k=" << k << ": " << a.count(r, k) << " vs " << b.count(r, k) << "; ";
            }
    if (a.unclassified() || b.unclassified()) {
        v.pass = false;
        detail << "unclassified slopes present";
    }
    v.detail = detail.str();
    return v;
}

}  // namespace frolicher
