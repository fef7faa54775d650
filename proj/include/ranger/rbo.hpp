#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace ranger {

// Extrapolated rank-biased overlap between two duplicate-free rankings,
// evaluated at min(depth, list length). The per-depth agreements are
// accumulated against the total realizable weight mass and the result is
// their ratio; analytically the mass is exactly 1, and the division makes
// identical rankings score exactly 1.0 and disjoint ones exactly 0.0
// instead of drifting by a few ulps.
template <typename T>
double rbo_ext(std::span<const T> a, std::span<const T> b, double phi,
               size_t depth) {
    if (!(phi > 0.0 && phi < 1.0)) {
        throw std::invalid_argument("rbo persistence must be in (0, 1)");
    }
    size_t la = std::min(a.size(), depth);
    size_t lb = std::min(b.size(), depth);
    std::span<const T> s = la <= lb ? a.subspan(0, la) : b.subspan(0, lb);
    std::span<const T> l = la <= lb ? b.subspan(0, lb) : a.subspan(0, la);

    {
        std::unordered_set<T> u(s.begin(), s.end());
        if (u.size() != s.size()) throw std::invalid_argument("duplicate item in ranking");
        u.clear();
        u.insert(l.begin(), l.end());
        if (u.size() != l.size()) throw std::invalid_argument("duplicate item in ranking");
    }

    if (l.empty()) return 1.0;  // two empty rankings are identical
    if (s.empty()) return 0.0;

    std::unordered_set<T> seen;
    size_t overlap = 0;
    size_t short_overlap = 0;
    double agree_mass = 0.0;
    double total_mass = 0.0;
    double w = phi;  // phi^d
    for (size_t d = 1; d <= l.size(); ++d) {
        if (d <= s.size()) {
            const T& x = s[d - 1];
            const T& y = l[d - 1];
            if (x == y) {
                ++overlap;
            } else {
                if (seen.erase(x) == 1) ++overlap; else seen.insert(x);
                if (seen.erase(y) == 1) ++overlap; else seen.insert(y);
            }
            if (d == s.size()) short_overlap = overlap;
        } else {
            if (seen.erase(l[d - 1]) == 1) ++overlap;
        }
        double agreement = static_cast<double>(overlap) / static_cast<double>(d);
        if (d > s.size()) {
            agreement += static_cast<double>(short_overlap) *
                         static_cast<double>(d - s.size()) /
                         (static_cast<double>(s.size()) * static_cast<double>(d));
        }
        agree_mass += agreement * w;
        total_mass += w;
        if (d < l.size()) w *= phi;
    }
    // extrapolate the final agreement past the evaluated prefix
    double tail = static_cast<double>(overlap - short_overlap) / static_cast<double>(l.size()) +
                  static_cast<double>(short_overlap) / static_cast<double>(s.size());
    double inv = (1.0 - phi) / phi;
    double numer = inv * agree_mass + tail * w;
    double denom = inv * total_mass + w;
    return numer / denom;
}

template <typename T>
double rbo_ext(const std::vector<T>& a, const std::vector<T>& b, double phi,
               size_t depth) {
    return rbo_ext(std::span<const T>(a), std::span<const T>(b), phi, depth);
}

}  // namespace ranger
