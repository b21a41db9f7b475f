#pragma once

// Test-side reference implementations, written independently of the library's
// polyhedral kernel (plain rationals, planar only).

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Pt = std::pair<mpq_class, mpq_class>;

inline mpq_class cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// Andrew's monotone chain; returns the strictly convex hull counter-clockwise.
inline std::vector<Pt> hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Pt> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
        h[k++] = pts[i - 1];
    }
    h.resize(k - 1);
    return h;
}

/// Euclidean area of the convex hull (shoelace).
inline mpq_class area(const std::vector<Pt>& pts) {
    const auto h = hull(pts);
    if (h.size() < 3) return 0;
    mpq_class twice = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Pt& a = h[i];
        const Pt& b = h[(i + 1) % h.size()];
        twice += a.first * b.second - a.second * b.first;
    }
    return abs(twice) / 2;
}

inline std::vector<Pt> dilate_sum(const std::vector<Pt>& P, const mpq_class& l1, const std::vector<Pt>& Q,
                                  const mpq_class& l2) {
    std::vector<Pt> out;
    for (const auto& p : P)
        for (const auto& q : Q) out.emplace_back(l1 * p.first + l2 * q.first, l1 * p.second + l2 * q.second);
    return out;
}

/**
 * Coefficient of l1*l2 in area(l1 P + l2 Q) = a l1^2 + b l1 l2 + c l2^2, recovered by
 * evaluating at (1,2), (2,1), (1,3) and solving the 3x3 system exactly.
 */
inline mpq_class mixed_area_by_interpolation(const std::vector<Pt>& P, const std::vector<Pt>& Q) {
    const mpq_class lam[3][2] = {{1, 2}, {2, 1}, {1, 3}};
    mpq_class m[3][4];
    for (int r = 0; r < 3; ++r) {
        const mpq_class& x = lam[r][0];
        const mpq_class& y = lam[r][1];
        m[r][0] = x * x;
        m[r][1] = x * y;
        m[r][2] = y * y;
        m[r][3] = area(dilate_sum(P, x, Q, y));
    }
    for (int c = 0; c < 3; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        for (int k = 0; k < 4; ++k) std::swap(m[c][k], m[p][k]);
        for (int r = 0; r < 3; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[c][c];
            for (int k = 0; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return m[1][3] / m[1][1];
}

/// Random lattice point set with coordinates in [-range, range].
inline std::vector<Pt> random_lattice_set(std::mt19937_64& rng, int count, int range) {
    std::uniform_int_distribution<int> coord(-range, range);
    std::vector<Pt> pts;
    for (int k = 0; k < count; ++k) pts.emplace_back(coord(rng), coord(rng));
    return pts;
}

}  // namespace oracle
