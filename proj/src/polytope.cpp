#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <set>

#include "exptrop/lp.hpp"
#include "exptrop/polyhedra.hpp"

namespace exptrop {

namespace {

// Is p a vertex of conv(p, others)? Looks for w with w.(u - p) < 0 for every other u.
bool is_extreme(const RealVec& p, const std::vector<RealVec>& others) {
    if (others.empty()) return true;
    const std::size_t n = p.size();
    Matrix<ExactReal> A;
    RealVec b;
    for (const auto& u : others) {
        RealVec row = sub(u, p);
        row.push_back(ExactReal(1));
        A.push_back(std::move(row));
        b.push_back(ExactReal(0));
    }
    RealVec cap(n + 1, ExactReal(0));
    cap[n] = ExactReal(1);
    A.push_back(cap);
    b.push_back(ExactReal(1));
    const LpResult res = maximize(cap, A, b);
    return res.status == LpStatus::optimal && res.value.sign() > 0;
}

std::size_t affine_rank(const std::vector<RealVec>& pts) {
    if (pts.size() <= 1) return 0;
    Matrix<ExactReal> diffs;
    for (std::size_t k = 1; k < pts.size(); ++k) diffs.push_back(sub(pts[k], pts[0]));
    return rank(diffs);
}

ExactReal factorial(std::size_t n) {
    ExactReal f(1);
    for (std::size_t k = 2; k <= n; ++k) f *= ExactReal(static_cast<long>(k));
    return f;
}

}  // namespace

Polytope::Polytope(std::size_t ambient, std::vector<RealVec> points) : ambient_(ambient) {
    for (const auto& p : points)
        if (p.size() != ambient) throw DimensionMismatch("point dimension differs from ambient dimension");
    std::sort(points.begin(), points.end(),
              [](const RealVec& a, const RealVec& b) { return compare_vectors(a, b) == Ordering::lt; });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const RealVec& a, const RealVec& b) { return compare_vectors(a, b) == Ordering::eq; }),
                 points.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<RealVec> others;
        for (std::size_t k = 0; k < points.size(); ++k)
            if (k != i) others.push_back(points[k]);
        if (is_extreme(points[i], others)) vertices_.push_back(points[i]);
    }
}

int Polytope::dim() const {
    if (vertices_.empty()) return -1;
    return static_cast<int>(affine_rank(vertices_));
}

bool operator==(const Polytope& a, const Polytope& b) {
    if (a.ambient_ != b.ambient_ || a.vertices_.size() != b.vertices_.size()) return false;
    for (std::size_t k = 0; k < a.vertices_.size(); ++k)
        if (compare_vectors(a.vertices_[k], b.vertices_[k]) != Ordering::eq) return false;
    return true;
}

bool operator<(const Polytope& a, const Polytope& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.vertices_.size() != b.vertices_.size()) return a.vertices_.size() < b.vertices_.size();
    for (std::size_t k = 0; k < a.vertices_.size(); ++k) {
        const Ordering o = compare_vectors(a.vertices_[k], b.vertices_[k]);
        if (o != Ordering::eq) return o == Ordering::lt;
    }
    return false;
}

std::vector<std::size_t> face_indices(const Polytope& P, const RealVec& w) {
    if (w.size() != P.ambient_dim()) throw DimensionMismatch("weight vector dimension");
    std::vector<std::size_t> out;
    std::optional<ExactReal> best;
    const auto& V = P.vertices();
    for (std::size_t k = 0; k < V.size(); ++k) {
        const ExactReal v = dot(w, V[k]);
        if (!best || v > *best) {
            best = v;
            out.assign(1, k);
        } else if (v == *best) {
            out.push_back(k);
        }
    }
    return out;
}

Polytope face_of(const Polytope& P, const RealVec& w) {
    std::vector<RealVec> pts;
    for (auto k : face_indices(P, w)) pts.push_back(P.vertices()[k]);
    return Polytope(P.ambient_dim(), std::move(pts));
}

std::vector<NormalCone> normal_cones(const Polytope& P) {
    if (P.is_empty()) throw PreconditionError("normal fan of the empty polytope");
    const auto& V = P.vertices();
    const std::size_t n = P.ambient_dim();
    std::map<std::vector<std::size_t>, Polyhedron> by_face;
    for (std::size_t i = 0; i < V.size(); ++i) {
        Matrix<ExactReal> A;
        for (std::size_t k = 0; k < V.size(); ++k)
            if (k != i) A.push_back(sub(V[k], V[i]));
        const Polyhedron cone = Polyhedron::make(n, A, RealVec(A.size(), ExactReal(0)));
        for (auto& f : cone.faces()) {
            auto idx = face_indices(P, f.relint_point());
            by_face.emplace(std::move(idx), std::move(f));
        }
    }
    std::vector<NormalCone> out;
    for (auto& [idx, cone] : by_face) {
        std::vector<RealVec> pts;
        for (auto k : idx) pts.push_back(V[k]);
        out.push_back({cone, idx, static_cast<int>(affine_rank(pts))});
    }
    std::sort(out.begin(), out.end(), [](const NormalCone& a, const NormalCone& b) { return a.cone < b.cone; });
    return out;
}

PolyhedralComplex normal_fan(const Polytope& P) {
    std::vector<Polyhedron> cells;
    for (auto& nc : normal_cones(P)) cells.push_back(std::move(nc.cone));
    return PolyhedralComplex(P.ambient_dim(), cells);
}

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
    if (P.ambient_dim() != Q.ambient_dim()) throw DimensionMismatch("Minkowski sum of polytopes in different spaces");
    std::vector<RealVec> pts;
    for (const auto& p : P.vertices())
        for (const auto& q : Q.vertices()) pts.push_back(add(p, q));
    return Polytope(P.ambient_dim(), std::move(pts));
}

Polytope minkowski_sum(const std::vector<Polytope>& Ps) {
    if (Ps.empty()) throw PreconditionError("Minkowski sum of no polytopes");
    Polytope acc = Ps.front();
    for (std::size_t k = 1; k < Ps.size(); ++k) acc = minkowski_sum(acc, Ps[k]);
    return acc;
}

Polytope scale(const Polytope& P, const ExactReal& s) {
    std::vector<RealVec> pts;
    for (const auto& v : P.vertices()) pts.push_back(scale(v, s));
    return Polytope(P.ambient_dim(), std::move(pts));
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope& P) {
    if (P.is_empty()) return {};
    const auto cones = normal_cones(P);
    std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> memo;
    std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::size_t>&, int)> tri;
    tri = [&](const std::vector<std::size_t>& F, int d) -> std::vector<std::vector<std::size_t>> {
        if (d == 0) return {{F.front()}};
        if (auto it = memo.find(F); it != memo.end()) return it->second;
        const std::size_t apex = F.front();
        std::vector<std::vector<std::size_t>> out;
        for (const auto& nc : cones) {
            if (nc.face_dim != d - 1) continue;
            if (!std::includes(F.begin(), F.end(), nc.face.begin(), nc.face.end())) continue;
            if (std::binary_search(nc.face.begin(), nc.face.end(), apex)) continue;
            for (auto s : tri(nc.face, d - 1)) {
                s.insert(s.begin(), apex);
                out.push_back(std::move(s));
            }
        }
        memo[F] = out;
        return out;
    };
    std::vector<std::size_t> all(P.vertices().size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return tri(all, P.dim());
}

ExactReal normalized_volume(const Polytope& P) {
    const std::size_t n = P.ambient_dim();
    if (P.is_empty() || P.dim() < static_cast<int>(n)) return ExactReal(0);
    const auto& V = P.vertices();
    ExactReal total;
    for (const auto& s : pulling_triangulation(P)) {
        Matrix<ExactReal> m;
        for (std::size_t k = 1; k < s.size(); ++k) m.push_back(sub(V[s[k]], V[s[0]]));
        total += determinant(m).abs();
    }
    return total;
}

ExactReal euclidean_volume(const Polytope& P) { return normalized_volume(P) / factorial(P.ambient_dim()); }

ExactReal mixed_volume(const std::vector<Polytope>& Ps) {
    const std::size_t n = Ps.size();
    if (n == 0) throw PreconditionError("mixed volume of no polytopes");
    for (const auto& P : Ps) {
        if (P.ambient_dim() != n)
            throw PreconditionError("mixed volume needs exactly n polytopes in R^n");
        if (P.is_empty()) throw PreconditionError("mixed volume of an empty polytope");
    }
    ExactReal total;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Polytope> sub_family;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) sub_family.push_back(Ps[j]);
        const ExactReal v = normalized_volume(minkowski_sum(sub_family));
        if (v.is_zero()) continue;
        if ((n - sub_family.size()) % 2 == 0) total += v;
        else total -= v;
    }
    return total / factorial(n);
}

ExactReal support_function(const Polytope& P, const ComplexVec& z) {
    if (P.is_empty()) throw PreconditionError("support function of the empty polytope");
    if (z.size() != P.ambient_dim()) throw DimensionMismatch("support function argument dimension");
    std::optional<ExactReal> best;
    for (const auto& a : P.vertices()) {
        ExactReal v;
        for (std::size_t k = 0; k < a.size(); ++k) v += z[k].re() * a[k];
        if (!best || v > *best) best = v;
    }
    return *best;
}

}  // namespace exptrop
