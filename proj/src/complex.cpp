#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "exptrop/polyhedra.hpp"

namespace exptrop {

PolyhedralComplex::PolyhedralComplex(std::size_t ambient, const std::vector<Polyhedron>& cells)
    : ambient_(ambient) {
    std::vector<const Polyhedron*> order;
    for (const auto& c : cells) {
        if (c.ambient_dim() != ambient) throw DimensionMismatch("cell in a different ambient space");
        if (!c.is_empty()) order.push_back(&c);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const Polyhedron* a, const Polyhedron* b) { return a->dim() > b->dim(); });
    std::set<Polyhedron> all;
    for (const Polyhedron* c : order) {
        // Faces of a cell already present were added together with it.
        if (all.count(*c)) continue;
        for (auto& f : c->faces()) all.insert(std::move(f));
    }
    cells_.assign(all.begin(), all.end());
}

int PolyhedralComplex::dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim());
    return d;
}

std::vector<Polyhedron> PolyhedralComplex::maximal_cells() const {
    std::vector<Polyhedron> out;
    for (const auto& c : cells_) {
        bool maximal = true;
        for (const auto& o : cells_) {
            if (o.dim() > c.dim() && c.is_face_of(o)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(c);
    }
    return out;
}

std::vector<Polyhedron> PolyhedralComplex::cells_of_dim(int k) const {
    std::vector<Polyhedron> out;
    for (const auto& c : cells_)
        if (c.dim() == k) out.push_back(c);
    return out;
}

PolyhedralComplex PolyhedralComplex::skeleton(int k) const {
    PolyhedralComplex out(ambient_);
    for (const auto& c : cells_)
        if (c.dim() <= k) out.cells_.push_back(c);
    return out;
}

bool PolyhedralComplex::is_pure() const {
    const int d = dim();
    for (const auto& c : maximal_cells())
        if (c.dim() != d) return false;
    return true;
}

bool PolyhedralComplex::contains(const Polyhedron& cell) const {
    return std::binary_search(cells_.begin(), cells_.end(), cell);
}

bool PolyhedralComplex::support_contains(const RealVec& x) const {
    return std::any_of(cells_.begin(), cells_.end(), [&x](const Polyhedron& c) { return c.contains(x); });
}

std::optional<std::size_t> PolyhedralComplex::cell_containing(const RealVec& x) const {
    for (std::size_t k = 0; k < cells_.size(); ++k)
        if (cells_[k].in_relint(x)) return k;
    return std::nullopt;
}

PolyhedralComplex intersect_complexes(const PolyhedralComplex& S1, const PolyhedralComplex& S2) {
    if (S1.ambient_dim() != S2.ambient_dim()) throw DimensionMismatch("complexes in different spaces");
    std::vector<Polyhedron> cells;
    for (const auto& a : S1.cells())
        for (const auto& b : S2.cells()) {
            Polyhedron c = a.intersect(b);
            if (!c.is_empty()) cells.push_back(std::move(c));
        }
    return PolyhedralComplex(S1.ambient_dim(), cells);
}

PolyhedralComplex stable_intersection(const PolyhedralComplex& S1, const PolyhedralComplex& S2) {
    if (S1.ambient_dim() != S2.ambient_dim()) throw DimensionMismatch("complexes in different spaces");
    const std::size_t n = S1.ambient_dim();
    std::vector<Polyhedron> cells;
    for (const auto& a : S1.cells())
        for (const auto& b : S2.cells()) {
            // Spans add up to R^n iff the equation blocks are jointly independent.
            Matrix<ExactReal> both = a.equations();
            both.insert(both.end(), b.equations().begin(), b.equations().end());
            if (rank(both) != a.equations().size() + b.equations().size()) continue;
            Polyhedron c = a.intersect(b);
            if (!c.is_empty()) cells.push_back(std::move(c));
        }
    return PolyhedralComplex(n, cells);
}

PolyhedralComplex stable_intersection(const std::vector<PolyhedralComplex>& Ss) {
    if (Ss.empty()) throw PreconditionError("stable intersection of no complexes");
    PolyhedralComplex acc = Ss.front();
    for (std::size_t k = 1; k < Ss.size(); ++k) acc = stable_intersection(acc, Ss[k]);
    return acc;
}

PolyhedralComplex star(const PolyhedralComplex& S, const Polyhedron& tau) {
    if (!S.contains(tau)) throw PreconditionError("star of a set that is not a cell of the complex");
    std::vector<Polyhedron> cones;
    for (const auto& sigma : S.cells())
        if (tau.is_face_of(sigma)) cones.push_back(sigma.tangent_cone(tau));
    return PolyhedralComplex(S.ambient_dim(), cones);
}

double hausdorff_distance(const std::vector<FloatPoint>& A, const std::vector<FloatPoint>& B) {
    if (A.empty() || B.empty()) throw PreconditionError("Hausdorff distance of an empty point set");
    auto directed = [](const std::vector<FloatPoint>& X, const std::vector<FloatPoint>& Y) {
        double worst = 0.0;
        for (const auto& x : X) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& y : Y) {
                if (y.size() != x.size()) throw DimensionMismatch("points of different dimension");
                double d2 = 0.0;
                for (std::size_t k = 0; k < x.size(); ++k) d2 += (x[k] - y[k]) * (x[k] - y[k]);
                if (d2 < best) {
                    best = d2;
                    if (best <= worst) break;
                }
            }
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(directed(A, B), directed(B, A));
}

namespace {

// Orthonormal float basis of the direction space of a cell.
std::vector<FloatPoint> direction_basis(const Polyhedron& c) {
    const std::size_t n = c.ambient_dim();
    Matrix<ExactReal> dirs = c.equations().empty() ? Matrix<ExactReal>{} : nullspace(c.equations(), n);
    if (c.equations().empty()) {
        for (std::size_t k = 0; k < n; ++k) {
            RealVec e(n, ExactReal(0));
            e[k] = ExactReal(1);
            dirs.push_back(e);
        }
    }
    std::vector<FloatPoint> out;
    for (const auto& d : dirs) {
        FloatPoint v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = d[k].to_double();
        for (const auto& u : out) {
            double p = 0;
            for (std::size_t k = 0; k < n; ++k) p += u[k] * v[k];
            for (std::size_t k = 0; k < n; ++k) v[k] -= p * u[k];
        }
        double norm = 0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<FloatPoint> sample_complex(const PolyhedralComplex& S, double radius, double step) {
    if (step <= 0 || radius <= 0) throw PreconditionError("sampling step and radius must be positive");
    const std::size_t n = S.ambient_dim();
    std::vector<FloatPoint> out;
    for (const auto& c : S.cells()) {
        // Base point: the point of the affine hull nearest to the origin.
        const auto basis = direction_basis(c);
        FloatPoint base(n);
        for (std::size_t k = 0; k < n; ++k) base[k] = c.relint_point()[k].to_double();
        for (const auto& u : basis) {
            double p = 0;
            for (std::size_t k = 0; k < n; ++k) p += u[k] * base[k];
            for (std::size_t k = 0; k < n; ++k) base[k] -= p * u[k];
        }
        if (basis.empty()) {
            if (std::all_of(base.begin(), base.end(), [radius](double x) { return std::abs(x) <= radius; }))
                out.push_back(base);
            continue;
        }
        double reach = 0;
        for (double x : base) reach += x * x;
        reach = std::sqrt(reach) + radius * std::sqrt(static_cast<double>(n));
        const long steps = static_cast<long>(std::ceil(reach / step));
        std::vector<long> idx(basis.size(), -steps);
        for (;;) {
            FloatPoint p = base;
            for (std::size_t j = 0; j < basis.size(); ++j)
                for (std::size_t k = 0; k < n; ++k) p[k] += static_cast<double>(idx[j]) * step * basis[j][k];
            const bool in_box =
                std::all_of(p.begin(), p.end(), [radius](double x) { return std::abs(x) <= radius + 1e-12; });
            if (in_box && c.contains_approx(p, 1e-9)) out.push_back(std::move(p));
            std::size_t j = 0;
            while (j < idx.size() && idx[j] == steps) idx[j++] = -steps;
            if (j == idx.size()) break;
            ++idx[j];
        }
    }
    return out;
}

}  // namespace exptrop
