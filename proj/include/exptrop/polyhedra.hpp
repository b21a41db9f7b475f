#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exptrop/linalg.hpp"

namespace exptrop {

/// Lexicographic order of equal-length vectors via compare_real.
Ordering compare_vectors(const RealVec& a, const RealVec& b);

/**
 * Polyhedron {x : A x <= b, E x = f} in canonical form: implicit equalities are
 * moved into the equation block, which is kept in reduced row echelon form;
 * inequalities are irredundant, reduced against the equations and scaled so that
 * their first nonzero coefficient has absolute value 1, then sorted. Two
 * polyhedra are equal as point sets iff their canonical forms coincide.
 */
class Polyhedron {
public:
    Polyhedron() = default;
    static Polyhedron make(std::size_t ambient, const Matrix<ExactReal>& A, const RealVec& b,
                           const Matrix<ExactReal>& E = {}, const RealVec& f = {});
    static Polyhedron whole_space(std::size_t ambient);
    static Polyhedron empty_set(std::size_t ambient);
    static Polyhedron point(const RealVec& p);
    /// Cone R>=0 * direction.
    static Polyhedron ray(const RealVec& direction);
    /// Linear span of the given vectors.
    static Polyhedron span(std::size_t ambient, const Matrix<ExactReal>& vectors);
    /// Hyperplane {x : normal . x = 0}.
    static Polyhedron hyperplane(const RealVec& normal);

    std::size_t ambient_dim() const { return ambient_; }
    bool is_empty() const { return empty_; }
    /// Dimension of the affine hull; -1 when empty.
    int dim() const;
    bool is_cone() const;

    const Matrix<ExactReal>& inequalities() const { return A_; }
    const RealVec& inequality_rhs() const { return b_; }
    const Matrix<ExactReal>& equations() const { return E_; }
    const RealVec& equation_rhs() const { return f_; }

    /// A point in the relative interior (throws on the empty set).
    const RealVec& relint_point() const;
    bool contains(const RealVec& x) const;
    bool in_relint(const RealVec& x) const;
    /// Float containment test with absolute tolerance.
    bool contains_approx(const std::vector<double>& x, double tol) const;

    Polyhedron intersect(const Polyhedron& other) const;
    /// All nonempty faces, including the polyhedron itself, in canonical order.
    std::vector<Polyhedron> faces() const;
    /// Smallest face containing x (x must lie in the polyhedron).
    Polyhedron face_containing(const RealVec& x) const;
    bool is_face_of(const Polyhedron& sigma) const;
    /// Tangent cone at the relative interior of a face tau: {v : p + eps v in this polyhedron}.
    Polyhedron tangent_cone(const Polyhedron& tau) const;
    /// Affine hull as a polyhedron.
    Polyhedron affine_hull() const;
    /// Maximum of c.x over the polyhedron (nullopt when unbounded or empty).
    std::optional<ExactReal> maximum(const RealVec& c) const;

    friend bool operator==(const Polyhedron& a, const Polyhedron& b);
    friend bool operator!=(const Polyhedron& a, const Polyhedron& b) { return !(a == b); }
    friend bool operator<(const Polyhedron& a, const Polyhedron& b);

private:
    void canonicalize(Matrix<ExactReal> A, RealVec b, Matrix<ExactReal> E, RealVec f);

    std::size_t ambient_ = 0;
    bool empty_ = false;
    Matrix<ExactReal> A_;
    RealVec b_;
    Matrix<ExactReal> E_;
    RealVec f_;
    RealVec relint_;
};

/// Convex hull of finitely many points, stored by its vertices in lexicographic order.
class Polytope {
public:
    Polytope() = default;
    Polytope(std::size_t ambient, std::vector<RealVec> points);

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<RealVec>& vertices() const { return vertices_; }
    bool is_empty() const { return vertices_.empty(); }
    int dim() const;

    friend bool operator==(const Polytope& a, const Polytope& b);
    friend bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }
    friend bool operator<(const Polytope& a, const Polytope& b);

private:
    std::size_t ambient_ = 0;
    std::vector<RealVec> vertices_;
};

/// Indices (into P.vertices()) of the vertices maximizing w.
std::vector<std::size_t> face_indices(const Polytope& P, const RealVec& w);
/// face_w(P): the face on which x -> w.x attains its maximum.
Polytope face_of(const Polytope& P, const RealVec& w);

/// A face of a polytope together with the closure of its normal cone.
struct NormalCone {
    Polyhedron cone;
    std::vector<std::size_t> face;  // vertex indices
    int face_dim = 0;
};

/// Every face of P with its normal cone, ordered by cone.
std::vector<NormalCone> normal_cones(const Polytope& P);

class PolyhedralComplex;
PolyhedralComplex normal_fan(const Polytope& P);

Polytope minkowski_sum(const Polytope& P, const Polytope& Q);
Polytope minkowski_sum(const std::vector<Polytope>& Ps);
Polytope scale(const Polytope& P, const ExactReal& s);

/// n! times the Euclidean volume; zero for lower-dimensional polytopes.
ExactReal normalized_volume(const Polytope& P);
ExactReal euclidean_volume(const Polytope& P);
/// Simplices (as vertex index lists) of the pulling triangulation used by normalized_volume.
std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope& P);

/**
 * Mixed volume of n polytopes in R^n: the coefficient of l1*...*ln in the
 * Euclidean volume of l1 P1 + ... + ln Pn, computed by inclusion-exclusion.
 */
ExactReal mixed_volume(const std::vector<Polytope>& Ps);

/// max over vertices a of Re(sum_k z_k a_k).
ExactReal support_function(const Polytope& P, const ComplexVec& z);

/// Finite set of cells closed under taking faces, stored in canonical order.
class PolyhedralComplex {
public:
    PolyhedralComplex() = default;
    explicit PolyhedralComplex(std::size_t ambient) : ambient_(ambient) {}
    /// Adds all faces of the given cells, drops empty cells and duplicates.
    PolyhedralComplex(std::size_t ambient, const std::vector<Polyhedron>& cells);

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<Polyhedron>& cells() const { return cells_; }
    bool is_empty() const { return cells_.empty(); }
    /// Maximal cell dimension; -1 when empty.
    int dim() const;
    std::vector<Polyhedron> maximal_cells() const;
    std::vector<Polyhedron> cells_of_dim(int k) const;
    /// Subcomplex of cells of dimension <= k.
    PolyhedralComplex skeleton(int k) const;
    bool is_pure() const;
    bool contains(const Polyhedron& cell) const;
    /// Whether x lies in the support.
    bool support_contains(const RealVec& x) const;
    /// Index of the cell whose relative interior contains x.
    std::optional<std::size_t> cell_containing(const RealVec& x) const;

    friend bool operator==(const PolyhedralComplex& a, const PolyhedralComplex& b) {
        return a.ambient_ == b.ambient_ && a.cells_ == b.cells_;
    }
    friend bool operator!=(const PolyhedralComplex& a, const PolyhedralComplex& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    std::vector<Polyhedron> cells_;
};

/// All nonempty pairwise intersections (common refinement for complete fans).
PolyhedralComplex intersect_complexes(const PolyhedralComplex& S1, const PolyhedralComplex& S2);
/// Cells s1 & s2 whose affine spans sum to the ambient space, closed under faces.
PolyhedralComplex stable_intersection(const PolyhedralComplex& S1, const PolyhedralComplex& S2);
PolyhedralComplex stable_intersection(const std::vector<PolyhedralComplex>& Ss);
/// Star of a cell: the fan of tangent cones of the cells containing tau.
PolyhedralComplex star(const PolyhedralComplex& S, const Polyhedron& tau);

using FloatPoint = std::vector<double>;

/// Symmetric Hausdorff distance of two finite nonempty point sets.
double hausdorff_distance(const std::vector<FloatPoint>& A, const std::vector<FloatPoint>& B);
/// Grid sample of the support inside the box [-radius, radius]^n.
std::vector<FloatPoint> sample_complex(const PolyhedralComplex& S, double radius = 10.0,
                                       double step = 0.05);

}  // namespace exptrop
