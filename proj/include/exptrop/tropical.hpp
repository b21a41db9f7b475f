#pragma once

#include <string>
#include <vector>

#include "exptrop/expsystem.hpp"
#include "exptrop/polyhedra.hpp"

namespace exptrop {

/// (Re phi_1, -Im phi_1, ..., Re phi_n, -Im phi_n): Re(phi . z) as a real form in (x1, y1, ..., xn, yn).
RealVec embed_exponent(const ComplexVec& phi);
/// Lifts a cell in R^n (x coordinates) to the cylinder cell x R^n in R^{2n}.
Polyhedron lift_to_cylinder(const Polyhedron& cell);

/// Convex hull of the exponents: in R^n when they are real, else embedded in R^{2n}.
Polytope newton_polytope(const ExpSum& f);
Polytope newton_polytope_embedded(const ExpSum& f);

/// Subsum of the terms whose exponents maximize x . k.
ExpSum initial_form(const ExpSum& f, const RealVec& x);

struct TropicalComplex {
    enum class Origin { hypersurface, prevariety, collection };
    PolyhedralComplex complex;
    Origin origin = Origin::hypersurface;
    std::vector<std::string> warnings;
};
std::string to_string(TropicalComplex::Origin o);

/// (n-1)-skeleton of the normal fan of the Newton polytope.
TropicalComplex trop_hypersurface(const ExpSum& f);
/// Intersection of the hypersurface tropicalizations of the given generators.
TropicalComplex trop_prevariety(const std::vector<ExpSum>& fs);

/// Same L with each W polynomial replaced by its initial form at x in relint(tau).
Instance initial_system(const Instance& inst, const Polyhedron& tau, const RealVec& x);

struct Shortening {
    enum class Kind { inconsistent_monomial, initial_instance };
    std::vector<Polytope> faces;
    std::vector<ExpSum> equations;
    RealVec witness;
    /// Cell of the common refinement whose relative interior contains the witness.
    Polyhedron cell;
    Kind kind = Kind::inconsistent_monomial;
};
std::string to_string(Shortening::Kind k);

/**
 * One shortening per face F of the first Newton polytope other than the whole
 * system: among refinement cells inside the relative interior of the normal
 * cone of F, the one whose faces have the largest total dimension (ties broken
 * by the lexicographically smallest witness).
 */
std::vector<Shortening> enumerate_shortenings(const std::vector<ExpSum>& system);
std::vector<Shortening> enumerate_shortenings(const AttachedSystem& sys);

/// In R^{2n}: cylinders over Trop(f) for each W polynomial, and Re(lambda . z) = 0 per L row.
std::vector<PolyhedralComplex> complex_collection(const Instance& inst);
PolyhedralComplex collection_stable_intersection(const Instance& inst);

struct WitnessCell {
    Polyhedron cell;   // maximal cell of the collection's stable intersection, in R^{2n}
    RealVec point;     // x + iy in relint(cell), as (x1, y1, ..., xn, yn)
    RealVec x;         // real part, nonzero
    Polyhedron tau;    // prevariety cell whose relative interior contains x
    Instance initial;  // L x W_tau
};

/// All maximal stable-intersection cells yielding a positive-dimensional tau with L x W_tau rotund.
std::vector<WitnessCell> find_witness_cells(const Instance& inst);
WitnessCell find_witness_cell(const Instance& inst);

}  // namespace exptrop
