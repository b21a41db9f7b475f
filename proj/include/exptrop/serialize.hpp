#pragma once

#include <json.hpp>

#include "exptrop/amoeba.hpp"
#include "exptrop/rotundity.hpp"
#include "exptrop/solver.hpp"
#include "exptrop/tropical.hpp"

namespace exptrop {

using json = nlohmann::json;

/// Complex numbers are written as [re, im].
json to_json(cplx z);
json to_json(const CVec& v);
json to_json(const RealVec& v);
json to_json(const ComplexVec& v);

/// {dim, equalities, inequalities, relint}: rows {"a": [...], "b": literal}, meaning a.x = b or a.x <= b.
json to_json(const Polyhedron& P);
json to_json(const Polytope& P);
/// {ambient, dim, cells}; cells in canonical order.
json to_json(const PolyhedralComplex& S);
json to_json(const TropicalComplex& T);
json to_json(const RotundityReport& r);
json to_json(const Shortening& s);
json to_json(const WitnessCell& c);
json to_json(const SolutionCertificate& c);
json to_json(const NewtonCensus& c);
json to_json(const RationalApproximation& a);

}  // namespace exptrop
