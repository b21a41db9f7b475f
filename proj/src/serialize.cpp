#include "exptrop/serialize.hpp"

namespace exptrop {

namespace {

json rows(const Matrix<ExactReal>& A, const RealVec& b) {
    json out = json::array();
    for (std::size_t r = 0; r < A.size(); ++r) out.push_back({{"a", to_json(A[r])}, {"b", b[r].to_string()}});
    return out;
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVec& v) {
    json out = json::array();
    for (cplx z : v) out.push_back(to_json(z));
    return out;
}

json to_json(const RealVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

json to_json(const ComplexVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

json to_json(const Polyhedron& P) {
    json out{{"dim", P.dim()}};
    out["equalities"] = rows(P.equations(), P.equation_rhs());
    out["inequalities"] = rows(P.inequalities(), P.inequality_rhs());
    if (!P.is_empty()) out["relint"] = to_json(P.relint_point());
    return out;
}

json to_json(const Polytope& P) {
    json v = json::array();
    for (const auto& p : P.vertices()) v.push_back(to_json(p));
    return {{"dim", P.dim()}, {"vertices", v}};
}

json to_json(const PolyhedralComplex& S) {
    json cells = json::array();
    for (const auto& c : S.cells()) cells.push_back(to_json(c));
    return {{"ambient", S.ambient_dim()}, {"dim", S.dim()}, {"cells", cells}};
}

json to_json(const TropicalComplex& T) {
    return {{"origin", to_string(T.origin)}, {"complex", to_json(T.complex)}, {"warnings", T.warnings}};
}

json to_json(const RotundityReport& r) {
    json out{{"rotund", r.rotund}, {"method", to_string(r.method)}, {"numeric", r.numeric}};
    if (r.witness_basis) {
        json w = json::array();
        for (auto [j, v] : *r.witness_basis) w.push_back({{"polynomial", j}, {"vertex", v}});
        out["witness"] = w;
    }
    if (r.failing_J) out["failure"] = {{"failing_J", *r.failing_J}};
    if (r.mixed_volume) out["mixed_volume"] = {{"exact", r.mixed_volume->to_string()}, {"value", r.mixed_volume->to_double()}};
    return out;
}

json to_json(const Shortening& s) {
    json faces = json::array();
    for (const auto& f : s.faces) faces.push_back(to_json(f));
    json eqs = json::array();
    for (const auto& e : s.equations) eqs.push_back(e.to_string());
    return {{"kind", to_string(s.kind)}, {"faces", faces}, {"equations", eqs}, {"witness", to_json(s.witness)},
            {"cell", to_json(s.cell)}};
}

json to_json(const WitnessCell& c) {
    json w = json::array();
    for (const auto& f : c.initial.W) w.push_back(f.to_string());
    return {{"cell", to_json(c.cell)}, {"point", to_json(c.point)}, {"x", to_json(c.x)}, {"tau", to_json(c.tau)},
            {"initial_W", w}};
}

json to_json(const SolutionCertificate& c) {
    json out{{"u", to_json(c.u)},
             {"z", to_json(c.z)},
             {"w", to_json(c.w)},
             {"residuals", c.residuals},
             {"l_residuals", c.l_residuals},
             {"max_residual", c.max_residual()},
             {"source", c.source},
             {"start_index", c.start_index},
             {"iterations", c.iterations}};
    out["seed_cell"] = c.seed_cell ? json(*c.seed_cell) : json(nullptr);
    return out;
}

json to_json(const NewtonCensus& c) {
    return {{"starts", c.starts},   {"converged", c.converged}, {"duplicates", c.duplicates},
            {"singular", c.singular}, {"stalled", c.stalled},     {"exhausted", c.exhausted}};
}

json to_json(const RationalApproximation& a) {
    json conv = json::array();
    for (auto [p, q] : a.convergents) conv.push_back({p, q});
    json sys = json::array();
    for (const auto& f : a.system) sys.push_back(f.to_string());
    json red = json::array();
    for (const auto& f : a.reduced) red.push_back(f.to_string());
    return {{"Q", a.Q}, {"convergents", conv}, {"rows", a.rows}, {"system", sys}, {"lattice", a.lattice}, {"reduced", red}};
}

}  // namespace exptrop
