#include "exptrop/tropical.hpp"

#include <algorithm>
#include <map>

#include "exptrop/rotundity.hpp"

namespace exptrop {

RealVec embed_exponent(const ComplexVec& phi) {
    RealVec out;
    out.reserve(2 * phi.size());
    for (const auto& c : phi) {
        out.push_back(c.re());
        out.push_back(-c.im());
    }
    return out;
}

Polyhedron lift_to_cylinder(const Polyhedron& cell) {
    const std::size_t n = cell.ambient_dim();
    if (cell.is_empty()) return Polyhedron::empty_set(2 * n);
    auto lift_rows = [n](const Matrix<ExactReal>& rows) {
        Matrix<ExactReal> out;
        for (const auto& r : rows) {
            RealVec l(2 * n, ExactReal(0));
            for (std::size_t k = 0; k < n; ++k) l[2 * k] = r[k];
            out.push_back(std::move(l));
        }
        return out;
    };
    return Polyhedron::make(2 * n, lift_rows(cell.inequalities()), cell.inequality_rhs(),
                            lift_rows(cell.equations()), cell.equation_rhs());
}

Polytope newton_polytope(const ExpSum& f) {
    if (f.empty()) throw PreconditionError("Newton polytope of an empty sum");
    if (!f.has_real_exponents()) return newton_polytope_embedded(f);
    std::vector<RealVec> pts;
    for (const auto& t : f.terms()) {
        RealVec p;
        for (const auto& c : t.exponent) p.push_back(c.re());
        pts.push_back(std::move(p));
    }
    return Polytope(f.n(), std::move(pts));
}

Polytope newton_polytope_embedded(const ExpSum& f) {
    if (f.empty()) throw PreconditionError("Newton polytope of an empty sum");
    std::vector<RealVec> pts;
    for (const auto& t : f.terms()) pts.push_back(embed_exponent(t.exponent));
    return Polytope(2 * f.n(), std::move(pts));
}

namespace {

RealVec term_point(const Term& t, std::size_t dim) {
    if (dim == t.exponent.size()) {
        RealVec p;
        for (const auto& c : t.exponent) p.push_back(c.re());
        return p;
    }
    return embed_exponent(t.exponent);
}

/// Terms of f whose exponent lies in the given face.
ExpSum restrict_to_face(const ExpSum& f, const Polytope& face) {
    const std::size_t dim = face.ambient_dim();
    // A point lies in the face iff it maximizes the same functionals; the face is
    // a convex hull of exponents of f, so membership reduces to hull equality.
    std::vector<Term> kept;
    for (const auto& t : f.terms()) {
        const RealVec p = term_point(t, dim);
        std::vector<RealVec> pts = face.vertices();
        pts.push_back(p);
        if (Polytope(dim, pts) == face) kept.push_back(t);
    }
    return ExpSum(f.n(), std::move(kept));
}

bool is_monomial(const ExpSum& f) { return f.size() == 1; }

}  // namespace

ExpSum initial_form(const ExpSum& f, const RealVec& x) {
    if (f.empty()) return f;
    const std::size_t dim = x.size();
    if (dim != f.n() && dim != 2 * f.n()) throw DimensionMismatch("weight vector length");
    if (dim == f.n() && !f.has_real_exponents())
        throw PreconditionError("complex exponents need a weight in R^{2n}");
    std::vector<ExactReal> values;
    for (const auto& t : f.terms()) values.push_back(dot(x, term_point(t, dim)));
    const ExactReal best = *std::max_element(values.begin(), values.end());
    std::vector<Term> kept;
    for (std::size_t k = 0; k < values.size(); ++k)
        if (values[k] == best) kept.push_back(f.terms()[k]);
    return ExpSum(f.n(), std::move(kept));
}

std::string to_string(TropicalComplex::Origin o) {
    switch (o) {
        case TropicalComplex::Origin::hypersurface: return "hypersurface";
        case TropicalComplex::Origin::prevariety: return "prevariety";
        case TropicalComplex::Origin::collection: return "collection";
    }
    return "unknown";
}

TropicalComplex trop_hypersurface(const ExpSum& f) {
    TropicalComplex out;
    out.origin = TropicalComplex::Origin::hypersurface;
    if (f.empty()) throw PreconditionError("tropicalization of an empty sum");
    if (!f.has_real_exponents()) throw PreconditionError("tropicalization needs real exponents");
    const std::size_t n = f.n();
    if (is_monomial(f)) {
        out.complex = PolyhedralComplex(n);
        out.warnings.push_back("monomial input: the ideal is generated by a monomial, tropicalization is empty");
        return out;
    }
    out.complex = normal_fan(newton_polytope(f)).skeleton(static_cast<int>(n) - 1);
    return out;
}

TropicalComplex trop_prevariety(const std::vector<ExpSum>& fs) {
    if (fs.empty()) throw PreconditionError("prevariety of an empty list");
    TropicalComplex out = trop_hypersurface(fs[0]);
    for (std::size_t k = 1; k < fs.size(); ++k) {
        TropicalComplex next = trop_hypersurface(fs[k]);
        out.complex = intersect_complexes(out.complex, next.complex);
        out.warnings.insert(out.warnings.end(), next.warnings.begin(), next.warnings.end());
    }
    out.origin = TropicalComplex::Origin::prevariety;
    return out;
}

Instance initial_system(const Instance& inst, const Polyhedron& tau, const RealVec& x) {
    if (tau.ambient_dim() != inst.n || x.size() != inst.n) throw DimensionMismatch("cell and weight must live in R^n");
    if (!tau.in_relint(x)) throw PreconditionError("x is not in the relative interior of tau");
    std::vector<RealVec> probes{x};
    const RealVec& p = tau.relint_point();
    probes.push_back(p);
    RealVec mid(inst.n), quarter(inst.n);
    for (std::size_t k = 0; k < inst.n; ++k) {
        mid[k] = (x[k] + p[k]) * ExactReal::fraction(1, 2);
        quarter[k] = x[k] * ExactReal::fraction(1, 4) + p[k] * ExactReal::fraction(3, 4);
    }
    probes.push_back(mid);
    probes.push_back(quarter);

    Instance out = inst;
    for (std::size_t j = 0; j < inst.W.size(); ++j) {
        out.W[j] = initial_form(inst.W[j], x);
        for (std::size_t s = 1; s < probes.size(); ++s)
            if (initial_form(inst.W[j], probes[s]) != out.W[j])
                throw PreconditionError("initial forms of W polynomial " + std::to_string(j) +
                                        " disagree across the relative interior of tau; the prevariety cell "
                                        "is coarser than the tropical variety there");
    }
    if (!inst.name.empty()) out.name = inst.name + "_initial";
    return out;
}

std::string to_string(Shortening::Kind k) {
    return k == Shortening::Kind::inconsistent_monomial ? "inconsistent_monomial" : "initial_instance";
}

std::vector<Shortening> enumerate_shortenings(const std::vector<ExpSum>& system) {
    if (system.empty()) return {};
    bool real = true;
    for (const auto& f : system) real &= f.has_real_exponents();
    std::vector<Polytope> Ps;
    for (const auto& f : system) Ps.push_back(real ? newton_polytope(f) : newton_polytope_embedded(f));

    PolyhedralComplex refinement = normal_fan(Ps[0]);
    for (std::size_t j = 1; j < Ps.size(); ++j) refinement = intersect_complexes(refinement, normal_fan(Ps[j]));

    struct Best {
        int total = -1;
        Polyhedron cell;
        RealVec witness;
        std::vector<Polytope> faces;
    };
    // Keyed by the face of the first polytope, in the order of its normal cones.
    std::map<std::vector<std::size_t>, Best> best;
    for (const auto& cell : refinement.cells()) {
        const RealVec& w = cell.relint_point();
        std::vector<Polytope> faces;
        int total = 0;
        bool full = true;
        for (const auto& P : Ps) {
            faces.push_back(face_of(P, w));
            total += faces.back().dim();
            full &= faces.back() == P;
        }
        if (full) continue;
        const auto key = face_indices(Ps[0], w);
        auto it = best.find(key);
        const bool better = it == best.end() || total > it->second.total ||
                            (total == it->second.total && compare_vectors(w, it->second.witness) == Ordering::lt);
        if (better) best[key] = Best{total, cell, w, std::move(faces)};
    }

    std::vector<Shortening> out;
    for (auto& [key, b] : best) {
        Shortening s;
        s.faces = b.faces;
        s.witness = b.witness;
        s.cell = b.cell;
        bool monomial = false;
        for (std::size_t j = 0; j < system.size(); ++j) {
            s.equations.push_back(restrict_to_face(system[j], s.faces[j]));
            monomial |= is_monomial(s.equations.back());
        }
        s.kind = monomial ? Shortening::Kind::inconsistent_monomial : Shortening::Kind::initial_instance;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Shortening> enumerate_shortenings(const AttachedSystem& sys) { return enumerate_shortenings(sys.all()); }

std::vector<PolyhedralComplex> complex_collection(const Instance& inst) {
    if (inst.n > 4) throw PreconditionError("complex_collection works in R^{2n} with 2n <= 8");
    const std::size_t N = 2 * inst.n;
    std::vector<PolyhedralComplex> out;
    for (const auto& f : inst.W) {
        const TropicalComplex t = trop_hypersurface(f);
        std::vector<Polyhedron> cells;
        for (const auto& c : t.complex.cells()) cells.push_back(lift_to_cylinder(c));
        out.emplace_back(N, cells);
    }
    // Re<z, conj(lambda)> = Re(lambda . z), which covers real rows as well.
    for (const auto& row : inst.L) out.emplace_back(N, std::vector<Polyhedron>{Polyhedron::hyperplane(embed_exponent(row))});
    return out;
}

PolyhedralComplex collection_stable_intersection(const Instance& inst) {
    const auto collection = complex_collection(inst);
    if (collection.empty()) return PolyhedralComplex(2 * inst.n, {Polyhedron::whole_space(2 * inst.n)});
    return stable_intersection(collection);
}

namespace {

RealVec real_part(const RealVec& p) {
    RealVec x;
    for (std::size_t k = 0; k < p.size(); k += 2) x.push_back(p[k]);
    return x;
}

/// A relative-interior point of the cell whose real part is nonzero, if there is one.
std::optional<RealVec> point_with_nonzero_real_part(const Polyhedron& cell) {
    const RealVec& p = cell.relint_point();
    if (!is_zero_vector(real_part(p))) return p;
    const std::size_t N = cell.ambient_dim();
    for (std::size_t k = 0; k < N; k += 2)
        for (int sign : {1, -1}) {
            RealVec a(N, ExactReal(0));
            a[k] = ExactReal(-sign);
            const Polyhedron slab = Polyhedron::make(N, {a}, {ExactReal(-1)});  // sign * x_k >= 1
            const Polyhedron part = cell.intersect(slab);
            if (part.is_empty()) continue;
            const RealVec& r = part.relint_point();
            RealVec q(N);
            for (std::size_t c = 0; c < N; ++c) q[c] = (p[c] + r[c]) * ExactReal::fraction(1, 2);
            return q;
        }
    return std::nullopt;
}

}  // namespace

std::vector<WitnessCell> find_witness_cells(const Instance& inst) {
    const PolyhedralComplex st = collection_stable_intersection(inst);
    if (st.is_empty())
        throw PreconditionError("empty stable intersection: the instance is not rotund, so no witness cell exists");
    std::vector<std::pair<Polyhedron, RealVec>> candidates;
    for (const auto& cell : st.maximal_cells())
        if (auto p = point_with_nonzero_real_part(cell)) candidates.emplace_back(cell, *p);
    if (candidates.empty())
        throw PreconditionError("every stable-intersection cell lies in iR^n: L is real, use the real pipeline");

    const TropicalComplex prev = trop_prevariety(inst.W);
    std::vector<WitnessCell> out;
    for (auto& [cell, point] : candidates) {
        const RealVec x = real_part(point);
        const auto idx = prev.complex.cell_containing(x);
        if (!idx) continue;
        const Polyhedron& tau = prev.complex.cells()[*idx];
        if (tau.dim() <= 0) continue;
        Instance initial = initial_system(inst, tau, x);
        if (!is_rotund(initial).rotund) continue;
        out.push_back(WitnessCell{cell, point, x, tau, std::move(initial)});
    }
    return out;
}

WitnessCell find_witness_cell(const Instance& inst) {
    auto cells = find_witness_cells(inst);
    if (cells.empty()) throw NotFound("no stable-intersection cell yields a positive-dimensional rotund initial system");
    return cells.front();
}

}  // namespace exptrop
