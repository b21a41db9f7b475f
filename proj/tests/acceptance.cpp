// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "exptrop/amoeba.hpp"
#include "exptrop/rotundity.hpp"
#include "exptrop/solver.hpp"
#include "exptrop/tropical.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace exptrop;

namespace {

struct Outcome {
    std::vector<std::string> problems;
    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

RealVec v(std::initializer_list<long> xs) {
    RealVec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

ExpSum laurent2(std::initializer_list<std::pair<long, std::pair<long, long>>> terms) {
    std::vector<std::pair<ExactComplex, std::vector<long>>> out;
    for (auto [c, e] : terms) out.emplace_back(ExactComplex(c), std::vector<long>{e.first, e.second});
    return ExpSum::laurent(2, out);
}

PolyhedralComplex three_rays() {
    return PolyhedralComplex(2, {Polyhedron::ray(v({1, 1})), Polyhedron::ray(v({-1, 0})), Polyhedron::ray(v({0, -1}))});
}

Polytope from_oracle(const std::vector<oracle::Pt>& pts) {
    std::vector<RealVec> out;
    for (const auto& p : pts) out.push_back({ExactReal(p.first), ExactReal(p.second)});
    return Polytope(2, out);
}

ExpSum random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(2, 4), expo(-2, 2), coef(1, 3), sgn(0, 1);
    for (;;) {
        std::vector<std::pair<ExactComplex, std::vector<long>>> terms;
        const int m = nterms(rng);
        for (int t = 0; t < m; ++t) terms.emplace_back(ExactComplex(sgn(rng) ? coef(rng) : -coef(rng)), std::vector<long>{expo(rng), expo(rng)});
        ExpSum f = ExpSum::laurent(2, terms);
        if (f.size() >= 2) return f;
    }
}

Instance random_instance(std::mt19937_64& rng, const std::vector<ExactComplex>& pool) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (;;) {
        ComplexVec r{pool[pick(rng)], pool[pick(rng)]};
        if (r[0].is_zero() && r[1].is_zero()) continue;
        Instance inst;
        inst.n = 2;
        inst.L = {r};
        inst.W = {random_poly(rng)};
        for (const auto& x : r)
            if (x.radicand() != 0) inst.irrational = x.radicand();
        inst.validate();
        return inst;
    }
}

/// Moduli a, b, c close up into a triangle.
bool triangle_oracle(double a, double b, double c) { return a <= b + c && b <= a + c && c <= a + b; }

Outcome criterion1() {
    Outcome o;
    for (const Instance& inst : {fixture::l_sqrt2(), fixture::l_i()}) {
        o.expect(is_additively_free(inst.L, inst.n), inst.name + " not additively free");
        o.expect(is_rotund(inst).rotund, inst.name + " not rotund");
    }
    const RotundityReport r = is_rotund(fixture::nonrotund());
    o.expect(!r.rotund, "nonrotund reported rotund");
    o.expect(r.failing_J.has_value() && !r.failing_J->empty(), "no failing set J");
    return o;
}

Outcome criterion2() {
    Outcome o;
    const ExpSum f = fixture::line_poly();
    const TropicalComplex t = trop_hypersurface(f);
    o.expect(t.complex == three_rays(), "Trop(w1+w2+1) differs from {0, ray(1,1), ray(-1,0), ray(0,-1)}");
    const ExpSum one = laurent2({{1, {0, 0}}});
    const ExpSum w1 = laurent2({{1, {1, 0}}});
    const ExpSum w2 = laurent2({{1, {0, 1}}});
    const std::vector<std::pair<RealVec, ExpSum>> cases{
        {v({-1, -2}), one},
        {v({3, 1}), w1},
        {v({-5, 2}), w2},
        {v({2, 2}), laurent2({{1, {1, 0}}, {1, {0, 1}}})},
        {v({0, -3}), laurent2({{1, {1, 0}}, {1, {0, 0}}})},
        {v({-1, 0}), laurent2({{1, {0, 1}}, {1, {0, 0}}})},
        {v({0, 0}), f},
    };
    for (std::size_t k = 0; k < cases.size(); ++k)
        o.expect(initial_form(f, cases[k].first) == cases[k].second, "initial form case " + std::to_string(k + 1));
    return o;
}

Outcome criterion3() {
    Outcome o;
    const std::vector<ExpSum> system{laurent2({{1, {1, 0}}, {1, {0, 1}}}), fixture::line_poly()};
    const auto sh = enumerate_shortenings(system);
    int inconsistent = 0;
    int initial = 0;
    for (const auto& s : sh) (s.kind == Shortening::Kind::inconsistent_monomial ? inconsistent : initial)++;
    o.expect(sh.size() == 3, "expected 3 shortenings, got " + std::to_string(sh.size()));
    o.expect(inconsistent == 2 && initial == 1, "expected 2 inconsistent and 1 initial instance");
    return o;
}

Outcome criterion4() {
    Outcome o;
    const Polytope e1(2, {v({0, 0}), v({1, 0})});
    const Polytope e2(2, {v({0, 0}), v({0, 1})});
    o.expect(mixed_volume({e1, e2}) == ExactReal(1), "MV(e1, e2) != 1");
    std::mt19937_64 rng(4);
    int mismatches = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = oracle::random_lattice_set(rng, 1 + trial % 5, 3);
        const auto q = oracle::random_lattice_set(rng, 1 + (trial / 5) % 5, 3);
        mismatches += !(mixed_volume({from_oracle(p), from_oracle(q)}) == ExactReal(oracle::mixed_area_by_interpolation(p, q)));
    }
    o.expect(mismatches == 0, std::to_string(mismatches) + " of 50 pairs disagree with the interpolation oracle");
    return o;
}

Outcome criterion5() {
    Outcome o;
    const PolyhedralComplex origin(2, {Polyhedron::point(v({0, 0}))});
    const PolyhedralComplex xaxis(2, {Polyhedron::hyperplane(v({0, 1}))});
    const PolyhedralComplex slope(2, {Polyhedron::hyperplane({ExactReal::sqrt_of(2), ExactReal(-1)})});
    o.expect(stable_intersection(three_rays(), xaxis) == origin, "Trop(W) and the x-axis");
    o.expect(stable_intersection(three_rays(), slope) == origin, "Trop(W) and Re(L_sqrt2)");
    std::mt19937_64 rng(31);
    int disagreements = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const Polytope P = from_oracle(oracle::random_lattice_set(rng, 1 + trial % 4, 2));
        const Polytope Q = from_oracle(oracle::random_lattice_set(rng, 2 + trial % 3, 2));
        const PolyhedralComplex st = stable_intersection(normal_fan(P).skeleton(1), normal_fan(Q).skeleton(1));
        std::vector<RealVec> weights{v({3, -7}), v({-2, -5})};
        const PolyhedralComplex refinement = intersect_complexes(normal_fan(P), normal_fan(Q));
        for (const auto& c : refinement.cells()) weights.push_back(c.relint_point());
        for (const auto& w : weights) {
            const Polytope Fp = face_of(P, w);
            const Polytope Fq = face_of(Q, w);
            const bool mv = !mixed_volume({Fp, Fq}).is_zero();
            const bool dims = Fp.dim() >= 1 && Fq.dim() >= 1 && minkowski_sum(Fp, Fq).dim() >= 2;
            disagreements += (st.support_contains(w) != mv) + (mv != dims);
        }
    }
    o.expect(disagreements == 0, std::to_string(disagreements) + " Bernstein criterion disagreements");
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6);
    const std::vector<ExactComplex> real_pool{0, 1, -1, 2, -2, ExactReal::sqrt_of(2), -ExactReal::sqrt_of(2)};
    int rotund = 0;
    int disagreements = 0;
    for (int t = 0; t < 50; ++t) {
        const Instance inst = random_instance(rng, real_pool);
        const bool r = is_rotund(inst).rotund;
        disagreements += (r != mixed_volume_check(inst).rotund) + (r != stable_intersection_check(inst).rotund);
        rotund += r;
    }
    // No zero entries: the stable intersection criterion assumes L additively free.
    const std::vector<ExactComplex> complex_pool{1, -1, ExactComplex::i(), -ExactComplex::i(), ExactReal::sqrt_of(2),
                                                 -ExactReal::sqrt_of(2)};
    for (int t = 0; t < 20; ++t) {
        const Instance inst = random_instance(rng, complex_pool);
        disagreements += is_rotund(inst).rotund != stable_intersection_check(inst).rotund;
    }
    const Instance flat = fixture::nonrotund();
    o.expect(!is_rotund(flat).rotund && !mixed_volume_check(flat).rotund && !stable_intersection_check(flat).rotund,
             "non-rotund golden not rejected by every criterion");
    o.expect(disagreements == 0, std::to_string(disagreements) + " disagreements (" + std::to_string(rotund) + " of 50 real rotund)");
    return o;
}

Outcome criterion7() {
    Outcome o;
    const Instance inst = fixture::l_sqrt2();
    const SolveResult res = solve(inst);
    o.expect(!res.certificates.empty(), "no certificate");
    for (const auto& c : res.certificates) {
        o.expect(c.max_residual() < 1e-10, "residual above 1e-10");
        o.expect(std::abs(std::sqrt(2.0) * c.z[0] - c.z[1]) < 1e-9, "certificate off L");
    }
    const int roots = count_roots_rectangle(build_square_system(inst), {-20, 20, -20, 20});
    o.expect(roots >= 1, "argument principle finds no root in [-20,20]^2");
    return o;
}

Outcome criterion8() {
    Outcome o;
    const Instance inst = fixture::l_i();
    const SolveResult res = solve(inst);
    o.expect(!res.certificates.empty(), "no certificate");
    for (const auto& c : res.certificates) o.expect(c.max_residual() < 1e-10, "residual above 1e-10");
    bool found = false;
    for (const auto& cell : find_witness_cells(inst)) {
        if (cell.tau != Polyhedron::ray(v({1, 1}))) continue;
        found = true;
        const auto zs = binomial_initial_solutions(cell.initial, 3);
        for (std::size_t h = 0; h < 3; ++h) {
            const double f = (2.0 * h + 1) / 2;
            const bool ok = std::abs(zs[h][0] - f * cplx(M_PI, -M_PI)) < 1e-12 && std::abs(zs[h][1] - f * cplx(M_PI, M_PI)) < 1e-12;
            o.expect(ok, "seed h = " + std::to_string(h) + " differs from (2h+1)/2 (pi - i pi, pi + i pi)");
        }
    }
    o.expect(found, "no witness cell with tau = ray(1,1)");
    return o;
}

Outcome criterion9() {
    Outcome o;
    const Instance inst = fixture::make(2, {}, {fixture::line_poly()});
    const auto rows = convergence_experiment(inst, {M_E, std::exp(2.0), std::exp(4.0), std::exp(8.0)}, 5000, 42);
    std::ostringstream table;
    for (const auto& r : rows) table << ' ' << r.hausdorff;
    for (std::size_t k = 1; k < rows.size(); ++k)
        o.expect(rows[k - 1].hausdorff - rows[k].hausdorff > 0.05, "distances not decreasing by 0.05:" + table.str());
    return o;
}

Outcome criterion10() {
    Outcome o;
    const RealTracePoint r = real_trace_point(fixture::l_sqrt2());
    o.expect(std::hypot(r.x[0], r.x[1]) < 1e-6, "trace point is not (0, 0)");
    const CVec& w = r.certificates.at(0);
    o.expect(std::abs(w[0] + w[1] + 1.0) < 1e-12, "certificate is not on W");
    o.expect(std::abs(std::log(std::abs(w[0])) - r.x[0]) < 1e-9 && std::abs(std::log(std::abs(w[1])) - r.x[1]) < 1e-9,
             "certificate does not lie over x");
    o.expect(std::abs(std::arg(w[0]) - r.phase) < 1e-15, "phase does not match the certificate");
    int disagreements = 0;
    for (int i = 0; i <= 40; ++i)
        for (int j = 0; j <= 40; ++j) {
            const double x1 = -3 + 0.15 * i;
            const double x2 = -3 + 0.15 * j;
            const bool expected = triangle_oracle(std::exp(x1), std::exp(x2), 1);
            disagreements += amoeba_member_line({x1, x2}, 1, 1, 1) != expected;
            disagreements += amoeba_witness(fixture::line_poly(), {x1, x2}, 1e-9, 0).has_value() != expected;
        }
    o.expect(disagreements == 0, std::to_string(disagreements) + " grid points disagree with the triangle oracle");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"freeness and rotundity goldens", 1, criterion1},
        {"tropical line and its seven initial forms", 1, criterion2},
        {"three shortenings, two inconsistent", 1, criterion3},
        {"mixed volume goldens and interpolation oracle", 10, criterion4},
        {"stable intersection goldens and Bernstein criterion", 5, criterion5},
        {"rotundity criteria agree", 30, criterion6},
        {"solver, real L_sqrt2", 10, criterion7},
        {"solver, complex L_i and closed-form seeds", 10, criterion8},
        {"amoeba convergence to the tropical line", 30, criterion9},
        {"real trace at the origin", 5, criterion10},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception& e) {
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= criteria[k].limit_s)
            o.problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(criteria[k].limit_s) + " s");
        const bool ok = o.problems.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].title << " ("
                  << static_cast<long>(secs * 1000) << " ms)";
        for (const auto& p : o.problems) std::cout << "; " << p;
        std::cout << '\n';
    }
    return failed ? 1 : 0;
}
