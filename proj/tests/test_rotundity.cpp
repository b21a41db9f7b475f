#include <doctest.h>

#include <random>

#include "exptrop/rotundity.hpp"
#include "exptrop/tropical.hpp"
#include "fixtures.hpp"

using namespace exptrop;

namespace {

ComplexVec e(std::size_t k, std::size_t n) {
    ComplexVec v(n, ExactComplex(0));
    v[k] = ExactComplex(1);
    return v;
}

/// Tries every choice of one vector per set.
bool brute_force_transversal(const std::vector<std::vector<ComplexVec>>& sets) {
    std::vector<std::size_t> idx(sets.size(), 0);
    for (const auto& s : sets)
        if (s.empty()) return false;
    for (;;) {
        Matrix<ExactComplex> m;
        for (std::size_t j = 0; j < sets.size(); ++j) m.push_back(sets[j][idx[j]]);
        if (rank(m) == sets.size()) return true;
        std::size_t k = 0;
        while (k < sets.size() && ++idx[k] == sets[k].size()) idx[k++] = 0;
        if (k == sets.size()) return false;
    }
}

ExactComplex pick(std::mt19937_64& rng, const std::vector<ExactComplex>& pool) {
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

ExpSum random_poly(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> nterms(2, 4), expo(-2, 2), coef(1, 3), sgn(0, 1);
    for (;;) {
        std::vector<std::pair<ExactComplex, std::vector<long>>> terms;
        const int m = nterms(rng);
        for (int t = 0; t < m; ++t) {
            std::vector<long> k(n);
            for (auto& x : k) x = expo(rng);
            terms.emplace_back(ExactComplex(sgn(rng) ? coef(rng) : -coef(rng)), k);
        }
        ExpSum f = ExpSum::laurent(n, terms);
        if (f.size() >= 2) return f;
    }
}

Instance random_instance(std::mt19937_64& rng, const std::vector<ExactComplex>& pool) {
    for (;;) {
        ComplexVec r{pick(rng, pool), pick(rng, pool)};
        if (is_zero_vector(r)) continue;
        Instance inst;
        inst.n = 2;
        inst.L = {r};
        inst.W = {random_poly(rng, 2)};
        for (const auto& x : r)
            if (x.radicand() != 0) inst.irrational = x.radicand();
        inst.validate();
        return inst;
    }
}

}  // namespace

TEST_CASE("rado examples") {
    SUBCASE("standard basis") {
        const auto r = rado_check({{e(0, 2)}, {e(1, 2)}}, 2);
        CHECK(r.has_transversal);
        CHECK(r.choice == std::vector<std::size_t>{0, 0});
    }
    SUBCASE("repeated vector") {
        const auto r = rado_check({{e(0, 2)}, {e(0, 2)}}, 2);
        CHECK_FALSE(r.has_transversal);
        CHECK(r.failing_J == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("greedy choice needs augmentation") {
        // Greedy takes e1 from the first set, which the second set needs.
        const auto r = rado_check({{e(0, 2), e(1, 2)}, {e(0, 2)}}, 2);
        REQUIRE(r.has_transversal);
        CHECK(r.choice == std::vector<std::size_t>{1, 0});
    }
    SUBCASE("empty set fails alone") {
        const auto r = rado_check({{e(0, 2)}, {}}, 2);
        CHECK_FALSE(r.has_transversal);
        CHECK(r.failing_J == std::vector<std::size_t>{1});
    }
    SUBCASE("projected triangle for L_sqrt2") {
        const auto rep = is_rotund(fixture::l_sqrt2());
        CHECK(rep.rotund);
    }
    CHECK_THROWS_AS(rado_check({{e(0, 2)}}, 2), PreconditionError);
}

TEST_CASE("rado agrees with exhaustive search and its certificates check out") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dimd(1, 4), setsize(0, 3), entry(-1, 1), sparse(0, 2);
    int transversal = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = dimd(rng);
        std::vector<std::vector<ComplexVec>> sets(d);
        for (auto& s : sets) {
            const int m = setsize(rng);
            for (int k = 0; k < m; ++k) {
                ComplexVec v(d);
                for (auto& x : v) x = sparse(rng) == 0 ? ExactComplex(entry(rng)) : ExactComplex(0);
                s.push_back(v);
            }
        }
        const auto r = rado_check(sets, d);
        CHECK(r.has_transversal == brute_force_transversal(sets));
        if (r.has_transversal) {
            ++transversal;
            Matrix<ExactComplex> m;
            for (std::size_t j = 0; j < d; ++j) m.push_back(sets[j][r.choice[j]]);
            CHECK(rank(m) == d);
        } else {
            REQUIRE_FALSE(r.failing_J.empty());
            Matrix<ExactComplex> span;
            for (auto j : r.failing_J) span.insert(span.end(), sets[j].begin(), sets[j].end());
            CHECK((span.empty() ? 0 : rank(span)) < r.failing_J.size());
        }
    }
    CHECK(transversal > 30);
    CHECK(transversal < 270);
}

TEST_CASE("additive freeness") {
    CHECK(is_additively_free(fixture::l_sqrt2().L, 2));
    CHECK(is_additively_free(fixture::l_i().L, 2));
    CHECK_FALSE(is_additively_free(fixture::nonfree().L, 2));
    // A rational plane in C^3 always has a rational annihilator.
    CHECK_FALSE(is_additively_free({{1, 1, 1}}, 3));
    // The whole space is free; a point is not.
    CHECK(is_additively_free({}, 2));
    CHECK_FALSE(is_additively_free({{1, 0}, {0, 1}}, 2));
    // z2 = (1 + i) z1 is free; z3 = z1 + z2 within the plane z2 = sqrt(2) z1 is not.
    CHECK(is_additively_free({{ExactComplex(ExactReal(1), ExactReal(1)), -1}}, 2));
    CHECK_FALSE(is_additively_free({{ExactReal::sqrt_of(2), -1, 0}, {1, 1, -1}}, 3));
    SUBCASE("float data") {
        const ExactComplex s(ExactReal::approximate(std::sqrt(2.0)));
        CHECK(is_additively_free({{s, -1}}, 2));
        const ExactComplex two(ExactReal::approximate(2.0));
        CHECK_FALSE(is_additively_free({{two, -1}}, 2));
    }
}

TEST_CASE("rotundity examples") {
    const auto a = is_rotund(fixture::l_sqrt2());
    CHECK(a.rotund);
    CHECK(a.method == RotundityMethod::rado);
    CHECK(a.witness_basis.has_value());
    CHECK_FALSE(a.failing_J.has_value());
    CHECK(is_rotund(fixture::l_i()).rotund);

    const auto b = is_rotund(fixture::nonrotund());
    CHECK_FALSE(b.rotund);
    REQUIRE(b.failing_J.has_value());
    CHECK(*b.failing_J == std::vector<std::size_t>{0});
    CHECK_FALSE(b.witness_basis.has_value());

    // Rotund but not free.
    CHECK(is_rotund(fixture::nonfree()).rotund);

    const Instance unbalanced = fixture::make(2, {}, {fixture::line_poly()});
    CHECK_THROWS_AS(is_rotund(unbalanced), PreconditionError);
}

TEST_CASE("witness vertices are vertices of the Newton polytopes") {
    for (const auto& inst : {fixture::l_sqrt2(), fixture::l_i(), fixture::nonfree()}) {
        const auto rep = is_rotund(inst);
        REQUIRE(rep.witness_basis.has_value());
        for (auto [j, v] : *rep.witness_basis) {
            REQUIRE(j < inst.W.size());
            CHECK(v < newton_polytope(inst.W[j]).vertices().size());
        }
    }
}

TEST_CASE("mixed volume criterion examples") {
    const auto a = mixed_volume_check(fixture::l_sqrt2());
    CHECK(a.rotund);
    REQUIRE(a.mixed_volume.has_value());
    // Width of the triangle across the direction (sqrt2, -1).
    CHECK(*a.mixed_volume == ExactReal::sqrt_of(2));

    const auto b = mixed_volume_check(fixture::nonfree());
    CHECK(b.rotund);
    CHECK(*b.mixed_volume == ExactReal(2));

    // The binomial w1 w2^-1 - 1 has a Newton segment parallel to the L segment.
    const Instance parallel =
        fixture::make(2, {{1, -1}}, {ExpSum::laurent(2, {{1, {1, -1}}, {-1, {0, 0}}})});
    const auto c = mixed_volume_check(parallel);
    CHECK_FALSE(c.rotund);
    CHECK(c.mixed_volume->is_zero());
    CHECK_FALSE(is_rotund(parallel).rotund);

    CHECK_THROWS_AS(mixed_volume_check(fixture::l_i()), PreconditionError);
}

TEST_CASE("rado, mixed volume and stable intersection agree on real L") {
    std::mt19937_64 rng(77);
    const std::vector<ExactComplex> pool{0, 1, -1, 2, -2, ExactReal::sqrt_of(2), -ExactReal::sqrt_of(2)};
    int rotund = 0;
    for (int t = 0; t < 50; ++t) {
        const Instance inst = random_instance(rng, pool);
        const bool r = is_rotund(inst).rotund;
        CHECK(r == mixed_volume_check(inst).rotund);
        CHECK(r == stable_intersection_check(inst).rotund);
        rotund += r;
    }
    CHECK(rotund > 0);
    CHECK(rotund < 50);
}

TEST_CASE("rado and stable intersection agree on complex L") {
    std::mt19937_64 rng(91);
    const std::vector<ExactComplex> pool{1, -1, ExactComplex::i(), -ExactComplex::i(), ExactReal::sqrt_of(2),
                                         -ExactReal::sqrt_of(2)};
    for (int t = 0; t < 30; ++t) {
        const Instance inst = random_instance(rng, pool);
        CHECK(is_rotund(inst).rotund == stable_intersection_check(inst).rotund);
    }
    // Hand-made non-rotund instance with a complex row.
    const Instance flat = fixture::make(2, {{1, ExactComplex::i()}}, {ExpSum::laurent(2, {{1, {1, 1}}, {1, {0, 0}}})});
    CHECK(is_rotund(flat).rotund == stable_intersection_check(flat).rotund);
}

TEST_CASE("quotient dimensions match in both directions") {
    // dim pi_{S^perp}(L) = dim pi_{L^perp}(S), with L = ker E and S = span B.
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> entry(-2, 2), dimd(1, 3);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 4;
        Matrix<ExactComplex> E, B;
        const int ce = dimd(rng), ds = dimd(rng);
        for (int k = 0; k < ce; ++k) {
            ComplexVec v(n);
            for (auto& x : v) x = entry(rng);
            E.push_back(v);
        }
        for (int k = 0; k < ds; ++k) {
            ComplexVec v(n);
            for (auto& x : v) x = entry(rng);
            B.push_back(v);
        }
        // pi_{S^perp} restricted to L: x -> (b . x) for b in B, applied to a basis of L.
        const Matrix<ExactComplex> Lb = nullspace(E, n);
        Matrix<ExactComplex> image;
        for (const auto& l : Lb) {
            ComplexVec col;
            for (const auto& b : B) col.push_back(dot(b, l));
            image.push_back(col);
        }
        const std::size_t lhs = image.empty() ? 0 : rank(image);
        // pi_{L^perp} on S: quotient by the row space of E.
        Matrix<ExactComplex> EB = E;
        EB.insert(EB.end(), B.begin(), B.end());
        const std::size_t rhs = rank(EB) - rank(E);
        CHECK(lhs == rhs);
    }
}
