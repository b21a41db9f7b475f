#include <doctest.h>

#include <random>

#include "exptrop/rotundity.hpp"
#include "fixtures.hpp"

using namespace exptrop;

namespace {

ComplexVec row(std::initializer_list<ExactComplex> xs) { return ComplexVec(xs); }

CVec random_point_in(const Instance& inst, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto B = inst.basis();
    CVec z(inst.n, 0.0);
    for (const auto& b : B) {
        const cplx c(u(rng), u(rng));
        for (std::size_t k = 0; k < inst.n; ++k) z[k] += c * b[k].to_complex();
    }
    return z;
}

}  // namespace

TEST_CASE("exponential sums merge terms and drop zeros") {
    ExpSum f(2, {{ExactComplex(1), row({1, 0})}, {ExactComplex(2), row({1, 0})}, {ExactComplex(0), row({0, 1})}});
    REQUIRE(f.size() == 1);
    CHECK(f.terms()[0].coeff == ExactComplex(3));
    ExpSum g(2, {{ExactComplex(1), row({1, 0})}, {ExactComplex(-1), row({1, 0})}});
    CHECK(g.empty());
    CHECK(fixture::line_poly().is_laurent());
    ExpSum h(1, {{ExactComplex(1), row({ExactReal::sqrt_of(2)})}});
    CHECK_FALSE(h.is_laurent());
    CHECK(h.has_real_exponents());
    ExpSum k(1, {{ExactComplex(1), row({ExactComplex::i()})}});
    CHECK_FALSE(k.has_real_exponents());
}

TEST_CASE("evaluation as exponential sum and as Laurent polynomial agree") {
    const ExpSum f = fixture::line_poly();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int t = 0; t < 20; ++t) {
        const CVec z{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const CVec w{std::exp(z[0]), std::exp(z[1])};
        CHECK(std::abs(f.eval_exp(z) - f.eval_laurent(w)) < 1e-12 * f.magnitude_exp(z));
    }
}

TEST_CASE("attach_system examples") {
    SUBCASE("L_sqrt2") {
        const auto sys = attach_system(fixture::l_sqrt2());
        REQUIRE(sys.unit_rows.size() == 1);
        CHECK(sys.unit_rows[0] == row({ExactReal::sqrt_of(2), -1}));
        REQUIRE(sys.sum_equations.size() == 1);
        CHECK(sys.sum_equations[0] == fixture::line_poly());
        const auto units = sys.unit_equations();
        REQUIRE(units.size() == 1);
        CHECK(units[0].to_string().find("sqrt(2)") != std::string::npos);
        // exp(z1) + exp(sqrt(2) z1) + 1 after substituting z2 = sqrt(2) z1.
        const double s = std::sqrt(2.0);
        const cplx z1(0.3, -0.7);
        const CVec z{z1, s * z1};
        CHECK(std::abs(units[0].eval_exp(z)) < 1e-12);
        CHECK(std::abs(sys.sum_equations[0].eval_exp(z) - (std::exp(z1) + std::exp(s * z1) + 1.0)) < 1e-12);
    }
    SUBCASE("L_i") {
        const auto sys = attach_system(fixture::l_i());
        CHECK(sys.unit_rows[0] == row({ExactComplex::i(), -1}));
        const cplx z1(0.4, 0.1);
        const CVec z{z1, cplx(0, 1) * z1};
        CHECK(std::abs(sys.unit_equations()[0].eval_exp(z)) < 1e-12);
        CHECK(std::abs(sys.sum_equations[0].eval_exp(z) - (std::exp(z1) + std::exp(cplx(0, 1) * z1) + 1.0)) <
              1e-12);
    }
    SUBCASE("no L rows") {
        const Instance inst = fixture::make(1, {}, {ExpSum::laurent(1, {{1, {1}}, {-1, {0}}})});
        const auto sys = attach_system(inst);
        CHECK(sys.unit_rows.empty());
        REQUIRE(sys.all().size() == 1);
        CHECK(std::abs(sys.all()[0].eval_exp({cplx(0, 2 * M_PI)})) < 1e-12);
    }
}

TEST_CASE("unit equations vanish on L") {
    std::mt19937_64 rng(11);
    for (const auto& inst : {fixture::l_sqrt2(), fixture::l_i(), fixture::nonfree()}) {
        const auto sys = attach_system(inst);
        for (int t = 0; t < 10; ++t) {
            const CVec z = random_point_in(inst, rng);
            for (const auto& u : sys.unit_equations()) CHECK(std::abs(u.eval_exp(z)) < 1e-9);
        }
    }
}

TEST_CASE("delta map") {
    const CVec w{{1.5, -2}, {0.25, 3}};
    const auto d0 = delta_eval({0.0, 0.0}, w);
    CHECK(std::abs(d0[0] - w[0]) < 1e-15);
    CHECK(std::abs(d0[1] - w[1]) < 1e-15);
    const CVec l{{0.3, 1}, {-2, 0.5}};
    const auto ones = delta_eval(l, {std::exp(l[0]), std::exp(l[1])});
    CHECK(std::abs(ones[0] - 1.0) < 1e-15);
    CHECK(std::abs(ones[1] - 1.0) < 1e-15);
    const auto d = delta_eval({cplx(0, M_PI), 0.0}, {1.0, 2.0});
    CHECK(std::abs(d[0] - cplx(-1, 0)) < 1e-15);
    CHECK(std::abs(d[1] - cplx(2, 0)) < 1e-15);
    CHECK_THROWS_AS(delta_eval({0.0}, {0.0}), PreconditionError);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 50; ++t) {
        const CVec ll{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const CVec ww{{u(rng) + 2, u(rng)}, {u(rng), u(rng) + 2}};
        const CVec a{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const auto lhs = delta_eval({ll[0] + a[0], ll[1] + a[1]}, ww);
        const auto rhs = delta_eval(ll, ww);
        for (int k = 0; k < 2; ++k) CHECK(std::abs(lhs[k] - rhs[k] / std::exp(a[k])) < 1e-12 * std::abs(lhs[k]));
    }
}

TEST_CASE("rabinowitsch extension") {
    const Instance base = fixture::l_sqrt2();
    SUBCASE("dimension bookkeeping") {
        const Instance ext = rabinowitsch_extend(base, ExpSum::laurent(2, {{1, {1, 0}}, {-1, {0, 1}}}));
        CHECK(ext.n == 3);
        CHECK(ext.dim_L() == 2);
        CHECK(ext.W.size() == 2);
        CHECK(ext.L[0] == row({ExactReal::sqrt_of(2), -1, 0}));
        CHECK(ext.W[0] == ExpSum::laurent(3, {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 0}}}));
        CHECK(ext.W[1] == ExpSum::laurent(3, {{1, {1, 0, 0}}, {-1, {0, 1, 0}}, {-1, {0, 0, 1}}}));
        CHECK_NOTHROW(ext.validate());
    }
    SUBCASE("constant F") {
        const Instance ext = rabinowitsch_extend(base, ExpSum::laurent(2, {{1, {0, 0}}}));
        CHECK(ext.W[1] == ExpSum::laurent(3, {{1, {0, 0, 0}}, {-1, {0, 0, 1}}}));
    }
    SUBCASE("F may not use the new coordinate") {
        CHECK_THROWS_AS(rabinowitsch_extend(base, ExpSum::laurent(3, {{1, {0, 0, 1}}, {1, {0, 0, 0}}})),
                        PreconditionError);
    }
    SUBCASE("solutions of the extension project to solutions with F != 0") {
        // Points on W' built by hand: pick (w1, w2) on w1 + w2 + 1 = 0, set w3 = F(w1, w2).
        const ExpSum F = ExpSum::laurent(2, {{1, {1, 0}}, {-1, {0, 1}}});
        const Instance ext = rabinowitsch_extend(base, F);
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-2, 2);
        for (int t = 0; t < 20; ++t) {
            const cplx w1(u(rng), u(rng));
            const cplx w2 = -1.0 - w1;
            const cplx w3 = F.eval_laurent({w1, w2});
            if (std::abs(w3) < 1e-6) continue;
            const CVec w{w1, w2, w3};
            for (const auto& f : ext.W) CHECK(std::abs(f.eval_laurent(w)) < 1e-12 * (1 + f.magnitude_laurent(w)));
            CHECK(std::abs(base.W[0].eval_laurent({w1, w2})) < 1e-12);
            CHECK(std::abs(F.eval_laurent({w1, w2})) > 0);
        }
    }
}

TEST_CASE("reduce_dimension") {
    SUBCASE("balanced input is unchanged") {
        const Instance inst = fixture::l_sqrt2();
        const Instance out = reduce_dimension(inst, 1);
        CHECK(out.L == inst.L);
    }
    SUBCASE("rational cuts of a rational L cannot stay additively free") {
        const Instance inst = fixture::make(2, {}, {fixture::line_poly()});
        CHECK_THROWS_AS(reduce_dimension(inst, 1), NotFound);
    }
    SUBCASE("with a declared irrational the cut succeeds") {
        const Instance inst = fixture::make(2, {}, {fixture::line_poly()}, 2);
        const Instance out = reduce_dimension(inst, 1);
        CHECK(out.balanced());
        CHECK(is_additively_free(out.L, out.n));
        CHECK(is_rotund(out).rotund);
        CHECK(reduce_dimension(inst, 1).L == out.L);  // deterministic in the seed
    }
    SUBCASE("n = 3: a plane is cut to a line inside it") {
        const ExpSum f = ExpSum::laurent(3, {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}, {1, {0, 0, 0}}});
        const Instance inst = fixture::make(3, {{ExactComplex::i(), ExactReal::sqrt_of(2), -1}}, {f}, 2);
        const Instance out = reduce_dimension(inst, 4);
        CHECK(out.dim_L() == 1);
        CHECK(out.L[0] == inst.L[0]);
        const auto b = out.basis();
        REQUIRE(b.size() == 1);
        CHECK(dot(inst.L[0], b[0]).is_zero());
        CHECK(is_additively_free(out.L, 3));
    }
    SUBCASE("n = 3: a real plane over Q(sqrt3) has no free line") {
        // Two rational conditions on three unknowns always leave an annihilator.
        const ExpSum f = ExpSum::laurent(3, {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}, {1, {0, 0, 0}}});
        const Instance inst = fixture::make(3, {{ExactReal::sqrt_of(3), -1, 0}}, {f}, 3);
        CHECK_THROWS_AS(reduce_dimension(inst, 4), NotFound);
    }
    SUBCASE("too small L is rejected") {
        const Instance inst = fixture::make(2, {{1, 0}, {0, 1}}, {fixture::line_poly()});
        CHECK_THROWS_AS(reduce_dimension(inst, 1), PreconditionError);
    }
}

TEST_CASE("instance parsing") {
    SUBCASE("L_sqrt2") {
        const Instance inst = parse_instance(
            R"j({"n":2, "irrational":2, "L":[["sqrt(2)","-1"]], "W":[[["1",[1,0]],["1",[0,1]],["1",[0,0]]]]})j");
        CHECK(inst.n == 2);
        CHECK(inst.L == fixture::l_sqrt2().L);
        CHECK(inst.W == fixture::l_sqrt2().W);
        CHECK(inst.irrational == 2);
    }
    SUBCASE("exp(z) = 1") {
        const Instance inst = parse_instance(R"j({"n":1, "L":[], "W":[[["1",[1]],["-1",[0]]]]})j");
        CHECK(inst.dim_L() == 1);
        CHECK(inst.W[0] == ExpSum::laurent(1, {{1, {1}}, {-1, {0}}}));
    }
    SUBCASE("bad exponent length names the polynomial") {
        try {
            parse_instance(R"j({"n":2, "L":[], "W":[[["1",[1,0]]], [["1",[1,0]],["1",[1]]]]})j");
            FAIL("expected an error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("W polynomial 1") != std::string::npos);
        }
    }
    SUBCASE("syntax errors carry line and column") {
        try {
            parse_instance("{\"n\": 2,\n  \"L\": [}");
            FAIL("expected an error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 9);
        }
    }
    SUBCASE("invariant violations name the rule") {
        auto message = [](const char* text) {
            try {
                parse_instance(text);
            } catch (const ParseError& e) {
                return std::string(e.what());
            }
            return std::string();
        };
        CHECK(message(R"j({"n":2,"L":[["1","0"],["2","0"]],"W":[]})j").find("independent") != std::string::npos);
        CHECK(message(R"j({"n":1,"L":[],"W":[[["1",[1]]]]})j").find("two terms") != std::string::npos);
        CHECK(message(R"j({"n":1,"L":[["sqrt(2)"]],"W":[]})j").find("sqrt(2)") != std::string::npos);
        CHECK(message(R"j({"n":1,"L":[],"W":[[["0",[1]],["1",[0]]]]})j").find("zero coefficient") != std::string::npos);
        CHECK(message(R"j({"n":0,"L":[],"W":[]})j").find("\"n\"") != std::string::npos);
    }
    SUBCASE("JSON round trip") {
        for (const auto& inst : {fixture::l_sqrt2(), fixture::l_i(), fixture::nonrotund()}) {
            const Instance back = parse_instance(instance_to_json(inst));
            CHECK(back.L == inst.L);
            CHECK(back.W == inst.W);
            CHECK(back.irrational == inst.irrational);
            CHECK(back.name == inst.name);
        }
    }
}
