#include <doctest.h>

#include <cmath>
#include <random>

#include "exptrop/scalar.hpp"

using namespace exptrop;

namespace {

ExactReal random_real(std::mt19937_64& rng, long d) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    return ExactReal(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), d);
}

ExactComplex random_complex(std::mt19937_64& rng, long d) { return {random_real(rng, d), random_real(rng, d)}; }

}  // namespace

TEST_CASE("field arithmetic examples") {
    const ExactReal r2 = ExactReal::sqrt_of(2);
    CHECK((ExactReal(1) + r2) * (ExactReal(1) - r2) == ExactReal(-1));
    CHECK(ExactComplex::i() * ExactComplex::i() == ExactComplex(-1));
    const ExactReal inv = ExactReal(1) / r2;
    CHECK(inv.rational_part() == 0);
    CHECK(inv.irrational_part() == mpq_class(1, 2));
    CHECK(inv.radicand() == 2);
    CHECK(inv * r2 == ExactReal(1));
}

TEST_CASE("division by zero is a distinct error") {
    CHECK_THROWS_AS(ExactReal(1) / ExactReal(0), DivisionByZero);
    CHECK_THROWS_AS(ExactComplex(1) / ExactComplex(0), DivisionByZero);
    CHECK_THROWS_AS(ExactReal::sqrt_of(2) + ExactReal::sqrt_of(3), FieldMismatch);
}

TEST_CASE("normalization") {
    CHECK(ExactReal::sqrt_of(8) == ExactReal(0, 2, 2));
    CHECK(ExactReal::sqrt_of(4) == ExactReal(2));
    CHECK(ExactReal::sqrt_of(4).is_rational());
    CHECK(ExactReal(mpq_class(3), mpq_class(5), 1) == ExactReal(8));
    CHECK(ExactReal(mpq_class(3), mpq_class(0), 7).radicand() == 0);
}

TEST_CASE("exact comparison") {
    const ExactReal r2 = ExactReal::sqrt_of(2);
    CHECK(compare_real(r2, ExactReal::fraction(7, 5)) == Ordering::gt);
    CHECK(compare_real(r2, r2) == Ordering::eq);
    CHECK(compare_real(ExactReal(1) - r2, ExactReal(0)) == Ordering::lt);
    CHECK(compare_real(ExactReal::fraction(99, 70), r2) == Ordering::gt);
    CHECK(compare_real(ExactReal::fraction(140, 99), r2) == Ordering::lt);
    CHECK(ExactReal(0, 1, 2).floor() == 1);
    CHECK((-r2).floor() == -2);
}

TEST_CASE("float embedding") {
    CHECK(ExactReal::sqrt_of(2).to_double() == 1.4142135623730951);
    CHECK(ExactReal(0).to_double() == 0.0);
    const auto z = to_float(ExactComplex::i());
    CHECK(z.real() == 0.0);
    CHECK(z.imag() == 1.0);
    CHECK(ExactReal::fraction(1, 3).to_double() == 1.0 / 3.0);
    CHECK((ExactReal(1) - ExactReal::sqrt_of(2)).to_double() == static_cast<double>(1.0L - std::sqrt(2.0L)));
}

TEST_CASE("field axioms on random inputs") {
    std::mt19937_64 rng(20240611);
    for (long d : {0L, 2L, 3L}) {
        for (int trial = 0; trial < 200; ++trial) {
            const ExactComplex a = random_complex(rng, d);
            const ExactComplex b = random_complex(rng, d);
            const ExactComplex c = random_complex(rng, d);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == ExactComplex(1));
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
    }
}

TEST_CASE("comparison agrees with the float embedding") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const ExactReal a = random_real(rng, 2);
        const ExactReal b = random_real(rng, 2);
        const double gap = a.to_double() - b.to_double();
        if (std::abs(gap) <= 1e-12) continue;
        CHECK((compare_real(a, b) == Ordering::gt) == (gap > 0));
    }
}

TEST_CASE("literal parsing") {
    CHECK(parse_scalar("3") == ExactComplex(3));
    CHECK(parse_scalar("-2/7") == ExactComplex(ExactReal::fraction(-2, 7)));
    CHECK(parse_scalar("sqrt(2)") == ExactComplex(ExactReal::sqrt_of(2)));
    CHECK(parse_scalar("1/2+3/4*sqrt(2)") == ExactComplex(ExactReal(mpq_class(1, 2), mpq_class(3, 4), 2)));
    CHECK(parse_scalar("i") == ExactComplex::i());
    CHECK(parse_scalar("-1*i") == -ExactComplex::i());
    CHECK(parse_scalar("2/3*i") == ExactComplex(0, ExactReal::fraction(2, 3)));
    CHECK(parse_scalar(" 1 - sqrt(8) ") == ExactComplex(ExactReal(1) - ExactReal(0, 2, 2)));
    CHECK_FALSE(parse_scalar("0.25").is_exact());
    CHECK(parse_scalar("0.25").re().to_double() == 0.25);
    CHECK_FALSE(parse_scalar("pi").is_exact());
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("2x"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const ExactComplex z = random_complex(rng, trial % 2 ? 2 : 5);
        CHECK(parse_scalar(z.to_string()) == z);
    }
    CHECK(ExactComplex(ExactReal(0, -1, 2)).to_string() == "-sqrt(2)");
    CHECK(ExactComplex::i().to_string() == "i");
}

TEST_CASE("inexact values compare with tolerance") {
    const ExactReal a = ExactReal::approximate(0.1);
    const ExactReal b = ExactReal::approximate(0.1 + 1e-12);
    CHECK(a == b);
    CHECK_FALSE((a + ExactReal::fraction(1, 1000)) == b);
    CHECK_FALSE((a * ExactReal(2)).is_exact());
}
