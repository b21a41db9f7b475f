#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "exptrop/error.hpp"

namespace exptrop {

/// Absolute tolerance used by every comparison that involves an inexact scalar.
inline constexpr double kNumericTolerance = 1e-9;

enum class Ordering { lt, eq, gt };

/**
 * A real number of the form a + b*sqrt(d) with a, b rational and d square-free.
 *
 * At most one radicand may appear in a computation; mixing two different
 * radicands throws FieldMismatch. Values built from decimal or "pi" literals
 * are inexact: they carry a double and compare with kNumericTolerance.
 */
class ExactReal {
public:
    ExactReal() = default;
    ExactReal(long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
    ExactReal(mpq_class value) : rational_(std::move(value)) { rational_.canonicalize(); }  // NOLINT
    ExactReal(mpq_class rational, mpq_class irrational, long radicand);

    static ExactReal fraction(long num, long den);
    /// sqrt(k) for a positive integer k; square factors are pulled out.
    static ExactReal sqrt_of(long k);
    static ExactReal approximate(double value);

    const mpq_class& rational_part() const { return rational_; }
    const mpq_class& irrational_part() const { return irrational_; }
    long radicand() const { return radicand_; }
    bool is_exact() const { return exact_; }
    bool is_rational() const { return exact_ && radicand_ == 0; }
    bool is_integer() const { return is_rational() && rational_.get_den() == 1; }

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    double to_double() const;

    ExactReal operator-() const;
    ExactReal& operator+=(const ExactReal& o);
    ExactReal& operator-=(const ExactReal& o);
    ExactReal& operator*=(const ExactReal& o);
    ExactReal& operator/=(const ExactReal& o);
    friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
    friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
    friend ExactReal operator*(ExactReal a, const ExactReal& b) { return a *= b; }
    friend ExactReal operator/(ExactReal a, const ExactReal& b) { return a /= b; }

    ExactReal inverse() const;
    ExactReal abs() const { return sign() < 0 ? -*this : *this; }
    /// Largest integer not exceeding the value.
    mpz_class floor() const;

    /// Literal form accepted by parse_scalar.
    std::string to_string() const;

    friend bool operator==(const ExactReal& a, const ExactReal& b);
    friend bool operator!=(const ExactReal& a, const ExactReal& b) { return !(a == b); }
    friend bool operator<(const ExactReal& a, const ExactReal& b);
    friend bool operator>(const ExactReal& a, const ExactReal& b) { return b < a; }
    friend bool operator<=(const ExactReal& a, const ExactReal& b) { return !(b < a); }
    friend bool operator>=(const ExactReal& a, const ExactReal& b) { return !(a < b); }

private:
    void normalize();
    static long merge_radicand(long a, long b);
    void make_inexact(double value);

    mpq_class rational_{0};
    mpq_class irrational_{0};
    long radicand_ = 0;
    bool exact_ = true;
    double approx_ = 0.0;
};

/// Exact sign of a - b (tolerance-based when either side is inexact).
Ordering compare_real(const ExactReal& a, const ExactReal& b);

std::ostream& operator<<(std::ostream& os, const ExactReal& x);

class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(long value) : re_(value) {}              // NOLINT(google-explicit-constructor)
    ExactComplex(ExactReal re) : re_(std::move(re)) {}   // NOLINT(google-explicit-constructor)
    ExactComplex(ExactReal re, ExactReal im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactComplex i() { return {ExactReal(0), ExactReal(1)}; }

    const ExactReal& re() const { return re_; }
    const ExactReal& im() const { return im_; }
    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_exact() const { return re_.is_exact() && im_.is_exact(); }
    long radicand() const;

    ExactComplex conj() const { return {re_, -im_}; }
    ExactComplex operator-() const { return {-re_, -im_}; }
    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);
    ExactComplex& operator/=(const ExactComplex& o);
    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    ExactComplex inverse() const;

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::string to_string() const;

private:
    ExactReal re_;
    ExactReal im_;
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

/// Nearest binary64 value of each part.
inline std::complex<double> to_float(const ExactComplex& z) { return z.to_complex(); }

/**
 * Parse a scalar literal: sums of terms such as "3", "-2/7", "sqrt(2)",
 * "1/2*sqrt(3)", "i", "2*i", "pi" or "0.25", e.g. "1-1/2*sqrt(2)+3*i".
 * Decimal and "pi" factors make the value inexact.
 */
ExactComplex parse_scalar(std::string_view text);

}  // namespace exptrop
