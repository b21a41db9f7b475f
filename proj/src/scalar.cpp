#include "exptrop/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>

#include <mpfr.h>

namespace exptrop {

namespace {

int sign_of(const mpq_class& q) { return sgn(q); }

// Square-free part and extracted square: k = s^2 * f.
std::pair<long, long> split_square(long k) {
    long s = 1;
    long f = k;
    for (long p = 2; p * p <= f; ++p) {
        while (f % (p * p) == 0) {
            f /= p * p;
            s *= p;
        }
    }
    return {s, f};
}

}  // namespace

ExactReal::ExactReal(mpq_class rational, mpq_class irrational, long radicand)
    : rational_(std::move(rational)), irrational_(std::move(irrational)), radicand_(radicand) {
    if (radicand_ < 0) throw PreconditionError("negative radicand");
    rational_.canonicalize();
    irrational_.canonicalize();
    if (radicand_ > 1) {
        auto [s, f] = split_square(radicand_);
        irrational_ *= s;
        radicand_ = f;
    }
    normalize();
}

ExactReal ExactReal::fraction(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    return ExactReal(q);
}

ExactReal ExactReal::sqrt_of(long k) {
    if (k < 0) throw PreconditionError("sqrt of a negative integer");
    return ExactReal(0, 1, k);
}

ExactReal ExactReal::approximate(double value) {
    ExactReal r;
    r.make_inexact(value);
    return r;
}

void ExactReal::make_inexact(double value) {
    exact_ = false;
    approx_ = value;
    rational_ = 0;
    irrational_ = 0;
    radicand_ = 0;
}

void ExactReal::normalize() {
    if (!exact_) return;
    if (radicand_ == 1) {
        rational_ += irrational_;
        irrational_ = 0;
    }
    if (radicand_ <= 1 || irrational_ == 0) {
        irrational_ = 0;
        radicand_ = 0;
    }
}

long ExactReal::merge_radicand(long a, long b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw FieldMismatch("sqrt(" + std::to_string(a) + ") and sqrt(" + std::to_string(b) +
                        ") in one computation");
}

int ExactReal::sign() const {
    if (!exact_) return std::abs(approx_) <= kNumericTolerance ? 0 : (approx_ > 0 ? 1 : -1);
    const int sa = sign_of(rational_);
    const int sb = radicand_ == 0 ? 0 : sign_of(irrational_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger magnitude wins; equality is impossible for square-free d > 1.
    const mpq_class lhs = rational_ * rational_;
    const mpq_class rhs = irrational_ * irrational_ * radicand_;
    return lhs > rhs ? sa : sb;
}

double ExactReal::to_double() const {
    if (!exact_) return approx_;
    if (radicand_ == 0) return rational_.get_d();
    mpfr_t a;
    mpfr_t b;
    mpfr_inits2(256, a, b, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(b, static_cast<unsigned long>(radicand_), MPFR_RNDN);
    mpfr_sqrt(b, b, MPFR_RNDN);
    mpfr_mul_q(b, b, irrational_.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(a, rational_.get_mpq_t(), MPFR_RNDN);
    mpfr_add(a, a, b, MPFR_RNDN);
    const double out = mpfr_get_d(a, MPFR_RNDN);
    mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
    return out;
}

ExactReal ExactReal::operator-() const {
    ExactReal r = *this;
    r.rational_ = -r.rational_;
    r.irrational_ = -r.irrational_;
    r.approx_ = -r.approx_;
    return r;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
    if (!exact_ || !o.exact_) {
        make_inexact(to_double() + o.to_double());
        return *this;
    }
    radicand_ = merge_radicand(radicand_, o.radicand_);
    rational_ += o.rational_;
    irrational_ += o.irrational_;
    normalize();
    return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) { return *this += -o; }

ExactReal& ExactReal::operator*=(const ExactReal& o) {
    if (!exact_ || !o.exact_) {
        make_inexact(to_double() * o.to_double());
        return *this;
    }
    const long d = merge_radicand(radicand_, o.radicand_);
    const mpq_class a = rational_ * o.rational_ + irrational_ * o.irrational_ * d;
    const mpq_class b = rational_ * o.irrational_ + irrational_ * o.rational_;
    rational_ = a;
    irrational_ = b;
    radicand_ = d;
    normalize();
    return *this;
}

ExactReal ExactReal::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (!exact_) return approximate(1.0 / approx_);
    const mpq_class norm = rational_ * rational_ - irrational_ * irrational_ * radicand_;
    ExactReal r;
    r.rational_ = rational_ / norm;
    r.irrational_ = -irrational_ / norm;
    r.radicand_ = radicand_;
    r.normalize();
    return r;
}

ExactReal& ExactReal::operator/=(const ExactReal& o) { return *this *= o.inverse(); }

mpz_class ExactReal::floor() const {
    if (!exact_) return mpz_class(std::floor(approx_));
    if (radicand_ == 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rational_.get_num_mpz_t(), rational_.get_den_mpz_t());
        return q;
    }
    mpz_class k(std::floor(to_double()));
    while (ExactReal(mpq_class(k)) > *this) --k;
    while (ExactReal(mpq_class(k + 1)) <= *this) ++k;
    return k;
}

Ordering compare_real(const ExactReal& a, const ExactReal& b) {
    const int s = (a - b).sign();
    return s < 0 ? Ordering::lt : (s == 0 ? Ordering::eq : Ordering::gt);
}

bool operator==(const ExactReal& a, const ExactReal& b) {
    if (a.exact_ && b.exact_) {
        return a.rational_ == b.rational_ && a.irrational_ == b.irrational_ &&
               (a.radicand_ == b.radicand_ || a.irrational_ == 0);
    }
    return compare_real(a, b) == Ordering::eq;
}

bool operator<(const ExactReal& a, const ExactReal& b) { return compare_real(a, b) == Ordering::lt; }

std::string ExactReal::to_string() const {
    if (!exact_) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", approx_);
        std::string s = buf;
        if (s.find_first_of(".en") == std::string::npos) s += ".0";
        return s;
    }
    std::string out;
    if (rational_ != 0 || radicand_ == 0) out = rational_.get_str();
    if (radicand_ != 0) {
        std::string term;
        if (irrational_ == 1) {
            term = "sqrt(" + std::to_string(radicand_) + ")";
        } else if (irrational_ == -1) {
            term = "-sqrt(" + std::to_string(radicand_) + ")";
        } else {
            term = irrational_.get_str() + "*sqrt(" + std::to_string(radicand_) + ")";
        }
        if (!out.empty() && term.front() != '-') out += "+";
        out += term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ExactReal& x) { return os << x.to_string(); }

long ExactComplex::radicand() const {
    if (re_.radicand() != 0) return re_.radicand();
    return im_.radicand();
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
    ExactReal r = re_ * o.re_ - im_ * o.im_;
    ExactReal m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

ExactComplex ExactComplex::inverse() const {
    if (is_zero()) throw DivisionByZero();
    const ExactReal norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) { return *this *= o.inverse(); }

std::string ExactComplex::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string out = re_.is_zero() ? std::string() : re_.to_string();
    auto append = [&out](const std::string& term) {
        if (!out.empty() && term.front() != '-') out += "+";
        out += term;
    };
    if (!im_.is_exact()) {
        append(im_.to_string() + "*i");
        return out;
    }
    const mpq_class& c = im_.rational_part();
    if (c != 0) {
        if (c == 1) append("i");
        else if (c == -1) append("-i");
        else append(c.get_str() + "*i");
    }
    if (im_.radicand() != 0) {
        append(ExactReal(0, im_.irrational_part(), im_.radicand()).to_string() + "*i");
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.to_string(); }

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    ExactComplex parse() {
        ExactComplex v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in scalar '" +
                         std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    ExactComplex sum() {
        skip();
        bool negative = false;
        if (eat('-')) negative = true;
        else eat('+');
        ExactComplex v = term();
        if (negative) v = -v;
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    ExactComplex term() {
        ExactComplex v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                ExactComplex d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    ExactComplex factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            ExactComplex v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat_word("sqrt")) {
            if (!eat('(')) fail("expected '(' after sqrt");
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer inside sqrt");
            const long k = std::stol(std::string(s_.substr(start, pos_ - start)));
            if (!eat(')')) fail("expected ')'");
            return ExactReal::sqrt_of(k);
        }
        if (eat_word("pi")) return ExactReal::approximate(std::numbers::pi);
        if (eat('i')) return ExactComplex::i();
        return number();
    }

    ExactComplex number() {
        const std::size_t start = pos_;
        bool decimal = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            decimal = true;
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        if (pos_ > start && pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
            if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                decimal = true;
                pos_ = p;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
        }
        if (pos_ == start || (pos_ == start + 1 && s_[start] == '.')) fail("expected a number");
        const std::string text(s_.substr(start, pos_ - start));
        if (decimal) return ExactReal::approximate(std::strtod(text.c_str(), nullptr));
        return ExactReal(mpq_class(mpz_class(text)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ExactComplex parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace exptrop
