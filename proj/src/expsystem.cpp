#include "exptrop/expsystem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "exptrop/rotundity.hpp"

namespace exptrop {

namespace {

Ordering compare_complex(const ExactComplex& a, const ExactComplex& b) {
    const Ordering o = compare_real(a.re(), b.re());
    if (o != Ordering::eq) return o;
    return compare_real(a.im(), b.im());
}

Ordering compare_exponents(const ComplexVec& a, const ComplexVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Ordering o = compare_complex(a[k], b[k]);
        if (o != Ordering::eq) return o;
    }
    return Ordering::eq;
}

cplx exponent_dot(const ComplexVec& phi, const CVec& z) {
    cplx s = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) s += to_float(phi[k]) * z[k];
    return s;
}

}  // namespace

ExpSum::ExpSum(std::size_t n, std::vector<Term> terms) : n_(n) {
    for (const auto& t : terms)
        if (t.exponent.size() != n) throw DimensionMismatch("exponent vector length differs from n");
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return compare_exponents(a.exponent, b.exponent) == Ordering::lt;
    });
    for (auto& t : terms) {
        if (!terms_.empty() && compare_exponents(terms_.back().exponent, t.exponent) == Ordering::eq) {
            terms_.back().coeff += t.coeff;
        } else {
            terms_.push_back(std::move(t));
        }
    }
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_zero(); }),
                 terms_.end());
}

ExpSum ExpSum::laurent(std::size_t n, const std::vector<std::pair<ExactComplex, std::vector<long>>>& terms) {
    std::vector<Term> out;
    for (const auto& [c, e] : terms) {
        if (e.size() != n) throw DimensionMismatch("exponent vector length differs from n");
        ComplexVec phi;
        for (long x : e) phi.emplace_back(x);
        out.push_back({c, phi});
    }
    return ExpSum(n, std::move(out));
}

bool ExpSum::is_laurent() const {
    for (const auto& t : terms_)
        for (const auto& x : t.exponent)
            if (!x.is_real() || !x.re().is_integer()) return false;
    return true;
}

bool ExpSum::has_real_exponents() const {
    for (const auto& t : terms_)
        for (const auto& x : t.exponent)
            if (!x.is_real()) return false;
    return true;
}

bool ExpSum::is_exact() const {
    for (const auto& t : terms_) {
        if (!t.coeff.is_exact()) return false;
        for (const auto& x : t.exponent)
            if (!x.is_exact()) return false;
    }
    return true;
}

cplx ExpSum::eval_exp(const CVec& z) const {
    if (z.size() != n_) throw DimensionMismatch("evaluation point dimension");
    cplx s = 0;
    for (const auto& t : terms_) s += to_float(t.coeff) * std::exp(exponent_dot(t.exponent, z));
    return s;
}

double ExpSum::magnitude_exp(const CVec& z) const {
    double s = 0;
    for (const auto& t : terms_) s += std::abs(to_float(t.coeff)) * std::exp(exponent_dot(t.exponent, z).real());
    return s;
}

std::vector<long> ExpSum::integer_exponent(std::size_t term) const {
    std::vector<long> e;
    for (const auto& x : terms_.at(term).exponent) {
        if (!x.is_real() || !x.re().is_integer()) throw PreconditionError("exponent is not an integer vector");
        e.push_back(x.re().rational_part().get_num().get_si());
    }
    return e;
}

cplx ExpSum::eval_laurent(const CVec& w) const {
    if (w.size() != n_) throw DimensionMismatch("evaluation point dimension");
    cplx s = 0;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        cplx m = to_float(terms_[t].coeff);
        const auto e = integer_exponent(t);
        for (std::size_t k = 0; k < n_; ++k)
            if (e[k] != 0) m *= std::pow(w[k], static_cast<int>(e[k]));
        s += m;
    }
    return s;
}

double ExpSum::magnitude_laurent(const CVec& w) const {
    double s = 0;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        double m = std::abs(to_float(terms_[t].coeff));
        const auto e = integer_exponent(t);
        for (std::size_t k = 0; k < n_; ++k)
            if (e[k] != 0) m *= std::pow(std::abs(w[k]), static_cast<double>(e[k]));
        s += m;
    }
    return s;
}

std::string ExpSum::to_string() const {
    if (terms_.empty()) return "0";
    const bool laurent = is_laurent();
    std::string out;
    for (const auto& t : terms_) {
        std::string mono;
        if (laurent) {
            for (std::size_t k = 0; k < n_; ++k) {
                const ExactReal& e = t.exponent[k].re();
                if (e.is_zero()) continue;
                if (!mono.empty()) mono += "*";
                mono += "w" + std::to_string(k + 1);
                if (e != ExactReal(1)) mono += "^" + e.to_string();
            }
        } else {
            std::string arg;
            for (std::size_t k = 0; k < n_; ++k) {
                if (t.exponent[k].is_zero()) continue;
                std::string c = t.exponent[k].to_string();
                std::string piece;
                if (c == "1") piece = "z" + std::to_string(k + 1);
                else if (c == "-1") piece = "-z" + std::to_string(k + 1);
                else piece = "(" + c + ")*z" + std::to_string(k + 1);
                if (!arg.empty() && piece.front() != '-') arg += "+";
                arg += piece;
            }
            if (!arg.empty()) mono = "exp(" + arg + ")";
        }
        std::string coeff = t.coeff.to_string();
        const bool compound = !t.coeff.is_real() || t.coeff.re().radicand() != 0 || !t.coeff.re().is_exact();
        if (compound && !t.coeff.re().is_zero() && !t.coeff.im().is_zero()) coeff = "(" + coeff + ")";
        std::string piece;
        if (mono.empty()) piece = coeff;
        else if (coeff == "1") piece = mono;
        else if (coeff == "-1") piece = "-" + mono;
        else piece = coeff + "*" + mono;
        if (!out.empty() && piece.front() != '-') out += "+";
        out += piece;
    }
    return out;
}

bool operator==(const ExpSum& a, const ExpSum& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (a.terms_[k].coeff != b.terms_[k].coeff) return false;
        if (compare_exponents(a.terms_[k].exponent, b.terms_[k].exponent) != Ordering::eq) return false;
    }
    return true;
}

bool Instance::real_L() const {
    for (const auto& row : L)
        for (const auto& x : row)
            if (!x.is_real()) return false;
    return true;
}

bool Instance::numeric() const {
    for (const auto& row : L)
        for (const auto& x : row)
            if (!x.is_exact()) return true;
    for (const auto& f : W)
        if (!f.is_exact()) return true;
    return false;
}

Matrix<ExactComplex> Instance::basis() const {
    if (L.empty()) {
        Matrix<ExactComplex> id(n, ComplexVec(n, ExactComplex(0)));
        for (std::size_t k = 0; k < n; ++k) id[k][k] = ExactComplex(1);
        return id;
    }
    return nullspace(L, n);
}

void Instance::validate() const {
    if (n == 0) throw PreconditionError("n must be positive");
    for (std::size_t r = 0; r < L.size(); ++r) {
        if (L[r].size() != n)
            throw PreconditionError("L row " + std::to_string(r) + " has length " + std::to_string(L[r].size()) +
                                    ", expected " + std::to_string(n));
        if (is_zero_vector(L[r])) throw PreconditionError("L row " + std::to_string(r) + " is zero");
    }
    if (!L.empty() && rank(L) != L.size()) throw PreconditionError("L equations must be linearly independent");
    for (std::size_t j = 0; j < W.size(); ++j) {
        if (W[j].n() != n) throw PreconditionError("W polynomial " + std::to_string(j) + " has the wrong arity");
        if (!W[j].is_laurent())
            throw PreconditionError("W polynomial " + std::to_string(j) + " must have integer exponents");
        if (W[j].size() < 2)
            throw PreconditionError("W polynomial " + std::to_string(j) +
                                    " must have at least two terms (a monomial has no zeros in the torus)");
    }
    auto check_radicand = [this](const ExactComplex& x, const std::string& where) {
        for (long d : {x.re().radicand(), x.im().radicand()}) {
            if (d == 0) continue;
            if (!irrational || *irrational != d)
                throw PreconditionError(where + " uses sqrt(" + std::to_string(d) +
                                        ") but the instance declares " +
                                        (irrational ? "irrational " + std::to_string(*irrational)
                                                    : std::string("no irrational")));
        }
    };
    for (std::size_t r = 0; r < L.size(); ++r)
        for (const auto& x : L[r]) check_radicand(x, "L row " + std::to_string(r));
    for (std::size_t j = 0; j < W.size(); ++j)
        for (const auto& t : W[j].terms()) check_radicand(t.coeff, "W polynomial " + std::to_string(j));
}

std::vector<ExpSum> AttachedSystem::unit_equations() const {
    std::vector<ExpSum> out;
    for (const auto& row : unit_rows) {
        out.emplace_back(n, std::vector<Term>{{ExactComplex(1), row},
                                              {ExactComplex(-1), ComplexVec(n, ExactComplex(0))}});
    }
    return out;
}

std::vector<ExpSum> AttachedSystem::all() const {
    std::vector<ExpSum> out = unit_equations();
    out.insert(out.end(), sum_equations.begin(), sum_equations.end());
    return out;
}

AttachedSystem attach_system(const Instance& inst) {
    AttachedSystem sys;
    sys.n = inst.n;
    for (const auto& row : inst.L) {
        if (row.size() != inst.n) throw DimensionMismatch("L row length differs from n");
        sys.unit_rows.push_back(row);
    }
    for (const auto& f : inst.W) {
        if (f.n() != inst.n) throw DimensionMismatch("W polynomial arity differs from n");
        sys.sum_equations.push_back(f);
    }
    return sys;
}

CVec delta_eval(const CVec& l, const CVec& w) {
    if (l.size() != w.size()) throw DimensionMismatch("delta map arguments of different length");
    CVec out(l.size());
    for (std::size_t k = 0; k < l.size(); ++k) {
        if (w[k] == cplx(0)) throw PreconditionError("delta map needs nonzero w components");
        out[k] = w[k] / std::exp(l[k]);
    }
    return out;
}

Instance rabinowitsch_extend(const Instance& inst, const ExpSum& F) {
    const std::size_t n = inst.n;
    if (F.n() != n && F.n() != n + 1) throw DimensionMismatch("F must be a function of the n torus coordinates");
    std::vector<Term> fterms;
    for (const auto& t : F.terms()) {
        ComplexVec e = t.exponent;
        if (e.size() == n + 1) {
            if (!e.back().is_zero())
                throw PreconditionError("F has a term with nonzero exponent in the new coordinate");
        } else {
            e.emplace_back(0);
        }
        fterms.push_back({t.coeff, e});
    }
    ComplexVec last(n + 1, ExactComplex(0));
    last[n] = ExactComplex(1);
    fterms.push_back({ExactComplex(-1), last});

    Instance out;
    out.n = n + 1;
    out.irrational = inst.irrational;
    out.name = inst.name.empty() ? std::string() : inst.name + "+rabinowitsch";
    for (auto row : inst.L) {
        row.emplace_back(0);
        out.L.push_back(std::move(row));
    }
    for (const auto& f : inst.W) {
        std::vector<Term> terms;
        for (auto t : f.terms()) {
            t.exponent.emplace_back(0);
            terms.push_back(std::move(t));
        }
        out.W.emplace_back(n + 1, std::move(terms));
    }
    out.W.emplace_back(n + 1, std::move(fterms));
    return out;
}

Instance reduce_dimension(const Instance& inst, std::uint64_t seed) {
    if (inst.balanced()) return inst;
    if (inst.dim_L() < inst.W.size())
        throw PreconditionError("dim L + dim W < n: the instance cannot be balanced by cutting L");
    const std::size_t extra = inst.dim_L() - inst.W.size();
    for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
        std::mt19937_64 rng(seed + attempt);
        std::uniform_int_distribution<long> coef(-3, 3);
        Instance cand = inst;
        for (std::size_t k = 0; k < extra; ++k) {
            ComplexVec row;
            for (std::size_t c = 0; c < inst.n; ++c) {
                ExactReal x(coef(rng));
                if (inst.irrational) x += ExactReal(0, coef(rng), *inst.irrational);
                row.emplace_back(x);
            }
            cand.L.push_back(std::move(row));
        }
        if (rank(cand.L) != cand.L.size()) continue;
        if (!is_additively_free(cand.L, cand.n)) continue;
        if (!is_rotund(cand).rotund) continue;
        return cand;
    }
    throw NotFound("reduce_dimension: retry budget of 32 seeds exhausted (input may be non-rotund, or "
                   "rational cuts cannot keep it additively free)");
}

}  // namespace exptrop
