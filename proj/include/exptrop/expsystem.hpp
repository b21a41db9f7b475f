#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exptrop/linalg.hpp"

namespace exptrop {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

struct Term {
    ExactComplex coeff;
    ComplexVec exponent;
};

/**
 * Finite sum of terms c * exp(phi . z). Terms with equal exponents are merged,
 * zero coefficients dropped, and terms kept sorted by exponent.
 */
class ExpSum {
public:
    ExpSum() = default;
    ExpSum(std::size_t n, std::vector<Term> terms);

    /// Laurent polynomial sum_k c_k w^{e_k} from integer exponent vectors.
    static ExpSum laurent(std::size_t n, const std::vector<std::pair<ExactComplex, std::vector<long>>>& terms);

    std::size_t n() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    bool is_laurent() const;
    bool has_real_exponents() const;
    bool is_exact() const;

    /// Value at z of sum c exp(phi . z).
    cplx eval_exp(const CVec& z) const;
    /// Value at w of the Laurent polynomial (requires integer exponents).
    cplx eval_laurent(const CVec& w) const;
    /// Sum of |c| |exp(phi . z)|, the natural scale for relative residuals.
    double magnitude_exp(const CVec& z) const;
    double magnitude_laurent(const CVec& w) const;
    /// Integer exponent of a Laurent term.
    std::vector<long> integer_exponent(std::size_t term) const;

    std::string to_string() const;

    friend bool operator==(const ExpSum& a, const ExpSum& b);
    friend bool operator!=(const ExpSum& a, const ExpSum& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    std::vector<Term> terms_;
};

/**
 * L x W: L = {z : lambda . z = 0 for every row lambda} and W the common zero set
 * of Laurent polynomials in the torus.
 */
struct Instance {
    std::size_t n = 0;
    Matrix<ExactComplex> L;
    std::vector<ExpSum> W;
    std::optional<long> irrational;
    std::string name;

    std::size_t dim_L() const { return n - L.size(); }
    bool balanced() const { return dim_L() == W.size(); }
    bool real_L() const;
    /// Some scalar is an inexact float.
    bool numeric() const;
    /// Basis vectors of L (n-vectors), from the exact kernel of the equation rows.
    Matrix<ExactComplex> basis() const;
    /// Throws PreconditionError naming the violated rule.
    void validate() const;
};

/// exp(lambda . z) = 1 per L row, plus the W polynomials read as exponential sums.
struct AttachedSystem {
    std::size_t n = 0;
    std::vector<ComplexVec> unit_rows;
    std::vector<ExpSum> sum_equations;

    /// The unit equations as exp(lambda . z) - 1.
    std::vector<ExpSum> unit_equations() const;
    /// Unit equations followed by the sum equations.
    std::vector<ExpSum> all() const;
};

AttachedSystem attach_system(const Instance& inst);

/// Componentwise w_j / exp(l_j).
CVec delta_eval(const CVec& l, const CVec& w);

/// Adds a coordinate w_{n+1} = F(w_1..w_n); L gains a free direction.
Instance rabinowitsch_extend(const Instance& inst, const ExpSum& F);

/// Intersects L with a pseudo-random rational subspace until dim L = #W, keeping freeness and rotundity.
Instance reduce_dimension(const Instance& inst, std::uint64_t seed);

Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& inst);

}  // namespace exptrop
