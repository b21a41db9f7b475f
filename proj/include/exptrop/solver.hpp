#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exptrop/expsystem.hpp"

namespace exptrop {

/// One term c * exp(row . u) of a parametrized equation.
struct SystemTerm {
    cplx coeff;
    CVec row;
};

/**
 * W restricted to L: with z = B u (columns of B span L) each W polynomial
 * becomes u -> sum c exp((k . B) u), an entire function of d = dim L variables.
 */
struct SquareSystem {
    std::size_t n = 0;
    std::size_t d = 0;
    /// Exact basis vectors of L, each scaled so its first nonzero entry is 1.
    Matrix<ExactComplex> basis_exact;
    /// Float columns of B, d vectors of length n.
    std::vector<CVec> basis;
    std::vector<std::vector<SystemTerm>> equations;

    CVec eval(const CVec& u) const;
    /// Row j, column k: d f_j / d u_k.
    std::vector<CVec> jacobian(const CVec& u) const;
    CVec to_z(const CVec& u) const;
};

SquareSystem build_square_system(const Instance& inst);

struct RationalApproximation {
    long Q = 0;
    /// (p, q) for every exponent ratio that was approximated, in row order.
    std::vector<std::pair<long, long>> convergents;
    /// Integer rows replacing the L rows; their kernel is the approximated subspace.
    std::vector<std::vector<long>> rows;
    /// W followed by one binomial per row: prod w^{positive part} - prod w^{negative part}.
    std::vector<ExpSum> system;
    /// Primitive integer vectors spanning the kernel of rows (w = v^lattice parametrizes the binomials).
    std::vector<std::vector<long>> lattice;
    /// W pulled back along w = v^lattice: Laurent polynomials in d variables.
    std::vector<ExpSum> reduced;
};

/// Continued-fraction convergents of x with denominator at most Q.
std::vector<std::pair<long, long>> convergents(const ExactReal& x, long Q);

/// Replaces each L row by an integer row whose ratios are convergents with denominator <= Q.
RationalApproximation rational_approximation(const Instance& inst, long Q);

/// d = 1 only: roots v of the reduced polynomial mapped to starts u (least squares of B u = lattice log v).
std::vector<CVec> lift_rational_roots(const RationalApproximation& approx, const SquareSystem& sys);

struct StartPoint {
    CVec u;
    std::string source;  // "real_trace", "witness_cell", "random"
    std::optional<std::string> seed_cell;
};

/// Closed-form solutions of L x W_tau for binomial W_tau: the parameter h runs over 0..count-1.
std::vector<CVec> binomial_initial_solutions(const Instance& initial, std::size_t count);

/// k starts: tropical seeds first (real trace or witness cells), padded with random starts.
std::vector<StartPoint> tropical_starts(const Instance& inst, std::size_t k, std::uint64_t seed);

struct SolutionCertificate {
    CVec u;
    CVec z;
    CVec w;
    /// |W_j(w)| per polynomial.
    std::vector<double> residuals;
    /// |lambda . z| per L row.
    std::vector<double> l_residuals;
    std::optional<std::string> seed_cell;
    std::string source;
    std::size_t start_index = 0;
    int iterations = 0;
    /// Max equation residual after every Newton step.
    std::vector<double> residual_history;

    double max_residual() const;
};

struct NewtonOptions {
    double tol = 1e-10;
    int max_iter = 200;
    int halvings = 20;
    double dedup = 1e-6;
};

struct NewtonCensus {
    std::size_t starts = 0;
    std::size_t converged = 0;
    std::size_t duplicates = 0;
    std::size_t singular = 0;
    std::size_t stalled = 0;
    std::size_t exhausted = 0;
    std::string to_string() const;
};

/// Damped Newton from every start; converged certificates deduplicated in u, first start wins.
std::vector<SolutionCertificate> newton_solve(const SquareSystem& sys, const std::vector<StartPoint>& starts,
                                              const NewtonOptions& opt = {}, NewtonCensus* census = nullptr);

struct Rect {
    double re_lo, re_hi, im_lo, im_hi;
};

/// Winding number of f around the rectangle boundary; the contour is enlarged slightly when it passes near a zero.
int count_roots_rectangle(const std::function<cplx(cplx)>& f, Rect rect);
int count_roots_rectangle(const SquareSystem& sys, Rect rect);

struct SolveConfig {
    std::uint64_t seed = 0;
    std::size_t starts = 64;
    NewtonOptions newton;
    /// d = 1: keep only certificates with u in the rectangle.
    std::optional<Rect> rect;
    /// Denominator bound for the rational-approximation preview (0 = skip; real L only).
    long preview_Q = 0;
};

struct SolveResult {
    std::vector<SolutionCertificate> certificates;
    NewtonCensus census;
    /// The instance actually solved (reduced when the input was not balanced).
    Instance solved;
    bool reduced = false;
    std::optional<RationalApproximation> preview;
};

/// Throws PreconditionError for non-free or non-rotund input and NotFound (with the start census) when nothing converges.
SolveResult solve(const Instance& inst, const SolveConfig& config = {});

}  // namespace exptrop
