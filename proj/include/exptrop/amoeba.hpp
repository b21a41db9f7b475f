#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exptrop/expsystem.hpp"
#include "exptrop/polyhedra.hpp"

namespace exptrop {

/// Roots of sum_k c_k x^k (coefficients in increasing degree), polished by Newton steps.
std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs);

struct AmoebaSample {
    double base = M_E;
    std::vector<FloatPoint> points;
    std::string source;
    /// Largest relative residual |f(w)| / sum |c w^k| over the sampled W points.
    double max_residual = 0;
};

struct AmoebaOptions {
    /// Free coordinates are drawn with Log_t uniform in [-radius, radius].
    double radius = 5.0;
};

/**
 * Log_t images of random points of a hypersurface W: all coordinates but one are
 * drawn log-uniformly in modulus and uniformly in phase, and the remaining one is
 * solved for. The solved coordinate cycles through the coordinates that occur in
 * f, so every tentacle direction is reached.
 */
AmoebaSample sample_amoeba(const Instance& inst, double t, std::size_t count, std::uint64_t seed,
                           const AmoebaOptions& opt = {});

/// x in the amoeba of a w1 + b w2 + c = 0: the moduli |a|e^x1, |b|e^x2, |c| satisfy the triangle inequalities.
bool amoeba_member_line(const std::vector<double>& x, cplx a, cplx b, cplx c);

/// A point of V(f) whose Log is within tol of x, searched over phases; nullopt if none found.
std::optional<CVec> amoeba_witness(const ExpSum& f, const std::vector<double>& x, double tol, std::uint64_t seed);

struct ConvergenceRow {
    double t = 0;
    double hausdorff = 0;
};

/// Hausdorff distance between the Log_t sample (clipped to the sampling box) and a grid sample of Trop(f).
std::vector<ConvergenceRow> convergence_experiment(const Instance& inst, const std::vector<double>& ts,
                                                   std::size_t count, std::uint64_t seed,
                                                   const AmoebaOptions& opt = {}, double grid_step = 0.05);

struct RealTracePoint {
    std::vector<double> x;
    /// One W point per polynomial with Log close to x; for the line case this is exact.
    std::vector<CVec> certificates;
    /// Phase of the first coordinate of the first certificate.
    double phase = 0;
    /// Several W polynomials were tested one at a time (intersection of hypersurface amoebas).
    bool outer_approximation = false;
};

/// A point of Re(L) in the amoeba of W, searched outward from the origin along Re(L).
RealTracePoint real_trace_point(const Instance& inst, std::uint64_t seed = 0);

}  // namespace exptrop
