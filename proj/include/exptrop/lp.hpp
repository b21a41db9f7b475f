#pragma once

#include "exptrop/linalg.hpp"

namespace exptrop {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    ExactReal value;
    RealVec x;
};

/**
 * Exact linear program over free variables:
 *     maximize c.x  subject to  A x <= b,  E x = f.
 * Two-phase dense simplex with Bland's rule, so it terminates on degenerate input.
 */
LpResult maximize(const RealVec& c, const Matrix<ExactReal>& A, const RealVec& b,
                  const Matrix<ExactReal>& E = {}, const RealVec& f = {});

/// Some point of {A x <= b, E x = f}, or nothing.
LpResult feasible_point(std::size_t dim, const Matrix<ExactReal>& A, const RealVec& b,
                        const Matrix<ExactReal>& E = {}, const RealVec& f = {});

}  // namespace exptrop
