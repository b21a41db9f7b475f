#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exptrop/expsystem.hpp"

namespace exptrop {

enum class RotundityMethod { rado, mixed_volume, stable_intersection };
std::string to_string(RotundityMethod m);

struct RadoResult {
    bool has_transversal = false;
    /// Index of the chosen vector within each set, when a transversal basis exists.
    std::vector<std::size_t> choice;
    /// Sets whose union spans fewer than |J| dimensions, otherwise.
    std::vector<std::size_t> failing_J;
};

/**
 * Decides whether one vector can be picked from each set so that the picks are
 * linearly independent (exact ranks). Uses matroid intersection of the linear
 * matroid with the partition matroid: a greedy start in lexicographic order,
 * then breadth-first shortest augmenting paths.
 */
RadoResult rado_check(const std::vector<std::vector<ComplexVec>>& sets, std::size_t dim);

struct RotundityReport {
    bool rotund = false;
    RotundityMethod method = RotundityMethod::rado;
    /// (W polynomial index, vertex index in its Newton polytope).
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> witness_basis;
    std::optional<std::vector<std::size_t>> failing_J;
    std::optional<ExactReal> mixed_volume;
    /// Some scalar was an inexact float; the decision used tolerance 1e-9.
    bool numeric = false;
};

/// No nonzero rational q with q . z = 0 on L.
bool is_additively_free(const Matrix<ExactComplex>& L_rows, std::size_t n);

/// Rado criterion on the Newton polytope vertices of W projected to the dual of L.
RotundityReport is_rotund(const Instance& inst);
/// Mixed volume of the attached system's Newton polytopes is nonzero (real L only).
RotundityReport mixed_volume_check(const Instance& inst);
/// Stable intersection of the complexes of complex_collection is nonempty.
RotundityReport stable_intersection_check(const Instance& inst);

}  // namespace exptrop
