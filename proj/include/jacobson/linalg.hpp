#pragma once

#include <optional>
#include <vector>

#include "jacobson/field.hpp"

namespace jacobson {

/// Solves the dense system rows * x = rhs over the scalar field, one inner
/// vector per equation. Forward elimination with back substitution; free
/// variables are set to zero. Returns nullopt when the system is
/// inconsistent.
std::optional<std::vector<Scalar>> solve_dense(std::vector<std::vector<Scalar>> rows,
                                               std::vector<Scalar> rhs,
                                               const FieldSpec& field);

}  // namespace jacobson
