#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfmon/linear_map.hpp"

namespace hopfmon {

// Exact two-sided inverse, or std::nullopt when f is singular.
// Throws ShapeError for non-square input.
std::optional<LinearMap> invert(const LinearMap& f);

// Some x with a o x == b (free variables set to zero), std::nullopt when the
// system is inconsistent. x has domain b.domain and codomain a.domain.
std::optional<LinearMap> solve(const LinearMap& a, const LinearMap& b);

std::size_t rank(const LinearMap& a);

// Basis of ker(a); each vector is a map from the unit object into a.domain.
std::vector<LinearMap> nullspace(const LinearMap& a);

// Reduced basis of the span of the given column vectors (all 1 -> same space).
std::vector<LinearMap> span_basis(const std::vector<LinearMap>& vectors);

// Matrix whose k-th column is vectors[k]; domain {count}, codomain as given.
LinearMap from_columns(const std::vector<LinearMap>& vectors, const Dims& codomain);
// Column k of a as a vector 1 -> a.codomain.
LinearMap column(const LinearMap& a, std::size_t k);

}  // namespace hopfmon
