#pragma once

// Seeded single-entry mutations of structure constants, used to show that the
// checkers are not vacuous.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfmon/linear_map.hpp"

namespace hopfmon {

struct MutationSite {
  std::string map;
  std::size_t row = 0;
  std::size_t col = 0;
};

std::string to_string(const MutationSite& site);

// Maps that may be mutated, by name. The pointers must outlive the call.
using MutableMaps = std::vector<std::pair<std::string, LinearMap*>>;

// Adds 1 to one entry chosen uniformly among all entries of all maps.
MutationSite mutate_one(const MutableMaps& maps, std::mt19937_64& rng);

}  // namespace hopfmon
