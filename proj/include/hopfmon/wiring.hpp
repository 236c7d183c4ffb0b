#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfmon/linear_map.hpp"

namespace hopfmon {

// Builds a composite morphism top to bottom, the way a string diagram is read:
// start from a list of input wires, then repeatedly apply a map to a run of
// adjacent wires or permute the wires. Maps with empty domain (units, R-matrices)
// insert new wires; maps with empty codomain (counits, pairings) remove them.
class Wiring {
 public:
  Wiring(FieldSpec field, Dims inputs);
  explicit Wiring(LinearMap start);

  // Apply f to the wires [pos, pos + |f.domain|).
  Wiring& then(const LinearMap& f, std::size_t pos = 0);
  // Current wire t moves to position perm[t].
  Wiring& permute(const std::vector<std::size_t>& perm);
  // Exchange wires pos and pos + 1.
  Wiring& swap(std::size_t pos);

  const Dims& wires() const noexcept { return wires_; }
  LinearMap result() const;

 private:
  FieldSpec field_;
  Dims inputs_;
  Dims wires_;
  std::optional<LinearMap> map_;
};

}  // namespace hopfmon
