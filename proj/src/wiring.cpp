#include "hopfmon/wiring.hpp"

#include <algorithm>
#include <numeric>

#include "hopfmon/errors.hpp"

namespace hopfmon {

Wiring::Wiring(FieldSpec field, Dims inputs) : field_(field), inputs_(inputs), wires_(std::move(inputs)) {}

Wiring::Wiring(LinearMap start)
    : field_(start.field()), inputs_(start.domain_dims()), wires_(start.codomain_dims()), map_(std::move(start)) {}

Wiring& Wiring::then(const LinearMap& f, std::size_t pos) {
  if (map_) {
    map_ = apply_at(*map_, pos, f);
  } else {
    const Dims& fin = f.domain_dims();
    if (pos + fin.size() > wires_.size() ||
        !std::equal(fin.begin(), fin.end(), wires_.begin() + static_cast<std::ptrdiff_t>(pos))) {
      throw ShapeError("wiring: map with domain " + to_string(fin) + " does not fit wires " + to_string(wires_) +
                       " at position " + std::to_string(pos));
    }
    const Dims prefix(wires_.begin(), wires_.begin() + static_cast<std::ptrdiff_t>(pos));
    const Dims suffix(wires_.begin() + static_cast<std::ptrdiff_t>(pos + fin.size()), wires_.end());
    map_ = tensor({LinearMap::identity(field_, prefix), f, LinearMap::identity(field_, suffix)});
  }
  wires_ = map_->codomain_dims();
  return *this;
}

Wiring& Wiring::permute(const std::vector<std::size_t>& perm) {
  if (map_) {
    map_ = permute_codomain(*map_, perm);
  } else {
    map_ = permute_factors(field_, wires_, perm);
  }
  wires_ = map_->codomain_dims();
  return *this;
}

Wiring& Wiring::swap(std::size_t pos) {
  if (pos + 1 >= wires_.size()) throw ShapeError("wiring: swap position out of range");
  std::vector<std::size_t> perm(wires_.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::swap(perm[pos], perm[pos + 1]);
  return permute(perm);
}

LinearMap Wiring::result() const {
  if (map_) return *map_;
  return LinearMap::identity(field_, inputs_);
}

}  // namespace hopfmon
