#include "hopfmon/mutation.hpp"

#include "hopfmon/errors.hpp"

namespace hopfmon {

std::string to_string(const MutationSite& site) {
  return site.map + "[" + std::to_string(site.row) + "," + std::to_string(site.col) + "] += 1";
}

MutationSite mutate_one(const MutableMaps& maps, std::mt19937_64& rng) {
  std::size_t total = 0;
  for (const auto& [name, m] : maps) total += m->rows() * m->cols();
  if (total == 0) throw PreconditionError("mutate_one: nothing to mutate");
  std::size_t pick = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
  for (const auto& [name, m] : maps) {
    const std::size_t size = m->rows() * m->cols();
    if (pick < size) {
      const MutationSite site{name, pick / m->cols(), pick % m->cols()};
      m->set(site.row, site.col, m->at(site.row, site.col) + Scalar::one(m->field()));
      return site;
    }
    pick -= size;
  }
  throw PreconditionError("mutate_one: unreachable");
}

}  // namespace hopfmon
