#pragma once

// Example builders and the structure-constant file format.
//
// Files are JSON. Every array is indexed inputs first, outputs last:
//   mult[i][j][k]      coefficient of e_k in e_i e_j
//   comult[i][j][k]    coefficient of e_j (x) e_k in Delta(e_i)
//   unit[k], counit[i], antipode[i][j] (coefficient of e_j in S(e_i))
//   R[i][j]            coefficient of e_i (x) e_j
//   sigma[i][j]        sigma(e_i, e_j)
//   action[b][x][y], coaction[x][b][y], right_action[x][a][y]
// Scalars are strings in canonical form ("3", "-1/2"); integers are accepted on load.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hopfmon/hopf.hpp"
#include "hopfmon/mutation.hpp"
#include "hopfmon/reptheory.hpp"
#include "hopfmon/transmute.hpp"

namespace hopfmon {

// A module block over the Hopf algebra of an instance. right_action is over the
// braided algebra A of the same instance.
struct ModuleBlock {
  std::string label;
  std::size_t dim = 0;
  std::optional<LinearMap> action;        // (b, x) -> (x)
  std::optional<LinearMap> coaction;      // (x) -> (b, x)
  std::optional<LinearMap> right_action;  // (x, a) -> (x)
};

struct Instance {
  Instance(std::string label, HopfData hopf) : label(std::move(label)), hopf(std::move(hopf)) {}

  FieldSpec field() const noexcept { return hopf.field(); }

  std::string label;
  HopfData hopf;
  std::vector<std::string> basis;
  std::optional<RMatrix> r;
  std::optional<SigmaForm> sigma;
  std::optional<BraidedBialgebraData> braided;
  std::vector<ModuleBlock> modules;
};

// Every structure map of the instance, named for mutation reports.
MutableMaps mutable_maps(Instance& instance);

struct QuasitriangularExample {
  HopfData hopf;
  RMatrix r;
};

// Sweedler's four-dimensional algebra on 1, g, x, gx with g^2 = 1, x^2 = 0,
// xg = -gx, Delta x = x (x) 1 + g (x) x and the one-parameter R-matrix family
// R = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) + alpha/2 (x(x)x - x(x)gx + gx(x)gx + gx(x)x).
// Throws PreconditionError in characteristic 2.
QuasitriangularExample build_sweedler(FieldSpec field, const Scalar& alpha);
QuasitriangularExample build_sweedler(std::uint32_t p, long long alpha);

// table[a][b] = index of ab. Throws PreconditionError unless the table is a group.
using GroupTable = std::vector<std::vector<std::size_t>>;
GroupTable cyclic_group_table(std::size_t n);
HopfData build_group_algebra(FieldSpec field, const GroupTable& table);
// Functions on the group in the delta basis.
HopfData build_dual_group_algebra(FieldSpec field, const GroupTable& table);

// kZ_n over F_p with R = 1/n sum_{a,b} omega^{-ab} g^a (x) g^b. Throws
// PreconditionError unless p is prime, n is invertible mod p and omega has
// multiplicative order exactly n.
QuasitriangularExample build_cyclic_qt(std::size_t n, std::uint32_t p, std::uint32_t omega);

// Serialization. save is canonical: sorted keys and canonical scalars, so
// saving the same instance twice gives identical bytes.
std::string to_json_text(const Instance& instance);
// Throws ParseError for malformed JSON or scalars and SchemaError, naming the
// offending field, for shape violations.
Instance from_json_text(const std::string& text);
void save(const Instance& instance, const std::filesystem::path& path);
Instance load(const std::filesystem::path& path);

// The instances used by the acceptance suite, with transmutations and module
// blocks attached where they exist.
std::vector<Instance> standard_catalog();

}  // namespace hopfmon
