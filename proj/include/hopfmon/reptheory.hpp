#pragma once

// Modules, comodules and relative Hopf modules given by structure constants,
// and the checkers for every equivariance condition between them.

#include <cstddef>
#include <optional>
#include <string>

#include "hopfmon/check_report.hpp"
#include "hopfmon/hopf.hpp"
#include "hopfmon/linear_map.hpp"

namespace hopfmon {

// Left action B (x) X -> X, interface (b, d) -> (d).
struct ModuleData {
  ModuleData(std::size_t base_dim, LinearMap action);

  std::size_t base_dim;
  std::size_t dim;
  LinearMap action;
};

// Left coaction X -> B (x) X, interface (d) -> (b, d).
struct ComoduleData {
  ComoduleData(std::size_t base_dim, LinearMap coaction);

  std::size_t base_dim;
  std::size_t dim;
  LinearMap coaction;
};

// Left B-coaction X -> B (x) X and right A-action X (x) A -> X.
struct RelHopfModuleData {
  RelHopfModuleData(std::size_t b_dim, std::size_t a_dim, LinearMap coaction, LinearMap right_action,
                    std::string label = {});

  std::size_t b_dim;
  std::size_t a_dim;
  std::size_t dim;
  LinearMap coaction;
  LinearMap right_action;
  std::string label;
};

ModuleData trivial_action(const BialgebraData& b, std::size_t dim);      // h . x = eps(h) x
ComoduleData trivial_coaction(const BialgebraData& b, std::size_t dim);  // x -> 1 (x) x
ModuleData regular_action(const BialgebraData& b);                       // multiplication
ComoduleData regular_coaction(const BialgebraData& b);                   // comultiplication

// action_unit, action_associativity
CheckReport check_module(const BialgebraData& b, const ModuleData& x);
// coaction_counit, coaction_coassociativity
CheckReport check_comodule(const BialgebraData& b, const ComoduleData& x);
// right_unit, right_associativity for an action X (x) A -> X
CheckReport check_right_module(const AlgebraData& a, const LinearMap& right_action);

enum class Flavor { comodule_coalgebra, comodule_algebra, module_algebra, module_coalgebra };
std::string to_string(Flavor flavor);

// Whatever structure A carries; a flavor needs the algebra or the coalgebra part.
struct PartialStructure {
  std::optional<AlgebraData> algebra;
  std::optional<CoalgebraData> coalgebra;
};

// The two identities of the chosen flavor. Entry names:
//   comodule_algebra:   unit, multiplication   (lambda(1) = 1 (x) 1, lambda(ab) = a_-1 b_-1 (x) a_0 b_0)
//   comodule_coalgebra: counit, comultiplication
//   module_algebra:     unit, multiplication   (h.1 = eps(h) 1, h.(ab) = (h_1.a)(h_2.b))
//   module_coalgebra:   counit, comultiplication
// map is the coaction (a) -> (b, a) or the action (b, a) -> (a).
// Throws PreconditionError when A lacks the structure the flavor needs.
CheckReport check_equivariant_structure(Flavor flavor, const BialgebraData& b, const PartialStructure& a,
                                        const LinearMap& map);

// (h_1.x)_-1 h_2 (x) (h_1.x)_0 = h_1 x_-1 (x) h_2.x_0 as maps (b, d) -> (b, d). Entry: compatibility.
CheckReport check_yetter_drinfeld(const BialgebraData& b, const LinearMap& action, const LinearMap& coaction);

// Right A-module axioms, B-comodule axioms, and
// compatibility: lambda(x.a) = x_-1 a_-1 (x) x_0 . a_0.
// a_coaction makes A a left B-comodule algebra.
CheckReport check_relative_hopf(const BialgebraData& b, const AlgebraData& a, const LinearMap& a_coaction,
                                const RelHopfModuleData& x);

// Block direct sums.
ModuleData direct_sum(const ModuleData& x, const ModuleData& y);
ComoduleData direct_sum(const ComoduleData& x, const ComoduleData& y);
RelHopfModuleData direct_sum(const RelHopfModuleData& x, const RelHopfModuleData& y);

// Sum of two maps that differ only in one "carrier" factor of the domain and
// one of the codomain: entries with both carrier indices in the first block
// come from f, both in the second block from g, everything else is zero.
LinearMap block_sum(const LinearMap& f, const LinearMap& g, std::size_t domain_factor, std::size_t codomain_factor);

}  // namespace hopfmon
