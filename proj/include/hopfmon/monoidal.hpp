#pragma once

// Relative Hopf modules over an input datum (B, A): the tensor A-action, the
// full list of conditions that make the tensor product monoidal, and the
// two-sided comparison with the braided-bialgebra conditions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hopfmon/check_report.hpp"
#include "hopfmon/hopf.hpp"
#include "hopfmon/reptheory.hpp"
#include "hopfmon/transmute.hpp"

namespace hopfmon {

// B a bialgebra; A an algebra, a coalgebra and a left B-comodule algebra; a raw
// map B (x) A -> A with no axioms assumed.
class MonoidalInputDatum {
 public:
  // Throws PreconditionError naming the failed invariants.
  static MonoidalInputDatum make(BialgebraData b, AlgebraData a_algebra, CoalgebraData a_coalgebra,
                                 LinearMap a_coaction, LinearMap a_action);
  // std::nullopt when an invariant fails; the failing entries go to *why when given.
  static std::optional<MonoidalInputDatum> try_make(BialgebraData b, AlgebraData a_algebra, CoalgebraData a_coalgebra,
                                                    LinearMap a_coaction, LinearMap a_action,
                                                    CheckReport* why = nullptr);
  static MonoidalInputDatum from_braided(const BialgebraData& b, const BraidedBialgebraData& a);
  // b.*, a.algebra.*, a.coalgebra.*, a.comodule.*, a.comodule_algebra.*
  static CheckReport invariants(const BialgebraData& b, const AlgebraData& a_algebra, const CoalgebraData& a_coalgebra,
                                const LinearMap& a_coaction);

  const BialgebraData& b() const noexcept { return b_; }
  const AlgebraData& a_algebra() const noexcept { return a_algebra_; }
  const CoalgebraData& a_coalgebra() const noexcept { return a_coalgebra_; }
  const LinearMap& a_coaction() const noexcept { return a_coaction_; }  // (a) -> (b, a)
  const LinearMap& a_action() const noexcept { return a_action_; }      // (b, a) -> (a)
  std::size_t a_dim() const noexcept { return a_algebra_.dim; }
  FieldSpec field() const noexcept { return b_.field(); }

  BraidedBialgebraData as_braided() const;

 private:
  MonoidalInputDatum(BialgebraData b, AlgebraData a_algebra, CoalgebraData a_coalgebra, LinearMap a_coaction,
                     LinearMap a_action);

  BialgebraData b_;
  AlgebraData a_algebra_;
  CoalgebraData a_coalgebra_;
  LinearMap a_coaction_;
  LinearMap a_action_;
};

// (x (x) y) . a = x . (y_-1 . a_1) (x) y_0 . a_2 with the coaction x_-1 y_-1 (x) x_0 (x) y_0.
RelHopfModuleData hopf_tensor_action(const MonoidalInputDatum& datum, const RelHopfModuleData& x,
                                     const RelHopfModuleData& y);
// A with its coaction and multiplication.
RelHopfModuleData regular_module(const MonoidalInputDatum& datum);
// B with coaction Delta_B and b . a = b eps_A(a).
RelHopfModuleData trivial_module(const MonoidalInputDatum& datum);
// k with lambda(1) = 1_B (x) 1 and 1 . a = eps_A(a).
RelHopfModuleData unit_module(const MonoidalInputDatum& datum);
// {A, B_tr, unit, A (x) B_tr}
std::vector<RelHopfModuleData> canonical_family(const MonoidalInputDatum& datum);

// The seven unit/counit relations: counit_multiplicative, counit_unital,
// coaction_counit, action_counit, action_unital, comultiplication_unital, action_on_unit.
CheckReport check_unit_counit_relations(const MonoidalInputDatum& datum);

struct MonoidalOptions {
  // Pairs and triples whose carrier dimensions multiply beyond this are skipped with a note.
  std::size_t carrier_budget = 64;
};

// unit_counit.*, module(L).* for each member, and for every ordered pair / triple
// within budget: pair(L1,L2).tensor_unit, pair(L1,L2).tensor_associativity,
// pair(L1,L2).relative_hopf.*, triple(L1,L2,L3).bracketing.
CheckReport check_monoidal_conditions(const MonoidalInputDatum& datum, const std::vector<RelHopfModuleData>& modules,
                                      const MonoidalOptions& options = {});

struct TwoSidedVerdict {
  bool left = false;
  bool right = false;
  bool agree() const noexcept { return left == right; }
  CheckReport left_report;
  CheckReport right_report;
};

// left: A is a bialgebra in the Yetter-Drinfeld category of B;
// right: the monoidal conditions on the canonical family plus extra_modules.
TwoSidedVerdict check_theorem_2_1(const MonoidalInputDatum& datum,
                                  const std::vector<RelHopfModuleData>& extra_modules = {},
                                  const MonoidalOptions& options = {});

// A a classical bialgebra and left B-comodule algebra with the trivial action.
// left: A is a bialgebra and both coaction identities hold
//   h a_-1 (x) Delta(a_0) = a_1,-1 h a_2,-1 (x) a_1,0 (x) a_2,0,  eps(a) 1 = eps(a_0) a_-1;
// right: the braided-bialgebra suite with h . a = eps(h) a.
TwoSidedVerdict check_trivial_action_doi_hopf(const BialgebraData& b, const BialgebraData& a,
                                              const LinearMap& a_coaction);

struct SuiteResult {
  bool precondition_ok = false;
  std::size_t samples = 0;
  std::size_t agreements = 0;
  std::size_t first_passes = 0;   // candidates accepted by the relative-Hopf predicate
  std::size_t second_passes = 0;  // candidates accepted by the direct predicate
  std::uint64_t seed = 0;
  CheckReport report;
};

// H cocommutative: relative Hopf modules over the transmutation with R = 1 (x) 1
// against right-left Long dimodules, on seeded random candidates of carrier
// dimension <= max_dim; also compares the tensor action with its closed form.
SuiteResult long_dimodule_suite(const HopfData& h, std::size_t samples, std::uint64_t seed, std::size_t max_dim = 3);

// H commutative: relative Hopf modules over the function braided group with
// trivial sigma against right-left Yetter-Drinfeld modules.
SuiteResult yd_identification_suite(const HopfData& h, std::size_t samples, std::uint64_t seed,
                                    std::size_t max_dim = 3);

// Algebra maps A -> k found by exhaustive search (all of k^d over a small
// prime field, coefficients in [-2, 2] otherwise).
std::vector<LinearMap> algebra_characters(const AlgebraData& a);
// Grouplike elements of a coalgebra, by the same search on the dual algebra.
std::vector<LinearMap> grouplikes(const CoalgebraData& c);

// Submodules and quotients of k_g (x) A (g grouplike in B) with carrier
// dimension <= max_dim that pass check_relative_hopf; at most 50 attempts each.
std::vector<RelHopfModuleData> random_relative_hopf_modules(const MonoidalInputDatum& datum, std::size_t count,
                                                            std::uint64_t seed, std::size_t max_dim = 4);

}  // namespace hopfmon
