#pragma once

// Binding catalog instances to DSL environments, and the native verdicts the
// shipped identity file is compared against.
//
// Generator names: B carries m, eta, Delta, eps, S and optionally R, sigma;
// the braided algebra A carries mA, etaA, DeltaA, epsA, act, coact; the first
// module block with a coaction and a right action is bound as X with ract, xcoact.

#include <string>
#include <vector>

#include "hopfmon/catalog.hpp"
#include "hopfmon/check_report.hpp"
#include "hopfmon/morphdsl.hpp"

namespace hopfmon::dsl {

Environment environment_for(const Instance& instance);

// Native checkers, entries renamed to match the identity file:
//   hopf.*, qt.*, coqt.*, yd_bialgebra.*, relative_hopf.*, and
//   monoidal.tensor_unit / monoidal.tensor_associativity for the pair (X, X).
// The monoidal entries are absent when (B, A) does not form an input datum.
CheckReport native_report(const Instance& instance);

struct Agreement {
  CheckReport dsl;
  CheckReport native;
  std::vector<std::string> disagreements;  // identity names with different verdicts
  std::vector<std::string> unmatched;      // identities with no native counterpart
  bool agree() const noexcept { return disagreements.empty(); }
};

Agreement compare_with_native(const std::vector<IdentityLine>& lines, const Instance& instance);

}  // namespace hopfmon::dsl
