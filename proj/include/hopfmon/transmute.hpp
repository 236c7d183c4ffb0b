#pragma once

// Yetter-Drinfeld modules over a bialgebra B: tensor product, prebraiding,
// the braided-bialgebra checker, and the two transmutation constructions that
// turn a (co)quasitriangular Hopf algebra into a bialgebra in that category.

#include <cstddef>
#include <string>
#include <vector>

#include "hopfmon/check_report.hpp"
#include "hopfmon/hopf.hpp"
#include "hopfmon/linear_map.hpp"

namespace hopfmon {

struct YDModuleData {
  // action (b, d) -> (d), coaction (d) -> (b, d)
  YDModuleData(std::size_t base_dim, LinearMap action, LinearMap coaction);

  std::size_t base_dim;
  std::size_t dim;
  LinearMap action;
  LinearMap coaction;
};

struct BraidedBialgebraData {
  BraidedBialgebraData(AlgebraData algebra, CoalgebraData coalgebra, std::size_t base_dim, LinearMap action,
                       LinearMap coaction);

  std::size_t dim() const noexcept { return algebra.dim; }
  FieldSpec field() const noexcept { return algebra.field(); }
  YDModuleData yd_module() const { return YDModuleData(base_dim, action, coaction); }

  AlgebraData algebra;
  CoalgebraData coalgebra;
  std::size_t base_dim;
  LinearMap action;
  LinearMap coaction;
};

// h.(x (x) y) = h_1.x (x) h_2.y, lambda(x (x) y) = x_-1 y_-1 (x) x_0 (x) y_0.
// The carrier is one factor of dimension dim_X * dim_Y.
YDModuleData yd_tensor(const BialgebraData& b, const YDModuleData& x, const YDModuleData& y);
// c(x (x) y) = x_-1.y (x) x_0, a map (dx, dy) -> (dy, dx).
LinearMap yd_braiding(const BialgebraData& b, const YDModuleData& x, const YDModuleData& y);

// All constituents, prefixed: algebra.*, coalgebra.*, module.*, comodule.*,
// comodule_coalgebra.*, comodule_algebra.*, module_algebra.*, module_coalgebra.*,
// yetter_drinfeld.compatibility, then counit_unit, counit_multiplicative,
// comultiplication_unital, braided_multiplicativity.
CheckReport check_yd_bialgebra(const BialgebraData& b, const BraidedBialgebraData& a);

// Construction output. When the inputs fail their preconditions the data is
// still built and `warnings` says which checks failed.
struct Transmutation {
  BraidedBialgebraData data;
  CheckReport preconditions;
  std::vector<std::string> warnings;
};

// Same algebra, unit and counit; comultiplication h_1 S(R^2) (x) R^1 |> h_2,
// adjoint action, coaction R^2 (x) R^1 |> h.
Transmutation enveloping_braided_group(const HopfData& h, const RMatrix& r);
// Transmuted comultiplication alone, as a map (d) -> (d, d).
LinearMap transmuted_comultiplication(const HopfData& h, const RMatrix& r);

// Same coalgebra and unit; multiplication sigma(h'_2, S(h_1) h_3) h_2 h'_1,
// coadjoint coaction, action sigma(S^{-1}(h'_3) h'_1, h) h'_2.
Transmutation function_braided_group(const HopfData& h, const SigmaForm& sigma);
LinearMap transmuted_multiplication(const HopfData& h, const SigmaForm& sigma);
// h (x) h' -> sigma(S^{-1}(h'_3) h'_1, h) h'_2, a map (d, d) -> (d).
LinearMap sigma_action(const HopfData& h, const SigmaForm& sigma);

}  // namespace hopfmon
