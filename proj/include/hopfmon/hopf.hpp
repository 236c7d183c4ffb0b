#pragma once

// Structure-constant (co)algebras, bialgebras and Hopf algebras, with exact
// axiom checkers. Validity is never a type invariant: constructors only check
// shapes, so broken candidate structures stay representable.

#include <cstddef>
#include <optional>

#include "hopfmon/check_report.hpp"
#include "hopfmon/linear_map.hpp"

namespace hopfmon {

struct AlgebraData {
  // mult: (d,d) -> (d), unit: () -> (d); interfaces are normalised to those lists.
  AlgebraData(LinearMap mult, LinearMap unit);

  FieldSpec field() const noexcept { return mult.field(); }

  std::size_t dim;
  LinearMap mult;
  LinearMap unit;
};

struct CoalgebraData {
  // comult: (d) -> (d,d), counit: (d) -> ().
  CoalgebraData(LinearMap comult, LinearMap counit);

  FieldSpec field() const noexcept { return comult.field(); }

  std::size_t dim;
  LinearMap comult;
  LinearMap counit;
};

struct BialgebraData {
  BialgebraData(AlgebraData algebra, CoalgebraData coalgebra);

  std::size_t dim() const noexcept { return algebra.dim; }
  FieldSpec field() const noexcept { return algebra.field(); }
  const LinearMap& mult() const noexcept { return algebra.mult; }
  const LinearMap& unit() const noexcept { return algebra.unit; }
  const LinearMap& comult() const noexcept { return coalgebra.comult; }
  const LinearMap& counit() const noexcept { return coalgebra.counit; }

  AlgebraData algebra;
  CoalgebraData coalgebra;
};

struct HopfData {
  HopfData(BialgebraData bialgebra, LinearMap antipode);

  std::size_t dim() const noexcept { return bialgebra.dim(); }
  FieldSpec field() const noexcept { return bialgebra.field(); }
  const LinearMap& mult() const noexcept { return bialgebra.mult(); }
  const LinearMap& unit() const noexcept { return bialgebra.unit(); }
  const LinearMap& comult() const noexcept { return bialgebra.comult(); }
  const LinearMap& counit() const noexcept { return bialgebra.counit(); }

  BialgebraData bialgebra;
  LinearMap antipode;
};

// R = sum coeff(i, j) e_i (x) e_j, held as the map () -> (d,d).
struct RMatrix {
  explicit RMatrix(LinearMap element);
  // 1 (x) 1
  static RMatrix trivial(const AlgebraData& algebra);

  Scalar coeff(std::size_t i, std::size_t j) const { return element.at(i * dim + j, 0); }

  std::size_t dim;
  LinearMap element;
};

// Bilinear form sigma(e_i, e_j), held as the map (d,d) -> ().
struct SigmaForm {
  explicit SigmaForm(LinearMap form);
  // sigma(h, h') = eps(h) eps(h')
  static SigmaForm trivial(const CoalgebraData& coalgebra);

  Scalar value(std::size_t i, std::size_t j) const { return form.at(0, i * dim + j); }

  std::size_t dim;
  LinearMap form;
};

// The one-dimensional algebra / coalgebra k.
AlgebraData ground_algebra(FieldSpec field);
CoalgebraData ground_coalgebra(FieldSpec field);
AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);
CoalgebraData tensor_coalgebra(const CoalgebraData& c, const CoalgebraData& d);

bool is_commutative(const AlgebraData& a);
bool is_cocommutative(const CoalgebraData& c);

CheckReport check_algebra(const AlgebraData& a);
CheckReport check_coalgebra(const CoalgebraData& c);
CheckReport check_bialgebra(const BialgebraData& b);
CheckReport check_hopf(const HopfData& h);
CheckReport check_quasitriangular(const HopfData& h, const RMatrix& r);
CheckReport check_coquasitriangular(const HopfData& h, const SigmaForm& sigma);

// Convolution product m o (f (x) g) o Delta of maps C -> A.
LinearMap convolution(const CoalgebraData& c, const AlgebraData& a, const LinearMap& f, const LinearMap& g);
// The g with f * g = g * f = eta o eps, found by an exact linear solve;
// std::nullopt when no such g exists.
std::optional<LinearMap> convolution_inverse(const CoalgebraData& c, const AlgebraData& a, const LinearMap& f);

// S^{-1}; throws PreconditionError when S is singular (corrupted input).
LinearMap antipode_inverse(const HopfData& h);
// h (x) h' -> h_(1) h' S(h_(2)), a map (d,d) -> (d).
LinearMap adjoint_action(const HopfData& h);
// h -> S^{-1}(h_(3)) h_(1) (x) h_(2), a map (d) -> (d,d).
LinearMap coadjoint_coaction(const HopfData& h);

// Product of two elements of the k-fold tensor power H^{(x)k}, legwise.
LinearMap multiply_legs(const AlgebraData& a, const LinearMap& x, const LinearMap& y, std::size_t legs);

}  // namespace hopfmon
