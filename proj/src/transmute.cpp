#include "hopfmon/transmute.hpp"

#include "hopfmon/errors.hpp"
#include "hopfmon/reptheory.hpp"
#include "hopfmon/wiring.hpp"

namespace hopfmon {

YDModuleData::YDModuleData(std::size_t base, LinearMap act, LinearMap coact)
    : base_dim(base),
      dim(act.rows()),
      action(act.reshaped({{base, act.rows()}, {act.rows()}})),
      coaction(coact.reshaped({{act.rows()}, {base, act.rows()}})) {}

BraidedBialgebraData::BraidedBialgebraData(AlgebraData alg, CoalgebraData coalg, std::size_t base, LinearMap act,
                                           LinearMap coact)
    : algebra(std::move(alg)),
      coalgebra(std::move(coalg)),
      base_dim(base),
      action(act.reshaped({{base, algebra.dim}, {algebra.dim}})),
      coaction(coact.reshaped({{algebra.dim}, {base, algebra.dim}})) {
  if (coalgebra.dim != algebra.dim) throw ShapeError("braided bialgebra: algebra and coalgebra carriers differ");
}

YDModuleData yd_tensor(const BialgebraData& b, const YDModuleData& x, const YDModuleData& y) {
  const FieldSpec f = b.field();
  const std::size_t n = x.dim * y.dim;
  const LinearMap action = Wiring(f, {b.dim(), x.dim, y.dim})
                               .then(b.comult(), 0)
                               .swap(1)
                               .then(x.action, 0)
                               .then(y.action, 1)
                               .result()
                               .reshaped({{b.dim(), n}, {n}});
  const LinearMap coaction = Wiring(f, {x.dim, y.dim})
                                 .then(x.coaction, 0)
                                 .then(y.coaction, 2)
                                 .swap(1)
                                 .then(b.mult(), 0)
                                 .result()
                                 .reshaped({{n}, {b.dim(), n}});
  return YDModuleData(b.dim(), action, coaction);
}

LinearMap yd_braiding(const BialgebraData& b, const YDModuleData& x, const YDModuleData& y) {
  return Wiring(b.field(), {x.dim, y.dim}).then(x.coaction, 0).swap(1).then(y.action, 0).result();
}

CheckReport check_yd_bialgebra(const BialgebraData& b, const BraidedBialgebraData& a) {
  if (a.base_dim != b.dim()) throw ShapeError("check_yd_bialgebra: base dimension mismatch");
  const FieldSpec f = b.field();
  const std::size_t d = a.dim();
  CheckReport report;
  report.merge(check_algebra(a.algebra), "algebra");
  report.merge(check_coalgebra(a.coalgebra), "coalgebra");
  report.merge(check_module(b, ModuleData(b.dim(), a.action)), "module");
  report.merge(check_comodule(b, ComoduleData(b.dim(), a.coaction)), "comodule");
  const PartialStructure parts{a.algebra, a.coalgebra};
  report.merge(check_equivariant_structure(Flavor::comodule_coalgebra, b, parts, a.coaction), "comodule_coalgebra");
  report.merge(check_equivariant_structure(Flavor::comodule_algebra, b, parts, a.coaction), "comodule_algebra");
  report.merge(check_equivariant_structure(Flavor::module_algebra, b, parts, a.action), "module_algebra");
  report.merge(check_equivariant_structure(Flavor::module_coalgebra, b, parts, a.action), "module_coalgebra");
  report.merge(check_yetter_drinfeld(b, a.action, a.coaction), "yetter_drinfeld");

  const LinearMap& m = a.algebra.mult;
  const LinearMap& delta = a.coalgebra.comult;
  const LinearMap& eps = a.coalgebra.counit;
  report.expect_equal("counit_unit", compose(eps, a.algebra.unit), LinearMap::identity(f, Dims{}));
  report.expect_equal("counit_multiplicative", compose(eps, m), tensor(eps, eps));
  report.expect_equal("comultiplication_unital", compose(delta, a.algebra.unit),
                      tensor(a.algebra.unit, a.algebra.unit));
  // Delta(ab) = a_1 (a_2,-1 . b_1) (x) a_2,0 b_2
  report.expect_equal("braided_multiplicativity", compose(delta, m),
                      Wiring(f, {d, d})
                          .then(delta, 0)
                          .then(delta, 2)
                          .then(a.coaction, 1)
                          .swap(2)
                          .then(a.action, 1)
                          .then(m, 0)
                          .then(m, 1)
                          .result());
  return report;
}

namespace {

void note_failures(Transmutation& t, const CheckReport& report, const std::string& what) {
  for (const auto* e : report.failures()) t.warnings.push_back(what + ": " + e->name + " fails");
}

}  // namespace

LinearMap transmuted_comultiplication(const HopfData& h, const RMatrix& r) {
  const LinearMap ad = adjoint_action(h);
  return Wiring(h.field(), {h.dim()})
      .then(h.comult(), 0)
      .then(r.element, 1)
      .then(h.antipode, 2)
      .permute({0, 2, 1, 3})
      .then(h.mult(), 0)
      .then(ad, 1)
      .result();
}

Transmutation enveloping_braided_group(const HopfData& h, const RMatrix& r) {
  if (r.dim != h.dim()) throw ShapeError("enveloping_braided_group: R-matrix carrier mismatch");
  const LinearMap ad = adjoint_action(h);
  // R^2 (x) R^1 |> h, built on the input wire h.
  const LinearMap lambda =
      Wiring(h.field(), {h.dim()}).then(r.element, 0).swap(0).then(ad, 1).result();
  CheckReport pre;
  pre.merge(check_hopf(h), "hopf");
  pre.merge(check_quasitriangular(h, r), "quasitriangular");
  Transmutation t{BraidedBialgebraData(h.bialgebra.algebra,
                                       CoalgebraData(transmuted_comultiplication(h, r), h.counit()), h.dim(), ad,
                                       lambda),
                  pre, {}};
  note_failures(t, pre, "precondition");
  return t;
}

LinearMap transmuted_multiplication(const HopfData& h, const SigmaForm& sigma) {
  return Wiring(h.field(), {h.dim(), h.dim()})
      .then(h.comult(), 0)
      .then(h.comult(), 0)
      .then(h.comult(), 3)
      .then(h.antipode, 0)
      .permute({1, 3, 2, 4, 0})
      .then(h.mult(), 1)
      .then(sigma.form, 0)
      .then(h.mult(), 0)
      .result();
}

LinearMap sigma_action(const HopfData& h, const SigmaForm& sigma) {
  const LinearMap s_inv = antipode_inverse(h);
  return Wiring(h.field(), {h.dim(), h.dim()})
      .then(h.comult(), 1)
      .then(h.comult(), 1)
      .then(s_inv, 3)
      .permute({2, 1, 3, 0})
      .then(h.mult(), 0)
      .then(sigma.form, 0)
      .result();
}

Transmutation function_braided_group(const HopfData& h, const SigmaForm& sigma) {
  if (sigma.dim != h.dim()) throw ShapeError("function_braided_group: form carrier mismatch");
  CheckReport pre;
  pre.merge(check_hopf(h), "hopf");
  pre.merge(check_coquasitriangular(h, sigma), "coquasitriangular");
  Transmutation t{BraidedBialgebraData(AlgebraData(transmuted_multiplication(h, sigma), h.unit()),
                                       h.bialgebra.coalgebra, h.dim(), sigma_action(h, sigma),
                                       coadjoint_coaction(h)),
                  pre, {}};
  note_failures(t, pre, "precondition");
  return t;
}

}  // namespace hopfmon
