#include "hopfmon/hopf.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "hopfmon/errors.hpp"
#include "hopfmon/linear_solve.hpp"
#include "hopfmon/wiring.hpp"

namespace hopfmon {

namespace {

LinearMap normalise(const LinearMap& m, Interface shape, const char* what) {
  if (total(shape.domain) != m.cols() || total(shape.codomain) != m.rows()) {
    throw ShapeError(std::string(what) + ": expected a " + std::to_string(total(shape.codomain)) + "x" +
                     std::to_string(total(shape.domain)) + " matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
  return m.reshaped(std::move(shape));
}

std::size_t side_of_square(std::size_t n) {
  std::size_t d = 1;
  while (d * d < n) ++d;
  return d;
}

void require_field(const LinearMap& m, FieldSpec field, const char* what) {
  if (m.field() != field) throw FieldError(std::string(what) + ": field mismatch");
}

// Interleaves the legs of x (x) y: (a1..ak, b1..bk) -> (a1, b1, ..., ak, bk).
std::vector<std::size_t> interleave(std::size_t legs) {
  std::vector<std::size_t> perm(2 * legs);
  for (std::size_t i = 0; i < legs; ++i) {
    perm[i] = 2 * i;
    perm[legs + i] = 2 * i + 1;
  }
  return perm;
}

}  // namespace

AlgebraData::AlgebraData(LinearMap m, LinearMap u)
    : dim(m.rows()),
      mult(normalise(m, {{m.rows(), m.rows()}, {m.rows()}}, "algebra multiplication")),
      unit(normalise(u, {{}, {m.rows()}}, "algebra unit")) {
  require_field(unit, mult.field(), "algebra unit");
}

CoalgebraData::CoalgebraData(LinearMap c, LinearMap e)
    : dim(c.cols()),
      comult(normalise(c, {{c.cols()}, {c.cols(), c.cols()}}, "comultiplication")),
      counit(normalise(e, {{c.cols()}, {}}, "counit")) {
  require_field(counit, comult.field(), "counit");
}

BialgebraData::BialgebraData(AlgebraData a, CoalgebraData c) : algebra(std::move(a)), coalgebra(std::move(c)) {
  if (algebra.dim != coalgebra.dim) throw ShapeError("bialgebra: algebra and coalgebra carriers differ");
  require_field(coalgebra.comult, algebra.field(), "bialgebra");
}

HopfData::HopfData(BialgebraData b, LinearMap s)
    : bialgebra(std::move(b)), antipode(normalise(s, {{bialgebra.dim()}, {bialgebra.dim()}}, "antipode")) {
  require_field(antipode, bialgebra.field(), "antipode");
}

RMatrix::RMatrix(LinearMap e) : dim(side_of_square(e.rows())), element(normalise(e, {{}, {dim, dim}}, "R-matrix")) {}

RMatrix RMatrix::trivial(const AlgebraData& algebra) { return RMatrix(tensor(algebra.unit, algebra.unit)); }

SigmaForm::SigmaForm(LinearMap f) : dim(side_of_square(f.cols())), form(normalise(f, {{dim, dim}, {}}, "bilinear form")) {}

SigmaForm SigmaForm::trivial(const CoalgebraData& coalgebra) {
  return SigmaForm(tensor(coalgebra.counit, coalgebra.counit));
}

AlgebraData ground_algebra(FieldSpec field) {
  return AlgebraData(LinearMap::from_ints(field, {{1, 1}, {1}}, {1}), LinearMap::from_ints(field, {{}, {1}}, {1}));
}

CoalgebraData ground_coalgebra(FieldSpec field) {
  return CoalgebraData(LinearMap::from_ints(field, {{1}, {1, 1}}, {1}), LinearMap::from_ints(field, {{1}, {}}, {1}));
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
  const std::size_t n = a.dim * b.dim;
  const LinearMap mult = Wiring(a.field(), {a.dim, b.dim, a.dim, b.dim})
                             .swap(1)
                             .then(a.mult, 0)
                             .then(b.mult, 1)
                             .result()
                             .reshaped({{n, n}, {n}});
  return AlgebraData(mult, tensor(a.unit, b.unit).reshaped({{}, {n}}));
}

CoalgebraData tensor_coalgebra(const CoalgebraData& c, const CoalgebraData& d) {
  const std::size_t n = c.dim * d.dim;
  const LinearMap comult = Wiring(c.field(), {c.dim, d.dim})
                               .then(c.comult, 0)
                               .then(d.comult, 2)
                               .swap(1)
                               .result()
                               .reshaped({{n}, {n, n}});
  return CoalgebraData(comult, tensor(c.counit, d.counit).reshaped({{n}, {}}));
}

bool is_commutative(const AlgebraData& a) {
  return same_matrix(a.mult, compose(a.mult, flip(a.field(), a.dim, a.dim)));
}

bool is_cocommutative(const CoalgebraData& c) {
  return same_matrix(c.comult, compose(flip(c.field(), c.dim, c.dim), c.comult));
}

CheckReport check_algebra(const AlgebraData& a) {
  const FieldSpec f = a.field();
  const std::size_t d = a.dim;
  CheckReport report;
  report.expect_equal("associativity", Wiring(f, {d, d, d}).then(a.mult, 0).then(a.mult, 0).result(),
                      Wiring(f, {d, d, d}).then(a.mult, 1).then(a.mult, 0).result());
  const LinearMap id = LinearMap::identity(f, d);
  report.expect_equal("left_unit", Wiring(f, {d}).then(a.unit, 0).then(a.mult, 0).result(), id);
  report.expect_equal("right_unit", Wiring(f, {d}).then(a.unit, 1).then(a.mult, 0).result(), id);
  return report;
}

CheckReport check_coalgebra(const CoalgebraData& c) {
  const FieldSpec f = c.field();
  const std::size_t d = c.dim;
  CheckReport report;
  report.expect_equal("coassociativity", Wiring(f, {d}).then(c.comult, 0).then(c.comult, 0).result(),
                      Wiring(f, {d}).then(c.comult, 0).then(c.comult, 1).result());
  const LinearMap id = LinearMap::identity(f, d);
  report.expect_equal("left_counit", Wiring(f, {d}).then(c.comult, 0).then(c.counit, 0).result(), id);
  report.expect_equal("right_counit", Wiring(f, {d}).then(c.comult, 0).then(c.counit, 1).result(), id);
  return report;
}

CheckReport check_bialgebra(const BialgebraData& b) {
  const FieldSpec f = b.field();
  const std::size_t d = b.dim();
  CheckReport report = check_algebra(b.algebra);
  report.merge(check_coalgebra(b.coalgebra));
  report.expect_equal("comultiplication_multiplicative", compose(b.comult(), b.mult()),
                      Wiring(f, {d, d})
                          .then(b.comult(), 0)
                          .then(b.comult(), 2)
                          .swap(1)
                          .then(b.mult(), 0)
                          .then(b.mult(), 1)
                          .result());
  report.expect_equal("counit_multiplicative", compose(b.counit(), b.mult()), tensor(b.counit(), b.counit()));
  report.expect_equal("comultiplication_unital", compose(b.comult(), b.unit()), tensor(b.unit(), b.unit()));
  report.expect_equal("counit_unital", compose(b.counit(), b.unit()), LinearMap::identity(f, Dims{}));
  return report;
}

CheckReport check_hopf(const HopfData& h) {
  const FieldSpec f = h.field();
  const std::size_t d = h.dim();
  CheckReport report = check_bialgebra(h.bialgebra);
  const LinearMap unit_counit = compose(h.unit(), h.counit());
  report.expect_equal("antipode_left",
                      Wiring(f, {d}).then(h.comult(), 0).then(h.antipode, 0).then(h.mult(), 0).result(), unit_counit);
  report.expect_equal("antipode_right",
                      Wiring(f, {d}).then(h.comult(), 0).then(h.antipode, 1).then(h.mult(), 0).result(), unit_counit);
  return report;
}

LinearMap multiply_legs(const AlgebraData& a, const LinearMap& x, const LinearMap& y, std::size_t legs) {
  Wiring w(tensor(x, y));
  w.permute(interleave(legs));
  for (std::size_t i = 0; i < legs; ++i) w.then(a.mult, i);
  return w.result();
}

CheckReport check_quasitriangular(const HopfData& h, const RMatrix& r) {
  const FieldSpec f = h.field();
  const std::size_t d = h.dim();
  if (r.dim != d) throw ShapeError("R-matrix carrier differs from the Hopf algebra");
  const AlgebraData& alg = h.bialgebra.algebra;
  CheckReport report;
  report.expect_equal("counit_first_leg", Wiring(r.element).then(h.counit(), 0).result(), h.unit());
  report.expect_equal("counit_second_leg", Wiring(r.element).then(h.counit(), 1).result(), h.unit());

  const LinearMap r12 = Wiring(r.element).then(h.unit(), 2).result();
  const LinearMap r13 = Wiring(r.element).then(h.unit(), 1).result();
  const LinearMap r23 = Wiring(r.element).then(h.unit(), 0).result();
  report.expect_equal("comultiplication_first_leg", Wiring(r.element).then(h.comult(), 0).result(),
                      multiply_legs(alg, r13, r23, 3));
  report.expect_equal("comultiplication_second_leg", Wiring(r.element).then(h.comult(), 1).result(),
                      multiply_legs(alg, r13, r12, 3));

  // R Delta(h) = Delta^cop(h) R as maps (d) -> (d,d)
  const LinearMap lhs = Wiring(f, {d})
                            .then(h.comult(), 0)
                            .then(r.element, 0)
                            .permute(interleave(2))
                            .then(h.mult(), 0)
                            .then(h.mult(), 1)
                            .result();
  const LinearMap rhs = Wiring(f, {d})
                            .then(h.comult(), 0)
                            .swap(0)
                            .then(r.element, 2)
                            .permute(interleave(2))
                            .then(h.mult(), 0)
                            .then(h.mult(), 1)
                            .result();
  report.expect_equal("intertwining", lhs, rhs);
  return report;
}

CheckReport check_coquasitriangular(const HopfData& h, const SigmaForm& sigma) {
  const FieldSpec f = h.field();
  const std::size_t d = h.dim();
  if (sigma.dim != d) throw ShapeError("bilinear form carrier differs from the Hopf algebra");
  const LinearMap& s = sigma.form;
  CheckReport report;
  // sigma(ab, c) = sigma(a, c_(1)) sigma(b, c_(2))
  report.expect_equal("multiplicative_first_argument", Wiring(f, {d, d, d}).then(h.mult(), 0).then(s, 0).result(),
                      Wiring(f, {d, d, d}).then(h.comult(), 2).permute({0, 2, 1, 3}).then(s, 0).then(s, 0).result());
  // sigma(a, bc) = sigma(a_(1), c) sigma(a_(2), b)
  report.expect_equal("multiplicative_second_argument", Wiring(f, {d, d, d}).then(h.mult(), 1).then(s, 0).result(),
                      Wiring(f, {d, d, d}).then(h.comult(), 0).permute({0, 2, 3, 1}).then(s, 0).then(s, 0).result());
  // sigma(a_(1), b_(1)) a_(2) b_(2) = b_(1) a_(1) sigma(a_(2), b_(2))
  report.expect_equal("commutation",
                      Wiring(f, {d, d})
                          .then(h.comult(), 0)
                          .then(h.comult(), 2)
                          .permute({0, 2, 1, 3})
                          .then(s, 0)
                          .then(h.mult(), 0)
                          .result(),
                      Wiring(f, {d, d})
                          .then(h.comult(), 0)
                          .then(h.comult(), 2)
                          .permute({1, 2, 0, 3})
                          .then(h.mult(), 0)
                          .then(s, 1)
                          .result());
  report.expect_equal("unit_first_argument", Wiring(f, {d}).then(h.unit(), 0).then(s, 0).result(), h.counit());
  report.expect_equal("unit_second_argument", Wiring(f, {d}).then(h.unit(), 1).then(s, 0).result(), h.counit());
  const CoalgebraData hh = tensor_coalgebra(h.bialgebra.coalgebra, h.bialgebra.coalgebra);
  const auto inverse = convolution_inverse(hh, ground_algebra(f), s.reshaped({{d * d}, {1}}));
  report.record("convolution_invertible", inverse.has_value());
  return report;
}

LinearMap convolution(const CoalgebraData& c, const AlgebraData& a, const LinearMap& f, const LinearMap& g) {
  const LinearMap ff = f.reshaped({{c.dim}, {a.dim}});
  const LinearMap gg = g.reshaped({{c.dim}, {a.dim}});
  return Wiring(c.field(), {c.dim}).then(c.comult, 0).then(ff, 0).then(gg, 1).then(a.mult, 0).result();
}

std::optional<LinearMap> convolution_inverse(const CoalgebraData& c, const AlgebraData& a, const LinearMap& f) {
  if (f.cols() != c.dim || f.rows() != a.dim) throw ShapeError("convolution_inverse: f must map C to A");
  const FieldSpec field = c.field();
  const std::size_t unknowns = a.dim * c.dim;
  const std::size_t eqs = a.dim * c.dim;
  // Column u of the system holds vec(f * E_u) stacked over vec(E_u * f).
  LinearMap system = LinearMap::zeros(field, {{unknowns}, {2 * eqs}});
  for (std::size_t u = 0; u < unknowns; ++u) {
    LinearMap e = LinearMap::zeros(field, {{c.dim}, {a.dim}});
    e.set(u / c.dim, u % c.dim, 1);
    const LinearMap left = convolution(c, a, f, e);
    const LinearMap right = convolution(c, a, e, f);
    for (std::size_t k = 0; k < eqs; ++k) {
      system.set(k, u, left.at(k / c.dim, k % c.dim));
      system.set(eqs + k, u, right.at(k / c.dim, k % c.dim));
    }
  }
  const LinearMap target = compose(a.unit, c.counit);
  LinearMap rhs = LinearMap::zeros(field, {{}, {2 * eqs}});
  for (std::size_t k = 0; k < eqs; ++k) {
    rhs.set(k, 0, target.at(k / c.dim, k % c.dim));
    rhs.set(eqs + k, 0, target.at(k / c.dim, k % c.dim));
  }
  const auto x = solve(system, rhs);
  if (!x) return std::nullopt;
  LinearMap g = LinearMap::zeros(field, {f.domain_dims(), f.codomain_dims()});
  for (std::size_t u = 0; u < unknowns; ++u) g.set(u / c.dim, u % c.dim, x->at(u, 0));
  return g;
}

LinearMap antipode_inverse(const HopfData& h) {
  auto inv = invert(h.antipode);
  if (!inv) throw PreconditionError("antipode is singular; the Hopf data is corrupted");
  return *inv;
}

LinearMap adjoint_action(const HopfData& h) {
  const std::size_t d = h.dim();
  return Wiring(h.field(), {d, d})
      .then(h.comult(), 0)
      .swap(1)
      .then(h.antipode, 2)
      .then(h.mult(), 0)
      .then(h.mult(), 0)
      .result();
}

LinearMap coadjoint_coaction(const HopfData& h) {
  const LinearMap s_inv = antipode_inverse(h);
  return Wiring(h.field(), {h.dim()})
      .then(h.comult(), 0)
      .then(h.comult(), 0)
      .then(s_inv, 2)
      .permute({1, 2, 0})
      .then(h.mult(), 0)
      .result();
}

}  // namespace hopfmon
