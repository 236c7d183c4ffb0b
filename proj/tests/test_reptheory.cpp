#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hopfmon/errors.hpp"
#include "hopfmon/linear_solve.hpp"
#include "hopfmon/reptheory.hpp"
#include "hopfmon/transmute.hpp"
#include "hopfmon/wiring.hpp"
#include "oracle.hpp"

using namespace hopfmon;

namespace {

const FieldSpec F5 = FieldSpec::prime_field(5);
const FieldSpec F7 = FieldSpec::prime_field(7);

Transmutation underline_h4(long long alpha = 0) {
  return enveloping_braided_group(fixtures::sweedler(F5), fixtures::sweedler_r(F5, alpha));
}

// Coaction x_i -> g_i (x) x_i in the basis given by the columns of p.
LinearMap grouplike_coaction(const BialgebraData& b, const std::vector<LinearMap>& gs, const LinearMap& p) {
  const FieldSpec f = b.field();
  const std::size_t n = gs.size();
  LinearMap diag = LinearMap::zeros(f, {{n}, {b.dim(), n}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.dim(); ++k) diag.set(k * n + i, i, gs[i].at(k, 0));
  return chain({*invert(p), diag, tensor(LinearMap::identity(f, b.dim()), p)});
}

}  // namespace

TEST_CASE("regular and trivial (co)modules") {
  for (const HopfData& h : {fixtures::sweedler(F5), fixtures::cyclic_group_algebra(F7, 3), fixtures::cyclic_dual(F7, 3)}) {
    const BialgebraData& b = h.bialgebra;
    CHECK(check_module(b, regular_action(b)).passed());
    CHECK(check_comodule(b, regular_coaction(b)).passed());
    CHECK(check_module(b, trivial_action(b, 3)).passed());
    CHECK(check_comodule(b, trivial_coaction(b, 2)).passed());
    CHECK(check_right_module(b.algebra, b.mult()).passed());
    CHECK(check_equivariant_structure(Flavor::comodule_algebra, b, PartialStructure{b.algebra, b.coalgebra},
                                      b.comult())
              .passed());
  }
}

TEST_CASE("module and comodule failures are named") {
  const HopfData h = fixtures::sweedler(F5);
  ModuleData bad = regular_action(h.bialgebra);
  bad.action.set(1, 0 * 4 + 1, 0);  // 1 . g = 0
  const CheckReport r = check_module(h.bialgebra, bad);
  CHECK_FALSE(r.passed("action_unit"));

  ComoduleData co = regular_coaction(h.bialgebra);
  co.coaction.set(1 * 4 + 2, 2, 0);  // drop g (x) x from Delta x
  CHECK_FALSE(check_comodule(h.bialgebra, co).passed("coaction_counit"));

  // Dropping x (x) 1 instead leaves x -> g (x) x, still a comodule.
  ComoduleData skew = regular_coaction(h.bialgebra);
  skew.coaction.set(2 * 4 + 0, 2, 0);
  CHECK(check_comodule(h.bialgebra, skew).passed());
}

TEST_CASE("equivariance flavors") {
  const HopfData h = fixtures::sweedler(F5);
  const LinearMap ad = adjoint_action(h);
  CHECK(check_equivariant_structure(Flavor::module_algebra, h.bialgebra, PartialStructure{h.bialgebra.algebra, {}}, ad)
            .passed());

  const Transmutation t = underline_h4();
  const PartialStructure parts{t.data.algebra, t.data.coalgebra};
  CHECK(check_equivariant_structure(Flavor::comodule_coalgebra, h.bialgebra, parts, t.data.coaction).passed());
  CHECK(check_equivariant_structure(Flavor::comodule_algebra, h.bialgebra, parts, t.data.coaction).passed());
  CHECK(check_equivariant_structure(Flavor::module_coalgebra, h.bialgebra, parts, t.data.action).passed());

  // The adjoint action does not respect the ordinary comultiplication of H4.
  CHECK_FALSE(check_equivariant_structure(Flavor::module_coalgebra, h.bialgebra,
                                          PartialStructure{{}, h.bialgebra.coalgebra}, ad)
                  .passed());

  CHECK_THROWS_AS(check_equivariant_structure(Flavor::module_algebra, h.bialgebra, PartialStructure{}, ad),
                  PreconditionError);
  CHECK_THROWS_AS(check_equivariant_structure(Flavor::comodule_coalgebra, h.bialgebra,
                                              PartialStructure{h.bialgebra.algebra, {}}, t.data.coaction),
                  PreconditionError);
}

TEST_CASE("yetter-drinfeld examples") {
  const HopfData h = fixtures::sweedler(F5);
  const BialgebraData& b = h.bialgebra;
  CHECK(check_yetter_drinfeld(b, trivial_action(b, 2).action, trivial_coaction(b, 2).coaction).passed());

  const Transmutation t = underline_h4();
  CHECK(check_yetter_drinfeld(b, t.data.action, t.data.coaction).passed());
  CHECK(check_yetter_drinfeld(b, underline_h4(1).data.action, underline_h4(1).data.coaction).passed());

  // H over itself with the adjoint action and Delta as coaction is a YD module
  // (at h = g, x = x both sides are gx (x) 1 - 1 (x) x).
  CHECK(check_yetter_drinfeld(b, adjoint_action(h), h.comult()).passed());

  // With the trivial action instead, x_-1 would have to commute with g.
  const CheckReport bad = check_yetter_drinfeld(b, trivial_action(b, 4).action, h.comult());
  CHECK_FALSE(bad.passed("compatibility"));
  REQUIRE(bad.find("compatibility")->witness.has_value());
}

TEST_CASE("relative hopf module examples") {
  const HopfData h = fixtures::sweedler(F5);
  const Transmutation t = underline_h4();
  const BialgebraData& b = h.bialgebra;
  const RelHopfModuleData a(4, 4, t.data.coaction, t.data.algebra.mult, "A");
  CHECK(check_relative_hopf(b, t.data.algebra, t.data.coaction, a).passed());

  const RelHopfModuleData btr(4, 4, b.comult(), tensor(LinearMap::identity(F5, 4), t.data.coalgebra.counit), "B_tr");
  CHECK(check_relative_hopf(b, t.data.algebra, t.data.coaction, btr).passed());

  const RelHopfModuleData flat(4, 4, trivial_coaction(b, 4).coaction, t.data.algebra.mult);
  const CheckReport r = check_relative_hopf(b, t.data.algebra, t.data.coaction, flat);
  CHECK(r.passed("right_unit"));
  CHECK(r.passed("coaction_counit"));
  CHECK_FALSE(r.passed("compatibility"));
}

TEST_CASE("shape errors") {
  const HopfData h = fixtures::sweedler(F5);
  CHECK_THROWS_AS(check_module(h.bialgebra, ModuleData(3, LinearMap::zeros(F5, {{3, 2}, {2}}))), ShapeError);
  CHECK_THROWS_AS(check_yetter_drinfeld(h.bialgebra, LinearMap::zeros(F5, {{4, 2}, {2}}),
                                        LinearMap::zeros(F5, {{3}, {4, 3}})),
                  ShapeError);
}

// With h . x = eps(h) x the compatibility collapses to h x_-1 (x) x_0 = x_-1 h (x) x_0.
TEST_CASE("trivial-action yetter-drinfeld condition matches the centralising predicate") {
  const HopfData h = fixtures::sweedler(F5);
  const BialgebraData& b = h.bialgebra;
  const std::vector<LinearMap> grouplike = {fixtures::vec(F5, {1, 0, 0, 0}), fixtures::vec(F5, {0, 1, 0, 0})};
  std::mt19937_64 rng(20241016);
  int passes = 0, fails = 0;
  for (int sample = 0; sample < 100; ++sample) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    LinearMap coaction = LinearMap::zeros(F5, {{n}, {4, n}});
    if (sample % 4 == 0) {
      coaction = fixtures::random_map(F5, {{n}, {4, n}}, rng);
    } else {
      std::vector<LinearMap> gs;
      for (std::size_t i = 0; i < n; ++i) gs.push_back(grouplike[std::uniform_int_distribution<int>(0, 1)(rng)]);
      LinearMap p = fixtures::random_map(F5, {{n}, {n}}, rng);
      while (!invert(p)) p = fixtures::random_map(F5, {{n}, {n}}, rng);
      coaction = grouplike_coaction(b, gs, p);
    }
    const bool native = check_yetter_drinfeld(b, trivial_action(b, n).action, coaction).passed("compatibility");

    // Independent: compare the two sides on every basis pair by direct summation.
    bool direct = true;
    for (std::size_t hb = 0; hb < 4 && direct; ++hb) {
      for (std::size_t x = 0; x < n && direct; ++x) {
        oracle::Tensor2 lhs(F5, 4, n), rhs(F5, 4, n);
        for (const auto& t : oracle::split(coaction, x, n)) {
          const oracle::Elem xm = oracle::basis(F5, 4, t.i), x0 = oracle::basis(F5, n, t.j);
          const oracle::Elem hv = oracle::basis(F5, 4, hb);
          lhs.add(t.c, oracle::apply2(b.mult(), hv, xm), x0);
          rhs.add(t.c, oracle::apply2(b.mult(), xm, hv), x0);
        }
        direct = lhs.v == rhs.v;
      }
    }
    CHECK(native == direct);
    (native ? passes : fails) += 1;
  }
  CHECK(passes > 10);
  CHECK(fails > 10);
}

TEST_CASE("direct sums preserve validity") {
  const HopfData h = fixtures::sweedler(F5);
  const BialgebraData& b = h.bialgebra;
  const ModuleData m = direct_sum(regular_action(b), trivial_action(b, 2));
  CHECK(m.dim == 6);
  CHECK(check_module(b, m).passed());
  const ComoduleData c = direct_sum(regular_coaction(b), trivial_coaction(b, 1));
  CHECK(check_comodule(b, c).passed());

  const Transmutation t = underline_h4(1);
  const RelHopfModuleData a(4, 4, t.data.coaction, t.data.algebra.mult, "A");
  const RelHopfModuleData btr(4, 4, b.comult(), tensor(LinearMap::identity(F5, 4), t.data.coalgebra.counit), "B_tr");
  const RelHopfModuleData sum = direct_sum(a, btr);
  CHECK(sum.dim == 8);
  CHECK(sum.label == "A+B_tr");
  CHECK(check_relative_hopf(b, t.data.algebra, t.data.coaction, sum).passed());

  // A broken summand stays broken in the sum.
  ModuleData broken = regular_action(b);
  broken.action.set(0, 1 * 4 + 1, 0);
  CHECK_FALSE(check_module(b, direct_sum(broken, trivial_action(b, 1))).passed());
}
