#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hopfmon/errors.hpp"
#include "hopfmon/linear_solve.hpp"
#include "hopfmon/monoidal.hpp"
#include "hopfmon/mutation.hpp"
#include "hopfmon/wiring.hpp"
#include "oracle.hpp"

using namespace hopfmon;
using oracle::Elem;

namespace {

const FieldSpec F5 = FieldSpec::prime_field(5);
const FieldSpec F7 = FieldSpec::prime_field(7);

MonoidalInputDatum h4_datum(long long alpha) {
  const HopfData h = fixtures::sweedler(F5);
  return MonoidalInputDatum::from_braided(h.bialgebra,
                                          enveloping_braided_group(h, fixtures::sweedler_r(F5, alpha)).data);
}

// B = k, A a classical bialgebra, trivial action and coaction.
MonoidalInputDatum classical_datum(const BialgebraData& a) {
  const FieldSpec f = a.field();
  const HopfData k = fixtures::ground(f);
  return MonoidalInputDatum::make(k.bialgebra, a.algebra, a.coalgebra,
                                  LinearMap::identity(f, a.dim()).reshaped({{a.dim()}, {1, a.dim()}}),
                                  LinearMap::identity(f, a.dim()).reshaped({{1, a.dim()}, {a.dim()}}));
}

}  // namespace

TEST_CASE("datum construction invariants") {
  const HopfData h = fixtures::sweedler(F5);
  const Transmutation t = enveloping_braided_group(h, fixtures::sweedler_r(F5, 0));
  CHECK_NOTHROW(MonoidalInputDatum::make(h.bialgebra, t.data.algebra, t.data.coalgebra, t.data.coaction,
                                         t.data.action));

  // The action carries no axioms: garbage is accepted.
  std::mt19937_64 rng(5);
  CHECK(MonoidalInputDatum::try_make(h.bialgebra, t.data.algebra, t.data.coalgebra, t.data.coaction,
                                     fixtures::random_map(F5, {{4, 4}, {4}}, rng))
            .has_value());

  // Trivial coaction on a noncommutative B is fine; a non-comodule is not.
  CheckReport why;
  LinearMap broken = t.data.coaction;
  broken.set(0, 0, 0);
  CHECK_FALSE(MonoidalInputDatum::try_make(h.bialgebra, t.data.algebra, t.data.coalgebra, broken, t.data.action, &why)
                  .has_value());
  CHECK_FALSE(why.passed("a.comodule.coaction_counit"));
  CHECK_THROWS_AS(MonoidalInputDatum::make(h.bialgebra, t.data.algebra, t.data.coalgebra, broken, t.data.action),
                  PreconditionError);
  CHECK_THROWS_AS(MonoidalInputDatum::make(h.bialgebra, t.data.algebra, fixtures::cyclic_group_algebra(F5, 2).bialgebra.coalgebra,
                                           t.data.coaction, t.data.action),
                  ShapeError);
}

TEST_CASE("canonical modules") {
  for (long long alpha : {0, 1}) {
    const MonoidalInputDatum d = h4_datum(alpha);
    for (const auto& m : canonical_family(d)) {
      CAPTURE(m.label);
      CHECK(check_relative_hopf(d.b(), d.a_algebra(), d.a_coaction(), m).passed());
    }
    const RelHopfModuleData btr = trivial_module(d);
    CHECK(btr.dim == 4);
    CHECK(same_matrix(btr.coaction, d.b().comult()));
    CHECK(unit_module(d).dim == 1);
    CHECK(canonical_family(d).back().label == "A(x)B_tr");
    CHECK(canonical_family(d).back().dim == 16);
  }
  // Over B = k the trivial module is the unit module.
  const MonoidalInputDatum classical = classical_datum(fixtures::cyclic_group_algebra(F7, 3).bialgebra);
  CHECK(same_matrix(trivial_module(classical).right_action, unit_module(classical).right_action));
  CHECK(same_matrix(trivial_module(classical).coaction, unit_module(classical).coaction));
}

// The unit module is a relative Hopf module exactly when eps(ab) = eps(a)eps(b),
// eps(1) = 1 and a_-1 eps(a_0) = eps(a) 1 hold; checked for every functional on kZ2.
TEST_CASE("unit module versus the first three unit-counit identities") {
  const HopfData z2 = fixtures::cyclic_group_algebra(F5, 2);
  const HopfData k = fixtures::ground(F5);
  int passing = 0;
  for (const BialgebraData* b : {&k.bialgebra, &z2.bialgebra}) {
    const LinearMap coaction = b->dim() == 1 ? LinearMap::identity(F5, 2).reshaped({{2}, {1, 2}}) : z2.comult();
    for (long long e0 = 0; e0 < 5; ++e0) {
      for (long long e1 = 0; e1 < 5; ++e1) {
        const LinearMap eps = fixtures::covec(F5, {e0, e1});
        const RelHopfModuleData unit(b->dim(), 2, b->unit().reshaped({{1}, {b->dim(), 1}}),
                                     eps.reshaped({{1, 2}, {1}}));
        const bool native = check_relative_hopf(*b, z2.bialgebra.algebra, coaction, unit).passed();
        const Scalar one = Scalar::one(F5);
        const Scalar a = Scalar(F5, e0), g = Scalar(F5, e1);
        bool direct = a == one && g * g == a;  // eps(1) = 1, eps(g g) = eps(g)^2
        // a_-1 eps(a_0) = eps(a) 1_B on the basis
        for (std::size_t i = 0; i < 2 && direct; ++i) {
          Elem lhs = oracle::zero(F5, b->dim());
          for (const auto& t : oracle::split(coaction, i, 2)) lhs[t.i] += t.c * eps.at(0, t.j);
          Elem rhs = oracle::zero(F5, b->dim());
          rhs[0] = eps.at(0, i);
          direct = lhs == rhs;
        }
        CHECK(native == direct);
        passing += native ? 1 : 0;
      }
    }
  }
  // eps(g) = +-1 over B = k; over B = kZ2 the coaction identity forces eps(g) = 0.
  CHECK(passing == 2);
}

TEST_CASE("tensor action of regular modules matches the quoted closed form") {
  const HopfData h = fixtures::sweedler(F5);
  for (long long alpha : {0, 1}) {
    const RMatrix r = fixtures::sweedler_r(F5, alpha);
    const MonoidalInputDatum d = h4_datum(alpha);
    const RelHopfModuleData a = regular_module(d);
    const RelHopfModuleData aa = hopf_tensor_action(d, a, a);
    // (x (x) y) . h = x (y_-1 |> h_1 S(R^2)) (x) y_0 (R^1 |> h_2)
    const LinearMap closed = oracle::tabulate(F5, {{16, 4}, {16}}, 64, [&](std::size_t col) {
      const std::size_t x = col / 16, y = (col % 16) / 4, hb = col % 4;
      oracle::Tensor2 out(F5, 4, 4);
      for (const auto& ty : oracle::split(d.a_coaction(), y, 4)) {
        for (const auto& th : oracle::split(h.comult(), hb, 4)) {
          for (const auto& tr : oracle::split(r.element, 0, 4)) {
            const Elem left_in = oracle::apply2(h.mult(), oracle::basis(F5, 4, th.i),
                                                oracle::apply(h.antipode, oracle::basis(F5, 4, tr.j)));
            const Elem left = oracle::apply2(h.mult(), oracle::basis(F5, 4, x),
                                             oracle::adjoint(h, oracle::basis(F5, 4, ty.i), left_in));
            const Elem right = oracle::apply2(
                h.mult(), oracle::basis(F5, 4, ty.j),
                oracle::adjoint(h, oracle::basis(F5, 4, tr.i), oracle::basis(F5, 4, th.j)));
            out.add(ty.c * th.c * tr.c, left, right);
          }
        }
      }
      return out.v;
    });
    CHECK(same_matrix(aa.right_action, closed));
  }
}

TEST_CASE("tensoring with the unit module changes nothing") {
  const MonoidalInputDatum d = h4_datum(1);
  const RelHopfModuleData u = unit_module(d);
  for (const auto& x : canonical_family(d)) {
    CHECK(same_matrix(hopf_tensor_action(d, x, u).right_action, x.right_action));
    CHECK(same_matrix(hopf_tensor_action(d, u, x).right_action, x.right_action));
    CHECK(same_matrix(hopf_tensor_action(d, x, u).coaction, x.coaction));
  }
  CHECK_THROWS_AS(hopf_tensor_action(d, regular_module(h4_datum(0)),
                                     regular_module(classical_datum(fixtures::cyclic_group_algebra(F5, 2).bialgebra))),
                  ShapeError);
}

TEST_CASE("monoidal iff braided: passing data") {
  for (long long alpha : {0, 1}) {
    const TwoSidedVerdict v = check_theorem_2_1(h4_datum(alpha));
    CHECK(v.left);
    CHECK(v.right);
    CHECK(v.agree());
  }
  const HopfData z2 = fixtures::cyclic_group_algebra(F5, 2);
  const TwoSidedVerdict vz = check_theorem_2_1(MonoidalInputDatum::from_braided(
      z2.bialgebra, enveloping_braided_group(z2, RMatrix::trivial(z2.bialgebra.algebra)).data));
  CHECK(vz.left);
  CHECK(vz.right);

  const MonoidalInputDatum classical = classical_datum(z2.bialgebra);
  const TwoSidedVerdict vk = check_theorem_2_1(classical);
  CHECK(vk.left);
  CHECK(vk.right);
  CHECK(vk.right_report.entries().size() > 50);
}

TEST_CASE("monoidal iff braided: failing data") {
  // H4 with its ordinary comultiplication next to the transmuted coaction.
  const HopfData h = fixtures::sweedler(F5);
  const Transmutation t = enveloping_braided_group(h, fixtures::sweedler_r(F5, 0));
  const MonoidalInputDatum plain =
      MonoidalInputDatum::make(h.bialgebra, h.bialgebra.algebra, h.bialgebra.coalgebra, t.data.coaction, t.data.action);
  const TwoSidedVerdict v = check_theorem_2_1(plain);
  CHECK_FALSE(v.left);
  CHECK_FALSE(v.right);
  CHECK_FALSE(v.left_report.passed("braided_multiplicativity"));

  // With A_comult swapped, the failure already shows on {A, B_tr}.
  const CheckReport r = check_monoidal_conditions(plain, {regular_module(plain), trivial_module(plain)});
  CHECK_FALSE(r.passed());

  // A classical pair over B = k whose comultiplication is not multiplicative.
  // The product of kZ3 replaced by that of k[t]/(t^3): still associative and unital.
  const BialgebraData z3 = fixtures::cyclic_group_algebra(F5, 3).bialgebra;
  const LinearMap mult =
      fixtures::mult_from(F5, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 0, 1, 1}, {1, 1, 2, 1}, {2, 0, 2, 1}});
  const MonoidalInputDatum trunc = classical_datum(BialgebraData(AlgebraData(mult, z3.algebra.unit), z3.coalgebra));
  const TwoSidedVerdict vt = check_theorem_2_1(trunc);
  CHECK_FALSE(vt.left);
  CHECK_FALSE(vt.right);
}

TEST_CASE("monoidal iff braided: agreement on mutated data") {
  const HopfData h = fixtures::sweedler(F5);
  const Transmutation t = enveloping_braided_group(h, fixtures::sweedler_r(F5, 1));
  std::mt19937_64 rng(2101);
  int usable = 0, left_failures = 0;
  for (int trial = 0; trial < 200 && usable < 12; ++trial) {
    AlgebraData alg = t.data.algebra;
    CoalgebraData coalg = t.data.coalgebra;
    LinearMap coaction = t.data.coaction, action = t.data.action;
    const MutationSite site = mutate_one({{"A.mult", &alg.mult},
                                          {"A.comult", &coalg.comult},
                                          {"A.coaction", &coaction},
                                          {"A.action", &action}},
                                         rng);
    const auto d = MonoidalInputDatum::try_make(h.bialgebra, alg, coalg, coaction, action);
    if (!d) continue;
    ++usable;
    CAPTURE(to_string(site));
    const TwoSidedVerdict v = check_theorem_2_1(*d);
    CHECK(v.agree());
    left_failures += v.left ? 0 : 1;
  }
  CHECK(usable >= 5);
  CHECK(left_failures >= 5);
}

TEST_CASE("random relative hopf modules") {
  const MonoidalInputDatum d = h4_datum(1);
  const std::vector<RelHopfModuleData> mods = random_relative_hopf_modules(d, 10, 42);
  CHECK(mods.size() == 10);
  std::size_t small = 0;
  for (const auto& m : mods) {
    CHECK(m.dim <= 4);
    small += m.dim < 4 ? 1 : 0;
    CHECK(check_relative_hopf(d.b(), d.a_algebra(), d.a_coaction(), m).passed());
  }
  CHECK(small > 0);
  // Forward direction holds beyond the canonical family.
  CHECK(check_theorem_2_1(d, mods).right);

  const auto again = random_relative_hopf_modules(d, 10, 42);
  REQUIRE(again.size() == mods.size());
  for (std::size_t i = 0; i < mods.size(); ++i) CHECK(same_matrix(again[i].right_action, mods[i].right_action));
}

TEST_CASE("carrier budget skips large pairs with a note") {
  const MonoidalInputDatum d = h4_datum(0);
  const CheckReport r = check_monoidal_conditions(d, canonical_family(d), MonoidalOptions{16});
  CHECK(r.passed());
  REQUIRE_FALSE(r.notes().empty());
  CHECK(r.notes().back().find("skipped") != std::string::npos);
  CHECK(r.find("pair(A,B_tr).tensor_unit") != nullptr);
  CHECK(r.find("pair(A,A(x)B_tr).tensor_unit") == nullptr);
}

TEST_CASE("unit-counit relations") {
  const MonoidalInputDatum d = h4_datum(0);
  const CheckReport r = check_unit_counit_relations(d);
  CHECK(r.entries().size() == 7);
  CHECK(r.passed());
  LinearMap act = d.a_action();
  act.set(0, 0, 0);  // 1_B . 1_A = 0
  const auto bad = MonoidalInputDatum::try_make(d.b(), d.a_algebra(), d.a_coalgebra(), d.a_coaction(), act);
  REQUIRE(bad.has_value());
  const CheckReport rb = check_unit_counit_relations(*bad);
  CHECK_FALSE(rb.passed("action_unital"));
  CHECK_FALSE(rb.passed("action_on_unit"));
  CHECK_FALSE(check_theorem_2_1(*bad).right);
}

TEST_CASE("the braided verdict carries the YD condition") {
  for (long long alpha : {0, 1}) {
    const MonoidalInputDatum d = h4_datum(alpha);
    const TwoSidedVerdict v = check_theorem_2_1(d);
    CHECK(v.left_report.passed("yetter_drinfeld.compatibility") ==
          check_yetter_drinfeld(d.b(), d.a_action(), d.a_coaction()).passed());
  }
}

TEST_CASE("trivial-action doi-hopf data") {
  const HopfData d3 = fixtures::cyclic_dual(F7, 3);
  const TwoSidedVerdict self = check_trivial_action_doi_hopf(d3.bialgebra, d3.bialgebra, d3.comult());
  CHECK(self.agree());

  const HopfData z2 = fixtures::cyclic_group_algebra(F7, 2);
  const LinearMap flat = LinearMap::identity(F7, 2).reshaped({{2}, {1, 2}});
  const TwoSidedVerdict degenerate = check_trivial_action_doi_hopf(fixtures::ground(F7).bialgebra, z2.bialgebra, flat);
  CHECK(degenerate.left);
  CHECK(degenerate.right);

  std::mt19937_64 rng(34);
  int disagreements = 0, fails = 0;
  for (int trial = 0; trial < 30; ++trial) {
    BialgebraData a = d3.bialgebra;
    LinearMap coaction = d3.comult();
    mutate_one({{"A.mult", &a.algebra.mult}, {"A.comult", &a.coalgebra.comult}, {"A.coaction", &coaction}}, rng);
    const TwoSidedVerdict v = check_trivial_action_doi_hopf(d3.bialgebra, a, coaction);
    disagreements += v.agree() ? 0 : 1;
    fails += v.left ? 0 : 1;
  }
  CHECK(disagreements == 0);
  CHECK(fails > 0);
}

TEST_CASE("long dimodule suite") {
  const SuiteResult r = long_dimodule_suite(fixtures::cyclic_group_algebra(F5, 2), 100, 7);
  CHECK(r.precondition_ok);
  CHECK(r.samples == 100);
  CHECK(r.agreements == 100);
  CHECK(r.first_passes > 0);
  CHECK(r.first_passes < 100);
  CHECK(r.report.passed());

  const SuiteResult k = long_dimodule_suite(fixtures::ground(F5), 20, 7);
  CHECK(k.agreements == 20);

  const SuiteResult h4 = long_dimodule_suite(fixtures::sweedler(F5), 20, 7);
  CHECK_FALSE(h4.precondition_ok);
  CHECK_FALSE(h4.report.passed("cocommutative"));
  CHECK(h4.samples == 0);
}

TEST_CASE("yetter-drinfeld identification suite") {
  const SuiteResult r = yd_identification_suite(fixtures::cyclic_dual(F7, 3), 100, 11);
  CHECK(r.precondition_ok);
  CHECK(r.agreements == 100);
  CHECK(r.first_passes > 0);
  CHECK(r.first_passes < 100);

  const SuiteResult k = yd_identification_suite(fixtures::ground(F7), 20, 11);
  CHECK(k.agreements == 20);

  const SuiteResult h4 = yd_identification_suite(fixtures::sweedler(F5), 20, 11);
  CHECK_FALSE(h4.precondition_ok);
  CHECK_FALSE(h4.report.passed("commutative"));
}

TEST_CASE("characters and grouplikes") {
  CHECK(algebra_characters(fixtures::sweedler(F5).bialgebra.algebra).size() == 2);
  CHECK(grouplikes(fixtures::sweedler(F5).bialgebra.coalgebra).size() == 2);
  CHECK(algebra_characters(fixtures::cyclic_group_algebra(F7, 3).bialgebra.algebra).size() == 3);
  CHECK(grouplikes(fixtures::cyclic_dual(F7, 3).bialgebra.coalgebra).size() == 3);
  CHECK(grouplikes(fixtures::cyclic_group_algebra(F7, 3).bialgebra.coalgebra).size() == 3);
}

// Experiment: does dropping A (x) B_tr from the canonical family ever change the monoidal verdict?
TEST_CASE("three-module family against the canonical family on mutated data") {
  const HopfData h = fixtures::sweedler(F5);
  std::mt19937_64 rng(34);
  int usable = 0, differing = 0, failing = 0;
  for (long long alpha : {0, 1}) {
    const Transmutation t = enveloping_braided_group(h, fixtures::sweedler_r(F5, alpha));
    for (int trial = 0; trial < 400 && usable < 15 * (alpha + 1); ++trial) {
      AlgebraData alg = t.data.algebra;
      CoalgebraData coalg = t.data.coalgebra;
      LinearMap coaction = t.data.coaction, action = t.data.action;
      mutate_one({{"A.mult", &alg.mult}, {"A.comult", &coalg.comult}, {"A.coaction", &coaction}, {"A.action", &action}},
                 rng);
      const auto d = MonoidalInputDatum::try_make(h.bialgebra, alg, coalg, coaction, action);
      if (!d) continue;
      ++usable;
      std::vector<RelHopfModuleData> family = canonical_family(*d);
      const bool full = check_monoidal_conditions(*d, family).passed();
      family.pop_back();
      const bool reduced = check_monoidal_conditions(*d, family).passed();
      differing += full != reduced ? 1 : 0;
      failing += full ? 0 : 1;
    }
  }
  MESSAGE("usable=" << usable << " failing=" << failing << " differing=" << differing);
  CHECK(usable == 30);
  CHECK(differing == 0);
}
