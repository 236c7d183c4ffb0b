#include "hopfmon/identity_suite.hpp"

#include <optional>

#include "hopfmon/monoidal.hpp"

namespace hopfmon::dsl {

namespace {

const ModuleBlock* relative_module(const Instance& inst) {
  if (!inst.braided) return nullptr;
  for (const auto& m : inst.modules)
    if (m.coaction && m.right_action) return &m;
  return nullptr;
}

}  // namespace

Environment environment_for(const Instance& inst) {
  Environment env(inst.field());
  const HopfData& h = inst.hopf;
  env.add_object("B", h.dim());
  env.add_generator("m", {"B", "B"}, {"B"}, h.mult());
  env.add_generator("eta", {}, {"B"}, h.unit());
  env.add_generator("Delta", {"B"}, {"B", "B"}, h.comult());
  env.add_generator("eps", {"B"}, {}, h.counit());
  env.add_generator("S", {"B"}, {"B"}, h.antipode);
  if (inst.r) env.add_generator("R", {}, {"B", "B"}, inst.r->element);
  if (inst.sigma) env.add_generator("sigma", {"B", "B"}, {}, inst.sigma->form);
  if (inst.braided) {
    const BraidedBialgebraData& a = *inst.braided;
    env.add_object("A", a.dim());
    env.add_generator("mA", {"A", "A"}, {"A"}, a.algebra.mult);
    env.add_generator("etaA", {}, {"A"}, a.algebra.unit);
    env.add_generator("DeltaA", {"A"}, {"A", "A"}, a.coalgebra.comult);
    env.add_generator("epsA", {"A"}, {}, a.coalgebra.counit);
    env.add_generator("act", {"B", "A"}, {"A"}, a.action);
    env.add_generator("coact", {"A"}, {"B", "A"}, a.coaction);
  }
  if (const ModuleBlock* x = relative_module(inst)) {
    env.add_object("X", x->dim);
    env.add_generator("ract", {"X", "A"}, {"X"}, *x->right_action);
    env.add_generator("xcoact", {"X"}, {"B", "X"}, *x->coaction);
  }
  return env;
}

CheckReport native_report(const Instance& inst) {
  const HopfData& h = inst.hopf;
  CheckReport report;
  report.merge(check_hopf(h), "hopf");
  if (inst.r) report.merge(check_quasitriangular(h, *inst.r), "qt");
  if (inst.sigma) report.merge(check_coquasitriangular(h, *inst.sigma), "coqt");
  if (!inst.braided) return report;
  const BraidedBialgebraData& a = *inst.braided;
  report.merge(check_yd_bialgebra(h.bialgebra, a), "yd_bialgebra");
  const ModuleBlock* block = relative_module(inst);
  if (!block) return report;
  const RelHopfModuleData x(h.dim(), a.dim(), *block->coaction, *block->right_action, "X");
  report.merge(check_relative_hopf(h.bialgebra, a.algebra, a.coaction, x), "relative_hopf");
  const std::optional<MonoidalInputDatum> datum =
      MonoidalInputDatum::try_make(h.bialgebra, a.algebra, a.coalgebra, a.coaction, a.action);
  if (!datum) {
    report.note("monoidal entries omitted: (B, A) is not an input datum");
    return report;
  }
  MonoidalOptions options;
  options.carrier_budget = x.dim * x.dim;
  const CheckReport mono = check_monoidal_conditions(*datum, {x}, options);
  for (const char* entry : {"tensor_unit", "tensor_associativity"}) {
    const CheckEntry* e = mono.find(std::string("pair(X,X).") + entry);
    if (e) report.record(std::string("monoidal.") + entry, e->passed, e->witness);
  }
  return report;
}

Agreement compare_with_native(const std::vector<IdentityLine>& lines, const Instance& inst) {
  Agreement out;
  out.dsl = check_identities(lines, environment_for(inst));
  out.native = native_report(inst);
  for (const auto& e : out.dsl.entries()) {
    const CheckEntry* n = out.native.find(e.name);
    if (!n) {
      out.unmatched.push_back(e.name);
    } else if (n->passed != e.passed) {
      out.disagreements.push_back(e.name);
    }
  }
  return out;
}

}  // namespace hopfmon::dsl
