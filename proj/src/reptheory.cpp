#include "hopfmon/reptheory.hpp"

#include <string>
#include <vector>

#include "hopfmon/errors.hpp"
#include "hopfmon/wiring.hpp"

namespace hopfmon {

namespace {

std::size_t carrier_from(std::size_t n, std::size_t base, const char* what) {
  if (base == 0 || n % base != 0) throw ShapeError(std::string(what) + ": size not divisible by the base dimension");
  return n / base;
}

void require_base(const BialgebraData& b, std::size_t base_dim, const char* what) {
  if (b.dim() != base_dim) {
    throw ShapeError(std::string(what) + ": structure is over a " + std::to_string(base_dim) +
                     "-dimensional base, bialgebra has dimension " + std::to_string(b.dim()));
  }
}

// Mixed-radix helpers for block_sum.
std::vector<std::size_t> split(std::size_t index, const Dims& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t t = dims.size(); t-- > 0;) {
    out[t] = index % dims[t];
    index /= dims[t];
  }
  return out;
}

std::size_t join(const std::vector<std::size_t>& idx, const Dims& dims) {
  std::size_t out = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) out = out * dims[t] + idx[t];
  return out;
}

}  // namespace

ModuleData::ModuleData(std::size_t base, LinearMap act)
    : base_dim(base),
      dim(act.rows()),
      action(act.reshaped({{base, act.rows()}, {act.rows()}})) {
  if (action.cols() != base * dim) throw ShapeError("module action has the wrong number of columns");
}

ComoduleData::ComoduleData(std::size_t base, LinearMap coact)
    : base_dim(base),
      dim(coact.cols()),
      coaction(coact.reshaped({{coact.cols()}, {base, coact.cols()}})) {}

RelHopfModuleData::RelHopfModuleData(std::size_t b, std::size_t a, LinearMap coact, LinearMap act, std::string name)
    : b_dim(b),
      a_dim(a),
      dim(carrier_from(coact.rows(), b, "relative Hopf module coaction")),
      coaction(coact.reshaped({{dim}, {b, dim}})),
      right_action(act.reshaped({{dim, a}, {dim}})),
      label(std::move(name)) {
  if (coaction.cols() != dim) throw ShapeError("relative Hopf module coaction has the wrong number of columns");
  if (right_action.field() != coaction.field()) throw FieldError("relative Hopf module: field mismatch");
}

ModuleData trivial_action(const BialgebraData& b, std::size_t dim) {
  return ModuleData(b.dim(), tensor(b.counit(), LinearMap::identity(b.field(), dim)));
}

ComoduleData trivial_coaction(const BialgebraData& b, std::size_t dim) {
  return ComoduleData(b.dim(), tensor(b.unit(), LinearMap::identity(b.field(), dim)));
}

ModuleData regular_action(const BialgebraData& b) { return ModuleData(b.dim(), b.mult()); }

ComoduleData regular_coaction(const BialgebraData& b) { return ComoduleData(b.dim(), b.comult()); }

CheckReport check_module(const BialgebraData& b, const ModuleData& x) {
  require_base(b, x.base_dim, "check_module");
  const FieldSpec f = b.field();
  CheckReport report;
  report.expect_equal("action_unit", Wiring(f, {x.dim}).then(b.unit(), 0).then(x.action, 0).result(),
                      LinearMap::identity(f, x.dim));
  report.expect_equal("action_associativity",
                      Wiring(f, {b.dim(), b.dim(), x.dim}).then(b.mult(), 0).then(x.action, 0).result(),
                      Wiring(f, {b.dim(), b.dim(), x.dim}).then(x.action, 1).then(x.action, 0).result());
  return report;
}

CheckReport check_comodule(const BialgebraData& b, const ComoduleData& x) {
  require_base(b, x.base_dim, "check_comodule");
  const FieldSpec f = b.field();
  CheckReport report;
  report.expect_equal("coaction_counit", Wiring(f, {x.dim}).then(x.coaction, 0).then(b.counit(), 0).result(),
                      LinearMap::identity(f, x.dim));
  report.expect_equal("coaction_coassociativity",
                      Wiring(f, {x.dim}).then(x.coaction, 0).then(x.coaction, 1).result(),
                      Wiring(f, {x.dim}).then(x.coaction, 0).then(b.comult(), 0).result());
  return report;
}

CheckReport check_right_module(const AlgebraData& a, const LinearMap& right_action) {
  const std::size_t d = right_action.rows();
  const LinearMap act = right_action.reshaped({{d, a.dim}, {d}});
  const FieldSpec f = a.field();
  CheckReport report;
  report.expect_equal("right_unit", Wiring(f, {d}).then(a.unit, 1).then(act, 0).result(),
                      LinearMap::identity(f, d));
  report.expect_equal("right_associativity", Wiring(f, {d, a.dim, a.dim}).then(act, 0).then(act, 0).result(),
                      Wiring(f, {d, a.dim, a.dim}).then(a.mult, 1).then(act, 0).result());
  return report;
}

std::string to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::comodule_coalgebra:
      return "comodule_coalgebra";
    case Flavor::comodule_algebra:
      return "comodule_algebra";
    case Flavor::module_algebra:
      return "module_algebra";
    case Flavor::module_coalgebra:
      return "module_coalgebra";
  }
  return "unknown";
}

CheckReport check_equivariant_structure(Flavor flavor, const BialgebraData& b, const PartialStructure& a,
                                        const LinearMap& map) {
  const FieldSpec f = b.field();
  const std::size_t bd = b.dim();
  const bool needs_algebra = flavor == Flavor::comodule_algebra || flavor == Flavor::module_algebra;
  if (needs_algebra && !a.algebra) throw PreconditionError(to_string(flavor) + " needs an algebra structure on A");
  if (!needs_algebra && !a.coalgebra) {
    throw PreconditionError(to_string(flavor) + " needs a coalgebra structure on A");
  }
  const std::size_t ad = needs_algebra ? a.algebra->dim : a.coalgebra->dim;
  const bool is_coaction = flavor == Flavor::comodule_algebra || flavor == Flavor::comodule_coalgebra;
  const LinearMap m = is_coaction ? map.reshaped({{ad}, {bd, ad}}) : map.reshaped({{bd, ad}, {ad}});

  CheckReport report;
  switch (flavor) {
    case Flavor::comodule_algebra: {
      const AlgebraData& alg = *a.algebra;
      report.expect_equal("unit", compose(m, alg.unit), tensor(b.unit(), alg.unit));
      report.expect_equal("multiplication", Wiring(f, {ad, ad}).then(alg.mult, 0).then(m, 0).result(),
                          Wiring(f, {ad, ad})
                              .then(m, 0)
                              .then(m, 2)
                              .swap(1)
                              .then(b.mult(), 0)
                              .then(alg.mult, 1)
                              .result());
      break;
    }
    case Flavor::comodule_coalgebra: {
      const CoalgebraData& co = *a.coalgebra;
      report.expect_equal("counit", Wiring(f, {ad}).then(m, 0).then(co.counit, 1).result(),
                          compose(b.unit(), co.counit));
      report.expect_equal("comultiplication", Wiring(f, {ad}).then(m, 0).then(co.comult, 1).result(),
                          Wiring(f, {ad})
                              .then(co.comult, 0)
                              .then(m, 0)
                              .then(m, 2)
                              .swap(1)
                              .then(b.mult(), 0)
                              .result());
      break;
    }
    case Flavor::module_algebra: {
      const AlgebraData& alg = *a.algebra;
      report.expect_equal("unit", Wiring(f, {bd}).then(alg.unit, 1).then(m, 0).result(),
                          compose(alg.unit, b.counit()));
      report.expect_equal("multiplication", Wiring(f, {bd, ad, ad}).then(alg.mult, 1).then(m, 0).result(),
                          Wiring(f, {bd, ad, ad})
                              .then(b.comult(), 0)
                              .swap(1)
                              .then(m, 0)
                              .then(m, 1)
                              .then(alg.mult, 0)
                              .result());
      break;
    }
    case Flavor::module_coalgebra: {
      const CoalgebraData& co = *a.coalgebra;
      report.expect_equal("counit", compose(co.counit, m), tensor(b.counit(), co.counit));
      report.expect_equal("comultiplication", compose(co.comult, m),
                          Wiring(f, {bd, ad})
                              .then(b.comult(), 0)
                              .then(co.comult, 2)
                              .swap(1)
                              .then(m, 0)
                              .then(m, 1)
                              .result());
      break;
    }
  }
  return report;
}

CheckReport check_yetter_drinfeld(const BialgebraData& b, const LinearMap& action, const LinearMap& coaction) {
  const FieldSpec f = b.field();
  const std::size_t bd = b.dim();
  const std::size_t d = action.rows();
  const LinearMap act = action.reshaped({{bd, d}, {d}});
  const LinearMap co = coaction.reshaped({{d}, {bd, d}});
  const LinearMap lhs = Wiring(f, {bd, d})
                            .then(b.comult(), 0)
                            .swap(1)
                            .then(act, 0)
                            .then(co, 0)
                            .swap(1)
                            .then(b.mult(), 0)
                            .result();
  const LinearMap rhs = Wiring(f, {bd, d})
                            .then(b.comult(), 0)
                            .then(co, 2)
                            .permute({0, 2, 1, 3})
                            .then(b.mult(), 0)
                            .then(act, 1)
                            .result();
  CheckReport report;
  report.expect_equal("compatibility", lhs, rhs);
  return report;
}

CheckReport check_relative_hopf(const BialgebraData& b, const AlgebraData& a, const LinearMap& a_coaction,
                                const RelHopfModuleData& x) {
  require_base(b, x.b_dim, "check_relative_hopf");
  if (a.dim != x.a_dim) throw ShapeError("check_relative_hopf: module is over an algebra of another dimension");
  const FieldSpec f = b.field();
  const LinearMap la = a_coaction.reshaped({{a.dim}, {b.dim(), a.dim}});
  CheckReport report = check_right_module(a, x.right_action);
  report.merge(check_comodule(b, ComoduleData(b.dim(), x.coaction)));
  report.expect_equal("compatibility", Wiring(f, {x.dim, a.dim}).then(x.right_action, 0).then(x.coaction, 0).result(),
                      Wiring(f, {x.dim, a.dim})
                          .then(x.coaction, 0)
                          .then(la, 2)
                          .swap(1)
                          .then(b.mult(), 0)
                          .then(x.right_action, 1)
                          .result());
  return report;
}

LinearMap block_sum(const LinearMap& f, const LinearMap& g, std::size_t domain_factor, std::size_t codomain_factor) {
  const Dims& fd = f.domain_dims();
  const Dims& fc = f.codomain_dims();
  const Dims& gd = g.domain_dims();
  const Dims& gc = g.codomain_dims();
  auto compatible = [](const Dims& x, const Dims& y, std::size_t pos) {
    if (x.size() != y.size() || pos >= x.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (t != pos && x[t] != y[t]) return false;
    return true;
  };
  if (!compatible(fd, gd, domain_factor) || !compatible(fc, gc, codomain_factor)) {
    throw ShapeError("block_sum: maps differ outside the carrier factor");
  }
  Dims sd = fd, sc = fc;
  sd[domain_factor] += gd[domain_factor];
  sc[codomain_factor] += gc[codomain_factor];
  LinearMap out = LinearMap::zeros(f.field(), {sd, sc});
  auto place = [&](const LinearMap& m, std::size_t dom_shift, std::size_t cod_shift) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      auto ri = split(r, m.codomain_dims());
      ri[codomain_factor] += cod_shift;
      const std::size_t rr = join(ri, sc);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Scalar v = m.at(r, c);
        if (v.is_zero()) continue;
        auto ci = split(c, m.domain_dims());
        ci[domain_factor] += dom_shift;
        out.set(rr, join(ci, sd), v);
      }
    }
  };
  place(f, 0, 0);
  place(g, fd[domain_factor], fc[codomain_factor]);
  return out;
}

ModuleData direct_sum(const ModuleData& x, const ModuleData& y) {
  if (x.base_dim != y.base_dim) throw ShapeError("direct_sum: modules over different bases");
  return ModuleData(x.base_dim, block_sum(x.action, y.action, 1, 0));
}

ComoduleData direct_sum(const ComoduleData& x, const ComoduleData& y) {
  if (x.base_dim != y.base_dim) throw ShapeError("direct_sum: comodules over different bases");
  return ComoduleData(x.base_dim, block_sum(x.coaction, y.coaction, 0, 1));
}

RelHopfModuleData direct_sum(const RelHopfModuleData& x, const RelHopfModuleData& y) {
  if (x.b_dim != y.b_dim || x.a_dim != y.a_dim) throw ShapeError("direct_sum: modules over different data");
  return RelHopfModuleData(x.b_dim, x.a_dim, block_sum(x.coaction, y.coaction, 0, 1),
                           block_sum(x.right_action, y.right_action, 0, 0), x.label + "+" + y.label);
}

}  // namespace hopfmon
