#include "hopfmon/catalog.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hopfmon/errors.hpp"
#include "hopfmon/monoidal.hpp"

namespace hopfmon {

namespace {

using nlohmann::json;

LinearMap vector_of(FieldSpec f, std::size_t d, std::size_t index) {
  LinearMap v = LinearMap::zeros(f, {{}, {d}});
  v.set(index, 0, 1);
  return v;
}

ModuleBlock block_of(const RelHopfModuleData& x) {
  ModuleBlock m;
  m.label = x.label;
  m.dim = x.dim;
  m.coaction = x.coaction.reshaped({{x.dim}, {x.b_dim, x.dim}});
  m.right_action = x.right_action.reshaped({{x.dim, x.a_dim}, {x.dim}});
  return m;
}

void attach_datum_modules(Instance& inst) {
  const MonoidalInputDatum datum = MonoidalInputDatum::from_braided(inst.hopf.bialgebra, *inst.braided);
  inst.modules.push_back(block_of(regular_module(datum)));
  inst.modules.push_back(block_of(trivial_module(datum)));
}

std::size_t find_identity(const GroupTable& table) {
  const std::size_t n = table.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) return e;
  }
  throw PreconditionError("group table has no identity element");
}

// Validates the table and returns (identity, inverses).
std::pair<std::size_t, std::vector<std::size_t>> validate_group(const GroupTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw PreconditionError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw PreconditionError("group table is not square");
    for (const auto v : row)
      if (v >= n) throw PreconditionError("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw PreconditionError("group table is not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
        }
  const std::size_t e = find_identity(table);
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    if (inv[a] == n) throw PreconditionError("element " + std::to_string(a) + " has no inverse");
  }
  return {e, inv};
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

// ---- JSON ----

json scalar_json(const Scalar& s) { return s.to_string(); }

json map_json(const LinearMap& m) {
  const Dims dom = m.domain_dims(), cod = m.codomain_dims();
  Dims factors = concat(dom, cod);
  std::vector<std::size_t> idx(factors.size(), 0);
  auto build = [&](auto&& self, std::size_t level) -> json {
    if (level == factors.size()) {
      std::size_t col = 0, row = 0;
      for (std::size_t i = 0; i < dom.size(); ++i) col = col * dom[i] + idx[i];
      for (std::size_t i = 0; i < cod.size(); ++i) row = row * cod[i] + idx[dom.size() + i];
      return scalar_json(m.at(row, col));
    }
    json arr = json::array();
    for (std::size_t i = 0; i < factors[level]; ++i) {
      idx[level] = i;
      arr.push_back(self(self, level + 1));
    }
    return arr;
  };
  return build(build, 0);
}

Scalar parse_scalar(FieldSpec f, const json& j, const std::string& path) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else {
    throw SchemaError(path + ": expected a scalar string or integer");
  }
  try {
    return Scalar::parse(f, text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const FieldError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

LinearMap map_from_json(FieldSpec f, const json& j, const Dims& dom, const Dims& cod, const std::string& path) {
  LinearMap m = LinearMap::zeros(f, {dom, cod});
  const Dims factors = concat(dom, cod);
  std::vector<std::size_t> idx(factors.size(), 0);
  auto walk = [&](auto&& self, const json& node, std::size_t level, const std::string& where) -> void {
    if (level == factors.size()) {
      std::size_t col = 0, row = 0;
      for (std::size_t i = 0; i < dom.size(); ++i) col = col * dom[i] + idx[i];
      for (std::size_t i = 0; i < cod.size(); ++i) row = row * cod[i] + idx[dom.size() + i];
      m.set(row, col, parse_scalar(f, node, where));
      return;
    }
    if (!node.is_array() || node.size() != factors[level]) {
      throw SchemaError(where + ": expected an array of length " + std::to_string(factors[level]));
    }
    for (std::size_t i = 0; i < factors[level]; ++i) {
      idx[level] = i;
      self(self, node[i], level + 1, where + "[" + std::to_string(i) + "]");
    }
  };
  walk(walk, j, 0, path);
  return m;
}

const json& field_of(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(path + key + ": missing");
  return obj.at(key);
}

std::size_t size_of(const json& obj, const std::string& key, const std::string& path) {
  const json& j = field_of(obj, key, path);
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) throw SchemaError(path + key + ": expected a positive integer");
  return j.get<std::size_t>();
}

LinearMap map_field(FieldSpec f, const json& obj, const std::string& key, const Dims& dom, const Dims& cod,
                    const std::string& path) {
  return map_from_json(f, field_of(obj, key, path), dom, cod, path + key);
}

}  // namespace

MutableMaps mutable_maps(Instance& inst) {
  MutableMaps maps;
  AlgebraData& alg = inst.hopf.bialgebra.algebra;
  CoalgebraData& co = inst.hopf.bialgebra.coalgebra;
  maps.push_back({"mult", &alg.mult});
  maps.push_back({"unit", &alg.unit});
  maps.push_back({"comult", &co.comult});
  maps.push_back({"counit", &co.counit});
  maps.push_back({"antipode", &inst.hopf.antipode});
  if (inst.r) maps.push_back({"R", &inst.r->element});
  if (inst.sigma) maps.push_back({"sigma", &inst.sigma->form});
  if (inst.braided) {
    BraidedBialgebraData& a = *inst.braided;
    maps.push_back({"braided.mult", &a.algebra.mult});
    maps.push_back({"braided.unit", &a.algebra.unit});
    maps.push_back({"braided.comult", &a.coalgebra.comult});
    maps.push_back({"braided.counit", &a.coalgebra.counit});
    maps.push_back({"braided.action", &a.action});
    maps.push_back({"braided.coaction", &a.coaction});
  }
  for (auto& m : inst.modules) {
    if (m.action) maps.push_back({m.label + ".action", &*m.action});
    if (m.coaction) maps.push_back({m.label + ".coaction", &*m.coaction});
    if (m.right_action) maps.push_back({m.label + ".right_action", &*m.right_action});
  }
  return maps;
}

QuasitriangularExample build_sweedler(FieldSpec f, const Scalar& alpha) {
  if (f.is_prime() && f.characteristic() == 2) throw PreconditionError("build_sweedler: 1/2 is undefined in characteristic 2");
  if (alpha.field() != f) throw FieldError("build_sweedler: alpha lives in another field");
  constexpr std::size_t d = 4;
  // basis index a + 2b for g^a x^b
  LinearMap mult = LinearMap::zeros(f, {{d, d}, {d}});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t a = i % 2, b = i / 2, c = j % 2, e = j / 2;
      if (b + e > 1) continue;
      const long long sign = (b * c) % 2 ? -1 : 1;
      mult.set((a + c) % 2 + 2 * (b + e), i * d + j, sign);
    }
  }
  LinearMap comult = LinearMap::zeros(f, {{d}, {d, d}});
  comult.set(0 * d + 0, 0, 1);
  comult.set(1 * d + 1, 1, 1);
  comult.set(2 * d + 0, 2, 1);  // x (x) 1
  comult.set(1 * d + 2, 2, 1);  // g (x) x
  comult.set(3 * d + 1, 3, 1);  // gx (x) g
  comult.set(0 * d + 3, 3, 1);  // 1 (x) gx
  LinearMap antipode = LinearMap::zeros(f, {{d}, {d}});
  antipode.set(0, 0, 1);
  antipode.set(1, 1, 1);
  antipode.set(3, 2, -1);
  antipode.set(2, 3, 1);
  HopfData h(BialgebraData(AlgebraData(mult, vector_of(f, d, 0)),
                           CoalgebraData(comult, LinearMap::from_ints(f, {{d}, {}}, {1, 1, 0, 0}))),
             antipode);

  const Scalar half = Scalar(f, 2).inverse();
  const Scalar ah = alpha * half;
  LinearMap r = LinearMap::zeros(f, {{}, {d, d}});
  r.set(0 * d + 0, 0, half);
  r.set(0 * d + 1, 0, half);
  r.set(1 * d + 0, 0, half);
  r.set(1 * d + 1, 0, -half);
  r.set(2 * d + 2, 0, ah);
  r.set(2 * d + 3, 0, -ah);
  r.set(3 * d + 3, 0, ah);
  r.set(3 * d + 2, 0, ah);
  return {std::move(h), RMatrix(r)};
}

QuasitriangularExample build_sweedler(std::uint32_t p, long long alpha) {
  if (p == 2) throw PreconditionError("build_sweedler: 1/2 is undefined in characteristic 2");
  const FieldSpec f = FieldSpec::prime_field(p);
  return build_sweedler(f, Scalar(f, alpha));
}

GroupTable cyclic_group_table(std::size_t n) {
  GroupTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

HopfData build_group_algebra(FieldSpec f, const GroupTable& table) {
  const auto [e, inv] = validate_group(table);
  const std::size_t n = table.size();
  LinearMap mult = LinearMap::zeros(f, {{n, n}, {n}});
  LinearMap comult = LinearMap::zeros(f, {{n}, {n, n}});
  LinearMap counit = LinearMap::zeros(f, {{n}, {}});
  LinearMap antipode = LinearMap::zeros(f, {{n}, {n}});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult.set(table[a][b], a * n + b, 1);
    comult.set(a * n + a, a, 1);
    counit.set(0, a, 1);
    antipode.set(inv[a], a, 1);
  }
  return HopfData(BialgebraData(AlgebraData(mult, vector_of(f, n, e)), CoalgebraData(comult, counit)), antipode);
}

HopfData build_dual_group_algebra(FieldSpec f, const GroupTable& table) {
  const auto [e, inv] = validate_group(table);
  const std::size_t n = table.size();
  LinearMap mult = LinearMap::zeros(f, {{n, n}, {n}});
  LinearMap unit = LinearMap::zeros(f, {{}, {n}});
  LinearMap comult = LinearMap::zeros(f, {{n}, {n, n}});
  LinearMap counit = LinearMap::zeros(f, {{n}, {}});
  LinearMap antipode = LinearMap::zeros(f, {{n}, {n}});
  for (std::size_t a = 0; a < n; ++a) {
    mult.set(a, a * n + a, 1);
    unit.set(a, 0, 1);
    for (std::size_t b = 0; b < n; ++b) comult.set(a * n + b, table[a][b], 1);
    antipode.set(inv[a], a, 1);
  }
  counit.set(0, e, 1);
  return HopfData(BialgebraData(AlgebraData(mult, unit), CoalgebraData(comult, counit)), antipode);
}

QuasitriangularExample build_cyclic_qt(std::size_t n, std::uint32_t p, std::uint32_t omega) {
  if (!is_prime(p)) throw PreconditionError("build_cyclic_qt: " + std::to_string(p) + " is not prime");
  if (n == 0 || n % p == 0) throw PreconditionError("build_cyclic_qt: n is not invertible mod p");
  std::uint64_t order = 0;
  if (omega % p != 0) {
    for (std::uint64_t k = 1; k <= p; ++k) {
      if (power_mod(omega, k, p) == 1) {
        order = k;
        break;
      }
    }
  }
  if (order != n) {
    throw PreconditionError("build_cyclic_qt: " + std::to_string(omega) + " has order " + std::to_string(order) +
                            " mod " + std::to_string(p) + ", not " + std::to_string(n));
  }
  const FieldSpec f = FieldSpec::prime_field(p);
  HopfData h = build_group_algebra(f, cyclic_group_table(n));
  const Scalar inv_n = Scalar(f, static_cast<long long>(n)).inverse();
  LinearMap r = LinearMap::zeros(f, {{}, {n, n}});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint64_t e = (n - (a * b) % n) % n;  // omega^{-ab} = omega^{n - ab mod n}
      r.set(a * n + b, 0, inv_n * Scalar(f, static_cast<long long>(power_mod(omega, e, p))));
    }
  }
  return {std::move(h), RMatrix(r)};
}

std::string to_json_text(const Instance& inst) {
  const HopfData& h = inst.hopf;
  const std::size_t d = h.dim();
  json j;
  j["label"] = inst.label;
  j["field"] = inst.field().to_string();
  j["dim"] = d;
  j["basis"] = inst.basis;
  j["mult"] = map_json(h.mult().reshaped({{d, d}, {d}}));
  j["unit"] = map_json(h.unit().reshaped({{}, {d}}));
  j["comult"] = map_json(h.comult().reshaped({{d}, {d, d}}));
  j["counit"] = map_json(h.counit().reshaped({{d}, {}}));
  j["antipode"] = map_json(h.antipode.reshaped({{d}, {d}}));
  if (inst.r) j["R"] = map_json(inst.r->element.reshaped({{}, {d, d}}));
  if (inst.sigma) j["sigma"] = map_json(inst.sigma->form.reshaped({{d, d}, {}}));
  if (inst.braided) {
    const BraidedBialgebraData& a = *inst.braided;
    const std::size_t n = a.dim(), b = a.base_dim;
    json k;
    k["dim"] = n;
    k["base_dim"] = b;
    k["mult"] = map_json(a.algebra.mult.reshaped({{n, n}, {n}}));
    k["unit"] = map_json(a.algebra.unit.reshaped({{}, {n}}));
    k["comult"] = map_json(a.coalgebra.comult.reshaped({{n}, {n, n}}));
    k["counit"] = map_json(a.coalgebra.counit.reshaped({{n}, {}}));
    k["action"] = map_json(a.action.reshaped({{b, n}, {n}}));
    k["coaction"] = map_json(a.coaction.reshaped({{n}, {b, n}}));
    j["braided"] = k;
  }
  if (!inst.modules.empty()) {
    const std::size_t ad = inst.braided ? inst.braided->dim() : 0;
    json mods = json::array();
    for (const auto& m : inst.modules) {
      json k;
      k["label"] = m.label;
      k["dim"] = m.dim;
      if (m.action) k["action"] = map_json(m.action->reshaped({{d, m.dim}, {m.dim}}));
      if (m.coaction) k["coaction"] = map_json(m.coaction->reshaped({{m.dim}, {d, m.dim}}));
      if (m.right_action) k["right_action"] = map_json(m.right_action->reshaped({{m.dim, ad}, {m.dim}}));
      mods.push_back(k);
    }
    j["modules"] = mods;
  }
  return j.dump(1) + "\n";
}

Instance from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("top level: expected an object");
  const json& fj = field_of(j, "field", "");
  if (!fj.is_string()) throw SchemaError("field: expected a string");
  FieldSpec f = FieldSpec::rationals();
  try {
    f = FieldSpec::parse(fj.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(std::string("field: ") + e.what());
  }
  const std::size_t d = size_of(j, "dim", "");
  HopfData h(BialgebraData(AlgebraData(map_field(f, j, "mult", {d, d}, {d}, ""), map_field(f, j, "unit", {}, {d}, "")),
                           CoalgebraData(map_field(f, j, "comult", {d}, {d, d}, ""),
                                         map_field(f, j, "counit", {d}, {}, ""))),
             map_field(f, j, "antipode", {d}, {d}, ""));
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw SchemaError("label: expected a string");
    label = j["label"].get<std::string>();
  }
  Instance inst(label, std::move(h));
  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array()) throw SchemaError("basis: expected an array of strings");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) throw SchemaError("basis[" + std::to_string(i) + "]: expected a string");
      inst.basis.push_back(b[i].get<std::string>());
    }
    if (!inst.basis.empty() && inst.basis.size() != d) throw SchemaError("basis: expected " + std::to_string(d) + " labels");
  }
  if (j.contains("R")) inst.r = RMatrix(map_field(f, j, "R", {}, {d, d}, ""));
  if (j.contains("sigma")) inst.sigma = SigmaForm(map_field(f, j, "sigma", {d, d}, {}, ""));
  if (j.contains("braided")) {
    const json& k = j["braided"];
    const std::string p = "braided.";
    const std::size_t n = size_of(k, "dim", p), b = size_of(k, "base_dim", p);
    if (b != d) throw SchemaError("braided.base_dim: expected " + std::to_string(d));
    inst.braided = BraidedBialgebraData(
        AlgebraData(map_field(f, k, "mult", {n, n}, {n}, p), map_field(f, k, "unit", {}, {n}, p)),
        CoalgebraData(map_field(f, k, "comult", {n}, {n, n}, p), map_field(f, k, "counit", {n}, {}, p)), b,
        map_field(f, k, "action", {b, n}, {n}, p), map_field(f, k, "coaction", {n}, {b, n}, p));
  }
  if (j.contains("modules")) {
    const json& mods = j["modules"];
    if (!mods.is_array()) throw SchemaError("modules: expected an array");
    for (std::size_t i = 0; i < mods.size(); ++i) {
      const json& k = mods[i];
      const std::string p = "modules[" + std::to_string(i) + "].";
      ModuleBlock m;
      if (k.contains("label")) {
        if (!k["label"].is_string()) throw SchemaError(p + "label: expected a string");
        m.label = k["label"].get<std::string>();
      }
      m.dim = size_of(k, "dim", p);
      if (k.contains("action")) m.action = map_field(f, k, "action", {d, m.dim}, {m.dim}, p);
      if (k.contains("coaction")) m.coaction = map_field(f, k, "coaction", {m.dim}, {d, m.dim}, p);
      if (k.contains("right_action")) {
        if (!inst.braided) throw SchemaError(p + "right_action: needs a braided block");
        const std::size_t ad = inst.braided->dim();
        m.right_action = map_field(f, k, "right_action", {m.dim, ad}, {m.dim}, p);
      }
      inst.modules.push_back(std::move(m));
    }
  }
  return inst;
}

void save(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json_text(instance);
}

Instance load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return from_json_text(ss.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<Instance> standard_catalog() {
  std::vector<Instance> out;
  auto add_enveloping = [&](std::string label, QuasitriangularExample qt, std::vector<std::string> basis) {
    Instance inst(std::move(label), std::move(qt.hopf));
    inst.basis = std::move(basis);
    inst.r = qt.r;
    inst.braided = enveloping_braided_group(inst.hopf, *inst.r).data;
    attach_datum_modules(inst);
    out.push_back(std::move(inst));
  };
  const std::vector<std::string> sweedler_basis{"1", "g", "x", "gx"};
  add_enveloping("H4(alpha=0)", build_sweedler(5, 0), sweedler_basis);
  add_enveloping("H4(alpha=1)", build_sweedler(5, 1), sweedler_basis);
  {
    // adjoint action with Delta as coaction: a Yetter-Drinfeld module over H4
    Instance& h4 = out.back();
    ModuleBlock adj;
    adj.label = "adjoint";
    adj.dim = 4;
    adj.action = adjoint_action(h4.hopf);
    adj.coaction = h4.hopf.comult();
    h4.modules.push_back(adj);
  }
  for (const auto& [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 5}, {3, 7}}) {
    const FieldSpec f = FieldSpec::prime_field(p);
    HopfData h = build_group_algebra(f, cyclic_group_table(n));
    RMatrix r = RMatrix::trivial(h.bialgebra.algebra);
    add_enveloping("kZ" + std::to_string(n), {std::move(h), std::move(r)}, {});
  }
  add_enveloping("cyclic_qt(3,7,2)", build_cyclic_qt(3, 7, 2), {});
  add_enveloping("cyclic_qt(2,5,4)", build_cyclic_qt(2, 5, 4), {});
  for (const auto& [n, p] : {std::pair<std::size_t, std::uint32_t>{2, 5}, {3, 7}}) {
    const FieldSpec f = FieldSpec::prime_field(p);
    Instance inst("k^Z" + std::to_string(n), build_dual_group_algebra(f, cyclic_group_table(n)));
    inst.sigma = SigmaForm::trivial(inst.hopf.bialgebra.coalgebra);
    inst.braided = function_braided_group(inst.hopf, *inst.sigma).data;
    attach_datum_modules(inst);
    out.push_back(std::move(inst));
  }
  {
    // B = k with A = kZ2 carrying the trivial action and coaction
    const FieldSpec f = FieldSpec::prime_field(5);
    Instance inst("k", build_group_algebra(f, cyclic_group_table(1)));
    const HopfData a = build_group_algebra(f, cyclic_group_table(2));
    inst.braided = BraidedBialgebraData(a.bialgebra.algebra, a.bialgebra.coalgebra, 1,
                                        LinearMap::identity(f, 2).reshaped({{1, 2}, {2}}),
                                        LinearMap::identity(f, 2).reshaped({{2}, {1, 2}}));
    attach_datum_modules(inst);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace hopfmon
