// Command-line front end: validates structure-constant files, builds
// transmutations, and runs the comparison suites.
//
// Exit codes: 0 every input passed, 1 some check failed, 2 an input could not
// be read or did not have the structure the command needs.

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfmon/catalog.hpp"
#include "hopfmon/errors.hpp"
#include "hopfmon/identity_suite.hpp"
#include "hopfmon/monoidal.hpp"

using namespace hopfmon;
using nlohmann::json;

namespace {

enum Code { kPass = 0, kFail = 1, kInputError = 2 };

struct Outcome {
  std::string input;
  int code = kPass;
  CheckReport report;
  std::vector<std::string> lines;  // summary lines for text output
  json summary = json::object();
  std::string error;
};

Outcome input_error(std::string input, std::string message) {
  Outcome o;
  o.input = std::move(input);
  o.code = kInputError;
  o.error = std::move(message);
  return o;
}

Outcome from_report(std::string input, CheckReport report) {
  Outcome o;
  o.input = std::move(input);
  o.code = report.passed() ? kPass : kFail;
  o.report = std::move(report);
  return o;
}

// Runs one job per input concurrently; results come back in input order.
std::vector<Outcome> run_all(const std::vector<std::string>& inputs,
                             const std::function<Outcome(const std::string&)>& job) {
  std::vector<std::future<Outcome>> futures;
  futures.reserve(inputs.size());
  for (const auto& in : inputs) {
    futures.push_back(std::async(std::launch::async, [&job, in] {
      try {
        return job(in);
      } catch (const std::exception& e) {
        return input_error(in, e.what());
      }
    }));
  }
  std::vector<Outcome> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

int emit(const std::string& command, const std::vector<Outcome>& outcomes, const std::string& format) {
  int code = kPass;
  for (const auto& o : outcomes) code = std::max(code, o.code);
  if (format == "machine") {
    json j;
    j["command"] = command;
    j["exit_code"] = code;
    j["results"] = json::array();
    for (const auto& o : outcomes) {
      json r;
      r["input"] = o.input;
      r["status"] = o.code == kPass ? "pass" : o.code == kFail ? "fail" : "error";
      if (o.code == kInputError) {
        r["error"] = o.error;
      } else {
        r["report"] = json::parse(o.report.to_json());
        r["summary"] = o.summary;
      }
      j["results"].push_back(std::move(r));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& o : outcomes) {
      std::cout << "== " << o.input << "\n";
      if (o.code == kInputError) {
        std::cout << "error: " << o.error << "\n";
        continue;
      }
      std::cout << o.report.to_text();
      for (const auto& l : o.lines) std::cout << l << "\n";
    }
    std::cout << (code == kPass ? "overall: pass" : code == kFail ? "overall: fail" : "overall: input error") << "\n";
  }
  return code;
}

std::vector<RelHopfModuleData> relative_blocks(const Instance& inst) {
  std::vector<RelHopfModuleData> out;
  if (!inst.braided) return out;
  for (const auto& m : inst.modules) {
    if (m.coaction && m.right_action) {
      out.emplace_back(inst.hopf.dim(), inst.braided->dim(), *m.coaction, *m.right_action, m.label);
    }
  }
  return out;
}

Outcome validate(const std::string& kind, const std::string& path) {
  const Instance inst = load(path);
  const HopfData& h = inst.hopf;
  CheckReport report;
  if (kind == "algebra") {
    report = check_algebra(h.bialgebra.algebra);
  } else if (kind == "coalgebra") {
    report = check_coalgebra(h.bialgebra.coalgebra);
  } else if (kind == "bialgebra") {
    report = check_bialgebra(h.bialgebra);
  } else if (kind == "hopf") {
    report = check_hopf(h);
  } else if (kind == "qt") {
    if (!inst.r) return input_error(path, "no R block");
    report = check_quasitriangular(h, *inst.r);
  } else if (kind == "coqt") {
    if (!inst.sigma) return input_error(path, "no sigma block");
    report = check_coquasitriangular(h, *inst.sigma);
  } else if (kind == "relhopf") {
    const auto blocks = relative_blocks(inst);
    if (blocks.empty()) return input_error(path, "no module block with coaction and right_action");
    for (const auto& x : blocks) {
      report.merge(check_relative_hopf(h.bialgebra, inst.braided->algebra, inst.braided->coaction, x), x.label);
    }
  } else {
    std::size_t used = 0;
    for (const auto& m : inst.modules) {
      const bool want_action = kind == "module" || kind == "yd";
      const bool want_coaction = kind == "comodule" || kind == "yd";
      if ((want_action && !m.action) || (want_coaction && !m.coaction)) continue;
      ++used;
      if (want_action) report.merge(check_module(h.bialgebra, ModuleData(h.dim(), *m.action)), m.label);
      if (want_coaction) report.merge(check_comodule(h.bialgebra, ComoduleData(h.dim(), *m.coaction)), m.label);
      if (kind == "yd") report.merge(check_yetter_drinfeld(h.bialgebra, *m.action, *m.coaction), m.label);
    }
    if (used == 0) return input_error(path, "no module block with the maps a " + kind + " needs");
  }
  return from_report(path, std::move(report));
}

Outcome transmute_file(const std::string& kind, const std::string& path, const std::string& output) {
  Instance inst = load(path);
  Transmutation t = [&] {
    if (kind == "enveloping") {
      if (!inst.r) throw PreconditionError("enveloping transmutation needs an R block");
      return enveloping_braided_group(inst.hopf, *inst.r);
    }
    if (!inst.sigma) throw PreconditionError("function transmutation needs a sigma block");
    return function_braided_group(inst.hopf, *inst.sigma);
  }();
  inst.braided = t.data;
  inst.modules.clear();
  save(inst, output);
  Outcome o = from_report(path, t.preconditions);
  for (const auto& w : t.warnings) o.lines.push_back("warning: " + w);
  o.lines.push_back("wrote " + output);
  o.summary["output"] = output;
  o.summary["warnings"] = t.warnings;
  return o;
}

Outcome two_sided(const std::string& input, const TwoSidedVerdict& v, const std::string& left, const std::string& right) {
  Outcome o;
  o.input = input;
  o.report.merge(v.left_report, left);
  o.report.merge(v.right_report, right);
  o.code = v.agree() && v.left && v.right ? kPass : kFail;
  o.lines.push_back(left + " side: " + (v.left ? "pass" : "fail"));
  o.lines.push_back(right + " side: " + (v.right ? "pass" : "fail"));
  o.lines.push_back(std::string("agreement=") + (v.agree() ? "true" : "false"));
  o.summary = {{left, v.left}, {right, v.right}, {"agreement", v.agree()}};
  return o;
}

Outcome theorem21(const std::string& b_path, const std::string& datum_path, const std::vector<std::string>& extra) {
  const Instance b = load(b_path);
  const Instance a = load(datum_path);
  if (!a.braided) return input_error(datum_path, "no braided block");
  CheckReport why;
  const auto datum = MonoidalInputDatum::try_make(b.hopf.bialgebra, a.braided->algebra, a.braided->coalgebra,
                                                  a.braided->coaction, a.braided->action, &why);
  if (!datum) {
    std::string msg = "not an input datum:";
    for (const auto* e : why.failures()) msg += " " + e->name;
    return input_error(datum_path, msg);
  }
  std::vector<RelHopfModuleData> modules;
  for (const auto& path : extra) {
    Instance m = load(path);
    m.braided = a.braided;
    for (auto& x : relative_blocks(m)) modules.push_back(std::move(x));
  }
  return two_sided(b_path + " + " + datum_path, check_theorem_2_1(*datum, modules), "braided", "monoidal");
}

Outcome prop34(const std::string& b_path, const std::string& a_path) {
  const Instance b = load(b_path);
  const Instance a = load(a_path);
  if (!a.braided) return input_error(a_path, "no braided block carrying the coaction");
  if (a.braided->base_dim != b.hopf.dim()) return input_error(a_path, "coaction is over a different base");
  const BialgebraData ab(a.braided->algebra, a.braided->coalgebra);
  return two_sided(b_path + " + " + a_path, check_trivial_action_doi_hopf(b.hopf.bialgebra, ab, a.braided->coaction),
                   "coaction", "braided");
}

Outcome suite(const std::string& kind, const std::string& path, std::size_t samples, std::uint64_t seed,
              std::size_t max_dim) {
  const Instance inst = load(path);
  const SuiteResult r = kind == "long" ? long_dimodule_suite(inst.hopf, samples, seed, max_dim)
                                       : yd_identification_suite(inst.hopf, samples, seed, max_dim);
  Outcome o = from_report(path, r.report);
  const bool all_agree = r.precondition_ok && r.agreements == r.samples;
  o.code = all_agree && r.report.passed() ? kPass : kFail;
  o.lines.push_back("samples=" + std::to_string(r.samples) + " agreements=" + std::to_string(r.agreements) +
                    " first_passes=" + std::to_string(r.first_passes) +
                    " second_passes=" + std::to_string(r.second_passes) + " seed=" + std::to_string(r.seed));
  o.summary = {{"precondition_ok", r.precondition_ok}, {"samples", r.samples},
               {"agreements", r.agreements},           {"first_passes", r.first_passes},
               {"second_passes", r.second_passes},     {"seed", r.seed}};
  return o;
}

Outcome identities(const std::vector<dsl::IdentityLine>& lines, const std::string& path) {
  const Instance inst = load(path);
  const dsl::Agreement a = dsl::compare_with_native(lines, inst);
  Outcome o = from_report(path, a.dsl);
  if (!a.agree()) o.code = kFail;
  for (const auto& n : a.disagreements) o.lines.push_back("disagrees with the native checker: " + n);
  for (const auto& n : a.unmatched) o.lines.push_back("no native counterpart: " + n);
  o.lines.push_back(std::string("native agreement=") + (a.agree() ? "true" : "false"));
  o.summary = {{"agreement", a.agree()}, {"disagreements", a.disagreements}, {"unmatched", a.unmatched}};
  return o;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Hopf algebras, Yetter-Drinfeld data and relative Hopf modules"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));

  std::string kind;
  std::vector<std::string> files;
  std::string output;

  auto* validate_cmd = app.add_subcommand("validate", "Run the axiom checker of one structure on each file");
  validate_cmd->fallthrough();
  validate_cmd->add_option("kind", kind, "Structure to check")
      ->required()
      ->check(CLI::IsMember(
          {"algebra", "coalgebra", "bialgebra", "hopf", "qt", "coqt", "module", "comodule", "yd", "relhopf"}));
  validate_cmd->add_option("files", files, "Instance files")->required();

  auto* transmute_cmd = app.add_subcommand("transmute", "Build the braided group of a (co)quasitriangular instance");
  transmute_cmd->fallthrough();
  transmute_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"enveloping", "function"}));
  transmute_cmd->add_option("file", files)->required()->expected(1);
  transmute_cmd->add_option("-o,--output", output, "Output instance file")->required();

  std::string b_file, datum_file, coalg_file;
  std::vector<std::string> extra;
  auto* t21 = app.add_subcommand("theorem21", "Compare the braided-bialgebra verdict with the monoidal conditions");
  t21->fallthrough();
  t21->add_option("--bialgebra", b_file)->required();
  t21->add_option("--datum", datum_file)->required();
  t21->add_option("--extra-modules", extra);

  auto* p34 = app.add_subcommand("prop34", "Compare the coaction conditions with the braided verdict, trivial action");
  p34->fallthrough();
  p34->add_option("--bialgebra", b_file)->required();
  p34->add_option("--comodule-algebra", coalg_file)->required();

  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t max_dim = 3;
  auto* suite_cmd = app.add_subcommand("suite", "Seeded identification suites");
  suite_cmd->fallthrough();
  suite_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"long", "ydident"}));
  suite_cmd->add_option("file", files)->required()->expected(1);
  suite_cmd->add_option("--samples", samples);
  suite_cmd->add_option("--seed", seed);
  suite_cmd->add_option("--max-dim", max_dim);

  std::string id_file;
  auto* id_cmd = app.add_subcommand("identities", "Evaluate an identity file and compare with the native checkers");
  id_cmd->fallthrough();
  id_cmd->add_option("idfile", id_file)->required();
  id_cmd->add_option("--env", files)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*validate_cmd) {
    return emit("validate " + kind, run_all(files, [&](const std::string& f) { return validate(kind, f); }), format);
  }
  if (*transmute_cmd) {
    return emit("transmute " + kind,
                run_all(files, [&](const std::string& f) { return transmute_file(kind, f, output); }), format);
  }
  if (*t21) {
    return emit("theorem21", run_all({b_file}, [&](const std::string&) { return theorem21(b_file, datum_file, extra); }),
                format);
  }
  if (*p34) {
    return emit("prop34", run_all({b_file}, [&](const std::string&) { return prop34(b_file, coalg_file); }), format);
  }
  if (*suite_cmd) {
    return emit("suite " + kind,
                run_all(files, [&](const std::string& f) { return suite(kind, f, samples, seed, max_dim); }), format);
  }
  std::vector<dsl::IdentityLine> lines;
  try {
    lines = dsl::parse_identity_file(read_text(id_file));
  } catch (const std::exception& e) {
    return emit("identities", {input_error(id_file, e.what())}, format);
  }
  return emit("identities", run_all(files, [&](const std::string& f) { return identities(lines, f); }), format);
}
