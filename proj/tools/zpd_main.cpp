// Command-line surface: parse algebra/module documents or builtin references,
// run validations and decisions, emit reports and certificates, verify
// certificates. All numeric output is exact (rational strings).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "zpd/json_io.hpp"

namespace {

using zpd::Json;

struct CommonOpts {
  std::string field = "Q";
  std::string builtin;
  std::string input;
  std::string output;
  std::string families = "on";
  zpd::SamplerConfig cfg;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
  cmd->add_option("--field", o.field, "ground field: Q or GF:p")->capture_default_str();
  if (with_input) {
    cmd->add_option("--builtin", o.builtin, "builtin reference (see builtin-list)");
    cmd->add_option("--input", o.input, "path to a JSON input document");
  }
  cmd->add_option("--output", o.output, "write the JSON result to this path as well");
  cmd->add_option("--seed", o.cfg.seed, "RNG seed (reports are byte-identical per seed)")
      ->capture_default_str();
  cmd->add_option("--rounds", o.cfg.rounds, "generator rounds budget")->capture_default_str();
  cmd->add_option("--validation", o.cfg.validation, "fresh pairs per witness functional")
      ->capture_default_str();
  cmd->add_option("--window", o.cfg.window, "stabilization window in rounds")
      ->capture_default_str();
  cmd->add_option("--cap", o.cfg.exhaustive_cap, "exhaustive enumeration budget p^(n-1)")
      ->capture_default_str();
  cmd->add_flag("--exhaustive", o.cfg.exhaustive, "exact GF(p) enumeration");
  cmd->add_option("--families", o.families, "structured pair families: on|off")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
}

zpd::Field field_of(const CommonOpts& o) { return zpd::Field::parse(o.field); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) zpd::fail(zpd::errc::input, "cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    zpd::fail(zpd::errc::parse, "malformed JSON in \"" + path + "\": " + e.what());
  }
}

struct Loaded {
  std::variant<zpd::LieAlgebra, zpd::LieModule> value;
  std::vector<zpd::PairFamily> families;
  Json input_ref;  // builtin ref string or embedded document
};

Loaded load(const CommonOpts& o) {
  if (o.builtin.empty() == o.input.empty())
    zpd::fail(zpd::errc::input, "exactly one of --builtin or --input is required");
  zpd::SamplerConfig cfg = o.cfg;
  cfg.use_families = o.families == "on";
  if (!o.builtin.empty()) {
    auto parsed = zpd::builtins::parse(field_of(o), o.builtin);
    return {std::move(parsed.value),
            cfg.use_families ? std::move(parsed.families) : std::vector<zpd::PairFamily>{},
            Json(parsed.ref)};
  }
  Json doc = read_json_file(o.input);
  if (doc.contains("action"))
    return {zpd::module_from_json(doc, field_of(o)), {}, doc};
  return {zpd::algebra_from_json(doc), {}, doc};
}

int emit(const Json& doc, const CommonOpts& o) {
  std::string text = doc.dump(2);
  std::cout << text << "\n";
  if (!o.output.empty()) {
    std::ofstream out(o.output);
    if (!out) zpd::fail(zpd::errc::input, "cannot write \"" + o.output + "\"");
    out << text << "\n";
  }
  return 0;
}

int verdict_exit(zpd::DecisionVerdict v) {
  switch (v) {
    case zpd::DecisionVerdict::certified:
    case zpd::DecisionVerdict::not_exhaustive:
      return 0;  // decided with replayable evidence
    case zpd::DecisionVerdict::not_probabilistic:
      return 2;
    case zpd::DecisionVerdict::undecided:
      return 3;
  }
  return 3;
}

int cmd_validate(const CommonOpts& o) {
  Loaded in = load(o);
  Json doc;
  if (auto* L = std::get_if<zpd::LieAlgebra>(&in.value)) {
    auto report = L->validate();
    doc["input"] = in.input_ref;
    doc["valid"] = report.ok();
    Json failures = Json::array();
    for (const auto& fz : report.failures) {
      Json f;
      f["triple"] = {fz.i, fz.j, fz.k};
      Json residual = Json::array();
      for (const auto& s : fz.residual) residual.push_back(s.str());
      f["residual"] = std::move(residual);
      failures.push_back(std::move(f));
    }
    doc["failures"] = std::move(failures);
    emit(doc, o);
    return report.ok() ? 0 : 1;
  }
  auto& M = std::get<zpd::LieModule>(in.value);
  auto report = M.validate_module();
  doc["input"] = in.input_ref;
  doc["valid"] = report.ok();
  Json failures = Json::array();
  for (const auto& fm : report.failures) {
    Json f;
    f["pair"] = {fm.i, fm.j};
    f["residual"] = zpd::matrix_to_json(fm.residual);
    failures.push_back(std::move(f));
  }
  doc["failures"] = std::move(failures);
  emit(doc, o);
  return report.ok() ? 0 : 1;
}

int cmd_analyze(const CommonOpts& o) {
  Loaded in = load(o);
  auto* L = std::get_if<zpd::LieAlgebra>(&in.value);
  if (L == nullptr)
    zpd::fail(zpd::errc::input, "analyze expects a Lie algebra; use `zad` for modules");
  zpd::SamplerConfig cfg = o.cfg;
  cfg.use_families = o.families == "on";
  zpd::ZpdReport rep = zpd::decide_zpd(*L, cfg, in.families);
  emit(zpd::zpd_report_to_json(rep, in.input_ref, cfg), o);
  return verdict_exit(rep.verdict);
}

int cmd_zad(const CommonOpts& o) {
  Loaded in = load(o);
  auto* M = std::get_if<zpd::LieModule>(&in.value);
  if (M == nullptr)
    zpd::fail(zpd::errc::input, "zad expects a module; use `analyze` for algebras");
  zpd::SamplerConfig cfg = o.cfg;
  cfg.use_families = o.families == "on";
  zpd::ZadReport rep = zpd::decide_zad(*M, cfg, in.families);
  emit(zpd::zad_report_to_json(rep, in.input_ref, cfg), o);
  return verdict_exit(rep.verdict);
}

int cmd_h2(const CommonOpts& o) {
  Loaded in = load(o);
  auto* L = std::get_if<zpd::LieAlgebra>(&in.value);
  if (L == nullptr) zpd::fail(zpd::errc::input, "h2 expects a Lie algebra");
  zpd::H2Dims dims = zpd::h2_dimension(*L);
  Json doc;
  doc["input"] = in.input_ref;
  doc["field"] = L->field().str();
  doc["Z2"] = dims.z2;
  doc["B2"] = dims.b2;
  doc["H2"] = dims.h2;
  doc["centrally_closed"] = dims.h2 == 0;
  return emit(doc, o);
}

int cmd_proportional(const CommonOpts& o) {
  Loaded in = load(o);
  auto* L = std::get_if<zpd::LieAlgebra>(&in.value);
  if (L == nullptr) zpd::fail(zpd::errc::input, "proportional expects a Lie algebra");
  zpd::SamplerConfig cfg = o.cfg;
  zpd::ProportionalReport rep = zpd::is_proportional_commuting(*L, cfg);
  Json doc;
  doc["input"] = in.input_ref;
  doc["field"] = L->field().str();
  doc["verdict"] = zpd::proportional_token(rep.verdict);
  if (rep.pair) doc["counterexample"] = zpd::pair_to_json(*rep.pair);
  doc["checked"] = rep.checked;
  doc["seed"] = cfg.seed;
  emit(doc, o);
  return rep.verdict == zpd::ProportionalVerdict::true_probabilistic ? 2 : 0;
}

int cmd_preserve(CommonOpts& o, const std::string& map_path, const std::string& from_ref,
                 const std::string& to_ref) {
  zpd::Field f = field_of(o);
  auto load_algebra = [&](const std::string& ref) {
    auto parsed = zpd::builtins::parse(f, ref);
    auto* L = std::get_if<zpd::LieAlgebra>(&parsed.value);
    if (L == nullptr) zpd::fail(zpd::errc::input, "\"" + ref + "\" is not an algebra");
    return std::pair{*L, std::move(parsed.families)};
  };
  auto [from, fams] = load_algebra(from_ref);
  auto [to, to_fams] = load_algebra(to_ref);
  (void)to_fams;  // pair generation runs on the source side only
  zpd::Matrix phi = zpd::matrix_from_json(read_json_file(map_path), f);
  zpd::SamplerConfig cfg = o.cfg;
  cfg.use_families = o.families == "on";
  zpd::PreserveReport rep = zpd::check_comm_preserving(
      phi, from, to, cfg, cfg.use_families ? fams : std::vector<zpd::PairFamily>{});
  Json doc;
  doc["from"] = from_ref;
  doc["to"] = to_ref;
  doc["field"] = f.str();
  doc["verdict"] = rep.preserves ? "PRESERVES_SAMPLED" : "VIOLATION";
  if (rep.violation) doc["violation"] = zpd::pair_to_json(*rep.violation);
  doc["pairs_checked"] = rep.pairs_checked;
  doc["seed"] = cfg.seed;
  emit(doc, o);
  return rep.preserves ? 2 : 0;
}

int cmd_verify(const CommonOpts& o, const std::string& report_path) {
  Json report = read_json_file(report_path);
  zpd::VerifyResult res = zpd::verify_report(report);
  Json doc;
  doc["report"] = report_path;
  doc["verified"] = res.ok;
  if (!res.ok) doc["diagnosis"] = res.diagnosis;
  emit(doc, o);
  return res.ok ? 0 : 1;
}

int cmd_builtin_list(const CommonOpts& o) {
  Json list = Json::array();
  for (const auto& entry : zpd::builtins::catalog()) {
    Json e;
    e["ref"] = entry.pattern;
    e["description"] = entry.description;
    e["expected"] = entry.expected;
    list.push_back(std::move(e));
  }
  Json doc;
  doc["builtins"] = std::move(list);
  return emit(doc, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zpd: exact decision engine for zero product determined Lie algebras"};
  app.require_subcommand(1);

  CommonOpts validate_o, analyze_o, zad_o, h2_o, prop_o, preserve_o, verify_o, list_o;
  std::string map_path, from_ref, to_ref, report_path;

  add_common(app.add_subcommand("validate", "check the Jacobi/representation axioms"), validate_o);
  add_common(app.add_subcommand("analyze", "decide the zpd property with certificate"), analyze_o);
  add_common(app.add_subcommand("zad", "decide the zad property for a module"), zad_o);
  add_common(app.add_subcommand("h2", "second cohomology dimensions"), h2_o);
  add_common(app.add_subcommand("proportional",
                                "are commuting elements always linearly dependent?"),
             prop_o);

  CLI::App* preserve = app.add_subcommand("preserve", "sampled commutativity-preservation check");
  add_common(preserve, preserve_o, false);
  preserve->add_option("--map", map_path, "JSON matrix of the linear map")->required();
  preserve->add_option("--from", from_ref, "source algebra builtin reference")->required();
  preserve->add_option("--to", to_ref, "target algebra builtin reference")->required();

  CLI::App* verify = app.add_subcommand("verify", "replay a report's evidence");
  add_common(verify, verify_o, false);
  verify->add_option("--report", report_path, "report JSON to verify")->required();

  add_common(app.add_subcommand("builtin-list", "available builtin constructions"), list_o, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("validate")) return cmd_validate(validate_o);
    if (app.got_subcommand("analyze")) return cmd_analyze(analyze_o);
    if (app.got_subcommand("zad")) return cmd_zad(zad_o);
    if (app.got_subcommand("h2")) return cmd_h2(h2_o);
    if (app.got_subcommand("proportional")) return cmd_proportional(prop_o);
    if (app.got_subcommand("preserve")) return cmd_preserve(preserve_o, map_path, from_ref, to_ref);
    if (app.got_subcommand("verify")) return cmd_verify(verify_o, report_path);
    if (app.got_subcommand("builtin-list")) return cmd_builtin_list(list_o);
  } catch (const zpd::Error& e) {
    std::cerr << "error[" << e.code_name() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
