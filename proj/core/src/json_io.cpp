#include "zpd/json_io.hpp"

namespace zpd {
namespace {

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

Vec vec_from_json(const Json& doc, const Field& f) {
  if (!doc.is_array()) fail(errc::parse, "expected an array of scalar strings");
  Vec out;
  for (const auto& e : doc) out.push_back(Scalar::parse(f, e.get<std::string>()));
  return out;
}

std::size_t get_index(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned())
    fail(errc::parse, std::string("expected unsigned \"") + key + "\"");
  return doc[key].get<std::size_t>();
}

}  // namespace

Json algebra_to_json(const LieAlgebra& L) {
  Json doc;
  doc["field"] = L.field().str();
  doc["dim"] = L.dim();
  doc["names"] = L.names();
  Json brackets = Json::array();
  L.for_each_bracket([&](std::size_t i, std::size_t j, const SparseVec& c) {
    Json entry;
    entry["i"] = i;
    entry["j"] = j;
    Json coeffs = Json::object();
    for (const auto& [k, v] : c) coeffs[std::to_string(k)] = v.str();
    entry["coeffs"] = std::move(coeffs);
    brackets.push_back(std::move(entry));
  });
  doc["brackets"] = std::move(brackets);
  return doc;
}

LieAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) fail(errc::parse, "algebra document must be an object");
  if (!doc.contains("field")) fail(errc::parse, "algebra document needs \"field\"");
  Field f = Field::parse(doc["field"].get<std::string>());
  std::size_t n = get_index(doc, "dim");
  std::vector<std::string> names;
  if (doc.contains("names")) names = doc["names"].get<std::vector<std::string>>();
  LieAlgebra L(f, n, std::move(names));
  if (doc.contains("brackets")) {
    for (const auto& entry : doc["brackets"]) {
      std::size_t i = get_index(entry, "i");
      std::size_t j = get_index(entry, "j");
      if (!(i < j) || j >= n) fail(errc::parse, "bracket entry needs i < j < dim");
      SparseVec sv;
      for (const auto& [key, val] : entry["coeffs"].items()) {
        std::size_t k = static_cast<std::size_t>(std::stoull(key));
        sv.emplace_back(k, Scalar::parse(f, val.get<std::string>()));
      }
      L.set_bracket(i, j, sv);
    }
  }
  return L;
}

Json matrix_to_json(const Matrix& m) {
  Json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_to_json(m.row(r)));
  doc["entries"] = std::move(rows);
  return doc;
}

Matrix matrix_from_json(const Json& doc, const Field& f) {
  std::size_t rows = get_index(doc, "rows");
  std::size_t cols = get_index(doc, "cols");
  Matrix m(f, rows, cols);
  const Json& entries = doc.at("entries");
  if (!entries.is_array() || entries.size() != rows)
    fail(errc::parse, "matrix entries must have one array per row");
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = vec_from_json(entries[r], f);
    if (row.size() != cols) fail(errc::parse, "matrix row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, row[c]);
  }
  return m;
}

Json module_to_json(const LieModule& m) {
  Json doc;
  doc["algebra"] = algebra_to_json(m.algebra());
  doc["dim"] = m.mod_dim();
  Json action = Json::array();
  for (const auto& rho : m.rho()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < rho.rows(); ++r) rows.push_back(vec_to_json(rho.row(r)));
    action.push_back(std::move(rows));
  }
  doc["action"] = std::move(action);
  return doc;
}

LieModule module_from_json(const Json& doc, const Field& default_field) {
  if (!doc.is_object() || !doc.contains("algebra"))
    fail(errc::parse, "module document needs \"algebra\"");
  LieAlgebra algebra = [&] {
    const Json& a = doc["algebra"];
    if (a.is_string()) {
      auto parsed = builtins::parse(default_field, a.get<std::string>());
      auto* L = std::get_if<LieAlgebra>(&parsed.value);
      if (L == nullptr) fail(errc::parse, "module \"algebra\" reference must be an algebra");
      return *L;
    }
    return algebra_from_json(a);
  }();
  const Field f = algebra.field();
  std::size_t d = get_index(doc, "dim");
  const Json& action = doc.at("action");
  if (!action.is_array() || action.size() != algebra.dim())
    fail(errc::parse, "module needs one action matrix per algebra basis vector");
  std::vector<Matrix> rho;
  for (const auto& mat : action) {
    if (!mat.is_array() || mat.size() != d) fail(errc::parse, "action matrix must be d x d");
    Matrix m(f, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      Vec row = vec_from_json(mat[r], f);
      if (row.size() != d) fail(errc::parse, "action matrix row length mismatch");
      for (std::size_t c = 0; c < d; ++c) m.set(r, c, row[c]);
    }
    rho.push_back(std::move(m));
  }
  return LieModule(std::move(algebra), std::move(rho));
}

Json comm_algebra_to_json(const CommAlgebra& a) {
  Json doc;
  doc["field"] = a.field().str();
  doc["dim"] = a.dim();
  doc["unit"] = a.unit_index();
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Vec& prod = a.product_basis(i, j);
      Json coeffs = Json::object();
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!prod[k].is_zero()) coeffs[std::to_string(k)] = prod[k].str();
      if (coeffs.empty()) continue;
      Json entry;
      entry["i"] = i;
      entry["j"] = j;
      entry["coeffs"] = std::move(coeffs);
      products.push_back(std::move(entry));
    }
  doc["products"] = std::move(products);
  return doc;
}

CommAlgebra comm_algebra_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("field"))
    fail(errc::parse, "commutative algebra document needs \"field\"");
  Field f = Field::parse(doc["field"].get<std::string>());
  std::size_t d = get_index(doc, "dim");
  std::size_t unit = get_index(doc, "unit");
  CommAlgebra a(f, d, unit);
  // start from the zero table (the constructor pre-fills unit products)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) a.set_product(i, j, zero_vec(f, d));
  if (doc.contains("products")) {
    for (const auto& entry : doc["products"]) {
      std::size_t i = get_index(entry, "i");
      std::size_t j = get_index(entry, "j");
      if (i >= d || j >= d) fail(errc::parse, "product entry out of range");
      Vec prod = zero_vec(f, d);
      for (const auto& [key, val] : entry["coeffs"].items())
        prod[static_cast<std::size_t>(std::stoull(key))] =
            Scalar::parse(f, val.get<std::string>());
      a.set_product(i, j, prod);
    }
  }
  return a;
}

Json config_to_json(const SamplerConfig& cfg) {
  Json doc;
  doc["seed"] = cfg.seed;
  doc["rounds"] = cfg.rounds;
  doc["coeff_box"] = cfg.coeff_box;
  doc["lambda_radius"] = cfg.lambda_radius;
  doc["window"] = cfg.window;
  doc["validation"] = cfg.validation;
  doc["exhaustive_cap"] = cfg.exhaustive_cap;
  doc["exhaustive"] = cfg.exhaustive;
  doc["use_families"] = cfg.use_families;
  doc["use_basis"] = cfg.use_basis;
  doc["use_line_sweep"] = cfg.use_line_sweep;
  doc["use_random"] = cfg.use_random;
  return doc;
}

SamplerConfig config_from_json(const Json& doc) {
  SamplerConfig cfg;
  if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("rounds")) cfg.rounds = doc["rounds"].get<std::size_t>();
  if (doc.contains("coeff_box")) cfg.coeff_box = doc["coeff_box"].get<int>();
  if (doc.contains("lambda_radius")) cfg.lambda_radius = doc["lambda_radius"].get<int>();
  if (doc.contains("window")) cfg.window = doc["window"].get<std::size_t>();
  if (doc.contains("validation")) cfg.validation = doc["validation"].get<std::size_t>();
  if (doc.contains("exhaustive_cap")) cfg.exhaustive_cap = doc["exhaustive_cap"].get<std::uint64_t>();
  if (doc.contains("exhaustive")) cfg.exhaustive = doc["exhaustive"].get<bool>();
  if (doc.contains("use_families")) cfg.use_families = doc["use_families"].get<bool>();
  if (doc.contains("use_basis")) cfg.use_basis = doc["use_basis"].get<bool>();
  if (doc.contains("use_line_sweep")) cfg.use_line_sweep = doc["use_line_sweep"].get<bool>();
  if (doc.contains("use_random")) cfg.use_random = doc["use_random"].get<bool>();
  return cfg;
}

Json pair_to_json(const CommutingPair& p) {
  Json doc;
  doc["x"] = vec_to_json(p.x);
  doc["y"] = vec_to_json(p.y);
  return doc;
}

namespace {

CommutingPair pair_from_json(const Json& doc, const Field& f) {
  return {vec_from_json(doc.at("x"), f), vec_from_json(doc.at("y"), f)};
}

Json witness_to_json(const Witness& w) {
  Json doc;
  doc["xi"] = vec_to_json(w.xi);
  doc["mu"] = vec_to_json(w.mu);
  Json pairs = Json::array();
  for (const auto& p : w.mu_pairs) pairs.push_back(pair_to_json(p));
  doc["mu_pairs"] = std::move(pairs);
  doc["validated_pairs"] = w.validated;
  return doc;
}

Witness witness_from_json(const Json& doc, const Field& f) {
  Witness w;
  w.xi = vec_from_json(doc.at("xi"), f);
  w.mu = vec_from_json(doc.at("mu"), f);
  for (const auto& p : doc.at("mu_pairs")) w.mu_pairs.push_back(pair_from_json(p, f));
  w.validated = doc.value("validated_pairs", std::size_t{0});
  return w;
}

Json certificate_to_json(const Certificate& c) {
  Json pairs = Json::array();
  for (const auto& p : c.pairs) pairs.push_back(pair_to_json(p));
  Json doc;
  doc["pairs"] = std::move(pairs);
  return doc;
}

Certificate certificate_from_json(const Json& doc, const Field& f) {
  Certificate c;
  for (const auto& p : doc.at("pairs")) c.pairs.push_back(pair_from_json(p, f));
  return c;
}

Json stats_to_json(const DecisionStats& s, const SamplerConfig& cfg) {
  Json doc;
  doc["rounds"] = s.rounds;
  doc["pairs"] = s.pairs;
  doc["exhaustive"] = s.exhaustive;
  doc["lines"] = s.lines;
  doc["config"] = config_to_json(cfg);
  return doc;
}

}  // namespace

Json zpd_report_to_json(const ZpdReport& rep, const Json& input, const SamplerConfig& cfg) {
  Json doc;
  doc["input"] = input;
  doc["kind"] = "zpd";
  doc["field"] = rep.field.str();
  Json dims;
  dims["n"] = rep.dims.n;
  dims["derived"] = rep.dims.derived;
  dims["wedge"] = rep.dims.wedge;
  dims["M_prime"] = rep.dims.m_prime;
  dims["K_prime"] = rep.dims.k_prime;
  doc["dims"] = std::move(dims);
  doc["verdict"] = zpd_verdict_token(rep.verdict);
  if (rep.certificate) doc["certificate"] = certificate_to_json(*rep.certificate);
  if (rep.witness) doc["witness"] = witness_to_json(*rep.witness);
  doc["stats"] = stats_to_json(rep.stats, cfg);
  doc["seed"] = rep.seed;
  return doc;
}

Json zad_report_to_json(const ZadReport& rep, const Json& input, const SamplerConfig& cfg) {
  Json doc;
  doc["input"] = input;
  doc["kind"] = "zad";
  doc["field"] = rep.field.str();
  Json dims;
  dims["n"] = rep.dims.n;
  dims["d"] = rep.dims.d;
  dims["tensor"] = rep.dims.tensor;
  dims["LV"] = rep.dims.lv;
  dims["M_V"] = rep.dims.m_v;
  dims["K_V"] = rep.dims.k_v;
  doc["dims"] = std::move(dims);
  doc["verdict"] = zad_verdict_token(rep.verdict);
  if (rep.certificate) doc["certificate"] = certificate_to_json(*rep.certificate);
  if (rep.witness) doc["witness"] = witness_to_json(*rep.witness);
  doc["stats"] = stats_to_json(rep.stats, cfg);
  doc["seed"] = rep.seed;
  return doc;
}

namespace {

struct LoadedInput {
  std::variant<LieAlgebra, LieModule> value;
  std::vector<PairFamily> families;
};

LoadedInput load_input(const Json& input, const Field& f, const std::string& kind) {
  if (input.is_string()) {
    auto parsed = builtins::parse(f, input.get<std::string>());
    return {std::move(parsed.value), std::move(parsed.families)};
  }
  if (kind == "zad") return {module_from_json(input, f), {}};
  return {algebra_from_json(input), {}};
}

VerifyResult check_witness_shape(const Witness& w, const Subspace& span,
                                 const Subspace& mspace,
                                 const std::function<Vec(const CommutingPair&)>& coords,
                                 const std::function<Vec(const CommutingPair&)>& product) {
  for (const auto& row : span.basis())
    if (!dot(w.xi, row).is_zero()) return {false, "xi does not annihilate the recomputed span"};
  if (dot(w.xi, w.mu).is_zero()) return {false, "xi(mu) = 0"};
  if (!mspace.contains(w.mu)) return {false, "mu is not in the M-space"};
  if (w.mu_pairs.empty()) return {false, "witness carries no decomposition of mu"};
  Vec sum_coords, sum_product;
  for (std::size_t k = 0; k < w.mu_pairs.size(); ++k) {
    Vec c = coords(w.mu_pairs[k]);
    Vec b = product(w.mu_pairs[k]);
    if (k == 0) { sum_coords = c; sum_product = b; }
    else { sum_coords = add(sum_coords, c); sum_product = add(sum_product, b); }
  }
  if (!(sum_coords == w.mu)) return {false, "mu decomposition does not sum to mu"};
  if (!is_zero_vec(sum_product)) return {false, "mu decomposition has nonzero bracket sum"};
  return {true, ""};
}

}  // namespace

VerifyResult verify_report(const Json& report) {
  if (!report.is_object()) return {false, "report is not a JSON object"};
  for (const char* key : {"input", "kind", "field", "dims", "verdict", "stats", "seed"})
    if (!report.contains(key)) return {false, std::string("report misses \"") + key + "\""};

  const Field f = Field::parse(report["field"].get<std::string>());
  const std::string kind = report["kind"].get<std::string>();
  const std::string verdict = report["verdict"].get<std::string>();
  SamplerConfig cfg = config_from_json(report["stats"].value("config", Json::object()));
  cfg.seed = report["seed"].get<std::uint64_t>();

  LoadedInput input = load_input(report["input"], f, kind);

  if (kind == "zpd") {
    auto* L = std::get_if<LieAlgebra>(&input.value);
    if (L == nullptr) return {false, "zpd report whose input is a module"};
    const WedgeIndex w = L->wedge();
    Subspace mp = mprime(*L);
    if (report["dims"].value("M_prime", std::size_t{0}) != mp.dim())
      return {false, "recorded M' dimension does not match the input"};
    if (verdict == "ZPD_CERTIFIED") {
      if (!report.contains("certificate")) return {false, "certified verdict without certificate"};
      return verify_certificate(*L, certificate_from_json(report["certificate"], f));
    }
    if (verdict == "UNDECIDED") return {true, ""};
    if (!report.contains("witness")) return {false, "negative verdict without witness"};
    Witness wit = witness_from_json(report["witness"], f);
    Subspace span(f, w.dim());
    if (verdict == "NOT_ZPD_EXHAUSTIVE") {
      span = exhaustive_kprime_gfp(*L, cfg.exhaustive_cap).span;
    } else if (verdict == "NOT_ZPD_PROBABILISTIC") {
      span = kprime_span(*L, cfg, input.families).span;
    } else {
      return {false, "unknown verdict \"" + verdict + "\""};
    }
    if (span.dim() != report["dims"].value("K_prime", std::size_t{0}))
      return {false, "recomputed span dimension differs from the recorded K' bound"};
    return check_witness_shape(
        wit, span, mp,
        [&](const CommutingPair& p) { return wedge_coords(p.x, p.y, w); },
        [&](const CommutingPair& p) { return L->bracket(p.x, p.y); });
  }

  if (kind == "zad") {
    auto* M = std::get_if<LieModule>(&input.value);
    if (M == nullptr) return {false, "zad report whose input is an algebra"};
    Subspace mv = kernel_basis(M->action_map_matrix());
    if (report["dims"].value("M_V", std::size_t{0}) != mv.dim())
      return {false, "recorded M_V dimension does not match the input"};
    if (verdict == "ZAD_CERTIFIED") {
      if (!report.contains("certificate")) return {false, "certified verdict without certificate"};
      return verify_zad_certificate(*M, certificate_from_json(report["certificate"], f));
    }
    if (verdict == "UNDECIDED") return {true, ""};
    if (!report.contains("witness")) return {false, "negative verdict without witness"};
    Witness wit = witness_from_json(report["witness"], f);
    Subspace span(f, M->tensor_dim());
    if (verdict == "NOT_ZAD_EXHAUSTIVE") {
      span = exhaustive_kv_gfp(*M, cfg.exhaustive_cap).span;
    } else if (verdict == "NOT_ZAD_PROBABILISTIC") {
      ModulePairGenerator gen(*M, cfg, input.families);
      std::vector<CommutingPair> batch;
      std::size_t quiet = 0;
      while (span.dim() < mv.dim()) {
        batch.clear();
        if (!gen.next_round(batch)) break;
        bool grew = false;
        for (const auto& pr : batch)
          if (span.insert(tensor_coords(pr.x, pr.y))) grew = true;
        quiet = grew ? 0 : quiet + 1;
        if (quiet >= cfg.window) break;
      }
    } else {
      return {false, "unknown verdict \"" + verdict + "\""};
    }
    if (span.dim() != report["dims"].value("K_V", std::size_t{0}))
      return {false, "recomputed span dimension differs from the recorded K_V bound"};
    return check_witness_shape(
        wit, span, mv,
        [&](const CommutingPair& p) { return tensor_coords(p.x, p.y); },
        [&](const CommutingPair& p) { return M->act(p.x, p.y); });
  }

  return {false, "unknown report kind \"" + kind + "\""};
}

}  // namespace zpd
