#include "gsp4/cli.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gsp4/cache.hpp"
#include "gsp4/chains.hpp"
#include "gsp4/finite_field.hpp"
#include "gsp4/oracle.hpp"

namespace gsp4::cli {

using nlohmann::json;

namespace {

const std::set<std::int64_t> kSmallPrimes{2, 3, 5};

DominantCoweight parse_coweight(const std::string& text) {
  static const std::map<std::string, DominantCoweight> names{
      {"nu0", coweights::nu0}, {"nu1", coweights::nu1}, {"nu2", coweights::nu2}, {"2nu2", coweights::two_nu2}};
  if (auto it = names.find(text); it != names.end()) return it->second;
  try {
    return DominantCoweight::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("invalid coweight '" + text + "': " + e.what());
  }
}

void check_primes(const RunConfig& c, bool oracle) {
  if (c.primes.empty()) throw UsageError("no primes given");
  for (auto p : c.primes) {
    if (!is_prime(p)) throw UsageError("not a prime: " + std::to_string(p));
    if (oracle && !c.allow_large_primes && !kSmallPrimes.contains(p))
      throw UsageError("prime " + std::to_string(p) + " is outside {2,3,5}; pass --allow-large-primes to force");
  }
}

std::int64_t require_ell(const RunConfig& c) {
  if (!c.ell) throw UsageError("--ell is required");
  if (*c.ell < 3 || !is_prime(*c.ell)) throw UsageError("--ell must be an odd prime, got " + std::to_string(*c.ell));
  return *c.ell;
}

std::optional<ConvolutionCache> open_cache(const RunConfig& c) {
  if (c.cache_dir) return ConvolutionCache(*c.cache_dir);
  return std::nullopt;
}

std::string str(const BigInt& n) { return to_decimal(n); }

json coefficients_json(const std::map<DominantCoweight, BigInt>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k.to_string()] = str(v);
  return j;
}

json character_json(const CharacterElement& x) {
  json j = json::object();
  for (const auto& [w, s] : x.terms()) j[w.to_string()] = s.to_string();
  return j;
}

json matrix_json(const HeckeMatrix& m) {
  json j = json::array();
  for (const auto& row : m.entries) j.push_back({row[0].to_string(), row[1].to_string()});
  return j;
}

json identities_json(const std::vector<IdentityCheck>& checks, bool& all) {
  json j = json::array();
  for (const auto& c : checks) {
    all = all && c.holds;
    j.push_back({{"name", c.name}, {"holds", c.holds}});
  }
  return j;
}

json eigen_json(const EigenData& e) {
  json j{{"p", e.p}, {"a1", str(e.a1)}, {"a2", str(e.a2)}};
  if (e.label) j["label"] = *e.label;
  return j;
}

json flags_json(const ConditionFlags& f) {
  return {{"ell_differs_from_p", f.ell_differs_from_p},
          {"ell_coprime_to_p2_minus_1", f.ell_coprime},
          {"congruence", f.congruence},
          {"alpha_noncongruence", f.alpha_noncongruence},
          {"trace_noncongruence", f.trace_noncongruence}};
}

Report finish(const RunConfig& c, json inputs, json result, bool passed, std::string text) {
  Report r;
  r.exit_code = passed ? kOk : kMathFailure;
  r.body = {{"schema_version", kSchemaVersion},
            {"command", c.command},
            {"inputs", std::move(inputs)},
            {"result", std::move(result)},
            {"status", passed ? "pass" : "fail"}};
  r.text = std::move(text);
  return r;
}

Report run_identity(const RunConfig& c) {
  check_primes(c, true);
  auto cache = open_cache(c);
  std::ostringstream out;
  auto cert = verify_hecke_identity();
  bool ok = cert.passed;
  json result;
  result["symbolic"] = {{"passed", cert.passed},
                        {"lhs", character_json(cert.lhs)},
                        {"expected", character_json(cert.expected)},
                        {"square", cert.square.to_string()}};
  out << "symbolic: " << (cert.passed ? "pass" : "FAIL") << "\n";
  out << "  S(c_nu2)^2 = " << cert.lhs.to_string() << "\n";
  out << "  c_nu2^2 = " << cert.square.to_string() << "\n";
  if (cert.first_mismatch) out << "  mismatch: " << *cert.first_mismatch << "\n";

  json per_prime = json::object();
  for (auto p : c.primes) {
    auto conv = convolve_cached(coweights::nu2, coweights::nu2, static_cast<int>(p), cache ? &*cache : nullptr,
                                c.window);
    BigInt P = p;
    std::vector<BigInt> expected{1, P + 1, (P + 1) * (P * P + 1)};
    std::vector<BigInt> got;
    for (const auto& nu : {coweights::two_nu2, coweights::nu1, coweights::nu0}) {
      auto it = conv.coefficients.find(nu);
      got.push_back(it == conv.coefficients.end() ? BigInt(0) : it->second);
    }
    bool triple = got == expected && conv.coefficients.size() == 3;
    bool symbolic_match = true;
    for (const auto& [lambda, n] : conv.coefficients)
      symbolic_match = symbolic_match && evaluate_integer(cert.square.coefficient(lambda), static_cast<int>(p)) == n;
    bool basepoint = true;
    for (const auto& [lambda, n] : conv.coefficients)
      for (const auto& target : coset_representatives(static_cast<int>(p), lambda, 3, c.seed))
        basepoint = basepoint && convolution_coefficient(coweights::nu2, coweights::nu2, target, c.window) == n;
    bool pass = triple && symbolic_match && basepoint;
    ok = ok && pass;
    json triple_json = json::array();
    for (const auto& g : got) triple_json.push_back(str(g));
    per_prime[std::to_string(p)] = {{"coefficients", coefficients_json(conv.coefficients)},
                                    {"triple", triple_json},
                                    {"matches_expected_triple", triple},
                                    {"matches_symbolic", symbolic_match},
                                    {"basepoint_independent", basepoint},
                                    {"passed", pass}};
    out << "p=" << p << ": (" << str(got[0]) << "," << str(got[1]) << "," << str(got[2]) << ") "
        << (pass ? "pass" : "FAIL") << "\n";
  }
  result["oracle"] = per_prime;
  out << "seed: " << c.seed << "\n";
  return finish(c, {{"primes", c.primes}, {"window", c.window}, {"seed", c.seed}}, result, ok, out.str());
}

Report run_satake(const RunConfig& c) {
  check_primes(c, true);
  auto mu = parse_coweight(c.coweight);
  std::ostringstream out;
  json result;
  const bool tabulated = in_satake_table(mu);
  CharacterElement table;
  if (tabulated) {
    table = satake_table(mu);
    result["table"] = character_json(table);
    out << "S(c" << mu.to_string() << ") = " << table.to_string() << "\n";
  } else {
    result["table"] = nullptr;
    out << mu.to_string() << " is outside the tabulated span\n";
  }
  bool ok = true;
  json per_prime = json::object();
  for (auto p : c.primes) {
    auto s = satake_oracle(mu, static_cast<int>(p), c.window);
    json coeffs = json::object();
    for (const auto& [w, v] : s.coefficients) coeffs[w.to_string()] = v.to_string();
    json counts = json::object();
    for (const auto& [w, n] : s.stratum_counts) counts[w.to_string()] = str(n);
    json entry{{"sign", s.sign}, {"stratum_counts", counts}, {"coefficients", coeffs}};
    if (tabulated) {
      bool match = s.coefficients == evaluate(table, static_cast<int>(p));
      ok = ok && match;
      entry["matches_table"] = match;
      out << "p=" << p << ": oracle " << (match ? "matches" : "DIFFERS FROM") << " table\n";
    } else {
      out << "p=" << p << ":";
      for (const auto& [w, v] : s.coefficients) out << " " << w.to_string() << "=" << v.to_string();
      out << "\n";
    }
    per_prime[std::to_string(p)] = entry;
  }
  result["oracle"] = per_prime;
  return finish(c, {{"coweight", mu.to_string()}, {"primes", c.primes}, {"window", c.window}}, result, ok,
                out.str());
}

Report run_convolve(const RunConfig& c) {
  check_primes(c, true);
  auto mu = parse_coweight(c.mu), nu = parse_coweight(c.nu);
  auto cache = open_cache(c);
  std::ostringstream out;
  json per_prime = json::object();
  for (auto p : c.primes) {
    auto r = convolve_cached(mu, nu, static_cast<int>(p), cache ? &*cache : nullptr, c.window);
    per_prime[std::to_string(p)] = coefficients_json(r.coefficients);
    out << "p=" << p << ":";
    for (auto it = r.coefficients.rbegin(); it != r.coefficients.rend(); ++it)
      out << " " << str(it->second) << "*c" << it->first.to_string();
    out << "\n";
  }
  return finish(c, {{"mu", mu.to_string()}, {"nu", nu.to_string()}, {"primes", c.primes}, {"window", c.window}},
                {{"coefficients", per_prime}}, true, out.str());
}

Report run_count(const RunConfig& c) {
  check_primes(c, true);
  ChainPattern pattern;
  try {
    pattern = parse_chain_pattern(c.pattern);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown chain pattern '" + c.pattern + "'");
  }
  std::ostringstream out;
  json per_prime = json::object();
  for (auto p : c.primes) {
    auto n = count_chain_pattern(pattern, static_cast<int>(p), c.dim);
    per_prime[std::to_string(p)] = std::to_string(n);
    out << n << "\n";
  }
  json inputs{{"pattern", to_string(pattern)}, {"primes", c.primes}};
  if (c.dim) inputs["dim"] = *c.dim;
  return finish(c, inputs, {{"counts", per_prime}}, true, out.str());
}

Report run_dl_points(const RunConfig& c) {
  check_primes(c, false);
  std::ostringstream out;
  json per_prime = json::object();
  for (auto p : c.primes) {
    auto n = dl_point_count(static_cast<int>(p), c.degree);
    per_prime[std::to_string(p)] = std::to_string(n);
    out << "p=" << p << " k=" << c.degree << ": " << n << "\n";
  }
  return finish(c, {{"primes", c.primes}, {"degree", c.degree}}, {{"points", per_prime}}, true, out.str());
}

Report run_matrix(const RunConfig& c) {
  if (c.kind != "lr" && c.kind != "ss") throw UsageError("--kind must be lr or ss, got '" + c.kind + "'");
  const bool lr = c.kind == "lr";
  std::ostringstream out;
  json result;
  HeckeMatrix m = lr ? lr_matrix() : ss_matrix();
  result["matrix"] = matrix_json(m);
  result["determinant"] = specialize_to_eigenvalues(m.determinant()).to_string();
  bool ok = true;
  result["identities"] = identities_json(lr ? det_lr_identities() : det_ss_identities(), ok);
  out << (lr ? "T_lr" : "T_ss") << " =\n";
  for (const auto& row : m.entries) out << "  [ " << row[0].to_string() << " | " << row[1].to_string() << " ]\n";
  out << "det (T0 = 1) = " << result["determinant"].get<std::string>() << "\n";
  out << "identities: " << (ok ? "pass" : "FAIL") << "\n";

  json inputs{{"kind", c.kind}};
  if (c.input) {
    auto records = load_eigendata(*c.input);
    std::optional<std::int64_t> ell;
    if (c.ell) ell = require_ell(c);
    json evals = json::array();
    for (const auto& e : records) {
      auto d = lr ? det_lr_eval(e, ell) : det_ss_eval(e, ell);
      json item{{"input", eigen_json(e)}, {"determinant", str(d.value)}};
      if (d.residue) item["determinant_mod_ell"] = str(*d.residue);
      evals.push_back(item);
      out << (e.label ? *e.label : "record") << ": det = " << str(d.value);
      if (d.residue) out << " = " << str(*d.residue) << " mod " << *ell;
      out << "\n";
    }
    result["evaluations"] = evals;
    inputs["records"] = records.size();
    if (ell) inputs["ell"] = *ell;
  }
  return finish(c, inputs, result, ok, out.str());
}

Report run_check(const RunConfig& c) {
  if (!c.input) throw UsageError("--input is required");
  const auto ell = require_ell(c);
  if (c.u && *c.u != 1 && *c.u != -1) throw UsageError("--u must be 1 or -1");
  auto records = load_eigendata(*c.input);
  std::ostringstream out;
  json reports = json::array();
  for (const auto& e : records) {
    json item{{"input", eigen_json(e)}};
    std::string name = e.label ? *e.label : "p=" + std::to_string(e.p);
    auto lr = det_lr_eval(e, ell);
    auto ss = det_ss_eval(e, ell);
    item["det_lr"] = str(lr.value);
    item["det_lr_mod"] = str(*lr.residue);
    item["det_ss"] = str(ss.value);
    item["det_ss_mod"] = str(*ss.residue);
    try {
      auto rep = check_level_raising(e, ell, c.u);
      item["status"] = "ok";
      item["special"] = rep.special;
      item["u"] = rep.u ? json(*rep.u) : json(nullptr);
      item["depth"] = rep.depth ? json(*rep.depth) : json(nullptr);
      item["condition_flags"] = flags_json(rep.condition_flags);
      json branches = json::array();
      for (const auto& b : rep.branches) {
        json bj{{"u", b.u}, {"pair_value", str(b.pair_value)}, {"flags", flags_json(b.flags)}, {"special", b.special}};
        bj["depth"] = b.depth ? json(*b.depth) : json(nullptr);
        branches.push_back(bj);
      }
      item["branches"] = branches;
      item["generic_nonlr"] = rep.generic_nonlr;
      item["weil_lint"] = {{"within_bound", rep.weil.within_bound}, {"note", rep.weil.note}};
      item["assumption_caveat"] = rep.assumption_caveat;
      out << name << ": " << (rep.special ? "special" : "not special");
      if (rep.special) out << " u=" << (*rep.u > 0 ? "+1" : "-1") << " depth=" << *rep.depth;
      out << " det_lr=" << str(lr.value) << " (" << str(*lr.residue) << " mod " << ell << ")"
          << " det_ss=" << str(ss.value) << " (" << str(*ss.residue) << " mod " << ell << ")";
      if (!rep.weil.within_bound) out << " [lint: " << rep.weil.note << "]";
      out << "\n";
    } catch (const NonTemperedError& err) {
      item["status"] = "rejected";
      item["reason"] = err.what();
      item["rejected_u"] = err.u();
      out << name << ": rejected: " << err.what() << "\n";
    }
    reports.push_back(item);
  }
  json inputs{{"ell", ell}, {"records", records.size()}};
  if (c.u) inputs["u"] = *c.u;
  return finish(c, inputs, {{"reports", reports}}, true, out.str());
}

BigInt integer_field(const json& v, const std::string& key, std::size_t index) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_decimal(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw UsageError("record " + std::to_string(index) + ": field '" + key +
                   "' must be an integer or a decimal string");
}

}  // namespace

std::vector<std::int64_t> parse_prime_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("invalid prime list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty prime list");
  return out;
}

std::vector<EigenData> parse_eigendata(const json& doc) {
  static const std::set<std::string> known{"label", "p", "a0", "a1", "a2"};
  std::vector<json> items;
  if (doc.is_array()) items.assign(doc.begin(), doc.end());
  else items.push_back(doc);
  std::vector<EigenData> out;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const json& r = items[i];
    const std::string at = "record " + std::to_string(i) + ": ";
    if (!r.is_object()) throw UsageError(at + "expected an object");
    for (const auto& [k, v] : r.items())
      if (!known.contains(k)) throw UsageError(at + "unknown field '" + k + "'");
    for (const char* k : {"p", "a1", "a2"})
      if (!r.contains(k)) throw UsageError(at + "missing field '" + k + "'");
    EigenData e;
    if (r.contains("label")) {
      if (!r["label"].is_string()) throw UsageError(at + "label must be a string");
      e.label = r["label"].get<std::string>();
      if (!labels.insert(*e.label).second) throw UsageError(at + "duplicate label '" + *e.label + "'");
    }
    if (!r["p"].is_number_integer()) throw UsageError(at + "p must be an integer");
    e.p = r["p"].get<std::int64_t>();
    if (!is_prime(e.p)) throw UsageError(at + "p must be prime, got " + std::to_string(e.p));
    if (r.contains("a0") && integer_field(r["a0"], "a0", i) != 1)
      throw UsageError(at + "trivial central character required (a0 must be 1)");
    e.a1 = integer_field(r["a1"], "a1", i);
    e.a2 = integer_field(r["a2"], "a2", i);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<EigenData> load_eigendata(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return parse_eigendata(doc);
}

Report run(const RunConfig& config) {
  try {
    if (config.window < 1) throw UsageError("--window must be positive");
    if (config.command == "identity") return run_identity(config);
    if (config.command == "satake") return run_satake(config);
    if (config.command == "convolve") return run_convolve(config);
    if (config.command == "count") return run_count(config);
    if (config.command == "dl-points") return run_dl_points(config);
    if (config.command == "matrix") return run_matrix(config);
    if (config.command == "check") return run_check(config);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const WindowError& e) {
    throw UsageError(std::string("window overflow: ") + e.what());
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

std::string render(const Report& report, Format format) {
  if (format == Format::json) return report.body.dump(2) + "\n";
  return report.text;
}

}  // namespace gsp4::cli
