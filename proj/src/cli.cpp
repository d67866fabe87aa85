#include "galsym/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "galsym/serialize.hpp"
#include "galsym/verify.hpp"

namespace galsym::cli {

namespace {

using io::json;

constexpr int kDefaultTwoPrecision = 20;
constexpr int kDefaultOddPrecision = 12;

/// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    buffer << file.rdbuf();
  }
  return json::parse(buffer.str());
}

/// Inline JSON when the text starts with '{', otherwise a file path.
json inline_or_file(const std::string& text, std::istream& in) {
  if (!text.empty() && text.front() == '{') return json::parse(text);
  return read_json(text, in);
}

/// "CP^2xCP^3" -> generators w1, w2 (a single factor is named w).
SpaceModel parse_space_label(const std::string& label) {
  std::vector<int> truncs;
  std::size_t pos = 0;
  while (pos < label.size()) {
    if (label.compare(pos, 3, "CP^") != 0) throw UsageError("malformed space: " + label);
    pos += 3;
    std::size_t end = pos;
    while (end < label.size() && std::isdigit(static_cast<unsigned char>(label[end]))) ++end;
    if (end == pos || end - pos > 4) throw UsageError("malformed space: " + label);
    truncs.push_back(std::stoi(label.substr(pos, end - pos)));
    pos = end;
    if (pos < label.size()) {
      if (label[pos] != 'x') throw UsageError("malformed space: " + label);
      ++pos;
      if (pos == label.size()) throw UsageError("malformed space: " + label);
    }
  }
  if (truncs.empty()) throw UsageError("malformed space: " + label);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < truncs.size(); ++i) {
    gens.push_back({truncs.size() == 1 ? "w" : "w" + std::to_string(i + 1), truncs[i]});
  }
  return SpaceModel(gens);
}

std::vector<int> parse_bits(const std::string& text) {
  std::vector<int> bits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "0" && item != "1") throw UsageError("expected comma-separated bits, got " + text);
    bits.push_back(item == "1");
  }
  if (bits.empty()) throw UsageError("expected comma-separated bits, got " + text);
  return bits;
}

/// Options shared by the Kervaire subcommands.
struct KervaireOptions {
  std::string mode = "constant";
  std::string sigma;
  int invariant = -1;
  std::string table;
  int precision = kDefaultTwoPrecision;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "paper-preset | constant-invariant | custom-oracle")
        ->check(CLI::IsMember({"preset", "paper-preset", "constant", "constant-invariant",
                               "custom", "custom-oracle"}));
    cmd->add_option("--sigma", sigma, "2-adic unit as an odd integer");
    cmd->add_option("--invariant", invariant, "constant invariant bit (instead of --sigma)")
        ->check(CLI::Range(0, 1));
    cmd->add_option("--table", table, "custom invariants for m = 0, 1, ... as 1,0,1");
    cmd->add_option("--precision", precision, "2-adic precision of --sigma")
        ->check(CLI::PositiveNumber);
  }

  KervaireCoeffs build(int max_m) const {
    const KervaireMode m = parse_kervaire_mode(mode);
    if (m == KervaireMode::custom_oracle) {
      if (table.empty()) throw UsageError("custom mode needs --table");
      return solve_coeffs(table_oracle(parse_bits(table)), max_m);
    }
    if (!table.empty()) throw UsageError("--table is only used in custom mode");
    if (!sigma.empty() && invariant >= 0) throw UsageError("give --sigma or --invariant, not both");
    if (m == KervaireMode::constant_invariant && sigma.empty()) {
      if (invariant < 0) throw UsageError("constant mode needs --sigma or --invariant");
      KervaireCoeffs c = solve_coeffs(constant_oracle(invariant), max_m);
      c.mode = KervaireMode::constant_invariant;
      return c;
    }
    if (sigma.empty()) throw UsageError("preset mode needs --sigma");
    const PadicUnit u(2, precision, Integer(parse_rational(sigma)));
    return kervaire_rule(m)(u, max_m);
  }
};

Integer parse_integer(const std::string& text) {
  const Rational q = parse_rational(text);
  if (denominator(q) != 1) throw UsageError("expected an integer, got " + text);
  return numerator(q);
}

json cmd_wu(int m, bool oracle) {
  if (m < 0) throw UsageError("--m must be non-negative");
  const GradedClass v2 = oracle ? wu_square_oracle(m) : wu_square_formula(m);
  return {{"space", v2.space().label()}, {"class", io::terms_to_json(v2)}};
}

json cmd_lgenus(const std::string& space_label, int series) {
  if (series >= 0) {
    json entries = json::array();
    for (const auto& q : l_series(series)) entries.push_back(to_string(q));
    return {{"series", entries}};
  }
  if (space_label.empty()) throw UsageError("lgenus needs --space or --series");
  const SpaceModel space = parse_space_label(space_label);
  const GradedClass l = l_class_cp(space);
  return {{"space", space.label()},
          {"ring", l.ring().name()},
          {"class", io::terms_to_json(l)},
          {"signature", to_string(pair_fundamental(l))}};
}

json cmd_kervaire_f(const KervaireOptions& opts, int count) {
  if (count < 1) throw UsageError("--count must be at least 1");
  const KervaireCoeffs coeffs = opts.build(count - 1);
  json out = io::to_json(coeffs);
  json pairings = json::array();
  for (int m = 0; m < count; ++m) pairings.push_back(check_pairing(coeffs, m));
  out["pairings"] = pairings;
  if (coeffs.mode == KervaireMode::paper_preset) out["note"] = kPaperPresetNote;
  return out;
}

json cmd_kervaire_class(const KervaireOptions& opts, const std::string& roots_arg, int cp,
                        int max_degree, std::istream& in) {
  if (roots_arg.empty() == (cp < 0)) throw UsageError("give exactly one of --roots and --cp");
  const RootData roots = cp >= 0 ? RootData::generator_copies(SpaceModel::cp(cp), 0, cp + 1)
                                 : io::roots_from_json(inline_or_file(roots_arg, in));
  const int top = max_degree >= 0 ? max_degree : roots.space().dimension();
  const int needed = coefficients_needed(top);
  KervaireCoeffs coeffs;
  if (needed > 0) coeffs = opts.build(needed - 1);
  const GradedClass k = kervaire_class(coeffs, roots, top);
  return {{"space", roots.space().label()},
          {"ring", k.ring().name()},
          {"class", io::terms_to_json(k)},
          {"coeffs", io::to_json(coeffs)}};
}

struct Document {
  EtaleManifold manifold;
  EtaleStructure structure;
};

Document parse_document(const json& doc) {
  auto m = doc.find("manifold");
  auto s = doc.find("structure");
  if (!doc.is_object() || m == doc.end() || s == doc.end()) {
    throw std::invalid_argument("input must be {\"manifold\": ..., \"structure\": ...}");
  }
  return {io::etale_manifold_from_json(*m), io::etale_structure_from_json(*s)};
}

AdelicUnit parse_sigma(const std::string& text, const EtaleManifold& x, int precision_override) {
  if (!text.empty() && text.front() == '{') return io::adelic_from_json(json::parse(text));
  const Integer n = parse_integer(text);
  std::map<std::uint64_t, int> precisions;
  for (const auto& [p, c] : x.components()) {
    precisions[p] = precision_override > 0 ? precision_override
                    : p == 2               ? kDefaultTwoPrecision
                                           : kDefaultOddPrecision;
  }
  return AdelicUnit::from_integer(n, precisions);
}

json cmd_act(const std::string& input, const std::string& sigma_text, bool inverse,
             const std::string& mode, int precision, std::istream& in) {
  const Document doc = parse_document(read_json(input, in));
  AdelicUnit sigma = parse_sigma(sigma_text, doc.manifold, precision);
  if (inverse) sigma = sigma.inverse();
  const auto result =
      galois_etale(doc.manifold, doc.structure, sigma, kervaire_rule(parse_kervaire_mode(mode)));
  return {{"manifold", io::to_json(result.manifold)},
          {"structure", io::to_json(result.structure)}};
}

json cmd_validate(const std::string& input, std::istream& in) {
  const Document doc = parse_document(read_json(input, in));
  json primes = json::object();
  bool all_valid = true;
  for (const auto& [p, st] : doc.structure.components()) {
    auto it = doc.manifold.components().find(p);
    if (it == doc.manifold.components().end()) {
      throw std::invalid_argument("no manifold data at prime " + std::to_string(p));
    }
    std::string verdict = "valid";
    if (p != 2) {
      try {
        if (!validate_odd(std::get<FormalManifoldOdd>(it->second), std::get<OddStructure>(st))) {
          verdict = "invalid";
        }
      } catch (const std::domain_error&) {
        verdict = "indeterminate";
      }
    } else if (!(std::get<TwoAdicStructure>(st).space() == doc.manifold.space())) {
      verdict = "invalid";
    }
    all_valid = all_valid && verdict == "valid";
    primes[std::to_string(p)] = verdict;
  }
  return {{"primes", primes}, {"valid", all_valid}};
}

json cmd_verify(const std::string& suite, std::uint64_t seed, int trials, int& exit_code) {
  json reports = json::array();
  int passed = 0;
  int failed = 0;
  const std::vector<std::string> names =
      suite == "all" ? suite_names() : std::vector<std::string>{suite};
  json failures = json::array();
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, seed, trials);
    passed += r.passed;
    failed += r.failed;
    for (const auto& f : r.failures) failures.push_back(name + ": " + f);
  }
  exit_code = failed == 0 ? kExitOk : kExitDomainError;
  json out = {{"suite", suite}, {"passed", passed}, {"failed", failed}};
  if (!failures.empty()) out["failures"] = failures;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"Galois actions on p-adic and 2-adic structure sets of formal manifolds",
               "galsym"};
  app.require_subcommand(1);

  int wu_m = -1;
  bool wu_oracle = false;
  auto* wu = app.add_subcommand("wu", "squared Wu class of CP^{2m+1}");
  wu->add_option("--m", wu_m, "index m")->required();
  wu->add_flag("--oracle", wu_oracle, "solve Sq(v) = w instead of using the binomial formula");

  std::string lg_space;
  int lg_series = -1;
  auto* lgenus = app.add_subcommand("lgenus", "L-class of a product of projective spaces");
  lgenus->add_option("--space", lg_space, "e.g. CP^4 or CP^2xCP^2");
  lgenus->add_option("--series", lg_series, "print x/tanh x coefficients through x^{2n}");

  KervaireOptions kf_opts;
  int kf_count = 0;
  auto* kf = app.add_subcommand("kervaire-f", "solve for the coefficients f_1, f_3, ...");
  kf_opts.attach(kf);
  kf->add_option("--count", kf_count, "number of coefficients")->required();

  KervaireOptions kc_opts;
  std::string kc_roots;
  int kc_cp = -1;
  int kc_max_degree = -1;
  auto* kc = app.add_subcommand("kervaire-class", "Kervaire class of bundle root data");
  kc_opts.attach(kc);
  kc->add_option("--roots", kc_roots, "root data JSON (inline or file)");
  kc->add_option("--cp", kc_cp, "use the normal roots (N+1) w of CP^N")->check(CLI::NonNegativeNumber);
  kc->add_option("--max-degree", kc_max_degree, "truncate above this degree");

  std::string act_input, act_sigma, act_mode = "constant";
  bool act_inverse = false;
  int act_precision = 0;
  auto* act = app.add_subcommand("act", "apply an abelianized Galois element");
  act->add_option("--input", act_input, "document {manifold, structure}, '-' for stdin")
      ->required();
  act->add_option("--sigma", act_sigma, "integer, or JSON {\"p\": {precision, residue}}")
      ->required();
  act->add_flag("--inverse", act_inverse, "act by the inverse of --sigma");
  act->add_option("--mode", act_mode, "Kervaire coefficients: paper-preset | constant-invariant")
      ->check(CLI::IsMember({"preset", "paper-preset", "constant", "constant-invariant"}));
  act->add_option("--precision", act_precision, "precision for an integer --sigma")
      ->check(CLI::PositiveNumber);

  std::string val_input;
  auto* validate = app.add_subcommand("validate", "check structure constraints");
  validate->add_option("--input", val_input, "document {manifold, structure}, '-' for stdin")
      ->required();

  std::string v_suite;
  std::uint64_t v_seed = 0;
  int v_trials = 100;
  auto* verify = app.add_subcommand("verify", "run a seeded property suite");
  verify->add_option("--suite", v_suite, "group-laws | additivity | kervaire-roundtrip | "
                                         "integrality | wu | all")
      ->required();
  verify->add_option("--seed", v_seed, "random seed")->required();
  verify->add_option("--trials", v_trials, "number of trials")->check(CLI::NonNegativeNumber);

  auto emit_error = [&](const std::string& message, int code) {
    out << json{{"error", message}}.dump() << "\n";
    return code;
  };

  std::vector<const char*> argv{"galsym"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit_error(e.what(), kExitUsage);
  }

  try {
    int exit_code = kExitOk;
    json result;
    if (*wu) {
      result = cmd_wu(wu_m, wu_oracle);
    } else if (*lgenus) {
      result = cmd_lgenus(lg_space, lg_series);
    } else if (*kf) {
      result = cmd_kervaire_f(kf_opts, kf_count);
    } else if (*kc) {
      result = cmd_kervaire_class(kc_opts, kc_roots, kc_cp, kc_max_degree, in);
    } else if (*act) {
      result = cmd_act(act_input, act_sigma, act_inverse, act_mode, act_precision, in);
    } else if (*validate) {
      result = cmd_validate(val_input, in);
    } else if (*verify) {
      if (v_suite != "all") {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), v_suite) == names.end()) {
          throw UsageError("unknown suite: " + v_suite);
        }
      }
      result = cmd_verify(v_suite, v_seed, v_trials, exit_code);
    }
    out << result.dump() << "\n";
    return exit_code;
  } catch (const UsageError& e) {
    return emit_error(e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return emit_error(e.what(), kExitDomainError);
  }
}

}  // namespace galsym::cli
