#include "chargen/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "chargen/acceptance.hpp"
#include "chargen/calogero.hpp"
#include "chargen/errors.hpp"
#include "chargen/genfun.hpp"
#include "chargen/kostant.hpp"
#include "chargen/multiplicities.hpp"
#include "chargen/poly_text.hpp"

namespace chargen::cli {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// text format

namespace {

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    if (j.empty()) out += path + " = {}\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out += path + " = []\n";
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_boolean()) {
    out += path + " = " + (j.get<bool>() ? "true" : "false") + "\n";
  } else if (j.is_string()) {
    out += path + " = " + j.get<std::string>() + "\n";
  } else {
    out += path + " = " + j.dump() + "\n";
  }
}

Json leaf(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  if (v == "[]") return Json::array();
  if (v == "{}") return Json::object();
  return v;
}

}  // namespace

std::string to_text(const Json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

Json from_text(std::string_view text) {
  Json root = Json::object();
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw ParseError("text output line without ' = ': " + line);
    const std::string path = line.substr(0, eq);
    Json* node = &root;
    std::size_t i = 0;
    while (i < path.size()) {
      if (path[i] == '[') {
        const auto close = path.find(']', i);
        const std::size_t idx = std::stoul(path.substr(i + 1, close - i - 1));
        if (node->is_null()) *node = Json::array();
        while (node->size() <= idx) node->push_back(nullptr);
        node = &(*node)[idx];
        i = close + 1;
      } else {
        if (path[i] == '.') ++i;
        const auto end = path.find_first_of(".[", i);
        const std::string key = path.substr(i, end == std::string::npos ? end : end - i);
        if (node->is_null()) *node = Json::object();
        node = &(*node)[key];
        i = end == std::string::npos ? path.size() : end;
      }
    }
    *node = leaf(line.substr(eq + 3));
  }
  return root;
}

// ---------------------------------------------------------------------------
// commands

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string algebra = "a3";
  std::string format = "json";
  std::string golden_dir;
  bool timings = false;

  std::string m, n, k, caps, method = "all", kind, level = "quick", which;
  int criterion = 0;
  bool with_x = false;
};

struct Result {
  Json payload = Json::object();
  std::string verification = "n/a";  // PASS | FAIL | n/a
  Json timing = Json::object();
};

std::string str(const Integer& z) { return to_string(z); }

Weight weight_arg(const std::string& s, const char* flag) {
  if (s.empty()) throw UsageError(std::string("missing required option ") + flag);
  return parse_weight(s);
}

Weight dominant_arg(const std::string& s, const char* flag) {
  const Weight w = weight_arg(s, flag);
  if (!is_dominant(w)) throw NonDominantWeight("weight " + format_weight(w) + " is not dominant");
  return w;
}

std::vector<int> int_list(std::string_view s, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto end = std::min(s.find(',', pos), s.size());
    const std::string item(s.substr(pos, end - pos));
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("invalid ") + what + " '" + std::string(s) + "'");
    }
    pos = end + 1;
  }
  return out;
}

// --caps, else CHARGEN_CAPS, else the command default; a single number
// applies to every variable.
std::vector<int> caps_arg(const Options& o, std::size_t n, int fallback) {
  std::string spec = o.caps;
  if (spec.empty())
    if (const char* env = std::getenv("CHARGEN_CAPS")) spec = env;
  std::vector<int> caps = spec.empty() ? std::vector<int>{fallback} : int_list(spec, "caps");
  if (caps.size() == 1) caps.assign(n, caps[0]);
  if (caps.size() != n)
    throw UsageError("expected " + std::to_string(n) + " caps, got '" + spec + "'");
  for (int c : caps)
    if (c < 0) throw UsageError("caps must be non-negative");
  return caps;
}

Json table_row(const std::string& m, const std::string& n, const std::string& value) {
  Json row = Json::object();
  if (!m.empty()) row["m"] = m;
  if (!n.empty()) row["n"] = n;
  row["value"] = value;
  return row;
}

std::string status(bool ok) { return ok ? "PASS" : "FAIL"; }

Result cmd_char(const Options& o, const GoldenSet& golden) {
  Result r;
  const Algebra alg = parse_algebra(o.algebra);
  const Weight m = dominant_arg(o.m, "-m");
  const RootSystem& sys = RootSystem::get(alg);
  if (alg != Algebra::A3) {
    r.payload["x"] = format_poly(weyl_character(sys, m));
    return r;
  }
  const CharPoly chi = solve_character(m);
  const LaurentPoly x = char_to_x(chi, golden);
  r.payload["z"] = format_poly(chi.body);
  if (o.with_x) r.payload["x"] = format_poly(x);
  const bool ok = x == weyl_character(sys, m);
  r.payload["matches_weyl"] = ok;
  r.verification = status(ok);
  return r;
}

Result cmd_dim(const Options& o, const GoldenSet&) {
  Result r;
  const Algebra alg = parse_algebra(o.algebra);
  const Weight m = dominant_arg(o.m, "-m");
  const Integer d = weyl_dim(RootSystem::get(alg), m);
  r.payload["value"] = str(d);
  if (alg == Algebra::A3) r.verification = status(d == a3_dim_formula(m));
  return r;
}

Result cmd_weights(const Options& o, const GoldenSet& golden) {
  Result r;
  const Algebra alg = parse_algebra(o.algebra);
  const Weight m = dominant_arg(o.m, "-m");
  const RootSystem& sys = RootSystem::get(alg);
  const LaurentPoly x = alg == Algebra::A3 ? char_to_x(solve_character(m), golden)
                                           : weyl_character(sys, m);
  Json table = Json::array();
  Integer total = 0;
  for (const auto& t : x.terms()) {
    const auto e = t.monomial.exponents(3);
    const Integer v = to_integer(t.coefficient, "multiplicity");
    total += v;
    table.push_back(table_row(format_weight(m), format_weight({e[0], e[1], e[2]}), str(v)));
  }
  r.payload["table"] = std::move(table);
  r.payload["total"] = str(total);
  r.verification = status(total == weyl_dim(sys, m));
  return r;
}

Result cmd_mult(const Options& o, const GoldenSet& golden) {
  Result r;
  const Algebra alg = parse_algebra(o.algebra);
  const Weight m = dominant_arg(o.m, "-m");
  const Weight n = weight_arg(o.n, "-n");
  if (alg != Algebra::A3) {
    if (o.method != "direct" && o.method != "all")
      throw UnsupportedWeight("only the direct method is available for " + o.algebra);
    const Integer v = to_integer(
        weyl_character(RootSystem::get(alg), m).coefficient(Monomial(std::span<const int>(n))));
    r.payload["direct"] = str(v);
    return r;
  }
  std::vector<MultMethod> methods;
  if (o.method == "all")
    methods = {MultMethod::Closed, MultMethod::Kostant, MultMethod::GenFun, MultMethod::Direct};
  else
    methods = {parse_mult_method(o.method)};

  std::optional<Integer> first;
  bool agree = true;
  for (MultMethod method : methods) {
    const std::string key(to_string(method));
    const bool available = (method != MultMethod::Closed || closed_mu_supported(n)) &&
                           (method != MultMethod::GenFun ||
                            (is_dominant(n) && n[0] + n[1] + n[2] <= 2));
    if (!available) {
      if (o.method != "all") throw UnsupportedWeight("method " + key + " does not cover n=" + format_weight(n));
      r.payload[key] = "unsupported";
      continue;
    }
    const Integer v = multiplicity(m, n, method, golden);
    r.payload[key] = str(v);
    if (first && *first != v) agree = false;
    if (!first) first = v;
  }
  if (methods.size() > 1) {
    r.payload["agree"] = agree;
    r.verification = status(agree);
  }
  return r;
}

Result cmd_kostant(const Options& o, const GoldenSet& golden) {
  Result r;
  if (o.k.empty()) throw UsageError("missing required option -k");
  const std::vector<int> k = int_list(o.k, "root coordinates");
  if (k.size() != 3) throw UsageError("expected three root coordinates, got '" + o.k + "'");
  const Integer closed = kostant_Z(k[0], k[1], k[2]);
  r.payload["value"] = str(closed);
  if (k[0] >= 0 && k[1] >= 0 && k[2] >= 0) {
    const TruncatedSeries series = kostant_Z_series({k[0], k[1], k[2]}, golden);
    const LaurentPoly& s = series.coeff(k);
    r.payload["series"] = format_poly(s);
    r.verification = status(s == LaurentPoly(s.vars(), closed));
  }
  return r;
}

GenFun named_genfun(const std::string& which, const GoldenSet& golden) {
  std::string w = which;
  std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::tolower(c); });
  w.erase(std::remove(w.begin(), w.end(), '_'), w.end());
  if (w == "g") return build_G(golden);
  if (w == "e") return build_E(golden);
  if (w == "gr") return build_G_real(golden);
  if (w == "er") return build_E_real(golden);
  throw UnknownKind("unknown generating function '" + which + "' (expected G, E, G_R, E_R or A)");
}

Result cmd_genfun_expand(const Options& o, const GoldenSet& golden) {
  Result r;
  if (o.which.empty()) throw UsageError("missing generating function name");
  Json table = Json::array();
  if (o.which == "A" || o.which == "a") {
    const Weight n = weight_arg(o.n, "-n");
    const std::vector<int> caps = caps_arg(o, 3, 3);
    for (const auto& [m, v] : expand_A(build_A(n, golden), caps))
      if (v != 0) table.push_back(table_row(format_weight(m), format_weight(n), str(v)));
    r.payload["name"] = "A_" + format_weight(n);
  } else {
    const GenFun g = named_genfun(o.which, golden);
    const std::vector<int> caps = caps_arg(o, g.expansion_vars.size(), 3);
    for (const auto& [e, c] : expand_genfun(g, caps).nonzero_terms())
      table.push_back(table_row(format_exponent(e).substr(1, format_exponent(e).size() - 2), "",
                                format_poly(c)));
    r.payload["name"] = g.name;
  }
  r.payload["table"] = std::move(table);
  return r;
}

Result cmd_genfun_verify(const Options& o, const GoldenSet& golden) {
  Result r;
  const std::string w = o.which.empty() ? "G" : o.which;
  const GenFun g = named_genfun(w, golden);
  const bool real = g.name == "G_R";
  if (g.name != "G" && !real)
    throw UnknownKind("the PDE check applies to G and G_R only");
  const std::vector<int> caps = caps_arg(o, real ? 2 : 3, real ? 6 : 4);
  const TruncatedSeries res = verify_pde(g, real ? delta_t_real() : delta_t(), caps);
  r.payload["name"] = g.name;
  r.payload["caps"] = format_exponent(caps);
  if (auto e = res.first_nonzero()) {
    r.payload["first_nonzero"] = format_exponent(*e);
    r.payload["residual"] = format_poly(res.coeff(*e));
    r.verification = status(false);
  } else {
    r.verification = status(true);
  }
  return r;
}

Result cmd_real(const Options& o, const GoldenSet& golden) {
  Result r;
  if (o.m.empty()) throw UsageError("missing required option -m");
  const std::vector<int> ab = int_list(o.m, "weight");
  if (ab.size() != 2 || ab[0] < 0 || ab[1] < 0)
    throw UsageError("real expects -m m1,m2 with non-negative labels");
  const int full[] = {ab[0], ab[1], ab[0]};
  const LaurentPoly gr = expand_genfun(build_G_real(golden), ab).coeff(ab);
  const LaurentPoly g = expand_genfun(build_G(golden), full).coeff(full);
  const LaurentPoly er = expand_genfun(build_E_real(golden), ab).coeff(ab);
  const Integer dim = a3_real_dim_formula(ab[0], ab[1]);
  r.payload["highest_weight"] = format_weight({ab[0], ab[1], ab[0]});
  r.payload["z"] = format_poly(gr);
  r.payload["dim"] = str(dim);
  r.verification =
      status(gr == g && er == LaurentPoly(er.vars(), dim) && gr == solve_character({ab[0], ab[1], ab[0]}).body);
  return r;
}

Result cmd_restricted(const Options& o, const GoldenSet& golden) {
  Result r;
  const Algebra alg = parse_algebra(o.algebra);
  const RestrictedKind kind = parse_restricted_kind(o.kind.empty() ? "first" : o.kind);
  if (o.m.empty()) throw UsageError("missing required option -m");
  const std::vector<int> e = int_list(o.m, "index");
  const std::size_t want = kind == RestrictedKind::Mixed ? 2 : 1;
  if (e.size() != want || std::any_of(e.begin(), e.end(), [](int v) { return v < 0; }))
    throw UsageError("restricted " + std::string(to_string(kind)) + " expects " +
                     (want == 1 ? "-m k" : "-m k1,k3") + " with non-negative entries");
  const GenFun g = build_restricted(alg, kind, golden);
  const LaurentPoly c = expand_genfun(g, e).coeff(e);
  const Weight hw = kind == RestrictedKind::First   ? Weight{e[0], 0, 0}
                    : kind == RestrictedKind::Third ? Weight{0, 0, e[0]}
                                                    : Weight{e[0], 0, e[1]};
  const RootSystem& sys = RootSystem::get(alg);
  Bindings z;
  z.emplace("z1", weyl_character(sys, {1, 0, 0}));
  z.emplace("z2", weyl_character(sys, {0, 1, 0}));
  z.emplace("z3", weyl_character(sys, {0, 0, 1}));
  const bool ok = poly_subst(c, z, x_vars()) == weyl_character(sys, hw);
  r.payload["name"] = g.name;
  r.payload["highest_weight"] = format_weight(hw);
  r.payload["z"] = format_poly(c);
  r.payload["matches_weyl"] = ok;
  r.verification = status(ok);
  return r;
}

Result cmd_selftest(const Options& o, const GoldenSet& golden) {
  Result r;
  const Level level = parse_level(o.level);
  std::vector<CriterionResult> results;
  if (o.criterion != 0) {
    if (o.criterion < 1 || o.criterion > kCriterionCount)
      throw UsageError("--criterion must be between 1 and " + std::to_string(kCriterionCount));
    results.push_back(run_criterion(o.criterion, level, golden));
  } else {
    results = run_acceptance(level, golden);
  }
  Json rows = Json::array();
  bool all = true;
  for (const auto& c : results) {
    Json row = Json::object();
    row["id"] = std::to_string(c.id);
    row["name"] = c.name;
    row["status"] = status(c.passed);
    row["detail"] = c.detail;
    rows.push_back(std::move(row));
    std::ostringstream secs;
    secs.setf(std::ios::fixed);
    secs.precision(3);
    secs << c.seconds;
    r.timing["criterion_" + std::to_string(c.id)] = secs.str();
    all = all && c.passed;
  }
  r.payload["level"] = o.level;
  r.payload["criteria"] = std::move(rows);
  r.verification = status(all);
  return r;
}

using Handler = Result (*)(const Options&, const GoldenSet&);

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact A3 characters, generating functions and weight multiplicities", "chargen"};
  app.require_subcommand(1);
  app.add_option("--algebra", o.algebra, "a3 | b3 | c3")->capture_default_str();
  app.add_option("--format", o.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--golden-dir", o.golden_dir,
                 "directory of .poly files overriding the built-in formulas");
  app.add_flag("--timings", o.timings, "append wall-clock timings to the output");

  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    commands.emplace_back(s, h);
    return s;
  };
  auto weight_opt = [&](CLI::App* s, const char* flag, std::string& target, const char* help) {
    s->add_option(flag, target, help);
  };

  auto* c_char = sub("char", "character of the irrep with highest weight m", cmd_char);
  weight_opt(c_char, "-m,--weight", o.m, "highest weight, e.g. 1,0,1");
  c_char->add_flag("--x", o.with_x, "also print the character in x-variables");

  auto* c_dim = sub("dim", "dimension by the Weyl formula", cmd_dim);
  weight_opt(c_dim, "-m,--weight", o.m, "highest weight");

  auto* c_weights = sub("weights", "all weights and multiplicities", cmd_weights);
  weight_opt(c_weights, "-m,--weight", o.m, "highest weight");

  auto* c_mult = sub("mult", "multiplicity of weight n in irrep m", cmd_mult);
  weight_opt(c_mult, "-m,--weight", o.m, "highest weight");
  weight_opt(c_mult, "-n,--target", o.n, "weight whose multiplicity is wanted");
  c_mult->add_option("--method", o.method, "closed | kostant | genfun | direct | all")
      ->check(CLI::IsMember({"closed", "kostant", "genfun", "direct", "all"}))
      ->capture_default_str();

  auto* c_kostant = sub("kostant", "Kostant partition function Z[k1,k2,k3]", cmd_kostant);
  c_kostant->add_option("-k", o.k, "root coordinates, e.g. 1,1,1");

  auto* c_expand = sub("genfun-expand", "series coefficients of G, E, G_R, E_R or A", cmd_genfun_expand);
  c_expand->add_option("which", o.which, "G | E | G_R | E_R | A");
  c_expand->add_option("--caps", o.caps, "per-variable caps (default CHARGEN_CAPS or 3)");
  weight_opt(c_expand, "-n,--target", o.n, "target weight for A");

  auto* c_verify = sub("genfun-verify", "series check of the PDE for G or G_R", cmd_genfun_verify);
  c_verify->add_option("which", o.which, "G | G_R")->capture_default_str();
  c_verify->add_option("--caps", o.caps, "per-variable caps (default 4 for G, 6 for G_R)");

  auto* c_real = sub("real", "character of the self-conjugate irrep (m1,m2,m1)", cmd_real);
  weight_opt(c_real, "-m,--weight", o.m, "m1,m2");

  auto* c_restricted = sub("restricted", "B3/C3 characters along (m,0,0), (0,0,m), (m1,0,m3)", cmd_restricted);
  c_restricted->add_option("--kind", o.kind, "first | third | mixed");
  weight_opt(c_restricted, "-m,--index", o.m, "k or k1,k3");

  auto* c_self = sub("selftest", "run the acceptance suites", cmd_selftest);
  c_self->add_option("--level", o.level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  c_self->add_option("--criterion", o.criterion, "run a single criterion (1-10)");

  Outcome result;
  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("usage error: ") + e.what() + "\n";
    return result;
  }

  Json envelope = Json::object();
  try {
    const GoldenSet golden =
        o.golden_dir.empty() ? GoldenSet::embedded() : GoldenSet::from_directory(o.golden_dir);
    for (const auto& [s, handler] : commands) {
      if (!s->parsed()) continue;
      Json command = Json::object();
      command["name"] = s->get_name();
      command["algebra"] = o.algebra;
      for (const CLI::Option* opt : s->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        const std::string key =
            opt->get_snames().empty() ? opt->get_single_name() : opt->get_snames().front();
        command[key] = opt->get_expected_min() == 0 ? Json(true) : Json(opt->as<std::string>());
      }
      const auto start = std::chrono::steady_clock::now();
      Result r = handler(o, golden);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      envelope["command"] = std::move(command);
      envelope["result"] = std::move(r.payload);
      envelope["verification"] = r.verification;
      if (o.timings) {
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(3);
        t << secs;
        r.timing["total"] = t.str();
      }
      if (!r.timing.empty()) envelope["timing"] = std::move(r.timing);
      if (r.verification == "FAIL") result.exit_code = kExitVerifyFail;
    }
  } catch (const ConsistencyError& e) {
    result.exit_code = kExitVerifyFail;
    result.err = std::string("verification error: ") + e.what() + "\n";
    return result;
  } catch (const std::exception& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }
  result.out = o.format == "text" ? to_text(envelope) : envelope.dump(2) + "\n";
  return result;
}

}  // namespace chargen::cli
