#include "ppreal/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ppreal/cyclic_realization.hpp"
#include "ppreal/errors.hpp"
#include "ppreal/json_io.hpp"
#include "ppreal/nerve.hpp"
#include "ppreal/random.hpp"
#include "ppreal/realization.hpp"
#include "ppreal/verify.hpp"

namespace ppreal::cli {

namespace {

std::size_t parse_count(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a non-negative integer, got \"" + s + "\"");
  }
  if (used != s.size() || s.empty() || s[0] == '-')
    throw ParseError("expected a non-negative integer, got \"" + s + "\"");
  return static_cast<std::size_t>(v);
}

std::int64_t parse_integer(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got \"" + s + "\"");
  }
  if (used != s.size()) throw ParseError("expected an integer, got \"" + s + "\"");
  return v;
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw ParseError("expected a rational like 1/4, got \"" + s + "\"");
  r.canonicalize();
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Json load_json(const std::string& source) {
  std::string text = source;
  if (!source.empty() && source[0] == '@') {
    std::ifstream in(source.substr(1));
    if (!in) throw ParseError("cannot read " + source.substr(1));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// "[n]" -> n, "[[n]]" -> n when double is set
std::optional<std::size_t> bracketed(const std::string& t, bool twice) {
  const std::string open = twice ? "[[" : "[";
  const std::string close = twice ? "]]" : "]";
  if (t.size() <= open.size() + close.size() || t.compare(0, open.size(), open) != 0 ||
      t.compare(t.size() - close.size(), close.size(), close) != 0)
    return std::nullopt;
  const std::string inner = t.substr(open.size(), t.size() - open.size() - close.size());
  if (inner.find('[') != std::string::npos) return std::nullopt;
  return parse_count(inner);
}

// Splits tokens so that "product [1] [1]" given as one argument also works.
std::vector<std::string> tokenize(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens)
    for (const auto& piece : split(t, ' '))
      if (!piece.empty()) out.push_back(piece);
  return out;
}

FinitePoset poset_at(const std::vector<std::string>& t, std::size_t& pos) {
  if (pos >= t.size()) throw ParseError("missing poset");
  const std::string& head = t[pos++];
  if (head == "product") {
    FinitePoset p = poset_at(t, pos);
    FinitePoset q = poset_at(t, pos);
    return product(p, q);
  }
  if (!head.empty() && head[0] == '@') return poset_from_json(load_json(head));
  if (auto n = bracketed(head, false)) return standard_poset(*n);
  throw ParseError("unknown poset \"" + head + "\"; use [n], product A B or @file.json");
}

Ppset ppset_at(const std::vector<std::string>& t, std::size_t& pos) {
  if (pos >= t.size()) throw ParseError("missing ppset");
  const std::string& head = t[pos++];
  if (head == "product") {
    Ppset p = ppset_at(t, pos);
    Ppset q = ppset_at(t, pos);
    return Ppset::product(p, q);
  }
  const bool reversed = head == "reversed";
  if (head == "embedded" || reversed) {
    if (reversed && (pos >= t.size() || t[pos++] != "embedded"))
      throw ParseError("expected \"reversed embedded reps@period\"");
    if (pos >= t.size()) throw ParseError("missing reps@period");
    const auto parts = split(t[pos++], '@');
    if (parts.size() != 2) throw ParseError("expected reps@period, like 0,3@5");
    std::vector<std::int64_t> reps;
    for (const auto& r : split(parts[0], ',')) reps.push_back(parse_integer(trim(r)));
    return Ppset::embedded(std::move(reps), parse_integer(parts[1]), reversed);
  }
  if (!head.empty() && head[0] == '@') return ppset_from_json(load_json(head));
  if (auto n = bracketed(head, true)) return Ppset::standard(*n);
  throw ParseError("unknown ppset \"" + head +
                   "\"; use [[n]], embedded r,s@M, product A B or @file.json");
}

void require_consumed(const std::vector<std::string>& t, std::size_t pos) {
  if (pos != t.size()) throw ParseError("unexpected \"" + t[pos] + "\"");
}

struct RawLiteral {
  bool pair_model;
  std::vector<std::int64_t> values;
  std::size_t u = 0;
  std::optional<std::size_t> m;
};

RawLiteral parse_raw(const std::string& text) {
  RawLiteral raw{false, {}, 0, std::nullopt};
  bool have_values = false, have_u = false;
  for (const auto& field : split(text, ';')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in \"" + field + "\"");
    const std::string key = trim(field.substr(0, eq));
    const std::string value = trim(field.substr(eq + 1));
    if (key == "chi" || key == "f") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw ParseError(key + " must be a list like [0,1]");
      for (const auto& v : split(value.substr(1, value.size() - 2), ','))
        raw.values.push_back(parse_integer(trim(v)));
      raw.pair_model = key == "chi";
      have_values = true;
    } else if (key == "u") {
      raw.u = parse_count(value);
      have_u = true;
    } else if (key == "m") {
      raw.m = parse_count(value);
    } else {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  if (!have_values || raw.values.empty())
    throw ParseError("\"" + text + "\" has no chi=[..] or f=[..]");
  if (!raw.pair_model && have_u)
    throw ParseError("\"" + text + "\": u goes with chi, not with f");
  return raw;
}

std::string period_table(const CyclicPoint& p) {
  std::ostringstream os;
  os << p.ppset().describe() << "\n";
  Rational start = 0;
  for (const auto& s : p.segments()) {
    const Rational end = start + s.length;
    os << "  [" << start.get_str() << ", " << end.get_str() << ") ";
    try {
      os << p.ppset().integer_value(s.value);
    } catch (const InvalidPpset&) {
      os << to_string(s.value);
    }
    os << "\n";
    start = end;
  }
  return os.str();
}

std::string values_string(const std::vector<Element>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// ---------------------------------------------------------------- commands

int cmd_hom(const std::string& kind, std::size_t n, std::size_t m, bool count_only,
            const std::string& model, std::ostream& out) {
  if (kind == "delta") {
    const auto maps = enumerate_monotone_maps(standard_poset(n), standard_poset(m));
    if (count_only) {
      out << maps.size() << "\n";
      return 0;
    }
    for (const auto& f : maps) out << values_string(f.values()) << "\n";
    return 0;
  }
  if (kind != "cyclic") throw ParseError("hom kind is delta or cyclic, got \"" + kind + "\"");
  if (model == "nabla") {
    const auto maps = hom_enumerate_nabla(n, m);
    if (count_only) {
      out << maps.size() << "\n";
      return 0;
    }
    for (const auto& f : maps) out << to_string(f) << "\n";
    return 0;
  }
  const auto maps = hom_enumerate_delta_tilde(n, m);
  if (count_only) {
    out << maps.size() << "\n";
    return 0;
  }
  for (const auto& a : maps) out << to_string(a) << "\n";
  return 0;
}

struct ComposeOptions {
  std::vector<std::string> morphisms;
  std::string model = "pair";
  bool dual = false;
  bool via_oracle = false;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::size_t max_n = 4;
};

// The composite computed in the pair model and, separately, by composing
// periodic maps; the second is the oracle for the first.
std::pair<NablaTildeMor, NablaTildeMor> both_routes(const NablaTildeMor& g,
                                                    const NablaTildeMor& f) {
  const DeltaTildeMor by_pairs = compose_delta_tilde(functor_G(g), functor_G(f));
  return {functor_F(by_pairs), compose_nabla(g, f)};
}

int cmd_compose(const ComposeOptions& o, std::ostream& out) {
  if (o.random > 0) {
    Rng rng(o.seed);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < o.random; ++i) {
      const auto n = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(o.max_n)));
      const auto m = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(o.max_n)));
      const auto k = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(o.max_n)));
      const NablaTildeMor f = rng.pick(hom_enumerate_nabla(n, m));
      const NablaTildeMor g = rng.pick(hom_enumerate_nabla(m, k));
      const auto [a, b] = both_routes(g, f);
      bool ok = a == b;
      if (o.dual) ok = ok && dual(compose_nabla(g, f)) == compose_nabla(dual(f), dual(g));
      if (!ok) {
        ++mismatches;
        out << "MISMATCH " << to_string(functor_G(g)) << " o " << to_string(functor_G(f))
            << "\n";
      }
    }
    if (mismatches > 0) return 1;
    out << "OK\n";
    return 0;
  }

  if (o.morphisms.empty() || o.morphisms.size() > 2)
    throw ParseError("compose takes one or two morphism literals (or --random N)");
  NablaTildeMor result = nabla_identity(0);
  bool agrees = true;
  std::string other;
  if (o.morphisms.size() == 2) {
    const std::size_t middle = literal_source(o.morphisms[0]);
    const NablaTildeMor g = parse_morphism(o.morphisms[0], middle).value;
    const NablaTildeMor f = parse_morphism(o.morphisms[1], middle).value;
    if (f.m() != g.n())
      throw ObjectMismatch("cannot compose " + to_string(functor_G(g)) + " : [" +
                           std::to_string(g.n()) + "] -> [" + std::to_string(g.m()) +
                           "] after " + to_string(functor_G(f)) + " : [" +
                           std::to_string(f.n()) + "] -> [" + std::to_string(f.m()) + "]");
    const auto [by_pairs, by_maps] = both_routes(g, f);
    result = o.model == "nabla" ? by_maps : by_pairs;
    agrees = by_pairs == by_maps;
    other = to_string(o.model == "nabla" ? by_pairs : by_maps);
    if (o.dual) {
      const NablaTildeMor reversed = compose_nabla(dual(f), dual(g));
      result = dual(result);
      agrees = agrees && result == reversed && dual(result) == by_maps;
      other = to_string(reversed);
    }
  } else {
    result = parse_morphism(o.morphisms[0], literal_source(o.morphisms[0])).value;
    agrees = functor_F(functor_G(result)) == result;
    other = to_string(functor_G(result));
    if (o.dual) {
      const NablaTildeMor d = dual(result);
      agrees = agrees && dual(d) == result;
      result = d;
    }
  }
  if (o.via_oracle) {
    if (agrees) {
      out << "OK\n";
      return 0;
    }
    out << "MISMATCH " << to_string(result) << " vs " << other << "\n";
    return 1;
  }
  out << (o.model == "nabla" ? to_string(result) : to_string(functor_G(result))) << "\n";
  return 0;
}

int cmd_realize(const std::vector<std::string>& spec, bool f_vector, bool euler,
                const std::string& export_format, std::ostream& out) {
  const auto tokens = tokenize(spec);
  if (export_format == "off") {
    const auto shape = grid_shape(tokens);
    if (!shape)
      throw UnsupportedExportDimension("OFF export needs [n] or product [n] [m]");
    out << export_off(shape->first, shape->second);
    return 0;
  }
  const CellComplex cx = cell_complex(parse_poset(tokens));
  if (export_format == "json") {
    out << complex_to_json(cx).dump(2) << "\n";
    return 0;
  }
  if (f_vector || !euler) {
    const auto f = cx.f_vector();
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << "\n";
  }
  if (euler) out << cx.euler_characteristic() << "\n";
  return 0;
}

int cmd_nerve(const std::vector<std::string>& spec, std::size_t level, bool count_only,
              bool json, std::ostream& out) {
  const NerveSet s = nerve(parse_poset(tokenize(spec)));
  if (count_only) {
    out << s.level_size(level) << "\n";
    return 0;
  }
  if (json) {
    out << nerve_level_to_json(s, level).dump() << "\n";
    return 0;
  }
  for (const auto& sigma : s.level(level)) out << values_string(sigma.values()) << "\n";
  return 0;
}

int cmd_ppset(const std::vector<std::string>& spec, bool normal_form, bool json,
              std::ostream& out) {
  const Ppset p = parse_ppset(tokenize(spec));
  if (json) {
    out << ppset_to_json(p).dump() << "\n";
    return 0;
  }
  if (normal_form) {
    const ArchimedeanNormalForm nf = archimedean_normal_form(p);
    out << "n = " << nf.n << "\n";
    const Ppset std_n = Ppset::standard(nf.n);
    out << "f:";
    for (std::size_t i = 0; i <= nf.n; ++i) {
      const PpsetElement v = nf.to_target(std_n.representative(i));
      out << " " << i << "->";
      try {
        out << p.integer_value(v);
      } catch (const InvalidPpset&) {
        out << to_string(v);
      }
    }
    out << "\ng:";
    for (std::size_t o = 0; o < p.orbit_count(); ++o) {
      const PpsetElement x = p.representative(o);
      try {
        out << " " << p.integer_value(x);
      } catch (const InvalidPpset&) {
        out << " " << to_string(x);
      }
      out << "->" << std_n.integer_value(nf.from_target(x));
    }
    out << "\n";
    return 0;
  }
  out << p.describe() << "\n";
  out << "degree " << p.degree() << ", orbits " << p.orbit_count() << "\n";
  if (p.degree() == 1) {
    const bool arch = is_archimedean(p);
    out << "archimedean " << (arch ? "yes" : "no");
    if (arch) out << ", " << (is_positive(p) ? "positive" : "negative");
    out << "\n";
  }
  return 0;
}

struct PointOptions {
  std::string source;
  std::string bary;
  std::string phase = "0";
  std::string rotate;
  bool homeo = false;
  bool factor = false;
  bool json = false;
};

int cmd_point(const PointOptions& o, std::ostream& out) {
  std::optional<CyclicPoint> p;
  if (!o.bary.empty()) {
    std::vector<Rational> coords;
    for (const auto& c : split(o.bary, ',')) coords.push_back(parse_rational(trim(c)));
    const std::size_t n = coords.size() - 1;
    p = homeo_from_product(BaryPoint(std::move(coords)), CirclePhase(parse_rational(o.phase)),
                           n);
  } else if (!o.source.empty()) {
    p = cyclic_point_from_json(load_json(o.source));
  } else {
    throw ParseError("point needs a JSON point (inline or @file) or --bary");
  }
  if (!o.rotate.empty()) p = rotate(*p, parse_rational(o.rotate));
  if (o.json) {
    out << cyclic_point_to_json(*p).dump() << "\n";
  } else {
    out << period_table(*p);
  }
  if (o.homeo) {
    const auto [b, s] = homeo_to_product(*p);
    out << "barycentric";
    for (const auto& c : b.coords()) out << " " << c.get_str();
    out << "\nphase " << s.value().get_str() << "\n";
  }
  if (o.factor) {
    const CyclicFactorization fac = factor_cyclic_point(*p);
    out << "factors through [[" << fac.n << "]] via";
    for (const auto& v : fac.m.representative().rep_values()) {
      try {
        out << " " << p->ppset().integer_value(v);
      } catch (const InvalidPpset&) {
        out << " " << to_string(v);
      }
    }
    out << "\n" << period_table(fac.q);
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& names, const SuiteOptions& options,
               bool timing, bool list_only, std::ostream& out) {
  if (list_only) {
    for (const auto& s : suites()) out << s.name << "  " << s.description << "\n";
    return 0;
  }
  if (names.empty()) throw ParseError("verify needs a suite name, or all");
  std::vector<std::string> selected;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& s : suites()) selected.push_back(s.name);
    } else {
      selected.push_back(n);
    }
  }
  // reject unknown names before running anything
  for (const auto& n : selected) {
    bool known = false;
    for (const auto& s : suites()) known = known || s.name == n;
    if (!known) run_suite(n, options);
  }
  int status = 0;
  for (const auto& n : selected) {
    const SuiteReport r = run_suite(n, options);
    out << r.name << ": " << r.cases << " cases, " << r.failures.size() << " failures";
    if (timing) out << " (" << std::fixed << std::setprecision(1) << r.wall_ms << " ms)";
    out << "\n";
    for (const auto& f : r.failures) out << "  FAIL " << f << "\n";
    if (!r.passed()) status = 1;
  }
  return status;
}

}  // namespace

FinitePoset parse_poset(const std::vector<std::string>& tokens) {
  const auto t = tokenize(tokens);
  std::size_t pos = 0;
  FinitePoset p = poset_at(t, pos);
  require_consumed(t, pos);
  return p;
}

std::optional<std::pair<std::size_t, std::size_t>> grid_shape(
    const std::vector<std::string>& tokens) {
  const auto t = tokenize(tokens);
  if (t.size() == 1)
    if (auto n = bracketed(t[0], false)) return std::make_pair(*n, std::size_t{0});
  if (t.size() == 3 && t[0] == "product") {
    auto n = bracketed(t[1], false);
    auto m = bracketed(t[2], false);
    if (n && m) return std::make_pair(*n, *m);
  }
  return std::nullopt;
}

Ppset parse_ppset(const std::vector<std::string>& tokens) {
  const auto t = tokenize(tokens);
  std::size_t pos = 0;
  Ppset p = ppset_at(t, pos);
  require_consumed(t, pos);
  return p;
}

std::size_t literal_source(const std::string& text) {
  return parse_raw(text).values.size() - 1;
}

MorphismLiteral parse_morphism(const std::string& text, std::size_t default_m) {
  const RawLiteral raw = parse_raw(text);
  const std::size_t n = raw.values.size() - 1;
  const std::size_t m = raw.m.value_or(default_m);
  if (raw.pair_model) {
    std::vector<std::size_t> chi;
    for (auto v : raw.values) {
      if (v < 0) throw ParseError("chi values are non-negative");
      chi.push_back(static_cast<std::size_t>(v));
    }
    return {true, functor_F(DeltaTildeMor(n, m, std::move(chi), raw.u))};
  }
  return {false, NablaTildeMor(n, m, raw.values)};
}

namespace {

// CLI11 splits a token of the form "[a,b]" into list items when it fills a
// multi-valued positional; a leading marker hides the outer brackets.
constexpr char kShield = '\x01';

std::string shield_brackets(const std::string& token) {
  if (token.size() >= 2 && token.front() == '[' && token.back() == ']')
    return kShield + token;
  return token;
}

std::string unshield_brackets(const std::string& token) {
  if (!token.empty() && token.front() == kShield) return token.substr(1);
  return token;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Posets, periodic posets, the cyclic category and their realizations"};
  app.name("ppreal");
  app.require_subcommand(1);

  std::string hom_kind, hom_model = "pair";
  std::size_t hom_n = 0, hom_m = 0;
  bool hom_count = false;
  auto* hom = app.add_subcommand("hom", "enumerate Hom([n],[m]) in the simplex or cyclic category");
  hom->add_option("kind", hom_kind, "delta or cyclic")->required()
      ->check(CLI::IsMember({"delta", "cyclic"}));
  hom->add_option("n", hom_n, "source object")->required();
  hom->add_option("m", hom_m, "target object")->required();
  hom->add_flag("--count-only", hom_count, "print the number of morphisms");
  hom->add_option("--model", hom_model, "listing model for cyclic: pair or nabla")
      ->check(CLI::IsMember({"pair", "nabla"}));

  ComposeOptions co;
  auto* compose = app.add_subcommand("compose", "compose cyclic morphisms: compose g f is g o f");
  compose->add_option("morphisms", co.morphisms, "\"chi=[..];u=r[;m=k]\" or \"f=[..][;m=k]\"");
  compose->add_option("--model", co.model, "pair or nabla")
      ->check(CLI::IsMember({"pair", "nabla"}));
  compose->add_flag("--dual", co.dual, "apply the self-duality to the result");
  compose->add_flag("--via-oracle", co.via_oracle,
                    "cross-check the pair model against the periodic model");
  compose->add_option("--random", co.random, "check N random composable pairs");
  compose->add_option("--seed", co.seed, "seed for --random");
  compose->add_option("--max-n", co.max_n, "largest object for --random");

  std::vector<std::string> realize_spec;
  bool realize_f = false, realize_euler = false;
  std::string realize_export;
  auto* realize = app.add_subcommand("realize", "cell structure of the realization of a poset");
  realize->add_option("poset", realize_spec, "[n], product A B or @file.json")
      ->required();
  realize->add_flag("--f-vector", realize_f, "cells per dimension");
  realize->add_flag("--euler", realize_euler, "Euler characteristic");
  realize->add_option("--export", realize_export, "off or json")
      ->check(CLI::IsMember({"off", "json"}));

  std::vector<std::string> verify_names;
  SuiteOptions verify_options;
  std::size_t verify_max_n = 0, verify_samples = 0;
  bool verify_timing = false, verify_list = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", verify_names, "suite names, or all");
  verify->add_option("--seed", verify_options.seed, "random seed");
  auto* max_n_opt = verify->add_option("--max-n", verify_max_n, "size cap");
  auto* samples_opt = verify->add_option("--samples", verify_samples, "random samples");
  verify->add_flag("--timing", verify_timing, "report wall time");
  verify->add_flag("--list", verify_list, "list the suites");

  std::vector<std::string> nerve_spec;
  std::size_t nerve_level = 0;
  bool nerve_count = false, nerve_json = false;
  auto* nerve_cmd = app.add_subcommand("nerve", "simplices of the nerve at one level");
  nerve_cmd->add_option("poset", nerve_spec, "[n], product A B or @file.json")
      ->required();
  nerve_cmd->add_option("--level", nerve_level, "simplex dimension");
  nerve_cmd->add_flag("--count-only", nerve_count, "print the number of simplices");
  nerve_cmd->add_flag("--json", nerve_json, "JSON output");

  std::vector<std::string> ppset_spec;
  bool ppset_normal = false, ppset_json = false;
  auto* ppset_cmd = app.add_subcommand("ppset", "inspect a periodic poset");
  ppset_cmd->add_option("ppset", ppset_spec, "[[n]], embedded r,s@M, product A B or @file.json")
      ->required();
  ppset_cmd->add_flag("--normal-form", ppset_normal, "isomorphism with [[n]]");
  ppset_cmd->add_flag("--json", ppset_json, "JSON output");

  PointOptions po;
  auto* point = app.add_subcommand("point", "inspect a point of the cyclic realization");
  point->add_option("point", po.source, "inline JSON or @file.json");
  point->add_option("--bary", po.bary, "build from barycentric coordinates, like 1/2,1/2");
  point->add_option("--phase", po.phase, "circle coordinate for --bary");
  point->add_option("--rotate", po.rotate, "rotate by a rational angle");
  point->add_flag("--homeo", po.homeo, "coordinates in |[n]| x S^1");
  point->add_flag("--factor", po.factor, "factor through a standard ppset");
  point->add_flag("--json", po.json, "JSON output");

  std::vector<std::string> argv_storage{"ppreal"};
  for (const auto& a : args) argv_storage.push_back(shield_brackets(a));
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto* tokens : {&realize_spec, &nerve_spec, &ppset_spec, &co.morphisms, &verify_names})
    for (auto& token : *tokens) token = unshield_brackets(token);
  po.source = unshield_brackets(po.source);

  try {
    if (*hom) return cmd_hom(hom_kind, hom_n, hom_m, hom_count, hom_model, out);
    if (*compose) return cmd_compose(co, out);
    if (*realize)
      return cmd_realize(realize_spec, realize_f, realize_euler, realize_export, out);
    if (*verify) {
      if (*max_n_opt) verify_options.max_n = verify_max_n;
      if (*samples_opt) verify_options.samples = verify_samples;
      return cmd_verify(verify_names, verify_options, verify_timing, verify_list, out);
    }
    if (*nerve_cmd) return cmd_nerve(nerve_spec, nerve_level, nerve_count, nerve_json, out);
    if (*ppset_cmd) return cmd_ppset(ppset_spec, ppset_normal, ppset_json, out);
    if (*point) return cmd_point(po, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ppreal::cli
