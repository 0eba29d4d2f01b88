#include "kisin/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kisin {

Counterexample counterexample(char variant, int p) {
  Counterexample c;
  if (variant == 'a') {
    GroupShape shape = GroupShape::restriction(4, 1, p);
    Cochar tau = Cochar::from_blocks({{2, 0, 2, 0}});
    WeylElt w({from_cycles(4, {{1, 2, 4, 3}})});
    c.datum = make_datum(shape, tau, w);
    c.mu = Cochar::from_blocks({{2 * p - 1, p, p, 1}});
    c.expected = {Cochar::from_blocks({{1, 1, 1, 1}}), Cochar::from_blocks({{2, 1, 1, 0}})};
  } else if (variant == 'b') {
    GroupShape shape = GroupShape::restriction(3, 2, p);
    Cochar tau = Cochar::from_blocks({{2, 0, 1}, {0, 0, 1}});
    WeylElt w({from_cycles(3, {{1, 2, 3}}), identity_permutation(3)});
    c.datum = make_datum(shape, tau, w);
    c.mu = Cochar::from_blocks({{p + 1, 0, 0}, {p, p, 0}});
    c.expected = {Cochar::from_blocks({{1, 0, 1}, {0, 0, 1}}),
                  Cochar::from_blocks({{1, 1, 0}, {1, 0, 0}})};
  } else {
    throw InvalidInput(std::string("unknown counterexample '") + variant + "'");
  }
  std::sort(c.expected.begin(), c.expected.end());
  return c;
}

namespace {

int get_int(const Json &config, const char *key) {
  if (!config.contains(key))
    throw InvalidInput(std::string("missing field '") + key + "'");
  const Json &x = config[key];
  if (x.is_number_integer())
    return x.get<int>();
  if (x.is_string()) {
    try {
      std::size_t used = 0;
      int v = std::stoi(x.get<std::string>(), &used);
      if (used == x.get<std::string>().size())
        return v;
    } catch (const std::exception &) {
    }
  }
  throw InvalidInput(std::string("field '") + key + "' must be an integer");
}

std::optional<int> opt_int(const Json &config, const char *key) {
  if (!config.contains(key) || config[key].is_null())
    return std::nullopt;
  return get_int(config, key);
}

Integer get_integer(const Json &x) {
  if (x.is_number_integer())
    return Integer(x.get<long long>());
  if (x.is_string()) {
    Rational r = parse_rational(x.get<std::string>());
    if (is_integral(r))
      return numerator(r);
  }
  throw InvalidInput("expected an integer");
}

struct Instance {
  FrobeniusDatum raw;
  std::optional<AlcoveReduction> reduction;
  FrobeniusDatum datum; // the datum all computations use
  std::optional<Integer> caruso_m;
};

GroupShape parse_shape(const Json &config) {
  const int p = get_int(config, "p");
  const int n = get_int(config, "n");
  if (n < 1)
    throw InvalidInput("n must be positive");
  if (config.contains("eps")) {
    if (!config["eps"].is_array())
      throw InvalidInput("eps must be an array");
    std::vector<int> eps;
    for (const auto &x : config["eps"]) {
      if (!x.is_number_integer())
        throw InvalidInput("eps entries must be integers");
      eps.push_back(x.get<int>());
    }
    return GroupShape(n, std::move(eps), p);
  }
  int f = opt_int(config, "f").value_or(1);
  if (f < 1)
    throw InvalidInput("f must be positive");
  return GroupShape::restriction(n, f, p);
}

bool flag(const Json &config, const char *key) {
  return config.contains(key) && config[key].is_boolean() && config[key].get<bool>();
}

Instance parse_instance(const Json &config) {
  if (!config.is_object())
    throw InvalidInput("config must be a JSON object");
  GroupShape shape = parse_shape(config);
  if (!config.contains("b") || !config["b"].is_object())
    throw InvalidInput("missing b: give {\"caruso\": {\"m\": ...}} or {\"tau\": ..., \"w\": ...}");
  const Json &b = config["b"];
  Instance inst;
  if (b.contains("caruso")) {
    if (config.contains("eps"))
      throw InvalidInput("Caruso data need f, not an explicit eps pattern");
    const Integer m = get_integer(b["caruso"].at("m"));
    const int n = shape.n(), f = shape.blocks(), p = shape.p();
    inst.caruso_m = m;
    inst.raw = caruso_unreduced(n, f, p, m);
    inst.datum = caruso_datum(n, f, p, m);
    inst.reduction = alcove_reduce(inst.raw);
    if (!(inst.reduction->datum.wt == inst.datum.wt))
      throw TheoremViolation("Caruso reduction is not reproducible");
    return inst;
  }
  if (!b.contains("tau") || !b.contains("w"))
    throw InvalidInput("b needs both tau and w");
  inst.raw = make_datum(shape, cochar_from_json(b["tau"]), weyl_from_json(b["w"]));
  if (inst.raw.alcove_ok) {
    inst.datum = inst.raw;
  } else if (flag(config, "alcove_reduce")) {
    inst.reduction = alcove_reduce(inst.raw);
    inst.datum = inst.reduction->datum;
  } else {
    throw InvalidInput("fixed point " + to_string(inst.raw.e) +
                       " is not in the alcove; pass --alcove-reduce");
  }
  return inst;
}

Cochar parse_mu(const Json &config, const GroupShape &shape, const char *key = "mu") {
  if (!config.contains(key))
    throw InvalidInput(std::string("missing field '") + key + "'");
  Cochar mu = cochar_from_json(config[key]);
  if (!fits(shape, mu))
    throw InvalidInput(std::string(key) + " does not match the group shape");
  if (std::string(key) == "mu" && !is_dominant(mu))
    throw InvalidInput("mu must be dominant");
  return mu;
}

Json header(const std::string &command, const Json &config) {
  Json instance = config;
  instance.erase("out");
  return Json{{"schema", schema_version}, {"command", command}, {"instance", instance}};
}

Json strata_json(const std::vector<Stratum> &strata) {
  Json out = Json::array();
  for (const auto &s : strata)
    out.push_back(to_json(s));
  return out;
}

std::string render(const Json &j) { return j.dump(2) + "\n"; }

RunResult cmd_normal_form(const Json &config) {
  Instance inst = parse_instance(config);
  Json out = header("normal-form", config);
  if (inst.caruso_m)
    out["caruso"] = Json{{"m", to_json(*inst.caruso_m)}, {"simple", true}};
  out["raw"] = to_json(inst.raw);
  out["z"] = inst.reduction ? to_json(inst.reduction->z) : Json(nullptr);
  out["datum"] = to_json(inst.datum);
  return {exit_ok, render(out), {}};
}

RunResult cmd_strata(const Json &config) {
  Instance inst = parse_instance(config);
  Cochar mu = parse_mu(config, inst.datum.shape);
  auto strata = enumerate_strata(inst.datum, mu);
  Json out = header("strata", config);
  out["datum"] = to_json(inst.datum);
  out["mu"] = to_json(mu);
  out["count"] = strata.size();
  out["strata"] = strata_json(strata);
  return {exit_ok, render(out), {}};
}

RunResult cmd_graph(const Json &config) {
  Instance inst = parse_instance(config);
  Cochar mu = parse_mu(config, inst.datum.shape);
  StrataGraph g = build_graph(inst.datum, mu);
  Pi0Report pi0 = pi0_report(g);
  std::string format = config.value("out", std::string("json"));
  if (format == "dot")
    return {exit_ok, to_dot(g, pi0), {}};
  if (format != "json")
    throw InvalidInput("--out must be json or dot");
  Json out = header("graph", config);
  out["datum"] = to_json(inst.datum);
  out["mu"] = to_json(mu);
  out.update(to_json(g, pi0));
  return {exit_ok, render(out), {}};
}

RunResult cmd_multicopy(const Json &config) {
  Instance inst = parse_instance(config);
  Cochar mu = parse_mu(config, inst.datum.shape);
  OmegaOneAnalysis a = analyze_omega1(inst.datum, mu, opt_int(config, "d"));
  Json out = header("multicopy", config);
  out["datum"] = to_json(inst.datum);
  out["mu"] = to_json(mu);
  out.update(to_json(a));
  if (a.recursion && !a.recursion->ok)
    return {exit_theorem, render(out),
            "recursion check failed at block " + std::to_string(a.recursion->failing_block + 1)};
  return {exit_ok, render(out), {}};
}

RunResult cmd_chain(const Json &config) {
  Instance inst = parse_instance(config);
  Cochar mu = parse_mu(config, inst.datum.shape);
  std::vector<std::pair<Cochar, Cochar>> pairs;
  if (config.contains("from") || config.contains("to")) {
    pairs.emplace_back(parse_mu(config, inst.datum.shape, "from"),
                       parse_mu(config, inst.datum.shape, "to"));
  } else {
    auto lams = enumerate_lambdas(inst.datum, mu, max_enumeration());
    for (std::size_t i = 1; i < lams.size(); ++i)
      pairs.emplace_back(lams.front(), lams[i]);
  }
  Json chains = Json::array();
  for (const auto &[from, to] : pairs)
    chains.push_back(Json{{"from", to_json(from)},
                          {"to", to_json(to)},
                          {"steps", to_json(chain_gl3(inst.datum, mu, from, to))}});
  Json out = header("chain-gl3", config);
  out["datum"] = to_json(inst.datum);
  out["mu"] = to_json(mu);
  out["chains"] = chains;
  return {exit_ok, render(out), {}};
}

RunResult cmd_oracle(const Json &config) {
  Instance inst = parse_instance(config);
  Cochar mu = parse_mu(config, inst.datum.shape);
  FiniteField F(inst.datum.shape.p(), opt_int(config, "field_deg").value_or(1));
  int box = 1;
  if (auto b = opt_int(config, "box")) {
    box = *b;
  } else {
    for (const auto &lam : enumerate_lambdas(inst.datum, mu, max_enumeration()))
      for (const auto &x : lam.flat())
        box = std::max(box, abs(x).convert_to<int>());
  }
  auto points = kisin_points(inst.datum, mu, F, box);
  std::map<Cochar, int> by_label;
  Json pts = Json::array();
  for (const auto &pt : points) {
    ++by_label[pt.label];
    pts.push_back(Json{{"lambda", to_json(pt.label)}, {"matrix", to_json(pt.g)}});
  }
  Json labels = Json::array();
  for (const auto &[lam, count] : by_label)
    labels.push_back(Json{{"lambda", to_json(lam)}, {"count", count}});
  Json out = header("oracle-count", config);
  out["datum"] = to_json(inst.datum);
  out["mu"] = to_json(mu);
  out["field"] = F.name();
  out["box"] = box;
  out["count"] = points.size();
  out["labels"] = labels;
  out["points"] = pts;
  return {exit_ok, render(out), {}};
}

RunResult cmd_verify(const Json &config) {
  std::string variant = config.value("variant", std::string());
  if (variant != "a" && variant != "b")
    throw InvalidInput("verify-counterexample needs variant a or b");
  const int p = get_int(config, "p");
  if (!is_prime(p))
    throw InvalidInput("p must be prime");
  Counterexample c = counterexample(variant[0], p);
  if (!c.datum.alcove_ok)
    throw PreconditionError("fixed point " + to_string(c.datum.e) + " is not in the alcove");
  StrataGraph g = build_graph(c.datum, c.mu);
  Pi0Report pi0 = pi0_report(g);

  std::vector<Cochar> found;
  for (const auto &s : g.vertices)
    found.push_back(s.lam);
  bool strata_match = found == c.expected;
  bool all_points = std::all_of(g.vertices.begin(), g.vertices.end(), [](const Stratum &s) {
    return s.singleton.verdict == Singleton::proven;
  });
  bool pi0_ok = pi0.status == Pi0Status::exact && pi0.value == 2;

  Json expected = Json::array();
  for (const auto &lam : c.expected)
    expected.push_back(to_json(lam));
  Json out = header("verify-counterexample", config);
  out["variant"] = variant;
  out["datum"] = to_json(c.datum);
  out["mu"] = to_json(c.mu);
  out["expected"] = expected;
  out.update(to_json(g, pi0));
  out["checks"] = Json{{"fixed_point_in_alcove", c.datum.alcove_ok},
                       {"strata_match", strata_match},
                       {"all_singleton", all_points},
                       {"pi0_exact_2", pi0_ok}};
  bool ok = strata_match && all_points && pi0_ok;
  out["match"] = ok;
  if (!ok)
    return {exit_theorem, render(out), "counterexample " + variant + " does not match at p = " +
                                           std::to_string(p)};
  return {exit_ok, render(out), {}};
}

} // namespace

RunResult run(const std::string &command, const Json &raw) {
  if (raw.is_object() && raw.contains("instance"))
    return run(command, Json(raw["instance"]));
  const Json &config = raw;
  try {
    if (command == "normal-form")
      return cmd_normal_form(config);
    if (command == "strata")
      return cmd_strata(config);
    if (command == "graph")
      return cmd_graph(config);
    if (command == "multicopy")
      return cmd_multicopy(config);
    if (command == "chain-gl3")
      return cmd_chain(config);
    if (command == "oracle-count")
      return cmd_oracle(config);
    if (command == "verify-counterexample")
      return cmd_verify(config);
    return {exit_invalid, {}, "unknown command '" + command + "'"};
  } catch (const InvalidInput &e) {
    return {exit_invalid, {}, e.what()};
  } catch (const nlohmann::json::exception &e) {
    return {exit_invalid, {}, e.what()};
  } catch (const PreconditionError &e) {
    return {exit_precondition, {}, e.what()};
  } catch (const TheoremViolation &e) {
    return {exit_theorem, {}, e.what()};
  }
}

RunResult run_args(const std::vector<std::string> &args) {
  CLI::App app{"Semi-module strata of Kisin varieties", "kisin"};
  std::string command, variant, config_path;
  std::string p, n, f, m, mu, d, field_deg, box, out, from, to, tau, w;
  bool alcove_reduce = false;
  app.add_option("command", command,
                 "normal-form | strata | graph | multicopy | chain-gl3 | oracle-count | "
                 "verify-counterexample")
      ->required();
  app.add_option("variant", variant, "a or b (verify-counterexample)");
  app.add_option("--config", config_path, "JSON instance or earlier report");
  app.add_option("--p", p, "characteristic");
  app.add_option("--n", n, "rank");
  app.add_option("--f", f, "residue degree");
  app.add_option("--m", m, "Caruso parameter");
  app.add_option("--mu", mu, "cocharacter, e.g. 5,3,3,1 or 1,0,0;2,2,0");
  app.add_option("--tau", tau, "translation part of b");
  app.add_option("--w", w, "finite part of b, 1-based one-line per block");
  app.add_option("--d", d, "number of copies");
  app.add_option("--field-deg", field_deg, "oracle coefficient field degree r");
  app.add_option("--box", box, "oracle lattice box radius");
  app.add_option("--from", from, "chain start");
  app.add_option("--to", to, "chain end");
  app.add_option("--out", out, "json or dot");
  app.add_flag("--alcove-reduce", alcove_reduce, "conjugate b into the alcove first");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    return {exit_ok, app.help(), {}};
  } catch (const CLI::ParseError &e) {
    return {exit_invalid, {}, e.what()};
  }

  try {
    Json config = Json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in)
        throw InvalidInput("cannot open " + config_path);
      config = Json::parse(in);
      if (config.is_object() && config.contains("instance"))
        config = Json(config["instance"]); // so command-line flags apply on top
    }
    auto set_int = [&](const char *key, const std::string &text) {
      if (text.empty())
        return;
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(text, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != text.size() || used == 0)
        throw InvalidInput(std::string("--") + key + " expects an integer, got '" + text + "'");
      config[key] = v;
    };
    set_int("p", p);
    set_int("n", n);
    set_int("f", f);
    set_int("d", d);
    set_int("field_deg", field_deg);
    set_int("box", box);
    if (!m.empty()) {
      Json caruso;
      set_int("m", m);
      caruso["m"] = config["m"];
      config.erase("m");
      config["b"] = Json{{"caruso", caruso}};
    }
    if (!tau.empty() || !w.empty())
      config["b"] = Json{{"tau", parse_vector_text(tau)}, {"w", parse_vector_text(w)}};
    if (!mu.empty())
      config["mu"] = parse_vector_text(mu);
    if (!from.empty())
      config["from"] = parse_vector_text(from);
    if (!to.empty())
      config["to"] = parse_vector_text(to);
    if (!out.empty())
      config["out"] = out;
    if (alcove_reduce)
      config["alcove_reduce"] = true;
    if (!variant.empty())
      config["variant"] = variant;
    return run(command, config);
  } catch (const InvalidInput &e) {
    return {exit_invalid, {}, e.what()};
  } catch (const nlohmann::json::exception &e) {
    return {exit_invalid, {}, e.what()};
  }
}

} // namespace kisin
