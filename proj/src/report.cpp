#include "kisin/report.hpp"

#include <limits>
#include <sstream>

namespace kisin {

Json to_json(const Integer &z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
    return z.convert_to<long long>();
  return to_string(z);
}

Json to_json(const Rational &r) { return to_string(r); }

namespace {

template <class T> Json blocks_json(const BlockVector<T> &v) {
  Json out = Json::array();
  for (int k = 0; k < v.blocks(); ++k) {
    Json block = Json::array();
    for (int i = 0; i < v.n(); ++i)
      block.push_back(to_json(v(k, i)));
    out.push_back(std::move(block));
  }
  return out;
}

const char *reason_names[] = {"central", "dominant_minuscule", "d_set", "zero_dimensional"};

Json roots_json(const std::vector<Root> &roots) {
  Json out = Json::array();
  for (const auto &a : roots)
    out.push_back(to_json(a));
  return out;
}

Integer integer_from_json(const Json &x) {
  if (x.is_number_integer())
    return Integer(x.get<long long>());
  if (x.is_string()) {
    Rational r = parse_rational(x.get<std::string>());
    if (!is_integral(r))
      throw InvalidInput("expected an integer, got " + x.get<std::string>());
    return numerator(r);
  }
  throw InvalidInput("expected an integer entry");
}

} // namespace

Json to_json(const Cochar &v) { return blocks_json(v); }
Json to_json(const RatCochar &v) { return blocks_json(v); }

Json to_json(const WeylElt &w) {
  Json out = Json::array();
  for (const auto &perm : w.perms()) {
    Json block = Json::array();
    for (int x : perm)
      block.push_back(x + 1);
    out.push_back(std::move(block));
  }
  return out;
}

Json to_json(const ExtAffine &z) { return Json{{"chi", to_json(z.chi)}, {"y", to_json(z.y)}}; }

Json to_json(const Root &alpha) { return to_string(alpha); }

Json to_json(const FrobeniusDatum &datum) {
  return Json{{"p", datum.shape.p()},
              {"n", datum.shape.n()},
              {"eps", datum.shape.eps()},
              {"tau", to_json(datum.tau())},
              {"w", to_json(datum.w())},
              {"e", to_json(datum.e)},
              {"alcove_ok", datum.alcove_ok}};
}

Json to_json(const Stratum &s) {
  Json out{{"lambda", to_json(s.lam)}, {"nat", to_json(s.nat)}, {"dag", to_json(s.dag)}};
  out["dim"] = s.dim ? Json(*s.dim) : Json(nullptr);
  out["r_set"] = s.r_set ? roots_json(*s.r_set) : Json(nullptr);
  out["d_set"] = roots_json(s.d_set);
  Json reasons = Json::array();
  for (unsigned bit = 0; bit < 4; ++bit)
    if (s.singleton.reasons & (1u << bit))
      reasons.push_back(reason_names[bit]);
  out["singleton"] = Json{{"verdict", s.singleton.verdict == Singleton::proven ? "proven" : "unknown"},
                          {"reasons", reasons}};
  return out;
}

Json to_json(const LaurentMatrix &m) {
  Json out = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n(); ++j)
      row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

std::string to_string(Pi0Status status) {
  switch (status) {
  case Pi0Status::exact:
    return "exact";
  case Pi0Status::upper_bound:
    return "upper_bound";
  case Pi0Status::empty:
    return "empty";
  }
  return "unknown";
}

Json to_json(const StrataGraph &g, const Pi0Report &pi0) {
  Json vertices = Json::array();
  for (const auto &v : g.vertices)
    vertices.push_back(to_json(v));
  Json edges = Json::array();
  for (const auto &e : g.edges)
    edges.push_back(Json{{"from", e.from},
                         {"to", e.to},
                         {"from_lambda", to_json(g.vertices[e.from].lam)},
                         {"to_lambda", to_json(g.vertices[e.to].lam)},
                         {"alpha", to_json(e.alpha)}});
  return Json{{"vertices", vertices},
              {"edges", edges},
              {"components", g.components},
              {"pi0", Json{{"value", pi0.value}, {"status", to_string(pi0.status)}}}};
}

Json to_json(const OmegaOneAnalysis &a) {
  Json out{{"chi", to_json(a.chi)},
           {"mu_twisted", to_json(a.mu_twisted)},
           {"d", a.d},
           {"lifted", to_json(a.multi.lifted)},
           {"mu_bullet", to_json(a.mu_bullet)}};
  Json sb = Json::array();
  for (const auto &l : a.strata_bullet)
    sb.push_back(to_json(l));
  out["strata_bullet"] = sb;
  out["zero_stratum"] = a.zero_stratum ? to_json(*a.zero_stratum) : Json(nullptr);
  if (a.recursion)
    out["recursion"] = Json{{"ok", a.recursion->ok},
                            {"failing_block", a.recursion->failing_block},
                            {"zero_height_block", a.recursion->zero_height_block
                                                 ? Json(*a.recursion->zero_height_block)
                                                 : Json(nullptr)}};
  else
    out["recursion"] = nullptr;
  Json s = Json::array();
  for (const auto &l : a.strata)
    s.push_back(to_json(l));
  out["strata"] = s;
  out["projection_covers"] = a.projection_covers;
  return out;
}

Json to_json(const std::vector<ChainStep> &chain) {
  Json out = Json::array();
  for (const auto &step : chain)
    out.push_back(Json{{"lambda", to_json(step.lam)},
                       {"alpha", step.alpha ? to_json(*step.alpha) : Json(nullptr)}});
  return out;
}

std::string to_dot(const StrataGraph &g, const Pi0Report &pi0) {
  std::ostringstream out;
  out << "graph strata {\n";
  out << "  // pi0 = " << pi0.value << " (" << to_string(pi0.status) << ")\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto &s = g.vertices[v];
    out << "  v" << v << " [label=\"" << to_string(s.lam);
    if (s.dim)
      out << "\\ndim " << *s.dim;
    out << "\\n" << (s.singleton.verdict == Singleton::proven ? "point" : "unknown") << "\"];\n";
  }
  for (const auto &e : g.edges)
    out << "  v" << e.from << " -- v" << e.to << " [label=\"" << to_string(e.alpha) << "\"];\n";
  out << "}\n";
  return out.str();
}

Cochar cochar_from_json(const Json &j) {
  if (!j.is_array() || j.empty())
    throw InvalidInput("cocharacter must be a non-empty array");
  std::vector<std::vector<Integer>> blocks;
  if (j.front().is_array()) {
    for (const auto &b : j) {
      if (!b.is_array())
        throw InvalidInput("mixed nesting in cocharacter");
      std::vector<Integer> block;
      for (const auto &x : b)
        block.push_back(integer_from_json(x));
      blocks.push_back(std::move(block));
    }
  } else {
    std::vector<Integer> block;
    for (const auto &x : j)
      block.push_back(integer_from_json(x));
    blocks.push_back(std::move(block));
  }
  return Cochar::from_blocks(blocks);
}

WeylElt weyl_from_json(const Json &j) {
  Cochar flat = cochar_from_json(j);
  std::vector<Permutation> perms;
  for (int k = 0; k < flat.blocks(); ++k) {
    Permutation perm;
    for (int i = 0; i < flat.n(); ++i)
      perm.push_back(flat(k, i).convert_to<int>() - 1);
    if (!is_permutation(perm))
      throw InvalidInput("w block " + std::to_string(k + 1) + " is not a permutation");
    perms.push_back(std::move(perm));
  }
  return WeylElt(std::move(perms));
}

Json parse_vector_text(const std::string &text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
      throw InvalidInput("cannot parse vector " + text + ": " + e.what());
    }
  }
  Json blocks = Json::array();
  std::stringstream outer(text);
  std::string block_text;
  while (std::getline(outer, block_text, ';')) {
    Json block = Json::array();
    std::stringstream inner(block_text);
    std::string item;
    while (std::getline(inner, item, ',')) {
      try {
        std::size_t used = 0;
        long long x = std::stoll(item, &used);
        if (item.find_first_not_of(" \t", used) != std::string::npos)
          throw InvalidInput("trailing characters");
        block.push_back(x);
      } catch (const std::exception &) {
        throw InvalidInput("cannot parse entry '" + item + "' in " + text);
      }
    }
    blocks.push_back(std::move(block));
  }
  if (blocks.empty())
    throw InvalidInput("empty vector");
  return blocks;
}

} // namespace kisin
