#include "invariatus/serialize.hpp"

#include <charconv>
#include <sstream>

namespace invariatus {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view context) {
  s = trim(s);
  Integer v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw InvalidInput("cannot read \"" + std::string(s) + "\" as an integer in \"" +
                       std::string(context) + "\"");
  }
  return v;
}

Json factors_json(const FiniteAbelianGroup& g) {
  Json a = Json::array();
  for (Integer d : g.invariant_factors()) a.push_back(d);
  return a;
}

FiniteAbelianGroup group_from_factors(const Json& j) {
  if (!j.is_array()) throw InvalidInput("additive group must be an array of factors");
  std::vector<Integer> factors;
  for (const auto& d : j) factors.push_back(d.get<Integer>());
  return make_group(factors);
}

Json elements_json(const FiniteAbelianGroup& g) {
  Json a = Json::array();
  for (const Element& x : elements(g)) a.push_back(to_json(x));
  return a;
}

void require_elements(const FiniteAbelianGroup& g, const Json& j, const char* what) {
  if (j.contains("elements") && j.at("elements") != elements_json(g)) {
    throw InvalidInput(std::string(what) + ": element list does not match the additive group");
  }
}

std::vector<Integer> flatten(const Json& rows, std::size_t width, const char* what) {
  std::vector<Integer> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != width) {
      throw InvalidInput(std::string(what) + ": every row needs " + std::to_string(width) + " entries");
    }
    for (const auto& v : row) out.push_back(v.get<Integer>());
  }
  return out;
}

Json rows(const std::vector<Integer>& flat, Integer width) {
  Json out = Json::array();
  for (std::size_t i = 0; i < flat.size(); i += static_cast<std::size_t>(width)) {
    out.push_back(Json(std::vector<Integer>(flat.begin() + static_cast<std::ptrdiff_t>(i),
                                            flat.begin() + static_cast<std::ptrdiff_t>(i) + width)));
  }
  return out;
}

}  // namespace

FiniteAbelianGroup parse_group(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw InvalidInput("empty group specification");
  std::vector<Integer> factors;
  for (auto part : split(spec, 'x')) {
    const Integer d = parse_integer(part, spec);
    if (d < 1) throw InvalidInput("group factors must be positive in \"" + std::string(spec) + "\"");
    if (d > 1) factors.push_back(d);
  }
  return make_group(factors);
}

std::vector<Element> parse_elements(const FiniteAbelianGroup& g, std::string_view text) {
  std::vector<Element> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ';')) {
    const auto coeffs = split(part, ',');
    if (static_cast<int>(coeffs.size()) != g.rank()) {
      throw InvalidInput("element \"" + std::string(trim(part)) + "\" needs " +
                         std::to_string(g.rank()) + " coefficients for " + g.to_string());
    }
    Element x = g.zero();
    for (int i = 0; i < g.rank(); ++i) x(i) = parse_integer(coeffs[static_cast<std::size_t>(i)], text);
    out.push_back(reduce(g, x));
  }
  return out;
}

std::string format_elements(std::span<const Element> xs) {
  std::ostringstream out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out << ';';
    for (Eigen::Index i = 0; i < xs[k].size(); ++i) out << (i ? "," : "") << xs[k](i);
  }
  return out.str();
}

Json to_json(const Element& x) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) a.push_back(x(i));
  return a;
}

Json to_json(const FiniteAbelianGroup& g) {
  Json j;
  j["factors"] = factors_json(g);
  j["order"] = g.order();
  return j;
}

Json to_json(const Subgroup& h) {
  Json j;
  j["order"] = h.order();
  j["shape"] = h.shape();
  Json gens = Json::array();
  for (const Element& x : h.generators()) gens.push_back(to_json(x));
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const Homomorphism& f) {
  Json j;
  j["domain"] = to_json(f.domain());
  j["codomain"] = factors_json(f.codomain());
  Json basis = Json::array();
  for (const Element& b : f.domain().basis()) basis.push_back(to_json(b));
  j["basis"] = std::move(basis);
  Json images = Json::array();
  for (const Element& y : f.images()) images.push_back(to_json(y));
  j["images"] = std::move(images);
  return j;
}

Json to_json(const StrictClassification& c) {
  Json j;
  j["strictly_invariant"] = c.strictly_invariant();
  Json comps = Json::array();
  for (const auto& v : c.components) {
    Json e;
    e["prime"] = v.prime;
    e["verdict"] = std::string(verdict_name(v.verdict));
    if (v.verdict != StrictVerdict::NotStrictlyInvariant) {
      e["n"] = v.n;
    } else {
      e["n"] = nullptr;
    }
    e["exponent"] = v.exponent;
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  return j;
}

Json to_json(const InvarianceReport& r) {
  Json j;
  Json subject = to_json(r.subject);
  subject["ambient"] = factors_json(r.subject.ambient());
  j["subject"] = std::move(subject);
  Json flags;
  Json witnesses;
  for (Property p : kAllProperties) {
    const std::string name(property_name(p));
    flags[name] = r.flag(p);
    witnesses[name] = r.witness(p) ? to_json(*r.witness(p)) : Json(nullptr);
  }
  j["flags"] = std::move(flags);
  j["witnesses"] = std::move(witnesses);
  j["classification"] = to_json(r.classification);
  return j;
}

Json to_json(const StrictLattice& t) {
  Json j;
  j["group"] = to_json(t.group);
  Json elems = Json::array();
  for (const auto& h : t.elements) elems.push_back(to_json(h));
  j["elements"] = std::move(elems);
  Json covers = Json::array();
  for (auto [a, b] : t.covers) covers.push_back(Json::array({a, b}));
  j["covers"] = std::move(covers);
  return j;
}

std::string to_dot(const StrictLattice& t) {
  std::ostringstream out;
  out << "digraph T {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    out << "  n" << i << " [label=\"" << t.elements[i].to_string() << " |" << t.elements[i].order()
        << "|\"];\n";
  }
  for (auto [a, b] : t.covers) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

Json to_json(const FiniteRing& r) {
  Json j;
  j["additive"] = factors_json(r.additive());
  j["elements"] = elements_json(r.additive());
  j["one"] = r.one_index();
  j["multiplication"] = rows(r.table(), r.size());
  return j;
}

Json to_json(const FiniteModule& m) {
  Json j;
  j["additive"] = factors_json(m.additive());
  j["elements"] = elements_json(m.additive());
  j["ring"] = to_json(m.ring());
  j["action"] = rows(m.table(), m.ring().size());
  return j;
}

FiniteRing ring_from_json(const Json& j) {
  try {
    const auto g = group_from_factors(j.at("additive"));
    require_elements(g, j, "ring");
    const auto n = static_cast<std::size_t>(g.order());
    const auto& mul = j.at("multiplication");
    if (!mul.is_array() || mul.size() != n) throw InvalidInput("ring: multiplication needs one row per element");
    return FiniteRing::from_table(g, flatten(mul, n, "ring"), j.at("one").get<Integer>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("ring: ") + e.what());
  }
}

FiniteModule module_from_json(const Json& j) {
  try {
    const auto g = group_from_factors(j.at("additive"));
    require_elements(g, j, "module");
    auto ring = ring_from_json(j.at("ring"));
    const auto& act = j.at("action");
    if (!act.is_array() || act.size() != static_cast<std::size_t>(g.order())) {
      throw InvalidInput("module: action needs one row per element");
    }
    auto table = flatten(act, static_cast<std::size_t>(ring.size()), "module");
    return FiniteModule::from_table(g, std::move(ring), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("module: ") + e.what());
  }
}

}  // namespace invariatus
