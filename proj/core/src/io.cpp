#include "groupoidlab/io.hpp"

#include <fstream>

namespace gl {

namespace {

// a cross-reference is either an inline object or a path string
Json resolve_ref(Json const& node, std::filesystem::path const& base_dir,
                 std::filesystem::path* next_base) {
  if (node.is_string()) {
    auto path = base_dir / node.get<std::string>();
    *next_base = path.parent_path();
    return load_json_file(path);
  }
  *next_base = base_dir;
  return node;
}

std::string require_string(Json const& body, char const* key) {
  if (!body.contains(key) || !body[key].is_string()) {
    fail("ParseError", std::string("missing string field '") + key + "'");
  }
  return body[key].get<std::string>();
}

Json const& require_field(Json const& body, char const* key) {
  if (!body.contains(key)) {
    fail("ParseError", std::string("missing field '") + key + "'");
  }
  return body[key];
}

Complex complex_from_json(Json const& node) {
  if (!node.is_object() || !node.contains("re") || !node.contains("im")) {
    fail("ParseError", "complex values are objects {\"re\":..., \"im\":...}");
  }
  return Complex(node["re"].get<double>(), node["im"].get<double>());
}

Json complex_to_json(Complex c) {
  return Json{{"re", c.real()}, {"im", c.imag()}};
}

}  // namespace

Json load_json_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    fail("ParseError", "cannot open '" + path.string() + "'");
  }
  try {
    return Json::parse(in);
  } catch (Json::parse_error const& err) {
    fail("ParseError", path.string() + ": " + err.what());
  }
}

Json groupoid_to_json(GroupoidPtr const& g) {
  Json body;
  body["kind"] = "groupoid";
  body["elements"] = Json::array();
  body["units"] = Json::array();
  auto& range = body["range"] = Json::object();
  auto& source = body["source"] = Json::object();
  auto& inverse = body["inverse"] = Json::object();
  auto& mul = body["mul"] = Json::array();
  for (int x = 0; x < g->size(); ++x) {
    body["elements"].push_back(g->label(x));
    range[g->label(x)] = g->label(g->range(x));
    source[g->label(x)] = g->label(g->source(x));
    inverse[g->label(x)] = g->label(g->inverse(x));
    for (int y = 0; y < g->size(); ++y) {
      int xy = g->compose_opt(x, y);
      if (xy >= 0) {
        mul.push_back(Json::array({g->label(x), g->label(y), g->label(xy)}));
      }
    }
  }
  for (int u : g->units()) {
    body["units"].push_back(g->label(u));
  }
  return body;
}

GroupoidPtr groupoid_from_json(Json const& body) {
  FiniteGroupoid::Raw raw;
  for (auto const& e : require_field(body, "elements")) {
    raw.elements.push_back(e.get<std::string>());
  }
  for (auto const& e : require_field(body, "units")) {
    raw.units.push_back(e.get<std::string>());
  }
  for (auto const& [k, v] : require_field(body, "range").items()) {
    raw.range[k] = v.get<std::string>();
  }
  for (auto const& [k, v] : require_field(body, "source").items()) {
    raw.source[k] = v.get<std::string>();
  }
  for (auto const& [k, v] : require_field(body, "inverse").items()) {
    raw.inverse[k] = v.get<std::string>();
  }
  for (auto const& triple : require_field(body, "mul")) {
    if (!triple.is_array() || triple.size() != 3) {
      fail("ParseError", "mul entries are triples [x, y, z]");
    }
    raw.mul.push_back({triple[0].get<std::string>(),
                       triple[1].get<std::string>(),
                       triple[2].get<std::string>()});
  }
  return FiniteGroupoid::validate(raw);
}

Json haar_to_json(HaarSystem const& h) {
  Json body;
  body["kind"] = "haar";
  body["groupoid"] = groupoid_to_json(h.groupoid());
  auto& weights = body["weights"] = Json::object();
  for (int x = 0; x < h.groupoid()->size(); ++x) {
    weights[h.groupoid()->label(x)] = format_rational(h.weight(x));
  }
  return body;
}

HaarSystem haar_from_json(Json const& body, std::filesystem::path const& base_dir) {
  std::filesystem::path inner;
  auto g = groupoid_from_json(
      resolve_ref(require_field(body, "groupoid"), base_dir, &inner));
  std::vector<Rational> weights(static_cast<size_t>(g->size()), Rational(0));
  for (auto const& [label, text] : require_field(body, "weights").items()) {
    weights[static_cast<size_t>(g->index(label))] =
        parse_rational(text.get<std::string>());
  }
  return HaarSystem(g, std::move(weights));
}

Json measure_to_json(UnitMeasure const& mu) {
  Json body;
  body["kind"] = "measure";
  body["groupoid"] = groupoid_to_json(mu.groupoid());
  auto& weights = body["weights"] = Json::object();
  for (auto const& [u, w] : mu.entries()) {
    weights[mu.groupoid()->label(u)] = format_rational(w);
  }
  return body;
}

UnitMeasure measure_from_json(Json const& body,
                              std::filesystem::path const& base_dir) {
  std::filesystem::path inner;
  auto g = groupoid_from_json(
      resolve_ref(require_field(body, "groupoid"), base_dir, &inner));
  std::map<int, Rational> weights;
  for (auto const& [label, text] : require_field(body, "weights").items()) {
    weights[g->index(label)] = parse_rational(text.get<std::string>());
  }
  return UnitMeasure(g, std::move(weights));
}

Json element_to_json(AlgebraElement const& f) {
  Json body;
  body["kind"] = "algebra-element";
  body["haar"] = haar_to_json(f.haar());
  auto& coeff = body["coeff"] = Json::object();
  for (auto const& [x, c] : f.coeff()) {
    coeff[f.groupoid()->label(x)] = complex_to_json(c);
  }
  return body;
}

AlgebraElement element_from_json(Json const& body,
                                 std::filesystem::path const& base_dir) {
  std::filesystem::path inner;
  auto haar = haar_from_json(
      resolve_ref(require_field(body, "haar"), base_dir, &inner), inner);
  std::map<int, Complex> coeff;
  for (auto const& [label, c] : require_field(body, "coeff").items()) {
    coeff[haar.groupoid()->index(label)] = complex_from_json(c);
  }
  return AlgebraElement(std::move(haar), std::move(coeff));
}

Json morphism_to_json(Morphism const& m) {
  Json body;
  body["kind"] = "morphism";
  body["source"] = haar_to_json(m.source_haar());
  body["target"] = haar_to_json(m.target_haar());
  auto& rho = body["rho"] = Json::object();
  for (int t : m.target()->units()) {
    rho[m.target()->label(t)] = m.source()->label(m.rho(t));
  }
  auto& action = body["action"] = Json::array();
  for (int gamma = 0; gamma < m.source()->size(); ++gamma) {
    for (int x = 0; x < m.target()->size(); ++x) {
      if (m.in_domain(gamma, x)) {
        action.push_back(Json::array({m.source()->label(gamma),
                                      m.target()->label(x),
                                      m.target()->label(m.act(gamma, x))}));
      }
    }
  }
  return body;
}

Morphism morphism_from_json(Json const& body,
                            std::filesystem::path const& base_dir) {
  std::filesystem::path src_base;
  std::filesystem::path tgt_base;
  auto source = haar_from_json(
      resolve_ref(require_field(body, "source"), base_dir, &src_base), src_base);
  auto target = haar_from_json(
      resolve_ref(require_field(body, "target"), base_dir, &tgt_base), tgt_base);
  auto const& src = *source.groupoid();
  auto const& tgt = *target.groupoid();
  std::vector<int> rho(static_cast<size_t>(tgt.size()), -1);
  for (auto const& [t, u] : require_field(body, "rho").items()) {
    rho[static_cast<size_t>(tgt.index(t))] = src.index(u.get<std::string>());
  }
  std::vector<std::vector<int>> act(
      static_cast<size_t>(src.size()),
      std::vector<int>(static_cast<size_t>(tgt.size()), -1));
  for (auto const& triple : require_field(body, "action")) {
    if (!triple.is_array() || triple.size() != 3) {
      fail("ParseError", "action entries are triples [gamma, x, y]");
    }
    act[static_cast<size_t>(src.index(triple[0].get<std::string>()))]
       [static_cast<size_t>(tgt.index(triple[1].get<std::string>()))] =
           tgt.index(triple[2].get<std::string>());
  }
  return Morphism::create(std::move(source), std::move(target), std::move(rho),
                          std::move(act));
}

LoadedArtifact artifact_from_json(Json const& body,
                                  std::filesystem::path const& base_dir) {
  LoadedArtifact out;
  out.kind = require_string(body, "kind");
  if (out.kind == "groupoid") {
    out.groupoid = groupoid_from_json(body);
  } else if (out.kind == "haar") {
    out.haar = haar_from_json(body, base_dir);
    out.groupoid = out.haar->groupoid();
  } else if (out.kind == "measure") {
    out.measure = measure_from_json(body, base_dir);
    out.groupoid = out.measure->groupoid();
  } else if (out.kind == "algebra-element") {
    out.element = element_from_json(body, base_dir);
    out.groupoid = out.element->groupoid();
  } else if (out.kind == "morphism") {
    out.morphism = morphism_from_json(body, base_dir);
    out.groupoid = out.morphism->source();
  } else if (out.kind == "scenario") {
    out.scenario = body;
  } else {
    fail("ParseError", "unknown artifact kind '" + out.kind + "'");
  }
  return out;
}

LoadedArtifact load_artifact(std::filesystem::path const& path) {
  return artifact_from_json(load_json_file(path), path.parent_path());
}

}  // namespace gl
