#include "gpsc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gpsc/error.hpp"
#include "json.hpp"

namespace gpsc {

using nlohmann::json;

namespace {

std::string vertex_id(json const& j, std::string const& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(field + ": vertex id must be a string");
}

GroupLabel parse_label(json const& j, std::string const& field) {
  if (!j.is_object()) throw InputError(field + ": group must be an object");
  for (auto const& [key, _] : j.items()) {
    if (key != "free_rank" && key != "torsion" && key != "non_abelian" && key != "known_semicomplete") {
      throw InputError(field + "." + key + ": unknown field");
    }
  }
  if (j.contains("non_abelian")) {
    if (j.contains("free_rank") || j.contains("torsion")) {
      throw InputError(field + ": non_abelian cannot be combined with free_rank/torsion");
    }
    if (!j["non_abelian"].is_string()) throw InputError(field + ".non_abelian: must be a string");
    NonAbelianMarker m{j["non_abelian"].get<std::string>(), Tristate::unknown};
    if (j.contains("known_semicomplete")) {
      if (!j["known_semicomplete"].is_string()) {
        throw InputError(field + ".known_semicomplete: must be yes|no|unknown");
      }
      try {
        m.known_semicomplete = tristate_from_string(j["known_semicomplete"].get<std::string>());
      } catch (InputError const& e) {
        throw InputError(field + ".known_semicomplete: " + e.what());
      }
    }
    return GroupLabel(std::move(m));
  }
  if (j.contains("known_semicomplete")) {
    throw InputError(field + ".known_semicomplete: only allowed with non_abelian");
  }
  FGAbelian a;
  if (j.contains("free_rank")) {
    auto const& r = j["free_rank"];
    if (!r.is_number_integer() || r.get<long long>() < 0 || r.get<long long>() > 1 << 16) {
      throw InputError(field + ".free_rank: must be a non-negative integer");
    }
    a.free_rank = static_cast<std::uint32_t>(r.get<long long>());
  }
  if (j.contains("torsion")) {
    auto const& t = j["torsion"];
    if (!t.is_array()) throw InputError(field + ".torsion: must be a list of integers");
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i].is_number_integer()) {
        throw InputError(field + ".torsion[" + std::to_string(i) + "]: must be an integer");
      }
      a.torsion.push_back(t[i].get<std::int64_t>());
    }
  }
  try {
    return GroupLabel(std::move(a));
  } catch (InputError const& e) {
    throw InputError(field + ": " + e.what());
  }
}

json label_json(GroupLabel const& label) {
  if (!label.is_abelian()) {
    return json{{"non_abelian", label.marker().name},
                {"known_semicomplete", to_string(label.marker().known_semicomplete)}};
  }
  return json{{"free_rank", label.abelian().free_rank}, {"torsion", label.abelian().torsion}};
}

json edges_json(SimplicialGraph const& g) {
  json out = json::array();
  for (auto const& [a, b] : g.edges()) out.push_back(json::array({a, b}));
  return out;
}

json set_json(VertexSet const& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

}  // namespace

InputDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document: must be an object");
  for (auto const& [key, _] : doc.items()) {
    if (key != "vertices" && key != "edges") throw InputError(key + ": unknown field");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("vertices: missing or not a list");
  }
  std::vector<VertexId> ids;
  LabelMap labels;
  auto const& vs = doc["vertices"];
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string const field = "vertices[" + std::to_string(i) + "]";
    auto const& v = vs[i];
    if (!v.is_object()) throw InputError(field + ": must be an object");
    for (auto const& [key, _] : v.items()) {
      if (key != "id" && key != "group" && key != "origin") throw InputError(field + "." + key + ": unknown field");
    }
    if (!v.contains("id")) throw InputError(field + ".id: missing");
    if (!v.contains("group")) throw InputError(field + ".group: missing");
    auto id = vertex_id(v["id"], field + ".id");
    if (labels.contains(id)) throw InputError(field + ".id: duplicate vertex id '" + id + "'");
    labels.emplace(id, parse_label(v["group"], field + ".group"));
    ids.push_back(std::move(id));
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    auto const& es = doc["edges"];
    if (!es.is_array()) throw InputError("edges: must be a list");
    for (std::size_t i = 0; i < es.size(); ++i) {
      std::string const field = "edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) throw InputError(field + ": must be a pair of ids");
      auto a = vertex_id(es[i][0], field + "[0]");
      auto b = vertex_id(es[i][1], field + "[1]");
      if (!labels.contains(a)) throw InputError(field + ": unknown vertex '" + a + "'");
      if (!labels.contains(b)) throw InputError(field + ": unknown vertex '" + b + "'");
      if (a == b) throw InputError(field + ": self-edge at '" + a + "'");
      edges.emplace_back(std::move(a), std::move(b));
    }
  }
  return InputDocument{SimplicialGraph(std::move(ids), edges), std::move(labels)};
}

InputDocument load_document(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string document_json(SimplicialGraph const& g, LabelMap const& labels) {
  json vs = json::array();
  for (auto const& v : g.vertices()) vs.push_back(json{{"id", v}, {"group", label_json(labels.at(v))}});
  return json{{"vertices", vs}, {"edges", edges_json(g)}}.dump(2) + "\n";
}

std::string expanded_json(ExpandedGraph const& eg) {
  json vs = json::array();
  for (auto const& v : eg.graph.vertices()) {
    auto const order = eg.factor_of.at(v).order;
    vs.push_back(json{{"id", v},
                      {"group", label_json(GroupLabel::cyclic(order))},
                      {"origin", eg.origin_of.at(v)}});
  }
  return json{{"vertices", vs}, {"edges", edges_json(eg.graph)}}.dump(2) + "\n";
}

std::string report_json(ClassificationReport const& r) {
  json evidence = json::array();
  for (auto const& e : r.evidence) {
    evidence.push_back(json{{"scope", e.scope},
                            {"condition", e.condition},
                            {"holds", e.holds},
                            {"citation", e.citation},
                            {"witness", e.witness}});
  }
  json out{{"semicomplete", to_string(r.semicomplete)},
           {"complete", to_string(r.complete)},
           {"center_delta", set_json(r.center_delta)},
           {"evidence", evidence},
           {"expansion", nullptr}};
  if (r.expansion) out["expansion"] = json::parse(expanded_json(*r.expansion));
  return out.dump(2) + "\n";
}

std::string census_json(CensusReport const& r) {
  json reps = json::array();
  for (auto const& g : r.representatives) reps.push_back(edges_json(g));
  return json{{"n", r.n},
              {"labeled_graphs", r.labeled_graphs},
              {"total_classes", r.total_classes},
              {"asymmetric_classes", r.asymmetric_classes},
              {"asymmetric_with_separating_star", r.asymmetric_with_separating_star},
              {"representatives", reps}}
             .dump(2) +
         "\n";
}

}  // namespace gpsc
