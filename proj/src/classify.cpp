#include "gpsc/classify.hpp"

#include <sstream>

#include "gpsc/error.hpp"
#include "gpsc/symmetry.hpp"

namespace gpsc {

namespace {

// Citation tags.
constexpr char kCentralReduction[] = "central-clique-reduction";
constexpr char kVertexGroupsSemicomplete[] = "vertex-groups-must-be-semicomplete";
constexpr char kSingleVertex[] = "single-vertex-product";
constexpr char kSeparatingStar[] = "separating-star-gives-outer-partial-conjugation";
constexpr char kAbelianVertexGroups[] = "non-star-graph-needs-abelian-vertex-groups";
constexpr char kFgAbelianCriterion[] = "fg-abelian-semicomplete-iff-no-separating-star";
constexpr char kNoCriterion[] = "non-abelian-star-graph-open";
constexpr char kLinkCondition[] = "link-condition-semicomplete-criterion";
constexpr char kCompleteness[] = "completeness-criterion";
constexpr char kEmptyGraph[] = "empty-graph-convention";

std::string set_to_string(VertexSet const& s) {
  std::string out = "{";
  for (auto const& v : s) {
    if (out.size() > 1) out += ',';
    out += v;
  }
  return out + "}";
}

LabelMap restrict(LabelMap const& labels, SimplicialGraph const& g) {
  LabelMap out;
  for (auto const& v : g.vertices()) {
    auto it = labels.find(v);
    if (it == labels.end()) throw InputError("vertex '" + v + "' has no label");
    out.emplace(v, it->second);
  }
  return out;
}

Evidence semi(std::string condition, bool holds, std::string citation, std::string witness = {}) {
  return Evidence{"semicomplete", std::move(condition), holds, std::move(citation), std::move(witness)};
}

Evidence comp(std::string condition, bool holds, std::string witness = {}) {
  return Evidence{"complete", std::move(condition), holds, kCompleteness, std::move(witness)};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "Yes";
    case Verdict::no:
      return "No";
    case Verdict::undetermined:
      break;
  }
  return "Undetermined";
}

VertexSet center_delta(SimplicialGraph const& g, LabelMap const& labels) {
  VertexSet out;
  for (auto const& v : full_star_vertices(g)) {
    auto it = labels.find(v);
    if (it == labels.end()) throw InputError("vertex '" + v + "' has no label");
    if (it->second.is_abelian()) out.insert(v);
  }
  return out;
}

Decision classify_semicomplete(SimplicialGraph const& g, LabelMap const& labels) {
  Decision d;
  auto& ev = d.evidence;
  SimplicialGraph h = g;
  LabelMap lab = restrict(labels, g);

  if (g.size() >= 2 && link_condition(g).holds) {
    ev.push_back(semi("link condition: lk(v) not in st(w) for all v != w", true, kLinkCondition));
  }

  // Central abelian vertices split off as a direct factor.
  while (true) {
    auto const delta = center_delta(h, lab);
    if (delta.empty()) break;
    ev.push_back(semi("central abelian vertices removed", true, kCentralReduction, set_to_string(delta)));
    h = h.without(delta);
    lab = restrict(lab, h);
  }

  if (h.empty()) {
    ev.push_back(semi("remaining graph is empty (abelian product)", true, kCentralReduction));
    d.verdict = Verdict::yes;
    return d;
  }

  for (auto const& [v, label] : lab) {
    if (!label.is_abelian() && label.marker().known_semicomplete == Tristate::no) {
      ev.push_back(semi("every vertex group semicomplete", false, kVertexGroupsSemicomplete, v));
      d.verdict = Verdict::no;
      return d;
    }
  }

  if (h.size() == 1) {
    auto const& v = h.vertex(0);
    auto const& label = lab.at(v);
    if (label.is_abelian()) {
      ev.push_back(semi("single abelian vertex group", true, kSingleVertex, v));
      d.verdict = Verdict::yes;
    } else if (label.marker().known_semicomplete == Tristate::yes) {
      ev.push_back(semi("single vertex group known semicomplete", true, kSingleVertex, v));
      d.verdict = Verdict::yes;
    } else {
      ev.push_back(semi("single vertex group of unknown semicompleteness", false, kSingleVertex, v));
      d.verdict = Verdict::undetermined;
    }
    return d;
  }

  if (auto v = has_separating_star(h)) {
    ev.push_back(semi("no separating star", false, kSeparatingStar, *v));
    d.verdict = Verdict::no;
    return d;
  }
  ev.push_back(semi("no separating star", true, kSeparatingStar));

  std::optional<VertexId> non_abelian;
  for (auto const& [v, label] : lab) {
    if (!label.is_abelian()) {
      non_abelian = v;
      break;
    }
  }
  bool const star_graph = !full_star_vertices(h).empty();

  if (non_abelian && !star_graph) {
    ev.push_back(semi("all vertex groups abelian", false, kAbelianVertexGroups, *non_abelian));
    d.verdict = Verdict::no;
    return d;
  }
  if (!non_abelian) {
    ev.push_back(semi("all vertex groups finitely generated abelian", true, kFgAbelianCriterion));
    d.verdict = Verdict::yes;
    return d;
  }
  ev.push_back(semi("non-abelian vertex group in a star graph", false, kNoCriterion, *non_abelian));
  d.verdict = Verdict::undetermined;
  return d;
}

Decision classify_complete(SimplicialGraph const& g, LabelMap const& labels) {
  Decision d;
  auto& ev = d.evidence;
  LabelMap const lab = restrict(labels, g);
  if (g.empty()) {
    ev.push_back(Evidence{"complete", "graph has vertices", false, kEmptyGraph, "0 vertices"});
    d.verdict = Verdict::no;
    return d;
  }
  for (auto const& [v, label] : lab) {
    if (!label.is_abelian()) {
      ev.push_back(comp("all vertex groups finitely generated abelian", false, v));
      d.verdict = Verdict::undetermined;
      return d;
    }
  }

  auto const eg = expand_graph(g, lab);
  auto const& e = eg.graph;
  bool all = true;
  auto record = [&](std::string condition, std::optional<std::string> failure) {
    all = all && !failure;
    ev.push_back(comp(std::move(condition), !failure, failure.value_or("")));
  };

  std::optional<std::string> not_z2;
  for (auto const& [v, f] : eg.factor_of) {
    if (f.order != 2) {
      not_z2 = v + " has order " + (f.infinite() ? std::string("infinity") : std::to_string(f.order));
      break;
    }
  }
  record("all vertex groups Z/2", not_z2);

  auto const components = connected_components(e);
  record("connected", components.size() <= 1
                          ? std::nullopt
                          : std::optional<std::string>(std::to_string(components.size()) + " components, " +
                                                       set_to_string(components[1])));

  record("at least 7 vertices",
         e.size() >= 7 ? std::nullopt : std::optional<std::string>(std::to_string(e.size()) + " vertices"));

  auto const sep = has_separating_star(e);
  record("no separating star", sep);

  auto const sym = nontrivial_automorphism(e);
  record("asymmetric", sym ? std::optional<std::string>(sym->to_string()) : std::nullopt);

  auto const contained = star_containments(e);
  record("no star containment st(v) in st(w)",
         contained.empty() ? std::nullopt
                           : std::optional<std::string>("st(" + contained.front().first + ") in st(" +
                                                        contained.front().second + ")"));

  d.verdict = all ? Verdict::yes : Verdict::no;
  return d;
}

ClassificationReport classify(SimplicialGraph const& g, LabelMap const& labels) {
  ClassificationReport r;
  auto const s = classify_semicomplete(g, labels);
  auto const c = classify_complete(g, labels);
  r.semicomplete = s.verdict;
  r.complete = c.verdict;
  r.center_delta = center_delta(g, labels);
  r.evidence = s.evidence;
  r.evidence.insert(r.evidence.end(), c.evidence.begin(), c.evidence.end());
  bool all_abelian = true;
  for (auto const& v : g.vertices()) all_abelian = all_abelian && labels.at(v).is_abelian();
  if (all_abelian) r.expansion = expand_graph(g, labels);
  return r;
}

std::string to_text(ClassificationReport const& r) {
  std::ostringstream out;
  out << "semicomplete: " << to_string(r.semicomplete) << '\n';
  out << "complete: " << to_string(r.complete) << '\n';
  out << "center: " << set_to_string(r.center_delta) << '\n';
  if (r.expansion) {
    out << "expansion: " << r.expansion->graph.size() << " cyclic vertices, " << r.expansion->graph.edge_count()
        << " edges\n";
  } else {
    out << "expansion: none (non-abelian labels)\n";
  }
  out << "evidence:\n";
  for (auto const& e : r.evidence) {
    out << "  [" << e.scope << "] " << e.condition << ": " << (e.holds ? "holds" : "fails") << " | "
        << (e.witness.empty() ? "-" : e.witness) << " | " << e.citation << '\n';
  }
  return out.str();
}

}  // namespace gpsc
