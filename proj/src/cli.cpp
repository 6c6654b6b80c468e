#include "gpsc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "CLI11.hpp"
#include "gpsc/autos.hpp"
#include "gpsc/classify.hpp"
#include "gpsc/error.hpp"
#include "gpsc/io.hpp"
#include "gpsc/symmetry.hpp"
#include "gpsc/words.hpp"

namespace gpsc::cli {

namespace {

std::int64_t to_int(std::string const& s, std::string const& what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InputError(what + ": expected an integer, got '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(std::string const& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return kYes;
    case Verdict::no:
      return kNo;
    case Verdict::undetermined:
      break;
  }
  return kUndetermined;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_classify(std::string const& file, bool as_json, std::ostream& out) {
  auto const doc = load_document(file);
  auto const report = classify(doc.graph, doc.labels);
  out << (as_json ? report_json(report) : to_text(report));
  return verdict_code(report.semicomplete);
}

int cmd_check(std::string const& predicate, std::string const& file, std::ostream& out) {
  auto const doc = load_document(file);
  auto const& g = doc.graph;
  if (predicate == "sep-star") {
    auto const v = has_separating_star(g);
    out << "separating star: " << bool_text(v.has_value()) << '\n';
    if (v) out << "witness: " << *v << '\n';
    return v ? kYes : kNo;
  }
  if (predicate == "sil") {
    auto const w = has_sil(g);
    out << "sil: " << bool_text(w.has_value()) << '\n';
    if (w) out << "witness: (" << w->x << "," << w->y << " | " << w->z << ")\n";
    return w ? kYes : kNo;
  }
  if (predicate == "star-containment") {
    auto const pairs = star_containments(g);
    out << "star containment: " << bool_text(!pairs.empty()) << '\n';
    for (auto const& [v, w] : pairs) out << "witness: st(" << v << ") in st(" << w << ")\n";
    return pairs.empty() ? kNo : kYes;
  }
  auto const lc = link_condition(g);
  out << "link condition: " << bool_text(lc.holds) << '\n';
  if (lc.violation) {
    out << "witness: lk(" << lc.violation->first << ") in st(" << lc.violation->second << ")\n";
  }
  return lc.holds ? kYes : kNo;
}

int cmd_expand(std::string const& file, std::ostream& out) {
  auto const doc = load_document(file);
  out << expanded_json(expand_graph(doc.graph, doc.labels));
  return kYes;
}

int cmd_autgroup(std::string const& file, std::ostream& out) {
  auto const doc = load_document(file);
  auto const autos = automorphisms(doc.graph, colouring_of(doc.labels));
  out << "automorphisms: " << autos.size() << '\n';
  for (auto const& p : autos) out << "  " << p.to_string() << '\n';
  out << "asymmetric (labeled): " << bool_text(autos.size() == 1) << '\n';
  out << "asymmetric (unlabeled): " << bool_text(is_asymmetric(doc.graph)) << '\n';
  return kYes;
}

int cmd_census(std::size_t n, unsigned threads, bool as_json, std::ostream& out) {
  auto const r = census(n, threads);
  if (as_json) {
    out << census_json(r);
    return kYes;
  }
  out << "n: " << r.n << '\n'
      << "labeled_graphs: " << r.labeled_graphs << '\n'
      << "total_classes: " << r.total_classes << '\n'
      << "asymmetric_classes: " << r.asymmetric_classes << '\n'
      << "asymmetric_with_separating_star: " << r.asymmetric_with_separating_star << '\n';
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    out << "representative " << i + 1 << ":";
    for (auto const& [a, b] : r.representatives[i].edges()) out << ' ' << a << '-' << b;
    out << '\n';
  }
  return kYes;
}

GroupPresentation presentation_of(std::string const& file) {
  auto const doc = load_document(file);
  return GroupPresentation::from_labels(doc.graph, doc.labels);
}

GeneratorMap build_map(GroupPresentation const& p, std::string const& constructor,
                       std::vector<std::string> const& params) {
  auto need = [&](std::size_t count, char const* usage) {
    if (params.size() != count) throw InputError(constructor + " expects: " + usage);
  };
  if (constructor == "partial-conjugation") {
    need(3, "<v> <exponent> <comma-separated component>");
    auto const members = split(params[2], ',');
    return make_partial_conjugation(p, params[0], to_int(params[1], "exponent"),
                                    VertexSet(members.begin(), members.end()));
  }
  if (constructor == "factor") {
    need(2, "<v> <multiplier>");
    return make_factor_automorphism(p, params[0], to_int(params[1], "multiplier"));
  }
  if (constructor == "dominated-transvection") {
    need(2, "<u> <v>");
    return make_dominated_transvection(p, params[0], params[1]);
  }
  if (constructor == "commutator-transvection") {
    need(3, "<u> <v> <w>");
    return make_commutator_transvection(p, params[0], params[1], params[2]);
  }
  if (constructor == "graph") {
    need(1, "<src:dst,...> (moved points only, or id)");
    auto const& domain = p.graph().vertices();
    std::vector<VertexId> images = domain;
    if (params[0] != "id") {
      for (auto const& pair : split(params[0], ',')) {
        auto const colon = pair.find(':');
        if (colon == std::string::npos) throw InputError("graph: expected src:dst, got '" + pair + "'");
        auto const src = pair.substr(0, colon);
        images[p.graph().index_of(src)] = pair.substr(colon + 1);
      }
    }
    return make_graph_automorphism(p, VertexPermutation(domain, images));
  }
  if (constructor == "inner") {
    need(1, "<word>");
    return inner(p, p.parse(params[0]));
  }
  throw InputError("unknown constructor '" + constructor + "'");
}

int cmd_aut(std::string const& file, std::string const& constructor, std::vector<std::string> const& params,
            bool check_ia, std::optional<std::size_t> radius, std::ostream& out) {
  auto const p = presentation_of(file);
  auto const f = build_map(p, constructor, params);
  out << "kind: " << to_string(f.kind) << '\n';
  out << "parameters: " << f.parameters << '\n';
  out << "images:\n";
  for (std::size_t i = 0; i < p.rank(); ++i) {
    out << "  " << p.generator_id(i) << " -> " << p.format(f.images[i]) << '\n';
  }
  auto const bad = validate_homomorphism(p, f);
  out << "homomorphism: " << (bad ? "violated (" + bad->describe() + ")" : std::string("ok")) << '\n';
  int code = bad ? kNo : kYes;
  if (bad) return code;
  if (check_ia) {
    auto const v = is_ia(p, f);
    out << "ia: " << bool_text(v.in_ia);
    if (v.witness) out << " (witness " << *v.witness << ")";
    out << '\n';
    code = v.in_ia ? kYes : kNo;
  }
  if (radius) {
    auto const s = find_conjugator(p, f, *radius);
    if (s.found()) {
      out << "conjugator: found " << p.format(*s.conjugator) << '\n';
      code = kYes;
    } else {
      out << "conjugator: none up to radius " << s.radius << '\n';
      code = kUndetermined;
    }
  }
  return code;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semicompleteness and completeness of graph products", "gpsc"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a labeled graph");
  classify_cmd->add_option("file", file, "Input document")->required();
  classify_cmd->add_flag("--json", as_json, "Machine-readable report");

  std::string predicate;
  auto* check_cmd = app.add_subcommand("check", "Evaluate one graph predicate");
  check_cmd->add_option("predicate", predicate, "sep-star|sil|star-containment|link-condition")
      ->required()
      ->check(CLI::IsMember({"sep-star", "sil", "star-containment", "link-condition"}));
  check_cmd->add_option("file", file, "Input document")->required();

  auto* expand_cmd = app.add_subcommand("expand", "Expand labels into cyclic cliques");
  expand_cmd->add_option("file", file, "Input document")->required();

  auto* autgroup_cmd = app.add_subcommand("autgroup", "List label-preserving graph automorphisms");
  autgroup_cmd->add_option("file", file, "Input document")->required();

  std::size_t order = 0;
  unsigned threads = 0;
  auto* census_cmd = app.add_subcommand("census", "Isomorphism classes of graphs on n vertices");
  census_cmd->add_option("n", order, "Vertex count (1..7)")->required();
  census_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  census_cmd->add_flag("--json", as_json, "Machine-readable report");

  std::string word;
  auto* nf_cmd = app.add_subcommand("nf", "Normal form of a word");
  nf_cmd->add_option("file", file, "Input document")->required();
  nf_cmd->add_option("word", word, "Word such as 'a^2 b c^-1'")->required();

  std::string other;
  auto* eq_cmd = app.add_subcommand("eq", "Decide equality of two words");
  eq_cmd->add_option("file", file, "Input document")->required();
  eq_cmd->add_option("first", word, "First word")->required();
  eq_cmd->add_option("second", other, "Second word")->required();

  std::string constructor;
  std::vector<std::string> params;
  bool check_ia = false;
  std::optional<std::size_t> radius;
  auto* aut_cmd = app.add_subcommand("aut", "Build and analyse an automorphism");
  aut_cmd->add_option("file", file, "Input document")->required();
  aut_cmd->add_option("constructor", constructor,
                      "partial-conjugation|factor|dominated-transvection|commutator-transvection|graph|inner")
      ->required();
  aut_cmd->add_option("params", params, "Constructor parameters");
  aut_cmd->add_flag("--check-ia", check_ia, "Decide IA membership");
  aut_cmd->add_option("--find-conjugator", radius, "Search for an inner witness up to this radius");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    app.exit(e, out, err);
    return kYes;
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(file, as_json, out);
    if (*check_cmd) return cmd_check(predicate, file, out);
    if (*expand_cmd) return cmd_expand(file, out);
    if (*autgroup_cmd) return cmd_autgroup(file, out);
    if (*census_cmd) return cmd_census(order, threads, as_json, out);
    if (*nf_cmd) {
      auto const p = presentation_of(file);
      out << p.format(p.normalize(p.parse(word))) << '\n';
      return kYes;
    }
    if (*eq_cmd) {
      auto const p = presentation_of(file);
      bool const same = p.equals(p.parse(word), p.parse(other));
      out << bool_text(same) << '\n';
      return same ? kYes : kNo;
    }
    return cmd_aut(file, constructor, params, check_ia, radius, out);
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace gpsc::cli
