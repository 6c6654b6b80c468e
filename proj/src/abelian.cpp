#include "gpsc/abelian.hpp"

#include <algorithm>

#include "gpsc/error.hpp"

namespace gpsc {

namespace {

constexpr std::int64_t kMaxTorsion = std::int64_t{1} << 31;

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::yes:
      return "yes";
    case Tristate::no:
      return "no";
    case Tristate::unknown:
      break;
  }
  return "unknown";
}

Tristate tristate_from_string(std::string const& s) {
  if (s == "yes") return Tristate::yes;
  if (s == "no") return Tristate::no;
  if (s == "unknown") return Tristate::unknown;
  throw InputError("expected yes|no|unknown, got '" + s + "'");
}

GroupLabel::GroupLabel(FGAbelian a) : value_(std::move(a)) {
  auto const& g = std::get<FGAbelian>(value_);
  for (auto t : g.torsion) {
    if (t < 2 || t >= kMaxTorsion) {
      throw InputError("torsion order " + std::to_string(t) + " outside [2, 2^31)");
    }
  }
  if (g.free_rank == 0 && g.torsion.empty()) {
    throw InputError("vertex group must be non-trivial");
  }
}

GroupLabel::GroupLabel(NonAbelianMarker m) : value_(std::move(m)) {}

GroupLabel GroupLabel::cyclic(std::int64_t order) {
  if (order == 0) return GroupLabel(FGAbelian{1, {}});
  return GroupLabel(FGAbelian{0, {order}});
}

FGAbelian const& GroupLabel::abelian() const {
  if (auto const* a = std::get_if<FGAbelian>(&value_)) return *a;
  throw InputError("label '" + display() + "' is not abelian");
}

NonAbelianMarker const& GroupLabel::marker() const { return std::get<NonAbelianMarker>(value_); }

std::string GroupLabel::key() const {
  if (!is_abelian()) return "N:" + marker().name;
  std::string out = "A:";
  for (auto const& f : primary_decomposition(abelian())) out += std::to_string(f.order) + ",";
  return out;
}

std::string GroupLabel::display() const {
  if (!is_abelian()) return marker().name;
  auto const& a = abelian();
  std::vector<std::string> parts;
  if (a.free_rank == 1) parts.emplace_back("Z");
  if (a.free_rank > 1) parts.push_back("Z^" + std::to_string(a.free_rank));
  for (auto t : a.torsion) parts.push_back("Z/" + std::to_string(t));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " x ";
    out += parts[i];
  }
  return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<CyclicFactor> primary_decomposition(FGAbelian const& g) {
  std::vector<CyclicFactor> out(g.free_rank, CyclicFactor{0});
  std::vector<std::pair<std::int64_t, int>> parts;
  for (auto t : g.torsion) {
    if (t < 2) throw InputError("torsion order " + std::to_string(t) + " is below 2");
    auto f = factorize(t);
    parts.insert(parts.end(), f.begin(), f.end());
  }
  std::vector<std::int64_t> orders;
  for (auto [p, e] : parts) orders.push_back(ipow(p, e));
  std::sort(orders.begin(), orders.end());
  for (auto q : orders) out.push_back(CyclicFactor{q});
  return out;
}

ExpandedGraph expand_graph(SimplicialGraph const& g, LabelMap const& labels) {
  ExpandedGraph eg;
  std::map<VertexId, std::vector<VertexId>> pieces;
  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  for (auto const& v : g.vertices()) {
    auto it = labels.find(v);
    if (it == labels.end()) throw InputError("vertex '" + v + "' has no label");
    if (!it->second.is_abelian()) {
      throw InputError("vertex '" + v + "' carries non-abelian label '" + it->second.display() + "'");
    }
    auto const factors = primary_decomposition(it->second.abelian());
    auto& mine = pieces[v];
    for (std::size_t k = 0; k < factors.size(); ++k) {
      VertexId id = factors.size() == 1 ? v : v + "." + std::to_string(k + 1);
      if (eg.factor_of.contains(id)) throw InputError("expanded vertex id '" + id + "' collides");
      eg.factor_of[id] = factors[k];
      eg.origin_of[id] = v;
      for (auto const& other : mine) edges.emplace_back(other, id);
      mine.push_back(id);
      ids.push_back(std::move(id));
    }
  }
  for (auto const& [a, b] : g.edges()) {
    for (auto const& x : pieces[a]) {
      for (auto const& y : pieces[b]) edges.emplace_back(x, y);
    }
  }
  eg.graph = SimplicialGraph(std::move(ids), edges);
  return eg;
}

std::vector<std::int64_t> abelianization_signature(ExpandedGraph const& eg) {
  std::vector<std::int64_t> out;
  for (auto const& v : eg.graph.vertices()) out.push_back(eg.factor_of.at(v).order);
  return out;
}

}  // namespace gpsc
