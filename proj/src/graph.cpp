#include "gpsc/graph.hpp"

#include <algorithm>
#include <numeric>

#include "gpsc/error.hpp"

namespace gpsc {

SimplicialGraph::SimplicialGraph(std::vector<VertexId> vertices, std::vector<Edge> const& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("duplicate vertex id '" +
                     *std::adjacent_find(vertices_.begin(), vertices_.end()) + "'");
  }
  std::size_t const n = vertices_.size();
  adjacency_.assign(n * n, 0);
  for (auto const& [a, b] : edges) {
    if (a == b) {
      throw InputError("loop at vertex '" + a + "'");
    }
    std::size_t const i = index_of(a);
    std::size_t const j = index_of(b);
    adjacency_[i * n + j] = 1;
    adjacency_[j * n + i] = 1;
  }
  build_neighbours();
}

SimplicialGraph SimplicialGraph::from_matrix(std::size_t n, std::vector<std::uint8_t> const& matrix) {
  if (matrix.size() != n * n) {
    throw InputError("adjacency matrix has wrong size");
  }
  std::vector<VertexId> ids(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = std::to_string(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i * n + j] || matrix[j * n + i]) {
        edges.emplace_back(ids[i], ids[j]);
      }
    }
  }
  return SimplicialGraph(std::move(ids), edges);
}

void SimplicialGraph::build_neighbours() {
  std::size_t const n = vertices_.size();
  neighbours_.assign(n, {});
  edge_count_ = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adjacency_[i * n + j]) {
        neighbours_[i].push_back(j);
        if (i < j) ++edge_count_;
      }
    }
  }
}

std::vector<Edge> SimplicialGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : neighbours_[i]) {
      if (i < j) out.emplace_back(vertices_[i], vertices_[j]);
    }
  }
  return out;
}

bool SimplicialGraph::contains(VertexId const& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t SimplicialGraph::index_of(VertexId const& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw InputError("unknown vertex '" + v + "'");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool SimplicialGraph::adjacent(VertexId const& v, VertexId const& w) const {
  return adjacent_at(index_of(v), index_of(w));
}

std::size_t SimplicialGraph::degree(VertexId const& v) const {
  return neighbours_[index_of(v)].size();
}

VertexSet SimplicialGraph::link(VertexId const& v) const {
  VertexSet out;
  for (std::size_t j : neighbours_[index_of(v)]) out.insert(vertices_[j]);
  return out;
}

VertexSet SimplicialGraph::star(VertexId const& v) const {
  VertexSet out = link(v);
  out.insert(v);
  return out;
}

SimplicialGraph SimplicialGraph::induced(VertexSet const& keep) const {
  std::vector<std::size_t> pos;
  for (auto const& v : keep) pos.push_back(index_of(v));
  std::sort(pos.begin(), pos.end());
  SimplicialGraph out;
  std::size_t const m = pos.size();
  out.vertices_.reserve(m);
  for (std::size_t i : pos) out.vertices_.push_back(vertices_[i]);
  out.adjacency_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      out.adjacency_[a * m + b] = adjacency_[pos[a] * size() + pos[b]];
    }
  }
  out.build_neighbours();
  return out;
}

SimplicialGraph SimplicialGraph::without(VertexSet const& drop) const {
  for (auto const& v : drop) index_of(v);
  VertexSet keep;
  for (auto const& v : vertices_) {
    if (!drop.contains(v)) keep.insert(v);
  }
  return induced(keep);
}

namespace detail {

std::vector<std::vector<std::size_t>> components_of(SimplicialGraph const& g,
                                                    std::vector<bool> const& mask) {
  std::size_t const n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (!mask[start] || seen[start]) continue;
    std::vector<std::size_t> block;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      std::size_t const v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (std::size_t w : g.neighbours(v)) {
        if (mask[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

std::optional<std::size_t> separating_star_index(SimplicialGraph const& g) {
  std::size_t const n = g.size();
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<bool> mask(n, true);
    mask[v] = false;
    for (std::size_t w : g.neighbours(v)) mask[w] = false;
    if (components_of(g, mask).size() >= 2) return v;
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

VertexSet to_ids(SimplicialGraph const& g, std::vector<std::size_t> const& pos) {
  VertexSet out;
  for (std::size_t i : pos) out.insert(g.vertex(i));
  return out;
}

std::vector<bool> star_mask(SimplicialGraph const& g, std::size_t v) {
  std::vector<bool> mask(g.size(), false);
  mask[v] = true;
  for (std::size_t w : g.neighbours(v)) mask[w] = true;
  return mask;
}

bool subset(std::vector<bool> const& a, std::vector<bool> const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

// Component test of the SIL definition for positions x, y, z.
bool sil_at(SimplicialGraph const& g, std::size_t x, std::size_t y, std::size_t z) {
  std::size_t const n = g.size();
  std::vector<bool> mask(n, true);
  for (std::size_t w : g.neighbours(x)) {
    if (g.adjacent_at(w, y)) mask[w] = false;
  }
  // Flood from z inside the complement of lk(x) ∩ lk(y).
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{z};
  seen[z] = true;
  while (!stack.empty()) {
    std::size_t const v = stack.back();
    stack.pop_back();
    if (v == x || v == y) return false;
    for (std::size_t w : g.neighbours(v)) {
      if (mask[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

bool pairwise_non_adjacent(SimplicialGraph const& g, std::size_t x, std::size_t y, std::size_t z) {
  return x != y && y != z && x != z && !g.adjacent_at(x, y) && !g.adjacent_at(x, z) &&
         !g.adjacent_at(y, z);
}

}  // namespace

std::vector<VertexSet> induced_components(SimplicialGraph const& g, VertexSet const& s) {
  std::vector<bool> mask(g.size(), false);
  for (auto const& v : s) mask[g.index_of(v)] = true;
  std::vector<VertexSet> out;
  for (auto const& block : detail::components_of(g, mask)) out.push_back(to_ids(g, block));
  return out;
}

std::vector<VertexSet> connected_components(SimplicialGraph const& g) {
  std::vector<VertexSet> out;
  for (auto const& block : detail::components_of(g, std::vector<bool>(g.size(), true))) {
    out.push_back(to_ids(g, block));
  }
  return out;
}

bool is_connected(SimplicialGraph const& g) {
  return detail::components_of(g, std::vector<bool>(g.size(), true)).size() <= 1;
}

std::optional<VertexId> has_separating_star(SimplicialGraph const& g) {
  if (auto v = detail::separating_star_index(g)) return g.vertex(*v);
  return std::nullopt;
}

std::optional<SilWitness> has_sil(SimplicialGraph const& g) {
  std::size_t const n = g.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (g.adjacent_at(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (pairwise_non_adjacent(g, x, y, z) && sil_at(g, x, y, z)) {
          return SilWitness{g.vertex(x), g.vertex(y), g.vertex(z)};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_sil(SimplicialGraph const& g, SilWitness const& w) {
  std::size_t const x = g.index_of(w.x);
  std::size_t const y = g.index_of(w.y);
  std::size_t const z = g.index_of(w.z);
  return pairwise_non_adjacent(g, x, y, z) && sil_at(g, x, y, z);
}

std::vector<std::pair<VertexId, VertexId>> star_containments(SimplicialGraph const& g) {
  std::size_t const n = g.size();
  std::vector<std::vector<bool>> stars;
  for (std::size_t v = 0; v < n; ++v) stars.push_back(star_mask(g, v));
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (v != w && subset(stars[v], stars[w])) out.emplace_back(g.vertex(v), g.vertex(w));
    }
  }
  return out;
}

LinkCondition link_condition(SimplicialGraph const& g) {
  std::size_t const n = g.size();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (v == w) continue;
      auto const st_w = star_mask(g, w);
      bool const contained = std::all_of(g.neighbours(v).begin(), g.neighbours(v).end(),
                                         [&](std::size_t u) { return st_w[u]; });
      if (contained) return {false, std::make_pair(g.vertex(v), g.vertex(w))};
    }
  }
  return {};
}

VertexSet full_star_vertices(SimplicialGraph const& g) {
  VertexSet out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.neighbours(v).size() + 1 == g.size()) out.insert(g.vertex(v));
  }
  return out;
}

}  // namespace gpsc
