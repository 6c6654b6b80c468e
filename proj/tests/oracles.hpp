#ifndef GPSC_TESTS_ORACLES_HPP_
#define GPSC_TESTS_ORACLES_HPP_

// Slow, independent reference implementations used to check the library.
// Nothing here calls into the predicates under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gpsc/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(gpsc::SimplicialGraph const& g) {
  auto const& vs = g.vertices();
  Matrix m(vs.size(), std::vector<bool>(vs.size(), false));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) m[i][j] = i != j && g.adjacent(vs[i], vs[j]);
  }
  return m;
}

inline gpsc::SimplicialGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<gpsc::VertexId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  std::vector<gpsc::Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) edges.emplace_back(ids[i], ids[j]);
    }
  }
  return gpsc::SimplicialGraph(ids, edges);
}

inline gpsc::SimplicialGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<gpsc::VertexId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  std::vector<gpsc::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(ids[i], ids[j]);
    }
  }
  return gpsc::SimplicialGraph(ids, edges);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Component label per vertex of the subgraph induced on `keep`; -1 outside.
inline std::vector<int> components(Matrix const& m, std::vector<bool> const& keep) {
  std::vector<int> label(m.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (!keep[s] || label[s] >= 0) continue;
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (std::size_t w = 0; w < m.size(); ++w) {
        if (m[u][w] && keep[w] && label[w] < 0) {
          label[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline int component_count(std::vector<int> const& label) {
  int top = -1;
  for (int l : label) top = std::max(top, l);
  return top + 1;
}

inline std::optional<gpsc::VertexId> separating_star(gpsc::SimplicialGraph const& g) {
  auto const m = matrix_of(g);
  for (std::size_t v = 0; v < m.size(); ++v) {
    std::vector<bool> keep(m.size(), true);
    keep[v] = false;
    for (std::size_t w = 0; w < m.size(); ++w) {
      if (m[v][w]) keep[w] = false;
    }
    if (component_count(components(m, keep)) >= 2) return g.vertex(v);
  }
  return std::nullopt;
}

inline std::optional<gpsc::SilWitness> sil(gpsc::SimplicialGraph const& g) {
  auto const m = matrix_of(g);
  auto const n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (m[x][y]) continue;
      std::vector<bool> keep(n, true);
      for (std::size_t w = 0; w < n; ++w) {
        if (m[x][w] && m[y][w]) keep[w] = false;
      }
      auto const label = components(m, keep);
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y || m[x][z] || m[y][z]) continue;
        if (label[z] != label[x] && label[z] != label[y]) {
          return gpsc::SilWitness{g.vertex(x), g.vertex(y), g.vertex(z)};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_automorphism(Matrix const& m, std::vector<std::size_t> const& p) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i][j] != m[p[i]][p[j]]) return false;
    }
  }
  return true;
}

// Every automorphism as an image list over vertex positions, colours
// respected, found by trying all n! permutations.
inline std::vector<std::vector<std::size_t>> all_automorphisms(Matrix const& m,
                                                               std::vector<std::string> const& colour = {}) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = is_automorphism(m, p);
    for (std::size_t i = 0; ok && i < colour.size(); ++i) ok = colour[i] == colour[p[i]];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool isomorphic(Matrix const& a, Matrix const& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < a.size(); ++j) ok = a[i][j] == b[p[i]][p[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Number of isomorphism classes of graphs on n vertices, by counting the
// orbits of each permutation on unordered pairs.
inline std::uint64_t burnside_class_count(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t total = 0;
  std::uint64_t perms = 0;
  do {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::uint64_t cycles = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (seen.contains({i, j})) continue;
        ++cycles;
        auto a = i;
        auto b = j;
        while (!seen.contains({std::min(a, b), std::max(a, b)})) {
          seen.insert({std::min(a, b), std::max(a, b)});
          a = p[a];
          b = p[b];
        }
      }
    }
    total += std::uint64_t{1} << cycles;
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / perms;
}

// Words over generators with orders (0 = infinite) as (generator, exponent)
// letters. Exponents of finite generators are kept in [1, order-1].
struct Letter {
  std::size_t gen;
  std::int64_t exp;
  auto operator<=>(Letter const&) const = default;
};
using RawWord = std::vector<Letter>;

inline std::int64_t reduce(std::int64_t e, std::int64_t order) {
  if (order == 0) return e;
  e %= order;
  return e < 0 ? e + order : e;
}

inline RawWord canonical_letters(RawWord w, std::vector<std::int64_t> const& orders) {
  RawWord out;
  for (auto l : w) {
    l.exp = reduce(l.exp, orders[l.gen]);
    if (l.exp != 0) out.push_back(l);
  }
  return out;
}

// All words reachable from `w` by swapping adjacent commuting letters and
// merging adjacent letters of one generator. None of these moves lengthens
// a word, so the closure is finite.
inline std::set<RawWord> rewrite_closure(RawWord const& w, Matrix const& commute,
                                         std::vector<std::int64_t> const& orders) {
  std::set<RawWord> seen{canonical_letters(w, orders)};
  std::vector<RawWord> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      auto const a = cur[i];
      auto const b = cur[i + 1];
      RawWord next;
      if (a.gen == b.gen) {
        next = cur;
        next[i].exp = reduce(a.exp + b.exp, orders[a.gen]);
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        if (next[i].exp == 0) next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      } else if (commute[a.gen][b.gen]) {
        next = cur;
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

inline std::size_t min_length(std::set<RawWord> const& closure) {
  std::size_t best = SIZE_MAX;
  for (auto const& w : closure) best = std::min(best, w.size());
  return best;
}

inline bool equal_by_rewriting(RawWord const& a, RawWord const& b, Matrix const& commute,
                               std::vector<std::int64_t> const& orders) {
  auto const ca = rewrite_closure(a, commute, orders);
  auto const cb = rewrite_closure(b, commute, orders);
  auto const la = min_length(ca);
  if (la != min_length(cb)) return false;
  for (auto const& w : ca) {
    if (w.size() == la && cb.contains(w)) return true;
  }
  return false;
}

}  // namespace oracle

#endif  // GPSC_TESTS_ORACLES_HPP_
