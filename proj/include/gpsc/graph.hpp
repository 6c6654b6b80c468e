#ifndef GPSC_GRAPH_HPP_
#define GPSC_GRAPH_HPP_

// Finite simplicial graphs and the combinatorial predicates on links and
// stars that decide (semi)completeness of graph products.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gpsc {

using VertexId = std::string;
using VertexSet = std::set<VertexId>;
using Edge = std::pair<VertexId, VertexId>;

// Immutable simple graph. Vertices are kept in lexicographic order of their
// ids; every search below returns the least witness under that order.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  // Throws InputError on duplicate ids, loops or edges naming unknown
  // vertices. Duplicate edges are merged.
  SimplicialGraph(std::vector<VertexId> vertices, std::vector<Edge> const& edges);

  // Graph on ids "0", "1", ... given by a row-major n*n adjacency matrix.
  // The ids sort numerically only while n <= 10.
  static SimplicialGraph from_matrix(std::size_t n, std::vector<std::uint8_t> const& matrix);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  std::vector<VertexId> const& vertices() const noexcept { return vertices_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  // Edges as (smaller id, larger id), sorted.
  std::vector<Edge> edges() const;

  bool contains(VertexId const& v) const;
  bool adjacent(VertexId const& v, VertexId const& w) const;
  std::size_t degree(VertexId const& v) const;
  VertexSet link(VertexId const& v) const;
  VertexSet star(VertexId const& v) const;

  SimplicialGraph induced(VertexSet const& keep) const;
  SimplicialGraph without(VertexSet const& drop) const;

  // Positional view. Positions follow the sorted vertex order and are only
  // meaningful for this graph instance.
  std::size_t index_of(VertexId const& v) const;
  VertexId const& vertex(std::size_t i) const { return vertices_[i]; }
  bool adjacent_at(std::size_t i, std::size_t j) const noexcept {
    return adjacency_[i * vertices_.size() + j] != 0;
  }
  std::vector<std::size_t> const& neighbours(std::size_t i) const { return neighbours_[i]; }

  bool operator==(SimplicialGraph const& other) const {
    return vertices_ == other.vertices_ && adjacency_ == other.adjacency_;
  }

 private:
  void build_neighbours();

  std::vector<VertexId> vertices_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::size_t edge_count_ = 0;
};

// A separating intersection of links (x, y | z).
struct SilWitness {
  VertexId x;
  VertexId y;
  VertexId z;
  bool operator==(SilWitness const&) const = default;
};

struct LinkCondition {
  bool holds = true;
  // First ordered pair (v, w) with lk(v) contained in st(w).
  std::optional<std::pair<VertexId, VertexId>> violation;
};

// Connected components of the subgraph induced on `s`, each sorted, ordered
// by least vertex. Throws InputError if `s` names an unknown vertex.
std::vector<VertexSet> induced_components(SimplicialGraph const& g, VertexSet const& s);

std::vector<VertexSet> connected_components(SimplicialGraph const& g);
bool is_connected(SimplicialGraph const& g);

// Least v whose star complement induces at least two components.
std::optional<VertexId> has_separating_star(SimplicialGraph const& g);

// Lexicographically least SIL (x, y | z) with x < y.
std::optional<SilWitness> has_sil(SimplicialGraph const& g);

// True iff `w` is a SIL of `g`; recomputes the component test from scratch.
bool is_sil(SimplicialGraph const& g, SilWitness const& w);

// All ordered pairs v != w with st(v) a subset of st(w), sorted.
std::vector<std::pair<VertexId, VertexId>> star_containments(SimplicialGraph const& g);

LinkCondition link_condition(SimplicialGraph const& g);

// Vertices whose star is the whole vertex set.
VertexSet full_star_vertices(SimplicialGraph const& g);

namespace detail {

// Components of the subgraph induced on positions with mask[i] set, as
// sorted position lists ordered by least position.
std::vector<std::vector<std::size_t>> components_of(SimplicialGraph const& g,
                                                    std::vector<bool> const& mask);

std::optional<std::size_t> separating_star_index(SimplicialGraph const& g);

}  // namespace detail

}  // namespace gpsc

#endif  // GPSC_GRAPH_HPP_
