#ifndef GPSC_SYMMETRY_HPP_
#define GPSC_SYMMETRY_HPP_

// Graph automorphisms (optionally label-respecting), asymmetry, canonical
// forms of small graphs, and the exhaustive isomorphism-class census.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpsc/abelian.hpp"
#include "gpsc/graph.hpp"

namespace gpsc {

// Bijection of a vertex set onto itself, stored as images of the sorted
// domain.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  // Throws InputError unless `images` is a rearrangement of `domain`.
  VertexPermutation(std::vector<VertexId> domain, std::vector<VertexId> images);
  static VertexPermutation identity(std::vector<VertexId> domain);

  VertexId const& operator()(VertexId const& v) const;
  // (*this) after `first`.
  VertexPermutation after(VertexPermutation const& first) const;
  VertexPermutation inverse() const;
  bool is_identity() const { return domain_ == images_; }

  std::vector<VertexId> const& domain() const { return domain_; }
  std::vector<VertexId> const& images() const { return images_; }
  // "a->b c->a b->c" listing only moved points, or "id".
  std::string to_string() const;

  bool operator==(VertexPermutation const&) const = default;
  std::strong_ordering operator<=>(VertexPermutation const& other) const {
    return images_ <=> other.images_;
  }

 private:
  std::vector<VertexId> domain_;
  std::vector<VertexId> images_;
};

// Vertex colours that automorphisms must respect; empty means unlabeled.
using Colouring = std::map<VertexId, std::string>;

Colouring colouring_of(LabelMap const& labels);

// True iff `p` maps edges to edges, non-edges to non-edges and respects
// `colours`.
bool preserves(SimplicialGraph const& g, VertexPermutation const& p, Colouring const& colours = {});

// The full automorphism group, identity first and the rest ordered by image
// sequence.
std::vector<VertexPermutation> automorphisms(SimplicialGraph const& g, Colouring const& colours = {});

bool is_asymmetric(SimplicialGraph const& g, Colouring const& colours = {});

// Some non-identity automorphism, if one exists.
std::optional<VertexPermutation> nontrivial_automorphism(SimplicialGraph const& g,
                                                         Colouring const& colours = {});

inline constexpr std::size_t kDefaultCanonicalBound = 10;
inline constexpr std::size_t kMaxCanonicalBound = 11;

// Minimum upper-triangle adjacency code over all vertex orders compatible
// with the refined degree partition. Equal for g and h iff g is isomorphic
// to h.
struct CanonicalForm {
  std::size_t order = 0;
  std::uint64_t code = 0;
  auto operator<=>(CanonicalForm const&) const = default;

  std::size_t edge_count() const;
  // Representative on ids "0".."n-1" realising the code.
  SimplicialGraph to_graph() const;
};

// Throws InputError if |V(g)| exceeds `bound` (at most kMaxCanonicalBound).
CanonicalForm canonical_form(SimplicialGraph const& g, std::size_t bound = kDefaultCanonicalBound);

struct CensusReport {
  std::size_t n = 0;
  std::size_t labeled_graphs = 0;
  std::size_t total_classes = 0;
  std::size_t asymmetric_classes = 0;
  std::size_t asymmetric_with_separating_star = 0;
  // Canonical representatives of the asymmetric classes, by code.
  std::vector<SimplicialGraph> representatives;
};

inline constexpr std::size_t kMaxCensusOrder = 7;

// Enumerates every labeled graph on n vertices. Throws InputError unless
// 1 <= n <= 7. `threads` = 0 picks the hardware concurrency; the result does
// not depend on it.
CensusReport census(std::size_t n, unsigned threads = 0);

}  // namespace gpsc

#endif  // GPSC_SYMMETRY_HPP_
