#ifndef GPSC_ABELIAN_HPP_
#define GPSC_ABELIAN_HPP_

// Vertex group labels, primary decomposition of finitely generated abelian
// groups, and the clique expansion that turns a graph product of such
// groups into one of cyclic groups of infinite or prime-power order.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gpsc/graph.hpp"

namespace gpsc {

enum class Tristate { yes, no, unknown };

std::string to_string(Tristate t);
Tristate tristate_from_string(std::string const& s);

// Z^free_rank x Z/t1 x Z/t2 x ...; torsion entries need not be invariant
// factors.
struct FGAbelian {
  std::uint32_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  bool operator==(FGAbelian const&) const = default;
};

// A vertex group about which only flags are known.
struct NonAbelianMarker {
  std::string name;
  Tristate known_semicomplete = Tristate::unknown;
  bool operator==(NonAbelianMarker const&) const = default;
};

class GroupLabel {
 public:
  // Throws InputError for the trivial group or a torsion entry outside [2, 2^31).
  GroupLabel(FGAbelian a);
  GroupLabel(NonAbelianMarker m);

  static GroupLabel cyclic(std::int64_t order);  // 0 means infinite cyclic
  static GroupLabel integers() { return cyclic(0); }

  bool is_abelian() const { return std::holds_alternative<FGAbelian>(value_); }
  FGAbelian const& abelian() const;
  NonAbelianMarker const& marker() const;

  // Isomorphism-invariant key: two abelian labels share a key iff the
  // groups are isomorphic; markers are keyed by name.
  std::string key() const;
  // Human-readable form such as "Z^2 x Z/12" or "Sym(5)".
  std::string display() const;

  bool operator==(GroupLabel const&) const = default;

 private:
  std::variant<FGAbelian, NonAbelianMarker> value_;
};

using LabelMap = std::map<VertexId, GroupLabel>;

// Infinite cyclic (order 0) or cyclic of prime-power order.
struct CyclicFactor {
  std::int64_t order = 0;
  bool infinite() const { return order == 0; }
  bool operator==(CyclicFactor const&) const = default;
  auto operator<=>(CyclicFactor const&) const = default;
};

// free_rank infinite factors, then the prime-power parts of every torsion
// entry in ascending order.
std::vector<CyclicFactor> primary_decomposition(FGAbelian const& g);

// Prime factorisation by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

struct ExpandedGraph {
  SimplicialGraph graph;
  std::map<VertexId, CyclicFactor> factor_of;
  std::map<VertexId, VertexId> origin_of;
};

// Replaces each vertex by a clique on its cyclic factors. A vertex with a
// single factor keeps its id; otherwise the factors are named "<id>.1",
// "<id>.2", ... in decomposition order. Throws InputError on a non-abelian
// label, a missing label, or an id collision.
ExpandedGraph expand_graph(SimplicialGraph const& g, LabelMap const& labels);

// Cyclic orders (0 = infinite) in expanded vertex order.
std::vector<std::int64_t> abelianization_signature(ExpandedGraph const& eg);

}  // namespace gpsc

#endif  // GPSC_ABELIAN_HPP_
