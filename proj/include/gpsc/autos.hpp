#ifndef GPSC_AUTOS_HPP_
#define GPSC_AUTOS_HPP_

// Endomorphisms of a graph product of cyclic groups given by generator
// images: the standard automorphism families, relation checking, exact
// IA-membership and a bounded search for an inner witness.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpsc/symmetry.hpp"
#include "gpsc/words.hpp"

namespace gpsc {

enum class MapKind {
  partial_conjugation,
  factor,
  dominated_transvection,
  commutator_transvection,
  graph,
  inner,
  composite,
  custom,
};

std::string to_string(MapKind k);

struct GeneratorMap {
  // images[i] is the normalised image of generator i.
  std::vector<Word> images;
  MapKind kind = MapKind::custom;
  // Construction data, e.g. "v=x x=x C={y}".
  std::string parameters;

  // Equality is generator by generator on the images.
  bool operator==(GeneratorMap const& other) const { return images == other.images; }
};

// Largest |exponent| accepted in constructor parameters.
inline constexpr std::int64_t kMaxImageExponent = std::int64_t{1} << 16;

// Normalises the given images; throws InputError if a generator is missing.
GeneratorMap make_custom(GroupPresentation const& p, std::vector<Word> images);
GeneratorMap identity_map(GroupPresentation const& p);

// Conjugates the generators of `component` by v^exponent. `component` must be
// exactly one connected component of the subgraph spanned by V - st(v).
GeneratorMap make_partial_conjugation(GroupPresentation const& p, VertexId const& v, std::int64_t exponent,
                                      VertexSet const& component);

// v -> v^multiplier; the multiplier must be a unit modulo the order of v
// (or +-1 for infinite v).
GeneratorMap make_factor_automorphism(GroupPresentation const& p, VertexId const& v, std::int64_t multiplier);

// u -> u v, requires u != v and st(u) inside st(v). Throws InputError when
// the vertex orders make the map break a defining relation.
GeneratorMap make_dominated_transvection(GroupPresentation const& p, VertexId const& u, VertexId const& v);

// u -> u v w v^-1 w^-1 for infinite cyclic u, non-adjacent v, w and
// lk(u) inside st(v) and st(w). Errors name the failed condition.
GeneratorMap make_commutator_transvection(GroupPresentation const& p, VertexId const& u, VertexId const& v,
                                          VertexId const& w);

// Requires `sigma` to preserve adjacency and generator orders.
GeneratorMap make_graph_automorphism(GroupPresentation const& p, VertexPermutation const& sigma);

// v -> a v a^-1.
GeneratorMap inner(GroupPresentation const& p, Word const& a);

Word apply(GroupPresentation const& p, GeneratorMap const& f, Word const& w);

// f after g.
GeneratorMap compose(GroupPresentation const& p, GeneratorMap const& f, GeneratorMap const& g);

struct RelationViolation {
  enum class Kind { order, commutation } kind;
  VertexId u;
  VertexId v;  // empty for order relations
  std::string describe() const;
};

// Empty when every defining relation holds on the images, so the map
// extends to an endomorphism.
std::optional<RelationViolation> validate_homomorphism(GroupPresentation const& p, GeneratorMap const& f);

struct IaVerdict {
  bool in_ia = true;
  // First generator whose abelianised image is not its own unit vector.
  std::optional<VertexId> witness;
};

// Throws InputError if `f` is not a homomorphism.
IaVerdict is_ia(GroupPresentation const& p, GeneratorMap const& f);

inline constexpr std::size_t kDefaultConjugatorRadius = 8;

struct ConjugatorSearch {
  std::optional<Word> conjugator;  // shortlex-least witness
  std::size_t radius = 0;          // searched radius
  bool found() const { return conjugator.has_value(); }
};

// Looks for a with a v a^-1 = f(v) for all generators among the words of
// syllable length <= max_radius. A miss says nothing beyond that radius.
ConjugatorSearch find_conjugator(GroupPresentation const& p, GeneratorMap const& f,
                                 std::size_t max_radius = kDefaultConjugatorRadius);

}  // namespace gpsc

#endif  // GPSC_AUTOS_HPP_
