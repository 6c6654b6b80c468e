#ifndef GPSC_WORDS_HPP_
#define GPSC_WORDS_HPP_

// Elements of a graph product of cyclic groups as syllable words, with a
// canonical normal form: reduced (no syllable can be merged with an
// equal-vertex syllable across commuting ones), then the lexicographically
// least arrangement among all commuting shuffles.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gpsc/abelian.hpp"
#include "gpsc/graph.hpp"

namespace gpsc {

// A power of one generator; generators are numbered by the sorted order of
// the expanded vertex ids.
struct Syllable {
  std::size_t generator = 0;
  std::int64_t exponent = 1;
  bool operator==(Syllable const&) const = default;
  auto operator<=>(Syllable const&) const = default;
};

class GroupPresentation;

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {}

  std::vector<Syllable> const& syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }
  // Set only on words produced by GroupPresentation::normalize.
  bool is_normal() const { return normal_; }

  // Syllable-for-syllable; the normal flag is ignored.
  bool operator==(Word const& other) const { return syllables_ == other.syllables_; }
  // Shortlex on syllables.
  std::strong_ordering operator<=>(Word const& other) const {
    if (auto c = length() <=> other.length(); c != 0) return c;
    return syllables_ <=> other.syllables_;
  }

 private:
  friend class GroupPresentation;
  std::vector<Syllable> syllables_;
  bool normal_ = false;
};

inline constexpr std::size_t kDefaultBallBound = 10;

class GroupPresentation {
 public:
  // Generator orders come from `eg.factor_of`; each is 0 or at least 2.
  explicit GroupPresentation(ExpandedGraph eg);
  // Expands `labels` over `g` first.
  static GroupPresentation from_labels(SimplicialGraph const& g, LabelMap const& labels);

  ExpandedGraph const& expanded() const { return expanded_; }
  SimplicialGraph const& graph() const { return expanded_.graph; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t order(std::size_t generator) const { return orders_[generator]; }
  std::vector<std::int64_t> const& orders() const { return orders_; }
  VertexId const& generator_id(std::size_t generator) const { return graph().vertex(generator); }
  std::size_t generator(VertexId const& id) const { return graph().index_of(id); }
  // Distinct generators joined by an edge.
  bool commute(std::size_t a, std::size_t b) const { return a != b && graph().adjacent_at(a, b); }

  // Normalised v^exponent.
  Word generator_word(std::size_t generator, std::int64_t exponent = 1) const;
  Word generator_word(VertexId const& id, std::int64_t exponent = 1) const {
    return generator_word(generator(id), exponent);
  }

  // Throws InputError on an unknown generator index.
  Word normalize(Word const& w) const;
  Word multiply(Word const& a, Word const& b) const;
  Word invert(Word const& a) const;
  Word power(Word const& a, std::int64_t k) const;
  Word conjugate(Word const& by, Word const& w) const;  // by * w * by^-1
  Word commutator(Word const& a, Word const& b) const;  // a b a^-1 b^-1
  bool equals(Word const& a, Word const& b) const;

  // Every element with normal form of at most `radius` syllables, in
  // shortlex order. Exponents of infinite generators range over
  // [-radius, radius]. Throws InputError if radius > bound.
  std::vector<Word> enumerate_ball(std::size_t radius, std::size_t bound = kDefaultBallBound) const;
  // Streams the same elements; `visit` returns false to stop early.
  void for_each_in_ball(std::size_t radius, std::function<bool(Word const&)> const& visit,
                        std::size_t bound = kDefaultBallBound) const;

  // Per-generator exponent sums, reduced modulo finite orders.
  std::vector<std::int64_t> ab_vector(Word const& w) const;

  // Text syntax: whitespace separated `vertex^exp` tokens, exponent 1 when
  // omitted; "" or "1" is the identity.
  Word parse(std::string_view text) const;
  std::string format(Word const& w) const;

 private:
  std::int64_t reduce_exponent(std::size_t generator, std::int64_t e) const;

  ExpandedGraph expanded_;
  std::vector<std::int64_t> orders_;
};

}  // namespace gpsc

#endif  // GPSC_WORDS_HPP_
