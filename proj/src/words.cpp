#include "gpsc/words.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "gpsc/error.hpp"

namespace gpsc {

GroupPresentation::GroupPresentation(ExpandedGraph eg) : expanded_(std::move(eg)) {
  for (auto const& v : graph().vertices()) {
    auto it = expanded_.factor_of.find(v);
    if (it == expanded_.factor_of.end()) throw InputError("generator '" + v + "' has no order");
    if (it->second.order < 0 || it->second.order == 1) {
      throw InputError("generator '" + v + "' has invalid order " + std::to_string(it->second.order));
    }
    orders_.push_back(it->second.order);
  }
}

GroupPresentation GroupPresentation::from_labels(SimplicialGraph const& g, LabelMap const& labels) {
  return GroupPresentation(expand_graph(g, labels));
}

std::int64_t GroupPresentation::reduce_exponent(std::size_t generator, std::int64_t e) const {
  std::int64_t const o = orders_[generator];
  if (o == 0) return e;
  return ((e % o) + o) % o;
}

Word GroupPresentation::generator_word(std::size_t generator, std::int64_t exponent) const {
  return normalize(Word({Syllable{generator, exponent}}));
}

Word GroupPresentation::normalize(Word const& w) const {
  // Free reduction modulo commutation: each incoming syllable travels left
  // past commuting syllables and merges with the first equal-vertex one it
  // meets. The stack stays reduced, so deletions never enable new merges.
  std::vector<Syllable> stack;
  stack.reserve(w.length());
  for (auto const& s : w.syllables()) {
    if (s.generator >= rank()) {
      throw InputError("unknown generator index " + std::to_string(s.generator));
    }
    std::int64_t const e = reduce_exponent(s.generator, s.exponent);
    if (e == 0) continue;
    bool merged = false;
    for (std::size_t i = stack.size(); i > 0; --i) {
      auto& t = stack[i - 1];
      if (t.generator == s.generator) {
        std::int64_t sum = 0;
        if (__builtin_add_overflow(t.exponent, e, &sum)) throw InputError("exponent overflow");
        sum = reduce_exponent(s.generator, sum);
        if (sum == 0) {
          stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(i - 1));
        } else {
          t.exponent = sum;
        }
        merged = true;
        break;
      }
      if (!commute(t.generator, s.generator)) break;
    }
    if (!merged) stack.push_back(Syllable{s.generator, e});
  }

  // Lexicographically least linear extension of the dependence order:
  // repeatedly emit the smallest syllable that commutes with everything
  // still pending before it.
  std::size_t const n = stack.size();
  std::vector<bool> done(n, false);
  Word out;
  out.syllables_.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      bool free = true;
      for (std::size_t i = 0; i < j && free; ++i) {
        free = done[i] || commute(stack[i].generator, stack[j].generator);
      }
      if (free && (pick == n || stack[j] < stack[pick])) pick = j;
    }
    done[pick] = true;
    out.syllables_.push_back(stack[pick]);
  }
  out.normal_ = true;
  return out;
}

Word GroupPresentation::multiply(Word const& a, Word const& b) const {
  std::vector<Syllable> joined = a.syllables();
  joined.insert(joined.end(), b.syllables().begin(), b.syllables().end());
  return normalize(Word(std::move(joined)));
}

Word GroupPresentation::invert(Word const& a) const {
  std::vector<Syllable> rev;
  rev.reserve(a.length());
  for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it) {
    rev.push_back(Syllable{it->generator, -it->exponent});
  }
  return normalize(Word(std::move(rev)));
}

Word GroupPresentation::power(Word const& a, std::int64_t k) const {
  Word base = k < 0 ? invert(a) : normalize(a);
  std::uint64_t m = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Word result = normalize(Word());
  while (m) {
    if (m & 1u) result = multiply(result, base);
    m >>= 1;
    if (m) base = multiply(base, base);
  }
  return result;
}

Word GroupPresentation::conjugate(Word const& by, Word const& w) const {
  return multiply(multiply(by, w), invert(by));
}

Word GroupPresentation::commutator(Word const& a, Word const& b) const {
  return multiply(multiply(a, b), multiply(invert(a), invert(b)));
}

bool GroupPresentation::equals(Word const& a, Word const& b) const {
  return normalize(a) == normalize(b);
}

void GroupPresentation::for_each_in_ball(std::size_t radius, std::function<bool(Word const&)> const& visit,
                                         std::size_t bound) const {
  if (radius > bound) {
    throw InputError("ball radius " + std::to_string(radius) + " exceeds bound " + std::to_string(bound));
  }
  // Syllables that may extend a word.
  std::vector<Syllable> steps;
  for (std::size_t g = 0; g < rank(); ++g) {
    if (orders_[g] == 0) {
      auto const r = static_cast<std::int64_t>(radius);
      for (std::int64_t e = -r; e <= r; ++e) {
        if (e != 0) steps.push_back(Syllable{g, e});
      }
    } else {
      for (std::int64_t e = 1; e < orders_[g]; ++e) steps.push_back(Syllable{g, e});
    }
  }
  std::vector<Word> level{normalize(Word())};
  for (std::size_t len = 0;; ++len) {
    for (auto const& w : level) {
      if (!visit(w)) return;
    }
    if (len == radius) return;
    std::set<Word> next;
    for (auto const& w : level) {
      for (auto const& s : steps) {
        Word candidate = multiply(w, Word({s}));
        if (candidate.length() == len + 1) next.insert(std::move(candidate));
      }
    }
    if (next.empty()) return;
    level.assign(next.begin(), next.end());
  }
}

std::vector<Word> GroupPresentation::enumerate_ball(std::size_t radius, std::size_t bound) const {
  std::vector<Word> out;
  for_each_in_ball(
      radius,
      [&](Word const& w) {
        out.push_back(w);
        return true;
      },
      bound);
  return out;
}

std::vector<std::int64_t> GroupPresentation::ab_vector(Word const& w) const {
  std::vector<std::int64_t> out(rank(), 0);
  for (auto const& s : w.syllables()) {
    if (s.generator >= rank()) throw InputError("unknown generator index " + std::to_string(s.generator));
    out[s.generator] = reduce_exponent(s.generator, out[s.generator] + reduce_exponent(s.generator, s.exponent));
  }
  return out;
}

Word GroupPresentation::parse(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<Syllable> syllables;
  std::string token;
  while (in >> token) {
    if (token == "1" && !graph().contains("1")) continue;
    std::string id = token;
    std::int64_t exponent = 1;
    if (auto caret = token.rfind('^'); caret != std::string::npos) {
      id = token.substr(0, caret);
      std::string const digits = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw InputError("bad exponent in token '" + token + "'");
      }
    }
    if (!graph().contains(id)) throw InputError("unknown generator '" + id + "' in word");
    syllables.push_back(Syllable{generator(id), exponent});
  }
  return Word(std::move(syllables));
}

std::string GroupPresentation::format(Word const& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (auto const& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += generator_id(s.generator);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

}  // namespace gpsc
