#include "gpsc/symmetry.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <set>
#include <thread>

#include "gpsc/error.hpp"

namespace gpsc {

// ---------------------------------------------------------------------------
// VertexPermutation

VertexPermutation::VertexPermutation(std::vector<VertexId> domain, std::vector<VertexId> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (domain_.size() != images_.size()) throw InputError("permutation has wrong length");
  std::vector<std::size_t> order(domain_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return domain_[a] < domain_[b]; });
  std::vector<VertexId> d, im;
  for (std::size_t i : order) {
    d.push_back(domain_[i]);
    im.push_back(images_[i]);
  }
  domain_ = std::move(d);
  images_ = std::move(im);
  auto sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != domain_ || std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end()) {
    throw InputError("images are not a rearrangement of the domain");
  }
}

VertexPermutation VertexPermutation::identity(std::vector<VertexId> domain) {
  auto images = domain;
  return VertexPermutation(std::move(domain), std::move(images));
}

VertexId const& VertexPermutation::operator()(VertexId const& v) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
  if (it == domain_.end() || *it != v) throw InputError("vertex '" + v + "' not in permutation domain");
  return images_[static_cast<std::size_t>(it - domain_.begin())];
}

VertexPermutation VertexPermutation::after(VertexPermutation const& first) const {
  if (first.domain_ != domain_) throw InputError("composing permutations of different sets");
  std::vector<VertexId> images;
  images.reserve(domain_.size());
  for (auto const& v : first.images_) images.push_back((*this)(v));
  return VertexPermutation(domain_, std::move(images));
}

VertexPermutation VertexPermutation::inverse() const {
  return VertexPermutation(images_, domain_);
}

std::string VertexPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i] == images_[i]) continue;
    if (!out.empty()) out += ' ';
    out += domain_[i] + "->" + images_[i];
  }
  return out.empty() ? "id" : out;
}

// ---------------------------------------------------------------------------
// Colour refinement

namespace {

// Canonical colour refinement: colours are ranks of (colour, sorted
// neighbour colours) signatures, iterated until the number of cells is
// stable. Depends only on isomorphism-invariant data.
template <typename Adjacent>
std::vector<int> refine(std::size_t n, std::vector<int> colours, Adjacent&& adjacent) {
  std::size_t cells = std::set<int>(colours.begin(), colours.end()).size();
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(colours[v]);
      std::vector<int> nb;
      for (std::size_t w = 0; w < n; ++w) {
        if (w != v && adjacent(v, w)) nb.push_back(colours[w]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t v = 0; v < n; ++v) {
      colours[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    }
    if (uniq.size() == cells) return colours;
    cells = uniq.size();
  }
}

std::vector<int> initial_colours(SimplicialGraph const& g, Colouring const& colours) {
  std::size_t const n = g.size();
  std::vector<std::string> keys(n);
  if (!colours.empty()) {
    for (std::size_t v = 0; v < n; ++v) {
      auto it = colours.find(g.vertex(v));
      if (it == colours.end()) throw InputError("vertex '" + g.vertex(v) + "' has no colour");
      keys[v] = it->second;
    }
  }
  auto uniq = keys;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<int> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), keys[v]) - uniq.begin());
  }
  return out;
}

// Depth-first search over vertex images. `visit` returns false to stop.
void search_automorphisms(SimplicialGraph const& g, Colouring const& colours,
                          std::function<bool(std::vector<std::size_t> const&)> const& visit) {
  std::size_t const n = g.size();
  if (n == 0) {
    visit({});
    return;
  }
  auto const colour = refine(n, initial_colours(g, colours),
                             [&](std::size_t a, std::size_t b) { return g.adjacent_at(a, b); });

  // Assign vertices in an order that keeps each new vertex adjacent to
  // many already-assigned ones.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> cell_size(n, 0);
  for (int c : colour) ++cell_size[static_cast<std::size_t>(c)];
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    std::size_t best_links = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (std::size_t w : g.neighbours(v)) links += placed[w];
      auto better = [&] {
        if (best == n) return true;
        if (links != best_links) return links > best_links;
        return cell_size[colour[v]] < cell_size[colour[best]];
      };
      if (better()) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      if (!visit(image)) stop = true;
      return;
    }
    std::size_t const v = order[depth];
    for (std::size_t w = 0; w < n && !stop; ++w) {
      if (used[w] || colour[w] != colour[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t const u = order[d];
        ok = g.adjacent_at(u, v) == g.adjacent_at(image[u], w);
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      extend(depth + 1);
      used[w] = false;
      image[v] = n;
    }
  };
  extend(0);
}

}  // namespace

Colouring colouring_of(LabelMap const& labels) {
  Colouring out;
  for (auto const& [v, label] : labels) out[v] = label.key();
  return out;
}

bool preserves(SimplicialGraph const& g, VertexPermutation const& p, Colouring const& colours) {
  if (p.domain() != g.vertices()) return false;
  std::size_t const n = g.size();
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = g.index_of(p.images()[i]);
  for (std::size_t i = 0; i < n; ++i) {
    if (!colours.empty() && colours.at(g.vertex(i)) != colours.at(g.vertex(img[i]))) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.adjacent_at(i, j) != g.adjacent_at(img[i], img[j])) return false;
    }
  }
  return true;
}

std::vector<VertexPermutation> automorphisms(SimplicialGraph const& g, Colouring const& colours) {
  std::vector<VertexPermutation> out;
  search_automorphisms(g, colours, [&](std::vector<std::size_t> const& image) {
    std::vector<VertexId> ids;
    ids.reserve(image.size());
    for (std::size_t w : image) ids.push_back(g.vertex(w));
    out.emplace_back(g.vertices(), std::move(ids));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexPermutation> nontrivial_automorphism(SimplicialGraph const& g, Colouring const& colours) {
  std::optional<VertexPermutation> out;
  search_automorphisms(g, colours, [&](std::vector<std::size_t> const& image) {
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] == i) continue;
      std::vector<VertexId> ids;
      for (std::size_t w : image) ids.push_back(g.vertex(w));
      out.emplace(g.vertices(), std::move(ids));
      return false;
    }
    return true;
  });
  return out;
}

bool is_asymmetric(SimplicialGraph const& g, Colouring const& colours) {
  return !nontrivial_automorphism(g, colours).has_value();
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

using Rows = std::array<std::uint16_t, kMaxCanonicalBound>;

// Codes place vertex p's adjacencies to positions 0..p-1 after those of
// vertex p-1, most significant first.
std::uint64_t canonical_code(std::size_t n, Rows const& adj) {
  if (n <= 1) return 0;
  auto adjacent = [&](std::size_t a, std::size_t b) { return ((adj[a] >> b) & 1u) != 0; };
  std::vector<int> init(n);
  for (std::size_t v = 0; v < n; ++v) init[v] = std::popcount(adj[v]);
  auto const colour = refine(n, init, adjacent);

  std::vector<int> slot_colour(colour.begin(), colour.end());
  std::sort(slot_colour.begin(), slot_colour.end());

  std::size_t const total_bits = n * (n - 1) / 2;
  std::array<std::size_t, kMaxCanonicalBound> at{};
  std::uint16_t used = 0;
  bool have_best = false;
  std::uint64_t best = 0;

  auto extend = [&](auto&& self, std::size_t p, std::uint64_t prefix) -> void {
    if (p == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    std::size_t const bits_after = total_bits - (p + 1) * p / 2;
    for (std::size_t v = 0; v < n; ++v) {
      if ((used >> v) & 1u || colour[v] != slot_colour[p]) continue;
      std::uint64_t code = prefix;
      for (std::size_t q = 0; q < p; ++q) code = (code << 1) | (adjacent(at[q], v) ? 1u : 0u);
      if (have_best && code > (best >> bits_after)) continue;
      at[p] = v;
      used |= static_cast<std::uint16_t>(1u << v);
      self(self, p + 1, code);
      used &= static_cast<std::uint16_t>(~(1u << v));
    }
  };
  extend(extend, 0, 0);
  return best;
}

}  // namespace

std::size_t CanonicalForm::edge_count() const { return static_cast<std::size_t>(std::popcount(code)); }

SimplicialGraph CanonicalForm::to_graph() const {
  std::vector<std::uint8_t> matrix(order * order, 0);
  std::size_t const total_bits = order < 2 ? 0 : order * (order - 1) / 2;
  std::size_t k = 0;
  for (std::size_t p = 1; p < order; ++p) {
    for (std::size_t q = 0; q < p; ++q, ++k) {
      if ((code >> (total_bits - 1 - k)) & 1u) {
        matrix[p * order + q] = 1;
        matrix[q * order + p] = 1;
      }
    }
  }
  return SimplicialGraph::from_matrix(order, matrix);
}

CanonicalForm canonical_form(SimplicialGraph const& g, std::size_t bound) {
  bound = std::min(bound, kMaxCanonicalBound);
  if (g.size() > bound) {
    throw InputError("canonical form bound exceeded: " + std::to_string(g.size()) + " > " +
                     std::to_string(bound) + " vertices");
  }
  Rows rows{};
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t w : g.neighbours(v)) rows[v] |= static_cast<std::uint16_t>(1u << w);
  }
  return CanonicalForm{g.size(), canonical_code(g.size(), rows)};
}

CensusReport census(std::size_t n, unsigned threads) {
  if (n < 1 || n > kMaxCensusOrder) {
    throw InputError("census order must lie in [1, " + std::to_string(kMaxCensusOrder) + "], got " +
                     std::to_string(n));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::uint64_t const count = std::uint64_t{1} << pairs.size();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  std::vector<std::set<std::uint64_t>> found(threads);
  auto work = [&](unsigned t) {
    for (std::uint64_t mask = t; mask < count; mask += threads) {
      Rows rows{};
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1u) {
          auto [i, j] = pairs[e];
          rows[i] |= static_cast<std::uint16_t>(1u << j);
          rows[j] |= static_cast<std::uint16_t>(1u << i);
        }
      }
      found[t].insert(canonical_code(n, rows));
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
  }
  std::set<std::uint64_t> classes;
  for (auto const& s : found) classes.insert(s.begin(), s.end());

  CensusReport report;
  report.n = n;
  report.labeled_graphs = static_cast<std::size_t>(count);
  report.total_classes = classes.size();
  for (std::uint64_t code : classes) {
    auto g = CanonicalForm{n, code}.to_graph();
    if (!is_asymmetric(g)) continue;
    ++report.asymmetric_classes;
    if (has_separating_star(g)) ++report.asymmetric_with_separating_star;
    report.representatives.push_back(std::move(g));
  }
  return report;
}

}  // namespace gpsc
