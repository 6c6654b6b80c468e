#include "gpsc/autos.hpp"

#include <algorithm>
#include <numeric>

#include "gpsc/error.hpp"

namespace gpsc {

namespace {

std::string set_to_string(VertexSet const& s) {
  std::string out = "{";
  for (auto const& v : s) {
    if (out.size() > 1) out += ',';
    out += v;
  }
  return out + "}";
}

void check_exponent(std::int64_t e) {
  if (e > kMaxImageExponent || e < -kMaxImageExponent) {
    throw InputError("exponent " + std::to_string(e) + " exceeds the 2^16 cap");
  }
}

GeneratorMap with_images(GroupPresentation const& p, MapKind kind, std::string parameters) {
  GeneratorMap f = identity_map(p);
  f.kind = kind;
  f.parameters = std::move(parameters);
  return f;
}

bool star_subset(SimplicialGraph const& g, VertexSet const& a, VertexId const& w) {
  auto const st = g.star(w);
  return std::includes(st.begin(), st.end(), a.begin(), a.end());
}

}  // namespace

std::string to_string(MapKind k) {
  switch (k) {
    case MapKind::partial_conjugation:
      return "partial_conjugation";
    case MapKind::factor:
      return "factor";
    case MapKind::dominated_transvection:
      return "dominated_transvection";
    case MapKind::commutator_transvection:
      return "commutator_transvection";
    case MapKind::graph:
      return "graph";
    case MapKind::inner:
      return "inner";
    case MapKind::composite:
      return "composite";
    case MapKind::custom:
      break;
  }
  return "custom";
}

GeneratorMap make_custom(GroupPresentation const& p, std::vector<Word> images) {
  if (images.size() != p.rank()) throw InputError("a generator map needs one image per generator");
  GeneratorMap f;
  for (auto& w : images) f.images.push_back(p.normalize(w));
  return f;
}

GeneratorMap identity_map(GroupPresentation const& p) {
  GeneratorMap f;
  for (std::size_t g = 0; g < p.rank(); ++g) f.images.push_back(p.generator_word(g));
  return f;
}

GeneratorMap make_partial_conjugation(GroupPresentation const& p, VertexId const& v, std::int64_t exponent,
                                      VertexSet const& component) {
  auto const& g = p.graph();
  std::size_t const gv = p.generator(v);
  check_exponent(exponent);
  Word const x = p.generator_word(gv, exponent);
  if (x.empty()) {
    throw InputError("exponent " + std::to_string(exponent) + " is trivial for '" + v + "'");
  }
  VertexSet rest;
  for (auto const& u : g.vertices()) {
    if (!g.star(v).contains(u)) rest.insert(u);
  }
  auto const blocks = induced_components(g, rest);
  if (std::find(blocks.begin(), blocks.end(), component) == blocks.end()) {
    throw InputError(set_to_string(component) + " is not a component of V - st(" + v + ")");
  }
  auto f = with_images(p, MapKind::partial_conjugation,
                       "v=" + v + " x=" + p.format(x) + " C=" + set_to_string(component));
  for (auto const& u : component) {
    std::size_t const i = p.generator(u);
    f.images[i] = p.conjugate(x, p.generator_word(i));
  }
  return f;
}

GeneratorMap make_factor_automorphism(GroupPresentation const& p, VertexId const& v, std::int64_t multiplier) {
  std::size_t const gv = p.generator(v);
  std::int64_t const order = p.order(gv);
  check_exponent(multiplier);
  bool const unit = order == 0 ? (multiplier == 1 || multiplier == -1) : std::gcd(multiplier, order) == 1;
  if (!unit) {
    throw InputError("multiplier " + std::to_string(multiplier) + " is not a unit for '" + v + "' of order " +
                     (order == 0 ? std::string("infinity") : std::to_string(order)));
  }
  auto f = with_images(p, MapKind::factor, "v=" + v + " m=" + std::to_string(multiplier));
  f.images[gv] = p.generator_word(gv, multiplier);
  return f;
}

GeneratorMap make_dominated_transvection(GroupPresentation const& p, VertexId const& u, VertexId const& v) {
  auto const& g = p.graph();
  std::size_t const gu = p.generator(u);
  std::size_t const gv = p.generator(v);
  if (u == v) throw InputError("dominated transvection needs distinct vertices");
  if (!star_subset(g, g.star(u), v)) {
    throw InputError("st(" + u + ") is not contained in st(" + v + ")");
  }
  auto f = with_images(p, MapKind::dominated_transvection, "u=" + u + " v=" + v);
  f.images[gu] = p.multiply(p.generator_word(gu), p.generator_word(gv));
  if (auto bad = validate_homomorphism(p, f)) {
    throw InputError("u -> u v breaks the " + bad->describe() + " for these vertex orders");
  }
  return f;
}

GeneratorMap make_commutator_transvection(GroupPresentation const& p, VertexId const& u, VertexId const& v,
                                          VertexId const& w) {
  auto const& g = p.graph();
  std::size_t const gu = p.generator(u);
  std::size_t const gv = p.generator(v);
  std::size_t const gw = p.generator(w);
  if (u == v || v == w || u == w) throw InputError("u, v, w must be pairwise distinct");
  if (p.order(gu) != 0) throw InputError("'" + u + "' is not infinite cyclic");
  if (g.adjacent_at(gv, gw)) throw InputError("{" + v + "," + w + "} is an edge");
  auto const lk = g.link(u);
  if (!star_subset(g, lk, v)) throw InputError("lk(" + u + ") is not contained in st(" + v + ")");
  if (!star_subset(g, lk, w)) throw InputError("lk(" + u + ") is not contained in st(" + w + ")");
  auto f = with_images(p, MapKind::commutator_transvection, "u=" + u + " v=" + v + " w=" + w);
  f.images[gu] = p.multiply(p.generator_word(gu), p.commutator(p.generator_word(gv), p.generator_word(gw)));
  return f;
}

GeneratorMap make_graph_automorphism(GroupPresentation const& p, VertexPermutation const& sigma) {
  Colouring orders;
  for (std::size_t i = 0; i < p.rank(); ++i) orders[p.generator_id(i)] = std::to_string(p.order(i));
  if (!preserves(p.graph(), sigma, orders)) {
    throw InputError("permutation " + sigma.to_string() + " does not preserve adjacency and labels");
  }
  auto f = with_images(p, MapKind::graph, sigma.to_string());
  for (std::size_t i = 0; i < p.rank(); ++i) f.images[i] = p.generator_word(sigma(p.generator_id(i)));
  return f;
}

GeneratorMap inner(GroupPresentation const& p, Word const& a) {
  Word const by = p.normalize(a);
  auto f = with_images(p, MapKind::inner, "a=" + p.format(by));
  for (auto& image : f.images) image = p.conjugate(by, image);
  return f;
}

Word apply(GroupPresentation const& p, GeneratorMap const& f, Word const& w) {
  if (f.images.size() != p.rank()) throw InputError("map does not match presentation");
  Word out = p.normalize(Word());
  for (auto const& s : w.syllables()) {
    if (s.generator >= p.rank()) throw InputError("unknown generator index " + std::to_string(s.generator));
    out = p.multiply(out, p.power(f.images[s.generator], s.exponent));
  }
  return out;
}

GeneratorMap compose(GroupPresentation const& p, GeneratorMap const& f, GeneratorMap const& g) {
  GeneratorMap out;
  out.kind = MapKind::composite;
  out.parameters = "(" + to_string(f.kind) + ") o (" + to_string(g.kind) + ")";
  for (auto const& image : g.images) out.images.push_back(apply(p, f, image));
  return out;
}

std::string RelationViolation::describe() const {
  if (kind == Kind::order) return "order relation of '" + u + "'";
  return "commutation relation on edge {" + u + "," + v + "}";
}

std::optional<RelationViolation> validate_homomorphism(GroupPresentation const& p, GeneratorMap const& f) {
  if (f.images.size() != p.rank()) throw InputError("map does not match presentation");
  for (std::size_t i = 0; i < p.rank(); ++i) {
    if (p.order(i) != 0 && !p.power(f.images[i], p.order(i)).empty()) {
      return RelationViolation{RelationViolation::Kind::order, p.generator_id(i), {}};
    }
  }
  for (auto const& [a, b] : p.graph().edges()) {
    auto const i = p.generator(a);
    auto const j = p.generator(b);
    if (!p.commutator(f.images[i], f.images[j]).empty()) {
      return RelationViolation{RelationViolation::Kind::commutation, a, b};
    }
  }
  return std::nullopt;
}

IaVerdict is_ia(GroupPresentation const& p, GeneratorMap const& f) {
  if (auto bad = validate_homomorphism(p, f)) {
    throw InputError("not a homomorphism: " + bad->describe() + " fails");
  }
  for (std::size_t i = 0; i < p.rank(); ++i) {
    auto const v = p.ab_vector(f.images[i]);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != (i == j ? 1 : 0)) return IaVerdict{false, p.generator_id(i)};
    }
  }
  return {};
}

ConjugatorSearch find_conjugator(GroupPresentation const& p, GeneratorMap const& f, std::size_t max_radius) {
  if (auto bad = validate_homomorphism(p, f)) {
    throw InputError("not a homomorphism: " + bad->describe() + " fails");
  }
  ConjugatorSearch result;
  result.radius = max_radius;
  std::vector<Word> generators;
  for (std::size_t i = 0; i < p.rank(); ++i) generators.push_back(p.generator_word(i));
  p.for_each_in_ball(
      max_radius,
      [&](Word const& a) {
        for (std::size_t i = 0; i < p.rank(); ++i) {
          if (p.conjugate(a, generators[i]) != f.images[i]) return true;
        }
        result.conjugator = a;
        return false;
      },
      std::max(max_radius, kDefaultBallBound));
  return result;
}

}  // namespace gpsc
