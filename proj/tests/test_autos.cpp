#include <random>

#include "doctest.h"
#include "gpsc/autos.hpp"
#include "gpsc/error.hpp"
#include "gpsc/io.hpp"
#include "oracles.hpp"
#include "word_gen.hpp"

using namespace gpsc;

namespace {

GroupPresentation fixture(char const* name) {
  auto const doc = load_document(std::string(GPSC_FIXTURE_DIR) + "/" + name);
  return GroupPresentation::from_labels(doc.graph, doc.labels);
}

GroupPresentation uniform(SimplicialGraph const& g, std::int64_t order) {
  LabelMap labels;
  for (auto const& v : g.vertices()) labels.emplace(v, GroupLabel::cyclic(order));
  return GroupPresentation::from_labels(g, labels);
}

std::vector<VertexSet> star_complement_components(SimplicialGraph const& g, VertexId const& v) {
  VertexSet rest;
  for (auto const& u : g.vertices()) {
    if (!g.star(v).contains(u)) rest.insert(u);
  }
  return induced_components(g, rest);
}

}  // namespace

TEST_CASE("partial conjugation") {
  auto const p = fixture("gamma1_z2.json");
  auto const f = make_partial_conjugation(p, "x", 1, {"y"});
  CHECK(f.kind == MapKind::partial_conjugation);
  CHECK(f.parameters == "v=x x=x C={y}");
  CHECK(p.format(f.images[p.generator("y")]) == "x y x");
  CHECK(f.images[p.generator("z")] == p.generator_word("z"));
  CHECK_FALSE(validate_homomorphism(p, f));
  CHECK_THROWS_AS(make_partial_conjugation(p, "x", 1, {"y", "z"}), InputError);
  CHECK_THROWS_AS(make_partial_conjugation(p, "x", 1, {"c"}), InputError);
  CHECK_THROWS_AS(make_partial_conjugation(p, "x", 2, {"y"}), InputError);
  CHECK_THROWS_AS(make_partial_conjugation(p, "q", 1, {"y"}), InputError);
  CHECK_THROWS_AS(make_partial_conjugation(p, "x", kMaxImageExponent + 1, {"y"}), InputError);
}

TEST_CASE("factor automorphisms") {
  auto const p = fixture("gamma1_mixed.json");
  auto const f = make_factor_automorphism(p, "x", -1);
  CHECK(p.format(f.images[p.generator("x")]) == "x^-1");
  CHECK_FALSE(validate_homomorphism(p, f));
  auto const ia = is_ia(p, f);
  CHECK_FALSE(ia.in_ia);
  CHECK(ia.witness == VertexId("x"));
  CHECK_THROWS_AS(make_factor_automorphism(p, "x", 2), InputError);
  CHECK_THROWS_AS(make_factor_automorphism(p, "y", 2), InputError);
  CHECK(make_factor_automorphism(p, "y", 3) == identity_map(p));

  SimplicialGraph one({"t"}, {});
  auto const z9 = uniform(one, 9);
  CHECK_NOTHROW(make_factor_automorphism(z9, "t", 2));
  CHECK_THROWS_AS(make_factor_automorphism(z9, "t", 3), InputError);
}

TEST_CASE("dominated transvections leave IA") {
  auto const p = fixture("gamma1_z2.json");
  auto const f = make_dominated_transvection(p, "x", "c");
  CHECK(p.format(f.images[p.generator("x")]) == "c x");
  CHECK_FALSE(validate_homomorphism(p, f));
  auto const ia = is_ia(p, f);
  CHECK_FALSE(ia.in_ia);
  CHECK(ia.witness == VertexId("x"));
  CHECK_THROWS_AS(make_dominated_transvection(p, "c", "x"), InputError);
  CHECK_THROWS_AS(make_dominated_transvection(p, "x", "x"), InputError);

  SimplicialGraph edge({"a", "b"}, {{"a", "b"}});
  auto const mixed = GroupPresentation::from_labels(edge, {{"a", GroupLabel::cyclic(2)}, {"b", GroupLabel::cyclic(3)}});
  CHECK_THROWS_WITH_AS(make_dominated_transvection(mixed, "a", "b"), doctest::Contains("order relation"), InputError);
  auto const free = uniform(edge, 0);
  CHECK_FALSE(is_ia(free, make_dominated_transvection(free, "a", "b")).in_ia);
}

TEST_CASE("commutator transvections stay in IA") {
  auto const p = fixture("gamma1_mixed.json");
  auto const f = make_commutator_transvection(p, "x", "y", "z");
  CHECK(p.format(f.images[p.generator("x")]) == "x y z y z");
  CHECK_FALSE(validate_homomorphism(p, f));
  CHECK(is_ia(p, f).in_ia);
  CHECK_THROWS_WITH_AS(make_commutator_transvection(p, "y", "x", "z"), doctest::Contains("infinite"), InputError);
  CHECK_THROWS_WITH_AS(make_commutator_transvection(p, "x", "c", "y"), doctest::Contains("edge"), InputError);
  CHECK_THROWS_AS(make_commutator_transvection(p, "x", "y", "y"), InputError);
}

TEST_CASE("graphs without SIL admit no commutator transvection") {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 150) {
    auto const g = oracle::random_graph(rng, std::uniform_int_distribution<std::size_t>(3, 7)(rng), 0.5);
    if (oracle::sil(g)) continue;
    ++checked;
    auto const p = uniform(g, 0);
    for (auto const& u : g.vertices()) {
      for (auto const& v : g.vertices()) {
        for (auto const& w : g.vertices()) {
          REQUIRE_THROWS_AS(make_commutator_transvection(p, u, v, w), InputError);
        }
      }
    }
  }
}

TEST_CASE("graph automorphisms must preserve orders") {
  auto const p = fixture("gamma1_mixed.json");
  auto const& ids = p.graph().vertices();
  auto const swap_yz = VertexPermutation(ids, {"c", "x", "z", "y"});
  auto const f = make_graph_automorphism(p, swap_yz);
  CHECK(f.images[p.generator("y")] == p.generator_word("z"));
  CHECK_FALSE(validate_homomorphism(p, f));
  CHECK_FALSE(is_ia(p, f).in_ia);
  CHECK_THROWS_AS(make_graph_automorphism(p, VertexPermutation(ids, {"c", "y", "x", "z"})), InputError);
  CHECK_THROWS_AS(make_graph_automorphism(p, VertexPermutation(ids, {"x", "c", "y", "z"})), InputError);
}

TEST_CASE("relation violations are reported") {
  SimplicialGraph g({"a", "b", "c"}, {{"a", "b"}});
  auto const p = uniform(g, 2);
  auto const swap = make_custom(p, {p.parse("c"), p.parse("b"), p.parse("a")});
  auto const bad = validate_homomorphism(p, swap);
  REQUIRE(bad);
  CHECK(bad->kind == RelationViolation::Kind::commutation);
  CHECK(bad->describe() == "commutation relation on edge {a,b}");
  CHECK_THROWS_AS(is_ia(p, swap), InputError);
  CHECK_THROWS_AS(find_conjugator(p, swap, 2), InputError);

  auto const long_image = make_custom(p, {p.parse("a c"), p.parse("b"), p.parse("c")});
  auto const order = validate_homomorphism(p, long_image);
  REQUIRE(order);
  CHECK(order->kind == RelationViolation::Kind::order);
  CHECK(order->u == "a");
  CHECK_THROWS_AS(make_custom(p, {p.parse("a")}), InputError);
}

TEST_CASE("inner automorphisms, composition and application") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    auto const p = wordgen::random_presentation(rng, 5);
    auto const a = wordgen::to_word(wordgen::random_word(rng, p, 4));
    auto const b = wordgen::to_word(wordgen::random_word(rng, p, 4));
    auto const w = wordgen::to_word(wordgen::random_word(rng, p, 6));
    auto const fa = inner(p, a);
    auto const fb = inner(p, b);
    REQUIRE_FALSE(validate_homomorphism(p, fa));
    REQUIRE(is_ia(p, fa).in_ia);
    REQUIRE(compose(p, fa, fb) == inner(p, p.multiply(a, b)));
    REQUIRE(apply(p, fa, w) == p.conjugate(a, w));
    REQUIRE(compose(p, fa, identity_map(p)) == fa);
    auto const found = find_conjugator(p, fa, 2);
    bool small = p.normalize(a).length() <= 2;
    for (auto const& syl : p.normalize(a).syllables()) small = small && syl.exponent >= -2 && syl.exponent <= 2;
    if (small) REQUIRE(found.found());
    if (found.found()) REQUIRE(inner(p, *found.conjugator) == fa);
  }
}

TEST_CASE("completing a partial conjugation over every component gives an inner automorphism") {
  std::mt19937_64 rng(47);
  int instances = 0;
  while (instances < 150) {
    auto const p = wordgen::random_presentation(rng, 6);
    auto const& g = p.graph();
    auto const v = g.vertex(std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng));
    std::int64_t e = std::uniform_int_distribution<std::int64_t>(-3, 3)(rng);
    if (p.generator_word(v, e).empty()) continue;
    ++instances;
    auto f = identity_map(p);
    for (auto const& c : star_complement_components(g, v)) {
      auto const pc = make_partial_conjugation(p, v, e, c);
      REQUIRE_FALSE(validate_homomorphism(p, pc));
      REQUIRE(is_ia(p, pc).in_ia);
      f = compose(p, pc, f);
    }
    REQUIRE(f == inner(p, p.generator_word(v, e)));
  }
}

TEST_CASE("conjugator search on the named examples") {
  auto const c5 = fixture("c5_z2.json");
  for (auto const& v : c5.graph().vertices()) {
    for (auto const& c : star_complement_components(c5.graph(), v)) {
      auto const f = make_partial_conjugation(c5, v, 1, c);
      CHECK(is_ia(c5, f).in_ia);
      auto const s = find_conjugator(c5, f);
      REQUIRE(s.found());
      CHECK(s.conjugator->length() == 1);
      CHECK(inner(c5, *s.conjugator) == f);
    }
  }
  auto const g1 = fixture("gamma1_z2.json");
  auto const pi = make_partial_conjugation(g1, "x", 1, {"y"});
  CHECK(is_ia(g1, pi).in_ia);
  auto const s = find_conjugator(g1, pi, 8);
  CHECK_FALSE(s.found());
  CHECK(s.radius == 8);
  CHECK(find_conjugator(g1, identity_map(g1)).conjugator == Word());
}

TEST_CASE("map kinds have stable names") {
  CHECK(to_string(MapKind::partial_conjugation) == "partial_conjugation");
  CHECK(to_string(MapKind::commutator_transvection) == "commutator_transvection");
  CHECK(to_string(MapKind::custom) == "custom");
}
