#include "ctlhom/corpus.hpp"
#include "ctlhom/errors.hpp"
#include "ctlhom/simplicial_map.hpp"

#include "doctest.h"

#include <functional>
#include <random>

using namespace ctlhom;
using namespace ctlhom::sset;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Simplicial maps Δ^n -> X found by backtracking over the cores of Δ^n in
// dimension order, keeping only assignments that commute with every face.
std::size_t yoneda_count(const FiniteSimplicialSet& x, int n) {
  const auto d = corpus::delta(n);
  std::vector<CoreRef> cores;
  for (int k = 0; k <= n; ++k)
    for (std::size_t i = 0; i < d.count(k); ++i) cores.push_back({k, static_cast<int>(i)});
  std::map<CoreRef, Simplex> image;
  std::size_t found = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == cores.size()) {
      ++found;
      return;
    }
    const auto c = cores[pos];
    for (const auto& candidate : x.simplices(c.dim)) {
      bool ok = true;
      if (c.dim > 0)
        for (int i = 0; i <= c.dim && ok; ++i) {
          const auto& f = d.faces(c)[static_cast<std::size_t>(i)];
          ok = f.is_nondegenerate() && image.at(f.core) == x.face(candidate, i);
        }
      if (!ok) continue;
      image[c] = candidate;
      rec(pos + 1);
      image.erase(c);
    }
  };
  rec(0);
  return found;
}

std::size_t adjacent_cores(const FiniteSimplicialSet& x, const Simplex& s) {
  std::size_t n = 0;
  for (int k = 0; k <= x.top_dim(); ++k)
    for (std::size_t i = 0; i < x.count(k); ++i) n += adjacent(x, s, Simplex::of({k, static_cast<int>(i)}));
  return n;
}

}  // namespace

TEST_CASE("faces and degeneracies") {
  const auto d1 = corpus::delta(1);
  const auto e = Simplex::of(d1.at("0-1"));
  CHECK(d1.face(e, 0) == Simplex::of(d1.at("1")));
  CHECK(d1.face(e, 1) == Simplex::of(d1.at("0")));

  const auto c = corpus::circle();
  const auto v = c.at("v");
  CHECK(c.face(Simplex{{0}, v}, 0) == Simplex::of(v));
  CHECK_FALSE(is_nondegenerate(Simplex{{0}, v}));
  CHECK(is_nondegenerate(Simplex::of(v)));
  CHECK_THROWS_AS(c.face(Simplex::of(v), 0), DomainError);
  CHECK_THROWS_AS(c.degeneracy(Simplex::of(v), 1), DomainError);

  const auto d2 = corpus::delta(2);
  const auto counts = d2.counts();
  CHECK(counts[0] + counts[1] + counts[2] == 7);
}

TEST_CASE("normal forms under random operator sequences") {
  std::mt19937 rng(7);
  for (const auto& space : corpus::corpus_spaces()) {
    const auto& x = space.is_finite() ? space.complex() : space.exhaustion->truncate(2)->complex;
    CHECK(x.identity_violations().empty());
    for (int trial = 0; trial < 200; ++trial) {
      const int dim = static_cast<int>(rng() % static_cast<unsigned>(x.top_dim() + 1));
      if (x.count(dim) == 0) continue;
      Simplex s = Simplex::of({dim, static_cast<int>(rng() % x.count(dim))});
      const int steps = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < steps; ++k) {
        const int n = s.dim();
        if (n > 0 && rng() % 2) {
          s = x.face(s, static_cast<int>(rng() % static_cast<unsigned>(n + 1)));
          CHECK(s.dim() == n - 1);
        } else {
          const int j = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
          const auto t = x.degeneracy(s, j);
          CHECK(t.dim() == n + 1);
          CHECK(x.face(t, j) == s);
          CHECK(x.face(t, j + 1) == s);
          s = t;
        }
        for (std::size_t i = 1; i < s.word.size(); ++i) CHECK(s.word[i - 1] > s.word[i]);
        CHECK_NOTHROW(check_word(s.word, s.dim()));
        // re-normalizing through the identity map is idempotent
        CHECK(x.apply(delta::MonotoneMap::identity(s.dim()), s) == s);
      }
    }
  }
}

TEST_CASE("Yoneda count") {
  for (const auto& name : {"point", "circle", "delta(2)", "sphere(1)", "sphere(2)", "rp2", "torus"}) {
    const auto x = corpus::build(name).complex();
    for (int n = 0; n <= 2; ++n) {
      std::size_t formula = 0;
      for (int k = 0; k <= std::min(n, x.top_dim()); ++k)
        formula += x.count(k) * binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
      CHECK_MESSAGE(x.simplices(n).size() == formula, name << " n=" << n);
      CHECK_MESSAGE(yoneda_count(x, n) == formula, name << " n=" << n);
    }
  }
}

TEST_CASE("adjacency") {
  const auto two = [] {
    FiniteSimplicialSet x;
    x.add_vertex("p");
    x.add_vertex("q");
    return x;
  }();
  CHECK_FALSE(adjacent(two, Simplex::of(two.at("p")), Simplex::of(two.at("q"))));

  const auto ray = corpus::ray()->truncate(5);
  const auto& k = ray->complex;
  CHECK(adjacent_cores(k, Simplex::of(k.at("e#0.2"))) == 5);

  for (const auto& space : corpus::corpus_spaces()) {
    const auto& x = space.is_finite() ? space.complex() : space.exhaustion->truncate(2)->complex;
    std::vector<Simplex> all;
    for (int d = 0; d <= std::min(x.top_dim(), 2); ++d)
      for (std::size_t i = 0; i < x.count(d); ++i) all.push_back(Simplex::of({d, static_cast<int>(i)}));
    for (const auto& a : all) {
      CHECK(adjacent(x, a, a));
      for (const auto& b : all) CHECK(adjacent(x, a, b) == adjacent(x, b, a));
    }
  }
}

TEST_CASE("truncations") {
  const auto line = corpus::line();
  for (int i = 0; i <= 6; ++i) {
    const auto t = line->truncate(i);
    CHECK(t->complex.count(0) == static_cast<std::size_t>(2 * i + 1));
    CHECK(t->complex.count(1) == static_cast<std::size_t>(2 * i));
    CHECK(t->complex.identity_violations().empty());
  }
  // cores of K_i are a prefix of the cores of K_{i+1}
  const auto k2 = line->truncate(2), k3 = line->truncate(3);
  for (std::size_t i = 0; i < k2->complex.count(1); ++i)
    CHECK(k2->complex.id({1, static_cast<int>(i)}) == k3->complex.id({1, static_cast<int>(i)}));
}

TEST_CASE("local finiteness") {
  CHECK(is_locally_finite(corpus::torus()).locally_finite);
  const auto line = is_locally_finite(*corpus::line());
  CHECK(line.locally_finite);
  CHECK(line.max_star == 3);

  const auto broom = is_locally_finite(*corpus::broom());
  CHECK_FALSE(broom.locally_finite);
  REQUIRE(broom.witness);
  CHECK(*broom.witness == "v0");

  for (const auto& space : corpus::corpus_spaces()) CHECK(is_locally_finite(*space.exhaustion).locally_finite);
  CHECK(is_locally_finite(*corpus::loop_ray()).locally_finite);
}

TEST_CASE("non-injective gluing") {
  FiniteSimplicialSet base;
  base.add_vertex("v0");
  FiniteSimplicialSet slab;
  slab.add_vertex("in");
  slab.add_vertex("out");
  slab.add_simplex("e", std::vector<std::string>{"out", "in"});
  CHECK_THROWS_AS(Exhaustion(base, slab, {"in"}, {"out"}, {Attachment{{"v0", "v0"}, {"in", "out"}}}),
                  PresentationError);
  CHECK_THROWS_AS(Exhaustion(base, slab, {"in", "in"}, {"out", "out"}, {Attachment{{"v0"}, {"in"}}}),
                  PresentationError);
}

TEST_CASE("properness") {
  CHECK(is_proper_map(SimplicialMap::identity(corpus::line())).proper);
  const auto fold = is_proper_map(corpus::fold_line_to_ray());
  CHECK(fold.proper);
  CHECK(fold.max_fiber <= 2);
  CHECK(fold.max_fiber == 2);
  const auto proj = is_proper_map(corpus::project_cylinder_to_circle());
  CHECK_FALSE(proj.proper);
  CHECK(proj.witness);
}

TEST_CASE("materialized maps are natural") {
  for (const auto& fx : corpus::map_fixtures())
    for (int depth = 0; depth <= 3; ++depth) CHECK(fx.map.materialize(depth).naturality_violations().empty());
}

TEST_CASE("controlled families") {
  const auto line = corpus::line();
  CHECK(family_is_controlled(*line, SimplexFamily::finite({{{}, "v0"}, {{0}, "v0"}})).controlled);
  CHECK(family_is_controlled(*line, SimplexFamily::all()).controlled);
  CHECK(family_is_controlled(*line, SimplexFamily::periodic({}, {"e"})).controlled);
  const auto degen = family_is_controlled(*line, SimplexFamily::degeneracies_of("v0"));
  CHECK_FALSE(degen.controlled);
  REQUIRE(degen.witness);
  CHECK(*degen.witness == "v0");
  CHECK_FALSE(family_is_controlled(*corpus::build("point").exhaustion, SimplexFamily::degeneracies_of("v")).controlled);
}

TEST_CASE("properness agrees with controlledness on every fixture") {
  for (const auto& fx : corpus::map_fixtures()) {
    const auto r = theorem41_check(fx.map);
    CHECK_MESSAGE(r.agree, fx.name);
    CHECK_MESSAGE(r.proper == fx.proper, fx.name);
    CHECK_MESSAGE(r.controlled == fx.proper, fx.name);
    if (!fx.proper) {
      CHECK(r.proper_report.witness);
      bool any_witness = false;
      for (const auto& fam : r.families) any_witness |= fam.witness.has_value();
      CHECK(any_witness);
    }
  }
}
