#include "ctlhom/delta.hpp"
#include "ctlhom/errors.hpp"

#include "doctest.h"

#include <functional>
#include <set>

using namespace ctlhom;
using namespace ctlhom::delta;

namespace {

// All weakly increasing sequences of length n + 1 with values in [0, m].
std::vector<std::vector<int>> monotone_sequences(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("coface and codegeneracy") {
  CHECK(coface(1, 0) == MonotoneMap(1, 2, {1, 2}));
  CHECK(codegeneracy(0, 0) == MonotoneMap(1, 0, {0, 0}));
  CHECK(coface(2, 1).values() == std::vector<int>{0, 2, 3});
  CHECK(codegeneracy(2, 1).values() == std::vector<int>{0, 1, 1, 2});
  CHECK_THROWS_AS(coface(1, 3), DomainError);
  CHECK_THROWS_AS(codegeneracy(1, 2), DomainError);
  CHECK_THROWS_AS(MonotoneMap(1, 1, {1, 0}), DomainError);
  for (int n = 0; n <= 5; ++n)
    for (int j = 0; j <= n; ++j) CHECK(compose(codegeneracy(n, j), coface(n, j)).is_identity());
}

TEST_CASE("compose") {
  const auto f = MonotoneMap(2, 1, {0, 1, 1});
  CHECK(compose(MonotoneMap::identity(1), f) == f);
  CHECK(compose(f, MonotoneMap::identity(2)) == f);
  CHECK(compose(coface(1, 2), coface(0, 0)) == MonotoneMap(0, 2, {1}));
  CHECK_THROWS_AS(compose(coface(0, 0), coface(0, 0)), DomainError);

  // associativity on all triples with dimensions <= 3 (sampled sources)
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (const auto& f1 : monotone_sequences(a, b))
            for (const auto& g1 : monotone_sequences(b, c))
              for (const auto& h1 : monotone_sequences(c, d)) {
                const MonotoneMap ff(a, b, f1), gg(b, c, g1), hh(c, d, h1);
                if (compose(hh, compose(gg, ff)) != compose(compose(hh, gg), ff)) {
                  FAIL("associativity fails");
                }
              }
}

TEST_CASE("cofaces and codegeneracies generate every map of dimension <= 3") {
  std::set<MonotoneMap> reached;
  std::vector<MonotoneMap> frontier;
  for (int n = 0; n <= 3; ++n) {
    reached.insert(MonotoneMap::identity(n));
    frontier.push_back(MonotoneMap::identity(n));
  }
  // generators between objects of dimension <= 3 are enough: every map of Δ
  // factors through its image, which has dimension <= min(n, m)
  std::vector<MonotoneMap> gens;
  for (int n = 0; n <= 2; ++n) {
    for (int i = 0; i <= n + 1; ++i) gens.push_back(coface(n, i));
    for (int j = 0; j <= n; ++j) gens.push_back(codegeneracy(n, j));
  }
  while (!frontier.empty()) {
    std::vector<MonotoneMap> next;
    for (const auto& f : frontier)
      for (const auto& g : gens)
        if (g.source_dim() == f.target_dim()) {
          const auto h = compose(g, f);
          if (reached.insert(h).second) next.push_back(h);
        }
    frontier = std::move(next);
  }
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& v : monotone_sequences(n, m)) CHECK(reached.count(MonotoneMap(n, m, v)) == 1);
}

TEST_CASE("all_maps agrees with direct enumeration") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) CHECK(all_maps(n, m).size() == monotone_sequences(n, m).size());
}

TEST_CASE("epi-mono factorization") {
  const auto inj = coface(1, 1);
  const auto [e1, m1] = epi_mono_factor(inj);
  CHECK(e1.is_identity());
  CHECK(m1 == inj);

  const auto [e2, m2] = epi_mono_factor(MonotoneMap(2, 1, {0, 0, 1}));
  CHECK(e2 == codegeneracy(1, 0));
  CHECK(m2.is_identity());

  const auto [e3, m3] = epi_mono_factor(MonotoneMap(2, 2, {0, 0, 2}));
  CHECK(e3.values() == std::vector<int>{0, 0, 1});
  CHECK(m3.values() == std::vector<int>{0, 2});

  // uniqueness by brute force over every candidate pair
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& v : monotone_sequences(n, m)) {
        const MonotoneMap f(n, m, v);
        const auto [epi, mono] = epi_mono_factor(f);
        CHECK(epi.is_surjective());
        CHECK(mono.is_injective());
        CHECK(compose(mono, epi) == f);
        int pairs = 0;
        for (int k = 0; k <= std::min(n, m); ++k)
          for (const auto& ev : monotone_sequences(n, k)) {
            const MonotoneMap e(n, k, ev);
            if (!e.is_surjective()) continue;
            for (const auto& mv : monotone_sequences(k, m)) {
              const MonotoneMap mo(k, m, mv);
              if (mo.is_injective() && compose(mo, e) == f) ++pairs;
            }
          }
        CHECK(pairs == 1);

        const auto s = codegeneracy_indices(epi);
        const auto d = coface_indices(mono);
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
        for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i - 1] > d[i]);
        CHECK(from_words(n, s, d) == f);
      }
}

TEST_CASE("cosimplicial identities") {
  std::size_t checked = 0;
  CHECK(check_cosimplicial_identities(6, &checked).empty());
  CHECK(checked > 0);
}
