#include "ctlhom/chainalg.hpp"
#include "ctlhom/corpus.hpp"
#include "ctlhom/errors.hpp"
#include "ctlhom/smith.hpp"

#include "doctest.h"

#include <random>

using namespace ctlhom;
using namespace ctlhom::chain;

namespace {

// Rank over F_p by plain Gaussian elimination on residues.
std::size_t rank_mod(const IntegerMatrix& m, long long p) {
  std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = floor_mod(m(r, c), p).convert_to<long long>();
  const auto inverse = [p](long long v) {
    long long result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * v % p;
      v = v * v % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const long long inv = inverse(a[rank][c]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const long long f = a[r][c] * inv % p;
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// dim H_n(X; F_p) from ranks of the boundary matrices.
std::size_t betti_mod(const sset::FiniteSimplicialSet& x, int n, long long p) {
  const std::size_t cn = n <= x.top_dim() ? x.count(n) : 0;
  return cn - rank_mod(boundary_matrix(x, n), p) - rank_mod(boundary_matrix(x, n + 1), p);
}

std::size_t divisible(const std::vector<BigInt>& torsion, long long p) {
  std::size_t n = 0;
  for (const auto& t : torsion) n += t % p == 0;
  return n;
}

std::vector<const sset::FiniteSimplicialSet*> finite_corpus(std::vector<corpus::Space>& keep) {
  keep = corpus::corpus_spaces();
  std::vector<const sset::FiniteSimplicialSet*> out;
  for (const auto& s : keep)
    if (s.is_finite()) out.push_back(&s.complex());
  return out;
}

std::vector<std::shared_ptr<const sset::Truncation>> truncations() {
  std::vector<std::shared_ptr<const sset::Truncation>> out;
  for (const auto& s : corpus::corpus_spaces())
    if (!s.is_finite())
      for (int d = 0; d <= 3; ++d) out.push_back(s.exhaustion->truncate(d));
  return out;
}

std::vector<std::size_t> ranks(const TheoryResult& r) {
  std::vector<std::size_t> out;
  for (const auto& d : r.degrees) out.push_back(d.group.free_rank);
  return out;
}

HomologyGroup z() { return {1, {}}; }
HomologyGroup zero() { return {}; }
HomologyGroup zmod(long long m) { return {0, {BigInt(m)}}; }

}  // namespace

TEST_CASE("boundary matrices") {
  const auto d1 = corpus::delta(1);
  CHECK(boundary_matrix(d1, 1) == IntegerMatrix{{-1}, {1}});
  CHECK(boundary_matrix(corpus::circle(), 1) == IntegerMatrix{{0}});

  std::vector<corpus::Space> keep;
  for (const auto* x : finite_corpus(keep))
    for (int n = 1; n <= 4; ++n) {
      CHECK((boundary_matrix(*x, n) * boundary_matrix(*x, n + 1)).is_zero());
      if (n <= 3)
        CHECK((unnormalized_boundary_matrix(*x, n) * unnormalized_boundary_matrix(*x, n + 1)).is_zero());
    }
  for (const auto& t : truncations())
    for (int n = 1; n <= 4; ++n) CHECK((boundary_matrix(t->complex, n) * boundary_matrix(t->complex, n + 1)).is_zero());
}

TEST_CASE("Smith normal form") {
  CHECK(smith_normal_form(IntegerMatrix(3, 2)).invariant_factors.empty());
  CHECK(smith_normal_form(IntegerMatrix::identity(4)).invariant_factors == std::vector<BigInt>(4, 1));
  CHECK(smith_normal_form(IntegerMatrix{{2, 4}, {6, 8}}).invariant_factors == std::vector<BigInt>{2, 4});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng() % 6, cols = rng() % 6;
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long long>(rng() % 21) - 10;
    const auto s = smith_normal_form(m);
    CHECK(s.reconstruct() == m);
    CHECK(s.left * m * s.right == s.diagonal());
    CHECK(s.left * s.left_inverse == IntegerMatrix::identity(rows));
    CHECK(s.right * s.right_inverse == IntegerMatrix::identity(cols));
    for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
      CHECK(s.invariant_factors[i] > 0);
      if (i) CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
    }
    CHECK(s.rank() == rank_mod(m, 1000003));
    CHECK(invariant_factors(m) == s.invariant_factors);
  }
}

TEST_CASE("classical homology") {
  const auto point = homology(corpus::point());
  CHECK(point.group(0) == z());

  const auto s2 = homology(corpus::sphere(2));
  CHECK(s2.group(0) == z());
  CHECK(s2.group(1) == zero());
  CHECK(s2.group(2) == z());

  const auto rp2 = homology(corpus::rp2());
  CHECK(rp2.group(0) == z());
  CHECK(rp2.group(1) == zmod(2));
  CHECK(rp2.group(2) == zero());
  CHECK(ranks(homology(corpus::rp2(), Coefficients::integers_mod(2))) == std::vector<std::size_t>{1, 1, 1});
  CHECK(ranks(homology(corpus::rp2(), Coefficients::rationals())) == std::vector<std::size_t>{1, 0, 0});
  CHECK(ranks(homology(corpus::rp2(), Coefficients::integers_mod(3))) == std::vector<std::size_t>{1, 0, 0});

  const auto torus = homology(corpus::torus());
  CHECK(torus.group(1) == HomologyGroup{2, {}});
  CHECK(torus.group(2) == z());
}

TEST_CASE("integral homology agrees with the F_p rank oracle") {
  std::vector<corpus::Space> keep;
  for (const auto* x : finite_corpus(keep)) {
    const auto h = homology(*x);
    for (long long p : {2LL, 3LL, 1000003LL})
      for (int n = 0; n <= x->top_dim(); ++n) {
        const std::size_t below = n > 0 ? divisible(h.group(n - 1).torsion, p) : 0;
        CHECK(betti_mod(*x, n, p) == h.group(n).free_rank + divisible(h.group(n).torsion, p) + below);
      }
    for (long long p : {2LL, 3LL}) {
      const auto hp = homology(*x, Coefficients::integers_mod(static_cast<std::uint64_t>(p)));
      for (int n = 0; n <= x->top_dim(); ++n) CHECK(hp.group(n).free_rank == betti_mod(*x, n, p));
    }
  }
}

TEST_CASE("structural properties of finite complexes") {
  std::vector<corpus::Space> keep;
  for (const auto* x : finite_corpus(keep)) {
    const auto h = homology(*x);
    const auto un = unnormalized_homology(*x);
    for (int n = 0; n <= x->top_dim(); ++n) CHECK(un[static_cast<std::size_t>(n)] == h.group(n));

    long long chi_cells = 0, chi_betti = 0;
    const auto q = homology(*x, Coefficients::rationals());
    for (int n = 0; n <= x->top_dim(); ++n) {
      const long long sign = n % 2 ? -1 : 1;
      chi_cells += sign * static_cast<long long>(x->count(n));
      chi_betti += sign * static_cast<long long>(q.group(n).free_rank);
    }
    CHECK(chi_cells == chi_betti);
  }
}

TEST_CASE("cohomology") {
  CHECK(cohomology(corpus::point()).group(0) == z());
  const auto s2 = cohomology(corpus::sphere(2));
  CHECK(s2.group(0) == z());
  CHECK(s2.group(1) == zero());
  CHECK(s2.group(2) == z());
  const auto rp2 = cohomology(corpus::rp2());
  CHECK(rp2.group(0) == z());
  CHECK(rp2.group(1) == zero());
  CHECK(rp2.group(2) == zmod(2));
  CHECK(ranks(cohomology(corpus::rp2(), Coefficients::integers_mod(2))) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("relative quotients") {
  const auto line = corpus::line();
  const auto ray = corpus::ray();
  for (int i = 1; i <= 4; ++i) {
    const auto ql = relative_quotient(*line, i);
    CHECK(ql.dim(0) == static_cast<std::size_t>(2 * i - 1));
    CHECK(ql.dim(1) == static_cast<std::size_t>(2 * i));
    const auto qr = relative_quotient(*ray, i);
    CHECK(qr.dim(0) == static_cast<std::size_t>(i));
    CHECK(qr.dim(1) == static_cast<std::size_t>(i));
  }
  const auto torus = sset::Exhaustion::constant(corpus::torus());
  const auto qt = relative_quotient(torus, 2);
  CHECK(qt.dim(0) == 7);
  CHECK(qt.dim(2) == 14);

  // a vertex set missing an endpoint of a marked edge is not a subcomplex
  const auto d1 = corpus::delta(1);
  CHECK_THROWS_AS(relative_quotient(d1, {{true, false}, {true}}), PresentationError);
}

TEST_CASE("Borel-Moore homology") {
  const auto line = bm_homology(*corpus::line());
  CHECK(line.stable);
  CHECK(line.group(0) == zero());
  CHECK(line.group(1) == z());
  CHECK(line.depth <= 5);
  CHECK(line.caveats.size() == 1);

  const auto ray = bm_homology(*corpus::ray());
  CHECK(ray.stable);
  for (const auto& d : ray.degrees) CHECK(d.group.is_zero());

  const auto plane = bm_homology(*corpus::plane());
  CHECK(plane.stable);
  CHECK(plane.group(0) == zero());
  CHECK(plane.group(1) == zero());
  CHECK(plane.group(2) == z());

  const auto cyl = bm_homology(*corpus::cylinder());
  CHECK(cyl.group(1) == z());
  CHECK(cyl.group(2) == z());

  for (const auto& name : {"torus", "rp2", "sphere(2)"}) {
    const auto s = corpus::build(name);
    CHECK(bm_homology(*s.exhaustion).degrees.size() == homology(s.complex()).degrees.size());
    for (const auto& d : bm_homology(*s.exhaustion).degrees) CHECK(d.group == homology(s.complex()).group(d.degree));
  }

  StabilizationOptions shallow;
  shallow.max_depth = 5;
  const auto loop = bm_homology(*corpus::loop_ray(), {}, shallow);
  CHECK_FALSE(loop.stable);
  CHECK(loop.depth <= 5);
}

TEST_CASE("ordinary homology of exhaustions is the truncation colimit") {
  const auto ray = homology(*corpus::ray());
  CHECK(ray.stable);
  CHECK(ray.group(0) == z());
  CHECK(ray.group(1) == zero());
  const auto cyl = homology(*corpus::cylinder());
  CHECK(cyl.group(0) == z());
  CHECK(cyl.group(1) == z());
  CHECK(cohomology(*corpus::line()).group(0) == z());
}

TEST_CASE("compactly supported cohomology") {
  const auto line = compact_cohomology(*corpus::line());
  CHECK(line.stable);
  CHECK(line.group(0) == zero());
  CHECK(line.group(1) == z());
  const auto ray = compact_cohomology(*corpus::ray());
  for (const auto& d : ray.degrees) CHECK(d.group.is_zero());
  CHECK(compact_cohomology(*corpus::plane()).group(2) == z());

  for (const auto& name : {"torus", "rp2", "sphere(2)", "circle"}) {
    const auto s = corpus::build(name);
    for (const auto& coeffs : {Coefficients::integers(), Coefficients::integers_mod(2)}) {
      const auto c = compact_cohomology(*s.exhaustion, coeffs);
      const auto o = cohomology(s.complex(), coeffs);
      REQUIRE(c.degrees.size() == o.degrees.size());
      for (const auto& d : c.degrees) CHECK(d.group == o.group(d.degree));
    }
  }
}

TEST_CASE("pairing") {
  Cochain zero_cochain{1, {}};
  Chain sigma{1, {}};
  sigma.add("e", 3);
  CHECK(pairing(zero_cochain, sigma) == 0);
  Cochain indicator{1, {}};
  indicator.add("e", 1);
  CHECK(pairing(indicator, sigma) == 3);
  CHECK(pairing(indicator, sigma, Coefficients::integers_mod(2)) == 1);
  CHECK_THROWS_AS(pairing(Cochain{0, {}}, sigma), DomainError);

  const auto p = generator_pairing(*corpus::line(), 1);
  CHECK(p.stable);
  REQUIRE(p.matrix.rows() == 1);
  REQUIRE(p.matrix.cols() == 1);
  CHECK(abs(p.matrix(0, 0)) == 1);
}

TEST_CASE("adjointness of coboundary and boundary") {
  std::mt19937 rng(5);
  std::vector<const sset::FiniteSimplicialSet*> complexes;
  std::vector<corpus::Space> keep;
  complexes = finite_corpus(keep);
  const auto truncs = truncations();
  for (const auto& t : truncs) complexes.push_back(&t->complex);

  for (const auto* x : complexes) {
    const int top = std::min(x->top_dim(), 3);
    if (top < 1) continue;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = static_cast<int>(rng() % static_cast<unsigned>(top));  // alpha in degree n, sigma in n + 1
      Cochain alpha{n, {}};
      Chain sigma{n + 1, {}};
      std::vector<BigInt> sv(x->count(n + 1));
      for (std::size_t i = 0; i < x->count(n); ++i)
        alpha.add(x->id({n, static_cast<int>(i)}), static_cast<long long>(rng() % 11) - 5);
      for (std::size_t i = 0; i < x->count(n + 1); ++i) {
        sv[i] = static_cast<long long>(rng() % 11) - 5;
        sigma.add(x->id({n + 1, static_cast<int>(i)}), sv[i]);
      }
      const auto lhs = pairing(coboundary(*x, alpha), sigma);
      const auto rhs = pairing(alpha, boundary(*x, sigma));
      CHECK(lhs == rhs);

      // the same boundary from the explicit matrix
      const auto dv = boundary_matrix(*x, n + 1) * sv;
      BigInt direct = 0;
      for (std::size_t i = 0; i < dv.size(); ++i) {
        const auto it = alpha.terms.find(x->id({n, static_cast<int>(i)}));
        if (it != alpha.terms.end()) direct += it->second * dv[i];
      }
      CHECK(direct == rhs);
      // a coboundary pairs to zero with a boundary
      if (n + 2 <= x->top_dim()) {
        Chain tau{n + 2, {}};
        for (std::size_t i = 0; i < x->count(n + 2); ++i)
          tau.add(x->id({n + 2, static_cast<int>(i)}), static_cast<long long>(rng() % 5) - 2);
        CHECK(pairing(coboundary(*x, alpha), boundary(*x, tau)) == 0);
      }
    }
  }
}

TEST_CASE("pushforward and pullback") {
  const auto line = corpus::line();
  const auto id = sset::SimplicialMap::identity(line);
  Chain sigma{1, {}};
  sigma.add("e#0.1", 2);
  sigma.add("e#1.2", -1);
  CHECK(pushforward(id, sigma) == sigma);

  const auto fold = corpus::fold_line_to_ray();
  Chain two_edges{1, {}};
  two_edges.add("e#0.1", 1);
  two_edges.add("e#1.1", 1);
  Chain expected{1, {}};
  expected.add("e#0.1", 2);
  CHECK(pushforward(fold, two_edges) == expected);

  Cochain a{1, {}};
  a.add("e#0.2", 1);
  const auto pulled = pullback(fold, a);
  CHECK(pulled.terms.size() == 2);
  CHECK(pulled.terms.at("e#0.2") == 1);
  CHECK(pulled.terms.at("e#1.2") == 1);

  const auto proj = corpus::project_cylinder_to_circle();
  Chain c0{0, {}};
  c0.add("p0", 1);
  CHECK_THROWS_AS(pushforward(proj, c0), ControlledError);
  Cochain r0{0, {}};
  r0.add("r0", 1);
  CHECK_THROWS_AS(pullback(proj, r0), ControlledError);

  // chain maps commute with the boundary on every fixture
  for (const auto& fx : corpus::map_fixtures()) {
    const auto f = fx.map.materialize(2);
    const auto& src = f.source->complex;
    const auto& tgt = f.target->complex;
    for (int n = 1; n <= std::min(src.top_dim(), 3); ++n)
      for (std::size_t i = 0; i < src.count(n); ++i) {
        Chain c{n, {}};
        c.add(src.id({n, static_cast<int>(i)}), 1);
        CHECK_MESSAGE(boundary(tgt, pushforward(f, c)) == pushforward(f, boundary(src, c)), fx.name);
      }
    for (int n = 0; n < std::min(tgt.top_dim(), 3); ++n)
      for (std::size_t i = 0; i < tgt.count(n); ++i) {
        Cochain c{n, {}};
        c.add(tgt.id({n, static_cast<int>(i)}), 1);
        CHECK_MESSAGE(coboundary(src, pullback(f, c)) == pullback(f, coboundary(tgt, c)), fx.name);
      }
  }
}
