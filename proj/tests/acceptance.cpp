// One PASS/FAIL line per acceptance criterion.
#include "ctlhom/chainalg.hpp"
#include "ctlhom/corpus.hpp"
#include "ctlhom/laws.hpp"
#include "ctlhom/simplicial_map.hpp"
#include "ctlhom/smith.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace ctlhom;
using namespace ctlhom::chain;

namespace {

using Clock = std::chrono::steady_clock;

HomologyGroup z(std::size_t r = 1) { return {r, {}}; }
HomologyGroup zero() { return {}; }
HomologyGroup zmod(long long m) { return {0, {BigInt(m)}}; }

struct Criterion {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

bool groups_equal(const TheoryResult& r, const std::vector<HomologyGroup>& expected) {
  if (r.degrees.size() < expected.size()) return false;
  for (std::size_t n = 0; n < r.degrees.size(); ++n) {
    const auto& want = n < expected.size() ? expected[n] : zero();
    if (!(r.degrees[n].group == want)) return false;
  }
  return true;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

void criterion1(Criterion& c) {
  struct Case {
    std::string space;
    Coefficients coeffs;
    std::vector<HomologyGroup> expected;
  };
  const std::vector<Case> cases{
      {"sphere(1)", Coefficients::integers(), {z(), z()}},
      {"circle", Coefficients::integers(), {z(), z()}},
      {"sphere(2)", Coefficients::integers(), {z(), zero(), z()}},
      {"torus", Coefficients::integers(), {z(), z(2), z()}},
      {"rp2", Coefficients::integers(), {z(), zmod(2), zero()}},
      {"rp2", Coefficients::integers_mod(2), {z(), z(), z()}},
  };
  double worst = 0;
  for (const auto& k : cases) {
    const auto t = Clock::now();
    const auto space = corpus::build(k.space);
    const auto r = homology(space.complex(), k.coeffs);
    const double s = seconds_since(t);
    worst = std::max(worst, s);
    c.expect(groups_equal(r, k.expected), k.space + " over " + k.coeffs.to_string());
    c.expect(s < 1.0, k.space + " took over 1s");
  }
  c.notes << " slowest " << worst << "s";
}

void criterion2(Criterion& c) {
  const auto line = bm_homology(*corpus::line());
  const auto ray = bm_homology(*corpus::ray());
  const auto plane = bm_homology(*corpus::plane());
  c.expect(groups_equal(line, {zero(), z()}), "line");
  c.expect(groups_equal(ray, {}), "ray");
  c.expect(groups_equal(plane, {zero(), zero(), z()}), "plane");
  for (const auto* r : {&line, &ray, &plane}) {
    c.expect(r->stable && r->window == 3, "stabilized with window 3");
    c.expect(r->depth <= 5, "stabilization depth <= 5");
  }
  c.notes << " depths line " << line.depth << ", ray " << ray.depth << ", plane " << plane.depth;
}

void criterion3(Criterion& c) {
  const auto ray = corpus::ray();
  const auto h = homology(*ray);
  const auto bm = bm_homology(*ray);
  c.expect(groups_equal(h, {z()}), "H(ray) = (Z, 0, ...)");
  for (int d = 0; d <= 4; ++d) c.expect(groups_equal(homology(ray->truncate(d)->complex), {z()}), "H(K_i)");
  c.expect(groups_equal(bm, {}), "H_BM(ray) = 0");
  c.expect(h.stable && bm.stable, "both stable");
}

void criterion4(Criterion& c) {
  c.expect(groups_equal(compact_cohomology(*corpus::line()), {zero(), z()}), "line");
  c.expect(groups_equal(compact_cohomology(*corpus::ray()), {}), "ray");
  for (const auto& s : corpus::corpus_spaces()) {
    if (!s.is_finite()) continue;
    for (const auto& coeffs : {Coefficients::integers(), Coefficients::integers_mod(2), Coefficients::rationals()}) {
      const auto hc = compact_cohomology(*s.exhaustion, coeffs);
      const auto h = cohomology(s.complex(), coeffs);
      bool same = hc.degrees.size() == h.degrees.size();
      for (std::size_t n = 0; same && n < h.degrees.size(); ++n) same = hc.degrees[n].group == h.degrees[n].group;
      c.expect(same, s.name + " over " + coeffs.to_string());
    }
  }
}

void criterion5(Criterion& c) {
  const auto p = generator_pairing(*corpus::line(), 1);
  c.expect(p.matrix.rows() == 1 && p.matrix.cols() == 1 && abs(p.matrix(0, 0)) == 1, "line pairing [+-1]");

  std::mt19937 rng(2024);
  std::size_t complexes = 0, pairs = 0;
  std::vector<std::shared_ptr<const sset::Truncation>> keep;
  std::vector<const sset::FiniteSimplicialSet*> all;
  const auto spaces = corpus::corpus_spaces();
  for (const auto& s : spaces) {
    if (s.is_finite()) {
      all.push_back(&s.complex());
    } else {
      keep.push_back(s.exhaustion->truncate(3));
      all.push_back(&keep.back()->complex);
    }
  }
  for (const auto* x : all) {
    const int top = std::min(x->top_dim(), 3);
    if (top < 1) continue;
    ++complexes;
    for (int trial = 0; trial < 1000; ++trial, ++pairs) {
      const int n = static_cast<int>(rng() % static_cast<unsigned>(top));
      Cochain a{n, {}};
      Chain s{n + 1, {}};
      for (std::size_t i = 0; i < x->count(n); ++i)
        a.add(x->id({n, static_cast<int>(i)}), static_cast<long long>(rng() % 9) - 4);
      for (std::size_t i = 0; i < x->count(n + 1); ++i)
        s.add(x->id({n + 1, static_cast<int>(i)}), static_cast<long long>(rng() % 9) - 4);
      if (pairing(coboundary(*x, a), s) != pairing(a, boundary(*x, s))) {
        c.expect(false, "adjointness");
        return;
      }
    }
  }
  c.notes << " " << pairs << " pairs on " << complexes << " complexes";
}

void criterion6(Criterion& c) {
  const auto t = Clock::now();
  const auto r = laws::run_laws(3);
  const double s = seconds_since(t);
  for (const auto& sec : r.sections) {
    c.expect(sec.counterexamples.empty(), "(" + sec.key + ") " + sec.title);
    c.expect(sec.checked > 0, "(" + sec.key + ") ran");
  }
  c.expect(r.sections.size() == 6, "six sections");
  c.expect(s < 60.0, "under 60s");
  c.notes << " " << s << "s";
}

void criterion7(Criterion& c) {
  for (const auto& fx : corpus::map_fixtures()) {
    const auto r = sset::theorem41_check(fx.map);
    c.expect(r.agree, fx.name + " agreement");
    c.expect(r.proper == fx.proper && r.controlled == fx.proper, fx.name + " expected sides");
    if (!fx.proper) {
      bool witnessed = r.proper_report.witness.has_value();
      for (const auto& f : r.families) witnessed = witnessed && (f.fibers_finite || f.witness.has_value());
      c.expect(witnessed, fx.name + " witnesses");
    }
  }
}

void criterion8(Criterion& c) {
  std::vector<std::shared_ptr<const sset::Truncation>> keep;
  const auto spaces = corpus::corpus_spaces();
  for (const auto& s : spaces) {
    const auto& x = s.is_finite() ? s.complex() : (keep.push_back(s.exhaustion->truncate(3)), keep.back()->complex);
    for (int n = 1; n <= 4; ++n) {
      const auto dn = boundary_matrix(x, n);
      c.expect((dn * boundary_matrix(x, n + 1)).is_zero(), s.name + " dd = 0");
      const auto snf = smith_normal_form(dn);
      c.expect(snf.reconstruct() == dn && snf.left * dn * snf.right == snf.diagonal(), s.name + " SNF certificate");
      for (std::size_t i = 1; i < snf.invariant_factors.size(); ++i)
        c.expect(snf.invariant_factors[i] % snf.invariant_factors[i - 1] == 0, s.name + " divisibility");
    }
    if (!s.is_finite()) continue;
    const auto h = homology(x);
    const auto un = unnormalized_homology(x);
    for (int n = 0; n <= x.top_dim(); ++n)
      c.expect(un[static_cast<std::size_t>(n)] == h.group(n), s.name + " unnormalized agreement");
    const auto q = homology(x, Coefficients::rationals());
    long long chi = 0, betti = 0;
    for (int n = 0; n <= x.top_dim(); ++n) {
      chi += (n % 2 ? -1 : 1) * static_cast<long long>(x.count(n));
      betti += (n % 2 ? -1 : 1) * static_cast<long long>(q.group(n).free_rank);
    }
    c.expect(chi == betti, s.name + " Euler characteristic");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
      {"classical homology oracle", criterion1},
      {"Borel-Moore oracle", criterion2},
      {"MinCtl/MaxCtl contrast on the ray", criterion3},
      {"compact-support cohomology oracle", criterion4},
      {"pairing and adjointness", criterion5},
      {"law suite", criterion6},
      {"properness vs controlledness", criterion7},
      {"structural properties", criterion8},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Criterion c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << index++ << ": " << name << c.notes.str() << '\n';
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
