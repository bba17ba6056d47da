#include "ctlhom/chainalg.hpp"

#include "ctlhom/errors.hpp"
#include "ctlhom/smith.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace ctlhom::chain {

using sset::CoreRef;
using sset::Simplex;

namespace {

int sign(int i) { return i % 2 == 0 ? 1 : -1; }

std::size_t count_at(const FiniteSimplicialSet& x, int n) {
  return n < 0 || n > x.top_dim() ? 0 : x.count(n);
}

std::vector<std::vector<bool>> no_marks(const FiniteSimplicialSet& k) {
  std::vector<std::vector<bool>> marks;
  for (int n = 0; n <= k.top_dim(); ++n) marks.emplace_back(k.count(n), false);
  return marks;
}

std::size_t rank_of(const IntegerMatrix& m) { return invariant_factors(m).size(); }

std::vector<BigInt> proper_factors(const IntegerMatrix& m) {
  std::vector<BigInt> out;
  for (auto& f : invariant_factors(m))
    if (f > 1) out.push_back(std::move(f));
  return out;
}

CoreRef core_of_degree(const FiniteSimplicialSet& x, const std::string& id, int degree) {
  const auto c = x.find(id);
  if (!c || c->dim != degree)
    throw DomainError("'" + id + "' is not a nondegenerate " + std::to_string(degree) + "-simplex");
  return *c;
}

}  // namespace

std::size_t QuotientComplex::dim(int n) const {
  return n < 0 || n > top_dim() ? 0 : basis[static_cast<std::size_t>(n)].size();
}

std::optional<std::size_t> QuotientComplex::position(int n, int core_index) const {
  if (n < 0 || n > top_dim()) return std::nullopt;
  const auto& b = basis[static_cast<std::size_t>(n)];
  auto it = std::lower_bound(b.begin(), b.end(), core_index);
  if (it == b.end() || *it != core_index) return std::nullopt;
  return static_cast<std::size_t>(it - b.begin());
}

IntegerMatrix QuotientComplex::boundary(int n) const {
  if (n >= 0 && static_cast<std::size_t>(n) < boundaries.size()) return boundaries[static_cast<std::size_t>(n)];
  return IntegerMatrix(dim(n - 1), dim(n));
}

QuotientComplex relative_quotient(const FiniteSimplicialSet& k, const std::vector<std::vector<bool>>& marks) {
  auto marked = [&](CoreRef c) {
    const auto d = static_cast<std::size_t>(c.dim);
    return d < marks.size() && static_cast<std::size_t>(c.index) < marks[d].size() &&
           marks[d][static_cast<std::size_t>(c.index)];
  };
  QuotientComplex q;
  for (int n = 0; n <= k.top_dim(); ++n) {
    q.basis.emplace_back();
    q.ids.emplace_back();
    for (std::size_t i = 0; i < k.count(n); ++i) {
      const CoreRef c{n, static_cast<int>(i)};
      if (marked(c)) {
        if (n > 0)
          for (const auto& f : k.faces(c))
            if (!marked(f.core))
              throw PresentationError("relative quotient: marked simplex '" + k.id(c) + "' has the unmarked face '" +
                                      k.id(f.core) + "'");
        continue;
      }
      q.basis.back().push_back(static_cast<int>(i));
      q.ids.back().push_back(k.id(c));
    }
  }
  for (int n = 0; n <= k.top_dim() + 1; ++n) {
    IntegerMatrix d(q.dim(n - 1), q.dim(n));
    if (n >= 1 && n <= k.top_dim())
      for (std::size_t col = 0; col < q.dim(n); ++col) {
        const CoreRef c{n, q.basis[static_cast<std::size_t>(n)][col]};
        const auto& faces = k.faces(c);
        for (std::size_t i = 0; i < faces.size(); ++i) {
          if (!faces[i].is_nondegenerate()) continue;
          if (auto row = q.position(n - 1, faces[i].core.index)) d(*row, col) += sign(static_cast<int>(i));
        }
      }
    q.boundaries.push_back(std::move(d));
  }
  return q;
}

QuotientComplex relative_quotient(const Exhaustion& x, int depth) {
  return relative_quotient(x.truncate(depth)->complex, x.frontier(depth));
}

IntegerMatrix boundary_matrix(const FiniteSimplicialSet& x, int n) {
  if (n < 0) throw DomainError("boundary_matrix: negative degree");
  const auto q = relative_quotient(x, no_marks(x));
  return q.boundary(n);
}

IntegerMatrix unnormalized_boundary_matrix(const FiniteSimplicialSet& x, int n) {
  if (n < 0) throw DomainError("unnormalized_boundary_matrix: negative degree");
  const auto cols = x.simplices(n);
  if (n == 0) return IntegerMatrix(0, cols.size());
  const auto rows = x.simplices(n - 1);
  std::map<Simplex, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
  IntegerMatrix d(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int i = 0; i <= n; ++i) d(row_of.at(x.face(cols[c], i)), c) += sign(i);
  return d;
}

std::vector<HomologyGroup> integral_homology(const std::vector<IntegerMatrix>& boundaries) {
  std::vector<HomologyGroup> out;
  for (std::size_t n = 0; n + 1 < boundaries.size(); ++n) {
    const std::size_t dim = boundaries[n].cols();
    HomologyGroup g;
    g.free_rank = dim - rank_of(boundaries[n]) - rank_of(boundaries[n + 1]);
    g.torsion = proper_factors(boundaries[n + 1]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<HomologyGroup> integral_cohomology(const std::vector<IntegerMatrix>& boundaries) {
  std::vector<HomologyGroup> out;
  for (std::size_t n = 0; n + 1 < boundaries.size(); ++n) {
    const IntegerMatrix incoming = boundaries[n].transpose();
    const IntegerMatrix outgoing = boundaries[n + 1].transpose();
    HomologyGroup g;
    g.free_rank = incoming.rows() - rank_of(outgoing) - rank_of(incoming);
    g.torsion = proper_factors(incoming);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<HomologyGroup> unnormalized_homology(const FiniteSimplicialSet& x) {
  std::vector<IntegerMatrix> boundaries;
  for (int n = 0; n <= x.top_dim() + 1; ++n) boundaries.push_back(unnormalized_boundary_matrix(x, n));
  return integral_homology(boundaries);
}

std::string theory_tag(Theory t) {
  switch (t) {
    case Theory::Homology:
      return "H";
    case Theory::BorelMoore:
      return "H_BM";
    case Theory::Cohomology:
      return "H^co";
    case Theory::CompactCohomology:
      return "H_c";
  }
  return "?";
}

bool is_cohomological(Theory t) { return t == Theory::Cohomology || t == Theory::CompactCohomology; }

int default_max_depth() {
  if (const char* env = std::getenv("CTLHOM_MAX_DEPTH")) {
    int v = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc{} && ptr == end && v > 0) return v;
  }
  return 25;
}

const HomologyGroup& TheoryResult::group(int degree) const {
  for (const auto& d : degrees)
    if (d.degree == degree) return d.group;
  throw DomainError("no result in degree " + std::to_string(degree));
}

namespace {

const std::string kLimOneCaveat = "lim^1 of the inverse system is assumed to vanish";

bool needs_upper_neighbour(Theory t, const Coefficients& coeffs) {
  return is_cohomological(t) && coeffs.kind == Coefficients::Kind::IntegersMod;
}

// Applies universal coefficients to integral groups in degrees 0 .. reported.
void finish(TheoryResult& r, const std::vector<DegreeResult>& integral, int reported) {
  for (int n = 0; n <= reported; ++n) {
    DegreeResult d = integral[static_cast<std::size_t>(n)];
    const int neighbour = is_cohomological(r.theory) ? n + 1 : n - 1;
    std::vector<BigInt> torsion;
    if (r.coeffs.kind == Coefficients::Kind::IntegersMod && neighbour >= 0 &&
        neighbour < static_cast<int>(integral.size())) {
      const auto& nb = integral[static_cast<std::size_t>(neighbour)];
      torsion = nb.group.torsion;
      d.stable = d.stable && nb.stable;
      d.depth = std::max(d.depth, nb.depth);
    }
    d.group = change_coefficients(d.group, torsion, r.coeffs);
    r.stable = r.stable && d.stable;
    r.depth = std::max(r.depth, d.depth);
    r.degrees.push_back(std::move(d));
  }
}

TheoryResult finite_result(Theory theory, const FiniteSimplicialSet& x, const Coefficients& coeffs,
                           std::optional<int> max_degree, int window, int max_depth) {
  const int reported = max_degree.value_or(std::max(x.top_dim(), 0));
  if (reported < 0) throw DomainError("max degree must be non-negative");
  std::vector<IntegerMatrix> boundaries;
  for (int n = 0; n <= reported + 2; ++n) boundaries.push_back(boundary_matrix(x, n));
  const auto groups = is_cohomological(theory) ? integral_cohomology(boundaries) : integral_homology(boundaries);
  std::vector<DegreeResult> integral;
  for (std::size_t n = 0; n < groups.size(); ++n) integral.push_back({static_cast<int>(n), groups[n], true, 0});
  TheoryResult r;
  r.theory = theory;
  r.coeffs = coeffs;
  r.window = window;
  r.max_depth = max_depth;
  finish(r, integral, reported);
  return r;
}

HomologyPresentation presentation(Theory t, const QuotientComplex& q, int n) {
  if (is_cohomological(t))
    return present_homology(q.boundary(n).transpose(), q.boundary(n + 1).transpose(), q.dim(n));
  return present_homology(q.boundary(n + 1), q.boundary(n), q.dim(n));
}

// Chain map matching basis elements with equal core index.
IntegerMatrix key_match(const QuotientComplex& from, const QuotientComplex& to, int n) {
  IntegerMatrix m(to.dim(n), from.dim(n));
  if (n > from.top_dim()) return m;
  const auto& b = from.basis[static_cast<std::size_t>(n)];
  for (std::size_t c = 0; c < b.size(); ++c)
    if (auto r = to.position(n, b[c])) m(*r, c) = 1;
  return m;
}

bool forward(Theory t) { return t == Theory::Homology || t == Theory::CompactCohomology; }

QuotientComplex level(Theory t, const Exhaustion& x, int depth) {
  if (t == Theory::Homology || t == Theory::Cohomology) {
    const auto& k = x.truncate(depth)->complex;
    return relative_quotient(k, no_marks(k));
  }
  return relative_quotient(x, depth);
}

}  // namespace

TheoryResult homology(const FiniteSimplicialSet& x, const Coefficients& coeffs, std::optional<int> max_degree) {
  return finite_result(Theory::Homology, x, coeffs, max_degree, 3, default_max_depth());
}

TheoryResult cohomology(const FiniteSimplicialSet& x, const Coefficients& coeffs, std::optional<int> max_degree) {
  return finite_result(Theory::Cohomology, x, coeffs, max_degree, 3, default_max_depth());
}

TheoryResult compute(Theory theory, const Exhaustion& x, const Coefficients& coeffs,
                     const StabilizationOptions& options) {
  if (options.window < 1) throw DomainError("window must be at least 1");
  if (options.max_depth < 0) throw DomainError("max depth must be non-negative");
  if (x.is_finite())
    return finite_result(theory, x.base(), coeffs, options.max_degree, options.window, options.max_depth);

  const int reported = options.max_degree.value_or(x.top_dim());
  if (reported < 0) throw DomainError("max degree must be non-negative");
  const int tracked = reported + (needs_upper_neighbour(theory, coeffs) ? 1 : 0);
  const auto degrees = static_cast<std::size_t>(tracked + 1);

  QuotientComplex current = level(theory, x, 0);
  std::vector<std::optional<HomologyPresentation>> pres(degrees);
  for (int n = 0; n <= tracked; ++n) pres[static_cast<std::size_t>(n)] = presentation(theory, current, n);
  std::vector<int> run(degrees, 0);
  std::vector<int> stable_at(degrees, -1);
  int last = 0;

  auto unstable = [&] { return std::any_of(stable_at.begin(), stable_at.end(), [](int s) { return s < 0; }); };
  for (int i = 0; i < options.max_depth && unstable(); ++i) {
    QuotientComplex next = level(theory, x, i + 1);
    for (int n = 0; n <= tracked; ++n) {
      const auto k = static_cast<std::size_t>(n);
      if (stable_at[k] >= 0) continue;
      HomologyPresentation p = presentation(theory, next, n);
      const bool iso = forward(theory) ? induces_isomorphism(*pres[k], p, key_match(current, next, n))
                                       : induces_isomorphism(p, *pres[k], key_match(next, current, n));
      run[k] = iso ? run[k] + 1 : 0;
      if (run[k] >= options.window) stable_at[k] = i - options.window + 1;
      pres[k] = std::move(p);
    }
    current = std::move(next);
    last = i + 1;
  }

  std::vector<DegreeResult> integral;
  for (int n = 0; n <= tracked; ++n) {
    const auto k = static_cast<std::size_t>(n);
    const bool ok = stable_at[k] >= 0;
    integral.push_back({n, pres[k]->group, ok, ok ? stable_at[k] : last});
  }
  TheoryResult r;
  r.theory = theory;
  r.coeffs = coeffs;
  r.window = options.window;
  r.max_depth = options.max_depth;
  if (theory == Theory::BorelMoore || theory == Theory::Cohomology) r.caveats.push_back(kLimOneCaveat);
  finish(r, integral, reported);
  return r;
}

TheoryResult homology(const Exhaustion& x, const Coefficients& coeffs, const StabilizationOptions& options) {
  return compute(Theory::Homology, x, coeffs, options);
}

TheoryResult bm_homology(const Exhaustion& x, const Coefficients& coeffs, const StabilizationOptions& options) {
  return compute(Theory::BorelMoore, x, coeffs, options);
}

TheoryResult cohomology(const Exhaustion& x, const Coefficients& coeffs, const StabilizationOptions& options) {
  return compute(Theory::Cohomology, x, coeffs, options);
}

TheoryResult compact_cohomology(const Exhaustion& x, const Coefficients& coeffs,
                                const StabilizationOptions& options) {
  return compute(Theory::CompactCohomology, x, coeffs, options);
}

void Chain::add(const std::string& id, const BigInt& coefficient) {
  auto& v = terms[id];
  v += coefficient;
  if (v == 0) terms.erase(id);
}

void Cochain::add(const std::string& id, const BigInt& coefficient) {
  auto& v = terms[id];
  v += coefficient;
  if (v == 0) terms.erase(id);
}

Chain boundary(const FiniteSimplicialSet& x, const Chain& c) {
  Chain out{c.degree - 1, {}};
  if (c.degree == 0) {
    for (const auto& [id, v] : c.terms) core_of_degree(x, id, 0);
    return out;
  }
  for (const auto& [id, v] : c.terms) {
    const auto& faces = x.faces(core_of_degree(x, id, c.degree));
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i].is_nondegenerate()) out.add(x.id(faces[i].core), v * sign(static_cast<int>(i)));
  }
  return out;
}

Cochain coboundary(const FiniteSimplicialSet& x, const Cochain& a) {
  for (const auto& [id, v] : a.terms) core_of_degree(x, id, a.degree);
  Cochain out{a.degree + 1, {}};
  if (a.degree + 1 > x.top_dim()) return out;
  for (std::size_t idx = 0; idx < x.count(a.degree + 1); ++idx) {
    const CoreRef c{a.degree + 1, static_cast<int>(idx)};
    const auto& faces = x.faces(c);
    BigInt value = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (!faces[i].is_nondegenerate()) continue;
      auto it = a.terms.find(x.id(faces[i].core));
      if (it != a.terms.end()) value += it->second * sign(static_cast<int>(i));
    }
    if (value != 0) out.terms.emplace(x.id(c), value);
  }
  return out;
}

BigInt pairing(const Cochain& a, const Chain& c, const Coefficients& coeffs) {
  if (a.degree != c.degree)
    throw DomainError("pairing: cochain of degree " + std::to_string(a.degree) + " against chain of degree " +
                      std::to_string(c.degree));
  BigInt sum = 0;
  const auto& small = a.terms.size() <= c.terms.size() ? a.terms : c.terms;
  const auto& large = a.terms.size() <= c.terms.size() ? c.terms : a.terms;
  for (const auto& [id, v] : small)
    if (auto it = large.find(id); it != large.end()) sum += v * it->second;
  if (coeffs.kind == Coefficients::Kind::IntegersMod) sum = floor_mod(sum, BigInt(coeffs.modulus));
  return sum;
}

Chain pushforward(const sset::FiniteMap& f, const Chain& c) {
  Chain out{c.degree, {}};
  const auto& src = f.source->complex;
  for (const auto& [id, v] : c.terms) {
    const Simplex& image = f.on_core(core_of_degree(src, id, c.degree));
    if (image.is_nondegenerate()) out.add(f.target->complex.id(image.core), v);
  }
  return out;
}

Cochain pullback(const sset::FiniteMap& f, const Cochain& a) {
  const auto& tgt = f.target->complex;
  for (const auto& [id, v] : a.terms) core_of_degree(tgt, id, a.degree);
  Cochain out{a.degree, {}};
  const auto& src = f.source->complex;
  for (std::size_t idx = 0; idx < count_at(src, a.degree); ++idx) {
    const CoreRef y{a.degree, static_cast<int>(idx)};
    const Simplex& image = f.on_core(y);
    if (!image.is_nondegenerate()) continue;
    if (auto it = a.terms.find(tgt.id(image.core)); it != a.terms.end()) out.add(src.id(y), it->second);
  }
  return out;
}

namespace {

constexpr int kSearchDepth = 256;

int depth_containing(const Exhaustion& x, const std::map<std::string, BigInt>& terms) {
  if (x.is_finite()) return 0;
  for (int d = 0; d <= kSearchDepth; ++d) {
    const auto& k = x.truncate(d)->complex;
    if (std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return k.find(t.first).has_value(); }))
      return d;
  }
  throw DomainError("support does not lie in any truncation");
}

void require_proper(const sset::SimplicialMap& f, const char* what) {
  const auto report = sset::is_proper_map(f);
  if (!report.proper) throw ControlledError(std::string(what) + ": the map is not proper (" + report.detail + ")");
}

}  // namespace

Chain pushforward(const sset::SimplicialMap& f, const Chain& c) {
  require_proper(f, "pushforward");
  return pushforward(f.materialize(depth_containing(f.source(), c.terms)), c);
}

Cochain pullback(const sset::SimplicialMap& f, const Cochain& a) {
  require_proper(f, "pullback");
  if (f.source().is_finite()) return pullback(f.materialize(0), a);
  const int d = depth_containing(f.target(), a.terms) + f.spread() + 1;
  Cochain out = pullback(f.materialize(d), a);
  if (!(pullback(f.materialize(d + 1), a) == out))
    throw ControlledError("pullback: the support keeps growing with the source depth");
  return out;
}

GeneratorPairing generator_pairing(const Exhaustion& x, int degree, const StabilizationOptions& options) {
  if (degree < 0) throw DomainError("pairing degree must be non-negative");
  StabilizationOptions opts = options;
  opts.max_degree = degree;
  const auto bm = bm_homology(x, Coefficients::integers(), opts);
  const auto hc = compact_cohomology(x, Coefficients::integers(), opts);
  const auto& bd = bm.degrees.back();
  const auto& cd = hc.degrees.back();

  GeneratorPairing g;
  g.degree = degree;
  g.stable = bd.stable && cd.stable;
  g.depth = std::max(bd.depth, cd.depth);
  const QuotientComplex q = x.is_finite() ? relative_quotient(x.base(), no_marks(x.base())) : relative_quotient(x, g.depth);
  const auto cycles = presentation(Theory::BorelMoore, q, degree);
  const auto cocycles = presentation(Theory::CompactCohomology, q, degree);
  const auto& ids = degree <= q.top_dim() ? q.ids[static_cast<std::size_t>(degree)] : std::vector<std::string>{};

  std::vector<std::size_t> free_cycles;
  std::vector<std::size_t> free_cocycles;
  for (std::size_t k = 0; k < cycles.orders.size(); ++k)
    if (cycles.orders[k] == 0) free_cycles.push_back(k);
  for (std::size_t k = 0; k < cocycles.orders.size(); ++k)
    if (cocycles.orders[k] == 0) free_cocycles.push_back(k);

  for (auto k : free_cycles) {
    Chain c{degree, {}};
    for (std::size_t i = 0; i < ids.size(); ++i) c.add(ids[i], cycles.generators(i, k));
    g.cycles.push_back(std::move(c));
  }
  for (auto k : free_cocycles) {
    Cochain a{degree, {}};
    for (std::size_t i = 0; i < ids.size(); ++i) a.add(ids[i], cocycles.generators(i, k));
    g.cocycles.push_back(std::move(a));
  }
  g.matrix = IntegerMatrix(g.cocycles.size(), g.cycles.size());
  for (std::size_t r = 0; r < g.cocycles.size(); ++r)
    for (std::size_t c = 0; c < g.cycles.size(); ++c) g.matrix(r, c) = pairing(g.cocycles[r], g.cycles[c]);
  return g;
}

}  // namespace ctlhom::chain
