#include "ctlhom/simplicial_set.hpp"

#include "ctlhom/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ctlhom::sset {

using delta::MonotoneMap;

std::vector<int> word_from_epi(const MonotoneMap& epi) {
  auto j = delta::codegeneracy_indices(epi);
  std::reverse(j.begin(), j.end());
  return j;
}

MonotoneMap epi_from_word(std::span<const int> word, int dim) {
  return delta::surjection_collapsing(dim, word);
}

void check_word(std::span<const int> word, int dim) {
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 0 || word[k] >= dim) throw DomainError("degeneracy word index out of range");
    if (k > 0 && word[k] >= word[k - 1]) throw DomainError("degeneracy word must be strictly decreasing");
  }
}

const FiniteSimplicialSet::Core& FiniteSimplicialSet::core(CoreRef c) const {
  if (!contains(c)) throw DomainError("simplex reference outside the complex");
  return cores_[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)];
}

bool FiniteSimplicialSet::contains(CoreRef c) const {
  return c.dim >= 0 && c.dim < static_cast<int>(cores_.size()) && c.index >= 0 &&
         c.index < static_cast<int>(cores_[static_cast<std::size_t>(c.dim)].size());
}

std::size_t FiniteSimplicialSet::count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(cores_.size())) return 0;
  return cores_[static_cast<std::size_t>(dim)].size();
}

std::vector<std::size_t> FiniteSimplicialSet::counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : cores_) out.push_back(level.size());
  return out;
}

std::size_t FiniteSimplicialSet::total_count() const {
  std::size_t n = 0;
  for (const auto& level : cores_) n += level.size();
  return n;
}

const std::string& FiniteSimplicialSet::id(CoreRef c) const { return core(c).id; }

std::optional<CoreRef> FiniteSimplicialSet::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

CoreRef FiniteSimplicialSet::at(std::string_view id) const {
  if (auto c = find(id)) return *c;
  throw DomainError("unknown simplex id '" + std::string(id) + "'");
}

const std::vector<Simplex>& FiniteSimplicialSet::faces(CoreRef c) const { return core(c).faces; }

const std::vector<int>& FiniteSimplicialSet::vertices(CoreRef c) const { return core(c).vertices; }

std::vector<int> FiniteSimplicialSet::vertices(const Simplex& x) const {
  const auto& cv = vertices(x.core);
  if (x.word.empty()) return cv;
  const MonotoneMap epi = epi_from_word(x.word, x.dim());
  std::vector<int> out;
  for (int q = 0; q <= x.dim(); ++q) out.push_back(cv[static_cast<std::size_t>(epi(q))]);
  return out;
}

CoreRef FiniteSimplicialSet::add_vertex(std::string id) {
  if (by_id_.contains(id)) throw DomainError("duplicate simplex id '" + id + "'");
  if (cores_.empty()) cores_.emplace_back();
  const CoreRef ref{0, static_cast<int>(cores_[0].size())};
  cores_[0].push_back(Core{id, {}, {ref.index}});
  by_id_.emplace(std::move(id), ref);
  return ref;
}

CoreRef FiniteSimplicialSet::add_simplex(std::string id, std::vector<Simplex> faces) {
  if (faces.size() < 2) throw DomainError("simplex '" + id + "' needs at least two faces");
  if (by_id_.contains(id)) throw DomainError("duplicate simplex id '" + id + "'");
  const int n = static_cast<int>(faces.size()) - 1;
  for (const auto& f : faces) {
    if (!contains(f.core)) throw DomainError("face of '" + id + "' refers to an unknown simplex");
    if (f.dim() != n - 1) throw DomainError("face of '" + id + "' has the wrong dimension");
    check_word(f.word, f.dim());
  }
  while (static_cast<int>(cores_.size()) <= n) cores_.emplace_back();
  const CoreRef ref{n, static_cast<int>(cores_[static_cast<std::size_t>(n)].size())};
  cores_[static_cast<std::size_t>(n)].push_back(Core{id, std::move(faces), {}});
  by_id_.emplace(std::move(id), ref);
  std::vector<int> verts;
  for (int k = 0; k <= n; ++k) {
    const Simplex v = apply(MonotoneMap(0, n, {k}), Simplex::of(ref));
    verts.push_back(v.core.index);
  }
  cores_[static_cast<std::size_t>(n)].back().vertices = std::move(verts);
  return ref;
}

CoreRef FiniteSimplicialSet::add_simplex(std::string id, const std::vector<std::string>& face_ids) {
  std::vector<Simplex> faces;
  for (const auto& f : face_ids) faces.push_back(Simplex::of(at(f)));
  return add_simplex(std::move(id), std::move(faces));
}

Simplex FiniteSimplicialSet::restrict_core(const MonotoneMap& mono, CoreRef c) const {
  if (mono.is_identity()) return Simplex::of(c);
  // mono = d^{i_k} o nu with i_k the largest missing index, so
  // X(mono)(c) = X(nu)(d_{i_k} c).
  auto missing = delta::coface_indices(mono);
  const int top = missing.front();
  std::vector<int> rest(missing.begin() + 1, missing.end());
  const MonotoneMap nu = delta::injection_missing(c.dim - 1, rest);
  return apply(nu, faces(c)[static_cast<std::size_t>(top)]);
}

Simplex FiniteSimplicialSet::apply(const MonotoneMap& f, const Simplex& x) const {
  if (f.target_dim() != x.dim()) throw DomainError("apply: arrow target does not match simplex dimension");
  const MonotoneMap sigma = epi_from_word(x.word, x.dim());
  const auto [eps, mu] = delta::epi_mono_factor(delta::compose(sigma, f));
  const Simplex y = restrict_core(mu, x.core);
  const MonotoneMap tau = epi_from_word(y.word, y.dim());
  return Simplex{word_from_epi(delta::compose(tau, eps)), y.core};
}

Simplex FiniteSimplicialSet::face(const Simplex& x, int i) const {
  if (x.dim() < 1 || i < 0 || i > x.dim()) throw DomainError("face index out of range");
  if (x.word.empty()) return faces(x.core)[static_cast<std::size_t>(i)];
  return apply(delta::coface(x.dim() - 1, i), x);
}

Simplex FiniteSimplicialSet::degeneracy(const Simplex& x, int j) const {
  if (j < 0 || j > x.dim()) throw DomainError("degeneracy index out of range");
  return apply(delta::codegeneracy(x.dim(), j), x);
}

std::vector<Simplex> FiniteSimplicialSet::simplices(int n) const {
  std::vector<Simplex> out;
  for (int c = 0; c <= std::min(n, top_dim()); ++c) {
    const int k = n - c;  // number of degeneracies
    // choose k distinct indices from [0, n-1], written decreasing
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q) pick[static_cast<std::size_t>(q)] = q;
    for (;;) {
      std::vector<int> word(pick.rbegin(), pick.rend());
      for (std::size_t idx = 0; idx < count(c); ++idx) out.push_back(Simplex{word, CoreRef{c, static_cast<int>(idx)}});
      int q = k - 1;
      while (q >= 0 && pick[static_cast<std::size_t>(q)] == n - k + q) --q;
      if (q < 0) break;
      ++pick[static_cast<std::size_t>(q)];
      for (int r = q + 1; r < k; ++r) pick[static_cast<std::size_t>(r)] = pick[static_cast<std::size_t>(r - 1)] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoreRef> FiniteSimplicialSet::face_closure(CoreRef c) const {
  std::set<CoreRef> seen{c};
  std::vector<CoreRef> stack{c};
  while (!stack.empty()) {
    const CoreRef cur = stack.back();
    stack.pop_back();
    if (cur.dim == 0) continue;
    for (const auto& f : faces(cur))
      if (seen.insert(f.core).second) stack.push_back(f.core);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::string> FiniteSimplicialSet::identity_violations() const {
  std::vector<std::string> bad;
  for (int n = 2; n <= top_dim(); ++n)
    for (std::size_t idx = 0; idx < count(n); ++idx) {
      const Simplex x = Simplex::of(CoreRef{n, static_cast<int>(idx)});
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          const Simplex lhs = face(face(x, j), i);
          const Simplex rhs = face(face(x, i), j - 1);
          if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "simplex '" << id(x.core) << "': d" << i << " d" << j << " = " << describe(lhs) << " but d"
               << (j - 1) << " d" << i << " = " << describe(rhs);
            bad.push_back(os.str());
          }
        }
    }
  return bad;
}

std::string FiniteSimplicialSet::describe(const Simplex& x) const {
  std::ostringstream os;
  for (int j : x.word) os << 's' << j << ' ';
  os << id(x.core);
  return os.str();
}

bool adjacent(const FiniteSimplicialSet& x, const Simplex& a, const Simplex& b) {
  const auto& va = x.vertices(a.core);
  const auto& vb = x.vertices(b.core);
  return std::any_of(va.begin(), va.end(), [&](int v) { return std::find(vb.begin(), vb.end(), v) != vb.end(); });
}

namespace {
std::set<Simplex> reachable(const FiniteSimplicialSet& x, const Simplex& s, int max_dim) {
  std::set<Simplex> out;
  for (int a = 0; a <= max_dim; ++a)
    for (const auto& f : delta::all_maps(a, s.dim())) out.insert(x.apply(f, s));
  return out;
}
}  // namespace

bool adjacent_by_arrows(const FiniteSimplicialSet& x, const Simplex& a, const Simplex& b, int max_dim) {
  const auto ra = reachable(x, a, max_dim);
  for (const auto& s : reachable(x, b, max_dim))
    if (ra.contains(s)) return true;
  return false;
}

std::vector<std::size_t> star_sizes(const FiniteSimplicialSet& x) {
  std::vector<std::size_t> stars(x.count(0), 0);
  for (int n = 0; n <= x.top_dim(); ++n)
    for (std::size_t idx = 0; idx < x.count(n); ++idx) {
      auto v = x.vertices(CoreRef{n, static_cast<int>(idx)});
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      for (int w : v) ++stars[static_cast<std::size_t>(w)];
    }
  return stars;
}

std::size_t star_size(const FiniteSimplicialSet& x, int vertex) {
  return star_sizes(x).at(static_cast<std::size_t>(vertex));
}

}  // namespace ctlhom::sset
