#include "ctlhom/delta.hpp"

#include "ctlhom/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ctlhom::delta {

MonotoneMap::MonotoneMap(int source_dim, int target_dim, std::vector<int> values)
    : source_dim_(source_dim), target_dim_(target_dim), values_(std::move(values)) {
  if (source_dim_ < 0 || target_dim_ < 0) throw DomainError("monotone map: negative dimension");
  if (values_.size() != static_cast<std::size_t>(source_dim_) + 1)
    throw DomainError("monotone map: expected " + std::to_string(source_dim_ + 1) + " values");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0 || values_[k] > target_dim_) throw DomainError("monotone map: value out of range");
    if (k > 0 && values_[k] < values_[k - 1]) throw DomainError("monotone map: values not weakly increasing");
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = k;
  return {n, n, std::move(v)};
}

bool MonotoneMap::is_injective() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool MonotoneMap::is_surjective() const {
  if (values_.front() != 0 || values_.back() != target_dim_) return false;
  for (std::size_t k = 1; k < values_.size(); ++k)
    if (values_[k] - values_[k - 1] > 1) return false;
  return true;
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << '[' << source_dim_ << "]->[" << target_dim_ << "] (";
  for (std::size_t k = 0; k < values_.size(); ++k) os << (k ? "," : "") << values_[k];
  os << ')';
  return os.str();
}

MonotoneMap coface(int n, int i) {
  if (n < 0 || i < 0 || i > n + 1) throw DomainError("coface index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n; ++k) v.push_back(k < i ? k : k + 1);
  return {n, n + 1, std::move(v)};
}

MonotoneMap codegeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw DomainError("codegeneracy index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= j ? k : k - 1);
  return {n + 1, n, std::move(v)};
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.target_dim() != g.source_dim()) throw DomainError("compose: dimension mismatch");
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return {f.source_dim(), g.target_dim(), std::move(v)};
}

EpiMono epi_mono_factor(const MonotoneMap& f) {
  std::vector<int> image;
  std::vector<int> epi_values;
  for (int x : f.values()) {
    if (image.empty() || image.back() != x) image.push_back(x);
    epi_values.push_back(static_cast<int>(image.size()) - 1);
  }
  const int p = static_cast<int>(image.size()) - 1;
  return {MonotoneMap(f.source_dim(), p, std::move(epi_values)), MonotoneMap(p, f.target_dim(), std::move(image))};
}

std::vector<int> codegeneracy_indices(const MonotoneMap& epi) {
  if (!epi.is_surjective()) throw DomainError("codegeneracy_indices: map is not surjective");
  std::vector<int> out;
  for (int j = 0; j < epi.source_dim(); ++j)
    if (epi(j) == epi(j + 1)) out.push_back(j);
  return out;
}

std::vector<int> coface_indices(const MonotoneMap& mono) {
  if (!mono.is_injective()) throw DomainError("coface_indices: map is not injective");
  std::vector<int> out;
  std::size_t next = 0;
  for (int k = 0; k <= mono.target_dim(); ++k) {
    if (next < mono.values().size() && mono.values()[next] == k)
      ++next;
    else
      out.push_back(k);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

MonotoneMap surjection_collapsing(int n, std::span<const int> collapsed) {
  std::vector<bool> mark(static_cast<std::size_t>(std::max(n, 0)), false);
  for (int j : collapsed) {
    if (j < 0 || j >= n || mark[static_cast<std::size_t>(j)])
      throw DomainError("surjection_collapsing: invalid or repeated index");
    mark[static_cast<std::size_t>(j)] = true;
  }
  std::vector<int> v{0};
  for (int x = 1; x <= n; ++x) v.push_back(v.back() + (mark[static_cast<std::size_t>(x - 1)] ? 0 : 1));
  const int target = n - static_cast<int>(collapsed.size());
  return {n, target, std::move(v)};
}

MonotoneMap injection_missing(int m, std::span<const int> missing) {
  std::vector<bool> skip(static_cast<std::size_t>(m) + 1, false);
  for (int i : missing) {
    if (i < 0 || i > m || skip[static_cast<std::size_t>(i)])
      throw DomainError("injection_missing: invalid or repeated index");
    skip[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> v;
  for (int k = 0; k <= m; ++k)
    if (!skip[static_cast<std::size_t>(k)]) v.push_back(k);
  if (v.empty()) throw DomainError("injection_missing: image would be empty");
  const int source = static_cast<int>(v.size()) - 1;
  return {source, m, std::move(v)};
}

MonotoneMap from_words(int source_dim, std::span<const int> codegeneracies_increasing,
                       std::span<const int> cofaces_decreasing) {
  MonotoneMap f = MonotoneMap::identity(source_dim);
  // epi = s^{j_1} o ... o s^{j_k}: apply s^{j_k} first.
  for (auto it = codegeneracies_increasing.rbegin(); it != codegeneracies_increasing.rend(); ++it)
    f = compose(codegeneracy(f.target_dim() - 1, *it), f);
  // mono = d^{i_k} o ... o d^{i_1}: apply d^{i_1} (the smallest) first.
  for (auto it = cofaces_decreasing.rbegin(); it != cofaces_decreasing.rend(); ++it)
    f = compose(coface(f.target_dim(), *it), f);
  return f;
}

std::vector<MonotoneMap> all_maps(int n, int m) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
  for (;;) {
    out.emplace_back(n, m, v);
    int k = n;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == m) --k;
    if (k < 0) break;
    const int next = v[static_cast<std::size_t>(k)] + 1;
    for (int q = k; q <= n; ++q) v[static_cast<std::size_t>(q)] = next;
  }
  return out;
}

std::vector<IdentityViolation> check_cosimplicial_identities(int max_dim, std::size_t* checked) {
  std::vector<IdentityViolation> bad;
  std::size_t count = 0;
  auto expect = [&](const MonotoneMap& lhs, const MonotoneMap& rhs, const char* family, int n, int i, int j) {
    ++count;
    if (!(lhs == rhs)) bad.push_back({family, n, i, j});
  };
  for (int n = 0; n <= max_dim; ++n) {
    // d^j d^i = d^i d^{j-1}, i < j, on [n] -> [n+2]
    for (int j = 0; j <= n + 2; ++j)
      for (int i = 0; i < j; ++i)
        expect(compose(coface(n + 1, j), coface(n, i)), compose(coface(n + 1, i), coface(n, j - 1)), "d^j d^i = d^i d^{j-1}",
               n, i, j);
    // s^j s^i = s^i s^{j+1}, i <= j, on [n+2] -> [n]
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        expect(compose(codegeneracy(n, j), codegeneracy(n + 1, i)),
               compose(codegeneracy(n, i), codegeneracy(n + 1, j + 1)), "s^j s^i = s^i s^{j+1}", n, i, j);
    // s^j d^i on [n] -> [n] with s^j : [n+1] -> [n]
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const MonotoneMap lhs = compose(codegeneracy(n, j), coface(n, i));
        if (i < j)
          expect(lhs, compose(coface(n - 1, i), codegeneracy(n - 1, j - 1)), "s^j d^i = d^i s^{j-1}", n, i, j);
        else if (i == j || i == j + 1)
          expect(lhs, MonotoneMap::identity(n), "s^j d^j = id = s^j d^{j+1}", n, i, j);
        else
          expect(lhs, compose(coface(n - 1, i - 1), codegeneracy(n - 1, j)), "s^j d^i = d^{i-1} s^j", n, i, j);
      }
  }
  if (checked) *checked += count;
  return bad;
}

}  // namespace ctlhom::delta
