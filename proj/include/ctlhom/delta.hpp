#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

/// Arithmetic of the simplex category: objects are the finite total orders
/// [n] = {0 < 1 < ... < n}, arrows are weakly order-preserving maps.
namespace ctlhom::delta {

class MonotoneMap {
 public:
  /// Throws DomainError unless `values` has source_dim + 1 weakly increasing
  /// entries in [0, target_dim].
  MonotoneMap(int source_dim, int target_dim, std::vector<int> values);

  static MonotoneMap identity(int n);

  int source_dim() const { return source_dim_; }
  int target_dim() const { return target_dim_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int k) const { return values_[static_cast<std::size_t>(k)]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const { return source_dim_ == target_dim_ && is_injective(); }

  std::string to_string() const;

  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  int source_dim_;
  int target_dim_;
  std::vector<int> values_;
};

/// d^i : [n] -> [n+1], the injection missing i (0 <= i <= n+1).
MonotoneMap coface(int n, int i);
/// s^j : [n+1] -> [n], the surjection hitting j twice (0 <= j <= n).
MonotoneMap codegeneracy(int n, int j);

/// g o f; requires f.target_dim() == g.source_dim().
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

struct EpiMono {
  MonotoneMap epi;
  MonotoneMap mono;
};

/// The unique factorization f = mono o epi.
EpiMono epi_mono_factor(const MonotoneMap& f);

/// For a surjection, the indices j_1 < ... < j_k with
/// epi = s^{j_1} o ... o s^{j_k}.
std::vector<int> codegeneracy_indices(const MonotoneMap& epi);
/// For an injection, the indices i_k > ... > i_1 with
/// mono = d^{i_k} o ... o d^{i_1}.
std::vector<int> coface_indices(const MonotoneMap& mono);

/// The surjection [n] -> [n - k] collapsing j and j+1 for each listed j
/// (any order, distinct, each in [0, n-1]).
MonotoneMap surjection_collapsing(int n, std::span<const int> collapsed);
/// The injection [m - k] -> [m] whose image misses the listed indices.
MonotoneMap injection_missing(int m, std::span<const int> missing);

/// Rebuild a map from its canonical word: cofaces applied after codegeneracies.
MonotoneMap from_words(int source_dim, std::span<const int> codegeneracies_increasing,
                       std::span<const int> cofaces_decreasing);

/// Every monotone map [n] -> [m], in lexicographic order of values.
std::vector<MonotoneMap> all_maps(int n, int m);

struct IdentityViolation {
  std::string family;
  int n;
  int i;
  int j;
};

/// Checks the five families of cosimplicial identities for every valid index
/// pair with domain dimension up to `max_dim`. Returns the violations found
/// and adds the number of equalities checked to `checked` when non-null.
std::vector<IdentityViolation> check_cosimplicial_identities(int max_dim, std::size_t* checked = nullptr);

}  // namespace ctlhom::delta
