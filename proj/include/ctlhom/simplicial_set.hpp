#pragma once

#include "ctlhom/delta.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctlhom::sset {

/// Position of a nondegenerate simplex inside a complex.
struct CoreRef {
  int dim = 0;
  int index = 0;

  friend auto operator<=>(const CoreRef&, const CoreRef&) = default;
  friend bool operator==(const CoreRef&, const CoreRef&) = default;
};

/// Eilenberg-Zilber normal form: `s_{word[0]} s_{word[1]} ... s_{word[k-1]} core`
/// with word strictly decreasing. Every simplex has exactly one such form.
struct Simplex {
  std::vector<int> word;
  CoreRef core;

  static Simplex of(CoreRef c) { return {{}, c}; }
  int dim() const { return core.dim + static_cast<int>(word.size()); }
  bool is_nondegenerate() const { return word.empty(); }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

inline bool is_nondegenerate(const Simplex& x) { return x.is_nondegenerate(); }

/// Degeneracy word of the surjection [n] -> [n - k].
std::vector<int> word_from_epi(const delta::MonotoneMap& epi);
/// The surjection [dim] -> [dim - word.size()] encoded by a degeneracy word.
delta::MonotoneMap epi_from_word(std::span<const int> word, int dim);
/// Throws DomainError unless `word` is a valid word for a simplex of `dim`.
void check_word(std::span<const int> word, int dim);

/// A simplicial set with finitely many nondegenerate simplices.
///
/// Only nondegenerate simplices ("cores") are stored, each with its faces in
/// normal form; degenerate simplices exist as (word, core) values. Face i
/// omits vertex i. Ids are unique across all dimensions.
class FiniteSimplicialSet {
 public:
  CoreRef add_vertex(std::string id);
  /// Adds an n-simplex with faces d_0 .. d_n (n = faces.size() - 1 >= 1).
  CoreRef add_simplex(std::string id, std::vector<Simplex> faces);
  /// Convenience: faces given as nondegenerate ids.
  CoreRef add_simplex(std::string id, const std::vector<std::string>& face_ids);

  int top_dim() const { return static_cast<int>(cores_.size()) - 1; }
  std::size_t count(int dim) const;
  std::vector<std::size_t> counts() const;
  std::size_t total_count() const;
  bool empty() const { return total_count() == 0; }

  bool contains(CoreRef c) const;
  const std::string& id(CoreRef c) const;
  std::optional<CoreRef> find(std::string_view id) const;
  /// Throws DomainError for unknown ids.
  CoreRef at(std::string_view id) const;

  const std::vector<Simplex>& faces(CoreRef c) const;
  /// Vertex indices (0-simplex positions) of a core, in order.
  const std::vector<int>& vertices(CoreRef c) const;
  std::vector<int> vertices(const Simplex& x) const;

  /// X(f)(x) for f : [m] -> [dim x].
  Simplex apply(const delta::MonotoneMap& f, const Simplex& x) const;
  Simplex face(const Simplex& x, int i) const;
  Simplex degeneracy(const Simplex& x, int j) const;

  /// All n-simplices, degenerate ones included, grouped by core.
  std::vector<Simplex> simplices(int n) const;
  /// Cores reachable from c through iterated faces, c included.
  std::vector<CoreRef> face_closure(CoreRef c) const;

  /// Violations of d_i d_j = d_{j-1} d_i (i < j) on stored simplices.
  std::vector<std::string> identity_violations() const;

  /// Human-readable normal form, e.g. "s1 s0 v".
  std::string describe(const Simplex& x) const;

 private:
  struct Core {
    std::string id;
    std::vector<Simplex> faces;
    std::vector<int> vertices;
  };
  const Core& core(CoreRef c) const;
  Simplex restrict_core(const delta::MonotoneMap& mono, CoreRef c) const;

  std::vector<std::vector<Core>> cores_;
  std::unordered_map<std::string, CoreRef> by_id_;
};

/// Adjacency through a shared 0-simplex of the cores.
bool adjacent(const FiniteSimplicialSet& x, const Simplex& a, const Simplex& b);

/// Adjacency by the arrow definition: some X(f)(a) equals some X(f')(b) with
/// f, f' ranging over arrows whose source dimension is at most `max_dim`.
bool adjacent_by_arrows(const FiniteSimplicialSet& x, const Simplex& a, const Simplex& b, int max_dim);

/// Number of cores whose vertex set contains the vertex with index `vertex`.
std::size_t star_size(const FiniteSimplicialSet& x, int vertex);
/// Star sizes of every vertex, indexed by vertex.
std::vector<std::size_t> star_sizes(const FiniteSimplicialSet& x);

}  // namespace ctlhom::sset
