#pragma once

#include "ctlhom/exhaustion.hpp"
#include "ctlhom/homology_group.hpp"
#include "ctlhom/integer_matrix.hpp"
#include "ctlhom/simplicial_map.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

/// Chain and cochain complexes of simplicial sets and the four (co)homology
/// theories: ordinary homology, Borel-Moore homology, cohomology and
/// compactly supported cohomology.
namespace ctlhom::chain {

using sset::Exhaustion;
using sset::FiniteSimplicialSet;

/// Matrix of the normalized boundary d_n = sum (-1)^i d_i: columns are the
/// nondegenerate n-simplices, rows the nondegenerate (n-1)-simplices, and
/// degenerate faces contribute nothing. For n = 0 the matrix is 0 x count(0);
/// above the top dimension it has no columns.
IntegerMatrix boundary_matrix(const FiniteSimplicialSet& x, int n);

/// Boundary of the unnormalized complex, whose degree-n basis is every
/// n-simplex in the order of FiniteSimplicialSet::simplices.
IntegerMatrix unnormalized_boundary_matrix(const FiniteSimplicialSet& x, int n);

/// Integral homology of a chain complex given by its boundaries
/// (boundaries[n] is d_n, n = 0 .. top + 1), degrees 0 .. top.
std::vector<HomologyGroup> integral_homology(const std::vector<IntegerMatrix>& boundaries);
/// Integral cohomology of the dual complex, degrees 0 .. top.
std::vector<HomologyGroup> integral_cohomology(const std::vector<IntegerMatrix>& boundaries);

/// Integral homology of the unnormalized complex of a finite simplicial set.
std::vector<HomologyGroup> unnormalized_homology(const FiniteSimplicialSet& x);

/// C(K) / C(F) for a subcomplex F of K, with basis the cores of K outside F in
/// core order.
struct QuotientComplex {
  /// Per dimension, the core indices forming the basis.
  std::vector<std::vector<int>> basis;
  std::vector<std::vector<std::string>> ids;
  /// boundaries[n] : basis[n] -> basis[n - 1] for n = 0 .. top + 1.
  std::vector<IntegerMatrix> boundaries;

  int top_dim() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t dim(int n) const;
  /// Position of a core index in basis[n].
  std::optional<std::size_t> position(int n, int core_index) const;
  /// Boundary into degree n - 1 for any n >= 0 (empty matrices outside range).
  IntegerMatrix boundary(int n) const;
};

/// `marks[n][i]` flags core i of dimension n as belonging to F. Throws
/// PresentationError unless the marked cores form a subcomplex.
QuotientComplex relative_quotient(const FiniteSimplicialSet& k, const std::vector<std::vector<bool>>& marks);
/// Q_depth = C(K_depth) / C(F_depth).
QuotientComplex relative_quotient(const Exhaustion& x, int depth);

enum class Theory { Homology, BorelMoore, Cohomology, CompactCohomology };

/// "H", "H_BM", "H^co" or "H_c".
std::string theory_tag(Theory t);
bool is_cohomological(Theory t);

struct StabilizationOptions {
  int window = 3;
  int max_depth = 25;
  /// Highest degree reported; defaults to the top dimension.
  std::optional<int> max_degree;
};

/// 25 unless CTLHOM_MAX_DEPTH holds a positive integer.
int default_max_depth();

struct DegreeResult {
  int degree = 0;
  HomologyGroup group;
  bool stable = true;
  /// First depth of the run of isomorphic transitions (or the last depth
  /// computed when unstable).
  int depth = 0;
};

struct TheoryResult {
  Theory theory = Theory::Homology;
  Coefficients coeffs;
  std::vector<DegreeResult> degrees;
  bool stable = true;
  int depth = 0;
  int window = 3;
  int max_depth = 25;
  std::vector<std::string> caveats;

  const HomologyGroup& group(int degree) const;
};

TheoryResult homology(const FiniteSimplicialSet& x, const Coefficients& coeffs = {},
                      std::optional<int> max_degree = std::nullopt);
TheoryResult cohomology(const FiniteSimplicialSet& x, const Coefficients& coeffs = {},
                        std::optional<int> max_degree = std::nullopt);

/// The four theories on an exhaustion, from the systems H(K_i) (colimit),
/// H(Q_i) (limit), H^*(K_i) (limit) and H^*(Q_i) (colimit). A degree is
/// reported once `window` consecutive transitions induce isomorphisms.
TheoryResult compute(Theory theory, const Exhaustion& x, const Coefficients& coeffs = {},
                     const StabilizationOptions& options = {});
TheoryResult homology(const Exhaustion& x, const Coefficients& coeffs = {}, const StabilizationOptions& options = {});
TheoryResult bm_homology(const Exhaustion& x, const Coefficients& coeffs = {},
                         const StabilizationOptions& options = {});
TheoryResult cohomology(const Exhaustion& x, const Coefficients& coeffs = {},
                        const StabilizationOptions& options = {});
TheoryResult compact_cohomology(const Exhaustion& x, const Coefficients& coeffs = {},
                                const StabilizationOptions& options = {});

/// Finitely supported integral chain on nondegenerate simplices (keyed by id).
struct Chain {
  int degree = 0;
  std::map<std::string, BigInt> terms;

  void add(const std::string& id, const BigInt& coefficient);
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Finitely supported integral cochain.
struct Cochain {
  int degree = 0;
  std::map<std::string, BigInt> terms;

  void add(const std::string& id, const BigInt& coefficient);
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Throws DomainError for ids that are not cores of the right degree.
Chain boundary(const FiniteSimplicialSet& x, const Chain& c);
/// The transpose of the boundary, without an extra sign.
Cochain coboundary(const FiniteSimplicialSet& x, const Cochain& a);

/// sum_x a(x) c(x), reduced into [0, m) for Z/m coefficients. Throws
/// DomainError on a degree mismatch.
BigInt pairing(const Cochain& a, const Chain& c, const Coefficients& coeffs = {});

/// Sums coefficients over fibers, dropping degenerate images.
Chain pushforward(const sset::FiniteMap& f, const Chain& c);
/// a o f on nondegenerate simplices with nondegenerate image.
Cochain pullback(const sset::FiniteMap& f, const Cochain& a);

/// Along a map of exhaustions. Both throw ControlledError unless the map is
/// proper; the chain (or cochain) must live in some truncation.
Chain pushforward(const sset::SimplicialMap& f, const Chain& c);
Cochain pullback(const sset::SimplicialMap& f, const Cochain& a);

/// Pairing of the free generators of the stabilized H^n_c with those of
/// H_n^BM, evaluated on Q_depth.
struct GeneratorPairing {
  int degree = 0;
  int depth = 0;
  bool stable = true;
  std::vector<Cochain> cocycles;
  std::vector<Chain> cycles;
  IntegerMatrix matrix;
};

GeneratorPairing generator_pairing(const Exhaustion& x, int degree, const StabilizationOptions& options = {});

}  // namespace ctlhom::chain
