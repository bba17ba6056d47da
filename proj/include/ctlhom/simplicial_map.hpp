#pragma once

#include "ctlhom/exhaustion.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ctlhom::sset {

/// Image of a nondegenerate source simplex. `attachment == -1` names a core of
/// the target base; otherwise the core lives in copy (source copy + offset) of
/// the target slab along `attachment` (for base sources the copy is offset).
struct TargetRef {
  std::vector<int> word;
  std::string core_id;
  int attachment = -1;
  int offset = 0;
};

/// A simplicial map restricted to finite truncations. Assignments are given on
/// cores and extended to all simplices through normal forms.
struct FiniteMap {
  std::shared_ptr<const Truncation> source;
  std::shared_ptr<const Truncation> target;
  std::vector<std::vector<Simplex>> assignment;

  const Simplex& on_core(CoreRef c) const;
  Simplex operator()(const Simplex& x) const;
  /// Failures of f(d_i y) = d_i f(y) on source cores.
  std::vector<std::string> naturality_violations() const;
};

/// A simplicial map between exhaustions, described periodically: one
/// assignment for the base and one per source attachment for the slab cores
/// (applied to every copy).
class SimplicialMap {
 public:
  SimplicialMap(std::shared_ptr<const Exhaustion> source, std::shared_ptr<const Exhaustion> target,
                std::map<std::string, TargetRef> base_assignment,
                std::vector<std::map<std::string, TargetRef>> slab_assignment);

  static SimplicialMap identity(const std::shared_ptr<const Exhaustion>& x);

  const Exhaustion& source() const { return *source_; }
  const Exhaustion& target() const { return *target_; }
  const std::shared_ptr<const Exhaustion>& source_ptr() const { return source_; }
  const std::shared_ptr<const Exhaustion>& target_ptr() const { return target_; }

  /// Largest copy shift towards the target's ends.
  int reach() const { return reach_; }
  /// Largest |offset| appearing in the description.
  int spread() const { return spread_; }

  /// The map K_depth(source) -> K_{depth + reach}(target). Throws
  /// PresentationError when glued simplices receive inconsistent images or
  /// when naturality fails.
  FiniteMap materialize(int depth) const;

 private:
  std::shared_ptr<const Exhaustion> source_;
  std::shared_ptr<const Exhaustion> target_;
  std::map<std::string, TargetRef> base_assignment_;
  std::vector<std::map<std::string, TargetRef>> slab_assignment_;
  int reach_ = 0;
  int spread_ = 0;
};

struct ProperReport {
  bool proper = true;
  std::size_t max_fiber = 0;
  std::optional<std::string> witness;
  std::string detail;
};

/// Levelwise properness: every nondegenerate target simplex is hit (up to
/// degeneracy) by finitely many nondegenerate source simplices. Fibers over
/// the cores of the target's K_1 are counted at three consecutive source
/// depths beyond the map's reach; any growth is reported with a witness.
ProperReport is_proper_map(const SimplicialMap& f);

/// A finitely described family of simplices of an exhaustion.
struct SimplexFamily {
  enum class Kind { Finite, All, Periodic, DegeneraciesOf };
  Kind kind = Kind::Finite;
  /// Finite: members as (word, core id) in truncation naming.
  std::vector<std::pair<std::vector<int>, std::string>> members;
  /// Periodic: base cores plus these slab cores in every copy.
  std::vector<std::string> base_ids;
  std::vector<std::string> slab_ids;
  /// DegeneraciesOf: the vertex whose iterated degeneracies form the family.
  std::string vertex;

  static SimplexFamily finite(std::vector<std::pair<std::vector<int>, std::string>> members);
  static SimplexFamily all();
  static SimplexFamily periodic(std::vector<std::string> base_ids, std::vector<std::string> slab_ids);
  static SimplexFamily degeneracies_of(std::string vertex);
};

struct FamilyReport {
  bool controlled = true;
  std::optional<std::string> witness;
  std::string detail;
};

/// Whether every vertex star meets only finitely many members of the family
/// (degenerate members count towards the star of their core).
FamilyReport family_is_controlled(const Exhaustion& x, const SimplexFamily& family);

struct FamilyCheck {
  std::string family;
  bool image_controlled = true;
  bool fibers_finite = true;
  std::optional<std::string> witness;
};

struct Theorem41Report {
  bool proper = false;
  bool controlled = false;
  bool agree = false;
  ProperReport proper_report;
  std::vector<FamilyCheck> families;
};

/// Compares levelwise properness of f with controlledness of f as a map of
/// maximally controlled simplicial sets, tested on the canonical families
/// (the base, every slab's copies, everything).
Theorem41Report theorem41_check(const SimplicialMap& f);

}  // namespace ctlhom::sset
