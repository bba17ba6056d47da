#pragma once

#include "ctlhom/simplicial_set.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ctlhom::sset {

/// Glues the slab's incoming subcomplex onto a subcomplex of the base.
/// `base_ids[k]` is identified with `slab_ids[k]`.
struct Attachment {
  std::vector<std::string> base_ids;
  std::vector<std::string> slab_ids;
};

/// Where a simplex of a truncation comes from: the base (attachment == -1)
/// or copy `copy` (1-based) of the slab along attachment `attachment`.
struct Region {
  int attachment = -1;
  int copy = 0;
  friend bool operator==(const Region&, const Region&) = default;
};

/// K_depth of an exhaustion, materialized as a finite simplicial set.
///
/// Cores are appended base first, then copy 1 of every attachment, then copy
/// 2, and so on, so the cores of K_i are a prefix (per dimension) of the cores
/// of K_{i+1} and CoreRef values agree across depths.
struct Truncation {
  int depth = 0;
  FiniteSimplicialSet complex;
  /// Per dimension, per core.
  std::vector<std::vector<Region>> regions;
  /// Per dimension, per core: the base or slab core it was copied from.
  std::vector<std::vector<CoreRef>> origins;
  /// copies[a][t - 1][dim][slab index] -> core of `complex`.
  std::vector<std::vector<std::vector<std::vector<CoreRef>>>> copies;

  const Region& region(CoreRef c) const;
  CoreRef origin(CoreRef c) const;
  /// Core of copy `copy` (1-based) along `attachment` of the given slab core.
  CoreRef locate(int attachment, int copy, CoreRef slab_core) const;
};

/// A locally finite simplicial set presented as K_0 = base and
/// K_{i+1} = K_i with one more slab glued along every attachment. Copy 1 of
/// the slab is glued to the base along the attachment; copy t + 1 is glued to
/// copy t by identifying slab_in[k] of the new copy with slab_out[k] of the
/// previous one. A finite complex is the constant exhaustion (no attachments).
class Exhaustion {
 public:
  /// Throws PresentationError if a gluing is not an injective isomorphism of
  /// subcomplexes.
  Exhaustion(FiniteSimplicialSet base, FiniteSimplicialSet slab, std::vector<std::string> slab_in,
             std::vector<std::string> slab_out, std::vector<Attachment> attachments);

  static Exhaustion constant(FiniteSimplicialSet complex);

  const FiniteSimplicialSet& base() const { return base_; }
  const FiniteSimplicialSet& slab() const { return slab_; }
  const std::vector<std::string>& slab_in() const { return slab_in_; }
  const std::vector<std::string>& slab_out() const { return slab_out_; }
  const std::vector<Attachment>& attachments() const { return attachments_; }

  bool is_finite() const { return attachments_.empty(); }
  int top_dim() const;

  /// K_depth. Truncations are cached; concurrent callers are safe.
  std::shared_ptr<const Truncation> truncate(int depth) const;

  /// Frontier F_depth: per dimension, per core of K_depth, whether the core
  /// lies in the subcomplex generated by cores having a coface outside K_depth.
  std::vector<std::vector<bool>> frontier(int depth) const;

 private:
  std::shared_ptr<const Truncation> build(int depth) const;

  struct Cache;
  FiniteSimplicialSet base_;
  FiniteSimplicialSet slab_;
  std::vector<std::string> slab_in_;
  std::vector<std::string> slab_out_;
  std::vector<Attachment> attachments_;
  std::shared_ptr<Cache> cache_;
};

struct StarEntry {
  std::string vertex;
  std::size_t size = 0;
};

struct LocalFinitenessReport {
  bool locally_finite = true;
  std::size_t max_star = 0;
  std::vector<StarEntry> stars;
  std::optional<std::string> witness;
  std::string detail;
};

/// Finite complexes are always locally finite; the report lists every star.
LocalFinitenessReport is_locally_finite(const FiniteSimplicialSet& x);

/// Certifies local finiteness of a periodic presentation: for every vertex v
/// of K_i (i = 1, 2) the star of v must be the same in K_{i+1} and K_{i+2}.
/// Stars are reported for the vertices of K_2, measured in K_4.
LocalFinitenessReport is_locally_finite(const Exhaustion& x);

}  // namespace ctlhom::sset
