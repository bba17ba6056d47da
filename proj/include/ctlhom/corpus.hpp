#pragma once

#include "ctlhom/exhaustion.hpp"
#include "ctlhom/simplicial_map.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

/// Standard test spaces and the JSON file format for complexes and
/// exhaustions.
namespace ctlhom::corpus {

using sset::Exhaustion;
using sset::FiniteSimplicialSet;

/// One of point, delta(n), sphere(n), circle, torus, rp2, ray, line, plane,
/// cylinder.
struct SpaceDescriptor {
  std::string name;
  std::optional<int> parameter;

  /// Throws DescriptorError on unknown names or malformed parameters.
  static SpaceDescriptor parse(const std::string& text);
  std::string to_string() const;
};

struct DescriptorInfo {
  std::string syntax;
  std::string description;
  bool finite = true;
};

/// Every descriptor accepted by `build`.
const std::vector<DescriptorInfo>& descriptors();

/// A finite complex (held as a constant exhaustion) or a genuine exhaustion.
struct Space {
  std::string name;
  std::shared_ptr<const Exhaustion> exhaustion;

  bool is_finite() const { return exhaustion->is_finite(); }
  /// The complex itself; only meaningful for finite spaces.
  const FiniteSimplicialSet& complex() const { return exhaustion->base(); }
};

constexpr int kDefaultMaxDim = 4;

/// Throws DescriptorError for unknown names or parameters outside
/// [0, max_dim].
Space build(const SpaceDescriptor& descriptor, int max_dim = kDefaultMaxDim);
Space build(const std::string& descriptor, int max_dim = kDefaultMaxDim);

FiniteSimplicialSet point();
/// Standard n-simplex on vertices "0".."n"; faces are named by their vertices.
FiniteSimplicialSet delta(int n);
/// Boundary of the (n+1)-simplex.
FiniteSimplicialSet sphere(int n);
/// One vertex, one edge with both faces at that vertex.
FiniteSimplicialSet circle();
/// Square circle r0 r1 r2 r3, the target of the cylinder projection.
FiniteSimplicialSet circle4();
/// 7-vertex triangulation.
FiniteSimplicialSet torus();
/// 6-vertex triangulation.
FiniteSimplicialSet rp2();

std::shared_ptr<const Exhaustion> ray();
std::shared_ptr<const Exhaustion> line();
std::shared_ptr<const Exhaustion> plane();
/// Circle times the line.
std::shared_ptr<const Exhaustion> cylinder();
/// Not locally finite: every slab adds an edge at the base vertex v0.
std::shared_ptr<const Exhaustion> broom();
/// Locally finite but with a loop at every vertex of the ray, so none of the
/// four theories stabilizes.
std::shared_ptr<const Exhaustion> loop_ray();

/// Adds the simplex spanned by `vertices` (in order) and every missing face;
/// ids are the vertex ids joined by "-". Returns the simplex id.
std::string add_ordered(FiniteSimplicialSet& x, const std::vector<std::string>& vertices);

/// The simplicial map of ordered complexes induced by a vertex map into a
/// finite ordered complex; each simplex must map onto a weakly increasing
/// vertex tuple. Every source attachment uses the same slab vertex map.
sset::SimplicialMap vertex_map(const std::shared_ptr<const Exhaustion>& source,
                               const std::shared_ptr<const Exhaustion>& target,
                               const std::map<std::string, std::string>& base_vertices,
                               const std::map<std::string, std::string>& slab_vertices);

struct MapFixture {
  std::string name;
  sset::SimplicialMap map;
  bool proper = true;
};

sset::SimplicialMap fold_line_to_ray();
sset::SimplicialMap project_cylinder_to_circle();
/// Identity maps of the corpus spaces, the fold and the projection.
std::vector<MapFixture> map_fixtures();

/// Named finite complexes and exhaustions of the corpus (descriptor spaces
/// with default parameters plus delta(0..3), sphere(0..3)).
std::vector<Space> corpus_spaces();

/// Same ids in the same order per dimension with the same faces.
bool same_presentation(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b);
bool same_presentation(const Exhaustion& a, const Exhaustion& b);

std::string to_json(const Space& space);
/// Parses the file format. Throws ParseError (with line, column and field
/// path), ValidationError (simplicial identities) or PresentationError
/// (gluing).
Space from_json(const std::string& text, const std::string& name = "input");

Space load(const std::filesystem::path& path);
/// Writes through a temporary file and renames it into place.
void save(const Space& space, const std::filesystem::path& path);

/// A descriptor, or a path to a file in the format above.
Space resolve(const std::string& descriptor_or_path, int max_dim = kDefaultMaxDim);

}  // namespace ctlhom::corpus
