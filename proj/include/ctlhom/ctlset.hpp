#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

/// Controlled sets: a set together with a family of "controlled" subsets that
/// contains every finite subset and is closed under subsets and finite unions.
namespace ctlhom::ctlset {

using Natural = std::uint64_t;

/// Underlying set of a controlled set: an explicit finite list of ids, or the
/// natural numbers (ids are decimal strings).
class Carrier {
 public:
  enum class Kind { Finite, CountablyInfinite };

  /// Throws DomainError on repeated ids.
  static Carrier finite(std::vector<std::string> elements);
  static Carrier naturals();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Number of elements of a finite carrier.
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  bool contains(std::string_view id) const;

  std::string to_string() const;
  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.kind_ == b.kind_ && a.elements_ == b.elements_;
  }

 private:
  Kind kind_ = Kind::Finite;
  std::vector<std::string> elements_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Parses a natural-number id ("0", "17"); empty on anything else.
std::optional<Natural> parse_natural(std::string_view id);

/// A finitely describable subset.
struct SubsetDescriptor {
  enum class Kind { FiniteList, All, CofinalTail };

  Kind kind = Kind::FiniteList;
  std::vector<std::string> elements;
  Natural start = 0;

  static SubsetDescriptor finite_list(std::vector<std::string> elements);
  static SubsetDescriptor all();
  /// {start, start + 1, ...} on the naturals.
  static SubsetDescriptor cofinal_tail(Natural start);

  std::string to_string() const;
};

struct ControlStructure {
  enum class Kind { Min, Max, Generated };

  Kind kind = Kind::Min;
  std::vector<std::vector<std::string>> generators;

  static ControlStructure min() { return {}; }
  static ControlStructure max() { return {Kind::Max, {}}; }
  static ControlStructure generated(std::vector<std::vector<std::string>> generators);

  friend bool operator==(const ControlStructure&, const ControlStructure&) = default;
};

class ControlledSet {
 public:
  /// Throws DomainError when a generator repeats an element or names one
  /// outside the carrier.
  ControlledSet(Carrier carrier, ControlStructure structure);

  const Carrier& carrier() const { return carrier_; }
  const ControlStructure& structure() const { return structure_; }

  /// Generators as bit masks over a finite carrier.
  const std::vector<std::uint64_t>& generator_masks() const { return generator_masks_; }

  std::string to_string() const;
  friend bool operator==(const ControlledSet& a, const ControlledSet& b) {
    return a.carrier_ == b.carrier_ && a.structure_ == b.structure_;
  }

 private:
  Carrier carrier_;
  ControlStructure structure_;
  std::vector<std::uint64_t> generator_masks_;
};

using ControlledSetPtr = std::shared_ptr<const ControlledSet>;

ControlledSetPtr min_ctl(Carrier s);
ControlledSetPtr max_ctl(Carrier s);
Carrier forget(const ControlledSet& x);

/// Membership in the control structure. Throws DomainError for descriptors
/// naming elements outside the carrier (or tails of finite carriers) and
/// UnsupportedRepresentation for generated structures on the naturals.
bool is_controlled(const ControlledSet& x, const SubsetDescriptor& s);

/// The closure of the seeds (empty set, singletons, generators) under subsets
/// and binary unions, as a membership table indexed by bit mask. Finite
/// carriers of at most 16 elements.
std::vector<bool> controlled_family(const ControlledSet& x);

struct Violation {
  std::string condition;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Size of the control structure when enumerated (finite carriers).
  std::optional<std::size_t> controlled_subsets;
  std::string note;

  bool ok() const { return violations.empty(); }
};

/// Axioms (1)-(3): exhaustively on finite carriers, in closed form for Min and
/// Max on the naturals.
ValidationReport validate_structure(const ControlledSet& x);

/// A map out of the naturals from a closed catalogue, in normal form:
/// Constant(c) sends everything to c; PatchShift(k, P) sends n to P[n] when n
/// is patched and to n + k otherwise. Identity is PatchShift(0, {}).
struct CatalogueMap {
  enum class Kind { Constant, PatchShift };

  Kind kind = Kind::PatchShift;
  std::string constant;
  Natural shift = 0;
  std::map<Natural, Natural> patch;

  static CatalogueMap identity() { return {}; }
  static CatalogueMap constant_to(std::string value);
  static CatalogueMap shift_by(Natural k);
  /// Drops patch entries that agree with the shift.
  static CatalogueMap patch_shift(Natural k, std::map<Natural, Natural> patch);

  std::string apply(Natural n) const;
  std::string to_string() const;
  friend bool operator==(const CatalogueMap&, const CatalogueMap&) = default;
};

/// Table (finite source, one target id per source element) or catalogue entry
/// (source = the naturals).
using Assignment = std::variant<std::vector<std::string>, CatalogueMap>;

struct SetMap {
  Carrier source;
  Carrier target;
  Assignment assignment;
};

class ControlledMap {
 public:
  /// Throws DomainError unless the assignment is a total map of carriers.
  ControlledMap(ControlledSetPtr source, ControlledSetPtr target, Assignment assignment);

  const ControlledSet& source() const { return *source_; }
  const ControlledSet& target() const { return *target_; }
  const ControlledSetPtr& source_ptr() const { return source_; }
  const ControlledSetPtr& target_ptr() const { return target_; }
  const Assignment& assignment() const { return assignment_; }

  std::string operator()(std::string_view element) const;
  std::string to_string() const;

  friend bool operator==(const ControlledMap& a, const ControlledMap& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.assignment_ == b.assignment_;
  }

 private:
  ControlledSetPtr source_;
  ControlledSetPtr target_;
  Assignment assignment_;
};

ControlledMap identity(const ControlledSetPtr& x);

/// Conditions (1) controlled images and (2) proper restrictions to controlled
/// sets: exhaustively on finite carriers, per catalogue entry on the naturals.
ValidationReport validate_map(const ControlledMap& f);

/// g o f. Throws DomainError when the endpoints differ.
ControlledMap compose(const ControlledMap& g, const ControlledMap& f);

/// The functors on maps act as the identity on assignments.
ControlledMap min_ctl(const SetMap& f);
ControlledMap max_ctl(const SetMap& f);
SetMap forget(const ControlledMap& f);

/// Every set map between finite carriers, in lexicographic table order.
std::vector<SetMap> all_set_maps(const Carrier& s, const Carrier& t);
/// Every assignment between finite carriers that passes validate_map.
std::vector<ControlledMap> all_controlled_maps(const ControlledSetPtr& x, const ControlledSetPtr& y);

struct AdjunctionReport {
  std::size_t set_maps = 0;
  std::size_t controlled_maps = 0;
  bool bijection = false;
  std::optional<std::string> counterexample;
};

/// Compares Hom(MinCtl(S), X) with Hom(S, Forget(X)) through the identity on
/// assignments.
AdjunctionReport adjunction_check(const Carrier& s, const ControlledSetPtr& x);

}  // namespace ctlhom::ctlset
