#include "ctlhom/ctlset.hpp"

#include "ctlhom/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <sstream>

namespace ctlhom::ctlset {

namespace {

constexpr std::size_t kMaskLimit = 64;
constexpr std::size_t kFamilyLimit = 16;
constexpr std::size_t kAxiomLimit = 12;

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
  return out + "}";
}

std::string mask_text(const Carrier& c, std::uint64_t mask) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (mask >> i & 1U) ids.push_back(c.elements()[i]);
  return join_ids(ids);
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::uint64_t mask_of(const Carrier& c, const std::vector<std::string>& ids, const char* what) {
  if (c.size() > kMaskLimit) throw UnsupportedRepresentation("carriers above 64 elements are not enumerable");
  std::uint64_t mask = 0;
  for (const auto& id : ids) {
    const auto i = c.index_of(id);
    if (!i) throw DomainError(std::string(what) + ": '" + id + "' is not an element of " + c.to_string());
    const std::uint64_t bit = std::uint64_t{1} << *i;
    if (mask & bit) throw DomainError(std::string(what) + ": element '" + id + "' repeated");
    mask |= bit;
  }
  return mask;
}

void check_naturals(const std::vector<std::string>& ids, const char* what) {
  std::set<Natural> seen;
  for (const auto& id : ids) {
    const auto n = parse_natural(id);
    if (!n) throw DomainError(std::string(what) + ": '" + id + "' is not a natural number");
    if (!seen.insert(*n).second) throw DomainError(std::string(what) + ": element '" + id + "' repeated");
  }
}

}  // namespace

std::optional<Natural> parse_natural(std::string_view id) {
  if (id.empty() || (id.size() > 1 && id.front() == '0')) return std::nullopt;
  Natural n = 0;
  auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), n);
  if (ec != std::errc() || ptr != id.data() + id.size()) return std::nullopt;
  return n;
}

Carrier Carrier::finite(std::vector<std::string> elements) {
  Carrier c;
  c.kind_ = Kind::Finite;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!c.index_.emplace(elements[i], i).second) throw DomainError("carrier: element '" + elements[i] + "' repeated");
  c.elements_ = std::move(elements);
  return c;
}

Carrier Carrier::naturals() {
  Carrier c;
  c.kind_ = Kind::CountablyInfinite;
  return c;
}

std::optional<std::size_t> Carrier::index_of(std::string_view id) const {
  if (!is_finite()) return std::nullopt;
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Carrier::contains(std::string_view id) const {
  return is_finite() ? index_of(id).has_value() : parse_natural(id).has_value();
}

std::string Carrier::to_string() const { return is_finite() ? join_ids(elements_) : "N"; }

SubsetDescriptor SubsetDescriptor::finite_list(std::vector<std::string> elements) {
  return {Kind::FiniteList, std::move(elements), 0};
}

SubsetDescriptor SubsetDescriptor::all() { return {Kind::All, {}, 0}; }

SubsetDescriptor SubsetDescriptor::cofinal_tail(Natural start) { return {Kind::CofinalTail, {}, start}; }

std::string SubsetDescriptor::to_string() const {
  switch (kind) {
    case Kind::FiniteList:
      return join_ids(elements);
    case Kind::All:
      return "All";
    case Kind::CofinalTail:
      return "{" + std::to_string(start) + ", " + std::to_string(start + 1) + ", ...}";
  }
  return {};
}

ControlStructure ControlStructure::generated(std::vector<std::vector<std::string>> generators) {
  return {Kind::Generated, std::move(generators)};
}

ControlledSet::ControlledSet(Carrier carrier, ControlStructure structure)
    : carrier_(std::move(carrier)), structure_(std::move(structure)) {
  if (structure_.kind != ControlStructure::Kind::Generated) return;
  for (const auto& g : structure_.generators) {
    if (carrier_.is_finite())
      generator_masks_.push_back(mask_of(carrier_, g, "generator"));
    else
      check_naturals(g, "generator");
  }
}

std::string ControlledSet::to_string() const {
  switch (structure_.kind) {
    case ControlStructure::Kind::Min:
      return "Min(" + carrier_.to_string() + ")";
    case ControlStructure::Kind::Max:
      return "Max(" + carrier_.to_string() + ")";
    case ControlStructure::Kind::Generated: {
      std::string out = "Gen(" + carrier_.to_string() + ";";
      for (std::size_t i = 0; i < structure_.generators.size(); ++i)
        out += (i ? "," : " ") + join_ids(structure_.generators[i]);
      return out + ")";
    }
  }
  return {};
}

ControlledSetPtr min_ctl(Carrier s) { return std::make_shared<const ControlledSet>(std::move(s), ControlStructure::min()); }
ControlledSetPtr max_ctl(Carrier s) { return std::make_shared<const ControlledSet>(std::move(s), ControlStructure::max()); }
Carrier forget(const ControlledSet& x) { return x.carrier(); }

std::vector<bool> controlled_family(const ControlledSet& x) {
  const Carrier& c = x.carrier();
  if (!c.is_finite() || c.size() > kFamilyLimit)
    throw UnsupportedRepresentation("control structures are enumerated on finite carriers of at most 16 elements");
  const std::size_t n = c.size();
  std::vector<std::uint64_t> seeds{0};
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(std::uint64_t{1} << i);
  if (x.structure().kind == ControlStructure::Kind::Max) seeds.push_back(full_mask(n));
  for (auto g : x.generator_masks()) seeds.push_back(g);

  // Unions of seeds, then everything below them.
  std::vector<bool> unions(std::size_t{1} << n, false);
  std::vector<std::uint64_t> queue;
  for (auto s : seeds)
    if (!unions[s]) {
      unions[s] = true;
      queue.push_back(s);
    }
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (auto s : seeds) {
      const std::uint64_t u = queue[q] | s;
      if (!unions[u]) {
        unions[u] = true;
        queue.push_back(u);
      }
    }
  std::vector<bool> family(unions.size(), false);
  for (auto u : queue) {
    for (std::uint64_t sub = u;; sub = (sub - 1) & u) {
      family[sub] = true;
      if (sub == 0) break;
    }
  }
  return family;
}

bool is_controlled(const ControlledSet& x, const SubsetDescriptor& s) {
  const Carrier& c = x.carrier();
  const auto kind = x.structure().kind;
  if (!c.is_finite()) {
    if (kind == ControlStructure::Kind::Generated)
      throw UnsupportedRepresentation("generated control structures need a finite carrier");
    if (s.kind == SubsetDescriptor::Kind::FiniteList) {
      check_naturals(s.elements, "subset");
      return true;
    }
    return kind == ControlStructure::Kind::Max;
  }
  if (s.kind == SubsetDescriptor::Kind::CofinalTail)
    throw DomainError("subset: cofinal tails only make sense on the naturals");
  if (c.size() > kFamilyLimit) {
    // Every subset of a finite carrier is finite.
    if (s.kind == SubsetDescriptor::Kind::FiniteList) mask_of(c, s.elements, "subset");
    return true;
  }
  const std::uint64_t mask =
      s.kind == SubsetDescriptor::Kind::All ? full_mask(c.size()) : mask_of(c, s.elements, "subset");
  return controlled_family(x)[mask];
}

ValidationReport validate_structure(const ControlledSet& x) {
  ValidationReport r;
  const Carrier& c = x.carrier();
  const auto kind = x.structure().kind;
  if (!c.is_finite()) {
    if (kind == ControlStructure::Kind::Generated)
      throw UnsupportedRepresentation("generated control structures need a finite carrier");
    r.note = kind == ControlStructure::Kind::Min
                 ? "finite subsets: subsets and finite unions of finite sets are finite"
                 : "the power set satisfies every axiom";
    return r;
  }
  if (kind != ControlStructure::Kind::Generated && c.size() > kAxiomLimit) {
    r.note = "every subset of a finite carrier is finite, so the structure is the power set";
    return r;
  }
  if (c.size() > kAxiomLimit)
    throw UnsupportedRepresentation("exhaustive validation is limited to carriers of at most 12 elements");

  const auto family = controlled_family(x);
  const std::uint64_t top = full_mask(c.size());
  std::vector<std::uint64_t> members;
  for (std::uint64_t s = 0; s <= top; ++s)
    if (family[s]) members.push_back(s);
  r.controlled_subsets = members.size();

  for (std::uint64_t s = 0; s <= top; ++s)
    if (!family[s]) r.violations.push_back({"(1) finite subsets are controlled", mask_text(c, s)});
  for (auto s : members)
    for (std::uint64_t sub = s;; sub = (sub - 1) & s) {
      if (!family[sub])
        r.violations.push_back({"(2) subsets of controlled sets are controlled",
                                mask_text(c, sub) + " inside " + mask_text(c, s)});
      if (sub == 0) break;
    }
  for (auto a : members)
    for (auto b : members)
      if (!family[a | b])
        r.violations.push_back({"(3) finite unions are controlled", mask_text(c, a) + " and " + mask_text(c, b)});
  r.note = "finite carrier: every subset is finite, so Min, Max and every generated structure coincide";
  return r;
}

CatalogueMap CatalogueMap::constant_to(std::string value) {
  CatalogueMap m;
  m.kind = Kind::Constant;
  m.constant = std::move(value);
  return m;
}

CatalogueMap CatalogueMap::shift_by(Natural k) { return patch_shift(k, {}); }

CatalogueMap CatalogueMap::patch_shift(Natural k, std::map<Natural, Natural> patch) {
  CatalogueMap m;
  m.shift = k;
  for (const auto& [n, v] : patch)
    if (v != n + k) m.patch.emplace(n, v);
  return m;
}

std::string CatalogueMap::apply(Natural n) const {
  if (kind == Kind::Constant) return constant;
  auto it = patch.find(n);
  return std::to_string(it != patch.end() ? it->second : n + shift);
}

std::string CatalogueMap::to_string() const {
  if (kind == Kind::Constant) return "constant " + constant;
  if (patch.empty()) return shift == 0 ? "identity" : "shift by " + std::to_string(shift);
  std::ostringstream os;
  os << "shift by " << shift << " patched at";
  for (const auto& [n, v] : patch) os << ' ' << n << "->" << v;
  return os.str();
}

ControlledMap::ControlledMap(ControlledSetPtr source, ControlledSetPtr target, Assignment assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  const Carrier& s = source_->carrier();
  const Carrier& t = target_->carrier();
  if (const auto* table = std::get_if<std::vector<std::string>>(&assignment_)) {
    if (!s.is_finite()) throw DomainError("map: a table needs a finite source");
    if (table->size() != s.size()) throw DomainError("map: the table must list one image per source element");
    for (const auto& v : *table)
      if (!t.contains(v)) throw DomainError("map: image '" + v + "' is not an element of " + t.to_string());
    return;
  }
  const auto& cat = std::get<CatalogueMap>(assignment_);
  if (s.is_finite()) throw DomainError("map: catalogue maps start at the naturals");
  if (cat.kind == CatalogueMap::Kind::Constant) {
    if (!t.contains(cat.constant))
      throw DomainError("map: constant '" + cat.constant + "' is not an element of " + t.to_string());
  } else if (t.is_finite()) {
    throw DomainError("map: shifts land in the naturals");
  }
}

std::string ControlledMap::operator()(std::string_view element) const {
  if (const auto* table = std::get_if<std::vector<std::string>>(&assignment_)) {
    const auto i = source_->carrier().index_of(element);
    if (!i) throw DomainError("map: '" + std::string(element) + "' is not in the source");
    return (*table)[*i];
  }
  const auto n = parse_natural(element);
  if (!n) throw DomainError("map: '" + std::string(element) + "' is not a natural number");
  return std::get<CatalogueMap>(assignment_).apply(*n);
}

std::string ControlledMap::to_string() const {
  std::string body;
  if (const auto* table = std::get_if<std::vector<std::string>>(&assignment_)) {
    const auto& src = source_->carrier().elements();
    for (std::size_t i = 0; i < table->size(); ++i) body += (i ? ", " : "") + src[i] + "->" + (*table)[i];
  } else {
    body = std::get<CatalogueMap>(assignment_).to_string();
  }
  return source_->to_string() + " -> " + target_->to_string() + " [" + body + "]";
}

ControlledMap identity(const ControlledSetPtr& x) {
  if (x->carrier().is_finite()) return ControlledMap(x, x, x->carrier().elements());
  return ControlledMap(x, x, CatalogueMap::identity());
}

ValidationReport validate_map(const ControlledMap& f) {
  ValidationReport r;
  const ControlledSet& src = f.source();
  const ControlledSet& tgt = f.target();
  if (src.carrier().is_finite()) {
    const auto family = controlled_family(src);
    std::optional<std::vector<bool>> target_family;
    if (tgt.carrier().is_finite() && tgt.carrier().size() <= kFamilyLimit) target_family = controlled_family(tgt);
    const auto& table = std::get<std::vector<std::string>>(f.assignment());
    std::size_t checked = 0;
    for (std::uint64_t s = 0; s < family.size(); ++s) {
      if (!family[s]) continue;
      ++checked;
      std::vector<std::string> image;
      std::uint64_t image_mask = 0;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (!(s >> i & 1U)) continue;
        if (target_family) {
          image_mask |= std::uint64_t{1} << *tgt.carrier().index_of(table[i]);
        } else if (std::find(image.begin(), image.end(), table[i]) == image.end()) {
          image.push_back(table[i]);
        }
      }
      const bool ok = target_family ? (*target_family)[image_mask]
                                    : is_controlled(tgt, SubsetDescriptor::finite_list(image));
      if (!ok)
        r.violations.push_back({"(1) images of controlled sets are controlled",
                                "image of " + mask_text(src.carrier(), s) + " is not controlled"});
      // Restrictions to finite sets have fibers bounded by |L|.
    }
    r.controlled_subsets = checked;
    return r;
  }

  const auto skind = src.structure().kind;
  if (skind == ControlStructure::Kind::Generated || tgt.structure().kind == ControlStructure::Kind::Generated) {
    if (!tgt.carrier().is_finite() || skind == ControlStructure::Kind::Generated)
      throw UnsupportedRepresentation("generated control structures need a finite carrier");
  }
  const auto& cat = std::get<CatalogueMap>(f.assignment());
  if (cat.kind == CatalogueMap::Kind::Constant) {
    if (!is_controlled(tgt, SubsetDescriptor::finite_list({cat.constant})))
      r.violations.push_back({"(1) images of controlled sets are controlled", "{" + cat.constant + "}"});
    if (skind == ControlStructure::Kind::Max)
      r.violations.push_back({"(2) restrictions to controlled sets are proper",
                              "the fiber over " + cat.constant + " meets the controlled set N infinitely"});
    r.note = "constant map";
    return r;
  }
  if (skind == ControlStructure::Kind::Max && tgt.structure().kind != ControlStructure::Kind::Max) {
    const Natural tail = (cat.patch.empty() ? 0 : cat.patch.rbegin()->first + 1) + cat.shift;
    r.violations.push_back({"(1) images of controlled sets are controlled",
                            "the image of N contains the tail " + SubsetDescriptor::cofinal_tail(tail).to_string() +
                                ", which is not controlled in " + tgt.to_string()});
  }
  r.note = "patched shifts are finite-to-one, hence proper";
  return r;
}

ControlledMap compose(const ControlledMap& g, const ControlledMap& f) {
  if (!(f.target() == g.source()))
    throw DomainError("compose: target " + f.target().to_string() + " differs from source " + g.source().to_string());
  if (const auto* table = std::get_if<std::vector<std::string>>(&f.assignment())) {
    std::vector<std::string> out;
    out.reserve(table->size());
    for (const auto& v : *table) out.push_back(g(v));
    return ControlledMap(f.source_ptr(), g.target_ptr(), std::move(out));
  }
  const auto& fc = std::get<CatalogueMap>(f.assignment());
  if (fc.kind == CatalogueMap::Kind::Constant)
    return ControlledMap(f.source_ptr(), g.target_ptr(), CatalogueMap::constant_to(g(fc.constant)));
  const auto* gc = std::get_if<CatalogueMap>(&g.assignment());
  if (!gc) throw UnsupportedRepresentation("compose: the composite is outside the catalogue");
  if (gc->kind == CatalogueMap::Kind::Constant) return ControlledMap(f.source_ptr(), g.target_ptr(), *gc);
  std::map<Natural, Natural> patch;
  for (const auto& [n, v] : fc.patch) patch.emplace(n, *parse_natural(gc->apply(v)));
  for (const auto& [m, v] : gc->patch)
    if (m >= fc.shift && !fc.patch.contains(m - fc.shift)) patch.emplace(m - fc.shift, v);
  return ControlledMap(f.source_ptr(), g.target_ptr(), CatalogueMap::patch_shift(fc.shift + gc->shift, std::move(patch)));
}

ControlledMap min_ctl(const SetMap& f) { return ControlledMap(min_ctl(f.source), min_ctl(f.target), f.assignment); }
ControlledMap max_ctl(const SetMap& f) { return ControlledMap(max_ctl(f.source), max_ctl(f.target), f.assignment); }
SetMap forget(const ControlledMap& f) { return {f.source().carrier(), f.target().carrier(), f.assignment()}; }

std::vector<SetMap> all_set_maps(const Carrier& s, const Carrier& t) {
  if (!s.is_finite() || !t.is_finite()) throw UnsupportedRepresentation("set maps are enumerated between finite carriers");
  std::vector<SetMap> out;
  const std::size_t n = s.size();
  const std::size_t m = t.size();
  if (m == 0 && n > 0) return out;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    std::vector<std::string> table;
    for (auto d : digits) table.push_back(t.elements()[d]);
    out.push_back({s, t, std::move(table)});
    std::size_t k = n;
    while (k > 0 && ++digits[k - 1] == m) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::vector<ControlledMap> all_controlled_maps(const ControlledSetPtr& x, const ControlledSetPtr& y) {
  std::vector<ControlledMap> out;
  for (auto& f : all_set_maps(x->carrier(), y->carrier())) {
    ControlledMap g(x, y, std::move(f.assignment));
    if (validate_map(g).ok()) out.push_back(std::move(g));
  }
  return out;
}

AdjunctionReport adjunction_check(const Carrier& s, const ControlledSetPtr& x) {
  AdjunctionReport r;
  const auto source = min_ctl(s);
  std::set<std::vector<std::string>> tables;
  for (auto& f : all_set_maps(s, forget(*x))) {
    ++r.set_maps;
    ControlledMap g(source, x, f.assignment);
    if (validate_map(g).ok()) {
      ++r.controlled_maps;
      tables.insert(std::get<std::vector<std::string>>(g.assignment()));
    } else if (!r.counterexample) {
      r.counterexample = "set map " + g.to_string() + " is not controlled";
    }
  }
  r.bijection = r.controlled_maps == r.set_maps && tables.size() == r.set_maps;
  return r;
}

}  // namespace ctlhom::ctlset
