#include "ctlhom/simplicial_map.hpp"

#include "ctlhom/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace ctlhom::sset {

const Simplex& FiniteMap::on_core(CoreRef c) const {
  return assignment.at(static_cast<std::size_t>(c.dim)).at(static_cast<std::size_t>(c.index));
}

Simplex FiniteMap::operator()(const Simplex& x) const {
  const Simplex& image = on_core(x.core);
  if (x.word.empty()) return image;
  return target->complex.apply(epi_from_word(x.word, x.dim()), image);
}

std::vector<std::string> FiniteMap::naturality_violations() const {
  std::vector<std::string> bad;
  const auto& src = source->complex;
  const auto& tgt = target->complex;
  for (int n = 1; n <= src.top_dim(); ++n)
    for (std::size_t idx = 0; idx < src.count(n); ++idx) {
      const CoreRef y{n, static_cast<int>(idx)};
      const Simplex fy = on_core(y);
      for (int i = 0; i <= n; ++i) {
        const Simplex lhs = (*this)(src.faces(y)[static_cast<std::size_t>(i)]);
        const Simplex rhs = tgt.face(fy, i);
        if (!(lhs == rhs))
          bad.push_back("f(d" + std::to_string(i) + " " + src.id(y) + ") = " + tgt.describe(lhs) + " but d" +
                        std::to_string(i) + " f(" + src.id(y) + ") = " + tgt.describe(rhs));
      }
    }
  return bad;
}

SimplicialMap::SimplicialMap(std::shared_ptr<const Exhaustion> source, std::shared_ptr<const Exhaustion> target,
                             std::map<std::string, TargetRef> base_assignment,
                             std::vector<std::map<std::string, TargetRef>> slab_assignment)
    : source_(std::move(source)),
      target_(std::move(target)),
      base_assignment_(std::move(base_assignment)),
      slab_assignment_(std::move(slab_assignment)) {
  if (slab_assignment_.size() != source_->attachments().size())
    throw PresentationError("simplicial map: one slab assignment per source attachment is required");
  auto check_ref = [&](const TargetRef& r, bool from_base) {
    if (r.attachment < 0) {
      if (!target_->base().find(r.core_id))
        throw PresentationError("simplicial map: unknown target base id '" + r.core_id + "'");
      return;
    }
    if (r.attachment >= static_cast<int>(target_->attachments().size()))
      throw PresentationError("simplicial map: target attachment out of range");
    if (!target_->slab().find(r.core_id))
      throw PresentationError("simplicial map: unknown target slab id '" + r.core_id + "'");
    if (from_base && r.offset < 1) throw PresentationError("simplicial map: base simplices need a positive copy offset");
    reach_ = std::max(reach_, r.offset);
    spread_ = std::max(spread_, std::abs(r.offset));
  };
  for (int n = 0; n <= source_->base().top_dim(); ++n)
    for (std::size_t i = 0; i < source_->base().count(n); ++i) {
      const auto& id = source_->base().id(CoreRef{n, static_cast<int>(i)});
      auto it = base_assignment_.find(id);
      if (it == base_assignment_.end()) throw PresentationError("simplicial map: no image for base simplex '" + id + "'");
      check_ref(it->second, true);
    }
  for (auto& assignment : slab_assignment_)
    for (int n = 0; n <= source_->slab().top_dim(); ++n)
      for (std::size_t i = 0; i < source_->slab().count(n); ++i) {
        const auto& id = source_->slab().id(CoreRef{n, static_cast<int>(i)});
        auto it = assignment.find(id);
        if (it == assignment.end()) throw PresentationError("simplicial map: no image for slab simplex '" + id + "'");
        check_ref(it->second, false);
      }
}

SimplicialMap SimplicialMap::identity(const std::shared_ptr<const Exhaustion>& x) {
  std::map<std::string, TargetRef> base;
  for (int n = 0; n <= x->base().top_dim(); ++n)
    for (std::size_t i = 0; i < x->base().count(n); ++i) {
      const auto& id = x->base().id(CoreRef{n, static_cast<int>(i)});
      base.emplace(id, TargetRef{{}, id, -1, 0});
    }
  std::vector<std::map<std::string, TargetRef>> slabs(x->attachments().size());
  for (std::size_t a = 0; a < slabs.size(); ++a)
    for (int n = 0; n <= x->slab().top_dim(); ++n)
      for (std::size_t i = 0; i < x->slab().count(n); ++i) {
        const auto& id = x->slab().id(CoreRef{n, static_cast<int>(i)});
        slabs[a].emplace(id, TargetRef{{}, id, static_cast<int>(a), 0});
      }
  return SimplicialMap(x, x, std::move(base), std::move(slabs));
}

FiniteMap SimplicialMap::materialize(int depth) const {
  FiniteMap fm;
  fm.source = source_->truncate(depth);
  fm.target = target_->truncate(target_->is_finite() ? 0 : fm.source->depth + reach_);
  const auto& src = fm.source->complex;

  auto resolve = [&](const TargetRef& r, int copy, int dim) {
    CoreRef c;
    if (r.attachment < 0) {
      c = target_->base().at(r.core_id);
    } else {
      const int t = copy + r.offset;
      if (t < 1 || t > fm.target->depth) throw PresentationError("simplicial map: image copy outside the target");
      c = fm.target->locate(r.attachment, t, target_->slab().at(r.core_id));
    }
    Simplex s{r.word, c};
    if (s.dim() != dim) throw PresentationError("simplicial map: image of a " + std::to_string(dim) +
                                                "-simplex has dimension " + std::to_string(s.dim()));
    check_word(s.word, s.dim());
    return s;
  };

  for (int n = 0; n <= src.top_dim(); ++n) {
    fm.assignment.emplace_back();
    for (std::size_t idx = 0; idx < src.count(n); ++idx) {
      const CoreRef c{n, static_cast<int>(idx)};
      const Region& reg = fm.source->region(c);
      const CoreRef org = fm.source->origin(c);
      if (reg.attachment < 0)
        fm.assignment.back().push_back(resolve(base_assignment_.at(source_->base().id(org)), 0, n));
      else
        fm.assignment.back().push_back(resolve(
            slab_assignment_[static_cast<std::size_t>(reg.attachment)].at(source_->slab().id(org)), reg.copy, n));
    }
  }
  // Glued simplices already received an image from an earlier region.
  for (std::size_t a = 0; a < slab_assignment_.size(); ++a)
    for (int t = 1; t <= fm.source->depth; ++t)
      for (const auto& in_id : source_->slab_in()) {
        const CoreRef s = source_->slab().at(in_id);
        const CoreRef glued = fm.source->locate(static_cast<int>(a), t, s);
        if (!(resolve(slab_assignment_[a].at(in_id), t, s.dim) == fm.on_core(glued)))
          throw PresentationError("simplicial map: inconsistent images for glued simplex '" + src.id(glued) + "'");
      }
  if (auto bad = fm.naturality_violations(); !bad.empty())
    throw PresentationError("simplicial map is not natural: " + bad.front());
  return fm;
}

namespace {

// Number of source cores over each probe core of the target.
std::vector<std::vector<std::size_t>> fiber_counts(const FiniteMap& fm, const FiniteSimplicialSet& probe,
                                                   const std::function<bool(CoreRef)>& in_family) {
  std::vector<std::vector<std::size_t>> counts;
  for (int n = 0; n <= probe.top_dim(); ++n) counts.emplace_back(probe.count(n), 0);
  const auto& src = fm.source->complex;
  for (int n = 0; n <= src.top_dim(); ++n)
    for (std::size_t idx = 0; idx < src.count(n); ++idx) {
      const CoreRef y{n, static_cast<int>(idx)};
      if (!in_family(y)) continue;
      const CoreRef c = fm.on_core(y).core;
      if (static_cast<std::size_t>(c.index) < probe.count(c.dim))
        ++counts[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)];
    }
  return counts;
}

// Members meeting the star of each probe vertex (members attributed to cores).
std::vector<std::size_t> star_counts(const FiniteSimplicialSet& k, const std::set<Simplex>& members,
                                     std::size_t probe_vertices) {
  std::vector<std::size_t> counts(probe_vertices, 0);
  for (const auto& m : members) {
    auto v = k.vertices(m.core);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (int w : v)
      if (static_cast<std::size_t>(w) < probe_vertices) ++counts[static_cast<std::size_t>(w)];
  }
  return counts;
}

constexpr int kSamples = 3;

template <typename Counts>
std::optional<std::size_t> first_growth(const std::vector<Counts>& samples, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t s = 1; s < samples.size(); ++s)
      if (samples[s][i] != samples[0][i]) return i;
  return std::nullopt;
}

std::vector<std::size_t> flatten(const std::vector<std::vector<std::size_t>>& v) {
  std::vector<std::size_t> out;
  for (const auto& level : v) out.insert(out.end(), level.begin(), level.end());
  return out;
}

CoreRef unflatten(const FiniteSimplicialSet& x, std::size_t i) {
  for (int n = 0; n <= x.top_dim(); ++n) {
    if (i < x.count(n)) return CoreRef{n, static_cast<int>(i)};
    i -= x.count(n);
  }
  throw DomainError("unflatten: index out of range");
}

std::string sizes_text(const std::vector<std::vector<std::size_t>>& samples, std::size_t i, int first_depth) {
  std::ostringstream os;
  for (std::size_t s = 0; s < samples.size(); ++s)
    os << (s ? ", " : "") << samples[s][i] << " at depth " << first_depth + static_cast<int>(s);
  return os.str();
}

int probe_depth(const Exhaustion& x) { return x.is_finite() ? 0 : 1; }

}  // namespace

ProperReport is_proper_map(const SimplicialMap& f) {
  ProperReport r;
  const auto probe = f.target().truncate(probe_depth(f.target()));
  const int first = probe->depth + f.spread() + 2;
  std::vector<std::vector<std::size_t>> samples;
  const int n_samples = f.source().is_finite() ? 1 : kSamples;
  for (int s = 0; s < n_samples; ++s)
    samples.push_back(flatten(fiber_counts(f.materialize(first + s), probe->complex, [](CoreRef) { return true; })));
  for (auto c : samples.back()) r.max_fiber = std::max(r.max_fiber, c);
  if (auto i = first_growth(samples, samples.front().size())) {
    r.proper = false;
    r.witness = probe->complex.id(unflatten(probe->complex, *i));
    r.detail = "fiber over " + *r.witness + " keeps growing: " + sizes_text(samples, *i, first);
  } else {
    r.detail = "fibers over the target's first layer are stable; largest fiber " + std::to_string(r.max_fiber);
  }
  return r;
}

SimplexFamily SimplexFamily::finite(std::vector<std::pair<std::vector<int>, std::string>> members) {
  SimplexFamily f;
  f.kind = Kind::Finite;
  f.members = std::move(members);
  return f;
}

SimplexFamily SimplexFamily::all() {
  SimplexFamily f;
  f.kind = Kind::All;
  return f;
}

SimplexFamily SimplexFamily::periodic(std::vector<std::string> base_ids, std::vector<std::string> slab_ids) {
  SimplexFamily f;
  f.kind = Kind::Periodic;
  f.base_ids = std::move(base_ids);
  f.slab_ids = std::move(slab_ids);
  return f;
}

SimplexFamily SimplexFamily::degeneracies_of(std::string vertex) {
  SimplexFamily f;
  f.kind = Kind::DegeneraciesOf;
  f.vertex = std::move(vertex);
  return f;
}

FamilyReport family_is_controlled(const Exhaustion& x, const SimplexFamily& family) {
  FamilyReport r;
  switch (family.kind) {
    case SimplexFamily::Kind::Finite:
      r.detail = "finite family";
      return r;
    case SimplexFamily::Kind::DegeneraciesOf:
      r.controlled = false;
      r.witness = family.vertex;
      r.detail = "infinitely many members s_k ... s_0 " + family.vertex + " lie in the star of " + family.vertex;
      return r;
    case SimplexFamily::Kind::All:
    case SimplexFamily::Kind::Periodic:
      break;
  }
  if (x.is_finite()) {
    r.detail = "every family of a finite complex is finite";
    return r;
  }
  const std::set<std::string> base_ids(family.base_ids.begin(), family.base_ids.end());
  const std::set<std::string> slab_ids(family.slab_ids.begin(), family.slab_ids.end());
  const auto probe = x.truncate(2);
  const int first = 3;
  std::vector<std::vector<std::size_t>> samples;
  for (int s = 0; s < kSamples; ++s) {
    const auto k = x.truncate(first + s);
    std::set<Simplex> members;
    for (int n = 0; n <= k->complex.top_dim(); ++n)
      for (std::size_t idx = 0; idx < k->complex.count(n); ++idx) {
        const CoreRef c{n, static_cast<int>(idx)};
        bool take = family.kind == SimplexFamily::Kind::All;
        if (!take) {
          const Region& reg = k->region(c);
          const std::string& origin_id =
              reg.attachment < 0 ? x.base().id(k->origin(c)) : x.slab().id(k->origin(c));
          take = reg.attachment < 0 ? base_ids.contains(origin_id) : slab_ids.contains(origin_id);
        }
        if (take) members.insert(Simplex::of(c));
      }
    samples.push_back(star_counts(k->complex, members, probe->complex.count(0)));
  }
  if (auto i = first_growth(samples, samples.front().size())) {
    r.controlled = false;
    r.witness = probe->complex.id(CoreRef{0, static_cast<int>(*i)});
    r.detail = "members meeting the star of " + *r.witness + ": " + sizes_text(samples, *i, first);
  } else {
    r.detail = "every probed vertex star meets a stable, finite number of members";
  }
  return r;
}

Theorem41Report theorem41_check(const SimplicialMap& f) {
  Theorem41Report rep;
  rep.proper_report = is_proper_map(f);
  rep.proper = rep.proper_report.proper;

  const auto probe = f.target().truncate(probe_depth(f.target()));
  const std::size_t probe_vertices = probe->complex.count(0);
  const int first = probe->depth + f.spread() + 2;
  const int n_samples = f.source().is_finite() ? 1 : kSamples;

  struct Family {
    std::string name;
    std::function<bool(const Truncation&, CoreRef)> contains;
  };
  std::vector<Family> families;
  families.push_back({"base", [](const Truncation& t, CoreRef c) { return t.region(c).attachment < 0; }});
  for (std::size_t a = 0; a < f.source().attachments().size(); ++a)
    families.push_back({"slab copies along attachment " + std::to_string(a),
                        [a](const Truncation& t, CoreRef c) { return t.region(c).attachment == static_cast<int>(a); }});
  families.push_back({"all simplices", [](const Truncation&, CoreRef) { return true; }});

  std::vector<FiniteMap> maps;
  for (int s = 0; s < n_samples; ++s) maps.push_back(f.materialize(first + s));

  rep.controlled = true;
  for (const auto& fam : families) {
    FamilyCheck check;
    check.family = fam.name;
    std::vector<std::vector<std::size_t>> image_samples;
    std::vector<std::vector<std::size_t>> fiber_samples;
    for (const auto& fm : maps) {
      const auto& src = *fm.source;
      auto in_family = [&](CoreRef c) { return fam.contains(src, c); };
      std::set<Simplex> image;
      for (int n = 0; n <= src.complex.top_dim(); ++n)
        for (std::size_t idx = 0; idx < src.complex.count(n); ++idx) {
          const CoreRef y{n, static_cast<int>(idx)};
          if (in_family(y)) image.insert(fm.on_core(y));
        }
      image_samples.push_back(star_counts(fm.target->complex, image, probe_vertices));
      fiber_samples.push_back(flatten(fiber_counts(fm, probe->complex, in_family)));
    }
    if (auto i = first_growth(image_samples, probe_vertices)) {
      check.image_controlled = false;
      check.witness = "image members meeting the star of " + probe->complex.id(CoreRef{0, static_cast<int>(*i)}) +
                      ": " + sizes_text(image_samples, *i, first);
    }
    if (auto i = first_growth(fiber_samples, fiber_samples.front().size())) {
      check.fibers_finite = false;
      check.witness = "fiber over " + probe->complex.id(unflatten(probe->complex, *i)) +
                      " restricted to the family: " + sizes_text(fiber_samples, *i, first);
    }
    rep.controlled = rep.controlled && check.image_controlled && check.fibers_finite;
    rep.families.push_back(std::move(check));
  }
  rep.agree = rep.proper == rep.controlled;
  return rep;
}

}  // namespace ctlhom::sset
