#include "ctlhom/exhaustion.hpp"

#include "ctlhom/errors.hpp"

#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>

namespace ctlhom::sset {

struct Exhaustion::Cache {
  std::shared_mutex mutex;
  std::vector<std::shared_ptr<const Truncation>> by_depth;
};

namespace {

std::map<std::string, std::size_t> positions(const std::vector<std::string>& ids, const char* what) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (!pos.emplace(ids[k], k).second)
      throw PresentationError(std::string(what) + ": gluing is not injective (id '" + ids[k] + "' repeated)");
  return pos;
}

void check_subcomplex(const FiniteSimplicialSet& x, const std::vector<std::string>& ids, const char* what) {
  std::set<std::string> listed(ids.begin(), ids.end());
  for (const auto& id : ids) {
    const auto ref = x.find(id);
    if (!ref) throw PresentationError(std::string(what) + ": unknown simplex id '" + id + "'");
    for (const CoreRef c : x.face_closure(*ref))
      if (!listed.contains(x.id(c)))
        throw PresentationError(std::string(what) + ": not a subcomplex ('" + x.id(c) + "' is a face of '" + id +
                                "' but is not listed)");
  }
}

// The positional correspondence from[k] -> to[k] must commute with faces.
void check_isomorphism(const FiniteSimplicialSet& from_x, const std::vector<std::string>& from_ids,
                       const FiniteSimplicialSet& to_x, const std::vector<std::string>& to_ids, const char* what) {
  if (from_ids.size() != to_ids.size()) throw PresentationError(std::string(what) + ": id lists differ in length");
  std::map<CoreRef, CoreRef> image;
  for (std::size_t k = 0; k < from_ids.size(); ++k) image.emplace(from_x.at(from_ids[k]), to_x.at(to_ids[k]));
  for (const auto& [src, dst] : image) {
    if (src.dim != dst.dim)
      throw PresentationError(std::string(what) + ": '" + from_x.id(src) + "' and '" + to_x.id(dst) +
                              "' have different dimensions");
    if (src.dim == 0) continue;
    const auto& fs = from_x.faces(src);
    const auto& ft = to_x.faces(dst);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Simplex mapped{fs[i].word, image.at(fs[i].core)};
      if (!(mapped == ft[i]))
        throw PresentationError(std::string(what) + ": face " + std::to_string(i) + " of '" + from_x.id(src) +
                                "' does not match face of '" + to_x.id(dst) + "'");
    }
  }
}

}  // namespace

Exhaustion::Exhaustion(FiniteSimplicialSet base, FiniteSimplicialSet slab, std::vector<std::string> slab_in,
                       std::vector<std::string> slab_out, std::vector<Attachment> attachments)
    : base_(std::move(base)),
      slab_(std::move(slab)),
      slab_in_(std::move(slab_in)),
      slab_out_(std::move(slab_out)),
      attachments_(std::move(attachments)),
      cache_(std::make_shared<Cache>()) {
  if (attachments_.empty()) return;
  positions(slab_in_, "slab incoming boundary");
  positions(slab_out_, "slab outgoing boundary");
  check_subcomplex(slab_, slab_in_, "slab incoming boundary");
  check_subcomplex(slab_, slab_out_, "slab outgoing boundary");
  check_isomorphism(slab_, slab_out_, slab_, slab_in_, "slab gluing");
  const std::set<std::string> in_set(slab_in_.begin(), slab_in_.end());
  for (std::size_t a = 0; a < attachments_.size(); ++a) {
    const auto& att = attachments_[a];
    const std::string what = "attachment " + std::to_string(a);
    positions(att.base_ids, what.c_str());
    positions(att.slab_ids, what.c_str());
    if (std::set<std::string>(att.slab_ids.begin(), att.slab_ids.end()) != in_set)
      throw PresentationError(what + ": slab ids must be exactly the slab incoming boundary");
    check_subcomplex(base_, att.base_ids, what.c_str());
    check_isomorphism(slab_, att.slab_ids, base_, att.base_ids, what.c_str());
  }
}

Exhaustion Exhaustion::constant(FiniteSimplicialSet complex) {
  return Exhaustion(std::move(complex), FiniteSimplicialSet{}, {}, {}, {});
}

int Exhaustion::top_dim() const { return is_finite() ? base_.top_dim() : std::max(base_.top_dim(), slab_.top_dim()); }

const Region& Truncation::region(CoreRef c) const {
  return regions.at(static_cast<std::size_t>(c.dim)).at(static_cast<std::size_t>(c.index));
}

CoreRef Truncation::origin(CoreRef c) const {
  return origins.at(static_cast<std::size_t>(c.dim)).at(static_cast<std::size_t>(c.index));
}

CoreRef Truncation::locate(int attachment, int copy, CoreRef slab_core) const {
  if (attachment < 0 || attachment >= static_cast<int>(copies.size()) || copy < 1 || copy > depth)
    throw DomainError("locate: copy outside the truncation");
  return copies[static_cast<std::size_t>(attachment)][static_cast<std::size_t>(copy - 1)]
               [static_cast<std::size_t>(slab_core.dim)][static_cast<std::size_t>(slab_core.index)];
}

std::shared_ptr<const Truncation> Exhaustion::truncate(int depth) const {
  if (depth < 0) throw DomainError("truncation depth must be non-negative");
  if (is_finite()) depth = 0;
  {
    std::shared_lock lock(cache_->mutex);
    if (static_cast<int>(cache_->by_depth.size()) > depth) return cache_->by_depth[static_cast<std::size_t>(depth)];
  }
  // Build outside the lock; depth d only depends on depth d - 1.
  std::shared_ptr<const Truncation> result;
  for (int d = 0; d <= depth; ++d) {
    {
      std::shared_lock lock(cache_->mutex);
      if (static_cast<int>(cache_->by_depth.size()) > d) {
        result = cache_->by_depth[static_cast<std::size_t>(d)];
        continue;
      }
    }
    auto built = build(d);
    std::unique_lock lock(cache_->mutex);
    if (static_cast<int>(cache_->by_depth.size()) == d) cache_->by_depth.push_back(built);
    result = cache_->by_depth[static_cast<std::size_t>(d)];
  }
  return result;
}

std::shared_ptr<const Truncation> Exhaustion::build(int depth) const {
  auto t = std::make_shared<Truncation>();
  t->depth = depth;
  if (depth == 0) {
    t->complex = base_;
    for (int n = 0; n <= base_.top_dim(); ++n) {
      t->regions.emplace_back(base_.count(n), Region{});
      t->origins.emplace_back();
      for (std::size_t i = 0; i < base_.count(n); ++i) t->origins.back().push_back(CoreRef{n, static_cast<int>(i)});
    }
    t->copies.resize(attachments_.size());
    return t;
  }
  *t = *truncate(depth - 1);
  t->depth = depth;
  std::map<std::string, std::size_t> in_pos;
  for (std::size_t k = 0; k < slab_in_.size(); ++k) in_pos.emplace(slab_in_[k], k);

  for (std::size_t a = 0; a < attachments_.size(); ++a) {
    const auto& att = attachments_[a];
    std::map<std::string, std::size_t> att_pos;
    for (std::size_t k = 0; k < att.slab_ids.size(); ++k) att_pos.emplace(att.slab_ids[k], k);

    std::vector<std::vector<CoreRef>> layer(static_cast<std::size_t>(slab_.top_dim() + 1));
    for (int n = 0; n <= slab_.top_dim(); ++n) {
      auto& lmap = layer[static_cast<std::size_t>(n)];
      for (std::size_t idx = 0; idx < slab_.count(n); ++idx) {
        const CoreRef s{n, static_cast<int>(idx)};
        const std::string& sid = slab_.id(s);
        if (auto it = in_pos.find(sid); it != in_pos.end()) {
          if (depth == 1)
            lmap.push_back(base_.at(att.base_ids[att_pos.at(sid)]));
          else
            lmap.push_back(t->locate(static_cast<int>(a), depth - 1, slab_.at(slab_out_[it->second])));
          continue;
        }
        const std::string name = sid + "#" + std::to_string(a) + "." + std::to_string(depth);
        CoreRef ref;
        if (n == 0) {
          ref = t->complex.add_vertex(name);
        } else {
          std::vector<Simplex> faces;
          for (const auto& f : slab_.faces(s))
            faces.push_back(Simplex{f.word, layer[static_cast<std::size_t>(f.core.dim)][static_cast<std::size_t>(f.core.index)]});
          ref = t->complex.add_simplex(name, std::move(faces));
        }
        while (static_cast<int>(t->regions.size()) <= n) {
          t->regions.emplace_back();
          t->origins.emplace_back();
        }
        t->regions[static_cast<std::size_t>(n)].push_back(Region{static_cast<int>(a), depth});
        t->origins[static_cast<std::size_t>(n)].push_back(s);
        lmap.push_back(ref);
      }
    }
    t->copies[a].push_back(std::move(layer));
  }
  return t;
}

std::vector<std::vector<bool>> Exhaustion::frontier(int depth) const {
  const auto k = truncate(depth);
  std::vector<std::vector<bool>> marks;
  for (int n = 0; n <= k->complex.top_dim(); ++n) marks.emplace_back(k->complex.count(n), false);
  if (is_finite()) return marks;
  const auto next = truncate(depth + 1);
  for (int n = 0; n <= next->complex.top_dim(); ++n)
    for (std::size_t idx = k->complex.count(n); idx < next->complex.count(n); ++idx)
      for (const CoreRef c : next->complex.face_closure(CoreRef{n, static_cast<int>(idx)}))
        if (static_cast<std::size_t>(c.index) < k->complex.count(c.dim))
          marks[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)] = true;
  return marks;
}

LocalFinitenessReport is_locally_finite(const FiniteSimplicialSet& x) {
  LocalFinitenessReport r;
  const auto stars = star_sizes(x);
  for (std::size_t v = 0; v < stars.size(); ++v) {
    r.stars.push_back({x.id(CoreRef{0, static_cast<int>(v)}), stars[v]});
    r.max_star = std::max(r.max_star, stars[v]);
  }
  r.detail = "finite complex";
  return r;
}

LocalFinitenessReport is_locally_finite(const Exhaustion& x) {
  if (x.is_finite()) return is_locally_finite(x.base());
  LocalFinitenessReport r;
  for (int i = 1; i <= 2; ++i) {
    const auto ki = x.truncate(i);
    const auto near = star_sizes(x.truncate(i + 1)->complex);
    const auto far = star_sizes(x.truncate(i + 2)->complex);
    for (std::size_t v = 0; v < ki->complex.count(0); ++v)
      if (near[v] != far[v]) {
        r.locally_finite = false;
        r.witness = ki->complex.id(CoreRef{0, static_cast<int>(v)});
        std::ostringstream os;
        os << "star of " << *r.witness << " grows from " << near[v] << " to " << far[v] << " between depths "
           << i + 1 << " and " << i + 2;
        r.detail = os.str();
        break;
      }
    if (!r.locally_finite) break;
  }
  const auto k2 = x.truncate(2);
  const auto stars = star_sizes(x.truncate(4)->complex);
  for (std::size_t v = 0; v < k2->complex.count(0); ++v) {
    r.stars.push_back({k2->complex.id(CoreRef{0, static_cast<int>(v)}), stars[v]});
    r.max_star = std::max(r.max_star, stars[v]);
  }
  if (r.locally_finite) r.detail = "every vertex star of K_1 and K_2 is stable one step beyond the frontier";
  return r;
}

}  // namespace ctlhom::sset
