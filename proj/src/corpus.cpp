#include "ctlhom/corpus.hpp"

#include "ctlhom/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

namespace ctlhom::corpus {

using json = nlohmann::json;
using sset::CoreRef;
using sset::Simplex;
using sset::SimplicialMap;
using sset::TargetRef;

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// All (k+1)-element subsets of {0..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) cur[static_cast<std::size_t>(i)] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<std::string> names(const std::vector<int>& v) {
  std::vector<std::string> out;
  for (int i : v) out.push_back(std::to_string(i));
  return out;
}

// Faces of the boundary of the simplex on {0..n}: dimensions up to n - 1, or
// the whole simplex when `closed`.
FiniteSimplicialSet simplex_skeleton(int n, bool closed) {
  FiniteSimplicialSet x;
  const int top = closed ? n : n - 1;
  for (int k = 0; k <= top; ++k)
    for (const auto& s : subsets(n, k)) add_ordered(x, names(s));
  return x;
}

void add_ring(FiniteSimplicialSet& x, const std::string& prefix) {
  for (int k = 0; k < 4; ++k) x.add_vertex(prefix + std::to_string(k));
  for (int k = 0; k < 3; ++k) add_ordered(x, {prefix + std::to_string(k), prefix + std::to_string(k + 1)});
  add_ordered(x, {prefix + "0", prefix + "3"});
}

std::vector<std::string> ring_ids(const std::string& p) {
  return {p + "0", p + "1", p + "2", p + "3", p + "0-" + p + "1", p + "1-" + p + "2", p + "2-" + p + "3", p + "0-" + p + "3"};
}

// Annulus between the ring a0..a3 (inner) and b0..b3 (outer), vertex order
// a0 < b0 < a1 < b1 < ..., each quad split along a_k b_{k+1}.
FiniteSimplicialSet annulus() {
  FiniteSimplicialSet x;
  auto rank = [](const std::string& v) { return 2 * (v[1] - '0') + (v[0] == 'b' ? 1 : 0); };
  for (int k = 0; k < 4; ++k) {
    x.add_vertex("a" + std::to_string(k));
    x.add_vertex("b" + std::to_string(k));
  }
  for (int k = 0; k < 4; ++k) {
    const std::string ak = "a" + std::to_string(k), bk = "b" + std::to_string(k);
    const std::string an = "a" + std::to_string((k + 1) % 4), bn = "b" + std::to_string((k + 1) % 4);
    for (std::vector<std::string> t : {std::vector<std::string>{ak, bk, bn}, std::vector<std::string>{ak, an, bn}}) {
      std::sort(t.begin(), t.end(), [&](const auto& u, const auto& v) { return rank(u) < rank(v); });
      add_ordered(x, t);
    }
  }
  return x;
}

std::shared_ptr<const Exhaustion> edge_slab_exhaustion(int attachments, bool loops) {
  FiniteSimplicialSet base;
  base.add_vertex("v0");
  FiniteSimplicialSet slab;
  slab.add_vertex("in");
  slab.add_vertex("out");
  slab.add_simplex("e", std::vector<std::string>{"out", "in"});
  if (loops) slab.add_simplex("l", std::vector<std::string>{"out", "out"});
  std::vector<sset::Attachment> atts(static_cast<std::size_t>(attachments), sset::Attachment{{"v0"}, {"in"}});
  return std::make_shared<const Exhaustion>(std::move(base), std::move(slab), std::vector<std::string>{"in"},
                                            std::vector<std::string>{"out"}, std::move(atts));
}

std::shared_ptr<const Exhaustion> constant(FiniteSimplicialSet x) {
  return std::make_shared<const Exhaustion>(Exhaustion::constant(std::move(x)));
}

}  // namespace

std::string add_ordered(FiniteSimplicialSet& x, const std::vector<std::string>& vertices) {
  if (vertices.empty()) throw DomainError("add_ordered: no vertices");
  const std::string id = join(vertices, "-");
  if (x.find(id)) return id;
  if (vertices.size() == 1) {
    x.add_vertex(id);
    return id;
  }
  std::vector<std::string> faces;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::vector<std::string> f = vertices;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    faces.push_back(add_ordered(x, f));
  }
  x.add_simplex(id, faces);
  return id;
}

SpaceDescriptor SpaceDescriptor::parse(const std::string& text) {
  static const std::regex pattern(R"(^([a-z0-9]+)(?:\((\d{1,4})\))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw DescriptorError("malformed space descriptor '" + text + "'");
  SpaceDescriptor d{m[1].str(), std::nullopt};
  if (m[2].matched) d.parameter = std::stoi(m[2].str());
  const bool parametric = d.name == "delta" || d.name == "sphere";
  const bool known = parametric || d.name == "point" || d.name == "circle" || d.name == "torus" || d.name == "rp2" ||
                     d.name == "ray" || d.name == "line" || d.name == "plane" || d.name == "cylinder";
  if (!known) throw DescriptorError("unknown space '" + d.name + "'");
  if (parametric && !d.parameter) throw DescriptorError("'" + d.name + "' needs a dimension, e.g. " + d.name + "(2)");
  if (!parametric && d.parameter) throw DescriptorError("'" + d.name + "' takes no parameter");
  return d;
}

std::string SpaceDescriptor::to_string() const {
  return parameter ? name + "(" + std::to_string(*parameter) + ")" : name;
}

const std::vector<DescriptorInfo>& descriptors() {
  static const std::vector<DescriptorInfo> list{
      {"point", "a single vertex", true},
      {"delta(n)", "the standard n-simplex", true},
      {"sphere(n)", "boundary of the (n+1)-simplex", true},
      {"circle", "one vertex and one edge", true},
      {"torus", "7-vertex torus", true},
      {"rp2", "6-vertex projective plane", true},
      {"ray", "half-line: a vertex with edges attached at one end", false},
      {"line", "real line: a vertex with edges attached at both ends", false},
      {"plane", "plane: a disk grown by annuli", false},
      {"cylinder", "circle times line: a square ring grown by annuli at both ends", false},
  };
  return list;
}

Space build(const SpaceDescriptor& d, int max_dim) {
  if (d.parameter && (*d.parameter < 0 || *d.parameter > max_dim))
    throw DescriptorError(d.to_string() + ": dimension must lie in [0, " + std::to_string(max_dim) + "]");
  Space s{d.to_string(), nullptr};
  if (d.name == "point") s.exhaustion = constant(point());
  else if (d.name == "delta") s.exhaustion = constant(delta(*d.parameter));
  else if (d.name == "sphere") s.exhaustion = constant(sphere(*d.parameter));
  else if (d.name == "circle") s.exhaustion = constant(circle());
  else if (d.name == "torus") s.exhaustion = constant(torus());
  else if (d.name == "rp2") s.exhaustion = constant(rp2());
  else if (d.name == "ray") s.exhaustion = ray();
  else if (d.name == "line") s.exhaustion = line();
  else if (d.name == "plane") s.exhaustion = plane();
  else if (d.name == "cylinder") s.exhaustion = cylinder();
  else throw DescriptorError("unknown space '" + d.name + "'");
  return s;
}

Space build(const std::string& descriptor, int max_dim) { return build(SpaceDescriptor::parse(descriptor), max_dim); }

FiniteSimplicialSet point() {
  FiniteSimplicialSet x;
  x.add_vertex("v");
  return x;
}

FiniteSimplicialSet delta(int n) {
  if (n < 0) throw DescriptorError("delta: negative dimension");
  return simplex_skeleton(n, true);
}

FiniteSimplicialSet sphere(int n) {
  if (n < 0) throw DescriptorError("sphere: negative dimension");
  return simplex_skeleton(n + 1, false);
}

FiniteSimplicialSet circle() {
  FiniteSimplicialSet x;
  x.add_vertex("v");
  x.add_simplex("e", std::vector<std::string>{"v", "v"});
  return x;
}

FiniteSimplicialSet circle4() {
  FiniteSimplicialSet x;
  add_ring(x, "r");
  return x;
}

FiniteSimplicialSet torus() {
  FiniteSimplicialSet x;
  for (int i = 0; i < 7; ++i) x.add_vertex(std::to_string(i));
  for (int i = 0; i < 7; ++i)
    for (const auto& t : {std::vector<int>{i, i + 1, i + 3}, std::vector<int>{i, i + 2, i + 3}}) {
      std::vector<int> v;
      for (int k : t) v.push_back(k % 7);
      std::sort(v.begin(), v.end());
      add_ordered(x, names(v));
    }
  return x;
}

FiniteSimplicialSet rp2() {
  FiniteSimplicialSet x;
  for (int i = 1; i <= 6; ++i) x.add_vertex(std::to_string(i));
  for (const char* t : {"124", "126", "135", "136", "145", "234", "235", "256", "346", "456"}) {
    std::vector<std::string> v;
    for (const char* c = t; *c; ++c) v.emplace_back(1, *c);
    add_ordered(x, v);
  }
  return x;
}

std::shared_ptr<const Exhaustion> ray() { return edge_slab_exhaustion(1, false); }
std::shared_ptr<const Exhaustion> line() { return edge_slab_exhaustion(2, false); }
std::shared_ptr<const Exhaustion> loop_ray() { return edge_slab_exhaustion(1, true); }

std::shared_ptr<const Exhaustion> broom() {
  FiniteSimplicialSet base;
  base.add_vertex("v0");
  FiniteSimplicialSet slab;
  slab.add_vertex("p");
  slab.add_vertex("q");
  slab.add_simplex("e", std::vector<std::string>{"q", "p"});
  return std::make_shared<const Exhaustion>(std::move(base), std::move(slab), std::vector<std::string>{"p"},
                                            std::vector<std::string>{"p"},
                                            std::vector<sset::Attachment>{{{"v0"}, {"p"}}});
}

std::shared_ptr<const Exhaustion> plane() {
  FiniteSimplicialSet base;
  base.add_vertex("c");
  add_ring(base, "r");
  for (int k = 0; k < 3; ++k) add_ordered(base, {"c", "r" + std::to_string(k), "r" + std::to_string(k + 1)});
  add_ordered(base, {"c", "r0", "r3"});
  return std::make_shared<const Exhaustion>(std::move(base), annulus(), ring_ids("a"), ring_ids("b"),
                                            std::vector<sset::Attachment>{{ring_ids("r"), ring_ids("a")}});
}

std::shared_ptr<const Exhaustion> cylinder() {
  FiniteSimplicialSet base;
  add_ring(base, "r");
  return std::make_shared<const Exhaustion>(
      std::move(base), annulus(), ring_ids("a"), ring_ids("b"),
      std::vector<sset::Attachment>{{ring_ids("r"), ring_ids("a")}, {ring_ids("r"), ring_ids("a")}});
}

SimplicialMap vertex_map(const std::shared_ptr<const Exhaustion>& source,
                         const std::shared_ptr<const Exhaustion>& target,
                         const std::map<std::string, std::string>& base_vertices,
                         const std::map<std::string, std::string>& slab_vertices) {
  if (!target->is_finite()) throw DomainError("vertex_map: the target must be finite");
  const FiniteSimplicialSet& t = target->base();
  std::map<std::vector<int>, std::string> by_vertices;
  for (int n = 0; n <= t.top_dim(); ++n)
    for (std::size_t i = 0; i < t.count(n); ++i) {
      const CoreRef c{n, static_cast<int>(i)};
      by_vertices.emplace(t.vertices(c), t.id(c));
    }
  auto assign = [&](const FiniteSimplicialSet& x, const std::map<std::string, std::string>& vmap) {
    std::map<std::string, TargetRef> out;
    for (int n = 0; n <= x.top_dim(); ++n)
      for (std::size_t i = 0; i < x.count(n); ++i) {
        const CoreRef c{n, static_cast<int>(i)};
        std::vector<int> image;
        for (int v : x.vertices(c)) {
          auto it = vmap.find(x.id(CoreRef{0, v}));
          if (it == vmap.end()) throw DomainError("vertex_map: no image for vertex '" + x.id(CoreRef{0, v}) + "'");
          image.push_back(t.at(it->second).index);
        }
        if (!std::is_sorted(image.begin(), image.end()))
          throw DomainError("vertex_map: '" + x.id(c) + "' does not map onto an ordered simplex");
        std::vector<int> distinct = image;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> values;
        for (int v : image)
          values.push_back(static_cast<int>(std::find(distinct.begin(), distinct.end(), v) - distinct.begin()));
        auto core = by_vertices.find(distinct);
        if (core == by_vertices.end())
          throw DomainError("vertex_map: the image of '" + x.id(c) + "' spans no simplex of the target");
        const auto word =
            sset::word_from_epi(delta::MonotoneMap(n, static_cast<int>(distinct.size()) - 1, std::move(values)));
        out.emplace(x.id(c), TargetRef{word, core->second, -1, 0});
      }
    return out;
  };
  std::vector<std::map<std::string, TargetRef>> slabs;
  if (!source->is_finite())
    slabs.assign(source->attachments().size(), assign(source->slab(), slab_vertices));
  return SimplicialMap(source, target, assign(source->base(), base_vertices), std::move(slabs));
}

SimplicialMap fold_line_to_ray() {
  const auto src = line();
  const auto tgt = ray();
  std::map<std::string, TargetRef> slab;
  for (const auto& id : {"in", "out", "e"}) slab.emplace(id, TargetRef{{}, id, 0, 0});
  return SimplicialMap(src, tgt, {{"v0", TargetRef{{}, "v0", -1, 0}}}, {slab, slab});
}

SimplicialMap project_cylinder_to_circle() {
  std::map<std::string, std::string> base;
  std::map<std::string, std::string> slab;
  for (int k = 0; k < 4; ++k) {
    const std::string r = "r" + std::to_string(k);
    base.emplace(r, r);
    slab.emplace("a" + std::to_string(k), r);
    slab.emplace("b" + std::to_string(k), r);
  }
  return vertex_map(cylinder(), constant(circle4()), base, slab);
}

std::vector<MapFixture> map_fixtures() {
  std::vector<MapFixture> out;
  for (const char* name : {"point", "circle", "torus", "rp2", "ray", "line", "plane", "cylinder"}) {
    const Space s = build(std::string(name));
    out.push_back({"identity on " + s.name, SimplicialMap::identity(s.exhaustion), true});
  }
  out.push_back({"fold line -> ray", fold_line_to_ray(), true});
  out.push_back({"projection cylinder -> circle", project_cylinder_to_circle(), false});
  return out;
}

std::vector<Space> corpus_spaces() {
  std::vector<Space> out;
  for (const char* name : {"point", "circle", "torus", "rp2", "ray", "line", "plane", "cylinder"})
    out.push_back(build(std::string(name)));
  for (int n = 0; n <= kDefaultMaxDim; ++n) out.push_back(build(SpaceDescriptor{"delta", n}));
  for (int n = 0; n <= kDefaultMaxDim - 1; ++n) out.push_back(build(SpaceDescriptor{"sphere", n}));
  return out;
}

bool same_presentation(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b) {
  if (a.counts() != b.counts()) return false;
  for (int n = 0; n <= a.top_dim(); ++n)
    for (std::size_t i = 0; i < a.count(n); ++i) {
      const CoreRef c{n, static_cast<int>(i)};
      if (a.id(c) != b.id(c)) return false;
      if (n == 0) continue;
      const auto& fa = a.faces(c);
      const auto& fb = b.faces(c);
      for (std::size_t k = 0; k < fa.size(); ++k)
        if (fa[k].word != fb[k].word || a.id(fa[k].core) != b.id(fb[k].core)) return false;
    }
  return true;
}

bool same_presentation(const Exhaustion& a, const Exhaustion& b) {
  if (!same_presentation(a.base(), b.base()) || a.is_finite() != b.is_finite()) return false;
  if (a.is_finite()) return true;
  if (!same_presentation(a.slab(), b.slab()) || a.slab_in() != b.slab_in() || a.slab_out() != b.slab_out())
    return false;
  if (a.attachments().size() != b.attachments().size()) return false;
  for (std::size_t k = 0; k < a.attachments().size(); ++k)
    if (a.attachments()[k].base_ids != b.attachments()[k].base_ids ||
        a.attachments()[k].slab_ids != b.attachments()[k].slab_ids)
      return false;
  return true;
}

namespace {

json complex_json(const FiniteSimplicialSet& x) {
  json layers = json::array();
  for (int n = 0; n <= x.top_dim(); ++n) {
    json layer = json::array();
    for (std::size_t i = 0; i < x.count(n); ++i) {
      const CoreRef c{n, static_cast<int>(i)};
      json entry{{"id", x.id(c)}};
      if (n > 0) {
        json faces = json::array();
        for (const auto& f : x.faces(c)) faces.push_back(json::array({f.word, x.id(f.core)}));
        entry["faces"] = std::move(faces);
      }
      layer.push_back(std::move(entry));
    }
    layers.push_back(std::move(layer));
  }
  return json{{"simplices", std::move(layers)}};
}

[[noreturn]] void field_error(const std::string& path, const std::string& message) {
  throw ParseError("field " + (path.empty() ? std::string("/") : path) + ": " + message);
}

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) field_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(path + "/" + key, "missing");
  return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of ids");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) field_error(path + "/" + std::to_string(i), "expected a string id");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

FiniteSimplicialSet read_complex(const json& j, const std::string& path) {
  const std::string spath = path + "/simplices";
  const json& layers = member(j, path, "simplices");
  if (!layers.is_array()) field_error(spath, "expected an array of dimensions");
  FiniteSimplicialSet x;
  for (std::size_t n = 0; n < layers.size(); ++n) {
    const std::string lpath = spath + "/" + std::to_string(n);
    if (!layers[n].is_array()) field_error(lpath, "expected an array of simplices");
    for (std::size_t k = 0; k < layers[n].size(); ++k) {
      const std::string epath = lpath + "/" + std::to_string(k);
      const json& entry = layers[n][k];
      const json& id = member(entry, epath, "id");
      if (!id.is_string()) field_error(epath + "/id", "expected a string");
      try {
        if (n == 0) {
          if (entry.contains("faces") && !entry["faces"].empty()) field_error(epath + "/faces", "vertices have no faces");
          x.add_vertex(id.get<std::string>());
          continue;
        }
        const json& faces = member(entry, epath, "faces");
        const std::string fpath = epath + "/faces";
        if (!faces.is_array() || faces.size() != n + 1)
          field_error(fpath, "expected " + std::to_string(n + 1) + " faces");
        std::vector<Simplex> fs;
        for (std::size_t i = 0; i < faces.size(); ++i) {
          const std::string ipath = fpath + "/" + std::to_string(i);
          const json& f = faces[i];
          if (!f.is_array() || f.size() != 2 || !f[0].is_array() || !f[1].is_string())
            field_error(ipath, "expected [word, core_id]");
          std::vector<int> word;
          for (const auto& w : f[0]) {
            if (!w.is_number_integer()) field_error(ipath + "/0", "degeneracy indices must be integers");
            word.push_back(w.get<int>());
          }
          const auto core = x.find(f[1].get<std::string>());
          if (!core) field_error(ipath + "/1", "unknown simplex '" + f[1].get<std::string>() + "'");
          fs.push_back(Simplex{std::move(word), *core});
        }
        x.add_simplex(id.get<std::string>(), std::move(fs));
      } catch (const DomainError& e) {
        field_error(epath, e.what());
      }
    }
  }
  if (const auto bad = x.identity_violations(); !bad.empty())
    throw ValidationError("simplicial identity violated in " + (path.empty() ? std::string("/") : path) + ": " + bad.front());
  return x;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string to_json(const Space& space) {
  const Exhaustion& x = *space.exhaustion;
  json j;
  if (x.is_finite()) {
    j = complex_json(x.base());
    j["kind"] = "finite";
  } else {
    j["kind"] = "exhaustion";
    j["base"] = complex_json(x.base());
    j["slab"] = complex_json(x.slab());
    j["slab_gluing"] = json{{"in_ids", x.slab_in()}, {"out_ids", x.slab_out()}};
    json atts = json::array();
    for (const auto& a : x.attachments())
      atts.push_back(json{{"base_subcomplex_ids", a.base_ids}, {"slab_subcomplex_ids", a.slab_ids}});
    j["attachments"] = std::move(atts);
  }
  return j.dump(2) + "\n";
}

Space from_json(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  const json& kind = member(j, "", "kind");
  if (kind == "finite") return Space{name, constant(read_complex(j, ""))};
  if (kind != "exhaustion") field_error("/kind", "expected \"finite\" or \"exhaustion\"");
  FiniteSimplicialSet base = read_complex(member(j, "", "base"), "/base");
  FiniteSimplicialSet slab = read_complex(member(j, "", "slab"), "/slab");
  const json& gluing = member(j, "", "slab_gluing");
  auto in_ids = string_list(member(gluing, "/slab_gluing", "in_ids"), "/slab_gluing/in_ids");
  auto out_ids = string_list(member(gluing, "/slab_gluing", "out_ids"), "/slab_gluing/out_ids");
  const json& atts = member(j, "", "attachments");
  if (!atts.is_array() || atts.empty()) field_error("/attachments", "expected a non-empty array");
  std::vector<sset::Attachment> attachments;
  for (std::size_t k = 0; k < atts.size(); ++k) {
    const std::string apath = "/attachments/" + std::to_string(k);
    attachments.push_back({string_list(member(atts[k], apath, "base_subcomplex_ids"), apath + "/base_subcomplex_ids"),
                           string_list(member(atts[k], apath, "slab_subcomplex_ids"), apath + "/slab_subcomplex_ids")});
  }
  return Space{name, std::make_shared<const Exhaustion>(std::move(base), std::move(slab), std::move(in_ids),
                                                        std::move(out_ids), std::move(attachments))};
}

Space load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return from_json(buf.str(), path.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save(const Space& space, const std::filesystem::path& path) {
  const std::string text = to_json(space);
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw ParseError("cannot write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ParseError("cannot replace '" + path.string() + "': " + ec.message());
  }
}

Space resolve(const std::string& descriptor_or_path, int max_dim) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(descriptor_or_path, ec)) return load(descriptor_or_path);
  return build(descriptor_or_path, max_dim);
}

}  // namespace ctlhom::corpus
