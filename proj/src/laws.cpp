#include "ctlhom/laws.hpp"

#include "ctlhom/corpus.hpp"
#include "ctlhom/ctlset.hpp"
#include "ctlhom/delta.hpp"
#include "ctlhom/errors.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace ctlhom::laws {

using namespace ctlhom::ctlset;

bool LawReport::ok() const {
  return std::all_of(sections.begin(), sections.end(), [](const LawSection& s) { return s.counterexamples.empty(); });
}

namespace {

constexpr std::size_t kMaxCounterexamples = 20;

void fail(LawSection& s, std::string what) {
  if (s.counterexamples.size() < kMaxCounterexamples) s.counterexamples.push_back(std::move(what));
}

template <typename F>
LawSection timed(std::string key, std::string title, F&& body) {
  LawSection s{std::move(key), std::move(title), 0, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  body(s);
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

Carrier carrier_of_size(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
  return Carrier::finite(std::move(ids));
}

std::vector<std::string> subset_ids(const Carrier& c, std::uint64_t mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (mask >> i & 1U) out.push_back(c.elements()[i]);
  return out;
}

// Min, Max and every generated presentation (all generator families when the
// power set has at most 16 members, families of at most two otherwise).
std::vector<ControlledSetPtr> presentations(int n) {
  const Carrier c = carrier_of_size(n);
  std::vector<ControlledSetPtr> out{min_ctl(c), max_ctl(c)};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  if (subsets <= 16) {
    for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
      std::vector<std::vector<std::string>> gens;
      for (std::uint64_t s = 0; s < subsets; ++s)
        if (family >> s & 1U) gens.push_back(subset_ids(c, s));
      out.push_back(std::make_shared<const ControlledSet>(c, ControlStructure::generated(std::move(gens))));
    }
    return out;
  }
  out.push_back(std::make_shared<const ControlledSet>(c, ControlStructure::generated({})));
  for (std::uint64_t s = 0; s < subsets; ++s)
    for (std::uint64_t t = s; t < subsets; ++t)
      out.push_back(std::make_shared<const ControlledSet>(
          c, ControlStructure::generated({subset_ids(c, s), subset_ids(c, t)})));
  return out;
}

// Min, Max, Gen(no generators), Gen(singletons), Gen(everything).
std::vector<ControlledSetPtr> representatives(int max_carrier) {
  std::vector<ControlledSetPtr> out;
  for (int n = 0; n <= max_carrier; ++n) {
    const Carrier c = carrier_of_size(n);
    out.push_back(min_ctl(c));
    out.push_back(max_ctl(c));
    out.push_back(std::make_shared<const ControlledSet>(c, ControlStructure::generated({})));
    std::vector<std::vector<std::string>> singletons;
    for (const auto& e : c.elements()) singletons.push_back({e});
    out.push_back(std::make_shared<const ControlledSet>(c, ControlStructure::generated(singletons)));
    out.push_back(std::make_shared<const ControlledSet>(c, ControlStructure::generated({c.elements()})));
  }
  return out;
}

}  // namespace

LawSection control_structure_axioms(int max_carrier) {
  return timed("a", "control-structure axioms", [&](LawSection& s) {
    for (int n = 0; n <= max_carrier; ++n)
      for (const auto& x : presentations(n)) {
        ++s.checked;
        const auto r = validate_structure(*x);
        for (const auto& v : r.violations) fail(s, x->to_string() + ": " + v.condition + " fails at " + v.witness);
        if (r.controlled_subsets != (std::size_t{1} << n))
          fail(s, x->to_string() + ": the structure is not the full power set of a finite carrier");
      }
    // Closed-form cases on the naturals.
    const auto min_n = min_ctl(Carrier::naturals());
    const auto max_n = max_ctl(Carrier::naturals());
    s.checked += 2;
    if (!validate_structure(*min_n).ok() || !validate_structure(*max_n).ok()) fail(s, "Min(N) or Max(N) rejected");
    const std::vector<std::pair<bool, bool>> expectations{
        {is_controlled(*min_n, SubsetDescriptor::finite_list({"0", "5"})), true},
        {is_controlled(*min_n, SubsetDescriptor::all()), false},
        {is_controlled(*min_n, SubsetDescriptor::cofinal_tail(3)), false},
        {is_controlled(*max_n, SubsetDescriptor::all()), true},
        {is_controlled(*max_n, SubsetDescriptor::cofinal_tail(5)), true},
    };
    for (std::size_t k = 0; k < expectations.size(); ++k) {
      ++s.checked;
      if (expectations[k].first != expectations[k].second)
        fail(s, "membership query " + std::to_string(k) + " on the naturals answered wrongly");
    }
  });
}

LawSection category_laws(int max_carrier) {
  return timed("b", "category laws and closure of composition", [&](LawSection& s) {
    const auto objects = representatives(max_carrier);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ControlledMap>> hom;
    for (std::size_t a = 0; a < objects.size(); ++a)
      for (std::size_t b = 0; b < objects.size(); ++b) hom.emplace(std::pair{a, b}, all_controlled_maps(objects[a], objects[b]));

    for (std::size_t a = 0; a < objects.size(); ++a)
      for (std::size_t b = 0; b < objects.size(); ++b)
        for (const auto& f : hom.at({a, b})) {
          s.checked += 2;
          if (!(compose(identity(objects[b]), f) == f)) fail(s, "left unit fails for " + f.to_string());
          if (!(compose(f, identity(objects[a])) == f)) fail(s, "right unit fails for " + f.to_string());
        }

    for (std::size_t a = 0; a < objects.size(); ++a)
      for (std::size_t b = 0; b < objects.size(); ++b)
        for (std::size_t c = 0; c < objects.size(); ++c)
          for (const auto& f : hom.at({a, b}))
            for (const auto& g : hom.at({b, c})) {
              ++s.checked;
              const auto gf = compose(g, f);
              if (!validate_map(gf).ok()) fail(s, "composite " + gf.to_string() + " is not controlled");
            }

    // Associativity over one object per carrier size.
    std::vector<std::size_t> one_per_size;
    for (std::size_t k = 0; k < objects.size(); k += 5) one_per_size.push_back(k + 3);
    for (auto a : one_per_size)
      for (auto b : one_per_size)
        for (auto c : one_per_size)
          for (auto d : one_per_size)
            for (const auto& f : hom.at({a, b}))
              for (const auto& g : hom.at({b, c}))
                for (const auto& h : hom.at({c, d})) {
                  ++s.checked;
                  if (!(compose(h, compose(g, f)) == compose(compose(h, g), f)))
                    fail(s, "associativity fails for " + f.to_string() + ", " + g.to_string() + ", " + h.to_string());
                }

    // Full faithfulness of MinCtl and MaxCtl on finite carriers.
    for (int n = 0; n <= max_carrier; ++n)
      for (int m = 0; m <= max_carrier; ++m) {
        const Carrier cs = carrier_of_size(n);
        const Carrier ct = carrier_of_size(m);
        const auto set_maps = all_set_maps(cs, ct).size();
        s.checked += 2;
        if (all_controlled_maps(min_ctl(cs), min_ctl(ct)).size() != set_maps)
          fail(s, "MinCtl is not full on carriers of sizes " + std::to_string(n) + ", " + std::to_string(m));
        if (all_controlled_maps(max_ctl(cs), max_ctl(ct)).size() != set_maps)
          fail(s, "MaxCtl is not full on carriers of sizes " + std::to_string(n) + ", " + std::to_string(m));
      }

    // The catalogue on the naturals.
    const Carrier nat = Carrier::naturals();
    const auto min_n = min_ctl(nat);
    const auto max_n = max_ctl(nat);
    const std::vector<CatalogueMap> catalogue{
        CatalogueMap::identity(),
        CatalogueMap::shift_by(1),
        CatalogueMap::shift_by(2),
        CatalogueMap::shift_by(3),
        CatalogueMap::patch_shift(1, {{0, 7}, {2, 0}}),
        CatalogueMap::patch_shift(0, {{1, 1}, {4, 2}}),
        CatalogueMap::constant_to("0"),
        CatalogueMap::constant_to("5"),
    };
    for (const auto& a : catalogue)
      for (const auto& b : catalogue)
        for (const auto& c : catalogue) {
          ++s.checked;
          const ControlledMap f(min_n, min_n, a), g(min_n, min_n, b), h(min_n, min_n, c);
          if (!(compose(h, compose(g, f)) == compose(compose(h, g), f)))
            fail(s, "catalogue associativity fails for " + a.to_string() + ", " + b.to_string() + ", " + c.to_string());
          for (Natural k = 0; k < 12; ++k) {
            const std::string e = std::to_string(k);
            if (compose(g, f)(e) != g(f(e))) fail(s, "catalogue composite disagrees pointwise at " + e);
          }
        }
    s.checked += 4;
    if (!(compose(ControlledMap(max_n, max_n, CatalogueMap::shift_by(2)),
                  ControlledMap(max_n, max_n, CatalogueMap::shift_by(3))) ==
          ControlledMap(max_n, max_n, CatalogueMap::shift_by(5))))
      fail(s, "shift by 2 after shift by 3 is not shift by 5");
    if (validate_map(max_ctl(SetMap{nat, nat, CatalogueMap::constant_to("0")})).ok())
      fail(s, "MaxCtl accepts the non-proper constant map");
    if (!validate_map(max_ctl(SetMap{nat, nat, CatalogueMap::shift_by(1)})).ok())
      fail(s, "MaxCtl rejects the proper shift");
    if (!validate_map(min_ctl(SetMap{nat, nat, CatalogueMap::constant_to("0")})).ok())
      fail(s, "MinCtl rejects a constant map");
  });
}

LawSection adjunction_laws(int max_carrier) {
  return timed("c", "MinCtl -| Forget bijection", [&](LawSection& s) {
    std::vector<ControlledSetPtr> targets;
    for (int n = 0; n <= max_carrier; ++n)
      for (auto& x : presentations(n)) targets.push_back(std::move(x));
    for (int k = 0; k <= max_carrier; ++k) {
      std::vector<std::string> ids;
      for (int i = 0; i < k; ++i) ids.push_back("s" + std::to_string(i));
      const Carrier src = Carrier::finite(ids);
      for (const auto& x : targets) {
        ++s.checked;
        const auto r = adjunction_check(src, x);
        std::size_t expected = 1;
        for (int i = 0; i < k; ++i) expected *= x->carrier().size();
        if (!r.bijection || r.set_maps != expected)
          fail(s, "S = " + src.to_string() + ", X = " + x->to_string() + ": " + r.counterexample.value_or("count mismatch"));
      }
    }
  });
}

LawSection cosimplicial_laws(int max_dim) {
  return timed("d", "cosimplicial identities", [&](LawSection& s) {
    std::size_t checked = 0;
    for (const auto& v : delta::check_cosimplicial_identities(max_dim, &checked))
      fail(s, v.family + " fails at n=" + std::to_string(v.n) + ", i=" + std::to_string(v.i) +
                  ", j=" + std::to_string(v.j));
    s.checked = checked;
  });
}

LawSection factorization_laws(int max_arity) {
  return timed("e", "epi-mono factorization uniqueness", [&](LawSection& s) {
    for (int n = 0; n <= max_arity; ++n)
      for (int m = 0; m <= max_arity; ++m)
        for (const auto& f : delta::all_maps(n, m)) {
          ++s.checked;
          const auto [epi, mono] = delta::epi_mono_factor(f);
          if (!epi.is_surjective() || !mono.is_injective() || !(delta::compose(mono, epi) == f))
            fail(s, "factorization of " + f.to_string() + " is not epi-mono");
          std::size_t found = 0;
          for (int k = 0; k <= std::min(n, m); ++k)
            for (const auto& e : delta::all_maps(n, k)) {
              if (!e.is_surjective()) continue;
              for (const auto& u : delta::all_maps(k, m))
                if (u.is_injective() && delta::compose(u, e) == f) ++found;
            }
          if (found != 1) fail(s, f.to_string() + " has " + std::to_string(found) + " epi-mono factorizations");
          // The canonical words rebuild the map.
          if (!(delta::from_words(n, delta::codegeneracy_indices(epi), delta::coface_indices(mono)) == f))
            fail(s, "canonical words of " + f.to_string() + " do not rebuild it");
        }
  });
}

LawSection adjacency_laws(int max_dim) {
  return timed("f", "adjacency 0-simplex reduction", [&](LawSection& s) {
    std::vector<std::pair<std::string, sset::FiniteSimplicialSet>> complexes;
    for (const auto& space : corpus::corpus_spaces())
      complexes.emplace_back(space.name, space.is_finite() ? space.complex() : space.exhaustion->truncate(2)->complex);
    for (const auto& [name, x] : complexes) {
      // Cores plus their first degeneracies.
      std::vector<sset::Simplex> simplices;
      for (int n = 0; n <= std::min(x.top_dim(), max_dim); ++n)
        for (std::size_t i = 0; i < x.count(n); ++i) {
          const auto c = sset::Simplex::of(sset::CoreRef{n, static_cast<int>(i)});
          simplices.push_back(c);
          if (n + 1 <= max_dim && n <= 1) simplices.push_back(x.degeneracy(c, 0));
        }
      for (std::size_t a = 0; a < simplices.size(); ++a)
        for (std::size_t b = a; b < simplices.size(); ++b) {
          ++s.checked;
          const bool reduced = sset::adjacent(x, simplices[a], simplices[b]);
          if (reduced != sset::adjacent(x, simplices[b], simplices[a]))
            fail(s, name + ": adjacency is not symmetric");
          if (reduced != sset::adjacent_by_arrows(x, simplices[a], simplices[b], max_dim))
            fail(s, name + ": " + x.describe(simplices[a]) + " and " + x.describe(simplices[b]) +
                        " disagree between the reduction and the arrow definition");
        }
    }
  });
}

LawReport run_laws(int max_carrier) {
  if (max_carrier < 0) throw DomainError("max carrier must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  LawReport r;
  r.sections.push_back(control_structure_axioms(max_carrier));
  r.sections.push_back(category_laws(max_carrier));
  r.sections.push_back(adjunction_laws(max_carrier));
  r.sections.push_back(cosimplicial_laws());
  r.sections.push_back(factorization_laws());
  r.sections.push_back(adjacency_laws());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace ctlhom::laws
