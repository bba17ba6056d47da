#include "ctlhom/homology_group.hpp"

#include "ctlhom/errors.hpp"
#include "ctlhom/smith.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace ctlhom {

Coefficients Coefficients::integers_mod(std::uint64_t m) {
  if (m < 2) throw DomainError("coefficients Z/m need m >= 2");
  return {Kind::IntegersMod, m};
}

Coefficients Coefficients::parse(const std::string& text) {
  std::string t;
  for (char ch : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (t == "z") return integers();
  if (t == "q") return rationals();
  if (t.size() > 2 && t.starts_with("z/")) {
    std::uint64_t m = 0;
    const char* first = t.data() + 2;
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, m);
    if (ec == std::errc{} && ptr == last) return integers_mod(m);
  }
  throw DomainError("unknown coefficients '" + text + "' (expected z, q or z/M)");
}

std::string Coefficients::to_string() const {
  switch (kind) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::IntegersMod:
      return "Z/" + std::to_string(modulus);
  }
  return "?";
}

std::string HomologyGroup::to_string(const Coefficients& coeffs) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    const std::string ring = coeffs.to_string();
    const bool wrap = coeffs.kind == Coefficients::Kind::IntegersMod && free_rank > 1;
    os << (wrap ? "(" + ring + ")" : ring);
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

std::vector<BigInt> HomologyPresentation::coordinates_of(const std::vector<BigInt>& cycle) const {
  std::vector<BigInt> c = coordinates * cycle;
  for (std::size_t g = 0; g < c.size(); ++g)
    if (orders[g] != 0) c[g] = floor_mod(c[g], orders[g]);
  return c;
}

HomologyPresentation present_homology(const IntegerMatrix& incoming, const IntegerMatrix& outgoing,
                                      std::size_t dim) {
  if (incoming.rows() != dim || outgoing.cols() != dim)
    throw DomainError("present_homology: matrix shapes do not match the position dimension");

  const SmithForm out_form = smith_normal_form(outgoing);
  const std::size_t r = out_form.rank();
  const std::size_t z = dim - r;
  // Cycles: the last z columns of the right transform span ker(outgoing).
  const IntegerMatrix cycle_basis = out_form.right.col_block(r, z);
  const IntegerMatrix cycle_coords = out_form.right_inverse.row_block(r, z);

  const IntegerMatrix relations = cycle_coords * incoming;  // z x previous
  const SmithForm rel_form = smith_normal_form(relations);
  const std::size_t s = rel_form.rank();

  const IntegerMatrix all_generators = cycle_basis * rel_form.left_inverse;
  const IntegerMatrix all_coordinates = rel_form.left * cycle_coords;

  std::vector<std::size_t> keep;
  HomologyPresentation p;
  for (std::size_t j = 0; j < s; ++j)
    if (rel_form.invariant_factors[j] > 1) {
      keep.push_back(j);
      p.orders.push_back(rel_form.invariant_factors[j]);
      p.group.torsion.push_back(rel_form.invariant_factors[j]);
    }
  for (std::size_t j = s; j < z; ++j) {
    keep.push_back(j);
    p.orders.emplace_back(0);
  }
  p.group.free_rank = z - s;
  p.generators = IntegerMatrix(dim, keep.size());
  p.coordinates = IntegerMatrix(keep.size(), dim);
  for (std::size_t g = 0; g < keep.size(); ++g)
    for (std::size_t i = 0; i < dim; ++i) {
      p.generators(i, g) = all_generators(i, keep[g]);
      p.coordinates(g, i) = all_coordinates(keep[g], i);
    }
  p.outgoing_factors = out_form.invariant_factors;
  return p;
}

IntegerMatrix induced_map(const HomologyPresentation& source, const HomologyPresentation& target,
                          const IntegerMatrix& chain_map) {
  IntegerMatrix m(target.generator_count(), source.generator_count());
  for (std::size_t g = 0; g < source.generator_count(); ++g) {
    const auto image = chain_map * source.generators.column(g);
    const auto coords = target.coordinates_of(image);
    for (std::size_t h = 0; h < coords.size(); ++h) m(h, g) = coords[h];
  }
  return m;
}

bool induces_isomorphism(const HomologyPresentation& source, const HomologyPresentation& target,
                         const IntegerMatrix& chain_map) {
  if (!(source.group == target.group)) return false;
  const std::size_t n = target.generator_count();
  if (n == 0) return true;
  IntegerMatrix relations(n, target.group.torsion.size());
  for (std::size_t k = 0; k < target.group.torsion.size(); ++k) relations(k, k) = target.orders[k];
  // Between isomorphic finitely generated groups a surjection is bijective.
  const auto factors = invariant_factors(hconcat(induced_map(source, target, chain_map), relations));
  if (factors.size() != n) return false;
  return std::all_of(factors.begin(), factors.end(), [](const BigInt& f) { return f == 1; });
}

std::vector<BigInt> invariant_form(const std::vector<BigInt>& orders) {
  IntegerMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
  std::vector<BigInt> out;
  for (auto& f : invariant_factors(d))
    if (f > 1) out.push_back(f);
  return out;
}

HomologyGroup change_coefficients(const HomologyGroup& integral,
                                  const std::vector<BigInt>& neighbour_torsion,
                                  const Coefficients& coeffs) {
  switch (coeffs.kind) {
    case Coefficients::Kind::Integers:
      return integral;
    case Coefficients::Kind::Rationals:
      return HomologyGroup{integral.free_rank, {}};
    case Coefficients::Kind::IntegersMod:
      break;
  }
  const BigInt m = coeffs.modulus;
  std::vector<BigInt> orders(integral.free_rank, m);
  for (const auto& t : integral.torsion) orders.push_back(gcd(t, m));
  for (const auto& t : neighbour_torsion) orders.push_back(gcd(t, m));
  HomologyGroup g;
  for (auto& f : invariant_form(orders)) {
    if (f == m)
      ++g.free_rank;
    else
      g.torsion.push_back(std::move(f));
  }
  return g;
}

}  // namespace ctlhom
