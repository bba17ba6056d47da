#pragma once

#include "ctlhom/integer_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ctlhom {

/// Coefficient ring for (co)homology: Z, Z/m (m >= 2) or Q.
struct Coefficients {
  enum class Kind { Integers, IntegersMod, Rationals };

  Kind kind = Kind::Integers;
  std::uint64_t modulus = 0;

  static Coefficients integers() { return {}; }
  static Coefficients integers_mod(std::uint64_t m);
  static Coefficients rationals() { return {Kind::Rationals, 0}; }
  /// Accepts "z", "q", "z/M" (case-insensitive).
  static Coefficients parse(const std::string& text);

  std::string to_string() const;
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// A finitely generated module over the coefficient ring, in invariant factor
/// form. Over Z/m, `free_rank` counts the summands Z/m and `torsion` holds the
/// proper divisors of m that occur; over Q only `free_rank` is used.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string(const Coefficients& coeffs = Coefficients::integers()) const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Integral homology at one position of a complex of free modules, together
/// with chain-level generators.
///
/// `orders[g]` is the order of generator g (0 for infinite order). Torsion
/// generators come first. `coordinates` maps a cycle, written in the chain
/// basis, to its coordinates in the generator basis (reduce torsion rows with
/// `coordinates_of`).
struct HomologyPresentation {
  HomologyGroup group;
  std::vector<BigInt> orders;
  IntegerMatrix generators;
  IntegerMatrix coordinates;
  /// Invariant factors (units included) of the map leaving this position.
  std::vector<BigInt> outgoing_factors;

  std::size_t generator_count() const { return orders.size(); }
  std::vector<BigInt> coordinates_of(const std::vector<BigInt>& cycle) const;
};

/// Homology ker(outgoing) / im(incoming) at a position of dimension `dim`.
/// `incoming` is dim x (previous), `outgoing` is (next) x dim.
HomologyPresentation present_homology(const IntegerMatrix& incoming, const IntegerMatrix& outgoing,
                                      std::size_t dim);

/// True iff the chain map (target_dim x source_dim) induces an isomorphism
/// from `source` homology onto `target` homology.
bool induces_isomorphism(const HomologyPresentation& source, const HomologyPresentation& target,
                         const IntegerMatrix& chain_map);

/// Matrix of the induced map in generator coordinates (rows: target
/// generators, torsion rows reduced modulo their order).
IntegerMatrix induced_map(const HomologyPresentation& source, const HomologyPresentation& target,
                          const IntegerMatrix& chain_map);

/// Universal coefficients: the group at a position after tensoring the free
/// complex with the coefficient ring. `neighbour_torsion` is the integral
/// torsion at the position the differential points to.
HomologyGroup change_coefficients(const HomologyGroup& integral,
                                  const std::vector<BigInt>& neighbour_torsion,
                                  const Coefficients& coeffs);

/// Invariant factor form of a direct sum of cyclic groups Z/order_i
/// (orders >= 1; units are dropped).
std::vector<BigInt> invariant_form(const std::vector<BigInt>& orders);

}  // namespace ctlhom
