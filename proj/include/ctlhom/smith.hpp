#pragma once

#include "ctlhom/integer_matrix.hpp"

#include <vector>

namespace ctlhom {

/// Smith normal form `left * M * right = D` with unimodular certificates.
///
/// `invariant_factors` lists the nonzero diagonal entries of D in order; each
/// is positive and divides the next. Unit factors are kept, so the list length
/// is the rank of M.
struct SmithForm {
  std::vector<BigInt> invariant_factors;
  IntegerMatrix left;
  IntegerMatrix left_inverse;
  IntegerMatrix right;
  IntegerMatrix right_inverse;

  std::size_t rank() const { return invariant_factors.size(); }
  /// D with the shape of the input matrix.
  IntegerMatrix diagonal() const;
  /// left_inverse * D * right_inverse, which equals the input matrix.
  IntegerMatrix reconstruct() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Same diagonal as smith_normal_form without tracking certificates.
std::vector<BigInt> invariant_factors(const IntegerMatrix& m);

}  // namespace ctlhom
