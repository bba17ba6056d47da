#include "ctlhom/smith.hpp"

#include <optional>

namespace ctlhom {
namespace {

// Elimination state. When `track` is false only the working matrix is updated.
struct Reducer {
  IntegerMatrix a;
  bool track;
  IntegerMatrix left, left_inv, right, right_inv;

  Reducer(const IntegerMatrix& m, bool track_certificates) : a(m), track(track_certificates) {
    if (track) {
      left = left_inv = IntegerMatrix::identity(m.rows());
      right = right_inv = IntegerMatrix::identity(m.cols());
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    if (track) {
      left.swap_rows(i, j);
      left_inv.swap_cols(i, j);
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_cols(i, j);
    if (track) {
      right.swap_cols(i, j);
      right_inv.swap_rows(i, j);
    }
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    a.add_row_multiple(dst, src, q);
    if (track) {
      left.add_row_multiple(dst, src, q);
      left_inv.add_col_multiple(src, dst, -q);
    }
  }
  // col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
    a.add_col_multiple(dst, src, q);
    if (track) {
      right.add_col_multiple(dst, src, q);
      right_inv.add_row_multiple(src, dst, -q);
    }
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    if (track) {
      left.negate_row(r);
      left_inv.negate_col(r);
    }
  }

  // Smallest nonzero |entry| in the lower-right block starting at (t, t).
  std::optional<std::pair<std::size_t, std::size_t>> min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const BigInt& v = a(i, j);
        if (v == 0) continue;
        BigInt av = abs(v);
        if (!best || av < best_abs) {
          best = {i, j};
          best_abs = std::move(av);
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  std::vector<BigInt> run() {
    std::vector<BigInt> factors;
    const std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      const auto first = min_pivot(t);
      if (!first) break;
      auto pivot = *first;
      for (;;) {
        swap_rows(t, pivot.first);
        swap_cols(t, pivot.second);
        const BigInt p = a(t, t);
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
          if (a(i, t) == 0) continue;
          add_row(i, t, -(a(i, t) / p));
          if (a(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(t, j) == 0) continue;
          add_col(j, t, -(a(t, j) / p));
          if (a(t, j) != 0) clean = false;
        }
        if (!clean) {
          pivot = *min_pivot(t);  // a nonzero remainder is left in row or column t
          continue;
        }
        // Pivot isolated; it must also divide the remaining block.
        std::optional<std::size_t> offending;
        for (std::size_t i = t + 1; i < a.rows() && !offending; ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (a(i, j) % p != 0) {
              offending = i;
              break;
            }
        if (!offending) break;
        add_row(t, *offending, 1);
        pivot = std::make_pair(t, t);
      }
      if (a(t, t) < 0) negate_row(t);
      factors.push_back(a(t, t));
    }
    return factors;
  }
};

}  // namespace

IntegerMatrix SmithForm::diagonal() const {
  IntegerMatrix d(left.rows(), right.rows());
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) d(i, i) = invariant_factors[i];
  return d;
}

IntegerMatrix SmithForm::reconstruct() const { return left_inverse * diagonal() * right_inverse; }

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Reducer r(m, true);
  SmithForm out;
  out.invariant_factors = r.run();
  out.left = std::move(r.left);
  out.left_inverse = std::move(r.left_inv);
  out.right = std::move(r.right);
  out.right_inverse = std::move(r.right_inv);
  return out;
}

std::vector<BigInt> invariant_factors(const IntegerMatrix& m) {
  Reducer r(m, false);
  return r.run();
}

}  // namespace ctlhom
