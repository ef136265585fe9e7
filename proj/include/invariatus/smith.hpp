#pragma once

// Integer-matrix normal forms, templated on the scalar type. Instantiated with
// `Integer` on hot paths (small, bounded entries) and with `BigInt` for
// general input.

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

#include "invariatus/types.hpp"

namespace invariatus {

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

// a - q * b, trapping overflow for machine integers.
template <typename Scalar>
Scalar sub_mul(const Scalar& a, const Scalar& q, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    Scalar prod{};
    Scalar out{};
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
      throw std::overflow_error("integer overflow in normal form computation");
    }
    return out;
  } else {
    return a - q * b;
  }
}

template <typename Scalar>
Scalar mul(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    Scalar out{};
    if (__builtin_mul_overflow(a, b, &out)) {
      throw std::overflow_error("integer overflow in normal form computation");
    }
    return out;
  } else {
    return a * b;
  }
}

// Quotient rounded to the nearest integer; keeps remainders at most |b|/2.
template <typename Scalar>
Scalar round_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  const Scalar r = a - q * b;
  if (abs_value(Scalar(r + r)) > abs_value(b)) q += ((r < Scalar(0)) == (b < Scalar(0))) ? Scalar(1) : Scalar(-1);
  return q;
}

template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (q * b != a && ((a < Scalar(0)) != (b < Scalar(0)))) q -= Scalar(1);
  return q;
}

}  // namespace detail

/// U * A * V == D with U, V unimodular and D diagonal, d_i | d_{i+1},
/// nonnegative diagonal, zeros last. Inverses of U and V are tracked alongside.
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> d;
  Matrix<Scalar> u;
  Matrix<Scalar> v;
  Matrix<Scalar> u_inv;
  Matrix<Scalar> v_inv;

  /// Number of nonzero diagonal entries.
  Eigen::Index rank() const {
    Eigen::Index r = 0;
    const Eigen::Index n = std::min(d.rows(), d.cols());
    while (r < n && d(r, r) != Scalar(0)) ++r;
    return r;
  }
};

template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  const Index m = a.rows();
  const Index n = a.cols();

  SmithDecomposition<Scalar> out;
  out.d = a;
  out.u = Matrix<Scalar>::Identity(m, m);
  out.u_inv = Matrix<Scalar>::Identity(m, m);
  out.v = Matrix<Scalar>::Identity(n, n);
  out.v_inv = Matrix<Scalar>::Identity(n, n);
  auto& d = out.d;

  // Elementary operations, each mirrored on the transform and its inverse.
  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    d.row(i).swap(d.row(j));
    out.u.row(i).swap(out.u.row(j));
    out.u_inv.col(i).swap(out.u_inv.col(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    d.col(i).swap(d.col(j));
    out.v.col(i).swap(out.v.col(j));
    out.v_inv.row(i).swap(out.v_inv.row(j));
  };
  // row i -= q * row j
  auto row_sub = [&](Index i, Index j, const Scalar& q) {
    for (Index c = 0; c < n; ++c) d(i, c) = detail::sub_mul(d(i, c), q, d(j, c));
    for (Index c = 0; c < m; ++c) out.u(i, c) = detail::sub_mul(out.u(i, c), q, out.u(j, c));
    for (Index r = 0; r < m; ++r) {
      out.u_inv(r, j) = detail::sub_mul(out.u_inv(r, j), Scalar(-q), out.u_inv(r, i));
    }
  };
  // col i -= q * col j
  auto col_sub = [&](Index i, Index j, const Scalar& q) {
    for (Index r = 0; r < m; ++r) d(r, i) = detail::sub_mul(d(r, i), q, d(r, j));
    for (Index r = 0; r < n; ++r) out.v(r, i) = detail::sub_mul(out.v(r, i), q, out.v(r, j));
    for (Index c = 0; c < n; ++c) {
      out.v_inv(j, c) = detail::sub_mul(out.v_inv(j, c), Scalar(-q), out.v_inv(i, c));
    }
  };
  auto negate_row = [&](Index i) {
    d.row(i) = -d.row(i);
    out.u.row(i) = -out.u.row(i);
    out.u_inv.col(i) = -out.u_inv.col(i);
  };

  const Index diag = std::min(m, n);
  for (Index t = 0; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    Index pr = -1;
    Index pc = -1;
    for (Index i = t; i < m; ++i) {
      for (Index j = t; j < n; ++j) {
        if (d(i, j) == Scalar(0)) continue;
        if (pr < 0 || detail::abs_value(d(i, j)) < detail::abs_value(d(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (d(i, t) == Scalar(0)) continue;
        row_sub(i, t, detail::round_div(d(i, t), d(t, t)));
        if (d(i, t) != Scalar(0)) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (d(t, j) == Scalar(0)) continue;
        col_sub(j, t, detail::round_div(d(t, j), d(t, t)));
        if (d(t, j) != Scalar(0)) clean = false;
      }
      if (!clean) {
        // A remainder survived; it is smaller than the pivot, so swap it in.
        Index br = t;
        Index bc = t;
        for (Index i = t + 1; i < m; ++i) {
          if (d(i, t) != Scalar(0) &&
              detail::abs_value(d(i, t)) < detail::abs_value(d(br, bc))) {
            br = i;
            bc = t;
          }
        }
        for (Index j = t + 1; j < n; ++j) {
          if (d(t, j) != Scalar(0) &&
              detail::abs_value(d(t, j)) < detail::abs_value(d(br, bc))) {
            br = t;
            bc = j;
          }
        }
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Pivot row and column are clear; enforce divisibility on the rest.
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i) {
        for (Index j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      row_sub(t, bad, Scalar(-1));
    }
    if (d(t, t) < Scalar(0)) negate_row(t);
  }
  return out;
}

/// Row-style Hermite normal form: the nonzero rows of an echelon basis of
/// the row space, pivots positive, entries above each pivot in [0, pivot).
template <typename Derived>
Matrix<typename Derived::Scalar> hermite_normal_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  Matrix<Scalar> h = a;
  const Index m = h.rows();
  const Index n = h.cols();
  Index row = 0;
  for (Index c = 0; c < n && row < m; ++c) {
    for (;;) {
      Index best = -1;
      for (Index i = row; i < m; ++i) {
        if (h(i, c) == Scalar(0)) continue;
        if (best < 0 || detail::abs_value(h(i, c)) < detail::abs_value(h(best, c))) best = i;
      }
      if (best < 0) break;
      if (best != row) h.row(best).swap(h.row(row));
      bool clean = true;
      for (Index i = row + 1; i < m; ++i) {
        if (h(i, c) == Scalar(0)) continue;
        const Scalar q = h(i, c) / h(row, c);
        for (Index j = c; j < n; ++j) h(i, j) = detail::sub_mul(h(i, j), q, h(row, j));
        if (h(i, c) != Scalar(0)) clean = false;
      }
      if (clean) break;
    }
    if (h(row, c) == Scalar(0)) continue;
    if (h(row, c) < Scalar(0)) h.row(row) = -h.row(row);
    for (Index i = 0; i < row; ++i) {
      const Scalar q = detail::floor_div(h(i, c), h(row, c));
      if (q == Scalar(0)) continue;
      for (Index j = c; j < n; ++j) h(i, j) = detail::sub_mul(h(i, j), q, h(row, j));
    }
    ++row;
  }
  return h.topRows(row);
}

/// Determinant by fraction-free elimination (Bareiss); exact for integers.
template <typename Derived>
typename Derived::Scalar integer_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  Matrix<Scalar> w = a;
  const Index n = w.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (w(k, k) == Scalar(0)) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (w(i, k) != Scalar(0)) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      w.row(k).swap(w.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        w(i, j) = detail::sub_mul(detail::mul(w(i, j), w(k, k)), w(i, k), w(k, j)) / prev;
      }
    }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

}  // namespace invariatus
