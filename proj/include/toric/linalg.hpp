#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace toric {

using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

inline std::size_t nrows(const IntMat& m) { return m.size(); }
inline std::size_t ncols(const IntMat& m) { return m.empty() ? 0 : m[0].size(); }

inline IntMat identity_mat(std::size_t n) {
  IntMat I(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

inline IntMat transpose(const IntMat& m) {
  IntMat t(ncols(m), IntVec(nrows(m)));
  for (std::size_t i = 0; i < nrows(m); ++i)
    for (std::size_t j = 0; j < ncols(m); ++j) t[j][i] = m[i][j];
  return t;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
  require(ncols(a) == nrows(b), "shape-mismatch", "matrix product");
  IntMat c(nrows(a), IntVec(ncols(b), 0));
  for (std::size_t i = 0; i < nrows(a); ++i)
    for (std::size_t k = 0; k < ncols(a); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < ncols(b); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline IntVec mat_vec(const IntMat& a, const IntVec& x) {
  require(ncols(a) == x.size(), "shape-mismatch", "matrix-vector product");
  IntVec y(nrows(a), 0);
  for (std::size_t i = 0; i < nrows(a); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "shape-mismatch", "dot product");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "shape-mismatch", "vector difference");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "shape-mismatch", "vector sum");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec vec_scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero_vec(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

// Divide by the gcd of the entries; sign normalized so the first nonzero
// entry is positive.  The zero vector is returned unchanged.
inline IntVec primitive_vector(IntVec v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) return v;
  int lead = 0;
  for (const Int& x : v)
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  if (lead < 0) g = -g;
  for (Int& x : v) x /= g;
  return v;
}

// ---------------------------------------------------------------------------
// Hermite normal form (row style).  Returns H = U * M with U unimodular,
// pivots positive, entries above each pivot reduced into [0, pivot),
// zero rows at the bottom.
// ---------------------------------------------------------------------------

struct HnfResult {
  IntMat H;
  IntMat U;
  std::size_t rank = 0;
};

inline HnfResult hnf(IntMat M) {
  const std::size_t m = nrows(M), n = ncols(M);
  IntMat U = identity_mat(m);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    // gcd-eliminate everything below row r in this column
    std::size_t piv = r;
    bool found = false;
    for (std::size_t i = r; i < m; ++i)
      if (M[i][col] != 0) {
        piv = i;
        found = true;
        break;
      }
    if (!found) continue;
    std::swap(M[piv], M[r]);
    std::swap(U[piv], U[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      while (M[i][col] != 0) {
        Int q = floor_div(M[r][col], M[i][col]);
        for (std::size_t j = 0; j < n; ++j) M[r][j] -= q * M[i][j];
        for (std::size_t j = 0; j < m; ++j) U[r][j] -= q * U[i][j];
        std::swap(M[i], M[r]);
        std::swap(U[i], U[r]);
      }
    }
    if (M[r][col] < 0) {
      for (Int& x : M[r]) x = -x;
      for (Int& x : U[r]) x = -x;
    }
    // reduce rows above into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(M[i][col], M[r][col]);
      if (q != 0) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] -= q * M[r][j];
        for (std::size_t j = 0; j < m; ++j) U[i][j] -= q * U[r][j];
      }
    }
    ++r;
  }
  return {std::move(M), std::move(U), r};
}

// Canonical basis of the lattice spanned by the rows: nonzero rows of the HNF.
inline IntMat lattice_hnf(const IntMat& rows) {
  HnfResult h = hnf(rows);
  h.H.resize(h.rank);
  return h.H;
}

inline std::size_t rank_int(const IntMat& M) { return hnf(M).rank; }

// ---------------------------------------------------------------------------
// Smith normal form: U * M * V = diag(d_1,...,d_k) with d_i | d_{i+1},
// U, V unimodular.
// ---------------------------------------------------------------------------

struct SnfResult {
  IntVec d;  // invariant factors, zeros trailing
  IntMat U;  // m x m
  IntMat V;  // n x n
  std::size_t rank = 0;
};

inline SnfResult snf(IntMat M) {
  const std::size_t m = nrows(M), n = ncols(M);
  IntMat U = identity_mat(m), V = identity_mat(n);
  auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < n; ++j) M[dst][j] -= q * M[src][j];
    for (std::size_t j = 0; j < m; ++j) U[dst][j] -= q * U[src][j];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < m; ++i) M[i][dst] -= q * M[i][src];
    for (std::size_t i = 0; i < n; ++i) V[i][dst] -= q * V[i][src];
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(M[a], M[b]);
    std::swap(U[a], U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m; ++i) std::swap(M[i][a], M[i][b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
  };

  std::size_t t = 0;
  const std::size_t k = std::min(m, n);
  while (t < k) {
    // find a nonzero pivot of smallest absolute value in the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (M[i][j] != 0 && (!found || abs(M[i][j]) < abs(M[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < m; ++i)
        if (M[i][t] != 0) {
          Int q = floor_div(M[i][t], M[t][t]);
          row_op(i, t, q);
          if (M[i][t] != 0) {
            swap_rows(i, t);
            dirty = true;
          }
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (M[t][j] != 0) {
          Int q = floor_div(M[t][j], M[t][t]);
          col_op(j, t, q);
          if (M[t][j] != 0) {
            swap_cols(j, t);
            dirty = true;
          }
        }
    }
    // enforce divisibility d_t | trailing entries
    bool redo = false;
    for (std::size_t i = t + 1; i < m && !redo; ++i)
      for (std::size_t j = t + 1; j < n && !redo; ++j)
        if (M[i][j] % M[t][t] != 0) {
          row_op(t, i, Int(-1));  // add row i to row t, creating a smaller remainder
          redo = true;
        }
    if (redo) continue;
    if (M[t][t] < 0) {
      for (std::size_t j = 0; j < n; ++j) M[t][j] = -M[t][j];
      for (std::size_t j = 0; j < m; ++j) U[t][j] = -U[t][j];
    }
    ++t;
  }
  IntVec d(k, 0);
  for (std::size_t i = 0; i < t; ++i) d[i] = M[i][i];
  return {std::move(d), std::move(U), std::move(V), t};
}

// ---------------------------------------------------------------------------
// Rational Gaussian elimination: rank, inverse, solving, nullspace.
// ---------------------------------------------------------------------------

inline RatMat to_rat(const IntMat& m) {
  RatMat r(nrows(m), RatVec(ncols(m)));
  for (std::size_t i = 0; i < nrows(m); ++i)
    for (std::size_t j = 0; j < ncols(m); ++j) r[i][j] = m[i][j];
  return r;
}

// Reduce to row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RatMat& A) {
  const std::size_t m = A.size(), n = m ? A[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t piv = r;
    while (piv < m && A[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(A[piv], A[r]);
    Rat inv = A[r][col];
    for (std::size_t j = col; j < n; ++j) A[r][j] /= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || A[i][col] == 0) continue;
      Rat f = A[i][col];
      for (std::size_t j = col; j < n; ++j) A[i][j] -= f * A[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

inline std::size_t rank_rat(RatMat A) { return rref(A).size(); }

// Solve A x = b over the rationals; nullopt when inconsistent.  When the
// system is underdetermined one solution is returned (free variables zero).
inline std::optional<RatVec> rat_solve(const RatMat& A, const RatVec& b) {
  const std::size_t m = A.size(), n = m ? A[0].size() : 0;
  RatMat aug(m, RatVec(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(A[i].begin(), A[i].end(), aug[i].begin());
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> piv = rref(aug);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  RatVec x(n, Rat(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][n];
  return x;
}

// Basis of { x : A x = 0 } over the rationals.
inline RatMat rat_nullspace(RatMat A) {
  const std::size_t n = A.empty() ? 0 : A[0].size();
  std::vector<std::size_t> piv = rref(A);
  std::vector<bool> is_piv(n, false);
  for (std::size_t c : piv) is_piv[c] = true;
  RatMat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    RatVec v(n, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -A[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline RatMat rat_inverse(const RatMat& A) {
  const std::size_t n = A.size();
  RatMat aug(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(A[i].begin(), A[i].end(), aug[i].begin());
    aug[i][n + i] = 1;
  }
  std::vector<std::size_t> piv = rref(aug);
  require(piv.size() == n && (n == 0 || piv.back() == n - 1), "singular-matrix",
          "matrix not invertible");
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    std::copy(aug[i].begin() + n, aug[i].end(), inv[i].begin());
  return inv;
}

// ---------------------------------------------------------------------------
// Determinant (fraction-free Bareiss elimination).
// ---------------------------------------------------------------------------

inline Int det_int(IntMat M) {
  const std::size_t n = nrows(M);
  require(n == ncols(M), "shape-mismatch", "determinant of non-square matrix");
  if (n == 0) return 1;
  Int prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && M[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(M[k], M[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Integer kernels, integer solving, saturation.
// ---------------------------------------------------------------------------

// Basis of the lattice { x in Z^n : M x = 0 }.
inline IntMat kernel_lattice(const IntMat& M) {
  const std::size_t n = ncols(M);
  SnfResult s = snf(M);
  IntMat basis;
  for (std::size_t j = s.rank; j < n; ++j) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = s.V[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

struct IntegerSolution {
  IntVec particular;
  IntMat kernel;  // lattice basis; the full solution set is particular + Z-combos
};

// All integer solutions of A x = b, or nullopt when none exist.
inline std::optional<IntegerSolution> integer_solve(const IntMat& A, const IntVec& b) {
  const std::size_t n = ncols(A);
  SnfResult s = snf(A);
  IntVec ub = mat_vec(s.U, b);
  IntVec y(n, 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.d[i] != 0) return std::nullopt;
      if (i < n) y[i] = ub[i] / s.d[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntVec x = mat_vec(s.V, y);
  return IntegerSolution{std::move(x), kernel_lattice(A)};
}

// Saturation of the lattice spanned by the rows: (Q-span of rows) intersected
// with Z^n, returned as a canonical (HNF) basis.
inline IntMat saturate_lattice(const IntMat& rows) {
  const std::size_t n = ncols(rows);
  IntMat orth = kernel_lattice(rows);  // { y : rows * y = 0 }
  if (orth.empty()) return lattice_hnf(identity_mat(n));
  return lattice_hnf(kernel_lattice(orth));
}

inline bool lattice_equal(const IntMat& a, const IntMat& b) {
  return lattice_hnf(a) == lattice_hnf(b);
}

inline bool is_saturated(const IntMat& rows) {
  return lattice_equal(rows, saturate_lattice(rows));
}

// ---------------------------------------------------------------------------
// Minors and compound matrices.
// ---------------------------------------------------------------------------

// Visit all k-subsets of {0,...,n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline Int minor_of(const IntMat& M, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  IntMat sub(rows.size(), IntVec(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = M[rows[i]][cols[j]];
  return det_int(sub);
}

// gcd of all k x k minors (0 when every minor vanishes or k exceeds the shape).
inline Int minors_gcd(const IntMat& M, std::size_t k) {
  if (k == 0) return 1;
  if (k > nrows(M) || k > ncols(M)) return 0;
  Int g = 0;
  for_each_subset(nrows(M), k, [&](const std::vector<std::size_t>& ri) {
    for_each_subset(ncols(M), k, [&](const std::vector<std::size_t>& ci) {
      if (g == 1) return;
      g = gcd(g, minor_of(M, ri, ci));
    });
  });
  return g;
}

// k-th compound: C(m,k) x C(n,k) matrix of k x k minors, subsets in lex order.
inline IntMat compound_matrix(const IntMat& M, std::size_t k) {
  std::vector<std::vector<std::size_t>> rsets, csets;
  for_each_subset(nrows(M), k, [&](const std::vector<std::size_t>& s) { rsets.push_back(s); });
  for_each_subset(ncols(M), k, [&](const std::vector<std::size_t>& s) { csets.push_back(s); });
  IntMat C(rsets.size(), IntVec(csets.size()));
  for (std::size_t i = 0; i < rsets.size(); ++i)
    for (std::size_t j = 0; j < csets.size(); ++j) C[i][j] = minor_of(M, rsets[i], csets[j]);
  return C;
}

}  // namespace toric
