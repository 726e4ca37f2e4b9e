#include "horo/lattice.hpp"

#include <algorithm>

#include "horo/errors.hpp"

namespace horo {

IntMatrix::IntMatrix(std::size_t r, std::size_t c, std::vector<Int> entries)
    : rows(r), cols(c), a(std::move(entries)) {
  if (a.size() != rows * cols) throw DimensionMismatch("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rr, std::size_t ncols) {
  IntMatrix m(rr.size(), ncols);
  for (std::size_t i = 0; i < rr.size(); ++i) {
    if (rr[i].size() != ncols) throw DimensionMismatch("from_rows: ragged rows");
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rr[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

void IntMatrix::set_row(std::size_t i, const std::vector<Int>& v) {
  if (v.size() != cols) throw DimensionMismatch("set_row: wrong length");
  std::copy(v.begin(), v.end(), a.begin() + i * cols);
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw DimensionMismatch("mat_mul: inner dimensions differ");
  IntMatrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

IntMatrix mat_add(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("mat_add: shapes differ");
  IntMatrix z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

IntMatrix mat_sub(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("mat_sub: shapes differ");
  IntMatrix z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

IntMatrix mat_transpose(const IntMatrix& x) {
  IntMatrix z(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

IntMatrix mat_neg(const IntMatrix& x) {
  IntMatrix z = x;
  for (auto& e : z.a) e = -e;
  return z;
}

std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m) {
  if (v.size() != m.rows) throw DimensionMismatch("vec_mat: length mismatch");
  std::vector<Int> out(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols; ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

Int mat_det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("mat_det: not square");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = t / prev;  // Bareiss: exact division
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

bool is_identity(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool is_involution(const IntMatrix& m) { return m.is_square() && is_identity(mat_mul(m, m)); }

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse_unimodular: not square");
  std::size_t n = m.rows;
  // exact Gauss-Jordan over Q
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(m.at(i, j));
    w[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w[p][k] == 0) ++p;
    if (p == n) throw DegenerateBasis("inverse_unimodular: singular matrix");
    std::swap(w[k], w[p]);
    Rat piv = w[k][k];
    for (std::size_t j = 0; j < 2 * n; ++j) w[k][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w[i][k] == 0) continue;
      Rat f = w[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[k][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (rat_den(w[i][n + j]) != 1)
        throw InternalError("inverse_unimodular: matrix is not unimodular");
      inv.at(i, j) = rat_num(w[i][n + j]);
    }
  return inv;
}

Sublattice Sublattice::zero(std::size_t ambient) { return Sublattice(ambient, IntMatrix(0, ambient)); }
Sublattice Sublattice::full(std::size_t ambient) { return Sublattice(ambient, IntMatrix::identity(ambient)); }

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SnfState {
  IntMatrix d, u, v, uinv, vinv;

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (std::size_t r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (std::size_t c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row i += q * row j
  void row_add(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d.cols; ++c) d.at(i, c) += q * d.at(j, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) += q * u.at(j, c);
    for (std::size_t r = 0; r < uinv.rows; ++r) uinv.at(r, j) -= q * uinv.at(r, i);
  }
  // col i += q * col j
  void col_add(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d.rows; ++r) d.at(r, i) += q * d.at(r, j);
    for (std::size_t r = 0; r < v.rows; ++r) v.at(r, i) += q * v.at(r, j);
    for (std::size_t c = 0; c < vinv.cols; ++c) vinv.at(j, c) -= q * vinv.at(i, c);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    for (std::size_t r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
  }
};

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SnfState s;
  s.d = m;
  s.u = IntMatrix::identity(m.rows);
  s.uinv = IntMatrix::identity(m.rows);
  s.v = IntMatrix::identity(m.cols);
  s.vinv = IntMatrix::identity(m.cols);
  const std::size_t nm = std::min(m.rows, m.cols);

  for (std::size_t t = 0; t < nm; ++t) {
    // locate a pivot of minimal absolute value in the trailing submatrix
    for (;;) {
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < m.rows; ++i)
        for (std::size_t j = t; j < m.cols; ++j)
          if (s.d.at(i, j) != 0 &&
              (!found || int_abs(s.d.at(i, j)) < int_abs(s.d.at(pi, pj)))) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) goto done;  // trailing submatrix is zero
      s.row_swap(t, pi);
      s.col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        Int q = s.d.at(i, t) / s.d.at(t, t);
        s.row_add(i, t, -q);
        if (s.d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        Int q = s.d.at(t, j) / s.d.at(t, t);
        s.col_add(j, t, -q);
        if (s.d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // remainders became new, smaller candidates

      // enforce divisibility of the rest of the submatrix by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols && divides; ++j)
          if (s.d.at(i, j) % s.d.at(t, t) != 0) {
            s.row_add(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s.d.at(t, t) < 0) s.row_negate(t);
  }
done:
  SmithResult r;
  r.u = std::move(s.u);
  r.d = std::move(s.d);
  r.v = std::move(s.v);
  r.uinv = std::move(s.uinv);
  r.vinv = std::move(s.vinv);
  return r;
}

std::vector<Int> SmithResult::divisors() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i)
    if (d.at(i, i) != 0) out.push_back(d.at(i, i));
  return out;
}

// ---------------------------------------------------------------------------
// Hermite normal form (row style)

IntMatrix hermite_basis(const Sublattice& s) {
  const std::size_t k = s.basis.rows, n = s.ambient_rank;
  if (s.basis.cols != n) throw DimensionMismatch("hermite_basis: basis width != ambient rank");
  IntMatrix h = s.basis;
  std::size_t r = 0;  // current pivot row
  for (std::size_t c = 0; c < n && r < k; ++c) {
    // gcd-reduce column c below row r
    for (;;) {
      std::size_t p = r;
      bool found = false;
      for (std::size_t i = r; i < k; ++i)
        if (h.at(i, c) != 0 && (!found || int_abs(h.at(i, c)) < int_abs(h.at(p, c)))) {
          p = i;
          found = true;
        }
      if (!found) break;
      if (p != r)
        for (std::size_t j = 0; j < n; ++j) std::swap(h.at(r, j), h.at(p, j));
      bool clean = true;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = h.at(i, c) / h.at(r, c);
        for (std::size_t j = 0; j < n; ++j) h.at(i, j) -= q * h.at(r, j);
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, c) == 0) continue;  // no pivot in this column
    if (h.at(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) h.at(r, j) = -h.at(r, j);
    // reduce the entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = h.at(i, c) / h.at(r, c);
      if (h.at(i, c) % h.at(r, c) < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) h.at(i, j) -= q * h.at(r, j);
    }
    ++r;
  }
  if (r < k) throw DegenerateBasis("hermite_basis: basis rows are dependent");
  return h;
}

bool sublattices_equal(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank != b.ambient_rank)
    throw DimensionMismatch("sublattices_equal: ambient ranks differ");
  if (a.rank() != b.rank()) return false;
  return hermite_basis(a) == hermite_basis(b);
}

// ---------------------------------------------------------------------------
// Kernels and left solves

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  const std::size_t nm = std::min(m.rows, m.cols);
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < m.rows; ++i)
    if (i >= nm || s.d.at(i, i) == 0) rows.push_back(s.u.row(i));
  return IntMatrix::from_rows(rows, m.rows == 0 ? m.rows : s.u.cols);
}

std::optional<std::vector<Int>> solve_left(const IntMatrix& m, const std::vector<Int>& b) {
  if (b.size() != m.cols) throw DimensionMismatch("solve_left: rhs length mismatch");
  SmithResult s = smith_normal_form(m);
  std::vector<Int> c = vec_mat(b, s.v);
  const std::size_t nm = std::min(m.rows, m.cols);
  std::vector<Int> p(m.rows);
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (j < nm && s.d.at(j, j) != 0) {
      if (c[j] % s.d.at(j, j) != 0) return std::nullopt;
      p[j] = c[j] / s.d.at(j, j);
    } else if (c[j] != 0) {
      return std::nullopt;
    }
  }
  return vec_mat(p, s.u);
}

IntMatrix restrict_involution(const IntMatrix& a, const Sublattice& s) {
  if (!is_involution(a)) throw NotInvolution("restrict_involution: matrix is not an involution");
  if (a.rows != s.ambient_rank)
    throw DimensionMismatch("restrict_involution: ambient ranks differ");
  const std::size_t k = s.rank();
  IntMatrix r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto img = vec_mat(s.basis.row(i), a);
    auto x = solve_left(s.basis, img);
    if (!x) throw NotStable("restrict_involution: sublattice is not stable");
    r.set_row(i, *x);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Involution invariants

namespace {

// Rows of `vectors` expressed in the (saturated, full-rank) row basis `k`.
IntMatrix express_in_basis(const IntMatrix& k, const IntMatrix& vectors) {
  IntMatrix x(vectors.rows, k.rows);
  for (std::size_t i = 0; i < vectors.rows; ++i) {
    auto sol = solve_left(k, vectors.row(i));
    if (!sol) throw InternalError("express_in_basis: vector outside span");
    x.set_row(i, *sol);
  }
  return x;
}

// Adapted basis of the +1 (eps=+1) or -1 (eps=-1) eigenlattice: returns rows
// w_1..w_a of ker(r -/+ 1) such that d_i * w_i is a basis of im(r +/- 1) with
// d_i in {1,2}, ones first.  The count of twos is the Tate dimension.
struct EigenSide {
  IntMatrix kernel;         // basis of ker(r - eps)
  IntMatrix adapted;        // basis of the same kernel, SNF-adapted to the image
  std::size_t ones = 0;     // divisor-1 rows (first)
  std::size_t twos = 0;     // divisor-2 rows (last)
};

EigenSide eigen_side(const IntMatrix& r, int eps) {
  const std::size_t n = r.rows;
  IntMatrix id = IntMatrix::identity(n);
  IntMatrix ker_of = (eps > 0) ? mat_sub(r, id) : mat_add(r, id);   // ker(r - eps)
  IntMatrix im_of = (eps > 0) ? mat_add(r, id) : mat_sub(r, id);    // im(r + eps)
  EigenSide side;
  side.kernel = kernel_basis(ker_of);
  IntMatrix x = express_in_basis(side.kernel, im_of);
  SmithResult s = smith_normal_form(x);
  auto divs = s.divisors();
  if (divs.size() != side.kernel.rows)
    throw InternalError("involution_invariants: image rank defect");
  IntMatrix coords = inverse_unimodular(s.v);  // rows c_i: d_i * (c_i * kernel) spans the image
  side.adapted = mat_mul(coords, side.kernel);
  for (const auto& d : divs) {
    if (d == 1)
      ++side.ones;
    else if (d == 2)
      ++side.twos;
    else
      throw InternalError("involution_invariants: unexpected elementary divisor");
  }
  return side;
}

}  // namespace

GammaLatticeInvariants involution_invariants(const IntMatrix& r) {
  if (!r.is_square()) throw NotInvolution("involution_invariants: matrix not square");
  const std::size_t n = r.rows;
  GammaLatticeInvariants out;
  if (n == 0) {
    out.adapted_basis = IntMatrix(0, 0);
    return out;
  }
  if (!is_involution(r)) throw NotInvolution("involution_invariants: r*r != identity");

  EigenSide plus = eigen_side(r, +1);    // ker(r-1) vs im(r+1): twos = n0
  EigenSide minus = eigen_side(r, -1);   // ker(r+1) vs im(r-1): twos = n1
  out.n0 = plus.twos;
  out.n1 = minus.twos;
  if (plus.ones != minus.ones)
    throw InternalError("involution_invariants: inconsistent regular rank");
  out.n2 = plus.ones;
  if (out.n0 + out.n1 + 2 * out.n2 != n)
    throw InternalError("involution_invariants: rank bookkeeping failed");

  const std::size_t n2 = out.n2;
  // Pair vectors: x_i with x_i (r+1) = w_i for the divisor-1 rows w_i.
  IntMatrix aplus = mat_add(r, IntMatrix::identity(n));
  std::vector<std::vector<Int>> xs;
  for (std::size_t i = 0; i < n2; ++i) {
    auto sol = solve_left(aplus, plus.adapted.row(i));
    if (!sol) throw InternalError("involution_invariants: pair lift failed");
    xs.push_back(*sol);
  }

  // Correct the pair lifts so that {x_i - x_i r} joins the sign vectors in a
  // basis of ker(r+1).  The classes mod 2*ker(r+1) are independent, so an
  // F2-invertible coefficient matrix can be lifted to GL over Z via
  // elementary operations.
  const std::size_t b = minus.kernel.rows;
  IntMatrix coeff(n2 + out.n1, b);
  for (std::size_t i = 0; i < n2; ++i) {
    std::vector<Int> m_i(n);
    auto xr = vec_mat(xs[i], r);
    for (std::size_t j = 0; j < n; ++j) m_i[j] = xs[i][j] - xr[j];
    auto sol = solve_left(minus.kernel, m_i);
    if (!sol) throw InternalError("involution_invariants: pair difference outside ker(r+1)");
    coeff.set_row(i, *sol);
  }
  for (std::size_t j = 0; j < out.n1; ++j) {
    auto sol = solve_left(minus.kernel, minus.adapted.row(minus.ones + j));
    if (!sol) throw InternalError("involution_invariants: sign vector outside ker(r+1)");
    coeff.set_row(n2 + j, *sol);
  }
  if (coeff.rows != b) throw InternalError("involution_invariants: minus-side rank defect");

  IntMatrix shat = IntMatrix::identity(b);
  if (b > 0) {
    // F2 row reduction of coeff, recorded as elementary ops; shat = integral
    // lift of the reduced-ops factorization, congruent to coeff mod 2.
    std::vector<std::vector<int>> f(b, std::vector<int>(b));
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j)
        f[i][j] = static_cast<int>(((coeff.at(i, j) % 2) + 2) % 2);
    struct Op {
      bool swap;
      std::size_t i, j;
    };
    std::vector<Op> ops;
    std::size_t row = 0;
    for (std::size_t col = 0; col < b; ++col) {
      std::size_t p = row;
      while (p < b && f[p][col] == 0) ++p;
      if (p == b) continue;
      if (p != row) {
        std::swap(f[p], f[row]);
        ops.push_back({true, row, p});
      }
      for (std::size_t i = 0; i < b; ++i) {
        if (i == row || f[i][col] == 0) continue;
        for (std::size_t j = 0; j < b; ++j) f[i][j] ^= f[row][j];
        ops.push_back({false, i, row});
      }
      ++row;
    }
    if (row != b) throw InternalError("involution_invariants: F2 coefficient matrix singular");
    // The recorded ops reduce coeff to the identity mod 2, and every
    // elementary op is its own inverse over F2, so coeff == E_1 E_2 ... E_t
    // (mod 2).  The same product of integral elementary matrices is the lift.
    for (const Op& op : ops) {
      IntMatrix e = IntMatrix::identity(b);
      if (op.swap) {
        e.at(op.i, op.i) = 0;
        e.at(op.j, op.j) = 0;
        e.at(op.i, op.j) = 1;
        e.at(op.j, op.i) = 1;
      } else {
        e.at(op.i, op.j) = 1;
      }
      shat = mat_mul(shat, e);
    }
  }

  // Rebase: rows i of shat replace the pair-difference coordinates, rows
  // n2+j replace the sign coordinates, all congruent mod 2.
  std::vector<std::vector<Int>> adapted;
  for (std::size_t i = 0; i < out.n0; ++i) adapted.push_back(plus.adapted.row(plus.ones + i));
  for (std::size_t j = 0; j < out.n1; ++j)
    adapted.push_back(vec_mat(shat.row(n2 + j), minus.kernel));
  for (std::size_t i = 0; i < n2; ++i) {
    std::vector<Int> target = shat.row(i);
    std::vector<Int> delta(b);
    for (std::size_t c = 0; c < b; ++c) {
      Int diff = target[c] - coeff.at(i, c);
      if (diff % 2 != 0) throw InternalError("involution_invariants: lift parity broke");
      delta[c] = diff / 2;
    }
    auto corr = vec_mat(delta, minus.kernel);
    std::vector<Int> x = xs[i];
    for (std::size_t c = 0; c < n; ++c) x[c] += corr[c];
    adapted.push_back(x);
    adapted.push_back(vec_mat(x, r));
  }
  out.adapted_basis = IntMatrix::from_rows(adapted, n);

  Int det = mat_det(out.adapted_basis);
  if (det != 1 && det != -1)
    throw InternalError("involution_invariants: adapted basis not unimodular");
  return out;
}

}  // namespace horo
