#pragma once

#include <optional>
#include <vector>

#include "horo/numeric.hpp"

namespace horo {

// Row-major exact integer matrix.  Row-vector convention throughout the
// library: lattice elements are rows, actions multiply on the right.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;  // rows*cols entries

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  IntMatrix(std::size_t r, std::size_t c, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rr, std::size_t ncols);

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  std::vector<Int> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Int>& v);

  bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_square() const { return rows == cols; }
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix mat_add(const IntMatrix& x, const IntMatrix& y);
IntMatrix mat_sub(const IntMatrix& x, const IntMatrix& y);
IntMatrix mat_transpose(const IntMatrix& x);
IntMatrix mat_neg(const IntMatrix& x);
std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m);
Int mat_det(const IntMatrix& m);              // fraction-free (Bareiss)
bool is_identity(const IntMatrix& m);
bool is_involution(const IntMatrix& m);       // square and m*m == 1
IntMatrix inverse_unimodular(const IntMatrix& m);  // requires det = +-1

// A sublattice of Z^ambient_rank given by Z-independent basis rows.
struct Sublattice {
  std::size_t ambient_rank = 0;
  IntMatrix basis;  // basis.rows x ambient_rank, rows Z-independent

  Sublattice() = default;
  Sublattice(std::size_t ambient, IntMatrix b) : ambient_rank(ambient), basis(std::move(b)) {}

  static Sublattice zero(std::size_t ambient);
  static Sublattice full(std::size_t ambient);
  std::size_t rank() const { return basis.rows; }
};

struct SmithResult {
  IntMatrix u, d, v;      // u*m*v = d, u and v unimodular, d diagonal, d1 | d2 | ... >= 0
  IntMatrix uinv, vinv;   // inverses, tracked during the reduction
  std::vector<Int> divisors() const;  // nonzero diagonal entries, in order
};

SmithResult smith_normal_form(const IntMatrix& m);

// Unique row-style Hermite normal form of the sublattice; DegenerateBasis if
// the given rows are dependent.
IntMatrix hermite_basis(const Sublattice& s);

bool sublattices_equal(const Sublattice& a, const Sublattice& b);

// Basis of {v : v*m = 0}; always a saturated sublattice.
IntMatrix kernel_basis(const IntMatrix& m);

// Solve x*m = b over Z; nullopt when no integral solution exists.
std::optional<std::vector<Int>> solve_left(const IntMatrix& m, const std::vector<Int>& b);

// Matrix of the involution a restricted to the a-stable sublattice s, in the
// basis of s.  NotStable if a does not map s into s.
IntMatrix restrict_involution(const IntMatrix& a, const Sublattice& s);

// Multiplicities of the trivial / sign / regular Z[Gamma]-summands of an
// integer involution, together with a basis realizing the decomposition:
// first n0 rows fixed, next n1 rows negated, then n2 consecutive swapped
// pairs.  The multiplicities are the Tate quotients
//   n0 = dim_F2 ker(r-1)/im(r+1),   n1 = dim_F2 ker(r+1)/im(r-1).
struct GammaLatticeInvariants {
  std::size_t n0 = 0, n1 = 0, n2 = 0;
  IntMatrix adapted_basis;  // rank x rank, unimodular
};

GammaLatticeInvariants involution_invariants(const IntMatrix& r);

}  // namespace horo
