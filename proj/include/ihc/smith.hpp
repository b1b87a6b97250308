#pragma once

#include <optional>

#include "ihc/matrix.hpp"

namespace ihc {

// U * M * V = S with U, V invertible over the compute ring. Pivoting picks the nonzero entry of
// least absolute value, ties broken by (row, column) index.
struct SmithForm {
  Matrix s;
  Matrix u;
  Matrix u_inv;
  Matrix v;
  std::vector<Integer> diagonal;  // the first `rank` entries are nonzero
  std::size_t rank = 0;
};

enum SmithFlags : unsigned { kSmithNone = 0, kSmithU = 1, kSmithUInv = 2, kSmithV = 4, kSmithAll = 7 };

SmithForm smith_normal_form(const Matrix& m, const Ring& ring, unsigned flags = kSmithAll);

// Saturated kernel basis from unimodular column reduction.
// basis: cols x k with M * basis = 0; left_inverse: k x cols with left_inverse * basis = I.
struct KernelBasis {
  Matrix basis;
  Matrix left_inverse;
  std::size_t rank = 0;  // rank of M
};

KernelBasis kernel_basis(const Matrix& m, const Ring& ring);

std::size_t rank(const Matrix& m, const Ring& ring);

// Exact solve of A x = b over the compute ring (Z or Z/p).
std::optional<Vector> solve(const Matrix& a, const Vector& b, const Ring& ring);

// Solve over Q with integer data: A x = scale * b with scale > 0 minimal for the returned x.
struct ScaledSolution {
  Vector x;
  Integer scale;
};
std::optional<ScaledSolution> solve_rational(const Matrix& a, const Vector& b);

}  // namespace ihc
