#pragma once

// Dense exact linear algebra over Q (Gaussian elimination).

#include <optional>
#include <vector>

#include "gaudin/ncalgebra.hpp"

namespace gaudin {

using QMatrix = std::vector<std::vector<Rational>>;

int rank(QMatrix m);
Rational determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);

/// Some solution x of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& A, const std::vector<Rational>& b);

/// Coefficient vectors of `polys` over the union of their monomials (one row per poly).
struct CoefficientMatrix {
  std::vector<Monomial> columns;
  QMatrix rows;
};
CoefficientMatrix coefficient_matrix(const std::vector<NCPoly>& polys);

/// Dimension of the Q-span.
int span_rank(const std::vector<NCPoly>& polys);

/// Coefficients c with Σ c_i basis_i = target, if any.
std::optional<std::vector<Rational>> express_in_span(const NCPoly& target, const std::vector<NCPoly>& basis);

}  // namespace gaudin
