#pragma once

#include <optional>
#include <span>
#include <vector>

#include "logder/derivation.hpp"
#include "logder/hompoly.hpp"
#include "logder/linear_form.hpp"
#include "logder/matrix.hpp"
#include "logder/monomial.hpp"
#include "logder/scalar.hpp"

namespace logder {

/// sum_i theta_i * df/dx_i; degree deg(theta) + deg(f) - 1.
HomPoly apply_derivation(const Derivation& theta, const HomPoly& f);

struct LinearDivision {
  HomPoly remainder;               // f with the pivot variable of l eliminated
  std::optional<HomPoly> quotient; // set iff l divides f
  bool divisible() const { return quotient.has_value(); }
};

/// Long division by l in its pivot variable. The remainder is f restricted to V(l),
/// written in the remaining variables; f is divisible iff it vanishes.
LinearDivision divide_by_linear(const HomPoly& f, const LinearForm& l);

/// Dimension of the space of degree-d forms vanishing on all points.
std::size_t vanishing_dimension(std::span<const Vector> points, int degree);

/// Rows = points, columns = monomial_basis(n, d).
Matrix evaluation_matrix(std::span<const Vector> points, int degree);

}  // namespace logder
