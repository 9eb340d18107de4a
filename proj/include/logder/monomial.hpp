#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace logder {

using Exponent = std::vector<int>;

/// Number of monomials of `degree` in `nvars` variables: C(degree + nvars - 1, nvars - 1).
std::size_t basis_size(int nvars, int degree);

/// All exponent vectors of total degree `degree`, graded-lex with x1 > x2 > ... > xn,
/// i.e. lexicographically decreasing. For (3, 2): x^2, xy, xz, y^2, yz, z^2.
/// The returned reference is to an immutable cached table; safe to share across threads.
const std::vector<Exponent>& monomial_basis(int nvars, int degree);

/// Position of `exps` inside monomial_basis(exps.size(), sum(exps)).
std::size_t monomial_index(std::span<const int> exps);

}  // namespace logder
