#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/derivation.hpp"
#include "logder/hompoly.hpp"

namespace logder {

/// dim S_{d-1} * theta_E = C(d-1+n-1, n-1); zero for d = 0.
std::size_t euler_dim(int nvars, int degree);

struct DerlogBasis {
  int degree = 0;
  std::vector<Derivation> basis;
  std::size_t dimension = 0;
  std::size_t euler_dim = 0;
};

/// Exact basis of the degree-d logarithmic derivations of A.
DerlogBasis derlog_basis(const Arrangement& a, int degree);

/// Flattened m * theta_E for every monomial m of degree d - 1, in basis order.
std::vector<Vector> euler_multiples(int nvars, int degree);

bool is_logarithmic(const Arrangement& a, const Derivation& theta);
/// theta = g * theta_E for some form g (the zero derivation counts).
bool is_euler_multiple(const Derivation& theta);

/// Vectors of `basis` spanning Derlog_d modulo S_{d-1} theta_E, each reduced modulo
/// the Euler multiples. Deterministic: earlier basis vectors are preferred.
std::vector<Derivation> euler_quotient(const DerlogBasis& basis, int nvars);

struct DegreeCheck {
  int degree = 0;
  std::size_t dimension = 0;
  std::size_t euler_dim = 0;
};

struct MdrResult {
  int r = 0;
  Derivation witness;                   // first element of quotient_basis
  std::vector<Derivation> quotient_basis;
  std::vector<DegreeCheck> checked_degrees;  // d < r
  DegreeCheck at_r;
  bool essentialized = false;           // witness lives in rank(A) variables
};

/// Minimal degree of a logarithmic derivation that is not an Euler multiple, computed
/// on the essentialization. Throws RankTooLow (rank < 2) and CapExceeded (no such
/// degree up to s - 1).
MdrResult mdr(const Arrangement& a);

/// Coefficients of a degree-1 or degree-2 form in the display order (x, y, z) or
/// (x^2, y^2, z^2, xy, xz, yz).
Vector display_coefficients(const HomPoly& p);
HomPoly from_display_coefficients(std::span<const Scalar> c, int degree);

/// theta rewritten as Q' y d/dy + R' z d/dz after subtracting P' theta_E.
struct NormalizedDerivation {
  HomPoly qp;
  HomPoly rp;
  int degree() const { return qp.degree() + 1; }
  Derivation reconstruct() const;
  /// (q..., r...) in display order; empty unless deg(Q') is 1 or 2.
  Vector coefficients() const;
};

/// Throws MissingCoordinateTriangle unless A starts with x, y, z; NotLogarithmic when
/// theta is not logarithmic for those three lines.
NormalizedDerivation normalize_derivation(const Arrangement& a, const Derivation& theta);

/// s*theta - h*theta_E where theta(F) = h F; verified to contract to zero with grad F.
/// Throws NotLogarithmic.
std::vector<HomPoly> derivation_to_syzygy(const Arrangement& a, const Derivation& theta);

/// Exact division of f by the defining polynomial; nullopt when not divisible.
std::optional<HomPoly> divide_by_defining(const Arrangement& a, const HomPoly& f);

/// Determinant of a square matrix of homogeneous polynomials (Laplace expansion).
HomPoly poly_determinant(const std::vector<std::vector<HomPoly>>& m);

struct SaitoCertificate {
  bool success = false;
  std::vector<Derivation> derivations;
  std::vector<int> exponents;   // degrees in input order
  Scalar c;                     // det = c * F when success
  HomPoly det;
  std::string reason;           // empty on success
  /// Exponents sorted ascending.
  std::vector<int> sorted_exponents() const;
};

/// Saito's criterion on the given derivations. Throws DegreeSumMismatch when the
/// degrees do not add up to s, InvalidArgument on a wrong count.
SaitoCertificate saito_check(const Arrangement& a, const std::vector<Derivation>& derivations);

/// Searches degree by degree for minimal generators starting from theta_E and runs
/// saito_check once n of them are found. A failure only means this search did not
/// produce a basis.
SaitoCertificate auto_saito(const Arrangement& a);

}  // namespace logder
