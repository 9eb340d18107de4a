#pragma once

#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/derlog.hpp"
#include "logder/matrix.hpp"

namespace logder {

/// Which coefficients of l = ax + by + cz vanish: i (c = 0), ii (b = 0), iii (a = 0),
/// iv (none).
enum class Situation { I, II, III, IV };
std::string_view to_string(Situation s);

struct GroupedLine {
  std::size_t index = 0;  // position in the arrangement, 0-based
  Situation situation = Situation::IV;
  Scalar a, b, c;         // rescaled: b = 1 in i, c = 1 otherwise
};

struct LineGrouping {
  std::vector<GroupedLine> lines;  // lines 4..s, stably sorted by situation
  /// Last 1-based position of situations i, ii, iii after the three coordinate lines.
  std::size_t j = 3, l = 3, n = 3;
  std::size_t s = 0;
  std::size_t count(Situation sit) const;
};

/// Throws MissingCoordinateTriangle unless A starts with x, y, z.
LineGrouping group_lines(const Arrangement& a);

struct RowSource {
  Situation situation = Situation::IV;
  std::string relation;    // e.g. "q3", "q1-a*q2", "iota"
  std::size_t line = 0;    // 0-based arrangement index; meaningless for header rows
  bool header = false;     // shared row of a situation
};

struct DerivationSystem {
  int degree = 2;
  Matrix matrix;
  std::vector<RowSource> rows;
  LineGrouping grouping;
  /// Row count as given by 3s - 2n (degree 2) or 3(s - 1) - n (degree 3).
  long formula_rows() const;
  /// Column labels q1..q3 r1..r3 or q1..q6 r1..r6.
  std::vector<std::string> column_names() const;
};

/// Degree-2 relations, columns (q1, q2, q3, r1, r2, r3) for Q' = q1 x + q2 y + q3 z.
DerivationSystem quadratic_matrix(const Arrangement& a);
/// Degree-3 relations, columns (q1..q6, r1..r6) for Q' = q1 x^2 + q2 y^2 + q3 z^2 +
/// q4 xy + q5 xz + q6 yz.
DerivationSystem cubic_matrix(const Arrangement& a);
DerivationSystem derivation_system(const Arrangement& a, int degree);

/// Q' y d/dy + R' z d/dz from a coefficient vector of the system.
NormalizedDerivation reconstruct(std::span<const Scalar> coeffs, int degree);

/// [1,0,0], [0,1,0], [0,0,1], then the normalized coefficient vectors of lines 4..s.
std::vector<Vector> dual_points(const Arrangement& a);

/// The three (degree 2) or four (degree 3) polynomials whose common zeros must
/// contain the dual points.
std::vector<HomPoly> dual_polynomials(std::span<const Scalar> coeffs, int degree);

/// True iff every dual point is a common zero. Throws AllZeroCoefficients.
bool dual_containment(const Arrangement& a, std::span<const Scalar> coeffs, int degree);

/// Basis of all coefficient vectors (zero included) satisfying the containment.
std::vector<Vector> containment_space(const Arrangement& a, int degree);

struct ContainmentComparison {
  std::size_t system_nullity = 0;
  std::size_t containment_dim = 0;
  bool forward = false;  // every system solution satisfies the containment
  bool reverse = false;  // every containment vector solves the system
};

ContainmentComparison compare_containment(const Arrangement& a, int degree);

}  // namespace logder
