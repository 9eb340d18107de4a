#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/derivation.hpp"
#include "logder/derlog.hpp"

namespace logder {

/// Least d >= 1 such that some degree-d curve passes through every singular point.
/// Line arrangements of rank 3 only; throws RankTooLow / InvalidArgument otherwise.
int alpha0(const Arrangement& a);

struct CoatomSyzygy {
  SingularPoint point;          // in the input coordinates
  Matrix transform;             // change_coordinates(a, transform) sends point to [0,0,1]
  Arrangement moved;
  HomPoly g;                    // product of the lines through the point
  HomPoly h;                    // product of the other lines
  std::vector<HomPoly> syzygy;  // (x h_z, y h_z, z h_z - s h), moved coordinates
  Derivation derivation;        // the same tuple read as a derivation
  int degree = 0;
  bool contraction_zero = false;
  bool logarithmic = false;
  bool euler_multiple = false;
  bool ok() const { return contraction_zero && logarithmic && !euler_multiple; }
};

/// Jacobian relation of degree s - m_X from a singular point X. Throws PencilLike when
/// m_X > s - 2, NotMember when X is not a singular point of A.
CoatomSyzygy coatom_syzygy(const Arrangement& a, const SingularPoint& x);
/// Uses the first point of maximal multiplicity.
CoatomSyzygy coatom_syzygy(const Arrangement& a);

struct Dichotomy {
  std::size_t min_points = 0;  // min over H of |H|
  bool equals_s_minus_m = false;
  bool above_min_points = false;  // r >= min |H| - 1
  bool holds() const { return equals_s_minus_m || above_min_points; }
};

struct BoundsReport {
  std::size_t s = 0, m = 0, M = 0;
  int alpha0 = 0;
  int lower = 0;               // alpha0 - 1
  std::optional<int> upper;    // s - M, absent when M > s - 2
  int r = 0;
  Dichotomy dichotomy;
  /// r >= (s - 2) / 2, reported only when m <= 3.
  std::optional<bool> dt_bound;
  std::optional<CoatomSyzygy> syzygy;  // present with upper
  bool counts_ok = false;
  bool lower_ok() const { return lower <= r; }
  bool upper_ok() const { return !upper || r <= *upper; }
  bool ok() const;
};

/// Rank-3 line arrangements; errors from mdr propagate.
BoundsReport bounds_report(const Arrangement& a);

enum class CheckStatus { Satisfied, Vacuous, Violated };
std::string_view to_string(CheckStatus s);

struct Implication {
  std::string name;   // "1a", "1b", "1c", "2", "3", "i", "ii"
  std::string text;
  CheckStatus status = CheckStatus::Vacuous;
};

/// Forms of A other than h restricted to V(h), duplicates merged.
Arrangement restriction(const Arrangement& a, std::size_t index);

struct AdditionDeletionReport {
  std::size_t index = 0;
  std::size_t s = 0;
  std::size_t restriction_size = 0;  // |A''| = |H| for lines
  int r = 0, r_deletion = 0, r_restriction = 0;
  int r_restriction_computed = 0;    // mdr of the restriction itself
  std::vector<Implication> checks;
  bool ok() const;
};

/// Throws RankCollapse when deleting the form lowers the rank, RankTooLow for rank < 3.
AdditionDeletionReport addition_deletion_check(const Arrangement& a, std::size_t index);

struct AdditionDeletionSweep {
  int r = 0;
  std::vector<AdditionDeletionReport> reports;
  std::vector<std::size_t> collapsed;  // lines whose deletion lowers the rank
  bool ok() const;
};

/// Every line of A; r is computed once.
AdditionDeletionSweep addition_deletion_all(const Arrangement& a);

}  // namespace logder
