#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logder/hompoly.hpp"
#include "logder/linear_form.hpp"
#include "logder/matrix.hpp"

namespace logder {

/// Central arrangement: ordered, pairwise non-proportional nonzero linear forms.
class Arrangement {
 public:
  Arrangement() = default;
  /// Throws DuplicateHyperplane on proportional forms, InvalidArgument on empty input.
  explicit Arrangement(std::vector<LinearForm> forms);

  int nvars() const { return nvars_; }
  std::size_t size() const { return forms_.size(); }
  std::size_t rank() const { return rank_; }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const LinearForm& operator[](std::size_t i) const { return forms_[i]; }

  std::optional<std::size_t> index_of(const LinearForm& l) const;
  /// Index of l; throws NotMember.
  std::size_t require_index(const LinearForm& l) const;

  /// s x nvars matrix of coefficients.
  Matrix coefficient_matrix() const;
  HomPoly defining_polynomial() const;
  /// True when the first three forms are x, y, z.
  bool has_coordinate_triangle() const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) { return a.forms_ == b.forms_; }

 private:
  std::vector<LinearForm> forms_;
  int nvars_ = 0;
  std::size_t rank_ = 0;
};

/// Builds from raw coefficient rows (normalized on the way in). Throws ZeroForm,
/// DuplicateHyperplane.
Arrangement new_arrangement(const std::vector<Vector>& rows);

struct SingularPoint {
  Vector point;                      // first nonzero coordinate is 1
  std::size_t multiplicity = 0;
  std::vector<std::size_t> incident; // sorted form indices through the point
};

/// Intersection points of a line arrangement (nvars = 3), sorted by coordinates.
/// Throws RankTooLow for rank < 2, InvalidArgument for nvars != 3.
std::vector<SingularPoint> singular_locus(const Arrangement& a);

struct LineStats {
  std::size_t index = 0;
  std::size_t points = 0;   // |H|: singular points on H
  std::size_t doubles = 0;  // D_H
  std::size_t triples = 0;  // T_H
};

struct ArrangementStats {
  std::size_t s = 0;
  std::size_t rank = 0;
  std::size_t m = 0;  // max multiplicity
  std::size_t M = 0;  // max coatom multiplicity, equal to m for line arrangements
  std::size_t n2 = 0;
  std::size_t n3 = 0;
  std::size_t num_points = 0;
  std::vector<LineStats> lines;
  std::vector<std::size_t> multiplicities;  // sorted descending
};

ArrangementStats stats(const Arrangement& a);
ArrangementStats stats(const Arrangement& a, const std::vector<SingularPoint>& sing);
LineStats line_stats(const Arrangement& a, const LinearForm& h);

struct CountFormulaReport {
  std::vector<long> line_residuals;  // sum over P on H of (m_P - 1), minus (s - 1)
  long global_residual = 0;          // sum of C(m_P, 2), minus C(s, 2)
  bool ok() const;
};

CountFormulaReport check_count_formulas(const Arrangement& a);

/// A without h; throws NotMember.
Arrangement delete_form(const Arrangement& a, const LinearForm& h);
Arrangement delete_index(const Arrangement& a, std::size_t i);
/// A with l appended; throws DuplicateHyperplane.
Arrangement add_form(const Arrangement& a, const LinearForm& l);

/// Singular points P such that every other singular point shares a line of A with P.
std::vector<SingularPoint> modular_points(const Arrangement& a);

/// Replaces each coefficient row c by c*T. Throws SingularTransform when det T = 0.
Arrangement change_coordinates(const Arrangement& a, const Matrix& t);

/// Same arrangement written in rank(A) variables (coefficients restricted to the
/// pivot columns of the coefficient matrix). Identity when A is already essential.
Arrangement essentialize(const Arrangement& a);

/// Invertible T with change_coordinates(a, T) starting with x, y, z when forms i, j, k
/// are independent. Throws SingularTransform otherwise.
Matrix coordinate_triangle_transform(const Arrangement& a, std::size_t i, std::size_t j, std::size_t k);

/// Forms i, j, k moved to x, y, z and to the front; the other forms keep their order.
Arrangement move_to_coordinate_triangle(const Arrangement& a, std::size_t i, std::size_t j, std::size_t k);

/// Matrix inverse over the scalar field; throws SingularTransform.
Matrix inverse(const Matrix& t);

}  // namespace logder
