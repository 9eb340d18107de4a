#pragma once

#include "logder/matrix.hpp"
#include "support.hpp"

namespace logder::test {

inline Matrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    vs.push_back(ints(r));
    cols = r.size();
  }
  return Matrix::from_rows(vs, cols);
}

inline std::vector<Vector> row_list(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

// xyz(x+y+z)(x+z)(y+z)
inline const Matrix kMIII = int_matrix({{0, 0, 0, 0, 1, 0},
                                 {0, 0, 0, 1, 0, -1},
                                 {1, 0, 0, -1, 0, 0},
                                 {0, 1, -1, 0, -1, 1},
                                 {1, -1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, -1},
                                 {0, -1, 1, 0, 1, -1}});

// xyz(x+y)(x+z)(-x+z)(y+z)(-y+z), as displayed.
inline const Matrix kMVb = int_matrix({{0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                {1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
                                {0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0},
                                {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                                {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, -1, 0},
                                {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0},
                                {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1},
                                {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
                                {1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
                                {0, 1, 1, 0, 0, -1, 0, -1, -1, 0, 0, 1},
                                {0, 1, 1, 0, 0, 1, 0, -1, -1, 0, 0, -1},
                                {0, 0, 0, 1, 1, 0, 0, 0, 0, 1, -1, 0},
                                {0, 0, 0, 1, -1, 0, 0, 0, 0, 1, 1, 0}});

inline Matrix m_i(const std::vector<long>& t) {
  std::vector<Vector> rows{ints({0, 0, 1, 0, 0, 0}), ints({1, -1, 0, 0, 0, 0}), ints({1, 0, 0, -1, 0, 0})};
  for (long tj : t) rows.push_back(ints({0, 1, -tj, 0, -1, tj}));
  return Matrix::from_rows(rows, 6);
}

}  // namespace logder::test
