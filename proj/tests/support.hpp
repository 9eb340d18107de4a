#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/error.hpp"
#include "logder/textio.hpp"

namespace logder::test {

inline std::string fixture_path(const std::string& name) { return std::string(LOGDER_FIXTURE_DIR) + "/" + name; }

inline Arrangement fixture(const std::string& name) { return read_arrangement_file(fixture_path(name)).arrangement; }

/// Every *.arr file in the fixture directory, sorted by name.
inline std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(LOGDER_FIXTURE_DIR)) {
    if (e.path().extension() == ".arr") names.push_back(e.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

inline Vector ints(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Arrangement lines(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(ints(r));
  return new_arrangement(vs);
}

/// Moves the first three independent forms to x, y, z (identity when already there).
inline Arrangement with_coordinate_triangle(const Arrangement& a) {
  if (a.has_coordinate_triangle()) return a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (std::size_t k = j + 1; k < a.size(); ++k) {
        try {
          return move_to_coordinate_triangle(a, i, j, k);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SingularTransform) throw;
        }
      }
    }
  }
  throw Error(ErrorKind::RankTooLow, "no three independent forms");
}

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected a logder::Error");
}

}  // namespace logder::test
