#include "logder/monomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>

#include "logder/error.hpp"

namespace logder {

std::size_t basis_size(int nvars, int degree) {
  if (nvars < 0 || degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(degree + nvars - 1, nvars - 1), computed incrementally to stay exact.
  std::size_t k = static_cast<std::size_t>(nvars - 1);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (static_cast<std::size_t>(degree) + i) / i;
  }
  return result;
}

namespace {

void enumerate(int nvars, int remaining, Exponent& current, int pos, std::vector<Exponent>& out) {
  if (pos == nvars - 1) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[pos] = e;
    enumerate(nvars, remaining - e, current, pos + 1, out);
  }
}

}  // namespace

const std::vector<Exponent>& monomial_basis(int nvars, int degree) {
  if (nvars < 1 || degree < 0) {
    throw Error(ErrorKind::InvalidArgument, "monomial_basis needs nvars >= 1 and degree >= 0");
  }
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<Exponent>>> cache;
  const auto key = std::make_pair(nvars, degree);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<std::vector<Exponent>>();
  table->reserve(basis_size(nvars, degree));
  Exponent current(static_cast<std::size_t>(nvars), 0);
  enumerate(nvars, degree, current, 0, *table);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(table));
  return *it->second;
}

std::size_t monomial_index(std::span<const int> exps) {
  const int n = static_cast<int>(exps.size());
  int remaining = std::accumulate(exps.begin(), exps.end(), 0);
  std::size_t index = 0;
  for (int i = 0; i + 1 < n; ++i) {
    // Monomials that agree before position i and have a larger exponent at i come first.
    for (int e = remaining; e > exps[i]; --e) {
      index += basis_size(n - i - 1, remaining - e);
    }
    remaining -= exps[i];
  }
  return index;
}

}  // namespace logder
