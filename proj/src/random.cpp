#include "logder/random.hpp"

#include <set>

#include "logder/error.hpp"

namespace logder {

namespace {

Scalar random_coeff(std::mt19937_64& rng, const RandomArrangementOptions& opt) {
  std::uniform_int_distribution<int> num(-opt.coeff_range, opt.coeff_range);
  std::uniform_int_distribution<int> den(1, opt.max_denominator);
  return Scalar(Rational(num(rng), den(rng)));
}

}  // namespace

Arrangement random_arrangement(std::mt19937_64& rng, const RandomArrangementOptions& opt) {
  if (opt.min_lines < 3 || opt.max_lines < opt.min_lines || opt.coeff_range < 1 || opt.max_denominator < 1) {
    throw Error(ErrorKind::InvalidArgument, "bad random arrangement options");
  }
  std::uniform_int_distribution<int> count(opt.min_lines, opt.max_lines);
  const int s = count(rng);
  for (;;) {
    std::vector<LinearForm> forms;
    std::set<LinearForm> seen;
    if (opt.coordinate_triangle) {
      for (int i = 0; i < 3; ++i) {
        Vector e(3);
        e[static_cast<std::size_t>(i)] = Scalar(1);
        forms.emplace_back(e);
        seen.insert(forms.back());
      }
    }
    int attempts = 0;
    while (static_cast<int>(forms.size()) < s && attempts < 1000) {
      ++attempts;
      Vector c{random_coeff(rng, opt), random_coeff(rng, opt), random_coeff(rng, opt)};
      if (is_zero_vector(c)) continue;
      LinearForm l(std::move(c));
      if (seen.insert(l).second) forms.push_back(std::move(l));
    }
    if (static_cast<int>(forms.size()) < s) {
      throw Error(ErrorKind::InvalidArgument, "coefficient range too small for the requested line count");
    }
    Arrangement a(std::move(forms));
    if (a.rank() == 3) return a;
  }
}

Graph random_graph(std::mt19937_64& rng, int n, double p, std::size_t min_edges) {
  if (n < 2 || static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 < min_edges) {
    throw Error(ErrorKind::InvalidArgument, "too few vertices for the requested edge count");
  }
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (coin(rng)) edges.emplace_back(i, j);
      }
    }
    if (edges.size() >= min_edges) return Graph(n, std::move(edges));
  }
}

}  // namespace logder
