#pragma once

#include <cstdint>
#include <random>

#include "logder/arrangement.hpp"
#include "logder/graphic.hpp"

namespace logder {

struct RandomArrangementOptions {
  int min_lines = 5;
  int max_lines = 8;
  int coeff_range = 3;         // numerators in [-range, range]
  int max_denominator = 2;     // denominators in [1, max]
  bool coordinate_triangle = true;  // first three forms x, y, z
};

/// Rank-3 line arrangement; forms are resampled until distinct and of full rank.
Arrangement random_arrangement(std::mt19937_64& rng, const RandomArrangementOptions& opt = {});

/// Erdos-Renyi graph on n vertices, resampled until it has at least `min_edges` edges.
Graph random_graph(std::mt19937_64& rng, int n, double p, std::size_t min_edges = 1);

}  // namespace logder
