#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logder/bounds.hpp"
#include "logder/catalog.hpp"
#include "logder/graphic.hpp"
#include "logder/random.hpp"

namespace logder {

// Every sweep has a serial reference path and an OpenMP path (parallel = true) that
// produce identical results in identical order.

struct GraphSweepItem {
  Graph graph;
  int rule_r = 0;
  int solver_r = 0;
};

struct GraphSweepResult {
  std::size_t graphs = 0;
  std::size_t agree = 0;
  std::vector<GraphSweepItem> mismatches;
  std::vector<std::string> errors;
  bool ok() const { return graphs > 0 && agree == graphs && errors.empty(); }
};

/// Every labelled simple graph on 3..max_n vertices without isolated vertices and with
/// at least two edges: mdr_graph against the generic solver on A(G).
GraphSweepResult graph_exhaustion(int max_n, bool parallel);

struct SquaresSweepResult {
  std::size_t graphs = 0;
  std::size_t passed = 0;
  bool ok() const { return graphs > 0 && passed == graphs; }
};

/// squares_derivation_check on `count` random graphs; graph i uses seed + i.
SquaresSweepResult squares_sweep(std::uint64_t seed, std::size_t count, int n, double p, bool parallel);

struct BoundsSweepItem {
  std::uint64_t seed = 0;
  Arrangement arrangement;
  BoundsReport bounds;
  AdditionDeletionSweep addition_deletion;
  std::string error;
  bool ok() const { return error.empty() && bounds.ok() && addition_deletion.ok(); }
};

struct BoundsSweepResult {
  std::uint64_t seed = 0;
  std::vector<BoundsSweepItem> items;
  std::size_t failures() const;
  bool ok() const { return !items.empty() && failures() == 0; }
};

/// bounds_report and addition_deletion_all on `count` random arrangements; item i uses
/// seed + i.
BoundsSweepResult random_bounds_sweep(std::uint64_t seed, std::size_t count, const RandomArrangementOptions& opt,
                                      bool parallel);

/// Bounds and addition-deletion checks on given arrangements.
std::vector<BoundsSweepItem> bounds_sweep(const std::vector<Arrangement>& arrangements, bool parallel);

struct FamilyInstance {
  FamilyId id{};
  FamilyParams params;
  Arrangement arrangement;
  std::string label;
  bool transformed = false;  // arrangement differs from family(id, params)
};

/// The family's parameter grid up to s_max; a parameterless family instead yields its
/// polynomial under three fixed invertible changes of coordinates.
std::vector<FamilyInstance> family_instances(FamilyId id, int s_max);

struct FamilySweepResult {
  std::vector<FamilyReport> reports;
  std::vector<std::string> errors;
  std::size_t passing() const;
};

/// verify_family on untransformed instances, verify_instance on the others.
FamilySweepResult family_sweep(const std::vector<FamilyInstance>& instances, bool parallel);

}  // namespace logder
