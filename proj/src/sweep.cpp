#include "logder/sweep.hpp"

#include <algorithm>

#include "logder/derlog.hpp"
#include "logder/error.hpp"

namespace logder {

namespace {

/// Runs body(i) for i in [0, n), in parallel when asked. body must not throw.
template <class Body>
void for_each_index(std::size_t n, bool parallel, Body&& body) {
  const long count = static_cast<long>(n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  }
}

struct GraphOutcome {
  int rule_r = 0;
  int solver_r = 0;
  std::string error;
};

std::vector<Matrix> coordinate_changes() {
  return {Matrix::identity(3), Matrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, Matrix{{2, 1, 0}, {1, 1, 1}, {0, -1, 3}}};
}

}  // namespace

GraphSweepResult graph_exhaustion(int max_n, bool parallel) {
  std::vector<Graph> graphs;
  for (int n = 3; n <= max_n; ++n) {
    auto g = enumerate_graphs(n);
    graphs.insert(graphs.end(), std::make_move_iterator(g.begin()), std::make_move_iterator(g.end()));
  }
  std::vector<GraphOutcome> out(graphs.size());
  for_each_index(graphs.size(), parallel, [&](std::size_t i) {
    try {
      out[i].rule_r = mdr_graph(graphs[i]).r;
      out[i].solver_r = mdr(graphic_arrangement(graphs[i])).r;
    } catch (const std::exception& e) {
      out[i].error = graphs[i].to_string() + ": " + e.what();
    }
  });
  GraphSweepResult res;
  res.graphs = graphs.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!out[i].error.empty()) {
      res.errors.push_back(out[i].error);
    } else if (out[i].rule_r == out[i].solver_r) {
      ++res.agree;
    } else {
      res.mismatches.push_back({graphs[i], out[i].rule_r, out[i].solver_r});
    }
  }
  return res;
}

SquaresSweepResult squares_sweep(std::uint64_t seed, std::size_t count, int n, double p, bool parallel) {
  std::vector<char> passed(count, 0);
  for_each_index(count, parallel, [&](std::size_t i) {
    try {
      std::mt19937_64 rng(seed + i);
      passed[i] = squares_derivation_check(random_graph(rng, n, p)) ? 1 : 0;
    } catch (const std::exception&) {
      passed[i] = 0;
    }
  });
  return {count, static_cast<std::size_t>(std::count(passed.begin(), passed.end(), 1))};
}

std::size_t BoundsSweepResult::failures() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const BoundsSweepItem& i) { return !i.ok(); }));
}

namespace {

void check_bounds_item(BoundsSweepItem& item) {
  try {
    item.bounds = bounds_report(item.arrangement);
    item.addition_deletion = addition_deletion_all(item.arrangement);
  } catch (const std::exception& e) {
    item.error = e.what();
  }
}

}  // namespace

BoundsSweepResult random_bounds_sweep(std::uint64_t seed, std::size_t count, const RandomArrangementOptions& opt,
                                      bool parallel) {
  BoundsSweepResult res;
  res.seed = seed;
  res.items.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed + i);
    res.items[i].seed = seed + i;
    res.items[i].arrangement = random_arrangement(rng, opt);
  }
  for_each_index(count, parallel, [&](std::size_t i) { check_bounds_item(res.items[i]); });
  return res;
}

std::vector<BoundsSweepItem> bounds_sweep(const std::vector<Arrangement>& arrangements, bool parallel) {
  std::vector<BoundsSweepItem> items(arrangements.size());
  for (std::size_t i = 0; i < arrangements.size(); ++i) items[i].arrangement = arrangements[i];
  for_each_index(items.size(), parallel, [&](std::size_t i) { check_bounds_item(items[i]); });
  return items;
}

std::vector<FamilyInstance> family_instances(FamilyId id, int s_max) {
  std::vector<FamilyInstance> out;
  const auto grid = parameter_grid(id, s_max);
  const bool parameterless = t_count(id, s_range(id).first) == 0 && !uses_a(id) && !uses_b(id);
  if (parameterless && !grid.empty()) {
    const Arrangement base = family(id, grid.front());
    int k = 0;
    for (const auto& t : coordinate_changes()) {
      ++k;
      out.push_back({id, grid.front(), change_coordinates(base, t), "coordinate change " + std::to_string(k), k > 1});
    }
    return out;
  }
  for (const auto& p : grid) out.push_back({id, p, family(id, p), p.to_string()});
  return out;
}

std::size_t FamilySweepResult::passing() const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const FamilyReport& r) { return r.ok(); }));
}

FamilySweepResult family_sweep(const std::vector<FamilyInstance>& instances, bool parallel) {
  std::vector<FamilyReport> reports(instances.size());
  std::vector<std::string> errors(instances.size());
  for_each_index(instances.size(), parallel, [&](std::size_t i) {
    const auto& inst = instances[i];
    try {
      reports[i] = inst.transformed ? verify_instance(inst.id, inst.params, inst.arrangement)
                                    : verify_family(inst.id, inst.params);
    } catch (const std::exception& e) {
      errors[i] = std::string(to_string(inst.id)) + " " + inst.label + ": " + e.what();
    }
  });
  FamilySweepResult res;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (errors[i].empty()) {
      res.reports.push_back(std::move(reports[i]));
    } else {
      res.errors.push_back(std::move(errors[i]));
    }
  }
  return res;
}

}  // namespace logder
