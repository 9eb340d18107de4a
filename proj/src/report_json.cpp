#include "logder/report_json.hpp"

namespace logder {

Json json_of(const Scalar& c) { return c.to_string(); }

Json json_of(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

Json json_of(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(json_of(m.row(r)));
  return out;
}

Json json_of(const HomPoly& p, std::span<const std::string> names) { return p.to_string(names); }

Json json_of(const Derivation& d, std::span<const std::string> names) {
  Json comps = Json::array();
  for (const auto& c : d.components()) comps.push_back(c.to_string(names));
  return Json{{"degree", d.degree()}, {"components", comps}, {"text", d.to_string(names)}};
}

Json json_of(const Arrangement& a, std::span<const std::string> names) {
  Json forms = Json::array();
  for (const auto& l : a.forms()) forms.push_back(l.to_string(names));
  Json vars = Json::array();
  for (const auto& n : names) vars.push_back(n);
  return Json{{"vars", vars}, {"s", a.size()}, {"rank", a.rank()}, {"forms", forms}};
}

namespace {

Json degree_check(const DegreeCheck& c) {
  return Json{{"degree", c.degree}, {"dimension", c.dimension}, {"euler_dim", c.euler_dim}};
}

Json point_json(const SingularPoint& p) {
  Json inc = Json::array();
  for (auto i : p.incident) inc.push_back(i + 1);
  return Json{{"point", json_of(p.point)}, {"multiplicity", p.multiplicity}, {"lines", inc}};
}

Json size_list(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

Json json_of(const MdrResult& r, std::span<const std::string> names) {
  const auto wnames = default_var_names(r.witness.nvars());
  std::span<const std::string> use = r.essentialized ? std::span<const std::string>(wnames) : names;
  Json checked = Json::array();
  for (const auto& c : r.checked_degrees) checked.push_back(degree_check(c));
  checked.push_back(degree_check(r.at_r));
  Json quotient = Json::array();
  for (const auto& d : r.quotient_basis) quotient.push_back(json_of(d, use));
  return Json{{"r", r.r},
              {"essentialized", r.essentialized},
              {"witness", json_of(r.witness, use)},
              {"quotient_basis", quotient},
              {"degrees", checked}};
}

Json json_of(const std::vector<SingularPoint>& sing, const ArrangementStats& st, const CountFormulaReport& counts) {
  Json points = Json::array();
  for (const auto& p : sing) points.push_back(point_json(p));
  Json lines = Json::array();
  for (const auto& l : st.lines) {
    lines.push_back(Json{{"line", l.index + 1}, {"points", l.points}, {"doubles", l.doubles}, {"triples", l.triples},
                         {"star_residual", counts.line_residuals.at(l.index)}});
  }
  return Json{{"s", st.s},
              {"rank", st.rank},
              {"m", st.m},
              {"n2", st.n2},
              {"n3", st.n3},
              {"num_points", st.num_points},
              {"multiplicities", size_list(st.multiplicities)},
              {"points", points},
              {"lines", lines},
              {"global_residual", counts.global_residual},
              {"counts_ok", counts.ok()}};
}

Json json_of(const DerivationSystem& sys, const NullspaceResult& ns) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& src = sys.rows[i];
    rows.push_back(Json{{"situation", std::string(to_string(src.situation))},
                        {"relation", src.relation},
                        {"line", src.header ? Json(nullptr) : Json(src.line + 1)},
                        {"values", json_of(sys.matrix.row(i))}});
  }
  Json cols = Json::array();
  for (const auto& c : sys.column_names()) cols.push_back(c);
  Json basis = Json::array();
  Json derivations = Json::array();
  const auto names = default_var_names(3);
  for (const auto& v : ns.basis) {
    basis.push_back(json_of(v));
    derivations.push_back(json_of(reconstruct(v, sys.degree).reconstruct(), names));
  }
  const auto& g = sys.grouping;
  return Json{{"degree", sys.degree},
              {"boundaries", Json{{"j", g.j}, {"l", g.l}, {"n", g.n}}},
              {"columns", cols},
              {"rows", rows},
              {"row_count", sys.matrix.rows()},
              {"formula_rows", sys.formula_rows()},
              {"rank", ns.rank},
              {"nullity", ns.basis.size()},
              {"nullspace", basis},
              {"derivations", derivations}};
}

Json json_of(const BoundsReport& b) {
  Json out{{"s", b.s},       {"m", b.m},         {"M", b.M},
           {"alpha0", b.alpha0}, {"lower", b.lower}, {"upper", b.upper ? Json(*b.upper) : Json(nullptr)},
           {"r", b.r}};
  out["dichotomy"] = Json{{"min_points", b.dichotomy.min_points},
                          {"r_equals_s_minus_m", b.dichotomy.equals_s_minus_m},
                          {"r_at_least_min_minus_1", b.dichotomy.above_min_points},
                          {"holds", b.dichotomy.holds()}};
  out["dt_bound"] = b.dt_bound ? Json(*b.dt_bound) : Json(nullptr);
  if (b.syzygy) {
    const auto names = default_var_names(3);
    Json syz = Json::array();
    for (const auto& p : b.syzygy->syzygy) syz.push_back(p.to_string(names));
    out["coatom_syzygy"] = Json{{"point", json_of(b.syzygy->point.point)},
                                {"multiplicity", b.syzygy->point.multiplicity},
                                {"degree", b.syzygy->degree},
                                {"syzygy", syz},
                                {"contraction_zero", b.syzygy->contraction_zero},
                                {"euler_multiple", b.syzygy->euler_multiple}};
  } else {
    out["coatom_syzygy"] = nullptr;
  }
  out["counts_ok"] = b.counts_ok;
  out["ok"] = b.ok();
  return out;
}

Json json_of(const AdditionDeletionReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"statement", c.text}, {"status", std::string(to_string(c.status))}});
  }
  return Json{{"line", r.index + 1},
              {"r", r.r},
              {"r_deletion", r.r_deletion},
              {"r_restriction", r.r_restriction},
              {"r_restriction_computed", r.r_restriction_computed},
              {"restriction_size", r.restriction_size},
              {"checks", checks},
              {"ok", r.ok()}};
}

Json json_of(const AdditionDeletionSweep& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(json_of(r));
  Json collapsed = Json::array();
  for (auto i : s.collapsed) collapsed.push_back(i + 1);
  return Json{{"r", s.r}, {"lines", reports}, {"rank_collapse", collapsed}, {"ok", s.ok()}};
}

Json json_of(const FamilyParams& p) {
  Json t = Json::array();
  for (const auto& v : p.t) t.push_back(v.to_string());
  return Json{{"s", p.s},
              {"t", t},
              {"a", p.a ? Json(p.a->to_string()) : Json(nullptr)},
              {"b", p.b ? Json(p.b->to_string()) : Json(nullptr)}};
}

Json json_of(const FamilyReport& r) {
  const auto names = default_var_names(3);
  return Json{{"family", std::string(to_string(r.id))},
              {"params", json_of(r.params)},
              {"arrangement", json_of(r.arrangement, names)},
              {"multiplicities", size_list(stats(r.arrangement).multiplicities)},
              {"mdr", r.r},
              {"expected", r.expected},
              {"quotient_dim", r.quotient_dim},
              {"derivation_ok", r.derivation_ok},
              {"ok", r.ok()}};
}

Json json_of(const GraphMdr& g, const Graph& graph) {
  Json comps = Json::array();
  for (const auto& c : g.components) comps.push_back(c);
  return Json{{"n", graph.n()},
              {"edges", graph.to_string()},
              {"r", g.r},
              {"reason", std::string(to_string(g.reason))},
              {"articulation", g.articulation ? Json(*g.articulation) : Json(nullptr)},
              {"components", comps},
              {"dropped_isolated", g.dropped}};
}

Json json_of(const SaitoCertificate& c, std::span<const std::string> names) {
  Json ders = Json::array();
  for (const auto& d : c.derivations) ders.push_back(json_of(d, names));
  return Json{{"success", c.success},
              {"exponents", c.sorted_exponents()},
              {"c", c.success ? json_of(c.c) : Json(nullptr)},
              {"derivations", ders},
              {"reason", c.reason}};
}

Json json_of(const ContainmentComparison& c) {
  return Json{{"system_nullity", c.system_nullity},
              {"containment_dim", c.containment_dim},
              {"forward", c.forward},
              {"reverse", c.reverse}};
}

}  // namespace logder
