// logder: command-line front end for the arrangement library.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "logder/algebra.hpp"
#include "logder/bounds.hpp"
#include "logder/catalog.hpp"
#include "logder/derlog.hpp"
#include "logder/error.hpp"
#include "logder/graphic.hpp"
#include "logder/papermat.hpp"
#include "logder/report_json.hpp"
#include "logder/textio.hpp"

using namespace logder;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::string vec_string(std::span<const Scalar> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

int cmd_mdr(const std::string& file, bool json) {
  const auto in = read_arrangement_file(file);
  const MdrResult r = mdr(in.arrangement);
  if (json) {
    Json j = json_of(r, in.names);
    j["arrangement"] = json_of(in.arrangement, in.names);
    print_json(j);
    return kOk;
  }
  const auto wnames = r.essentialized ? default_var_names(r.witness.nvars()) : in.names;
  std::cout << "r = " << r.r << '\n';
  if (r.essentialized) std::cout << "(computed on the essentialization in " << r.witness.nvars() << " variables)\n";
  std::cout << "witness: " << r.witness.to_string(wnames) << '\n';
  std::cout << "quotient dimension at degree " << r.r << ": " << r.quotient_basis.size() << '\n';
  std::cout << "degree  dim Derlog_d  dim S_{d-1} theta_E\n";
  auto row = [](const DegreeCheck& c) {
    std::cout << std::setw(6) << c.degree << "  " << std::setw(12) << c.dimension << "  " << std::setw(19) << c.euler_dim
              << '\n';
  };
  for (const auto& c : r.checked_degrees) row(c);
  row(r.at_r);
  return kOk;
}

int cmd_sing(const std::string& file, bool json) {
  const auto in = read_arrangement_file(file);
  const auto sing = singular_locus(in.arrangement);
  const auto st = stats(in.arrangement, sing);
  const auto counts = check_count_formulas(in.arrangement);
  if (json) {
    print_json(json_of(sing, st, counts));
    return counts.ok() ? kOk : kCheckFailed;
  }
  std::cout << "s = " << st.s << ", rank = " << st.rank << ", m = " << st.m << ", points = " << st.num_points
            << ", n2 = " << st.n2 << ", n3 = " << st.n3 << '\n';
  for (const auto& p : sing) {
    std::vector<std::size_t> lines;
    for (auto i : p.incident) lines.push_back(i + 1);
    std::cout << "  " << vec_string(p.point) << "  m = " << p.multiplicity << "  lines " << join(lines) << '\n';
  }
  std::cout << "line  |H|  doubles  triples  sum(m_P-1)-(s-1)\n";
  for (const auto& l : st.lines) {
    std::cout << std::setw(4) << l.index + 1 << std::setw(5) << l.points << std::setw(9) << l.doubles << std::setw(9)
              << l.triples << std::setw(18) << counts.line_residuals[l.index] << '\n';
  }
  std::cout << "per-line count formula: " << mark(std::all_of(counts.line_residuals.begin(), counts.line_residuals.end(),
                                                                [](long r) { return r == 0; }))
            << "\nglobal count formula: " << mark(counts.global_residual == 0) << '\n';
  return counts.ok() ? kOk : kCheckFailed;
}

int cmd_matrix(const std::string& file, int degree, const std::string& csv, bool json) {
  const auto in = read_arrangement_file(file);
  const DerivationSystem sys = derivation_system(in.arrangement, degree);
  const NullspaceResult ns = rref_nullspace(sys.matrix);
  bool all_log = true;
  for (const auto& v : ns.basis) all_log = all_log && is_logarithmic(in.arrangement, reconstruct(v, degree).reconstruct());
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + csv);
    out << sys.matrix.to_csv();
  }
  if (json) {
    Json j = json_of(sys, ns);
    j["all_logarithmic"] = all_log;
    print_json(j);
    return all_log ? kOk : kCheckFailed;
  }
  const auto& g = sys.grouping;
  std::cout << "degree " << degree << ", s = " << g.s << ", boundaries j = " << g.j << ", l = " << g.l << ", n = " << g.n
            << '\n';
  const auto cols = sys.column_names();
  std::cout << "columns:";
  for (const auto& c : cols) std::cout << ' ' << c;
  std::cout << '\n';
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& src = sys.rows[i];
    std::cout << "  " << vec_string(sys.matrix.row(i)) << "   [" << to_string(src.situation) << ' ' << src.relation;
    if (!src.header) std::cout << ", line " << src.line + 1;
    std::cout << "]\n";
  }
  std::cout << "rows = " << sys.matrix.rows() << " (formula " << sys.formula_rows() << "), rank = " << ns.rank
            << ", nullity = " << ns.basis.size() << '\n';
  for (const auto& v : ns.basis) {
    std::cout << "  null vector " << vec_string(v) << "\n    derivation "
              << reconstruct(v, degree).reconstruct().to_string(in.names) << '\n';
  }
  std::cout << "reconstructed derivations logarithmic: " << mark(all_log) << '\n';
  return all_log ? kOk : kCheckFailed;
}

int cmd_bounds(const std::string& file) {
  const auto in = read_arrangement_file(file);
  const BoundsReport b = bounds_report(in.arrangement);
  print_json(json_of(b));
  return b.ok() ? kOk : kCheckFailed;
}

int cmd_adcheck(const std::string& file, int line, bool json) {
  const auto in = read_arrangement_file(file);
  AdditionDeletionSweep sweep;
  if (line > 0) {
    auto rep = addition_deletion_check(in.arrangement, static_cast<std::size_t>(line - 1));
    sweep.r = rep.r;
    sweep.reports.push_back(std::move(rep));
  } else {
    sweep = addition_deletion_all(in.arrangement);
  }
  if (json) {
    print_json(json_of(sweep));
    return sweep.ok() ? kOk : kCheckFailed;
  }
  std::cout << "r = " << sweep.r << '\n';
  for (const auto& rep : sweep.reports) {
    std::cout << "line " << rep.index + 1 << ": r' = " << rep.r_deletion << ", r'' = |H|-1 = " << rep.r_restriction
              << " (restriction solver " << rep.r_restriction_computed << ")\n";
    for (const auto& c : rep.checks) std::cout << "  " << c.name << "  " << c.text << "  " << to_string(c.status) << '\n';
  }
  for (auto i : sweep.collapsed) std::cout << "line " << i + 1 << ": skipped, deletion lowers the rank\n";
  std::cout << "all implications hold: " << mark(sweep.ok()) << '\n';
  return sweep.ok() ? kOk : kCheckFailed;
}

int cmd_family(const std::string& type, int s, const std::vector<std::string>& t, const std::string& a,
               const std::string& b, bool verify, bool json) {
  const FamilyId id = parse_family(type);
  FamilyParams p = default_params(id, s);
  if (!t.empty()) {
    p.t.clear();
    for (const auto& v : t) p.t.push_back(parse_scalar(v));
  }
  if (!a.empty()) p.a = parse_scalar(a);
  if (!b.empty()) p.b = parse_scalar(b);
  if (!verify) {
    const Arrangement arr = family(id, p);
    if (json) {
      print_json(Json{{"family", std::string(to_string(id))},
                      {"params", json_of(p)},
                      {"arrangement", json_of(arr, default_var_names(3))}});
    } else {
      std::cout << "# family " << to_string(id) << " " << p.to_string() << '\n' << format_arrangement(arr);
    }
    return kOk;
  }
  const FamilyReport rep = verify_family(id, p);
  if (json) {
    print_json(json_of(rep));
  } else {
    std::cout << "family " << to_string(id) << " " << p.to_string() << '\n';
    std::cout << "multiplicities " << join(stats(rep.arrangement).multiplicities) << '\n';
    std::cout << "mdr = " << rep.r << " " << mark(rep.r == rep.expected) << '\n';
    std::cout << "closed-form derivation check " << mark(rep.derivation_ok) << '\n';
  }
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_dual(const std::string& file, int degree, bool json) {
  const auto in = read_arrangement_file(file);
  const Arrangement& arr = in.arrangement;
  const bool triangle = arr.has_coordinate_triangle();
  std::vector<Vector> points;
  if (triangle) {
    points = dual_points(arr);
  } else {
    for (const auto& l : arr.forms()) points.push_back(l.coeffs());
  }
  const int max_d = degree > 0 ? degree : 4;
  Json table = Json::array();
  for (int d = 1; d <= max_d; ++d) {
    table.push_back(Json{{"degree", d}, {"vanishing_dimension", vanishing_dimension(points, d)}});
  }
  std::vector<int> degrees;
  if (triangle) {
    if (degree == 2 || degree == 3) {
      degrees.push_back(degree);
    } else if (degree <= 0) {
      degrees = {2, 3};
    }
  }
  bool ok = true;
  Json checks = Json::array();
  for (int d : degrees) {
    const auto sys = derivation_system(arr, d);
    const auto ns = rref_nullspace(sys.matrix);
    Json vecs = Json::array();
    for (const auto& v : ns.basis) {
      const bool c = dual_containment(arr, v, d);
      ok = ok && c;
      vecs.push_back(Json{{"vector", json_of(v)}, {"contained", c}});
    }
    Json cj = json_of(compare_containment(arr, d));
    cj["degree"] = d;
    cj["solutions"] = vecs;
    checks.push_back(cj);
  }
  if (json) {
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back(json_of(p));
    print_json(Json{{"points", pts}, {"vanishing", table}, {"containment", checks}, {"ok", ok}});
    return ok ? kOk : kCheckFailed;
  }
  std::cout << "dual points:\n";
  for (const auto& p : points) std::cout << "  " << vec_string(p) << '\n';
  for (const auto& row : table) {
    std::cout << "vanishing_dimension(d = " << row["degree"].get<int>() << ") = " << row["vanishing_dimension"].get<std::size_t>()
              << '\n';
  }
  if (!triangle) std::cout << "no coordinate triangle: containment checks skipped\n";
  for (const auto& c : checks) {
    std::cout << "degree " << c["degree"].get<int>() << ": system nullity " << c["system_nullity"].get<std::size_t>()
              << ", containment space " << c["containment_dim"].get<std::size_t>() << ", solutions contained "
              << mark(c["forward"].get<bool>()) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_graph(const std::string& edges, const std::string& json_file, int n, bool oracle, bool json) {
  Graph g;
  if (!json_file.empty()) {
    g = parse_graph_json(read_text_file(json_file));
  } else if (!edges.empty()) {
    g = parse_edge_list(edges, n);
  } else {
    throw Error(ErrorKind::InvalidArgument, "give --edges or --adjacency");
  }
  const GraphMdr res = mdr_graph(g);
  const bool squares = squares_derivation_check(g);
  std::optional<int> solver;
  if (oracle) solver = mdr(graphic_arrangement(g)).r;
  const bool ok = squares && (!solver || *solver == res.r);
  if (json) {
    Json j = json_of(res, g);
    j["squares_derivation"] = squares;
    j["solver_r"] = solver ? Json(*solver) : Json(nullptr);
    j["ok"] = ok;
    print_json(j);
    return ok ? kOk : kCheckFailed;
  }
  std::cout << res.description() << '\n';
  if (!res.dropped.empty()) std::cout << "isolated vertices dropped: " << res.dropped.size() << '\n';
  std::cout << "squares derivation logarithmic " << mark(squares) << '\n';
  if (solver) std::cout << "generic solver: r = " << *solver << " " << mark(*solver == res.r) << '\n';
  return ok ? kOk : kCheckFailed;
}

int cmd_saito(const std::string& file, const std::string& derivations, bool json) {
  const auto in = read_arrangement_file(file);
  const SaitoCertificate cert = derivations.empty()
                                    ? auto_saito(in.arrangement)
                                    : saito_check(in.arrangement, read_derivation_file(derivations, in.names));
  if (json) {
    print_json(json_of(cert, in.names));
    return cert.success ? kOk : kCheckFailed;
  }
  if (cert.success) {
    std::cout << "free, exponents (";
    const auto e = cert.sorted_exponents();
    for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
    std::cout << ") " << mark(true) << "\ndet = " << cert.c.to_string() << " * F\n";
    for (const auto& d : cert.derivations) std::cout << "  " << d.to_string(in.names) << '\n';
  } else {
    std::cout << "no certificate: " << cert.reason << '\n';
  }
  return cert.success ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic derivations and mdr of hyperplane arrangements"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string file, csv, derivations, type, a, b, edges, adjacency;
  int degree = 2, line = 0, s = 0, n = 0, dual_degree = 0;
  bool verify = false, oracle = false;
  std::vector<std::string> t;

  auto* mdr_cmd = app.add_subcommand("mdr", "Minimal degree of a Jacobian relation");
  mdr_cmd->add_option("file", file, "Arrangement file")->required();
  auto* sing_cmd = app.add_subcommand("sing", "Singular points and count formulas");
  sing_cmd->add_option("file", file, "Arrangement file")->required();
  auto* matrix_cmd = app.add_subcommand("matrix", "Specialized coefficient matrix of degree 2 or 3");
  matrix_cmd->add_option("file", file, "Arrangement file")->required();
  matrix_cmd->add_option("--degree", degree, "2 or 3")->check(CLI::IsMember({2, 3}));
  matrix_cmd->add_option("--csv", csv, "Write the matrix as CSV");
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds report (JSON)");
  bounds_cmd->add_option("file", file, "Arrangement file")->required();
  auto* ad_cmd = app.add_subcommand("adcheck", "Addition-deletion checks");
  ad_cmd->add_option("file", file, "Arrangement file")->required();
  ad_cmd->add_option("--line", line, "1-based line (default: all)");
  auto* fam_cmd = app.add_subcommand("family", "Emit or verify a classification instance");
  fam_cmd->add_option("--type", type, "Family name (I, II, III, Ia, ..., Vb)")->required();
  fam_cmd->add_option("--s", s, "Size parameter");
  fam_cmd->add_option("--t", t, "t_j values")->delimiter(',');
  fam_cmd->add_option("--a", a, "Parameter a");
  fam_cmd->add_option("--b", b, "Parameter b");
  fam_cmd->add_flag("--verify", verify, "Compute mdr and check the closed forms");
  auto* dual_cmd = app.add_subcommand("dual", "Dual points, vanishing dimensions, containment");
  dual_cmd->add_option("file", file, "Arrangement file")->required();
  dual_cmd->add_option("--degree", dual_degree, "Largest degree for the table; 2 or 3 restricts the containment check");
  auto* graph_cmd = app.add_subcommand("graph", "mdr of a graphic arrangement");
  graph_cmd->add_option("--edges", edges, "Edge list such as 1-2,2-3");
  graph_cmd->add_option("--adjacency", adjacency, "Graph JSON file");
  graph_cmd->add_option("--n", n, "Vertex count (default: largest vertex)");
  graph_cmd->add_flag("--oracle", oracle, "Cross-check with the generic solver");
  auto* saito_cmd = app.add_subcommand("saito", "Freeness certificate");
  saito_cmd->add_option("file", file, "Arrangement file")->required();
  saito_cmd->add_option("--derivations", derivations, "Derivation file (default: search)");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json, "Machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*mdr_cmd) return cmd_mdr(file, json);
    if (*sing_cmd) return cmd_sing(file, json);
    if (*matrix_cmd) return cmd_matrix(file, degree, csv, json);
    if (*bounds_cmd) return cmd_bounds(file);
    if (*ad_cmd) return cmd_adcheck(file, line, json);
    if (*fam_cmd) return cmd_family(type, s, t, a, b, verify, json);
    if (*dual_cmd) return cmd_dual(file, dual_degree, json);
    if (*graph_cmd) return cmd_graph(edges, adjacency, n, oracle, json);
    if (*saito_cmd) return cmd_saito(file, derivations, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}
