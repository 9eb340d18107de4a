#include "logder/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "logder/algebra.hpp"
#include "logder/error.hpp"

namespace logder {

namespace detail {
extern const char* const kFamilyProfilesJson;
}

namespace {

constexpr int kMaxProfileS = 10;

struct FamilyInfo {
  FamilyId id;
  const char* name;
};

const FamilyInfo kFamilies[] = {
    {FamilyId::I, "I"},       {FamilyId::II, "II"},     {FamilyId::III, "III"},   {FamilyId::Ia, "Ia"},
    {FamilyId::Ib, "Ib"},     {FamilyId::Ic, "Ic"},     {FamilyId::Id, "Id"},     {FamilyId::IIa, "IIa"},
    {FamilyId::IIb, "IIb"},   {FamilyId::IIIa, "IIIa"}, {FamilyId::IIIb, "IIIb"}, {FamilyId::IIIc, "IIIc"},
    {FamilyId::IV, "IV"},     {FamilyId::Va, "Va"},     {FamilyId::Vb, "Vb"},
};

Vector row(const Scalar& a, const Scalar& b, const Scalar& c) { return {a, b, c}; }

void invalid(FamilyId id, const std::string& what) {
  throw Error(ErrorKind::InvalidParams, std::string(to_string(id)) + ": " + what);
}

bool fixed_size(FamilyId id) {
  switch (id) {
    case FamilyId::III:
    case FamilyId::IIIa:
    case FamilyId::IIIb:
    case FamilyId::IIIc:
    case FamilyId::IV:
    case FamilyId::Va:
    case FamilyId::Vb: return true;
    default: return false;
  }
}

int effective_s(FamilyId id, int s) {
  if (fixed_size(id) && s == 0) return s_range(id).first;
  return s;
}

std::vector<Vector> iii_rows() {
  return {row(1, 0, 0), row(0, 1, 0), row(0, 0, 1), row(1, 1, 1), row(1, 0, 1), row(0, 1, 1)};
}

const nlohmann::json& profile_table() {
  static const nlohmann::json table = nlohmann::json::parse(detail::kFamilyProfilesJson);
  return table;
}

}  // namespace

std::string_view to_string(FamilyId id) {
  for (const auto& f : kFamilies) {
    if (f.id == id) return f.name;
  }
  return "?";
}

FamilyId parse_family(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (name == f.name) return f.id;
  }
  throw Error(ErrorKind::InvalidParams, "unknown family '" + std::string(name) + "'");
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& f : kFamilies) v.push_back(f.id);
    return v;
  }();
  return ids;
}

bool is_quadratic(FamilyId id) { return id == FamilyId::I || id == FamilyId::II || id == FamilyId::III; }

int expected_mdr(FamilyId id) { return is_quadratic(id) ? 2 : 3; }

std::string FamilyParams::to_string() const {
  std::ostringstream os;
  os << "s=" << s;
  if (!t.empty()) {
    os << " t=";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i].to_string();
  }
  if (a) os << " a=" << a->to_string();
  if (b) os << " b=" << b->to_string();
  return os.str();
}

std::pair<int, int> s_range(FamilyId id) {
  switch (id) {
    case FamilyId::I: return {4, kMaxProfileS};
    case FamilyId::II: return {4, kMaxProfileS};
    case FamilyId::III: return {6, 6};
    case FamilyId::Ia: return {7, kMaxProfileS};
    case FamilyId::Ib: return {6, kMaxProfileS};
    case FamilyId::Ic: return {7, kMaxProfileS};
    case FamilyId::Id: return {6, kMaxProfileS};
    case FamilyId::IIa: return {5, kMaxProfileS};
    case FamilyId::IIb: return {6, kMaxProfileS};
    case FamilyId::IIIa:
    case FamilyId::IIIb:
    case FamilyId::IIIc:
    case FamilyId::IV: return {7, 7};
    case FamilyId::Va: return {9, 9};
    case FamilyId::Vb: return {8, 8};
  }
  return {0, 0};
}

int t_count(FamilyId id, int s) {
  switch (id) {
    case FamilyId::I:
    case FamilyId::II: return s - 3;
    case FamilyId::Ia:
    case FamilyId::Ib:
    case FamilyId::Id:
    case FamilyId::IIa:
    case FamilyId::IIb: return s - 5;
    case FamilyId::Ic: return s - 6;
    default: return 0;
  }
}

bool uses_a(FamilyId id) {
  return id == FamilyId::Id || id == FamilyId::IIa || id == FamilyId::IIIa || id == FamilyId::IIIb;
}

bool uses_b(FamilyId id) {
  return id == FamilyId::Ia || id == FamilyId::Ib || id == FamilyId::Id || id == FamilyId::IIa ||
         id == FamilyId::IIb || id == FamilyId::IIIa;
}

Arrangement family_unchecked(FamilyId id, const FamilyParams& p) {
  const int s = effective_s(id, p.s);
  const auto [lo, hi] = s_range(id);
  if (s < lo || (fixed_size(id) && s != hi)) {
    invalid(id, "s=" + std::to_string(p.s) + " outside the allowed range");
  }
  const int nt = t_count(id, s);
  if (static_cast<int>(p.t.size()) != nt) {
    invalid(id, "expected " + std::to_string(nt) + " values t_j, got " + std::to_string(p.t.size()));
  }
  for (std::size_t i = 0; i < p.t.size(); ++i) {
    if (p.t[i].is_zero()) invalid(id, "t_j must be nonzero");
    if ((id == FamilyId::II || id == FamilyId::Ic) && p.t[i].is_one()) invalid(id, "t_j must differ from 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (p.t[i] == p.t[j]) invalid(id, "t_j must be pairwise distinct");
    }
  }
  if (uses_a(id) && !p.a) invalid(id, "parameter a is required");
  if (uses_b(id) && !p.b) invalid(id, "parameter b is required");
  if (!uses_a(id) && p.a) invalid(id, "parameter a is not used by this family");
  if (!uses_b(id) && p.b) invalid(id, "parameter b is not used by this family");

  std::vector<Vector> rows{row(1, 0, 0), row(0, 1, 0), row(0, 0, 1)};
  switch (id) {
    case FamilyId::I: rows.push_back(row(1, 1, 0)); break;
    case FamilyId::II: rows.push_back(row(1, 1, 1)); break;
    case FamilyId::III: rows = iii_rows(); break;
    case FamilyId::Ia:
      rows.push_back(row(1, 1, 0));
      rows.push_back(row(*p.b, 1, 0));
      break;
    case FamilyId::Ib:
      rows.push_back(row(1, 1, 0));
      rows.push_back(row(*p.b, 0, 1));
      break;
    case FamilyId::Ic:
      rows.push_back(row(1, 1, 0));
      rows.push_back(row(0, 1, 1));
      rows.push_back(row(-1, 0, 1));
      break;
    case FamilyId::Id:
      rows.push_back(row(1, 1, 0));
      rows.push_back(row(*p.a, *p.b, 1));
      break;
    case FamilyId::IIa:
      rows.push_back(row(1, 1, 1));
      rows.push_back(row(*p.a, *p.b, 1));
      break;
    case FamilyId::IIb:
      rows.push_back(row(1, 1, 1));
      rows.push_back(row(*p.b, 1, 0));
      break;
    case FamilyId::IIIa:
      rows = iii_rows();
      rows.push_back(row(*p.a, *p.b, 1));
      break;
    case FamilyId::IIIb:
      rows = iii_rows();
      rows.push_back(row(*p.a, *p.a, 1));
      break;
    case FamilyId::IIIc:
      rows = iii_rows();
      rows.push_back(row(1, 1, 2));
      break;
    case FamilyId::IV:
      rows = {row(1, 0, 0),  row(0, 1, 0),  row(1, 0, -1), row(0, 1, -1),
              row(1, 0, -2), row(0, 1, -2), row(1, -1, 0)};
      break;
    case FamilyId::Va:
      rows.insert(rows.end(), {row(1, -1, 0), row(1, 1, 0), row(1, 0, -1), row(1, 0, 1), row(0, 1, -1),
                               row(0, 1, 1)});
      break;
    case FamilyId::Vb:
      rows.insert(rows.end(), {row(1, 0, -1), row(1, 0, 1), row(0, 1, -1), row(0, 1, 1), row(1, -1, 0)});
      break;
  }
  for (const auto& t : p.t) rows.push_back(row(0, t, 1));
  try {
    return new_arrangement(rows);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DuplicateHyperplane && e.kind() != ErrorKind::ZeroForm) throw;
    invalid(id, std::string("parameters repeat a line: ") + e.what());
  }
  return {};
}

std::string_view profile_table_json() { return detail::kFamilyProfilesJson; }

std::optional<std::vector<std::size_t>> golden_profile(FamilyId id, int s) {
  const auto& tab = profile_table().at("profiles");
  const auto fam = tab.find(std::string(to_string(id)));
  if (fam == tab.end()) return std::nullopt;
  const auto entry = fam->find(std::to_string(effective_s(id, s)));
  if (entry == fam->end()) return std::nullopt;
  return entry->get<std::vector<std::size_t>>();
}

Arrangement family(FamilyId id, const FamilyParams& p) {
  Arrangement a = family_unchecked(id, p);
  const int s = effective_s(id, p.s);
  const auto golden = golden_profile(id, s);
  if (!golden) invalid(id, "no stored multiplicity profile for s=" + std::to_string(s));
  const auto observed = stats(a).multiplicities;
  if (observed != *golden) {
    std::string msg = "extra concurrencies: multiplicity profile [";
    for (std::size_t i = 0; i < observed.size(); ++i) msg += (i ? "," : "") + std::to_string(observed[i]);
    msg += "] differs from the family's";
    invalid(id, msg);
  }
  return a;
}

namespace {

std::vector<Scalar> t_values(FamilyId id) {
  std::vector<Scalar> out{1, 2, 3, 5, -1};
  if (id == FamilyId::II || id == FamilyId::Ic) out.erase(out.begin());
  return out;
}

const std::vector<Scalar>& ab_values() {
  static const std::vector<Scalar> v{2, 3, -1, Scalar(Rational(1, 2))};
  return v;
}

void combinations(const std::vector<Scalar>& pool, int k, std::size_t start, std::vector<Scalar>& cur,
                  std::vector<std::vector<Scalar>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    combinations(pool, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<FamilyParams> grid_for_s(FamilyId id, int s) {
  std::vector<std::vector<Scalar>> ts;
  std::vector<Scalar> cur;
  combinations(t_values(id), t_count(id, s), 0, cur, ts);
  std::vector<std::optional<Scalar>> as{std::nullopt}, bs{std::nullopt};
  if (uses_a(id)) as.assign(ab_values().begin(), ab_values().end());
  if (uses_b(id)) bs.assign(ab_values().begin(), ab_values().end());
  std::vector<FamilyParams> out;
  for (const auto& t : ts) {
    for (const auto& a : as) {
      for (const auto& b : bs) {
        FamilyParams p{s, t, a, b};
        try {
          family(id, p);
          out.push_back(std::move(p));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::InvalidParams) throw;
        }
      }
    }
  }
  return out;
}

}  // namespace

FamilyParams default_params(FamilyId id, int s) {
  if (s == 0) s = s_range(id).first;
  auto grid = grid_for_s(id, s);
  if (grid.empty()) invalid(id, "no valid grid parameters for s=" + std::to_string(s));
  return grid.front();
}

std::vector<FamilyParams> parameter_grid(FamilyId id, int s_max) {
  std::vector<FamilyParams> out;
  const auto [lo, hi] = s_range(id);
  for (int s = lo; s <= std::min(hi, s_max); ++s) {
    auto g = grid_for_s(id, s);
    out.insert(out.end(), std::make_move_iterator(g.begin()), std::make_move_iterator(g.end()));
  }
  return out;
}

std::vector<NormalizedDerivation> expected_quadratic_derivation(FamilyId id, const FamilyParams& p) {
  if (!is_quadratic(id)) {
    throw Error(ErrorKind::WrongFamily, std::string(to_string(id)) + " is not a quadratic family");
  }
  auto lin = [](const Scalar& a, const Scalar& b, const Scalar& c) { return HomPoly(3, 1, {a, b, c}); };
  std::vector<NormalizedDerivation> out;
  switch (id) {
    case FamilyId::I:
      out.push_back({lin(1, 1, 0), lin(1, 1, 0)});
      if (effective_s(id, p.s) == 4 && p.t.size() == 1) out.push_back({lin(0, 0, 0), lin(0, p.t[0], 1)});
      break;
    case FamilyId::II: out.push_back({lin(1, 1, 1), lin(1, 1, 1)}); break;
    default: out.push_back({lin(1, 1, 2), lin(1, 0, 1)}); break;
  }
  const Arrangement a = family_unchecked(id, p);
  for (const auto& nd : out) {
    if (!is_logarithmic(a, nd.reconstruct())) {
      throw std::logic_error("closed-form quadratic derivation is not logarithmic for " + std::string(to_string(id)));
    }
  }
  return out;
}

std::pair<Arrangement, LinearForm> base_and_added_line(FamilyId id, const FamilyParams& p) {
  const Arrangement a = family_unchecked(id, p);
  std::size_t added = 0;
  switch (id) {
    case FamilyId::Ia:
    case FamilyId::Ib:
    case FamilyId::Id:
    case FamilyId::IIa:
    case FamilyId::IIb: added = 4; break;
    case FamilyId::Ic: added = 5; break;
    case FamilyId::IIIa:
    case FamilyId::IIIb:
    case FamilyId::IIIc: added = 6; break;
    default:
      throw Error(ErrorKind::WrongFamily, std::string(to_string(id)) + " is not built by adding a line");
  }
  return {delete_index(a, added), a[added]};
}

namespace {

bool spans_quotient(const Arrangement& a, const std::vector<NormalizedDerivation>& expected) {
  const std::size_t cols = 3 * basis_size(3, 2);
  EchelonSpan ours(cols), truth(cols);
  for (const auto& v : euler_multiples(3, 2)) {
    ours.add(v);
    truth.add(v);
  }
  for (const auto& nd : expected) ours.add(nd.reconstruct().flatten());
  for (const auto& b : derlog_basis(a, 2).basis) truth.add(b.flatten());
  if (ours.dim() != truth.dim()) return false;
  for (const auto& nd : expected) {
    if (!truth.contains(nd.reconstruct().flatten())) return false;
  }
  return true;
}

Derivation vb_cubic() {
  const int x2[3] = {2, 0, 0};
  const int y2[3] = {0, 2, 0};
  const int z2[3] = {0, 0, 2};
  NormalizedDerivation nd{HomPoly::monomial(y2) - HomPoly::monomial(x2), HomPoly::monomial(z2) - HomPoly::monomial(x2)};
  return nd.reconstruct();
}

}  // namespace

FamilyReport verify_instance(FamilyId id, const FamilyParams& p, const Arrangement& a) {
  FamilyReport rep;
  rep.id = id;
  rep.params = p;
  rep.arrangement = a;
  rep.expected = expected_mdr(id);
  const MdrResult res = mdr(a);
  rep.r = res.r;
  rep.quotient_dim = res.quotient_basis.size();
  return rep;
}

FamilyReport verify_family(FamilyId id, const FamilyParams& p) {
  const Arrangement a = family(id, p);
  FamilyReport rep = verify_instance(id, p, a);
  if (is_quadratic(id)) {
    rep.derivation_ok = spans_quotient(a, expected_quadratic_derivation(id, p));
  } else if (id == FamilyId::Vb) {
    const Derivation th = vb_cubic();
    rep.derivation_ok = is_logarithmic(a, th) && !is_euler_multiple(th);
  }
  return rep;
}

Decomposition cubic_shape_decomposition(const Arrangement& base, const LinearForm& l, const Derivation& theta,
                                        const DecompositionHints& hints) {
  if (base.nvars() != 3 || theta.nvars() != 3 || theta.degree() != 3) {
    throw Error(ErrorKind::InvalidArgument, "decomposition needs a cubic derivation in 3 variables");
  }
  const Arrangement full = add_form(base, l);
  if (!is_logarithmic(full, theta)) throw Error(ErrorKind::InvalidArgument, "theta is not logarithmic for base + l");
  if (is_euler_multiple(theta)) throw Error(ErrorKind::InvalidArgument, "theta is an Euler multiple");

  Decomposition out;
  out.multiplicities = stats(full).multiplicities;
  out.rho2 = hints.rho2 ? *hints.rho2 : euler_quotient(derlog_basis(base, 2), 3);
  if (out.rho2.empty()) throw Error(ErrorKind::InvalidArgument, "base has no quadratic derivation");
  out.hypothesis = true;
  for (const auto& r2 : out.rho2) {
    if (r2.degree() != 2 || !is_logarithmic(base, r2)) {
      throw Error(ErrorKind::InvalidArgument, "rho2 must be quadratic and logarithmic for the base");
    }
    if (divide_by_linear(apply_derivation(r2, l.to_poly()), l).divisible()) out.hypothesis = false;
  }

  const std::size_t cols = 3 * basis_size(3, 3);
  std::vector<Vector> gens = euler_multiples(3, 3);
  const std::size_t n_euler = gens.size();
  std::vector<Vector> rho2_gens;
  for (const auto& r2 : out.rho2) {
    for (int i = 0; i < 3; ++i) rho2_gens.push_back((HomPoly::variable(3, i) * r2).flatten());
  }
  if (hints.rho3) {
    out.rho3_basis = *hints.rho3;
    for (const auto& r3 : out.rho3_basis) {
      if (r3.degree() != 3 || !is_logarithmic(base, r3)) {
        throw Error(ErrorKind::InvalidArgument, "rho3 must be cubic and logarithmic for the base");
      }
    }
  } else {
    EchelonSpan known(cols);
    for (const auto& g : gens) known.add(g);
    for (const auto& g : rho2_gens) known.add(g);
    for (const auto& b : derlog_basis(base, 3).basis) {
      if (known.add(b.flatten())) out.rho3_basis.push_back(b);
    }
  }
  // rho3 columns precede the x_i rho2 columns, so overlaps land in rho3.
  for (const auto& r3 : out.rho3_basis) gens.push_back(r3.flatten());
  const std::size_t n_rho2_start = gens.size();
  gens.insert(gens.end(), rho2_gens.begin(), rho2_gens.end());

  Matrix sys(cols, gens.size() + 1);
  const Vector th = theta.flatten();
  for (std::size_t r = 0; r < cols; ++r) {
    for (std::size_t c = 0; c < gens.size(); ++c) sys(r, c) = gens[c][r];
    sys(r, gens.size()) = th[r];
  }
  const auto red = rref(std::move(sys));
  if (!red.pivots.empty() && red.pivots.back() == gens.size()) {
    throw Error(ErrorKind::NotDecomposable, "theta is not l' rho2 + rho3 modulo Euler multiples");
  }
  Vector coef(gens.size());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) coef[red.pivots[i]] = red.reduced(i, gens.size());

  out.rho3_coeffs.assign(coef.begin() + static_cast<std::ptrdiff_t>(n_euler),
                         coef.begin() + static_cast<std::ptrdiff_t>(n_rho2_start));
  out.pure = is_zero_vector(out.rho3_coeffs);
  Scalar scale(1);
  if (!out.pure) {
    scale = std::find_if(out.rho3_coeffs.begin(), out.rho3_coeffs.end(), [](const Scalar& c) { return !c.is_zero(); })
                ->inverse();
  } else {
    auto first = std::find_if(coef.begin() + static_cast<std::ptrdiff_t>(n_rho2_start), coef.end(),
                              [](const Scalar& c) { return !c.is_zero(); });
    if (first == coef.end()) {
      throw std::logic_error("non-Euler theta decomposed with zero coefficients");
    }
    scale = first->inverse();
  }
  for (auto& c : coef) c *= scale;
  for (auto& c : out.rho3_coeffs) c *= scale;

  Derivation rebuilt(3, 3);
  for (std::size_t k = 0; k < out.rho2.size(); ++k) {
    const std::size_t off = n_rho2_start + 3 * k;
    HomPoly lp(3, 1, {coef[off], coef[off + 1], coef[off + 2]});
    rebuilt += lp * out.rho2[k];
    out.lprime.push_back(std::move(lp));
  }
  out.rho3 = Derivation(3, 3);
  for (std::size_t k = 0; k < out.rho3_basis.size(); ++k) {
    if (!out.rho3_coeffs[k].is_zero()) out.rho3 += out.rho3_basis[k] * out.rho3_coeffs[k];
  }
  rebuilt += out.rho3;
  out.reconstructed_logarithmic = is_logarithmic(full, rebuilt) && !is_euler_multiple(rebuilt);
  return out;
}

}  // namespace logder
