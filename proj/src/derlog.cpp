#include "logder/derlog.hpp"

#include <algorithm>
#include <stdexcept>

#include "logder/algebra.hpp"
#include "logder/error.hpp"

namespace logder {

std::size_t euler_dim(int nvars, int degree) { return degree < 1 ? 0 : basis_size(nvars, degree - 1); }

namespace {

/// Rows enforcing theta(l) = 0 mod l for one form: coefficients of the remainder of
/// sum_i l_i theta_i after eliminating the pivot variable of l.
void append_form_conditions(Matrix& sys, const LinearForm& l, int degree) {
  const int n = l.nvars();
  const auto& basis = monomial_basis(n, degree);
  const std::size_t N = basis.size();
  const int p = l.pivot();
  std::vector<HomPoly> rem;
  rem.reserve(N);
  for (const auto& m : basis) rem.push_back(divide_by_linear(HomPoly::monomial(m), l).remainder);
  for (std::size_t j = 0; j < N; ++j) {
    if (basis[j][p] != 0) continue;
    Vector row(static_cast<std::size_t>(n) * N);
    bool any = false;
    for (std::size_t k = 0; k < N; ++k) {
      const Scalar& r = rem[k][j];
      if (r.is_zero()) continue;
      for (int i = 0; i < n; ++i) {
        if (l[i].is_zero()) continue;
        row[static_cast<std::size_t>(i) * N + k] = l[i] * r;
        any = true;
      }
    }
    if (any) sys.append_row(row);
  }
}

Vector euler_multiple_flat(int nvars, int degree, const Exponent& m) {
  const std::size_t N = basis_size(nvars, degree);
  Vector v(static_cast<std::size_t>(nvars) * N);
  Exponent e = m;
  for (int i = 0; i < nvars; ++i) {
    ++e[i];
    v[static_cast<std::size_t>(i) * N + monomial_index(e)] = Scalar(1);
    --e[i];
  }
  return v;
}

EchelonSpan euler_span(int nvars, int degree) {
  EchelonSpan span(static_cast<std::size_t>(nvars) * basis_size(nvars, degree));
  if (degree >= 1) {
    for (const auto& m : monomial_basis(nvars, degree - 1)) span.add(euler_multiple_flat(nvars, degree, m));
  }
  return span;
}

}  // namespace

std::vector<Vector> euler_multiples(int nvars, int degree) {
  std::vector<Vector> out;
  if (degree < 1) return out;
  for (const auto& m : monomial_basis(nvars, degree - 1)) out.push_back(euler_multiple_flat(nvars, degree, m));
  return out;
}

DerlogBasis derlog_basis(const Arrangement& a, int degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "derlog_basis: negative degree");
  const int n = a.nvars();
  Matrix sys(0, static_cast<std::size_t>(n) * basis_size(n, degree));
  for (const auto& l : a.forms()) append_form_conditions(sys, l, degree);
  const auto ns = rref_nullspace(sys);
  DerlogBasis out;
  out.degree = degree;
  out.euler_dim = euler_dim(n, degree);
  for (const auto& v : ns.basis) out.basis.push_back(Derivation::from_flat(n, degree, v));
  out.dimension = out.basis.size();
  return out;
}

bool is_logarithmic(const Arrangement& a, const Derivation& theta) {
  if (theta.nvars() != a.nvars()) throw Error(ErrorKind::InvalidArgument, "is_logarithmic: nvars mismatch");
  for (const auto& l : a.forms()) {
    if (!divide_by_linear(apply_derivation(theta, l.to_poly()), l).divisible()) return false;
  }
  return true;
}

bool is_euler_multiple(const Derivation& theta) {
  const int n = theta.nvars();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (theta[i] * HomPoly::variable(n, j) != theta[j] * HomPoly::variable(n, i)) return false;
    }
  }
  return true;
}

std::vector<Derivation> euler_quotient(const DerlogBasis& basis, int nvars) {
  const EchelonSpan euler = euler_span(nvars, basis.degree);
  EchelonSpan all = euler;
  std::vector<Derivation> out;
  for (const auto& b : basis.basis) {
    Vector v = b.flatten();
    if (all.add(v)) out.push_back(Derivation::from_flat(nvars, basis.degree, euler.reduce(std::move(v))));
  }
  return out;
}

MdrResult mdr(const Arrangement& a) {
  if (a.rank() < 2) throw Error(ErrorKind::RankTooLow, "mdr needs rank >= 2");
  const Arrangement e = essentialize(a);
  MdrResult out;
  out.essentialized = e.nvars() != a.nvars();
  const int cap = static_cast<int>(a.size()) - 1;
  for (int d = 1; d <= cap; ++d) {
    const DerlogBasis b = derlog_basis(e, d);
    DegreeCheck chk{d, b.dimension, b.euler_dim};
    if (b.dimension < b.euler_dim) {
      throw std::logic_error("derlog dimension below the Euler multiples at degree " + std::to_string(d));
    }
    if (b.dimension > b.euler_dim) {
      out.r = d;
      out.at_r = chk;
      out.quotient_basis = euler_quotient(b, e.nvars());
      out.witness = out.quotient_basis.front();
      return out;
    }
    out.checked_degrees.push_back(chk);
  }
  throw Error(ErrorKind::CapExceeded, "no non-Euler derivation up to degree s-1 = " + std::to_string(cap));
}

Vector display_coefficients(const HomPoly& p) {
  if (p.nvars() != 3) throw Error(ErrorKind::InvalidArgument, "display coefficients need 3 variables");
  if (p.degree() == 1) return p.coeffs();
  if (p.degree() == 2) {
    const auto& c = p.coeffs();
    return {c[0], c[3], c[5], c[1], c[2], c[4]};
  }
  throw Error(ErrorKind::InvalidArgument, "display coefficients exist for degrees 1 and 2 only");
}

HomPoly from_display_coefficients(std::span<const Scalar> c, int degree) {
  if (degree == 1 && c.size() == 3) return HomPoly(3, 1, Vector(c.begin(), c.end()));
  if (degree == 2 && c.size() == 6) return HomPoly(3, 2, {c[0], c[3], c[4], c[1], c[5], c[2]});
  throw Error(ErrorKind::InvalidArgument, "display coefficients exist for degrees 1 and 2 only");
}

Derivation NormalizedDerivation::reconstruct() const {
  return Derivation({HomPoly(3, qp.degree() + 1), HomPoly::variable(3, 1) * qp, HomPoly::variable(3, 2) * rp});
}

Vector NormalizedDerivation::coefficients() const {
  if (qp.degree() != 1 && qp.degree() != 2) return {};
  Vector out = display_coefficients(qp);
  Vector r = display_coefficients(rp);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

NormalizedDerivation normalize_derivation(const Arrangement& a, const Derivation& theta) {
  if (!a.has_coordinate_triangle()) {
    throw Error(ErrorKind::MissingCoordinateTriangle, "arrangement must start with x, y, z");
  }
  if (theta.nvars() != 3 || theta.degree() < 1) {
    throw Error(ErrorKind::InvalidArgument, "normalize_derivation needs a positive-degree derivation in 3 variables");
  }
  std::vector<HomPoly> primes;
  for (int i = 0; i < 3; ++i) {
    auto div = divide_by_linear(theta[i], a[i]);
    if (!div.divisible()) {
      throw Error(ErrorKind::NotLogarithmic, "component " + std::to_string(i + 1) + " is not divisible by its variable");
    }
    primes.push_back(std::move(*div.quotient));
  }
  return NormalizedDerivation{primes[1] - primes[0], primes[2] - primes[0]};
}

std::optional<HomPoly> divide_by_defining(const Arrangement& a, const HomPoly& f) {
  HomPoly q = f;
  for (const auto& l : a.forms()) {
    if (q.degree() == 0) return std::nullopt;
    auto div = divide_by_linear(q, l);
    if (!div.divisible()) return std::nullopt;
    q = std::move(*div.quotient);
  }
  return q;
}

std::vector<HomPoly> derivation_to_syzygy(const Arrangement& a, const Derivation& theta) {
  const int n = a.nvars();
  if (theta.nvars() != n) throw Error(ErrorKind::InvalidArgument, "derivation_to_syzygy: nvars mismatch");
  const HomPoly f = a.defining_polynomial();
  const HomPoly tf = apply_derivation(theta, f);
  std::optional<HomPoly> h;
  if (tf.is_zero()) {
    h = HomPoly(n, theta.degree() - 1 < 0 ? 0 : theta.degree() - 1);
  } else {
    h = divide_by_defining(a, tf);
  }
  if (!h) throw Error(ErrorKind::NotLogarithmic, "theta(F) is not divisible by F");
  const Scalar s(static_cast<long>(a.size()));
  std::vector<HomPoly> syz;
  for (int i = 0; i < n; ++i) {
    HomPoly c = theta[i] * s;
    if (theta.degree() >= 1) c -= *h * HomPoly::variable(n, i);
    syz.push_back(std::move(c));
  }
  HomPoly contraction(n, theta.degree() + static_cast<int>(a.size()) - 1);
  for (int i = 0; i < n; ++i) contraction += syz[i] * f.partial(i);
  if (!contraction.is_zero()) throw std::logic_error("syzygy does not contract to zero");
  return syz;
}

HomPoly poly_determinant(const std::vector<std::vector<HomPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "determinant of an empty matrix");
  if (n == 1) return m[0][0];
  HomPoly total;
  bool first = true;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<HomPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<HomPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    HomPoly term = m[0][c] * poly_determinant(minor);
    if (c % 2 == 1) term = -term;
    if (first) {
      total = std::move(term);
      first = false;
    } else {
      total += term;
    }
  }
  return total;
}

std::vector<int> SaitoCertificate::sorted_exponents() const {
  auto e = exponents;
  std::sort(e.begin(), e.end());
  return e;
}

SaitoCertificate saito_check(const Arrangement& a, const std::vector<Derivation>& derivations) {
  const int n = a.nvars();
  if (static_cast<int>(derivations.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "saito_check needs exactly nvars derivations");
  }
  SaitoCertificate cert;
  cert.derivations = derivations;
  int sum = 0;
  for (const auto& d : derivations) {
    if (d.nvars() != n) throw Error(ErrorKind::InvalidArgument, "saito_check: nvars mismatch");
    cert.exponents.push_back(d.degree());
    sum += d.degree();
  }
  if (sum != static_cast<int>(a.size())) {
    throw Error(ErrorKind::DegreeSumMismatch,
                "degrees sum to " + std::to_string(sum) + ", expected s = " + std::to_string(a.size()));
  }
  for (std::size_t k = 0; k < derivations.size(); ++k) {
    if (!is_logarithmic(a, derivations[k])) {
      cert.reason = "derivation " + std::to_string(k + 1) + " is not logarithmic";
      return cert;
    }
  }
  std::vector<std::vector<HomPoly>> m;
  for (const auto& d : derivations) m.push_back(d.components());
  cert.det = poly_determinant(m);
  if (cert.det.is_zero()) {
    cert.reason = "determinant vanishes";
    return cert;
  }
  const HomPoly f = a.defining_polynomial();
  const std::size_t lead = f.leading_index();
  cert.c = cert.det[lead] / f[lead];
  if (cert.c.is_zero() || cert.det != f * cert.c) {
    cert.reason = "determinant is not a scalar multiple of F";
    cert.c = Scalar(0);
    return cert;
  }
  cert.success = true;
  return cert;
}

SaitoCertificate auto_saito(const Arrangement& a) {
  const int n = a.nvars();
  const int s = static_cast<int>(a.size());
  std::vector<Derivation> gens;
  int degree_sum = 0;
  for (int d = 0; d <= s; ++d) {
    const std::size_t N = basis_size(n, d);
    EchelonSpan span(static_cast<std::size_t>(n) * N);
    for (const auto& g : gens) {
      for (const auto& m : monomial_basis(n, d - g.degree())) {
        span.add((HomPoly::monomial(m) * g).flatten());
      }
    }
    std::vector<Vector> candidates;
    if (d == 1) candidates.push_back(Derivation::euler(n).flatten());
    for (const auto& b : derlog_basis(a, d).basis) candidates.push_back(b.flatten());
    for (auto& v : candidates) {
      if (!span.add(v)) continue;
      gens.push_back(Derivation::from_flat(n, d, v));
      degree_sum += d;
      if (static_cast<int>(gens.size()) > n) {
        SaitoCertificate cert;
        cert.derivations = gens;
        for (const auto& g : gens) cert.exponents.push_back(g.degree());
        cert.reason = "more than " + std::to_string(n) + " minimal generators";
        return cert;
      }
    }
    if (static_cast<int>(gens.size()) == n || degree_sum > s) break;
  }
  if (static_cast<int>(gens.size()) != n || degree_sum != s) {
    SaitoCertificate cert;
    cert.derivations = gens;
    for (const auto& g : gens) cert.exponents.push_back(g.degree());
    cert.reason = "generator degrees do not add up to s";
    return cert;
  }
  return saito_check(a, gens);
}

}  // namespace logder
