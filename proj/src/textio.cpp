#include "logder/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace logder {

namespace {

using Sparse = std::map<Exponent, Scalar>;

void add_term(Sparse& p, const Exponent& e, const Scalar& c) {
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      add_term(out, e, ca * cb);
    }
  }
  return out;
}

int degree_of(const Exponent& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> names, bool linear)
      : s_(text), names_(names.begin(), names.end()), linear_(linear) {}

  Sparse parse() {
    skip();
    if (pos_ == s_.size()) fail(ErrorKind::ParseError, "empty expression");
    Sparse p = expr(true);
    if (pos_ != s_.size()) fail(ErrorKind::ParseError, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& what) const { fail_at(kind, pos_, what); }
  [[noreturn]] static void fail_at(ErrorKind kind, std::size_t pos, const std::string& what) {
    throw SyntaxError(kind, pos, what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Sparse constant(const Scalar& c) const {
    Sparse p;
    if (!c.is_zero()) p.emplace(Exponent(names_.size(), 0), c);
    return p;
  }

  Sparse expr(bool top) {
    Sparse out;
    bool first = true;
    for (;;) {
      skip();
      Scalar sign(1);
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        if (s_[pos_] == '-') sign = Scalar(-1);
        ++pos_;
      } else if (!first) {
        break;
      }
      skip();
      const std::size_t start = pos_;
      Sparse t = term();
      if (top && linear_) {
        for (const auto& [e, c] : t) {
          if (degree_of(e) != 1) {
            fail_at(ErrorKind::NonlinearTerm, start, degree_of(e) == 0 ? "constant term" : "term of degree " +
                                                                                             std::to_string(degree_of(e)));
          }
        }
      }
      for (const auto& [e, c] : t) add_term(out, e, sign * c);
      first = false;
    }
    return out;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Sparse term() {
    Sparse t = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        t = mul(t, factor());
      } else if (peek('/')) {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        Sparse d = factor();
        if (d.size() != 1 || degree_of(d.begin()->first) != 0) fail_at(ErrorKind::ParseError, at, "divisor must be a nonzero constant");
        t = mul(t, constant(d.begin()->second.inverse()));
      } else if (starts_factor()) {
        t = mul(t, factor());
      } else {
        return t;
      }
    }
  }

  Sparse factor() {
    Sparse base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      int e = 0;
      bool digits = false;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_++] - '0');
        digits = true;
        if (e > 1000) fail_at(ErrorKind::ParseError, at, "exponent too large");
      }
      if (!digits) fail_at(ErrorKind::ParseError, at, "expected an exponent");
      Sparse p = constant(Scalar(1));
      for (int i = 0; i < e; ++i) p = mul(p, base);
      return p;
    }
    return base;
  }

  Sparse atom() {
    skip();
    if (pos_ >= s_.size()) fail(ErrorKind::ParseError, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse inner = expr(false);
      if (!peek(')')) fail(ErrorKind::ParseError, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Scalar(Rational(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return identifier(std::string(s_.substr(start, pos_ - start)), start);
    }
    fail(ErrorKind::ParseError, std::string("unexpected '") + c + "'");
  }

  std::optional<Sparse> single(const std::string& id) const {
    const auto it = std::find(names_.begin(), names_.end(), id);
    if (it != names_.end()) {
      Exponent e(names_.size(), 0);
      e[static_cast<std::size_t>(it - names_.begin())] = 1;
      return Sparse{{e, Scalar(1)}};
    }
    if (id == "w") return constant(Scalar::omega());
    return std::nullopt;
  }

  Sparse identifier(const std::string& id, std::size_t start) const {
    if (auto p = single(id)) return *p;
    // Juxtaposed one-letter names such as "xy".
    Sparse out = constant(Scalar(1));
    for (std::size_t k = 0; k < id.size(); ++k) {
      auto p = single(std::string(1, id[k]));
      if (!p) fail_at(ErrorKind::ParseError, start, "unknown variable '" + id + "'");
      out = mul(out, *p);
    }
    return out;
  }

  std::string_view s_;
  std::vector<std::string> names_;
  bool linear_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct Line {
  std::size_t number;
  std::string text;
};

/// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string t = trim(line);
    if (!t.empty()) out.push_back({number, std::move(t)});
    start = end + 1;
  }
  return out;
}

[[noreturn]] void rethrow_with_line(const Error& e, std::size_t line) {
  if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) {
    throw SyntaxError(se->kind(), se->position(), "line " + std::to_string(line) + ": " + se->detail());
  }
  throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.what());
}

/// Names from a "vars ..." line, or empty when the line is not a declaration.
std::optional<std::vector<std::string>> declaration(const std::string& line) {
  auto toks = split_ws(line);
  if (toks.empty() || toks[0] != "vars") return std::nullopt;
  toks.erase(toks.begin());
  if (toks.empty()) throw Error(ErrorKind::ParseError, "empty variable declaration");
  if (toks.size() == 1 && std::all_of(toks[0].begin(), toks[0].end(), [](unsigned char c) { return std::isdigit(c); })) {
    const int n = std::stoi(toks[0]);
    if (n < 1) throw Error(ErrorKind::ParseError, "variable count must be positive");
    return default_var_names(n);
  }
  for (const auto& t : toks) {
    if (t == "w") throw Error(ErrorKind::ParseError, "'w' is reserved for the cube root of unity");
    if (std::count(toks.begin(), toks.end(), t) > 1) throw Error(ErrorKind::ParseError, "repeated variable " + t);
  }
  return toks;
}

std::optional<Vector> as_tuple(const std::string& line) {
  const auto toks = split_ws(line);
  if (toks.size() < 2) return std::nullopt;
  Vector v;
  for (const auto& t : toks) {
    try {
      v.push_back(parse_scalar(t));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return v;
}

}  // namespace

HomPoly parse_polynomial(std::string_view text, std::span<const std::string> names, int zero_degree) {
  const Sparse p = PolyParser(text, names, false).parse();
  const int n = static_cast<int>(names.size());
  if (p.empty()) return HomPoly(n, zero_degree);
  const int d = degree_of(p.begin()->first);
  HomPoly out(n, d);
  for (const auto& [e, c] : p) {
    if (degree_of(e) != d) throw SyntaxError(ErrorKind::ParseError, 0, "polynomial is not homogeneous");
    out[monomial_index(e)] = c;
  }
  return out;
}

Vector parse_linear_coeffs(std::string_view text, std::span<const std::string> names) {
  const Sparse p = PolyParser(text, names, true).parse();
  Vector v(names.size());
  for (const auto& [e, c] : p) v[static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin())] = c;
  if (is_zero_vector(v)) throw SyntaxError(ErrorKind::ParseError, 0, "zero linear form");
  return v;
}

LinearForm parse_linear_form(std::string_view text, std::span<const std::string> names) {
  return LinearForm(parse_linear_coeffs(text, names));
}

ArrangementText parse_arrangement(std::string_view text) {
  const auto lines = content_lines(text);
  std::optional<std::vector<std::string>> names;
  std::vector<LinearForm> forms;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Line& ln = lines[k];
    try {
      if (auto decl = declaration(ln.text)) {
        if (k != 0) throw Error(ErrorKind::ParseError, "variable declaration must come first");
        names = std::move(decl);
        continue;
      }
      if (auto tuple = as_tuple(ln.text)) {
        if (!names) names = default_var_names(static_cast<int>(tuple->size()));
        if (tuple->size() != names->size()) {
          throw Error(ErrorKind::ParseError, "expected " + std::to_string(names->size()) + " coefficients, got " +
                                                 std::to_string(tuple->size()));
        }
        forms.emplace_back(std::move(*tuple));
        continue;
      }
      if (!names) names = default_var_names(3);
      forms.push_back(parse_linear_form(ln.text, *names));
    } catch (const Error& e) {
      rethrow_with_line(e, ln.number);
    }
  }
  if (forms.empty()) throw Error(ErrorKind::ParseError, "no linear forms");
  return {*names, Arrangement(std::move(forms))};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ArrangementText read_arrangement_file(const std::string& path) { return parse_arrangement(read_text_file(path)); }

std::string format_arrangement(const Arrangement& a, std::span<const std::string> names) {
  std::string out = "vars";
  for (const auto& n : names) out += " " + n;
  out += "\n";
  for (const auto& l : a.forms()) out += l.to_string(names) + "\n";
  return out;
}

std::string format_arrangement(const Arrangement& a) {
  const auto names = default_var_names(a.nvars());
  return format_arrangement(a, names);
}

std::vector<Derivation> parse_derivations(std::string_view text, std::span<const std::string> default_names) {
  const auto lines = content_lines(text);
  std::vector<std::string> names(default_names.begin(), default_names.end());
  std::vector<Derivation> out;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Line& ln = lines[k];
    try {
      if (auto decl = declaration(ln.text)) {
        if (k != 0) throw Error(ErrorKind::ParseError, "variable declaration must come first");
        names = std::move(*decl);
        continue;
      }
      std::vector<std::string> parts;
      std::size_t start = 0;
      for (;;) {
        const std::size_t semi = ln.text.find(';', start);
        parts.push_back(ln.text.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      if (parts.size() != names.size()) {
        throw Error(ErrorKind::ParseError, "expected " + std::to_string(names.size()) + " components separated by ';'");
      }
      std::vector<HomPoly> comps;
      int degree = -1;
      for (const auto& part : parts) {
        comps.push_back(parse_polynomial(part, names, 0));
        if (!comps.back().is_zero()) {
          if (degree >= 0 && comps.back().degree() != degree) {
            throw Error(ErrorKind::ParseError, "components of different degrees");
          }
          degree = comps.back().degree();
        }
      }
      if (degree < 0) throw Error(ErrorKind::ParseError, "zero derivation");
      for (auto& c : comps) {
        if (c.is_zero()) c = HomPoly(static_cast<int>(names.size()), degree);
      }
      out.emplace_back(std::move(comps));
    } catch (const Error& e) {
      rethrow_with_line(e, ln.number);
    }
  }
  return out;
}

std::vector<Derivation> read_derivation_file(const std::string& path, std::span<const std::string> default_names) {
  return parse_derivations(read_text_file(path), default_names);
}

std::string format_derivations(const std::vector<Derivation>& ds, std::span<const std::string> names) {
  std::string out = "vars";
  for (const auto& n : names) out += " " + n;
  out += "\n";
  for (const auto& d : ds) {
    for (int i = 0; i < d.nvars(); ++i) {
      if (i > 0) out += " ; ";
      out += d[static_cast<std::size_t>(i)].to_string(names);
    }
    out += "\n";
  }
  return out;
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("graph JSON: ") + e.what());
  }
  try {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    if (j.contains("adjacency")) {
      const auto& adj = j.at("adjacency");
      n = static_cast<int>(adj.size());
      std::set<std::pair<int, int>> arcs;
      for (int i = 0; i < n; ++i) {
        for (const auto& w : adj.at(static_cast<std::size_t>(i))) {
          const int v = w.get<int>();
          if (v == i + 1) throw Error(ErrorKind::ParseError, "loop in adjacency list");
          arcs.emplace(i + 1, v);
          if (i + 1 < v) edges.emplace_back(i + 1, v);
        }
      }
      for (const auto& [u, v] : arcs) {
        if (!arcs.contains({v, u})) {
          throw Error(ErrorKind::ParseError, "adjacency lists are not symmetric (" + std::to_string(u) + " lists " +
                                                 std::to_string(v) + ")");
        }
      }
    } else {
      for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        n = std::max({n, edges.back().first, edges.back().second});
      }
      if (j.contains("n")) n = j.at("n").get<int>();
    }
    return Graph(n, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("graph JSON: ") + e.what());
  }
}

}  // namespace logder
