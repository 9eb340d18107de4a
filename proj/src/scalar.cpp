#include "logder/scalar.hpp"

#include <cctype>
#include <ostream>

#include "logder/error.hpp"

namespace logder {

const Rational& Scalar::to_rational() const {
  if (!is_rational()) {
    throw Error(ErrorKind::InvalidArgument, "scalar " + to_string() + " is not rational");
  }
  return re_;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.w_) != 0) w_ += o.w_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.w_) != 0) w_ -= o.w_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(w_) == 0 && sgn(o.w_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
  Rational bd = w_ * o.w_;
  Rational re = re_ * o.re_ - bd;
  Rational w = re_ * o.w_ + w_ * o.re_ - bd;
  re_ = std::move(re);
  w_ = std::move(w);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (sgn(w_) == 0) return Scalar(Rational(1) / re_);
  // (a + bw)^{-1} = ((a - b) - bw) / (a^2 - ab + b^2)
  Rational norm = re_ * re_ - re_ * w_ + w_ * w_;
  return Scalar(Rational((re_ - w_) / norm), Rational(-w_ / norm));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (sgn(o.w_) == 0) {
    if (sgn(o.re_) == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    re_ /= o.re_;
    if (sgn(w_) != 0) w_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.w_, b.w_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (sgn(w_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (w_ == 1) {
    out += out.empty() ? "w" : "+w";
  } else if (w_ == -1) {
    out += "-w";
  } else {
    if (!out.empty() && sgn(w_) > 0) out += "+";
    out += w_.get_str() + "*w";
  }
  return out;
}

namespace {

Rational parse_rational_digits(std::string_view text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  std::string num(text.substr(start, pos - start));
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    size_t dstart = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    den = std::string(text.substr(dstart, pos - dstart));
    if (den.empty()) {
      throw Error(ErrorKind::ParseError, "missing denominator at position " + std::to_string(pos));
    }
  }
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view s = compact;
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty scalar");
  Scalar value;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    bool have_sign = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      have_sign = true;
      ++pos;
    }
    if (pos > 0 && !have_sign) {
      throw Error(ErrorKind::ParseError, "expected sign at position " + std::to_string(pos));
    }
    Rational coef(1);
    bool have_coef = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = parse_rational_digits(s, pos);
      have_coef = true;
    }
    if (pos < s.size() && s[pos] == '*') {
      if (!have_coef) throw Error(ErrorKind::ParseError, "dangling '*'");
      ++pos;
      if (pos >= s.size() || s[pos] != 'w') {
        throw Error(ErrorKind::ParseError, "expected 'w' after '*'");
      }
    }
    bool is_w = false;
    if (pos < s.size() && s[pos] == 'w') {
      is_w = true;
      ++pos;
    }
    if (!have_coef && !is_w) {
      throw Error(ErrorKind::ParseError,
                  "unexpected character at position " + std::to_string(pos) + " in '" + compact + "'");
    }
    if (sign < 0) coef = -coef;
    value += is_w ? Scalar(Rational(0), coef) : Scalar(coef);
  }
  return value;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace logder
