#include "surfalg/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "surfalg/common.hpp"

namespace surfalg::laurent {

TruncatedLaurent::TruncatedLaurent(long lead, std::vector<Rational> coeffs, long precision)
    : lead_(lead), coeffs_(std::move(coeffs)), prec_(precision) {
  normalize();
}

void TruncatedLaurent::normalize() {
  // Drop stored coefficients at or beyond the precision window.
  if (lead_ + static_cast<long>(coeffs_.size()) > prec_) {
    long keep = prec_ - lead_;
    if (keep < 0) keep = 0;
    coeffs_.resize(static_cast<size_t>(keep));
  }
  size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
    lead_ += static_cast<long>(first);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) lead_ = 0;
}

TruncatedLaurent TruncatedLaurent::zero(long precision) {
  return TruncatedLaurent(0, {}, precision);
}

TruncatedLaurent TruncatedLaurent::constant(const Rational& c, long precision) {
  return TruncatedLaurent(0, {c}, precision);
}

TruncatedLaurent TruncatedLaurent::monomial(long exponent, const Rational& c, long precision) {
  return TruncatedLaurent(exponent, {c}, precision);
}

std::optional<long> TruncatedLaurent::ord() const {
  if (coeffs_.empty()) return std::nullopt;
  return lead_;
}

Rational TruncatedLaurent::coeff(long k) const {
  if (k >= prec_)
    throw PrecisionError("coefficient of x^" + std::to_string(k) +
                         " outside known window (precision " + std::to_string(prec_) + ")");
  if (k < lead_ || k >= lead_ + static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k - lead_)];
}

TruncatedLaurent TruncatedLaurent::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& v : c) v = -v;
  return TruncatedLaurent(lead_, std::move(c), prec_);
}

TruncatedLaurent TruncatedLaurent::operator+(const TruncatedLaurent& g) const {
  long prec = std::min(prec_, g.prec_);
  if (coeffs_.empty() && g.coeffs_.empty()) return zero(prec);
  long lo = std::min(coeffs_.empty() ? g.lead_ : lead_, g.coeffs_.empty() ? lead_ : g.lead_);
  std::vector<Rational> c(static_cast<size_t>(std::max<long>(prec - lo, 0)));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    long e = lead_ + static_cast<long>(i);
    if (e < prec) c[static_cast<size_t>(e - lo)] += coeffs_[i];
  }
  for (size_t i = 0; i < g.coeffs_.size(); ++i) {
    long e = g.lead_ + static_cast<long>(i);
    if (e < prec) c[static_cast<size_t>(e - lo)] += g.coeffs_[i];
  }
  return TruncatedLaurent(lo, std::move(c), prec);
}

TruncatedLaurent TruncatedLaurent::operator-(const TruncatedLaurent& g) const {
  return *this + (-g);
}

TruncatedLaurent TruncatedLaurent::operator*(const TruncatedLaurent& g) const {
  // Unknown tails contribute at exponent >= min(olb(f)+prec(g), olb(g)+prec(f)).
  long prec = std::min(ord_lower_bound() + g.prec_, g.ord_lower_bound() + prec_);
  if (coeffs_.empty() || g.coeffs_.empty()) return zero(prec);
  long lo = lead_ + g.lead_;
  if (lo >= prec) return zero(prec);
  std::vector<Rational> c(static_cast<size_t>(prec - lo));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    long ei = lead_ + static_cast<long>(i);
    for (size_t j = 0; j < g.coeffs_.size(); ++j) {
      long e = ei + g.lead_ + static_cast<long>(j);
      if (e >= prec) break;
      c[static_cast<size_t>(e - lo)] += coeffs_[i] * g.coeffs_[j];
    }
  }
  return TruncatedLaurent(lo, std::move(c), prec);
}

TruncatedLaurent TruncatedLaurent::scaled(const Rational& c) const {
  if (c == 0) return zero(prec_);
  std::vector<Rational> v(coeffs_);
  for (auto& q : v) q *= c;
  return TruncatedLaurent(lead_, std::move(v), prec_);
}

TruncatedLaurent TruncatedLaurent::shifted(long k) const {
  return TruncatedLaurent(lead_ + k, coeffs_, prec_ + k);
}

TruncatedLaurent TruncatedLaurent::inverse() const {
  if (coeffs_.empty())
    throw DomainError("inverse of a series that is zero to precision x^" +
                      std::to_string(prec_));
  // f = x^v * u with u a unit known mod x^N, N = prec - v.  Invert u by the
  // convolution recurrence, then shift back.
  long v = lead_;
  long n = prec_ - v;  // known unit-part coefficients
  std::vector<Rational> w(static_cast<size_t>(n));
  Rational c0 = coeffs_[0];
  w[0] = 1 / c0;
  for (long k = 1; k < n; ++k) {
    Rational acc = 0;
    long maxi = std::min<long>(k, static_cast<long>(coeffs_.size()) - 1);
    for (long i = 1; i <= maxi; ++i) acc += coeffs_[static_cast<size_t>(i)] * w[static_cast<size_t>(k - i)];
    w[static_cast<size_t>(k)] = -acc / c0;
  }
  return TruncatedLaurent(-v, std::move(w), prec_ - 2 * v);
}

TruncatedLaurent TruncatedLaurent::truncated(long precision) const {
  if (precision >= prec_) return *this;
  return TruncatedLaurent(lead_, coeffs_, precision);
}

bool TruncatedLaurent::agrees_with(const TruncatedLaurent& g) const {
  long prec = std::min(prec_, g.prec_);
  long lo = std::min(ord_lower_bound(), g.ord_lower_bound());
  for (long e = lo; e < prec; ++e)
    if (coeff(e) != g.coeff(e)) return false;
  return true;
}

bool TruncatedLaurent::operator==(const TruncatedLaurent& g) const {
  return lead_ == g.lead_ && prec_ == g.prec_ && coeffs_ == g.coeffs_;
}

std::string TruncatedLaurent::str_terms() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    long e = lead_ + static_cast<long>(i);
    Rational c = coeffs_[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (e == 0) {
      out << rational_str(c);
    } else {
      if (c != 1) out << rational_str(c) << "*";
      out << "x";
      if (e != 1) out << "^" << e;
    }
  }
  if (first) out << "0";
  return out.str();
}

std::string TruncatedLaurent::str() const {
  if (coeffs_.empty()) return "O(x^" + std::to_string(prec_) + ")";
  return str_terms() + " + O(x^" + std::to_string(prec_) + ")";
}

namespace {

struct Tokenizer {
  const std::string& s;
  size_t i = 0;
  explicit Tokenizer(const std::string& text) : s(text) {}
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw ParseError("expected integer in series literal: " + s);
    return std::stol(s.substr(start, i - start));
  }
  Rational rational() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '/') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    if (i == start) throw ParseError("expected coefficient in series literal: " + s);
    return parse_rational(s.substr(start, i - start));
  }
};

}  // namespace

TruncatedLaurent TruncatedLaurent::parse(const std::string& text, long default_precision) {
  Tokenizer tk(text);
  std::vector<std::pair<long, Rational>> terms;
  std::optional<long> prec;
  bool expect_term = true;
  int sign = 1;
  while (!tk.done()) {
    if (!expect_term) {
      if (tk.consume('+')) {
        sign = 1;
      } else if (tk.consume('-')) {
        sign = -1;
      } else {
        throw ParseError("expected '+' or '-' in series literal: " + text);
      }
      expect_term = true;
      continue;
    }
    char c = tk.peek();
    if (c == 'O') {
      tk.consume('O');
      if (!tk.consume('(')) throw ParseError("malformed O() in series literal: " + text);
      if (tk.peek() != 'x') throw ParseError("malformed O() in series literal: " + text);
      tk.consume('x');
      long e = 1;
      if (tk.consume('^')) e = tk.integer();
      if (!tk.consume(')')) throw ParseError("malformed O() in series literal: " + text);
      prec = e;
      expect_term = false;
      continue;
    }
    Rational coeff = 1;
    long exp = 0;
    bool have_x = false;
    if (c == 'x') {
      have_x = true;
    } else if (c == '-' && tk.i + 1 < tk.s.size() && tk.s[tk.i + 1] == 'x') {
      tk.consume('-');
      coeff = -1;
      have_x = true;
    } else {
      coeff = tk.rational();
      if (tk.consume('*')) {
        if (tk.peek() != 'x') throw ParseError("expected x after '*' in series literal: " + text);
        have_x = true;
      } else if (tk.peek() == 'x') {
        have_x = true;
      }
    }
    if (have_x) {
      tk.consume('x');
      exp = 1;
      if (tk.consume('^')) exp = tk.integer();
    }
    terms.emplace_back(exp, sign < 0 ? Rational(-coeff) : coeff);
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !terms.empty())
    throw ParseError("dangling sign in series literal: " + text);
  long precision = prec.value_or(default_precision);
  TruncatedLaurent result = TruncatedLaurent::zero(precision);
  if (terms.empty()) return result;
  long lo = terms[0].first;
  for (auto& [e, q] : terms) lo = std::min(lo, e);
  std::vector<Rational> coeffs(static_cast<size_t>(std::max<long>(precision - lo, 0)));
  for (auto& [e, q] : terms) {
    if (e >= precision) continue;
    coeffs[static_cast<size_t>(e - lo)] += q;
  }
  return TruncatedLaurent(lo, std::move(coeffs), precision);
}

void to_json(nlohmann::json& j, const TruncatedLaurent& f) {
  std::vector<std::string> coeffs;
  coeffs.reserve(f.coeffs_.size());
  for (const auto& c : f.coeffs_) coeffs.push_back(rational_str(c));
  j = nlohmann::json{{"lead", f.lead_}, {"coeffs", coeffs}, {"precision", f.prec_}};
}

void from_json(const nlohmann::json& j, TruncatedLaurent& f) {
  long lead = j.at("lead").get<long>();
  long prec = j.at("precision").get<long>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  f = TruncatedLaurent(lead, std::move(coeffs), prec);
}

}  // namespace surfalg::laurent
