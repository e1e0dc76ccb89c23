#include "surfalg/f2gp.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace surfalg::f2gp {

namespace {

bool inverse_pair(Letter a, Letter b) {
  return (a == Letter::X && b == Letter::Xinv) || (a == Letter::Xinv && b == Letter::X) ||
         (a == Letter::Y && b == Letter::Yinv) || (a == Letter::Yinv && b == Letter::Y);
}

bool rightward_letter(Letter a) { return a == Letter::X || a == Letter::Yinv; }

std::string letter_str(Letter a, int count) {
  const char* base = (a == Letter::X || a == Letter::Xinv) ? "x" : "y";
  int exponent = (a == Letter::Xinv || a == Letter::Yinv) ? -count : count;
  if (exponent == 1) return base;
  return std::string(base) + "^" + std::to_string(exponent);
}

}  // namespace

ReducedWord ReducedWord::empty() { return ReducedWord{}; }

std::vector<Letter> ReducedWord::letters() const {
  std::vector<Letter> out;
  for (const auto& [l, count] : runs_) out.insert(out.end(), static_cast<size_t>(count), l);
  return out;
}

int ReducedWord::length() const {
  int total = 0;
  for (const auto& [l, count] : runs_) total += count;
  return total;
}

std::string ReducedWord::str() const {
  if (runs_.empty()) return "e0";
  std::ostringstream out;
  for (size_t i = 0; i < runs_.size(); ++i) {
    if (i) out << "*";
    out << letter_str(runs_[i].first, runs_[i].second);
  }
  return out.str();
}

ReducedWord validate_word(const std::vector<Letter>& letters) {
  for (size_t i = 0; i + 1 < letters.size(); ++i)
    if (inverse_pair(letters[i], letters[i + 1]))
      throw NotReducedError("word contains an adjacent inverse pair");

  ReducedWord w;
  for (Letter l : letters) {
    Direction d = rightward_letter(l) ? Direction::Rightward : Direction::Leftward;
    if (w.direction_ == Direction::Empty)
      w.direction_ = d;
    else if (w.direction_ != d)
      throw ZeroInQuotientError("word mixes rightward and leftward letters");
    if (!w.runs_.empty() && w.runs_.back().first == l)
      ++w.runs_.back().second;
    else
      w.runs_.emplace_back(l, 1);
  }
  return w;
}

ReducedWord parse_word(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty()) throw ParseError("empty word literal");
  if (trimmed == "e0" || trimmed == "1") return ReducedWord::empty();

  std::vector<Letter> letters;
  size_t i = 0;
  while (i < trimmed.size()) {
    char base = trimmed[i];
    if (base != 'x' && base != 'y') throw ParseError("bad letter in word literal: " + text);
    ++i;
    long exponent = 1;
    if (i < trimmed.size() && trimmed[i] == '^') {
      ++i;
      size_t start = i;
      if (i < trimmed.size() && (trimmed[i] == '-' || trimmed[i] == '+')) ++i;
      while (i < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[i]))) ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(trimmed[start]))))
        throw ParseError("bad exponent in word literal: " + text);
      try {
        exponent = std::stol(trimmed.substr(start, i - start));
      } catch (const std::out_of_range&) {
        throw ParseError("exponent out of range in word literal: " + text);
      }
      if (exponent > 1000000 || exponent < -1000000)
        throw ParseError("exponent out of range in word literal: " + text);
    }
    Letter l = base == 'x' ? (exponent < 0 ? Letter::Xinv : Letter::X)
                           : (exponent < 0 ? Letter::Yinv : Letter::Y);
    for (long k = 0; k < std::abs(exponent); ++k) letters.push_back(l);
    if (i < trimmed.size()) {
      if (trimmed[i] != '*') throw ParseError("expected '*' in word literal: " + text);
      ++i;
      if (i == trimmed.size()) throw ParseError("dangling '*' in word literal: " + text);
    }
  }
  return validate_word(letters);
}

Encoding encode(const ReducedWord& w) {
  Encoding e;
  switch (w.direction()) {
    case Direction::Empty: e.copy = 0; break;
    case Direction::Leftward: e.copy = 1; break;
    case Direction::Rightward: e.copy = 2; break;
  }
  for (Letter l : w.letters())
    e.bits += (l == Letter::X || l == Letter::Xinv) ? '1' : '0';
  return e;
}

ReducedWord decode(const std::string& bits, int copy) {
  if (copy < 0 || copy > 2) throw ParseError("copy tag must be 0, 1, or 2");
  if (copy == 0) {
    if (!bits.empty()) throw ParseError("copy 0 carries no bits");
    return ReducedWord::empty();
  }
  std::vector<Letter> letters;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("bad bit in encoding: " + bits);
    letters.push_back(copy == 2 ? (c == '1' ? Letter::X : Letter::Yinv)
                                : (c == '1' ? Letter::Xinv : Letter::Y));
  }
  if (letters.empty()) throw ParseError("nonempty copy tag with empty bits");
  return validate_word(letters);
}

namespace {

// y < x < end-of-word < x^-1 < y^-1
int letter_rank(Letter l) {
  switch (l) {
    case Letter::Y: return 0;
    case Letter::X: return 1;
    case Letter::Xinv: return 3;
    case Letter::Yinv: return 4;
  }
  return 2;
}

}  // namespace

Ordering compare(const ReducedWord& a, const ReducedWord& b) {
  std::vector<Letter> la = a.letters();
  std::vector<Letter> lb = b.letters();
  for (size_t i = 0;; ++i) {
    int ra = i < la.size() ? letter_rank(la[i]) : 2;
    int rb = i < lb.size() ? letter_rank(lb[i]) : 2;
    if (ra < rb) return Ordering::Less;
    if (ra > rb) return Ordering::Greater;
    if (i >= la.size() && i >= lb.size()) return Ordering::Equal;
  }
}

StringModule string_module(const std::string& zigzag) {
  for (char c : zigzag)
    if (c != 'x' && c != 'y') throw ParseError("zig-zag steps must be x or y: " + zigzag);

  StringModule m;
  m.word = zigzag;
  m.dim = static_cast<int>(zigzag.size()) + 1;
  m.X = RationalMatrix(m.dim, m.dim);
  m.Y = RationalMatrix(m.dim, m.dim);

  int run = 0;
  for (size_t t = 0; t < zigzag.size(); ++t) {
    if (t > 0 && zigzag[t] != zigzag[t - 1]) ++run;
    RationalMatrix& target = zigzag[t] == 'x' ? m.X : m.Y;
    int i = static_cast<int>(t);
    if (run % 2 == 0)
      target.set(i + 1, i, 1);  // forward: point t steps to t+1
    else
      target.set(i, i + 1, 1);  // backward: point t+1 steps to t
  }
  return m;
}

int zigzag_sinks(const std::string& zigzag) {
  for (char c : zigzag)
    if (c != 'x' && c != 'y') throw ParseError("zig-zag steps must be x or y: " + zigzag);
  std::vector<bool> outgoing(zigzag.size() + 1, false);
  int run = 0;
  for (size_t t = 0; t < zigzag.size(); ++t) {
    if (t > 0 && zigzag[t] != zigzag[t - 1]) ++run;
    outgoing[run % 2 == 0 ? t : t + 1] = true;
  }
  int sinks = 0;
  for (bool has : outgoing)
    if (!has) ++sinks;
  return sinks;
}

Sl2Rep sym_rep(int n) {
  if (n < 0) throw DomainError("negative symmetric power");
  Sl2Rep rep;
  rep.n = n;
  rep.X = RationalMatrix(n + 1, n + 1);
  rep.Y = RationalMatrix(n + 1, n + 1);
  rep.H = RationalMatrix(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    int a = n - i, b = i;  // basis vector x^a y^b
    if (b > 0) rep.X.set(i - 1, i, b);
    if (a > 0) rep.Y.set(i + 1, i, a);
    rep.H.set(i, i, a - b);
  }
  return rep;
}

}  // namespace surfalg::f2gp
