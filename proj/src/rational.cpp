#include "surfalg/rational.hpp"

#include <cctype>

#include "surfalg/common.hpp"

namespace surfalg {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
      throw ParseError("bad rational literal: " + text);
  }
  try {
    Rational q(text, 10);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + text);
  }
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace surfalg
