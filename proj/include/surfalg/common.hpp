#ifndef SURFALG_COMMON_HPP
#define SURFALG_COMMON_HPP

#include <stdexcept>
#include <string>

namespace surfalg {

// Raised when a question cannot be answered at the precision carried by the
// operands (all relevant coefficients vanish modulo x^T, a pivot cannot be
// certified, ...).  Callers that need a guaranteed-correct boolean catch this
// instead of receiving a guess.
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation is applied outside its mathematical domain
// (invalid constellation, non-nilpotent matrix, malformed window, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (rational/series/word literals).  A DomainError so
// library callers need one catch, but distinguishable where it matters.
struct ParseError : DomainError {
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long long floor_mod(long long a, long long b) {
  return a - b * floor_div(a, b);
}

}  // namespace surfalg

#endif
