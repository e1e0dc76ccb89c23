#pragma once

#include <string>
#include <vector>

#include "surfalg/common.hpp"
#include "surfalg/ratmat.hpp"

namespace surfalg::f2gp {

enum class Letter { X, Y, Xinv, Yinv };

// Rightward words use {x, y^-1}, leftward words {x^-1, y}; anything mixed
// collapses to zero in the quotient by <xy, yx>.
enum class Direction { Empty, Rightward, Leftward };

struct NotReducedError : DomainError {
  explicit NotReducedError(const std::string& what) : DomainError(what) {}
};

struct ZeroInQuotientError : DomainError {
  explicit ZeroInQuotientError(const std::string& what) : DomainError(what) {}
};

class ReducedWord {
 public:
  static ReducedWord empty();

  Direction direction() const { return direction_; }
  const std::vector<std::pair<Letter, int>>& runs() const { return runs_; }
  std::vector<Letter> letters() const;
  int length() const;
  bool operator==(const ReducedWord& other) const = default;
  std::string str() const;  // caret notation; "e0" for the empty word

 private:
  friend ReducedWord validate_word(const std::vector<Letter>& letters);
  std::vector<std::pair<Letter, int>> runs_;
  Direction direction_ = Direction::Empty;
};

// Throws NotReducedError on adjacent inverse pairs (checked first), then
// ZeroInQuotientError on direction mixing.
ReducedWord validate_word(const std::vector<Letter>& letters);

// Caret notation "x^2*y^-3*x^3*y^-2"; "e0" or "1" for the empty word.
ReducedWord parse_word(const std::string& text);

struct Encoding {
  std::string bits;
  int copy = 0;  // 0 empty, 1 leftward, 2 rightward
  friend bool operator==(const Encoding&, const Encoding&) = default;
};

Encoding encode(const ReducedWord& w);
ReducedWord decode(const std::string& bits, int copy);

enum class Ordering { Less, Equal, Greater };

// Letter walk under y < x < end-of-word < x^-1 < y^-1: the unique order
// obeying the extension rules x.w < w < y^-1.w and y.w < w < x^-1.w.
Ordering compare(const ReducedWord& a, const ReducedWord& b);

struct StringModule {
  std::string word;  // zig-zag steps over {x, y}
  int dim = 0;
  RationalMatrix X{0, 0};
  RationalMatrix Y{0, 0};
};

// Basis per lattice point of the zig-zag; maximal runs alternate arrow
// direction starting forward, so composites through x and y both vanish.
StringModule string_module(const std::string& zigzag);

// Sinks of the zig-zag: points with no outgoing step.
int zigzag_sinks(const std::string& zigzag);

struct Sl2Rep {
  int n = 0;
  RationalMatrix X{0, 0};
  RationalMatrix Y{0, 0};
  RationalMatrix H{0, 0};
};

// Action on monomials x^a y^b (a + b = n, descending a): X = x d/dy,
// Y = y d/dx, H diagonal a - b.
Sl2Rep sym_rep(int n);

}  // namespace surfalg::f2gp
