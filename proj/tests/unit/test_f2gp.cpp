#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "surfalg/common.hpp"
#include "surfalg/f2gp.hpp"
#include "surfalg/ratmat.hpp"

using surfalg::DomainError;
using surfalg::ParseError;
using surfalg::RationalMatrix;
using namespace surfalg::f2gp;

TEST_CASE("word parsing and printing") {
  ReducedWord w = parse_word("x^2*y^-3*x^3*y^-2");
  CHECK(w.length() == 10);
  CHECK(w.direction() == Direction::Rightward);
  REQUIRE(w.runs().size() == 4);
  CHECK(w.runs()[0] == std::pair<Letter, int>{Letter::X, 2});
  CHECK(w.runs()[1] == std::pair<Letter, int>{Letter::Yinv, 3});
  CHECK(w.str() == "x^2*y^-3*x^3*y^-2");

  CHECK(parse_word("e0") == ReducedWord::empty());
  CHECK(parse_word("1") == ReducedWord::empty());
  CHECK(parse_word("x^0") == ReducedWord::empty());
  CHECK(ReducedWord::empty().str() == "e0");
  CHECK(ReducedWord::empty().direction() == Direction::Empty);

  CHECK(parse_word(" x * y^-1 ") == parse_word("x*y^-1"));
  CHECK(parse_word("x^-1*y^2").direction() == Direction::Leftward);

  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("z"), ParseError);
  CHECK_THROWS_AS(parse_word("x^"), ParseError);
  CHECK_THROWS_AS(parse_word("x^+"), ParseError);
  CHECK_THROWS_AS(parse_word("x^2000000"), ParseError);
  CHECK_THROWS_AS(parse_word("x*"), ParseError);
  CHECK_THROWS_AS(parse_word("x^1y"), ParseError);
}

TEST_CASE("reduction is checked before the quotient") {
  CHECK_THROWS_AS(validate_word({Letter::X, Letter::Xinv, Letter::Y}), NotReducedError);
  CHECK_THROWS_AS(validate_word({Letter::Yinv, Letter::Y}), NotReducedError);
  CHECK_THROWS_AS(validate_word({Letter::X, Letter::Y}), ZeroInQuotientError);
  CHECK_THROWS_AS(validate_word({Letter::Y, Letter::Yinv, Letter::X}), NotReducedError);

  CHECK_THROWS_AS(parse_word("x*x^-1"), NotReducedError);
  CHECK_THROWS_AS(parse_word("x*y"), ZeroInQuotientError);
  CHECK_THROWS_AS(parse_word("y^2*x*y"), ZeroInQuotientError);
  CHECK(parse_word("y^2*x^-1*y").letters().size() == 4);  // stays inside the leftward copy
}

TEST_CASE("binary encoding of one sided words") {
  Encoding e = encode(parse_word("x^2*y^-3*x^3*y^-2"));
  CHECK(e.bits == "1100011100");
  CHECK(e.copy == 2);

  Encoding l = encode(parse_word("x^-1*y^2"));
  CHECK(l.bits == "100");
  CHECK(l.copy == 1);

  Encoding n = encode(ReducedWord::empty());
  CHECK(n.bits.empty());
  CHECK(n.copy == 0);

  CHECK(decode("1100011100", 2) == parse_word("x^2*y^-3*x^3*y^-2"));
  CHECK(decode("100", 1) == parse_word("x^-1*y^2"));
  CHECK(decode("", 0) == ReducedWord::empty());

  CHECK_THROWS_AS(decode("01", 3), ParseError);
  CHECK_THROWS_AS(decode("01", -1), ParseError);
  CHECK_THROWS_AS(decode("1", 0), ParseError);
  CHECK_THROWS_AS(decode("", 1), ParseError);
  CHECK_THROWS_AS(decode("102", 2), ParseError);

  testsupport::Rng rng(611);
  for (int trial = 0; trial < 200; ++trial) {
    int len = static_cast<int>(rng.pick(10));
    std::string bits;
    for (int i = 0; i < len; ++i) bits += rng.pick(2) ? '1' : '0';
    int copy = bits.empty() ? 0 : 1 + static_cast<int>(rng.pick(2));
    ReducedWord w = decode(bits, copy);
    Encoding round = encode(w);
    CHECK(round.bits == bits);
    CHECK(round.copy == copy);
    CHECK(parse_word(w.str()) == w);
  }
}

TEST_CASE("comparison fixtures") {
  auto lt = [](const std::string& a, const std::string& b) {
    return compare(parse_word(a), parse_word(b));
  };
  CHECK(lt("y", "x") == Ordering::Less);
  CHECK(lt("x", "e0") == Ordering::Less);
  CHECK(lt("e0", "x^-1") == Ordering::Less);
  CHECK(lt("x^-1", "y^-1") == Ordering::Less);
  CHECK(lt("x", "x") == Ordering::Equal);
  CHECK(lt("y^-1", "x") == Ordering::Greater);
  CHECK(lt("x^2", "x") == Ordering::Less);           // x.(x) < x
  CHECK(lt("y*x^-1", "y") == Ordering::Greater);     // continuation x^-1 sits above end
  CHECK(lt("x^-1*y", "x^-1") == Ordering::Less);     // continuation y sits below end

  // extension rules on both copies
  for (const std::string& w : {std::string("e0"), std::string("x"), std::string("x*y^-1"),
                               std::string("y^-2*x^3")}) {
    ReducedWord base = parse_word(w);
    ReducedWord xw = w == "e0" ? parse_word("x") : parse_word("x*" + w);
    ReducedWord yiw = w == "e0" ? parse_word("y^-1") : parse_word("y^-1*" + w);
    CHECK(compare(xw, base) == Ordering::Less);
    CHECK(compare(base, yiw) == Ordering::Less);
  }
  for (const std::string& w : {std::string("y"), std::string("y*x^-2")}) {
    ReducedWord base = parse_word(w);
    CHECK(compare(parse_word("y*" + w), base) == Ordering::Less);
    CHECK(compare(base, parse_word("x^-1*" + w)) == Ordering::Less);
  }
}

TEST_CASE("comparison is a strict total order on short words") {
  for (int copy = 1; copy <= 2; ++copy) {
    std::vector<ReducedWord> words = {ReducedWord::empty()};
    for (int len = 1; len <= 6; ++len) {
      for (unsigned mask = 0; mask < (1u << len); ++mask) {
        std::string bits;
        for (int i = 0; i < len; ++i) bits += (mask >> i) & 1 ? '1' : '0';
        words.push_back(decode(bits, copy));
      }
    }
    std::sort(words.begin(), words.end(), [](const ReducedWord& a, const ReducedWord& b) {
      return compare(a, b) == Ordering::Less;
    });
    for (size_t i = 0; i < words.size(); ++i) {
      for (size_t j = i + 1; j < words.size(); ++j) {
        CHECK(compare(words[i], words[j]) == Ordering::Less);
        CHECK(compare(words[j], words[i]) == Ordering::Greater);
      }
      CHECK(compare(words[i], words[i]) == Ordering::Equal);
    }
  }
}

TEST_CASE("modules over zig-zag strings") {
  StringModule one = string_module("x");
  CHECK(one.dim == 2);
  CHECK(one.X == RationalMatrix(2, 2, {0, 0, 1, 0}));
  CHECK(one.Y.is_zero());

  StringModule two = string_module("xy");
  CHECK(two.dim == 3);
  CHECK(two.X.at(1, 0) == 1);
  CHECK(two.Y.at(1, 2) == 1);
  CHECK(two.X.rank() == 1);
  CHECK(two.Y.rank() == 1);
  CHECK((two.X * two.Y).is_zero());
  CHECK((two.Y * two.X).is_zero());

  StringModule none = string_module("");
  CHECK(none.dim == 1);
  CHECK(none.X.is_zero());

  CHECK_THROWS_AS(string_module("xz"), ParseError);

  testsupport::Rng rng(612);
  for (int trial = 0; trial < 120; ++trial) {
    int len = static_cast<int>(rng.pick(9));
    std::string word;
    for (int i = 0; i < len; ++i) word += rng.pick(2) ? 'x' : 'y';
    StringModule m = string_module(word);
    CHECK(m.dim == len + 1);
    CHECK((m.X * m.Y).is_zero());
    CHECK((m.Y * m.X).is_zero());
    CHECK(m.X.pow(m.dim).is_zero());
    CHECK(m.Y.pow(m.dim).is_zero());
    CHECK(m.X.rank() + m.Y.rank() == len);
  }
}

TEST_CASE("counting zig-zag sinks") {
  CHECK(zigzag_sinks("") == 1);
  CHECK(zigzag_sinks("x") == 1);
  CHECK(zigzag_sinks("xy") == 1);
  CHECK(zigzag_sinks("xyx") == 2);
  CHECK(zigzag_sinks("xxyy") == 1);
  CHECK(zigzag_sinks("yxy") == 2);
  CHECK_THROWS_AS(zigzag_sinks("a"), ParseError);
}

TEST_CASE("symmetric powers of the standard representation") {
  Sl2Rep triv = sym_rep(0);
  CHECK(triv.X.is_zero());
  CHECK(triv.H.is_zero());

  Sl2Rep std1 = sym_rep(1);
  CHECK(std1.X == RationalMatrix(2, 2, {0, 1, 0, 0}));
  CHECK(std1.Y == RationalMatrix(2, 2, {0, 0, 1, 0}));
  CHECK(std1.H == RationalMatrix(2, 2, {1, 0, 0, -1}));

  Sl2Rep std2 = sym_rep(2);
  CHECK(std2.X.at(0, 1) == 1);
  CHECK(std2.X.at(1, 2) == 2);
  CHECK(std2.Y.at(1, 0) == 2);
  CHECK(std2.Y.at(2, 1) == 1);
  CHECK(std2.H.at(0, 0) == 2);
  CHECK(std2.H.at(1, 1) == 0);
  CHECK(std2.H.at(2, 2) == -2);

  for (int n = 0; n <= 8; ++n) {
    Sl2Rep rep = sym_rep(n);
    CHECK(rep.X * rep.Y - rep.Y * rep.X == rep.H);
    CHECK(rep.H * rep.X - rep.X * rep.H == rep.X.scaled(2));
    CHECK(rep.H * rep.Y - rep.Y * rep.H == rep.Y.scaled(-2));
    CHECK(rep.X.pow(n + 1).is_zero());
    CHECK(rep.Y.pow(n + 1).is_zero());
  }

  CHECK_THROWS_AS(sym_rep(-1), DomainError);
}
