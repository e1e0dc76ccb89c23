#ifndef SURFALG_LAURENT_HPP
#define SURFALG_LAURENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "surfalg/rational.hpp"

namespace surfalg::laurent {

inline constexpr long kDefaultPrecision = 16;

// Laurent series known modulo x^precision:
//
//   sum_i coeffs[i] * x^(lead+i)  +  O(x^precision)
//
// Nonzero series keep coeffs[0] != 0 and drop trailing zero coefficients;
// the zero-to-precision element has empty coeffs (and lead pinned to 0).
// Every arithmetic operation propagates the precision window honestly, so a
// determinate answer read off a series is exact.
class TruncatedLaurent {
 public:
  TruncatedLaurent() : lead_(0), prec_(kDefaultPrecision) {}
  TruncatedLaurent(long lead, std::vector<Rational> coeffs, long precision);

  static TruncatedLaurent zero(long precision = kDefaultPrecision);
  static TruncatedLaurent constant(const Rational& c, long precision = kDefaultPrecision);
  static TruncatedLaurent monomial(long exponent, const Rational& c = 1,
                                   long precision = kDefaultPrecision);

  long precision() const { return prec_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Valuation; nullopt when the series vanishes to precision (indeterminate).
  std::optional<long> ord() const;
  // Largest exponent v with a guarantee that ord >= v (== ord when determinate).
  long ord_lower_bound() const { return coeffs_.empty() ? prec_ : lead_; }

  // Coefficient of x^k.  Throws PrecisionError for k >= precision.
  Rational coeff(long k) const;
  Rational constant_term() const { return coeff(0); }

  TruncatedLaurent operator-() const;
  TruncatedLaurent operator+(const TruncatedLaurent& g) const;
  TruncatedLaurent operator-(const TruncatedLaurent& g) const;
  TruncatedLaurent operator*(const TruncatedLaurent& g) const;

  TruncatedLaurent scaled(const Rational& c) const;
  TruncatedLaurent shifted(long k) const;  // multiply by x^k

  // Multiplicative inverse; result precision is precision() - 2*ord().
  // Throws DomainError when the series is zero to precision.
  TruncatedLaurent inverse() const;

  // Re-truncates to a smaller (or equal) precision window.
  TruncatedLaurent truncated(long precision) const;

  // Same coefficients on the overlap of the two known windows.
  bool agrees_with(const TruncatedLaurent& g) const;
  // Identical normal form including precision.
  bool operator==(const TruncatedLaurent& g) const;

  std::string str() const;
  // Terms only, no O(x^T) tail; "0" for the zero-to-precision element.
  std::string str_terms() const;
  static TruncatedLaurent parse(const std::string& text,
                                long default_precision = kDefaultPrecision);

  friend void to_json(nlohmann::json& j, const TruncatedLaurent& f);
  friend void from_json(const nlohmann::json& j, TruncatedLaurent& f);

 private:
  void normalize();

  long lead_;
  std::vector<Rational> coeffs_;
  long prec_;
};

}  // namespace surfalg::laurent

#endif
