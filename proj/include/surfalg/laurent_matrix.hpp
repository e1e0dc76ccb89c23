#ifndef SURFALG_LAURENT_MATRIX_HPP
#define SURFALG_LAURENT_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "surfalg/laurent.hpp"

namespace surfalg::laurent {

// Dense matrix over truncated Laurent series.  All entries share one
// precision window (the minimum over the entries fed in).
class LaurentMatrix {
 public:
  LaurentMatrix() : rows_(0), cols_(0) {}
  LaurentMatrix(int rows, int cols, long precision = kDefaultPrecision);
  LaurentMatrix(int rows, int cols, std::vector<TruncatedLaurent> entries);

  static LaurentMatrix identity(int n, long precision = kDefaultPrecision);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long precision() const { return prec_; }

  const TruncatedLaurent& at(int r, int c) const;
  void set(int r, int c, TruncatedLaurent v);

  LaurentMatrix operator+(const LaurentMatrix& m) const;
  LaurentMatrix operator-(const LaurentMatrix& m) const;
  LaurentMatrix operator*(const LaurentMatrix& m) const;
  LaurentMatrix scaled(const TruncatedLaurent& f) const;
  // Entrywise multiplication by x^k; exact (shifts the precision window too).
  LaurentMatrix shifted(long k) const;

  // Exact determinant by Laplace expansion over column subsets (no division).
  TruncatedLaurent det() const;
  // Valuation of the determinant; nullopt when det vanishes to precision.
  std::optional<long> det_ord() const;

  // Gauss-Jordan inverse over the Laurent field, pivoting on minimal
  // determinate order.  Throws PrecisionError when singular to precision.
  LaurentMatrix inverse() const;

  // Integer power; negative exponents go through inverse().
  LaurentMatrix pow(long e) const;

  bool is_zero_to_precision() const;
  bool agrees_with(const LaurentMatrix& m) const;
  bool operator==(const LaurentMatrix& m) const;

  std::string str() const;

  friend void to_json(nlohmann::json& j, const LaurentMatrix& m);
  friend void from_json(const nlohmann::json& j, LaurentMatrix& m);

 private:
  void clamp_precision();

  int rows_, cols_;
  long prec_ = kDefaultPrecision;
  std::vector<TruncatedLaurent> entries_;
};

}  // namespace surfalg::laurent

#endif
