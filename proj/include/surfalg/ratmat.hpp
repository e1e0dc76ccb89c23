#ifndef SURFALG_RATMAT_HPP
#define SURFALG_RATMAT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "surfalg/rational.hpp"

namespace surfalg {

// Dense matrix over exact rationals.  Zero-dimensional shapes are legal
// (quiver representations may assign dimension 0 to a vertex).
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols);
  RationalMatrix(int rows, int cols, std::vector<Rational> entries);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int r, int c) const;
  void set(int r, int c, Rational v);

  RationalMatrix operator+(const RationalMatrix& m) const;
  RationalMatrix operator-(const RationalMatrix& m) const;
  RationalMatrix operator*(const RationalMatrix& m) const;
  RationalMatrix scaled(const Rational& c) const;

  RationalMatrix pow(long e) const;
  RationalMatrix inverse() const;  // throws DomainError when singular
  int rank() const;

  bool is_zero() const;
  bool operator==(const RationalMatrix& m) const;

  std::string str() const;

  friend void to_json(nlohmann::json& j, const RationalMatrix& m);
  friend void from_json(const nlohmann::json& j, RationalMatrix& m);

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

}  // namespace surfalg

#endif
