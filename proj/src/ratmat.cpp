#include "surfalg/ratmat.hpp"

#include <sstream>

#include "surfalg/common.hpp"

namespace surfalg {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational(0)) {}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw DomainError("rational matrix entry count does not match shape");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

const Rational& RationalMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw DomainError("rational matrix index out of range");
  return entries_[static_cast<size_t>(r) * cols_ + c];
}

void RationalMatrix::set(int r, int c, Rational v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw DomainError("rational matrix index out of range");
  entries_[static_cast<size_t>(r) * cols_ + c] = std::move(v);
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& m) const {
  if (rows_ != m.rows_ || cols_ != m.cols_) throw DomainError("rational matrix shape mismatch in +");
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + m.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& m) const {
  if (rows_ != m.rows_ || cols_ != m.cols_) throw DomainError("rational matrix shape mismatch in -");
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - m.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& m) const {
  if (cols_ != m.rows_) throw DomainError("rational matrix shape mismatch in *");
  RationalMatrix out(rows_, m.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& f = at(r, k);
      if (f == 0) continue;
      for (int c = 0; c < m.cols_; ++c)
        out.entries_[static_cast<size_t>(r) * m.cols_ + c] += f * m.at(k, c);
    }
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * c;
  return out;
}

RationalMatrix RationalMatrix::pow(long e) const {
  if (rows_ != cols_) throw DomainError("power of a non-square rational matrix");
  if (e < 0) return inverse().pow(-e);
  RationalMatrix acc = identity(rows_);
  for (long i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square rational matrix");
  int n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (a.at(r, k) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("singular rational matrix");
    if (pivot != k)
      for (int c = 0; c < n; ++c) {
        std::swap(a.entries_[static_cast<size_t>(k) * n + c],
                  a.entries_[static_cast<size_t>(pivot) * n + c]);
        std::swap(inv.entries_[static_cast<size_t>(k) * n + c],
                  inv.entries_[static_cast<size_t>(pivot) * n + c]);
      }
    Rational p = a.at(k, k);
    for (int c = 0; c < n; ++c) {
      a.set(k, c, a.at(k, c) / p);
      inv.set(k, c, inv.at(k, c) / p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == k) continue;
      Rational f = a.at(r, k);
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) {
        a.set(r, c, a.at(r, c) - f * a.at(k, c));
        inv.set(r, c, inv.at(r, c) - f * inv.at(k, c));
      }
    }
  }
  return inv;
}

int RationalMatrix::rank() const {
  RationalMatrix a = *this;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int r = row; r < rows_; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < cols_; ++c)
        std::swap(a.entries_[static_cast<size_t>(row) * cols_ + c],
                  a.entries_[static_cast<size_t>(pivot) * cols_ + c]);
    for (int r = row + 1; r < rows_; ++r) {
      Rational f = a.at(r, col) / a.at(row, col);
      if (f == 0) continue;
      for (int c = col; c < cols_; ++c) a.set(r, c, a.at(r, c) - f * a.at(row, c));
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool RationalMatrix::operator==(const RationalMatrix& m) const {
  return rows_ == m.rows_ && cols_ == m.cols_ && entries_ == m.entries_;
}

std::string RationalMatrix::str() const {
  std::ostringstream out;
  for (int r = 0; r < rows_; ++r) {
    out << "[";
    for (int c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << rational_str(at(r, c));
    }
    out << "]\n";
  }
  if (rows_ == 0 || cols_ == 0) out << "[" << rows_ << " x " << cols_ << "]\n";
  return out.str();
}

void to_json(nlohmann::json& j, const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols_; ++c) row.push_back(rational_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  j = rows;
}

void from_json(const nlohmann::json& j, RationalMatrix& m) {
  int rows = static_cast<int>(j.size());
  int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& row : j) {
    if (static_cast<int>(row.size()) != cols)
      throw DomainError("rational matrix JSON has ragged rows");
    for (const auto& cell : row) entries.push_back(parse_rational(cell.get<std::string>()));
  }
  m = RationalMatrix(rows, cols, std::move(entries));
}

}  // namespace surfalg
