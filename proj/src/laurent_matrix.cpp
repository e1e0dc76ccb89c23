#include "surfalg/laurent_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "surfalg/common.hpp"

namespace surfalg::laurent {

namespace {
// Sentinel window for neutral elements inside fold loops; real operand
// windows dominate through the min() rules.
constexpr long kVastPrecision = 1L << 40;
}  // namespace

LaurentMatrix::LaurentMatrix(int rows, int cols, long precision)
    : rows_(rows), cols_(cols), prec_(precision),
      entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols),
               TruncatedLaurent::zero(precision)) {}

LaurentMatrix::LaurentMatrix(int rows, int cols, std::vector<TruncatedLaurent> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw DomainError("matrix entry count does not match shape");
  clamp_precision();
}

void LaurentMatrix::clamp_precision() {
  prec_ = kVastPrecision;
  for (const auto& e : entries_) prec_ = std::min(prec_, e.precision());
  if (entries_.empty()) prec_ = kDefaultPrecision;
  for (auto& e : entries_) e = e.truncated(prec_);
}

LaurentMatrix LaurentMatrix::identity(int n, long precision) {
  LaurentMatrix m(n, n, precision);
  for (int i = 0; i < n; ++i) m.set(i, i, TruncatedLaurent::constant(1, precision));
  return m;
}

const TruncatedLaurent& LaurentMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
  return entries_[static_cast<size_t>(r) * cols_ + c];
}

void LaurentMatrix::set(int r, int c, TruncatedLaurent v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
  entries_[static_cast<size_t>(r) * cols_ + c] = std::move(v);
  if (entries_[static_cast<size_t>(r) * cols_ + c].precision() < prec_) clamp_precision();
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& m) const {
  if (rows_ != m.rows_ || cols_ != m.cols_) throw DomainError("matrix shape mismatch in +");
  std::vector<TruncatedLaurent> out;
  out.reserve(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) out.push_back(entries_[i] + m.entries_[i]);
  return LaurentMatrix(rows_, cols_, std::move(out));
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& m) const {
  if (rows_ != m.rows_ || cols_ != m.cols_) throw DomainError("matrix shape mismatch in -");
  std::vector<TruncatedLaurent> out;
  out.reserve(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) out.push_back(entries_[i] - m.entries_[i]);
  return LaurentMatrix(rows_, cols_, std::move(out));
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& m) const {
  if (cols_ != m.rows_) throw DomainError("matrix shape mismatch in *");
  std::vector<TruncatedLaurent> out;
  out.reserve(static_cast<size_t>(rows_) * m.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < m.cols_; ++c) {
      TruncatedLaurent acc = TruncatedLaurent::zero(kVastPrecision);
      for (int k = 0; k < cols_; ++k) acc = acc + at(r, k) * m.at(k, c);
      // An empty sum (inner dimension 0) is exactly zero; pin a finite window.
      if (cols_ == 0) acc = TruncatedLaurent::zero(std::min(prec_, m.prec_));
      out.push_back(std::move(acc));
    }
  }
  return LaurentMatrix(rows_, m.cols_, std::move(out));
}

LaurentMatrix LaurentMatrix::scaled(const TruncatedLaurent& f) const {
  std::vector<TruncatedLaurent> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e * f);
  return LaurentMatrix(rows_, cols_, std::move(out));
}

LaurentMatrix LaurentMatrix::shifted(long k) const {
  std::vector<TruncatedLaurent> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.shifted(k));
  return LaurentMatrix(rows_, cols_, std::move(out));
}

TruncatedLaurent LaurentMatrix::det() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  int n = rows_;
  if (n == 0) return TruncatedLaurent::constant(1, prec_);
  // dp[mask] = signed minor of the first popcount(mask) rows on columns mask.
  std::vector<TruncatedLaurent> dp(static_cast<size_t>(1) << n,
                                   TruncatedLaurent::zero(kVastPrecision));
  dp[0] = TruncatedLaurent::constant(1, kVastPrecision);
  for (unsigned mask = 1; mask < dp.size(); ++mask) {
    int r = __builtin_popcount(mask) - 1;
    TruncatedLaurent acc = TruncatedLaurent::zero(kVastPrecision);
    int seen = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      TruncatedLaurent term = at(r, c) * dp[mask ^ (1u << c)];
      acc = (seen % 2 == 0) ? acc + term : acc - term;
      ++seen;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

std::optional<long> LaurentMatrix::det_ord() const { return det().ord(); }

LaurentMatrix LaurentMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  int n = rows_;
  LaurentMatrix a = *this;
  LaurentMatrix inv = identity(n, prec_);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    long best = 0;
    for (int r = k; r < n; ++r) {
      auto o = a.at(r, k).ord();
      if (!o) continue;
      if (pivot < 0 || *o < best) {
        pivot = r;
        best = *o;
      }
    }
    if (pivot < 0)
      throw PrecisionError("matrix is singular to precision (no usable pivot in column " +
                           std::to_string(k) + ")");
    if (pivot != k) {
      for (int c = 0; c < n; ++c) {
        TruncatedLaurent t = a.at(k, c);
        a.set(k, c, a.at(pivot, c));
        a.set(pivot, c, t);
        t = inv.at(k, c);
        inv.set(k, c, inv.at(pivot, c));
        inv.set(pivot, c, t);
      }
    }
    TruncatedLaurent pinv = a.at(k, k).inverse();
    for (int c = 0; c < n; ++c) {
      a.set(k, c, a.at(k, c) * pinv);
      inv.set(k, c, inv.at(k, c) * pinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == k) continue;
      TruncatedLaurent f = a.at(r, k);
      if (f.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        a.set(r, c, a.at(r, c) - f * a.at(k, c));
        inv.set(r, c, inv.at(r, c) - f * inv.at(k, c));
      }
    }
  }
  return inv;
}

LaurentMatrix LaurentMatrix::pow(long e) const {
  if (rows_ != cols_) throw DomainError("power of a non-square matrix");
  if (e < 0) return inverse().pow(-e);
  LaurentMatrix acc = identity(rows_, prec_);
  for (long i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool LaurentMatrix::is_zero_to_precision() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool LaurentMatrix::agrees_with(const LaurentMatrix& m) const {
  if (rows_ != m.rows_ || cols_ != m.cols_) return false;
  for (size_t i = 0; i < entries_.size(); ++i)
    if (!entries_[i].agrees_with(m.entries_[i])) return false;
  return true;
}

bool LaurentMatrix::operator==(const LaurentMatrix& m) const {
  return rows_ == m.rows_ && cols_ == m.cols_ && entries_ == m.entries_;
}

std::string LaurentMatrix::str() const {
  std::ostringstream out;
  out << rows_ << " x " << cols_ << "  (mod x^" << prec_ << ")\n";
  for (int r = 0; r < rows_; ++r) {
    out << "[";
    for (int c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << at(r, c).str_terms();
    }
    out << "]\n";
  }
  return out.str();
}

void to_json(nlohmann::json& j, const LaurentMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols_; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  j = nlohmann::json{{"rows", m.rows_}, {"cols", m.cols_}, {"entries", rows}};
}

void from_json(const nlohmann::json& j, LaurentMatrix& m) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const auto& grid = j.at("entries");
  if (static_cast<int>(grid.size()) != rows) throw DomainError("matrix JSON row count mismatch");
  std::vector<TruncatedLaurent> entries;
  entries.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != cols) throw DomainError("matrix JSON column count mismatch");
    for (const auto& cell : row) entries.push_back(cell.get<TruncatedLaurent>());
  }
  m = LaurentMatrix(rows, cols, std::move(entries));
}

}  // namespace surfalg::laurent
