#include "surfalg/affine.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "surfalg/common.hpp"

namespace surfalg::affine {

bool validate_window(int n, const std::vector<long long>& window) {
  if (n < 1 || static_cast<int>(window.size()) != n)
    throw DomainError("window length must equal n >= 1");
  std::set<long long> residues;
  for (long long w : window) residues.insert(floor_mod(w, n));
  if (static_cast<int>(residues.size()) != n) return false;
  long long sum = std::accumulate(window.begin(), window.end(), 0LL);
  return sum == static_cast<long long>(n) * (n + 1) / 2;
}

AffinePermutation::AffinePermutation(int n, std::vector<long long> window)
    : n_(n), window_(std::move(window)) {
  if (!validate_window(n_, window_)) throw DomainError("invalid affine window");
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<long long> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1LL);
  return AffinePermutation(n, std::move(w));
}

long long AffinePermutation::apply(long long i) const {
  return window_[static_cast<size_t>(floor_mod(i - 1, n_))] + n_ * floor_div(i - 1, n_);
}

std::string AffinePermutation::str() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < window_.size(); ++i) {
    if (i) out << ", ";
    out << window_[i];
  }
  out << "]";
  return out.str();
}

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.n() != v.n()) throw DomainError("affine permutations of different rank");
  std::vector<long long> w(static_cast<size_t>(u.n()));
  for (int i = 1; i <= u.n(); ++i) w[static_cast<size_t>(i - 1)] = u.apply(v.apply(i));
  return AffinePermutation(u.n(), std::move(w));
}

AffinePermutation inverse(const AffinePermutation& u) {
  int n = u.n();
  std::vector<long long> w(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (floor_mod(u.window()[static_cast<size_t>(j - 1)] - i, n) == 0)
        w[static_cast<size_t>(i - 1)] = j + (i - u.window()[static_cast<size_t>(j - 1)]);
  return AffinePermutation(n, std::move(w));
}

AffineSplit split(const AffinePermutation& s) {
  int n = s.n();
  std::vector<int> finite(static_cast<size_t>(n));
  std::vector<long long> t(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    long long w = s.window()[static_cast<size_t>(i - 1)];
    long long r = floor_mod(w - 1, n) + 1;
    finite[static_cast<size_t>(i - 1)] = static_cast<int>(r);
    t[static_cast<size_t>(i - 1)] = (w - r) / n;
  }
  return AffineSplit{permgroup::Permutation::from_images(std::move(finite)), std::move(t)};
}

AffinePermutation generator(int i, int n) {
  if (n < 2) throw DomainError("generators need n >= 2");
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  std::vector<long long> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1LL);
  if (i < n) {
    std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
  } else {
    w.front() = 0;
    w.back() = n + 1;
  }
  return AffinePermutation(n, std::move(w));
}

std::vector<long long> winding_numbers(const AffinePermutation& s) {
  return split(s).translation;
}

laurent::LaurentMatrix to_matrix(const AffinePermutation& s, long precision) {
  AffineSplit parts = split(s);
  laurent::LaurentMatrix m(s.n(), s.n(), precision);
  for (int j = 1; j <= s.n(); ++j) {
    int r = parts.finite(j);
    m.set(r - 1, j - 1,
          laurent::TruncatedLaurent::monomial(parts.translation[static_cast<size_t>(j - 1)], 1,
                                              precision));
  }
  return m;
}

}  // namespace surfalg::affine
