#pragma once

#include <string>
#include <vector>

#include "surfalg/laurent_matrix.hpp"
#include "surfalg/permutation.hpp"

namespace surfalg::affine {

// True iff residues mod n are pairwise distinct and the entries sum to
// n(n+1)/2 — the two window conditions.
bool validate_window(int n, const std::vector<long long>& window);

// A bijection of Z with s(i+n) = s(i)+n, stored by its window [s(1)..s(n)].
class AffinePermutation {
 public:
  AffinePermutation(int n, std::vector<long long> window);  // throws DomainError if invalid
  static AffinePermutation identity(int n);

  int n() const { return n_; }
  const std::vector<long long>& window() const { return window_; }
  long long apply(long long i) const;
  bool operator==(const AffinePermutation& other) const = default;
  std::string str() const;  // "[0, 3]"

 private:
  int n_;
  std::vector<long long> window_;
};

struct AffineSplit {
  permgroup::Permutation finite;
  std::vector<long long> translation;  // window[i] = finite(i) + n*translation[i]
};

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v);
AffinePermutation inverse(const AffinePermutation& u);
AffineSplit split(const AffinePermutation& s);

// Coxeter generators: i < n swaps i, i+1; i = n is [0, 2, ..., n-1, n+1].
AffinePermutation generator(int i, int n);

// Translation part of split: how often each strand wraps the cylinder.
std::vector<long long> winding_numbers(const AffinePermutation& s);

// Monomial matrix: column j carries x^t in row r where s(j) = r + n*t.
laurent::LaurentMatrix to_matrix(const AffinePermutation& s,
                                 long precision = laurent::kDefaultPrecision);

}  // namespace surfalg::affine
