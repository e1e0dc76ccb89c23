#ifndef SURFALG_PERMUTATION_HPP
#define SURFALG_PERMUTATION_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace surfalg::permgroup {

// Permutation of {1, ..., n}, stored in one-line notation.
// Composition acts on the left: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  static Permutation from_images(std::vector<int> images);
  // Cycles of 1-based points; points not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;

  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  bool operator==(const Permutation& q) const { return images_ == q.images_; }
  bool operator<(const Permutation& q) const { return images_ < q.images_; }
  bool is_identity() const;

  // Disjoint cycles, each rotated minimum-first, sorted by minimum element.
  // Fixed points appear as 1-cycles.
  std::vector<std::vector<int>> cycles() const;

  const std::vector<int>& images() const { return images_; }
  std::string str() const;  // cycle notation, e.g. "(1,2,3)(4)"

 private:
  std::vector<int> images_;
};

// Nontrivial cycles only (fixed points omitted), for serialization.
nlohmann::json cycles_to_json(const Permutation& p);
Permutation permutation_from_json(int degree, const nlohmann::json& cycles);

}  // namespace surfalg::permgroup

#endif
