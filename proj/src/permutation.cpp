#include "surfalg/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "surfalg/common.hpp"

namespace surfalg::permgroup {

Permutation::Permutation(int n) {
  if (n < 0) throw DomainError("negative permutation degree");
  images_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) images_[static_cast<size_t>(i)] = i + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw DomainError("image list is not a permutation of 1..n");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > n) throw DomainError("cycle point out of range");
      if (used[static_cast<size_t>(a - 1)]) throw DomainError("point repeated across cycles");
      used[static_cast<size_t>(a - 1)] = true;
      p.images_[static_cast<size_t>(a - 1)] = b;
    }
  }
  return p;
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > degree()) throw DomainError("permutation applied outside 1..n");
  return images_[static_cast<size_t>(i - 1)];
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (degree() != q.degree()) throw DomainError("permutation degree mismatch in composition");
  Permutation r;
  r.images_.resize(images_.size());
  for (int i = 1; i <= degree(); ++i) r.images_[static_cast<size_t>(i - 1)] = (*this)(q(i));
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (int i = 1; i <= degree(); ++i) r.images_[static_cast<size_t>((*this)(i)-1)] = i;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<size_t>(start - 1)]) continue;
    std::vector<int> cyc;
    int i = start;
    do {
      cyc.push_back(i);
      seen[static_cast<size_t>(i - 1)] = true;
      i = (*this)(i);
    } while (i != start);
    out.push_back(std::move(cyc));
  }
  return out;  // scanning from the minimum gives minimum-first rotation and sorted order
}

std::string Permutation::str() const {
  std::ostringstream out;
  for (const auto& cyc : cycles()) {
    out << "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out << ",";
      out << cyc[i];
    }
    out << ")";
  }
  if (images_.empty()) out << "()";
  return out.str();
}

nlohmann::json cycles_to_json(const Permutation& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& cyc : p.cycles())
    if (cyc.size() > 1) out.push_back(cyc);
  return out;
}

Permutation permutation_from_json(int degree, const nlohmann::json& cycles) {
  std::vector<std::vector<int>> cs;
  for (const auto& cyc : cycles) cs.push_back(cyc.get<std::vector<int>>());
  return Permutation::from_cycles(degree, cs);
}

}  // namespace surfalg::permgroup
