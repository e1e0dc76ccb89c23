#include "surfalg/constellation.hpp"

#include <set>
#include <vector>

#include "surfalg/common.hpp"

namespace surfalg::permgroup {

Constellation::Constellation(Permutation s, Permutation a, Permutation p)
    : sigma(std::move(s)), alpha(std::move(a)), phi(std::move(p)) {
  if (sigma.degree() != alpha.degree() || sigma.degree() != phi.degree())
    throw DomainError("constellation permutations must share one degree");
}

ValidationReport validate_constellation(const Constellation& c) {
  ValidationReport r;
  r.product_identity = (c.sigma * c.alpha * c.phi).is_identity();

  r.alpha_involution_fpf = true;
  for (int i = 1; i <= c.degree(); ++i) {
    int j = c.alpha(i);
    if (j == i || c.alpha(j) != i) {
      r.alpha_involution_fpf = false;
      break;
    }
  }

  // orbit of 1 under sigma and alpha must cover everything
  if (c.degree() == 0) {
    r.transitive = true;
  } else {
    std::vector<bool> seen(static_cast<size_t>(c.degree()), false);
    std::vector<int> stack = {1};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j : {c.sigma(i), c.alpha(i)}) {
        if (!seen[static_cast<size_t>(j - 1)]) {
          seen[static_cast<size_t>(j - 1)] = true;
          ++count;
          stack.push_back(j);
        }
      }
    }
    r.transitive = (count == c.degree());
  }
  return r;
}

SurfaceData surface_data(const Constellation& c) {
  if (!validate_constellation(c).ok()) throw DomainError("not a valid constellation");
  SurfaceData d;
  d.vertices = static_cast<int>(c.sigma.cycles().size());
  d.edges = c.degree() / 2;
  d.faces = static_cast<int>(c.phi.cycles().size());
  d.euler = d.vertices - d.edges + d.faces;
  if ((2 - d.euler) % 2 != 0) throw DomainError("odd euler defect");  // cannot happen for valid data
  d.genus = (2 - d.euler) / 2;
  return d;
}

std::optional<long long> monodromy_order(const Constellation& c, long long cap) {
  std::set<Permutation> group;
  std::vector<Permutation> frontier = {Permutation(c.degree())};
  group.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto* gen : {&c.sigma, &c.alpha}) {
        Permutation h = *gen * g;
        if (group.insert(h).second) {
          if (static_cast<long long>(group.size()) > cap) return std::nullopt;
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return static_cast<long long>(group.size());
}

void to_json(nlohmann::json& j, const Constellation& c) {
  j = nlohmann::json{{"degree", c.degree()},
                     {"sigma", cycles_to_json(c.sigma)},
                     {"alpha", cycles_to_json(c.alpha)},
                     {"phi", cycles_to_json(c.phi)}};
}

Constellation constellation_from_json(const nlohmann::json& j) {
  if (!j.contains("degree") || !j.contains("sigma") || !j.contains("alpha"))
    throw DomainError("constellation json needs degree, sigma, alpha");
  int n = j.at("degree").get<int>();
  Permutation sigma = permutation_from_json(n, j.at("sigma"));
  Permutation alpha = permutation_from_json(n, j.at("alpha"));
  Permutation phi = j.contains("phi") ? permutation_from_json(n, j.at("phi"))
                                      : (sigma * alpha).inverse();
  return Constellation(std::move(sigma), std::move(alpha), std::move(phi));
}

}  // namespace surfalg::permgroup
