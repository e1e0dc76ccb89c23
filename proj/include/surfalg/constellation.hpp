#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "surfalg/permutation.hpp"

namespace surfalg::permgroup {

// A ribbon graph / branched covering datum: three permutations of the same
// degree with sigma*alpha*phi = id expected (but not enforced by the ctor,
// so invalid inputs can still be inspected and reported).
struct Constellation {
  Permutation sigma;
  Permutation alpha;
  Permutation phi;

  Constellation(Permutation s, Permutation a, Permutation p);
  int degree() const { return sigma.degree(); }
};

struct ValidationReport {
  bool product_identity = false;
  bool alpha_involution_fpf = false;
  bool transitive = false;
  bool ok() const { return product_identity && alpha_involution_fpf && transitive; }
};

ValidationReport validate_constellation(const Constellation& c);

struct SurfaceData {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;
  int genus = 0;
};

// Throws DomainError unless validate_constellation(c).ok().
SurfaceData surface_data(const Constellation& c);

// Order of <sigma, alpha> by breadth-first closure; nullopt once the group
// exceeds `cap` elements.
std::optional<long long> monodromy_order(const Constellation& c, long long cap = 100000);

// phi omitted on input is computed as (sigma*alpha)^-1.
void to_json(nlohmann::json& j, const Constellation& c);
Constellation constellation_from_json(const nlohmann::json& j);

}  // namespace surfalg::permgroup
