#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfalg/constellation.hpp"
#include "surfalg/laurent_matrix.hpp"

namespace surfalg::order {

// Entrywise lower bounds on x-valuation; a matrix matches when every entry's
// order meets its bound (entries zero to working precision count as matching).
struct ValuationPattern {
  int rows = 0;
  int cols = 0;
  std::vector<int> min_val;  // row-major

  int at(int p, int q) const;  // 1-based
  bool matches(const laurent::LaurentMatrix& m) const;
  friend bool operator==(const ValuationPattern&, const ValuationPattern&) = default;
};

struct ProjectiveColumn {
  int size = 0;
  std::vector<int> vals;  // vals[p-1] = bound of row p
  friend bool operator==(const ProjectiveColumn&, const ProjectiveColumn&) = default;
};

// Identifies diagonal slot slot_a of vertex order cycle_a with slot_b of
// cycle_b.  Cycles are 0-based indices into vertex_orders, slots 1-based.
struct Gluing {
  int cycle_a = 0;
  int slot_a = 0;
  int cycle_b = 0;
  int slot_b = 0;
  friend bool operator==(const Gluing&, const Gluing&) = default;
};

struct SurfaceOrder {
  std::vector<int> cycle_sizes;
  std::vector<ValuationPattern> vertex_orders;
  std::vector<Gluing> gluings;
  friend bool operator==(const SurfaceOrder&, const SurfaceOrder&) = default;
};

// Lower triangle (diagonal included) free, strict upper triangle valuation >= 1.
ValuationPattern hereditary_order(int n);

// Column pattern of the k-th indecomposable projective: k-1 ones then zeros.
ProjectiveColumn projective_column(int n, int k);

// Subdiagonal of ones with x in the top-right corner; its n-th power is x*I.
laurent::LaurentMatrix shift_matrix(int n, long precision = laurent::kDefaultPrecision);

// Strict upper triangle bounded below by j; j=1 recovers hereditary_order.
ValuationPattern iwahori_pattern(int n, int j);

SurfaceOrder build_surface_order(const permgroup::Constellation& c);

// One matrix per vertex order; all patterns must match and glued diagonal
// slots must agree in their constant terms.
bool membership(const SurfaceOrder& s, const std::vector<laurent::LaurentMatrix>& element);

std::string order_report(const SurfaceOrder& s);

void to_json(nlohmann::json& j, const SurfaceOrder& s);
void from_json(const nlohmann::json& j, SurfaceOrder& s);

}  // namespace surfalg::order
