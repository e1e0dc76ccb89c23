#include "surfalg/order.hpp"

#include <sstream>

#include "surfalg/common.hpp"

namespace surfalg::order {

using laurent::LaurentMatrix;
using laurent::TruncatedLaurent;

int ValuationPattern::at(int p, int q) const {
  if (p < 1 || p > rows || q < 1 || q > cols) throw DomainError("pattern index out of range");
  return min_val[static_cast<size_t>(p - 1) * cols + (q - 1)];
}

bool ValuationPattern::matches(const LaurentMatrix& m) const {
  if (m.rows() != rows || m.cols() != cols) throw DomainError("pattern size mismatch");
  for (int p = 1; p <= rows; ++p)
    for (int q = 1; q <= cols; ++q) {
      auto o = m.at(p - 1, q - 1).ord();
      if (o && *o < at(p, q)) return false;
    }
  return true;
}

ValuationPattern hereditary_order(int n) {
  if (n < 1) throw DomainError("order size must be positive");
  ValuationPattern v{n, n, std::vector<int>(static_cast<size_t>(n) * n, 0)};
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) v.min_val[static_cast<size_t>(p - 1) * n + (q - 1)] = 1;
  return v;
}

ProjectiveColumn projective_column(int n, int k) {
  if (n < 1) throw DomainError("order size must be positive");
  if (k < 1 || k > n) throw DomainError("projective index out of range");
  ProjectiveColumn c{n, std::vector<int>(static_cast<size_t>(n), 0)};
  for (int p = 1; p < k; ++p) c.vals[static_cast<size_t>(p - 1)] = 1;
  return c;
}

LaurentMatrix shift_matrix(int n, long precision) {
  if (n < 1) throw DomainError("order size must be positive");
  LaurentMatrix m(n, n, precision);
  m.set(0, n - 1, TruncatedLaurent::monomial(1, 1, precision));
  for (int r = 1; r < n; ++r) m.set(r, r - 1, TruncatedLaurent::constant(1, precision));
  return m;
}

ValuationPattern iwahori_pattern(int n, int j) {
  if (n < 1) throw DomainError("order size must be positive");
  if (j < 0) throw DomainError("negative level");
  ValuationPattern v{n, n, std::vector<int>(static_cast<size_t>(n) * n, 0)};
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) v.min_val[static_cast<size_t>(p - 1) * n + (q - 1)] = j;
  return v;
}

SurfaceOrder build_surface_order(const permgroup::Constellation& c) {
  if (!permgroup::validate_constellation(c).ok()) throw DomainError("not a valid constellation");

  SurfaceOrder s;
  auto cycles = c.sigma.cycles();
  std::vector<int> cycle_of(static_cast<size_t>(c.degree()) + 1, -1);
  std::vector<int> slot_of(static_cast<size_t>(c.degree()) + 1, 0);
  for (size_t t = 0; t < cycles.size(); ++t) {
    s.cycle_sizes.push_back(static_cast<int>(cycles[t].size()));
    s.vertex_orders.push_back(hereditary_order(static_cast<int>(cycles[t].size())));
    for (size_t k = 0; k < cycles[t].size(); ++k) {
      cycle_of[static_cast<size_t>(cycles[t][k])] = static_cast<int>(t);
      slot_of[static_cast<size_t>(cycles[t][k])] = static_cast<int>(k) + 1;
    }
  }
  for (int e = 1; e <= c.degree(); ++e) {
    int f = c.alpha(e);
    if (e < f)
      s.gluings.push_back(Gluing{cycle_of[static_cast<size_t>(e)], slot_of[static_cast<size_t>(e)],
                                 cycle_of[static_cast<size_t>(f)], slot_of[static_cast<size_t>(f)]});
  }
  return s;
}

bool membership(const SurfaceOrder& s, const std::vector<LaurentMatrix>& element) {
  if (element.size() != s.vertex_orders.size())
    throw DomainError("need one matrix per vertex order");
  for (size_t i = 0; i < element.size(); ++i)
    if (!s.vertex_orders[i].matches(element[i])) return false;
  for (const auto& g : s.gluings) {
    Rational a = element[static_cast<size_t>(g.cycle_a)]
                     .at(g.slot_a - 1, g.slot_a - 1)
                     .constant_term();
    Rational b = element[static_cast<size_t>(g.cycle_b)]
                     .at(g.slot_b - 1, g.slot_b - 1)
                     .constant_term();
    if (a != b) return false;
  }
  return true;
}

std::string order_report(const SurfaceOrder& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.vertex_orders.size(); ++i) {
    const auto& v = s.vertex_orders[i];
    out << "vertex " << (i + 1) << " (n=" << v.rows << "):\n";
    for (int p = 1; p <= v.rows; ++p) {
      out << "  [";
      for (int q = 1; q <= v.cols; ++q) {
        int b = v.at(p, q);
        std::string cell = b == 0 ? "R" : b == 1 ? "m" : "m^" + std::to_string(b);
        out << (q > 1 ? " " : "") << cell;
      }
      out << "]\n";
    }
  }
  out << "gluings:\n";
  for (const auto& g : s.gluings)
    out << "  (" << (g.cycle_a + 1) << "," << g.slot_a << ") ~ (" << (g.cycle_b + 1) << ","
        << g.slot_b << ")\n";
  return out.str();
}

void to_json(nlohmann::json& j, const SurfaceOrder& s) {
  nlohmann::json gluings = nlohmann::json::array();
  for (const auto& g : s.gluings)
    gluings.push_back({{g.cycle_a + 1, g.slot_a}, {g.cycle_b + 1, g.slot_b}});
  j = nlohmann::json{{"cycle_sizes", s.cycle_sizes}, {"gluings", gluings}};
}

void from_json(const nlohmann::json& j, SurfaceOrder& s) {
  s = SurfaceOrder{};
  s.cycle_sizes = j.at("cycle_sizes").get<std::vector<int>>();
  for (int n : s.cycle_sizes) s.vertex_orders.push_back(hereditary_order(n));
  for (const auto& g : j.at("gluings")) {
    Gluing glue{g.at(0).at(0).get<int>() - 1, g.at(0).at(1).get<int>(),
                g.at(1).at(0).get<int>() - 1, g.at(1).at(1).get<int>()};
    if (glue.cycle_a < 0 || glue.cycle_a >= static_cast<int>(s.vertex_orders.size()) ||
        glue.cycle_b < 0 || glue.cycle_b >= static_cast<int>(s.vertex_orders.size()) ||
        glue.slot_a < 1 || glue.slot_a > s.cycle_sizes[static_cast<size_t>(glue.cycle_a)] ||
        glue.slot_b < 1 || glue.slot_b > s.cycle_sizes[static_cast<size_t>(glue.cycle_b)])
      throw DomainError("gluing out of range");
    s.gluings.push_back(glue);
  }
}

}  // namespace surfalg::order
