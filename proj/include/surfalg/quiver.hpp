#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfalg/constellation.hpp"
#include "surfalg/rational.hpp"

namespace surfalg::quiver {

// Arrow ids are half-edge numbers (1..degree); vertices are indices into
// vertex_pairs, one per alpha-pair of the underlying constellation.
struct Arrow {
  int id = 0;
  int tail = 0;
  int head = 0;
  int cycle_tag = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  int degree = 0;
  std::vector<std::pair<int, int>> vertex_pairs;  // each {e, alpha(e)} with e < alpha(e)
  std::vector<Arrow> arrows;                      // sorted by id

  int vertex_of(int dart) const;
  const Arrow& arrow(int id) const;
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

// (a, b) forbidden means the traversal "a then b" is zero in the quotient.
struct RelationIdeal {
  std::set<std::pair<int, int>> forbidden;
  friend bool operator==(const RelationIdeal&, const RelationIdeal&) = default;
};

std::pair<Quiver, RelationIdeal> medial_quiver(const permgroup::Constellation& c);

struct AxiomReport {
  bool regular_degree = false;    // in/out degree exactly 2 at every vertex
  bool unique_forbidden = false;  // each arrow: one forbidden follower, one forbidden predecessor
  bool unique_allowed = false;    // same with allowed
  bool quadratic = false;         // relations are composable length-2 pairs
  bool all() const { return regular_degree && unique_forbidden && unique_allowed && quadratic; }
};

AxiomReport check_surface_axioms(const Quiver& q, const RelationIdeal& ideal);

// The unique composable follower of `arrow_id` outside the ideal.
int successor(const Quiver& q, const RelationIdeal& ideal, int arrow_id);

// Orbits of the successor map; each stays within one cycle_tag.
std::vector<std::vector<int>> nonzero_cycles(const Quiver& q, const RelationIdeal& ideal);

// Total orbit length per cycle_tag; equals the tag's cycle length in sigma.
std::map<int, int> nonzero_cycle_lengths(const Quiver& q, const RelationIdeal& ideal);

std::string quiver_dot(const Quiver& q, const RelationIdeal& ideal);

void to_json(nlohmann::json& j, const Quiver& q);
void from_json(const nlohmann::json& j, Quiver& q);
void to_json(nlohmann::json& j, const RelationIdeal& ideal);
void from_json(const nlohmann::json& j, RelationIdeal& ideal);

// A formal path: trivial at a vertex (`at` >= 0, no arrows) or a list of
// composable arrow ids in traversal order.
struct Path {
  int at = -1;
  std::vector<int> arrows;
  bool trivial() const { return arrows.empty(); }
  int length() const { return static_cast<int>(arrows.size()); }
  friend auto operator<=>(const Path&, const Path&) = default;
};

class PathVector {
 public:
  explicit PathVector(const Quiver& q, int truncation = 16);
  static PathVector trivial(const Quiver& q, int vertex, int truncation = 16);
  static PathVector arrow(const Quiver& q, int arrow_id, int truncation = 16);

  int truncation() const { return truncation_; }
  bool truncated() const { return truncated_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Path, Rational>& terms() const { return terms_; }
  const Quiver* quiver() const { return quiver_; }

  // Accumulates c on path p; drops overlong paths and flags the drop.
  PathVector& add_term(Path p, Rational c);

  PathVector operator+(const PathVector& other) const;
  PathVector operator-(const PathVector& other) const;
  PathVector scaled(const Rational& c) const;
  bool operator==(const PathVector& other) const;

  std::string str() const;

 private:
  const Quiver* quiver_;  // not owned; quivers outlive their path vectors
  std::map<Path, Rational> terms_;
  int truncation_;
  bool truncated_ = false;

  friend PathVector path_multiply(const PathVector& p, const PathVector& q,
                                  const RelationIdeal& ideal);
};

// Traversal concatenation "p then q"; junctions hitting the ideal or failing
// to compose contribute zero.
PathVector path_multiply(const PathVector& p, const PathVector& q, const RelationIdeal& ideal);

}  // namespace surfalg::quiver
