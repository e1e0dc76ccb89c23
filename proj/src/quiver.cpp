#include "surfalg/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "surfalg/common.hpp"

namespace surfalg::quiver {

int Quiver::vertex_of(int dart) const {
  for (size_t v = 0; v < vertex_pairs.size(); ++v)
    if (vertex_pairs[v].first == dart || vertex_pairs[v].second == dart)
      return static_cast<int>(v);
  throw DomainError("dart not in any vertex pair");
}

const Arrow& Quiver::arrow(int id) const {
  for (const auto& a : arrows)
    if (a.id == id) return a;
  throw DomainError("no arrow with that id");
}

std::pair<Quiver, RelationIdeal> medial_quiver(const permgroup::Constellation& c) {
  if (!permgroup::validate_constellation(c).ok()) throw DomainError("not a valid constellation");

  Quiver q;
  q.degree = c.degree();
  for (int e = 1; e <= c.degree(); ++e)
    if (e < c.alpha(e)) q.vertex_pairs.emplace_back(e, c.alpha(e));

  std::vector<int> cycle_of(static_cast<size_t>(c.degree()) + 1, -1);
  auto sigma_cycles = c.sigma.cycles();
  for (size_t t = 0; t < sigma_cycles.size(); ++t)
    for (int e : sigma_cycles[t]) cycle_of[static_cast<size_t>(e)] = static_cast<int>(t);

  for (int e = 1; e <= c.degree(); ++e)
    q.arrows.push_back(Arrow{e, q.vertex_of(e), q.vertex_of(c.sigma(e)),
                             cycle_of[static_cast<size_t>(e)]});

  // The successor of the arrow at e sits at f = sigma(e), except that when
  // {f, alpha(f)} is a loop (both darts in one sigma-cycle) the traversal
  // crosses to the partner dart.  Every other composable pair is forbidden.
  RelationIdeal ideal;
  for (int e = 1; e <= c.degree(); ++e) {
    int f = c.sigma(e);
    int continuation =
        (cycle_of[static_cast<size_t>(f)] == cycle_of[static_cast<size_t>(c.alpha(f))])
            ? c.alpha(f)
            : f;
    int head = q.arrows[static_cast<size_t>(e - 1)].head;
    for (const auto& b : q.arrows)
      if (b.tail == head && b.id != continuation) ideal.forbidden.insert({e, b.id});
  }
  return {std::move(q), std::move(ideal)};
}

AxiomReport check_surface_axioms(const Quiver& q, const RelationIdeal& ideal) {
  AxiomReport r;

  r.regular_degree = true;
  for (size_t v = 0; v < q.vertex_pairs.size(); ++v) {
    int in = 0, out = 0;
    for (const auto& a : q.arrows) {
      if (a.tail == static_cast<int>(v)) ++out;
      if (a.head == static_cast<int>(v)) ++in;
    }
    if (in != 2 || out != 2) r.regular_degree = false;
  }

  r.quadratic = true;
  for (const auto& [a, b] : ideal.forbidden) {
    bool composable = false;
    for (const auto& x : q.arrows)
      for (const auto& y : q.arrows)
        if (x.id == a && y.id == b && x.head == y.tail) composable = true;
    if (!composable) r.quadratic = false;
  }

  r.unique_forbidden = true;
  r.unique_allowed = true;
  for (const auto& a : q.arrows) {
    int fwd_in = 0, fwd_out = 0, bwd_in = 0, bwd_out = 0;
    for (const auto& b : q.arrows) {
      if (a.head == b.tail) (ideal.forbidden.count({a.id, b.id}) ? fwd_in : fwd_out)++;
      if (b.head == a.tail) (ideal.forbidden.count({b.id, a.id}) ? bwd_in : bwd_out)++;
    }
    if (fwd_in != 1 || bwd_in != 1) r.unique_forbidden = false;
    if (fwd_out != 1 || bwd_out != 1) r.unique_allowed = false;
  }
  return r;
}

int successor(const Quiver& q, const RelationIdeal& ideal, int arrow_id) {
  const Arrow& a = q.arrow(arrow_id);
  int found = 0, result = 0;
  for (const auto& b : q.arrows)
    if (b.tail == a.head && !ideal.forbidden.count({a.id, b.id})) {
      ++found;
      result = b.id;
    }
  if (found != 1) throw DomainError("arrow lacks a unique allowed follower");
  return result;
}

std::vector<std::vector<int>> nonzero_cycles(const Quiver& q, const RelationIdeal& ideal) {
  if (!check_surface_axioms(q, ideal).all()) throw DomainError("surface axioms fail");
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (const auto& start : q.arrows) {
    if (seen.count(start.id)) continue;
    std::vector<int> orbit;
    int a = start.id;
    do {
      orbit.push_back(a);
      seen.insert(a);
      a = successor(q, ideal, a);
    } while (a != start.id);
    out.push_back(std::move(orbit));
  }
  return out;
}

std::map<int, int> nonzero_cycle_lengths(const Quiver& q, const RelationIdeal& ideal) {
  std::map<int, int> out;
  for (const auto& orbit : nonzero_cycles(q, ideal))
    out[q.arrow(orbit.front()).cycle_tag] += static_cast<int>(orbit.size());
  return out;
}

std::string quiver_dot(const Quiver& q, const RelationIdeal& ideal) {
  static const char* palette[] = {"black",  "red",  "blue",   "forestgreen",
                                  "orange", "plum", "brown",  "turquoise"};
  std::ostringstream out;
  out << "digraph medial {\n";
  for (const auto& [a, b] : ideal.forbidden) out << "  // relation: a" << a << " a" << b << "\n";
  for (size_t v = 0; v < q.vertex_pairs.size(); ++v)
    out << "  v" << v << " [label=\"{" << q.vertex_pairs[v].first << ","
        << q.vertex_pairs[v].second << "}\"];\n";
  for (const auto& a : q.arrows)
    out << "  v" << a.tail << " -> v" << a.head << " [label=\"a" << a.id << "\", color=\""
        << palette[a.cycle_tag % 8] << "\"];\n";
  out << "}\n";
  return out.str();
}

void to_json(nlohmann::json& j, const Quiver& q) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& [e, f] : q.vertex_pairs) verts.push_back({e, f});
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : q.arrows)
    arrows.push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}, {"tag", a.cycle_tag}});
  j = nlohmann::json{{"degree", q.degree}, {"vertices", verts}, {"arrows", arrows}};
}

void from_json(const nlohmann::json& j, Quiver& q) {
  q = Quiver{};
  q.degree = j.at("degree").get<int>();
  for (const auto& v : j.at("vertices"))
    q.vertex_pairs.emplace_back(v.at(0).get<int>(), v.at(1).get<int>());
  for (const auto& a : j.at("arrows"))
    q.arrows.push_back(Arrow{a.at("id").get<int>(), a.at("tail").get<int>(),
                             a.at("head").get<int>(), a.at("tag").get<int>()});
}

void to_json(nlohmann::json& j, const RelationIdeal& ideal) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : ideal.forbidden) pairs.push_back({a, b});
  j = nlohmann::json{{"forbidden", pairs}};
}

void from_json(const nlohmann::json& j, RelationIdeal& ideal) {
  ideal = RelationIdeal{};
  for (const auto& p : j.at("forbidden"))
    ideal.forbidden.insert({p.at(0).get<int>(), p.at(1).get<int>()});
}

namespace {

int path_tail(const Quiver& q, const Path& p) {
  return p.trivial() ? p.at : q.arrow(p.arrows.front()).tail;
}

int path_head(const Quiver& q, const Path& p) {
  return p.trivial() ? p.at : q.arrow(p.arrows.back()).head;
}

}  // namespace

PathVector::PathVector(const Quiver& q, int truncation)
    : quiver_(&q), truncation_(truncation) {
  if (truncation < 0) throw DomainError("negative path truncation");
}

PathVector PathVector::trivial(const Quiver& q, int vertex, int truncation) {
  if (vertex < 0 || vertex >= static_cast<int>(q.vertex_pairs.size()))
    throw DomainError("trivial path at unknown vertex");
  PathVector v(q, truncation);
  v.add_term(Path{vertex, {}}, 1);
  return v;
}

PathVector PathVector::arrow(const Quiver& q, int arrow_id, int truncation) {
  q.arrow(arrow_id);  // existence check
  PathVector v(q, truncation);
  v.add_term(Path{-1, {arrow_id}}, 1);
  return v;
}

PathVector& PathVector::add_term(Path p, Rational c) {
  if (c == 0) return *this;
  if (p.length() > truncation_) {
    truncated_ = true;
    return *this;
  }
  for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (quiver_->arrow(p.arrows[i]).head != quiver_->arrow(p.arrows[i + 1]).tail)
      throw DomainError("path arrows do not compose");
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(std::move(p), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

PathVector PathVector::operator+(const PathVector& other) const {
  if (quiver_ != other.quiver_) throw DomainError("path vectors over different quivers");
  PathVector out(*quiver_, std::min(truncation_, other.truncation_));
  out.truncated_ = truncated_ || other.truncated_;
  for (const auto& [p, c] : terms_) out.add_term(p, c);
  for (const auto& [p, c] : other.terms_) out.add_term(p, c);
  return out;
}

PathVector PathVector::operator-(const PathVector& other) const {
  return *this + other.scaled(-1);
}

PathVector PathVector::scaled(const Rational& c) const {
  PathVector out(*quiver_, truncation_);
  out.truncated_ = truncated_;
  if (c == 0) return out;
  for (const auto& [p, coeff] : terms_) {
    Rational prod = coeff * c;
    out.add_term(p, prod);
  }
  return out;
}

bool PathVector::operator==(const PathVector& other) const {
  return quiver_ == other.quiver_ && terms_ == other.terms_ &&
         truncation_ == other.truncation_;
}

std::string PathVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (c != 1 || p.trivial()) out << rational_str(c) << "*";
    if (p.trivial()) {
      out << "e" << p.at;
    } else {
      for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) out << "*";
        out << "a" << p.arrows[i];
      }
    }
  }
  return out.str();
}

PathVector path_multiply(const PathVector& p, const PathVector& q, const RelationIdeal& ideal) {
  if (p.quiver() != q.quiver()) throw DomainError("path vectors over different quivers");
  const Quiver& quiv = *p.quiver();
  PathVector out(quiv, std::min(p.truncation(), q.truncation()));
  out.truncated_ = p.truncated() || q.truncated();
  for (const auto& [lhs, cl] : p.terms()) {
    for (const auto& [rhs, cr] : q.terms()) {
      if (path_head(quiv, lhs) != path_tail(quiv, rhs)) continue;
      if (!lhs.trivial() && !rhs.trivial() &&
          ideal.forbidden.count({lhs.arrows.back(), rhs.arrows.front()}))
        continue;
      Path joined = lhs.trivial() ? rhs : lhs;
      if (!lhs.trivial() && !rhs.trivial())
        joined.arrows.insert(joined.arrows.end(), rhs.arrows.begin(), rhs.arrows.end());
      Rational c = cl * cr;
      out.add_term(std::move(joined), c);
    }
  }
  return out;
}

}  // namespace surfalg::quiver
