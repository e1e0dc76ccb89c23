// End-to-end gate for the toolkit: nine independent checks, one line each.
// Runs the library against the reference implementations in oracles.hpp on
// randomized and pinned inputs; any failed line exits nonzero.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "surfalg/affine.hpp"
#include "surfalg/common.hpp"
#include "surfalg/constellation.hpp"
#include "surfalg/f2gp.hpp"
#include "surfalg/grassmann.hpp"
#include "surfalg/laurent.hpp"
#include "surfalg/laurent_matrix.hpp"
#include "surfalg/lusztig.hpp"
#include "surfalg/order.hpp"
#include "surfalg/permutation.hpp"
#include "surfalg/quiver.hpp"
#include "surfalg/ratmat.hpp"

using namespace surfalg;
using laurent::LaurentMatrix;
using laurent::TruncatedLaurent;
using permgroup::Constellation;
using permgroup::Permutation;
using testsupport::Rng;

namespace {

struct CheckFail {
  std::string msg;
};

#define REQUIRE(cond, msg)                                                   \
  do {                                                                       \
    if (!(cond)) throw CheckFail{std::string(msg) + " (line " +              \
                                 std::to_string(__LINE__) + ")"};            \
  } while (0)

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. Random branched coverings: Euler data consistent, medial quiver gentle.
std::string check_constellations() {
  Rng rng(101);
  const auto t0 = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 500; ++trial) {
    const int degree = 2 * rng.pick_int(1, 6);
    Constellation c = testsupport::random_constellation(rng, degree);
    auto d = permgroup::surface_data(c);
    REQUIRE(d.euler % 2 == 0, "odd euler characteristic");
    REQUIRE(d.genus >= 0, "negative genus");
    REQUIRE(d.edges == degree / 2, "edge count is not half the degree");
    REQUIRE(d.vertices - d.edges + d.faces == d.euler, "euler sum mismatch");
    auto [q, ideal] = quiver::medial_quiver(c);
    auto ax = quiver::check_surface_axioms(q, ideal);
    REQUIRE(ax.regular_degree, "vertex without in/out degree 2");
    REQUIRE(ax.unique_forbidden, "arrow without unique forbidden continuation");
    REQUIRE(ax.unique_allowed, "arrow without unique allowed continuation");
    REQUIRE(ax.quadratic, "non-quadratic relation");
  }
  const long long elapsed = ms_since(t0);
  REQUIRE(elapsed < 5000, "500 constellations took too long");
  return std::to_string(elapsed) + " ms";
}

// 2. The one-edge dessin: two loops x, y with xy = yx = 0, and its glued
// order inside 2x2 series matrices = pairs (f, g) with f(0) = g(0).
std::string check_one_edge_dessin() {
  Permutation tau = Permutation::from_cycles(2, {{1, 2}});
  Constellation c(tau, tau, Permutation(2));
  REQUIRE(permgroup::validate_constellation(c).ok(), "one-edge dessin invalid");
  REQUIRE(permgroup::surface_data(c).genus == 0, "one-edge dessin not spherical");

  auto [q, ideal] = quiver::medial_quiver(c);
  REQUIRE(q.vertex_pairs.size() == 1, "expected a single medial vertex");
  REQUIRE(q.arrows.size() == 2, "expected two loops");
  std::set<std::pair<int, int>> expect{{1, 2}, {2, 1}};
  REQUIRE(ideal.forbidden == expect, "relations are not {xy, yx}");
  REQUIRE(!ideal.forbidden.count({1, 1}), "x^2 should survive");
  REQUIRE(!ideal.forbidden.count({2, 2}), "y^2 should survive");

  auto s = order::build_surface_order(c);
  auto diag = [](TruncatedLaurent a, TruncatedLaurent b) {
    LaurentMatrix m(2, 2, 16);
    m.set(0, 0, std::move(a));
    m.set(1, 1, std::move(b));
    return m;
  };
  const auto x_gen = diag(TruncatedLaurent::monomial(1), TruncatedLaurent::zero());
  const auto y_gen = diag(TruncatedLaurent::zero(), TruncatedLaurent::monomial(1));
  REQUIRE(order::membership(s, {x_gen}), "x generator not in the order");
  REQUIRE(order::membership(s, {y_gen}), "y generator not in the order");
  REQUIRE((x_gen * y_gen).is_zero_to_precision(), "xy is nonzero");
  REQUIRE((y_gen * x_gen).is_zero_to_precision(), "yx is nonzero");

  auto matched = diag(TruncatedLaurent(0, {Rational(3), Rational(1)}, 16),
                      TruncatedLaurent::constant(3));
  REQUIRE(order::membership(s, {matched}), "matched constants rejected");
  auto split_consts = diag(TruncatedLaurent::constant(1), TruncatedLaurent::constant(2));
  REQUIRE(!order::membership(s, {split_consts}), "mismatched constants accepted");
  auto pole = diag(TruncatedLaurent::monomial(-1), TruncatedLaurent::zero());
  REQUIRE(!order::membership(s, {pole}), "pole accepted");
  return "";
}

// 3. Random window pairs: the monomial matrix realization is a homomorphism
// landing in determinant order zero.
std::string check_affine_matrices() {
  Rng rng(303);
  const auto t0 = std::chrono::steady_clock::now();
  auto random_window = [&](int n) {
    Permutation f = testsupport::random_permutation(rng, n);
    std::vector<long long> t(static_cast<size_t>(n));
    long long sum = 0;
    for (int i = 0; i + 1 < n; ++i) {
      t[static_cast<size_t>(i)] = rng.pick(-3, 3);
      sum += t[static_cast<size_t>(i)];
    }
    t[static_cast<size_t>(n - 1)] = -sum;
    std::vector<long long> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
      w[static_cast<size_t>(i - 1)] = f(i) + static_cast<long long>(n) * t[static_cast<size_t>(i - 1)];
    return w;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.pick_int(2, 6);
    auto wu = random_window(n);
    auto wv = random_window(n);
    REQUIRE(affine::validate_window(n, wu), "generated window invalid");
    affine::AffinePermutation u(n, wu), v(n, wv);
    auto w = affine::compose(u, v);
    auto mu = affine::to_matrix(u, 16);
    auto mv = affine::to_matrix(v, 16);
    auto mw = affine::to_matrix(w, 16);
    REQUIRE(mw.agrees_with(mu * mv), "matrix of composite disagrees with product");
    REQUIRE(mu.det_ord() && *mu.det_ord() == 0, "window matrix leaves order zero");
    REQUIRE(affine::compose(u, affine::inverse(u)) == affine::AffinePermutation::identity(n),
            "inverse is not a two-sided inverse");
  }
  const long long elapsed = ms_since(t0);
  REQUIRE(elapsed < 5000, "1000 window operations took too long");
  return std::to_string(elapsed) + " ms";
}

// 4. Coxeter presentation of the cyclic generators, exhaustively for small n.
std::string check_coxeter_relations() {
  for (int n = 3; n <= 5; ++n) {
    const auto e = affine::AffinePermutation::identity(n);
    for (int i = 1; i <= n; ++i) {
      auto s = affine::generator(i, n);
      REQUIRE(affine::compose(s, s) == e, "generator is not an involution");
      auto t = affine::generator(i % n + 1, n);
      auto st = affine::compose(s, t);
      REQUIRE(affine::compose(st, affine::compose(st, st)) == e,
              "braid relation fails for adjacent generators");
      for (int j = 1; j <= n; ++j) {
        const int gap = (j - i + n) % n;
        if (gap <= 1 || gap == n - 1) continue;
        auto r = affine::generator(j, n);
        REQUIRE(affine::compose(s, r) == affine::compose(r, s),
                "distant generators fail to commute");
      }
    }
  }
  return "";
}

// 5. The embedding of nilpotent matrices: equivariant under conjugation,
// sends 0 to the (n-1) times shifted standard lattice, and lands in the
// component indexed by n(n-1) whatever the Jordan type.
std::string check_embedding_equivariance() {
  Rng rng(505);
  for (int n = 1; n <= 4; ++n) {
    // wide window: the equality test inverts a basis of determinant order
    // n(n-1), which eats more than the default 16 coefficients for n >= 3
    auto phi0 = lusztig::phi_nilpotent(RationalMatrix(n, n), 48);
    grassmann::LatticeBasis shifted(LaurentMatrix::identity(n, 48).shifted(n - 1));
    REQUIRE(grassmann::lattice_equal(phi0, shifted), "zero matrix misses x^(n-1) lattice");
    REQUIRE(grassmann::component_index(phi0) == static_cast<long>(n) * (n - 1),
            "zero matrix lands in the wrong component");
  }
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.pick_int(1, 4);
    std::vector<int> blocks;
    for (int left = n; left > 0;) {
      int b = rng.pick_int(1, left);
      blocks.push_back(b);
      left -= b;
    }
    RationalMatrix nil = testsupport::random_jordan_nilpotent(rng, blocks);
    RationalMatrix g = testsupport::random_invertible(rng, n);
    REQUIRE(lusztig::check_equivariance(g, nil, 16), "conjugation equivariance fails");
  }
  std::optional<long> comp;
  for (int rep = 0; rep < 5; ++rep) {
    auto nil = testsupport::random_jordan_nilpotent(rng, {2, 1});
    long c = grassmann::component_index(lusztig::phi_nilpotent(nil, 16));
    if (!comp) comp = c;
    REQUIRE(*comp == c, "component moved within one Jordan type");
  }
  REQUIRE(*comp == 6, "component of type (2,1) is not n(n-1)");
  return "";
}

// 6. Lattice equality against the column Hermite form.  Either both sides
// decide and agree, or at least one refuses with a precision error; a
// decided wrong answer is the only way to fail.
std::string check_lattice_equality_oracle() {
  Rng rng(606);
  int both_decided = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.pick_int(1, 3);
    LaurentMatrix am = testsupport::random_lattice_basis(rng, n);
    LaurentMatrix bm = trial % 2 == 0 ? testsupport::random_lattice_basis(rng, n)
                                      : am * testsupport::random_unit(rng, n);
    std::optional<bool> lib, oracle;
    try {
      lib = grassmann::lattice_equal(grassmann::LatticeBasis(am),
                                     grassmann::LatticeBasis(bm));
    } catch (const PrecisionError&) {
    }
    try {
      oracle = testsupport::hermite_equal(am, bm);
    } catch (const PrecisionError&) {
    }
    if (lib && oracle) {
      ++both_decided;
      REQUIRE(*lib == *oracle, "library and column reduction disagree");
    }
    if (trial % 2 == 1 && lib) REQUIRE(*lib, "unimodular twist not recognized as equal");
  }
  REQUIRE(both_decided >= 200, "too many undecided pairs to be meaningful");
  return std::to_string(both_decided) + "/300 decided by both";
}

// 7. Cyclic quiver representations: nilpotency of the representation is
// nilpotency of the folded matrix, and chain products satisfy both
// one-step recursions at every depth.
std::string check_rep_nilpotency() {
  Rng rng(707);
  bool seen_nil = false, seen_loop = false;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = rng.pick_int(1, 3);
    auto rep = testsupport::random_rep(rng, n, 2, true);
    int maxd = 1;
    for (int j = 1; j <= n; ++j) maxd = std::max(maxd, rep.dim(j));
    const bool nil = lusztig::is_nilpotent_rep(rep);
    const bool folded =
        lusztig::big_matrix(rep, 48).pow(static_cast<long>(n) * maxd).is_zero_to_precision();
    REQUIRE(nil == folded, "representation and folded matrix disagree on nilpotency");
    (nil ? seen_nil : seen_loop) = true;
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= 2 * n; ++k) {
        auto next = lusztig::chain_product(rep, j, k + 1);
        REQUIRE(next == rep.map(j - k) * lusztig::chain_product(rep, j, k),
                "chain recursion fails on the left");
        REQUIRE(next == lusztig::chain_product(rep, j - 1, k) * rep.map(j),
                "chain recursion fails on the right");
      }
  }
  REQUIRE(seen_nil && seen_loop, "random sample never hit both outcomes");
  return "";
}

// 8. Free group letters: the pinned encoding, a strict total order on all
// short one-sided words, string modules with xy = yx = 0, and the
// symmetric-power sl2 triples.
std::string check_letters_and_modules() {
  auto enc = f2gp::encode(f2gp::parse_word("x^2*y^-3*x^3*y^-2"));
  REQUIRE(enc.bits == "1100011100" && enc.copy == 2, "pinned encoding changed");

  for (int copy = 1; copy <= 2; ++copy) {
    std::vector<f2gp::ReducedWord> words{f2gp::ReducedWord::empty()};
    for (int len = 1; len <= 8; ++len)
      for (int mask = 0; mask < (1 << len); ++mask) {
        std::string bits;
        for (int b = len - 1; b >= 0; --b) bits += (mask >> b & 1) ? '1' : '0';
        words.push_back(f2gp::decode(bits, copy));
      }
    const int m = static_cast<int>(words.size());
    auto rank = [&](int i, int j) {
      auto r = f2gp::compare(words[static_cast<size_t>(i)], words[static_cast<size_t>(j)]);
      return r == f2gp::Ordering::Less ? -1 : r == f2gp::Ordering::Greater ? 1 : 0;
    };
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const int r = rank(i, j);
        REQUIRE((r == 0) == (i == j), "distinct words compare equal");
        REQUIRE(rank(j, i) == -r, "comparison is not antisymmetric");
      }
    Rng rng(808 + copy);
    for (int t = 0; t < 5000; ++t) {
      int i = rng.pick_int(0, m - 1), j = rng.pick_int(0, m - 1), k = rng.pick_int(0, m - 1);
      if (rank(i, j) < 0 && rank(j, k) < 0)
        REQUIRE(rank(i, k) < 0, "comparison is not transitive");
    }
  }

  Rng rng(809);
  for (int t = 0; t < 50; ++t) {
    std::string z;
    const int len = rng.pick_int(0, 8);
    for (int p = 0; p < len; ++p) z += rng.pick(0, 1) ? 'x' : 'y';
    auto mod = f2gp::string_module(z);
    REQUIRE((mod.X * mod.Y).is_zero() && (mod.Y * mod.X).is_zero(), "XY or YX nonzero");
    REQUIRE(mod.X.pow(mod.dim).is_zero() && mod.Y.pow(mod.dim).is_zero(),
            "string module actions are not nilpotent");
    REQUIRE(mod.X.rank() + mod.Y.rank() == len, "ranks do not add up to the length");
  }

  for (int n = 0; n <= 8; ++n) {
    auto rep = f2gp::sym_rep(n);
    REQUIRE(rep.X * rep.Y - rep.Y * rep.X == rep.H, "[X,Y] != H");
    REQUIRE(rep.H * rep.X - rep.X * rep.H == rep.X.scaled(2), "[H,X] != 2X");
    REQUIRE(rep.H * rep.Y - rep.Y * rep.H == rep.Y.scaled(-2), "[H,Y] != -2Y");
    REQUIRE(rep.X.pow(n + 1).is_zero() && rep.Y.pow(n + 1).is_zero(),
            "raising/lowering operators are not nilpotent");
  }
  return "";
}

// 9. Series arithmetic against direct convolution, honest inverses, and
// additivity of the determinant valuation.
std::string check_series_arithmetic() {
  Rng rng(909);
  for (int t = 0; t < 1000; ++t) {
    auto f = testsupport::random_series(rng, -4, 4, 5);
    auto g = testsupport::random_series(rng, -4, 4, 5);
    REQUIRE(f * g == testsupport::convolution_product(f, g),
            "product disagrees with convolution");
  }
  int inverted = 0;
  for (int t = 0; t < 200; ++t) {
    auto f = testsupport::random_series(rng, -4, 4, 5);
    if (f.is_zero()) continue;
    ++inverted;
    auto p = f.inverse() * f;
    REQUIRE((p - TruncatedLaurent::constant(1, p.precision())).is_zero(),
            "inverse times original is not 1");
  }
  REQUIRE(inverted >= 150, "too few invertible samples");
  int additive = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = rng.pick_int(1, 3);
    auto a = testsupport::random_lattice_basis(rng, n);
    auto b = testsupport::random_lattice_basis(rng, n);
    auto da = a.det_ord(), db = b.det_ord(), dab = (a * b).det_ord();
    if (!da || !db || !dab) continue;
    ++additive;
    REQUIRE(*dab == *da + *db, "determinant valuation is not additive");
  }
  REQUIRE(additive >= 80, "too few determinate products");
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::string (*fn)();
  };
  const Criterion list[] = {
      {"random constellations: surface data and medial axioms", check_constellations},
      {"one-edge dessin: loops, xy=yx=0, glued order", check_one_edge_dessin},
      {"affine windows: matrix realization is a homomorphism", check_affine_matrices},
      {"affine Coxeter relations for n=3,4,5", check_coxeter_relations},
      {"nilpotent embedding: equivariance and components", check_embedding_equivariance},
      {"lattice equality agrees with column reduction", check_lattice_equality_oracle},
      {"quiver rep nilpotency matches the folded matrix", check_rep_nilpotency},
      {"one-sided words, string modules, symmetric powers", check_letters_and_modules},
      {"series arithmetic against direct convolution", check_series_arithmetic},
  };
  int failures = 0;
  int number = 0;
  for (const auto& c : list) {
    ++number;
    try {
      std::string detail = c.fn();
      std::cout << "[PASS] " << number << ". " << c.title;
      if (!detail.empty()) std::cout << " (" << detail << ")";
      std::cout << "\n";
    } catch (const CheckFail& f) {
      std::cout << "[FAIL] " << number << ". " << c.title << ": " << f.msg << "\n";
      ++failures;
    } catch (const std::exception& e) {
      std::cout << "[FAIL] " << number << ". " << c.title << ": unexpected error: " << e.what()
                << "\n";
      ++failures;
    }
  }
  if (failures) {
    std::cout << failures << " of " << number << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << number << " criteria passed\n";
  return 0;
}
