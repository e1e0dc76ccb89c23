#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "surfalg/common.hpp"
#include "surfalg/constellation.hpp"
#include "surfalg/permutation.hpp"

using surfalg::DomainError;
using namespace surfalg::permgroup;

TEST_CASE("permutation construction and lookup") {
  Permutation id(4);
  CHECK(id.is_identity());
  CHECK(id(3) == 3);

  Permutation p = Permutation::from_images({2, 3, 1});
  CHECK(p(1) == 2);
  CHECK(p(3) == 1);
  CHECK_THROWS_AS(p(0), DomainError);
  CHECK_THROWS_AS(p(4), DomainError);
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 3}), DomainError);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), DomainError);
  CHECK_THROWS_AS(Permutation(-1), DomainError);
}

TEST_CASE("cycle notation both ways") {
  Permutation p = Permutation::from_cycles(5, {{3, 4}, {1, 2}});
  CHECK(p.cycles() == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}});
  CHECK(p.str() == "(1,2)(3,4)(5)");
  CHECK(Permutation::from_cycles(3, {{2, 3, 1}}).cycles() ==
        std::vector<std::vector<int>>{{1, 2, 3}});

  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 4}}), DomainError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 1}}), DomainError);

  nlohmann::json cj = cycles_to_json(p);
  CHECK(cj.size() == 2);  // fixed points stay implicit
  CHECK(permutation_from_json(5, cj) == p);
}

TEST_CASE("composition acts on the left") {
  Permutation p = Permutation::from_images({2, 3, 1});
  Permutation q = Permutation::from_images({1, 3, 2});
  Permutation pq = p * q;
  for (int i = 1; i <= 3; ++i) CHECK(pq(i) == p(q(i)));

  testsupport::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    int n = rng.pick_int(1, 10);
    Permutation a = testsupport::random_permutation(rng, n);
    Permutation b = testsupport::random_permutation(rng, n);
    Permutation ab = a * b;
    for (int i = 1; i <= n; ++i) CHECK(ab(i) == a(b(i)));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
  }
}

static Constellation make(int degree, const std::vector<std::vector<int>>& sigma,
                          const std::vector<std::vector<int>>& alpha) {
  Permutation s = Permutation::from_cycles(degree, sigma);
  Permutation a = Permutation::from_cycles(degree, alpha);
  return Constellation(s, a, (s * a).inverse());
}

TEST_CASE("validation report distinguishes the three axioms") {
  Constellation sphere = make(2, {{1, 2}}, {{1, 2}});
  CHECK(validate_constellation(sphere).ok());

  // alpha with a fixed point
  Constellation bad_alpha = make(4, {{1, 2, 3, 4}}, {{1, 2}});
  auto r1 = validate_constellation(bad_alpha);
  CHECK(!r1.alpha_involution_fpf);
  CHECK(r1.product_identity);

  // two components
  Constellation split = make(4, {}, {{1, 2}, {3, 4}});
  auto r2 = validate_constellation(split);
  CHECK(r2.product_identity);
  CHECK(r2.alpha_involution_fpf);
  CHECK(!r2.transitive);

  // wrong third permutation
  Permutation s = Permutation::from_cycles(2, {{1, 2}});
  Constellation bad_phi(s, s, s);
  CHECK(!validate_constellation(bad_phi).product_identity);
  CHECK_THROWS_AS(surface_data(bad_phi), DomainError);

  CHECK_THROWS_AS(Constellation(Permutation(2), Permutation(4), Permutation(4)), DomainError);
}

TEST_CASE("euler characteristic fixtures") {
  Constellation sphere = make(2, {{1, 2}}, {{1, 2}});
  SurfaceData s = surface_data(sphere);
  CHECK(s.vertices == 1);
  CHECK(s.edges == 1);
  CHECK(s.faces == 2);
  CHECK(s.euler == 2);
  CHECK(s.genus == 0);

  Constellation torus = make(4, {{1, 2, 3, 4}}, {{1, 3}, {2, 4}});
  SurfaceData t = surface_data(torus);
  CHECK(t.vertices == 1);
  CHECK(t.edges == 2);
  CHECK(t.faces == 1);
  CHECK(t.euler == 0);
  CHECK(t.genus == 1);
}

TEST_CASE("random surfaces have even euler characteristic") {
  testsupport::Rng rng(8);
  for (int t = 0; t < 150; ++t) {
    int degree = 2 * rng.pick_int(1, 6);
    Constellation c = testsupport::random_constellation(rng, degree);
    SurfaceData s = surface_data(c);
    CHECK(s.edges == degree / 2);
    CHECK(s.euler % 2 == 0);
    CHECK(s.genus >= 0);
    CHECK(s.euler == s.vertices - s.edges + s.faces);
    CHECK(s.euler == 2 - 2 * s.genus);
  }
}

TEST_CASE("monodromy closure") {
  Constellation sphere = make(2, {{1, 2}}, {{1, 2}});
  CHECK(monodromy_order(sphere) == 2);

  Constellation torus = make(4, {{1, 2, 3, 4}}, {{1, 3}, {2, 4}});
  CHECK(monodromy_order(torus) == 4);
  CHECK(!monodromy_order(torus, 3).has_value());

  // the symmetric group on 3 darts is not reachable (odd degree aside),
  // but a dihedral-size closure is: sigma 4-cycle with a transposing alpha
  Constellation bigger = make(4, {{1, 2, 3, 4}}, {{1, 2}, {3, 4}});
  auto n = monodromy_order(bigger);
  REQUIRE(n.has_value());
  CHECK(*n == 8);
}

TEST_CASE("constellation json round trip") {
  Constellation torus = make(4, {{1, 2, 3, 4}}, {{1, 3}, {2, 4}});
  nlohmann::json j;
  to_json(j, torus);
  Constellation back = constellation_from_json(j);
  CHECK(back.sigma == torus.sigma);
  CHECK(back.alpha == torus.alpha);
  CHECK(back.phi == torus.phi);

  // phi may be omitted; it is recomputed from the product rule
  nlohmann::json partial{{"degree", 4},
                         {"sigma", nlohmann::json::array({{1, 2, 3, 4}})},
                         {"alpha", nlohmann::json::array({{1, 3}, {2, 4}})}};
  Constellation rebuilt = constellation_from_json(partial);
  CHECK(rebuilt.phi == torus.phi);
  CHECK(validate_constellation(rebuilt).ok());
}
