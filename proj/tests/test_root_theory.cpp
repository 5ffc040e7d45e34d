#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "oracle_roots.hpp"
#include "qsphere/roots.hpp"

using namespace qsphere;

namespace {

DimVector vec(std::initializer_list<Int> xs) {
  DimVector d(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) d[i++] = x;
  return d;
}

const Quiver& a2() {
  static Quiver q({"1", "2"}, {{"1", "2"}});
  return q;
}

const Quiver& a3() {
  static Quiver q({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  return q;
}

const Quiver& kronecker() {
  static Quiver q({"1", "2"}, {{"1", "2"}, {"1", "2"}});
  return q;
}

DimVector random_vec(std::mt19937& rng, int n, Int lo, Int hi) {
  std::uniform_int_distribution<Int> pick(lo, hi);
  DimVector d(n);
  for (int i = 0; i < n; ++i) d[i] = pick(rng);
  return d;
}

}  // namespace

TEST_CASE("euler matrix of a path") {
  const IntMatrix m = euler_matrix(a3());
  IntMatrix want(3, 3);
  want << 1, -1, 0,
          0, 1, -1,
          0, 0, 1;
  CHECK(m == want);
}

TEST_CASE("euler form values") {
  CHECK(euler_form(a2(), vec({1, 1}), vec({1, 1})) == 1);
  CHECK(euler_form(kronecker(), vec({1, 1}), vec({1, 1})) == 0);
  CHECK(euler_form(kronecker(), vec({1, 0}), vec({0, 1})) == -2);
  CHECK(euler_form(kronecker(), vec({0, 1}), vec({1, 0})) == 0);
}

TEST_CASE("euler form is bilinear") {
  std::mt19937 rng(917001);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = random_vec(rng, 3, -4, 4);
    const auto e = random_vec(rng, 3, -4, 4);
    const auto f = random_vec(rng, 3, -4, 4);
    CHECK(euler_form(a3(), d + f, e) == euler_form(a3(), d, e) + euler_form(a3(), f, e));
    CHECK(euler_form(a3(), d, e + f) == euler_form(a3(), d, e) + euler_form(a3(), d, f));
  }
}

TEST_CASE("cartan pairing symmetrises the euler form") {
  std::mt19937 rng(917002);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = random_vec(rng, 2, -4, 4);
    const auto e = random_vec(rng, 2, -4, 4);
    CHECK(cartan_pairing(kronecker(), d, e) ==
          euler_form(kronecker(), d, e) + euler_form(kronecker(), e, d));
    CHECK(cartan_pairing(kronecker(), d, e) == cartan_pairing(kronecker(), e, d));
  }
}

TEST_CASE("cartan matrix ignores orientation") {
  CHECK(cartan_matrix(a3()) == cartan_matrix(a3().with_arrow_reversed(0)));
  IntMatrix want(2, 2);
  want << 2, -2,
          -2, 2;
  CHECK(cartan_matrix(kronecker()) == want);
}

TEST_CASE("euler matrix refuses loops") {
  Quiver loop({"a"}, {{"a", "a"}});
  CHECK_THROWS_AS(euler_matrix(loop), std::invalid_argument);
}

TEST_CASE("reflections are involutions fixing the orthogonal part") {
  std::mt19937 rng(917003);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = random_vec(rng, 3, -5, 5);
    for (int v = 0; v < 3; ++v) {
      const auto r = reflect(a3(), d, v);
      CHECK(same_vector(reflect(a3(), r, v), d));
      // Only the reflected coordinate moves.
      for (int j = 0; j < 3; ++j)
        if (j != v) CHECK(r[j] == d[j]);
    }
  }
}

TEST_CASE("reflection on a worked example") {
  // s_2 (1,1,0) on the path adds the pairing deficit at the middle vertex.
  CHECK(same_vector(reflect(a3(), vec({1, 1, 0}), 1), vec({1, 0, 0})));
  CHECK(same_vector(reflect(a3(), vec({1, 0, 1}), 1), vec({1, 2, 1})));
}

TEST_CASE("fundamental domain membership") {
  CHECK(in_fundamental_domain(kronecker(), vec({1, 1})));
  CHECK_FALSE(in_fundamental_domain(a2(), vec({1, 1})));
  // Disconnected support fails.
  CHECK_FALSE(in_fundamental_domain(a3(), vec({1, 0, 1})));
  CHECK_THROWS_AS(in_fundamental_domain(a2(), vec({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(in_fundamental_domain(a2(), vec({-1, 1})), std::invalid_argument);
}

TEST_CASE("classification of hand-checked vectors") {
  SUBCASE("coordinate vectors are real") {
    const auto rc = classify_root(a3(), vec({0, 1, 0}));
    CHECK(rc.kind == RootKind::RealRoot);
    CHECK(rc.trace.empty());
  }
  SUBCASE("the highest root of the path is real") {
    const auto rc = classify_root(a3(), vec({1, 1, 1}));
    CHECK(rc.kind == RootKind::RealRoot);
    REQUIRE(rc.representative);
    CHECK(rc.representative->sum() == 1);
  }
  SUBCASE("(2,1) is not a root of a2") {
    CHECK(classify_root(a2(), vec({2, 1})).kind == RootKind::NotRoot);
  }
  SUBCASE("(1,0,1) has disconnected support") {
    CHECK(classify_root(a3(), vec({1, 0, 1})).kind == RootKind::NotRoot);
  }
  SUBCASE("kronecker (1,1) is imaginary and already reduced") {
    const auto rc = classify_root(kronecker(), vec({1, 1}));
    CHECK(rc.kind == RootKind::ImaginaryRoot);
    CHECK(rc.trace.empty());
    REQUIRE(rc.representative);
    CHECK(same_vector(*rc.representative, vec({1, 1})));
  }
  SUBCASE("kronecker (2,1) is real") {
    const auto rc = classify_root(kronecker(), vec({2, 1}));
    CHECK(rc.kind == RootKind::RealRoot);
  }
  SUBCASE("kronecker (3,1) is not a root") {
    CHECK(classify_root(kronecker(), vec({3, 1})).kind == RootKind::NotRoot);
  }
}

TEST_CASE("loop quivers are rejected throughout") {
  Quiver loop({"a"}, {{"a", "a"}});
  CHECK_THROWS_AS(classify_root(loop, vec({1})), std::invalid_argument);
  CHECK_THROWS_AS(euler_form(loop, vec({1}), vec({1})), std::invalid_argument);
  CHECK_THROWS_AS(reflect(loop, vec({2}), 0), std::invalid_argument);
  CHECK_THROWS_AS(in_fundamental_domain(loop, vec({1})), std::invalid_argument);
}

TEST_CASE("trace replays back to the input") {
  std::mt19937 rng(917004);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = random_vec(rng, 3, 0, 6);
    if (d.isZero()) continue;
    const auto rc = classify_root(a3(), d);
    if (!rc.representative) continue;
    DimVector back = *rc.representative;
    for (auto it = rc.trace.rbegin(); it != rc.trace.rend(); ++it)
      back = reflect(a3(), back, *it);
    CHECK(same_vector(back, d));
  }
}

TEST_CASE("imaginary representatives never exceed the input") {
  std::mt19937 rng(917005);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = random_vec(rng, 2, 0, 8);
    if (d.isZero()) continue;
    const auto rc = classify_root(kronecker(), d);
    if (rc.kind != RootKind::ImaginaryRoot) continue;
    REQUIRE(rc.representative);
    CHECK(entrywise_leq(*rc.representative, d));
    CHECK(in_fundamental_domain(kronecker(), *rc.representative));
    CHECK(cartan_pairing(kronecker(), d, d) <= 0);
  }
}

TEST_CASE("real roots have cartan norm two") {
  std::mt19937 rng(917006);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = random_vec(rng, 3, 0, 5);
    if (d.isZero()) continue;
    const auto rc = classify_root(a3(), d);
    if (rc.kind == RootKind::RealRoot) CHECK(cartan_pairing(a3(), d, d) == 2);
  }
}

TEST_CASE("classification is invariant under reflection") {
  std::mt19937 rng(917007);
  for (int trial = 0; trial < 120; ++trial) {
    const auto d = random_vec(rng, 2, 0, 5);
    if (d.isZero()) continue;
    const auto before = classify_root(kronecker(), d).kind;
    for (int v = 0; v < 2; ++v) {
      const auto r = reflect(kronecker(), d, v);
      if ((r.array() < 0).any()) continue;
      if (r.isZero()) continue;
      CHECK(classify_root(kronecker(), r).kind == before);
    }
  }
}

TEST_CASE("classification is invariant under reorientation") {
  std::mt19937 rng(917008);
  const Quiver flipped = a3().with_arrow_reversed(1);
  for (int trial = 0; trial < 150; ++trial) {
    const auto d = random_vec(rng, 3, 0, 5);
    if (d.isZero()) continue;
    CHECK(classify_root(a3(), d).kind == classify_root(flipped, d).kind);
  }
}

TEST_CASE("classification agrees with the brute-force root sets") {
  struct Case {
    Quiver q;
    std::vector<oracle::Edge> edges;
  };
  const std::vector<Case> cases = {
      {a2(), {{0, 1}}},
      {a3(), {{0, 1}, {1, 2}}},
      {a3().with_arrow_reversed(0), {{0, 1}, {1, 2}}},
      {kronecker(), {{0, 1}, {0, 1}}},
  };
  const long long bound = 4;
  for (const auto& c : cases) {
    const int n = c.q.vertex_count();
    const auto sets = oracle::enumerate_roots(n, c.edges, bound);
    DimVector d = DimVector::Zero(n);
    while (true) {
      int pos = n - 1;
      while (pos >= 0 && d[pos] == bound) d[pos--] = 0;
      if (pos < 0) break;
      ++d[pos];
      oracle::Vec key(d.data(), d.data() + n);
      const auto rc = classify_root(c.q, d);
      const bool is_real = sets.real.count(key) > 0;
      const bool is_imag = sets.imaginary.count(key) > 0;
      CHECK_FALSE((is_real && is_imag));
      switch (rc.kind) {
        case RootKind::RealRoot: CHECK(is_real); break;
        case RootKind::ImaginaryRoot: CHECK(is_imag); break;
        case RootKind::NotRoot: CHECK_FALSE(is_real); CHECK_FALSE(is_imag); break;
      }
    }
  }
}

TEST_CASE("finite orbit type on small settings") {
  CHECK(finite_orbit_type({a3(), vec({1, 1, 1})}));
  CHECK(finite_orbit_type({a2(), vec({3, 2})}));
  CHECK_FALSE(finite_orbit_type({kronecker(), vec({1, 1})}));
  // Three-legged star: every root is real, any dimension vector works.
  Quiver star3({"c", "1", "2", "3"}, {{"1", "c"}, {"2", "c"}, {"3", "c"}});
  CHECK(finite_orbit_type({star3, vec({2, 2, 2, 2})}));
  // Four-legged star: the smallest imaginary root puts 2 on the centre.
  Quiver star4({"c", "1", "2", "3", "4"},
               {{"1", "c"}, {"2", "c"}, {"3", "c"}, {"4", "c"}});
  CHECK(finite_orbit_type({star4, vec({1, 1, 1, 1, 1})}));
  CHECK_FALSE(finite_orbit_type({star4, vec({2, 1, 1, 1, 1})}));
}

TEST_CASE("finite orbit type requires acyclic orientation") {
  Quiver cyc({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK_THROWS_AS(finite_orbit_type({cyc, vec({1, 1})}), std::invalid_argument);
}
