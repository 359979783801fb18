#include "qorc/quiver.hpp"

#include "qorc/linalg.hpp"

#include <doctest.h>

using namespace qorc;

namespace {

Quiver a2() { return Quiver(2, {{1, 2}}); }
Quiver a3_equioriented() { return Quiver(3, {{1, 2}, {2, 3}}); }

DimVec dv(std::initializer_list<int> xs) {
  DimVec d(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) d[i++] = x;
  return d;
}

Representation simple_at(const Quiver& q, int vertex) {
  DimVec d = DimVec::Zero(q.vertex_count());
  d[vertex - 1] = 1;
  return zero_representation(q, d);
}

// E_{1,2} on A2: identity map k -> k.
Representation a2_interval() {
  Representation r = zero_representation(a2(), dv({1, 1}));
  r.maps[0] = MatQ::Identity(1, 1);
  return r;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver(2, {{1, 1}}), std::invalid_argument);   // loop
  CHECK_THROWS_AS(Quiver(2, {{1, 3}}), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(Quiver(3, {{1, 2}}), std::invalid_argument);   // disconnected
  CHECK_NOTHROW(Quiver(2, {{1, 2}, {1, 2}}));                    // multi-arrows allowed
}

TEST_CASE("dynkin recognition") {
  CHECK(a2().is_dynkin());
  CHECK(a3_equioriented().is_dynkin());
  CHECK(Quiver(4, {{1, 3}, {2, 3}, {3, 4}}).is_dynkin());                    // D4 shape
  CHECK(Quiver(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}).is_dynkin());    // E6 shape
  CHECK_FALSE(Quiver(2, {{1, 2}, {1, 2}}).is_dynkin());                      // Kronecker
  CHECK_FALSE(Quiver(3, {{1, 2}, {2, 3}, {3, 1}}).is_dynkin());              // cycle
  CHECK(a3_equioriented().is_type_a_path());
  CHECK_FALSE(Quiver(4, {{1, 3}, {2, 3}, {3, 4}}).is_type_a_path());
}

TEST_CASE("euler product examples") {
  CHECK(euler_product(a2(), dv({1, 1}), dv({1, 1})) == 1);
  CHECK(euler_product(a2(), dv({0, 0}), dv({5, 7})) == 0);
  Quiver a7(7, {{1, 2}, {2, 3}, {4, 3}, {5, 4}, {5, 6}, {7, 6}});
  DimVec ones = dv({1, 1, 1, 1, 1, 1, 1});
  CHECK(euler_form(a7, ones) == 1);
  CHECK_THROWS_AS(euler_product(a2(), dv({1}), dv({1, 1})), std::invalid_argument);
}

TEST_CASE("euler form positive definite on Dynkin quivers") {
  std::vector<Quiver> quivers;
  quivers.push_back(Quiver(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}}));
  quivers.push_back(Quiver(8, {{2, 1}, {2, 3}, {4, 3}, {4, 5}, {6, 5}, {6, 7}, {8, 7}}));
  quivers.push_back(Quiver(5, {{1, 3}, {2, 3}, {3, 4}, {4, 5}}));         // D5
  quivers.push_back(Quiver(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}}));  // E8
  for (const Quiver& q : quivers) {
    REQUIRE(q.is_dynkin());
    const int n = q.vertex_count();
    DimVec a = DimVec::Zero(n);
    // All vectors with entries <= 3.
    while (true) {
      if (a.sum() > 0) CHECK(euler_form(q, a) >= 1);
      int i = 0;
      while (i < n && a[i] == 3) a[i++] = 0;
      if (i == n) break;
      ++a[i];
    }
  }
}

TEST_CASE("hom_dim examples from simples and intervals") {
  Quiver q = a2();
  CHECK(hom_dim(q, simple_at(q, 1), simple_at(q, 1)) == 1);
  CHECK(hom_dim(q, a2_interval(), simple_at(q, 2)) == 0);
  CHECK(hom_dim(q, simple_at(q, 2), a2_interval()) == 1);
}

TEST_CASE("ext_dim examples") {
  Quiver q = a2();
  CHECK(ext_dim(q, simple_at(q, 1), simple_at(q, 2)) == 1);
  CHECK(ext_dim(q, a2_interval(), a2_interval()) == 0);
  Representation zero = zero_representation(q, dv({0, 0}));
  CHECK(ext_dim(q, a2_interval(), zero) == 0);
  CHECK(ext_dim(q, zero, simple_at(q, 1)) == 0);
}

TEST_CASE("orbit codimension examples") {
  Quiver q = a2();
  CHECK(orbit_codim(q, zero_representation(q, dv({1, 1}))) == 1);
  CHECK(orbit_codim(q, a2_interval()) == 0);
  Quiver a3 = a3_equioriented();
  CHECK(orbit_codim(a3, zero_representation(a3, dv({1, 1, 1}))) == 2);
}

TEST_CASE("four-term exactness: cokernel rank reproduces ext") {
  Rng rng(17);
  Quiver a3 = a3_equioriented();
  for (int trial = 0; trial < 30; ++trial) {
    DimVec dv1(3), dv2(3);
    for (int i = 0; i < 3; ++i) {
      dv1[i] = static_cast<int>(rng.uniform(0, 3));
      dv2[i] = static_cast<int>(rng.uniform(0, 3));
    }
    Representation v = random_representation(a3, dv1, rng.next_u64(), 5);
    Representation w = random_representation(a3, dv2, rng.next_u64(), 5);
    MatQ m = hom_ext_matrix(a3, v, w);
    const int coker = static_cast<int>(m.rows()) - rank(m);
    CHECK(coker == ext_dim(a3, v, w));
    CHECK(hom_dim(a3, v, w) - ext_dim(a3, v, w) == euler_product(a3, dv1, dv2));
  }
}

TEST_CASE("hom is additive over direct sums") {
  Rng rng(19);
  Quiver a3 = a3_equioriented();
  for (int trial = 0; trial < 15; ++trial) {
    DimVec d1(3), d2(3), d3(3);
    for (int i = 0; i < 3; ++i) {
      d1[i] = static_cast<int>(rng.uniform(0, 2));
      d2[i] = static_cast<int>(rng.uniform(0, 2));
      d3[i] = static_cast<int>(rng.uniform(0, 2));
    }
    Representation v = random_representation(a3, d1, rng.next_u64(), 4);
    Representation vp = random_representation(a3, d2, rng.next_u64(), 4);
    Representation w = random_representation(a3, d3, rng.next_u64(), 4);
    CHECK(hom_dim(a3, direct_sum(a3, v, vp), w) ==
          hom_dim(a3, v, w) + hom_dim(a3, vp, w));
  }
}

TEST_CASE("random representation determinism and shape") {
  Quiver q = a2();
  Representation a = random_representation(q, dv({2, 3}), 12345);
  Representation b = random_representation(q, dv({2, 3}), 12345);
  REQUIRE(a.maps.size() == 1);
  CHECK(a.maps[0].rows() == 3);
  CHECK(a.maps[0].cols() == 2);
  CHECK(equal(a.maps[0], b.maps[0]));
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      CHECK(a.maps[0](i, j) <= Rat(100));
      CHECK(a.maps[0](i, j) >= Rat(-100));
    }
  Representation z = random_representation(q, dv({0, 0}), 5);
  CHECK(z.maps[0].size() == 0);
}

TEST_CASE("group action laws and invariance") {
  Rng rng(29);
  Quiver a3 = a3_equioriented();
  DimVec d = dv({2, 2, 1});
  Representation v = random_representation(a3, d, 77, 5);
  GroupElement id;
  for (int x = 0; x < 3; ++x) id.factors.push_back(MatQ::Identity(d[x], d[x]));
  Representation vid = act(a3, id, v);
  for (int k = 0; k < 2; ++k) CHECK(equal(vid.maps[k], v.maps[k]));

  GroupElement g = random_group_element(a3, d, 101);
  GroupElement h = random_group_element(a3, d, 102);
  Representation lhs = act(a3, g, act(a3, h, v));
  Representation rhs = act(a3, compose(g, h), v);
  for (int k = 0; k < 2; ++k) CHECK(equal(lhs.maps[k], rhs.maps[k]));

  CHECK(hom_dim(a3, act(a3, g, v), act(a3, g, v)) == hom_dim(a3, v, v));
  CHECK(orbit_codim(a3, act(a3, g, v)) == orbit_codim(a3, v));

  GroupElement singular;
  singular.factors = {MatQ::Zero(2, 2), MatQ::Identity(2, 2), MatQ::Identity(1, 1)};
  CHECK_THROWS_AS(act(a3, singular, v), std::invalid_argument);
}
