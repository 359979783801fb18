#include "qorc/bott.hpp"

#include <doctest.h>

#include <map>
#include <vector>

using namespace qorc;

namespace {

Partition pt(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// Brute-force count of partitions of t inside a rows x cols box.
int box_partition_count(int rows, int cols, int t) {
  int count = 0;
  for (const Partition& p : partitions_in_box(rows, cols))
    if (p.sum() == t) ++count;
  return count;
}

}  // namespace

TEST_CASE("structure sheaf has only H^0 = k") {
  auto out = bott_cohomology({Partition{}, Partition{}, 2, 3});
  REQUIRE(out.has_value());
  CHECK(out->degree == 0);
  CHECK(out->tau == Weight{0, 0, 0, 0, 0});
}

TEST_CASE("O(-2) on P^1 has one-dimensional H^1") {
  auto out = bott_cohomology({pt({1}), pt({1}), 1, 1});
  REQUIRE(out.has_value());
  CHECK(out->degree == 1);
  CHECK(out->tau == Weight{0, 0});
  CHECK(weyl_dim(out->tau, 2) == 1);
}

TEST_CASE("O(-1) on P^1 has no cohomology") {
  CHECK_FALSE(bott_cohomology({pt({1}), Partition{}, 1, 1}).has_value());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(bott_cohomology({pt({1, 1}), Partition{}, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(bott_cohomology({Partition{}, pt({1, 1}), 2, 1}), std::invalid_argument);
}

TEST_CASE("degree zero exactly when the weight is already dominant") {
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int beta = static_cast<int>(rng.uniform(0, 3));
    const int gamma = static_cast<int>(rng.uniform(0, 3));
    std::vector<int> mu_parts, nu_parts;
    int prev = 3;
    for (int i = 0; i < beta; ++i) {
      int v = static_cast<int>(rng.uniform(0, prev));
      if (!v) break;
      mu_parts.push_back(v);
      prev = v;
    }
    prev = 3;
    for (int i = 0; i < gamma; ++i) {
      int v = static_cast<int>(rng.uniform(0, prev));
      if (!v) break;
      nu_parts.push_back(v);
      prev = v;
    }
    BottInput in{Partition(mu_parts), Partition(nu_parts), beta, gamma};
    Weight delta(gamma + beta, 0);
    for (int k = 0; k < gamma; ++k) delta[k] = -in.nu.part(gamma - k);
    for (int k = 0; k < beta; ++k) delta[gamma + k] = in.mu.part(k + 1);
    const bool dominant = std::is_sorted(delta.rbegin(), delta.rend());
    auto out = bott_cohomology(in);
    if (dominant) {
      REQUIRE(out.has_value());
      CHECK(out->degree == 0);
      CHECK(out->tau == delta);
    } else if (out) {
      CHECK(out->degree > 0);
    }
  }
}

// Hodge-theoretic oracle: wedge^t(R ox Q*) is the bundle of t-forms on the
// Grassmannian, so cohomology concentrates in bidegree (t, t) with rank the
// number of partitions of t in the beta x gamma box.
TEST_CASE("exterior powers of R ox Q* reproduce Hodge numbers") {
  for (int alpha = 1; alpha <= 4; ++alpha) {
    for (int beta = 0; beta <= alpha; ++beta) {
      const int gamma = alpha - beta;
      const int top = beta * gamma;
      for (int t = 0; t <= top; ++t) {
        std::map<int, Int> by_degree;
        for (const Partition& lam : partitions_in_box(beta, gamma)) {
          if (lam.sum() != t) continue;
          auto out = bott_cohomology({lam, lam.conjugate(), beta, gamma});
          if (out) by_degree[out->degree] += weyl_dim(out->tau, alpha);
        }
        const int expected = box_partition_count(beta, gamma, t);
        CHECK(by_degree.size() == (expected ? 1u : 0u));
        if (expected) {
          REQUIRE(by_degree.count(t));
          CHECK(by_degree[t] == expected);
        }
      }
    }
  }
}
