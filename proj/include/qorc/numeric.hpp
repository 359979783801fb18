#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qorc {

// Exact arithmetic everywhere: arbitrary-precision rationals for
// representation data, arbitrary-precision integers for fraction-free
// elimination and Weyl dimensions.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using DimVec = Eigen::VectorXi;

// Raised when two independent computations of the same quantity disagree
// (dual-route checks are required to agree exactly, never reconciled).
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised when an enumeration exceeds its configured cap.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic seeded generator (splitmix64). All randomized operations
// take explicit seeds and must produce identical output for identical
// seeds, so we avoid the standard library's unspecified distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi] inclusive, by rejection.
  long long uniform(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(next_u64());  // full range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<long long>(v % span);
  }

  // Derive an independent deterministic stream.
  Rng fork(std::uint64_t salt) const {
    Rng r(state_ ^ (0xd1342543de82ef95ULL * (salt + 1)));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t state_;
};

inline bool is_zero(const MatQ& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

inline bool equal(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace qorc
