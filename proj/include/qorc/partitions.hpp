#pragma once

#include "qorc/numeric.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qorc {

// Non-increasing sequence of non-negative integers; trailing zeros are
// normalized away. Callers supply the part count when embedding into
// fixed-length weights.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition hook(int arm, int leg);  // (arm+1, 1^leg)

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int part(int i) const noexcept {  // 1-based, 0 beyond the last row
    return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
  }
  int sum() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  Partition conjugate() const;
  int durfee() const noexcept;
  std::pair<Partition, Partition> split_plus_minus() const;
  bool fits_in_box(int max_rows, int max_cols) const noexcept;
  bool contains(const Partition& inner) const noexcept;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

using Weight = std::vector<int>;

struct NormalizedWeight {
  int exchanges = 0;  // N(delta)
  Weight tau;
};

// Minimal number of twisted exchanges sorting the weight, or nullopt when
// no sequence of exchanges sorts it (N = -infinity).
std::optional<NormalizedWeight> normalize_weight_by_exchanges(Weight d);
std::optional<NormalizedWeight> normalize_weight_by_shift(const Weight& d);
// Runs both routes and requires exact agreement.
std::optional<NormalizedWeight> normalize_weight(const Weight& d);

// Littlewood-Richardson coefficient c^{outer}_{inner, content} by skew
// tableau enumeration (lattice word condition), memoized.
Int lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content);

// Iterated LR expansion of the product of ps, discarding partitions with
// more than row_bound rows.
std::map<Partition, Int> lr_expand(std::span<const Partition> ps, int row_bound);

// Weyl dimension of the irreducible GL_n module with highest weight tau
// (n non-increasing integer parts).
Int weyl_dim(const Weight& tau, int n);

// All partitions in a max_rows x max_cols box, graded by size and
// lexicographic within each grade.
std::vector<Partition> partitions_in_box(int max_rows, int max_cols);

}  // namespace qorc
