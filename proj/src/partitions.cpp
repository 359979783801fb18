#include "qorc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qorc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition: parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::hook(int arm, int leg) {
  std::vector<int> parts;
  parts.push_back(arm + 1);
  for (int i = 0; i < leg; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

int Partition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

int Partition::durfee() const noexcept {
  int u = 0;
  while (u < rows() && parts_[u] >= u + 1) ++u;
  return u;
}

std::pair<Partition, Partition> Partition::split_plus_minus() const {
  const int u = durfee();
  std::vector<int> plus, minus;
  for (int i = 0; i < u; ++i) plus.push_back(parts_[i] - u);
  for (int i = u; i < rows(); ++i) minus.push_back(parts_[i]);
  return {Partition(std::move(plus)), Partition(std::move(minus))};
}

bool Partition::fits_in_box(int max_rows, int max_cols) const noexcept {
  return rows() <= max_rows && (parts_.empty() || parts_[0] <= max_cols);
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.rows() > rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::optional<NormalizedWeight> normalize_weight_by_exchanges(Weight d) {
  const int n = static_cast<int>(d.size());
  int count = 0;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (d[i] >= d[i + 1]) continue;
      if (d[i + 1] == d[i] + 1) return std::nullopt;  // fixed point of the exchange
      int a = d[i], b = d[i + 1];
      d[i] = b - 1;
      d[i + 1] = a + 1;
      ++count;
      progressed = true;
    }
  }
  return NormalizedWeight{count, std::move(d)};
}

std::optional<NormalizedWeight> normalize_weight_by_shift(const Weight& d) {
  const int n = static_cast<int>(d.size());
  // The exchange acts as a transposition on the rho-shifted entries, so the
  // weight is sortable iff the shifted entries are pairwise distinct and
  // N equals the inversion count.
  std::vector<long long> s(n);
  for (int i = 0; i < n; ++i) s[i] = static_cast<long long>(d[i]) + (n - 1 - i);
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (s[i] == s[j]) return std::nullopt;
      if (s[i] < s[j]) ++inversions;
    }
  std::sort(s.begin(), s.end(), std::greater<>());
  Weight tau(n);
  for (int i = 0; i < n; ++i) tau[i] = static_cast<int>(s[i] - (n - 1 - i));
  return NormalizedWeight{inversions, std::move(tau)};
}

std::optional<NormalizedWeight> normalize_weight(const Weight& d) {
  auto a = normalize_weight_by_shift(d);
  auto b = normalize_weight_by_exchanges(d);
  const bool same = a.has_value() == b.has_value() &&
                    (!a || (a->exchanges == b->exchanges && a->tau == b->tau));
  if (!same) throw InternalConsistencyError("normalize_weight: route disagreement");
  return a;
}

namespace {

// Counts LR skew tableaux of shape outer/inner with the given content by
// backtracking over cells in reverse reading order (top row first, right
// to left), maintaining the ballot condition incrementally.
Int count_lr_tableaux(const Partition& outer, const Partition& inner,
                      const Partition& content) {
  const int rows = outer.rows();
  const int values = content.rows();
  std::vector<std::pair<int, int>> cells;  // (row, col), 0-based
  for (int r = 0; r < rows; ++r) {
    const int lo = inner.part(r + 1), hi = outer.parts()[r];
    for (int c = hi - 1; c >= lo; --c) cells.emplace_back(r, c);
  }
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(outer.parts()[r], 0);
  std::vector<int> count(values + 2, 0);
  Int total = 0;

  auto in_skew = [&](int r, int c) {
    return r >= 0 && r < rows && c >= inner.part(r + 1) && c < outer.parts()[r];
  };

  std::function<void(size_t)> place = [&](size_t k) {
    if (k == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[k];
    int hi = values;
    if (in_skew(r, c + 1)) hi = std::min(hi, fill[r][c + 1]);  // weakly increasing row
    int lo = 1;
    if (in_skew(r - 1, c)) lo = std::max(lo, fill[r - 1][c] + 1);  // strict down columns
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= content.part(v)) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // ballot
      fill[r][c] = v;
      ++count[v];
      place(k + 1);
      --count[v];
      fill[r][c] = 0;
    }
  };
  place(0);
  return total;
}

struct LrKey {
  std::vector<int> outer, inner, content;
  bool operator<(const LrKey& o) const {
    return std::tie(outer, inner, content) < std::tie(o.outer, o.inner, o.content);
  }
};

std::map<LrKey, Int> lr_memo;        // NOLINT: process-lifetime cache
std::mutex lr_memo_mutex;

}  // namespace

Int lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content) {
  if (!outer.contains(inner)) return 0;
  if (outer.sum() != inner.sum() + content.sum()) return 0;
  if (content.empty()) return inner == outer ? 1 : 0;
  LrKey key{outer.parts(), inner.parts(), content.parts()};
  {
    std::lock_guard<std::mutex> lock(lr_memo_mutex);
    auto it = lr_memo.find(key);
    if (it != lr_memo.end()) return it->second;
  }
  Int v = count_lr_tableaux(outer, inner, content);
  std::lock_guard<std::mutex> lock(lr_memo_mutex);
  lr_memo.emplace(std::move(key), v);
  return v;
}

namespace {

// All outer shapes of |inner| + |content| boxes containing inner, with at
// most row_bound rows and first row bounded via the k=1 Horn inequality.
void outer_candidates(const Partition& inner, const Partition& content, int row_bound,
                      std::vector<Partition>& out) {
  const int target = inner.sum() + content.sum();
  const int max_first = inner.part(1) + content.part(1);
  std::vector<int> parts;
  std::function<void(int, int, int)> rec = [&](int row, int prev, int remaining) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    if (row >= row_bound) return;
    int hi = std::min(prev, remaining);
    int lo = std::max(inner.part(row + 1), 1);
    for (int v = hi; v >= lo; --v) {
      parts.push_back(v);
      rec(row + 1, v, remaining - v);
      parts.pop_back();
    }
  };
  rec(0, max_first, target);
}

}  // namespace

std::map<Partition, Int> lr_expand(std::span<const Partition> ps, int row_bound) {
  if (row_bound < 0) throw std::invalid_argument("lr_expand: negative row bound");
  std::map<Partition, Int> acc;
  acc.emplace(Partition{}, 1);
  for (const Partition& p : ps) {
    std::map<Partition, Int> next;
    for (const auto& [base, mult] : acc) {
      if (p.empty()) {
        next[base] += mult;
        continue;
      }
      std::vector<Partition> candidates;
      outer_candidates(base, p, row_bound, candidates);
      for (const Partition& outer : candidates) {
        Int c = lr_coefficient(outer, base, p);
        if (c != 0) next[outer] += mult * c;
      }
    }
    acc = std::move(next);
    if (acc.empty()) break;
  }
  // Row bound applies to the final shapes as well (intermediate pruning is
  // sound since LR factors embed into every product term).
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->first.rows() > row_bound)
      it = acc.erase(it);
    else
      ++it;
  }
  return acc;
}

Int weyl_dim(const Weight& tau, int n) {
  if (static_cast<int>(tau.size()) != n)
    throw std::invalid_argument("weyl_dim: weight must have exactly n parts");
  for (int i = 0; i + 1 < n; ++i)
    if (tau[i] < tau[i + 1]) throw std::invalid_argument("weyl_dim: weight not non-increasing");
  Int num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= Int(static_cast<long long>(tau[i]) - tau[j] + (j - i));
      den *= Int(j - i);
    }
  return num / den;
}

std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int row, int prev) {
    out.emplace_back(parts);
    if (row >= max_rows) return;
    for (int v = 1; v <= prev; ++v) {
      parts.push_back(v);
      rec(row + 1, v);
      parts.pop_back();
    }
  };
  // Generate all, then order graded-lex deterministically.
  rec(0, max_cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a.parts() < b.parts();
  });
  return out;
}

}  // namespace qorc
