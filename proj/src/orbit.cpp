#include "qorc/orbit.hpp"

#include "qorc/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qorc {

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  Rng r(seed);
  return r.fork(salt).next_u64();
}

}  // namespace

GenericRep generic_representation(const Quiver& q, const DimVec& d, std::uint64_t seed,
                                  int bound, int retries) {
  validate_dimension_vector(q, d);
  const long long target = euler_form(q, d);
  for (int attempt = 0; attempt < retries; ++attempt) {
    Representation rep =
        random_representation(q, d, derive_seed(seed, 11 + attempt), bound);
    if (hom_dim(q, rep, rep) == target) return GenericRep{std::move(rep), d, true};
  }
  throw std::runtime_error("generic_representation: certification failed after retries");
}

RankInvariant rank_invariant(const Quiver& q, const Representation& v) {
  validate_representation(q, v);
  RankInvariant inv;
  inv.dim = v.dim;
  const int n = q.vertex_count();
  for (int p = 1; p < n; ++p)
    for (int qq = p + 1; qq <= n; ++qq)
      inv.ranks[{p, qq}] = rank(evaluate_block_matrix(q, v, p, qq));
  return inv;
}

OneStepWitness generic_extension(const Quiver& q, const DimVec& beta, const DimVec& gamma,
                                 std::uint64_t seed, int bound, int retries) {
  validate_dimension_vector(q, beta);
  validate_dimension_vector(q, gamma);
  for (int attempt = 0; attempt < retries; ++attempt) {
    const std::uint64_t s = derive_seed(seed, 101 + attempt);
    GenericRep tb = generic_representation(q, beta, derive_seed(s, 1), bound, retries);
    GenericRep tg = generic_representation(q, gamma, derive_seed(s, 2), bound, retries);
    Rng rng(derive_seed(s, 3));
    Representation w;
    w.dim = beta + gamma;
    w.maps.reserve(q.arrow_count());
    for (int k = 0; k < q.arrow_count(); ++k) {
      const Arrow& a = q.arrows()[k];
      const int bh = beta[a.head - 1], bt = beta[a.tail - 1];
      const int gh = gamma[a.head - 1], gt = gamma[a.tail - 1];
      MatQ m = MatQ::Zero(bh + gh, bt + gt);
      m.topLeftCorner(bh, bt) = tb.rep.maps[k];
      m.bottomRightCorner(gh, gt) = tg.rep.maps[k];
      for (int i = 0; i < bh; ++i)
        for (int j = 0; j < gt; ++j) m(i, bt + j) = Rat(rng.uniform(-bound, bound));
      w.maps.push_back(std::move(m));
    }
    if (orbit_codim(q, w) == ext_dim(q, tb.rep, tg.rep))
      return OneStepWitness{beta, std::move(w)};
  }
  throw std::runtime_error("generic_extension: certification failed after retries");
}

bool is_one_step(const Quiver& q, const RankInvariant& v_ranks, const DimVec& beta,
                 std::uint64_t seed) {
  validate_dimension_vector(q, beta);
  DimVec gamma = v_ranks.dim - beta;
  for (Eigen::Index i = 0; i < gamma.size(); ++i)
    if (gamma[i] < 0) throw std::invalid_argument("is_one_step: beta exceeds alpha");
  OneStepWitness w = generic_extension(q, beta, gamma, seed);
  return rank_invariant(q, w.rep) == v_ranks;
}

std::optional<DimVec> split_sufficient(const Quiver& q,
                                       const std::vector<std::array<int, 3>>& summands,
                                       std::uint64_t seed) {
  (void)seed;  // the generic certificates here are exact, no sampling needed
  std::vector<Representation> pieces;
  std::vector<int> mult;
  for (const auto& [p, qq, m] : summands) {
    if (m <= 0) throw std::invalid_argument("split_sufficient: multiplicity must be positive");
    pieces.push_back(interval_representation(q, p, qq));
    mult.push_back(m);
  }
  const int k = static_cast<int>(pieces.size());
  std::vector<int> take(k, 0);  // how many copies go into N
  auto build = [&](bool complement) {
    Representation acc = zero_representation(q, DimVec::Zero(q.vertex_count()));
    for (int i = 0; i < k; ++i) {
      const int copies = complement ? mult[i] - take[i] : take[i];
      for (int c = 0; c < copies; ++c) acc = direct_sum(q, acc, pieces[i]);
    }
    return acc;
  };
  // Odometer over sub-multisets, N = 0 first.
  while (true) {
    Representation n_rep = build(false);
    Representation m_rep = build(true);
    if (ext_dim(q, m_rep, m_rep) == 0 && ext_dim(q, n_rep, n_rep) == 0 &&
        ext_dim(q, m_rep, n_rep) == 0)
      return n_rep.dim;
    int i = 0;
    while (i < k && take[i] == mult[i]) take[i++] = 0;
    if (i == k) break;
    ++take[i];
  }
  return std::nullopt;
}

bool membership(const RankInvariant& x, const RankInvariant& y) {
  if (x.dim != y.dim) throw std::invalid_argument("membership: dimension vectors differ");
  for (const auto& [key, rx] : x.ranks) {
    auto it = y.ranks.find(key);
    if (it == y.ranks.end()) throw std::invalid_argument("membership: rank key mismatch");
    if (rx > it->second) return false;
  }
  return true;
}

Subrepresentation z_p_subrep(const Quiver& q, const Representation& y, int p) {
  validate_representation(q, y);
  Zigzag zz = zigzag(q);
  if (p < 1 || p >= zz.n) throw std::invalid_argument("z_p_subrep: need 1 <= p <= n-1");
  std::vector<MatQ> basis(zz.n);
  for (int x = 1; x <= p; ++x)
    basis[x - 1] = MatQ::Identity(y.dim[x - 1], y.dim[x - 1]);
  for (int x = p + 1; x <= zz.n; ++x) {
    const int edge = x - 1;
    const MatQ& m = y.maps[zz.edge_arrow[edge]];
    if (zz.rightward(edge))
      basis[x - 1] = column_space_basis(m * basis[x - 2]);
    else
      basis[x - 1] = preimage_basis(m, basis[x - 2]);
  }
  Subrepresentation out;
  out.dim = DimVec(zz.n);
  for (int x = 0; x < zz.n; ++x) out.dim[x] = static_cast<int>(basis[x].cols());
  out.rep.dim = out.dim;
  out.rep.maps.resize(q.arrow_count());
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    MatQ restricted;
    if (!solve(basis[a.head - 1], y.maps[k] * basis[a.tail - 1], restricted))
      throw InternalConsistencyError("z_p_subrep: image escapes the subspace");
    out.rep.maps[k] = std::move(restricted);
  }
  out.inclusion = std::move(basis);
  return out;
}

SchemeIntersectionResult scheme_intersection_generators(const Quiver& q,
                                                        const Representation& y,
                                                        std::uint64_t seed) {
  validate_representation(q, y);
  const int n = q.vertex_count();
  RankInvariant y_ranks = rank_invariant(q, y);
  SchemeIntersectionResult result;
  for (int p = 1; p <= n - 1; ++p) {
    Subrepresentation z = z_p_subrep(q, y, p);
    DimVec beta_p = z.dim;
    DimVec gamma_p = y.dim - beta_p;
    SchemeIntersectionPart part;
    part.p = p;
    part.beta_p = beta_p;
    part.families = minor_generators(q, beta_p, gamma_p);
    part.conditions = rank_conditions(q, beta_p, gamma_p);
    OneStepWitness w = generic_extension(q, beta_p, gamma_p, derive_seed(seed, 5000 + p));
    for (int qq = p + 1; qq <= n; ++qq) {
      long long rw = rank(evaluate_block_matrix(q, w.rep, p, qq));
      if (rw != y_ranks.ranks.at({p, qq}))
        throw InternalConsistencyError(
            "scheme_intersection_generators: rank invariant of W^p disagrees with Y");
    }
    result.parts.push_back(std::move(part));
  }
  // Dedup across p: for each root keep the smallest rank bound (larger
  // minors of the same composite matrix lie in the ideal of smaller ones).
  std::map<std::pair<int, int>, std::pair<long long, int>> best;  // root -> (bound, part idx)
  for (size_t i = 0; i < result.parts.size(); ++i)
    for (const RankCondition& rc : result.parts[i].conditions) {
      auto key = std::make_pair(rc.p, rc.q);
      auto it = best.find(key);
      if (it == best.end() || rc.bound < it->second.first)
        best[key] = {rc.bound, static_cast<int>(i)};
    }
  for (const auto& [root, choice] : best) {
    result.combined_conditions.push_back(RankCondition{root.first, root.second, choice.first});
    for (const MinorFamily& f : result.parts[choice.second].families)
      if (f.p == root.first && f.q == root.second) result.combined.push_back(f);
  }
  return result;
}

void for_each_family_minor(const Quiver& q, const MinorFamily& f, const Representation& x,
                           const std::function<bool(const Rat&)>& visit) {
  MatQ m = evaluate_block_matrix(q, x, f.p, f.q);
  // Per-block index offsets.
  std::vector<int> row_off(f.row_blocks.size() + 1, 0), col_off(f.col_blocks.size() + 1, 0);
  for (size_t i = 0; i < f.row_blocks.size(); ++i)
    row_off[i + 1] = row_off[i] + x.dim[f.row_blocks[i] - 1];
  for (size_t j = 0; j < f.col_blocks.size(); ++j)
    col_off[j + 1] = col_off[j] + x.dim[f.col_blocks[j] - 1];

  // All lexicographic selections of k indices out of block size s.
  auto selections = [](int s, int k) {
    std::vector<std::vector<int>> out;
    if (k > s) return out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      out.push_back(pick);
      int i = k - 1;
      while (i >= 0 && pick[i] == s - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
  };

  std::vector<std::vector<std::vector<int>>> row_sel, col_sel;
  for (size_t i = 0; i < f.row_blocks.size(); ++i)
    row_sel.push_back(selections(x.dim[f.row_blocks[i] - 1], f.row_counts[i]));
  for (size_t j = 0; j < f.col_blocks.size(); ++j)
    col_sel.push_back(selections(x.dim[f.col_blocks[j] - 1], f.col_counts[j]));
  for (const auto& side : row_sel)
    if (side.empty()) return;  // block too small; no minors of this shape
  for (const auto& side : col_sel)
    if (side.empty()) return;

  std::vector<int> rows, cols;
  std::function<bool(size_t)> walk_cols = [&](size_t j) -> bool {
    if (j == col_sel.size()) {
      MatQ sub(f.size, f.size);
      for (int r = 0; r < f.size; ++r)
        for (int c = 0; c < f.size; ++c) sub(r, c) = m(rows[r], cols[c]);
      return visit(det(sub));
    }
    for (const auto& pick : col_sel[j]) {
      for (int v : pick) cols.push_back(col_off[j] + v);
      bool go = walk_cols(j + 1);
      cols.resize(cols.size() - pick.size());
      if (!go) return false;
    }
    return true;
  };
  std::function<bool(size_t)> walk_rows = [&](size_t i) -> bool {
    if (i == row_sel.size()) return walk_cols(0);
    for (const auto& pick : row_sel[i]) {
      for (int v : pick) rows.push_back(row_off[i] + v);
      bool go = walk_rows(i + 1);
      rows.resize(rows.size() - pick.size());
      if (!go) return false;
    }
    return true;
  };
  walk_rows(0);
}

VanishingReport verify_vanishing(const Quiver& q, const std::vector<MinorFamily>& families,
                                 const Representation& target, int trials, std::uint64_t seed,
                                 const std::optional<DimVec>& onestep_beta) {
  validate_representation(q, target);
  VanishingReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.proper = !families.empty();

  for (int trial = 0; trial < trials; ++trial) {
    Representation sample = target;
    const int variant = trial % (onestep_beta ? 3 : 2);
    const std::uint64_t s = derive_seed(seed, 100000 + trial);
    if (variant == 1) {
      // Scale individual arrow matrices: these stay inside the closure.
      Rng rng(derive_seed(s, 7));
      for (MatQ& m : sample.maps) m *= Rat(rng.uniform(-3, 3));
    } else if (variant == 2 && onestep_beta) {
      // A random (not necessarily generic) point of the incidence bundle.
      const DimVec& b = *onestep_beta;
      DimVec g = target.dim - b;
      Representation rb = random_representation(q, b, derive_seed(s, 1), 20);
      Representation rg = random_representation(q, g, derive_seed(s, 2), 20);
      Rng rng(derive_seed(s, 3));
      sample.maps.clear();
      for (int k = 0; k < q.arrow_count(); ++k) {
        const Arrow& a = q.arrows()[k];
        const int bh = b[a.head - 1], bt = b[a.tail - 1];
        const int gh = g[a.head - 1], gt = g[a.tail - 1];
        MatQ m = MatQ::Zero(bh + gh, bt + gt);
        m.topLeftCorner(bh, bt) = rb.maps[k];
        m.bottomRightCorner(gh, gt) = rg.maps[k];
        for (int i = 0; i < bh; ++i)
          for (int j = 0; j < gt; ++j) m(i, bt + j) = Rat(rng.uniform(-20, 20));
        sample.maps.push_back(std::move(m));
      }
    }
    GroupElement g = random_group_element(q, target.dim, derive_seed(s, 9));
    sample = act(q, g, sample);
    for (const MinorFamily& f : families) {
      for_each_family_minor(q, f, sample, [&](const Rat& value) {
        ++rep.minors_evaluated;
        if (value != 0) ++rep.nonzero_on_closure;
        return true;
      });
    }
  }

  if (rep.proper) {
    // Existence witness: some minor of every family nonzero at a random
    // ambient point; a few ambient points are tried.
    bool all_families = true;
    for (const MinorFamily& f : families) {
      bool found = false;
      for (int attempt = 0; attempt < 5 && !found; ++attempt) {
        Representation ambient =
            random_representation(q, target.dim, derive_seed(seed, 777 + attempt));
        for_each_family_minor(q, f, ambient, [&](const Rat& value) {
          if (value != 0) {
            found = true;
            return false;
          }
          return true;
        });
      }
      if (!found) {
        all_families = false;
        break;
      }
    }
    rep.witness_found = all_families;
  }
  rep.pass = rep.nonzero_on_closure == 0 && (!rep.proper || rep.witness_found);
  return rep;
}

}  // namespace qorc
