#include "qorc/resolution.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qorc {

BundleSpec::BundleSpec(Quiver q, DimVec b, DimVec g)
    : quiver(std::move(q)), beta(std::move(b)), gamma(std::move(g)) {
  validate_dimension_vector(quiver, beta);
  validate_dimension_vector(quiver, gamma);
}

int BundleSpec::rank() const {
  int r = 0;
  for (const Arrow& a : quiver.arrows()) r += beta[a.tail - 1] * gamma[a.head - 1];
  return r;
}

int PartitionCollection::degree() const {
  int t = 0;
  for (const Partition& p : lambda) t += p.sum();
  return t;
}

DimVec durfee_vector(const PartitionCollection& c) {
  const int n = static_cast<int>(c.mu.size());
  DimVec u(n);
  for (int x = 0; x < n; ++x) u[x] = std::max(c.mu[x].durfee(), c.nu[x].durfee());
  return u;
}

void enumerate_collections(const BundleSpec& spec, const EnumerationOptions& opts,
                           const std::function<void(const PartitionCollection&)>& sink) {
  const Quiver& q = spec.quiver;
  const int n = q.vertex_count();
  const int m = q.arrow_count();

  std::vector<std::vector<Partition>> boxes(m);
  for (int k = 0; k < m; ++k) {
    const Arrow& a = q.arrows()[k];
    boxes[k] = partitions_in_box(spec.beta[a.tail - 1], spec.gamma[a.head - 1]);
  }
  std::vector<std::vector<int>> out_arrows(n), in_arrows(n);
  for (int k = 0; k < m; ++k) {
    out_arrows[q.arrows()[k].tail - 1].push_back(k);
    in_arrows[q.arrows()[k].head - 1].push_back(k);
  }

  long long considered = 0;
  auto charge = [&](long long units) {
    considered += units;
    if (considered > opts.max_collections)
      throw CapExceededError("enumerate_collections: desk-scale cap exceeded");
  };

  PartitionCollection coll;
  coll.lambda.assign(m, Partition{});
  coll.mu.assign(n, Partition{});
  coll.nu.assign(n, Partition{});

  // Per-vertex options for the current lambda choice.
  std::vector<std::vector<std::pair<Partition, Int>>> mu_opts(n), nu_opts(n);

  std::function<void(int, Int)> choose_vertex = [&](int x, Int mult) {
    if (x == n) {
      charge(1);
      if (opts.prune_at) {
        DimVec u = durfee_vector(coll);
        if (euler_form(spec.quiver, u) > *opts.prune_at) return;
      }
      coll.multiplicity = mult;
      sink(coll);
      return;
    }
    for (const auto& [mu, cm] : mu_opts[x]) {
      coll.mu[x] = mu;
      for (const auto& [nu, cn] : nu_opts[x]) {
        coll.nu[x] = nu;
        choose_vertex(x + 1, mult * cm * cn);
      }
    }
  };

  std::function<void(int)> choose_arrow = [&](int k) {
    if (k == m) {
      bool feasible = true;
      for (int x = 0; x < n && feasible; ++x) {
        std::vector<Partition> outs, ins;
        for (int a : out_arrows[x]) outs.push_back(coll.lambda[a]);
        for (int a : in_arrows[x]) ins.push_back(coll.lambda[a].conjugate());
        auto mu_map = lr_expand(outs, spec.beta[x]);
        auto nu_map = lr_expand(ins, spec.gamma[x]);
        mu_opts[x].assign(mu_map.begin(), mu_map.end());
        nu_opts[x].assign(nu_map.begin(), nu_map.end());
        feasible = !mu_opts[x].empty() && !nu_opts[x].empty();
      }
      if (feasible) choose_vertex(0, Int(1));
      return;
    }
    for (const Partition& p : boxes[k]) {
      coll.lambda[k] = p;
      choose_arrow(k + 1);
    }
  };

  choose_arrow(0);
}

std::optional<long> d_value(const BundleSpec& spec, const PartitionCollection& c) {
  long sum_n = 0;
  for (int x = 0; x < spec.quiver.vertex_count(); ++x) {
    auto out = bott_cohomology(
        BottInput{c.mu[x], c.nu[x], spec.beta[x], spec.gamma[x]});
    if (!out) return std::nullopt;
    sum_n += out->degree;
  }
  return static_cast<long>(c.degree()) - sum_n;
}

Int BettiTable::rank_at(long i, int t) const {
  auto it = ranks.find({i, t});
  return it == ranks.end() ? Int(0) : it->second;
}

long BettiTable::min_index() const {
  long v = 0;
  for (const auto& [key, r] : ranks) v = std::min(v, key.first);
  return v;
}

long BettiTable::max_index() const {
  long v = 0;
  for (const auto& [key, r] : ranks) v = std::max(v, key.first);
  return v;
}

int BettiTable::max_degree() const {
  int v = 0;
  for (const auto& [key, r] : ranks) v = std::max(v, key.second);
  return v;
}

std::map<long, Int> BettiTable::totals() const {
  std::map<long, Int> t;
  for (const auto& [key, r] : ranks) t[key.first] += r;
  return t;
}

BettiTable assemble_resolution(const BundleSpec& spec, const AssembleOptions& opts) {
  // Aggregation key: (i, t, per-vertex weight list).
  std::map<std::tuple<long, int, std::vector<Weight>>, Int> agg;
  EnumerationOptions eopts;
  eopts.max_collections = opts.max_collections;
  eopts.prune_at = opts.prune_at;
  const int n = spec.quiver.vertex_count();

  enumerate_collections(spec, eopts, [&](const PartitionCollection& c) {
    std::vector<Weight> weights(n);
    long bott_degrees = 0;
    for (int x = 0; x < n; ++x) {
      auto out = bott_cohomology(
          BottInput{c.mu[x], c.nu[x], spec.beta[x], spec.gamma[x]});
      if (!out) return;
      bott_degrees += out->degree;
      weights[x] = std::move(out->tau);
    }
    const int t = c.degree();
    const long i = static_cast<long>(t) - bott_degrees;
    agg[{i, t, std::move(weights)}] += c.multiplicity;
  });

  BettiTable table;
  for (const auto& [key, mult] : agg) {
    const auto& [i, t, weights] = key;
    ResolutionTerm term;
    term.hom_index = i;
    term.degree = t;
    term.weights = weights;
    term.multiplicity = mult;
    term.rank = mult;
    for (int x = 0; x < n; ++x)
      term.rank *= weyl_dim(weights[x], spec.beta[x] + spec.gamma[x]);
    table.ranks[{i, t}] += term.rank;
    table.terms.push_back(std::move(term));
  }

  if (opts.check_dynkin_shape && spec.quiver.is_dynkin()) {
    if (table.min_index() < 0)
      throw InternalConsistencyError("assemble_resolution: negative term on a Dynkin quiver");
    if (table.rank_at(0, 0) != 1 || table.totals()[0] != 1)
      throw InternalConsistencyError("assemble_resolution: F_0 != A on a Dynkin quiver");
  }
  return table;
}

MinResolutionReport min_resolution_check(const BundleSpec& spec, const AssembleOptions& opts) {
  AssembleOptions o = opts;
  o.check_dynkin_shape = false;  // report, do not assert
  BettiTable table = assemble_resolution(spec, o);
  MinResolutionReport rep;
  rep.dynkin = spec.quiver.is_dynkin();
  rep.no_negative_terms = table.min_index() >= 0;
  for (const auto& [key, r] : table.ranks)
    if (key.first == 0) rep.f0_rank += r;
  rep.normal = rep.no_negative_terms && rep.f0_rank == 1;
  for (const ResolutionTerm& t : table.terms)
    if (t.hom_index == 0) rep.f0_terms.push_back(t);
  if (rep.dynkin) {
    rep.note = rep.normal ? "F0 rank 1, no negative terms; orbit closure is normal"
                          : "unexpected shape on a Dynkin quiver";
  } else {
    rep.note = "terms of F_bullet (normalization under the connected-fiber hypothesis)";
  }
  return rep;
}

}  // namespace qorc
