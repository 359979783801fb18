#pragma once

#include "qorc/bott.hpp"
#include "qorc/partitions.hpp"
#include "qorc/quiver.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qorc {

// The bundle xi = +_a R_ta ox Q*_ha on the product of Grassmannians
// Gr(beta_x, alpha_x), alpha = beta + gamma.
struct BundleSpec {
  Quiver quiver;
  DimVec beta;
  DimVec gamma;

  BundleSpec(Quiver q, DimVec b, DimVec g);

  DimVec alpha() const { return beta + gamma; }
  int rank() const;  // sum over arrows of beta_ta * gamma_ha
};

struct PartitionCollection {
  std::vector<Partition> lambda;  // one per arrow, in input order
  std::vector<Partition> mu;      // one per vertex (index v-1)
  std::vector<Partition> nu;
  Int multiplicity = 1;           // product of LR multiplicities over vertices

  int degree() const;  // sum of |lambda(a)|
};

// Per-vertex Durfee maxima u(x) = max(u_mu(x), u_nu(x)).
DimVec durfee_vector(const PartitionCollection& c);

struct EnumerationOptions {
  std::optional<long> prune_at;           // skip when E_Q(u) > prune_at
  long long max_collections = 10'000'000;  // considered collections
};

// Streams every valid collection exactly once, deterministically: arrows in
// input order, partitions graded-lex, vertex choices in map order. Throws
// CapExceededError past max_collections.
void enumerate_collections(const BundleSpec& spec, const EnumerationOptions& opts,
                           const std::function<void(const PartitionCollection&)>& sink);

// D = sum |lambda(a)| - sum_x N(-nu(x), mu(x)); nullopt encodes -infinity.
std::optional<long> d_value(const BundleSpec& spec, const PartitionCollection& c);

struct ResolutionTerm {
  long hom_index = 0;           // i
  int degree = 0;               // t, the internal degree
  std::vector<Weight> weights;  // dominant weight per vertex (alpha_x parts)
  Int multiplicity = 0;
  Int rank = 0;                 // multiplicity * prod_x weyl_dim(weights[x])
};

struct BettiTable {
  std::map<std::pair<long, int>, Int> ranks;  // (i, t) -> total rank
  std::vector<ResolutionTerm> terms;

  Int rank_at(long i, int t) const;
  long min_index() const;
  long max_index() const;
  int max_degree() const;
  std::map<long, Int> totals() const;  // i -> total rank
};

struct AssembleOptions {
  long long max_collections = 10'000'000;
  std::optional<long> prune_at;
  // Check F_i = 0 for i < 0 and F_0 = A when the quiver is Dynkin; a
  // violation is a theorem contradiction and raises
  // InternalConsistencyError. Non-Dynkin inputs are reported, not checked.
  bool check_dynkin_shape = true;
};

BettiTable assemble_resolution(const BundleSpec& spec, const AssembleOptions& opts = {});

struct MinResolutionReport {
  bool dynkin = false;
  bool no_negative_terms = false;
  Int f0_rank = 0;
  bool normal = false;  // F_0 has rank 1
  std::vector<ResolutionTerm> f0_terms;
  std::string note;
};

MinResolutionReport min_resolution_check(const BundleSpec& spec,
                                         const AssembleOptions& opts = {});

}  // namespace qorc
