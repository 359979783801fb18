#pragma once

#include "qorc/partitions.hpp"
#include "qorc/quiver.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qorc {

// Orientation data of a type-A quiver whose underlying graph is the path
// 1 - 2 - ... - n. Edge i joins vertices i and i+1.
struct Zigzag {
  int n = 0;
  std::vector<int> dir;            // dir[i] for edge i (1-based): +1 if i->i+1
  std::vector<int> edge_arrow;     // edge i -> index into Quiver::arrows()
  std::vector<int> stations;       // sources and sinks in increasing order
  std::vector<bool> station_is_source;

  bool rightward(int edge) const { return dir[edge] > 0; }
};

Zigzag zigzag(const Quiver& q);

// A run is a maximal equioriented stretch inside the support of a root.
struct Run {
  int lo = 0, hi = 0;      // vertex interval [lo, hi]
  bool rightward = false;  // arrows lo -> hi when true
  int source() const { return rightward ? lo : hi; }
  int sink() const { return rightward ? hi : lo; }
  int arrow_count() const { return hi - lo; }
};

struct RootSupport {
  int p = 0, q = 0;
  std::vector<Run> runs;        // left to right; directions alternate
  std::vector<int> sources;     // ascending; column blocks of X_{p,q}
  std::vector<int> sinks;       // ascending; row blocks of X_{p,q}
  bool p_source_type = false;   // typing inside the support
  bool q_source_type = false;
};

RootSupport root_support(const Zigzag& zz, int p, int q);  // requires p < q

// Per-run threshold values gamma^t and beta^t.
struct RunChains {
  std::vector<long long> gamma_chain;
  std::vector<long long> beta_chain;
};

RunChains run_chains(const Zigzag& zz, const DimVec& beta, const DimVec& gamma,
                     int p, int q);

bool is_relevant_combinatorial(const Zigzag& zz, const DimVec& beta, const DimVec& gamma,
                               int p, int q);

struct RelevanceCertificate {
  bool relevant = false;
  bool combinatorial = false;
  bool representation_theoretic = false;
};

// Both routes, required to agree: the inequality system and the Hom/Ext
// characterization against certified generic representations.
RelevanceCertificate is_relevant(const Quiver& q, const DimVec& beta, const DimVec& gamma,
                                 int p, int q_hi, std::uint64_t seed = 2024);

using RcPair = std::pair<int, int>;          // (R_t, C_t)
using RcSequence = std::vector<RcPair>;

std::vector<RcSequence> enumerate_B(const Zigzag& zz, const DimVec& beta,
                                    const DimVec& gamma, int p, int q);

struct MinorFamily {
  int p = 0, q = 0;
  RcSequence rc;
  std::vector<int> col_blocks;  // source vertices, ascending
  std::vector<int> row_blocks;  // sink vertices, ascending
  std::vector<int> col_counts;  // columns chosen per block
  std::vector<int> row_counts;  // rows chosen per block
  int size = 0;                 // minor size m+
  long long degree = 0;         // d_RC
};

struct RankCondition {
  int p = 0, q = 0;
  long long bound = 0;
};

std::vector<MinorFamily> minor_generators(const Quiver& q, const DimVec& beta,
                                          const DimVec& gamma);
std::vector<RankCondition> rank_conditions(const Quiver& q, const DimVec& beta,
                                           const DimVec& gamma);

// Interval module E_{p,q}: dimension vector r^{p,q}, identity maps on the
// support arrows, zero outside.
Representation interval_representation(const Quiver& q, int p, int q_hi);

// Source and sink vertex lists of supp r^{p,q}; these index the column and
// row blocks of X_{p,q}.
std::pair<std::vector<int>, std::vector<int>> projective_presentation(const Quiver& q,
                                                                      int p, int q_hi);

// The interval [p~, q~] of the cokernel of the natural map
// +_{sinks} P_y -> +_{sources} P_x over the full quiver; this is the
// indecomposable whose Hom computes rank X_{p,q}.
std::pair<int, int> presentation_interval(const Quiver& q, int p, int q_hi);
Representation presentation_module(const Quiver& q, int p, int q_hi);

// X_{p,q} evaluated at a representation: block row per sink, block column
// per source, composite maps along runs, zero elsewhere.
MatQ evaluate_block_matrix(const Quiver& q, const Representation& x, int p, int q_hi);

// The exterior-power factorization a family contributes to F_1: internal
// degree plus per-vertex dominant weights (alpha_x parts each).
std::pair<int, std::vector<Weight>> family_weights(const MinorFamily& f, const DimVec& alpha);

// Indecomposable submodule / quotient intervals of an interval module.
std::vector<std::pair<int, int>> interval_submodules(const Zigzag& zz, int lo, int hi);
std::vector<std::pair<int, int>> interval_quotients(const Zigzag& zz, int lo, int hi);

}  // namespace qorc
