#pragma once

#include "qorc/quiver.hpp"
#include "qorc/typea.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace qorc {

struct GenericRep {
  Representation rep;
  DimVec dim;
  bool certified = false;
};

// Samples an integer representation and certifies genericity via
// hom(T,T) == E_Q(dim); retries derived seeds before giving up.
GenericRep generic_representation(const Quiver& q, const DimVec& d, std::uint64_t seed,
                                  int bound = 100, int retries = 8);

// Ranks of every composite block matrix X_{p,q}, p < q. Separates orbits
// of type-A quivers.
struct RankInvariant {
  DimVec dim;
  std::map<std::pair<int, int>, long long> ranks;

  bool operator==(const RankInvariant&) const = default;
};

RankInvariant rank_invariant(const Quiver& q, const Representation& v);

// A representative of the generic extension T_gamma * T_beta, sampled as a
// random point of the incidence bundle over the open stratum and certified
// by codim O_W == ext(T_beta, T_gamma).
struct OneStepWitness {
  DimVec beta;
  Representation rep;
};

OneStepWitness generic_extension(const Quiver& q, const DimVec& beta, const DimVec& gamma,
                                 std::uint64_t seed, int bound = 100, int retries = 8);

// Type A only: the orbit closure of V equals the image of the beta-bundle
// iff the rank invariants agree exactly.
bool is_one_step(const Quiver& q, const RankInvariant& v_ranks, const DimVec& beta,
                 std::uint64_t seed);

// Searches two-part splittings V = M + N with M, N generic and
// Ext(M, N) = 0; returns beta = dim N of the first hit.
std::optional<DimVec> split_sufficient(const Quiver& q,
                                       const std::vector<std::array<int, 3>>& summands,
                                       std::uint64_t seed);

bool membership(const RankInvariant& x, const RankInvariant& y);

struct Subrepresentation {
  Representation rep;
  DimVec dim;
  std::vector<MatQ> inclusion;  // per vertex, alpha_x by dim_x basis columns
};

// The image/preimage subrepresentation Z^p of Y: full spaces up to p, then
// images along arrow direction and preimages against it.
Subrepresentation z_p_subrep(const Quiver& q, const Representation& y, int p);

struct SchemeIntersectionPart {
  int p = 0;
  DimVec beta_p;
  std::vector<MinorFamily> families;
  std::vector<RankCondition> conditions;
};

struct SchemeIntersectionResult {
  std::vector<SchemeIntersectionPart> parts;
  // Deduplicated: per root, only the part realizing the smallest rank bound.
  std::vector<MinorFamily> combined;
  std::vector<RankCondition> combined_conditions;
};

SchemeIntersectionResult scheme_intersection_generators(const Quiver& q,
                                                        const Representation& y,
                                                        std::uint64_t seed);

struct VanishingReport {
  int trials = 0;
  long long minors_evaluated = 0;
  long long nonzero_on_closure = 0;  // must stay 0
  bool proper = false;               // nonempty generator set
  bool witness_found = false;        // some minor per family nonzero at an ambient point
  bool pass = false;
  std::uint64_t seed = 0;
};

VanishingReport verify_vanishing(const Quiver& q, const std::vector<MinorFamily>& families,
                                 const Representation& target, int trials, std::uint64_t seed,
                                 const std::optional<DimVec>& onestep_beta = std::nullopt);

// Visits every minor of the family evaluated at x (block-cardinality row
// and column selections in lexicographic order). Stop by returning false.
void for_each_family_minor(const Quiver& q, const MinorFamily& f, const Representation& x,
                           const std::function<bool(const Rat&)>& visit);

}  // namespace qorc
