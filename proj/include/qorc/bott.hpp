#pragma once

#include "qorc/partitions.hpp"

#include <optional>

namespace qorc {

// Cohomology of S_mu R ox S_nu Q* on Gr(beta, beta + gamma), where R is the
// tautological subbundle and Q the quotient bundle.
struct BottInput {
  Partition mu;   // at most beta rows
  Partition nu;   // at most gamma rows
  int beta = 0;
  int gamma = 0;
};

struct BottOutput {
  int degree = 0;  // the one non-vanishing cohomological degree
  Weight tau;      // dominant weight with beta + gamma parts
};

// Builds the weight (-nu, mu) with -nu = (-nu_gamma, ..., -nu_1) occupying
// the first gamma slots, then sorts by the twisted exchange rule. Returns
// nullopt when every cohomology group vanishes.
std::optional<BottOutput> bott_cohomology(const BottInput& in);

}  // namespace qorc
