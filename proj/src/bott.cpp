#include "qorc/bott.hpp"

#include <stdexcept>

namespace qorc {

std::optional<BottOutput> bott_cohomology(const BottInput& in) {
  if (in.beta < 0 || in.gamma < 0)
    throw std::invalid_argument("bott_cohomology: negative bundle rank");
  if (in.mu.rows() > in.beta)
    throw std::invalid_argument("bott_cohomology: mu exceeds beta rows");
  if (in.nu.rows() > in.gamma)
    throw std::invalid_argument("bott_cohomology: nu exceeds gamma rows");
  Weight delta(in.gamma + in.beta, 0);
  for (int k = 0; k < in.gamma; ++k) delta[k] = -in.nu.part(in.gamma - k);
  for (int k = 0; k < in.beta; ++k) delta[in.gamma + k] = in.mu.part(k + 1);
  auto norm = normalize_weight(delta);
  if (!norm) return std::nullopt;
  return BottOutput{norm->exchanges, std::move(norm->tau)};
}

}  // namespace qorc
