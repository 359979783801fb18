#pragma once

#include "qorc/orbit.hpp"
#include "qorc/polynomial.hpp"
#include "qorc/resolution.hpp"
#include "qorc/typea.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qorc {

using Json = nlohmann::ordered_json;

// Parsed problem input:
// {"vertices": n, "arrows": [[ta,ha],...], "alpha": [...], "beta": [...],
//  "gamma": [...], "representation": {"matrices": [[[...]]]},
//  "summands": [[p,q,mult],...]}
struct InputSpec {
  Quiver quiver;
  std::optional<DimVec> alpha, beta, gamma;
  std::optional<Representation> representation;
  std::optional<std::vector<std::array<int, 3>>> summands;
};

InputSpec parse_input(const Json& j);
InputSpec load_input(const std::string& path);

Json betti_to_json(const BettiTable& t);
std::string betti_to_text(const BettiTable& t);

Json families_to_json(const std::vector<MinorFamily>& fams,
                      const std::vector<RankCondition>& conds);
std::string families_to_text(const std::vector<MinorFamily>& fams,
                             const std::vector<RankCondition>& conds);

Json report_to_json(const MinResolutionReport& r);
Json scheme_to_json(const SchemeIntersectionResult& r);
std::string scheme_to_text(const SchemeIntersectionResult& r);
Json vanishing_to_json(const VanishingReport& r);
std::string vanishing_to_text(const VanishingReport& r);

// One polynomial per line, monomials as products of x[a][i][j].
std::string expanded_minors_text(const Quiver& q, const DimVec& alpha,
                                 const MinorFamily& f, int max_size);

}  // namespace qorc
