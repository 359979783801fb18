#include "qorc/io.hpp"
#include "qorc/linalg.hpp"
#include "qorc/orbit.hpp"
#include "qorc/resolution.hpp"
#include "qorc/typea.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qorc;

struct Options {
  std::string input;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  long long max_collections = 10'000'000;
  int trials = 50;
  bool expand_minors = false;
};

constexpr int kMaxExpandSize = 6;

std::uint64_t require_seed(const Options& opt) {
  if (!opt.seed) throw std::invalid_argument("this command requires --seed");
  return *opt.seed;
}

DimVec resolve_beta_gamma(const InputSpec& in, DimVec& beta_out) {
  if (!in.beta) throw std::invalid_argument("input: beta required");
  beta_out = *in.beta;
  if (in.gamma) return *in.gamma;
  if (!in.alpha) throw std::invalid_argument("input: alpha or gamma required");
  DimVec g = *in.alpha - beta_out;
  for (Eigen::Index i = 0; i < g.size(); ++i)
    if (g[i] < 0) throw std::invalid_argument("input: beta must be <= alpha entrywise");
  return g;
}

int cmd_euler(const Options& opt) {
  InputSpec in = load_input(opt.input);
  if (!in.alpha) throw std::invalid_argument("input: alpha required");
  long long form = euler_form(in.quiver, *in.alpha);
  std::optional<long long> pairing;
  if (in.beta) pairing = euler_product(in.quiver, *in.alpha, *in.beta);
  if (opt.format == "json") {
    Json j;
    j["euler_form_alpha"] = form;
    if (pairing) j["euler_product_alpha_beta"] = *pairing;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "E_Q(alpha) = " << form << "\n";
    if (pairing) std::cout << "<alpha, beta> = " << *pairing << "\n";
  }
  return 0;
}

int cmd_resolve(const Options& opt) {
  InputSpec in = load_input(opt.input);
  DimVec beta;
  DimVec gamma = resolve_beta_gamma(in, beta);
  BundleSpec spec(in.quiver, beta, gamma);
  AssembleOptions aopts;
  aopts.max_collections = opt.max_collections;
  BettiTable table = assemble_resolution(spec, aopts);
  MinResolutionReport report = min_resolution_check(spec, aopts);
  if (opt.format == "json") {
    Json j = betti_to_json(table);
    j["report"] = report_to_json(report);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << betti_to_text(table);
    std::cout << report.note << "\n";
  }
  return 0;
}

int cmd_equations(const Options& opt) {
  InputSpec in = load_input(opt.input);
  DimVec beta;
  DimVec gamma = resolve_beta_gamma(in, beta);
  auto fams = minor_generators(in.quiver, beta, gamma);
  auto conds = rank_conditions(in.quiver, beta, gamma);
  DimVec alpha = beta + gamma;
  if (opt.format == "json") {
    std::cout << families_to_json(fams, conds).dump(2) << "\n";
  } else {
    std::cout << families_to_text(fams, conds);
  }
  if (opt.expand_minors) {
    for (const MinorFamily& f : fams)
      std::cout << expanded_minors_text(in.quiver, alpha, f, kMaxExpandSize);
  }
  return 0;
}

Representation input_representation(const InputSpec& in) {
  if (in.representation) return *in.representation;
  if (in.summands) {
    Representation acc =
        zero_representation(in.quiver, DimVec::Zero(in.quiver.vertex_count()));
    for (const auto& [p, q, m] : *in.summands)
      for (int c = 0; c < m; ++c)
        acc = direct_sum(in.quiver, acc, interval_representation(in.quiver, p, q));
    return acc;
  }
  throw std::invalid_argument("input: representation (matrices or summands) required");
}

int cmd_onestep(const Options& opt) {
  InputSpec in = load_input(opt.input);
  const std::uint64_t seed = require_seed(opt);
  Representation v = input_representation(in);
  RankInvariant ranks = rank_invariant(in.quiver, v);
  Json j;
  j["seed"] = seed;
  std::vector<DimVec> hits;
  // Search every subdimension vector beta <= alpha.
  DimVec beta = DimVec::Zero(in.quiver.vertex_count());
  const int n = in.quiver.vertex_count();
  std::uint64_t salt = 0;
  while (true) {
    if (is_one_step(in.quiver, ranks, beta, seed + 7919 * salt)) hits.push_back(beta);
    ++salt;
    int i = 0;
    while (i < n && beta[i] == v.dim[i]) beta[i++] = 0;
    if (i == n) break;
    ++beta[i];
  }
  Json jb = Json::array();
  for (const DimVec& b : hits)
    jb.push_back(std::vector<int>(b.data(), b.data() + b.size()));
  j["one_step_betas"] = jb;
  std::optional<DimVec> split;
  if (in.summands) split = split_sufficient(in.quiver, *in.summands, seed);
  if (in.summands) {
    if (split)
      j["split_sufficient_beta"] =
          std::vector<int>(split->data(), split->data() + split->size());
    else
      j["split_sufficient_beta"] = nullptr;
  }
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "seed " << seed << "\n";
    if (hits.empty()) std::cout << "not 1-step for any beta\n";
    for (const DimVec& b : hits) {
      std::cout << "1-step with beta = (";
      for (Eigen::Index i = 0; i < b.size(); ++i) std::cout << (i ? "," : "") << b[i];
      std::cout << ")\n";
    }
    if (in.summands) {
      if (split) {
        std::cout << "split-sufficient beta = (";
        for (Eigen::Index i = 0; i < split->size(); ++i)
          std::cout << (i ? "," : "") << (*split)[i];
        std::cout << ")\n";
      } else {
        std::cout << "no generic two-part splitting with vanishing Ext\n";
      }
    }
  }
  return 0;
}

int cmd_intersect(const Options& opt) {
  InputSpec in = load_input(opt.input);
  const std::uint64_t seed = require_seed(opt);
  Representation y = input_representation(in);
  SchemeIntersectionResult r = scheme_intersection_generators(in.quiver, y, seed);
  if (opt.format == "json") {
    Json j = scheme_to_json(r);
    j["seed"] = seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "seed " << seed << "\n" << scheme_to_text(r);
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  InputSpec in = load_input(opt.input);
  const std::uint64_t seed = require_seed(opt);
  VanishingReport report;
  if (in.representation || in.summands) {
    Representation y = input_representation(in);
    SchemeIntersectionResult r = scheme_intersection_generators(in.quiver, y, seed);
    report = verify_vanishing(in.quiver, r.combined, y, opt.trials, seed);
  } else {
    DimVec beta;
    DimVec gamma = resolve_beta_gamma(in, beta);
    auto fams = minor_generators(in.quiver, beta, gamma);
    OneStepWitness w = generic_extension(in.quiver, beta, gamma, seed);
    report = verify_vanishing(in.quiver, fams, w.rep, opt.trials, seed, beta);
  }
  if (opt.format == "json")
    std::cout << vanishing_to_json(report).dump(2) << "\n";
  else
    std::cout << vanishing_to_text(report);
  return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiver orbit closures: Betti tables and defining equations"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--input", opt.input, "input JSON path")->required();
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "seed for randomized commands");
  app.add_option("--format", opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-collections", opt.max_collections, "enumeration cap");
  app.add_option("--trials", opt.trials, "sampling trials for verify");
  app.add_flag("--expand-minors", opt.expand_minors,
               "print expanded minor polynomials (size-limited)");

  auto* euler = app.add_subcommand("euler", "Euler form and product");
  auto* resolve = app.add_subcommand("resolve", "Betti table of a 1-step orbit closure");
  auto* equations = app.add_subcommand("equations", "minimal generating minors, type A");
  auto* onestep = app.add_subcommand("onestep", "1-step search for a representation");
  auto* intersect = app.add_subcommand("intersect", "scheme-intersection generators");
  auto* verify = app.add_subcommand("verify", "randomized vanishing check");

  try {
    app.parse(argc, argv);
    if (seed_opt->count() > 0) opt.seed = seed_value;
    if (euler->parsed()) return cmd_euler(opt);
    if (resolve->parsed()) return cmd_resolve(opt);
    if (equations->parsed()) return cmd_equations(opt);
    if (onestep->parsed()) return cmd_onestep(opt);
    if (intersect->parsed()) return cmd_intersect(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const qorc::InternalConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 2;
  } catch (const qorc::CapExceededError& e) {
    std::cerr << "desk-scale cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
