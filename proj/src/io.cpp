#include "qorc/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace qorc {

namespace {

DimVec parse_dimvec(const Json& j, int n, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(std::string("input: ") + name + " must have one entry per vertex");
  DimVec d(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number_integer() || j[i].get<long long>() < 0)
      throw std::invalid_argument(std::string("input: ") + name + " entries must be non-negative integers");
    d[i] = j[i].get<int>();
  }
  return d;
}

}  // namespace

InputSpec parse_input(const Json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    throw std::invalid_argument("input: missing vertex count");
  const int n = j["vertices"].get<int>();
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    for (const auto& e : j["arrows"]) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("input: arrows must be [tail, head] pairs");
      arrows.push_back(Arrow{e[0].get<int>(), e[1].get<int>()});
    }
  }
  InputSpec spec{Quiver(n, std::move(arrows)), {}, {}, {}, {}, {}};
  if (j.contains("alpha")) spec.alpha = parse_dimvec(j["alpha"], n, "alpha");
  if (j.contains("beta")) spec.beta = parse_dimvec(j["beta"], n, "beta");
  if (j.contains("gamma")) spec.gamma = parse_dimvec(j["gamma"], n, "gamma");
  if (j.contains("representation")) {
    const Json& r = j["representation"];
    if (!r.contains("matrices"))
      throw std::invalid_argument("input: representation needs matrices");
    const Json& ms = r["matrices"];
    if (static_cast<int>(ms.size()) != spec.quiver.arrow_count())
      throw std::invalid_argument("input: one matrix per arrow required");
    if (!spec.alpha)
      throw std::invalid_argument("input: alpha required with explicit matrices");
    Representation rep = zero_representation(spec.quiver, *spec.alpha);
    for (int k = 0; k < spec.quiver.arrow_count(); ++k) {
      const Json& mj = ms[k];
      MatQ& m = rep.maps[k];
      if (static_cast<Eigen::Index>(mj.size()) != m.rows())
        throw std::invalid_argument("input: matrix row count mismatch");
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (static_cast<Eigen::Index>(mj[i].size()) != m.cols())
          throw std::invalid_argument("input: matrix column count mismatch");
        for (Eigen::Index c = 0; c < m.cols(); ++c)
          m(i, c) = Rat(mj[i][c].get<long long>());
      }
    }
    spec.representation = std::move(rep);
  }
  if (j.contains("summands")) {
    std::vector<std::array<int, 3>> s;
    for (const auto& e : j["summands"]) {
      if (!e.is_array() || e.size() != 3)
        throw std::invalid_argument("input: summands must be [p, q, mult] triples");
      s.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    spec.summands = std::move(s);
  }
  return spec;
}

InputSpec load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("input: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("input: JSON parse error: ") + e.what());
  }
  return parse_input(j);
}

Json betti_to_json(const BettiTable& t) {
  Json out;
  Json entries = Json::array();
  for (const auto& [key, r] : t.ranks) {
    Json e;
    e["i"] = key.first;
    e["t"] = key.second;
    e["rank"] = r.str();
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  Json terms = Json::array();
  for (const ResolutionTerm& term : t.terms) {
    Json e;
    e["i"] = term.hom_index;
    e["t"] = term.degree;
    e["weights"] = term.weights;
    e["multiplicity"] = term.multiplicity.str();
    e["rank"] = term.rank.str();
    terms.push_back(std::move(e));
  }
  out["terms"] = std::move(terms);
  Json totals = Json::object();
  for (const auto& [i, r] : t.totals()) totals[std::to_string(i)] = r.str();
  out["totals"] = std::move(totals);
  return out;
}

std::string betti_to_text(const BettiTable& t) {
  // Macaulay-style grid: columns are homological indices, rows are t - i.
  const long lo = t.min_index(), hi = t.max_index();
  int max_slope = 0;
  for (const auto& [key, r] : t.ranks)
    max_slope = std::max(max_slope, static_cast<int>(key.second - key.first));
  std::vector<std::string> col_labels;
  std::vector<std::vector<std::string>> grid;  // rows: totals + slopes
  auto total = t.totals();
  std::vector<std::string> totals_row;
  for (long i = lo; i <= hi; ++i)
    totals_row.push_back(total.count(i) ? total[i].str() : ".");
  for (int s = 0; s <= max_slope; ++s) {
    std::vector<std::string> row;
    for (long i = lo; i <= hi; ++i) {
      Int r = t.rank_at(i, static_cast<int>(i) + s);
      row.push_back(r == 0 ? "." : r.str());
    }
    grid.push_back(std::move(row));
  }
  for (long i = lo; i <= hi; ++i) col_labels.push_back(std::to_string(i));

  std::vector<size_t> width(col_labels.size());
  for (size_t c = 0; c < col_labels.size(); ++c) {
    width[c] = col_labels[c].size();
    width[c] = std::max(width[c], totals_row[c].size());
    for (const auto& row : grid) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto emit_row = [&](const std::string& label, const std::vector<std::string>& cells) {
    os << label;
    for (size_t c = 0; c < cells.size(); ++c) {
      os << ' ';
      os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    os << '\n';
  };
  std::string header_label = "       ";
  emit_row("       ", col_labels);
  emit_row("total: ", totals_row);
  for (int s = 0; s <= max_slope; ++s) {
    std::ostringstream lab;
    lab.width(5);
    lab << s;
    emit_row(lab.str() + ": ", grid[s]);
  }
  return os.str();
}

Json families_to_json(const std::vector<MinorFamily>& fams,
                      const std::vector<RankCondition>& conds) {
  Json out;
  Json jf = Json::array();
  for (const MinorFamily& f : fams) {
    Json e;
    e["root"] = {f.p, f.q};
    Json rc = Json::array();
    for (const auto& [r, c] : f.rc) rc.push_back({r, c});
    e["rc"] = std::move(rc);
    e["column_blocks"] = f.col_blocks;
    e["column_counts"] = f.col_counts;
    e["row_blocks"] = f.row_blocks;
    e["row_counts"] = f.row_counts;
    e["size"] = f.size;
    e["degree"] = f.degree;
    jf.push_back(std::move(e));
  }
  out["families"] = std::move(jf);
  Json jc = Json::array();
  for (const RankCondition& c : conds) {
    Json e;
    e["root"] = {c.p, c.q};
    e["bound"] = c.bound;
    jc.push_back(std::move(e));
  }
  out["rank_conditions"] = std::move(jc);
  return out;
}

std::string families_to_text(const std::vector<MinorFamily>& fams,
                             const std::vector<RankCondition>& conds) {
  std::ostringstream os;
  os << "rank conditions:\n";
  for (const RankCondition& c : conds)
    os << "  rank X[" << c.p << "," << c.q << "] <= " << c.bound << "\n";
  if (conds.empty()) os << "  (none; the orbit closure is the whole space)\n";
  os << "minor families:\n";
  for (const MinorFamily& f : fams) {
    os << "  root (" << f.p << "," << f.q << ")  size " << f.size << "x" << f.size
       << "  degree " << f.degree << "\n";
    os << "    columns:";
    for (size_t j = 0; j < f.col_blocks.size(); ++j)
      os << " " << f.col_counts[j] << " of block V" << f.col_blocks[j];
    os << "\n    rows:   ";
    for (size_t i = 0; i < f.row_blocks.size(); ++i)
      os << " " << f.row_counts[i] << " of block V" << f.row_blocks[i];
    os << "\n    RC:";
    for (const auto& [r, c] : f.rc) os << " (" << r << "," << c << ")";
    os << "\n";
  }
  if (fams.empty()) os << "  (none)\n";
  return os.str();
}

Json report_to_json(const MinResolutionReport& r) {
  Json out;
  out["dynkin"] = r.dynkin;
  out["no_negative_terms"] = r.no_negative_terms;
  out["f0_rank"] = r.f0_rank.str();
  out["normal"] = r.normal;
  out["note"] = r.note;
  return out;
}

Json scheme_to_json(const SchemeIntersectionResult& r) {
  Json out;
  Json parts = Json::array();
  for (const SchemeIntersectionPart& p : r.parts) {
    Json e;
    e["p"] = p.p;
    e["beta_p"] = std::vector<int>(p.beta_p.data(), p.beta_p.data() + p.beta_p.size());
    Json fc = families_to_json(p.families, p.conditions);
    e["families"] = fc["families"];
    e["rank_conditions"] = fc["rank_conditions"];
    parts.push_back(std::move(e));
  }
  out["parts"] = std::move(parts);
  Json fc = families_to_json(r.combined, r.combined_conditions);
  out["combined_families"] = fc["families"];
  out["combined_rank_conditions"] = fc["rank_conditions"];
  return out;
}

std::string scheme_to_text(const SchemeIntersectionResult& r) {
  std::ostringstream os;
  for (const SchemeIntersectionPart& p : r.parts) {
    os << "p = " << p.p << ", beta^p = (";
    for (Eigen::Index i = 0; i < p.beta_p.size(); ++i)
      os << (i ? "," : "") << p.beta_p[i];
    os << ")\n";
    os << families_to_text(p.families, p.conditions);
  }
  os << "combined (deduplicated by smallest rank bound per root):\n";
  os << families_to_text(r.combined, r.combined_conditions);
  return os.str();
}

Json vanishing_to_json(const VanishingReport& r) {
  Json out;
  out["trials"] = r.trials;
  out["minors_evaluated"] = r.minors_evaluated;
  out["nonzero_on_closure"] = r.nonzero_on_closure;
  out["proper"] = r.proper;
  out["witness_found"] = r.witness_found;
  out["pass"] = r.pass;
  out["seed"] = r.seed;
  return out;
}

std::string vanishing_to_text(const VanishingReport& r) {
  std::ostringstream os;
  os << "seed " << r.seed << ", trials " << r.trials << ", minors evaluated "
     << r.minors_evaluated << "\n";
  os << "nonzero evaluations on closure samples: " << r.nonzero_on_closure << "\n";
  if (r.proper)
    os << "ambient non-vanishing witness: " << (r.witness_found ? "found" : "NOT FOUND") << "\n";
  else
    os << "generator set empty (closure is the whole space); vacuous pass\n";
  os << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string expanded_minors_text(const Quiver& q, const DimVec& alpha,
                                 const MinorFamily& f, int max_size) {
  if (f.size > max_size) {
    std::ostringstream os;
    os << "# family at root (" << f.p << "," << f.q << ") has minor size " << f.size
       << " > " << max_size << "; expansion skipped\n";
    return os.str();
  }
  SymbolicBlockMatrix sym = symbolic_block_matrix(q, alpha, f.p, f.q);
  std::vector<int> row_off(f.row_blocks.size() + 1, 0), col_off(f.col_blocks.size() + 1, 0);
  for (size_t i = 0; i < f.row_blocks.size(); ++i)
    row_off[i + 1] = row_off[i] + alpha[f.row_blocks[i] - 1];
  for (size_t j = 0; j < f.col_blocks.size(); ++j)
    col_off[j + 1] = col_off[j] + alpha[f.col_blocks[j] - 1];

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
    row_sel.push_back(selections(alpha[f.row_blocks[i] - 1], f.row_counts[i]));
  for (size_t j = 0; j < f.col_blocks.size(); ++j)
    col_sel.push_back(selections(alpha[f.col_blocks[j] - 1], f.col_counts[j]));

  std::ostringstream os;
  std::vector<int> rows, cols;
  std::function<void(size_t)> walk_cols = [&](size_t j) {
    if (j == col_sel.size()) {
      PolyMatrix sub(f.size, std::vector<Poly>(f.size));
      for (int r = 0; r < f.size; ++r)
        for (int c = 0; c < f.size; ++c) sub[r][c] = sym.entries[rows[r]][cols[c]];
      os << poly_det(sub).to_string(sym.var_name) << "\n";
      return;
    }
    for (const auto& pick : col_sel[j]) {
      for (int v : pick) cols.push_back(col_off[j] + v);
      walk_cols(j + 1);
      cols.resize(cols.size() - pick.size());
    }
  };
  std::function<void(size_t)> walk_rows = [&](size_t i) {
    if (i == row_sel.size()) {
      walk_cols(0);
      return;
    }
    for (const auto& pick : row_sel[i]) {
      for (int v : pick) rows.push_back(row_off[i] + v);
      walk_rows(i + 1);
      rows.resize(rows.size() - pick.size());
    }
  };
  walk_rows(0);
  return os.str();
}

}  // namespace qorc
