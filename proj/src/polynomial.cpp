#include "qorc/polynomial.hpp"

#include "qorc/typea.hpp"

#include <algorithm>
#include <sstream>

namespace qorc {

void Poly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

Poly Poly::constant(Int c) {
  Poly p;
  if (c != 0) p.terms_[{}] = std::move(c);
  return p;
}

Poly Poly::variable(int id) {
  Poly p;
  p.terms_[{id}] = 1;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.terms_[m] += c;
  out.prune();
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.terms_[m] -= c;
  out.prune();
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      std::vector<int> m;
      m.reserve(m1.size() + m2.size());
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
      out.terms_[std::move(m)] += c1 * c2;
    }
  out.prune();
  return out;
}

long long Poly::degree() const {
  long long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long long>(d, static_cast<long long>(m.size()));
  return d;
}

std::string Poly::to_string(const std::function<std::string(int)>& var_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit = (a == 1) && !m.empty();
    if (!unit) os << a.str();
    int run = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      ++run;
      const bool last_of_run = (i + 1 == m.size()) || m[i + 1] != m[i];
      if (last_of_run) {
        if (!unit || i + 1 != static_cast<size_t>(run)) os << "*";
        os << var_name(m[i]);
        if (run > 1) os << "^" << run;
        run = 0;
      }
    }
  }
  return os.str();
}

Poly poly_det(const PolyMatrix& m) {
  const size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  // Cofactor expansion along the first remaining column, recursing on row
  // subsets; fine at minor sizes used here.
  std::vector<int> rows(n);
  for (size_t i = 0; i < n; ++i) rows[i] = static_cast<int>(i);
  std::function<Poly(std::vector<int>&, size_t)> rec = [&](std::vector<int>& rs,
                                                           size_t col) -> Poly {
    if (rs.size() == 1) return m[rs[0]][col];
    Poly acc;
    for (size_t k = 0; k < rs.size(); ++k) {
      const int r = rs[k];
      if (m[r][col].is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(rs.size() - 1);
      for (size_t j = 0; j < rs.size(); ++j)
        if (j != k) rest.push_back(rs[j]);
      Poly sub = rec(rest, col + 1);
      Poly term = m[r][col] * sub;
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return rec(rows, 0);
}

SymbolicBlockMatrix symbolic_block_matrix(const Quiver& q, const DimVec& alpha,
                                          int p, int q_hi) {
  validate_dimension_vector(q, alpha);
  Zigzag zz = zigzag(q);
  RootSupport rs = root_support(zz, p, q_hi);

  // Variable ids per arrow entry.
  std::vector<int> base(q.arrow_count() + 1, 0);
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    base[k + 1] = base[k] + alpha[a.head - 1] * alpha[a.tail - 1];
  }
  auto var_id = [&](int k, int i, int j) {
    const Arrow& a = q.arrows()[k];
    return base[k] + i * alpha[a.tail - 1] + j;
  };
  auto arrow_matrix = [&](int k) {
    const Arrow& a = q.arrows()[k];
    PolyMatrix m(alpha[a.head - 1], std::vector<Poly>(alpha[a.tail - 1]));
    for (int i = 0; i < alpha[a.head - 1]; ++i)
      for (int j = 0; j < alpha[a.tail - 1]; ++j) m[i][j] = Poly::variable(var_id(k, i, j));
    return m;
  };
  auto matmul = [](const PolyMatrix& a, const PolyMatrix& b) {
    const size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    PolyMatrix out(rows, std::vector<Poly>(cols));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        Poly acc;
        for (size_t k = 0; k < inner; ++k) acc = acc + a[i][k] * b[k][j];
        out[i][j] = acc;
      }
    return out;
  };

  std::vector<int> row_off(rs.sinks.size() + 1, 0), col_off(rs.sources.size() + 1, 0);
  for (size_t i = 0; i < rs.sinks.size(); ++i)
    row_off[i + 1] = row_off[i] + alpha[rs.sinks[i] - 1];
  for (size_t j = 0; j < rs.sources.size(); ++j)
    col_off[j + 1] = col_off[j] + alpha[rs.sources[j] - 1];

  SymbolicBlockMatrix out;
  out.row_blocks = rs.sinks;
  out.col_blocks = rs.sources;
  out.entries.assign(row_off.back(), std::vector<Poly>(col_off.back()));

  for (const Run& run : rs.runs) {
    PolyMatrix comp;
    if (run.rightward) {
      comp = arrow_matrix(zz.edge_arrow[run.lo]);
      for (int e = run.lo + 1; e <= run.hi - 1; ++e)
        comp = matmul(arrow_matrix(zz.edge_arrow[e]), comp);
    } else {
      comp = arrow_matrix(zz.edge_arrow[run.hi - 1]);
      for (int e = run.hi - 2; e >= run.lo; --e)
        comp = matmul(arrow_matrix(zz.edge_arrow[e]), comp);
    }
    const size_t ri =
        std::lower_bound(rs.sinks.begin(), rs.sinks.end(), run.sink()) - rs.sinks.begin();
    const size_t ci = std::lower_bound(rs.sources.begin(), rs.sources.end(), run.source()) -
                      rs.sources.begin();
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = 0; j < comp[i].size(); ++j)
        out.entries[row_off[ri] + i][col_off[ci] + j] = comp[i][j];
  }

  // Name lookup captures plain data only; 1-based arrow and entry indices.
  std::vector<int> widths(q.arrow_count());
  for (int k = 0; k < q.arrow_count(); ++k) widths[k] = alpha[q.arrows()[k].tail - 1];
  out.var_name = [base, widths](int id) {
    int k = 0;
    while (base[k + 1] <= id) ++k;
    const int local = id - base[k];
    const int i = widths[k] == 0 ? 0 : local / widths[k];
    const int j = widths[k] == 0 ? 0 : local % widths[k];
    std::ostringstream os;
    os << "x[" << (k + 1) << "][" << (i + 1) << "][" << (j + 1) << "]";
    return os.str();
  };
  return out;
}

}  // namespace qorc
