#include "qorc/quiver.hpp"

#include "qorc/linalg.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qorc {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ <= 0) throw std::invalid_argument("quiver: vertex count must be positive");
  for (const Arrow& a : arrows_) {
    if (a.tail < 1 || a.tail > n_ || a.head < 1 || a.head > n_)
      throw std::invalid_argument("quiver: arrow endpoint out of range");
    if (a.tail == a.head) throw std::invalid_argument("quiver: loops are not allowed");
  }
  // Connectivity of the underlying undirected graph.
  std::vector<std::vector<int>> adj(n_ + 1);
  for (const Arrow& a : arrows_) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<bool> seen(n_ + 1, false);
  std::queue<int> bfs;
  bfs.push(1);
  seen[1] = true;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        bfs.push(w);
      }
  }
  if (reached != n_) throw std::invalid_argument("quiver: underlying graph must be connected");
}

bool Quiver::is_type_a_path() const {
  if (static_cast<int>(arrows_.size()) != n_ - 1) return false;
  std::vector<int> edge_count(n_, 0);  // edge i between vertices i and i+1
  for (const Arrow& a : arrows_) {
    int lo = std::min(a.tail, a.head), hi = std::max(a.tail, a.head);
    if (hi != lo + 1) return false;
    edge_count[lo] += 1;
  }
  for (int i = 1; i < n_; ++i)
    if (edge_count[i] != 1) return false;
  return true;
}

bool Quiver::is_dynkin() const {
  // Tree with simple edges; degree sequence decides A/D/E.
  if (static_cast<int>(arrows_.size()) != n_ - 1) return false;
  std::vector<std::vector<int>> adj(n_ + 1);
  for (const Arrow& a : arrows_) {
    for (int w : adj[a.tail])
      if (w == a.head) return false;  // multi-edge
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<int> deg(n_ + 1, 0);
  int branch = 0, branch_vertex = 0;
  for (int v = 1; v <= n_; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] >= 4) return false;
    if (deg[v] == 3) {
      ++branch;
      branch_vertex = v;
    }
  }
  if (branch == 0) return true;  // type A
  if (branch > 1) return false;
  // Arm lengths from the unique branch vertex.
  std::vector<int> arms;
  for (int s : adj[branch_vertex]) {
    int len = 1, prev = branch_vertex, cur = s;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return true;                      // type D
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return true;      // E6, E7, E8
  return false;
}

void validate_dimension_vector(const Quiver& q, const DimVec& d) {
  if (d.size() != q.vertex_count())
    throw std::invalid_argument("dimension vector: length mismatch");
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d[i] < 0) throw std::invalid_argument("dimension vector: negative entry");
}

long long euler_product(const Quiver& q, const DimVec& a, const DimVec& b) {
  validate_dimension_vector(q, a);
  validate_dimension_vector(q, b);
  long long s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  for (const Arrow& ar : q.arrows())
    s -= static_cast<long long>(a[ar.tail - 1]) * b[ar.head - 1];
  return s;
}

long long euler_form(const Quiver& q, const DimVec& a) { return euler_product(q, a, a); }

Representation zero_representation(const Quiver& q, const DimVec& d) {
  validate_dimension_vector(q, d);
  Representation v;
  v.dim = d;
  v.maps.reserve(q.arrows().size());
  for (const Arrow& a : q.arrows())
    v.maps.push_back(MatQ::Zero(d[a.head - 1], d[a.tail - 1]));
  return v;
}

void validate_representation(const Quiver& q, const Representation& v) {
  validate_dimension_vector(q, v.dim);
  if (v.maps.size() != q.arrows().size())
    throw std::invalid_argument("representation: arrow/matrix count mismatch");
  for (size_t k = 0; k < v.maps.size(); ++k) {
    const Arrow& a = q.arrows()[k];
    if (v.maps[k].rows() != v.dim[a.head - 1] || v.maps[k].cols() != v.dim[a.tail - 1])
      throw std::invalid_argument("representation: matrix shape mismatch");
  }
}

MatQ hom_ext_matrix(const Quiver& q, const Representation& v, const Representation& w) {
  validate_representation(q, v);
  validate_representation(q, w);
  const int n = q.vertex_count();
  // Column block per vertex x: vec of phi_x (W_x rows, V_x cols), column-major.
  std::vector<Eigen::Index> col_off(n + 1, 0);
  for (int x = 1; x <= n; ++x)
    col_off[x] = col_off[x - 1] + static_cast<Eigen::Index>(v.dim[x - 1]) * w.dim[x - 1];
  std::vector<Eigen::Index> row_off(q.arrow_count() + 1, 0);
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    row_off[k + 1] = row_off[k] +
                     static_cast<Eigen::Index>(v.dim[a.tail - 1]) * w.dim[a.head - 1];
  }
  MatQ m = MatQ::Zero(row_off[q.arrow_count()], col_off[n]);
  auto vec_index = [](Eigen::Index rows, Eigen::Index r, Eigen::Index c) {
    return c * rows + r;
  };
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    const Eigen::Index vt = v.dim[a.tail - 1], vh = v.dim[a.head - 1];
    const Eigen::Index wt = w.dim[a.tail - 1], wh = w.dim[a.head - 1];
    // phi_ha V(a): entry (r, c) of the result pulls phi_ha(r, s) V(a)(s, c).
    for (Eigen::Index c = 0; c < vt; ++c)
      for (Eigen::Index r = 0; r < wh; ++r) {
        Eigen::Index row = row_off[k] + vec_index(wh, r, c);
        for (Eigen::Index s = 0; s < vh; ++s) {
          const Rat& coeff = v.maps[k](s, c);
          if (coeff != 0)
            m(row, col_off[a.head - 1] + vec_index(wh, r, s)) += coeff;
        }
        // -W(a) phi_ta: entry (r, c) pulls W(a)(r, s) phi_ta(s, c).
        for (Eigen::Index s = 0; s < wt; ++s) {
          const Rat& coeff = w.maps[k](r, s);
          if (coeff != 0)
            m(row, col_off[a.tail - 1] + vec_index(wt, s, c)) -= coeff;
        }
      }
  }
  return m;
}

int hom_dim(const Quiver& q, const Representation& v, const Representation& w) {
  long long domain = 0;
  for (int x = 0; x < q.vertex_count(); ++x)
    domain += static_cast<long long>(v.dim[x]) * w.dim[x];
  MatQ m = hom_ext_matrix(q, v, w);
  return static_cast<int>(domain - rank(m));
}

int ext_dim(const Quiver& q, const Representation& v, const Representation& w) {
  int h = hom_dim(q, v, w);
  long long e = static_cast<long long>(h) - euler_product(q, v.dim, w.dim);
  if (e < 0) throw InternalConsistencyError("ext_dim: negative value");
  return static_cast<int>(e);
}

int orbit_codim(const Quiver& q, const Representation& v) { return ext_dim(q, v, v); }

Representation random_representation(const Quiver& q, const DimVec& d,
                                     std::uint64_t seed, int bound) {
  validate_dimension_vector(q, d);
  Rng rng(seed);
  Representation v;
  v.dim = d;
  v.maps.reserve(q.arrows().size());
  for (const Arrow& a : q.arrows()) {
    MatQ m(d[a.head - 1], d[a.tail - 1]);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        m(i, j) = Rat(rng.uniform(-bound, bound));
    v.maps.push_back(std::move(m));
  }
  return v;
}

GroupElement random_group_element(const Quiver& q, const DimVec& d,
                                  std::uint64_t seed, int bound) {
  validate_dimension_vector(q, d);
  Rng rng(seed);
  GroupElement g;
  g.factors.reserve(q.vertex_count());
  for (int x = 0; x < q.vertex_count(); ++x) {
    const Eigen::Index k = d[x];
    MatQ m(k, k);
    for (int attempt = 0;; ++attempt) {
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
          m(i, j) = Rat(rng.uniform(-bound, bound));
      if (is_invertible(m)) break;
      if (attempt > 64)
        throw std::runtime_error("random_group_element: could not sample invertible matrix");
    }
    g.factors.push_back(std::move(m));
  }
  return g;
}

Representation act(const Quiver& q, const GroupElement& g, const Representation& v) {
  validate_representation(q, v);
  if (static_cast<int>(g.factors.size()) != q.vertex_count())
    throw std::invalid_argument("act: group element size mismatch");
  std::vector<MatQ> inv(g.factors.size());
  for (size_t x = 0; x < g.factors.size(); ++x) {
    const MatQ& f = g.factors[x];
    if (f.rows() != f.cols() || f.rows() != v.dim[static_cast<Eigen::Index>(x)])
      throw std::invalid_argument("act: group factor shape mismatch");
    inv[x] = inverse(f);  // throws on singular input
  }
  Representation out;
  out.dim = v.dim;
  out.maps.reserve(v.maps.size());
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    out.maps.push_back(g.factors[a.head - 1] * v.maps[k] * inv[a.tail - 1]);
  }
  return out;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.factors.size() != h.factors.size())
    throw std::invalid_argument("compose: size mismatch");
  GroupElement out;
  out.factors.reserve(g.factors.size());
  for (size_t i = 0; i < g.factors.size(); ++i)
    out.factors.push_back(g.factors[i] * h.factors[i]);
  return out;
}

Representation direct_sum(const Quiver& q, const Representation& a, const Representation& b) {
  validate_representation(q, a);
  validate_representation(q, b);
  Representation out;
  out.dim = a.dim + b.dim;
  out.maps.reserve(q.arrows().size());
  for (int k = 0; k < q.arrow_count(); ++k) {
    const Arrow& ar = q.arrows()[k];
    MatQ m = MatQ::Zero(out.dim[ar.head - 1], out.dim[ar.tail - 1]);
    m.topLeftCorner(a.dim[ar.head - 1], a.dim[ar.tail - 1]) = a.maps[k];
    m.bottomRightCorner(b.dim[ar.head - 1], b.dim[ar.tail - 1]) = b.maps[k];
    out.maps.push_back(std::move(m));
  }
  return out;
}

}  // namespace qorc
