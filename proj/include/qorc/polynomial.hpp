#pragma once

#include "qorc/numeric.hpp"
#include "qorc/quiver.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qorc {

// Sparse multivariate polynomial over Z; a monomial is a sorted list of
// variable ids with repetition.
class Poly {
 public:
  Poly() = default;
  static Poly constant(Int c);
  static Poly variable(int id);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;

  bool is_zero() const { return terms_.empty(); }
  long long degree() const;
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  std::string to_string(const std::function<std::string(int)>& var_name) const;

 private:
  std::map<std::vector<int>, Int> terms_;
  void prune();
};

using PolyMatrix = std::vector<std::vector<Poly>>;

Poly poly_det(const PolyMatrix& m);

// The generic block matrix X_{p,q} with polynomial entries; variables are
// the entries x[a][i][j] of the arrow matrices (1-based in the printed
// names, a = arrow input index).
struct SymbolicBlockMatrix {
  PolyMatrix entries;
  std::vector<int> row_blocks, col_blocks;    // sink / source vertices
  std::function<std::string(int)> var_name;   // id -> "x[a][i][j]"
};

SymbolicBlockMatrix symbolic_block_matrix(const Quiver& q, const DimVec& alpha,
                                          int p, int q_hi);

}  // namespace qorc
