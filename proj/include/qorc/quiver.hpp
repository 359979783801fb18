#pragma once

#include "qorc/numeric.hpp"

#include <cstdint>
#include <vector>

namespace qorc {

// Vertices are numbered 1..n throughout, matching the usual type-A labeling.
struct Arrow {
  int tail = 0;
  int head = 0;
};

class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }

  // Underlying undirected graph is a simply laced Dynkin diagram (A/D/E).
  bool is_dynkin() const;
  // Underlying graph is the path 1 - 2 - ... - n with single edges.
  bool is_type_a_path() const;

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

void validate_dimension_vector(const Quiver& q, const DimVec& d);

long long euler_product(const Quiver& q, const DimVec& a, const DimVec& b);
long long euler_form(const Quiver& q, const DimVec& a);

struct Representation {
  DimVec dim;
  std::vector<MatQ> maps;  // maps[k] has shape dim[head-1] x dim[tail-1]
};

Representation zero_representation(const Quiver& q, const DimVec& d);
void validate_representation(const Quiver& q, const Representation& v);

// One invertible square matrix per vertex.
struct GroupElement {
  std::vector<MatQ> factors;
};

int hom_dim(const Quiver& q, const Representation& v, const Representation& w);
int ext_dim(const Quiver& q, const Representation& v, const Representation& w);
int orbit_codim(const Quiver& q, const Representation& v);

// The assembled matrix of d^V_W : +_x Hom(V_x,W_x) -> +_a Hom(V_ta,W_ha).
MatQ hom_ext_matrix(const Quiver& q, const Representation& v, const Representation& w);

Representation random_representation(const Quiver& q, const DimVec& d,
                                     std::uint64_t seed, int bound = 100);
GroupElement random_group_element(const Quiver& q, const DimVec& d,
                                  std::uint64_t seed, int bound = 10);

Representation act(const Quiver& q, const GroupElement& g, const Representation& v);
GroupElement compose(const GroupElement& g, const GroupElement& h);

Representation direct_sum(const Quiver& q, const Representation& a, const Representation& b);

}  // namespace qorc
