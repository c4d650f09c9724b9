#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace kac {

using CMat = Eigen::MatrixXcd;

// Wedderburn data of a *-subalgebra of M_N given by a basis: block k is M_{sizes[k]} repeated
// mults[k] times, central[k] its minimal central projection.
struct BlockData {
  std::vector<int> sizes, mults;
  std::vector<CMat> central;
  bool ok = false;
  double residual = 0;  // worst distance of a rounded quantity from an integer
  std::string error;

  int center_dim() const { return static_cast<int>(sizes.size()); }
};

BlockData block_decompose(const std::vector<CMat>& basis, uint64_t seed);

struct InclusionData {
  std::vector<std::vector<int>> lambda;  // rows: blocks of the subalgebra
  double residual = 0;
};

// Multiplicities of the blocks of sub inside the blocks of sup, both represented on the same space.
InclusionData inclusion_matrix(const BlockData& sub, const BlockData& sup);

// True when b is obtained from a by permuting rows and columns, carrying row and column sizes along.
bool same_up_to_permutation(const std::vector<std::vector<int>>& a, const std::vector<int>& a_rows,
                            const std::vector<int>& a_cols, const std::vector<std::vector<int>>& b,
                            const std::vector<int>& b_rows, const std::vector<int>& b_cols);

std::vector<int> sorted(std::vector<int> v);

}  // namespace kac
