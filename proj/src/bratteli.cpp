#include "kac/bratteli.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <tuple>

#include <Eigen/Eigenvalues>

namespace kac {

namespace {

double round_err(double x) { return std::abs(x - std::round(x)); }

}  // namespace

BlockData block_decompose(const std::vector<CMat>& basis, uint64_t seed) {
  BlockData out;
  const long K = static_cast<long>(basis.size());
  if (K == 0) {
    out.error = "empty basis";
    return out;
  }
  const long N = basis[0].rows(), N2 = N * N;
  CMat M1(K, N2), M2(K, N2);
  for (long i = 0; i < K; ++i) {
    M1.row(i) = Eigen::Map<const Eigen::RowVectorXcd>(basis[i].data(), N2);
    CMat t = basis[i].transpose();
    M2.row(i) = Eigen::Map<const Eigen::RowVectorXcd>(t.data(), N2);
  }
  CMat G = M1 * M2.transpose();
  Eigen::FullPivLU<CMat> lu(G);
  lu.setThreshold(1e-9);
  if (lu.rank() != K) {
    out.error = "trace form is degenerate: representation not faithful or basis dependent";
    return out;
  }
  CMat Ud = lu.inverse().transpose() * M1;  // row j: dual basis element a^j
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  CMat Y = CMat::Zero(N, N);
  for (long i = 0; i < K; ++i) Y += std::complex<double>(nd(rng), nd(rng)) * basis[i];
  CMat c = CMat::Zero(N, N), z = CMat::Zero(N, N);
  for (long j = 0; j < K; ++j) {
    CMat d(N, N);
    for (long r = 0; r < N; ++r)
      for (long s = 0; s < N; ++s) d(r, s) = Ud(j, s * N + r);
    c.noalias() += basis[j] * d;
    z.noalias() += basis[j] * Y * d;
  }
  Eigen::ComplexEigenSolver<CMat> es(z);
  if (es.info() != Eigen::Success) {
    out.error = "eigen decomposition failed";
    return out;
  }
  const auto& ev = es.eigenvalues();
  CMat V = es.eigenvectors();
  CMat Vinv = V.inverse();
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<int> cluster(N, -1);
  std::vector<std::complex<double>> centres;
  for (long i = 0; i < N; ++i) {
    for (size_t k = 0; k < centres.size(); ++k)
      if (std::abs(ev[i] - centres[k]) <= 1e-6 * scale) {
        cluster[i] = static_cast<int>(k);
        break;
      }
    if (cluster[i] < 0) {
      cluster[i] = static_cast<int>(centres.size());
      centres.push_back(ev[i]);
    }
  }
  struct Block {
    int d, mu;
    CMat P;
  };
  std::vector<Block> blocks;
  double worst = 0;
  long total = 0;
  for (size_t k = 0; k < centres.size(); ++k) {
    CMat P = CMat::Zero(N, N);
    for (long i = 0; i < N; ++i)
      if (cluster[i] == static_cast<int>(k)) P.noalias() += V.col(i) * Vinv.row(i);
    double r = P.trace().real();
    double ck = (c * P).trace().real() / r;
    double d = std::sqrt(r * ck), mu = std::sqrt(r / ck);
    worst = std::max({worst, round_err(r), round_err(d), round_err(mu), (P * P - P).cwiseAbs().maxCoeff()});
    blocks.push_back({static_cast<int>(std::lround(d)), static_cast<int>(std::lround(mu)), std::move(P)});
    total += std::lround(d) * std::lround(d);
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& a, const Block& b) { return std::tie(a.d, a.mu) < std::tie(b.d, b.mu); });
  for (auto& b : blocks) {
    out.sizes.push_back(b.d);
    out.mults.push_back(b.mu);
    out.central.push_back(std::move(b.P));
  }
  out.residual = worst;
  out.ok = worst <= 1e-6 && total == K;
  if (total != K) out.error = "block sizes do not account for the dimension";
  return out;
}

InclusionData inclusion_matrix(const BlockData& sub, const BlockData& sup) {
  InclusionData out;
  for (size_t p = 0; p < sub.sizes.size(); ++p) {
    std::vector<int> row;
    for (size_t q = 0; q < sup.sizes.size(); ++q) {
      double v = (sub.central[p] * sup.central[q]).trace().real() / (sub.sizes[p] * sup.mults[q]);
      out.residual = std::max(out.residual, round_err(v));
      row.push_back(static_cast<int>(std::lround(v)));
    }
    out.lambda.push_back(std::move(row));
  }
  return out;
}

bool same_up_to_permutation(const std::vector<std::vector<int>>& a, const std::vector<int>& a_rows,
                            const std::vector<int>& a_cols, const std::vector<std::vector<int>>& b,
                            const std::vector<int>& b_rows, const std::vector<int>& b_cols) {
  if (a.size() != b.size() || a_cols.size() != b_cols.size()) return false;
  if (sorted(a_rows) != sorted(b_rows) || sorted(a_cols) != sorted(b_cols)) return false;
  const size_t R = a.size(), C = a_cols.size();
  auto columns = [&](const std::vector<std::vector<int>>& m, const std::vector<int>& cols,
                     const std::vector<size_t>& order) {
    std::vector<std::vector<int>> cs(C);
    for (size_t j = 0; j < C; ++j) {
      cs[j].push_back(cols[j]);
      for (size_t i : order) cs[j].push_back(m[i][j]);
    }
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  std::vector<size_t> ib(R);
  std::iota(ib.begin(), ib.end(), 0);
  auto target = columns(b, b_cols, ib);
  std::vector<size_t> perm(R);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool rows_ok = true;
    for (size_t i = 0; i < R && rows_ok; ++i) rows_ok = a_rows[perm[i]] == b_rows[i];
    if (rows_ok && columns(a, a_cols, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace kac
