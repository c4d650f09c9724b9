#include <gtest/gtest.h>

#include "kac/basic.hpp"

using namespace kac;

namespace {

auto pairZ(const std::string& name) { return make_pair(builtin_algebra(name)); }

CMat unit_matrix(int n, int i, int j) {
  CMat m = CMat::Zero(n, n);
  m(i, j) = 1;
  return m;
}

// M_2 (x) 1_2 + C on C^5, basis of dimension 5.
std::vector<CMat> sample_algebra() {
  std::vector<CMat> b;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CMat m = CMat::Zero(5, 5);
      m(i, j) = 1;
      m(i + 2, j + 2) = 1;
      b.push_back(m);
    }
  b.push_back(unit_matrix(5, 4, 4));
  return b;
}

}  // namespace

TEST(Bratteli, KnownBlocks) {
  auto bd = block_decompose(sample_algebra(), 1);
  ASSERT_TRUE(bd.ok) << bd.error;
  EXPECT_EQ(bd.sizes, (std::vector<int>{1, 2}));
  EXPECT_EQ(bd.mults, (std::vector<int>{1, 2}));
}

TEST(Bratteli, InclusionOfDiagonal) {
  // Diagonal matrices of M_2 (x) 1_2 + C inside the same algebra.
  std::vector<CMat> diag;
  for (int i = 0; i < 2; ++i) {
    CMat m = CMat::Zero(5, 5);
    m(i, i) = 1;
    m(i + 2, i + 2) = 1;
    diag.push_back(m);
  }
  diag.push_back(unit_matrix(5, 4, 4));
  auto sub = block_decompose(diag, 2), sup = block_decompose(sample_algebra(), 3);
  ASSERT_TRUE(sub.ok && sup.ok);
  auto inc = inclusion_matrix(sub, sup);
  EXPECT_LT(inc.residual, 1e-9);
  std::vector<std::vector<int>> expect = {{1, 0}, {0, 1}, {0, 1}};
  EXPECT_TRUE(same_up_to_permutation(inc.lambda, sub.sizes, sup.sizes, expect, {1, 1, 1}, {1, 2}));
}

TEST(Bratteli, DependentBasisRejected) {
  auto b = sample_algebra();
  b.push_back(b[0] + b[4]);
  EXPECT_FALSE(block_decompose(b, 1).ok);
}

TEST(Bratteli, PermutationMatching) {
  std::vector<std::vector<int>> a = {{1, 0}, {1, 2}};
  std::vector<std::vector<int>> b = {{2, 1}, {0, 1}};
  EXPECT_TRUE(same_up_to_permutation(a, {1, 2}, {3, 5}, b, {2, 1}, {5, 3}));
  EXPECT_FALSE(same_up_to_permutation(a, {1, 2}, {3, 5}, b, {1, 2}, {5, 3}));
  std::vector<std::vector<int>> c = {{1, 1}, {1, 2}};
  EXPECT_FALSE(same_up_to_permutation(a, {1, 2}, {3, 5}, c, {1, 2}, {3, 5}));
}

class IdealReps : public ::testing::TestWithParam<std::tuple<std::string, int, int>> {};

TEST_P(IdealReps, FaithfulHomomorphism) {
  auto [name, lo, hi] = GetParam();
  auto hp = pairZ(name);
  Chain<Cyclo> c(hp, lo, hi);
  IdealRep<Cyclo> rho(c);
  std::vector<CMat> imgs;
  for (uint32_t I = 0; I < c.dim(); ++I) imgs.push_back(rho(unit_vec<Cyclo>(I)));
  for (uint32_t I = 0; I < c.dim(); I += 3)
    for (uint32_t J = 0; J < c.dim(); J += 5)
      EXPECT_LT((rho(c.mulb(I, J)) - imgs[I] * imgs[J]).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((rho(c.unit()) - CMat::Identity(rho.dim(), rho.dim())).cwiseAbs().maxCoeff(), 1e-12);
  auto bd = block_decompose(imgs, 5);
  EXPECT_TRUE(bd.ok) << bd.error;
}

INSTANTIATE_TEST_SUITE_P(Chains, IdealReps,
                         ::testing::Values(std::make_tuple("group:Z2", 1, 4), std::make_tuple("group:Z2", 0, 4),
                                           std::make_tuple("group:S3", 1, 2), std::make_tuple("fn:S3", 1, 3)));

TEST(Gns, TrivialInclusion) {
  auto hp = pairZ("group:Z2");
  Chain<Cyclo> c(hp, 1, 2);
  std::vector<SVec<Cyclo>> all;
  for (uint32_t I = 0; I < c.dim(); ++I) all.push_back(unit_vec<Cyclo>(I));
  GnsBasic<Cyclo> g(c, all, all);
  EXPECT_TRUE(mat_equal(g.jones(), Mat<Cyclo>::identity(4)));
  EXPECT_TRUE(g.relations().all_pass());
  EXPECT_EQ(g.measured_modulus(), Cyclo(1));
  EXPECT_TRUE(g.markov(Cyclo(1)).ok);
  EXPECT_FALSE(g.markov(Cyclo(2)).ok);
}

TEST(Gns, FirstTowerStepIsMarkov) {
  auto hp = pairZ("group:Z2");
  auto q1 = solve_qspace(hp, q_geometry(3, 1));
  auto q2 = solve_qspace(hp, q_geometry(3, 2));
  std::vector<SVec<Cyclo>> A;
  for (const auto& v : q1.space.basis) A.push_back(q2.X->embed_from(*q1.X, v));
  GnsBasic<Cyclo> g(*q2.X, A, q2.space.basis);
  auto rel = g.relations();
  EXPECT_TRUE(rel.all_pass()) << rel.failures();
  EXPECT_EQ(g.dim(), 128u);
  EXPECT_EQ(g.generated_dim(), 128u);
  EXPECT_TRUE(g.contains_b());
  EXPECT_TRUE(g.well_defined());
  EXPECT_EQ(g.measured_modulus(), Cyclo(8));
  EXPECT_TRUE(g.markov(Cyclo(8)).ok);
  EXPECT_FALSE(g.markov(Cyclo(4)).ok);
}

TEST(BasicConstruction, PsiTripleJonesProjection) {
  auto js = psi_triple_jones_search(pairZ("group:Z2"));
  EXPECT_EQ(js.passing_slots, (std::vector<int>{0}));
  EXPECT_EQ(js.failures.size(), 4u);
}

TEST(BasicConstruction, PsiTripleSubalgebras) {
  // H_[-1,-1] and H_[1,3] commute inside H_[-1,3], so the tensor product embeds.
  auto hp = pairZ("group:Z2");
  PsiEmbedding<Cyclo> psi(hp, 1, 0, 1);
  Chain<Cyclo> C(hp, -1, 3);
  const std::vector<int> slots = {-1, 1, 2, 3};
  const auto& T = psi.target();
  for (uint32_t I = 0; I < T.dim(); I += 3)
    for (uint32_t J = 0; J < T.dim(); J += 7)
      EXPECT_EQ(C.slot_embed(T.mul(unit_vec<Cyclo>(I), unit_vec<Cyclo>(J)), slots),
                C.mul(C.slot_embed(unit_vec<Cyclo>(I), slots), C.slot_embed(unit_vec<Cyclo>(J), slots)));
}

TEST(DepthTwo, Z2MThreeExact) {
  auto r = depth_two_check(pairZ("group:Z2"), 3, 16384, 11);
  EXPECT_EQ(r.dim_q1, 2u);
  EXPECT_EQ(r.dim_q2, 16u);
  EXPECT_EQ(r.dim_q3, 128u);
  EXPECT_EQ(r.dim_c, 128u);
  EXPECT_TRUE(r.ok()) << r.note;
  EXPECT_EQ(r.modulus, "8");
}

TEST(DepthTwo, BudgetEnforced) {
  EXPECT_THROW(depth_two_check(pairZ("group:Z2"), 3, 256, 1), DimensionBudgetExceeded);
}
