#include <gtest/gtest.h>

#include <random>

#include "kac/chain.hpp"

using namespace kac;

namespace {

auto pairZ(const std::string& name) { return make_pair(builtin_algebra(name)); }

SVec<Cyclo> basis(uint32_t i) { return {{i, Cyclo(1)}}; }

SVec<Cyclo> random_element(size_t dim, std::mt19937& rng, int terms = 3) {
  SVec<Cyclo> v;
  std::uniform_int_distribution<uint32_t> idx(0, static_cast<uint32_t>(dim - 1));
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < terms; ++t) v.emplace_back(idx(rng), Cyclo(c(rng)));
  return compress(v);
}

}  // namespace

TEST(DualAction, Examples) {
  auto H = builtin_algebra("group:Z2");
  auto act = dual_action(H);
  // p_0 . g_1 = 0, p_1 . g_1 = g_1
  EXPECT_TRUE(act.act.at(0, 1, 1).is_zero());
  EXPECT_EQ(act.act.at(1, 1, 1), Cyclo(1));
  auto D = dual(H);
  EXPECT_TRUE(verify_module_algebra(D, as_struct(H), act).all_pass());
  auto S3 = builtin_algebra("group:S3");
  EXPECT_TRUE(verify_module_algebra(dual(S3), as_struct(S3), dual_action(S3)).all_pass());
}

TEST(SmashProduct, MatchesShortChain) {
  for (std::string name : {"group:Z2", "group:S3"}) {
    auto hp = pairZ(name);
    auto act = dual_action(hp->H);
    auto S = smash_product(as_struct(hp->H), hp->D, act);
    Chain<Cyclo> c(hp, 1, 2);
    for (uint32_t i = 0; i < c.dim(); ++i)
      for (uint32_t j = 0; j < c.dim(); ++j) {
        SVec<Cyclo> s;
        auto [p, q] = S.mult.pair(i, j);
        for (auto* e = p; e != q; ++e) s.emplace_back(e->k, e->v);
        EXPECT_EQ(c.mulb(i, j), s);
      }
  }
}

TEST(SmashProduct, WorkedExample) {
  // H = C[Z_2], A = H*: (p_0 x| g_1)(p_1 x| g_0) = p_0 x| g_1.
  auto hp = pairZ("group:Z2");
  Chain<Cyclo> c(hp, 0, 1);
  EXPECT_EQ(c.mulb(c.index({0, 1}), c.index({1, 0})), basis(c.index({0, 1})));
}

TEST(Chain, EmptyAndDims) {
  auto hp = pairZ("group:Z2");
  Chain<Cyclo> e(hp, 1, 0);
  EXPECT_EQ(e.dim(), 1u);
  EXPECT_EQ(e.unit(), basis(0));
  Chain<Cyclo> c(hp, 0, 2);
  EXPECT_EQ(c.dim(), 8u);
}

class ChainProps : public ::testing::TestWithParam<std::tuple<std::string, int, int>> {};

TEST_P(ChainProps, AssociativeUnitalTracial) {
  auto [name, lo, hi] = GetParam();
  auto hp = pairZ(name);
  Chain<Cyclo> c(hp, lo, hi);
  std::mt19937 rng(7);
  auto one = c.unit();
  EXPECT_EQ(c.trace(one), Cyclo(1));
  for (int r = 0; r < 40; ++r) {
    auto a = random_element(c.dim(), rng), b = random_element(c.dim(), rng), d = random_element(c.dim(), rng);
    EXPECT_EQ(c.mul(c.mul(a, b), d), c.mul(a, c.mul(b, d)));
    EXPECT_EQ(c.mul(one, a), a);
    EXPECT_EQ(c.mul(a, one), a);
    EXPECT_EQ(c.trace(c.mul(a, b)), c.trace(c.mul(b, a)));
    EXPECT_EQ(c.star(c.star(a)), a);
    EXPECT_EQ(c.star(c.mul(a, b)), c.mul(c.star(b), c.star(a)));
    if (!a.empty()) {
      Cyclo pos = c.trace(c.mul(c.star(a), a));
      EXPECT_TRUE(pos.is_rational());
      EXPECT_GT(pos.rational(), 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Windows, ChainProps,
                         ::testing::Values(std::make_tuple("group:Z2", 1, 2), std::make_tuple("group:Z2", 0, 3),
                                           std::make_tuple("group:Z3", -1, 2), std::make_tuple("group:S3", 1, 3),
                                           std::make_tuple("fn:S3", 0, 2)));

TEST(Chain, TraceFormula) {
  // tr(x x| f) = phi(x) f(h) on H_[1,2].
  auto hp = pairZ("group:S3");
  Chain<Cyclo> c(hp, 1, 2);
  for (int x = 0; x < 6; ++x)
    for (int f = 0; f < 6; ++f) EXPECT_EQ(c.trace(basis(c.index({x, f}))), hp->H.phi[x] * hp->H.h[f]);
}

TEST(Chain, FlipIsAntiMultiplicative) {
  auto hp = pairZ("group:S3");
  Chain<Cyclo> src(hp, 1, 2), dst(hp, 2, 3);
  EXPECT_EQ(flip_prime(src, dst, src.unit()), dst.unit());
  // x x| f -> Sf x| Sx
  auto X = flip_prime(src, dst, basis(src.index({3, 4})));
  EXPECT_EQ(X, dst.pure({hp->D.S.col(4), hp->H.S.col(3)}));
  for (uint32_t i = 0; i < src.dim(); i += 5)
    for (uint32_t j = 0; j < src.dim(); j += 3)
      EXPECT_EQ(flip_prime(src, dst, src.mulb(i, j)),
                dst.mul(flip_prime(src, dst, basis(j)), flip_prime(src, dst, basis(i))));
  Chain<Cyclo> bad(hp, 1, 2);
  EXPECT_THROW(flip_prime(src, bad, src.unit()), ParityMismatch);
}

TEST(Chain, SlotEmbedCoproduct) {
  // Delta(x) placed in slots {1,3} of H_[1,3] equals (x_1 x| 1 x| 1)(1 x| 1 x| x_2).
  auto hp = pairZ("group:Z2");
  Chain<Cyclo> c(hp, 1, 3);
  EXPECT_EQ(c.slot_embed(basis(0), {}), c.unit());
  for (int x = 0; x < 2; ++x) {
    auto dx = to_sparse(hp->H.comul(hp->H.e(x)));
    SVec<Cyclo> rhs;
    for (auto& e : dx) {
      auto l = c.slot_embed(basis(e.first / 2), {1});
      auto r = c.slot_embed(basis(e.first % 2), {3});
      rhs = axpy(rhs, e.second, c.mul(l, r));
    }
    EXPECT_EQ(c.slot_embed(dx, {1, 3}), rhs);
  }
}

TEST(Chain, RegularTraceMatchesScaledTrace) {
  auto hp = pairZ("group:Z2");
  for (int k = 1; k <= 3; ++k) {
    Chain<Cyclo> c(hp, 1, k);
    Cyclo nk(1);
    for (int i = 0; i < k; ++i) nk *= Cyclo(2);
    EXPECT_EQ(regular_trace(c, c.unit()), nk);
    for (uint32_t i = 0; i < c.dim(); ++i) EXPECT_EQ(regular_trace(c, basis(i)), nk * c.trace(basis(i)));
  }
  Chain<Cyclo> h(hp, 1, 1);
  EXPECT_TRUE(regular_trace(h, basis(1)).is_zero());
}

class PsiProps : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(PsiProps, HomomorphismAndTrace) {
  auto [l, s, p] = GetParam();
  auto hp = pairZ("group:Z2");
  PsiEmbedding<Cyclo> psi(hp, l, s, p);
  const auto& src = psi.source();
  const auto& tgt = psi.target();
  EXPECT_EQ(psi(src.unit()), tgt.unit());
  std::mt19937 rng(3);
  for (int r = 0; r < 60; ++r) {
    uint32_t i = rng() % src.dim(), j = rng() % src.dim();
    EXPECT_EQ(psi(src.mulb(i, j)), tgt.mul(psi(basis(i)), psi(basis(j))));
    EXPECT_EQ(psi(src.star(basis(i))), tgt.star(psi(basis(i))));
    EXPECT_EQ(tgt.trace(psi(basis(i))), src.trace(basis(i)));
  }
}

INSTANTIATE_TEST_SUITE_P(Params, PsiProps,
                         ::testing::Values(std::make_tuple(1, 0, 1), std::make_tuple(1, 0, 2),
                                           std::make_tuple(2, 1, 1)));
