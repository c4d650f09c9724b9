#include <gtest/gtest.h>

#include "kac/qspace.hpp"

using namespace kac;

namespace {

auto pairZ(const std::string& name) { return make_pair(builtin_algebra(name)); }

size_t ipow(size_t b, int e) {
  size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}


}  // namespace

TEST(QGeometry, Windows) {
  auto g = q_geometry(3, 3);
  EXPECT_EQ(g.x_lo, 1);
  EXPECT_EQ(g.x_hi, 8);
  EXPECT_EQ(g.slots, (std::vector<int>{3, 9}));
  EXPECT_EQ(g.amb_hi, 9);
  EXPECT_EQ(ambient_dim(g, 2), 512u);
  auto e = q_geometry(4, 3);
  EXPECT_EQ(e.x_hi, 10);
  EXPECT_EQ(e.slots, (std::vector<int>{3, 11}));
  EXPECT_EQ(ambient_dim(e, 2), 4096u);
  auto t = qtilde_geometry(3, 1);
  EXPECT_EQ(t.amb_lo, -1);
  EXPECT_EQ(t.x_hi, 1);
  auto t2 = qtilde_geometry(3, 2);
  EXPECT_EQ(t2.x_lo, 3);
  EXPECT_EQ(t2.x_hi, 7);
  EXPECT_EQ(t2.slots, (std::vector<int>{5}));
}

class QDims : public ::testing::TestWithParam<std::tuple<std::string, int>> {};

TEST_P(QDims, FirstTwoLevels) {
  auto [name, m] = GetParam();
  auto hp = pairZ(name);
  size_t n = hp->H.n;
  auto q1 = solve_qspace(hp, q_geometry(m, 1));
  EXPECT_EQ(q1.dim(), ipow(n, m - 2));
  EXPECT_TRUE(q1.residual.ok);
  auto q2 = solve_qspace(hp, q_geometry(m, 2));
  EXPECT_EQ(q2.dim(), ipow(n, 2 * (m - 1)));
  EXPECT_TRUE(q2.residual.ok);
  EXPECT_NE(q2.dim(), q1.dim() * q1.dim());
  EXPECT_TRUE(same_span(q2.space, span_of(q2_parametrized(*hp, m), q2.X->dim())));
}

INSTANTIATE_TEST_SUITE_P(Table, QDims,
                         ::testing::Values(std::make_tuple("group:Z2", 3), std::make_tuple("group:Z2", 4),
                                           std::make_tuple("group:Z3", 3), std::make_tuple("group:Z3", 4)));

TEST(QSpace, SerialMatchesParallel) {
  auto hp = pairZ("group:S3");
  auto a = solve_qspace(hp, q_geometry(3, 1), Exec::Serial);
  auto b = solve_qspace(hp, q_geometry(3, 1), Exec::Parallel);
  EXPECT_EQ(a.space.basis, b.space.basis);
  EXPECT_EQ(a.dim(), 6u);
}

TEST(AdjointIntegral, SerialMatchesParallel) {
  AdjointIntegral<Cyclo> P(pairZ("group:Z2"), q_geometry(3, 2));
  EXPECT_EQ(adjoint_integral_image(P, Exec::Serial).basis, adjoint_integral_image(P, Exec::Parallel).basis);
}

TEST(QSpace, FloatBackendAgrees) {
  auto hp = make_pair(to_float(builtin_algebra("group:Z3")));
  auto q = solve_qspace(hp, q_geometry(3, 2));
  EXPECT_EQ(q.dim(), 81u);
  EXPECT_TRUE(q.residual.ok);
}

class SSpace : public ::testing::TestWithParam<std::string> {};

TEST_P(SSpace, DimensionAndParametrization) {
  auto hp = pairZ(GetParam());
  size_t n = hp->H.n;
  auto s = solve_qspace(hp, s_geometry());
  EXPECT_EQ(s.dim(), n * n);
  auto nu = span_of(nu_elements(*hp), s.X->dim());
  EXPECT_EQ(nu.size(), n * n);
  EXPECT_TRUE(same_span(s.space, nu));
}

INSTANTIATE_TEST_SUITE_P(Algebras, SSpace, ::testing::Values("group:Z2", "group:Z3", "group:S3", "fn:S3"));

TEST(Commutants, FiniteWindows) {
  // In a finite window the commutant of H_[a,p] is H_[p+2,b] once restricted to the tail H_[p+1,b];
  // the full commutant is n times larger.
  auto hp = pairZ("group:Z2");
  int checked = 0;
  for (int a = -1; a <= 0; ++a)
    for (int b = a + 2; b - a + 1 <= 6; ++b) {
      Chain<Cyclo> c(hp, a, b);
      for (int p = a; p + 2 <= b; ++p) {
        auto gens = chain_generators(c, a, p);
        auto tail = commutant_basis(c, gens, subchain_span(c, p + 1, b).basis);
        EXPECT_TRUE(same_span(tail, subchain_span(c, p + 2, b))) << a << " " << p << " " << b;
        auto full = commutant_basis(c, gens);
        EXPECT_EQ(full.size(), ipow(2, b - p));
        if ((b - a + 1) % 2 == 0) {
          auto back = commutant_basis(c, full.basis);
          EXPECT_TRUE(same_span(back, subchain_span(c, a, p))) << a << " " << p << " " << b;
        }
        ++checked;
      }
    }
  EXPECT_EQ(checked, 20);
}

TEST(Commutants, DoubleCommutantNeedsFactor) {
  // H_[0,2] is not a factor and the double commutant of H_[0,0] overshoots.
  auto hp = pairZ("group:Z2");
  Chain<Cyclo> c(hp, 0, 2);
  auto com = commutant_basis(c, chain_generators(c, 0, 0));
  EXPECT_FALSE(same_span(commutant_basis(c, com.basis), subchain_span(c, 0, 0)));
}

class MatrixAlgebra : public ::testing::TestWithParam<std::tuple<std::string, int>> {};

TEST_P(MatrixAlgebra, EvenChainsHaveTrivialCenter) {
  auto [name, len] = GetParam();
  auto hp = pairZ(name);
  Chain<Cyclo> c(hp, 1, len);
  EXPECT_EQ(c.dim(), ipow(hp->H.n, len));
  auto z = commutant_basis(c, chain_generators(c, 1, len));
  EXPECT_EQ(z.size(), 1u);
  EXPECT_TRUE(contains_all(z, {c.unit()}));
}

INSTANTIATE_TEST_SUITE_P(Lengths, MatrixAlgebra,
                         ::testing::Values(std::make_tuple("group:Z2", 2), std::make_tuple("group:Z2", 4),
                                           std::make_tuple("group:Z2", 6), std::make_tuple("group:Z3", 2),
                                           std::make_tuple("group:Z3", 4), std::make_tuple("group:S3", 2)));

TEST(MatrixAlgebra, OddChainHasLargerCenter) {
  auto hp = pairZ("group:Z2");
  Chain<Cyclo> c(hp, 1, 3);
  EXPECT_GT(commutant_basis(c, chain_generators(c, 1, 3)).size(), 1u);
}

class AlphaFixed : public ::testing::TestWithParam<int> {};

TEST_P(AlphaFixed, ProjectionOntoQ) {
  auto hp = pairZ("group:Z2");
  auto g = q_geometry(3, GetParam());
  AdjointIntegral<Cyclo> P(hp, g);
  const auto& X = P.x_chain();
  EXPECT_EQ(P(X.unit()), X.unit());
  for (uint32_t I = 0; I < X.dim(); I += 3) {
    auto y = P(unit_vec<Cyclo>(I));
    EXPECT_EQ(P(y), y);
  }
  auto img = adjoint_integral_image(P);
  auto q = solve_qspace(hp, g);
  EXPECT_TRUE(same_span(img, q.space));
}

INSTANTIATE_TEST_SUITE_P(Levels, AlphaFixed, ::testing::Values(1, 2, 3));

TEST(QSpace, ThirdLevelDimension) {
  auto hp = pairZ("group:Z2");
  auto q3 = solve_qspace(hp, q_geometry(3, 3));
  EXPECT_TRUE(q3.residual.ok);
  EXPECT_EQ(q3.dim(), 128u);
}

class Q12 : public ::testing::TestWithParam<std::tuple<std::string, int>> {};

TEST_P(Q12, IsRightHalfSubchain) {
  auto [name, m] = GetParam();
  auto hp = pairZ(name);
  auto g = q12_geometry(m);
  auto q = solve_qspace(hp, g);
  EXPECT_EQ(q.dim(), ipow(hp->H.n, m - 2));
  EXPECT_TRUE(same_span(q.space, subchain_span(*q.X, g.x_lo + 1, g.x_hi)));
}

INSTANTIATE_TEST_SUITE_P(Cases, Q12,
                         ::testing::Values(std::make_tuple("group:Z2", 3), std::make_tuple("group:Z2", 4),
                                           std::make_tuple("group:Z3", 3), std::make_tuple("group:S3", 3)));

class QTilde : public ::testing::TestWithParam<int> {};

TEST_P(QTilde, FlipMatchesQ) {
  int m = GetParam();
  auto hp = pairZ("group:Z2");
  for (int level = 1; level <= 2; ++level) {
    auto t = solve_qspace(hp, qtilde_geometry(m, level));
    auto q = solve_qspace(hp, q_geometry(m, level));
    std::vector<SVec<Cyclo>> flipped;
    for (const auto& v : t.space.basis) flipped.push_back(flip_prime(*t.X, *q.X, v));
    EXPECT_TRUE(same_span(span_of(flipped, q.X->dim()), q.space)) << level;
  }
  auto t1 = solve_qspace(hp, qtilde_geometry(m, 1));
  auto t2 = solve_qspace(hp, qtilde_geometry(m, 2));
  std::vector<SVec<Cyclo>> img;
  for (const auto& v : t1.space.basis) img.push_back(embed_qtilde(*t1.X, *t2.X, m, 1, v));
  EXPECT_TRUE(contains_all(t2.space, img));
  EXPECT_EQ(embed_qtilde(*t1.X, *t2.X, m, 1, t1.X->unit()), t2.X->unit());
}

INSTANTIATE_TEST_SUITE_P(M, QTilde, ::testing::Values(3, 4));

class ConditionalExpectation : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(ConditionalExpectation, ClosedFormIsTraceProjection) {
  auto [l, s, p] = GetParam();
  auto hp = pairZ("group:Z2");
  PsiEmbedding<Cyclo> psi(hp, l, s, p);
  const auto& src = psi.source();
  std::vector<SVec<Cyclo>> img;
  for (uint32_t I = 0; I < src.dim(); ++I) img.push_back(psi(unit_vec<Cyclo>(I)));
  TraceExpectation<Cyclo> E(psi.target(), img);
  for (uint32_t Z = 0; Z < psi.target().dim(); ++Z) {
    auto c = E.coords(unit_vec<Cyclo>(Z));
    EXPECT_EQ(to_sparse(c), psi.closed_form_expectation(unit_vec<Cyclo>(Z))) << Z;
  }
}

INSTANTIATE_TEST_SUITE_P(Params, ConditionalExpectation,
                         ::testing::Values(std::make_tuple(1, 0, 1), std::make_tuple(1, 0, 2)));

TEST(TraceExpectation, BimoduleAndTracePreserving) {
  auto hp = pairZ("group:S3");
  Chain<Cyclo> c(hp, 1, 2);
  auto A = subchain_span(c, 1, 1);
  TraceExpectation<Cyclo> E(c, A.basis);
  for (uint32_t I = 0; I < c.dim(); I += 5) {
    auto x = unit_vec<Cyclo>(I);
    EXPECT_EQ(c.trace(E(x)), c.trace(x));
    for (const auto& a : A.basis) EXPECT_EQ(E(c.mul(a, x)), c.mul(a, E(x)));
  }
}
