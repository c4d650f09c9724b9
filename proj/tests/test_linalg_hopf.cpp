#include <gtest/gtest.h>

#include "kac/algebra_ops.hpp"
#include "kac/hopf.hpp"

using namespace kac;

TEST(Cyclo, ArithmeticInFields) {
  Cyclo z = Cyclo::zeta(3, 1);
  Cyclo s = Cyclo(1) + z + z * z;
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(z * z * z, Cyclo(1));
  EXPECT_EQ(z.conj(), z * z);
  Cyclo w = Cyclo(2) + Cyclo::zeta(5, 2);
  EXPECT_EQ(w * w.inverse(), Cyclo(1));
  EXPECT_EQ(Cyclo(3, 6), Cyclo(1, 2));
}

TEST(Cyclo, SquareRootsOfIntegers) {
  for (long n : {2L, 3L, 4L, 5L, 6L, 8L, 12L}) {
    Cyclo r = sqrt_integer_in_cyclotomic(n);
    EXPECT_EQ(r * r, Cyclo(n)) << n;
    EXPECT_GT(r.to_complex().real(), 0) << n;
    EXPECT_NEAR(r.to_complex().imag(), 0, 1e-12) << n;
  }
}

TEST(Cyclo, ParseRoundTrip) {
  Cyclo x = Cyclo(1, 3) + Cyclo(2) * Cyclo::zeta(8, 3);
  Cyclo y = Cyclo::parse(x.str(), 8);
  EXPECT_EQ(x, y);
}

TEST(Linalg, NullSpaceSmall) {
  Mat<Cyclo> A(2, 3);
  A(0, 0) = 1; A(0, 1) = 2; A(0, 2) = 3;
  A(1, 0) = 2; A(1, 1) = 4; A(1, 2) = 6;
  auto ns = null_space(A);
  ASSERT_EQ(ns.size(), 2u);
  for (auto& v : ns) {
    auto r = A * v;
    for (auto& x : r) EXPECT_TRUE(x.is_zero());
  }
  EXPECT_EQ(rank(A), 1u);
}

TEST(Linalg, InverseRoundTrip) {
  Mat<Cyclo> A(3, 3);
  A(0, 0) = 2; A(0, 1) = 1; A(1, 1) = Cyclo::zeta(4, 1); A(2, 0) = 1; A(2, 2) = 5;
  auto I = A * inverse(A);
  EXPECT_TRUE(mat_equal(I, Mat<Cyclo>::identity(3)));
}

TEST(Linalg, FloatRankTolerance) {
  Mat<cplx> A(2, 2);
  A(0, 0) = 1; A(0, 1) = 1; A(1, 0) = 1; A(1, 1) = 1.0 + 1e-14;
  EXPECT_EQ(rank(A), 1u);
}

TEST(Linalg, SolveUnique) {
  std::vector<SVec<Cyclo>> rows = {{{0, Cyclo(1)}, {1, Cyclo(1)}}, {{0, Cyclo(1)}, {1, Cyclo(-1)}}};
  auto x = solve_unique<Cyclo>(rows, {Cyclo(3), Cyclo(1)}, 2);
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x[0], Cyclo(2));
  EXPECT_EQ(x[1], Cyclo(1));
  auto y = solve_unique<Cyclo>({rows[0]}, {Cyclo(3)}, 2);
  EXPECT_TRUE(y.empty());
}

class Builtins : public ::testing::TestWithParam<std::string> {};

TEST_P(Builtins, KacAxiomsHold) {
  auto H = builtin_algebra(GetParam());
  auto rep = verify_kac_axioms(H);
  EXPECT_TRUE(rep.all_pass()) << rep.failures();
  auto Hf = to_float(H);
  EXPECT_TRUE(verify_kac_axioms(Hf).all_pass());
}

TEST_P(Builtins, IntegralsNormalized) {
  auto H = builtin_algebra(GetParam());
  EXPECT_EQ(H.eps(H.h), Cyclo(1));
  EXPECT_EQ(H.delta * H.delta, Cyclo(H.n));
  Cyclo ph(0);
  for (int i = 0; i < H.n; ++i) ph += H.phi[i] * H.h[i];
  EXPECT_EQ(ph, Cyclo(1, H.n));
}

TEST_P(Builtins, FourierSquaredIsAntipode) {
  auto H = builtin_algebra(GetParam());
  auto D = dual(H);
  auto FH = fourier_matrix(H);
  auto FD = fourier_matrix(D);
  EXPECT_TRUE(mat_equal(FD * FH, H.S));
  EXPECT_TRUE(mat_equal(FH * FD, D.S));
}

TEST_P(Builtins, Biduality) {
  auto H = builtin_algebra(GetParam());
  auto DD = dual(dual(H));
  EXPECT_TRUE(DD.mult == H.mult);
  EXPECT_TRUE(DD.comult == H.comult);
  EXPECT_TRUE(mat_equal(DD.S, H.S));
  EXPECT_TRUE(mat_equal(DD.star, H.star));
}

TEST_P(Builtins, WriteParseRoundTrip) {
  auto H = builtin_algebra(GetParam());
  auto G = parse_algebra(write_algebra(H));
  EXPECT_TRUE(G.mult == H.mult);
  EXPECT_TRUE(G.comult == H.comult);
  EXPECT_TRUE(mat_equal(G.S, H.S));
  EXPECT_EQ(G.h, H.h);
}

INSTANTIATE_TEST_SUITE_P(All, Builtins,
                         ::testing::Values("group:Z2", "group:Z3", "group:Z4", "group:Z2xZ2", "group:S3", "fn:Z3",
                                           "fn:S3"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (!isalnum(static_cast<unsigned char>(c))) c = '_';
                           return s;
                         });

TEST(Kac, ZeroAntipodeRejected) {
  auto H = builtin_algebra("group:Z3");
  H.S = Mat<Cyclo>(H.n, H.n);
  auto rep = verify_kac_axioms(H);
  EXPECT_FALSE(rep.passed("antipode"));
  EXPECT_FALSE(rep.all_pass());
}

TEST(Kac, BrokenAssociativityRejected) {
  auto H = builtin_algebra("group:Z3");
  SparseTensor3<Cyclo> m(3, 3, 3);
  for (auto& e : H.mult.entries())
    if (!(e.i == 1 && e.j == 1)) m.add(e.i, e.j, e.k, e.v);
  m.add(1, 1, 1, Cyclo(1));
  m.finalize();
  H.mult = m;
  EXPECT_FALSE(verify_kac_axioms(H).passed("associativity"));
}

TEST(Kac, InvalidGroupTableRejected) {
  std::vector<std::vector<int>> t = {{0, 1}, {1, 1}};
  EXPECT_THROW(validate_group_table(t), InvalidGroupTable);
  std::vector<std::vector<int>> nonassoc = {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
  EXPECT_THROW(validate_group_table(nonassoc), InvalidGroupTable);
}

TEST(Kac, DeltaKCounts) {
  auto H = builtin_algebra("fn:Z2");
  auto x = H.e(1);
  auto d2 = sweedler_delta_k(H, x, 2);
  ASSERT_EQ(d2.size(), 8u);
  auto d0 = sweedler_delta_k(H, x, 0);
  EXPECT_EQ(d0, x);
}

TEST(Kac, ParseRejectsBadAntipode) {
  auto H = builtin_algebra("group:Z3");
  std::string txt = write_algebra(H);
  auto p = txt.find("antipode");
  ASSERT_NE(p, std::string::npos);
  auto G = builtin_algebra("group:Z3");
  G.S = Mat<Cyclo>::identity(3);
  EXPECT_THROW(parse_algebra(write_algebra(G)), AxiomViolation);
}
