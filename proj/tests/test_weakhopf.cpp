#include <gtest/gtest.h>

#include "kac/weakhopf.hpp"

using namespace kac;

namespace {

auto pairZ(const std::string& name) { return make_pair(builtin_algebra(name)); }

// C[x]/(x^2): its regular trace form is degenerate.
class DualNumbers : public FiniteAlgebra<Cyclo> {
 public:
  size_t dim() const override { return 2; }
  SVec<Cyclo> mul(const SVec<Cyclo>& a, const SVec<Cyclo>& b) const override {
    SVec<Cyclo> acc;
    for (const auto& x : a)
      for (const auto& y : b)
        if (x.first + y.first < 2) acc.emplace_back(x.first + y.first, x.second * y.second);
    return compress(std::move(acc));
  }
  SVec<Cyclo> unit() const override { return unit_vec<Cyclo>(0); }
  SVec<Cyclo> star(const SVec<Cyclo>& a) const override { return conj_vec(a); }
  Cyclo trace(const SVec<Cyclo>& a) const override { return sget(a, 0); }
};

// Overrides one structure map of a weak Hopf algebra.
class Tampered : public WeakHopfAlgebra<Cyclo> {
 public:
  explicit Tampered(const WeakHopfAlgebra<Cyclo>& W) : W_(W) {
    for (uint32_t x = 0; x < W.dim(); ++x) {
      S_.push_back(W.antipodeb(x));
      C_.push_back(W.comulb(x));
    }
  }
  size_t dim() const override { return W_.dim(); }
  const SVec<Cyclo>& mulb(uint32_t i, uint32_t j) const override { return W_.mulb(i, j); }
  const SVec<Cyclo>& comulb(uint32_t i) const override { return C_[i]; }
  const SVec<Cyclo>& antipodeb(uint32_t i) const override { return S_[i]; }
  const SVec<Cyclo>& starb(uint32_t i) const override { return W_.starb(i); }
  const SVec<Cyclo>& unit() const override { return W_.unit(); }
  const Vec<Cyclo>& counit() const override { return W_.counit(); }
  std::vector<SVec<Cyclo>> S_, C_;

 private:
  const WeakHopfAlgebra<Cyclo>& W_;
};

}  // namespace

TEST(Separability, GroupAlgebraZ2) {
  auto hp = pairZ("group:Z2");
  Chain<Cyclo> A(hp, 1, 1);
  auto s = separability_element(A);
  EXPECT_TRUE(s.checks.all_pass()) << s.checks.failures();
  // e = (1/2)(e (x) e + g (x) g)
  ASSERT_EQ(s.terms.size(), 2u);
  for (uint32_t i = 0; i < 2; ++i) {
    EXPECT_EQ(s.terms[i].first, unit_vec<Cyclo>(i));
    EXPECT_EQ(s.terms[i].second, (SVec<Cyclo>{{i, Cyclo(1, 2)}}));
  }
}

TEST(Separability, ChainOfLengthTwo) {
  auto hp = pairZ("group:S3");
  Chain<Cyclo> A(hp, 1, 2);
  auto s = separability_element(A);
  EXPECT_TRUE(s.checks.all_pass()) << s.checks.failures();
}

TEST(Separability, DegenerateFormThrows) {
  EXPECT_THROW(separability_element(DualNumbers()), DegenerateTrace);
}

class Omega : public ::testing::TestWithParam<std::tuple<std::string, int>> {};

TEST_P(Omega, ScalarAndUnit) {
  auto [name, m] = GetParam();
  auto hp = pairZ(name);
  auto o = omega_elements(hp, m);
  EXPECT_TRUE(o.checks.all_pass()) << o.checks.failures();
  long nm = 1;
  for (int i = 0; i < m - 2; ++i) nm *= hp->H.n;
  EXPECT_EQ(o.scale, Cyclo(nm));
}

INSTANTIATE_TEST_SUITE_P(Cases, Omega,
                         ::testing::Combine(::testing::Values("group:Z2", "group:Z3"), ::testing::Values(3, 4)));

TEST(KacAsWeak, StarQ2PassesWithTrivialUnitComultiplication) {
  for (const char* name : {"group:Z3", "group:S3", "fn:S3"}) {
    auto q = star_q2_structure(pairZ(name));
    KacAsWeak<Cyclo> W(q.K);
    auto r = verify_weak_hopf_axioms(W);
    EXPECT_TRUE(r.all_pass()) << name << ": " << r.failures();
    auto one = W.unit();
    SVec<Cyclo> oo;
    for (const auto& a : one)
      for (const auto& b : one) oo.emplace_back(a.first * W.dim() + b.first, a.second * b.second);
    EXPECT_EQ(W.comul(one), compress(oo));
    EXPECT_EQ(counit_solve(W), q.K.counit);
  }
}

class WeakKacExact : public ::testing::TestWithParam<std::tuple<std::string, int, size_t>> {};

TEST_P(WeakKacExact, FullSuite) {
  auto [name, m, dim] = GetParam();
  WeakKac<Cyclo> K(pairZ(name), m);
  EXPECT_EQ(K.dim(), dim);
  EXPECT_TRUE(K.counit_info().unique);
  EXPECT_TRUE(counit_factor_check(K));
  auto ax = verify_weak_hopf_axioms(K);
  EXPECT_TRUE(ax.all_pass()) << ax.failures();
  EXPECT_EQ(ax.find("associativity")->checked, static_cast<long>(dim * dim * dim));
  EXPECT_TRUE(ax.passed("trace_positive"));
  auto iso = psi_iso_check(K);
  EXPECT_TRUE(iso.all_pass()) << iso.failures();
  auto sp = special_comult_check(K);
  EXPECT_TRUE(sp.all_pass()) << sp.failures();
  EXPECT_TRUE(antipode_involutive(K));
}

INSTANTIATE_TEST_SUITE_P(Cases, WeakKacExact,
                         ::testing::Values(std::make_tuple("group:Z2", 3, size_t{16}),
                                           std::make_tuple("group:Z2", 4, size_t{64}),
                                           std::make_tuple("group:Z3", 3, size_t{81}),
                                           std::make_tuple("fn:Z3", 3, size_t{81})));

TEST(WeakKac, SampledSuite) {
  WeakKac<Cyclo> K(pairZ("group:Z3"), 3);
  WeakCheckOptions opt;
  opt.exhaustive_limit = 0;
  opt.samples = 500;
  opt.seed = 11;
  auto ax = verify_weak_hopf_axioms(K, opt);
  EXPECT_TRUE(ax.all_pass()) << ax.failures();
  EXPECT_EQ(ax.find("associativity")->checked, 500);
  EXPECT_EQ(ax.find("weak_counit")->checked, 1000);
  EXPECT_EQ(ax.find("trace_positive"), nullptr);
}

TEST(WeakKac, FloatBackendAgrees) {
  auto hp = make_pair(to_float(builtin_algebra("group:Z3")));
  WeakKac<cplx> K(hp, 3);
  WeakCheckOptions opt;
  opt.exhaustive_limit = 0;
  auto ax = verify_weak_hopf_axioms(K, opt);
  EXPECT_TRUE(ax.all_pass()) << ax.failures();
  WeakKac<Cyclo> E(pairZ("group:Z3"), 3);
  for (uint32_t x = 0; x < K.dim(); ++x) EXPECT_NEAR(std::abs(K.counit()[x] - E.counit()[x].to_complex()), 0.0, 1e-9);
}

TEST(WeakKac, UnitComultiplicationIsSeparabilityElement) {
  WeakKac<Cyclo> K(pairZ("group:Z2"), 3);
  auto one = K.unit();
  SVec<Cyclo> oo;
  for (const auto& a : one)
    for (const auto& b : one) oo.emplace_back(a.first * K.dim() + b.first, a.second * b.second);
  EXPECT_NE(K.comul(one), compress(oo));
  EXPECT_TRUE(special_comult_check(K).passed("unit_comultiplication_separability"));
}

TEST(WeakKac, PsiNeedsOppositeProduct) {
  WeakKac<Cyclo> K(pairZ("group:Z3"), 3);
  const auto& amb = K.ambient();
  bool chain_order = true;
  for (uint32_t x = 0; x < K.dim() && chain_order; ++x)
    for (uint32_t y = 0; y < K.dim() && chain_order; ++y)
      if (K.psi(K.mulb(x, y)) != amb.mul(K.psi(unit_vec<Cyclo>(x)), K.psi(unit_vec<Cyclo>(y)))) chain_order = false;
  EXPECT_FALSE(chain_order);
}

TEST(WeakKac, TamperedAntipodeIsDetected) {
  WeakKac<Cyclo> K(pairZ("group:Z2"), 3);
  Tampered T(K);
  std::swap(T.S_[0], T.S_[1]);
  EXPECT_FALSE(antipode_involutive(T));
  auto r = verify_weak_hopf_axioms(T);
  EXPECT_FALSE(r.passed("antipode_target_map") && r.passed("antipode_source_map"));
  EXPECT_TRUE(r.passed("coassociativity"));
}

TEST(WeakKac, InconsistentCounitThrows) {
  WeakKac<Cyclo> K(pairZ("group:Z2"), 3);
  Tampered T(K);
  for (auto& c : T.C_) c.clear();
  EXPECT_THROW(counit_solve(T), CounitInconsistent);
}

TEST(WeakKac, RejectsSmallM) { EXPECT_THROW(WeakKac<Cyclo>(pairZ("group:Z2"), 2), std::invalid_argument); }

TEST(WeakKac, SerialMatchesParallel) {
  auto hp = pairZ("group:Z3");
  WeakKac<Cyclo> a(hp, 3, Exec::Serial), b(hp, 3, Exec::Parallel);
  for (uint32_t x = 0; x < a.dim(); ++x) {
    EXPECT_EQ(a.comulb(x), b.comulb(x));
    EXPECT_EQ(a.antipodeb(x), b.antipodeb(x));
    EXPECT_EQ(a.starb(x), b.starb(x));
  }
  EXPECT_EQ(a.counit(), b.counit());
}
