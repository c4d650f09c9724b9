#include "kac/qspace.hpp"

#include <algorithm>

namespace kac {

namespace {

QGeometry finish(QGeometry g) {
  g.amb_lo = g.x_lo;
  g.amb_hi = g.x_hi;
  for (int s : g.slots) {
    g.amb_lo = std::min(g.amb_lo, s);
    g.amb_hi = std::max(g.amb_hi, s);
  }
  return g;
}

}  // namespace

QGeometry q_geometry(int m, int level) {
  if (m < 2 || level < 1) throw std::invalid_argument("q_geometry needs m >= 2 and level >= 1");
  QGeometry g;
  g.m = m;
  g.level = level;
  g.k = (level % 2 == 0) ? level / 2 : (level + 1) / 2;
  bool odd = m % 2 != 0;
  g.x_lo = odd ? 1 : 0;
  g.x_hi = odd ? m * level - 1 : m * level - 2;
  for (int i = 1; i <= g.k; ++i) g.slots.push_back(m * (2 * i - 1) - (odd ? 0 : 1));
  return finish(g);
}

QGeometry qtilde_geometry(int m, int level) {
  if (m < 2 || level < 1) throw std::invalid_argument("qtilde_geometry needs m >= 2 and level >= 1");
  QGeometry g;
  g.m = m;
  g.level = level;
  if (level % 2 == 0) {
    g.k = level / 2;
    g.x_lo = m;
    g.x_hi = (2 * g.k + 1) * m - 2;
    for (int i = 1; i <= g.k; ++i) g.slots.push_back(2 * i * m - 1);
  } else {
    g.k = (level + 1) / 2;
    g.x_lo = 0;
    g.x_hi = (2 * g.k - 1) * m - 2;
    for (int i = 0; i < g.k; ++i) g.slots.push_back(2 * i * m - 1);
  }
  return finish(g);
}

QGeometry q12_geometry(int m) {
  QGeometry g;
  g.m = m;
  g.level = 2;
  g.k = 1;
  if (m % 2 != 0) {
    g.x_lo = m + 1;
    g.x_hi = 2 * m - 1;
    g.slots = {m};
  } else {
    g.x_lo = m;
    g.x_hi = 2 * m - 2;
    g.slots = {m - 1};
  }
  return finish(g);
}

QGeometry s_geometry() {
  QGeometry g;
  g.k = 1;
  g.x_lo = 0;
  g.x_hi = 2;
  g.slots = {1};
  return finish(g);
}

size_t ambient_dim(const QGeometry& g, int n) {
  size_t d = 1;
  for (int i = 0; i < g.amb_length(); ++i) d *= static_cast<size_t>(n);
  return d;
}

template <class F>
std::vector<SVec<F>> slot_constraints(const Chain<F>& amb, const QGeometry& g, const std::vector<int>& which) {
  const auto& H = amb.pair().H;
  std::vector<SVec<F>> out;
  for (int x : which) out.push_back(amb.slot_embed(to_sparse(sweedler_delta_k(H, H.e(x), g.k - 1)), g.slots));
  return out;
}

template <class F>
QSpace<F> solve_qspace(std::shared_ptr<const HopfPair<F>> hp, const QGeometry& g, Exec exec) {
  QSpace<F> q;
  q.geo = g;
  q.X = std::make_shared<Chain<F>>(hp, g.x_lo, g.x_hi);
  q.amb = std::make_shared<Chain<F>>(hp, g.amb_lo, g.amb_hi);
  std::vector<SVec<F>> within(q.X->dim());
  for (uint32_t I = 0; I < q.X->dim(); ++I) within[I] = q.amb->embed_from(*q.X, unit_vec<F>(I));
  auto cons = slot_constraints(*q.amb, g, generating_set(hp->H));
  q.space = {q.X->dim(), commutant_coefficients(*q.amb, cons, within, exec)};
  std::vector<int> all(hp->H.n);
  for (int i = 0; i < hp->H.n; ++i) all[i] = i;
  std::vector<SVec<F>> emb;
  for (const auto& v : q.space.basis) emb.push_back(q.amb->embed_from(*q.X, v));
  q.residual = commutation_residual(*q.amb, emb, slot_constraints(*q.amb, g, all));
  return q;
}

template <class F>
AdjointIntegral<F>::AdjointIntegral(std::shared_ptr<const HopfPair<F>> hp, const QGeometry& g) : g_(g) {
  X_ = std::make_shared<Chain<F>>(hp, g.x_lo, g.x_hi);
  amb_ = std::make_shared<Chain<F>>(hp, g.amb_lo, g.amb_hi);
  contract_ = g.amb_lo != g.x_lo || g.amb_hi != g.x_hi;
  const auto& H = hp->H;
  auto dh = to_sparse(H.comul(H.h));
  uint32_t n = H.n;
  for (const auto& e : dh) {
    auto a = H.e(e.first / n), b = H.antipode(H.e(e.first % n));
    auto L = amb_->slot_embed(to_sparse(sweedler_delta_k(H, a, g.k - 1)), g.slots);
    auto R = amb_->slot_embed(to_sparse(sweedler_delta_k(H, b, g.k - 1)), g.slots);
    terms_.emplace_back(scaled(L, e.second), R);
  }
}

template <class F>
SVec<F> AdjointIntegral<F>::operator()(const SVec<F>& X) const {
  SVec<F> Y = amb_->embed_from(*X_, X);
  SVec<F> acc;
  for (const auto& [L, R] : terms_) acc = axpy(acc, F(1), amb_->mul(amb_->mul(L, Y), R));
  return contract_ ? amb_->contract_to(*X_, acc) : acc;
}

template <class F>
Subspace<F> adjoint_integral_image(const AdjointIntegral<F>& P, Exec exec) {
  size_t d = P.x_chain().dim();
  std::vector<SVec<F>> imgs(d);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long I = 0; I < static_cast<long>(d); ++I) imgs[I] = P(unit_vec<F>(static_cast<uint32_t>(I)));
  } else {
    for (size_t I = 0; I < d; ++I) imgs[I] = P(unit_vec<F>(static_cast<uint32_t>(I)));
  }
  return span_of(imgs, d);
}

template <class F>
SVec<F> embed_qtilde(const Chain<F>& from, const Chain<F>& to, int m, int k, const SVec<F>& X) {
  int shift = (k % 2 != 0) ? 2 * m : 0;
  std::vector<int> slots;
  for (int p = from.lo(); p <= from.hi(); ++p) slots.push_back(p + shift);
  return to.slot_embed(X, slots);
}

template <class F>
std::vector<SVec<F>> nu_elements(const HopfPair<F>& hp) {
  const auto& D = hp.D;
  const int n = D.n;
  Chain<F> c(std::make_shared<HopfPair<F>>(hp), 0, 2);
  std::vector<SVec<F>> out(n * n);
  std::vector<SVec<F>> d3(n);
  for (int f = 0; f < n; ++f) d3[f] = to_sparse(sweedler_delta_k(D, D.e(f), 2));
  uint32_t n2 = n * n;
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      SVec<F> acc;
      for (const auto& fe : d3[f]) {
        int a = fe.first / n2, b = (fe.first / n) % n, cc = fe.first % n;
        for (const auto& ge : d3[g]) {
          int p = ge.first / n2, q = (ge.first / n) % n, r = ge.first % n;
          F w = fe.second * ge.second;
          auto s0 = D.mul(D.mul(D.e(a), D.antipode(D.e(r))), D.antipode(D.e(cc)));
          auto s1 = hp.fourier_inv * D.mul(D.e(b), D.e(q));
          auto s2 = D.antipode(D.e(p));
          acc = axpy(acc, w, c.pure({s0, s1, s2}));
        }
      }
      out[g * n + f] = std::move(acc);
    }
  return out;
}

template <class F>
std::vector<SVec<F>> q2_parametrized(const HopfPair<F>& hp, int m) {
  auto g = q_geometry(m, 2);
  int t = g.slots[0] - 1;
  int left = t - g.x_lo, right = g.x_hi - (t + 2);
  uint32_t n = hp.H.n;
  uint32_t nl = 1, nr = 1;
  for (int i = 0; i < left; ++i) nl *= n;
  for (int i = 0; i < right; ++i) nr *= n;
  auto nus = nu_elements(hp);
  std::vector<SVec<F>> out;
  for (uint32_t L = 0; L < nl; ++L)
    for (const auto& v : nus)
      for (uint32_t R = 0; R < nr; ++R) {
        SVec<F> u;
        for (const auto& e : v) u.emplace_back((L * n * n * n + e.first) * nr + R, e.second);
        out.push_back(std::move(u));
      }
  return out;
}

template <class F>
std::vector<SVec<F>> chain_generators(const Chain<F>& c, int a, int b) {
  std::vector<SVec<F>> out;
  for (int q = a; q <= b; ++q)
    for (int x : generating_set(c.slot(q))) out.push_back(c.slot_embed(unit_vec<F>(x), {q}));
  return out;
}

template <class F>
Subspace<F> subchain_span(const Chain<F>& c, int a, int b) {
  Chain<F> sub(c.pair_ptr(), a, b);
  Subspace<F> s{c.dim(), {}};
  for (uint32_t J = 0; J < sub.dim(); ++J) s.basis.push_back(c.embed_from(sub, unit_vec<F>(J)));
  return s;
}

#define KAC_QSPACE_INSTANTIATE(F)                                                                      \
  template std::vector<SVec<F>> slot_constraints(const Chain<F>&, const QGeometry&, const std::vector<int>&); \
  template QSpace<F> solve_qspace(std::shared_ptr<const HopfPair<F>>, const QGeometry&, Exec);         \
  template class AdjointIntegral<F>;                                                                   \
  template Subspace<F> adjoint_integral_image(const AdjointIntegral<F>&, Exec);                        \
  template SVec<F> embed_qtilde(const Chain<F>&, const Chain<F>&, int, int, const SVec<F>&);           \
  template std::vector<SVec<F>> nu_elements(const HopfPair<F>&);                                       \
  template std::vector<SVec<F>> q2_parametrized(const HopfPair<F>&, int);                              \
  template Subspace<F> subchain_span(const Chain<F>&, int, int);                                      \
  template std::vector<SVec<F>> chain_generators(const Chain<F>&, int, int);

KAC_QSPACE_INSTANTIATE(Cyclo)
KAC_QSPACE_INSTANTIATE(cplx)

}  // namespace kac
