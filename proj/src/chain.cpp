#include "kac/chain.hpp"

#include <stdexcept>

namespace kac {

template <class F>
std::shared_ptr<const HopfPair<F>> make_pair(const KacAlgebra<F>& H) {
  auto hp = std::make_shared<HopfPair<F>>();
  hp->H = H;
  hp->D = dual(H);
  hp->fourier = fourier_matrix(H);
  hp->fourier_inv = inverse(hp->fourier);
  return hp;
}

namespace {

template <class F>
SVec<F> kron_sparse(const SVec<F>& a, const SVec<F>& b, size_t db) {
  SVec<F> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.emplace_back(static_cast<uint32_t>(x.first * db + y.first), x.second * y.second);
  return out;  // already sorted when a and b are
}

}  // namespace

template <class F>
Chain<F>::Chain(std::shared_ptr<const HopfPair<F>> hp, int lo, int hi)
    : hp_(std::move(hp)), lo_(lo), hi_(hi), L_(std::max(0, hi - lo + 1)), n_(hp_->H.n) {
  dims_.assign(L_ + 1, 1);
  for (int t = 1; t <= L_; ++t) dims_[t] = dims_[t - 1] * n_;
  if (dims_[L_] > (size_t(1) << 31)) throw std::length_error("chain too large");
  memo_.reset(new Memo[std::max(1, L_)]);
}

template <class F>
std::vector<int> Chain<F>::digits(uint32_t I) const {
  std::vector<int> d(L_);
  for (int t = L_ - 1; t >= 0; --t) {
    d[t] = static_cast<int>(I % n_);
    I /= n_;
  }
  return d;
}

template <class F>
uint32_t Chain<F>::index(const std::vector<int>& d) const {
  uint32_t I = 0;
  for (int x : d) I = I * n_ + x;
  return I;
}

template <class F>
const SVec<F>& Chain<F>::mul_level(int t, uint32_t I, uint32_t J) const {
  Memo& m = memo_[t];
  uint64_t key = static_cast<uint64_t>(I) * dims_[t + 1] + J;
  {
    std::shared_lock lk(m.mu);
    auto it = m.map.find(key);
    if (it != m.map.end()) return it->second;
  }
  SVec<F> v = compute_level(t, I, J);
  std::unique_lock lk(m.mu);
  auto [it, ins] = m.map.emplace(key, std::move(v));
  return it->second;
}

template <class F>
SVec<F> Chain<F>::compute_level(int t, uint32_t I, uint32_t J) const {
  const auto& K = slot(lo_ + t);
  if (t == 0) {
    SVec<F> out;
    auto [p, q] = K.mult.pair(I, J);
    for (auto* e = p; e != q; ++e) out.emplace_back(e->k, e->v);
    return out;
  }
  const auto& P = slot(lo_ + t - 1);
  uint32_t n = n_;
  uint32_t x = I % n, Ip = I / n, y = J % n, b = (J / n) % n, Jpp = J / (n * n);
  SVec<F> acc;
  auto [c0, c1] = K.comult.row(x);
  auto [a0, a1] = P.comult.row(b);
  for (auto* e1 = c0; e1 != c1; ++e1) {
    auto [m0, m1] = K.mult.pair(e1->k, y);
    if (m0 == m1) continue;
    for (auto* e2 = a0; e2 != a1; ++e2) {
      if (e2->k != e1->j) continue;
      const SVec<F>& sub = mul_level(t - 1, Ip, Jpp * n + e2->j);
      F w = e1->v * e2->v;
      for (auto* z = m0; z != m1; ++z) {
        F wz = w * z->v;
        for (const auto& s : sub) acc.emplace_back(s.first * n + z->k, wz * s.second);
      }
    }
  }
  return compress(std::move(acc));
}

template <class F>
SVec<F> Chain<F>::mul(const SVec<F>& a, const SVec<F>& b) const {
  if (L_ == 0) {
    F s(0);
    if (!a.empty() && !b.empty()) s = a[0].second * b[0].second;
    if (Scalar<F>::zero(s)) return {};
    return {{0, s}};
  }
  SVec<F> acc;
  for (const auto& x : a)
    for (const auto& y : b) {
      const SVec<F>& r = mulb(x.first, y.first);
      if (r.empty()) continue;
      F w = x.second * y.second;
      for (const auto& e : r) acc.emplace_back(e.first, w * e.second);
    }
  return compress(std::move(acc));
}

template <class F>
SVec<F> Chain<F>::unit() const {
  SVec<F> u = {{0, F(1)}};
  for (int p = lo_; p <= hi_; ++p) u = kron_sparse(u, to_sparse(slot(p).unit), n_);
  return u;
}

template <class F>
F Chain<F>::trace(const SVec<F>& a) const {
  F s(0);
  for (const auto& e : a) {
    F w = e.second;
    uint32_t I = e.first;
    for (int p = hi_; p >= lo_ && !Scalar<F>::zero(w); --p) {
      w *= hp_->slot_trace(p)[I % n_];
      I /= n_;
    }
    s += w;
  }
  return s;
}

template <class F>
const SVec<F>& Chain<F>::star_basis(uint32_t I) const {
  {
    std::shared_lock lk(star_memo_.mu);
    auto it = star_memo_.map.find(I);
    if (it != star_memo_.map.end()) return it->second;
  }
  SVec<F> v;
  if (L_ == 1) {
    v = to_sparse(slot(lo_).star.col(I));
  } else {
    // (A x| x)* = (1 x| x*)(A* x| 1), computed in this chain with the prefix chain for A*.
    std::call_once(prefix_once_, [this] { prefix_ = std::make_unique<Chain<F>>(hp_, lo_, hi_ - 1); });
    const auto& K = slot(hi_);
    uint32_t x = I % n_, Ip = I / n_;
    SVec<F> As = prefix_->star({{Ip, F(1)}});
    SVec<F> left = kron_sparse(prefix_->unit(), to_sparse(K.star.col(x)), n_);
    SVec<F> right = kron_sparse(As, to_sparse(K.unit), n_);
    v = mul(left, right);
  }
  std::unique_lock lk(star_memo_.mu);
  auto [it, ins] = star_memo_.map.emplace(I, std::move(v));
  return it->second;
}

template <class F>
SVec<F> Chain<F>::star(const SVec<F>& a) const {
  if (L_ == 0) return conj_vec(a);
  SVec<F> acc;
  for (const auto& e : a) {
    F c = Scalar<F>::conj(e.second);
    for (const auto& s : star_basis(e.first)) acc.emplace_back(s.first, c * s.second);
  }
  return compress(std::move(acc));
}

template <class F>
SVec<F> Chain<F>::pure(const std::vector<Vec<F>>& parts) const {
  if (static_cast<int>(parts.size()) != L_) throw std::invalid_argument("pure tensor has wrong length");
  SVec<F> u = {{0, F(1)}};
  for (const auto& v : parts) u = kron_sparse(u, to_sparse(v), n_);
  return u;
}

template <class F>
SVec<F> Chain<F>::slot_embed(const SVec<F>& Y, const std::vector<int>& slots) const {
  std::vector<int> pos(L_, -1);
  for (size_t k = 0; k < slots.size(); ++k) {
    int t = slots[k] - lo_;
    if (t < 0 || t >= L_) throw std::out_of_range("slot outside chain");
    if (pos[t] >= 0) throw std::invalid_argument("slot listed twice");
    pos[t] = static_cast<int>(k);
  }
  std::vector<SVec<F>> units(L_);
  for (int t = 0; t < L_; ++t) units[t] = to_sparse(slot(lo_ + t).unit);
  size_t k = slots.size();
  SVec<F> acc;
  std::vector<int> dig(k);
  for (const auto& e : Y) {
    uint32_t r = e.first;
    for (size_t i = k; i-- > 0;) {
      dig[i] = static_cast<int>(r % n_);
      r /= n_;
    }
    SVec<F> u = {{0, e.second}};
    for (int t = 0; t < L_; ++t) {
      if (pos[t] >= 0)
        u = kron_sparse(u, SVec<F>{{static_cast<uint32_t>(dig[pos[t]]), F(1)}}, n_);
      else
        u = kron_sparse(u, units[t], n_);
    }
    acc.insert(acc.end(), u.begin(), u.end());
  }
  return compress(std::move(acc));
}

template <class F>
SVec<F> Chain<F>::embed_from(const Chain& sub, const SVec<F>& X) const {
  std::vector<int> slots;
  for (int p = sub.lo(); p <= sub.hi(); ++p) slots.push_back(p);
  return slot_embed(X, slots);
}

template <class F>
SVec<F> Chain<F>::contract_to(const Chain& sub, const SVec<F>& X) const {
  int a = sub.lo() - lo_, b = sub.hi() - lo_;
  if (sub.length() > 0 && (a < 0 || b >= L_)) throw std::out_of_range("sub-chain outside chain");
  SVec<F> acc;
  for (const auto& e : X) {
    auto d = digits(e.first);
    F w = e.second;
    uint32_t J = 0;
    for (int t = 0; t < L_; ++t) {
      if (sub.length() > 0 && t >= a && t <= b)
        J = J * n_ + d[t];
      else
        w *= hp_->slot_trace(lo_ + t)[d[t]];
    }
    if (!Scalar<F>::zero(w)) acc.emplace_back(J, w);
  }
  return compress(std::move(acc));
}

template <class F>
SVec<F> TensorAlgebra<F>::kron(const SVec<F>& x, const SVec<F>& y) const {
  return kron_sparse(x, y, b_->dim());
}

template <class F>
SVec<F> TensorAlgebra<F>::mul(const SVec<F>& x, const SVec<F>& y) const {
  size_t db = b_->dim();
  SVec<F> acc;
  for (const auto& u : x)
    for (const auto& v : y) {
      SVec<F> l = a_->mul({{static_cast<uint32_t>(u.first / db), F(1)}}, {{static_cast<uint32_t>(v.first / db), F(1)}});
      if (l.empty()) continue;
      SVec<F> r = b_->mul({{static_cast<uint32_t>(u.first % db), F(1)}}, {{static_cast<uint32_t>(v.first % db), F(1)}});
      F w = u.second * v.second;
      for (const auto& p : l)
        for (const auto& q : r) acc.emplace_back(static_cast<uint32_t>(p.first * db + q.first), w * p.second * q.second);
    }
  return compress(std::move(acc));
}

template <class F>
SVec<F> TensorAlgebra<F>::unit() const {
  return kron(a_->unit(), b_->unit());
}

template <class F>
SVec<F> TensorAlgebra<F>::star(const SVec<F>& x) const {
  size_t db = b_->dim();
  SVec<F> acc;
  for (const auto& u : x) {
    SVec<F> l = a_->star({{static_cast<uint32_t>(u.first / db), F(1)}});
    SVec<F> r = b_->star({{static_cast<uint32_t>(u.first % db), F(1)}});
    F c = Scalar<F>::conj(u.second);
    for (const auto& p : l)
      for (const auto& q : r) acc.emplace_back(static_cast<uint32_t>(p.first * db + q.first), c * p.second * q.second);
  }
  return compress(std::move(acc));
}

template <class F>
F TensorAlgebra<F>::trace(const SVec<F>& x) const {
  size_t db = b_->dim();
  F s(0);
  for (const auto& u : x)
    s += u.second * a_->trace({{static_cast<uint32_t>(u.first / db), F(1)}}) *
         b_->trace({{static_cast<uint32_t>(u.first % db), F(1)}});
  return s;
}

template <class F>
HopfAction<F> dual_action(const KacAlgebra<F>& H) {
  int n = H.n;
  HopfAction<F> a{SparseTensor3<F>(n, n, n)};
  for (const auto& e : H.comult.entries()) a.act.add(e.k, e.i, e.j, e.v);
  a.act.finalize();
  return a;
}

template <class F>
AxiomReport verify_module_algebra(const KacAlgebra<F>& K, const StructAlgebra<F>& A, const HopfAction<F>& act) {
  AxiomReport rep;
  int nk = K.n, na = A.mult.d1();
  auto apply = [&](const SVec<F>& x, const SVec<F>& a) {
    SVec<F> acc;
    for (const auto& u : x)
      for (const auto& v : a) {
        auto [p, q] = act.act.pair(u.first, v.first);
        for (auto* e = p; e != q; ++e) acc.emplace_back(e->k, u.second * v.second * e->v);
      }
    return compress(std::move(acc));
  };
  SVec<F> oneA = to_sparse(A.unit), oneK = to_sparse(K.unit);
  Defect<F> hom, unit, one, assoc;
  for (int x = 0; x < nk; ++x) {
    SVec<F> ex = unit_vec<F>(x);
    SVec<F> dx = tcomul(K.comult, ex);
    unit.svec(apply(ex, oneA), scaled(oneA, K.counit[x]));
    for (int a = 0; a < na; ++a) {
      SVec<F> ea = unit_vec<F>(a);
      for (int y = 0; y < nk; ++y)
        assoc.svec(apply(ex, apply(unit_vec<F>(y), ea)), apply(tmul(K.mult, ex, unit_vec<F>(y)), ea));
      for (int b = 0; b < na; ++b) {
        SVec<F> eb = unit_vec<F>(b);
        SVec<F> lhs = apply(ex, tmul(A.mult, ea, eb));
        SVec<F> rhs;
        for (const auto& d : dx) {
          SVec<F> l = apply(unit_vec<F>(d.first / nk), ea), r = apply(unit_vec<F>(d.first % nk), eb);
          rhs = axpy(rhs, d.second, tmul(A.mult, l, r));
        }
        hom.svec(lhs, rhs);
      }
    }
  }
  for (int a = 0; a < na; ++a) one.svec(apply(oneK, unit_vec<F>(a)), unit_vec<F>(a));
  rep.add("action_multiplicative", hom.ok, hom.worst, hom.count);
  rep.add("action_unit", unit.ok, unit.worst, unit.count);
  rep.add("unit_acts_trivially", one.ok, one.worst, one.count);
  rep.add("action_associative", assoc.ok, assoc.worst, assoc.count);
  return rep;
}

template <class F>
StructAlgebra<F> smash_product(const StructAlgebra<F>& A, const KacAlgebra<F>& K, const HopfAction<F>& act) {
  uint32_t na = A.mult.d1(), nk = K.n, N = na * nk;
  StructAlgebra<F> S{SparseTensor3<F>(N, N, N), {}};
  for (uint32_t a = 0; a < na; ++a)
    for (uint32_t x = 0; x < nk; ++x)
      for (uint32_t b = 0; b < na; ++b)
        for (uint32_t y = 0; y < nk; ++y) {
          auto [c0, c1] = K.comult.row(x);
          for (auto* c = c0; c != c1; ++c) {
            auto [p, q] = act.act.pair(c->j, b);
            auto [m0, m1] = K.mult.pair(c->k, y);
            for (auto* e = p; e != q; ++e) {
              auto [u0, u1] = A.mult.pair(a, e->k);
              for (auto* u = u0; u != u1; ++u)
                for (auto* m = m0; m != m1; ++m)
                  S.mult.add(a * nk + x, b * nk + y, u->k * nk + m->k, c->v * e->v * u->v * m->v);
            }
          }
        }
  S.mult.finalize();
  S.unit.assign(N, F(0));
  for (uint32_t a = 0; a < na; ++a)
    for (uint32_t x = 0; x < nk; ++x) S.unit[a * nk + x] = A.unit[a] * K.unit[x];
  return S;
}

template <class F>
F regular_trace(const FiniteAlgebra<F>& A, const SVec<F>& X) {
  F s(0);
  for (uint32_t i = 0; i < A.dim(); ++i) s += sget(A.mul(X, {{i, F(1)}}), i);
  return s;
}

template <class F>
SVec<F> flip_prime(const Chain<F>& src, const Chain<F>& dst, const SVec<F>& X) {
  if (src.length() != dst.length()) throw ParityMismatch("flip between chains of different length");
  if (src.length() > 0 && (dst.lo() - src.hi()) % 2 != 0)
    throw ParityMismatch("flip target must start with the parity of the source end");
  int L = src.length();
  uint32_t n = src.n();
  SVec<F> acc;
  for (const auto& e : X) {
    auto d = src.digits(e.first);
    SVec<F> u = {{0, e.second}};
    for (int t = L - 1; t >= 0; --t) {
      const auto& A = src.slot(src.lo() + t);
      u = kron_sparse(u, to_sparse(A.S.col(d[t])), n);
    }
    acc.insert(acc.end(), u.begin(), u.end());
  }
  return compress(std::move(acc));
}

template <class F>
PsiEmbedding<F>::PsiEmbedding(std::shared_ptr<const HopfPair<F>> hp, int l, int s, int p)
    : hp_(hp), l_(l), s_(s), p_(p) {
  if (l < 1 || p < 1 || s < 0) throw std::invalid_argument("psi embedding needs l, p >= 1 and s >= 0");
  src_ = std::make_shared<Chain<F>>(hp, -l, p + s);
  left_ = std::make_shared<Chain<F>>(hp, -l, -1);
  right_ = std::make_shared<Chain<F>>(hp, p, 3 * p + s);
  tgt_ = std::make_shared<TensorAlgebra<F>>(left_, right_);
}

template <class F>
SVec<F> PsiEmbedding<F>::operator()(const SVec<F>& X) const {
  const auto& H = hp_->H;
  uint32_t n = H.n;
  size_t dr = right_->dim();
  // Padding of slots p .. 2p-2 by units.
  SVec<F> pad = {{0, F(1)}};
  for (int q = p_; q <= 2 * p_ - 2; ++q) pad = kron_sparse(pad, to_sparse(hp_->slot(q).unit), n);
  SVec<F> acc;
  size_t tail = 1;
  for (int q = 0; q <= p_ + s_; ++q) tail *= n;
  for (const auto& e : X) {
    uint32_t I = e.first;
    uint32_t rest = static_cast<uint32_t>(I % tail);
    uint32_t lefti = static_cast<uint32_t>(I / tail);
    uint32_t x = lefti % n, lhead = lefti / n;
    auto [c0, c1] = H.comult.row(x);
    for (auto* c = c0; c != c1; ++c) {
      uint32_t L = lhead * n + c->j;
      for (const auto& pd : pad) {
        uint64_t R = (static_cast<uint64_t>(pd.first) * n + c->k) * tail + rest;
        acc.emplace_back(static_cast<uint32_t>(L * dr + R), e.second * c->v * pd.second);
      }
    }
  }
  return compress(std::move(acc));
}

template <class F>
SVec<F> PsiEmbedding<F>::closed_form_expectation(const SVec<F>& Z) const {
  const auto& H = hp_->H;
  uint32_t n = H.n;
  size_t dr = right_->dim();
  size_t tail = 1;
  for (int q = 0; q <= p_ + s_; ++q) tail *= n;
  // phi(S(e_a) e_b)
  std::vector<F> phiS(n * n, F(0));
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) phiS[a * n + b] = eval(H.phi, tmul(H.mult, to_sparse(H.S.col(a)), unit_vec<F>(b)));
  SVec<F> acc;
  for (const auto& e : Z) {
    uint32_t Li = static_cast<uint32_t>(e.first / dr);
    uint64_t Ri = e.first % dr;
    uint32_t rest = static_cast<uint32_t>(Ri % tail);
    uint32_t y = static_cast<uint32_t>((Ri / tail) % n);
    uint64_t padi = Ri / tail / n;
    F w = e.second;
    for (int q = 2 * p_ - 2; q >= p_; --q) {
      w *= hp_->slot_trace(q)[padi % n];
      padi /= n;
    }
    if (Scalar<F>::zero(w)) continue;
    uint32_t x = Li % n, lhead = Li / n;
    auto [c0, c1] = H.comult.row(x);
    for (auto* c = c0; c != c1; ++c) {
      F v = w * c->v * phiS[c->k * n + y];
      if (Scalar<F>::zero(v)) continue;
      acc.emplace_back(static_cast<uint32_t>((static_cast<uint64_t>(lhead) * n + c->j) * tail + rest), v);
    }
  }
  return compress(std::move(acc));
}

#define KAC_CHAIN_INSTANTIATE(F)                                                                              \
  template std::shared_ptr<const HopfPair<F>> make_pair(const KacAlgebra<F>&);                                \
  template class Chain<F>;                                                                                    \
  template class TensorAlgebra<F>;                                                                            \
  template class PsiEmbedding<F>;                                                                             \
  template HopfAction<F> dual_action(const KacAlgebra<F>&);                                                   \
  template AxiomReport verify_module_algebra(const KacAlgebra<F>&, const StructAlgebra<F>&,                   \
                                             const HopfAction<F>&);                                           \
  template StructAlgebra<F> smash_product(const StructAlgebra<F>&, const KacAlgebra<F>&, const HopfAction<F>&); \
  template F regular_trace(const FiniteAlgebra<F>&, const SVec<F>&);                                          \
  template SVec<F> flip_prime(const Chain<F>&, const Chain<F>&, const SVec<F>&);

KAC_CHAIN_INSTANTIATE(Cyclo)
KAC_CHAIN_INSTANTIATE(cplx)

}  // namespace kac
