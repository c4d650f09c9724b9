#include "kac/double.hpp"

#include <map>
#include <tuple>

#include "kac/bratteli.hpp"
#include "kac/qspace.hpp"

#include "internal.hpp"

namespace kac {

using namespace internal;

template <class F>
KacAlgebra<F> drinfeld_double(const HopfPair<F>& hp) {
  const auto& H = hp.H;
  const auto& D = hp.D;
  const uint32_t n = H.n, N = n * n;
  auto E = [](int i) { return unit_vec<F>(i); };
  auto g3 = basis_legs(D, 3), x3 = basis_legs(H, 3), f2 = basis_legs(D, 2), x2 = basis_legs(H, 2);
  SparseTensor3<F> M(N, N, N), C(N, N, N);
  for (uint32_t f = 0; f < n; ++f)
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t g = 0; g < n; ++g)
        for (uint32_t y = 0; y < n; ++y) {
          SVec<F> acc;
          for (const auto& [gl, gw] : g3[g])
            for (const auto& [xl, xw] : x3[x]) {
              if (gl[0] != xl[0]) continue;
              F w = gw * xw * H.S(gl[2], xl[2]);
              if (Scalar<F>::zero(w)) continue;
              push(acc, w, kron(tmul(D.mult, E(f), E(gl[1])), tmul(H.mult, E(y), E(xl[1])), n));
            }
          add_row(M, f * n + x, g * n + y, compress(std::move(acc)));
        }
  M.finalize();
  for (uint32_t f = 0; f < n; ++f)
    for (uint32_t x = 0; x < n; ++x)
      for (const auto& [fl, fw] : f2[f])
        for (const auto& [xl, xw] : x2[x]) C.add(f * n + x, fl[1] * n + xl[1], fl[0] * n + xl[0], fw * xw);
  C.finalize();
  Mat<F> Sinv = inverse(D.S), S(N, N), st(N, N);
  Vec<F> unit(N), counit(N);
  for (uint32_t f = 0; f < n; ++f)
    for (uint32_t x = 0; x < n; ++x) {
      unit[f * n + x] = D.unit[f] * H.unit[x];
      counit[f * n + x] = D.counit[f] * H.counit[x];
      SVec<F> acc;
      for (const auto& [fl, fw] : g3[f])
        for (const auto& [xl, xw] : x3[x]) {
          if (fl[2] != xl[2]) continue;
          F w = fw * xw * H.S(fl[0], xl[0]);
          if (Scalar<F>::zero(w)) continue;
          push(acc, w, kron(mat_apply(Sinv, E(fl[1])), mat_apply(H.S, E(xl[1])), n));
        }
      for (const auto& e : compress(std::move(acc))) S(e.first, f * n + x) = e.second;
      SVec<F> a = kron(to_sparse(D.unit), star_apply(H.star, E(x)), n);
      SVec<F> b = kron(star_apply(D.star, E(f)), to_sparse(H.unit), n);
      for (const auto& e : tmul(M, a, b)) st(e.first, f * n + x) = e.second;
    }
  return make_kac<F>("D(" + H.name + ")", std::move(M), std::move(unit), std::move(C), std::move(counit),
                     std::move(S), std::move(st));
}

template <class F>
KacAlgebra<F> double_dual(const HopfPair<F>& hp) {
  const auto& H = hp.H;
  const auto& D = hp.D;
  const uint32_t n = H.n, N = n * n;
  const F dim = scalar_from_int<F>(n);  // delta^2
  auto E = [](int i) { return unit_vec<F>(i); };
  SparseTensor3<F> M(N, N, N), C(N, N, N);
  for (uint32_t f = 0; f < n; ++f)
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t g = 0; g < n; ++g)
        for (uint32_t y = 0; y < n; ++y)
          add_row(M, f * n + x, g * n + y, kron(tmul(D.mult, E(g), E(f)), tmul(H.mult, E(y), E(x)), n));
  M.finalize();
  auto p4 = legs(D, D.h, 4);
  auto h2 = legs(H, H.h, 2);
  auto f2 = basis_legs(D, 2), x2 = basis_legs(H, 2);
  Mat<F> S(N, N);
  for (uint32_t f = 0; f < n; ++f)
    for (uint32_t x = 0; x < n; ++x) {
      SVec<F> acc, sacc;
      for (const auto& [pl, pw] : p4) {
        for (const auto& [hl, hw] : h2) {
          // Delta: delta^2 phi_2(x_2) phi_4(Sh_2) (phi_1 f_2 S phi_3 x x_1) (x) (f_1 x h_1)
          F sh = H.S(pl[3], hl[1]);
          if (!Scalar<F>::zero(sh))
            for (const auto& [xl, xw] : x2[x]) {
              if (xl[1] != pl[1]) continue;
              for (const auto& [fl, fw] : f2[f]) {
                F w = dim * pw * hw * sh * xw * fw;
                SVec<F> a = tmul(D.mult, tmul(D.mult, E(pl[0]), E(fl[1])), mat_apply(D.S, E(pl[2])));
                SVec<F> l = kron(a, E(xl[0]), n), r = kron(E(fl[0]), E(hl[0]), n);
                push(acc, w, kron(l, r, N));
              }
            }
          // S: delta^2 phi_4(x) phi_2(h_2) phi_1 Sf S phi_3 x h_1
          if (static_cast<uint32_t>(pl[3]) == x && pl[1] == hl[1]) {
            SVec<F> a = tmul(D.mult, tmul(D.mult, E(pl[0]), mat_apply(D.S, E(f))), mat_apply(D.S, E(pl[2])));
            push(sacc, dim * pw * hw, kron(a, E(hl[0]), n));
          }
        }
      }
      add_split(C, f * n + x, compress(std::move(acc)), N);
      for (const auto& e : compress(std::move(sacc))) S(e.first, f * n + x) = e.second;
    }
  C.finalize();
  Vec<F> unit(N), counit(N);
  for (uint32_t f = 0; f < n; ++f)
    for (uint32_t x = 0; x < n; ++x) {
      unit[f * n + x] = D.unit[f] * H.unit[x];
      counit[f * n + x] = D.counit[f] * H.counit[x];
    }
  // a*(u) = conj(a(S(u)*)) with <a, u> = u[swap(a)].
  auto dbl = drinfeld_double(hp);
  auto swap = [n](uint32_t u) { return (u % n) * n + u / n; };
  Mat<F> st(N, N);
  for (uint32_t u = 0; u < N; ++u) {
    SVec<F> v = star_apply(dbl.star, mat_apply(dbl.S, E(u)));
    for (const auto& e : v) st(swap(u), swap(e.first)) = Scalar<F>::conj(e.second);
  }
  return make_kac<F>("D(" + H.name + ")*", std::move(M), std::move(unit), std::move(C), std::move(counit),
                     std::move(S), std::move(st));
}

template <class F>
Mat<F> id_tensor_fourier_inv(const HopfPair<F>& hp) {
  const int n = hp.H.n;
  Mat<F> T(n * n, n * n);
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < n; ++i)
      for (int f = 0; f < n; ++f) T(g * n + i, g * n + f) = hp.fourier_inv(i, f);
  return T;
}

template <class F>
KacAlgebra<F> double_dual_hstar_basis(const HopfPair<F>& hp) {
  const auto& H = hp.H;
  const auto& D = hp.D;
  const uint32_t n = H.n, N = n * n;
  const F delta = H.delta;
  auto E = [](int i) { return unit_vec<F>(i); };
  auto SD = [&](const SVec<F>& a) { return mat_apply(D.S, a); };
  auto f2 = basis_legs(D, 2), f3 = basis_legs(D, 3);
  SparseTensor3<F> M(N, N, N), C(N, N, N);
  // (g x f)(k x p) = delta (Sf_2 p)(h) kg x f_1
  for (uint32_t g = 0; g < n; ++g)
    for (uint32_t f = 0; f < n; ++f)
      for (uint32_t k = 0; k < n; ++k)
        for (uint32_t p = 0; p < n; ++p) {
          SVec<F> acc;
          for (const auto& [fl, fw] : f2[f]) {
            F w = delta * fw * eval(H.h, tmul(D.mult, SD(E(fl[1])), E(p)));
            if (Scalar<F>::zero(w)) continue;
            push(acc, w, kron(tmul(D.mult, E(k), E(g)), E(fl[0]), n));
          }
          add_row(M, g * n + f, k * n + p, compress(std::move(acc)));
        }
  M.finalize();
  auto p4 = legs(D, D.h, 4);
  Mat<F> S(N, N);
  Vec<F> counit(N);
  for (uint32_t g = 0; g < n; ++g)
    for (uint32_t f = 0; f < n; ++f) {
      // Delta(g x f) = delta (phi_1 g_2 S phi_3 x f S phi_2) (x) (g_1 x phi_4)
      SVec<F> acc;
      for (const auto& [pl, pw] : p4)
        for (const auto& [gl, gw] : f2[g]) {
          SVec<F> a = tmul(D.mult, tmul(D.mult, E(pl[0]), E(gl[1])), SD(E(pl[2])));
          SVec<F> b = tmul(D.mult, E(f), SD(E(pl[1])));
          push(acc, delta * pw * gw, kron(kron(a, b, n), kron(E(gl[0]), E(pl[3]), n), N));
        }
      add_split(C, g * n + f, compress(std::move(acc)), N);
      // S(g x f) = f_1 Sg Sf_3 x Sf_2
      SVec<F> sacc;
      for (const auto& [fl, fw] : f3[f])
        push(sacc, fw, kron(tmul(D.mult, tmul(D.mult, E(fl[0]), SD(E(g))), SD(E(fl[2]))), SD(E(fl[1])), n));
      for (const auto& e : compress(std::move(sacc))) S(e.first, g * n + f) = e.second;
      counit[g * n + f] = delta * H.h[f] * D.counit[g];
    }
  C.finalize();
  Mat<F> T = id_tensor_fourier_inv(hp);
  Mat<F> st = inverse(T) * double_dual(hp).star * conj_mat(T);
  return make_kac<F>("Dr(" + H.name + ")", std::move(M), {}, std::move(C), std::move(counit), std::move(S),
                     std::move(st));
}

template <class F>
KacAlgebra<F> transport(const KacAlgebra<F>& K, const Mat<F>& T) {
  const uint32_t N = K.n;
  Mat<F> Ti = inverse(T);
  auto cols = columns_of(T);
  SparseTensor3<F> M(N, N, N), C(N, N, N);
  for (uint32_t i = 0; i < N; ++i) {
    for (uint32_t j = 0; j < N; ++j) add_row(M, i, j, mat_apply(Ti, tmul(K.mult, cols[i], cols[j])));
    add_split(C, i, tensor2_apply(Ti, Ti, tcomul(K.comult, cols[i]), N), N);
  }
  M.finalize();
  C.finalize();
  Vec<F> counit(N, F(0));
  for (uint32_t j = 0; j < N; ++j)
    for (uint32_t i = 0; i < N; ++i) counit[j] += K.counit[i] * T(i, j);
  return make_kac<F>(K.name, std::move(M), Ti * K.unit, std::move(C), std::move(counit), Ti * K.S * T,
                     Ti * K.star * conj_mat(T));
}

template <class F>
KacAlgebra<F> opposite(const KacAlgebra<F>& K) {
  SparseTensor3<F> M(K.n, K.n, K.n);
  for (const auto& e : K.mult.entries()) M.add(e.j, e.i, e.k, e.v);
  M.finalize();
  return make_kac<F>(K.name + "^op", std::move(M), K.unit, K.comult, K.counit, K.S, K.star);
}

template <class F>
AxiomReport compare_structures(const KacAlgebra<F>& A, const KacAlgebra<F>& B) {
  AxiomReport rep;
  auto put = [&](const char* nm, const Defect<F>& d) { rep.add(nm, d.ok, d.worst, d.count); };
  put("multiplication", tensor_defect(A.mult, B.mult));
  put("unit", vec_defect(A.unit, B.unit));
  put("comultiplication", tensor_defect(A.comult, B.comult));
  put("counit", vec_defect(A.counit, B.counit));
  put("antipode", vec_defect(A.S.a, B.S.a));
  put("star", vec_defect(A.star.a, B.star.a));
  put("haar_integral", vec_defect(A.h, B.h));
  put("dual_integral", vec_defect(A.phi, B.phi));
  return rep;
}

template <class F>
AxiomReport pairing_check(const KacAlgebra<F>& dbl, const KacAlgebra<F>& dd) {
  AxiomReport rep;
  const uint32_t N = dbl.n;
  uint32_t n = 0;
  while (n * n < N) ++n;
  auto swap = [n](uint32_t u) { return (u % n) * n + u / n; };
  auto put = [&](const char* nm, const Defect<F>& d) { rep.add(nm, d.ok, d.worst, d.count); };
  // <a, uv> = <a_1, u><a_2, v>
  SparseTensor3<F> t1(N, N, N), t2(N, N, N);
  for (const auto& e : dd.comult.entries()) t1.add(swap(e.j), swap(e.k), swap(e.i), e.v);
  t1.finalize();
  put("product_dual_to_coproduct", tensor_defect(dbl.mult, t1));
  // <ab, u> = <a, u_1><b, u_2>
  for (const auto& e : dd.mult.entries()) t2.add(swap(e.k), swap(e.i), swap(e.j), e.v);
  t2.finalize();
  put("coproduct_dual_to_product", tensor_defect(dbl.comult, t2));
  Defect<F> anti, cou, un, st;
  for (uint32_t a = 0; a < N; ++a) {
    for (uint32_t u = 0; u < N; ++u) anti.scalar(dd.S(swap(u), a), dbl.S(swap(a), u));
    cou.scalar(dd.counit[a], dbl.unit[swap(a)]);
    un.scalar(dd.unit[swap(a)], dbl.counit[a]);
  }
  for (uint32_t u = 0; u < N; ++u) {
    SVec<F> v = star_apply(dbl.star, mat_apply(dbl.S, unit_vec<F>(u)));
    for (uint32_t a = 0; a < N; ++a) st.scalar(dd.star(swap(u), a), Scalar<F>::conj(sget(v, swap(a))));
  }
  put("antipode", anti);
  put("counit", cou);
  put("unit", un);
  put("star", st);
  return rep;
}

template <class F>
StarQ2<F> star_q2_structure(std::shared_ptr<const HopfPair<F>> hp) {
  const auto& H = hp->H;
  const auto& D = hp->D;
  const uint32_t n = H.n, N = n * n;
  const F delta = H.delta;
  auto E = [](int i) { return unit_vec<F>(i); };
  auto SD = [&](const SVec<F>& a) { return mat_apply(D.S, a); };
  auto Dm = [&](const SVec<F>& a, const SVec<F>& b) { return tmul(D.mult, a, b); };
  auto dense = [n](const SVec<F>& v) { return to_dense(v, n); };
  Chain<F> amb(hp, 0, 2);
  auto nus = nu_elements(*hp);
  Coords<F> coords(nus, amb.dim());
  Defect<F> prod_off, anti_off, star_off, unit_def;
  StarQ2<F> out;

  SparseTensor3<F> M(N, N, N), C(N, N, N);
  for (uint32_t i = 0; i < N; ++i)
    for (uint32_t j = 0; j < N; ++j) add_row(M, i, j, coords(amb.mul(nus[j], nus[i]), prod_off));
  M.finalize();

  auto d2 = basis_legs(D, 2), d3 = basis_legs(D, 3);
  auto p4 = legs(D, D.h, 4);
  Mat<F> S(N, N), st(N, N);
  Vec<F> counit(N);
  bool literal = true;
  for (uint32_t k = 0; k < n; ++k)
    for (uint32_t f = 0; f < n; ++f) {
      const uint32_t i = k * n + f;
      // Delta(X(f, k)) = delta X(f S phi_2, phi_1 k_2 S phi_3) (x) X(phi_4, k_1)
      SVec<F> acc;
      for (const auto& [pl, pw] : p4)
        for (const auto& [kl, kw] : d2[k]) {
          SVec<F> k1 = Dm(Dm(E(pl[0]), E(kl[1])), SD(E(pl[2])));
          SVec<F> f1 = Dm(E(f), SD(E(pl[1])));
          push(acc, delta * pw * kw, kron(kron(k1, f1, n), kron(E(kl[0]), E(pl[3]), n), N));
        }
      add_split(C, i, compress(std::move(acc)), N);
      // S(X) = k_1 x| F^-1 S(f_2 k_2) x| S(f_1 Sk_3 Sf_3), in the chain
      SVec<F> sx;
      for (const auto& [kl, kw] : d3[k])
        for (const auto& [fl, fw] : d3[f]) {
          Vec<F> s0 = D.e(kl[0]);
          Vec<F> s1 = hp->fourier_inv * dense(SD(Dm(E(fl[1]), E(kl[1]))));
          Vec<F> s2 = dense(SD(Dm(Dm(E(fl[0]), SD(E(kl[2]))), SD(E(fl[2])))));
          sx = axpy(sx, kw * fw, amb.pure({s0, s1, s2}));
        }
      for (const auto& e : coords(sx, anti_off)) S(e.first, i) = e.second;
      counit[i] = delta * H.h[f] * H.unit[k];
      // X(f, k)* = X(S f*, k*)
      SVec<F> ks = star_apply(D.star, E(k)), fs = SD(star_apply(D.star, E(f)));
      SVec<F> col = compress(kron(ks, fs, n));
      for (const auto& e : col) st(e.first, i) = e.second;
      star_off.svec(coords(amb.star(nus[i]), star_off), col);
      // Same with the third f leg left without S.
      SVec<F> lit;
      for (const auto& [kl, kw] : legs(D, dense(ks), 3))
        for (const auto& [fl, fw] : legs(D, dense(fs), 3)) {
          Vec<F> s0 = dense(Dm(Dm(E(fl[0]), SD(E(kl[2]))), E(fl[2])));
          Vec<F> s1 = hp->fourier_inv * dense(Dm(E(fl[1]), E(kl[1])));
          Vec<F> s2 = dense(SD(E(kl[0])));
          lit = axpy(lit, kw * fw, amb.pure({s0, s1, s2}));
        }
      if (!is_null(sdiff(lit, amb.star(nus[i])))) literal = false;
    }
  C.finalize();
  out.K = make_kac<F>("*Q2(" + H.name + ")", std::move(M), {}, std::move(C), std::move(counit), std::move(S),
                      std::move(st));
  SVec<F> u;
  for (uint32_t i = 0; i < N; ++i) u = axpy(u, out.K.unit[i], nus[i]);
  unit_def.svec(u, amb.unit());
  auto put = [&](const char* nm, const Defect<F>& d) { out.embedding.add(nm, d.ok, d.worst, d.count); };
  put("products_in_span", prod_off);
  put("antipode_in_span", anti_off);
  put("star_matches_chain", star_off);
  put("unit_is_chain_unit", unit_def);
  out.literal_involution_matches = literal;
  return out;
}

template <class F>
AxiomReport nu_iso_check(std::shared_ptr<const HopfPair<F>> hp) {
  auto dr = double_dual_hstar_basis(*hp);
  auto q = star_q2_structure(hp);
  AxiomReport rep = compare_structures(opposite(dr), q.K);
  for (const auto& it : q.embedding.items) rep.items.push_back(it);
  return rep;
}

int regular_center_dim(const KacAlgebra<cplx>& K, uint64_t seed) {
  std::vector<CMat> basis(K.n, CMat::Zero(K.n, K.n));
  for (const auto& e : K.mult.entries()) basis[e.i](e.k, e.j) += e.v;
  auto bd = block_decompose(basis, seed);
  return bd.ok ? bd.center_dim() : -1;
}

#define KAC_DOUBLE_INSTANTIATE(F)                                                        \
  template KacAlgebra<F> drinfeld_double(const HopfPair<F>&);                            \
  template KacAlgebra<F> double_dual(const HopfPair<F>&);                                \
  template KacAlgebra<F> double_dual_hstar_basis(const HopfPair<F>&);                         \
  template Mat<F> id_tensor_fourier_inv(const HopfPair<F>&);                             \
  template KacAlgebra<F> transport(const KacAlgebra<F>&, const Mat<F>&);                 \
  template KacAlgebra<F> opposite(const KacAlgebra<F>&);                                 \
  template AxiomReport compare_structures(const KacAlgebra<F>&, const KacAlgebra<F>&);   \
  template AxiomReport pairing_check(const KacAlgebra<F>&, const KacAlgebra<F>&);        \
  template StarQ2<F> star_q2_structure(std::shared_ptr<const HopfPair<F>>);              \
  template AxiomReport nu_iso_check(std::shared_ptr<const HopfPair<F>>);

KAC_DOUBLE_INSTANTIATE(Cyclo)
KAC_DOUBLE_INSTANTIATE(cplx)

}  // namespace kac
