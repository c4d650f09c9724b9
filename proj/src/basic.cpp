#include "kac/basic.hpp"

#include <sstream>

namespace kac {

template <class F>
CMat to_cmat(const Mat<F>& M) {
  CMat out(M.rows, M.cols);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) out(i, j) = Scalar<F>::to_c(M(i, j));
  return out;
}

template <class F>
IdealRep<F>::IdealRep(const Chain<F>& c, Exec exec) {
  const int L = c.length(), even = L - (L % 2);
  std::vector<Vec<F>> parts;
  for (int t = 0; t < L; ++t) {
    int q = c.lo() + t;
    if (t < even && q % 2 == 0)
      parts.push_back(c.pair().D.h);
    else
      parts.push_back(c.slot(q).unit);
  }
  auto p = c.pure(parts);
  SparseRREF<F> R(c.dim());
  for (uint32_t I = 0; I < c.dim(); ++I) R.insert(c.mul(unit_vec<F>(I), p));
  N_ = R.rank();
  const auto& rows = R.rows();
  rho_.assign(c.dim(), {});
  auto fill = [&](size_t I) {
    SVec<F> acc;
    for (size_t j = 0; j < N_; ++j) {
      auto v = c.mul(unit_vec<F>(static_cast<uint32_t>(I)), rows[j]);
      auto co = R.coords(v);
      for (size_t r = 0; r < N_; ++r)
        if (!Scalar<F>::zero(co[r])) acc.emplace_back(static_cast<uint32_t>(r * N_ + j), co[r]);
    }
    rho_[I] = compress(std::move(acc));
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long I = 0; I < static_cast<long>(c.dim()); ++I) fill(static_cast<size_t>(I));
  } else {
    for (size_t I = 0; I < c.dim(); ++I) fill(I);
  }
}

template <class F>
CMat IdealRep<F>::operator()(const SVec<F>& X) const {
  CMat M = CMat::Zero(N_, N_);
  for (const auto& x : X) {
    cplx w = Scalar<F>::to_c(x.second);
    for (const auto& e : rho_[x.first]) M(e.first / N_, e.first % N_) += w * Scalar<F>::to_c(e.second);
  }
  return M;
}

template <class F>
SVec<F> MatAlgebra<F>::mul(const SVec<F>& a, const SVec<F>& b) const {
  std::vector<SVec<F>> brow(d_);
  for (const auto& e : b) brow[e.first / d_].emplace_back(e.first % d_, e.second);
  SVec<F> acc;
  for (const auto& e : a) {
    uint32_t r = e.first / d_, k = e.first % d_;
    for (const auto& f : brow[k]) acc.emplace_back(r * d_ + f.first, e.second * f.second);
  }
  return compress(std::move(acc));
}

template <class F>
SVec<F> MatAlgebra<F>::unit() const {
  SVec<F> u;
  for (int i = 0; i < d_; ++i) u.emplace_back(static_cast<uint32_t>(i * d_ + i), F(1));
  return u;
}

template <class F>
SVec<F> MatAlgebra<F>::star(const SVec<F>& a) const {
  SVec<F> s;
  for (const auto& e : a) s.emplace_back((e.first % d_) * d_ + e.first / d_, Scalar<F>::conj(e.second));
  return compress(std::move(s));
}

template <class F>
F MatAlgebra<F>::trace(const SVec<F>& a) const {
  F t(0);
  for (const auto& e : a)
    if (e.first / d_ == e.first % d_) t += e.second;
  return t;
}

template <class F>
SVec<F> flatten(const Mat<F>& M) {
  SVec<F> v;
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (!Scalar<F>::zero(M(i, j))) v.emplace_back(static_cast<uint32_t>(i * M.cols + j), M(i, j));
  return v;
}

namespace {

template <class F>
Mat<F> mat_from_coords(const std::vector<std::vector<F>>& cols) {
  int d = static_cast<int>(cols.size());
  Mat<F> M(d, d);
  for (int j = 0; j < d; ++j)
    for (int r = 0; r < d; ++r) M(r, j) = cols[j][r];
  return M;
}

template <class F>
Mat<F> combine(const std::vector<Mat<F>>& ms, const std::vector<F>& c) {
  Mat<F> out(ms[0].rows, ms[0].cols);
  for (size_t i = 0; i < ms.size(); ++i) {
    if (Scalar<F>::zero(c[i])) continue;
    for (size_t k = 0; k < out.a.size(); ++k) out.a[k] += c[i] * ms[i].a[k];
  }
  return out;
}

template <class F>
Defect<F> mat_defect(const Mat<F>& a, const Mat<F>& b) {
  Defect<F> d;
  d.vec(a.a, b.a);
  return d;
}

template <class F>
void add_item(AxiomReport& rep, const std::string& name, const Defect<F>& d) {
  rep.add(name, d.ok, d.worst, d.count);
}

}  // namespace

template <class F>
std::vector<F> GnsBasic<F>::coords_b(const SVec<F>& x) const {
  return b_rref_.coords(x);
}

template <class F>
GnsBasic<F>::GnsBasic(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& A, const std::vector<SVec<F>>& B)
    : amb_(amb), b_rref_(amb.dim()) {
  for (const auto& b : B) b_rref_.insert(b);
  b_ = b_rref_.rows();
  const int d = static_cast<int>(b_.size());
  for (const auto& b : b_) tr_b_.push_back(amb_.trace(b));
  for (int i = 0; i < d; ++i) {
    std::vector<std::vector<F>> cols(d);
    for (int j = 0; j < d; ++j) cols[j] = coords_b(amb_.mul(b_[i], b_[j]));
    lambda_.push_back(mat_from_coords(cols));
  }
  auto Abasis = span_of(A, amb.dim()).basis;
  for (const auto& a : Abasis) a_coords_.push_back(coords_b(a));
  TraceExpectation<F> E(amb_, Abasis);
  {
    std::vector<std::vector<F>> cols(d);
    for (int j = 0; j < d; ++j) cols[j] = coords_b(E(b_[j]));
    e_ = mat_from_coords(cols);
  }
  // Right A-module generators of B.
  std::vector<int> gens;
  SparseRREF<F> mod(d);
  for (int i = 0; i < d && mod.rank() < static_cast<size_t>(d); ++i) {
    bool grew = false;
    for (const auto& a : Abasis) grew = mod.insert(to_sparse(coords_b(amb_.mul(b_[i], a)))) || grew;
    if (grew) gens.push_back(i);
  }
  const uint32_t val = static_cast<uint32_t>(d * d);
  rref_ = SparseRREF<F>(val + 1, val);
  for (int s : gens) {
    Mat<F> xe = lambda_[s] * e_;
    for (int j = 0; j < d; ++j) {
      Mat<F> M = xe * lambda_[j];
      F t(0);  // tr(b_j b_s)
      for (int r = 0; r < d; ++r) t += tr_b_[r] * lambda_[j](r, s);
      SVec<F> v = flatten(M);
      if (!Scalar<F>::zero(t)) v.emplace_back(val, t);
      if (rref_.insert(v)) basis_.push_back(std::move(M));
    }
  }
  contains_b_ = true;
  for (int i = 0; i < d; ++i) {
    auto r = rref_.reduce(flatten(lambda_[i]));
    if (!r.empty() && r.front().first < val) contains_b_ = false;
    F t0 = r.empty() || r.back().first != val ? F(0) : F(-1) * r.back().second;
    t0_b_.push_back(t0);
  }
  auto r1 = rref_.reduce(flatten(Mat<F>::identity(d)));
  modulus_ = (r1.empty() || r1.back().first != val) ? F(0) : F(-1) * r1.back().second;
  modulus_ *= Scalar<F>::inv(amb_.trace(amb_.unit()));
}

template <class F>
AxiomReport GnsBasic<F>::relations() const {
  AxiomReport rep;
  const int d = static_cast<int>(b_.size());
  add_item(rep, "jones-idempotent", mat_defect(e_ * e_, e_));
  Defect<F> comm, compress_, unit, trace, bimod;
  for (const auto& ac : a_coords_) {
    Mat<F> la = combine(lambda_, ac);
    comm.merge(mat_defect(e_ * la, la * e_));
  }
  for (int j = 0; j < d; ++j) {
    auto Ej = e_.col(j);
    compress_.merge(mat_defect(e_ * lambda_[j] * e_, combine(lambda_, Ej) * e_));
    F t(0);
    for (int r = 0; r < d; ++r) t += tr_b_[r] * Ej[r];
    trace.scalar(t, tr_b_[j]);
    // E(b_j a) = E(b_j) a through right multiplication in coordinates.
    Mat<F> lE = combine(lambda_, Ej);
    for (const auto& ac : a_coords_) bimod.vec(e_ * (lambda_[j] * ac), lE * ac);
  }
  auto one = coords_b(amb_.unit());
  unit.vec(e_ * one, one);
  add_item(rep, "jones-commutes-with-A", comm);
  add_item(rep, "jones-compression", compress_);
  add_item(rep, "expectation-unital", unit);
  add_item(rep, "expectation-trace", trace);
  add_item(rep, "expectation-bimodule", bimod);
  return rep;
}

template <class F>
Defect<F> GnsBasic<F>::markov(const F& modulus) const {
  Defect<F> d;
  for (size_t i = 0; i < t0_b_.size(); ++i) d.scalar(t0_b_[i], modulus * tr_b_[i]);
  if (!contains_b_ || !well_defined()) d.ok = false;
  return d;
}

template <class F>
size_t GnsBasic<F>::generated_dim() const {
  const int d = static_cast<int>(b_.size());
  MatAlgebra<F> M(d);
  std::vector<SVec<F>> gens;
  for (const auto& l : lambda_) gens.push_back(flatten(l));
  gens.push_back(flatten(e_));
  return generated_subalgebra(M, gens).size();
}

template <class F>
AxiomReport verify_basic_construction(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& A,
                                      const std::vector<SVec<F>>& B, const std::vector<SVec<F>>& C,
                                      const SVec<F>& f) {
  AxiomReport rep;
  Defect<F> proj, comm, compress_;
  proj.svec(amb.mul(f, f), f);
  proj.svec(amb.star(f), f);
  auto Ab = span_of(A, amb.dim()).basis;
  for (const auto& a : Ab) comm.svec(amb.mul(a, f), amb.mul(f, a));
  TraceExpectation<F> E(amb, Ab);
  for (const auto& b : B) compress_.svec(amb.mul(amb.mul(f, b), f), amb.mul(E(b), f));
  std::vector<SVec<F>> af;
  for (const auto& a : Ab) af.push_back(amb.mul(a, f));
  bool inj = sparse_rank(af, amb.dim()) == Ab.size();
  std::vector<SVec<F>> bfb;
  for (const auto& x : B) {
    auto xf = amb.mul(x, f);
    for (const auto& y : B) bfb.push_back(amb.mul(xf, y));
  }
  auto span = span_of(bfb, amb.dim());
  bool gen = same_span(span, span_of(C, amb.dim()));
  add_item(rep, "projection", proj);
  add_item(rep, "commutes-with-A", comm);
  add_item(rep, "compression", compress_);
  rep.add("injective-on-A", inj, 0, static_cast<long>(Ab.size()));
  rep.add("generates", gen, 0, static_cast<long>(bfb.size()));
  return rep;
}

template <class F>
JonesSearch psi_triple_jones_search(std::shared_ptr<const HopfPair<F>> hp) {
  PsiEmbedding<F> psi(hp, 1, 0, 1);
  Chain<F> C(hp, -1, 3);
  const std::vector<int> slots = {-1, 1, 2, 3};
  std::vector<SVec<F>> A, B, Cb;
  for (uint32_t I = 0; I < psi.source().dim(); ++I) A.push_back(C.slot_embed(psi(unit_vec<F>(I)), slots));
  for (uint32_t J = 0; J < psi.target().dim(); ++J) B.push_back(C.slot_embed(unit_vec<F>(J), slots));
  for (uint32_t K = 0; K < C.dim(); ++K) Cb.push_back(unit_vec<F>(K));
  JonesSearch out;
  for (int q = -1; q <= 3; ++q) {
    const Vec<F>& integral = (q % 2 != 0) ? hp->H.h : hp->D.h;
    auto f = C.slot_embed(to_sparse(integral), {q});
    auto rep = verify_basic_construction(C, A, B, Cb, f);
    if (rep.all_pass())
      out.passing_slots.push_back(q);
    else
      out.failures.emplace_back(q, rep.failures());
  }
  return out;
}

template <class F>
DepthTwoReport depth_two_check(std::shared_ptr<const HopfPair<F>> hp, int m, size_t max_dim, uint64_t seed,
                               Exec exec) {
  DepthTwoReport rep;
  const int n = hp->H.n;
  auto g3 = q_geometry(m, 3);
  rep.ambient_q3 = ambient_dim(g3, n);
  if (rep.ambient_q3 > max_dim)
    throw DimensionBudgetExceeded("ambient dimension " + std::to_string(rep.ambient_q3) + " exceeds budget " +
                                  std::to_string(max_dim));
  auto q1 = solve_qspace(hp, q_geometry(m, 1), exec);
  auto q2 = solve_qspace(hp, q_geometry(m, 2), exec);
  auto q3 = solve_qspace(hp, g3, exec);
  rep.dim_q1 = q1.dim();
  rep.dim_q2 = q2.dim();
  rep.dim_q3 = q3.dim();
  rep.depth_one_ruled_out = rep.dim_q2 != rep.dim_q1 * rep.dim_q1;

  std::vector<SVec<F>> A;
  for (const auto& v : q1.space.basis) A.push_back(q2.X->embed_from(*q1.X, v));
  GnsBasic<F> gns(*q2.X, A, q2.space.basis);
  rep.dim_c = gns.dim();
  rep.dims_match = rep.dim_c == rep.dim_q3;
  auto rel = gns.relations();
  rep.relations_ok = rel.all_pass() && gns.contains_b() && gns.well_defined() && q1.residual.ok &&
                     q2.residual.ok && q3.residual.ok;
  if (!rel.all_pass()) rep.note += "relations failed: " + rel.failures() + "; ";
  F target = scalar_from_int<F>(1);
  for (int i = 0; i < m; ++i) target *= scalar_from_int<F>(n);
  auto mk = gns.markov(target);
  rep.markov_ok = mk.ok;
  {
    std::ostringstream os;
    cplx mv = Scalar<F>::to_c(gns.measured_modulus());
    os << mv.real();
    rep.modulus = os.str();
  }

  std::vector<CMat> cb, lb, q3b, q2b;
  for (const auto& M : gns.algebra_basis()) cb.push_back(to_cmat(M));
  for (const auto& M : gns.lambda()) lb.push_back(to_cmat(M));
  IdealRep<F> rho(*q3.X, exec);
  for (const auto& v : q3.space.basis) q3b.push_back(rho(v));
  for (const auto& v : q2.space.basis) q2b.push_back(rho(q3.X->embed_from(*q2.X, v)));
  auto bc = block_decompose(cb, seed), bb = block_decompose(lb, seed + 1);
  auto bq3 = block_decompose(q3b, seed + 2), bq2 = block_decompose(q2b, seed + 3);
  rep.bratteli_ok = bc.ok && bb.ok && bq3.ok && bq2.ok;
  for (const auto* b : {&bc, &bb, &bq3, &bq2}) {
    rep.residual = std::max(rep.residual, b->residual);
    if (!b->error.empty()) rep.note += b->error + "; ";
  }
  rep.c_sizes = sorted(bc.sizes);
  rep.q3_sizes = sorted(bq3.sizes);
  rep.sizes_match = rep.bratteli_ok && rep.c_sizes == rep.q3_sizes;
  if (rep.bratteli_ok) {
    auto ic = inclusion_matrix(bb, bc), iq = inclusion_matrix(bq2, bq3);
    rep.residual = std::max({rep.residual, ic.residual, iq.residual});
    rep.incl_c = ic.lambda;
    rep.incl_q3 = iq.lambda;
    rep.inclusion_match = ic.residual <= 1e-6 && iq.residual <= 1e-6 &&
                          same_up_to_permutation(ic.lambda, bb.sizes, bc.sizes, iq.lambda, bq2.sizes, bq3.sizes);
  }
  return rep;
}

#define KAC_BASIC_INSTANTIATE(F)                                                                             \
  template CMat to_cmat(const Mat<F>&);                                                                      \
  template class IdealRep<F>;                                                                                \
  template class MatAlgebra<F>;                                                                              \
  template SVec<F> flatten(const Mat<F>&);                                                                   \
  template class GnsBasic<F>;                                                                                \
  template AxiomReport verify_basic_construction(const FiniteAlgebra<F>&, const std::vector<SVec<F>>&,       \
                                                 const std::vector<SVec<F>>&, const std::vector<SVec<F>>&,   \
                                                 const SVec<F>&);                                            \
  template JonesSearch psi_triple_jones_search(std::shared_ptr<const HopfPair<F>>);                          \
  template DepthTwoReport depth_two_check(std::shared_ptr<const HopfPair<F>>, int, size_t, uint64_t, Exec);

KAC_BASIC_INSTANTIATE(Cyclo)
KAC_BASIC_INSTANTIATE(cplx)

}  // namespace kac
