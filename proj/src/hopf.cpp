#include "kac/hopf.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "kac/algebra_ops.hpp"

namespace kac {

FloatTolerance& float_tolerance() {
  static FloatTolerance t;
  return t;
}

template <class F>
Vec<F> KacAlgebra<F>::mul(const Vec<F>& a, const Vec<F>& b) const {
  return to_dense(tmul(mult, to_sparse(a), to_sparse(b)), n);
}

template <class F>
Vec<F> KacAlgebra<F>::comul(const Vec<F>& a) const {
  return to_dense(tcomul(comult, to_sparse(a)), static_cast<size_t>(n) * n);
}

template <class F>
Vec<F> KacAlgebra<F>::adjoint(const Vec<F>& a) const {
  Vec<F> c(n);
  for (int i = 0; i < n; ++i) c[i] = Scalar<F>::conj(a[i]);
  return star * c;
}

template <class F>
F KacAlgebra<F>::eps(const Vec<F>& a) const {
  F s(0);
  for (int i = 0; i < n; ++i) s += counit[i] * a[i];
  return s;
}

namespace {

// Integral of the algebra (mult, counit): x e_i = eps(e_i) x = e_i x, normalized idempotent.
template <class F>
Vec<F> solve_integral(const SparseTensor3<F>& mult, const Vec<F>& counit) {
  int n = mult.d1();
  std::vector<SVec<F>> rows;
  for (int i = 0; i < n; ++i) {
    // left: sum_j x_j mult(i, j, k) - eps_i x_k ; right: sum_j x_j mult(j, i, k) - eps_i x_k
    std::vector<SVec<F>> L(n), R(n);
    for (int j = 0; j < n; ++j) {
      auto [p, q] = mult.pair(i, j);
      for (auto* e = p; e != q; ++e) L[e->k].emplace_back(j, e->v);
      auto [p2, q2] = mult.pair(j, i);
      for (auto* e = p2; e != q2; ++e) R[e->k].emplace_back(j, e->v);
    }
    for (int k = 0; k < n; ++k) {
      L[k].emplace_back(k, F(-1) * counit[i]);
      R[k].emplace_back(k, F(-1) * counit[i]);
      rows.push_back(compress(L[k]));
      rows.push_back(compress(R[k]));
    }
  }
  auto ker = null_space_rows(rows, n);
  if (ker.size() != 1) throw IntegralNotFound("integral space has dimension " + std::to_string(ker.size()));
  SVec<F> h = ker[0];
  SVec<F> hh = tmul(mult, h, h);
  // h h = c h; pick the largest coordinate for the ratio.
  size_t best = 0;
  for (size_t t = 0; t < h.size(); ++t)
    if (Scalar<F>::mag(h[t].second) > Scalar<F>::mag(h[best].second)) best = t;
  F c = sget(hh, h[best].first) * Scalar<F>::inv(h[best].second);
  if (Scalar<F>::zero(c)) throw IntegralNotFound("integral is nilpotent");
  return to_dense(scaled(h, Scalar<F>::inv(c)), n);
}

template <class F>
SparseTensor3<F> dual_mult_tensor(const SparseTensor3<F>& comult) {
  SparseTensor3<F> t(comult.d2(), comult.d3(), comult.d1());
  for (const auto& e : comult.entries()) t.add(e.j, e.k, e.i, e.v);
  t.finalize();
  return t;
}

template <class F>
SparseTensor3<F> dual_comult_tensor(const SparseTensor3<F>& mult) {
  SparseTensor3<F> t(mult.d3(), mult.d1(), mult.d2());
  for (const auto& e : mult.entries()) t.add(e.k, e.i, e.j, e.v);
  t.finalize();
  return t;
}

}  // namespace

template <class F>
void find_integrals(KacAlgebra<F>& H) {
  H.h = solve_integral(H.mult, H.counit);
  H.phi = solve_integral(dual_mult_tensor(H.comult), H.unit);
  H.delta = Scalar<F>::from(sqrt_integer_in_cyclotomic(H.n));
}

template <class F>
KacAlgebra<F> make_kac(std::string name, SparseTensor3<F> mult, Vec<F> unit, SparseTensor3<F> comult, Vec<F> counit,
                       Mat<F> S, Mat<F> star) {
  KacAlgebra<F> H;
  H.name = std::move(name);
  H.n = mult.d1();
  int n = H.n;
  if (unit.empty()) {
    std::vector<SVec<F>> rows;
    std::vector<F> rhs;
    for (int i = 0; i < n; ++i) {
      std::vector<SVec<F>> L(n), R(n);
      for (int j = 0; j < n; ++j) {
        auto [p, q] = mult.pair(j, i);
        for (auto* e = p; e != q; ++e) L[e->k].emplace_back(j, e->v);
        auto [p2, q2] = mult.pair(i, j);
        for (auto* e = p2; e != q2; ++e) R[e->k].emplace_back(j, e->v);
      }
      for (int k = 0; k < n; ++k) {
        rows.push_back(compress(L[k]));
        rhs.push_back(i == k ? F(1) : F(0));
        rows.push_back(compress(R[k]));
        rhs.push_back(i == k ? F(1) : F(0));
      }
    }
    unit = solve_unique(rows, rhs, n);
    if (unit.empty()) throw AxiomViolation("multiplication has no unique unit");
  }
  H.mult = std::move(mult);
  H.unit = std::move(unit);
  H.comult = std::move(comult);
  H.counit = std::move(counit);
  H.S = std::move(S);
  H.star = std::move(star);
  find_integrals(H);
  return H;
}

template <class F>
KacAlgebra<F> dual(const KacAlgebra<F>& H) {
  int n = H.n;
  Mat<F> st(n, n);
  // (e^i)*(e_j) = conj(e^i(S(e_j)*)).
  for (int j = 0; j < n; ++j) {
    Vec<F> y = H.adjoint(H.S.col(j));
    for (int i = 0; i < n; ++i) st(j, i) = Scalar<F>::conj(y[i]);
  }
  std::string nm = H.name.rfind("fn:", 0) == 0 ? "group:" + H.name.substr(3)
                   : H.name.rfind("group:", 0) == 0 ? "fn:" + H.name.substr(6)
                                                    : "dual(" + H.name + ")";
  auto D = make_kac<F>(nm, dual_mult_tensor(H.comult), H.counit, dual_comult_tensor(H.mult), H.unit, transpose(H.S), st);
  D.labels = H.labels;
  return D;
}

template <class F>
Mat<F> fourier_matrix(const KacAlgebra<F>& H) {
  // Delta_{H*}(phi)[j,k] is the coefficient of e^j (x) e^k, i.e. phi(e_j e_k).
  int n = H.n;
  Mat<F> Fm(n, n);
  for (const auto& e : H.mult.entries())
    if (!Scalar<F>::zero(H.phi[e.k])) Fm(e.j, e.i) += H.delta * e.v * H.phi[e.k];
  return Fm;
}

template <class F>
Vec<F> sweedler_delta_k(const KacAlgebra<F>& H, const Vec<F>& x, int k) {
  SVec<F> cur = to_sparse(x);
  size_t width = 1;  // number of trailing legs already expanded, as a flat size
  uint32_t n = H.n;
  for (int t = 0; t < k; ++t) {
    SVec<F> acc;
    for (const auto& e : cur) {
      uint32_t lead = static_cast<uint32_t>(e.first / width), rest = static_cast<uint32_t>(e.first % width);
      auto [p, q] = H.comult.row(lead);
      for (auto* c = p; c != q; ++c)
        acc.emplace_back(static_cast<uint32_t>(((c->j * n + c->k) * width) + rest), e.second * c->v);
    }
    cur = compress(std::move(acc));
    width *= n;
  }
  size_t total = width * n;
  return to_dense(cur, total);
}

template <class F>
AxiomReport verify_kac_axioms(const KacAlgebra<F>& H) {
  AxiomReport rep;
  int n = H.n;
  uint32_t nn = n;
  auto E = [&](int i) { return unit_vec<F>(i); };
  SVec<F> one = to_sparse(H.unit);
  Defect<F> assoc, unit, coassoc, counit, dhom, ehom, anti, s2, stinv, stanti, stcom, stS;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SVec<F> ij = tmul(H.mult, E(i), E(j));
      for (int k = 0; k < n; ++k) assoc.svec(tmul(H.mult, ij, E(k)), tmul(H.mult, E(i), tmul(H.mult, E(j), E(k))));
    }
  for (int i = 0; i < n; ++i) {
    unit.svec(tmul(H.mult, one, E(i)), E(i));
    unit.svec(tmul(H.mult, E(i), one), E(i));
  }
  std::vector<SVec<F>> D(n);
  for (int i = 0; i < n; ++i) D[i] = tcomul(H.comult, E(i));
  for (int i = 0; i < n; ++i) {
    SVec<F> l, r;
    for (const auto& x : D[i]) {
      uint32_t a = x.first / nn, b = x.first % nn;
      for (const auto& y : D[a]) l.emplace_back(y.first * nn + b, x.second * y.second);
      for (const auto& y : D[b]) r.emplace_back(a * nn * nn + y.first, x.second * y.second);
    }
    coassoc.svec(compress(l), compress(r));
    SVec<F> c1, c2;
    for (const auto& x : D[i]) {
      uint32_t a = x.first / nn, b = x.first % nn;
      c1.emplace_back(b, H.counit[a] * x.second);
      c2.emplace_back(a, H.counit[b] * x.second);
    }
    counit.svec(compress(c1), E(i));
    counit.svec(compress(c2), E(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SVec<F> ij = tmul(H.mult, E(i), E(j));
      dhom.svec(tcomul(H.comult, ij), tensor2_mul(H.mult, D[i], D[j]));
      ehom.scalar(eval(H.counit, ij), H.counit[i] * H.counit[j]);
    }
  ehom.scalar(eval(H.counit, one), F(1));
  for (int i = 0; i < n; ++i) {
    SVec<F> l, r;
    for (const auto& x : D[i]) {
      uint32_t a = x.first / nn, b = x.first % nn;
      SVec<F> Sa = mat_apply(H.S, E(a)), Sb = mat_apply(H.S, E(b));
      for (const auto& y : tmul(H.mult, Sa, E(b))) l.emplace_back(y.first, x.second * y.second);
      for (const auto& y : tmul(H.mult, E(a), Sb)) r.emplace_back(y.first, x.second * y.second);
    }
    SVec<F> target = scaled(one, H.counit[i]);
    anti.svec(compress(l), target);
    anti.svec(compress(r), target);
    s2.svec(mat_apply(H.S, mat_apply(H.S, E(i))), E(i));
    SVec<F> si = star_apply(H.star, E(i));
    stinv.svec(star_apply(H.star, si), E(i));
    stS.svec(star_apply(H.star, mat_apply(H.S, star_apply(H.star, mat_apply(H.S, E(i))))), E(i));
    SVec<F> dstar;
    for (const auto& x : D[i]) {
      uint32_t a = x.first / nn, b = x.first % nn;
      SVec<F> sa = star_apply(H.star, E(a)), sb = star_apply(H.star, E(b));
      for (const auto& p : sa)
        for (const auto& q : sb)
          dstar.emplace_back(p.first * nn + q.first, Scalar<F>::conj(x.second) * p.second * q.second);
    }
    stcom.svec(tcomul(H.comult, si), compress(dstar));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      stanti.svec(star_apply(H.star, tmul(H.mult, E(i), E(j))),
                  tmul(H.mult, star_apply(H.star, E(j)), star_apply(H.star, E(i))));
  // Delta(1) = 1 (x) 1 is part of the comultiplication being unital.
  Defect<F> d1;
  {
    SVec<F> oo;
    for (const auto& a : one)
      for (const auto& b : one) oo.emplace_back(a.first * nn + b.first, a.second * b.second);
    d1.svec(tcomul(H.comult, one), compress(oo));
  }
  dhom.merge(d1);
  auto put = [&](const char* nm, const Defect<F>& d) { rep.add(nm, d.ok, d.worst, d.count); };
  put("associativity", assoc);
  put("unit", unit);
  put("coassociativity", coassoc);
  put("counit", counit);
  put("comultiplication_multiplicative", dhom);
  put("counit_multiplicative", ehom);
  put("antipode", anti);
  put("antipode_involutive", s2);
  put("star_involutive", stinv);
  put("star_antimultiplicative", stanti);
  put("star_comultiplication", stcom);
  put("star_antipode", stS);
  // Integrals.
  Defect<F> hint, hid, hst, pint, pid, norm;
  SVec<F> h = to_sparse(H.h);
  for (int i = 0; i < n; ++i) {
    hint.svec(tmul(H.mult, E(i), h), scaled(h, H.counit[i]));
    hint.svec(tmul(H.mult, h, E(i)), scaled(h, H.counit[i]));
  }
  hid.svec(tmul(H.mult, h, h), h);
  hst.svec(star_apply(H.star, h), h);
  // phi as an element of H*: product in H* is dual to Delta.
  auto dual_prod = [&](const Vec<F>& f, const Vec<F>& g) {
    Vec<F> r(n, F(0));
    for (const auto& e : H.comult.entries()) r[e.i] += e.v * f[e.j] * g[e.k];
    return r;
  };
  for (int i = 0; i < n; ++i) {
    Vec<F> ei(n, F(0));
    ei[i] = F(1);
    F f1 = H.unit[i];
    Vec<F> lhs = dual_prod(ei, H.phi), rhs(n);
    for (int k = 0; k < n; ++k) rhs[k] = f1 * H.phi[k];
    pint.vec(lhs, rhs);
    pint.vec(dual_prod(H.phi, ei), rhs);
  }
  pid.vec(dual_prod(H.phi, H.phi), H.phi);
  F ph(0);
  for (int i = 0; i < n; ++i) ph += H.phi[i] * H.h[i];
  norm.scalar(ph, Scalar<F>::inv(scalar_from_int<F>(n)));
  put("haar_integral", hint);
  put("haar_idempotent", hid);
  put("haar_selfadjoint", hst);
  put("dual_integral", pint);
  put("dual_integral_idempotent", pid);
  put("phi_h_equals_inverse_dim", norm);
  return rep;
}

void validate_group_table(const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  if (n == 0) throw InvalidGroupTable("empty table");
  for (const auto& r : t) {
    if (static_cast<int>(r.size()) != n) throw InvalidGroupTable("table is not square");
    std::vector<int> seen(n, 0);
    for (int v : r) {
      if (v < 0 || v >= n) throw InvalidGroupTable("entry out of range");
      if (seen[v]++) throw InvalidGroupTable("row is not a permutation");
    }
  }
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j) ok = ok && t[i][j] == j && t[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw InvalidGroupTable("no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) throw InvalidGroupTable("table is not associative");
}

template <class F>
KacAlgebra<F> group_algebra(const std::vector<std::vector<int>>& t, const std::string& name) {
  validate_group_table(t);
  int n = static_cast<int>(t.size());
  int e = 0;
  for (int i = 0; i < n; ++i)
    if (t[i][0] == 0 && t[0][i] == 0 && t[i][i] == i) e = i;
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j) ok = ok && t[i][j] == j;
    if (ok) e = i;
  }
  SparseTensor3<F> mult(n, n, n), comult(n, n, n);
  Mat<F> S(n, n);
  Vec<F> unit(n, F(0)), counit(n, F(1));
  unit[e] = F(1);
  for (int i = 0; i < n; ++i) {
    comult.add(i, i, i, F(1));
    for (int j = 0; j < n; ++j) {
      mult.add(i, j, t[i][j], F(1));
      if (t[i][j] == e) S(j, i) = F(1);
    }
  }
  mult.finalize();
  comult.finalize();
  Mat<F> star = S;
  auto H = make_kac<F>(name, std::move(mult), std::move(unit), std::move(comult), std::move(counit), S, star);
  for (int i = 0; i < n; ++i) H.labels.push_back("g" + std::to_string(i));
  return H;
}

template <class F>
KacAlgebra<F> function_algebra(const std::vector<std::vector<int>>& t, const std::string& name) {
  auto D = dual(group_algebra<F>(t, "group"));
  D.name = name;
  for (int i = 0; i < D.n; ++i) D.labels[i] = "p" + std::to_string(i);
  return D;
}

KacAlgebra<cplx> to_float(const KacAlgebra<Cyclo>& H) {
  auto cv = [](const Cyclo& x) { return x.to_complex(); };
  auto vec = [&](const Vec<Cyclo>& v) {
    Vec<cplx> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = cv(v[i]);
    return r;
  };
  auto mat = [&](const Mat<Cyclo>& m) {
    Mat<cplx> r(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = cv(m.a[i]);
    return r;
  };
  KacAlgebra<cplx> F;
  F.name = H.name;
  F.n = H.n;
  F.labels = H.labels;
  F.mult = H.mult.convert<cplx>(cv);
  F.comult = H.comult.convert<cplx>(cv);
  F.unit = vec(H.unit);
  F.counit = vec(H.counit);
  F.S = mat(H.S);
  F.star = mat(H.star);
  F.h = vec(H.h);
  F.phi = vec(H.phi);
  F.delta = cv(H.delta);
  return F;
}

std::vector<std::vector<int>> cyclic_group_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<int>> klein_group_table() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return t;
}

std::vector<std::vector<int>> symmetric3_table() {
  std::vector<std::array<int, 3>> els;
  std::array<int, 3> p{0, 1, 2};
  do els.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = els[a][els[b][i]];
      t[a][b] = static_cast<int>(std::find(els.begin(), els.end(), c) - els.begin());
    }
  return t;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const char* g : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}) {
    out.push_back(std::string("group:") + g);
    out.push_back(std::string("fn:") + g);
  }
  return out;
}

KacAlgebra<Cyclo> builtin_algebra(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("algebra spec must look like group:Z2 or fn:Z2");
  std::string kind = spec.substr(0, colon), g = spec.substr(colon + 1);
  std::vector<std::vector<int>> t;
  if (g == "Z2") t = cyclic_group_table(2);
  else if (g == "Z3") t = cyclic_group_table(3);
  else if (g == "Z4") t = cyclic_group_table(4);
  else if (g == "Z2xZ2") t = klein_group_table();
  else if (g == "S3") t = symmetric3_table();
  else throw std::invalid_argument("unknown built-in group: " + g);
  if (kind == "group") return group_algebra<Cyclo>(t, spec);
  if (kind == "fn") return function_algebra<Cyclo>(t, spec);
  throw std::invalid_argument("unknown algebra kind: " + kind);
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

KacAlgebra<Cyclo> parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string line, name = "loaded";
  int dim = -1, conductor = 1;
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::pair<std::vector<int>, std::string>>> sections;
  std::string current;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!current.empty()) {
      if (key == "end") {
        current.clear();
        continue;
      }
      int arity = current == "mult" || current == "comult" ? 3 : (current == "antipode" || current == "star") ? 2 : 1;
      std::vector<int> idx;
      std::istringstream ts(line);
      for (int a = 0; a < arity; ++a) {
        int v;
        if (!(ts >> v)) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected index");
        idx.push_back(v);
      }
      std::string rest;
      std::getline(ts, rest);
      rest = trim(rest);
      if (rest.empty()) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing scalar");
      sections[current].push_back({idx, rest});
      continue;
    }
    if (key == "kac-structure") {
      int version = 0;
      ls >> version;
      if (version != 1) throw std::invalid_argument("unsupported format version");
      header = true;
    } else if (key == "name") {
      std::getline(ls, name);
      name = trim(name);
    } else if (key == "dim") {
      ls >> dim;
    } else if (key == "conductor") {
      ls >> conductor;
    } else if (key == "basis_labels") {
      std::string l;
      while (ls >> l) labels.push_back(l);
    } else if (key == "mult" || key == "comult" || key == "counit" || key == "antipode" || key == "star" ||
               key == "haar") {
      current = key;
      sections[key];
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  if (!header) throw std::invalid_argument("missing kac-structure header");
  if (dim <= 0) throw std::invalid_argument("missing or invalid dim");
  for (const char* req : {"mult", "comult", "counit", "antipode", "star"})
    if (!sections.count(req)) throw std::invalid_argument(std::string("missing section ") + req);
  auto chk = [&](int v) {
    if (v < 0 || v >= dim) throw std::invalid_argument("index out of range");
    return v;
  };
  SparseTensor3<Cyclo> mult(dim, dim, dim), comult(dim, dim, dim);
  for (auto& [i, s] : sections["mult"]) mult.add(chk(i[0]), chk(i[1]), chk(i[2]), Cyclo::parse(s, conductor));
  for (auto& [i, s] : sections["comult"]) comult.add(chk(i[0]), chk(i[1]), chk(i[2]), Cyclo::parse(s, conductor));
  mult.finalize();
  comult.finalize();
  Vec<Cyclo> counit(dim, Cyclo(0));
  for (auto& [i, s] : sections["counit"]) counit[chk(i[0])] += Cyclo::parse(s, conductor);
  Mat<Cyclo> S(dim, dim), star(dim, dim);
  for (auto& [i, s] : sections["antipode"]) S(chk(i[0]), chk(i[1])) += Cyclo::parse(s, conductor);
  for (auto& [i, s] : sections["star"]) star(chk(i[0]), chk(i[1])) += Cyclo::parse(s, conductor);
  KacAlgebra<Cyclo> H;
  try {
    H = make_kac<Cyclo>(name, mult, {}, comult, counit, S, star);
  } catch (const IntegralNotFound& e) {
    throw AxiomViolation(std::string("integrals: ") + e.what());
  }
  H.labels = labels;
  if (!labels.empty() && static_cast<int>(labels.size()) != dim) throw std::invalid_argument("basis_labels size mismatch");
  auto rep = verify_kac_axioms(H);
  if (!rep.all_pass()) throw AxiomViolation("structure constants fail: " + rep.failures());
  if (sections.count("haar")) {
    Vec<Cyclo> h(dim, Cyclo(0));
    for (auto& [i, s] : sections["haar"]) h[chk(i[0])] += Cyclo::parse(s, conductor);
    if (h != H.h) throw AxiomViolation("declared haar element differs from the solved integral");
  }
  return H;
}

KacAlgebra<Cyclo> load_algebra(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_algebra(ss.str());
}

std::string write_algebra(const KacAlgebra<Cyclo>& H) {
  int cond = 1;
  auto upd = [&](const Cyclo& c) { cond = std::lcm(cond, c.conductor()); };
  for (const auto& e : H.mult.entries()) upd(e.v);
  for (const auto& e : H.comult.entries()) upd(e.v);
  for (const auto& c : H.counit) upd(c);
  for (const auto& c : H.S.a) upd(c);
  for (const auto& c : H.star.a) upd(c);
  for (const auto& c : H.h) upd(c);
  auto lit = [&](const Cyclo& c) {
    auto co = c.coeffs_at(cond);
    std::string s;
    for (size_t i = 0; i < co.size(); ++i) {
      if (co[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += co[i].get_str() + "*z^" + std::to_string(i);
    }
    return s.empty() ? std::string("0") : s;
  };
  std::ostringstream os;
  os << "kac-structure 1\nname " << H.name << "\ndim " << H.n << "\nconductor " << cond << "\n";
  if (!H.labels.empty()) {
    os << "basis_labels";
    for (const auto& l : H.labels) os << ' ' << l;
    os << '\n';
  }
  os << "mult\n";
  for (const auto& e : H.mult.entries()) os << e.i << ' ' << e.j << ' ' << e.k << ' ' << lit(e.v) << '\n';
  os << "end\ncomult\n";
  for (const auto& e : H.comult.entries()) os << e.i << ' ' << e.j << ' ' << e.k << ' ' << lit(e.v) << '\n';
  os << "end\ncounit\n";
  for (int i = 0; i < H.n; ++i)
    if (!H.counit[i].is_zero()) os << i << ' ' << lit(H.counit[i]) << '\n';
  os << "end\nantipode\n";
  for (int i = 0; i < H.n; ++i)
    for (int j = 0; j < H.n; ++j)
      if (!H.S(i, j).is_zero()) os << i << ' ' << j << ' ' << lit(H.S(i, j)) << '\n';
  os << "end\nstar\n";
  for (int i = 0; i < H.n; ++i)
    for (int j = 0; j < H.n; ++j)
      if (!H.star(i, j).is_zero()) os << i << ' ' << j << ' ' << lit(H.star(i, j)) << '\n';
  os << "end\nhaar\n";
  for (int i = 0; i < H.n; ++i)
    if (!H.h[i].is_zero()) os << i << ' ' << lit(H.h[i]) << '\n';
  os << "end\n";
  return os.str();
}

#define KAC_INSTANTIATE(F)                                                                                    \
  template struct KacAlgebra<F>;                                                                              \
  template AxiomReport verify_kac_axioms<F>(const KacAlgebra<F>&);                                            \
  template void find_integrals<F>(KacAlgebra<F>&);                                                            \
  template KacAlgebra<F> dual<F>(const KacAlgebra<F>&);                                                       \
  template Mat<F> fourier_matrix<F>(const KacAlgebra<F>&);                                                    \
  template Vec<F> sweedler_delta_k<F>(const KacAlgebra<F>&, const Vec<F>&, int);                              \
  template KacAlgebra<F> make_kac<F>(std::string, SparseTensor3<F>, Vec<F>, SparseTensor3<F>, Vec<F>, Mat<F>, \
                                     Mat<F>);                                                                 \
  template KacAlgebra<F> group_algebra<F>(const std::vector<std::vector<int>>&, const std::string&);          \
  template KacAlgebra<F> function_algebra<F>(const std::vector<std::vector<int>>&, const std::string&);

KAC_INSTANTIATE(Cyclo)
KAC_INSTANTIATE(cplx)

}  // namespace kac
