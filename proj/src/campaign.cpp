#include "kac/campaign.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "kac/basic.hpp"
#include "kac/double.hpp"
#include "kac/weakhopf.hpp"

namespace kac {

namespace {

struct CheckInfo {
  std::string id;
  bool uses_m;
  std::string anchor;
};

const std::vector<CheckInfo>& infos() {
  static const std::vector<CheckInfo> v = {
      {"kac-axioms", false, "Section 1.1 Kac algebra"},
      {"integrals", false, "Section 1.1 integrals, phi(h) = 1/dim H"},
      {"fourier", false, "Section 1.1 Fourier transform, F_{H*} F_H = S"},
      {"chain-traces", false, "Section 1.3 trace on H_[i,j]"},
      {"matrixalg", false, "Lemma matrixalg"},
      {"commutants-lemma", false, "Lemma commutants"},
      {"double", false, "Section 1.4 D(H)"},
      {"double-dual", false, "Section 1.4 D(H)*"},
      {"lemma-dr", false, "Lemma dr"},
      {"nu-iso", false, "Remark Dr, Lemma sstructure"},
      {"s-space", false, "Lemma element, Corollary Eq"},
      {"q-dims", true, "Section 5, dim Q^m_2 = (dim H)^{2(m-1)}"},
      {"alpha-equivalence", true, "Proposition descrip, Lemma Hopf"},
      {"cond-exp-lemma-exp", false, "Lemma exp"},
      {"basic-construction", false, "Lemma basic"},
      {"markov", true, "Remark B(iii), Markov trace of modulus delta^{2m}"},
      {"depth-two", true, "Theorem depth"},
      {"q12", true, "Lemma second"},
      {"omega", true, "Corollary omega"},
      {"separability", true, "Lemma del, separability element"},
      {"k-m-axioms", true, "Theorem WHA"},
      {"counit", true, "Theorem weak, Theorem WHA counit"},
      {"psi-iso", true, "Theorem WHA, psi onto *Q^m_2"},
      {"comult-crosscheck", true, "Lemma antipode, Proposition wcomul, Lemma del, Eqs. eqq/eqqq"},
      {"antipode-involutive", true, "Remark after Theorem WHA, S^2 = id"},
  };
  return v;
}

const CheckInfo& info(const std::string& id) {
  for (const auto& c : infos())
    if (c.id == id) return c;
  throw ConfigError("unknown check: " + id);
}

size_t ipow(size_t b, int e) {
  size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void merge(AxiomReport& into, const AxiomReport& from, const std::string& prefix) {
  for (const auto& i : from.items) into.items.push_back({prefix + i.name, i.pass, i.residual, i.checked});
}

template <class F>
void add_defect(AxiomReport& r, const std::string& name, const Defect<F>& d) {
  r.add(name, d.ok, d.worst, d.count);
}

struct Budget {
  size_t max_dim;
  void need(size_t dim, const std::string& what) const {
    if (dim > max_dim)
      throw DimensionBudgetExceeded(what + " needs dimension " + std::to_string(dim) + " > max-dim " +
                                    std::to_string(max_dim));
  }
};

template <class F>
class Runner {
 public:
  Runner(std::shared_ptr<const HopfPair<F>> hp, const CampaignConfig& cfg)
      : hp_(std::move(hp)), cfg_(cfg), budget_{cfg.max_dim} {}

  void run(const std::string& id, int m, CheckRecord& rec) {
    static const std::map<std::string, void (Runner::*)(int, CheckRecord&)> table = {
        {"kac-axioms", &Runner::kac_axioms},
        {"integrals", &Runner::integrals},
        {"fourier", &Runner::fourier},
        {"chain-traces", &Runner::chain_traces},
        {"matrixalg", &Runner::matrixalg},
        {"commutants-lemma", &Runner::commutants},
        {"double", &Runner::dbl},
        {"double-dual", &Runner::dbl_dual},
        {"lemma-dr", &Runner::double_dual_coords},
        {"nu-iso", &Runner::nu_iso},
        {"s-space", &Runner::s_space},
        {"q-dims", &Runner::q_dims},
        {"alpha-equivalence", &Runner::alpha},
        {"cond-exp-lemma-exp", &Runner::cond_exp},
        {"basic-construction", &Runner::basic},
        {"markov", &Runner::markov},
        {"depth-two", &Runner::depth_two},
        {"q12", &Runner::q12},
        {"omega", &Runner::omega},
        {"separability", &Runner::separability},
        {"k-m-axioms", &Runner::km_axioms},
        {"counit", &Runner::counit},
        {"psi-iso", &Runner::psi_iso},
        {"comult-crosscheck", &Runner::comult},
        {"antipode-involutive", &Runner::involutive},
    };
    (this->*table.at(id))(m, rec);
  }

 private:
  const KacAlgebra<F>& H() const { return hp_->H; }
  int n() const { return hp_->H.n; }

  void kac_axioms(int, CheckRecord& r) {
    merge(r.items, verify_kac_axioms(hp_->H), "H.");
    merge(r.items, verify_kac_axioms(hp_->D), "H*.");
    r.dims = {{"dim_h", n()}};
  }

  void integrals(int, CheckRecord& r) {
    for (const auto* K : {&hp_->H, &hp_->D}) {
      std::string p = K == &hp_->H ? "H." : "H*.";
      Defect<F> idem, eh, dl, ph, left;
      idem.vec(K->mul(K->h, K->h), K->h);
      eh.scalar(K->eps(K->h), F(1));
      dl.scalar(K->delta * K->delta, scalar_from_int<F>(K->n));
      F s(0);
      for (int i = 0; i < K->n; ++i) s += K->phi[i] * K->h[i];
      ph.scalar(s * scalar_from_int<F>(K->n), F(1));
      for (int x = 0; x < K->n; ++x) {
        Vec<F> eh_x = K->h;
        for (auto& v : eh_x) v *= K->eps(K->e(x));
        left.vec(K->mul(K->e(x), K->h), eh_x);
      }
      add_defect(r.items, p + "h_idempotent", idem);
      add_defect(r.items, p + "eps_h_is_one", eh);
      add_defect(r.items, p + "delta_squared_is_dim", dl);
      add_defect(r.items, p + "phi_h_is_inverse_dim", ph);
      add_defect(r.items, p + "h_left_integral", left);
    }
  }

  void fourier(int, CheckRecord& r) {
    auto FH = fourier_matrix(hp_->H), FD = fourier_matrix(hp_->D);
    Defect<F> a, b;
    auto A = FD * FH, B = FH * FD;
    for (size_t i = 0; i < A.a.size(); ++i) a.note(A.a[i] - hp_->H.S.a[i]);
    for (size_t i = 0; i < B.a.size(); ++i) b.note(B.a[i] - hp_->D.S.a[i]);
    a.count = b.count = 1;
    add_defect(r.items, "fourier_dual_after_fourier_is_S", a);
    add_defect(r.items, "fourier_after_fourier_dual_is_S_dual", b);
  }

  void chain_traces(int, CheckRecord& r) {
    Chain<F> c(hp_, 1, 2);
    Defect<F> prod, norm, tracial, reg;
    for (int x = 0; x < n(); ++x)
      for (int f = 0; f < n(); ++f)
        prod.scalar(c.trace(unit_vec<F>(c.index({x, f}))), H().phi[x] * H().h[f]);
    for (int lo : {0, 1})
      for (int len = 1; len <= 3 && ipow(n(), len) <= std::min<size_t>(cfg_.max_dim, 256); ++len) {
        Chain<F> d(hp_, lo, lo + len - 1);
        norm.scalar(d.trace(d.unit()), F(1));
        for (uint32_t i = 0; i < d.dim(); ++i)
          for (uint32_t j = 0; j < d.dim(); ++j) tracial.scalar(d.trace(d.mulb(i, j)), d.trace(d.mulb(j, i)));
        if (len <= 2) {
          F nk = scalar_from_int<F>(static_cast<long>(d.dim()));
          for (uint32_t i = 0; i < d.dim(); ++i) reg.scalar(regular_trace(d, unit_vec<F>(i)), nk * d.trace(unit_vec<F>(i)));
        }
      }
    add_defect(r.items, "product_formula", prod);
    add_defect(r.items, "normalized", norm);
    add_defect(r.items, "tracial", tracial);
    add_defect(r.items, "regular_trace_is_scaled_trace", reg);
  }

  void matrixalg(int, CheckRecord& r) {
    int checked = 0;
    for (int len = 2; len <= 6; len += 2) {
      if (ipow(n(), len) > cfg_.max_dim) break;
      Chain<F> c(hp_, 1, len);
      auto z = commutant_basis(c, chain_generators(c, 1, len));
      bool ok = z.size() == 1 && contains_all(z, {c.unit()}) && c.dim() == ipow(n(), len);
      r.items.add("center_trivial_length_" + std::to_string(len), ok, 0, 1);
      r.dims.push_back({"center_dim_length_" + std::to_string(len), static_cast<long long>(z.size())});
      ++checked;
    }
    if (checked == 0) budget_.need(ipow(n(), 2), "matrixalg");
  }

  void commutants(int, CheckRecord& r) {
    int checked = 0, max_len = 0;
    bool tail_ok = true, full_ok = true, back_ok = true;
    for (int a = -1; a <= 0; ++a)
      for (int b = a + 2; b - a + 1 <= 6; ++b) {
        if (ipow(n(), b - a + 1) > std::min<size_t>(cfg_.max_dim, 1024)) continue;
        Chain<F> c(hp_, a, b);
        max_len = std::max(max_len, b - a + 1);
        for (int p = a; p + 2 <= b; ++p) {
          auto gens = chain_generators(c, a, p);
          auto tail = commutant_basis(c, gens, subchain_span(c, p + 1, b).basis);
          tail_ok = tail_ok && same_span(tail, subchain_span(c, p + 2, b));
          auto full = commutant_basis(c, gens);
          full_ok = full_ok && full.size() == ipow(n(), b - p);
          if ((b - a + 1) % 2 == 0) back_ok = back_ok && same_span(commutant_basis(c, full.basis), subchain_span(c, a, p));
          ++checked;
        }
      }
    if (checked == 0) budget_.need(ipow(n(), 3), "commutants-lemma");
    r.items.add("commutant_in_tail_is_shifted_subchain", tail_ok, 0, checked);
    r.items.add("full_commutant_dimension", full_ok, 0, checked);
    r.items.add("double_commutant_even_windows", back_ok, 0, checked);
    r.dims = {{"windows", checked}, {"max_window_length", max_len}};
  }

  void dbl(int, CheckRecord& r) {
    auto D = drinfeld_double(*hp_);
    merge(r.items, verify_kac_axioms(D), "");
    r.dims = {{"dim", D.n}};
  }

  void dbl_dual(int, CheckRecord& r) {
    auto D = drinfeld_double(*hp_);
    auto Dd = double_dual(*hp_);
    merge(r.items, verify_kac_axioms(Dd), "");
    merge(r.items, pairing_check(D, Dd), "pairing.");
    r.dims = {{"dim", Dd.n}};
  }

  void double_dual_coords(int, CheckRecord& r) {
    auto K = double_dual_hstar_basis(*hp_);
    merge(r.items, verify_kac_axioms(K), "");
    merge(r.items, compare_structures(K, transport(double_dual(*hp_), id_tensor_fourier_inv(*hp_))), "transport.");
    r.dims = {{"dim", K.n}};
  }

  void nu_iso(int, CheckRecord& r) {
    auto q = star_q2_structure(hp_);
    merge(r.items, q.embedding, "embedding.");
    merge(r.items, verify_kac_axioms(q.K), "star_q2.");
    merge(r.items, nu_iso_check(hp_), "nu.");
    r.dims = {{"dim", q.K.n}};
    r.note = "star of *Q2 uses S on the third f leg";
  }

  void s_space(int, CheckRecord& r) {
    auto s = solve_qspace(hp_, s_geometry());
    auto nu = span_of(nu_elements(*hp_), s.X->dim());
    r.items.add("dimension_is_dim_h_squared", s.dim() == ipow(n(), 2), 0, 1);
    r.items.add("equals_parametrized_span", nu.size() == ipow(n(), 2) && same_span(s.space, nu), 0, 1);
    add_defect(r.items, "commutation_residual", s.residual);
    r.dims = {{"dim_s", static_cast<long long>(s.dim())}};
  }

  void q_dims(int m, CheckRecord& r) {
    budget_.need(ambient_dim(q_geometry(m, 2), n()), "Q^m_2");
    auto q1 = solve_qspace(hp_, q_geometry(m, 1));
    auto q2 = solve_qspace(hp_, q_geometry(m, 2));
    r.dims = {{"dim_q1", static_cast<long long>(q1.dim())}, {"dim_q2", static_cast<long long>(q2.dim())}};
    r.items.add("dim_q1", q1.dim() == ipow(n(), m - 2), 0, 1);
    r.items.add("dim_q2", q2.dim() == ipow(n(), 2 * (m - 1)), 0, 1);
    r.items.add("q2_parametrized_span", same_span(q2.space, span_of(q2_parametrized(*hp_, m), q2.X->dim())), 0, 1);
    add_defect(r.items, "q1_residual", q1.residual);
    add_defect(r.items, "q2_residual", q2.residual);
    auto g3 = q_geometry(m, 3);
    if (ambient_dim(g3, n()) <= cfg_.max_dim) {
      auto q3 = solve_qspace(hp_, g3);
      r.dims.push_back({"dim_q3", static_cast<long long>(q3.dim())});
      add_defect(r.items, "q3_residual", q3.residual);
    } else {
      r.note = "Q^m_3 over budget";
    }
  }

  void alpha(int m, CheckRecord& r) {
    int done = 0;
    for (int k = 1; k <= 3; ++k) {
      auto g = q_geometry(m, k);
      if (ambient_dim(g, n()) > cfg_.max_dim) break;
      AdjointIntegral<F> P(hp_, g);
      auto img = adjoint_integral_image(P);
      auto q = solve_qspace(hp_, g);
      r.items.add("fixed_space_equals_q" + std::to_string(k), same_span(img, q.space), 0, 1);
      r.dims.push_back({"dim_q" + std::to_string(k), static_cast<long long>(q.dim())});
      ++done;
    }
    if (done == 0) budget_.need(ambient_dim(q_geometry(m, 1), n()), "alpha fixed space");
    if (done < 3) r.note = "levels above " + std::to_string(done) + " over budget";
  }

  void cond_exp(int, CheckRecord& r) {
    for (auto [l, s, p] : {std::tuple{1, 0, 1}, std::tuple{1, 0, 2}}) {
      PsiEmbedding<F> psi(hp_, l, s, p);
      budget_.need(psi.target().dim(), "conditional expectation target");
      const auto& src = psi.source();
      std::vector<SVec<F>> img;
      for (uint32_t I = 0; I < src.dim(); ++I) img.push_back(psi(unit_vec<F>(I)));
      TraceExpectation<F> E(psi.target(), img);
      Defect<F> d;
      for (uint32_t Z = 0; Z < psi.target().dim(); ++Z)
        d.svec(to_sparse(E.coords(unit_vec<F>(Z))), psi.closed_form_expectation(unit_vec<F>(Z)));
      add_defect(r.items, "closed_form_equals_trace_projection_" + std::to_string(l) + std::to_string(s) +
                              std::to_string(p),
                 d);
    }
  }

  void basic(int, CheckRecord& r) {
    auto js = psi_triple_jones_search(hp_);
    r.items.add("integral_slot_is_jones_projection", !js.passing_slots.empty(), 0,
                static_cast<long>(js.passing_slots.size() + js.failures.size()));
    std::string slots;
    for (int s : js.passing_slots) slots += (slots.empty() ? "" : ",") + std::to_string(s);
    r.values = {{"passing_slots", slots}};
  }

  void markov(int m, CheckRecord& r) {
    budget_.need(ambient_dim(q_geometry(m, 2), n()), "Q^m_2");
    auto q1 = solve_qspace(hp_, q_geometry(m, 1));
    auto q2 = solve_qspace(hp_, q_geometry(m, 2));
    std::vector<SVec<F>> A;
    for (const auto& v : q1.space.basis) A.push_back(q2.X->embed_from(*q1.X, v));
    GnsBasic<F> g(*q2.X, A, q2.space.basis);
    F mod = scalar_from_int<F>(static_cast<long>(ipow(n(), m)));
    merge(r.items, g.relations(), "jones.");
    Defect<F> mm;
    mm.scalar(g.measured_modulus(), mod);
    add_defect(r.items, "measured_modulus_is_delta_2m", mm);
    add_defect(r.items, "markov_identity", g.markov(mod));
    r.dims = {{"dim_q1", static_cast<long long>(q1.dim())}, {"dim_q2", static_cast<long long>(q2.dim())},
              {"dim_basic", static_cast<long long>(g.dim())}};
  }

  void depth_two(int m, CheckRecord& r) {
    auto d = depth_two_check(hp_, m, cfg_.max_dim, cfg_.seed);
    r.items.add("relations", d.relations_ok, d.residual, 1);
    r.items.add("depth_one_ruled_out", d.depth_one_ruled_out, 0, 1);
    r.items.add("basic_construction_dim_is_dim_q3", d.dims_match, 0, 1);
    r.items.add("bratteli_data", d.bratteli_ok, d.residual, 1);
    r.items.add("block_sizes_match", d.sizes_match, 0, 1);
    r.items.add("inclusion_matrices_match", d.inclusion_match, 0, 1);
    r.items.add("markov", d.markov_ok, 0, 1);
    r.dims = {{"dim_q1", static_cast<long long>(d.dim_q1)},
              {"dim_q2", static_cast<long long>(d.dim_q2)},
              {"dim_q3", static_cast<long long>(d.dim_q3)},
              {"dim_basic", static_cast<long long>(d.dim_c)}};
    r.values = {{"modulus", d.modulus}};
    r.note = d.note;
  }

  void q12(int m, CheckRecord& r) {
    auto g = q12_geometry(m);
    budget_.need(ambient_dim(g, n()), "Q^m_{1,2}");
    auto q = solve_qspace(hp_, g);
    r.items.add("dimension", q.dim() == ipow(n(), m - 2), 0, 1);
    r.items.add("is_right_half_subchain", same_span(q.space, subchain_span(*q.X, g.x_lo + 1, g.x_hi)), 0, 1);
    r.dims = {{"dim", static_cast<long long>(q.dim())}};
  }

  void omega(int m, CheckRecord& r) {
    budget_.need(ambient_dim(q_geometry(m, 2), n()), "Q^m_2");
    auto o = omega_elements(hp_, m);
    r.items = o.checks;
    if constexpr (Scalar<F>::exact) {
      r.values = {{"z_r_scalar", o.scale.str()}};
    } else {
      std::ostringstream s;
      s << o.scale.real();
      r.values = {{"z_r_scalar", s.str()}};
    }
  }

  void separability(int m, CheckRecord& r) {
    Chain<F> A(hp_, 1, m - 2);
    budget_.need(A.dim() * A.dim(), "separability element");
    auto s = separability_element(A);
    r.items = s.checks;
    r.dims = {{"dim_algebra", static_cast<long long>(A.dim())}, {"terms", static_cast<long long>(s.terms.size())}};
  }

  const WeakKac<F>& km(int m) {
    budget_.need(ambient_dim(q_geometry(m, 2), n()), "K_m ambient chain");
    auto it = km_.find(m);
    if (it == km_.end()) it = km_.emplace(m, std::make_unique<WeakKac<F>>(hp_, m)).first;
    return *it->second;
  }

  WeakCheckOptions opts() const { return {cfg_.exhaustive_limit, cfg_.samples, cfg_.seed}; }

  void km_axioms(int m, CheckRecord& r) {
    const auto& K = km(m);
    r.items = verify_weak_hopf_axioms(K, opts());
    r.dims = {{"dim", static_cast<long long>(K.dim())}};
    r.values = {{"mode", K.dim() <= cfg_.exhaustive_limit ? "exhaustive" : "sampled"}};
    r.note = "star transported from the chain through psi";
  }

  void counit(int m, CheckRecord& r) {
    try {
      const auto& K = km(m);
      r.items.add("unique_solution", K.counit_info().unique, 0, static_cast<long>(K.counit_info().equations));
      r.items.add("proportional_to_f_of_h", counit_factor_check(K), 0, 1);
      r.dims = {{"dim", static_cast<long long>(K.dim())}, {"rank", static_cast<long long>(K.counit_info().rank)}};
      r.note = "counit solved from the counit axioms";
    } catch (const CounitNotUnique& e) {
      r.items.add("unique_solution", false, 0, 1);
      r.note = e.what();
    } catch (const CounitInconsistent& e) {
      r.items.add("unique_solution", false, 0, 1);
      r.note = e.what();
    }
  }

  void psi_iso(int m, CheckRecord& r) {
    const auto& K = km(m);
    r.items = psi_iso_check(K, opts());
    r.dims = {{"dim", static_cast<long long>(K.dim())}, {"ambient_dim", static_cast<long long>(K.ambient().dim())}};
  }

  void comult(int m, CheckRecord& r) {
    const auto& K = km(m);
    r.items = special_comult_check(K, opts());
    r.dims = {{"dim", static_cast<long long>(K.dim())}};
  }

  // Overrides the antipode of a weak Hopf algebra.
  class SwappedAntipode : public WeakHopfAlgebra<F> {
   public:
    explicit SwappedAntipode(const WeakHopfAlgebra<F>& W) : W_(W) {
      for (uint32_t x = 0; x < W.dim(); ++x) S_.push_back(W.antipodeb(x));
      std::swap(S_[0], S_[1]);
    }
    size_t dim() const override { return W_.dim(); }
    const SVec<F>& mulb(uint32_t i, uint32_t j) const override { return W_.mulb(i, j); }
    const SVec<F>& comulb(uint32_t i) const override { return W_.comulb(i); }
    const SVec<F>& antipodeb(uint32_t i) const override { return S_[i]; }
    const SVec<F>& starb(uint32_t i) const override { return W_.starb(i); }
    const SVec<F>& unit() const override { return W_.unit(); }
    const Vec<F>& counit() const override { return W_.counit(); }

   private:
    const WeakHopfAlgebra<F>& W_;
    std::vector<SVec<F>> S_;
  };

  void involutive(int m, CheckRecord& r) {
    const auto& K = km(m);
    r.items.add("antipode_squared_is_identity", antipode_involutive(K), 0, static_cast<long>(K.dim()));
    r.items.add("negative_control_detected", !antipode_involutive(SwappedAntipode(K)), 0, 1);
  }

  std::shared_ptr<const HopfPair<F>> hp_;
  const CampaignConfig& cfg_;
  Budget budget_;
  std::map<int, std::unique_ptr<WeakKac<F>>> km_;
};

KacAlgebra<Cyclo> load_any(const std::string& spec) {
  auto names = builtin_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return builtin_algebra(spec);
  if (std::filesystem::exists(spec)) {
    try {
      return load_algebra(spec);
    } catch (const std::exception& e) {
      throw ConfigError(spec + ": " + e.what());
    }
  }
  throw ConfigError("unknown algebra: " + spec);
}

template <class F>
void run_all(const CampaignConfig& cfg, const std::string& alg, std::shared_ptr<const HopfPair<F>> hp,
             std::vector<CheckRecord>& out) {
  Runner<F> runner(hp, cfg);
  for (const auto& id : cfg.checks) {
    std::vector<int> ms = check_uses_m(id) ? cfg.ms : std::vector<int>{0};
    for (int m : ms) {
      CheckRecord rec;
      rec.id = id;
      rec.anchor = check_anchor(id);
      rec.algebra = alg;
      rec.m = m;
      try {
        runner.run(id, m, rec);
        rec.status = rec.items.all_pass() && !rec.items.items.empty() ? "pass" : "fail";
      } catch (const DimensionBudgetExceeded& e) {
        rec.status = "skipped-budget";
        rec.note = e.what();
      } catch (const std::exception& e) {
        rec.status = "fail";
        rec.note = std::string("error: ") + e.what();
      }
      for (const auto& i : rec.items.items) rec.residual = std::max(rec.residual, i.residual);
      out.push_back(std::move(rec));
    }
  }
}

std::string fmt_double(double v) {
  std::ostringstream s;
  s.precision(6);
  s << std::scientific << v;
  return s.str();
}

}  // namespace

size_t Report::count(const std::string& status) const {
  return static_cast<size_t>(std::count_if(records.begin(), records.end(),
                                           [&](const CheckRecord& r) { return r.status == status; }));
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& c : infos()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

bool check_uses_m(const std::string& id) { return info(id).uses_m; }
const std::string& check_anchor(const std::string& id) { return info(id).anchor; }

CampaignConfig normalize(CampaignConfig cfg) {
  std::vector<std::string> checks;
  for (const auto& c : cfg.checks) {
    if (c == "all") {
      checks = check_ids();
      break;
    }
    info(c);
    checks.push_back(c);
  }
  // Report order follows the canonical check order.
  std::vector<std::string> ordered;
  for (const auto& id : check_ids())
    if (std::find(checks.begin(), checks.end(), id) != checks.end()) ordered.push_back(id);
  cfg.checks = ordered;
  bool needs_m = std::any_of(cfg.checks.begin(), cfg.checks.end(), check_uses_m);
  for (int m : cfg.ms)
    if (needs_m && m <= 2) throw ConfigError("m must be > 2 for Q and K campaigns");
  std::sort(cfg.ms.begin(), cfg.ms.end());
  cfg.ms.erase(std::unique(cfg.ms.begin(), cfg.ms.end()), cfg.ms.end());
  if (cfg.backend != "exact" && cfg.backend != "float") throw ConfigError("backend must be exact or float");
  if (!(cfg.tolerance > 0)) throw ConfigError("tolerance must be positive");
  if (cfg.algebras.empty()) throw ConfigError("no algebra given");
  for (const auto& a : cfg.algebras) load_any(a);
  return cfg;
}

Report run_campaign(const CampaignConfig& in) {
  Report rep;
  rep.config = normalize(in);
  const auto& cfg = rep.config;
  float_tolerance().eps = cfg.tolerance;
  for (const auto& alg : cfg.algebras) {
    auto H = load_any(alg);
    if (cfg.backend == "exact")
      run_all<Cyclo>(cfg, alg, make_pair(H), rep.records);
    else
      run_all<cplx>(cfg, alg, make_pair(to_float(H)), rep.records);
  }
  return rep;
}

std::string format_report(const Report& r, const std::string& format) {
  const auto& c = r.config;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = Report::schema_version;
    j["config"] = {{"algebras", c.algebras}, {"m", c.ms},           {"checks", c.checks},
                   {"backend", c.backend},   {"tolerance", c.tolerance}, {"seed", c.seed},
                   {"max_dim", c.max_dim},   {"exhaustive_limit", c.exhaustive_limit},
                   {"samples", c.samples}};
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) {
      nlohmann::ordered_json o;
      o["check"] = rec.id;
      o["anchor"] = rec.anchor;
      o["algebra"] = rec.algebra;
      if (rec.m > 0)
        o["m"] = rec.m;
      else
        o["m"] = nullptr;
      o["status"] = rec.status;
      o["dims"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : rec.dims) o["dims"][k] = v;
      o["values"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : rec.values) o["values"][k] = v;
      o["residual"] = fmt_double(rec.residual);
      o["items"] = nlohmann::ordered_json::array();
      for (const auto& i : rec.items.items)
        o["items"].push_back({{"name", i.name}, {"pass", i.pass}, {"residual", fmt_double(i.residual)}, {"checked", i.checked}});
      o["note"] = rec.note;
      j["records"].push_back(o);
    }
    j["summary"] = {{"records", r.records.size()},
                    {"pass", r.count("pass")},
                    {"fail", r.count("fail")},
                    {"skipped-budget", r.count("skipped-budget")}};
    return j.dump(2) + "\n";
  }
  if (format == "text") {
    std::ostringstream s;
    s << "schema_version: " << Report::schema_version << "\n";
    s << "backend: " << c.backend << "  seed: " << c.seed << "  max_dim: " << c.max_dim << "\n";
    for (const auto& rec : r.records) {
      s << rec.status << "  " << rec.id << "  " << rec.algebra;
      if (rec.m > 0) s << "  m=" << rec.m;
      s << "  [" << rec.anchor << "]";
      for (const auto& [k, v] : rec.dims) s << "  " << k << "=" << v;
      for (const auto& [k, v] : rec.values) s << "  " << k << "=" << v;
      s << "  residual=" << fmt_double(rec.residual);
      if (rec.status != "pass") {
        auto f = rec.items.failures();
        if (!f.empty()) s << "  failed: " << f;
        if (!rec.note.empty()) s << "  note: " << rec.note;
      }
      s << "\n";
    }
    s << "summary: " << r.count("pass") << " pass, " << r.count("fail") << " fail, " << r.count("skipped-budget")
      << " skipped-budget\n";
    return s.str();
  }
  throw ConfigError("format must be json or text");
}

void emit_report(const Report& r, const std::string& format, const std::string& path) {
  std::string text = format_report(r, format);
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  f << text;
  if (!f) throw IoError("cannot write " + path);
}

}  // namespace kac
