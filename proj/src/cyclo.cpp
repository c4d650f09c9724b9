#include "kac/cyclo.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kac {

namespace {

struct FieldData {
  int M = 1;
  int phi = 1;
  std::vector<long> poly;
  // red[e] = coordinates of z^e in the power basis, e in [0, M).
  std::vector<std::vector<long>> red;
};

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
  std::vector<long> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    long c = num[i] / den[dd];
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

std::unique_ptr<FieldData> build_field(int M) {
  auto f = std::make_unique<FieldData>();
  f->M = M;
  f->poly = cyclotomic_polynomial(M);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  f->red.assign(M, std::vector<long>(f->phi, 0));
  std::vector<long> cur(f->phi, 0);
  cur[0] = 1;
  if (f->phi == 0) return f;
  for (int e = 0; e < M; ++e) {
    f->red[e] = cur;
    long top = cur[f->phi - 1];
    std::vector<long> nxt(f->phi, 0);
    for (int j = f->phi - 1; j >= 1; --j) nxt[j] = cur[j - 1];
    for (int j = 0; j < f->phi; ++j) nxt[j] -= top * f->poly[j];
    cur = nxt;
  }
  return f;
}

const FieldData& field(int M) {
  thread_local int last_m = 0;
  thread_local const FieldData* last = nullptr;
  if (M == last_m) return *last;
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(M);
  if (it == cache.end()) it = cache.emplace(M, build_field(M)).first;
  last_m = M;
  last = it->second.get();
  return *last;
}

std::vector<mpq_class> reduce_exponents(const FieldData& f, const std::vector<mpq_class>& byexp) {
  std::vector<mpq_class> out(f.phi);
  for (int e = 0; e < f.M; ++e) {
    if (byexp[e] == 0) continue;
    const auto& r = f.red[e];
    for (int j = 0; j < f.phi; ++j)
      if (r[j] != 0) out[j] += byexp[e] * r[j];
  }
  return out;
}

}  // namespace

int euler_phi(int M) {
  int r = M, m = M;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<long>& cyclotomic_polynomial(int M) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> num(M + 1, 0);
  num[0] = -1;
  num[M] = 1;
  for (int d = 1; d < M; ++d)
    if (M % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(M, num).first->second;
}

Cyclo Cyclo::from_coeffs(int M, std::vector<mpq_class> c) {
  Cyclo r;
  if (M == 1) {
    r.q_ = c.empty() ? mpq_class(0) : c[0];
    return r;
  }
  r.M_ = M;
  r.c_ = std::move(c);
  r.normalize();
  return r;
}

void Cyclo::normalize() {
  if (M_ == 1) return;
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return;
  q_ = c_.empty() ? mpq_class(0) : c_[0];
  c_.clear();
  M_ = 1;
}

Cyclo Cyclo::zeta(int M, long e) {
  if (M <= 0) throw std::invalid_argument("conductor must be positive");
  const FieldData& f = field(M);
  long ee = ((e % M) + M) % M;
  std::vector<mpq_class> c(f.phi);
  for (int j = 0; j < f.phi; ++j) c[j] = f.red[ee][j];
  return from_coeffs(M, std::move(c));
}

std::vector<mpq_class> Cyclo::coeffs() const {
  if (M_ == 1) return {q_};
  return c_;
}

std::vector<mpq_class> Cyclo::coeffs_at(int L) const {
  if (L == M_) return coeffs();
  if (L % M_ != 0) throw std::invalid_argument("conductor does not divide target");
  const FieldData& f = field(L);
  std::vector<mpq_class> out(f.phi);
  if (M_ == 1) {
    out[0] = q_;
    return out;
  }
  int step = L / M_;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& r = f.red[(i * step) % L];
    for (int j = 0; j < f.phi; ++j)
      if (r[j] != 0) out[j] += c_[i] * r[j];
  }
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (M_ == 1 && o.M_ == 1) {
    q_ += o.q_;
    return *this;
  }
  int L = std::lcm(M_, o.M_);
  auto a = coeffs_at(L);
  auto b = o.coeffs_at(L);
  for (size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  *this = from_coeffs(L, std::move(a));
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  r.q_ = -r.q_;
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (M_ == 1 && o.M_ == 1) {
    q_ *= o.q_;
    return *this;
  }
  if (M_ == 1 || o.M_ == 1) {
    const mpq_class s = M_ == 1 ? q_ : o.q_;
    Cyclo r = M_ == 1 ? o : *this;
    if (s == 0) {
      *this = Cyclo();
      return *this;
    }
    for (auto& v : r.c_) v *= s;
    *this = std::move(r);
    return *this;
  }
  int L = std::lcm(M_, o.M_);
  const FieldData& f = field(L);
  auto a = coeffs_at(L);
  auto b = o.coeffs_at(L);
  std::vector<mpq_class> byexp(L);
  for (int i = 0; i < f.phi; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f.phi; ++j)
      if (b[j] != 0) byexp[(i + j) % L] += a[i] * b[j];
  }
  *this = from_coeffs(L, reduce_exponents(f, byexp));
  return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.M_ == 1 && b.M_ == 1) return a.q_ == b.q_;
  int L = std::lcm(a.M_, b.M_);
  return a.coeffs_at(L) == b.coeffs_at(L);
}

Cyclo Cyclo::conj() const {
  if (M_ == 1) return *this;
  const FieldData& f = field(M_);
  std::vector<mpq_class> byexp(M_);
  for (size_t i = 0; i < c_.size(); ++i) byexp[(M_ - static_cast<int>(i)) % M_] += c_[i];
  return from_coeffs(M_, reduce_exponents(f, byexp));
}

Cyclo Cyclo::inverse() const {
  if (M_ == 1) {
    if (q_ == 0) throw std::domain_error("division by zero");
    return Cyclo(mpq_class(1) / q_);
  }
  const FieldData& f = field(M_);
  int n = f.phi;
  // Column j of A is the reduced product this * z^j.
  std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n + 1));
  for (int j = 0; j < n; ++j) {
    std::vector<mpq_class> byexp(M_);
    for (int i = 0; i < n; ++i)
      if (c_[i] != 0) byexp[(i + j) % M_] += c_[i];
    auto col = reduce_exponents(f, byexp);
    for (int i = 0; i < n; ++i) A[i][j] = col[i];
  }
  A[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("division by zero");
    std::swap(A[p], A[c]);
    mpq_class inv = 1 / A[c][c];
    for (int k = c; k <= n; ++k) A[c][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      mpq_class s = A[r][c];
      for (int k = c; k <= n; ++k) A[r][k] -= s * A[c][k];
    }
  }
  std::vector<mpq_class> x(n);
  for (int i = 0; i < n; ++i) x[i] = A[i][n];
  return from_coeffs(M_, std::move(x));
}

cplx Cyclo::to_complex() const {
  if (M_ == 1) return {q_.get_d(), 0.0};
  cplx s = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double t = 2.0 * M_PI * static_cast<double>(i) / M_;
    s += c_[i].get_d() * cplx(std::cos(t), std::sin(t));
  }
  return s;
}

std::string Cyclo::str() const {
  if (M_ == 1) return q_.get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str() << "*z^" << i;
    first = false;
  }
  return os.str();
}

Cyclo Cyclo::parse(const std::string& text, int conductor) {
  Cyclo r;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos + 1);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (!term.empty() && term[0] == '+') term = term.substr(1);
    pos = next == std::string::npos ? s.size() : next;
    if (term.empty()) throw std::invalid_argument("malformed scalar literal: " + text);
    size_t star = term.find('*');
    std::string coef = star == std::string::npos ? term : term.substr(0, star);
    long e = 0;
    if (star != std::string::npos) {
      std::string z = term.substr(star + 1);
      if (z.size() < 3 || z[0] != 'z' || z[1] != '^')
        throw std::invalid_argument("malformed power of z: " + term);
      e = std::stol(z.substr(2));
    }
    mpq_class q;
    if (q.set_str(coef, 10) != 0) throw std::invalid_argument("malformed rational: " + coef);
    q.canonicalize();
    r += Cyclo(q) * zeta(conductor, e);
  }
  return r;
}

Cyclo sqrt_integer_in_cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("sqrt_integer_in_cyclotomic needs n >= 1");
  long sq = 1, rest = n;
  Cyclo r(1);
  for (long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      sq *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      Cyclo g;
      if (p == 2) {
        g = Cyclo::zeta(8, 1) + Cyclo::zeta(8, -1);
      } else {
        for (long k = 0; k < p; ++k) g += Cyclo::zeta(static_cast<int>(p), k * k);
        if (p % 4 == 3) g *= -Cyclo::zeta(4, 1);
      }
      r *= g;
    }
  }
  if (rest > 1) {
    long p = rest;
    Cyclo g;
    if (p == 2) {
      g = Cyclo::zeta(8, 1) + Cyclo::zeta(8, -1);
    } else {
      for (long k = 0; k < p; ++k) g += Cyclo::zeta(static_cast<int>(p), k * k);
      if (p % 4 == 3) g *= -Cyclo::zeta(4, 1);
    }
    r *= g;
  }
  r *= Cyclo(sq);
  if (r.to_complex().real() < 0) r = -r;
  if (r * r != Cyclo(n)) throw std::logic_error("square root construction failed");
  return r;
}

}  // namespace kac
