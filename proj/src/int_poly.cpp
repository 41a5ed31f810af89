#include "grhgen/int_poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace grhgen {

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, constant first, no top zeros

void normalize(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }  // -1 for zero

ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  normalize(d);
  return d;
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // 0 for the zero polynomial
}

void divide_exact(ZPoly& p, const mpz_class& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Pseudo-remainder: rem of lc(b)^k * a by b with k = deg a - deg b + 1,
// all divisions exact over Z.  Requires deg a >= deg b >= 0.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b, int k) {
  const mpz_class& lb = b.back();
  int e = k;
  while (deg(a) >= deg(b)) {
    int shift = deg(a) - deg(b);
    mpz_class top = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= deg(b); ++i) a[i + shift] -= top * b[i];
    normalize(a);
    --e;
    if (e < 0) throw std::logic_error("pseudo_rem: multiplier exhausted");
  }
  // Scale by the unused powers of lc(b) so the result equals lc(b)^k * a mod b.
  for (; e > 0; --e)
    for (auto& c : a) c *= lb;
  return a;
}

}  // namespace

mpz_class IntPolynomial::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial make_polynomial(std::vector<mpz_class> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 3)
    throw std::invalid_argument("polynomial degree must be at least 2");
  if (coeffs.back() != 1)
    throw std::invalid_argument("polynomial must be monic");
  return IntPolynomial{std::move(coeffs)};
}

IntPolynomial parse_polynomial(const std::string& text) {
  std::vector<mpz_class> coeffs;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) throw std::invalid_argument("empty coefficient in list");
    size_t e = tok.find_last_not_of(" \t\r\n");
    tok = tok.substr(b, e - b + 1);
    try {
      coeffs.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad integer coefficient: '" + tok + "'");
    }
  }
  if (coeffs.empty()) throw std::invalid_argument("no coefficients given");
  return make_polynomial(std::move(coeffs));
}

std::string coefficient_string(const IntPolynomial& p) {
  std::string s;
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) s += ',';
    s += p.coeffs[i].get_str();
  }
  return s;
}

// Subresultant PRS (Cohen, Alg. 3.3.7).  Exact over Z.
mpz_class resultant(const std::vector<mpz_class>& a_in, const std::vector<mpz_class>& b_in) {
  ZPoly a = a_in, b = b_in;
  normalize(a);
  normalize(b);
  if (a.empty() || b.empty()) return 0;
  if (deg(a) == 0 && deg(b) == 0) return 1;

  int sign = 1;
  if (deg(a) < deg(b)) {
    if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
    std::swap(a, b);
  }
  mpz_class ca = content(a), cb = content(b);
  divide_exact(a, ca);
  divide_exact(b, cb);
  mpz_class t;
  {
    mpz_class pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), ca.get_mpz_t(), deg(b));
    mpz_pow_ui(pb.get_mpz_t(), cb.get_mpz_t(), deg(a));
    t = pa * pb;
  }

  mpz_class g = 1, h = 1;
  while (deg(b) > 0) {
    int delta = deg(a) - deg(b);
    if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
    ZPoly r = pseudo_rem(a, b, delta + 1);
    a = std::move(b);
    if (r.empty()) return 0;  // common factor: resultant vanishes
    mpz_class div = g;
    for (int i = 0; i < delta; ++i) div *= h;
    divide_exact(r, div);
    b = std::move(r);
    g = a.back();
    if (delta > 0) {
      mpz_class gp;
      mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), delta);
      mpz_class hp;
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
    }
    // delta == 0 leaves h unchanged
  }
  // deg b == 0: finish with h <- lc(b)^{deg a} / h^{deg a - 1}
  mpz_class lb_pow;
  mpz_pow_ui(lb_pow.get_mpz_t(), b.back().get_mpz_t(), deg(a));
  mpz_class h_pow;
  mpz_pow_ui(h_pow.get_mpz_t(), h.get_mpz_t(), deg(a) > 0 ? deg(a) - 1 : 0);
  mpz_class res;
  if (deg(a) > 0)
    mpz_divexact(res.get_mpz_t(), lb_pow.get_mpz_t(), h_pow.get_mpz_t());
  else
    res = 1;
  return sign < 0 ? mpz_class(-t * res) : mpz_class(t * res);
}

mpz_class discriminant(const IntPolynomial& p) {
  int n = p.degree();
  mpz_class res = resultant(p.coeffs, derivative(p.coeffs));
  // leading coefficient is 1, so no lc division
  if (((n * (n - 1)) / 2) & 1) res = -res;
  return res;
}

int count_real_roots(const IntPolynomial& p) {
  // Sturm chain with even-power pseudo-remainders: multiplying each
  // dividend by lc^{even} keeps every sign pattern intact.
  std::vector<ZPoly> chain;
  chain.push_back(p.coeffs);
  chain.push_back(derivative(p.coeffs));
  normalize(chain[0]);
  while (deg(chain.back()) > 0) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain.back();
    int k = deg(a) - deg(b) + 1;
    if (k & 1) ++k;
    ZPoly r = pseudo_rem(a, b, k);
    if (r.empty()) break;  // gcd reached (non-squarefree input)
    for (auto& c : r) c = -c;
    mpz_class ct = content(r);
    if (ct > 1) divide_exact(r, ct);
    chain.push_back(std::move(r));
  }

  auto variations = [&](bool at_minus_inf) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
      if (q.empty()) continue;
      int s = sgn(q.back());
      if (at_minus_inf && (deg(q) & 1)) s = -s;
      if (prev != 0 && s != 0 && s != prev) ++var;
      if (s != 0) prev = s;
    }
    return var;
  };
  return variations(true) - variations(false);
}

double log_abs(const mpz_class& v) {
  if (v == 0) throw std::domain_error("log_abs of zero");
  mpz_class a = abs(v);
  size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  constexpr long double kLog2 = 0.6931471805599453094172321214581766L;
  if (bits <= 64) {
    unsigned long long head = mpz_get_ui(a.get_mpz_t());
    return static_cast<double>(logl(static_cast<long double>(head)));
  }
  mpz_class top = a >> (bits - 64);
  unsigned long long head = mpz_get_ui(top.get_mpz_t());
  long double r = logl(static_cast<long double>(head)) +
                  static_cast<long double>(bits - 64) * kLog2;
  return static_cast<double>(r);
}

}  // namespace grhgen
