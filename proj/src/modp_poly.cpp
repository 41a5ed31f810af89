#include "grhgen/modp_poly.hpp"

#include <stdexcept>

namespace grhgen::modp {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

inline u64 addm(u64 a, u64 b, u64 p) {
  u64 s = a + b;  // p < 2^62 so no overflow
  return s >= p ? s - p : s;
}
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }  // p prime

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }  // -1 for zero

Poly x_poly() { return Poly{0, 1}; }

// Quotient a / b for an exact divisor b.
Poly quotient(const Poly& a, const Poly& b, u64 p) {
  Poly q(deg(a) - deg(b) + 1, 0);
  Poly r = a;
  u64 inv_lb = invm(b.back(), p);
  while (deg(r) >= deg(b)) {
    u64 c = mulm(r.back(), inv_lb, p);
    int shift = deg(r) - deg(b);
    q[shift] = c;
    for (int i = 0; i <= deg(b); ++i)
      r[i + shift] = subm(r[i + shift], mulm(c, b[i], p), p);
    trim(r);
  }
  if (!r.empty()) throw std::logic_error("modp quotient: division not exact");
  trim(q);
  return q;
}

// a^p mod m
Poly pth_power_mod(const Poly& a, const Poly& m, u64 p) {
  Poly base = a;
  Poly acc{1};
  u64 e = p;
  while (e) {
    if (e & 1) acc = rem(mul(acc, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

}  // namespace

Poly reduce(const IntPolynomial& poly, u64 q) {
  if (q < 2 || q >= kMaxPrime) throw std::domain_error("modulus out of machine-word range");
  Poly r(poly.coeffs.size());
  for (size_t i = 0; i < poly.coeffs.size(); ++i) {
    mpz_class m = poly.coeffs[i] % static_cast<unsigned long>(q);
    if (m < 0) m += static_cast<unsigned long>(q);
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

Poly derivative(const Poly& a, u64 p) {
  Poly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(mulm(a[i], i % p, p));
  trim(d);
  return d;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

Poly rem(const Poly& a_in, const Poly& b, u64 p) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  Poly a = a_in;
  u64 inv_lb = invm(b.back(), p);
  while (deg(a) >= deg(b)) {
    u64 c = mulm(a.back(), inv_lb, p);
    int shift = deg(a) - deg(b);
    for (int i = 0; i <= deg(b); ++i)
      a[i + shift] = subm(a[i + shift], mulm(c, b[i], p), p);
    trim(a);
  }
  return a;
}

Poly make_monic(Poly a, u64 p) {
  if (a.empty() || a.back() == 1) return a;
  u64 inv = invm(a.back(), p);
  for (auto& c : a) c = mulm(c, inv, p);
  return a;
}

Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

std::vector<std::pair<int, int>> distinct_degree_counts(Poly s, u64 p) {
  s = make_monic(std::move(s), p);
  std::vector<std::pair<int, int>> out;
  Poly xp = rem(x_poly(), s, p);  // x^(p^d) mod s, running
  int d = 0;
  while (deg(s) > 0) {
    ++d;
    if (2 * d > deg(s)) {
      // all remaining factors have degree >= d, so s is irreducible
      out.emplace_back(deg(s), 1);
      break;
    }
    xp = pth_power_mod(xp, s, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = subm(diff[1], 1, p);  // x^(p^d) - x
    trim(diff);
    Poly g = gcd(s, diff, p);
    if (deg(g) > 0) {
      out.emplace_back(d, deg(g) / d);
      s = quotient(s, g, p);
      xp = rem(xp, s, p);
    }
  }
  return out;
}

Poly radical(Poly a, u64 p) {
  a = make_monic(std::move(a), p);
  if (deg(a) <= 0) return Poly{1};
  Poly d = derivative(a, p);
  if (d.empty()) {
    // a = g(x^p); in F_p the coefficients are their own p-th roots
    Poly g;
    for (size_t i = 0; i < a.size(); i += static_cast<size_t>(p)) g.push_back(a[i]);
    return radical(std::move(g), p);
  }
  Poly gc = gcd(a, d, p);
  if (deg(gc) == 0) return a;  // squarefree
  // a/gc carries, once each, the factors whose multiplicity p does not divide
  Poly w = quotient(a, gc, p);
  Poly rest = radical(gc, p);
  Poly overlap = gcd(w, rest, p);
  if (deg(overlap) > 0) rest = quotient(rest, overlap, p);
  return mul(w, rest, p);
}

bool is_irreducible(const Poly& a, u64 p) {
  if (deg(a) <= 0) return false;
  if (deg(a) == 1) return true;
  Poly d = derivative(a, p);
  if (d.empty()) return false;  // p-th power
  if (deg(gcd(a, d, p)) > 0) return false;
  auto counts = distinct_degree_counts(a, p);
  return counts.size() == 1 && counts[0].first == deg(a) && counts[0].second == 1;
}

bool dedekind_index_divisor(const IntPolynomial& P, u64 p) {
  Poly pbar = reduce(P, p);
  Poly g = radical(pbar, p);
  if (deg(g) == deg(pbar)) return false;  // squarefree mod p: index prime to p
  Poly h = quotient(pbar, g, p);
  // F = (lift(g)*lift(h) - P)/p; p | index  iff  gcd(F mod p, g, h) != 1
  std::vector<mpz_class> gl(g.begin(), g.end()), hl(h.begin(), h.end());
  std::vector<mpz_class> prod(gl.size() + hl.size() - 1, mpz_class(0));
  for (size_t i = 0; i < gl.size(); ++i)
    for (size_t j = 0; j < hl.size(); ++j) prod[i + j] += gl[i] * hl[j];
  if (prod.size() < P.coeffs.size()) prod.resize(P.coeffs.size(), mpz_class(0));
  for (size_t i = 0; i < P.coeffs.size(); ++i) prod[i] -= P.coeffs[i];
  Poly fbar(prod.size());
  for (size_t i = 0; i < prod.size(); ++i) {
    mpz_class q;
    mpz_class rr;
    mpz_fdiv_qr_ui(q.get_mpz_t(), rr.get_mpz_t(), prod[i].get_mpz_t(), static_cast<unsigned long>(p));
    if (rr != 0) throw std::logic_error("dedekind: lift difference not divisible by p");
    mpz_class m = q % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    fbar[i] = m.get_ui();
  }
  trim(fbar);
  Poly d1 = gcd(fbar, g, p);
  Poly d2 = gcd(d1, h, p);
  return deg(d2) > 0;
}

}  // namespace grhgen::modp
