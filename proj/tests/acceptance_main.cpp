// Acceptance suite: exercises every promised behavior end to end and
// prints one PASS/FAIL line per criterion.  Exit status is the number of
// failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grhgen/cli.hpp"
#include "grhgen/family.hpp"
#include "grhgen/quadform.hpp"
#include "grhgen/report_io.hpp"
#include "grhgen/search.hpp"
#include "oracles.hpp"

using grhgen::BoundReport;
using grhgen::IdealNormTable;
using grhgen::NumberField;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ----- criterion 1: the showcase cubic ---------------------------------
void criterion1() {
  auto start = std::chrono::steady_clock::now();
  NumberField field = oracles::showcase_cubic();
  IdealNormTable table(field);
  BoundReport rep = grhgen::bound(field, table);
  double elapsed = seconds_since(start);

  bool basic_ok = rep.t_basic == 19162;
  uint64_t count_basic = table.count_up_to(19162.0);
  uint64_t count_improved = table.count_up_to(11071.0);
  bool counts_ok = count_basic == 2148 && count_improved == 1343;
  bool improved_exact = rep.t_improved == 11071;
  bool improved_close =
      std::llabs(static_cast<long long>(rep.t_improved) - 11071LL) <= 0.03 * 11071;
  bool time_ok = elapsed <= 5.0;

  std::ostringstream detail;
  detail << "showcase cubic: t_basic=" << rep.t_basic << " (want 19162), counts "
         << count_basic << "/" << count_improved << " (want 2148/1343), t_improved="
         << rep.t_improved << (improved_exact ? " (exact)" : " (want 11071 +-3%)") << ", "
         << elapsed << " s";
  report(1, basic_ok && counts_ok && (improved_exact || improved_close) && time_ok,
         detail.str());
}

// ----- criteria 2 and 3 share the 30-field corpus ----------------------
struct CorpusRun {
  std::vector<NumberField> fields;
  std::vector<BoundReport> reports;
  double elapsed = 0.0;
};

CorpusRun run_corpus() {
  CorpusRun run;
  auto start = std::chrono::steady_clock::now();
  for (const auto& coeffs : oracles::corpus30()) {
    NumberField f = oracles::field_from_longs(coeffs);
    IdealNormTable t(f);
    run.reports.push_back(grhgen::bound(f, t));
    run.fields.push_back(std::move(f));
  }
  run.elapsed = seconds_since(start);
  return run;
}

void criterion2(const CorpusRun& run) {
  int confirmed = 0, ordered = 0;
  for (size_t i = 0; i < run.fields.size(); ++i) {
    const NumberField& f = run.fields[i];
    const BoundReport& rep = run.reports[i];

    // rebuild the witness matrix on a fresh table and eigen-decompose it
    IdealNormTable t(f);
    double need = std::exp(rep.witness.support()) + 1.0;
    t = grhgen::extend_table(std::move(t), need, f);
    grhgen::LdlState state;
    state.delta = rep.witness.delta;
    for (int n = 0; n < rep.witness.N; ++n) grhgen::assemble_row(state, f, t);
    std::vector<double> eigs =
        grhgen::jacobi_eigenvalues(state.ldl.dense(), rep.witness.N);
    if (!eigs.empty() && eigs.front() < 0.0) ++confirmed;

    bool t0_ok = static_cast<double>(rep.t_basic) <= std::ceil(rep.t0_cap);
    if (rep.t_improved <= rep.t_basic && t0_ok) ++ordered;
  }
  std::ostringstream detail;
  detail << confirmed << "/30 witnesses eigen-confirmed, " << ordered
         << "/30 satisfy t_improved <= t_basic <= ceil(t0), " << run.elapsed << " s";
  report(2, confirmed == 30 && ordered == 30 && run.elapsed <= 120.0, detail.str());
}

void criterion3(const CorpusRun& run) {
  double mean_ratio = 0.0;
  for (size_t i = 0; i < run.reports.size(); ++i)
    mean_ratio += static_cast<double>(run.reports[i].t_improved) /
                  static_cast<double>(run.reports[i].t_basic);
  mean_ratio /= static_cast<double>(run.reports.size());

  // truncated pure-quadratic family: scaled ratios must sit in the
  // figure's sanity band
  bool band_ok = true;
  double band_lo = 1e9, band_hi = -1e9;
  for (int a = 18; a <= 25; ++a) {
    NumberField f = grhgen::new_field(grhgen::pure_field_coeffs(2, -1, a));
    IdealNormTable t(f);
    BoundReport rep = grhgen::bound(f, t);
    double loglog = std::log(f.log_abs_disc);
    double scaled = static_cast<double>(rep.t_improved) /
                    static_cast<double>(rep.t_basic) * loglog * loglog;
    band_lo = std::min(band_lo, scaled);
    band_hi = std::max(band_hi, scaled);
    if (scaled < 8.0 || scaled > 22.0) band_ok = false;
  }
  std::ostringstream detail;
  detail << "mean ratio " << mean_ratio << " (< 0.7), quadratic family scaled range ["
         << band_lo << ", " << band_hi << "] within [8, 22]";
  report(3, mean_ratio < 0.7 && band_ok, detail.str());
}

// ----- criterion 4: analytic identities --------------------------------
void criterion4() {
  bool reflection_ok = true;
  for (int i = 1; i < 1000; ++i) {
    double x = i / 1000.0;
    double resid = grhgen::dilog(x) + grhgen::dilog(1.0 - x) -
                   (grhgen::constants::kPi * grhgen::constants::kPi / 6.0 -
                    std::log(x) * std::log(1.0 - x));
    if (std::abs(resid) > 1e-12) reflection_ok = false;
  }

  bool catalan_ok = std::abs(grhgen::ti2(1.0) - grhgen::constants::kCatalan) <= 1e-12;

  bool arch_ok = true;
  double worst_arch = 0.0;
  for (double L : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    auto triangle = [L](double x) { return x < L ? L - x : 0.0; };
    oracles::ArchQuadrature q = oracles::arch_by_quadrature(triangle, L, L, 1.0);
    grhgen::ArchTerms a = grhgen::arch_terms(L);
    worst_arch = std::max(worst_arch, std::abs(a.arch_r1 - q.cosh_integral));
    worst_arch = std::max(worst_arch, std::abs(a.arch_n - q.sinh_integral));
    if (worst_arch > 1e-9) arch_ok = false;
  }

  bool homo_ok = true;
  std::mt19937 rng(20240815);
  std::uniform_real_distribution<double> pick_L(0.25, 9.0);
  auto corpus = oracles::corpus30();
  for (int trial = 0; trial < 100; ++trial) {
    NumberField f =
        oracles::field_from_longs(corpus[static_cast<size_t>(trial) % corpus.size()]);
    IdealNormTable t(f);
    double L = pick_L(rng);
    t = grhgen::extend_table(std::move(t), std::exp(L) + 1.0, f);
    grhgen::EllValue v = grhgen::ell(f, t, L);
    double homo = grhgen::grh_check_homo(f, t, L);
    if (std::abs(v.value - L * homo) > 1e-9 * (1.0 + std::abs(v.value))) homo_ok = false;
  }

  std::ostringstream detail;
  detail << "reflection" << (reflection_ok ? " ok" : " BAD") << ", ti2(1)-Catalan"
         << (catalan_ok ? " ok" : " BAD") << ", arch-vs-quadrature worst " << worst_arch
         << ", homogeneity" << (homo_ok ? " ok" : " BAD");
  report(4, reflection_ok && catalan_ok && arch_ok && homo_ok, detail.str());
}

// ----- criterion 5: inertia engine --------------------------------------
void criterion5() {
  std::mt19937 rng(501);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int tested = 0, matched = 0;
  bool increments_ok = true;
  while (tested < 1000) {
    int n = size(rng);
    std::vector<double> m(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        double v = u(rng);
        m[static_cast<size_t>(i) * n + j] = v;
        m[static_cast<size_t>(j) * n + i] = v;
      }
    grhgen::IncrementalLdl ldl;
    int prev = 0;
    bool clean = true;
    for (int i = 0; i < n && clean; ++i) {
      std::vector<double> row(static_cast<size_t>(i) + 1);
      for (int j = 0; j <= i; ++j) row[static_cast<size_t>(j)] = m[static_cast<size_t>(i) * n + j];
      ldl.append_row(row);
      if (std::abs(ldl.pivot(i + 1)) < 1e-6) clean = false;
      if (ldl.neg_count() < prev || ldl.neg_count() > prev + 1) increments_ok = false;
      prev = ldl.neg_count();
    }
    if (!clean) continue;  // pivots must stay away from zero
    ++tested;
    std::vector<double> eigs = grhgen::jacobi_eigenvalues(m, n);
    int neg = 0;
    for (double v : eigs)
      if (v < 0.0) ++neg;
    if (neg == ldl.neg_count()) ++matched;
  }
  std::ostringstream detail;
  detail << matched << "/1000 inertia matches, row increments "
         << (increments_ok ? "within" : "OUTSIDE") << " {0, +1}";
  report(5, matched == 1000 && increments_ok, detail.str());
}

// ----- criterion 6: splitting oracle equivalence ------------------------
void criterion6() {
  const std::vector<uint64_t> primes{2, 3, 5, 7, 11, 13};
  long tested = 0, matched = 0, identity_ok = 0, identity_total = 0;

  // every monic squarefree polynomial of degree 2..4, coefficients in [-5, 5]
  for (int deg = 2; deg <= 4; ++deg) {
    std::vector<long> c(static_cast<size_t>(deg), -5);
    while (true) {
      std::vector<mpz_class> coeffs;
      for (long v : c) coeffs.emplace_back(v);
      coeffs.emplace_back(1);
      grhgen::IntPolynomial poly = grhgen::make_polynomial(std::move(coeffs));
      if (grhgen::discriminant(poly) != 0) {
        for (uint64_t p : primes) {
          ++tested;
          grhgen::SplitRecord rec = grhgen::splitting_degrees(poly, p);
          oracles::bf::Factorization oracle = oracles::bf::factor(poly, p);
          std::map<int, int> got(rec.degrees.begin(), rec.degrees.end());
          bool same = got == oracle.distinct_per_degree &&
                      rec.ramified == !oracle.squarefree;
          if (same) ++matched;
          if (!rec.ramified) {
            ++identity_total;
            int total = 0;
            for (auto [f, count] : rec.degrees) total += f * count;
            if (total == poly.degree()) ++identity_ok;
          }
        }
      }
      // next coefficient tuple
      int pos = 0;
      while (pos < deg && c[static_cast<size_t>(pos)] == 5) {
        c[static_cast<size_t>(pos)] = -5;
        ++pos;
      }
      if (pos == deg) break;
      ++c[static_cast<size_t>(pos)];
    }
  }
  std::ostringstream detail;
  detail << matched << "/" << tested << " factorizations match, " << identity_ok << "/"
         << identity_total << " unramified degree sums equal n";
  report(6, matched == tested && identity_ok == identity_total, detail.str());
}

// ----- criterion 7: matrix identity vs convolution quadrature -----------
void criterion7() {
  std::mt19937 rng(707);
  std::uniform_real_distribution<double> pick_delta(0.25, 0.75);
  std::uniform_int_distribution<int> pick_n(2, 6);
  auto corpus = oracles::corpus30();
  int checked = 0, ok = 0;
  for (int trial = 0; trial < 20; ++trial) {
    NumberField f =
        oracles::field_from_longs(corpus[static_cast<size_t>(trial * 7 + 3) % corpus.size()]);
    double delta = pick_delta(rng);
    int n = pick_n(rng);
    IdealNormTable t(f);
    t = grhgen::extend_table(std::move(t), std::exp(2.0 * n * delta) + 1.0, f);
    grhgen::LdlState state;
    state.delta = delta;
    for (int i = 0; i < n; ++i) grhgen::assemble_row(state, f, t);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j) {
        ++checked;
        double direct = oracles::ell_by_quadrature(
            f, t,
            [&](double x) { return oracles::step_convolution(x, i, j, delta); },
            2.0 * std::min(i, j) * delta, (i + j) * delta, i == j ? 1.0 : 0.0);
        if (std::abs(state.ldl.entry(i, j) - direct) <= 1e-6 * (1.0 + std::abs(direct)))
          ++ok;
      }
  }
  std::ostringstream detail;
  detail << ok << "/" << checked << " matrix entries agree with convolution quadrature";
  report(7, ok == checked, detail.str());
}

// ----- criterion 8: determinism and cache integrity ----------------------
void criterion8() {
  grhgen::RunConfig config;
  config.command = grhgen::RunConfig::Command::kBound;
  config.poly_arg = "-100003,0,1";
  config.json = true;
  std::ostringstream out1, err1, out2, err2;
  int rc1 = grhgen::cmd_bound(config, out1, err1);
  int rc2 = grhgen::cmd_bound(config, out2, err2);
  bool deterministic = rc1 == 0 && rc2 == 0 && out1.str() == out2.str();

  bool cache_ok = true;
  try {
    NumberField f = oracles::field_from_longs({-100003, 0, 1});
    auto dir = std::filesystem::temp_directory_path() /
               ("grhgen-acc-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir);
    IdealNormTable t(f);
    t = grhgen::extend_table(std::move(t), 500.0, f);
    grhgen::save_cache(t, dir);
    IdealNormTable back = grhgen::load_cache(dir, f);
    cache_ok = back == t;

    NumberField other = oracles::field_from_longs({-10007, 0, 1});
    std::filesystem::copy_file(dir / (f.digest() + ".grhcache"),
                               dir / (other.digest() + ".grhcache"));
    try {
      grhgen::load_cache(dir, other);
      cache_ok = false;  // the digest mismatch must throw
    } catch (const grhgen::cache_error&) {
    }
    std::filesystem::remove_all(dir);
  } catch (const std::exception&) {
    cache_ok = false;
  }

  std::ostringstream detail;
  detail << "json reruns " << (deterministic ? "byte-identical" : "DIFFER") << ", cache "
         << (cache_ok ? "round-trips with digest verification" : "BROKEN");
  report(8, deterministic && cache_ok, detail.str());
}

}  // namespace

int main() {
  criterion1();
  CorpusRun corpus = run_corpus();
  criterion2(corpus);
  criterion3(corpus);
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%s\n", g_failures == 0 ? "all criteria passed" : "criteria FAILED");
  return g_failures;
}
