#include "grhgen/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grhgen {

namespace {

inline size_t tri_index(int i, int j) {  // 1-indexed, i >= j
  return static_cast<size_t>(i - 1) * i / 2 + (j - 1);
}

}  // namespace

void IncrementalLdl::append_row(std::span<const double> row) {
  if (row.size() != static_cast<size_t>(dim_) + 1)
    throw std::invalid_argument("append_row: expected dim()+1 entries");
  int n = dim_ + 1;

  row_abs_sum_.push_back(0.0);
  for (int j = 1; j <= n; ++j) {
    matrix_.push_back(row[static_cast<size_t>(j) - 1]);
    double a = std::abs(row[static_cast<size_t>(j) - 1]);
    row_abs_sum_[static_cast<size_t>(n) - 1] += a;
    if (j < n) row_abs_sum_[static_cast<size_t>(j) - 1] += a;  // symmetric image
  }
  inf_norm_ = *std::max_element(row_abs_sum_.begin(), row_abs_sum_.end());
  double tol = tolerance();

  // L[n][j] = (A[n][j] - sum_{k<j} L[n][k] d_k L[j][k]) / d_j
  std::vector<double> lrow(static_cast<size_t>(n) - 1);
  for (int j = 1; j < n; ++j) {
    double acc = row[static_cast<size_t>(j) - 1];
    for (int k = 1; k < j; ++k)
      acc -= lrow[static_cast<size_t>(k) - 1] * diag_[static_cast<size_t>(k) - 1] *
             lower_[tri_index(j, k)];
    lrow[static_cast<size_t>(j) - 1] = acc / diag_[static_cast<size_t>(j) - 1];
  }
  double d = row[static_cast<size_t>(n) - 1];
  for (int k = 1; k < n; ++k)
    d -= lrow[static_cast<size_t>(k) - 1] * lrow[static_cast<size_t>(k) - 1] *
         diag_[static_cast<size_t>(k) - 1];

  lower_.insert(lower_.end(), lrow.begin(), lrow.end());
  diag_.push_back(d);
  dim_ = n;

  if (std::abs(d) <= tol || !std::isfinite(d)) {
    zero_flag_rows_.push_back(n);
    if (!first_zero_flag_row_) first_zero_flag_row_ = n;
  } else if (d < 0.0) {
    ++neg_count_;
    if (!first_negative_row_) first_negative_row_ = n;
  }
}

double IncrementalLdl::entry(int i, int j) const {
  if (i < j) std::swap(i, j);
  return matrix_[tri_index(i, j)];
}

double IncrementalLdl::unit_lower(int i, int j) const {
  if (i == j) return 1.0;
  if (i < j) return 0.0;
  // strict lower triangle of L is packed rowwise: row i has i-1 entries
  return lower_[static_cast<size_t>(i - 1) * (i - 2) / 2 + (j - 1)];
}

double IncrementalLdl::tolerance() const { return 1e-10 * std::max(1.0, inf_norm_); }

bool IncrementalLdl::has_certified_negative() const {
  return first_negative_row_ != 0 &&
         (first_zero_flag_row_ == 0 || first_negative_row_ < first_zero_flag_row_);
}

std::vector<double> IncrementalLdl::dense() const {
  std::vector<double> m(static_cast<size_t>(dim_) * dim_);
  for (int i = 1; i <= dim_; ++i)
    for (int j = 1; j <= dim_; ++j)
      m[static_cast<size_t>(i - 1) * dim_ + (j - 1)] = entry(i, j);
  return m;
}

void assemble_row(LdlState& state, const NumberField& field, const IdealNormTable& table) {
  if (!(state.delta > 0.0)) throw std::invalid_argument("step width must be positive");
  int n = state.dim() + 1;
  if (state.tab.empty()) state.tab.push_back(0.0);  // tab[0] = ell(F_0) = 0
  // two new ell values per row
  state.tab.push_back(ell(field, table, (2 * n - 1) * state.delta).value);
  state.tab.push_back(ell(field, table, (2 * n) * state.delta).value);

  std::vector<double> row(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    row[static_cast<size_t>(i) - 1] =
        state.tab[static_cast<size_t>(n) + i] - state.tab[static_cast<size_t>(n) - i];
  state.ldl.append_row(row);
}

bool has_negative(const LdlState& state) { return state.ldl.has_certified_negative(); }

int ndelta(const NumberField& field, IdealNormTable& table, double delta, int n_max) {
  if (!(delta > 0.0)) throw std::invalid_argument("ndelta: delta must be positive");
  if (n_max < 1) throw std::invalid_argument("ndelta: n_max must be >= 1");

  LdlState state;
  state.delta = delta;
  for (int n = 1; n <= n_max; ++n) {
    double need = std::exp(2.0 * n * delta);
    if (need > table.limit()) table = extend_table(std::move(table), need, field);
    assemble_row(state, field, table);
    if (has_negative(state)) return n;
  }
  if (!state.ldl.zero_flag_rows().empty()) {
    // pivots went unreliable; decide at full size before giving up
    std::vector<double> eigs = jacobi_eigenvalues(state.ldl.dense(), n_max);
    if (!eigs.empty() && eigs.front() < -state.ldl.tolerance()) return n_max;
  }
  return 0;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  if (n == 0) return {};
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  double frob = 0.0;
  for (double v : a) frob += v * v;
  frob = std::sqrt(frob);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    if (std::sqrt(off) <= 1e-14 * std::max(1.0, frob)) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<size_t>(i)] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace grhgen
