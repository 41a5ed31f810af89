#ifndef GRHGEN_QUADFORM_HPP
#define GRHGEN_QUADFORM_HPP

#include <span>
#include <vector>

#include "grhgen/analytic.hpp"

namespace grhgen {

/// Names the step-function space: N steps of width delta, so the matrix is
/// N x N and the certified bound is e^{2 N delta}.
struct StepParams {
  int N = 0;
  double delta = 0.0;
  double support() const { return 2.0 * N * delta; }

  bool operator==(const StepParams&) const = default;
};

/// Growing LDL^T factorization of a symmetric matrix, one row at a time.
/// Pivot signs give the inertia of every leading block (Sylvester);
/// a pivot within tolerance of zero poisons the rows after it, and the
/// certification logic refuses to trust anything from that row on.
class IncrementalLdl {
 public:
  /// row holds A[N][1..N] (1-indexed math, row.size() == dim()+1).
  void append_row(std::span<const double> row);

  int dim() const { return dim_; }
  double entry(int i, int j) const;       // original symmetric matrix, 1-indexed
  double unit_lower(int i, int j) const;  // L factor, 1-indexed, i >= j
  double pivot(int i) const { return diag_[static_cast<size_t>(i) - 1]; }
  const std::vector<double>& pivots() const { return diag_; }

  int neg_count() const { return neg_count_; }
  const std::vector<int>& zero_flag_rows() const { return zero_flag_rows_; }

  /// First row whose pivot is negative beyond tolerance (0 if none).
  int first_negative_row() const { return first_negative_row_; }
  /// True iff a negative pivot occurred before any zero-flagged pivot, so
  /// the leading block provably has a negative eigenvalue.
  bool has_certified_negative() const;

  double inf_norm() const { return inf_norm_; }
  double tolerance() const;

  /// Dense row-major copy of the symmetric matrix (dim x dim).
  std::vector<double> dense() const;

 private:
  int dim_ = 0;
  std::vector<double> matrix_;  // packed lower triangle of A
  std::vector<double> lower_;   // packed strict lower triangle of L
  std::vector<double> diag_;    // pivots
  std::vector<double> row_abs_sum_;
  double inf_norm_ = 0.0;
  int neg_count_ = 0;
  int first_negative_row_ = 0;
  int first_zero_flag_row_ = 0;
  std::vector<int> zero_flag_rows_;
};

/// The state Function NDelta grows: the ell-value table plus the
/// factorization of A[i][j] = tab[i+j] - tab[|i-j|].
struct LdlState {
  double delta = 0.0;
  std::vector<double> tab;  // tab[k] = ell(F_{k delta}), tab[0] = 0
  IncrementalLdl ldl;

  int dim() const { return ldl.dim(); }
};

/// Extends the state by one dimension; the table must cover
/// e^{2 (dim+1) delta}.
void assemble_row(LdlState& state, const NumberField& field, const IdealNormTable& table);

bool has_negative(const LdlState& state);

/// Smallest N <= n_max whose leading block certifies a negative
/// eigenvalue, else 0.  The table is extended on demand.  When zero
/// pivots spoiled the incremental test, a dense eigen-decomposition at
/// n_max decides before giving up.
int ndelta(const NumberField& field, IdealNormTable& table, double delta, int n_max);

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// ascending.  Used as the fallback decision and as the inertia oracle in
/// the test suites.
std::vector<double> jacobi_eigenvalues(std::vector<double> dense, int n);

}  // namespace grhgen

#endif
