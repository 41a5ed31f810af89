#ifndef GRHGEN_SPLITTING_HPP
#define GRHGEN_SPLITTING_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grhgen/number_field.hpp"

namespace grhgen {

/// Splitting type of a rational prime, read off the factorization type of
/// P mod p: one (f, count) pair per residue degree of the squarefree part.
struct SplitRecord {
  uint64_t p = 0;
  std::vector<std::pair<int, int>> degrees;  // (f, count), ascending in f
  bool ramified = false;
  bool trusted = true;  // false iff p is an index suspect

  bool operator==(const SplitRecord&) const = default;
};

SplitRecord splitting_degrees(const IntPolynomial& poly, uint64_t p);

/// One prime ideal norm p^f, counted with multiplicity.
struct IdealEntry {
  uint64_t norm = 0;
  double log_norm = 0.0;
  uint64_t p = 0;
  int f = 0;
  int count = 0;
};

/// Sorted enumeration of prime-ideal norms up to a limit.  Entries come
/// only from trusted split records; the records themselves are kept so the
/// table can be extended and persisted without re-factoring.
class IdealNormTable {
 public:
  IdealNormTable() = default;
  explicit IdealNormTable(const NumberField& field) : field_id_(field.digest()) {}

  static IdealNormTable from_records(std::string field_id, double limit,
                                     std::vector<SplitRecord> records);

  const std::string& field_id() const { return field_id_; }
  double limit() const { return limit_; }
  const std::vector<IdealEntry>& entries() const { return entries_; }
  const std::vector<SplitRecord>& records() const { return records_; }

  /// Prime-ideal count, with multiplicity, of norms <= up_to.
  uint64_t count_up_to(double up_to) const;

  bool operator==(const IdealNormTable& o) const {
    return field_id_ == o.field_id_ && limit_ == o.limit_ && records_ == o.records_;
  }

 private:
  friend IdealNormTable extend_table(IdealNormTable table, double new_limit,
                                     const NumberField& field);
  void rebuild_entries();

  std::string field_id_;
  double limit_ = 1.0;
  std::vector<SplitRecord> records_;  // ascending in p, all p <= limit
  std::vector<IdealEntry> entries_;   // ascending in norm
};

/// Appends split records for primes in (table.limit, new_limit] and any
/// prime powers newly <= new_limit.  Idempotent at equal limits.
IdealNormTable extend_table(IdealNormTable table, double new_limit, const NumberField& field);

/// Replaces the records of the given primes (typically index suspects,
/// with data obtained elsewhere) and marks them trusted.
IdealNormTable apply_split_overrides(IdealNormTable table, const std::vector<SplitRecord>& overrides);

void save_cache(const IdealNormTable& table, const std::filesystem::path& dir);

/// Missing file yields an empty table of limit 1; a digest or format
/// mismatch throws cache_error.
IdealNormTable load_cache(const std::filesystem::path& dir, const NumberField& field);

class cache_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grhgen

#endif
