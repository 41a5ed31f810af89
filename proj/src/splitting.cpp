#include "grhgen/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "grhgen/modp_poly.hpp"
#include "grhgen/sieve.hpp"

namespace grhgen {

SplitRecord splitting_degrees(const IntPolynomial& poly, uint64_t p) {
  modp::Poly pbar = modp::reduce(poly, p);
  // monic input keeps its degree under reduction
  modp::Poly d = modp::derivative(pbar, p);
  modp::Poly g = d.empty() ? pbar : modp::gcd(pbar, d, p);
  SplitRecord rec;
  rec.p = p;
  if (static_cast<int>(g.size()) - 1 > 0) {
    rec.ramified = true;
    // squarefree part = radical; its factors carry the residue degrees
    modp::Poly rad = modp::radical(pbar, p);
    rec.degrees = modp::distinct_degree_counts(rad, p);
  } else {
    rec.degrees = modp::distinct_degree_counts(pbar, p);
  }
  std::sort(rec.degrees.begin(), rec.degrees.end());
  return rec;
}

IdealNormTable IdealNormTable::from_records(std::string field_id, double limit,
                                            std::vector<SplitRecord> records) {
  IdealNormTable t;
  t.field_id_ = std::move(field_id);
  t.limit_ = limit;
  t.records_ = std::move(records);
  std::sort(t.records_.begin(), t.records_.end(),
            [](const SplitRecord& a, const SplitRecord& b) { return a.p < b.p; });
  t.rebuild_entries();
  return t;
}

void IdealNormTable::rebuild_entries() {
  entries_.clear();
  for (const SplitRecord& rec : records_) {
    if (!rec.trusted) continue;
    for (auto [f, count] : rec.degrees) {
      // norm = p^f, kept while <= limit
      long double norm_ld = 1.0L;
      uint64_t norm = 1;
      bool overflow = false;
      for (int i = 0; i < f; ++i) {
        norm_ld *= static_cast<long double>(rec.p);
        if (norm_ld > 2e18L) {
          overflow = true;
          break;
        }
        norm *= rec.p;
      }
      if (overflow || static_cast<double>(norm) > limit_) continue;
      entries_.push_back({norm, static_cast<double>(f) * std::log(static_cast<double>(rec.p)),
                          rec.p, f, count});
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const IdealEntry& a, const IdealEntry& b) {
              return a.norm != b.norm ? a.norm < b.norm : a.p < b.p;
            });
}

uint64_t IdealNormTable::count_up_to(double up_to) const {
  uint64_t total = 0;
  for (const IdealEntry& e : entries_) {
    if (static_cast<double>(e.norm) > up_to) break;
    total += static_cast<uint64_t>(e.count);
  }
  return total;
}

IdealNormTable extend_table(IdealNormTable table, double new_limit, const NumberField& field) {
  if (table.field_id_.empty()) table.field_id_ = field.digest();
  if (table.field_id_ != field.digest())
    throw std::invalid_argument("norm table belongs to a different field");
  if (new_limit < table.limit_)
    throw std::invalid_argument("extend_table: new limit below current limit");
  if (new_limit == table.limit_) return table;

  uint64_t old_p_limit = static_cast<uint64_t>(std::floor(table.limit_));
  uint64_t new_p_limit = static_cast<uint64_t>(std::floor(new_limit));
  if (new_p_limit >= old_p_limit + 1) {
    primes_in_range(old_p_limit + 1, new_p_limit, [&](uint64_t p) {
      SplitRecord rec = splitting_degrees(field.poly, p);
      rec.trusted = !std::binary_search(field.index_suspects.begin(),
                                        field.index_suspects.end(), p);
      table.records_.push_back(std::move(rec));
    });
  }
  table.limit_ = new_limit;
  table.rebuild_entries();
  return table;
}

IdealNormTable apply_split_overrides(IdealNormTable table, const std::vector<SplitRecord>& overrides) {
  std::vector<SplitRecord> records = table.records();
  for (const SplitRecord& ov : overrides) {
    auto it = std::find_if(records.begin(), records.end(),
                           [&](const SplitRecord& r) { return r.p == ov.p; });
    SplitRecord rec = ov;
    rec.trusted = true;
    if (it != records.end())
      *it = std::move(rec);
    else if (static_cast<double>(ov.p) <= table.limit())
      records.push_back(std::move(rec));
  }
  return IdealNormTable::from_records(table.field_id(), table.limit(), std::move(records));
}

namespace {

constexpr const char* kCacheMagic = "grhgen-cache v1";

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& digest) {
  return dir / (digest + ".grhcache");
}

std::string format_limit(double limit) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", limit);
  return buf;
}

}  // namespace

void save_cache(const IdealNormTable& table, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::filesystem::path path = cache_path(dir, table.field_id());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw cache_error("cannot write cache file: " + path.string());
  out << kCacheMagic << ' ' << table.field_id() << ' ' << format_limit(table.limit()) << '\n';
  for (const SplitRecord& rec : table.records()) {
    out << rec.p << ' ' << (rec.ramified ? 1 : 0) << ' ';
    for (size_t i = 0; i < rec.degrees.size(); ++i) {
      if (i) out << ',';
      out << rec.degrees[i].first << ':' << rec.degrees[i].second;
    }
    out << '\n';
  }
  if (!out.good()) throw cache_error("write failure: " + path.string());
}

IdealNormTable load_cache(const std::filesystem::path& dir, const NumberField& field) {
  std::filesystem::path path = cache_path(dir, field.digest());
  std::ifstream in(path);
  if (!in) return IdealNormTable(field);  // no cache yet

  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string word1, word2, digest, limit_str;
  hs >> word1 >> word2 >> digest >> limit_str;
  if (word1 + " " + word2 != kCacheMagic)
    throw cache_error("unrecognized cache header in " + path.string());
  if (digest != field.digest())
    throw cache_error("cache digest mismatch in " + path.string());
  double limit = 0;
  try {
    limit = std::stod(limit_str);
  } catch (const std::exception&) {
    throw cache_error("bad limit in cache header: " + path.string());
  }
  if (!(limit >= 1)) throw cache_error("bad limit in cache header: " + path.string());

  std::vector<SplitRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    SplitRecord rec;
    int ram = 0;
    std::string degs;
    if (!(ls >> rec.p >> ram >> degs)) throw cache_error("malformed cache line: " + line);
    rec.ramified = ram != 0;
    std::istringstream ds(degs);
    std::string pair;
    while (std::getline(ds, pair, ',')) {
      size_t colon = pair.find(':');
      if (colon == std::string::npos) throw cache_error("malformed cache line: " + line);
      int f = 0, count = 0;
      try {
        f = std::stoi(pair.substr(0, colon));
        count = std::stoi(pair.substr(colon + 1));
      } catch (const std::exception&) {
        throw cache_error("malformed cache line: " + line);
      }
      if (f < 1 || count < 1) throw cache_error("malformed cache line: " + line);
      rec.degrees.emplace_back(f, count);
    }
    if (rec.degrees.empty()) throw cache_error("malformed cache line: " + line);
    rec.trusted = !std::binary_search(field.index_suspects.begin(),
                                      field.index_suspects.end(), rec.p);
    records.push_back(std::move(rec));
  }
  return IdealNormTable::from_records(field.digest(), limit, std::move(records));
}

}  // namespace grhgen
