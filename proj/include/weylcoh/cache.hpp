#pragma once

#include "weylcoh/arrangements.hpp"
#include "weylcoh/chartab.hpp"
#include "weylcoh/weyl.hpp"

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace weylcoh {

// Bumped whenever a serialized artifact changes meaning.
inline constexpr int kCacheVersion = 1;

// One artifact: a kind, the key fields it was computed from, and integer records.
struct CacheRecord {
  std::string kind;
  std::vector<std::string> key;
  std::vector<std::vector<Int>> records;
  bool operator==(const CacheRecord& o) const = default;
};

std::uint64_t fnv1a(const std::string& s);
// Header line "weylcoh-cache <version> <kind> <checksum> <count> <key fields...>" followed by
// one line per record, records sorted lexicographically, integers separated by single spaces.
std::string serialize(CacheRecord rec);
// Rejects any deviation from the canonical form, a version mismatch or a checksum mismatch.
CacheRecord parse(const std::string& text);

// Directory of serialized artifacts; writes go to a temporary file that is renamed into place.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);
  // $WEYLCOH_CACHE if set, else empty (caching disabled).
  static std::filesystem::path default_dir();
  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& kind, const std::vector<std::string>& key) const;

  // nullopt on a miss or an unreadable entry.
  std::optional<CacheRecord> load(const std::string& kind, const std::vector<std::string>& key);
  void store(const CacheRecord& rec);

  struct Stats {
    int hits = 0, misses = 0, writes = 0, rejected = 0;
  };
  Stats stats() const { return {hits_, misses_, writes_, rejected_}; }

 private:
  std::filesystem::path dir_;
  std::atomic<int> hits_{0}, misses_{0}, writes_{0}, rejected_{0};
};

// Artifact conversions. Key fields identify the inputs; the records hold the data.
CacheRecord poset_record(const ArrangementPoset& p, std::vector<std::string> key);
ArrangementPoset poset_from_record(const CacheRecord& rec);
CacheRecord graded_record(const GradedClassFunction& f, std::vector<std::string> key);
GradedClassFunction graded_from_record(const CacheRecord& rec, const WeylGroup& g);

// Group and character-table summaries: class data and character values.
struct GroupSummary {
  std::size_t order = 0;
  std::vector<ConjugacyClass> classes;
  bool operator==(const GroupSummary& o) const;
};
GroupSummary summarize(const WeylGroup& g);
CacheRecord group_record(const GroupSummary& g, std::vector<std::string> key);
GroupSummary group_from_record(const CacheRecord& rec);
CacheRecord chartab_record(const CharacterTable& t, std::vector<std::string> key);
// Irreducibles (labels rebuilt from the stored Carter pair or partition).
std::vector<Irrep> irreps_from_record(const CacheRecord& rec);

// Key fields shared by every artifact of a lattice arrangement.
std::vector<std::string> arrangement_key(const std::string& root_type, ArrangementKind kind, const IntMatrix& basis);

}  // namespace weylcoh
