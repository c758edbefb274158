#include "weylcoh/cache.hpp"
#include "weylcoh/moduli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace weylcoh;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("weylcoh-test-" + name + "-" + std::to_string(std::random_device{}()));
  fs::remove_all(p);
  return p;
}

void expect_same_poset(const ArrangementPoset& a, const ArrangementPoset& b) {
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.rank, b.rank);
  EXPECT_EQ(a.roots, b.roots);
  ASSERT_EQ(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a.layers[i], b.layers[i]);
  EXPECT_EQ(a.children, b.children);
  EXPECT_EQ(a.mobius, b.mobius);
}

}  // namespace

TEST(Serialize, RoundTripIsCanonical) {
  CacheRecord r{"demo", {"a=1", "b"}, {{3, -1, 2}, {0}, {-5}}};
  std::string text = serialize(r);
  CacheRecord back = parse(text);
  EXPECT_EQ(serialize(back), text);
  EXPECT_EQ(back.kind, "demo");
  EXPECT_EQ(back.key, r.key);
  // records come back sorted
  EXPECT_EQ(back.records, (std::vector<std::vector<Int>>{{-5}, {0}, {3, -1, 2}}));
}

TEST(Serialize, RejectsCorruption) {
  std::string text = serialize({"demo", {"k"}, {{1, 2}, {3}}});
  std::string flipped = text;
  flipped[flipped.size() - 2] = '4';
  EXPECT_THROW(parse(flipped), std::runtime_error);
  EXPECT_THROW(parse(text.substr(0, text.size() - 3)), std::runtime_error);
  std::string spaced = text;
  spaced.insert(spaced.find('\n') + 1, " ");
  EXPECT_THROW(parse(spaced), std::runtime_error);
  std::string version = text;
  version.replace(version.find(' ') + 1, 1, std::to_string(kCacheVersion + 1));
  EXPECT_THROW(parse(version), std::runtime_error);
  EXPECT_THROW(serialize({"bad kind", {}, {}}), std::runtime_error);
}

TEST(Store, MissThenHitAndCorruptEntryIsRejected) {
  fs::path dir = scratch_dir("store");
  Cache c(dir);
  CacheRecord r{"demo", {"x"}, {{1}, {2, 3}}};
  EXPECT_FALSE(c.load("demo", {"x"}).has_value());
  c.store(r);
  auto hit = c.load("demo", {"x"});
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->records, r.records);
  {
    std::ofstream os(c.path_for("demo", {"x"}), std::ios::app);
    os << "9\n";
  }
  EXPECT_FALSE(c.load("demo", {"x"}).has_value());
  auto s = c.stats();
  EXPECT_EQ(s.hits, 1);
  EXPECT_EQ(s.misses, 2);
  EXPECT_EQ(s.writes, 1);
  EXPECT_EQ(s.rejected, 1);
  fs::remove_all(dir);
}

TEST(Store, DisabledCacheHasNoDirectory) {
  Cache c{fs::path()};
  EXPECT_FALSE(c.enabled());
}

TEST(Artifacts, PosetRoundTrip) {
  for (auto kind : {ArrangementKind::linear, ArrangementKind::toric}) {
    LatticeArrangement a = root_arrangement("A2", kind);
    auto key = arrangement_key("A2", kind, a.basis);
    CacheRecord rec = poset_record(a.poset, key);
    ArrangementPoset back = poset_from_record(parse(serialize(rec)));
    expect_same_poset(a.poset, back);
    // the whole space has an empty basis and must survive the trip
    EXPECT_EQ(back.layers[0].codim(), 0);
    EXPECT_TRUE(back.layers[0].psi.empty());
  }
}

TEST(Artifacts, ToricPosetWithTorsionRoundTrip) {
  LatticeArrangement a = root_arrangement("D4", ArrangementKind::toric);
  CacheRecord rec = poset_record(a.poset, arrangement_key("D4", ArrangementKind::toric, a.basis));
  expect_same_poset(a.poset, poset_from_record(parse(serialize(rec))));
}

TEST(Artifacts, GroupAndCharacterTableRoundTrip) {
  WeylGroup g = root_group("A2");
  GroupSummary s = summarize(g);
  EXPECT_EQ(group_from_record(parse(serialize(group_record(s, {"A2"})))), s);
  CharacterTable t = CharacterTable::compute(g);
  t.label_by_symmetric_powers();
  auto irreps = irreps_from_record(parse(serialize(chartab_record(t, {"A2"}))));
  ASSERT_EQ(int(irreps.size()), t.size());
  for (int i = 0; i < t.size(); ++i) {
    EXPECT_EQ(irreps[i].label, t.irreps()[i].label);
    EXPECT_EQ(irreps[i].values, t.irreps()[i].values);
  }
}

TEST(Artifacts, GradedFunctionRoundTrip) {
  WeylGroup g = root_group("A3");
  LatticeArrangement a = root_arrangement("A3", ArrangementKind::toric);
  GradedClassFunction f = equivariant_poincare(a, g);
  GradedClassFunction back = graded_from_record(parse(serialize(graded_record(f, {"A3", "toric"}))), g);
  ASSERT_EQ(back.values.size(), f.values.size());
  for (std::size_t c = 0; c < f.values.size(); ++c) EXPECT_EQ(poly_trim(back.values[c]), poly_trim(f.values[c]));
}

TEST(Artifacts, WorkbenchReadsWhatItWrote) {
  fs::path dir = scratch_dir("workbench");
  Cache c(dir);
  CohomologyTable first, second;
  {
    ModuliWorkbench wb({1, {2, 3, 4, 5}, &c});
    first = wb.compute_cohomology("D3_tp");
  }
  int writes = c.stats().writes;
  EXPECT_GT(writes, 0);
  {
    ModuliWorkbench wb({1, {2, 3, 4, 5}, &c});
    second = wb.compute_cohomology("D3_tp");
  }
  EXPECT_EQ(first.multiplicities, second.multiplicities);
  EXPECT_EQ(c.stats().writes, writes);
  EXPECT_GT(c.stats().hits, 0);
  fs::remove_all(dir);
}
