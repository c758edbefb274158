#include "weylcoh/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace weylcoh {

namespace fs = std::filesystem;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

std::string body_of(const std::vector<std::vector<Int>>& records) {
  std::string out;
  for (const auto& r : records) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(r[i]);
    }
    out += '\n';
  }
  return out;
}

bool valid_field(const std::string& s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\n' || c == '\t'; });
}

Int parse_int(const std::string& tok) {
  if (tok.empty()) fail("cache: empty integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail("cache: bad integer '" + tok + "'");
  }
  if (pos != tok.size() || std::to_string(v) != tok) fail("cache: non-canonical integer '" + tok + "'");
  return v;
}

std::vector<std::string> split_spaces(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t sp = line.find(' ', start);
    out.push_back(line.substr(start, sp - start));
    if (sp == std::string::npos) break;
    start = sp + 1;
  }
  return out;
}

}  // namespace

std::string serialize(CacheRecord rec) {
  if (!valid_field(rec.kind)) fail("serialize: bad kind");
  for (const auto& k : rec.key)
    if (!valid_field(k)) fail("serialize: bad key field '" + k + "'");
  std::sort(rec.records.begin(), rec.records.end());
  std::string body = body_of(rec.records);
  std::ostringstream os;
  os << "weylcoh-cache " << kCacheVersion << ' ' << rec.kind << ' ' << hex(fnv1a(body)) << ' ' << rec.records.size();
  for (const auto& k : rec.key) os << ' ' << k;
  os << '\n' << body;
  return os.str();
}

CacheRecord parse(const std::string& text) {
  std::size_t nl = text.find('\n');
  if (nl == std::string::npos) fail("parse: missing header");
  auto head = split_spaces(text.substr(0, nl));
  if (head.size() < 5 || head[0] != "weylcoh-cache") fail("parse: bad header");
  if (parse_int(head[1]) != kCacheVersion) fail("parse: version mismatch");
  CacheRecord rec;
  rec.kind = head[2];
  std::string sum = head[3];
  Int count = parse_int(head[4]);
  for (std::size_t i = 5; i < head.size(); ++i) {
    if (!valid_field(head[i])) fail("parse: bad key field");
    rec.key.push_back(head[i]);
  }
  std::string body = text.substr(nl + 1);
  if (hex(fnv1a(body)) != sum) fail("parse: checksum mismatch");
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t end = body.find('\n', start);
    if (end == std::string::npos) fail("parse: unterminated record");
    std::string line = body.substr(start, end - start);
    std::vector<Int> r;
    if (!line.empty())
      for (const auto& tok : split_spaces(line)) r.push_back(parse_int(tok));
    rec.records.push_back(std::move(r));
    start = end + 1;
  }
  if (Int(rec.records.size()) != count) fail("parse: record count mismatch");
  if (!std::is_sorted(rec.records.begin(), rec.records.end())) fail("parse: records not sorted");
  if (serialize(rec) != text) fail("parse: non-canonical text");
  return rec;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) fs::create_directories(dir_);
}

fs::path Cache::default_dir() {
  const char* env = std::getenv("WEYLCOH_CACHE");
  return env && *env ? fs::path(env) : fs::path();
}

fs::path Cache::path_for(const std::string& kind, const std::vector<std::string>& key) const {
  std::string joined = "v" + std::to_string(kCacheVersion) + ' ' + kind;
  for (const auto& k : key) joined += ' ' + k;
  return dir_ / (kind + "-" + hex(fnv1a(joined)) + ".txt");
}

std::optional<CacheRecord> Cache::load(const std::string& kind, const std::vector<std::string>& key) {
  if (!enabled()) return std::nullopt;
  fs::path p = path_for(kind, key);
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    CacheRecord rec = parse(ss.str());
    if (rec.kind != kind || rec.key != key) throw std::runtime_error("key mismatch");
    ++hits_;
    return rec;
  } catch (const std::exception&) {
    ++rejected_;
    ++misses_;
    return std::nullopt;
  }
}

void Cache::store(const CacheRecord& rec) {
  if (!enabled()) return;
  fs::path p = path_for(rec.kind, rec.key);
  std::ostringstream tag;
  tag << std::this_thread::get_id() << '-' << std::random_device{}();
  fs::path tmp = p;
  tmp += ".tmp-" + tag.str();
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) fail("cache: cannot write " + tmp.string());
    out << serialize(rec);
    if (!out) fail("cache: write failed for " + tmp.string());
  }
  fs::rename(tmp, p);
  ++writes_;
}

// Poset records: [0, i, root...] for roots, [1, i, codim, basis..., psi num den..., children...].
CacheRecord poset_record(const ArrangementPoset& p, std::vector<std::string> key) {
  CacheRecord rec{"poset", std::move(key), {}};
  rec.records.push_back({-1, p.kind == ArrangementKind::toric ? 1 : 0, p.rank, Int(p.roots.size()), p.size()});
  for (std::size_t i = 0; i < p.roots.size(); ++i) {
    std::vector<Int> r{0, Int(i)};
    r.insert(r.end(), p.roots[i].begin(), p.roots[i].end());
    rec.records.push_back(r);
  }
  for (int i = 0; i < p.size(); ++i) {
    const Layer& l = p.layers[i];
    std::vector<Int> r{1, i, l.codim(), Int(p.children[i].size())};
    r.insert(r.end(), l.basis.data.begin(), l.basis.data.end());
    for (const auto& x : l.psi) {
      r.push_back(x.num());
      r.push_back(x.den());
    }
    r.insert(r.end(), p.children[i].begin(), p.children[i].end());
    rec.records.push_back(r);
  }
  return rec;
}

ArrangementPoset poset_from_record(const CacheRecord& rec) {
  if (rec.kind != "poset" || rec.records.empty() || rec.records[0].size() != 5 || rec.records[0][0] != -1)
    fail("poset_from_record: bad record");
  const auto& h = rec.records[0];
  ArrangementPoset p;
  p.kind = h[1] ? ArrangementKind::toric : ArrangementKind::linear;
  p.rank = int(h[2]);
  Int nroots = h[3], nlayers = h[4];
  if (Int(rec.records.size()) != 1 + nroots + nlayers) fail("poset_from_record: record count");
  for (Int i = 0; i < nroots; ++i) {
    const auto& r = rec.records[1 + i];
    if (r.size() != std::size_t(2 + p.rank) || r[0] != 0 || r[1] != i) fail("poset_from_record: bad root");
    p.roots.emplace_back(r.begin() + 2, r.end());
  }
  for (Int i = 0; i < nlayers; ++i) {
    const auto& r = rec.records[1 + nroots + i];
    if (r.size() < 4 || r[0] != 1 || r[1] != i) fail("poset_from_record: bad layer");
    int codim = int(r[2]);
    Int nchild = r[3];
    bool toric = p.kind == ArrangementKind::toric;
    std::size_t need = 4 + std::size_t(codim) * p.rank + (toric ? 2 * codim : 0) + nchild;
    if (r.size() != need) fail("poset_from_record: bad layer length");
    Layer l;
    l.basis = IntMatrix(codim, p.rank);
    std::size_t pos = 4;
    for (std::size_t k = 0; k < l.basis.data.size(); ++k) l.basis.data[k] = r[pos++];
    if (toric)
      for (int k = 0; k < codim; ++k, pos += 2) l.psi.push_back(Rational(r[pos], r[pos + 1]));
    p.layers.push_back(std::move(l));
    p.children.emplace_back(r.begin() + pos, r.end());
  }
  p.rebuild_order();
  return p;
}

CacheRecord graded_record(const GradedClassFunction& f, std::vector<std::string> key) {
  CacheRecord rec{"poincare", std::move(key), {}};
  for (std::size_t c = 0; c < f.values.size(); ++c) {
    std::vector<Int> r{Int(c)};
    r.insert(r.end(), f.values[c].begin(), f.values[c].end());
    rec.records.push_back(r);
  }
  return rec;
}

GradedClassFunction graded_from_record(const CacheRecord& rec, const WeylGroup& g) {
  if (int(rec.records.size()) != g.num_classes()) fail("graded_from_record: class count mismatch");
  GradedClassFunction f;
  f.group = &g;
  for (std::size_t c = 0; c < rec.records.size(); ++c) {
    const auto& r = rec.records[c];
    if (r.empty() || r[0] != Int(c)) fail("graded_from_record: bad record");
    f.values.push_back(poly_trim(Poly(r.begin() + 1, r.end())));
  }
  return f;
}

bool GroupSummary::operator==(const GroupSummary& o) const {
  if (order != o.order || classes.size() != o.classes.size()) return false;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto &a = classes[i], &b = o.classes[i];
    if (a.size != b.size || a.order != b.order || a.trace != b.trace || a.charpoly != b.charpoly) return false;
  }
  return true;
}

GroupSummary summarize(const WeylGroup& g) { return {g.order(), g.classes()}; }

// Group records: [-1, order], then [i, size, order, trace, charpoly...] per class.
CacheRecord group_record(const GroupSummary& g, std::vector<std::string> key) {
  CacheRecord rec{"group", std::move(key), {{-1, Int(g.order)}}};
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    const auto& c = g.classes[i];
    std::vector<Int> r{Int(i), Int(c.size), c.order, c.trace};
    r.insert(r.end(), c.charpoly.begin(), c.charpoly.end());
    rec.records.push_back(r);
  }
  return rec;
}

GroupSummary group_from_record(const CacheRecord& rec) {
  if (rec.kind != "group" || rec.records.empty() || rec.records[0].size() != 2 || rec.records[0][0] != -1)
    fail("group_from_record: bad record");
  GroupSummary g;
  g.order = std::size_t(rec.records[0][1]);
  for (std::size_t i = 1; i < rec.records.size(); ++i) {
    const auto& r = rec.records[i];
    if (r.size() < 4 || r[0] != Int(i - 1)) fail("group_from_record: bad class");
    ConjugacyClass c;
    c.size = std::size_t(r[1]);
    c.order = int(r[2]);
    c.trace = r[3];
    c.charpoly.assign(r.begin() + 4, r.end());
    g.classes.push_back(c);
  }
  return g;
}

// Character-table records: [i, d, e, partition length, partition..., values...].
CacheRecord chartab_record(const CharacterTable& t, std::vector<std::string> key) {
  CacheRecord rec{"chartab", std::move(key), {}};
  for (int i = 0; i < t.size(); ++i) {
    const Irrep& ir = t.irreps()[i];
    std::vector<Int> r{i, ir.carter_d, ir.carter_e, Int(ir.partition.size())};
    r.insert(r.end(), ir.partition.begin(), ir.partition.end());
    r.insert(r.end(), ir.values.begin(), ir.values.end());
    rec.records.push_back(r);
  }
  return rec;
}

std::vector<Irrep> irreps_from_record(const CacheRecord& rec) {
  if (rec.kind != "chartab") fail("irreps_from_record: bad kind");
  std::vector<Irrep> out;
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < rec.records.size(); ++i) {
    const auto& r = rec.records[i];
    if (r.size() < 4 || r[0] != Int(i) || r.size() < std::size_t(4 + r[3])) fail("irreps_from_record: bad record");
    Irrep ir;
    ir.carter_d = int(r[1]);
    ir.carter_e = int(r[2]);
    ir.partition.assign(r.begin() + 4, r.begin() + 4 + r[3]);
    ir.values.assign(r.begin() + 4 + r[3], r.end());
    if (!ir.partition.empty()) ir.label = partition_label(ir.partition);
    else if (ir.carter_e >= 0) ir.label = carter_label_string(ir.carter_d, ir.carter_e);
    ++seen[ir.label];
    out.push_back(std::move(ir));
  }
  std::map<std::string, int> used;
  for (auto& ir : out)
    if (!ir.label.empty() && seen[ir.label] > 1) ir.label += std::string(used[ir.label]++, '\'');
  return out;
}

std::vector<std::string> arrangement_key(const std::string& root_type, ArrangementKind kind, const IntMatrix& basis) {
  std::string b = std::to_string(basis.rows) + "x" + std::to_string(basis.cols);
  for (Int x : basis.data) b += "," + std::to_string(x);
  return {"type=" + root_type, kind == ArrangementKind::toric ? "kind=toric" : "kind=linear", "basis=" + b};
}

}  // namespace weylcoh
