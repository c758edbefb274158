// Command-line front end: groups, character tables, point counts, arrangements and the
// moduli tables, with an optional on-disk cache.
#include "weylcoh/arrangements.hpp"
#include "weylcoh/cache.hpp"
#include "weylcoh/chartab.hpp"
#include "weylcoh/moduli.hpp"
#include "weylcoh/pointcount.hpp"
#include "weylcoh/reference.hpp"
#include "weylcoh/sieve.hpp"
#include "weylcoh/verify.hpp"
#include "weylcoh/weyl.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

using namespace weylcoh;

namespace {

struct Globals {
  int threads = 1;
  std::string cache_dir;
  std::string format = "text";
  std::vector<Int> q_samples{2, 3, 4, 5};
  bool stats = false;
};

// A usage problem found after parsing (unknown type, bad combination of flags).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kWeylTypes{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4",
                                          "D5", "D6", "D7", "D8", "E6", "F4"};

void emit(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
          const std::string& format) {
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - r[i].size(), ' ') << r[i];
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string vec_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<int> parse_cycle_type(const std::string& s, int n) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("bad cycle type " + s);
    }
  }
  int sum = 0;
  for (int x : out) {
    if (x < 1) throw UsageError("bad cycle type " + s);
    sum += x;
  }
  if (sum != n) throw UsageError("cycle type " + s + " is not a partition of " + std::to_string(n));
  std::sort(out.rbegin(), out.rend());
  return out;
}

void require_type(const std::string& type) {
  if (std::find(kWeylTypes.begin(), kWeylTypes.end(), type) == kWeylTypes.end())
    throw UsageError("unknown root system type " + type);
}

std::unique_ptr<WeylGroup> weyl_for(const std::string& type) {
  require_type(type);
  return std::make_unique<WeylGroup>(root_group(type));
}

LatticeArrangement arrangement_for(const std::string& type, ArrangementKind kind, Cache* cache) {
  require_type(type);
  return root_arrangement(type, kind, cache);
}

ArrangementKind parse_kind(const std::string& k) { return k == "toric" ? ArrangementKind::toric : ArrangementKind::linear; }

std::vector<std::string> table_header(const CharacterTable& t) {
  std::vector<std::string> h{"degree"};
  for (const auto& l : t.labels()) h.push_back(l);
  return h;
}

std::vector<std::vector<std::string>> table_rows(const CohomologyTable& t) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t d = 0; d < t.multiplicities.size(); ++d) {
    std::vector<std::string> r{"H^" + std::to_string(d)};
    for (Int m : t.multiplicities[d]) r.push_back(std::to_string(m));
    rows.push_back(r);
  }
  return rows;
}

void emit_table(std::ostream& os, const CohomologyTable& t, const std::string& format) {
  emit(os, table_header(*t.table), table_rows(t), format);
}

void emit_counts(std::ostream& os, const std::vector<CountPolynomial>& counts, const std::string& format) {
  int deg = 0;
  for (const auto& c : counts) deg = std::max(deg, poly_degree(c.poly));
  std::vector<std::string> header{"cycle_type"};
  for (int k = 0; k <= deg; ++k) header.push_back("q^" + std::to_string(k));
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : counts) {
    std::vector<std::string> r{cycle_notation(c.cycle_type)};
    for (int k = 0; k <= deg; ++k) r.push_back(std::to_string(poly_coeff(c.poly, k)));
    rows.push_back(r);
  }
  emit(os, header, rows, format);
}

// Files written by `tables --all`, named by content.
struct TableFile {
  std::string name;
  std::function<void(std::ostream&)> write;
};

std::vector<TableFile> table_files(ModuliWorkbench& wb, const std::string& format) {
  std::vector<TableFile> files;
  files.push_back({"five_point_counts", [&](std::ostream& os) { emit_counts(os, wb.point_counts(5), format); }});
  files.push_back({"six_point_counts", [&](std::ostream& os) { emit_counts(os, wb.point_counts(6), format); }});
  files.push_back({"five_point_cohomology", [&](std::ostream& os) { emit_table(os, wb.point_count_cohomology(5), format); }});
  files.push_back({"six_point_cohomology", [&](std::ostream& os) { emit_table(os, wb.point_count_cohomology(6), format); }});
  const std::vector<std::pair<std::string, std::string>> cubic{
      {"D3n", "nodal_cubics"},
      {"D3c", "cuspidal_cubics"},
      {"D3_2n_hat", "two_nodal_cubics"},
      {"D3_tn", "tacnodal_cubics"},
      {"D3_3n_hat", "three_nodal_cubics"},
      {"D3_tp", "triple_point_cubics"},
      {"D3n_union_c", "nodal_and_cuspidal_cubics"},
      {"D3_2n_union_tn", "two_nodal_and_tacnodal_cubics"},
      {"D3_3n_union_tp", "three_nodal_and_triple_point_cubics"},
      {"D3", "marked_cubics"}};
  for (const auto& [id, name] : cubic)
    files.push_back({name, [&wb, &format, id](std::ostream& os) { emit_table(os, wb.compute_cohomology(id), format); }});
  files.push_back({"quartic_strata", [&](std::ostream& os) {
                     std::vector<std::string> header{"space", "degree"};
                     for (const auto& l : wb.s5_table().labels()) header.push_back(l);
                     std::vector<std::vector<std::string>> rows;
                     for (const auto& id : moduli_ids()) {
                       if (id.rfind("D4_", 0) != 0 && id != "D4n" && id != "D4c") continue;
                       for (auto r : table_rows(wb.compute_cohomology(id))) {
                         r.insert(r.begin(), id);
                         rows.push_back(r);
                       }
                     }
                     emit(os, header, rows, format);
                   }});
  files.push_back({"marked_quartics", [&](std::ostream& os) { emit_table(os, wb.quartic_lifts(), format); }});
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant cohomology of del Pezzo moduli spaces from root-system arrangements"};
  app.require_subcommand(1);
  Globals g;
  if (const char* env = std::getenv("WEYLCOH_CACHE")) g.cache_dir = env;
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "artifact cache directory (default $WEYLCOH_CACHE)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "csv"}));
  app.add_option("--q-samples", g.q_samples, "field sizes for point counts")->delimiter(',');
  app.add_flag("--stats", g.stats, "print cache statistics to stderr");
  app.fallthrough();

  std::string type = "E6", kind = "toric", twist = "none", id, cycle, out_dir = "tables";
  int n = 6;
  Int q = 2;
  bool all = false;

  auto* roots = app.add_subcommand("roots", "list the positive roots of a root system");
  roots->add_option("--type", type)->check(CLI::IsMember(kWeylTypes));
  auto* group = app.add_subcommand("group", "order and conjugacy classes of a Weyl group");
  group->add_option("--type", type)->check(CLI::IsMember(kWeylTypes));
  auto* chartab = app.add_subcommand("chartab", "character table with Carter or partition labels");
  chartab->add_option("--type", type, "root system type, S5 or S6");
  auto* count = app.add_subcommand("count", "F_q-points of n points in general position fixed by F composed with a permutation");
  count->add_option("--n", n)->check(CLI::IsMember({5, 6}));
  count->add_option("--cycle-type", cycle)->required();
  count->add_option("--q", q)->check(CLI::PositiveNumber);
  auto* interp = app.add_subcommand("interp", "interpolate a twisted point count over the q samples");
  interp->add_option("--n", n)->check(CLI::IsMember({5, 6}));
  interp->add_option("--cycle-type", cycle)->required();
  auto* poset = app.add_subcommand("poset", "intersection poset of a root-system arrangement");
  poset->add_option("--type", type)->check(CLI::IsMember(kWeylTypes));
  poset->add_option("--kind", kind)->check(CLI::IsMember({"toric", "linear"}));
  auto* poincare = app.add_subcommand("poincare", "compactly supported equivariant Poincare polynomial per class");
  poincare->add_option("--type", type)->check(CLI::IsMember(kWeylTypes));
  poincare->add_option("--kind", kind)->check(CLI::IsMember({"toric", "linear"}));
  poincare->add_option("--twist", twist)->check(CLI::IsMember({"none", "minus_identity"}));
  auto* moduli = app.add_subcommand("moduli", "cohomology table of a moduli space");
  moduli->add_option("--id", id)->required()->check(CLI::IsMember(moduli_ids()));
  auto* sieve = app.add_subcommand("sieve", "candidate search for the marked cubic space");
  auto* tables = app.add_subcommand("tables", "write every computed table to a directory");
  tables->add_flag("--all", all, "write all tables")->required();
  tables->add_option("--out", out_dir, "output directory");
  auto* verify = app.add_subcommand("verify", "compare computed tables with the published ones and check invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::unique_ptr<Cache> cache;
  if (!g.cache_dir.empty()) cache = std::make_unique<Cache>(g.cache_dir);
  WorkbenchOptions opt;
  opt.threads = g.threads;
  opt.q_samples = g.q_samples;
  opt.cache = cache.get();
  ModuliWorkbench wb(opt);
  auto& out = std::cout;
  int status = 0;

  try {
    if (roots->parsed()) {
      RootSystem rs = root_system(type);
      out << "type " << type << " roots " << rs.size() << " positive " << rs.positive_indices().size() << '\n';
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : rs.positive_roots()) rows.push_back({vec_string(r), std::to_string(rs.lattice.product(r, r))});
      emit(out, {"root", "norm"}, rows, g.format);
    } else if (group->parsed()) {
      auto w = weyl_for(type);
      out << w->name() << " order " << w->order() << " classes " << w->num_classes() << '\n';
      std::vector<std::vector<std::string>> rows;
      for (int c = 0; c < w->num_classes(); ++c) {
        const auto& cl = w->classes()[c];
        rows.push_back({std::to_string(c), std::to_string(cl.size), std::to_string(cl.order), std::to_string(cl.trace)});
      }
      emit(out, {"class", "size", "order", "trace"}, rows, g.format);
    } else if (chartab->parsed()) {
      const CharacterTable* t = nullptr;
      std::unique_ptr<WeylGroup> w;
      std::unique_ptr<CharacterTable> own;
      if (type == "S5") t = &wb.s5_table();
      else if (type == "S6") t = &wb.s6_table();
      else if (type == "E6") t = &wb.e6_table();
      else {
        w = weyl_for(type);
        own = std::make_unique<CharacterTable>(CharacterTable::compute(*w));
        own->label_by_symmetric_powers();
        t = own.get();
      }
      std::vector<std::string> header{"irrep"};
      for (int c = 0; c < t->group().num_classes(); ++c) header.push_back("c" + std::to_string(c));
      std::vector<std::vector<std::string>> rows;
      for (const auto& ir : t->irreps()) {
        std::vector<std::string> r{ir.label};
        for (Int v : ir.values) r.push_back(std::to_string(v));
        rows.push_back(r);
      }
      emit(out, header, rows, g.format);
    } else if (count->parsed()) {
      auto ct = parse_cycle_type(cycle, n);
      CountResult r = count_fixed({permutation_of_type(ct), q, true}, g.threads);
      out << r.orbits << '\n';
    } else if (interp->parsed()) {
      auto ct = parse_cycle_type(cycle, n);
      int degree = 2 * (n - 4);
      if (int(g.q_samples.size()) < degree)
        throw UsageError("a monic polynomial of degree " + std::to_string(degree) + " needs " + std::to_string(degree) +
                         " q samples");
      std::vector<std::pair<Int, Int>> samples;
      for (Int s : g.q_samples) {
        CountResult r = count_fixed({permutation_of_type(ct), s, true}, g.threads);
        out << "q=" << s << " count " << r.orbits << '\n';
        samples.push_back({s, r.orbits});
      }
      out << poly_to_string(interpolate(samples, degree, true)) << '\n';
    } else if (poset->parsed()) {
      LatticeArrangement a = arrangement_for(type, parse_kind(kind), cache.get());
      const ArrangementPoset& p = a.poset;
      auto by_dim = p.count_by_dimension();
      std::vector<std::vector<std::string>> rows;
      for (std::size_t d = 0; d < by_dim.size(); ++d) rows.push_back({std::to_string(d), std::to_string(by_dim[d])});
      emit(out, {"dimension", "layers"}, rows, g.format);
      out << "total " << p.size() << '\n';
      if (p.kind == ArrangementKind::toric) {
        // layers of the quotient by inversion
        IntMatrix minus = -IntMatrix::identity(p.rank);
        std::set<int> seen;
        int orbits = 0;
        for (int i = 0; i < p.size(); ++i) {
          if (seen.count(i)) continue;
          ++orbits;
          seen.insert(i);
          seen.insert(p.find(act_on_layer(p.kind, p.layers[i], minus)));
        }
        out << "inversion orbits " << orbits << '\n';
      }
    } else if (poincare->parsed()) {
      LatticeArrangement a = arrangement_for(type, parse_kind(kind), cache.get());
      auto w = weyl_for(type);
      GradedClassFunction f = equivariant_poincare(a, *w, twist == "minus_identity", g.threads);
      std::vector<std::vector<std::string>> rows;
      for (int c = 0; c < w->num_classes(); ++c)
        rows.push_back({std::to_string(c), std::to_string(w->classes()[c].order), std::to_string(w->classes()[c].size),
                        poly_to_string(f.values[c], "t")});
      emit(out, {"class", "order", "size", "poincare"}, rows, g.format);
    } else if (moduli->parsed()) {
      ModuliRecipe r = build_recipe(id);
      if (g.format == "text") out << id << ": " << r.description << ", dimension " << r.dim << '\n';
      emit_table(out, wb.compute_cohomology(id), g.format);
    } else if (sieve->parsed()) {
      SieveReport r = run_sieve(wb);
      for (const auto& line : r.twisted_euler.log) out << line << '\n';
      const CharacterTable& t = wb.e6_table();
      for (std::size_t i = 0; i < r.result.multiplicities.size(); ++i)
        out << "H^" << i << " = " << format_multiplicities(t, r.result.multiplicities[i]) << '\n';
    } else if (tables->parsed()) {
      std::filesystem::create_directories(out_dir);
      std::string ext = g.format == "csv" ? ".csv" : ".txt";
      for (const auto& f : table_files(wb, g.format)) {
        auto path = std::filesystem::path(out_dir) / (f.name + ext);
        std::ofstream os(path);
        f.write(os);
        if (!os) fail("cannot write " + path.string());
        out << path.string() << '\n';
      }
    } else if (verify->parsed()) {
      auto checks = verify_all(wb);
      for (auto& c : property_checks(wb)) checks.push_back(std::move(c));
      for (const auto& c : checks) {
        out << (c.ok ? "ok    " : "FAIL  ") << c.name << ": " << c.detail << '\n';
        if (!c.ok) status = 1;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }

  if (g.stats) {
    auto s = cache ? cache->stats() : Cache::Stats{};
    std::cerr << "cache " << (cache ? cache->dir().string() : std::string("disabled")) << ": hits " << s.hits
              << " misses " << s.misses << " writes " << s.writes << " rejected " << s.rejected << '\n';
  }
  return status;
}
