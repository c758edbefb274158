#include "weylcoh/moduli.hpp"

#include "weylcoh/cache.hpp"
#include "weylcoh/sieve.hpp"

#include <algorithm>
#include <set>

namespace weylcoh {

namespace {

Vec cubic_canonical() { return {-3, 1, 1, 1, 1, 1, 1}; }
Vec quartic_canonical() { return {-3, 1, 1, 1, 1, 1}; }

ModuliRecipe cubic(std::string id, std::string desc, std::string type, std::vector<Vec> classes,
                   ArrangementKind kind, Int components) {
  ModuliRecipe r;
  r.id = std::move(id);
  r.description = std::move(desc);
  r.family = SpaceFamily::cubic;
  r.root_type = std::move(type);
  r.classes = std::move(classes);
  r.kind = kind;
  r.components = components;
  r.projective = kind == ArrangementKind::linear;
  r.inversion_quotient = kind == ArrangementKind::toric;
  return r;
}

ModuliRecipe quartic(std::string id, std::string desc, std::string type, std::vector<Vec> classes,
                     ArrangementKind kind, Int components) {
  ModuliRecipe r;
  r.id = std::move(id);
  r.description = std::move(desc);
  r.family = SpaceFamily::quartic;
  r.root_type = std::move(type);
  r.classes = std::move(classes);
  r.kind = kind;
  r.components = components;
  r.projective = kind == ArrangementKind::linear;
  r.kernel_quotient = true;
  return r;
}

ModuliRecipe blowup_union(std::string id, std::string desc, std::string toric, std::string proj) {
  ModuliRecipe r;
  r.id = std::move(id);
  r.description = std::move(desc);
  r.family = SpaceFamily::cubic;
  r.toric_part = std::move(toric);
  r.projective_part = std::move(proj);
  r.dim = build_recipe(r.toric_part).dim;
  return r;
}

int lattice_rank(const ModuliRecipe& r) {
  int ambient = r.family == SpaceFamily::cubic ? 7 : 6;
  IntMatrix m = IntMatrix::from_rows(r.classes, ambient);
  return ambient - rank(m);
}

// Every class fixed by g maps into the class list (as a set).
bool preserves_classes(const WeylGroup& g, ElementId x, const std::vector<Vec>& classes) {
  IntMatrix m = g.matrix(x);
  for (const auto& c : classes)
    if (std::find(classes.begin(), classes.end(), m * c) == classes.end()) return false;
  return true;
}

}  // namespace

const std::vector<std::string>& moduli_ids() {
  static const std::vector<std::string> ids{
      "D3",        "D4",          "D3n",         "D3c",         "D3_2n_hat",      "D3_tn",   "D3_3n_hat",
      "D3_tp",     "D3n_union_c", "D3_2n_union_tn", "D3_3n_union_tp", "D4n",   "D4c",     "D4_2n_A4",
      "D4_2n_D4",  "D4_tn_A4",    "D4_tn_D4",    "D4_3n",       "D4_tp",          "D4_4n"};
  return ids;
}

ModuliRecipe build_recipe(const std::string& id) {
  using AK = ArrangementKind;
  const Vec k3 = cubic_canonical(), k4 = quartic_canonical();
  const Vec e6{0, 0, 0, 0, 0, 0, 1};
  const Vec l4{1, 0, 0, 0, 0, 0}, conic4{2, -1, -1, -1, -1, -1};
  const Vec e1{0, 1, 0, 0, 0, 0}, e2{0, 0, 1, 0, 0, 0};
  ModuliRecipe r;
  if (id == "D3") {
    r.id = id;
    r.description = "marked cubic surfaces, from the sieve";
    r.dim = 4;
    r.derived = true;
    return r;
  }
  if (id == "D4") {
    r.id = id;
    r.family = SpaceFamily::quartic;
    r.description = "marked quartic del Pezzo surfaces, from point counts";
    r.dim = 2;
    r.derived = true;
    return r;
  }
  if (id == "D3n") r = cubic(id, "inversion quotient of the E6 toric complement", "E6", {k3}, AK::toric, 1);
  else if (id == "D3c") r = cubic(id, "projectivized E6 hyperplane complement", "E6", {k3}, AK::linear, 1);
  else if (id == "D3_2n_hat")
    r = cubic(id, "inversion quotients of D5 toric complements, one per line", "D5", {k3, e6}, AK::toric, 27);
  else if (id == "D3_tn")
    r = cubic(id, "projectivized D5 hyperplane complements, one per line", "D5", {k3, e6}, AK::linear, 27);
  else if (id == "D3_3n_hat")
    r = cubic(id, "inversion quotients of F4 toric complements, one per tritangent trio", "F4",
              standard_tritangent_trio(), AK::toric, 45);
  else if (id == "D3_tp")
    r = cubic(id, "projectivized F4 hyperplane complements, one per tritangent trio", "F4",
              standard_tritangent_trio(), AK::linear, 45);
  else if (id == "D3n_union_c") return blowup_union(id, "nodal and cuspidal loci together", "D3n", "D3c");
  else if (id == "D3_2n_union_tn")
    return blowup_union(id, "two-nodal and tacnodal loci together", "D3_2n_hat", "D3_tn");
  else if (id == "D3_3n_union_tp")
    return blowup_union(id, "three-nodal and triple point loci together", "D3_3n_hat", "D3_tp");
  else if (id == "D4n") r = quartic(id, "kernel quotient of the D5 toric complement", "D5", {k4}, AK::toric, 1);
  else if (id == "D4c") r = quartic(id, "kernel quotient of the projectivized D5 hyperplane complement", "D5", {k4}, AK::linear, 1);
  else if (id == "D4_2n_A4")
    r = quartic(id, "A4 toric complements over W(D5)/W(A4)", "A4", {conic4, l4}, AK::toric, 16);
  else if (id == "D4_tn_A4")
    r = quartic(id, "projectivized A4 hyperplane complements over W(D5)/W(A4)", "A4", {conic4, l4}, AK::linear, 16);
  else if (id == "D4_2n_D4")
    r = quartic(id, "D4 toric complements over W(D5)/W(D4)", "D4", {{2, 0, -1, -1, -1, -1}, {1, -1, 0, 0, 0, 0}},
                AK::toric, 10);
  else if (id == "D4_tn_D4")
    r = quartic(id, "projectivized D4 hyperplane complements over W(D5)/W(D4)", "D4",
                {{2, 0, -1, -1, -1, -1}, {1, -1, 0, 0, 0, 0}}, AK::linear, 10);
  else if (id == "D4_3n")
    r = quartic(id, "A3 toric complements over W(D5)/W(A3)", "A3", {conic4, {1, -1, 0, 0, 0, 0}, e1}, AK::toric, 80);
  else if (id == "D4_tp")
    r = quartic(id, "projectivized A3 hyperplane complements over W(D5)/W(A3)", "A3", {conic4, {1, -1, 0, 0, 0, 0}, e1},
                AK::linear, 80);
  else if (id == "D4_4n")
    r = quartic(id, "A2 toric complements over W(D5)/W(A2)", "A2", {conic4, {1, -1, -1, 0, 0, 0}, e1, e2}, AK::toric,
                320);
  else
    fail("build_recipe: unknown moduli space " + id);
  r.dim = lattice_rank(r) - (r.projective ? 1 : 0);
  return r;
}

ModuliWorkbench::ModuliWorkbench(WorkbenchOptions opt) : opt_(std::move(opt)) {}
ModuliWorkbench::~ModuliWorkbench() = default;

const WeylGroup& ModuliWorkbench::e6() {
  if (!e6_) e6_ = std::make_unique<WeylGroup>(weyl_group(std::make_shared<RootSystem>(del_pezzo_roots(3)), "W(E6)"));
  return *e6_;
}

const CharacterTable& ModuliWorkbench::e6_table() {
  if (!e6_table_) {
    e6_table_ = std::make_unique<CharacterTable>(CharacterTable::compute(e6()));
    e6_table_->label_by_symmetric_powers();
  }
  return *e6_table_;
}

const WeylGroup& ModuliWorkbench::s6() {
  if (!s6_) s6_ = std::make_unique<WeylGroup>(symmetric_subgroup(e6(), {1, 2, 3, 4, 5, 6}, "S6"));
  return *s6_;
}

const CharacterTable& ModuliWorkbench::s6_table() {
  if (!s6_table_) {
    s6_table_ = std::make_unique<CharacterTable>(CharacterTable::compute(s6()));
    s6_table_->label_by_partitions({1, 2, 3, 4, 5, 6});
  }
  return *s6_table_;
}

SubgroupEmbedding ModuliWorkbench::s6_in_e6() { return embed(s6(), e6()); }

const WeylGroup& ModuliWorkbench::d5() {
  if (!d5_) d5_ = std::make_unique<WeylGroup>(weyl_group(std::make_shared<RootSystem>(del_pezzo_roots(4)), "W(D5)"));
  return *d5_;
}

const CharacterTable& ModuliWorkbench::d5_table() {
  if (!d5_table_) {
    d5_table_ = std::make_unique<CharacterTable>(CharacterTable::compute(d5()));
    d5_table_->label_by_symmetric_powers();
  }
  return *d5_table_;
}

const WeylGroup& ModuliWorkbench::s5() {
  if (!s5_) s5_ = std::make_unique<WeylGroup>(symmetric_subgroup(d5(), {1, 2, 3, 4, 5}, "S5"));
  return *s5_;
}

const CharacterTable& ModuliWorkbench::s5_table() {
  if (!s5_table_) {
    s5_table_ = std::make_unique<CharacterTable>(CharacterTable::compute(s5()));
    s5_table_->label_by_partitions({1, 2, 3, 4, 5});
  }
  return *s5_table_;
}

SubgroupEmbedding ModuliWorkbench::s5_in_d5() { return embed(s5(), d5()); }

const std::vector<ElementId>& ModuliWorkbench::d5_kernel() {
  if (kernel_.empty()) {
    // Automorphisms of a general quartic: elements fixing each conic-bundle pair {l - e_i, -K - (l - e_i)}.
    const WeylGroup& g = d5();
    Vec k = quartic_canonical();
    for (ElementId x = 0; x < g.order(); ++x) {
      IntMatrix m = g.matrix(x);
      bool ok = true;
      for (int i = 1; i <= 5 && ok; ++i) {
        Vec c(6, 0);
        c[0] = 1;
        c[i] = -1;
        Vec img = m * c, other(6);
        for (int j = 0; j < 6; ++j) other[j] = -k[j] - c[j];
        ok = img == c || img == other;
      }
      if (ok) kernel_.push_back(x);
    }
    if (kernel_.size() != 16) fail("d5_kernel: expected 16 elements, found " + std::to_string(kernel_.size()));
  }
  return kernel_;
}

SubgroupEmbedding ModuliWorkbench::d5_in_e6() {
  return embed(d5(), e6(), [](const IntMatrix& m) {
    IntMatrix out = IntMatrix::identity(7);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) out(i, j) = m(i, j);
    return out;
  });
}

const CharacterTable& ModuliWorkbench::table_for(SpaceFamily f) {
  return f == SpaceFamily::cubic ? e6_table() : s5_table();
}

const LatticeArrangement& ModuliWorkbench::arrangement(const std::string& root_type, ArrangementKind kind,
                                                       const std::vector<Vec>& classes, SpaceFamily family) {
  const WeylGroup& ambient = family == SpaceFamily::cubic ? e6() : d5();
  IntMatrix basis = orthogonal_complement(ambient.acting().lattice, classes);
  auto key = arrangement_key(root_type, kind, basis);
  std::string name;
  for (const auto& f : key) name += f + ";";
  auto it = arrangements_.find(name);
  if (it != arrangements_.end()) return *it->second;

  bool is_f4 = root_type == "F4";
  RootSystem rs = orthogonal_subsystem(ambient.acting(), classes, root_type, is_f4);
  auto roots = rs.positive_roots();
  auto a = std::make_unique<LatticeArrangement>();
  a->basis = basis;
  std::optional<CacheRecord> hit;
  if (opt_.cache) hit = opt_.cache->load("poset", key);
  if (hit) {
    a->poset = poset_from_record(*hit);
  } else {
    *a = make_arrangement(kind, basis, roots);
    if (opt_.cache) opt_.cache->store(poset_record(a->poset, key));
  }
  return *(arrangements_[name] = std::move(a));
}

const WeylGroup& ModuliWorkbench::component_group(const ModuliRecipe& r) {
  std::string name = r.root_type;
  for (const auto& c : r.classes)
    for (Int x : c) name += "," + std::to_string(x);
  auto it = subgroups_.find(name);
  if (it != subgroups_.end()) return *it->second;
  std::unique_ptr<WeylGroup> g;
  if (r.family == SpaceFamily::cubic) {
    if (r.root_type == "E6") return e6();
    g = std::make_unique<WeylGroup>(
        stabilizer(e6(), [&](ElementId x) { return preserves_classes(e6(), x, r.classes); }, "Stab"));
  } else {
    if (r.root_type == "D5") return d5();
    auto sub = std::make_shared<RootSystem>(orthogonal_subsystem(d5().acting(), r.classes, r.root_type));
    g = std::make_unique<WeylGroup>(reflection_subgroup(d5(), sub, "W(" + r.root_type + ")"));
  }
  const WeylGroup& ambient = r.family == SpaceFamily::cubic ? e6() : d5();
  if (Int(ambient.order() / g->order()) != r.components)
    fail("component_group: " + r.id + " has " + std::to_string(ambient.order() / g->order()) + " components, expected " +
         std::to_string(r.components));
  return *(subgroups_[name] = std::move(g));
}

GradedClassFunction ModuliWorkbench::compute_character(const ModuliRecipe& r) {
  if (!r.toric_part.empty())
    return blowup_combine(character(r.toric_part), character(r.projective_part));
  if (r.id == "D3" || r.id == "D4") fail("compute_character: " + r.id + " is derived, not assembled");

  const LatticeArrangement& arr = arrangement(r.root_type, r.kind, r.classes, r.family);
  const WeylGroup& g = component_group(r);

  auto compact = [&](bool twisted) {
    std::vector<std::string> key = arrangement_key(r.root_type, r.kind, arr.basis);
    key.push_back("group=" + g.name() + "/" + std::to_string(g.order()));
    key.push_back(twisted ? "twist=minus_identity" : "twist=none");
    if (opt_.cache)
      if (auto hit = opt_.cache->load("poincare", key)) return graded_from_record(*hit, g);
    GradedClassFunction f = equivariant_poincare(arr, g, twisted, opt_.threads);
    if (opt_.cache) opt_.cache->store(graded_record(f, key));
    return f;
  };
  GradedClassFunction p = compact(false);
  if (r.inversion_quotient) p = inversion_average(p, compact(true));
  if (r.projective) p = projectivize(p);
  GradedClassFunction ord = to_ordinary(p, r.dim);

  if (r.family == SpaceFamily::cubic) {
    if (&g == &e6()) return ord;
    return induce_function(ord, embed(g, e6()));
  }
  GradedClassFunction up = &g == &d5() ? ord : induce_function(ord, embed(g, d5()));
  return restrict_function(quotient_average(up, d5_kernel()), s5_in_d5());
}

const GradedClassFunction& ModuliWorkbench::character(const std::string& id) {
  auto it = characters_.find(id);
  if (it != characters_.end()) return it->second;
  ModuliRecipe r = build_recipe(id);
  GradedClassFunction f;
  if (id == "D4") f = point_count_character(5);
  else if (id == "D3") f = graded_character(run_sieve(*this).result);
  else f = compute_character(r);
  return characters_[id] = std::move(f);
}

CohomologyTable ModuliWorkbench::compute_cohomology(const std::string& id) {
  if (id == "D4") return quartic_lifts();
  if (id == "D3") return run_sieve(*this).result;
  ModuliRecipe r = build_recipe(id);
  CohomologyTable t = decompose_graded(table_for(r.family), character(id));
  for (const auto& row : t.multiplicities)
    for (Int m : row)
      if (m < 0) fail("compute_cohomology: negative multiplicity in " + id);
  return t;
}

const std::vector<CountPolynomial>& ModuliWorkbench::point_counts(int n) {
  auto it = counts_.find(n);
  if (it != counts_.end()) return it->second;
  std::vector<CountPolynomial> out;
  int degree = 2 * (n - 4);
  for (const auto& type : count_table_types(n)) {
    CountPolynomial cp;
    cp.cycle_type = type;
    std::vector<std::pair<Int, Int>> samples;
    for (Int q : opt_.q_samples) {
      std::vector<std::string> key{"n=" + std::to_string(n), "type=" + cycle_notation(type), "q=" + std::to_string(q)};
      CountResult res;
      std::optional<CacheRecord> hit;
      if (opt_.cache) hit = opt_.cache->load("count", key);
      if (hit && hit->records.size() == 1 && hit->records[0].size() == 2) {
        res.cycle_type = type;
        res.q = q;
        res.raw = hit->records[0][0];
        res.orbits = hit->records[0][1];
      } else {
        res = count_fixed({permutation_of_type(type), q, true}, opt_.threads);
        if (opt_.cache) opt_.cache->store({"count", key, {{res.raw, res.orbits}}});
      }
      cp.samples.push_back(res);
      samples.push_back({q, res.orbits});
    }
    cp.poly = interpolate(samples, degree, true);
    out.push_back(cp);
  }
  return counts_[n] = std::move(out);
}

GradedClassFunction ModuliWorkbench::point_count_character(int n) {
  const WeylGroup& g = n == 5 ? s5() : s6();
  std::vector<int> points;
  for (int i = 1; i <= n; ++i) points.push_back(i);
  std::map<std::vector<int>, Poly> by_type;
  for (const auto& cp : point_counts(n)) {
    auto tr = counts_to_cohomology(cp.poly, 2 * (n - 4));
    by_type[cp.cycle_type] = poly_trim(tr);
  }
  GradedClassFunction f;
  f.group = &g;
  for (const auto& c : g.classes()) {
    auto it = by_type.find(cycle_type_on(g.matrix(c.representative), points));
    if (it == by_type.end()) fail("point_count_character: missing cycle type");
    f.values.push_back(it->second);
  }
  return f;
}

CohomologyTable ModuliWorkbench::point_count_cohomology(int n) {
  return decompose_graded(n == 5 ? s5_table() : s6_table(), point_count_character(n));
}

CohomologyTable ModuliWorkbench::quartic_lifts() {
  CohomologyTable s5t = point_count_cohomology(5);
  const CharacterTable& t = d5_table();
  SubgroupEmbedding e = s5_in_d5();
  const auto& kernel = d5_kernel();
  CohomologyTable out;
  out.table = &t;
  for (std::size_t deg = 0; deg < s5t.multiplicities.size(); ++deg) {
    ClassFunction target = s5t.character(int(deg));
    std::vector<Int> row(t.size(), 0);
    int found = 0;
    for (int i = 0; i < t.size(); ++i) {
      const Irrep& ir = t.irreps()[i];
      bool trivial_on_kernel = std::all_of(kernel.begin(), kernel.end(), [&](ElementId x) {
        return ir.values[d5().class_of(x)] == ir.degree();
      });
      if (trivial_on_kernel && restrict_function(t.character(i), e) == target) {
        row[i] = 1;
        ++found;
      }
    }
    if (found != 1)
      fail("quartic_lifts: degree " + std::to_string(deg) + " has " + std::to_string(found) + " lifts");
    out.multiplicities.push_back(row);
  }
  return out;
}

WeylGroup root_group(const std::string& type) {
  if (type == "F4") {
    WeylGroup e6 = weyl_group(std::make_shared<RootSystem>(root_system("E6")), "W(E6)");
    auto trio = standard_tritangent_trio();
    return stabilizer(e6, [&](ElementId x) { return preserves_classes(e6, x, trio); }, "W(F4)");
  }
  return weyl_group(std::make_shared<RootSystem>(root_system(type)), "W(" + type + ")");
}

LatticeArrangement root_arrangement(const std::string& type, ArrangementKind kind, Cache* cache) {
  RootSystem rs = root_system(type);
  auto roots = rs.positive_roots();
  IntMatrix basis = type == "F4" ? orthogonal_complement(rs.lattice, standard_tritangent_trio())
                                 : hermite(IntMatrix::from_rows(roots, rs.lattice.rank())).H;
  auto key = arrangement_key(type, kind, basis);
  if (cache)
    if (auto hit = cache->load("poset", key)) {
      LatticeArrangement a;
      a.basis = basis;
      a.poset = poset_from_record(*hit);
      return a;
    }
  LatticeArrangement a = make_arrangement(kind, basis, roots);
  if (cache) cache->store(poset_record(a.poset, key));
  return a;
}

CohomologyTable decompose_graded(const CharacterTable& t, const GradedClassFunction& f) {
  CohomologyTable out;
  out.table = &t;
  for (int k = 0; k <= f.degree(); ++k) out.multiplicities.push_back(t.multiplicities(f.coefficient(k)));
  return out;
}

}  // namespace weylcoh
