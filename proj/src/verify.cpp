#include "weylcoh/verify.hpp"

#include "weylcoh/finitegeom.hpp"
#include "weylcoh/sieve.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace weylcoh {

namespace {

std::string summarize(const std::vector<TableMismatch>& m) {
  if (m.empty()) return "all entries agree";
  std::ostringstream os;
  os << m.size() << " entries differ";
  for (std::size_t i = 0; i < m.size() && i < 4; ++i)
    os << (i ? "; " : ": ") << "H^" << m[i].degree << " " << m[i].label << " " << m[i].got << " vs " << m[i].want;
  if (m.size() > 4) os << "; ...";
  return os.str();
}

}  // namespace

std::vector<TableMismatch> compare_table(const CohomologyTable& computed, const reference::LabeledTable& want) {
  std::vector<std::string> labels = computed.table->labels();
  for (const auto& l : want.labels)
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
  int degrees = int(std::max(computed.multiplicities.size(), want.rows.size()));
  std::vector<TableMismatch> out;
  for (int d = 0; d < degrees; ++d)
    for (const auto& l : labels) {
      int j = computed.table->find(l);
      Int got = j >= 0 && d < int(computed.multiplicities.size()) ? computed.multiplicities[d][j] : 0;
      bool listed = std::find(want.labels.begin(), want.labels.end(), l) != want.labels.end();
      Int w = listed ? want.at(d, l) : 0;
      if (got != w) out.push_back({d, l, got, w});
    }
  return out;
}

CheckResult check_counts(ModuliWorkbench& wb, int n) {
  CheckResult r{"point counts of " + std::to_string(n) + " points", true, ""};
  const auto& ref = reference::twisted_counts(n);
  const auto& got = wb.point_counts(n);
  int bad = 0;
  for (const auto& row : ref) {
    auto it = std::find_if(got.begin(), got.end(), [&](const CountPolynomial& c) { return c.cycle_type == row.cycle_type; });
    if (it == got.end() || poly_trim(it->poly) != poly_trim(row.poly)) {
      ++bad;
      if (r.detail.empty())
        r.detail = cycle_notation(row.cycle_type) + ": " + (it == got.end() ? "missing" : poly_to_string(it->poly)) +
                   " vs " + poly_to_string(row.poly);
    }
  }
  r.ok = bad == 0 && got.size() == ref.size();
  if (r.ok) r.detail = std::to_string(ref.size()) + " polynomials agree";
  return r;
}

CheckResult check_five_point_traces(ModuliWorkbench& wb) {
  CheckResult r{"traces on five points", true, ""};
  const auto& ref = reference::five_point_traces();
  GradedClassFunction f = wb.point_count_character(5);
  const WeylGroup& g = wb.s5();
  int bad = 0;
  for (std::size_t k = 0; k < ref.cycle_types.size(); ++k) {
    int cls = -1;
    for (int c = 0; c < g.num_classes(); ++c)
      if (cycle_type_on(g.matrix(g.classes()[c].representative), {1, 2, 3, 4, 5}) == ref.cycle_types[k]) cls = c;
    if (cls < 0) fail("check_five_point_traces: no class of type " + cycle_notation(ref.cycle_types[k]));
    for (std::size_t d = 0; d < ref.rows.size(); ++d)
      if (poly_coeff(f.values[cls], int(d)) != ref.rows[d][k]) ++bad;
  }
  r.ok = bad == 0;
  r.detail = r.ok ? "all traces agree" : std::to_string(bad) + " traces differ";
  return r;
}

CheckResult check_six_point_cohomology(ModuliWorkbench& wb) {
  auto m = compare_table(wb.point_count_cohomology(6), reference::six_point_cohomology());
  return {"six points over S6", m.empty(), summarize(m)};
}

CheckResult check_space(ModuliWorkbench& wb, const std::string& id) {
  auto m = compare_table(wb.compute_cohomology(id), reference::cohomology(id));
  return {id, m.empty(), summarize(m)};
}

CheckResult check_quartic_lifts(ModuliWorkbench& wb) {
  auto m = compare_table(wb.quartic_lifts(), reference::quartic_cohomology());
  return {"quartic lifts over W(D5)", m.empty(), summarize(m)};
}

CheckResult check_marked_cubics(ModuliWorkbench& wb) {
  auto m = compare_table(wb.compute_cohomology("D3"), reference::cubic_cohomology());
  return {"marked cubics over W(E6)", m.empty(), summarize(m)};
}

CheckResult check_nodal_betti(ModuliWorkbench& wb) {
  auto dims = wb.compute_cohomology("D3n").dimensions();
  bool ok = dims == reference::nodal_betti();
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
  return {"Betti numbers of nodal cubics", ok, os.str()};
}

std::vector<CheckResult> verify_all(ModuliWorkbench& wb) {
  std::vector<CheckResult> out{check_counts(wb, 5), check_counts(wb, 6), check_five_point_traces(wb),
                               check_six_point_cohomology(wb), check_quartic_lifts(wb)};
  for (const auto& id : reference::tabulated_spaces()) out.push_back(check_space(wb, id));
  out.push_back(check_nodal_betti(wb));
  out.push_back(check_six_point_betti(wb));
  out.push_back(check_sieve(wb));
  return out;
}

CheckResult check_sieve(ModuliWorkbench& wb) {
  CheckResult r{"sieve for marked cubics", true, ""};
  SieveReport rep = run_sieve(wb);
  const CharacterTable& t = wb.e6_table();
  std::vector<std::string> problems;
  auto as_labels = [&](const std::vector<Int>& m) {
    std::multiset<std::string> out;
    for (int j = 0; j < int(m.size()); ++j)
      for (Int k = 0; k < m[j]; ++k) out.insert(t.irreps()[j].label);
    return out;
  };
  auto same_sets = [&](const std::vector<std::vector<Int>>& got, const std::vector<std::vector<std::string>>& want) {
    std::multiset<std::multiset<std::string>> a, b;
    for (const auto& m : got) a.insert(as_labels(m));
    for (const auto& w : want) b.insert(std::multiset<std::string>(w.begin(), w.end()));
    return a == b;
  };
  const auto& cand = rep.searched.candidates;
  if (cand.size() < 5 || !same_sets(cand[3], reference::h3_candidates())) problems.push_back("H^3 candidates differ");
  if (cand.size() < 5 || !same_sets(cand[4], reference::h4_candidates())) problems.push_back("H^4 candidates differ");
  if (problems.empty()) {
    // positivity removes exactly the H^3 candidates containing phi_20^10 + phi_60^8
    int a = t.find("phi_{20}^{10}"), b = t.find("phi_{60}^{8}");
    auto alive = rep.positive.h3_alive();
    for (int i = 0; i < int(cand[3].size()); ++i) {
      bool contains = cand[3][i][a] > 0 && cand[3][i][b] > 0;
      bool kept = std::find(alive.begin(), alive.end(), i) != alive.end();
      if (contains == kept) problems.push_back("positivity filter keeps the wrong H^3 candidates");
    }
    std::size_t h4 = rep.positive.h4_alive().size(), h4s = rep.signed_euler.h4_alive().size(),
                h4t = rep.twisted_euler.h4_alive().size();
    if (h4 - h4s != 4) problems.push_back("signed Euler filter removes " + std::to_string(h4 - h4s) + " H^4 candidates");
    if (h4s - h4t != 3) problems.push_back("sign-free Euler filter removes " + std::to_string(h4s - h4t) + " H^4 candidates");
  }
  auto m = compare_table(rep.result, reference::cubic_cohomology());
  if (!m.empty()) problems.push_back("result: " + summarize(m));
  r.ok = problems.empty();
  if (r.ok) {
    r.detail = "2 and 8 candidates; positivity, signed and sign-free filters remove 1, 4 and 3; result agrees";
  } else {
    for (const auto& p : problems) r.detail += (r.detail.empty() ? "" : "; ") + p;
  }
  return r;
}

CheckResult check_six_point_betti(ModuliWorkbench& wb) {
  Poly product = poly_mul(five_point_poincare(), fibre_poincare({7, 11, 13}));
  const auto& counts = wb.point_counts(6);
  Vec from_counts;
  for (const auto& c : counts)
    if (c.cycle_type == std::vector<int>(6, 1)) from_counts = counts_to_cohomology(c.poly, 4);
  const auto& want = reference::six_point_betti();
  bool ok = poly_trim(product) == want && from_counts == want;
  std::ostringstream os;
  os << "product " << poly_to_string(product, "t") << ", counts";
  for (Int x : from_counts) os << ' ' << x;
  return {"Betti numbers of six points", ok, os.str()};
}

namespace {

CheckResult check_character_tables(ModuliWorkbench& wb) {
  std::vector<std::pair<std::string, const CharacterTable*>> tables{
      {"W(E6)", &wb.e6_table()}, {"W(D5)", &wb.d5_table()}, {"S5", &wb.s5_table()}, {"S6", &wb.s6_table()}};
  std::vector<std::unique_ptr<WeylGroup>> groups;
  std::vector<std::unique_ptr<CharacterTable>> own;
  for (std::string type : {"F4", "A4", "A3", "A2"}) {
    groups.push_back(std::make_unique<WeylGroup>(root_group(type)));
    own.push_back(std::make_unique<CharacterTable>(CharacterTable::compute(*groups.back())));
    tables.push_back({"W(" + type + ")", own.back().get()});
  }
  std::string bad;
  for (const auto& [name, t] : tables) {
    Int squares = 0;
    for (const auto& ir : t->irreps()) squares += ir.degree() * ir.degree();
    bool ok = t->verify() && std::size_t(squares) == t->group().order() && t->size() == t->group().num_classes();
    if (!ok) bad += (bad.empty() ? "" : ", ") + name;
  }
  return {"character tables", bad.empty(), bad.empty() ? "orthogonality and sum of squares hold for 8 groups" : "fails for " + bad};
}

bool mobius_ok(const ArrangementPoset& p) {
  if (p.mobius.empty() || p.mobius[0] != 1) return false;
  for (int z = 1; z < p.size(); ++z) {
    Int sum = p.mobius[z];
    for (int y = 0; y < p.size(); ++y)
      if (p.above[z].test(y)) sum += p.mobius[y];
    if (sum != 0) return false;
  }
  return true;
}

const std::vector<std::string>& property_types() {
  static const std::vector<std::string> v{"A1", "A2", "A3", "A4", "D4", "D5", "E6", "F4"};
  return v;
}

CheckResult check_mobius(ModuliWorkbench& wb) {
  std::string bad;
  int n = 0;
  for (const auto& type : property_types())
    for (auto kind : {ArrangementKind::linear, ArrangementKind::toric}) {
      ++n;
      if (!mobius_ok(root_arrangement(type, kind, wb.options().cache).poset))
        bad += (bad.empty() ? "" : ", ") + type + (kind == ArrangementKind::toric ? " toric" : " linear");
    }
  for (const auto& id : moduli_ids()) {
    ModuliRecipe r = build_recipe(id);
    if (r.derived || r.root_type.empty()) continue;
    ++n;
    if (!mobius_ok(wb.arrangement(r.root_type, r.kind, r.classes, r.family).poset)) bad += (bad.empty() ? "" : ", ") + id;
  }
  return {"Moebius identities", bad.empty(), bad.empty() ? std::to_string(n) + " posets" : "fails for " + bad};
}

CheckResult check_macmeikan_oracle() {
  int compared = 0, wrong = 0, nontrivial = 0;
  for (std::string type : {"A1", "A2", "A3"}) {
    WeylGroup g = root_group(type);
    for (auto kind : {ArrangementKind::linear, ArrangementKind::toric}) {
      LatticeArrangement a = root_arrangement(type, kind);
      for (const auto& c : g.classes()) {
        IntMatrix m = restrict_to_sublattice(g.matrix(c.representative), a.basis);
        Poly p = complement_poincare(a.poset, m);
        if (c.order > 1) ++nontrivial;
        for (Int q : {2, 3, 4, 5}) {
          ++compared;
          if (count_from_poincare(p, a.poset.rank, q) != Rational(oracle_count(kind, a.poset.roots, m, q))) ++wrong;
        }
      }
    }
  }
  bool ok = wrong == 0 && nontrivial >= 3;
  return {"Macmeikan sums against brute-force counts", ok,
          std::to_string(compared) + " counts at " + std::to_string(nontrivial) + " non-identity classes, " +
              std::to_string(wrong) + " differ"};
}

CheckResult check_projectivize() {
  int n = 0;
  std::string bad;
  for (const auto& type : property_types()) {
    WeylGroup g = root_group(type);
    GradedClassFunction f = equivariant_poincare(root_arrangement(type, ArrangementKind::linear), g);
    try {
      GradedClassFunction p = projectivize(f);
      for (int c = 0; c < g.num_classes(); ++c, ++n)
        if (poly_mul(p.values[c], Poly{0, 1, 1}) != poly_trim(f.values[c])) bad += (bad.empty() ? "" : ", ") + type;
    } catch (const std::runtime_error&) {
      bad += (bad.empty() ? "" : ", ") + type;
    }
  }
  return {"projectivization is exact", bad.empty(), bad.empty() ? std::to_string(n) + " classes" : "fails for " + bad};
}

CheckResult check_quotient_average(ModuliWorkbench& wb) {
  int n = 0;
  std::string bad;
  for (const auto& id : moduli_ids()) {
    ModuliRecipe r = build_recipe(id);
    if (!r.kernel_quotient || r.root_type != "D5") continue;
    const LatticeArrangement& a = wb.arrangement(r.root_type, r.kind, r.classes, r.family);
    GradedClassFunction avg = quotient_average(equivariant_poincare(a, wb.d5()), wb.d5_kernel());
    for (int k = 0; k <= avg.degree(); ++k, ++n) {
      try {
        wb.d5_table().multiplicities(avg.coefficient(k));
      } catch (const std::runtime_error&) {
        bad += (bad.empty() ? "" : ", ") + id + " degree " + std::to_string(k);
      }
    }
  }
  // every quartic space goes through the average before it is decomposed over S5
  for (const auto& id : moduli_ids()) {
    ModuliRecipe r = build_recipe(id);
    if (r.family != SpaceFamily::quartic || r.derived) continue;
    try {
      wb.compute_cohomology(id);
      ++n;
    } catch (const std::runtime_error&) {
      bad += (bad.empty() ? "" : ", ") + id;
    }
  }
  return {"quotient averages are integral", bad.empty(), bad.empty() ? std::to_string(n) + " characters" : "fails for " + bad};
}

CheckResult check_frobenius_reciprocity(ModuliWorkbench& wb) {
  std::mt19937 rng(20261016);
  std::vector<std::pair<std::string, SubgroupEmbedding>> embeddings{
      {"S6 in W(E6)", wb.s6_in_e6()}, {"S5 in W(D5)", wb.s5_in_d5()}, {"W(D5) in W(E6)", wb.d5_in_e6()}};
  auto table_of = [&](const WeylGroup* g) -> const CharacterTable& {
    if (g == &wb.e6()) return wb.e6_table();
    if (g == &wb.s6()) return wb.s6_table();
    if (g == &wb.d5()) return wb.d5_table();
    if (g == &wb.s5()) return wb.s5_table();
    fail("check_frobenius_reciprocity: no table for " + g->name());
  };
  int pairs = 0, wrong = 0;
  for (const auto& [name, e] : embeddings) {
    const CharacterTable& small = table_of(e.source);
    const CharacterTable& big = table_of(e.target);
    for (int k = 0; k < 20; ++k, ++pairs) {
      ClassFunction a = small.character(std::uniform_int_distribution<int>(0, small.size() - 1)(rng));
      ClassFunction b = big.character(std::uniform_int_distribution<int>(0, big.size() - 1)(rng));
      if (inner_product(induce_function(a, e), b) != inner_product(a, restrict_function(b, e))) ++wrong;
    }
  }
  return {"Frobenius reciprocity", wrong == 0, std::to_string(pairs) + " random pairs, " + std::to_string(wrong) + " fail"};
}

}  // namespace

std::vector<CheckResult> property_checks(ModuliWorkbench& wb) {
  return {check_character_tables(wb), check_mobius(wb),           check_macmeikan_oracle(),
          check_projectivize(),       check_quotient_average(wb), check_frobenius_reciprocity(wb)};
}

Poly five_point_poincare() {
  // Lines through pairs of [1:0:0], [0:1:0], [0:0:1], [1:1:1]: the A3 hyperplanes in C^3.
  std::vector<Vec> lines{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
  ArrangementPoset p = hyperplane_poset(3, lines);
  Poly compact = projectivize(complement_poincare(p, IntMatrix::identity(3)));
  return poly_trim(compact_to_ordinary(compact, 2));
}

Poly fibre_poincare(const std::vector<Int>& qs) {
  std::vector<std::pair<Int, Int>> samples;
  for (Int q : qs) {
    FieldTower F(q, 1);
    auto plane = projective_plane(F, 1);
    auto pt = [&](Int a, Int b, Int c) { return normalize(F, {F.from_int(a), F.from_int(b), F.from_int(c)}); };
    std::vector<ProjectivePoint> five{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)};
    for (const auto& p : plane) {
      five.push_back(p);
      if (general_position(F, five, false)) break;
      five.pop_back();
    }
    if (five.size() != 5) fail("fibre_poincare: no five points in general position over F_" + std::to_string(q));
    Int count = 0;
    for (const auto& p : plane) {
      auto six = five;
      six.push_back(p);
      if (general_position(F, six, true)) ++count;
    }
    samples.push_back({q, count});
  }
  Poly count = interpolate(samples, 2, true);
  Vec traces = counts_to_cohomology(count, 2);
  return poly_trim(traces);
}

}  // namespace weylcoh
