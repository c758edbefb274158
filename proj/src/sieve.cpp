#include "weylcoh/sieve.hpp"

#include "weylcoh/moduli.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace weylcoh {

std::vector<int> SieveState::h3_alive() const {
  std::set<int> s;
  for (auto [a, b] : assignments) s.insert(a);
  return {s.begin(), s.end()};
}

std::vector<int> SieveState::h4_alive() const {
  std::set<int> s;
  for (auto [a, b] : assignments) s.insert(b);
  return {s.begin(), s.end()};
}

std::vector<std::vector<Int>> restriction_solutions(const std::vector<std::vector<Int>>& res,
                                                    const std::vector<Int>& target, const std::vector<Int>& bound) {
  int n = int(res.size());
  // Larger restrictions first prune harder.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::accumulate(res[a].begin(), res[a].end(), Int(0)) > std::accumulate(res[b].begin(), res[b].end(), Int(0));
  });
  std::vector<std::vector<Int>> out;
  std::vector<Int> m(n, 0), rest = target;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; })) out.push_back(m);
      return;
    }
    int j = order[pos];
    for (Int k = 0; k <= bound[j]; ++k) {
      if (k > 0) {
        bool ok = true;
        for (std::size_t c = 0; c < rest.size(); ++c) {
          if (res[j][c] < 0) fail("restriction_solutions: restriction is not a character");
          rest[c] -= res[j][c];
          if (rest[c] < 0) ok = false;
        }
        m[j] = k;
        if (!ok) break;
      }
      self(self, pos + 1);
    }
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] += m[j] * res[j][c];
    m[j] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SieveState sieve_candidates(const CharacterTable& e6, const CharacterTable& s6, const SubgroupEmbedding& s6_in_e6,
                            const CohomologyTable& six_point,
                            const std::vector<std::pair<std::string, CohomologyTable>>& comparisons) {
  SieveState s;
  s.table = &e6;
  std::vector<std::vector<Int>> res;
  for (int j = 0; j < e6.size(); ++j) res.push_back(s6.multiplicities(restrict_function(e6.character(j), s6_in_e6)));
  int top = int(six_point.multiplicities.size()) - 1;
  for (int deg = 0; deg <= top; ++deg) {
    std::vector<Int> bound(e6.size());
    for (int j = 0; j < e6.size(); ++j) {
      // the restriction itself caps each multiplicity
      Int b = std::numeric_limits<Int>::max();
      for (std::size_t c = 0; c < res[j].size(); ++c)
        if (res[j][c] > 0) b = std::min(b, six_point.multiplicities[deg][c] / res[j][c]);
      for (const auto& [id, t] : comparisons) {
        Int m = deg < int(t.multiplicities.size()) ? t.multiplicities[deg][j] : 0;
        b = std::min(b, m);
      }
      bound[j] = b;
    }
    auto sols = restriction_solutions(res, six_point.multiplicities[deg], bound);
    if (sols.empty()) fail("sieve_candidates: no candidate for H^" + std::to_string(deg));
    std::ostringstream os;
    os << "H^" << deg << ": " << sols.size() << " candidate" << (sols.size() == 1 ? "" : "s");
    s.log.push_back(os.str());
    s.candidates.push_back(std::move(sols));
  }
  if (top < 4) fail("sieve_candidates: expected degrees 0..4");
  for (int i = 1; i < 3; ++i)
    if (s.candidates[i].size() != 1) fail("sieve_candidates: H^" + std::to_string(i) + " is not determined");
  for (int a = 0; a < int(s.candidates[3].size()); ++a)
    for (int b = 0; b < int(s.candidates[4].size()); ++b) s.assignments.push_back({a, b});
  return s;
}

namespace {

// Traces of the candidate assignment (a, b) in each degree, per W(E6) class.
std::vector<ClassFunction> degree_characters(const SieveState& s, int a, int b) {
  std::vector<ClassFunction> out;
  for (int i = 0; i < 3; ++i) out.push_back(s.table->from_multiplicities(s.candidates[i][0]));
  out.push_back(s.table->from_multiplicities(s.candidates[3][a]));
  out.push_back(s.table->from_multiplicities(s.candidates[4][b]));
  return out;
}

}  // namespace

SieveState positivity_filter(SieveState s, const std::vector<Int>& qs) {
  // An H^3 candidate survives if some H^4 candidate makes every count nonnegative; H^4 is
  // left to the Euler filters.
  std::set<int> good;
  for (auto [a, b] : s.assignments) {
    if (good.count(a)) continue;
    auto chars = degree_characters(s, a, b);
    bool ok = true;
    for (Int q : qs)
      for (int c = 0; c < s.table->group().num_classes() && ok; ++c) {
        Rational count(0);
        Int pw = 1;
        for (int i = 4; i >= 0; --i) {
          count += chars[i].values[c] * Rational(pw);
          pw = checked_mul(pw, -q);
        }
        if (count < Rational(0)) ok = false;
      }
    if (ok) good.insert(a);
  }
  std::vector<std::pair<int, int>> keep;
  for (auto [a, b] : s.assignments)
    if (good.count(a)) keep.push_back({a, b});
  std::ostringstream os;
  os << "positivity at q in {";
  for (std::size_t i = 0; i < qs.size(); ++i) os << (i ? "," : "") << qs[i];
  os << "}: " << good.size() << " of " << s.h3_alive().size() << " H^3 candidates remain";
  s.log.push_back(os.str());
  if (keep.empty()) fail("positivity_filter: every assignment was discarded");
  s.assignments = keep;
  return s;
}

SieveState euler_filter(SieveState s, const EulerData& d, bool twisted) {
  std::vector<int> classes;
  for (std::size_t c = 0; c < d.fusion.size(); ++c)
    if (d.is_new[c] && (twisted ? d.unsigned_sum[c] : d.signed_sum[c]) == 0) classes.push_back(int(c));
  std::vector<std::pair<int, int>> keep;
  for (auto [a, b] : s.assignments) {
    auto chars = degree_characters(s, a, b);
    bool ok = true;
    for (int c : classes) {
      Rational sum(0);
      for (int i = 0; i <= 4; ++i) sum += (twisted || i % 2 == 0 ? Rational(1) : Rational(-1)) * chars[i].values[d.fusion[c]];
      if (!(sum == Rational(0))) ok = false;
    }
    if (ok) keep.push_back({a, b});
  }
  std::ostringstream os;
  std::size_t before = s.h4_alive().size();
  if (keep.empty()) fail("euler_filter: every assignment was discarded");
  s.assignments = keep;
  os << (twisted ? "sign-free" : "signed") << " Euler filter on " << classes.size() << " new classes: "
     << s.h4_alive().size() << " of " << before << " H^4 candidates remain";
  s.log.push_back(os.str());
  return s;
}

SieveReport run_sieve(ModuliWorkbench& wb) {
  SieveReport r;
  r.comparison_ids = {"D3n_union_c", "D3_2n_union_tn", "D3_3n_union_tp", "D3n", "D3c", "D3_2n_hat", "D3_tn", "D3_3n_hat"};
  std::vector<std::pair<std::string, CohomologyTable>> comparisons;
  for (const auto& id : r.comparison_ids) comparisons.push_back({id, wb.compute_cohomology(id)});
  CohomologyTable six = wb.point_count_cohomology(6);
  const CharacterTable& e6 = wb.e6_table();
  r.searched = sieve_candidates(e6, wb.s6_table(), wb.s6_in_e6(), six, comparisons);
  r.positive = positivity_filter(r.searched, {2, 3, 5});

  // Euler sums of the quartic space over W(D5), from its lifted cohomology.
  CohomologyTable quartic = wb.quartic_lifts();
  SubgroupEmbedding d5e6 = wb.d5_in_e6();
  SubgroupEmbedding s6e6 = wb.s6_in_e6();
  std::set<int> from_s6(s6e6.fusion.begin(), s6e6.fusion.end());
  const WeylGroup& d5 = wb.d5();
  EulerData d;
  d.fusion = d5e6.fusion;
  for (int c = 0; c < d5.num_classes(); ++c) {
    d.is_new.push_back(!from_s6.count(d.fusion[c]));
    d.order.push_back(d5.classes()[c].order);
    Int sgn = 0, plain = 0;
    for (std::size_t i = 0; i < quartic.multiplicities.size(); ++i) {
      Int v = quartic.character(int(i)).values[c].to_integer();
      sgn += (i % 2 ? -v : v);
      plain += v;
    }
    d.signed_sum.push_back(sgn);
    d.unsigned_sum.push_back(plain);
    if (sgn == 0) {
      ++r.zero_classes_signed;
      if (d.is_new.back()) ++r.new_zero_classes_signed;
    }
  }
  r.signed_euler = euler_filter(r.positive, d, false);
  r.twisted_euler = euler_filter(r.signed_euler, d, true);

  const SieveState& f = r.twisted_euler;
  if (f.assignments.size() != 1) fail("run_sieve: " + std::to_string(f.assignments.size()) + " assignments survive");
  r.result.table = &e6;
  for (int i = 0; i < 3; ++i) r.result.multiplicities.push_back(f.candidates[i][0]);
  r.result.multiplicities.push_back(f.candidates[3][f.assignments[0].first]);
  r.result.multiplicities.push_back(f.candidates[4][f.assignments[0].second]);
  return r;
}

GradedClassFunction graded_character(const CohomologyTable& t) {
  GradedClassFunction f;
  f.group = &t.table->group();
  int n = t.table->group().num_classes();
  f.values.assign(n, Poly{});
  for (std::size_t i = 0; i < t.multiplicities.size(); ++i) {
    ClassFunction c = t.character(int(i));
    for (int k = 0; k < n; ++k) {
      Poly mono(i + 1, 0);
      mono[i] = c.values[k].to_integer();
      f.values[k] = poly_add(f.values[k], mono);
    }
  }
  for (auto& p : f.values) p = poly_trim(p);
  return f;
}

std::string format_multiplicities(const CharacterTable& t, const std::vector<Int>& m) {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < t.size(); ++j) {
    if (m[j] == 0) continue;
    if (!first) os << (m[j] < 0 ? " - " : " + ");
    else if (m[j] < 0) os << "-";
    Int a = m[j] < 0 ? -m[j] : m[j];
    if (a != 1) os << a << ' ';
    os << t.irreps()[j].label;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace weylcoh
