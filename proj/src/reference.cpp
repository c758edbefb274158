#include "weylcoh/reference.hpp"

#include "weylcoh/intmat.hpp"

#include <algorithm>
#include <map>

namespace weylcoh::reference {

Int LabeledTable::at(int degree, const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) fail("LabeledTable: unknown label " + label);
  if (degree < 0 || degree >= int(rows.size())) return 0;
  return rows[degree][it - labels.begin()];
}

const std::vector<std::string>& e6_labels() {
  static const std::vector<std::string> v{
      "phi_{1}^{0}",   "phi_{1}^{36}",  "phi_{6}^{25}",  "phi_{6}^{1}",   "phi_{10}^{9}",
      "phi_{15}^{17}", "phi_{15}^{16}", "phi_{15}^{5}",  "phi_{15}^{4}",  "phi_{20}^{20}",
      "phi_{20}^{2}",  "phi_{20}^{10}", "phi_{24}^{12}", "phi_{24}^{6}",  "phi_{30}^{15}",
      "phi_{30}^{3}",  "phi_{60}^{11}", "phi_{60}^{5}",  "phi_{60}^{8}",  "phi_{64}^{13}",
      "phi_{64}^{4}",  "phi_{80}^{7}",  "phi_{81}^{6}",  "phi_{81}^{10}", "phi_{90}^{8}"};
  return v;
}

const std::vector<std::string>& s5_labels() {
  static const std::vector<std::string> v{"s_{5}",     "s_{1^5}",   "s_{4,1}",  "s_{2,1^3}",
                                          "s_{3,2}",   "s_{2^2,1}", "s_{3,1^2}"};
  return v;
}

const std::vector<std::string>& s6_labels() {
  static const std::vector<std::string> v{"s_{6}",   "s_{1^6}",     "s_{2,1^4}", "s_{5,1}",
                                          "s_{2^3}", "s_{3^2}",     "s_{2^2,1^2}", "s_{4,2}",
                                          "s_{3,1^3}", "s_{4,1^2}", "s_{3,2,1}"};
  return v;
}

const std::vector<CountRow>& twisted_counts(int n) {
  static const std::vector<CountRow> five{
      {{5}, {1, 0, 1}},
      {{4, 1}, {0, 1, 1}},
      {{3, 2}, {0, -1, 1}},
      {{3, 1, 1}, {0, 1, 1}},
      {{2, 2, 1}, {-2, -1, 1}},
      {{2, 1, 1, 1}, {0, -1, 1}},
      {{1, 1, 1, 1, 1}, {6, -5, 1}},
  };
  static const std::vector<CountRow> six{
      {{6}, {0, 0, 0, -1, 1}},
      {{5, 1}, {0, 0, 1, 0, 1}},
      {{4, 2}, {-2, -1, -1, -1, 1}},
      {{4, 1, 1}, {0, -1, -1, 1, 1}},
      {{3, 3}, {12, -2, 0, -3, 1}},
      {{3, 2, 1}, {0, 1, 0, -2, 1}},
      {{3, 1, 1, 1}, {0, 1, 0, 0, 1}},
      {{2, 2, 2}, {0, 3, -3, -1, 1}},
      {{2, 2, 1, 1}, {6, 7, -3, -3, 1}},
      {{2, 1, 1, 1, 1}, {0, -5, 9, -5, 1}},
      {{1, 1, 1, 1, 1, 1}, {150, -185, 81, -15, 1}},
  };
  if (n == 5) return five;
  if (n == 6) return six;
  fail("twisted_counts: n must be 5 or 6");
}

const TraceTable& five_point_traces() {
  static const TraceTable t{
      {{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 2}, {4, 1}, {5}},
      {{1, 1, 1, 1, 1, 1, 1}, {5, 1, 1, -1, 1, -1, 0}, {6, 0, -2, 0, 0, 0, 1}}};
  return t;
}

const LabeledTable& six_point_cohomology() {
  static const LabeledTable t{s6_labels(),
                              {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                               {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 1, 0, 1, 1, 2, 2},
                               {0, 0, 0, 1, 1, 1, 2, 2, 3, 4, 4},
                               {1, 1, 1, 1, 3, 3, 2, 2, 2, 2, 2}}};
  return t;
}

namespace {

const std::map<std::string, LabeledTable>& space_tables() {
  static const std::map<std::string, LabeledTable> m{
      {"D3n", {e6_labels(), {
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 2, 0, 2, 0, 0, 0, 0, 1, 0, 1, 1, 0, 2, 0, 2, 0, 0},
        {0, 0, 0, 1, 1, 0, 0, 4, 2, 0, 3, 1, 1, 2, 0, 6, 2, 6, 4, 1, 9, 7, 9, 3, 7},
        {0, 0, 0, 3, 6, 3, 1, 8, 4, 1, 8, 5, 4, 8, 7, 17, 14, 23, 15, 13, 26, 31, 27, 20, 31},
        {1, 0, 2, 5, 7, 9, 8, 11, 11, 9, 17, 13, 13, 18, 17, 23, 37, 45, 40, 38, 48, 55, 56, 52, 61},
        {2, 1, 2, 3, 2, 8, 14, 8, 15, 13, 16, 15, 19, 21, 11, 12, 32, 34, 44, 36, 39, 37, 54, 53, 49},
      }}},
      {"D3c", {e6_labels(), {
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 0, 2, 0, 2, 0, 0},
        {0, 0, 0, 1, 1, 0, 0, 3, 1, 0, 2, 1, 1, 2, 0, 4, 2, 5, 3, 1, 6, 6, 6, 3, 6},
        {0, 0, 0, 2, 3, 2, 1, 4, 2, 1, 5, 3, 3, 5, 5, 9, 10, 14, 10, 9, 15, 17, 16, 13, 19},
        {0, 0, 1, 2, 1, 3, 4, 3, 5, 4, 6, 6, 6, 7, 5, 6, 13, 15, 16, 14, 17, 17, 21, 20, 20},
      }}},
      {"D3_2n_hat", {e6_labels(), {
        {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 1, 0, 0, 0, 0, 2, 0, 3, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 2, 5, 0, 5, 2, 0, 2, 0, 4, 1, 6, 3, 0, 8, 1, 8, 2, 3},
        {0, 0, 0, 2, 2, 2, 3, 8, 7, 2, 9, 8, 1, 2, 4, 12, 8, 14, 6, 7, 20, 10, 19, 9, 16},
        {0, 0, 3, 6, 9, 8, 6, 13, 8, 9, 14, 12, 1, 1, 19, 26, 26, 30, 11, 25, 34, 33, 28, 22, 36},
        {0, 0, 4, 5, 9, 8, 4, 9, 4, 8, 9, 8, 0, 0, 21, 23, 26, 27, 9, 25, 27, 36, 22, 21, 35},
      }}},
      {"D3_tn", {e6_labels(), {
        {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 1, 3, 0, 3, 1, 1, 3, 0, 3, 2, 6, 5, 1, 7, 4, 9, 5, 5},
        {0, 0, 0, 2, 2, 2, 2, 5, 3, 2, 5, 5, 5, 6, 3, 7, 10, 13, 13, 10, 16, 16, 18, 15, 19},
        {0, 0, 1, 2, 3, 3, 2, 4, 2, 3, 4, 4, 4, 4, 7, 9, 13, 14, 11, 13, 15, 20, 17, 16, 21},
      }}},
      {"D3_3n_hat", {e6_labels(), {
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {2, 0, 0, 1, 0, 0, 1, 0, 3, 0, 5, 0, 0, 4, 0, 0, 2, 0, 3, 0, 3, 0, 2, 2, 0},
        {2, 0, 0, 3, 0, 1, 7, 1, 12, 4, 14, 3, 5, 12, 0, 3, 15, 7, 21, 7, 18, 6, 20, 17, 8},
        {3, 2, 2, 5, 1, 9, 21, 8, 26, 19, 28, 16, 24, 32, 7, 13, 49, 37, 65, 40, 53, 36, 70, 67, 51},
        {3, 3, 4, 5, 3, 15, 26, 14, 28, 27, 30, 25, 35, 39, 17, 20, 64, 58, 83, 65, 70, 62, 97, 97, 85},
      }}},
      {"D3_tp", {e6_labels(), {
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 1, 0, 0, 1, 0, 3, 0, 4, 0, 0, 3, 0, 0, 0, 2, 3, 0, 3, 0, 2, 2, 0},
        {1, 0, 0, 2, 0, 1, 5, 0, 8, 3, 9, 3, 3, 8, 0, 3, 5, 12, 16, 6, 14, 6, 15, 13, 7},
        {1, 1, 1, 2, 1, 5, 8, 5, 10, 8, 11, 7, 11, 14, 4, 7, 18, 23, 27, 18, 23, 18, 31, 30, 26},
      }}},
      {"D4n", {s5_labels(), {
        {1, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 1, 0, 1, 0},
        {0, 0, 0, 2, 1, 2, 2},
        {0, 0, 1, 3, 2, 3, 4},
        {1, 0, 3, 5, 4, 5, 6},
        {2, 1, 4, 5, 6, 6, 6},
      }}},
      {"D4c", {s5_labels(), {
        {1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 0, 0},
        {0, 0, 0, 1, 1, 1, 2},
        {0, 0, 1, 1, 1, 1, 1},
      }}},
      {"D4_2n_A4", {s5_labels(), {
        {1, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 2, 1, 0, 0},
        {1, 0, 0, 4, 4, 2, 4},
        {1, 0, 4, 6, 7, 6, 8},
        {1, 1, 4, 4, 5, 5, 6},
      }}},
      {"D4_tn_A4", {s5_labels(), {
        {1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 0, 0},
        {0, 0, 0, 1, 1, 1, 2},
        {0, 0, 1, 1, 1, 1, 1},
      }}},
      {"D4_2n_D4", {s5_labels(), {
        {1, 0, 0, 1, 0, 0, 0},
        {1, 0, 0, 2, 2, 1, 1},
        {0, 0, 1, 3, 4, 2, 4},
        {1, 0, 3, 5, 5, 4, 7},
        {2, 1, 4, 5, 6, 6, 6},
      }}},
      {"D4_tn_D4", {s5_labels(), {
        {1, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 2, 1, 1},
        {0, 0, 1, 2, 2, 1, 3},
        {1, 0, 1, 2, 2, 2, 2},
      }}},
      {"D4_3n", {s5_labels(), {
        {1, 0, 0, 1, 0, 0, 0},
        {1, 0, 0, 3, 3, 1, 2},
        {1, 0, 3, 5, 6, 5, 7},
        {1, 1, 4, 4, 5, 5, 6},
      }}},
      {"D4_tp", {s5_labels(), {
        {1, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 2, 1, 1},
        {0, 0, 1, 1, 1, 1, 2},
      }}},
      {"D4_4n", {s5_labels(), {
        {1, 0, 0, 2, 0, 1, 1},
        {1, 0, 2, 4, 4, 5, 5},
        {1, 1, 4, 4, 5, 5, 6},
      }}},
  };
  return m;
}

}  // namespace

const LabeledTable& cohomology(const std::string& id) {
  auto it = space_tables().find(id);
  if (it == space_tables().end()) fail("reference::cohomology: no table for " + id);
  return it->second;
}

std::vector<std::string> tabulated_spaces() {
  std::vector<std::string> out;
  for (const auto& [k, v] : space_tables()) out.push_back(k);
  return out;
}

const LabeledTable& cubic_cohomology() {
  static const LabeledTable t = [] {
    LabeledTable r{e6_labels(), std::vector<std::vector<Int>>(5, std::vector<Int>(25, 0))};
    auto add = [&](int deg, const std::string& l) {
      r.rows[deg][std::find(r.labels.begin(), r.labels.end(), l) - r.labels.begin()] += 1;
    };
    add(0, "phi_{1}^{0}");
    add(1, "phi_{15}^{4}");
    add(2, "phi_{81}^{6}");
    for (const char* l : {"phi_{15}^{5}", "phi_{80}^{7}", "phi_{90}^{8}"}) add(3, l);
    for (const char* l : {"phi_{10}^{9}", "phi_{80}^{7}", "phi_{30}^{3}", "phi_{30}^{15}"}) add(4, l);
    return r;
  }();
  return t;
}

const LabeledTable& quartic_cohomology() {
  static const LabeledTable t{{"phi_{1}^{0}", "phi_{5}^{4}", "phi_{6}^{6}"}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  return t;
}

const std::vector<Int>& nodal_betti() {
  static const std::vector<Int> v{1, 36, 525, 3960, 16299, 34884, 30695};
  return v;
}

const std::vector<Int>& six_point_betti() {
  static const std::vector<Int> v{1, 15, 81, 185, 150};
  return v;
}

const std::vector<std::vector<std::string>>& h3_candidates() {
  static const std::vector<std::vector<std::string>> v{
      {"phi_{15}^{5}", "phi_{90}^{8}", "phi_{20}^{10}", "phi_{60}^{8}"},
      {"phi_{15}^{5}", "phi_{90}^{8}", "phi_{80}^{7}"}};
  return v;
}

const std::vector<std::vector<std::string>>& h4_candidates() {
  static const std::vector<std::vector<std::string>> v{
      {"phi_{10}^{9}", "phi_{80}^{7}", "phi_{30}^{3}", "phi_{30}^{15}"},
      {"phi_{10}^{9}", "phi_{80}^{7}", "phi_{15}^{4}", "phi_{15}^{5}", "phi_{15}^{16}", "phi_{15}^{17}"},
      {"phi_{10}^{9}", "phi_{80}^{7}", "phi_{30}^{15}", "phi_{15}^{4}", "phi_{15}^{5}"},
      {"phi_{10}^{9}", "phi_{80}^{7}", "phi_{30}^{3}", "phi_{15}^{16}", "phi_{15}^{17}"},
      {"phi_{10}^{9}", "phi_{60}^{8}", "phi_{20}^{10}", "phi_{30}^{15}", "phi_{15}^{4}", "phi_{15}^{5}"},
      {"phi_{10}^{9}", "phi_{60}^{8}", "phi_{20}^{10}", "phi_{30}^{3}", "phi_{15}^{16}", "phi_{15}^{17}"},
      {"phi_{10}^{9}", "phi_{60}^{8}", "phi_{20}^{10}", "phi_{15}^{4}", "phi_{15}^{5}", "phi_{15}^{16}",
       "phi_{15}^{17}"},
      {"phi_{10}^{9}", "phi_{60}^{8}", "phi_{20}^{10}", "phi_{30}^{3}", "phi_{30}^{15}"}};
  return v;
}

}  // namespace weylcoh::reference
