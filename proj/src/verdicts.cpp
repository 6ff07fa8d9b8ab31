#include <map>

#include "avinv/classify.hpp"
#include "avinv/errors.hpp"

namespace avinv {

namespace {

VerdictRow R(int table, int dim, const char* tag, bool simple, const char* label, int rank, bool occurs, int gs,
             const char* example = "") {
  VerdictRow r{table, dim, tag, simple, label, rank, occurs, std::nullopt, example};
  if (gs >= 0) r.geom_simple = gs == 1;
  return r;
}

constexpr int NA = -1;

}  // namespace

const std::vector<VerdictRow>& verdict_rows() {
  static const std::vector<VerdictRow> rows = {
      // elliptic curves
      R(2, 1, "ordinary", true, "W2.2.t.a.1", 1, true, NA, "1.2.ab"),
      R(2, 1, "ordinary", true, "C1.2.nt.a.1", 0, false, NA),
      R(3, 1, "supersingular", true, "W2.2.t.a.1", 0, true, NA, "1.2.ac"),
      R(3, 1, "supersingular", true, "C1.2.nt.a.1", 0, true, NA, "1.4.ae"),
      // simple surfaces
      R(4, 2, "A", true, "W4.4.t.a.1", 2, true, 1, "2.2.ac_d"),
      R(4, 2, "A", true, "V4.4.t.a.1", 1, true, 0, "2.2.ad_f"),
      R(4, 2, "A", true, "C4.4.t.a.1", 2, true, 1, "2.3.ad_f"),
      R(5, 2, "B", true, "W4.4.t.a.1", 2, true, 1, "2.2.ab_a"),
      R(5, 2, "B", true, "V4.4.t.a.1", 2, false, NA),
      R(5, 2, "B", true, "C4.4.t.a.1", 2, false, NA),
      R(6, 2, "C", true, "W4.4.t.a.1", 2, false, NA),
      R(6, 2, "C", true, "V4.4.t.a.1", 0, true, 0, "2.2.ac_c"),
      R(6, 2, "C", true, "C4.4.t.a.1", 0, true, 0, "2.4.ac_e"),
      R(6, 2, "C", true, "C2.4.nt.c.1", 0, true, 0, "2.2.a_ae"),
      R(6, 2, "C", true, "C2.4.nt.c.2", 0, true, 0, "2.2.a_ae"),
      // nonsimple surfaces
      R(7, 2, "A", false, "V4.4.nt.a.1", 1, true, NA, "2.3.ad_i"),
      R(7, 2, "A", false, "C2.4.nt.a.1", 1, true, NA, "2.2.a_d"),
      R(7, 2, "A", false, "C2.4.nt.b.1", 1, false, NA),
      R(7, 2, "A", false, "C2.4.nt.b.2", 1, false, NA),
      R(7, 2, "A", false, "C2.4.nt.c.1", 1, false, NA),
      R(7, 2, "A", false, "C2.4.nt.c.2", 1, false, NA),
      R(7, 2, "A", false, "C1.4.nt.a.1", 0, false, NA),
      R(8, 2, "B", false, "V4.4.nt.a.1", 1, true, NA, "2.2.ad_g"),
      R(8, 2, "B", false, "C2.4.nt.a.1", 1, false, NA),
      R(8, 2, "B", false, "C2.4.nt.b.1", 1, false, NA),
      R(8, 2, "B", false, "C2.4.nt.b.2", 1, true, NA, "2.4.ah_u"),
      R(8, 2, "B", false, "C2.4.nt.c.1", 1, false, NA),
      R(8, 2, "B", false, "C2.4.nt.c.2", 1, false, NA),
      R(8, 2, "B", false, "C1.4.nt.a.1", 0, false, NA),
      R(9, 2, "C", false, "V4.4.nt.a.1", 0, true, NA, "2.2.ac_e"),
      R(9, 2, "C", false, "C2.4.nt.a.1", 0, true, NA, "2.2.a_a"),
      R(9, 2, "C", false, "C2.4.nt.b.1", 0, true, NA, "2.4.ag_q"),
      R(9, 2, "C", false, "C2.4.nt.b.2", 0, true, NA, "2.4.ag_q"),
      R(9, 2, "C", false, "C2.4.nt.c.1", 0, false, NA),
      R(9, 2, "C", false, "C2.4.nt.c.2", 0, false, NA),
      R(9, 2, "C", false, "C1.4.nt.a.1", 0, true, NA, "2.4.a_ai"),
      // simple threefolds
      R(10, 3, "A", true, "W6.6.t.a.1", 3, true, 1, "3.2.ad_f_ah"),
      R(10, 3, "A", true, "6T6.6.t.a.1", 3, true, 1, "3.2.ad_g_aj"),
      R(10, 3, "A", true, "D6.6.t.a.1", 1, true, 0, "3.2.a_a_ad"),
      R(10, 3, "A", true, "D6.6.t.a.2", 3, true, 1, "3.2.ac_a_d"),
      R(10, 3, "A", true, "D6.6.t.a.3", 3, true, 1, "3.2.ac_a_d"),
      R(10, 3, "A", true, "D6.6.t.a.4", 3, true, 1, "3.2.ac_a_d"),
      R(10, 3, "A", true, "C6.6.t.a.1", 1, true, 0, "3.2.ae_j_ap"),
      R(10, 3, "A", true, "C6.6.t.a.2", 3, true, 1, "3.7.ak_bw_afv"),
      R(10, 3, "A", true, "C6.6.t.a.3", 3, true, 1, "3.7.ak_bw_afv"),
      R(10, 3, "A", true, "C6.6.t.a.4", 3, true, 1, "3.7.ak_bw_afv"),
      R(11, 3, "B", true, "W6.6.t.a.1", 3, true, 1, "3.2.ab_ab_c"),
      R(11, 3, "B", true, "6T6.6.t.a.1", 3, true, 1, "3.4.ac_ab_g"),
      R(11, 3, "B", true, "D6.6.t.a.1", 3, false, NA),
      R(11, 3, "B", true, "D6.6.t.a.3", 3, false, NA),
      R(11, 3, "B", true, "D6.6.t.a.2", 2, true, 1, "3.2.ac_b_a"),
      R(11, 3, "B", true, "D6.6.t.a.4", 2, true, 1, "3.2.ac_b_a"),
      R(11, 3, "B", true, "C6.6.t.a.1", 3, false, NA),
      R(11, 3, "B", true, "C6.6.t.a.4", 3, false, NA),
      R(11, 3, "B", true, "C6.6.t.a.2", 2, false, NA),
      R(11, 3, "B", true, "C6.6.t.a.3", 2, false, NA),
      R(12, 3, "C", true, "W6.6.t.a.1", 3, true, 1, "3.2.ab_a_a"),
      R(12, 3, "C", true, "6T6.6.t.a.1", 3, true, 1, "3.4.ab_c_a"),
      R(12, 3, "C", true, "D6.6.t.a.1", 3, true, 1, "3.4.ab_a_ae"),
      R(12, 3, "C", true, "D6.6.t.a.2", 3, true, 1, "3.4.ab_a_ae"),
      R(12, 3, "C", true, "D6.6.t.a.3", 3, true, 1, "3.4.ab_a_ae"),
      R(12, 3, "C", true, "D6.6.t.a.4", 3, true, 1, "3.4.ab_a_ae"),
      R(12, 3, "C", true, "C6.6.t.a.1", 3, false, NA),
      R(12, 3, "C", true, "C6.6.t.a.2", 3, false, NA),
      R(12, 3, "C", true, "C6.6.t.a.3", 3, false, NA),
      R(12, 3, "C", true, "C6.6.t.a.4", 3, false, NA),
      R(13, 3, "D", true, "W6.6.t.a.1", 3, true, 1, "3.2.ac_c_ac"),
      R(13, 3, "D", true, "6T6.6.t.a.1", 3, true, 1, "3.3.ad_j_ap"),
      R(13, 3, "D", true, "D6.6.t.a.1", 1, true, 1, "3.2.a_a_ac"),
      R(13, 3, "D", true, "D6.6.t.a.2", 3, false, NA),
      R(13, 3, "D", true, "D6.6.t.a.3", 3, false, NA),
      R(13, 3, "D", true, "D6.6.t.a.4", 3, false, NA),
      R(13, 3, "D", true, "C6.6.t.a.1", 1, true, 1, "3.7.a_a_abj"),
      R(13, 3, "D", true, "C6.6.t.a.2", 3, false, NA),
      R(13, 3, "D", true, "C6.6.t.a.3", 3, false, NA),
      R(13, 3, "D", true, "C6.6.t.a.4", 3, false, NA),
      R(14, 3, "E", true, "W6.6.t.a.1", 0, false, NA),
      R(14, 3, "E", true, "6T6.6.t.a.1", 0, false, NA),
      R(14, 3, "E", true, "D6.6.t.a.1", 0, false, NA),
      R(14, 3, "E", true, "D6.6.t.a.2", 0, false, NA),
      R(14, 3, "E", true, "D6.6.t.a.3", 0, false, NA),
      R(14, 3, "E", true, "D6.6.t.a.4", 0, false, NA),
      R(14, 3, "E", true, "C6.6.t.a.1", 0, true, 0, "3.3.a_a_aj"),
      R(14, 3, "E", true, "C6.6.t.a.2", 0, true, 0, "3.3.a_a_aj"),
      R(14, 3, "E", true, "C6.6.t.a.3", 0, true, 0, "3.3.a_a_aj"),
      R(14, 3, "E", true, "C6.6.t.a.4", 0, true, 0, "3.3.a_a_aj"),
  };
  return rows;
}

std::vector<VerdictRow> table_rows(int table) {
  std::vector<VerdictRow> out;
  for (const auto& r : verdict_rows())
    if (r.table == table) out.push_back(r);
  return out;
}

int table_for(int dimension, const std::string& tag, bool simple) {
  static const std::map<std::tuple<int, std::string, bool>, int> index = {
      {{1, "ordinary", true}, 2}, {{1, "supersingular", true}, 3}, {{2, "A", true}, 4},  {{2, "B", true}, 5},
      {{2, "C", true}, 6},        {{2, "A", false}, 7},            {{2, "B", false}, 8}, {{2, "C", false}, 9},
      {{3, "A", true}, 10},       {{3, "B", true}, 11},            {{3, "C", true}, 12}, {{3, "D", true}, 13},
      {{3, "E", true}, 14}};
  if (dimension == 1) simple = true;
  auto it = index.find({dimension, tag, simple});
  return it == index.end() ? 0 : it->second;
}

std::optional<VerdictRow> lookup_verdict(int dimension, const std::string& tag, bool simple, const Weighting& w,
                                         const SignedSubgroup& h) {
  if (dimension < 1 || dimension > 3)
    throw Error(ErrorCode::UnsupportedDimensionForVerdicts, "dimension " + std::to_string(dimension));
  const int t = table_for(dimension, tag, simple);
  if (t == 0 || h.d() != dimension) return std::nullopt;
  for (const auto& r : table_rows(t)) {
    auto g = subgroup_from_label(dimension, r.label);
    if (g && w_conjugate(*g, h, w)) return r;
  }
  return std::nullopt;
}

Weighting stratum_weighting(int dimension, const std::string& tag) {
  const mpq_class z(0), h(1, 2), t(1, 3);
  static const std::map<std::pair<int, std::string>, std::vector<int>> shapes = {
      {{1, "ordinary"}, {0}},  {{1, "supersingular"}, {3}}, {{2, "A"}, {0, 0}},   {{2, "B"}, {0, 3}},
      {{2, "C"}, {3, 3}},      {{3, "A"}, {0, 0, 0}},       {{3, "B"}, {0, 0, 3}}, {{3, "C"}, {0, 3, 3}},
      {{3, "D"}, {2, 2, 2}},   {{3, "E"}, {3, 3, 3}}};
  auto it = shapes.find({dimension, tag});
  if (it == shapes.end()) throw Error(ErrorCode::UnrecognizedSlopeMultiset, std::to_string(dimension) + tag);
  std::vector<mpq_class> slopes;
  for (int k : it->second) {
    const mpq_class s = k == 0 ? z : k == 3 ? h : t;
    slopes.push_back(s);
    slopes.push_back(1 - s);
  }
  return standard_weighting(slopes);
}

std::string flowchart_name(const std::string& iso) {
  if (iso == "W4") return "C2wrS2";
  if (iso == "W6") return "C2wrS3";
  if (iso == "6T6") return "C2wrC3";
  return iso;
}

std::set<std::string> flowchart(int dimension, const std::string& tag, bool simple, int delta) {
  using Key = std::tuple<int, bool, std::string, int>;
  static const std::map<Key, std::set<std::string>> arrows = {
      {{2, true, "A", 2}, {"C2wrS2", "C4"}},
      {{2, true, "A", 1}, {"V4"}},
      {{2, true, "B", 2}, {"C2wrS2"}},
      {{2, true, "C", 0}, {"V4", "C2"}},
      {{2, false, "A", 2}, {"V4"}},
      {{2, false, "A", 1}, {"C2"}},
      {{2, false, "B", 1}, {"V4", "C2"}},
      {{2, false, "C", 0}, {"V4", "C2", "C1"}},
      {{3, true, "A", 3}, {"C2wrS3", "C2wrC3", "D6", "C6"}},
      {{3, true, "A", 1}, {"D6", "C6"}},
      {{3, true, "B", 3}, {"C2wrS3", "C2wrC3"}},
      {{3, true, "B", 2}, {"C6"}},
      {{3, true, "C", 3}, {"C2wrS3", "C2wrC3", "D6"}},
      {{3, true, "D", 3}, {"C2wrS3", "C2wrC3"}},
      {{3, true, "D", 1}, {"D6", "C6"}},
      {{3, true, "E", 0}, {"C6"}},
  };
  auto it = arrows.find({dimension, simple, tag, delta});
  if (it == arrows.end())
    throw Error(ErrorCode::InvalidCombination, "no flowchart path for dimension " + std::to_string(dimension) + ", " +
                                                   (simple ? "simple" : "nonsimple") + ", NP " + tag + ", angle rank " +
                                                   std::to_string(delta));
  return it->second;
}

}  // namespace avinv
