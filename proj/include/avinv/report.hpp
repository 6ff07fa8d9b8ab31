#pragma once

// Stable renderings of classification results and of the reference tables.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "avinv/classify.hpp"
#include "avinv/lmfdb.hpp"

namespace avinv {

inline constexpr int kRecordVersion = 1;

struct FactorSummary {
  std::string poly;
  int multiplicity = 1;
  friend bool operator==(const FactorSummary&, const FactorSummary&) = default;
};

// Flat, serializable view of a ClassRecord.
struct ClassSummary {
  int version = kRecordVersion;
  std::string input;
  std::string polynomial;
  std::uint64_t p = 0;
  unsigned n = 0;
  int dimension = 0;
  std::vector<FactorSummary> factors;
  bool simple = false;
  int honda_tate_e = 1;
  std::vector<std::string> np_vertices;  // "x,y"
  std::vector<std::string> slopes;
  std::string np_tag;
  std::string group_label;
  std::string group_name;
  int group_order = 0;
  std::string generators;
  std::vector<std::string> weighting;
  int angle_rank = 0;
  int rank_columns = 0;
  int rank_hyperplane = 0;
  int table = 0;
  std::string table_label;
  std::optional<bool> occurs;
  std::optional<bool> geom_simple;
  int m_theta_degree = 0;
  int rejected_candidates = 0;
  std::vector<std::uint64_t> frobenius_primes;
  std::uint64_t seed = 0;
  std::string screen;
  std::string screen_reason;

  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

ClassSummary summarize(const ClassRecord& rec, std::uint64_t seed);
nlohmann::json to_json(const ClassSummary& s);
ClassSummary summary_from_json(const nlohmann::json& j);
std::string render_text(const ClassSummary& s);

// Tables 1-14; throws Usage for any other number.
std::string render_table(int which);

struct TableVerification {
  int table = 0;
  int checked = 0;
  std::vector<std::string> mismatches;
};
// Runs the pipeline on every example of the table and compares with its row.
TableVerification verify_table(int which, LmfdbClient& client, const ClassifyOptions& opt = {});

}  // namespace avinv
