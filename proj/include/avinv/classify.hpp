#pragma once

// Classification of isogeny classes: the full pipeline from a Weil polynomial
// to angle rank, group label and verdicts for dimensions 1-3.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "avinv/localfield.hpp"
#include "avinv/newton.hpp"
#include "avinv/splitting.hpp"
#include "avinv/wpr.hpp"

namespace avinv {

struct VerdictRow {
  int table = 0;
  int dimension = 0;
  std::string np_tag;
  bool simple = true;
  std::string label;
  int angle_rank = 0;  // as published
  bool occurs = false;
  std::optional<bool> geom_simple;
  std::string example;  // isogeny class label, empty if none
};

const std::vector<VerdictRow>& verdict_rows();
std::vector<VerdictRow> table_rows(int table);
// Table number for the stratum, 0 if none.
int table_for(int dimension, const std::string& np_tag, bool simple);
std::optional<VerdictRow> lookup_verdict(int dimension, const std::string& np_tag, bool simple,
                                         const Weighting& w, const SignedSubgroup& h);

// Climbing weighting of the given Newton stratum.
Weighting stratum_weighting(int dimension, const std::string& np_tag);

// Abstract group names on the flowchart arrows: C2wrS2, C4, V4, C2, C1, C2wrS3, C2wrC3, D6, C6.
std::set<std::string> flowchart(int dimension, const std::string& np_tag, bool simple, int angle_rank);
std::string flowchart_name(const std::string& iso_name);

struct ClassRecord {
  std::string input;
  WeilPolynomial P;
  int dimension = 0;
  FrobeniusDecomposition decomposition;
  bool simple = false;
  int honda_tate_e = 1;  // of the first factor
  NewtonPolygon np;
  std::string np_tag;
  WeightedPermRep rep;
  int angle_rank = 0;
  AngleRankDetail rank_detail;
  std::string iso_name;
  std::string label;        // label of the canonical representative
  std::string table_label;  // w-conjugate table row label, if any
  int table = 0;
  std::optional<VerdictRow> verdict;
  std::optional<bool> geom_simple;
  // certificate summary (complex part)
  int m_theta_degree = 0;
  int rejected_candidates = 0;
  std::vector<std::uint64_t> frobenius_primes;
  std::optional<DivisorReport> divisor_report;
  ScreenResult screen;
};

struct ClassifyOptions {
  std::uint64_t seed = 0;
  long precision_bits = 128;
};

ClassRecord classify(const WeilPolynomial& P, const ClassifyOptions& opt = {});

// Geometric simplicity from NP type, simplicity and angle rank.
std::optional<bool> geometric_simplicity(int dimension, const std::string& np_tag, bool simple, int angle_rank);

// Simple supersingular threefolds: the sextic field is Q(zeta_7) or Q(zeta_9).
bool supersingular_field_check(const ClassRecord& rec);

}  // namespace avinv
