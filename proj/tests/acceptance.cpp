// One line per acceptance criterion. Rows whose published values disagree with
// computation are listed in kKnown; anything else failing makes the exit code 1.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "avinv/classify.hpp"
#include "avinv/errors.hpp"
#include "avinv/lmfdb.hpp"
#include "avinv/report.hpp"
#include "avinv/search.hpp"

using namespace avinv;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> known;       // documented disagreements hit
  std::vector<std::string> unexpected;  // everything else
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Published table entries that computation contradicts (see the decisions notes).
const std::set<std::string> kKnown = {
    "T6 W4.4.t.a.1 angle rank",          // constant 1/2 weighting forces 0
    "T7 V4.4.nt.a.1 angle rank",         // example 2.3.ad_i has angle rank 2
    "T7 C2.4.nt.c.1 angle rank",         // iota-free row
    "T8 C2.4.nt.b.2 angle rank",         // b.1/b.2 swapped
    "T8 C2.4.nt.b.2 / 2.4.ah_u group",  // b.1/b.2 swapped
    "T7 V4.4.nt.a.1 / 2.3.ad_i angle rank",
    "iota-free atlas pairs disagree",  // the two formulas only coincide when iota is present
};

void note(Outcome& o, const std::string& key) {
  (kKnown.count(key) ? o.known : o.unexpected).push_back(key);
  o.pass = false;
}

std::string row_key(const VerdictRow& r) { return "T" + std::to_string(r.table) + " " + r.label; }

int expected_order(const std::string& iso) {
  static const std::map<std::string, int> orders = {{"W4", 8},  {"V4", 4},  {"C4", 4},  {"C2", 2},  {"C1", 1},
                                                    {"W6", 48}, {"6T6", 24}, {"D6", 12}, {"C6", 6}};
  return orders.at(iso);
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::string table = render_table(1);
  int rows = 0;
  for (const auto& row : calibration_table()) {
    if (row.d < 2) continue;
    ++rows;
    std::vector<SignedPerm> gens;
    for (const auto& g : row.generators) gens.push_back(SignedPerm::parse(row.d, g));
    const auto h = SignedSubgroup::generated(row.d, gens);
    const auto lab = label_of(h);
    const auto looked_up = subgroup_from_label(row.d, row.label);
    const bool ok = lab.str() == row.label && looked_up && *looked_up == h && h.order() == expected_order(lab.iso_name) &&
                    h.is_transitive() == (row.label.find(".t.") != std::string::npos) &&
                    table.find(row.label) != std::string::npos;
    if (!ok) note(o, row.label);
  }
  const double s = seconds_since(t0);
  if (rows != 20) note(o, "row count " + std::to_string(rows));
  if (s >= 10) note(o, "runtime");
  o.detail = std::to_string(rows) + " labelled groups, " + std::to_string(s) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  int rows = 0;
  for (const auto& r : verdict_rows()) {
    ++rows;
    const auto h = subgroup_from_label(r.dimension, r.label);
    if (!h) {
      note(o, row_key(r) + " label");
      continue;
    }
    if (angle_rank(stratum_weighting(r.dimension, r.np_tag), *h) != r.angle_rank) note(o, row_key(r) + " angle rank");
  }
  auto spot = [&](int d, const char* tag, const char* label, int want) {
    if (angle_rank(stratum_weighting(d, tag), *subgroup_from_label(d, label)) != want)
      note(o, std::string("spot ") + label + " " + tag);
  };
  spot(2, "B", "W4.4.t.a.1", 2);
  spot(3, "A", "D6.6.t.a.1", 1);
  for (const char* l : {"D6.6.t.a.2", "D6.6.t.a.3", "D6.6.t.a.4"}) spot(3, "A", l, 3);
  const double s = seconds_since(t0);
  if (s >= 60) note(o, "runtime");
  o.detail = std::to_string(rows) + " rows, " + std::to_string(s) + " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  LmfdbConfig cfg;
  cfg.offline = true;
  cfg.fixtures_dir = default_fixtures_dir();
  LmfdbClient client(cfg);
  std::set<std::string> labels;
  int rows = 0;
  for (const auto& r : verdict_rows()) {
    if (r.example.empty()) continue;
    ++rows;
    labels.insert(r.example);
    const std::string key = "T" + std::to_string(r.table) + " " + r.label + " / " + r.example;
    try {
      const auto fx = client.fetch(r.example);
      const auto rec = classify(validate_weil(fx.polynomial(), label_to_polynomial(r.example).p, label_to_polynomial(r.example).n));
      if (rec.np_tag != r.np_tag) note(o, key + " NP type");
      if (rec.rep.d != r.dimension || !w_conjugate(*subgroup_from_label(r.dimension, r.label), rec.rep.group, rec.rep.w))
        note(o, key + " group");
      if (rec.angle_rank != r.angle_rank) note(o, key + " angle rank");
      if (r.geom_simple && rec.geom_simple != r.geom_simple) note(o, key + " geometric simplicity");
    } catch (const Error& e) {
      note(o, key + " error " + e.what());
    }
  }
  const double s = seconds_since(t0);
  if (s >= 1800) note(o, "runtime");
  o.detail = std::to_string(labels.size()) + " example classes over " + std::to_string(rows) + " rows, " +
             std::to_string(s) + " s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto E = label_to_polynomial("1.19.i");
  const auto B = label_to_polynomial("3.19.a_j_acm");
  const auto P = validate_weil(E.poly * B.poly, 19, 1);
  const auto rec = classify(P);
  std::set<std::string> got, want = {to_string(IntPolynomial({19, 8, 1})),
                                     to_string(IntPolynomial({6859, 0, 171, -64, 9, 0, 1}))};
  for (const auto& f : rec.decomposition.factors) got.insert(to_string(f.h.poly) + (f.e == 1 ? "" : "^e"));
  if (got != want) note(o, "factorization");
  for (const auto& s : rec.np.slopes)
    if (s != 0 && s != 1) note(o, "not ordinary");
  if (rec.rep.group.order() != 6) note(o, "group order " + std::to_string(rec.rep.group.order()));
  const auto cited = SignedSubgroup::generated(4, {SignedPerm::parse(4, "(1 b2 b4 b1 2 4)(3 b3)")});
  if (!w_conjugate(cited, rec.rep.group, rec.rep.w)) note(o, "generator not w-conjugate to the cited one");
  if (rec.angle_rank != 3) note(o, "angle rank " + std::to_string(rec.angle_rank));
  o.detail = "group " + rec.rep.group.generators_string() + ", delta " + std::to_string(rec.angle_rank);
  return o;
}

Outcome criterion5() {
  Outcome o;
  int with_iota = 0, without = 0, disagree_free = 0;
  for (int d = 1; d <= 3; ++d) {
    std::vector<std::string> tags = d == 1 ? std::vector<std::string>{"ordinary", "supersingular"}
                                   : d == 2 ? std::vector<std::string>{"A", "B", "C"}
                                            : std::vector<std::string>{"A", "B", "C", "D", "E"};
    for (const auto& h : enumerate_subgroups(d)) {
      for (const auto& tag : tags) {
        const auto w = stratum_weighting(d, tag);
        AngleRankDetail det;
        try {
          det = angle_rank_detail(w, h);
        } catch (const Error& e) {
          note(o, label_of(h).str() + " " + tag + ": " + e.what());
          continue;
        }
        if (h.contains_iota()) {
          ++with_iota;
          if (det.columns != det.hyperplane) note(o, label_of(h).str() + " " + tag);
        } else {
          ++without;
          if (det.columns != det.hyperplane) ++disagree_free;
        }
      }
    }
  }
  if (disagree_free) note(o, "iota-free atlas pairs disagree");
  int fixtures = 0;
  for (const auto& label : cited_labels()) {
    const auto rec = classify(label_to_polynomial(label));
    ++fixtures;
    if (rec.rank_detail.columns != rec.rank_detail.hyperplane) note(o, "fixture " + label);
  }
  o.detail = std::to_string(with_iota) + " iota pairs agree, " + std::to_string(disagree_free) + "/" +
             std::to_string(without) + " iota-free pairs disagree, " + std::to_string(fixtures) + " fixtures";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::set<std::string> governed = {
      "T5 V4.4.t.a.1", "T5 C4.4.t.a.1", "T11 C6.6.t.a.1", "T11 C6.6.t.a.2", "T11 C6.6.t.a.3", "T11 C6.6.t.a.4",
      "T12 C6.6.t.a.1", "T12 C6.6.t.a.2", "T12 C6.6.t.a.3", "T12 C6.6.t.a.4", "T13 D6.6.t.a.2", "T13 D6.6.t.a.3",
      "T13 D6.6.t.a.4", "T13 C6.6.t.a.2", "T13 C6.6.t.a.3", "T13 C6.6.t.a.4"};
  std::set<std::string> excluded;
  int screened = 0;
  for (const auto& r : verdict_rows()) {
    if (!r.simple) continue;
    const auto h = *subgroup_from_label(r.dimension, r.label);
    if (!h.contains_iota() || !h.is_transitive()) continue;
    ++screened;
    const auto res = realizability_screen(stratum_weighting(r.dimension, r.np_tag), h);
    if (res.verdict == Realizability::Excluded) {
      excluded.insert(row_key(r));
      if (r.occurs) note(o, row_key(r) + " excluded but occurs");
    }
    if (res.verdict == Realizability::Realizable && !r.occurs) note(o, row_key(r) + " realizable but listed absent");
  }
  for (const auto& k : governed)
    if (!excluded.count(k)) note(o, k + " not excluded");
  for (const auto& k : excluded)
    if (!governed.count(k)) note(o, k + " excluded beyond the expected set");
  o.detail = std::to_string(excluded.size()) + " of " + std::to_string(screened) + " screened rows excluded";
  return o;
}

// Random Weil polynomial from a random real trace polynomial.
std::optional<WeilPolynomial> random_weil(std::mt19937_64& rng, int d, std::uint64_t p, unsigned n) {
  const double q = std::pow(static_cast<double>(p), n);
  const double bound = 2 * std::sqrt(q);
  std::uniform_real_distribution<double> u(-bound, bound);
  std::vector<double> h = {1.0};  // monic, leading last
  for (int i = 0; i < d; ++i) {
    const double x = u(rng);
    std::vector<double> g(h.size() + 1, 0.0);
    for (std::size_t k = 0; k < h.size(); ++k) {
      g[k + 1] += h[k];
      g[k] -= x * h[k];
    }
    h = g;
  }
  // P(T) = T^d h(T + q/T)
  IntPolynomial hz;
  for (std::size_t k = 0; k < h.size(); ++k) hz.set_coeff(k, mpz_class(static_cast<long>(std::llround(h[k]))));
  const mpz_class qz = prime_power(p, n);
  IntPolynomial P;
  IntPolynomial base = IntPolynomial({0, 1}) * IntPolynomial({0, 1}) + IntPolynomial::constant(qz);  // T^2 + q
  IntPolynomial pw = IntPolynomial::constant(1);
  std::vector<IntPolynomial> powers;
  for (int k = 0; k <= d; ++k) {
    powers.push_back(pw);
    pw = pw * base;
  }
  for (int k = 0; k <= d; ++k) {
    IntPolynomial term = powers[k] * hz.coeff(k);
    P += term * IntPolynomial::monomial(mpz_class(1), d - k);
  }
  try {
    // raise each factor to its Honda-Tate exponent so P is an isogeny class
    const auto dec = frobenius_decompose(validate_weil(P, p, n));
    IntPolynomial A = IntPolynomial::constant(1);
    for (const auto& f : dec.factors)
      for (int k = 0; k < f.e * honda_tate_e(f.h); ++k) A = A * f.h.poly;
    if (A.degree() > 6) return std::nullopt;
    return validate_weil(A, p, n);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Outcome criterion7() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240517);
  std::vector<std::pair<std::uint64_t, unsigned>> fields;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    std::uint64_t q = p;
    for (unsigned n = 1; q <= 64; ++n, q *= p) fields.emplace_back(p, n);
  }
  int done = 0, attempts = 0, certified = 0;
  while (done < 1000 && attempts < 100000) {
    ++attempts;
    const int d = 1 + static_cast<int>(rng() % 3);
    const auto [p, n] = fields[rng() % fields.size()];
    const auto P = random_weil(rng, d, p, n);
    if (!P) continue;
    ++done;
    const std::string key = to_string(P->poly) + " q=" + std::to_string(p) + "^" + std::to_string(n);
    try {
      const auto rec = classify(*P, ClassifyOptions{static_cast<std::uint64_t>(done)});
      if (rec.m_theta_degree) ++certified;
      const auto& sl = rec.np.slopes;
      for (std::size_t i = 0; i < sl.size(); ++i)
        if (sl[i] + sl[sl.size() - 1 - i] != 1) note(o, key + " slope symmetry");
      if (rec.rank_detail.columns != rec.rank_detail.hyperplane) note(o, key + " dual formulas");
      const auto stab = w_stabilizer(rec.rep.w);
      const auto elems = stab.elements();
      const auto& sigma = elems[rng() % elems.size()];
      if (angle_rank(rec.rep.w, rec.rep.group.conjugate_by(sigma)) != rec.angle_rank) note(o, key + " conjugation");
      if (rec.divisor_report && !rec.divisor_report->ok()) note(o, key + " divisor properties");
    } catch (const Error& e) {
      note(o, key + " " + e.what());
    }
  }
  if (done < 1000) note(o, "only " + std::to_string(done) + " samples");
  const double s = seconds_since(t0);
  if (s >= 3600) note(o, "runtime");
  o.detail = std::to_string(done) + " polynomials (" + std::to_string(certified) + " with Galois certificates), " +
             std::to_string(s) + " s";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const long bound = 26L * 26 * 26 * 26;
  long checked = 0;
  for (long m = -bound; m <= bound; ++m, ++checked)
    if (decode_code(encode_code(m)) != m) note(o, "round trip " + std::to_string(m));
  if (decode_code("acm") != -64) note(o, "acm");
  if (decode_code("i") != 8) note(o, "i");
  if (decode_code("j") != 9) note(o, "j");
  o.detail = std::to_string(checked) + " values plus 3 anchors";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto t0 = Clock::now();
  std::set<std::string> groups;
  int witnesses = 0;
  for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{2, 2}, {3, 1}}) {
    SearchConfig cfg;
    cfg.d = 2;
    cfg.p = p;
    cfg.r_max = r;
    const auto rep = run_search(cfg);
    for (const auto& [key, w] : rep.realized) {
      ++witnesses;
      groups.insert(w.group);
      const int t = table_for(2, w.np_tag, true);
      bool matched = false;
      for (const auto& row : table_rows(t))
        if (row.label == w.group && row.occurs && row.angle_rank == w.angle_rank) matched = true;
      if (!matched) note(o, "witness " + w.example + " " + w.np_tag + " " + w.group);
    }
  }
  for (const char* g : {"W4.4.t.a.1", "V4.4.t.a.1", "C4.4.t.a.1"})
    if (!groups.count(g)) note(o, std::string(g) + " not realized");
  const double s = seconds_since(t0);
  if (s >= 1800) note(o, "runtime");
  o.detail = std::to_string(witnesses) + " witnesses, groups";
  for (const auto& g : groups) o.detail += " " + g;
  o.detail += ", " + std::to_string(s) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"subgroup atlas", criterion1},        {"angle-rank columns", criterion2}, {"example suite", criterion3},
      {"Shioda walkthrough", criterion4},     {"dual-formula agreement", criterion5},
      {"exclusion screen", criterion6},       {"certificate soundness", criterion7},
      {"label codec", criterion8},            {"search smoke test", criterion9}};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.unexpected.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail;
    if (!o.known.empty()) {
      std::cout << "; known table disagreements:";
      for (const auto& k : o.known) std::cout << " [" << k << "]";
    }
    for (const auto& u : o.unexpected) std::cout << "\n      unexpected: " << u;
    std::cout << std::endl;
    unexpected += static_cast<int>(o.unexpected.size());
  }
  std::cout << (unexpected ? "unexpected failures: " + std::to_string(unexpected) : "no unexpected failures") << "\n";
  return unexpected ? 1 : 0;
}
