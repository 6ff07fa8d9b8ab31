#include "avinv/report.hpp"

#include <iomanip>
#include <sstream>

#include "avinv/errors.hpp"

namespace avinv {

namespace {

std::vector<std::string> q_strings(const std::vector<mpq_class>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

nlohmann::json opt_bool(const std::optional<bool>& b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); }

std::optional<bool> get_opt_bool(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<bool>();
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

}  // namespace

ClassSummary summarize(const ClassRecord& rec, std::uint64_t seed) {
  ClassSummary s;
  s.input = rec.input;
  s.polynomial = to_string(rec.P.poly);
  s.p = rec.P.p;
  s.n = rec.P.n;
  s.dimension = rec.dimension;
  for (const auto& f : rec.decomposition.factors) s.factors.push_back({to_string(f.h.poly), f.e});
  s.simple = rec.simple;
  s.honda_tate_e = rec.honda_tate_e;
  for (const auto& [x, y] : rec.np.vertices) s.np_vertices.push_back(std::to_string(x) + "," + y.get_str());
  s.slopes = q_strings(rec.np.slopes);
  s.np_tag = rec.np_tag;
  s.group_label = rec.label;
  s.group_name = rec.iso_name;
  s.group_order = rec.rep.group.order();
  s.generators = rec.rep.group.generators_string();
  s.weighting = q_strings(rec.rep.w);
  s.angle_rank = rec.angle_rank;
  s.rank_columns = rec.rank_detail.columns;
  s.rank_hyperplane = rec.rank_detail.hyperplane;
  s.table = rec.table;
  s.table_label = rec.table_label;
  if (rec.verdict) s.occurs = rec.verdict->occurs;
  s.geom_simple = rec.geom_simple;
  s.m_theta_degree = rec.m_theta_degree;
  s.rejected_candidates = rec.rejected_candidates;
  s.frobenius_primes = rec.frobenius_primes;
  s.seed = seed;
  s.screen = to_string(rec.screen.verdict);
  s.screen_reason = rec.screen.reason;
  return s;
}

nlohmann::json to_json(const ClassSummary& s) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : s.factors) factors.push_back({{"poly", f.poly}, {"multiplicity", f.multiplicity}});
  return {{"version", s.version},
          {"input", s.input},
          {"polynomial", s.polynomial},
          {"p", s.p},
          {"n", s.n},
          {"dimension", s.dimension},
          {"factors", factors},
          {"simple", s.simple},
          {"honda_tate_e", s.honda_tate_e},
          {"newton_vertices", s.np_vertices},
          {"slopes", s.slopes},
          {"np_type", s.np_tag},
          {"group",
           {{"label", s.group_label}, {"name", s.group_name}, {"order", s.group_order}, {"generators", s.generators}}},
          {"weighting", s.weighting},
          {"angle_rank", {{"value", s.angle_rank}, {"columns", s.rank_columns}, {"hyperplane", s.rank_hyperplane}}},
          {"verdict",
           {{"table", s.table}, {"row", s.table_label}, {"occurs", opt_bool(s.occurs)},
            {"geometrically_simple", opt_bool(s.geom_simple)}}},
          {"certificate",
           {{"m_theta_degree", s.m_theta_degree},
            {"rejected_candidates", s.rejected_candidates},
            {"frobenius_primes", s.frobenius_primes},
            {"seed", s.seed}}},
          {"screen", {{"result", s.screen}, {"reason", s.screen_reason}}}};
}

ClassSummary summary_from_json(const nlohmann::json& j) {
  try {
    ClassSummary s;
    s.version = j.at("version").get<int>();
    if (s.version != kRecordVersion) throw Error(ErrorCode::Usage, "unsupported record version " + std::to_string(s.version));
    s.input = j.at("input").get<std::string>();
    s.polynomial = j.at("polynomial").get<std::string>();
    s.p = j.at("p").get<std::uint64_t>();
    s.n = j.at("n").get<unsigned>();
    s.dimension = j.at("dimension").get<int>();
    for (const auto& f : j.at("factors")) s.factors.push_back({f.at("poly").get<std::string>(), f.at("multiplicity").get<int>()});
    s.simple = j.at("simple").get<bool>();
    s.honda_tate_e = j.at("honda_tate_e").get<int>();
    s.np_vertices = j.at("newton_vertices").get<std::vector<std::string>>();
    s.slopes = j.at("slopes").get<std::vector<std::string>>();
    s.np_tag = j.at("np_type").get<std::string>();
    const auto& g = j.at("group");
    s.group_label = g.at("label").get<std::string>();
    s.group_name = g.at("name").get<std::string>();
    s.group_order = g.at("order").get<int>();
    s.generators = g.at("generators").get<std::string>();
    s.weighting = j.at("weighting").get<std::vector<std::string>>();
    const auto& a = j.at("angle_rank");
    s.angle_rank = a.at("value").get<int>();
    s.rank_columns = a.at("columns").get<int>();
    s.rank_hyperplane = a.at("hyperplane").get<int>();
    const auto& v = j.at("verdict");
    s.table = v.at("table").get<int>();
    s.table_label = v.at("row").get<std::string>();
    s.occurs = get_opt_bool(v, "occurs");
    s.geom_simple = get_opt_bool(v, "geometrically_simple");
    const auto& c = j.at("certificate");
    s.m_theta_degree = c.at("m_theta_degree").get<int>();
    s.rejected_candidates = c.at("rejected_candidates").get<int>();
    s.frobenius_primes = c.at("frobenius_primes").get<std::vector<std::uint64_t>>();
    s.seed = c.at("seed").get<std::uint64_t>();
    s.screen = j.at("screen").at("result").get<std::string>();
    s.screen_reason = j.at("screen").at("reason").get<std::string>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Usage, std::string("malformed record: ") + e.what());
  }
}

std::string render_text(const ClassSummary& s) {
  std::ostringstream o;
  auto join = [](const std::vector<std::string>& v, const char* sep) {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i) r += (i ? sep : "") + v[i];
    return r;
  };
  o << "input              " << s.input << "\n";
  o << "P(T)               " << s.polynomial << "   (q = " << s.p << "^" << s.n << ")\n";
  o << "dimension          " << s.dimension << "\n";
  for (const auto& f : s.factors) o << "factor             (" << f.poly << ")^" << f.multiplicity << "\n";
  o << "simple             " << (s.simple ? "yes" : "no") << " (Honda-Tate e = " << s.honda_tate_e << ")\n";
  o << "Newton polygon     vertices " << join(s.np_vertices, " ") << "; slopes " << join(s.slopes, " ");
  if (!s.np_tag.empty()) o << "; type " << s.np_tag;
  o << "\n";
  o << "group              " << (s.group_label.empty() ? s.group_name : s.group_label) << ", order " << s.group_order
    << ", generated by " << s.generators << "\n";
  o << "weighting          " << join(s.weighting, " ") << "\n";
  o << "angle rank         " << s.angle_rank << " (column rank " << s.rank_columns << ", hyperplane rank "
    << s.rank_hyperplane << ")\n";
  if (s.table) {
    o << "table              " << s.table << ", row " << (s.table_label.empty() ? "none" : s.table_label);
    if (s.occurs) o << " (listed as " << (*s.occurs ? "occurring" : "not occurring") << ")";
    o << "\n";
  }
  o << "geometrically simple " << yes_no(s.geom_simple) << "\n";
  o << "certificate        deg m_theta " << s.m_theta_degree << ", rejected candidates " << s.rejected_candidates
    << ", Frobenius primes";
  for (auto l : s.frobenius_primes) o << " " << l;
  o << " (seed " << s.seed << ")\n";
  o << "screen             " << s.screen << (s.screen_reason.empty() ? "" : ": " + s.screen_reason) << "\n";
  return o.str();
}

namespace {

const char* kTableTitles[] = {
    "",
    "Labelled subgroups of W4 and W6",
    "Elliptic curves, ordinary",
    "Elliptic curves, supersingular",
    "Simple surfaces, ordinary (A)",
    "Simple surfaces, almost ordinary (B)",
    "Simple surfaces, supersingular (C)",
    "Nonsimple surfaces, ordinary (A)",
    "Nonsimple surfaces, almost ordinary (B)",
    "Nonsimple surfaces, supersingular (C)",
    "Simple threefolds, ordinary (A)",
    "Simple threefolds, p-rank 2 (B)",
    "Simple threefolds, p-rank 1 (C)",
    "Simple threefolds, p-rank 0 with slopes 1/3, 2/3 (D)",
    "Simple threefolds, supersingular (E)",
};

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string render_atlas() {
  std::ostringstream o;
  o << pad("label", 14) << pad("order", 7) << pad("transitive", 12) << pad("generators", 52) << "check\n";
  for (const auto& row : calibration_table()) {
    if (row.d < 2) continue;
    std::vector<SignedPerm> gens;
    for (const auto& g : row.generators) gens.push_back(SignedPerm::parse(row.d, g));
    const auto h = SignedSubgroup::generated(row.d, gens);
    const auto labelled = subgroup_from_label(row.d, row.label);
    std::string g;
    for (std::size_t i = 0; i < row.generators.size(); ++i) g += (i ? ", " : "") + row.generators[i];
    if (g.empty()) g = "id";
    const bool ok = labelled && *labelled == h && label_of(h).str() == row.label;
    o << pad(row.label, 14) << pad(std::to_string(h.order()), 7) << pad(h.is_transitive() ? "yes" : "no", 12) << pad(g, 52)
      << (ok ? "ok" : "MISMATCH") << "\n";
  }
  return o.str();
}

std::string tri(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; }

}  // namespace

std::string render_table(int which) {
  if (which < 1 || which > 14) throw Error(ErrorCode::Usage, "no table " + std::to_string(which) + " (expected 1-14)");
  std::ostringstream o;
  o << "Table " << which << ": " << kTableTitles[which] << "\n";
  if (which == 1) return o.str() + render_atlas();
  o << pad("class", 14) << pad("angle rank", 12) << pad("occurs", 8) << pad("geom. simple", 14) << "example\n";
  for (const auto& r : table_rows(which)) {
    const auto h = subgroup_from_label(r.dimension, r.label);
    if (!h) throw Error(ErrorCode::CalibrationMismatch, "unknown row label " + r.label);
    const int delta = angle_rank(stratum_weighting(r.dimension, r.np_tag), *h);
    std::string rank = std::to_string(delta);
    if (delta != r.angle_rank) rank += " [listed " + std::to_string(r.angle_rank) + "]";
    o << pad(r.label, 14) << pad(rank, 12) << pad(r.occurs ? "yes" : "no", 8) << pad(tri(r.geom_simple), 14)
      << (r.example.empty() ? "-" : r.example) << "\n";
  }
  return o.str();
}

TableVerification verify_table(int which, LmfdbClient& client, const ClassifyOptions& opt) {
  if (which < 1 || which > 14) throw Error(ErrorCode::Usage, "no table " + std::to_string(which) + " (expected 1-14)");
  TableVerification v;
  v.table = which;
  if (which == 1) {
    const std::string text = render_atlas();
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      ++v.checked;
      if (line.find("MISMATCH") != std::string::npos) v.mismatches.push_back(line);
    }
    return v;
  }
  for (const auto& r : table_rows(which)) {
    if (r.example.empty()) continue;
    ++v.checked;
    const auto fx = client.fetch(r.example);
    const auto rec = classify(label_to_polynomial(r.example), opt);
    const auto row_group = *subgroup_from_label(r.dimension, r.label);
    std::vector<std::string> bad;
    if (fx.polynomial() != rec.P.poly) bad.push_back("stored polynomial differs");
    if (rec.np_tag != r.np_tag) bad.push_back("NP type " + rec.np_tag);
    if (rec.simple != r.simple && r.dimension > 1) bad.push_back(std::string("simple ") + (rec.simple ? "yes" : "no"));
    if (rec.rep.d != r.dimension || !w_conjugate(row_group, rec.rep.group, rec.rep.w))
      bad.push_back("group " + rec.label + " not w-conjugate to the row");
    if (rec.angle_rank != r.angle_rank) bad.push_back("angle rank " + std::to_string(rec.angle_rank));
    if (r.geom_simple && rec.geom_simple != r.geom_simple) bad.push_back("geometric simplicity " + tri(rec.geom_simple));
    for (const auto& b : bad) v.mismatches.push_back(r.label + " / " + r.example + ": " + b);
  }
  return v;
}

}  // namespace avinv
