#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "avinv/errors.hpp"
#include "avinv/lmfdb.hpp"
#include "avinv/report.hpp"
#include "avinv/search.hpp"

using namespace avinv;

namespace {

struct Common {
  bool offline = false;
  std::string cache_dir;
  std::string fixtures_dir = default_fixtures_dir().string();
  std::string base_url = "https://www.lmfdb.org";
  long precision_bits = 128;
  std::uint64_t seed = 0;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--offline", c.offline, "Never query the remote database")->envname("AVINV_OFFLINE");
  cmd->add_option("--cache-dir", c.cache_dir, "Directory for cached class records")->envname("AVINV_CACHE_DIR");
  cmd->add_option("--fixtures-dir", c.fixtures_dir, "Directory of bundled class records")->envname("AVINV_FIXTURES_DIR");
  cmd->add_option("--base-url", c.base_url, "Database base URL")->envname("AVINV_BASE_URL");
  cmd->add_option("--precision-bits", c.precision_bits, "Starting root precision in bits")
      ->check(CLI::Range(64L, 1L << 20))
      ->envname("AVINV_PRECISION_BITS");
  cmd->add_option("--seed", c.seed, "Seed for auxiliary Frobenius primes")->envname("AVINV_SEED");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->envname("AVINV_FORMAT");
}

LmfdbConfig lmfdb_config(const Common& c) {
  LmfdbConfig cfg;
  cfg.offline = c.offline;
  cfg.base_url = c.base_url;
  cfg.fixtures_dir = c.fixtures_dir;
  cfg.cache_dir = c.cache_dir;
  return cfg;
}

ClassifyOptions classify_options(const Common& c) { return ClassifyOptions{c.seed, c.precision_bits}; }

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::Usage, std::string("bad ") + what + " '" + s + "'");
}

// Leading coefficient first, e.g. "1,-1,2" is T^2 - T + 2.
WeilPolynomial from_coeffs(const std::string& list, std::uint64_t p, unsigned n) {
  if (p == 0 || n == 0) throw Error(ErrorCode::Usage, "--coeffs needs --p and --n");
  std::vector<mpz_class> c;
  std::stringstream in(list);
  for (std::string tok; std::getline(in, tok, ',');) {
    mpz_class x;
    if (tok.empty() || x.set_str(tok, 10) != 0) throw Error(ErrorCode::Usage, "bad coefficient '" + tok + "'");
    c.push_back(x);
  }
  std::reverse(c.begin(), c.end());
  const IntPolynomial f(c);
  const int deg = f.degree();
  if (deg < 2 || deg % 2 || f.lead() != 1)
    throw Error(ErrorCode::Usage, "coefficients must describe a monic polynomial of even positive degree");
  const mpz_class qg = [&] {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(n) * deg / 2);
    return q;
  }();
  if (abs(f.coeff(0)) != qg) throw Error(ErrorCode::Usage, "constant term must be +-q^g for a q-Weil polynomial");
  return validate_weil(f, p, n);
}

int cmd_analyze(const Common& c, const std::vector<std::string>& inputs, const std::string& coeffs, std::uint64_t p,
                unsigned n, bool product) {
  LmfdbClient client(lmfdb_config(c));
  std::vector<std::pair<std::string, WeilPolynomial>> polys;
  for (const auto& in : inputs) {
    const auto rec = client.fetch(in);
    polys.emplace_back(in, label_to_polynomial(in));
    if (rec.polynomial() != polys.back().second.poly) throw Error(ErrorCode::RemoteMismatch, in);
  }
  if (!coeffs.empty()) polys.emplace_back(coeffs, from_coeffs(coeffs, p, n));
  else if (p || n) throw Error(ErrorCode::Usage, "--p/--n only apply with --coeffs");
  if (polys.empty()) throw Error(ErrorCode::Usage, "nothing to analyze: give labels or --coeffs");
  if (product) {
    WeilPolynomial P = polys[0].second;
    std::string name = polys[0].first;
    for (std::size_t i = 1; i < polys.size(); ++i) {
      if (polys[i].second.p != P.p || polys[i].second.n != P.n)
        throw Error(ErrorCode::IncompatibleContexts, "product factors live over different fields");
      P = validate_weil(P.poly * polys[i].second.poly, P.p, P.n);
      name += " x " + polys[i].first;
    }
    polys = {{name, P}};
  }
  bool first = true;
  for (const auto& [name, P] : polys) {
    auto rec = classify(P, classify_options(c));
    rec.input = name;
    const auto s = summarize(rec, c.seed);
    if (c.format == "records") {
      std::cout << to_json(s).dump() << "\n";
    } else {
      if (!first) std::cout << "\n";
      std::cout << render_text(s);
    }
    first = false;
  }
  return 0;
}

int cmd_tables(const Common& c, int which, bool verify) {
  std::vector<int> tables;
  if (which == 0)
    for (int t = 1; t <= 14; ++t) tables.push_back(t);
  else
    tables.push_back(which);
  LmfdbClient client(lmfdb_config(c));
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << render_table(tables[i]);
    if (!verify) continue;
    const auto v = verify_table(tables[i], client, classify_options(c));
    std::cout << "verified " << v.checked << " row(s), " << v.mismatches.size() << " mismatch(es)\n";
    for (const auto& m : v.mismatches) {
      std::cout << "  MISMATCH " << m << "\n";
      problems.push_back("table " + std::to_string(tables[i]) + ": " + m);
    }
  }
  if (!problems.empty()) {
    std::string msg = std::to_string(problems.size()) + " row(s) disagree";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(ErrorCode::VerificationFailure, msg);
  }
  return 0;
}

int cmd_subgroups(int d) {
  if (d < 1 || d > 3) throw Error(ErrorCode::Usage, "subgroups supports d = 1, 2, 3");
  const auto& subs = enumerate_subgroups(d);
  std::cout << subs.size() << " subgroups of W" << 2 * d << "\n";
  for (const auto& h : subs) {
    std::cout << label_of(h).str() << "  order " << h.order() << (h.contains_iota() ? "  iota" : "") << "  "
              << h.generators_string() << "\n";
  }
  return 0;
}

int cmd_search(const Common& c, const SearchConfig& base) {
  SearchConfig cfg = base;
  cfg.classify = classify_options(c);
  const auto rep = run_search(cfg, [&](const Witness& w) {
    if (c.format == "text") std::cout << "found " << w.np_tag << " " << w.group << " at " << w.example << "\n" << std::flush;
  });
  if (c.format == "records") {
    nlohmann::json out = {{"d", cfg.d}, {"p", cfg.p}, {"r_max", cfg.r_max}, {"enumerated", rep.enumerated},
                          {"weil", rep.weil}, {"simple", rep.simple}, {"realized", nlohmann::json::array()}};
    for (const auto& [k, w] : rep.realized)
      out["realized"].push_back({{"np", w.np_tag}, {"group", w.group}, {"example", w.example}, {"angle_rank", w.angle_rank}});
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "enumerated " << rep.enumerated << ", Weil " << rep.weil << ", simple " << rep.simple << "\n";
  std::set<std::string> transitive;
  for (const auto& [k, w] : rep.realized) {
    std::cout << "  " << w.np_tag << "  " << w.group << "  delta " << w.angle_rank << "  " << w.example << "\n";
    transitive.insert(w.group.substr(0, w.group.find('.')));
  }
  std::cout << "groups realized:";
  for (const auto& g : transitive) std::cout << " " << g;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isogeny invariants of abelian varieties over finite fields"};
  app.require_subcommand(1);
  Common common;

  auto* analyze = app.add_subcommand("analyze", "Classify isogeny classes");
  std::vector<std::string> inputs;
  std::string coeffs;
  std::uint64_t p = 0;
  unsigned n = 0;
  bool product = false;
  analyze->add_option("labels", inputs, "Isogeny class labels such as 2.2.ab_a");
  analyze->add_option("--coeffs", coeffs, "Coefficients, leading first, comma separated");
  analyze->add_option("--p", p, "Characteristic for --coeffs");
  analyze->add_option("--n", n, "Degree of the field for --coeffs");
  analyze->add_flag("--product", product, "Analyze the product of all inputs");
  add_common(analyze, common);

  auto* tables = app.add_subcommand("tables", "Regenerate the reference tables");
  int which = 0;
  bool verify = false;
  tables->add_option("--which", which, "Table number 1-14 (default: all)");
  tables->add_flag("--verify", verify, "Re-run the pipeline on every example");
  add_common(tables, common);

  auto* subgroups = app.add_subcommand("subgroups", "List the labelled subgroups of W_2d");
  int sub_d = 2;
  subgroups->add_option("--d", sub_d, "Half the degree (1-3)");

  auto* verify_cmd = app.add_subcommand("verify", "Verify every table against its examples");
  add_common(verify_cmd, common);

  auto* search = app.add_subcommand("search", "Enumerate simple classes and record realized groups");
  SearchConfig scfg;
  std::string checkpoint;
  search->add_option("--d", scfg.d, "Dimension (1-3)");
  search->add_option("--p", scfg.p, "Characteristic")->required();
  search->add_option("--r-max", scfg.r_max, "Largest r with q = p^r");
  search->add_option("--checkpoint", checkpoint, "Checkpoint file for resuming")->envname("AVINV_CHECKPOINT");
  add_common(search, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorFamily::Usage);
  }

  try {
    if (*analyze) return cmd_analyze(common, inputs, coeffs, p, n, product);
    if (*tables) return cmd_tables(common, which, verify);
    if (*subgroups) return cmd_subgroups(sub_d);
    if (*verify_cmd) return cmd_tables(common, 0, true);
    if (*search) {
      scfg.checkpoint = checkpoint;
      return cmd_search(common, scfg);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.family());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorFamily::Internal);
  }
  return 0;
}
