#include "avinv/search.hpp"

#include <fstream>

#include <json.hpp>

#include "avinv/errors.hpp"
#include "avinv/factor.hpp"
#include "avinv/lmfdb.hpp"
#include "avinv/modp.hpp"

namespace avinv {

long coefficient_bound(int d, std::uint64_t q, int j) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * d, j);
  mpz_class qj;
  mpz_ui_pow_ui(qj.get_mpz_t(), q, j);
  mpz_class x = c * c * qj;
  mpz_sqrt(x.get_mpz_t(), x.get_mpz_t());
  return x.get_si();
}

namespace {

struct Cursor {
  unsigned r = 1;
  std::vector<long> a;
};

nlohmann::json save_state(const SearchConfig& cfg, const Cursor& cur, const SearchReport& rep) {
  nlohmann::json realized = nlohmann::json::array();
  for (const auto& [key, w] : rep.realized)
    realized.push_back({{"np", w.np_tag}, {"group", w.group}, {"example", w.example}, {"r", w.r}, {"angle_rank", w.angle_rank}});
  return {{"d", cfg.d},         {"p", cfg.p},           {"r_max", cfg.r_max},     {"r", cur.r},
          {"a", cur.a},         {"enumerated", rep.enumerated}, {"weil", rep.weil}, {"simple", rep.simple},
          {"complete", rep.complete}, {"realized", realized}};
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

bool load_state(const SearchConfig& cfg, Cursor& cur, SearchReport& rep) {
  std::ifstream in(cfg.checkpoint);
  if (!in) return false;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Usage, "unreadable checkpoint " + cfg.checkpoint.string() + ": " + e.what());
  }
  if (j.value("d", 0) != cfg.d || j.value("p", std::uint64_t{0}) != cfg.p || j.value("r_max", 0u) != cfg.r_max)
    throw Error(ErrorCode::Usage, "checkpoint " + cfg.checkpoint.string() + " belongs to a different search");
  cur.r = j.at("r").get<unsigned>();
  cur.a = j.at("a").get<std::vector<long>>();
  rep.enumerated = j.at("enumerated").get<long>();
  rep.weil = j.at("weil").get<long>();
  rep.simple = j.at("simple").get<long>();
  rep.complete = j.at("complete").get<bool>();
  for (const auto& w : j.at("realized")) {
    Witness x{w.at("np"), w.at("group"), w.at("example"), w.at("r"), w.at("angle_rank")};
    rep.realized.emplace(std::make_pair(x.np_tag, x.group), x);
  }
  return true;
}

std::vector<long> first_vector(int d, std::uint64_t q) {
  std::vector<long> a(d);
  for (int j = 0; j < d; ++j) a[j] = -coefficient_bound(d, q, j + 1);
  return a;
}

// Lexicographic successor inside the box; false when exhausted.
bool advance(std::vector<long>& a, int d, std::uint64_t q) {
  for (int j = d - 1; j >= 0; --j) {
    const long b = coefficient_bound(d, q, j + 1);
    if (a[j] < b) {
      ++a[j];
      return true;
    }
    a[j] = -b;
  }
  return false;
}

}  // namespace

SearchReport run_search(const SearchConfig& cfg, const std::function<void(const Witness&)>& on_new) {
  if (cfg.d < 1 || cfg.d > 3) throw Error(ErrorCode::Usage, "search supports 1 <= d <= 3");
  if (cfg.r_max < 1 || !modp::is_prime(cfg.p)) throw Error(ErrorCode::Usage, "search needs a prime p and r_max >= 1");
  SearchReport rep;
  Cursor cur;
  std::uint64_t q = cfg.p;
  const bool resumed = !cfg.checkpoint.empty() && load_state(cfg, cur, rep);
  if (rep.complete) return rep;
  if (!resumed) cur.a = first_vector(cfg.d, q);
  for (unsigned k = 1; k < cur.r; ++k) q *= cfg.p;

  long since_save = 0;
  while (true) {
    ++rep.enumerated;
    IsogenyClassLabel label;
    label.g = cfg.d;
    label.q = q;
    for (long x : cur.a) label.codes.push_back(encode_code(x));
    try {
      const WeilPolynomial P = label_to_polynomial(label);
      ++rep.weil;
      if (is_irreducible(P.poly) && honda_tate_e(P) == 1) {
        ++rep.simple;
        const auto rec = classify(P, cfg.classify);
        const std::string group = rec.table_label.empty() ? rec.label : rec.table_label;
        auto [it, fresh] = rep.realized.try_emplace({rec.np_tag, group},
                                                    Witness{rec.np_tag, group, label.str(), cur.r, rec.angle_rank});
        if (fresh && on_new) on_new(it->second);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WeilValidationFailed) throw;
    }
    if (!advance(cur.a, cfg.d, q)) {
      if (cur.r == cfg.r_max) break;
      ++cur.r;
      q *= cfg.p;
      cur.a = first_vector(cfg.d, q);
    }
    if (!cfg.checkpoint.empty() && ++since_save >= cfg.checkpoint_every) {
      write_atomic(cfg.checkpoint, save_state(cfg, cur, rep).dump(2) + "\n");
      since_save = 0;
    }
  }
  rep.complete = true;
  if (!cfg.checkpoint.empty()) write_atomic(cfg.checkpoint, save_state(cfg, cur, rep).dump(2) + "\n");
  return rep;
}

}  // namespace avinv
