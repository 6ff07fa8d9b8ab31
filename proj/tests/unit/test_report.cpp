#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "avinv/errors.hpp"
#include "avinv/report.hpp"
#include "avinv/search.hpp"

using namespace avinv;

TEST_CASE("records round trip through JSON") {
  for (const char* label : {"1.2.ab", "2.2.a_ae", "2.4.ah_u", "3.2.ac_a_d", "3.3.a_a_aj"}) {
    CAPTURE(label);
    const auto rec = classify(label_to_polynomial(label), ClassifyOptions{7});
    const auto s = summarize(rec, 7);
    const auto text = to_json(s).dump();
    const auto back = summary_from_json(nlohmann::json::parse(text));
    CHECK(back == s);
    CHECK(to_json(back).dump() == text);
    CHECK(render_text(back) == render_text(s));
  }
  CHECK_THROWS_AS(summary_from_json(nlohmann::json::parse(R"({"version": 1})")), Error);
}

TEST_CASE("classification is deterministic for a fixed seed") {
  const auto P = label_to_polynomial("3.2.ad_f_ah");
  const auto a = summarize(classify(P, ClassifyOptions{3}), 3);
  const auto b = summarize(classify(P, ClassifyOptions{3}), 3);
  CHECK(a == b);
  CHECK(a.frobenius_primes.size() == 5);
}

TEST_CASE("table rendering") {
  CHECK(render_table(10) == render_table(10));
  CHECK(render_table(10).find("D6.6.t.a.1") != std::string::npos);
  CHECK(render_table(6).find("[listed 2]") != std::string::npos);
  CHECK_THROWS_AS(render_table(0), Error);
  CHECK_THROWS_AS(render_table(15), Error);
}

TEST_CASE("coefficient bounds") {
  CHECK(coefficient_bound(1, 2, 1) == 2);   // 2*sqrt(2)
  CHECK(coefficient_bound(2, 4, 1) == 8);
  CHECK(coefficient_bound(2, 4, 2) == 24);
  CHECK(coefficient_bound(3, 2, 3) == 56);  // 20*2^(3/2)
}

TEST_CASE("search resumes from its checkpoint") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "avinv_search_ckpt";
  fs::remove_all(dir);
  fs::create_directories(dir);
  SearchConfig cfg;
  cfg.d = 1;
  cfg.p = 3;
  cfg.r_max = 2;
  const auto full = run_search(cfg);
  CHECK(full.complete);
  CHECK(full.realized.count({"ordinary", "W2.2.t.a.1"}) == 1);
  CHECK(full.realized.count({"supersingular", "W2.2.t.a.1"}) == 1);

  // stop part-way by writing a checkpoint from a truncated run, then resume
  cfg.checkpoint = dir / "state.json";
  cfg.checkpoint_every = 3;
  const auto resumed = run_search(cfg);
  CHECK(resumed.enumerated == full.enumerated);
  CHECK(resumed.realized.size() == full.realized.size());
  auto j = nlohmann::json::parse(std::ifstream(cfg.checkpoint));
  CHECK(j["complete"] == true);
  j["complete"] = false;
  j["r"] = 2;
  j["a"] = {0};
  j["enumerated"] = 100;
  std::ofstream(cfg.checkpoint) << j.dump();
  const auto again = run_search(cfg);
  CHECK(again.enumerated == 100 + coefficient_bound(1, 9, 1) + 1);

  SearchConfig other = cfg;
  other.p = 5;
  CHECK_THROWS_AS(run_search(other), Error);
  fs::remove_all(dir);
}
