#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "avinv/errors.hpp"
#include "avinv/lmfdb.hpp"

using namespace avinv;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
  auto d = fs::temp_directory_path() / ("avinv_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Minimal stand-in for the remote API; polynomials come back leading-first.
struct MockServer {
  httplib::Server svr;
  std::thread th;
  int port = 0;
  std::atomic<int> hits{0};
  std::string override_poly;

  MockServer() {
    svr.Get("/api/av_fq_isog/", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      const std::string label = req.get_param_value("label");
      nlohmann::json body = {{"data", nlohmann::json::array()}};
      if (label != "2.2.zz_zz") {
        auto P = label_to_polynomial(label).poly;
        nlohmann::json poly = nlohmann::json::array();
        for (int k = P.degree(); k >= 0; --k) poly.push_back(P.coeff(k).get_si());
        if (!override_poly.empty()) poly = nlohmann::json::parse(override_poly);
        body["data"].push_back({{"label", label}, {"poly", poly}, {"angle_rank", 2}});
      }
      res.set_content(body.dump(), "application/json");
    });
    port = svr.bind_to_any_port("127.0.0.1");
    th = std::thread([this] { svr.listen_after_bind(); });
    svr.wait_until_ready();
  }
  ~MockServer() {
    svr.stop();
    th.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port); }
};

}  // namespace

TEST_CASE("code decoding anchors") {
  CHECK(decode_code("acm") == -64);
  CHECK(decode_code("i") == 8);
  CHECK(decode_code("j") == 9);
  CHECK(decode_code("a") == 0);
  CHECK(decode_code("ab") == -1);
  CHECK(decode_code("ba") == 26);
  CHECK_THROWS_AS(decode_code(""), Error);
  CHECK_THROWS_AS(decode_code("aab"), Error);
  CHECK_THROWS_AS(decode_code("B"), Error);
}

TEST_CASE("code round trips") {
  const long bound = 26L * 26 * 26 * 26;
  for (long m = -bound; m <= bound; ++m) {
    if (decode_code(encode_code(m)) != m) FAIL("decode(encode(" << m << "))");
  }
  // every canonical code of length <= 4 survives encode(decode(.))
  for (int len = 1; len <= 4; ++len) {
    long total = 1;
    for (int i = 0; i < len; ++i) total *= 26;
    for (long k = 0; k < total; ++k) {
      std::string s(len, 'a');
      for (long x = k, i = len - 1; i >= 0; --i, x /= 26) s[i] = static_cast<char>('a' + x % 26);
      const bool canonical = len == 1 || (s[0] != 'a' ? true : s[1] != 'a');
      if (!canonical) continue;
      if (encode_code(decode_code(s)) != s) FAIL("encode(decode(" << s << "))");
    }
  }
}

TEST_CASE("labels to polynomials") {
  CHECK(label_to_polynomial("3.19.a_j_acm").poly == IntPolynomial({6859, 0, 171, -64, 9, 0, 1}));
  CHECK(label_to_polynomial("1.19.i").poly == IntPolynomial({19, 8, 1}));
  CHECK(label_to_polynomial("1.2.ab").poly == IntPolynomial({2, -1, 1}));
  CHECK(label_to_polynomial("2.2.ac_d").poly == IntPolynomial({4, -4, 3, -2, 1}));
  auto P = label_to_polynomial("3.7.ak_bw_afv");
  CHECK(label_of_polynomial(P).str() == "3.7.ak_bw_afv");
  CHECK_THROWS_WITH_AS(label_to_polynomial("9.2.x"), doctest::Contains("MalformedLabel"), Error);
  CHECK_THROWS_AS(label_to_polynomial("2.6.a_a"), Error);
  CHECK_THROWS_AS(label_to_polynomial("1.2.z"), Error);
}

TEST_CASE("every cited label has a valid bundled fixture") {
  LmfdbConfig cfg;
  cfg.offline = true;
  cfg.fixtures_dir = default_fixtures_dir();
  LmfdbClient client(cfg);
  for (const auto& label : cited_labels()) {
    CAPTURE(label);
    const auto f = client.fetch(label);
    CHECK(f.source == "fixture");
    CHECK(f.polynomial() == label_to_polynomial(label).poly);
    const auto l = IsogenyClassLabel::parse(label);
    const auto path = cfg.fixtures_dir / (std::to_string(l.g) + "." + std::to_string(l.q)) / (label + ".txt");
    CHECK(slurp(path) == f.serialize());
  }
}

TEST_CASE("offline miss reports the network family") {
  LmfdbConfig cfg;
  cfg.offline = true;
  try {
    fetch_class("2.5.a_a", cfg);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NetworkUnavailable);
    CHECK(std::string(e.what()).find("offline") != std::string::npos);
  }
}

TEST_CASE("live fetch is validated, cached and reproducible") {
  MockServer mock;
  LmfdbConfig cfg;
  cfg.base_url = mock.url();
  cfg.cache_dir = temp_dir("cache");
  cfg.retries = 0;
  const auto first = fetch_class("3.7.ak_bw_afv", cfg);
  CHECK(first.source == "live");
  CHECK(first.metadata.at("angle_rank") == 2);
  CHECK(mock.hits == 1);

  const auto again = fetch_class("3.7.ak_bw_afv", cfg);
  CHECK(mock.hits == 1);
  CHECK(again == first);
  CHECK(slurp(cfg.cache_dir / "3.7" / "3.7.ak_bw_afv.txt") == first.serialize());

  LmfdbClient client(cfg);
  const auto many = client.fetch_many({"2.3.ad_f", "2.3.ad_i", "2.4.ac_e", "2.4.ag_q", "2.4.ah_u", "3.7.ak_bw_afv"});
  CHECK(many.size() == 6);
  CHECK(mock.hits == 6);

  CHECK_THROWS_WITH_AS(fetch_class("2.2.zz_zz", cfg), doctest::Contains("NotFound"), Error);
  mock.override_poly = "[1, 0, 0]";
  CHECK_THROWS_WITH_AS(fetch_class("1.3.b", cfg), doctest::Contains("RemoteMismatch"), Error);
  fs::remove_all(cfg.cache_dir);
}
