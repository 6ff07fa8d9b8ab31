#pragma once

// Isogeny-class labels "g.q.c1_..._cg", a small HTTP client for the public
// abelian-varieties database, and the on-disk cache / fixture store.

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "avinv/weil.hpp"

namespace avinv {

long decode_code(const std::string& code);
std::string encode_code(long value);

struct IsogenyClassLabel {
  int g = 0;
  std::uint64_t q = 0;
  std::vector<std::string> codes;

  static IsogenyClassLabel parse(const std::string& s);  // MalformedLabel
  std::string str() const;
  std::vector<long> coefficients() const;  // a_1..a_g
};

IsogenyClassLabel label_of_polynomial(const WeilPolynomial& P);
WeilPolynomial label_to_polynomial(const IsogenyClassLabel& label);
WeilPolynomial label_to_polynomial(const std::string& label);

struct ClassFixture {
  std::string label;
  std::vector<std::string> coefficients;  // constant term first, decimal
  nlohmann::json metadata = nlohmann::json::object();
  std::string source;  // "fixture" or "live"

  nlohmann::json to_json() const;
  static ClassFixture from_json(const nlohmann::json& j);
  std::string serialize() const;  // canonical text, sorted keys
  IntPolynomial polynomial() const;
  friend bool operator==(const ClassFixture&, const ClassFixture&);
};

struct LmfdbConfig {
  std::string base_url = "https://www.lmfdb.org";
  bool offline = false;
  std::filesystem::path cache_dir;
  std::filesystem::path fixtures_dir;
  int timeout_seconds = 20;
  int max_concurrency = 4;
  int retries = 3;
};

class LmfdbClient {
 public:
  explicit LmfdbClient(LmfdbConfig cfg);
  const LmfdbConfig& config() const { return cfg_; }

  // memory cache, disk cache, bundled fixtures, then the live API
  ClassFixture fetch(const std::string& label);
  std::vector<ClassFixture> fetch_many(const std::vector<std::string>& labels);

 private:
  std::filesystem::path record_path(const std::filesystem::path& root, const IsogenyClassLabel& l) const;
  ClassFixture fetch_live(const IsogenyClassLabel& l);
  void persist(const ClassFixture& f, const IsogenyClassLabel& l);

  LmfdbConfig cfg_;
  std::mutex mu_;
  std::map<std::string, ClassFixture> memory_;
};

ClassFixture fetch_class(const std::string& label, const LmfdbConfig& cfg);

// Every label cited in the reference tables and worked examples.
const std::vector<std::string>& cited_labels();

// Fixture directory shipped with the source tree.
std::filesystem::path default_fixtures_dir();

}  // namespace avinv
