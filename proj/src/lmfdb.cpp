#include "avinv/lmfdb.hpp"

#include <httplib.h>

#include <charconv>
#include <chrono>
#include <fstream>
#include <future>
#include <thread>
#include <sstream>

#include "avinv/errors.hpp"
#include "avinv/modp.hpp"

namespace avinv {

namespace {

long decode_digits(const std::string& s) {
  long v = 0;
  for (char ch : s) {
    if (ch < 'a' || ch > 'z') throw Error(ErrorCode::MalformedCode, "bad letter in '" + s + "'");
    if (v > (1L << 50)) throw Error(ErrorCode::MalformedCode, "code too long: " + s);
    v = v * 26 + (ch - 'a');
  }
  return v;
}

std::string encode_digits(unsigned long v) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + v % 26));
    v /= 26;
  } while (v);
  return s;
}

std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    unsigned n = 0;
    while (q % p == 0) q /= p, ++n;
    if (q != 1) return {0, 0};
    return {p, n};
  }
  return q >= 2 ? std::pair<std::uint64_t, unsigned>{q, 1} : std::pair<std::uint64_t, unsigned>{0, 0};
}

}  // namespace

long decode_code(const std::string& code) {
  if (code.empty()) throw Error(ErrorCode::MalformedCode, "empty code");
  if (code.size() > 1 && code[0] == 'a') {
    const std::string rest = code.substr(1);
    if (rest[0] == 'a') throw Error(ErrorCode::MalformedCode, "non-canonical code '" + code + "'");
    return -decode_digits(rest);
  }
  return decode_digits(code);
}

std::string encode_code(long value) {
  if (value < 0) return "a" + encode_digits(static_cast<unsigned long>(-value));
  return encode_digits(static_cast<unsigned long>(value));
}

IsogenyClassLabel IsogenyClassLabel::parse(const std::string& s) {
  auto bad = [&](const std::string& why) { return Error(ErrorCode::MalformedLabel, "'" + s + "': " + why); };
  const auto d1 = s.find('.');
  const auto d2 = d1 == std::string::npos ? d1 : s.find('.', d1 + 1);
  if (d2 == std::string::npos) throw bad("expected g.q.codes");
  IsogenyClassLabel l;
  auto num = [&](std::string_view part, auto& out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) throw bad("bad number");
  };
  const std::string_view sv(s);
  num(sv.substr(0, d1), l.g);
  num(sv.substr(d1 + 1, d2 - d1 - 1), l.q);
  if (l.g < 1) throw bad("dimension must be positive");
  if (split_prime_power(l.q).first == 0) throw bad("q is not a prime power");
  std::stringstream rest(s.substr(d2 + 1));
  for (std::string c; std::getline(rest, c, '_');) l.codes.push_back(c);
  if (static_cast<int>(l.codes.size()) != l.g || s.back() == '_') throw bad("expected " + std::to_string(l.g) + " codes");
  try {
    for (const auto& c : l.codes) decode_code(c);
  } catch (const Error& e) {
    throw bad(e.what());
  }
  return l;
}

std::string IsogenyClassLabel::str() const {
  std::string s = std::to_string(g) + "." + std::to_string(q) + ".";
  for (std::size_t i = 0; i < codes.size(); ++i) s += (i ? "_" : "") + codes[i];
  return s;
}

std::vector<long> IsogenyClassLabel::coefficients() const {
  std::vector<long> a;
  for (const auto& c : codes) a.push_back(decode_code(c));
  return a;
}

WeilPolynomial label_to_polynomial(const IsogenyClassLabel& label) {
  const auto a = label.coefficients();
  const int g = label.g;
  std::vector<mpz_class> c(2 * g + 1);
  c[2 * g] = 1;
  const mpz_class q(static_cast<unsigned long>(label.q));
  for (int j = 1; j <= g; ++j) {
    c[2 * g - j] = a[j - 1];
    mpz_class qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), g - j);
    c[j] = qp * a[j - 1];
  }
  mpz_pow_ui(c[0].get_mpz_t(), q.get_mpz_t(), g);
  const auto [p, n] = split_prime_power(label.q);
  try {
    return validate_weil(IntPolynomial(std::move(c)), p, n);
  } catch (const Error& e) {
    throw Error(ErrorCode::WeilValidationFailed, label.str() + ": " + e.what());
  }
}

WeilPolynomial label_to_polynomial(const std::string& label) {
  return label_to_polynomial(IsogenyClassLabel::parse(label));
}

IsogenyClassLabel label_of_polynomial(const WeilPolynomial& P) {
  IsogenyClassLabel l;
  l.g = P.degree() / 2;
  l.q = P.q.get_ui();
  for (int j = 1; j <= l.g; ++j) {
    const mpz_class& a = P.poly.coeff(2 * l.g - j);
    if (!a.fits_slong_p()) throw Error(ErrorCode::MalformedLabel, "coefficient too large for a label");
    l.codes.push_back(encode_code(a.get_si()));
  }
  return l;
}

nlohmann::json ClassFixture::to_json() const {
  return {{"label", label}, {"coefficients", coefficients}, {"metadata", metadata}, {"source", source}};
}

ClassFixture ClassFixture::from_json(const nlohmann::json& j) {
  try {
    ClassFixture f;
    f.label = j.at("label").get<std::string>();
    f.coefficients = j.at("coefficients").get<std::vector<std::string>>();
    f.metadata = j.value("metadata", nlohmann::json::object());
    f.source = j.at("source").get<std::string>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedLabel, std::string("bad class record: ") + e.what());
  }
}

std::string ClassFixture::serialize() const { return to_json().dump(2) + "\n"; }

IntPolynomial ClassFixture::polynomial() const {
  std::vector<mpz_class> c;
  for (const auto& s : coefficients) c.emplace_back(s);
  return IntPolynomial(std::move(c));
}

bool operator==(const ClassFixture& a, const ClassFixture& b) { return a.serialize() == b.serialize(); }

namespace {

std::vector<std::string> decimal(const IntPolynomial& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

std::optional<ClassFixture> read_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return ClassFixture::from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedLabel, path.string() + ": " + e.what());
  }
}

}  // namespace

LmfdbClient::LmfdbClient(LmfdbConfig cfg) : cfg_(std::move(cfg)) {}

std::filesystem::path LmfdbClient::record_path(const std::filesystem::path& root, const IsogenyClassLabel& l) const {
  return root / (std::to_string(l.g) + "." + std::to_string(l.q)) / (l.str() + ".txt");
}

void LmfdbClient::persist(const ClassFixture& f, const IsogenyClassLabel& l) {
  if (cfg_.cache_dir.empty()) return;
  const auto path = record_path(cfg_.cache_dir, l);
  std::filesystem::create_directories(path.parent_path());
  std::ostringstream tag;
  tag << std::this_thread::get_id();
  auto tmp = path;
  tmp += ".tmp." + tag.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << f.serialize();
    if (!out) throw Error(ErrorCode::NetworkUnavailable, "cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ClassFixture LmfdbClient::fetch_live(const IsogenyClassLabel& l) {
  if (cfg_.offline)
    throw Error(ErrorCode::NetworkUnavailable, l.str() + " is not cached and offline mode is on (drop --offline to query the database)");
  httplib::Client cli(cfg_.base_url);
  cli.set_connection_timeout(cfg_.timeout_seconds, 0);
  cli.set_read_timeout(cfg_.timeout_seconds, 0);
  cli.set_follow_location(true);
  const std::string path = "/api/av_fq_isog/?label=" + l.str() + "&_format=json";
  std::string last_error;
  for (int attempt = 0; attempt <= cfg_.retries; ++attempt) {
    if (attempt) std::this_thread::sleep_for(std::chrono::milliseconds(200L << (attempt - 1)));
    auto res = cli.Get(path);
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status == 404) throw Error(ErrorCode::NotFound, l.str());
    if (res->status != 200) throw Error(ErrorCode::NetworkUnavailable, l.str() + ": HTTP " + std::to_string(res->status));
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::RemoteMismatch, l.str() + ": unreadable response: " + e.what());
    }
    if (!body.contains("data") || !body["data"].is_array() || body["data"].empty()) throw Error(ErrorCode::NotFound, l.str());
    const auto& rec = body["data"][0];
    if (!rec.contains("poly") || !rec["poly"].is_array())
      throw Error(ErrorCode::RemoteMismatch, l.str() + ": record has no polynomial");
    const IntPolynomial local = label_to_polynomial(l).poly;
    std::vector<mpz_class> remote;
    for (const auto& c : rec["poly"]) remote.emplace_back(c.is_string() ? c.get<std::string>() : c.dump());
    const IntPolynomial fwd(remote);
    std::reverse(remote.begin(), remote.end());
    if (!(fwd == local) && !(IntPolynomial(remote) == local))
      throw Error(ErrorCode::RemoteMismatch, l.str() + ": remote polynomial disagrees with the label");
    ClassFixture f;
    f.label = l.str();
    f.coefficients = decimal(local);
    f.source = "live";
    for (const char* key : {"angle_rank", "p_rank", "galois_groups", "is_simple", "is_geometrically_simple"})
      if (rec.contains(key)) f.metadata[key] = rec[key];
    return f;
  }
  throw Error(ErrorCode::NetworkUnavailable, l.str() + ": " + last_error);
}

ClassFixture LmfdbClient::fetch(const std::string& label) {
  const auto l = IsogenyClassLabel::parse(label);
  const std::string key = l.str();
  {
    std::lock_guard lock(mu_);
    if (auto it = memory_.find(key); it != memory_.end()) return it->second;
  }
  std::optional<ClassFixture> f;
  if (!cfg_.cache_dir.empty()) f = read_record(record_path(cfg_.cache_dir, l));
  if (!f && !cfg_.fixtures_dir.empty()) f = read_record(record_path(cfg_.fixtures_dir, l));
  if (f) {
    if (!(f->polynomial() == label_to_polynomial(l).poly))
      throw Error(ErrorCode::RemoteMismatch, key + ": stored record disagrees with the label");
  } else {
    f = fetch_live(l);
    persist(*f, l);
  }
  std::lock_guard lock(mu_);
  return memory_.emplace(key, *f).first->second;
}

std::vector<ClassFixture> LmfdbClient::fetch_many(const std::vector<std::string>& labels) {
  std::vector<ClassFixture> out;
  const std::size_t cap = std::max(1, cfg_.max_concurrency);
  for (std::size_t i = 0; i < labels.size(); i += cap) {
    std::vector<std::future<ClassFixture>> batch;
    for (std::size_t j = i; j < std::min(labels.size(), i + cap); ++j)
      batch.push_back(std::async(std::launch::async, [this, &labels, j] { return fetch(labels[j]); }));
    for (auto& fut : batch) out.push_back(fut.get());
  }
  return out;
}

ClassFixture fetch_class(const std::string& label, const LmfdbConfig& cfg) { return LmfdbClient(cfg).fetch(label); }

std::filesystem::path default_fixtures_dir() { return AVINV_FIXTURES_DIR; }

const std::vector<std::string>& cited_labels() {
  static const std::vector<std::string> labels = {
      "1.19.i",      "1.2.ab",       "1.2.ac",       "1.4.ae",       "2.2.a_a",      "2.2.a_ae",     "2.2.a_d",
      "2.2.ab_a",    "2.2.ac_c",     "2.2.ac_d",     "2.2.ac_e",     "2.2.ad_f",     "2.2.ad_g",     "2.3.ad_f",
      "2.3.ad_i",    "2.4.a_ai",     "2.4.ac_e",     "2.4.ag_q",     "2.4.ah_u",     "3.19.a_j_acm", "3.2.a_a_ac",
      "3.2.a_a_ad",  "3.2.ab_a_a",   "3.2.ab_ab_c",  "3.2.ac_a_d",   "3.2.ac_b_a",   "3.2.ac_c_ac",  "3.2.ad_f_ah",
      "3.2.ad_g_aj", "3.2.ae_j_ap",  "3.3.a_a_aj",   "3.3.ad_j_ap",  "3.4.ab_a_ae",  "3.4.ab_c_a",   "3.4.ac_ab_g",
      "3.7.a_a_abj", "3.7.ak_bw_afv"};
  return labels;
}

}  // namespace avinv
