#include "avinv/w2d.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "avinv/errors.hpp"

namespace avinv {

// ---------------------------------------------------------------- symbols

int bar(int d, int x) { return x < d ? x + d : x - d; }

std::string symbol_name(int d, int x) {
  return x < d ? std::to_string(x + 1) : "b" + std::to_string(x - d + 1);
}

bool is_valid_weighting(const Weighting& w) {
  if (w.empty() || w.size() % 2) return false;
  const int d = static_cast<int>(w.size()) / 2;
  for (int i = 0; i < d; ++i) {
    if (w[i] < 0 || w[i + d] < 0 || w[i] + w[i + d] != 1) return false;
    if (i + 1 < d && !(w[i] <= w[i + 1] && w[i + 1] <= w[i + 1 + d] && w[i + 1 + d] <= w[i + d])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- SignedPerm

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  if (n == 0 || n % 2 || n > 2 * kMaxD) throw Error(ErrorCode::UnsupportedDegree, "signed permutation size");
  const int d = n / 2;
  std::vector<bool> seen(n, false);
  for (int x = 0; x < n; ++x) {
    if (img_[x] < 0 || img_[x] >= n || seen[img_[x]])
      throw Error(ErrorCode::Usage, "not a permutation of the symbols");
    seen[img_[x]] = true;
  }
  for (int x = 0; x < n; ++x)
    if (img_[bar(d, x)] != bar(d, img_[x])) throw Error(ErrorCode::Usage, "permutation does not preserve pairs");
}

SignedPerm SignedPerm::identity(int d) {
  std::vector<int> v(2 * d);
  std::iota(v.begin(), v.end(), 0);
  return SignedPerm(std::move(v));
}

SignedPerm SignedPerm::iota(int d) {
  std::vector<int> v(2 * d);
  for (int x = 0; x < 2 * d; ++x) v[x] = bar(d, x);
  return SignedPerm(std::move(v));
}

SignedPerm SignedPerm::parse(int d, const std::string& text) {
  std::vector<int> img(2 * d);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(2 * d, false);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw Error(ErrorCode::Usage, "bad cycle notation '" + text + "': " + why); };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    std::size_t j = text.find(')', i);
    if (j == std::string::npos) fail("unbalanced parenthesis");
    std::istringstream in(text.substr(i + 1, j - i - 1));
    std::vector<int> cyc;
    std::string tok;
    while (in >> tok) {
      bool barred = tok[0] == 'b';
      std::string num = barred ? tok.substr(1) : tok;
      if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit)) fail("bad symbol " + tok);
      int k = std::stoi(num);
      if (k < 1 || k > d) fail("symbol out of range " + tok);
      int x = barred ? d + k - 1 : k - 1;
      if (used[x]) fail("repeated symbol " + tok);
      used[x] = true;
      cyc.push_back(x);
    }
    for (std::size_t t = 0; t < cyc.size(); ++t) img[cyc[t]] = cyc[(t + 1) % cyc.size()];
    i = j + 1;
  }
  return SignedPerm(std::move(img));
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  std::vector<int> r(img_.size());
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = img_[o.img_[x]];
  return SignedPerm(std::move(r));
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> r(img_.size());
  for (std::size_t x = 0; x < r.size(); ++x) r[img_[x]] = static_cast<int>(x);
  return SignedPerm(std::move(r));
}

bool SignedPerm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

int SignedPerm::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

std::vector<int> SignedPerm::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string SignedPerm::to_string() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == static_cast<int>(x)) continue;
    out += "(";
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      if (y != x) out += " ";
      out += symbol_name(d(), static_cast<int>(y));
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------- context

W2dContext::W2dContext(int d) : d_(d) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int signs = 0; signs < (1 << d); ++signs) {
      std::vector<int> img(2 * d);
      for (int i = 0; i < d; ++i) {
        img[i] = perm[i] + ((signs >> i) & 1 ? d : 0);
        img[i + d] = bar(d, img[i]);
      }
      elems_.emplace_back(std::move(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(elems_.begin(), elems_.end());
  const int n = order();
  for (int i = 0; i < n; ++i) index_[elems_[i].images()] = i;
  table_.resize(static_cast<std::size_t>(n) * n);
  inv_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table_[a * n + b] = static_cast<std::uint16_t>(index_.at((elems_[a] * elems_[b]).images()));
    inv_[a] = static_cast<std::uint16_t>(index_.at(elems_[a].inverse().images()));
  }
  id_ = index_.at(SignedPerm::identity(d).images());
  iota_ = index_.at(SignedPerm::iota(d).images());
}

const W2dContext& W2dContext::get(int d) {
  switch (d) {
    case 1: { static const W2dContext c(1); return c; }
    case 2: { static const W2dContext c(2); return c; }
    case 3: { static const W2dContext c(3); return c; }
    case 4: { static const W2dContext c(4); return c; }
    default: throw Error(ErrorCode::UnsupportedDegree, "W_2d arithmetic supports 1 <= d <= 4, got " + std::to_string(d));
  }
}

int W2dContext::index_of(const SignedPerm& s) const {
  auto it = index_.find(s.images());
  if (it == index_.end()) throw Error(ErrorCode::UnsupportedDegree, "element not in W_2d");
  return it->second;
}

ElementSet W2dContext::all() const {
  ElementSet s;
  for (int i = 0; i < order(); ++i) s.set(i);
  return s;
}

namespace {

ElementSet closure(const W2dContext& C, const std::vector<int>& gens) {
  ElementSet s;
  std::vector<int> queue{C.identity()};
  s.set(C.identity());
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int g : gens) {
      int y = C.mul(x, g);
      if (!s.test(y)) {
        s.set(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

std::vector<int> bit_indices(const ElementSet& s, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (s.test(i)) out.push_back(i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- subgroups

SignedSubgroup::SignedSubgroup(int d, ElementSet bits) : d_(d), bits_(bits) {}

SignedSubgroup SignedSubgroup::generated(int d, const std::vector<SignedPerm>& gens) {
  const auto& C = W2dContext::get(d);
  std::vector<int> idx;
  for (const auto& g : gens) {
    if (g.d() != d) throw Error(ErrorCode::IncompatibleContexts, "generator of wrong degree");
    idx.push_back(C.index_of(g));
  }
  return SignedSubgroup(d, closure(C, idx));
}

SignedSubgroup SignedSubgroup::trivial(int d) {
  ElementSet s;
  s.set(W2dContext::get(d).identity());
  return SignedSubgroup(d, s);
}

SignedSubgroup SignedSubgroup::full(int d) { return SignedSubgroup(d, W2dContext::get(d).all()); }

std::vector<int> SignedSubgroup::indices() const { return bit_indices(bits_, W2dContext::get(d_).order()); }

std::vector<SignedPerm> SignedSubgroup::elements() const {
  const auto& C = W2dContext::get(d_);
  std::vector<SignedPerm> out;
  for (int i : indices()) out.push_back(C.element(i));
  return out;
}

bool SignedSubgroup::contains(const SignedPerm& s) const {
  return s.d() == d_ && bits_.test(W2dContext::get(d_).index_of(s));
}

bool SignedSubgroup::contains_iota() const { return bits_.test(W2dContext::get(d_).iota()); }

std::vector<std::vector<int>> SignedSubgroup::orbits() const {
  const int n = 2 * d_;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& g : elements())
    for (int x = 0; x < n; ++x) parent[find(x)] = find(g(x));
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : groups) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool SignedSubgroup::is_transitive() const { return orbits().size() == 1; }

SignedSubgroup SignedSubgroup::conjugate_by(const SignedPerm& sigma) const {
  const auto& C = W2dContext::get(d_);
  const int s = C.index_of(sigma), si = C.inv(s);
  ElementSet r;
  for (int h : indices()) r.set(C.mul(C.mul(si, h), s));
  return SignedSubgroup(d_, r);
}

std::vector<SignedPerm> SignedSubgroup::generators() const {
  const auto& C = W2dContext::get(d_);
  std::vector<int> elems;
  for (int i : indices())
    if (i != C.identity()) elems.push_back(i);
  if (elems.empty()) return {};
  std::vector<int> chosen;
  if (order() <= 48) {
    for (std::size_t k = 1; k <= elems.size(); ++k) {
      std::vector<int> pick(k);
      std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == k) return closure(C, pick) == bits_;
        for (std::size_t i = from; i < elems.size(); ++i) {
          pick[pos] = elems[i];
          if (rec(pos + 1, i + 1)) return true;
        }
        return false;
      };
      if (rec(0, 0)) {
        chosen = pick;
        break;
      }
    }
  } else {
    ElementSet cur;
    cur.set(C.identity());
    for (int e : elems) {
      if (cur.test(e)) continue;
      chosen.push_back(e);
      cur = closure(C, chosen);
      if (cur == bits_) break;
    }
  }
  std::vector<SignedPerm> out;
  for (int i : chosen) out.push_back(C.element(i));
  return out;
}

std::string SignedSubgroup::generators_string() const {
  auto gens = generators();
  if (gens.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].to_string();
  return out;
}

bool canonical_less(const SignedSubgroup& a, const SignedSubgroup& b) {
  if (a.d() != b.d()) return a.d() < b.d();
  if (a.order() != b.order()) return a.order() < b.order();
  ElementSet diff = a.bits() ^ b.bits();
  if (diff.none()) return false;
  for (int i = 0; i < kMaxOrder; ++i)
    if (diff.test(i)) return a.bits().test(i);
  return false;
}

std::vector<SignedSubgroup> enumerate_between(const SignedSubgroup& base, const SignedSubgroup& ambient) {
  const int d = base.d();
  const auto& C = W2dContext::get(d);
  if (!base.is_subgroup_of(ambient)) return {};
  struct Node {
    ElementSet bits;
    std::vector<int> gens;
  };
  std::unordered_set<ElementSet> seen{base.bits()};
  std::vector<Node> nodes{{base.bits(), {}}};
  for (int i : base.indices())
    if (i != C.identity() && !closure(C, nodes[0].gens).test(i)) nodes[0].gens.push_back(i);
  const std::vector<int> amb = ambient.indices();
  for (std::size_t at = 0; at < nodes.size(); ++at) {
    for (int g : amb) {
      if (nodes[at].bits.test(g)) continue;
      std::vector<int> gens = nodes[at].gens;
      gens.push_back(g);
      ElementSet s = closure(C, gens);
      if (seen.insert(s).second) nodes.push_back({s, std::move(gens)});
    }
  }
  std::vector<SignedSubgroup> out;
  for (auto& n : nodes) out.emplace_back(d, n.bits);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

const std::vector<SignedSubgroup>& enumerate_subgroups(int d) {
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDegree, "full subgroup lattice supports d <= 3");
  static std::once_flag flags[4];
  static std::vector<SignedSubgroup> cache[4];
  std::call_once(flags[d], [d] { cache[d] = enumerate_between(SignedSubgroup::trivial(d), SignedSubgroup::full(d)); });
  return cache[d];
}

namespace {

SignedSubgroup min_conjugate(const SignedSubgroup& h, const std::vector<SignedPerm>& by) {
  SignedSubgroup best = h;
  for (const auto& s : by) {
    SignedSubgroup c = h.conjugate_by(s);
    if (canonical_less(c, best)) best = c;
  }
  return best;
}

}  // namespace

bool w2d_conjugate(const SignedSubgroup& a, const SignedSubgroup& b) {
  if (a.d() != b.d() || a.order() != b.order()) return false;
  for (const auto& s : SignedSubgroup::full(a.d()).elements())
    if (a.conjugate_by(s) == b) return true;
  return false;
}

// ---------------------------------------------------------------- iso names

std::string structural_iso_name(const SignedSubgroup& h) {
  const int d = h.d();
  const auto& C = W2dContext::get(d);
  const int n = h.order();
  if (h == SignedSubgroup::full(d)) return "W" + std::to_string(2 * d);
  const std::vector<int> el = h.indices();
  std::map<int, int> order_count;
  std::unordered_map<int, int> ord;
  for (int x : el) {
    int o = C.element(x).order();
    ord[x] = o;
    ++order_count[o];
  }
  if (order_count.count(n)) return "C" + std::to_string(n);
  bool abelian = true;
  for (int a : el)
    for (int b : el)
      if (C.mul(a, b) != C.mul(b, a)) abelian = false;
  if (abelian) {
    // invariant factors via counting elements of each order
    if (n == 4) return "V4";
    std::vector<int> factors;
    int max_o = 1;
    for (auto& [o, c] : order_count) max_o = std::max(max_o, o);
    int rest = n;
    // abelian subgroups of W_2d are products of small cyclic groups; peel off the exponent repeatedly
    while (rest > 1) {
      int f = std::min(max_o, rest);
      while (rest % f) --f;
      factors.push_back(f);
      rest /= f;
      max_o = f;
    }
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + ("C" + std::to_string(factors[i]));
    return s;
  }
  const int m = n / 2;
  for (int r : el) {
    if (ord[r] != m) continue;
    ElementSet rot = closure(C, {r});
    for (int s : el) {
      if (rot.test(s) || ord[s] != 2) continue;
      if (C.mul(C.mul(s, r), s) == C.inv(r)) return "D" + std::to_string(m);
    }
  }
  auto cnt = [&](int o) { return order_count.count(o) ? order_count[o] : 0; };
  if (n == 12 && cnt(2) == 3 && cnt(3) == 8) return "A4";
  if (n == 24 && cnt(2) == 9 && cnt(3) == 8 && cnt(4) == 6) return "S4";
  if (n == 24 && cnt(2) == 7 && cnt(3) == 8 && cnt(6) == 8) {
    return (h.is_transitive() && 2 * d == 6) ? "6T6" : "C2xA4";
  }
  if (n == 8 && cnt(4) == 6) return "Q8";
  if (n == 48 && cnt(2) == 19) return "C2xS4";
  if (n == 16 && cnt(2) == 11 && cnt(4) == 4) return "C2xD4";
  return "G" + std::to_string(n);
}

// ---------------------------------------------------------------- labels

std::string SubgroupLabel::str() const {
  return iso_name + "." + std::to_string(degree) + "." + (transitive ? "t" : "nt") + "." + std::string(1, letter) +
         "." + std::to_string(k);
}

const std::vector<CalibrationRow>& calibration_table() {
  static const std::vector<CalibrationRow> rows = {
      {1, "W2.2.t.a.1", {"(1 b1)"}},
      {1, "C1.2.nt.a.1", {}},
      {2, "W4.4.t.a.1", {"(1 b1)", "(1 2)(b1 b2)"}},
      {2, "V4.4.t.a.1", {"(1 b1)(2 b2)", "(1 2)(b1 b2)"}},
      {2, "C4.4.t.a.1", {"(1 2 b1 b2)"}},
      {2, "V4.4.nt.a.1", {"(1 b1)", "(2 b2)"}},
      {2, "C2.4.nt.a.1", {"(1 b1)(2 b2)"}},
      {2, "C2.4.nt.b.1", {"(1 b1)"}},
      {2, "C2.4.nt.b.2", {"(2 b2)"}},
      {2, "C2.4.nt.c.1", {"(1 2)(b1 b2)"}},
      {2, "C2.4.nt.c.2", {"(1 b2)(b1 2)"}},
      {2, "C1.4.nt.a.1", {}},
      {3, "W6.6.t.a.1", {"(1 b1)", "(1 2)(b1 b2)", "(1 2 3)(b1 b2 b3)"}},
      {3, "6T6.6.t.a.1", {"(1 2 3)(b1 b2 b3)", "(1 b1)", "(2 b2)", "(3 b3)"}},
      {3, "D6.6.t.a.1", {"(1 b2 3 b1 2 b3)", "(2 3)(b2 b3)"}},
      {3, "D6.6.t.a.2", {"(1 2 b3 b1 b2 3)", "(2 3)(b2 b3)"}},
      {3, "D6.6.t.a.3", {"(1 b2 b3 b1 2 3)", "(2 b3)(b2 3)"}},
      {3, "D6.6.t.a.4", {"(1 2 3 b1 b2 b3)", "(2 b3)(b2 3)"}},
      {3, "C6.6.t.a.1", {"(1 b2 3 b1 2 b3)"}},
      {3, "C6.6.t.a.2", {"(1 2 3 b1 b2 b3)"}},
      {3, "C6.6.t.a.3", {"(1 2 b3 b1 b2 3)"}},
      {3, "C6.6.t.a.4", {"(1 b2 b3 b1 2 3)"}},
  };
  return rows;
}

namespace {

SubgroupLabel parse_label(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, '.')) parts.push_back(tok);
  if (parts.size() != 5 || parts[3].size() != 1 || (parts[2] != "t" && parts[2] != "nt"))
    throw Error(ErrorCode::MalformedLabel, "subgroup label '" + s + "'");
  SubgroupLabel l;
  l.iso_name = parts[0];
  l.degree = std::stoi(parts[1]);
  l.transitive = parts[2] == "t";
  l.letter = parts[3][0];
  l.k = std::stoi(parts[4]);
  return l;
}

using LabelMap = std::map<SignedSubgroup, SubgroupLabel, SubgroupLess>;

LabelMap build_labels(int d) {
  const auto& subs = enumerate_subgroups(d);
  const auto all = SignedSubgroup::full(d).elements();
  std::vector<SignedSubgroup> cls_rep;
  std::vector<std::string> iso;
  std::vector<bool> trans;
  for (const auto& h : subs) {
    cls_rep.push_back(min_conjugate(h, all));
    iso.push_back(structural_iso_name(h));
    trans.push_back(h.is_transitive());
  }
  std::map<SignedSubgroup, char, SubgroupLess> class_letter;
  std::map<SignedSubgroup, SubgroupLabel, SubgroupLess> pinned;
  for (const auto& row : calibration_table()) {
    if (row.d != d) continue;
    std::vector<SignedPerm> gens;
    for (const auto& g : row.generators) gens.push_back(SignedPerm::parse(d, g));
    SignedSubgroup h = SignedSubgroup::generated(d, gens);
    SubgroupLabel l = parse_label(row.label);
    auto it = std::find(subs.begin(), subs.end(), h);
    std::size_t i = it - subs.begin();
    if (l.iso_name != iso[i] || l.transitive != trans[i] || l.degree != 2 * d)
      throw Error(ErrorCode::CalibrationMismatch,
                  row.label + " has structure " + iso[i] + (trans[i] ? " transitive" : " intransitive"));
    auto [cit, fresh] = class_letter.emplace(cls_rep[i], l.letter);
    if (!fresh && cit->second != l.letter)
      throw Error(ErrorCode::CalibrationMismatch, row.label + " conflicts with its conjugacy class letter");
    if (!pinned.emplace(h, l).second) throw Error(ErrorCode::CalibrationMismatch, row.label + " pinned twice");
  }
  // letters per (iso, transitivity) bucket, classes in order of their minimal representative
  std::map<std::pair<std::string, bool>, std::vector<SignedSubgroup>> bucket_classes;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto& v = bucket_classes[{iso[i], trans[i]}];
    if (std::find(v.begin(), v.end(), cls_rep[i]) == v.end()) v.push_back(cls_rep[i]);
  }
  for (auto& [key, classes] : bucket_classes) {
    std::sort(classes.begin(), classes.end(), canonical_less);
    char next = 'a';
    std::set<char> used;
    for (const auto& c : classes) {
      auto it = class_letter.find(c);
      if (it == class_letter.end()) continue;
      if (!used.insert(it->second).second)
        throw Error(ErrorCode::CalibrationMismatch, "two conjugacy classes share a pinned letter");
      next = std::max<char>(next, it->second + 1);
    }
    for (const auto& c : classes)
      if (!class_letter.count(c)) class_letter[c] = next++;
  }
  LabelMap out;
  std::map<SignedSubgroup, int, SubgroupLess> next_k;
  for (const auto& [h, l] : pinned) {
    auto i = std::find(subs.begin(), subs.end(), h) - subs.begin();
    int& nk = next_k[cls_rep[i]];
    nk = std::max(nk, l.k);
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto pit = pinned.find(subs[i]);
    if (pit != pinned.end()) {
      out[subs[i]] = pit->second;
      continue;
    }
    SubgroupLabel l;
    l.iso_name = iso[i];
    l.degree = 2 * d;
    l.transitive = trans[i];
    l.letter = class_letter[cls_rep[i]];
    l.k = ++next_k[cls_rep[i]];
    out[subs[i]] = l;
  }
  std::set<std::string> strings;
  for (auto& [h, l] : out)
    if (!strings.insert(l.str()).second) throw Error(ErrorCode::CalibrationMismatch, "duplicate label " + l.str());
  return out;
}

}  // namespace

const std::map<SignedSubgroup, SubgroupLabel, SubgroupLess>& subgroup_labels(int d) {
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDegree, "labels are defined for d <= 3");
  static std::once_flag flags[4];
  static LabelMap cache[4];
  std::call_once(flags[d], [d] { cache[d] = build_labels(d); });
  return cache[d];
}

SubgroupLabel label_of(const SignedSubgroup& h) { return subgroup_labels(h.d()).at(h); }

std::optional<SignedSubgroup> subgroup_from_label(int d, const std::string& label) {
  for (const auto& [h, l] : subgroup_labels(d))
    if (l.str() == label) return h;
  return std::nullopt;
}

// ---------------------------------------------------------------- weightings

SignedSubgroup w_stabilizer(const Weighting& w) {
  if (w.size() % 2 || w.empty()) throw Error(ErrorCode::Usage, "weighting must have even size");
  const int d = static_cast<int>(w.size()) / 2;
  const auto& C = W2dContext::get(d);
  ElementSet s;
  for (int i = 0; i < C.order(); ++i) {
    const auto& g = C.element(i);
    bool ok = true;
    for (int x = 0; x < 2 * d && ok; ++x) ok = w[g(x)] == w[x];
    if (ok) s.set(i);
  }
  return SignedSubgroup(d, s);
}

std::optional<SignedPerm> w_conjugate(const SignedSubgroup& a, const SignedSubgroup& b, const Weighting& w) {
  if (a.d() != b.d() || 2 * a.d() != static_cast<int>(w.size()))
    throw Error(ErrorCode::IncompatibleContexts, "w_conjugate degree mismatch");
  if (a.order() != b.order()) return std::nullopt;
  for (const auto& s : w_stabilizer(w).elements())
    if (a.conjugate_by(s) == b) return s;
  return std::nullopt;
}

SignedSubgroup canonicalize_rep(const Weighting& w, const SignedSubgroup& h) {
  if (2 * h.d() != static_cast<int>(w.size())) throw Error(ErrorCode::IncompatibleContexts, "canonicalize degree mismatch");
  return min_conjugate(h, w_stabilizer(w).elements());
}

SignedPerm climbing_relabel(const Weighting& w) {
  const int d = static_cast<int>(w.size()) / 2;
  const mpq_class half(1, 2);
  std::vector<int> low(d);  // old symbol that becomes unbarred
  for (int i = 0; i < d; ++i) low[i] = w[i] > half ? i + d : i;
  std::vector<int> order(d);
  for (int i = 0; i < d; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[low[a]] < w[low[b]]; });
  std::vector<int> img(2 * d);
  for (int k = 0; k < d; ++k) {
    int x = low[order[k]];
    img[x] = k;
    img[bar(d, x)] = k + d;
  }
  return SignedPerm(img);
}

Weighting relabel_weighting(const Weighting& w, const SignedPerm& rho) {
  Weighting out(w.size());
  for (std::size_t x = 0; x < w.size(); ++x) out[rho(static_cast<int>(x))] = w[x];
  return out;
}

SignedSubgroup relabel_group(const SignedSubgroup& h, const SignedPerm& rho) { return h.conjugate_by(rho.inverse()); }

}  // namespace avinv
