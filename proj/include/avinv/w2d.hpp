#pragma once

// Signed permutations on X_2d = {1..d, b1..bd} and subgroup machinery of W_2d.
// Symbols are encoded 0-based: i -> i-1, bi -> d+i-1.

#include <gmpxx.h>

#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace avinv {

constexpr int kMaxD = 4;
constexpr int kMaxOrder = 384;  // |W_8|

class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);  // validates
  static SignedPerm identity(int d);
  static SignedPerm iota(int d);
  // Parses cycle notation such as "(1 b2 3 b1 2 b3)(4 b4)"; "()" is the identity.
  static SignedPerm parse(int d, const std::string& cycles);

  int d() const { return static_cast<int>(img_.size()) / 2; }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }
  SignedPerm operator*(const SignedPerm& o) const;  // (this o o)(x) = this(o(x))
  SignedPerm inverse() const;
  int order() const;
  bool is_identity() const;
  std::string to_string() const;  // cycle notation with "b" prefix
  // Sorted list of cycle lengths on all 2d symbols (fixed points included).
  std::vector<int> cycle_type() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm& a, const SignedPerm& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

std::string symbol_name(int d, int x);  // "3" or "b3"
int bar(int d, int x);                  // partner symbol

using Weighting = std::vector<mpq_class>;  // indexed by encoded symbol

bool is_valid_weighting(const Weighting& w);

using ElementSet = std::bitset<kMaxOrder>;

// Multiplication table for W_2d, elements indexed in lexicographic order of
// their image sequences.
class W2dContext {
 public:
  static const W2dContext& get(int d);

  int d() const { return d_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const SignedPerm& element(int i) const { return elems_[i]; }
  int index_of(const SignedPerm& s) const;
  int mul(int a, int b) const { return table_[a * order() + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }
  int iota() const { return iota_; }
  ElementSet all() const;

 private:
  explicit W2dContext(int d);
  int d_;
  std::vector<SignedPerm> elems_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  int id_ = 0, iota_ = 0;
};

class SignedSubgroup {
 public:
  SignedSubgroup() = default;
  SignedSubgroup(int d, ElementSet bits);
  static SignedSubgroup generated(int d, const std::vector<SignedPerm>& gens);
  static SignedSubgroup trivial(int d);
  static SignedSubgroup full(int d);

  int d() const { return d_; }
  const ElementSet& bits() const { return bits_; }
  int order() const { return static_cast<int>(bits_.count()); }
  std::vector<int> indices() const;  // ascending
  std::vector<SignedPerm> elements() const;
  bool contains(const SignedPerm& s) const;
  bool contains_index(int i) const { return bits_.test(i); }
  bool contains_iota() const;
  bool is_transitive() const;
  bool is_subgroup_of(const SignedSubgroup& o) const { return (bits_ & ~o.bits_).none(); }
  // Orbits on the 2d symbols, each sorted, ordered by least element.
  std::vector<std::vector<int>> orbits() const;
  // sigma^{-1} H sigma
  SignedSubgroup conjugate_by(const SignedPerm& sigma) const;
  // A smallest generating sequence (first found in canonical element order).
  std::vector<SignedPerm> generators() const;
  std::string generators_string() const;

  friend bool operator==(const SignedSubgroup& a, const SignedSubgroup& b) {
    return a.d_ == b.d_ && a.bits_ == b.bits_;
  }

 private:
  int d_ = 0;
  ElementSet bits_;
};

// Canonical total order: order first, then sorted element-index sequences.
bool canonical_less(const SignedSubgroup& a, const SignedSubgroup& b);

struct SubgroupLess {
  bool operator()(const SignedSubgroup& a, const SignedSubgroup& b) const { return canonical_less(a, b); }
};

// All subgroups of W_2d for d <= 3, canonically sorted.
const std::vector<SignedSubgroup>& enumerate_subgroups(int d);

// Subgroups H with base <= H <= ambient, canonically sorted. Supports d <= 4.
std::vector<SignedSubgroup> enumerate_between(const SignedSubgroup& base, const SignedSubgroup& ambient);

bool w2d_conjugate(const SignedSubgroup& a, const SignedSubgroup& b);

struct SubgroupLabel {
  std::string iso_name;
  int degree = 0;  // 2d
  bool transitive = false;
  char letter = 'a';
  int k = 1;
  std::string str() const;
};

std::string structural_iso_name(const SignedSubgroup& h);

// Labels for every subgroup of W_2d (d <= 3), pinned to the published atlas
// where it applies. Throws CalibrationMismatch on an inconsistent pin.
const std::map<SignedSubgroup, SubgroupLabel, SubgroupLess>& subgroup_labels(int d);
SubgroupLabel label_of(const SignedSubgroup& h);
std::optional<SignedSubgroup> subgroup_from_label(int d, const std::string& label);

// The pinned (label, generators) calibration rows for W_2, W_4 and W_6.
struct CalibrationRow {
  int d;
  std::string label;
  std::vector<std::string> generators;
};
const std::vector<CalibrationRow>& calibration_table();

SignedSubgroup w_stabilizer(const Weighting& w);
// Returns a witness sigma in Stab(w) with sigma^{-1} a sigma = b, if any.
std::optional<SignedPerm> w_conjugate(const SignedSubgroup& a, const SignedSubgroup& b, const Weighting& w);
SignedSubgroup canonicalize_rep(const Weighting& w, const SignedSubgroup& h);

// A relabelling rho with w o rho^{-1} climbing: w(1) <= ... <= w(d) <= 1/2, ties
// kept in symbol order. The relabelled group is rho H rho^{-1}.
SignedPerm climbing_relabel(const Weighting& w);
Weighting relabel_weighting(const Weighting& w, const SignedPerm& rho);
SignedSubgroup relabel_group(const SignedSubgroup& h, const SignedPerm& rho);

}  // namespace avinv
