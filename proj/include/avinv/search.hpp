#pragma once

// Enumeration of simple isogeny classes over F_{p^r} and the groups they realize.

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "avinv/classify.hpp"

namespace avinv {

struct SearchConfig {
  int d = 2;
  std::uint64_t p = 2;
  unsigned r_max = 1;
  std::filesystem::path checkpoint;  // empty: no checkpointing
  long checkpoint_every = 500;
  ClassifyOptions classify;
};

struct Witness {
  std::string np_tag;
  std::string group;     // table row label, or the canonical label
  std::string example;   // isogeny class label
  unsigned r = 0;
  int angle_rank = 0;
};

struct SearchReport {
  long enumerated = 0;  // coefficient vectors visited
  long weil = 0;        // valid Weil polynomials
  long simple = 0;      // irreducible ones classified
  std::map<std::pair<std::string, std::string>, Witness> realized;  // (NP type, group) -> first witness
  bool complete = false;
};

// Largest a with |a_j| <= C(2d, j) q^{j/2}.
long coefficient_bound(int d, std::uint64_t q, int j);

SearchReport run_search(const SearchConfig& cfg, const std::function<void(const Witness&)>& on_new = {});

}  // namespace avinv
