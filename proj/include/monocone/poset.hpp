#pragma once

// Finite posets: cover-relation input, derived order matrix, and the
// combinatorial enumerations (up-sets, increasing self-maps, isomorphism
// classes, induced subposets) that the cone constructions consume.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monocone/error.hpp"

namespace monocone {

class Poset;

// Upward-closed subset, stored as a bitmask over element indices.
struct UpSet {
  std::uint32_t mask = 0;

  bool contains(int i) const { return (mask >> i) & 1u; }
  int size() const { return __builtin_popcount(mask); }
  std::vector<int> members(int n) const;
};

// Total self-map with x <= y  =>  table[x] <= table[y].
struct IncreasingMap {
  std::vector<int> table;

  bool is_identity() const;
  bool operator==(const IncreasingMap&) const = default;
};

// Injective order-preserving and order-reflecting map pattern -> host.
struct Embedding {
  std::vector<int> map;  // index in pattern -> index in host
};

class Poset {
public:
  // Builds the poset from its Hasse diagram. Covers are (lower, upper) label
  // pairs; the stored cover list is the transitive reduction of the input.
  static Poset from_covers(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& covers,
                           std::string name = {});

  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(int i) const { return elements_[i]; }
  int index_of(const std::string& label) const;  // UnknownLabel on miss

  // Covers as index pairs (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool leq(int x, int y) const { return (up_[x] >> y) & 1u; }
  bool leq(const std::string& x, const std::string& y) const;
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  // Bitmask of { y : x <= y }.
  std::uint32_t up_mask(int x) const { return up_[x]; }

  bool operator==(const Poset&) const = default;

private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint32_t> up_;  // reflexive-transitive closure, row x = up-set of x
};

// All up-sets including the empty set and S, sorted by size then by
// lexicographic membership vector. Recursion over a linear extension;
// the 2^n filter lives in the tests as the oracle.
std::vector<UpSet> enumerate_upsets(const Poset& p);

// All increasing self-maps, sorted lexicographically by table.
std::vector<IncreasingMap> enumerate_increasing_maps(const Poset& p);

// True iff the undirected cover graph is a forest. This is the loop-free
// condition of the discrete-time classification.
bool is_acyclic(const Poset& p);

// Same elements, covers reversed.
Poset dual(const Poset& p);

// Two posets yield equal byte strings iff they are order-isomorphic.
// Minimum over all relabelings of the order-matrix encoding; intended for
// n <= 7 where brute force is cheap.
std::string canonical_form(const Poset& p);

// One representative per isomorphism class of n-element posets, named
// "p<n>_<idx>", sorted by canonical form. Requires 1 <= n <= 7.
std::vector<Poset> enumerate_posets(int n);

// First embedding of pattern into host as an induced subposet under the
// element orderings, or nullopt.
std::optional<Embedding> induced_subposet_search(const Poset& host, const Poset& pattern);

}  // namespace monocone
