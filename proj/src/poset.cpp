#include "monocone/poset.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace monocone {

namespace {

constexpr int kMaxElements = 32;  // bitmask rows; far above anything the pipeline needs

// Topological order of 0..n-1 under the cover digraph, smallest index first.
std::vector<int> linear_extension(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (auto [lo, hi] : covers) {
    succ[lo].push_back(hi);
    ++indeg[hi];
  }
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (!placed[i] && indeg[i] == 0) {
        pick = i;
        break;
      }
    if (pick < 0) return {};  // cycle
    placed[pick] = 1;
    order.push_back(pick);
    for (int j : succ[pick]) --indeg[j];
  }
  return order;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Order matrix encoded as one byte string: n, then row-major bits of leq
// under the permutation perm (new index -> old index).
std::string encode_order(int n, const std::vector<std::uint32_t>& up, const std::vector<int>& perm) {
  std::string bytes(1 + (n * n + 7) / 8, '\0');
  bytes[0] = static_cast<char>(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if ((up[perm[i]] >> perm[j]) & 1u) bytes[1 + bit / 8] |= static_cast<char>(1 << (bit % 8));
      ++bit;
    }
  return bytes;
}

}  // namespace

std::vector<int> UpSet::members(int n) const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool IncreasingMap::is_identity() const {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] != static_cast<int>(i)) return false;
  return true;
}

Poset Poset::from_covers(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         std::string name) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw Error(ErrorKind::ValidationError, "poset needs at least one element");
  if (n > kMaxElements) throw Error(ErrorKind::SizeOutOfRange, "more than 32 elements");

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second)
      throw Error(ErrorKind::DuplicateLabel, "'" + elements[i] + "'");
  }

  std::vector<std::pair<int, int>> edges;
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + lo + "' in covers");
    if (b == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + hi + "' in covers");
    if (a->second == b->second)
      throw Error(ErrorKind::CycleInCovers, "self-cover on '" + lo + "'");
    edges.emplace_back(a->second, b->second);
  }

  // Reflexive-transitive closure over the cover digraph.
  std::vector<std::uint32_t> up(n);
  for (int i = 0; i < n; ++i) up[i] = 1u << i;
  std::vector<int> topo = linear_extension(n, edges);
  if (topo.empty()) throw Error(ErrorKind::CycleInCovers, "covers contain a directed cycle");
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (auto [lo, hi] : edges)
      if (lo == *it) up[lo] |= up[hi];
  }

  Poset p;
  p.name_ = std::move(name);
  p.elements_ = elements;
  p.up_ = std::move(up);

  // Transitive reduction: (x,y) is a cover iff x < y with no z strictly between.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !p.leq(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) direct = false;
      if (direct) p.covers_.emplace_back(x, y);
    }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

int Poset::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == label) return i;
  throw Error(ErrorKind::UnknownLabel, "'" + label + "'");
}

bool Poset::leq(const std::string& x, const std::string& y) const {
  return leq(index_of(x), index_of(y));
}

std::vector<UpSet> enumerate_upsets(const Poset& p) {
  const int n = p.size();
  std::vector<int> topo = linear_extension(n, p.covers());
  std::vector<UpSet> out;

  // Walk the linear extension from the top. An element may join only when
  // everything above it is already in, so upward closure holds by induction.
  std::vector<std::uint32_t> strict_up(n);
  for (int i = 0; i < n; ++i) strict_up[i] = p.up_mask(i) & ~(1u << i);

  auto rec = [&](auto&& self, int pos, std::uint32_t mask) -> void {
    if (pos < 0) {
      out.push_back(UpSet{mask});
      return;
    }
    int e = topo[pos];
    self(self, pos - 1, mask);  // exclude e
    if ((strict_up[e] & ~mask) == 0) self(self, pos - 1, mask | (1u << e));
  };
  rec(rec, n - 1, 0);

  std::sort(out.begin(), out.end(), [n](const UpSet& a, const UpSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int i = 0; i < n; ++i)
      if (a.contains(i) != b.contains(i)) return b.contains(i);
    return false;
  });
  return out;
}

std::vector<IncreasingMap> enumerate_increasing_maps(const Poset& p) {
  const int n = p.size();
  std::vector<IncreasingMap> out;
  std::vector<int> table(n, -1);

  // Assign images in element order; earlier assignments constrain later ones
  // in both directions, so the output is lexicographic by table.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(IncreasingMap{table});
      return;
    }
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (p.leq(j, i) && !p.leq(table[j], v)) ok = false;
        if (p.leq(i, j) && !p.leq(v, table[j])) ok = false;
      }
      if (ok) {
        table[i] = v;
        self(self, i + 1);
        table[i] = -1;
      }
    }
  };
  rec(rec, 0);
  return out;
}

bool is_acyclic(const Poset& p) {
  DisjointSet ds(p.size());
  for (auto [lo, hi] : p.covers())
    if (!ds.unite(lo, hi)) return false;
  return true;
}

Poset dual(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> reversed;
  reversed.reserve(p.covers().size());
  for (auto [lo, hi] : p.covers()) reversed.emplace_back(p.label(hi), p.label(lo));
  std::string name = p.name().empty() ? std::string{} : p.name() + "_dual";
  return Poset::from_covers(p.elements(), reversed, std::move(name));
}

std::string canonical_form(const Poset& p) {
  const int n = p.size();
  if (n > 7) throw Error(ErrorKind::SizeOutOfRange, "canonical_form supports n <= 7");
  std::vector<std::uint32_t> up(n);
  for (int i = 0; i < n; ++i) up[i] = p.up_mask(i);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string enc = encode_order(n, up, perm);
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1 || n > 7) throw Error(ErrorKind::SizeOutOfRange, "enumerate_posets supports 1 <= n <= 7");

  // Every poset admits a linear extension, so each isomorphism class has a
  // representative whose strict order only points from lower to higher index.
  // Enumerate those (transitive antisymmetric upper-triangular relations) and
  // dedup by canonical form.
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_at;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pair_at.emplace_back(i, j);

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::string(1, static_cast<char>('a' + i));

  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Poset>> reps;  // canonical form, representative

  std::array<std::uint32_t, 7> row{};
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    row.fill(0);
    for (int k = 0; k < pairs; ++k)
      if ((mask >> k) & 1ull) row[pair_at[k].first] |= 1u << pair_at[k].second;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      std::uint32_t r = row[i];
      while (r) {
        int j = __builtin_ctz(r);
        r &= r - 1;
        if ((row[j] & ~row[i]) != 0) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;

    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!((row[i] >> j) & 1u)) continue;
        bool direct = true;
        for (int z = i + 1; z < j && direct; ++z)
          if (((row[i] >> z) & 1u) && ((row[z] >> j) & 1u)) direct = false;
        if (direct) covers.emplace_back(labels[i], labels[j]);
      }
    Poset p = Poset::from_covers(labels, covers);
    std::string canon = canonical_form(p);
    if (seen.insert(canon).second) reps.emplace_back(std::move(canon), std::move(p));
  }

  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Poset> out;
  out.reserve(reps.size());
  char buf[16];
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "p%d_%03zu", n, i);
    reps[i].second.set_name(buf);
    out.push_back(std::move(reps[i].second));
  }
  return out;
}

std::optional<Embedding> induced_subposet_search(const Poset& host, const Poset& pattern) {
  const int np = pattern.size(), nh = host.size();
  if (np > nh) return std::nullopt;
  std::vector<int> map(np, -1);
  std::vector<char> used(nh, 0);

  auto rec = [&](auto&& self, int i) -> bool {
    if (i == np) return true;
    for (int v = 0; v < nh; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (pattern.leq(j, i) != host.leq(map[j], v)) ok = false;
        if (pattern.leq(i, j) != host.leq(v, map[j])) ok = false;
      }
      if (!ok) continue;
      map[i] = v;
      used[v] = 1;
      if (self(self, i + 1)) return true;
      used[v] = 0;
      map[i] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return Embedding{map};
  return std::nullopt;
}

}  // namespace monocone
