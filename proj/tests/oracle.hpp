#pragma once

// Independent brute-force oracle for the tests. Works on raw triples and
// edges only; shares no code path with the library's solvers.

#include <array>
#include <climits>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Spins = std::vector<int>;
using Tri = std::array<int, 3>;
using Pair = std::pair<int, int>;

inline Spins decode(std::uint64_t mask, int n) {
  Spins s(n);
  for (int i = 0; i < n; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
  return s;
}

inline std::string text(const Spins& s) {
  std::string out;
  for (int x : s) out.push_back(x > 0 ? '+' : '-');
  return out;
}

inline std::set<Pair> edges_of(const std::vector<Tri>& triples) {
  std::set<Pair> out;
  for (const auto& t : triples) {
    out.insert({std::min(t[0], t[1]), std::max(t[0], t[1])});
    out.insert({std::min(t[0], t[2]), std::max(t[0], t[2])});
    out.insert({std::min(t[1], t[2]), std::max(t[1], t[2])});
  }
  return out;
}

inline int energy(const std::set<Pair>& edges, const Spins& s) {
  int h = 0;
  for (const auto& [a, b] : edges) h += s[a] * s[b];
  return h;
}

inline bool satisfying(const std::vector<Tri>& faces, const Spins& s) {
  for (const auto& t : faces) {
    if (s[t[0]] == s[t[1]] && s[t[1]] == s[t[2]]) return false;
  }
  return true;
}

// Every state satisfying `faces` and the extra predicate.
inline std::vector<Spins> satisfying_states(int n, const std::vector<Tri>& faces,
                                            const std::function<bool(const Spins&)>& extra = {}) {
  std::vector<Spins> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Spins s = decode(m, n);
    if (satisfying(faces, s) && (!extra || extra(s))) out.push_back(s);
  }
  return out;
}

struct Ground {
  int min_energy = INT_MAX;
  std::uint64_t degeneracy = 0;
};

inline Ground groundstate(int n, const std::set<Pair>& edges) {
  Ground g;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const int h = energy(edges, decode(m, n));
    if (h < g.min_energy) {
      g.min_energy = h;
      g.degeneracy = 0;
    }
    if (h == g.min_energy) ++g.degeneracy;
  }
  return g;
}

}  // namespace oracle
