#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tri/complex.hpp"

namespace tri {

using Spin = std::int8_t;  // +1 or -1

// A +/-1 value per vertex. Text form is a string over {+,-} indexed by vertex.
// Ordering is lexicographic with +1 < -1.
class SpinState {
 public:
  SpinState() = default;
  explicit SpinState(std::vector<Spin> spins);
  static SpinState all_plus(int n) { return SpinState(std::vector<Spin>(n, 1)); }
  static SpinState parse(const std::string& text);

  int size() const { return static_cast<int>(spins_.size()); }
  Spin operator[](Vertex v) const { return spins_[v]; }
  void set(Vertex v, Spin s) { spins_[v] = s; }
  const std::vector<Spin>& spins() const { return spins_; }

  SpinState negated() const;
  // The smaller of {s, -s}.
  SpinState canonical() const;
  std::string to_string() const;

  bool operator==(const SpinState&) const = default;
  bool operator<(const SpinState& other) const;

 private:
  std::vector<Spin> spins_;
};

// Prescribed spins and edge monochromaticity for enumerate_satisfying.
struct Constraint {
  std::map<Vertex, Spin> pinned;
  std::vector<Edge> required_monochromatic;
  std::vector<Edge> required_non_monochromatic;

  // Edge requirements are invariant under s -> -s; pins are not.
  bool sign_symmetric() const { return pinned.empty(); }
};

struct SolveOptions {
  std::size_t representative_cap = 64;
  int jobs = 1;
};

struct SolveReport {
  std::uint64_t satisfying_count = 0;
  std::optional<std::uint64_t> pair_count;  // set when the constraint is sign-symmetric
  std::vector<SpinState> representatives;   // canonical order, capped
  bool truncated = false;
  std::optional<std::vector<Edge>> serious_edges;  // absent when no satisfying state
};

enum class GroundstateMethod { Exhaustive, BranchAndBound, Auto };

const char* method_name(GroundstateMethod m);
std::optional<GroundstateMethod> parse_method(const std::string& name);

struct GroundstateOptions {
  GroundstateMethod method = GroundstateMethod::Auto;
  int vertex_ceiling = 26;  // largest V searched exhaustively
  std::uint64_t node_limit = 2'000'000'000ULL;
  std::size_t representative_cap = 64;
  int jobs = 1;
};

struct GroundstateReport {
  int min_energy = 0;
  std::uint64_t degeneracy = 0;
  std::vector<SpinState> representatives;  // canonical pair members, sorted, capped
  bool truncated = false;
  GroundstateMethod method_used = GroundstateMethod::Exhaustive;
};

// Antiferromagnetic energy: sum over edges of s_u * s_v.
int energy(const SurfaceComplex& c, const SpinState& s);
// Edges whose endpoints carry equal spins.
std::vector<Edge> frustrated_edges(const SurfaceComplex& c, const SpinState& s);
// No kept face is monochromatic. Hole boundaries are unconstrained.
bool is_satisfying(const SurfaceComplex& c, const SpinState& s);

SolveReport enumerate_satisfying(const SurfaceComplex& c, const Constraint& constraint = {},
                                 const SolveOptions& options = {});
std::uint64_t count_satisfying(const SurfaceComplex& c, const Constraint& constraint = {});
std::vector<Edge> serious_edges(const SurfaceComplex& c);

GroundstateReport groundstates(const SurfaceComplex& c, const GroundstateOptions& options = {});

// Monochromatic edges of a satisfying state on a closed complex, as a
// sorted edge list (dual edges are indexed by primal edge).
std::vector<Edge> matching_from_state(const SurfaceComplex& c, const SpinState& s);
// Rebuilds the +/- pair whose monochromatic edges are exactly `matching`.
// The first member is canonical. Absent when propagation conflicts.
std::optional<std::pair<SpinState, SpinState>> state_from_matching(const SurfaceComplex& c,
                                                                   const std::vector<Edge>& matching);

// Plain 2^V loops, kept separate from the solvers so they can cross-check them.
namespace brute_force {
inline constexpr int kMaxVertices = 24;
std::uint64_t count_satisfying(const SurfaceComplex& c, const Constraint& constraint = {});
std::pair<int, std::uint64_t> groundstate(const SurfaceComplex& c);
}  // namespace brute_force

}  // namespace tri
