#include "tri/ising.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <functional>
#include <queue>
#include <set>
#include <thread>

namespace tri {

SpinState::SpinState(std::vector<Spin> spins) : spins_(std::move(spins)) {
  for (Spin s : spins_) {
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "spin values must be +1 or -1");
  }
}

SpinState SpinState::parse(const std::string& text) {
  std::vector<Spin> spins;
  spins.reserve(text.size());
  for (char ch : text) {
    if (ch == '+') {
      spins.push_back(1);
    } else if (ch == '-') {
      spins.push_back(-1);
    } else {
      throw Error(ErrorKind::ParseError, std::string("invalid spin character '") + ch + "'");
    }
  }
  return SpinState(std::move(spins));
}

SpinState SpinState::negated() const {
  SpinState out = *this;
  for (Spin& s : out.spins_) s = static_cast<Spin>(-s);
  return out;
}

SpinState SpinState::canonical() const {
  SpinState neg = negated();
  return neg < *this ? neg : *this;
}

std::string SpinState::to_string() const {
  std::string out;
  out.reserve(spins_.size());
  for (Spin s : spins_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

bool SpinState::operator<(const SpinState& other) const {
  // '+' < '-' in ASCII, which is exactly the +1 < -1 convention.
  return to_string() < other.to_string();
}

const char* method_name(GroundstateMethod m) {
  switch (m) {
    case GroundstateMethod::Exhaustive: return "exhaustive";
    case GroundstateMethod::BranchAndBound: return "bnb";
    case GroundstateMethod::Auto: return "auto";
  }
  return "auto";
}

std::optional<GroundstateMethod> parse_method(const std::string& name) {
  if (name == "exhaustive") return GroundstateMethod::Exhaustive;
  if (name == "bnb" || name == "branch_and_bound") return GroundstateMethod::BranchAndBound;
  if (name == "auto") return GroundstateMethod::Auto;
  return std::nullopt;
}

namespace {

void check_length(const SurfaceComplex& c, const SpinState& s) {
  if (s.size() != c.vertex_count()) {
    throw Error(ErrorKind::LengthMismatch, "state has " + std::to_string(s.size()) +
                                               " spins, complex has " +
                                               std::to_string(c.vertex_count()) + " vertices");
  }
}

}  // namespace

int energy(const SurfaceComplex& c, const SpinState& s) {
  check_length(c, s);
  int h = 0;
  for (const Edge& e : c.edges()) h += s[e.a] * s[e.b];
  return h;
}

std::vector<Edge> frustrated_edges(const SurfaceComplex& c, const SpinState& s) {
  check_length(c, s);
  std::vector<Edge> out;
  for (const Edge& e : c.edges()) {
    if (s[e.a] == s[e.b]) out.push_back(e);
  }
  return out;
}

bool is_satisfying(const SurfaceComplex& c, const SpinState& s) {
  check_length(c, s);
  return std::none_of(c.faces().begin(), c.faces().end(), [&](const Triple& t) {
    return s[t[0]] == s[t[1]] && s[t[1]] == s[t[2]];
  });
}

// ---------------------------------------------------------------------------
// Satisfying-state enumeration
//
// Depth-first search over vertices in breadth-first order. After each
// assignment, faces propagate: two equal spins force the third to the
// opposite value, and a fully assigned monochromatic face is a conflict.
// Edge requirements propagate the same way (equal / opposite).
// ---------------------------------------------------------------------------

namespace {

struct Relation {
  Vertex other;
  Spin sign;  // +1 requires equal spins, -1 opposite
};

class NaeSolver {
 public:
  NaeSolver(const SurfaceComplex& c, const Constraint& constraint)
      : c_(c), faces_of_(c.vertex_count()), relations_(c.vertex_count()) {
    for (int f = 0; f < c.face_count(); ++f) {
      for (Vertex v : c.faces()[f]) faces_of_[v].push_back(f);
    }
    auto add_relation = [&](const Edge& e, Spin sign) {
      if (!c.has_edge(e)) {
        throw Error(ErrorKind::InvalidConstraint, "constraint edge " + to_string(e) + " is not an edge");
      }
      relations_[e.a].push_back({e.b, sign});
      relations_[e.b].push_back({e.a, sign});
    };
    for (const Edge& e : constraint.required_monochromatic) add_relation(e, 1);
    for (const Edge& e : constraint.required_non_monochromatic) add_relation(e, -1);
    for (const auto& [v, s] : constraint.pinned) {
      if (v < 0 || v >= c.vertex_count()) {
        throw Error(ErrorKind::InvalidConstraint, "pinned vertex " + std::to_string(v) + " out of range");
      }
      if (s != 1 && s != -1) throw Error(ErrorKind::InvalidConstraint, "pinned spin must be +1 or -1");
    }
    order_ = search_order(constraint);
  }

  const std::vector<Vertex>& order() const { return order_; }

  struct Partial {
    std::uint64_t count = 0;
    std::set<SpinState> reps;
    std::vector<bool> always_mono;  // meaningful when count > 0
  };

  Partial run(const std::map<Vertex, Spin>& pins, std::size_t cap) {
    Partial out;
    out.always_mono.assign(c_.edge_count(), true);
    spins_.assign(c_.vertex_count(), 0);
    trail_.clear();
    for (const auto& [v, s] : pins) {
      if (!assign(v, s)) return out;
    }
    search(0, out, cap);
    return out;
  }

 private:
  // BFS order from the most constrained seed: a pinned vertex if any, else
  // the vertex in the most faces (lowest id on ties).
  std::vector<Vertex> search_order(const Constraint& constraint) const {
    const int n = c_.vertex_count();
    std::vector<Vertex> order;
    if (n == 0) return order;
    Vertex seed = 0;
    if (!constraint.pinned.empty()) {
      seed = constraint.pinned.begin()->first;
    } else {
      for (Vertex v = 1; v < n; ++v) {
        if (faces_of_[v].size() > faces_of_[seed].size()) seed = v;
      }
    }
    std::vector<bool> seen(n, false);
    std::queue<Vertex> q;
    q.push(seed);
    seen[seed] = true;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      order.push_back(v);
      for (Vertex w : c_.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    return order;
  }

  bool assign(Vertex v, Spin s) {
    if (spins_[v] != 0) return spins_[v] == s;
    std::vector<Vertex> queue{v};
    spins_[v] = s;
    trail_.push_back(v);
    while (!queue.empty()) {
      const Vertex x = queue.back();
      queue.pop_back();
      const Spin sx = spins_[x];
      for (int f : faces_of_[x]) {
        const Triple& t = c_.faces()[f];
        Vertex free_vertex = -1;
        int equal = 0;
        int assigned = 0;
        for (Vertex y : t) {
          if (spins_[y] == 0) {
            free_vertex = y;
          } else {
            ++assigned;
            if (spins_[y] == sx) ++equal;
          }
        }
        if (assigned == 3 && equal == 3) return false;
        if (assigned == 2 && equal == 2) {
          spins_[free_vertex] = static_cast<Spin>(-sx);
          trail_.push_back(free_vertex);
          queue.push_back(free_vertex);
        }
      }
      for (const Relation& r : relations_[x]) {
        const Spin want = static_cast<Spin>(sx * r.sign);
        if (spins_[r.other] == 0) {
          spins_[r.other] = want;
          trail_.push_back(r.other);
          queue.push_back(r.other);
        } else if (spins_[r.other] != want) {
          return false;
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      spins_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  void search(std::size_t pos, Partial& out, std::size_t cap) {
    while (pos < order_.size() && spins_[order_[pos]] != 0) ++pos;
    if (pos == order_.size()) {
      record(out, cap);
      return;
    }
    const Vertex v = order_[pos];
    for (Spin s : {Spin{1}, Spin{-1}}) {
      const std::size_t mark = trail_.size();
      if (assign(v, s)) search(pos + 1, out, cap);
      undo_to(mark);
    }
  }

  void record(Partial& out, std::size_t cap) {
    ++out.count;
    for (int i = 0; i < c_.edge_count(); ++i) {
      const Edge& e = c_.edges()[i];
      if (spins_[e.a] != spins_[e.b]) out.always_mono[i] = false;
    }
    if (cap == 0) return;
    if (out.reps.size() < cap) {
      out.reps.emplace(spins_);
    } else {
      SpinState s(spins_);
      if (s < *out.reps.rbegin()) {
        out.reps.insert(std::move(s));
        out.reps.erase(std::prev(out.reps.end()));
      }
    }
  }

  const SurfaceComplex& c_;
  std::vector<std::vector<int>> faces_of_;
  std::vector<std::vector<Relation>> relations_;
  std::vector<Vertex> order_;
  std::vector<Spin> spins_;
  std::vector<Vertex> trail_;
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

int split_depth(int jobs) {
  if (jobs <= 1) return 0;
  return std::bit_width(static_cast<unsigned>(jobs - 1)) + 2;
}

}  // namespace

SolveReport enumerate_satisfying(const SurfaceComplex& c, const Constraint& constraint,
                                 const SolveOptions& options) {
  NaeSolver probe(c, constraint);
  const bool symmetric = constraint.sign_symmetric() && c.vertex_count() > 0;

  std::map<Vertex, Spin> pins = constraint.pinned;
  if (symmetric) pins[0] = 1;  // lowest-id vertex; doubled below

  // Extra branching pins split the tree into independent subproblems.
  std::vector<Vertex> split;
  for (Vertex v : probe.order()) {
    if (static_cast<int>(split.size()) >= split_depth(options.jobs)) break;
    if (!pins.count(v)) split.push_back(v);
  }
  const int tasks = 1 << split.size();
  std::vector<NaeSolver::Partial> parts(tasks);
  parallel_for(tasks, options.jobs, [&](int task) {
    std::map<Vertex, Spin> local = pins;
    for (std::size_t k = 0; k < split.size(); ++k) {
      local[split[k]] = (task >> k) & 1 ? Spin{-1} : Spin{1};
    }
    NaeSolver solver(c, constraint);
    parts[task] = solver.run(local, options.representative_cap);
  });

  SolveReport report;
  std::uint64_t found = 0;
  std::set<SpinState> reps;
  std::vector<bool> always_mono(c.edge_count(), true);
  for (auto& p : parts) {
    found += p.count;
    if (p.count > 0) {
      for (int i = 0; i < c.edge_count(); ++i) always_mono[i] = always_mono[i] && p.always_mono[i];
    }
    reps.insert(p.reps.begin(), p.reps.end());
  }
  report.satisfying_count = symmetric ? 2 * found : found;
  if (symmetric) report.pair_count = found;
  report.truncated = found > options.representative_cap;
  for (const auto& s : reps) {
    if (report.representatives.size() >= options.representative_cap) break;
    report.representatives.push_back(s);
  }
  if (found > 0) {
    std::vector<Edge> serious;
    for (int i = 0; i < c.edge_count(); ++i) {
      if (always_mono[i]) serious.push_back(c.edges()[i]);
    }
    report.serious_edges = std::move(serious);
  }
  return report;
}

std::uint64_t count_satisfying(const SurfaceComplex& c, const Constraint& constraint) {
  return enumerate_satisfying(c, constraint, SolveOptions{0, 1}).satisfying_count;
}

std::vector<Edge> serious_edges(const SurfaceComplex& c) {
  auto report = enumerate_satisfying(c, {}, SolveOptions{0, 1});
  if (!report.serious_edges) {
    throw Error(ErrorKind::NoSatisfyingState, "serious edges are undefined without a satisfying state");
  }
  return *report.serious_edges;
}

// ---------------------------------------------------------------------------
// Groundstates
// ---------------------------------------------------------------------------

namespace {

// Bit i of a mask is set when vertex i carries -1. Keys put vertex 0 in the
// most significant position so integer order matches state order.
std::uint64_t state_key(std::uint64_t mask, int n) {
  if (mask & 1) mask = ~mask & ((n == 64 ? 0 : (std::uint64_t{1} << n)) - 1);
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1) key |= std::uint64_t{1} << (n - 1 - i);
  }
  return key;
}

SpinState key_to_state(std::uint64_t key, int n) {
  std::vector<Spin> spins(n);
  for (int i = 0; i < n; ++i) spins[i] = (key >> (n - 1 - i) & 1) ? Spin{-1} : Spin{1};
  return SpinState(std::move(spins));
}

struct GrayPartial {
  int best = INT_MAX;
  std::uint64_t count = 0;  // states with vertex n-1 fixed to +1
  std::set<std::uint64_t> keys;
};

void keep_key(std::set<std::uint64_t>& keys, std::uint64_t key, std::size_t cap) {
  if (cap == 0) return;
  if (keys.size() < cap) {
    keys.insert(key);
  } else if (key < *keys.rbegin() && !keys.count(key)) {
    keys.insert(key);
    keys.erase(std::prev(keys.end()));
  }
}

GroundstateReport exhaustive_groundstates(const SurfaceComplex& c, const GroundstateOptions& opt) {
  const int n = c.vertex_count();
  GroundstateReport report;
  report.method_used = GroundstateMethod::Exhaustive;
  if (n == 0) {
    report.degeneracy = 1;
    return report;
  }
  std::vector<std::vector<int>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].assign(c.neighbours(v).begin(), c.neighbours(v).end());

  // Vertex n-1 stays +1; the others are split into `high` chunk bits and
  // `low` Gray-code bits.
  const int free_bits = n - 1;
  int high = 0;
  if (opt.jobs > 1) {
    high = std::min(free_bits, static_cast<int>(std::bit_width(static_cast<unsigned>(opt.jobs - 1))) + 2);
  }
  const int low = free_bits - high;
  const int chunks = 1 << high;
  std::vector<GrayPartial> parts(chunks);

  parallel_for(chunks, opt.jobs, [&](int chunk) {
    GrayPartial& p = parts[chunk];
    std::vector<int> s(n, 1);
    std::uint64_t mask = 0;
    for (int k = 0; k < high; ++k) {
      if (chunk >> k & 1) {
        s[low + k] = -1;
        mask |= std::uint64_t{1} << (low + k);
      }
    }
    int h = 0;
    for (const Edge& e : c.edges()) h += s[e.a] * s[e.b];
    auto visit = [&] {
      if (h < p.best) {
        p.best = h;
        p.count = 0;
        p.keys.clear();
      }
      if (h == p.best) {
        ++p.count;
        keep_key(p.keys, state_key(mask, n), opt.representative_cap);
      }
    };
    visit();
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < steps; ++i) {
      const int v = std::countr_zero(i);
      int field = 0;
      for (int w : adj[v]) field += s[w];
      h -= 2 * s[v] * field;
      s[v] = -s[v];
      mask ^= std::uint64_t{1} << v;
      visit();
    }
  });

  int best = INT_MAX;
  for (const auto& p : parts) best = std::min(best, p.best);
  std::uint64_t count = 0;
  std::set<std::uint64_t> keys;
  for (const auto& p : parts) {
    if (p.best != best) continue;
    count += p.count;
    for (auto k : p.keys) keep_key(keys, k, opt.representative_cap);
  }
  report.min_energy = best;
  report.degeneracy = 2 * count;
  report.truncated = count > opt.representative_cap;
  for (auto k : keys) report.representatives.push_back(key_to_state(k, n));
  return report;
}

// Exact search with the frustration bound: every triangle (face or hole
// boundary) needs a monochromatic edge and every edge lies in two triangles,
// so at least ceil(U/2) more monochromatic edges are needed when U triangles
// have none yet.
class GroundstateBnb {
 public:
  GroundstateBnb(const SurfaceComplex& c, const GroundstateOptions& opt)
      : c_(c), opt_(opt), incident_(c.vertex_count()) {
    std::vector<Triple> triangles = c.faces();
    triangles.insert(triangles.end(), c.holes().begin(), c.holes().end());
    std::map<Edge, std::vector<int>> tri_of;
    for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
      for (const Edge& e : triple_edges(triangles[t])) tri_of[e].push_back(t);
    }
    for (const auto& [e, ts] : tri_of) {
      // The triangle disk repeats a triple; its edges still count once per side.
      incident_[e.a].push_back({e.b, ts[0], ts[1]});
      incident_[e.b].push_back({e.a, ts[0], ts[1]});
    }
    covered_.assign(triangles.size(), 0);
    uncovered_ = static_cast<int>(triangles.size());
    spins_.assign(c.vertex_count(), 0);

    std::vector<bool> seen(c.vertex_count(), false);
    std::queue<Vertex> q;
    for (Vertex root = 0; root < c.vertex_count(); ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      q.push(root);
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        order_.push_back(v);
        for (Vertex w : c.neighbours(v)) {
          if (!seen[w]) {
            seen[w] = true;
            q.push(w);
          }
        }
      }
    }
  }

  GroundstateReport run() {
    GroundstateReport report;
    report.method_used = GroundstateMethod::BranchAndBound;
    if (order_.empty()) {
      report.degeneracy = 1;
      return report;
    }
    set(order_[0], 1);
    search(1);
    report.min_energy = 2 * best_mono_ - c_.edge_count();
    report.degeneracy = 2 * count_;
    report.truncated = count_ > opt_.representative_cap;
    report.representatives.assign(reps_.begin(), reps_.end());
    return report;
  }

 private:
  struct Incidence {
    Vertex other;
    int t1;
    int t2;
  };

  // Monochromatic edges that assigning v := s would decide.
  int new_mono(Vertex v, Spin s) const {
    int k = 0;
    for (const auto& in : incident_[v]) k += spins_[in.other] == s;
    return k;
  }

  void set(Vertex v, Spin s) {
    spins_[v] = s;
    for (const auto& in : incident_[v]) {
      if (spins_[in.other] != s) continue;
      ++decided_mono_;
      for (int t : {in.t1, in.t2}) {
        if (covered_[t]++ == 0) --uncovered_;
      }
    }
  }

  void unset(Vertex v) {
    const Spin s = spins_[v];
    for (const auto& in : incident_[v]) {
      if (spins_[in.other] != s) continue;
      --decided_mono_;
      for (int t : {in.t1, in.t2}) {
        if (--covered_[t] == 0) ++uncovered_;
      }
    }
    spins_[v] = 0;
  }

  void search(std::size_t pos) {
    if (++nodes_ > opt_.node_limit) {
      throw Error(ErrorKind::ResourceLimit,
                  "branch-and-bound node limit " + std::to_string(opt_.node_limit) + " exceeded");
    }
    const int bound = decided_mono_ + (uncovered_ + 1) / 2;
    if (bound > best_mono_) return;
    if (pos == order_.size()) {
      if (decided_mono_ < best_mono_) {
        best_mono_ = decided_mono_;
        count_ = 0;
        reps_.clear();
      }
      ++count_;
      keep(SpinState(spins_).canonical());
      return;
    }
    const Vertex v = order_[pos];
    Spin first = new_mono(v, 1) <= new_mono(v, -1) ? Spin{1} : Spin{-1};
    for (Spin s : {first, static_cast<Spin>(-first)}) {
      set(v, s);
      search(pos + 1);
      unset(v);
    }
  }

  void keep(SpinState s) {
    if (opt_.representative_cap == 0) return;
    if (reps_.size() < opt_.representative_cap) {
      reps_.insert(std::move(s));
    } else if (s < *reps_.rbegin() && !reps_.count(s)) {
      reps_.insert(std::move(s));
      reps_.erase(std::prev(reps_.end()));
    }
  }

  const SurfaceComplex& c_;
  const GroundstateOptions& opt_;
  std::vector<std::vector<Incidence>> incident_;
  std::vector<int> covered_;
  int uncovered_ = 0;
  int decided_mono_ = 0;
  std::vector<Spin> spins_;
  std::vector<Vertex> order_;
  int best_mono_ = INT_MAX;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
  std::set<SpinState> reps_;
};

}  // namespace

GroundstateReport groundstates(const SurfaceComplex& c, const GroundstateOptions& options) {
  const int n = c.vertex_count();
  constexpr int kGrayLimit = 40;
  GroundstateMethod method = options.method;
  if (method == GroundstateMethod::Auto) {
    method = n <= options.vertex_ceiling && n <= kGrayLimit ? GroundstateMethod::Exhaustive
                                                            : GroundstateMethod::BranchAndBound;
  }
  if (method == GroundstateMethod::Exhaustive) {
    if (n > options.vertex_ceiling || n > kGrayLimit) {
      throw Error(ErrorKind::ResourceLimit,
                  std::to_string(n) + " vertices exceed the exhaustive ceiling of " +
                      std::to_string(std::min(options.vertex_ceiling, kGrayLimit)));
    }
    return exhaustive_groundstates(c, options);
  }
  return GroundstateBnb(c, options).run();
}

// ---------------------------------------------------------------------------
// Matching correspondence
// ---------------------------------------------------------------------------

std::vector<Edge> matching_from_state(const SurfaceComplex& c, const SpinState& s) {
  if (!c.closed()) throw Error(ErrorKind::NotClosed, "matching correspondence needs a closed complex");
  if (!is_satisfying(c, s)) throw Error(ErrorKind::NotSatisfying, "state " + s.to_string() + " is not satisfying");
  return frustrated_edges(c, s);
}

std::optional<std::pair<SpinState, SpinState>> state_from_matching(const SurfaceComplex& c,
                                                                   const std::vector<Edge>& matching) {
  if (!c.closed()) throw Error(ErrorKind::NotClosed, "matching correspondence needs a closed complex");
  std::vector<bool> matched(c.edge_count(), false);
  for (const Edge& e : matching) {
    auto idx = c.edge_index(e);
    if (!idx) throw Error(ErrorKind::NotAPerfectMatching, to_string(e) + " is not an edge");
    if (matched[*idx]) throw Error(ErrorKind::NotAPerfectMatching, to_string(e) + " listed twice");
    matched[*idx] = true;
  }
  // Each face (dual vertex) must meet exactly one matched edge.
  std::vector<Edge> face_edge(c.face_count());
  for (int f = 0; f < c.face_count(); ++f) {
    int hits = 0;
    for (const Edge& e : triple_edges(c.faces()[f])) {
      if (matched[*c.edge_index(e)]) {
        face_edge[f] = e;
        ++hits;
      }
    }
    if (hits != 1) {
      throw Error(ErrorKind::NotAPerfectMatching,
                  "face " + to_string(c.faces()[f]) + " meets " + std::to_string(hits) + " matched edges");
    }
  }
  if (c.vertex_count() == 0) return std::make_pair(SpinState(), SpinState());

  std::vector<std::vector<int>> faces_of(c.vertex_count());
  for (int f = 0; f < c.face_count(); ++f) {
    for (Vertex v : c.faces()[f]) faces_of[v].push_back(f);
  }
  // Seed vertex 0 with +1; a face with one known spin determines the other two.
  std::vector<Spin> spins(c.vertex_count(), 0);
  spins[0] = 1;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (int f : faces_of[v]) {
      const Edge& m = face_edge[f];
      const Vertex third = opposite_vertex(c.faces()[f], m);
      const Spin edge_spin = m.contains(v) ? spins[v] : static_cast<Spin>(-spins[v]);
      for (auto [w, want] : {std::pair{m.a, edge_spin}, std::pair{m.b, edge_spin},
                             std::pair{third, static_cast<Spin>(-edge_spin)}}) {
        if (spins[w] == 0) {
          spins[w] = want;
          stack.push_back(w);
        } else if (spins[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  SpinState s(std::move(spins));
  return std::make_pair(s, s.negated());
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

namespace brute_force {

namespace {
void check_size(const SurfaceComplex& c) {
  if (c.vertex_count() > kMaxVertices) {
    throw Error(ErrorKind::ResourceLimit, "brute force is limited to " + std::to_string(kMaxVertices) + " vertices");
  }
}
}  // namespace

std::uint64_t count_satisfying(const SurfaceComplex& c, const Constraint& constraint) {
  check_size(c);
  const int n = c.vertex_count();
  std::uint64_t count = 0;
  std::vector<int> s(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
    bool ok = true;
    for (const Triple& t : c.faces()) ok = ok && !(s[t[0]] == s[t[1]] && s[t[1]] == s[t[2]]);
    for (const auto& [v, spin] : constraint.pinned) ok = ok && s[v] == spin;
    for (const Edge& e : constraint.required_monochromatic) ok = ok && s[e.a] == s[e.b];
    for (const Edge& e : constraint.required_non_monochromatic) ok = ok && s[e.a] != s[e.b];
    if (ok) ++count;
  }
  return count;
}

std::pair<int, std::uint64_t> groundstate(const SurfaceComplex& c) {
  check_size(c);
  const int n = c.vertex_count();
  int best = INT_MAX;
  std::uint64_t count = 0;
  std::vector<int> s(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
    int h = 0;
    for (const Edge& e : c.edges()) h += s[e.a] * s[e.b];
    if (h < best) {
      best = h;
      count = 0;
    }
    if (h == best) ++count;
  }
  return {best, count};
}

}  // namespace brute_force

}  // namespace tri
