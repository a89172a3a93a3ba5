#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tri/ising.hpp"

using namespace tri;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected tri::Error");
  return ErrorKind::OracleMismatch;
}

std::vector<oracle::Spins> oracle_states(const SurfaceComplex& c, const Constraint& k = {}) {
  return oracle::satisfying_states(c.vertex_count(), fixtures::raw(c.faces()), [&](const oracle::Spins& s) {
    for (const auto& [v, x] : k.pinned) {
      if (s[v] != x) return false;
    }
    for (const Edge& e : k.required_monochromatic) {
      if (s[e.a] != s[e.b]) return false;
    }
    for (const Edge& e : k.required_non_monochromatic) {
      if (s[e.a] == s[e.b]) return false;
    }
    return true;
  });
}

std::vector<std::string> oracle_reps(const std::vector<oracle::Spins>& states, bool symmetric) {
  std::set<std::string> out;
  for (const auto& s : states) {
    if (!symmetric || s[0] == 1) out.insert(oracle::text(s));
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> texts(const std::vector<SpinState>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Constraint random_constraint(const SurfaceComplex& c, std::mt19937& rng) {
  Constraint k;
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> vert(0, c.vertex_count() - 1);
  std::uniform_int_distribution<int> edge(0, c.edge_count() - 1);
  if (coin(rng) == 0) k.pinned[vert(rng)] = coin(rng) % 2 ? 1 : -1;
  if (coin(rng) == 0) k.pinned[vert(rng)] = coin(rng) % 2 ? 1 : -1;
  if (coin(rng) < 2) k.required_monochromatic.push_back(c.edges()[edge(rng)]);
  if (coin(rng) < 2) k.required_non_monochromatic.push_back(c.edges()[edge(rng)]);
  return k;
}

}  // namespace

TEST_CASE("SpinState text and order") {
  const auto s = SpinState::parse("++--");
  CHECK(s.size() == 4);
  CHECK(s[2] == -1);
  CHECK(s.to_string() == "++--");
  CHECK(s.negated().to_string() == "--++");
  CHECK(s.negated().canonical() == s);
  CHECK(SpinState::parse("+-") < SpinState::parse("-+"));
  CHECK(kind_of([] { SpinState::parse("+x"); }) == ErrorKind::ParseError);
}

TEST_CASE("energy on K4") {
  const auto k4 = fixtures::k4();
  CHECK(energy(k4, SpinState::all_plus(4)) == 6);
  CHECK(energy(k4, SpinState::parse("++--")) == -2);
  CHECK(energy(k4, SpinState::parse("+---")) == 0);
  CHECK(kind_of([&] { energy(k4, SpinState::parse("+++")); }) == ErrorKind::LengthMismatch);
  CHECK(frustrated_edges(k4, SpinState::parse("++--")) == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
}

TEST_CASE("satisfying states of K4") {
  const auto k4 = fixtures::k4();
  CHECK(is_satisfying(k4, SpinState::parse("+-+-")));
  CHECK_FALSE(is_satisfying(k4, SpinState::parse("+++-")));
  CHECK_FALSE(is_satisfying(k4, SpinState::parse("----")));

  const auto r = enumerate_satisfying(k4);
  CHECK(r.satisfying_count == 6);
  CHECK(r.pair_count == 3);
  CHECK(texts(r.representatives) == std::vector<std::string>{"++--", "+-+-", "+--+"});
  CHECK_FALSE(r.truncated);
  REQUIRE(r.serious_edges);
  CHECK(r.serious_edges->empty());
  CHECK(serious_edges(k4).empty());
}

TEST_CASE("holes carry no constraint") {
  const auto p = remove_faces(fixtures::k4(), {0});
  CHECK(is_satisfying(p, SpinState::parse("+++-")));
  CHECK(count_satisfying(p) == 8);
}

TEST_CASE("representative cap") {
  const auto k4 = fixtures::k4();
  const auto r = enumerate_satisfying(k4, {}, {2, 1});
  CHECK(r.satisfying_count == 6);
  CHECK(r.truncated);
  CHECK(texts(r.representatives) == std::vector<std::string>{"++--", "+-+-"});
}

TEST_CASE("constraint validation") {
  const auto k4 = fixtures::k4();
  Constraint bad_edge;
  bad_edge.required_monochromatic.push_back(Edge(0, 9));
  CHECK(kind_of([&] { count_satisfying(k4, bad_edge); }) == ErrorKind::InvalidConstraint);
  Constraint bad_pin;
  bad_pin.pinned[4] = 1;
  CHECK(kind_of([&] { count_satisfying(k4, bad_pin); }) == ErrorKind::InvalidConstraint);
}

TEST_CASE("pinned constraints break sign symmetry") {
  const auto k4 = fixtures::k4();
  Constraint k;
  k.pinned[0] = -1;
  const auto r = enumerate_satisfying(k4, k);
  CHECK(r.satisfying_count == 3);
  CHECK_FALSE(r.pair_count);
  CHECK(texts(r.representatives) == std::vector<std::string>{"-++-", "-+-+", "--++"});
}

TEST_CASE("solver agrees with the oracle") {
  std::mt19937 rng(11);
  auto corpus = fixtures::closed_corpus();
  for (auto& p : fixtures::punctured_corpus()) corpus.push_back(p);
  for (const auto& c : corpus) {
    if (c.vertex_count() > 20) continue;
    CAPTURE(format_tri(c));
    for (int trial = 0; trial < 6; ++trial) {
      const Constraint k = trial == 0 ? Constraint{} : random_constraint(c, rng);
      const auto states = oracle_states(c, k);
      const auto r = enumerate_satisfying(c, k, {1u << 20, 1});
      CHECK(r.satisfying_count == states.size());
      CHECK(texts(r.representatives) == oracle_reps(states, k.sign_symmetric()));
      CHECK(brute_force::count_satisfying(c, k) == states.size());
      if (states.empty()) {
        CHECK_FALSE(r.serious_edges);
        continue;
      }
      REQUIRE(r.serious_edges);
      std::vector<Edge> serious;
      for (const Edge& e : c.edges()) {
        if (std::all_of(states.begin(), states.end(), [&](const auto& s) { return s[e.a] == s[e.b]; })) {
          serious.push_back(e);
        }
      }
      CHECK(*r.serious_edges == serious);
    }
  }
}

TEST_CASE("satisfying states come in sign-flipped pairs") {
  for (const auto& c : fixtures::closed_corpus()) {
    if (c.vertex_count() > 20) continue;
    const auto r = enumerate_satisfying(c, {}, {1u << 20, 1});
    CHECK(r.satisfying_count % 2 == 0);
    for (const auto& s : r.representatives) {
      CHECK(is_satisfying(c, s));
      CHECK(is_satisfying(c, s.negated()));
      CHECK(energy(c, s) == energy(c, s.negated()));
    }
  }
}

TEST_CASE("serious edges without satisfying states") {
  const auto k7 = fixtures::load("catalog/irr07_00.tri");
  CHECK(count_satisfying(k7) == 0);
  CHECK(kind_of([&] { serious_edges(k7); }) == ErrorKind::NoSatisfyingState);
}

TEST_CASE("serious edges of the supporting torus") {
  const auto t = default_supporting_torus();
  const auto s = serious_edges(t);
  CHECK(s.size() == 8);
  CHECK(std::count(s.begin(), s.end(), Edge(1, 3)) == 1);
  CHECK(std::count(s.begin(), s.end(), Edge(2, 4)) == 1);
}

TEST_CASE("groundstates agree with the oracle across methods") {
  auto corpus = fixtures::closed_corpus();
  for (auto& p : fixtures::punctured_corpus()) corpus.push_back(p);
  for (const auto& c : corpus) {
    if (c.vertex_count() > 20) continue;
    CAPTURE(format_tri(c));
    const auto expected = oracle::groundstate(c.vertex_count(), oracle::edges_of(fixtures::all_triples(c)));
    for (auto m : {GroundstateMethod::Exhaustive, GroundstateMethod::BranchAndBound}) {
      GroundstateOptions o;
      o.method = m;
      o.representative_cap = 1u << 20;
      const auto g = groundstates(c, o);
      CHECK(g.min_energy == expected.min_energy);
      CHECK(g.degeneracy == expected.degeneracy);
      CHECK(g.method_used == m);
      CHECK(g.representatives.size() * 2 == g.degeneracy);
      for (const auto& s : g.representatives) {
        CHECK(s == s.canonical());
        CHECK(energy(c, s) == expected.min_energy);
      }
      CHECK(std::is_sorted(g.representatives.begin(), g.representatives.end()));
    }
    const auto bf = brute_force::groundstate(c);
    CHECK(bf.first == expected.min_energy);
    CHECK(bf.second == expected.degeneracy);
  }
}

TEST_CASE("groundstates of K4") {
  const auto g = groundstates(fixtures::k4());
  CHECK(g.min_energy == -2);
  CHECK(g.degeneracy == 6);
  CHECK(texts(g.representatives) == std::vector<std::string>{"++--", "+-+-", "+--+"});
}

TEST_CASE("closed groundstate energy is -E/3 exactly when satisfiable") {
  for (const auto& c : fixtures::closed_corpus()) {
    if (c.vertex_count() > 20) continue;
    const auto g = groundstates(c);
    const auto sat = count_satisfying(c);
    if (sat > 0) {
      CHECK(g.min_energy == -c.edge_count() / 3);
      CHECK(g.degeneracy == sat);
    } else {
      CHECK(g.min_energy > -c.edge_count() / 3);
    }
  }
}

TEST_CASE("energy identity for satisfying states") {
  for (const auto& c : fixtures::closed_corpus()) {
    if (c.vertex_count() > 20) continue;
    for (const auto& s : enumerate_satisfying(c, {}, {1u << 20, 1}).representatives) {
      const int mono = static_cast<int>(frustrated_edges(c, s).size());
      CHECK(energy(c, s) == 2 * mono - c.edge_count());
      CHECK(mono == c.face_count() / 2);
    }
  }
}

TEST_CASE("energies of satisfying states on a punctured complex") {
  const auto c = fixtures::load("energy_split.tri");
  const auto r = enumerate_satisfying(c);
  CHECK(r.satisfying_count == 6);
  std::set<int> energies;
  for (const auto& s : r.representatives) energies.insert(energy(c, s));
  CHECK(energies == std::set<int>{-8, -6});
  CHECK(groundstates(c).min_energy == -8);
}

TEST_CASE("parallel runs are identical") {
  for (const auto& c : {default_supporting_torus(), build_torus(16), fixtures::icosahedron()}) {
    const auto a = enumerate_satisfying(c, {}, {4, 1});
    const auto b = enumerate_satisfying(c, {}, {4, 4});
    CHECK(a.satisfying_count == b.satisfying_count);
    CHECK(a.representatives == b.representatives);
    CHECK(a.serious_edges == b.serious_edges);
    for (auto m : {GroundstateMethod::Exhaustive, GroundstateMethod::BranchAndBound}) {
      GroundstateOptions o1, o4;
      o1.method = o4.method = m;
      o1.representative_cap = o4.representative_cap = 3;
      o4.jobs = 4;
      const auto g1 = groundstates(c, o1);
      const auto g4 = groundstates(c, o4);
      CHECK(g1.min_energy == g4.min_energy);
      CHECK(g1.degeneracy == g4.degeneracy);
      CHECK(g1.representatives == g4.representatives);
    }
  }
}

TEST_CASE("branch-and-bound node limit") {
  GroundstateOptions o;
  o.method = GroundstateMethod::BranchAndBound;
  o.node_limit = 10;
  CHECK(kind_of([&] { groundstates(fixtures::icosahedron(), o); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("method names") {
  CHECK(parse_method("bnb") == GroundstateMethod::BranchAndBound);
  CHECK(parse_method("exhaustive") == GroundstateMethod::Exhaustive);
  CHECK(parse_method("auto") == GroundstateMethod::Auto);
  CHECK_FALSE(parse_method("fast"));
  CHECK(std::string(method_name(GroundstateMethod::BranchAndBound)) == "bnb");
}

TEST_CASE("matching from a satisfying state") {
  const auto k4 = fixtures::k4();
  const auto s = SpinState::parse("++--");
  CHECK(matching_from_state(k4, s) == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
  CHECK(matching_from_state(k4, s.negated()) == matching_from_state(k4, s));
  CHECK(kind_of([&] { matching_from_state(k4, SpinState::parse("+++-")); }) == ErrorKind::NotSatisfying);
  CHECK(kind_of([&] { matching_from_state(remove_faces(k4, {0}), s); }) == ErrorKind::NotClosed);

  const auto back = state_from_matching(k4, {Edge(0, 1), Edge(2, 3)});
  REQUIRE(back);
  CHECK(back->first.to_string() == "++--");
  CHECK(back->second.to_string() == "--++");
  CHECK(kind_of([&] { state_from_matching(k4, {Edge(0, 1)}); }) == ErrorKind::NotAPerfectMatching);
  CHECK(kind_of([&] { state_from_matching(k4, {Edge(0, 1), Edge(0, 2)}); }) == ErrorKind::NotAPerfectMatching);
}

TEST_CASE("matching correspondence on the sphere corpus") {
  for (const auto& c : {fixtures::k4(), fixtures::octahedron(), fixtures::icosahedron(),
                        fixtures::closed_delta(3), fixtures::closed_delta(5)}) {
    const auto r = enumerate_satisfying(c, {}, {1u << 20, 1});
    std::set<std::vector<Edge>> matchings;
    for (const auto& s : r.representatives) {
      const auto m = matching_from_state(c, s);
      CHECK(static_cast<int>(m.size()) == c.face_count() / 2);
      matchings.insert(m);
      const auto back = state_from_matching(c, m);
      REQUIRE(back);
      CHECK(back->first == s);
      CHECK(back->second == s.negated());
    }
    CHECK(matchings.size() == *r.pair_count);
  }
}

namespace {

void all_perfect_matchings(const DualGraph& d, std::vector<int>& used, std::vector<int>& chosen,
                           std::vector<std::vector<int>>& out) {
  const auto it = std::find(used.begin(), used.end(), 0);
  if (it == used.end()) {
    out.push_back(chosen);
    return;
  }
  const int f = static_cast<int>(it - used.begin());
  for (int i = 0; i < static_cast<int>(d.edges.size()); ++i) {
    const auto [p, q] = d.edges[i];
    const int other = p == f ? q : (q == f ? p : -1);
    if (other < 0 || used[other]) continue;
    used[f] = used[other] = 1;
    chosen.push_back(i);
    all_perfect_matchings(d, used, chosen, out);
    chosen.pop_back();
    used[f] = used[other] = 0;
  }
}

}  // namespace

TEST_CASE("on the torus some perfect matchings have no state") {
  const auto t = default_supporting_torus();
  const auto d = dual_graph(t);
  std::vector<int> used(d.vertex_count, 0), chosen;
  std::vector<std::vector<int>> matchings;
  all_perfect_matchings(d, used, chosen, matchings);
  REQUIRE(matchings.size() > 1);

  int realised = 0, conflicting = 0;
  for (const auto& m : matchings) {
    std::vector<Edge> edges;
    for (int i : m) edges.push_back(t.edges()[i]);
    std::sort(edges.begin(), edges.end());
    const auto s = state_from_matching(t, edges);
    if (s) {
      ++realised;
      CHECK(matching_from_state(t, s->first) == edges);
    } else {
      ++conflicting;
    }
  }
  CHECK(realised == 1);
  CHECK(conflicting > 0);
}
