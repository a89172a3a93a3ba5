#include "tri/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace tri {

Triple make_triple(Vertex a, Vertex b, Vertex c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

bool triple_contains(const Triple& t, Vertex v) {
  return t[0] == v || t[1] == v || t[2] == v;
}

bool triple_contains(const Triple& t, const Edge& e) {
  return triple_contains(t, e.a) && triple_contains(t, e.b);
}

Vertex opposite_vertex(const Triple& t, const Edge& e) {
  for (Vertex v : t) {
    if (!e.contains(v)) return v;
  }
  throw Error(ErrorKind::InvalidArgument, "edge " + to_string(e) + " is not a side of " + to_string(t));
}

std::array<Edge, 3> triple_edges(const Triple& t) {
  return {Edge(t[0], t[1]), Edge(t[0], t[2]), Edge(t[1], t[2])};
}

std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.a << "-" << e.b; }

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << "{" << t[0] << "," << t[1] << "," << t[2] << "}";
}

std::string to_string(const Edge& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

std::string to_string(const Triple& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::DuplicateTriple: return "DuplicateTriple";
    case ErrorKind::EdgeInWrongNumberOfTriples: return "EdgeInWrongNumberOfTriples";
    case ErrorKind::NonOrientable: return "NonOrientable";
    case ErrorKind::PinchedVertex: return "PinchedVertex";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidMark: return "InvalidMark";
    case ErrorKind::InvalidEulerCharacteristic: return "InvalidEulerCharacteristic";
    case ErrorKind::EdgeLeftWithoutFace: return "EdgeLeftWithoutFace";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidGluingSpec: return "InvalidGluingSpec";
    case ErrorKind::NoValidOrientation: return "NoValidOrientation";
    case ErrorKind::ResultInvalid: return "ResultInvalid";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidConstraint: return "InvalidConstraint";
    case ErrorKind::NotSatisfying: return "NotSatisfying";
    case ErrorKind::NotAPerfectMatching: return "NotAPerfectMatching";
    case ErrorKind::NoSatisfyingState: return "NoSatisfyingState";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BaseNotUniquelySatisfiable: return "BaseNotUniquelySatisfiable";
    case ErrorKind::RemovalIncreasesSolutions: return "RemovalIncreasesSolutions";
    case ErrorKind::RemovalInvalid: return "RemovalInvalid";
    case ErrorKind::CertificationLost: return "CertificationLost";
    case ErrorKind::Misaligned: return "Misaligned";
    case ErrorKind::NoSupportingDataAvailable: return "NoSupportingDataAvailable";
    case ErrorKind::GenusMismatch: return "GenusMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

std::vector<int> DualGraph::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (const auto& [f, g] : edges) {
    ++deg[f];
    ++deg[g];
  }
  return deg;
}

namespace {

// Cyclic orientation (a, b, c) of a triple; directed sides a->b, b->c, c->a.
using Oriented = std::array<Vertex, 3>;

bool has_directed_side(const Oriented& o, Vertex u, Vertex v) {
  for (int i = 0; i < 3; ++i) {
    if (o[i] == u && o[(i + 1) % 3] == v) return true;
  }
  return false;
}

void check_orientable(const std::vector<Triple>& triples,
                      const std::map<Edge, std::vector<int>>& edge_triples) {
  std::vector<std::optional<Oriented>> orient(triples.size());
  for (std::size_t seed = 0; seed < triples.size(); ++seed) {
    if (orient[seed]) continue;
    orient[seed] = Oriented{triples[seed][0], triples[seed][1], triples[seed][2]};
    std::queue<int> todo;
    todo.push(static_cast<int>(seed));
    while (!todo.empty()) {
      const int i = todo.front();
      todo.pop();
      const Oriented o = *orient[i];
      for (int k = 0; k < 3; ++k) {
        const Vertex u = o[k];
        const Vertex v = o[(k + 1) % 3];
        for (int j : edge_triples.at(Edge(u, v))) {
          if (j == i) continue;
          // Neighbour must traverse the shared side as v->u.
          const Vertex w = opposite_vertex(triples[j], Edge(u, v));
          const Oriented want{v, u, w};
          if (!orient[j]) {
            orient[j] = want;
            todo.push(j);
          } else if (!has_directed_side(*orient[j], v, u)) {
            throw Error(ErrorKind::NonOrientable,
                        "orientation conflict across edge " + to_string(Edge(u, v)));
          }
        }
      }
    }
  }
}

void check_vertex_links(int vertex_count, const std::vector<Triple>& triples) {
  std::vector<std::vector<Edge>> link(vertex_count);
  for (const Triple& t : triples) {
    link[t[0]].emplace_back(t[1], t[2]);
    link[t[1]].emplace_back(t[0], t[2]);
    link[t[2]].emplace_back(t[0], t[1]);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& l = link[v];
    if (l.empty()) {
      throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " lies in no triple");
    }
    // Each link vertex has exactly two incident link edges (edge multiplicity
    // is checked first), so a walk from one edge covers its whole cycle.
    std::vector<bool> used(l.size(), false);
    std::size_t current = 0;
    Vertex at = l[0].b;
    std::size_t visited = 0;
    while (!used[current]) {
      used[current] = true;
      ++visited;
      std::size_t next = current;
      for (std::size_t k = 0; k < l.size(); ++k) {
        if (k != current && l[k].contains(at)) {
          next = k;
          break;
        }
      }
      if (next == current) break;
      at = l[next].a == at ? l[next].b : l[next].a;
      current = next;
    }
    if (visited != l.size()) {
      throw Error(ErrorKind::PinchedVertex,
                  "link of vertex " + std::to_string(v) + " is not a single cycle");
    }
  }
}

bool is_triangle_disk(int vertex_count, const std::vector<Triple>& faces,
                      const std::vector<Triple>& holes) {
  return vertex_count == 3 && faces.size() == 1 && holes.size() == 1 && faces[0] == holes[0];
}

}  // namespace

SurfaceComplex SurfaceComplex::build(int vertex_count, std::vector<Triple> faces,
                                     std::vector<Triple> holes, Marks marks,
                                     std::vector<std::string> labels) {
  if (vertex_count < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative vertex count");
  }
  auto normalize = [&](std::vector<Triple>& list, const char* what) {
    for (Triple& t : list) {
      for (Vertex v : t) {
        if (v < 0 || v >= vertex_count) {
          throw Error(ErrorKind::DegenerateTriple, std::string(what) + " " + to_string(t) +
                                                       " references vertex out of range");
        }
      }
      t = make_triple(t[0], t[1], t[2]);
      if (t[0] == t[1] || t[1] == t[2]) {
        throw Error(ErrorKind::DegenerateTriple,
                    std::string(what) + " " + to_string(t) + " repeats a vertex");
      }
    }
    std::sort(list.begin(), list.end());
  };
  normalize(faces, "face");
  normalize(holes, "hole");

  std::vector<Triple> all(faces);
  all.insert(all.end(), holes.begin(), holes.end());
  if (!is_triangle_disk(vertex_count, faces, holes)) {
    std::vector<Triple> sorted_all(all);
    std::sort(sorted_all.begin(), sorted_all.end());
    auto dup = std::adjacent_find(sorted_all.begin(), sorted_all.end());
    if (dup != sorted_all.end()) {
      throw Error(ErrorKind::DuplicateTriple, "triple " + to_string(*dup) + " occurs twice");
    }
  }

  std::map<Edge, std::vector<int>> edge_triples;
  std::map<Edge, int> edge_faces;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const Edge& e : triple_edges(all[i])) {
      edge_triples[e].push_back(static_cast<int>(i));
      if (i < faces.size()) ++edge_faces[e];
    }
  }
  for (const auto& [e, ts] : edge_triples) {
    if (ts.size() != 2) {
      throw Error(ErrorKind::EdgeInWrongNumberOfTriples,
                  "edge " + to_string(e) + " lies in " + std::to_string(ts.size()) +
                      " triples (expected 2)");
    }
    if (edge_faces[e] == 0) {
      throw Error(ErrorKind::EdgeLeftWithoutFace, "edge " + to_string(e) + " lies in no face");
    }
  }

  check_vertex_links(vertex_count, all);

  SurfaceComplex c;
  c.vertex_count_ = vertex_count;
  c.edges_.reserve(edge_triples.size());
  c.adjacency_.assign(vertex_count, {});
  for (const auto& [e, ts] : edge_triples) {
    c.edges_.push_back(e);
    c.adjacency_[e.a].push_back(e.b);
    c.adjacency_[e.b].push_back(e.a);
  }
  for (auto& nb : c.adjacency_) std::sort(nb.begin(), nb.end());

  if (vertex_count > 0) {
    std::vector<bool> seen(vertex_count, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : c.adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != vertex_count) {
      throw Error(ErrorKind::Disconnected, "only " + std::to_string(reached) + " of " +
                                               std::to_string(vertex_count) +
                                               " vertices reachable from vertex 0");
    }
  }

  check_orientable(all, edge_triples);

  c.faces_ = std::move(faces);
  c.holes_ = std::move(holes);

  for (Edge& e : marks.fundamental_edges) {
    e = Edge(e.a, e.b);
    if (!c.has_edge(e)) {
      throw Error(ErrorKind::InvalidMark, "fundamental edge " + to_string(e) + " is not an edge");
    }
  }
  auto check_cycles = [&](std::vector<Triple>& cycles, const char* what) {
    for (Triple& t : cycles) {
      t = make_triple(t[0], t[1], t[2]);
      if (!c.hole_index(t)) {
        throw Error(ErrorKind::InvalidMark,
                    std::string(what) + " " + to_string(t) + " is not a hole boundary");
      }
    }
  };
  check_cycles(marks.expandable_cycles, "expandable cycle");
  check_cycles(marks.connection_cycles, "connection cycle");
  c.marks_ = std::move(marks);

  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count) {
    throw Error(ErrorKind::InvalidMark, "label count " + std::to_string(labels.size()) +
                                            " does not match vertex count");
  }
  c.labels_ = std::move(labels);
  return c;
}

std::optional<int> SurfaceComplex::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::optional<int> SurfaceComplex::face_index(const Triple& t) const {
  const Triple key = make_triple(t[0], t[1], t[2]);
  auto it = std::lower_bound(faces_.begin(), faces_.end(), key);
  if (it == faces_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - faces_.begin());
}

std::optional<int> SurfaceComplex::hole_index(const Triple& t) const {
  const Triple key = make_triple(t[0], t[1], t[2]);
  auto it = std::lower_bound(holes_.begin(), holes_.end(), key);
  if (it == holes_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - holes_.begin());
}

std::optional<Vertex> SurfaceComplex::find_vertex(const std::string& name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == name) return static_cast<Vertex>(i);
  }
  if (name.empty() || !std::all_of(name.begin(), name.end(), ::isdigit)) return std::nullopt;
  const long v = std::stol(name);
  if (v >= vertex_count_) return std::nullopt;
  return static_cast<Vertex>(v);
}

std::string SurfaceComplex::vertex_name(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

SurfaceComplex SurfaceComplex::with_marks(Marks marks) const {
  return build(vertex_count_, faces_, holes_, std::move(marks), labels_);
}

bool SurfaceComplex::operator==(const SurfaceComplex& other) const {
  return vertex_count_ == other.vertex_count_ && faces_ == other.faces_ &&
         holes_ == other.holes_ && marks_ == other.marks_ && labels_ == other.labels_;
}

int euler_characteristic(const SurfaceComplex& c) {
  return c.vertex_count() - c.edge_count() + c.face_count() + c.hole_count();
}

int euler_genus(const SurfaceComplex& c) {
  const int chi = euler_characteristic(c);
  if (chi > 2 || (2 - chi) % 2 != 0) {
    throw Error(ErrorKind::InvalidEulerCharacteristic,
                "Euler characteristic " + std::to_string(chi) + " has no orientable genus");
  }
  return (2 - chi) / 2;
}

SurfaceComplex remove_faces(const SurfaceComplex& c, const std::vector<int>& face_indices) {
  std::set<int> removed;
  for (int i : face_indices) {
    if (i < 0 || i >= c.face_count()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "face index " + std::to_string(i) + " not in [0, " +
                      std::to_string(c.face_count()) + ")");
    }
    if (!removed.insert(i).second) {
      throw Error(ErrorKind::IndexOutOfRange, "face index " + std::to_string(i) + " listed twice");
    }
  }
  std::vector<Triple> faces;
  std::vector<Triple> holes = c.holes();
  Marks marks = c.marks();
  for (int i = 0; i < c.face_count(); ++i) {
    if (removed.count(i)) {
      holes.push_back(c.faces()[i]);
      marks.expandable_cycles.push_back(c.faces()[i]);
    } else {
      faces.push_back(c.faces()[i]);
    }
  }
  std::map<Edge, int> face_use;
  for (const Triple& t : faces) {
    for (const Edge& e : triple_edges(t)) ++face_use[e];
  }
  for (int i : removed) {
    for (const Edge& e : triple_edges(c.faces()[i])) {
      if (face_use[e] == 0) {
        throw Error(ErrorKind::EdgeLeftWithoutFace,
                    "removing the listed faces leaves edge " + to_string(e) + " in no face");
      }
    }
  }
  return SurfaceComplex::build(c.vertex_count(), std::move(faces), std::move(holes),
                               std::move(marks), c.labels());
}

namespace {

Marks drop_cycle_marks(const Marks& m, const Triple& cycle) {
  Marks out;
  for (const Edge& e : m.fundamental_edges) {
    if (!triple_contains(cycle, e)) out.fundamental_edges.push_back(e);
  }
  for (const Triple& t : m.expandable_cycles) {
    if (t != cycle) out.expandable_cycles.push_back(t);
  }
  for (const Triple& t : m.connection_cycles) {
    if (t != cycle) out.connection_cycles.push_back(t);
  }
  out.provenance = m.provenance;
  return out;
}

std::vector<Vertex> gluing_map(const SurfaceComplex& a, const SurfaceComplex& b,
                               const GluingSpec& spec, bool swapped) {
  std::vector<Vertex> map(b.vertex_count(), -1);
  map[spec.edge_b.a] = swapped ? spec.edge_a.b : spec.edge_a.a;
  map[spec.edge_b.b] = swapped ? spec.edge_a.a : spec.edge_a.b;
  map[opposite_vertex(spec.cycle_b, spec.edge_b)] = opposite_vertex(spec.cycle_a, spec.edge_a);
  Vertex next = a.vertex_count();
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    if (map[v] < 0) map[v] = next++;
  }
  return map;
}

SurfaceComplex glue_with(const SurfaceComplex& a, const SurfaceComplex& b, const GluingSpec& spec,
                         const std::vector<Vertex>& map, const std::string& note) {
  auto image = [&](const Triple& t) { return make_triple(map[t[0]], map[t[1]], map[t[2]]); };
  std::vector<Triple> faces = a.faces();
  for (const Triple& t : b.faces()) faces.push_back(image(t));
  std::vector<Triple> holes;
  for (const Triple& t : a.holes()) {
    if (t != spec.cycle_a) holes.push_back(t);
  }
  for (const Triple& t : b.holes()) {
    if (t != spec.cycle_b) holes.push_back(image(t));
  }

  Marks marks = drop_cycle_marks(a.marks(), spec.cycle_a);
  const Marks mb = drop_cycle_marks(b.marks(), spec.cycle_b);
  for (const Edge& e : mb.fundamental_edges) marks.fundamental_edges.emplace_back(map[e.a], map[e.b]);
  for (const Triple& t : mb.expandable_cycles) marks.expandable_cycles.push_back(image(t));
  for (const Triple& t : mb.connection_cycles) marks.connection_cycles.push_back(image(t));
  marks.provenance.insert(marks.provenance.end(), mb.provenance.begin(), mb.provenance.end());
  marks.provenance.push_back(note);

  const int vertex_count = a.vertex_count() + b.vertex_count() - 3;
  std::vector<std::string> labels;
  if (!a.labels().empty()) {
    labels = a.labels();
    for (Vertex v = a.vertex_count(); v < vertex_count; ++v) labels.push_back(std::to_string(v));
  }
  return SurfaceComplex::build(vertex_count, std::move(faces), std::move(holes), std::move(marks),
                               std::move(labels));
}

}  // namespace

GlueResult glue_detailed(const SurfaceComplex& a, const SurfaceComplex& b, const GluingSpec& in) {
  GluingSpec spec{make_triple(in.cycle_a[0], in.cycle_a[1], in.cycle_a[2]),
                  make_triple(in.cycle_b[0], in.cycle_b[1], in.cycle_b[2]), in.edge_a, in.edge_b};
  if (!a.hole_index(spec.cycle_a)) {
    throw Error(ErrorKind::InvalidGluingSpec, "cycle_a " + to_string(spec.cycle_a) + " is not a hole of a");
  }
  if (!b.hole_index(spec.cycle_b)) {
    throw Error(ErrorKind::InvalidGluingSpec, "cycle_b " + to_string(spec.cycle_b) + " is not a hole of b");
  }
  if (spec.edge_a.a == spec.edge_a.b || !triple_contains(spec.cycle_a, spec.edge_a)) {
    throw Error(ErrorKind::InvalidGluingSpec,
                "edge_a " + to_string(spec.edge_a) + " is not contained in cycle_a " + to_string(spec.cycle_a));
  }
  if (spec.edge_b.a == spec.edge_b.b || !triple_contains(spec.cycle_b, spec.edge_b)) {
    throw Error(ErrorKind::InvalidGluingSpec,
                "edge_b " + to_string(spec.edge_b) + " is not contained in cycle_b " + to_string(spec.cycle_b));
  }

  const std::string base = "glue " + to_string(spec.cycle_a) + " edge " + to_string(spec.edge_a) +
                           " <- " + to_string(spec.cycle_b) + " edge " + to_string(spec.edge_b);
  std::optional<GlueResult> result;
  std::vector<Error> failures;
  for (bool swapped : {false, true}) {
    const auto map = gluing_map(a, b, spec, swapped);
    try {
      SurfaceComplex c = glue_with(a, b, spec, map, base + (swapped ? ": swapped" : ": direct"));
      if (!result) {
        result = GlueResult{std::move(c), map, swapped, false};
      } else {
        result->both_valid = true;
      }
    } catch (const Error& e) {
      failures.push_back(e);
    }
  }
  if (!result) {
    const bool orientation_only = std::all_of(failures.begin(), failures.end(), [](const Error& e) {
      return e.kind() == ErrorKind::NonOrientable;
    });
    if (orientation_only) {
      throw Error(ErrorKind::NoValidOrientation, "neither bijection yields an orientable surface");
    }
    throw Error(ErrorKind::ResultInvalid, failures.front().what());
  }
  if (result->both_valid) {
    // Record that the choice was not forced.
    Marks marks = result->complex.marks();
    marks.provenance.back() += " (both orientations valid)";
    result->complex = result->complex.with_marks(std::move(marks));
  }
  return std::move(*result);
}

SurfaceComplex glue(const SurfaceComplex& a, const SurfaceComplex& b, const GluingSpec& spec) {
  return glue_detailed(a, b, spec).complex;
}

DualGraph dual_graph(const SurfaceComplex& c) {
  if (!c.closed()) {
    throw Error(ErrorKind::NotClosed, "dual graph needs a closed complex (" +
                                          std::to_string(c.hole_count()) + " holes)");
  }
  std::vector<std::vector<int>> faces_of_edge(c.edge_count());
  for (int f = 0; f < c.face_count(); ++f) {
    for (const Edge& e : triple_edges(c.faces()[f])) faces_of_edge[*c.edge_index(e)].push_back(f);
  }
  DualGraph d;
  d.vertex_count = c.face_count();
  d.edges.reserve(c.edge_count());
  for (const auto& fs : faces_of_edge) d.edges.emplace_back(fs[0], fs[1]);
  return d;
}

}  // namespace tri
