#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tri {

using Vertex = int;

// Unordered vertex pair, stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool contains(Vertex v) const { return a == v || b == v; }
  auto operator<=>(const Edge&) const = default;
};

// Unordered vertex triple, stored sorted ascending.
using Triple = std::array<Vertex, 3>;

Triple make_triple(Vertex a, Vertex b, Vertex c);
bool triple_contains(const Triple& t, Vertex v);
bool triple_contains(const Triple& t, const Edge& e);
// Vertex of t not on e; t must contain e.
Vertex opposite_vertex(const Triple& t, const Edge& e);
std::array<Edge, 3> triple_edges(const Triple& t);

std::ostream& operator<<(std::ostream& os, const Edge& e);
std::ostream& operator<<(std::ostream& os, const Triple& t);
std::string to_string(const Edge& e);
std::string to_string(const Triple& t);

enum class ErrorKind {
  DegenerateTriple,
  DuplicateTriple,
  EdgeInWrongNumberOfTriples,
  NonOrientable,
  PinchedVertex,
  IsolatedVertex,
  Disconnected,
  InvalidMark,
  InvalidEulerCharacteristic,
  EdgeLeftWithoutFace,
  IndexOutOfRange,
  InvalidGluingSpec,
  NoValidOrientation,
  ResultInvalid,
  NotClosed,
  LengthMismatch,
  InvalidConstraint,
  NotSatisfying,
  NotAPerfectMatching,
  NoSatisfyingState,
  ResourceLimit,
  InvalidArgument,
  BaseNotUniquelySatisfiable,
  RemovalIncreasesSolutions,
  RemovalInvalid,
  CertificationLost,
  Misaligned,
  NoSupportingDataAvailable,
  GenusMismatch,
  ParseError,
  IoError,
  OracleMismatch,
};

const char* error_kind_name(ErrorKind kind);

// Every domain failure in the library is reported as a tri::Error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Named edge/cycle annotations carried alongside a complex.
struct Marks {
  std::vector<Edge> fundamental_edges;
  std::vector<Triple> expandable_cycles;
  std::vector<Triple> connection_cycles;
  std::vector<std::string> provenance;

  bool empty() const {
    return fundamental_edges.empty() && expandable_cycles.empty() &&
           connection_cycles.empty() && provenance.empty();
  }
  bool operator==(const Marks&) const = default;
};

struct DualGraph {
  int vertex_count = 0;
  // edges[i] joins the two faces that share primal edge i of the complex.
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
};

// A triangulated closed orientable surface, possibly with triangular holes.
// Immutable once built; every instance has passed full validation.
//
// The single-triangle disk (three vertices, one face, one hole on the same
// triple) is the only complex allowed to repeat a triple.
class SurfaceComplex {
 public:
  // Validates and canonicalizes (faces and holes sorted, triples sorted).
  static SurfaceComplex build(int vertex_count, std::vector<Triple> faces,
                              std::vector<Triple> holes = {}, Marks marks = {},
                              std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  const std::vector<Triple>& faces() const { return faces_; }
  const std::vector<Triple>& holes() const { return holes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Marks& marks() const { return marks_; }
  // Optional vertex names; empty or one per vertex.
  const std::vector<std::string>& labels() const { return labels_; }

  bool closed() const { return holes_.empty(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int hole_count() const { return static_cast<int>(holes_.size()); }

  std::optional<int> edge_index(const Edge& e) const;
  bool has_edge(const Edge& e) const { return edge_index(e).has_value(); }
  std::optional<int> face_index(const Triple& t) const;
  std::optional<int> hole_index(const Triple& t) const;
  // Sorted neighbours of v.
  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v]; }
  // Vertex id for a label or decimal id string.
  std::optional<Vertex> find_vertex(const std::string& name) const;
  std::string vertex_name(Vertex v) const;

  // Same complex with replaced marks (revalidated).
  SurfaceComplex with_marks(Marks marks) const;

  bool operator==(const SurfaceComplex& other) const;

 private:
  SurfaceComplex() = default;

  int vertex_count_ = 0;
  std::vector<Triple> faces_;
  std::vector<Triple> holes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  Marks marks_;
  std::vector<std::string> labels_;
};

inline SurfaceComplex build_complex(int vertex_count, std::vector<Triple> faces,
                                    std::vector<Triple> holes = {}) {
  return SurfaceComplex::build(vertex_count, std::move(faces), std::move(holes));
}

int euler_characteristic(const SurfaceComplex& c);
// Genus of the surface obtained by filling every hole.
int euler_genus(const SurfaceComplex& c);

// Moves the listed faces into the hole list. New hole boundaries are appended
// to marks.expandable_cycles.
SurfaceComplex remove_faces(const SurfaceComplex& c, const std::vector<int>& face_indices);

struct GluingSpec {
  Triple cycle_a;
  Triple cycle_b;
  Edge edge_a;
  Edge edge_b;
};

struct GlueResult {
  SurfaceComplex complex;
  // Image of every vertex of b in the glued complex.
  std::vector<Vertex> b_to_result;
  bool swapped = false;     // edge_b.a was sent to edge_a.b
  bool both_valid = false;  // the other bijection validated as well
};

// Identifies hole cycle_b of b with hole cycle_a of a, edge_b onto edge_a.
// The result keeps a's ids; b's surviving vertices are appended in ascending order.
GlueResult glue_detailed(const SurfaceComplex& a, const SurfaceComplex& b,
                         const GluingSpec& spec);
SurfaceComplex glue(const SurfaceComplex& a, const SurfaceComplex& b, const GluingSpec& spec);

DualGraph dual_graph(const SurfaceComplex& c);

}  // namespace tri
