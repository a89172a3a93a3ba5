#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tri/complex.hpp"
#include "tri/ising.hpp"

namespace tri {

// Stack disk: the plane triangulation delta(n) with its outer face {x, y_n, z}
// held open as the single hole, ready for gluing. Fundamental edge x-y_n.
// Vertex ids: x = 0, z = 1, y_i = 2 + i.
struct AugmentingTriangulation {
  SurfaceComplex complex;
  Edge fundamental_edge;
  int n = 0;

  Vertex x() const { return 0; }
  Vertex z() const { return 1; }
  Vertex y(int i) const { return 2 + i; }
  Triple outer_boundary() const { return complex.holes().front(); }
  // The plane triangulation: the outer face restored as a face.
  SurfaceComplex plane() const;
};

// Punctured complex with exactly one pair of satisfying states.
// fundamental_edges[i] belongs to complex.holes()[i].
struct SupportingPuncturedTriangulation {
  SurfaceComplex complex;
  SpinState witness;
  std::vector<Edge> fundamental_edges;
  // Indices into complex.holes() of two vertex-disjoint hole boundaries.
  std::optional<std::pair<int, int>> connection_cycles;

  bool is_connector() const { return connection_cycles.has_value(); }
  std::optional<int> hole_of(const Triple& t) const { return complex.hole_index(t); }
};

// Stack triangulations with n up to this value are checked for a unique pair
// with x-y_n monochromatic when built.
inline constexpr int kDeltaVerificationCeiling = 64;

AugmentingTriangulation delta(int n);

// Checks that a punctured complex has exactly one satisfying pair and that
// every hole boundary has exactly one monochromatic edge under it.
SupportingPuncturedTriangulation certify_punctured(const SurfaceComplex& punctured);

// Punctures a closed complex with a unique satisfying pair and certifies it.
SupportingPuncturedTriangulation certify_supporting(const SurfaceComplex& closed,
                                                    const std::vector<int>& removable_faces);

using FillResult = std::variant<SurfaceComplex, SupportingPuncturedTriangulation>;

// Glues d into hole `hole_index`, d's fundamental edge onto the hole's.
// `target_edge`, when given, must be that fundamental edge.
FillResult fill_hole(const SupportingPuncturedTriangulation& t, int hole_index,
                     const AugmentingTriangulation& d, std::optional<Edge> target_edge = std::nullopt);

// Glues connector j's second connection cycle to connector j+1's first.
SupportingPuncturedTriangulation chain_connectors(const std::vector<SupportingPuncturedTriangulation>& connectors);

// Per-hole stack sizes: each >= 1, deficit split evenly, extra to the lowest holes.
std::vector<int> hole_fill_sizes(int base_vertices, int holes, int min_vertices);

// Fills every hole of t with a stack disk so that the result has at least
// min_vertices vertices; the closed result is re-certified.
SurfaceComplex fill_all_holes(const SupportingPuncturedTriangulation& t, int min_vertices);

// Closed toroidal triangulation with exactly one satisfying pair.
SurfaceComplex build_torus(int min_vertices);
SurfaceComplex build_torus(int min_vertices, const SupportingPuncturedTriangulation& base);
// Closed genus-g triangulation with exactly one satisfying pair.
SurfaceComplex build_genus(int genus, int min_vertices);
SurfaceComplex build_genus(int genus, int min_vertices, const SupportingPuncturedTriangulation& base);

// The built-in supporting toroidal triangulation: 8 vertices, 16 faces.
// Removing faces {1,3,5} and {2,4,6} leaves a connector.
SurfaceComplex default_supporting_torus();
std::vector<int> default_removable_faces();
SupportingPuncturedTriangulation default_connector();

}  // namespace tri
