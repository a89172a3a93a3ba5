#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tri/catalog.hpp"
#include "tri/complex.hpp"
#include "tri/construct.hpp"
#include "tri/io.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return TRI_DATA_DIR; }

inline tri::SurfaceComplex load(const std::string& name) {
  return tri::read_tri(data_dir() / name).complex;
}

inline tri::SurfaceComplex k4() {
  return tri::build_complex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline tri::SurfaceComplex octahedron() {
  // Poles 0 and 5 over the square 1-2-3-4.
  return tri::build_complex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4},
                                {5, 1, 2}, {5, 2, 3}, {5, 3, 4}, {5, 1, 4}});
}

inline tri::SurfaceComplex icosahedron() {
  // Vertex 0 and 11 are poles; upper ring 1..5, lower ring 6..10.
  std::vector<tri::Triple> f;
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, un = 1 + (i + 1) % 5;
    const int l = 6 + i, ln = 6 + (i + 1) % 5;
    f.push_back({0, u, un});
    f.push_back({11, l, ln});
    f.push_back({u, un, l});
    f.push_back({un, l, ln});
  }
  return tri::build_complex(12, f);
}

// delta(n) with the outer boundary kept as a face.
inline tri::SurfaceComplex closed_delta(int n) { return tri::delta(n).plane(); }

inline tri::SurfaceComplex triangle_disk() {
  return tri::build_complex(3, {{0, 1, 2}}, {{0, 1, 2}});
}

inline std::vector<tri::SurfaceComplex> catalog_complexes() {
  std::vector<tri::SurfaceComplex> out;
  for (auto& e : tri::load_catalog(data_dir() / "catalog")) out.push_back(e.complex);
  return out;
}

// Closed complexes small enough for 2^V checks.
inline std::vector<tri::SurfaceComplex> closed_corpus() {
  std::vector<tri::SurfaceComplex> out{k4(), octahedron(), icosahedron()};
  for (int n = 1; n <= 6; ++n) out.push_back(closed_delta(n));
  for (auto& c : catalog_complexes()) out.push_back(c);
  out.push_back(tri::build_torus(1));
  out.push_back(tri::build_torus(14));
  out.push_back(tri::build_genus(2, 1));
  return out;
}

inline std::vector<tri::SurfaceComplex> punctured_corpus() {
  std::vector<tri::SurfaceComplex> out{load("connector.tri"), load("energy_split.tri"),
                                       tri::delta(3).complex, tri::remove_faces(octahedron(), {0, 6})};
  return out;
}

inline std::vector<oracle::Tri> raw(const std::vector<tri::Triple>& ts) {
  return {ts.begin(), ts.end()};
}

inline std::vector<oracle::Tri> all_triples(const tri::SurfaceComplex& c) {
  auto out = raw(c.faces());
  for (const auto& h : c.holes()) out.push_back(h);
  return out;
}

inline oracle::Spins spins_of(const tri::SpinState& s) { return {s.spins().begin(), s.spins().end()}; }

}  // namespace fixtures
