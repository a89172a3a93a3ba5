#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tri/complex.hpp"

namespace tri {

struct CatalogEntry {
  std::string name;
  SurfaceComplex complex;
  std::string source;
};

struct RemovableSet {
  std::vector<int> face_indices;
  std::vector<Triple> faces;
  std::uint64_t punctured_count = 0;
  std::vector<Edge> fundamental_edges;  // one per removed face, same order
  bool connector = false;
};

struct SupportReport {
  std::string name;
  std::uint64_t base_satisfying_count = 0;
  std::uint64_t subsets_scanned = 0;
  std::vector<RemovableSet> removable_sets;
  bool supporting = false;
};

// Every edge lies in a 3-cycle that is not a face boundary. On the torus this
// is exactly the condition that no edge can be contracted.
bool is_irreducible(const SurfaceComplex& c);

// Loads every *.tri file in `dir`; each must be a closed genus-1 complex.
// Entries are sorted by name (file stem).
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

// Face subsets of size <= max_removal_size in lexicographic index order;
// records the ones whose removal keeps exactly one satisfying pair.
SupportReport scan_supportability(const CatalogEntry& entry, int max_removal_size = 2);

}  // namespace tri
