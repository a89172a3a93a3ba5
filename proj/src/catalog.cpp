#include "tri/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "tri/construct.hpp"
#include "tri/io.hpp"
#include "tri/ising.hpp"

namespace tri {

bool is_irreducible(const SurfaceComplex& c) {
  for (const Edge& e : c.edges()) {
    const auto& nu = c.neighbours(e.a);
    const auto& nv = c.neighbours(e.b);
    std::vector<Vertex> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    // Two common neighbours are the apexes of the two triangles on e.
    if (common.size() < 3) return false;
  }
  return true;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorKind::IoError, dir.string() + " is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.is_regular_file() && item.path().extension() == ".tri") files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<CatalogEntry> entries;
  std::ostringstream problems;
  std::optional<ErrorKind> first_kind;
  for (const auto& file : files) {
    try {
      TriDocument doc = read_tri(file);
      if (!doc.complex.closed()) {
        throw Error(ErrorKind::NotClosed, "catalog entries must be closed");
      }
      const int genus = euler_genus(doc.complex);
      if (genus != 1) {
        throw Error(ErrorKind::GenusMismatch, "genus " + std::to_string(genus) + ", expected 1");
      }
      entries.push_back({file.stem().string(), std::move(doc.complex), doc.comment});
    } catch (const Error& e) {
      if (!first_kind) first_kind = e.kind();
      problems << "\n  " << file.filename().string() << ": " << e.what();
    }
  }
  if (first_kind) {
    throw Error(*first_kind, "catalog " + dir.string() + " has invalid entries:" + problems.str());
  }
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& x, const CatalogEntry& y) { return x.name < y.name; });
  return entries;
}

SupportReport scan_supportability(const CatalogEntry& entry, int max_removal_size) {
  if (max_removal_size < 1) {
    throw Error(ErrorKind::InvalidArgument, "max_removal_size must be >= 1");
  }
  const SurfaceComplex& c = entry.complex;
  SupportReport report;
  report.name = entry.name;
  report.base_satisfying_count = count_satisfying(c);
  if (report.base_satisfying_count != 2) return report;

  std::vector<int> chosen;
  std::set<Edge> removed_edges;
  // Depth-first in index order visits subsets lexicographically.
  std::function<void(int)> visit = [&](int start) {
    for (int i = start; i < c.face_count(); ++i) {
      const auto edges = triple_edges(c.faces()[i]);
      if (std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return removed_edges.count(e); })) {
        continue;  // a shared edge would be left without a face
      }
      chosen.push_back(i);
      removed_edges.insert(edges.begin(), edges.end());

      ++report.subsets_scanned;
      const SurfaceComplex punctured = remove_faces(c, chosen);
      const auto count = count_satisfying(punctured);
      if (count == 2) {
        RemovableSet set;
        set.face_indices = chosen;
        set.punctured_count = count;
        const auto certified = certify_punctured(punctured);
        for (int f : chosen) {
          set.faces.push_back(c.faces()[f]);
          set.fundamental_edges.push_back(
              certified.fundamental_edges[*punctured.hole_index(c.faces()[f])]);
        }
        for (std::size_t p = 0; p < set.faces.size() && !set.connector; ++p) {
          for (std::size_t q = p + 1; q < set.faces.size(); ++q) {
            const auto& fp = set.faces[p];
            if (std::none_of(fp.begin(), fp.end(), [&](Vertex v) { return triple_contains(set.faces[q], v); })) {
              set.connector = true;
              break;
            }
          }
        }
        report.removable_sets.push_back(std::move(set));
      }

      if (static_cast<int>(chosen.size()) < max_removal_size) visit(i + 1);
      for (const Edge& e : edges) removed_edges.erase(e);
      chosen.pop_back();
    }
  };
  visit(0);
  report.supporting = !report.removable_sets.empty();
  return report;
}

}  // namespace tri
