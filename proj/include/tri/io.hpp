#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tri/catalog.hpp"
#include "tri/complex.hpp"
#include "tri/ising.hpp"

namespace tri {

inline constexpr const char* kTriSchema = "tri/1";
inline constexpr const char* kIsingReportSchema = "isingreport/1";
inline constexpr const char* kSupportReportSchema = "supportreport/1";

struct TriDocument {
  SurfaceComplex complex;
  std::string comment;
};

TriDocument parse_tri(const std::string& text);
TriDocument read_tri(const std::filesystem::path& path);
// Canonical text: triples sorted, faces sorted, fixed key order, trailing newline.
std::string format_tri(const SurfaceComplex& c, const std::string& comment = "");

std::string format_ising_report(const SurfaceComplex& c, const std::optional<SolveReport>& solve,
                                const std::optional<GroundstateReport>& ground);
std::string format_support_reports(const std::vector<SupportReport>& reports);

// Graphviz export. Hole-boundary edges are dashed, fundamental edges and any
// highlighted edges are bold.
std::string primal_dot(const SurfaceComplex& c, const std::vector<Edge>& highlight = {});
std::string dual_dot(const SurfaceComplex& c, const std::vector<Edge>& highlight = {});

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace tri
