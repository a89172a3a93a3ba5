// tri: build and verify triangulations with non-degenerated antiferromagnetic
// Ising groundstates.
//
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tri/catalog.hpp"
#include "tri/complex.hpp"
#include "tri/construct.hpp"
#include "tri/io.hpp"
#include "tri/ising.hpp"

namespace {

using namespace tri;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Vertex resolve(const SurfaceComplex& c, const std::string& name) {
  auto v = c.find_vertex(name);
  if (!v) throw UsageError("unknown vertex '" + name + "'");
  return *v;
}

Edge parse_edge(const SurfaceComplex& c, const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("expected an edge u,v but got '" + text + "'");
  return Edge(resolve(c, parts[0]), resolve(c, parts[1]));
}

Triple parse_triple(const SurfaceComplex& c, const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("expected a cycle a,b,c but got '" + text + "'");
  return make_triple(resolve(c, parts[0]), resolve(c, parts[1]), resolve(c, parts[2]));
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated index list but got '" + text + "'");
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::string edge_list(const SurfaceComplex& c, const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += " ";
    out += c.vertex_name(e.a) + "-" + c.vertex_name(e.b);
  }
  return out;
}

int vertex_ceiling() {
  int ceiling = GroundstateOptions{}.vertex_ceiling;
  if (const char* env = std::getenv("TRI_VERTEX_CEILING")) {
    try {
      ceiling = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("TRI_VERTEX_CEILING is not an integer: ") + env);
    }
  }
  return ceiling;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations with non-degenerated antiferromagnetic Ising groundstates"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads (output is identical for every value)")
      ->check(CLI::PositiveNumber);

  std::string input, input_b, output, report_path;

  auto* validate = app.add_subcommand("validate", "Check a tri/1 file and print its invariants");
  validate->add_option("file", input)->required();

  auto* solve = app.add_subcommand("solve", "Count satisfying spin assignments");
  std::vector<std::string> pins, monos, nonmonos;
  bool list = false, oracle = false;
  std::size_t cap = 64;
  solve->add_option("file", input)->required();
  solve->add_option("--pin", pins, "Pin a vertex: v:+ or v:-");
  solve->add_option("--mono", monos, "Require edge u,v monochromatic");
  solve->add_option("--nonmono", nonmonos, "Require edge u,v non-monochromatic");
  solve->add_flag("--list", list, "Print representative states");
  solve->add_flag("--oracle", oracle, "Cross-check against brute force (small inputs)");
  solve->add_option("--cap", cap, "Representative cap");
  solve->add_option("-o,--output", output, "Write an isingreport/1 file");

  auto* ground = app.add_subcommand("groundstate", "Exact minimum energy and degeneracy");
  std::string method = "auto";
  ground->add_option("file", input)->required();
  ground->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "bnb", "auto"}));
  ground->add_flag("--oracle", oracle, "Cross-check against brute force (small inputs)");
  ground->add_flag("--list", list, "Print representative groundstates");
  ground->add_option("--cap", cap, "Representative cap");
  ground->add_option("-o,--output", output, "Write an isingreport/1 file");

  auto* serious = app.add_subcommand("serious-edges", "Edges monochromatic in every satisfying state");
  serious->add_option("file", input)->required();

  auto* delta_cmd = app.add_subcommand("delta", "Write the stack triangulation delta(N)");
  int n = 0;
  bool disk = false;
  delta_cmd->add_option("n", n)->required();
  delta_cmd->add_flag("--disk", disk, "Leave the outer face open as a hole, for gluing");
  delta_cmd->add_option("-o,--output", output);

  auto* puncture = app.add_subcommand("puncture", "Remove faces (by index) from a complex");
  std::string faces_arg;
  bool certify = false;
  puncture->add_option("file", input)->required();
  puncture->add_option("--faces", faces_arg)->required();
  puncture->add_flag("--certify", certify, "Require a unique satisfying pair before and after");
  puncture->add_option("-o,--output", output);

  auto* glue_cmd = app.add_subcommand("glue", "Identify a hole of B with a hole of A");
  std::string cycle_a, cycle_b, edge_a, edge_b;
  glue_cmd->add_option("a", input)->required();
  glue_cmd->add_option("b", input_b)->required();
  glue_cmd->add_option("--cycle-a", cycle_a)->required();
  glue_cmd->add_option("--cycle-b", cycle_b)->required();
  glue_cmd->add_option("--edge-a", edge_a)->required();
  glue_cmd->add_option("--edge-b", edge_b)->required();
  glue_cmd->add_option("-o,--output", output);

  auto* torus = app.add_subcommand("build-torus", "Toroidal triangulation with one satisfying pair");
  int min_vertices = 1;
  torus->add_option("--min-vertices", min_vertices)->required();
  torus->add_option("-o,--output", output);
  torus->add_option("--report", report_path, "Sidecar isingreport/1 with the verified counts");

  auto* genus_cmd = app.add_subcommand("build-genus", "Genus-G triangulation with one satisfying pair");
  int genus = 1;
  genus_cmd->add_option("genus", genus)->required();
  genus_cmd->add_option("--min-vertices", min_vertices)->required();
  genus_cmd->add_option("-o,--output", output);
  genus_cmd->add_option("--report", report_path, "Sidecar isingreport/1 with the verified counts");

  auto* scan = app.add_subcommand("scan-catalog", "Search catalog entries for removable face sets");
  int max_remove = 2;
  scan->add_option("dir", input)->required();
  scan->add_option("--max-remove", max_remove);
  scan->add_option("-o,--output", output, "Write a supportreport/1 file");

  auto* dual_cmd = app.add_subcommand("dual", "Export the dual (or primal) graph");
  bool dot = false, primal = false;
  std::string state_text;
  dual_cmd->add_option("file", input)->required();
  dual_cmd->add_flag("--dot", dot, "Graphviz output")->required();
  dual_cmd->add_flag("--primal", primal, "Export the primal graph instead");
  dual_cmd->add_option("--state", state_text, "Highlight the monochromatic edges of this state");
  dual_cmd->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      const auto doc = read_tri(input);
      const auto& c = doc.complex;
      std::cout << "vertices " << c.vertex_count() << "\n"
                << "edges " << c.edge_count() << "\n"
                << "faces " << c.face_count() << "\n"
                << "holes " << c.hole_count() << "\n"
                << "genus " << euler_genus(c) << "\n"
                << (c.closed() ? "closed" : "punctured") << "\n";
      if (c.closed()) std::cout << "irreducible " << (is_irreducible(c) ? "yes" : "no") << "\n";
    } else if (*solve) {
      const auto c = read_tri(input).complex;
      Constraint constraint;
      for (const auto& p : pins) {
        const auto colon = p.rfind(':');
        if (colon == std::string::npos || colon + 2 != p.size() || (p.back() != '+' && p.back() != '-')) {
          throw UsageError("expected --pin v:+ or v:- but got '" + p + "'");
        }
        constraint.pinned[resolve(c, p.substr(0, colon))] = p.back() == '+' ? 1 : -1;
      }
      for (const auto& m : monos) constraint.required_monochromatic.push_back(parse_edge(c, m));
      for (const auto& m : nonmonos) constraint.required_non_monochromatic.push_back(parse_edge(c, m));
      const auto r = enumerate_satisfying(c, constraint, SolveOptions{cap, jobs});
      std::cout << "satisfying_count " << r.satisfying_count << "\n";
      if (r.pair_count) std::cout << "pair_count " << *r.pair_count << "\n";
      if (r.serious_edges) {
        const auto edges = edge_list(c, *r.serious_edges);
        std::cout << "serious_edges" << (edges.empty() ? "" : " ") << edges << "\n";
      }
      if (list) {
        for (const auto& s : r.representatives) std::cout << "state " << s.to_string() << "\n";
        if (r.truncated) std::cout << "truncated\n";
      }
      if (oracle) {
        const auto expected = brute_force::count_satisfying(c, constraint);
        std::cout << "oracle_count " << expected << "\n";
        if (expected != r.satisfying_count) {
          throw Error(ErrorKind::OracleMismatch, "solver and brute force disagree");
        }
      }
      if (!output.empty()) write_text_file(output, format_ising_report(c, r, std::nullopt));
    } else if (*ground) {
      const auto c = read_tri(input).complex;
      GroundstateOptions opt;
      opt.method = *parse_method(method);
      opt.vertex_ceiling = vertex_ceiling();
      opt.representative_cap = cap;
      opt.jobs = jobs;
      const auto g = groundstates(c, opt);
      std::cout << "method " << method_name(g.method_used) << "\n"
                << "min_energy " << g.min_energy << "\n"
                << "degeneracy " << g.degeneracy << "\n";
      if (list) {
        for (const auto& s : g.representatives) std::cout << "state " << s.to_string() << "\n";
        if (g.truncated) std::cout << "truncated\n";
      }
      if (oracle) {
        const auto [e, d] = brute_force::groundstate(c);
        std::cout << "oracle_min_energy " << e << "\n"
                  << "oracle_degeneracy " << d << "\n";
        if (e != g.min_energy || d != g.degeneracy) {
          throw Error(ErrorKind::OracleMismatch, "groundstate search and brute force disagree");
        }
      }
      if (!output.empty()) write_text_file(output, format_ising_report(c, std::nullopt, g));
    } else if (*serious) {
      const auto c = read_tri(input).complex;
      for (const auto& e : serious_edges(c)) {
        std::cout << c.vertex_name(e.a) << "-" << c.vertex_name(e.b) << "\n";
      }
    } else if (*delta_cmd) {
      const auto d = delta(n);
      const std::string name = "delta(" + std::to_string(n) + ")";
      emit(disk ? format_tri(d.complex, "stack disk " + name) : format_tri(d.plane(), "stack triangulation " + name),
           output);
    } else if (*puncture) {
      const auto c = read_tri(input).complex;
      const auto indices = parse_indices(faces_arg);
      const SurfaceComplex out = certify ? certify_supporting(c, indices).complex : remove_faces(c, indices);
      emit(format_tri(out), output);
    } else if (*glue_cmd) {
      const auto a = read_tri(input).complex;
      const auto b = read_tri(input_b).complex;
      const GluingSpec spec{parse_triple(a, cycle_a), parse_triple(b, cycle_b), parse_edge(a, edge_a),
                            parse_edge(b, edge_b)};
      emit(format_tri(glue(a, b, spec)), output);
    } else if (*torus || *genus_cmd) {
      const auto c = *torus ? build_torus(min_vertices) : build_genus(genus, min_vertices);
      emit(format_tri(c), output);
      if (!report_path.empty()) {
        const auto r = enumerate_satisfying(c, {}, SolveOptions{cap, jobs});
        write_text_file(report_path, format_ising_report(c, r, std::nullopt));
      }
      std::cerr << "vertices " << c.vertex_count() << " genus " << euler_genus(c) << "\n";
    } else if (*scan) {
      std::vector<SupportReport> reports;
      for (const auto& entry : load_catalog(input)) reports.push_back(scan_supportability(entry, max_remove));
      std::cout << "name\tbase_count\tremovable_sets\tconnector\tsupporting\n";
      int supporting = 0;
      for (const auto& r : reports) {
        const bool connector = std::any_of(r.removable_sets.begin(), r.removable_sets.end(),
                                           [](const RemovableSet& s) { return s.connector; });
        std::cout << r.name << "\t" << r.base_satisfying_count << "\t" << r.removable_sets.size() << "\t"
                  << (connector ? "yes" : "no") << "\t" << (r.supporting ? "yes" : "no") << "\n";
        supporting += r.supporting;
      }
      std::cout << "supporting " << supporting << " of " << reports.size() << "\n";
      if (!output.empty()) write_text_file(output, format_support_reports(reports));
    } else if (*dual_cmd) {
      const auto c = read_tri(input).complex;
      std::vector<Edge> highlight;
      if (!state_text.empty()) highlight = frustrated_edges(c, SpinState::parse(state_text));
      emit(primal ? primal_dot(c, highlight) : dual_dot(c, highlight), output);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
