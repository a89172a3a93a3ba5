#include "tri/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tri {

using Json = nlohmann::ordered_json;

namespace {

bool is_scalar_array(const Json& j) {
  for (const auto& x : j) {
    if (x.is_structured()) return false;
  }
  return true;
}

// Objects one key per line; arrays of scalars inline; other arrays one
// element per line.
void pretty(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(key).dump() << ": ";
      pretty(value, indent + 2, os);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array() && !j.empty() && !is_scalar_array(j)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << inner;
      pretty(j[i], indent + 2, os);
    }
    os << "\n" << pad << "]";
  } else {
    os << j.dump();
  }
}

std::string render(const Json& j) {
  std::ostringstream os;
  pretty(j, 0, os);
  os << "\n";
  return os.str();
}

Json triple_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }
Json edge_json(const Edge& e) { return Json::array({e.a, e.b}); }

Json triples_json(const std::vector<Triple>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(triple_json(t));
  return out;
}

Json edges_json(const std::vector<Edge>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(edge_json(e));
  return out;
}

Json states_json(const std::vector<SpinState>& states) {
  Json out = Json::array();
  for (const auto& s : states) out.push_back(s.to_string());
  return out;
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where + ": expected an integer");
  return j.get<int>();
}

Triple as_triple(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) parse_fail(where + ": expected a 3-array");
  return {as_int(j[0], where), as_int(j[1], where), as_int(j[2], where)};
}

Edge as_edge(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) parse_fail(where + ": expected a 2-array");
  return Edge(as_int(j[0], where), as_int(j[1], where));
}

std::vector<Triple> triple_list(const Json& doc, const char* key) {
  std::vector<Triple> out;
  if (!doc.contains(key)) return out;
  if (!doc[key].is_array()) parse_fail(std::string(key) + ": expected an array");
  for (std::size_t i = 0; i < doc[key].size(); ++i) {
    out.push_back(as_triple(doc[key][i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> string_list(const Json& doc, const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  if (!doc[key].is_array()) parse_fail(std::string(key) + ": expected an array");
  for (const auto& x : doc[key]) {
    if (!x.is_string()) parse_fail(std::string(key) + ": expected strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

TriDocument parse_tri(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");
  if (doc.contains("schema") && doc["schema"] != kTriSchema) {
    parse_fail("unsupported schema " + doc["schema"].dump());
  }
  if (!doc.contains("vertices")) parse_fail("missing 'vertices'");
  if (!doc.contains("faces")) parse_fail("missing 'faces'");
  const int vertices = as_int(doc["vertices"], "vertices");

  Marks marks;
  if (doc.contains("marks")) {
    const Json& m = doc["marks"];
    if (!m.is_object()) parse_fail("marks: expected an object");
    if (m.contains("fundamental_edges")) {
      for (const auto& e : m["fundamental_edges"]) marks.fundamental_edges.push_back(as_edge(e, "fundamental_edges"));
    }
    marks.expandable_cycles = triple_list(m, "expandable_cycles");
    marks.connection_cycles = triple_list(m, "connection_cycles");
    marks.provenance = string_list(m, "provenance");
  }
  std::string comment;
  if (doc.contains("comment")) {
    if (!doc["comment"].is_string()) parse_fail("comment: expected a string");
    comment = doc["comment"].get<std::string>();
  }
  return {SurfaceComplex::build(vertices, triple_list(doc, "faces"), triple_list(doc, "holes"),
                                std::move(marks), string_list(doc, "labels")),
          comment};
}

TriDocument read_tri(const std::filesystem::path& path) {
  try {
    return parse_tri(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string format_tri(const SurfaceComplex& c, const std::string& comment) {
  Json doc;
  doc["schema"] = kTriSchema;
  if (!comment.empty()) doc["comment"] = comment;
  doc["vertices"] = c.vertex_count();
  if (!c.labels().empty()) doc["labels"] = c.labels();
  doc["faces"] = triples_json(c.faces());
  if (!c.holes().empty()) doc["holes"] = triples_json(c.holes());
  const Marks& m = c.marks();
  if (!m.empty()) {
    Json marks = Json::object();
    if (!m.fundamental_edges.empty()) marks["fundamental_edges"] = edges_json(m.fundamental_edges);
    if (!m.expandable_cycles.empty()) marks["expandable_cycles"] = triples_json(m.expandable_cycles);
    if (!m.connection_cycles.empty()) marks["connection_cycles"] = triples_json(m.connection_cycles);
    if (!m.provenance.empty()) marks["provenance"] = m.provenance;
    doc["marks"] = marks;
  }
  return render(doc);
}

std::string format_ising_report(const SurfaceComplex& c, const std::optional<SolveReport>& solve,
                                const std::optional<GroundstateReport>& ground) {
  Json doc;
  doc["schema"] = kIsingReportSchema;
  doc["vertices"] = c.vertex_count();
  doc["edges"] = c.edge_count();
  doc["faces"] = c.face_count();
  doc["holes"] = c.hole_count();
  doc["genus"] = euler_genus(c);
  if (solve) {
    Json s;
    s["satisfying_count"] = solve->satisfying_count;
    if (solve->pair_count) s["pair_count"] = *solve->pair_count;
    s["representatives"] = states_json(solve->representatives);
    s["truncated"] = solve->truncated;
    if (solve->serious_edges) s["serious_edges"] = edges_json(*solve->serious_edges);
    doc["solve"] = s;
  }
  if (ground) {
    Json g;
    g["method"] = method_name(ground->method_used);
    g["min_energy"] = ground->min_energy;
    g["degeneracy"] = ground->degeneracy;
    g["representatives"] = states_json(ground->representatives);
    g["truncated"] = ground->truncated;
    doc["groundstate"] = g;
  }
  return render(doc);
}

std::string format_support_reports(const std::vector<SupportReport>& reports) {
  Json doc;
  doc["schema"] = kSupportReportSchema;
  Json entries = Json::array();
  int supporting = 0;
  for (const auto& r : reports) {
    Json e;
    e["name"] = r.name;
    e["base_satisfying_count"] = r.base_satisfying_count;
    e["subsets_scanned"] = r.subsets_scanned;
    e["supporting"] = r.supporting;
    Json sets = Json::array();
    for (const auto& s : r.removable_sets) {
      Json js;
      js["face_indices"] = s.face_indices;
      js["faces"] = triples_json(s.faces);
      js["punctured_count"] = s.punctured_count;
      js["fundamental_edges"] = edges_json(s.fundamental_edges);
      js["connector"] = s.connector;
      sets.push_back(js);
    }
    e["removable_sets"] = sets;
    entries.push_back(e);
    supporting += r.supporting ? 1 : 0;
  }
  doc["supporting_count"] = supporting;
  doc["entries"] = entries;
  return render(doc);
}

std::string primal_dot(const SurfaceComplex& c, const std::vector<Edge>& highlight) {
  std::set<Edge> hole_edges;
  for (const auto& h : c.holes()) {
    for (const auto& e : triple_edges(h)) hole_edges.insert(e);
  }
  std::set<Edge> bold(c.marks().fundamental_edges.begin(), c.marks().fundamental_edges.end());
  bold.insert(highlight.begin(), highlight.end());

  std::ostringstream os;
  os << "graph primal {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    os << "  " << v << " [label=" << Json(c.vertex_name(v)).dump() << "];\n";
  }
  for (const Edge& e : c.edges()) {
    os << "  " << e.a << " -- " << e.b;
    std::vector<std::string> attrs;
    if (hole_edges.count(e)) attrs.push_back("style=dashed");
    if (bold.count(e)) attrs.push_back("penwidth=3");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string dual_dot(const SurfaceComplex& c, const std::vector<Edge>& highlight) {
  const DualGraph d = dual_graph(c);
  const std::set<Edge> bold(highlight.begin(), highlight.end());
  std::ostringstream os;
  os << "graph dual {\n  node [shape=box];\n";
  for (int f = 0; f < d.vertex_count; ++f) {
    const Triple& t = c.faces()[f];
    os << "  f" << f << " [label=\"" << t[0] << "," << t[1] << "," << t[2] << "\"];\n";
  }
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const Edge& e = c.edges()[i];
    os << "  f" << d.edges[i].first << " -- f" << d.edges[i].second << " [label=\"" << e.a << "-" << e.b << "\"";
    if (bold.count(e)) os << ", penwidth=3";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace tri
