#include "tri/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tri {

AugmentingTriangulation delta(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "delta(n) needs n >= 1, got " + std::to_string(n));
  const Vertex x = 0;
  const Vertex z = 1;
  auto y = [](int i) { return 2 + i; };

  std::vector<Triple> faces{make_triple(x, y(0), z)};
  for (int i = 1; i <= n; ++i) {
    faces.push_back(make_triple(x, y(i - 1), y(i)));
    faces.push_back(make_triple(y(i - 1), z, y(i)));
  }
  const Triple outer = make_triple(x, y(n), z);
  const Edge fundamental(x, y(n));

  std::vector<std::string> labels{"x", "z"};
  for (int i = 0; i <= n; ++i) labels.push_back("y" + std::to_string(i));

  Marks marks;
  marks.fundamental_edges = {fundamental};
  marks.expandable_cycles = {outer};
  marks.provenance = {"delta(" + std::to_string(n) + ")"};
  AugmentingTriangulation d{SurfaceComplex::build(n + 3, std::move(faces), {outer}, std::move(marks),
                                                  std::move(labels)),
                            fundamental, n};
  if (n <= kDeltaVerificationCeiling) {
    Constraint mono;
    mono.required_monochromatic = {fundamental};
    const auto count = count_satisfying(d.plane(), mono);
    if (count != 2) {
      throw Error(ErrorKind::CertificationLost, "delta(" + std::to_string(n) + ") has " +
                                                    std::to_string(count) +
                                                    " satisfying states with x-y_n monochromatic");
    }
  }
  return d;
}

SurfaceComplex AugmentingTriangulation::plane() const {
  std::vector<Triple> faces = complex.faces();
  faces.push_back(outer_boundary());
  Marks marks;
  marks.fundamental_edges = {fundamental_edge};
  marks.provenance = complex.marks().provenance;
  return SurfaceComplex::build(complex.vertex_count(), std::move(faces), {}, std::move(marks), complex.labels());
}

namespace {

SupportingPuncturedTriangulation certify_with(const SurfaceComplex& punctured,
                                              std::optional<std::pair<Triple, Triple>> preferred) {
  if (punctured.closed()) {
    throw Error(ErrorKind::CertificationLost, "complex has no holes to certify");
  }
  const SolveReport report = enumerate_satisfying(punctured, {}, SolveOptions{1, 1});
  if (report.satisfying_count != 2) {
    throw Error(ErrorKind::CertificationLost, "punctured complex has " +
                                                  std::to_string(report.satisfying_count) +
                                                  " satisfying states (expected 2)");
  }
  SupportingPuncturedTriangulation t{punctured, report.representatives.front(), {}, std::nullopt};
  for (const Triple& h : punctured.holes()) {
    std::vector<Edge> mono;
    for (const Edge& e : triple_edges(h)) {
      if (t.witness[e.a] == t.witness[e.b]) mono.push_back(e);
    }
    if (mono.size() != 1) {
      throw Error(ErrorKind::CertificationLost,
                  "hole " + to_string(h) + " is monochromatic under the witness");
    }
    t.fundamental_edges.push_back(mono.front());
  }

  auto disjoint = [](const Triple& p, const Triple& q) {
    return std::none_of(p.begin(), p.end(), [&](Vertex v) { return triple_contains(q, v); });
  };
  const auto& holes = punctured.holes();
  if (preferred) {
    auto i = punctured.hole_index(preferred->first);
    auto j = punctured.hole_index(preferred->second);
    if (i && j && disjoint(holes[*i], holes[*j])) t.connection_cycles = std::pair{*i, *j};
  }
  for (int i = 0; i < static_cast<int>(holes.size()) && !t.connection_cycles; ++i) {
    for (int j = i + 1; j < static_cast<int>(holes.size()); ++j) {
      if (disjoint(holes[i], holes[j])) {
        t.connection_cycles = std::pair{i, j};
        break;
      }
    }
  }

  Marks marks;
  marks.fundamental_edges = t.fundamental_edges;
  marks.expandable_cycles = holes;
  if (t.connection_cycles) {
    marks.connection_cycles = {holes[t.connection_cycles->first], holes[t.connection_cycles->second]};
  }
  marks.provenance = punctured.marks().provenance;
  t.complex = punctured.with_marks(std::move(marks));
  return t;
}

void require_unique_pair(const SurfaceComplex& c, const std::string& what) {
  const auto count = count_satisfying(c);
  if (count != 2) {
    throw Error(ErrorKind::CertificationLost,
                what + " has " + std::to_string(count) + " satisfying states (expected 2)");
  }
}

}  // namespace

SupportingPuncturedTriangulation certify_punctured(const SurfaceComplex& punctured) {
  return certify_with(punctured, std::nullopt);
}

SupportingPuncturedTriangulation certify_supporting(const SurfaceComplex& closed,
                                                    const std::vector<int>& removable_faces) {
  if (!closed.closed()) {
    throw Error(ErrorKind::RemovalInvalid, "base complex already has holes");
  }
  if (removable_faces.empty()) {
    throw Error(ErrorKind::RemovalInvalid, "removable face set is empty");
  }
  const auto base = count_satisfying(closed);
  if (base != 2) {
    throw Error(ErrorKind::BaseNotUniquelySatisfiable,
                "base complex has " + std::to_string(base) + " satisfying states (expected 2)");
  }
  SurfaceComplex punctured = [&] {
    try {
      return remove_faces(closed, removable_faces);
    } catch (const Error& e) {
      throw Error(ErrorKind::RemovalInvalid, e.what());
    }
  }();
  const auto count = count_satisfying(punctured);
  if (count != 2) {
    throw Error(ErrorKind::RemovalIncreasesSolutions,
                "punctured complex has " + std::to_string(count) + " satisfying states (base has 2)");
  }
  return certify_punctured(punctured);
}

FillResult fill_hole(const SupportingPuncturedTriangulation& t, int hole_index,
                     const AugmentingTriangulation& d, std::optional<Edge> target_edge) {
  if (hole_index < 0 || hole_index >= t.complex.hole_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "hole index " + std::to_string(hole_index) + " not in [0, " +
                                                std::to_string(t.complex.hole_count()) + ")");
  }
  const Triple hole = t.complex.holes()[hole_index];
  const Edge fundamental = t.fundamental_edges[hole_index];
  if (target_edge && *target_edge != fundamental) {
    throw Error(ErrorKind::Misaligned, "edge " + to_string(*target_edge) + " is not the fundamental edge " +
                                           to_string(fundamental) + " of hole " + to_string(hole));
  }
  GlueResult glued = glue_detailed(t.complex, d.complex,
                                   GluingSpec{hole, d.outer_boundary(), fundamental, d.fundamental_edge});
  Marks marks = glued.complex.marks();
  marks.provenance.push_back("hole " + to_string(hole) + " filled with delta(" + std::to_string(d.n) + ")");
  SurfaceComplex result = glued.complex.with_marks(std::move(marks));

  if (result.closed()) {
    require_unique_pair(result, "filled complex");
    return result;
  }

  std::optional<std::pair<Triple, Triple>> preferred;
  if (t.connection_cycles) {
    preferred = std::pair{t.complex.holes()[t.connection_cycles->first],
                          t.complex.holes()[t.connection_cycles->second]};
  }
  SupportingPuncturedTriangulation next = certify_with(result, preferred);
  for (int i = 0; i < t.complex.hole_count(); ++i) {
    if (i == hole_index) continue;
    const int j = *next.complex.hole_index(t.complex.holes()[i]);
    if (next.fundamental_edges[j] != t.fundamental_edges[i]) {
      throw Error(ErrorKind::CertificationLost,
                  "fundamental edge of hole " + to_string(t.complex.holes()[i]) + " changed");
    }
  }
  return next;
}

SupportingPuncturedTriangulation chain_connectors(
    const std::vector<SupportingPuncturedTriangulation>& connectors) {
  if (connectors.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one connector");
  for (const auto& c : connectors) {
    if (!c.is_connector()) throw Error(ErrorKind::InvalidArgument, "chain element is not a connector");
  }
  SupportingPuncturedTriangulation acc = connectors.front();
  const Triple first_in = acc.complex.holes()[acc.connection_cycles->first];
  Triple out = acc.complex.holes()[acc.connection_cycles->second];

  for (std::size_t j = 1; j < connectors.size(); ++j) {
    const auto& next = connectors[j];
    const Triple next_in = next.complex.holes()[next.connection_cycles->first];
    const Triple next_out = next.complex.holes()[next.connection_cycles->second];
    const Edge out_edge = acc.fundamental_edges[*acc.complex.hole_index(out)];
    const Edge in_edge = next.fundamental_edges[next.connection_cycles->first];

    GlueResult glued = glue_detailed(acc.complex, next.complex, GluingSpec{out, next_in, out_edge, in_edge});
    const auto& map = glued.b_to_result;
    const Triple mapped_out = make_triple(map[next_out[0]], map[next_out[1]], map[next_out[2]]);
    Marks marks = glued.complex.marks();
    marks.provenance.push_back("connector " + std::to_string(j + 1) + " chained");
    acc = certify_with(glued.complex.with_marks(std::move(marks)), std::pair{first_in, mapped_out});
    out = mapped_out;
  }
  return acc;
}

std::vector<int> hole_fill_sizes(int base_vertices, int holes, int min_vertices) {
  std::vector<int> sizes(holes, 1);
  const int deficit = std::max(0, min_vertices - base_vertices);
  if (holes == 0 || deficit <= holes) return sizes;
  for (int i = 0; i < holes; ++i) sizes[i] = deficit / holes + (i < deficit % holes ? 1 : 0);
  return sizes;
}

SurfaceComplex fill_all_holes(const SupportingPuncturedTriangulation& t, int min_vertices) {
  const std::vector<Triple> holes = t.complex.holes();
  const auto sizes = hole_fill_sizes(t.complex.vertex_count(), static_cast<int>(holes.size()), min_vertices);
  const int expected = t.complex.vertex_count() + std::accumulate(sizes.begin(), sizes.end(), 0);

  FillResult current = t;
  for (std::size_t k = 0; k < holes.size(); ++k) {
    const auto& punctured = std::get<SupportingPuncturedTriangulation>(current);
    const int index = *punctured.complex.hole_index(holes[k]);
    current = fill_hole(punctured, index, delta(sizes[k]));
  }
  SurfaceComplex result = std::get<SurfaceComplex>(std::move(current));
  if (result.vertex_count() != expected) {
    throw Error(ErrorKind::ResultInvalid, "vertex accounting: got " + std::to_string(result.vertex_count()) +
                                              ", expected " + std::to_string(expected));
  }
  return result;
}

SurfaceComplex build_torus(int min_vertices) { return build_torus(min_vertices, default_connector()); }

SurfaceComplex build_torus(int min_vertices, const SupportingPuncturedTriangulation& base) {
  if (min_vertices < 1) throw Error(ErrorKind::InvalidArgument, "min_vertices must be >= 1");
  if (base.complex.closed() || euler_genus(base.complex) != 1) {
    throw Error(ErrorKind::NoSupportingDataAvailable, "base is not a punctured torus");
  }
  return fill_all_holes(base, min_vertices);
}

SurfaceComplex build_genus(int genus, int min_vertices) {
  return build_genus(genus, min_vertices, default_connector());
}

SurfaceComplex build_genus(int genus, int min_vertices, const SupportingPuncturedTriangulation& base) {
  if (genus < 1) throw Error(ErrorKind::InvalidArgument, "genus must be >= 1");
  if (min_vertices < 1) throw Error(ErrorKind::InvalidArgument, "min_vertices must be >= 1");
  if (genus == 1) return build_torus(min_vertices, base);
  if (!base.is_connector()) {
    throw Error(ErrorKind::NoSupportingDataAvailable, "base has no pair of vertex-disjoint holes");
  }
  const auto chained = chain_connectors(std::vector(static_cast<std::size_t>(genus), base));
  return fill_all_holes(chained, min_vertices);
}

SurfaceComplex default_supporting_torus() {
  std::vector<Triple> faces{
      {0, 1, 2}, {0, 1, 4}, {0, 2, 3}, {0, 3, 4}, {1, 2, 7}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
      {1, 6, 7}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 7}, {4, 6, 7},
  };
  return SurfaceComplex::build(8, std::move(faces), {}, {},
                               {"a", "u", "u~", "v", "v~", "w", "w~", "b"});
}

std::vector<int> default_removable_faces() {
  const SurfaceComplex c = default_supporting_torus();
  return {*c.face_index({1, 3, 5}), *c.face_index({2, 4, 6})};
}

SupportingPuncturedTriangulation default_connector() {
  return certify_supporting(default_supporting_torus(), default_removable_faces());
}

}  // namespace tri
