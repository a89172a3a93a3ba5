#include <algorithm>
#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "run.hpp"
#include "tri/catalog.hpp"
#include "tri/construct.hpp"

using namespace tri;

namespace {

const std::vector<CatalogEntry>& catalog() {
  static const auto entries = load_catalog(fixtures::data_dir() / "catalog");
  return entries;
}

const std::vector<SupportReport>& reports() {
  static const auto out = [] {
    std::vector<SupportReport> r;
    for (const auto& e : catalog()) r.push_back(scan_supportability(e, 2));
    return r;
  }();
  return out;
}

}  // namespace

TEST_CASE("catalog contents") {
  const auto& entries = catalog();
  REQUIRE(entries.size() == 21);
  std::map<int, int> by_size;
  for (const auto& e : entries) {
    CHECK(e.complex.closed());
    CHECK(euler_genus(e.complex) == 1);
    CHECK(is_irreducible(e.complex));
    ++by_size[e.complex.vertex_count()];
  }
  CHECK(by_size == std::map<int, int>{{7, 1}, {8, 4}, {9, 15}, {10, 1}});
  CHECK(std::is_sorted(entries.begin(), entries.end(),
                       [](const auto& a, const auto& b) { return a.name < b.name; }));
  CHECK(entries.front().name == "irr07_00");
}

TEST_CASE("irreducibility") {
  CHECK_FALSE(is_irreducible(build_torus(12)));
  CHECK(is_irreducible(default_supporting_torus()));
}

TEST_CASE("load_catalog rejects other genera and handles empty directories") {
  const auto dir = run::scratch_dir() / "catalog_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CHECK(load_catalog(dir).empty());
  write_text_file(dir / "single.tri", read_text_file(fixtures::data_dir() / "supporting_torus.tri"));
  const auto one = load_catalog(dir);
  REQUIRE(one.size() == 1);
  CHECK(one.front().name == "single");
  CHECK(euler_genus(one.front().complex) == 1);
  write_text_file(dir / "k4.tri", format_tri(fixtures::k4()));
  try {
    load_catalog(dir);
    FAIL("expected GenusMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GenusMismatch);
    CHECK(std::string(e.what()).find("k4.tri") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("scan of the default supporting torus") {
  const auto& r = reports()[1];
  REQUIRE(r.name == "irr08_00");
  CHECK(r.base_satisfying_count == 2);
  CHECK(r.supporting);
  const auto it = std::find_if(r.removable_sets.begin(), r.removable_sets.end(), [](const RemovableSet& s) {
    return s.faces == std::vector<Triple>{{1, 3, 5}, {2, 4, 6}};
  });
  REQUIRE(it != r.removable_sets.end());
  CHECK(it->connector);
  CHECK(it->punctured_count == 2);
  CHECK(it->fundamental_edges == std::vector<Edge>{Edge(1, 3), Edge(2, 4)});
  CHECK(it->face_indices == default_removable_faces());
}

TEST_CASE("entries without a unique pair are not scanned") {
  const auto& r = reports()[0];
  CHECK(r.base_satisfying_count == 0);
  CHECK(r.subsets_scanned == 0);
  CHECK_FALSE(r.supporting);
}

TEST_CASE("exactly four supporting entries, all re-certifiable") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < catalog().size(); ++i) {
    const auto& r = reports()[i];
    CHECK(r.supporting == !r.removable_sets.empty());
    if (!r.supporting) continue;
    names.push_back(r.name);
    for (const auto& s : r.removable_sets) {
      const auto cert = certify_supporting(catalog()[i].complex, s.face_indices);
      CHECK(cert.complex.hole_count() == static_cast<int>(s.faces.size()));
      for (std::size_t k = 0; k < s.faces.size(); ++k) {
        CHECK(cert.fundamental_edges[*cert.complex.hole_index(s.faces[k])] == s.fundamental_edges[k]);
      }
      CHECK(cert.is_connector() == s.connector);
    }
  }
  CHECK(names == std::vector<std::string>{"irr08_00", "irr08_01", "irr09_00", "irr09_09"});
}

TEST_CASE("scan is monotone and agrees with direct counting") {
  const auto& entry = catalog()[1];
  const auto base = count_satisfying(entry.complex);
  int direct = 0;
  const int f = entry.complex.face_count();
  for (int i = 0; i < f; ++i) {
    for (int j = i; j < f; ++j) {
      std::vector<int> set = i == j ? std::vector<int>{i} : std::vector<int>{i, j};
      try {
        const auto n = count_satisfying(remove_faces(entry.complex, set));
        CHECK(n >= base);
        direct += n == 2;
      } catch (const Error&) {
      }
    }
  }
  CHECK(direct == static_cast<int>(reports()[1].removable_sets.size()));
}

TEST_CASE("scan is deterministic") {
  const auto again = scan_supportability(catalog()[3]);
  CHECK(format_support_reports({again}) == format_support_reports({reports()[3]}));
}
