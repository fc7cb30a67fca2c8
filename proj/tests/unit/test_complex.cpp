#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "vk/complex.hpp"
#include "vk/error.hpp"
#include "vk/group_analysis.hpp"

using vk::CellComplex;
using vk::CellId;
using vk::CellSet;
using vk::ErrorKind;
using vk::Model;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const vk::Error& e) {
    return e.kind();
  }
  FAIL("expected a vk::Error");
  return ErrorKind::io;
}

CellSet named(const CellComplex& x, std::vector<std::string> names) { return CellSet::named(x, names); }

vk::AbelianInvariants pi1(const CellComplex& x) {
  return vk::abelianization(vk::object_group_presentation(x.edge_path_groupoid(), x.vertices().front()));
}

}  // namespace

TEST_CASE("grid sphere cell counts", "[complex]") {
  const CellComplex x = vk::build_space(Model::grid_sphere, 2);
  CHECK(x.vertex_count() == 9);
  CHECK(x.edge_count() == 12);
  CHECK(x.face_count() == 5);
  CHECK(x.euler_characteristic() == 2);
  for (std::size_t n : {1u, 3u, 8u}) {
    const CellComplex y = vk::build_space(Model::grid_sphere, n);
    CHECK(y.vertex_count() == (n + 1) * (n + 1));
    CHECK(y.edge_count() == 2 * n * (n + 1));
    CHECK(y.face_count() == n * n + 1);
  }
}

TEST_CASE("every model has its declared Euler characteristic and pi1", "[complex]") {
  struct Expect {
    Model model;
    std::size_t n;
    vk::AbelianInvariants h1;
  };
  for (const Expect& e : {Expect{Model::grid_sphere, 4, {}}, Expect{Model::cycle, 6, {1, {}}},
                          Expect{Model::interval, 5, {}}, Expect{Model::disk, 3, {}},
                          Expect{Model::annulus, 4, {1, {}}}}) {
    const CellComplex x = vk::build_space(e.model, e.n);
    CAPTURE(vk::to_string(e.model));
    CHECK(x.euler_characteristic() == vk::declared_euler_characteristic(e.model));
    CHECK(pi1(x) == e.h1);
    // rank H1 = 1 - chi + rank H2; H2 is Z exactly for the sphere
    const long h2 = e.model == Model::grid_sphere ? 1 : 0;
    CHECK(static_cast<long>(e.h1.free_rank) == 1 - x.euler_characteristic() + h2);
  }
}

TEST_CASE("model names round-trip", "[complex]") {
  for (Model m : {Model::grid_sphere, Model::cycle, Model::interval, Model::disk, Model::annulus}) {
    CHECK(vk::parse_model(vk::to_string(m)) == m);
  }
  CHECK(kind_of([] { vk::parse_model("torus"); }) == ErrorKind::parameter);
  CHECK(kind_of([] { vk::build_space(Model::grid_sphere, 0); }) == ErrorKind::parameter);
}

TEST_CASE("complex constructor validation", "[complex]") {
  CHECK(kind_of([] { CellComplex({"v", "w"}, {{"v", "v", "w"}}, {}); }) == ErrorKind::name);
  CHECK(kind_of([] { CellComplex({"v"}, {{"e", "v", "v"}}, {{"f", vk::Word{"v", {}}}}); }) ==
        ErrorKind::relation_shape);
  CHECK(kind_of([] {
          CellComplex({"v", "w"}, {{"e", "v", "w"}}, {{"f", vk::Word{"v", {{"e", 1}}}}});
        }) == ErrorKind::relation_shape);
  const CellComplex x = vk::build_space(Model::interval, 2);
  CHECK(kind_of([&] { x.cell("nope"); }) == ErrorKind::name);
  CHECK(x.find("e1").value() == x.edge_cell(1));
}

TEST_CASE("boundary, coboundary and closure", "[complex]") {
  const CellComplex x = vk::build_space(Model::grid_sphere, 1);
  const CellId f0 = x.cell("f0");
  CHECK(x.dimension(f0) == 2);
  CHECK(x.boundary(f0).size() == 4);
  CHECK(x.proper_faces(f0).size() == 8);
  const CellId v0 = x.cell("v0");
  CHECK(x.coboundary(v0).size() == 2);
  CHECK(x.boundary(v0).empty());

  const CellSet e = named(x, {"e0"});
  CHECK_FALSE(vk::is_closed(x, e));
  CHECK(vk::closure(x, e) == named(x, {"e0", "v0", "v1"}));
  CHECK(vk::is_closed(x, vk::closure(x, CellSet::of(x.cell_count(), std::vector<CellId>{f0}))));
  CHECK(vk::closure(x, CellSet::of(x.cell_count(), std::vector<CellId>{f0})).size() == 9);
}

TEST_CASE("cell set algebra", "[complex]") {
  const CellSet a = CellSet::of(6, std::vector<CellId>{0, 1, 2});
  const CellSet b = CellSet::of(6, std::vector<CellId>{2, 3});
  CHECK(a.united(b).members() == std::vector<CellId>{0, 1, 2, 3});
  CHECK(a.intersected(b).members() == std::vector<CellId>{2});
  CHECK_FALSE(a.disjoint(b));
  CHECK(a.complement().members() == std::vector<CellId>{3, 4, 5});
  CHECK(a.intersected(b).subset_of(a));
  CHECK(kind_of([] { CellSet::of(2, std::vector<CellId>{5}); }) == ErrorKind::name);
}

TEST_CASE("fundamental groupoid basepoints", "[complex]") {
  const CellComplex x = vk::build_space(Model::cycle, 4);
  CHECK(kind_of([&] { vk::fundamental_groupoid_presentation(x, {}); }) == ErrorKind::connectivity);
  CHECK(kind_of([&] { vk::fundamental_groupoid_presentation(x, {"zz"}); }) == ErrorKind::unknown_object);
  const auto g = vk::fundamental_groupoid_presentation(x, {"v0", "v2"});
  CHECK(g.basepoints == std::vector<std::string>{"v0", "v2"});

  const CellComplex two({"a", "b"}, {}, {});
  CHECK(kind_of([&] { vk::fundamental_groupoid_presentation(two, {"a"}); }) == ErrorKind::connectivity);
}

TEST_CASE("complement components on the cycle", "[complex]") {
  const CellComplex x = vk::build_space(Model::cycle, 8);
  const auto one = vk::complement_components(x, named(x, {"v0"}));
  CHECK(one.count() == 1);
  CHECK(one.part_of[x.cell("v0")] == -1);
  CHECK(vk::component_boundary(x, one.parts[0]) == named(x, {"v0"}));

  const auto two = vk::complement_components(x, named(x, {"v0", "v4"}));
  REQUIRE(two.count() == 2);
  CHECK(two.parts[0].front() == x.cell("v1"));
  CHECK(vk::component_boundary(x, two.parts[1]) == named(x, {"v0", "v4"}));

  const auto none = vk::complement_components(x, CellSet(x.cell_count()).complement());
  CHECK(none.count() == 0);
}

TEST_CASE("complement components agree with union-find", "[complex]") {
  const CellComplex x = vk::build_space(Model::grid_sphere, 6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CellSet curve = vk::random_simple_cycle(x, seed, {4, 40, 10000});
    const auto parts = vk::complement_components(x, curve);
    CHECK(parts.count() == oracle::union_find_count(x, curve));
    const auto labels = oracle::union_find_labels(x, curve);
    for (CellId c = 0; c < x.cell_count(); ++c) {
      for (CellId d = c + 1; d < x.cell_count(); d += 7) {
        if (curve.contains(c) || curve.contains(d)) continue;
        CHECK((parts.part_of[c] == parts.part_of[d]) == (labels[c] == labels[d]));
      }
    }
    for (CellId c = 0; c < x.cell_count(); ++c) {
      if (curve.contains(c)) continue;
      const CellId p = parts.witness_parent[c];
      CHECK(parts.part_of[p] == parts.part_of[c]);
      if (p != c) {
        const auto b = x.boundary(c);
        const auto cb = x.coboundary(c);
        CHECK((std::find(b.begin(), b.end(), p) != b.end() || std::find(cb.begin(), cb.end(), p) != cb.end()));
      }
    }
  }
}

TEST_CASE("tracing cycles and arcs", "[complex]") {
  const CellComplex x = vk::build_space(Model::cycle, 4);
  const CellSet all = CellSet(x.cell_count()).complement();
  CHECK(vk::is_simple_cycle(x, all));
  CHECK(vk::trace_cycle(x, all).cells == std::vector<CellId>{0, 4, 1, 5, 2, 6, 3, 7});
  CHECK(vk::cells_of(x, vk::trace_cycle(x, all)) == all);
  CHECK_FALSE(vk::is_arc(x, all));
  CHECK(kind_of([&] { vk::trace_arc(x, all); }) == ErrorKind::shape);

  const CellSet arc = named(x, {"v3", "e2", "v2", "e1", "v1"});
  CHECK(vk::is_arc(x, arc));
  const auto path = vk::trace_arc(x, arc);
  CHECK(path.cells == std::vector<CellId>{1, 5, 2, 6, 3});
  CHECK(path.edge_count() == 2);
  CHECK(vk::trace_arc(x, named(x, {"v2"})).edge_count() == 0);
  CHECK_FALSE(vk::is_simple_cycle(x, arc));
  CHECK(kind_of([&] { vk::trace_cycle(x, arc); }) == ErrorKind::shape);
  CHECK_FALSE(vk::is_arc(x, named(x, {"v0", "v2"})));
}

TEST_CASE("random cycles are simple, bounded and seed-deterministic", "[complex]") {
  const CellComplex x = vk::build_space(Model::grid_sphere, 8);
  const vk::CycleBounds bounds{6, 30, 10000};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const CellSet c = vk::random_simple_cycle(x, seed, bounds);
    CHECK(c == vk::random_simple_cycle(x, seed, bounds));
    REQUIRE(vk::is_simple_cycle(x, c));
    const std::size_t length = vk::trace_cycle(x, c).edge_count();
    CHECK(length >= bounds.min_length);
    CHECK(length <= bounds.max_length);
  }
  CHECK(kind_of([&] { vk::random_simple_cycle(x, 0, {10, 5, 10}); }) == ErrorKind::parameter);
  const CellComplex line = vk::build_space(Model::interval, 4);
  CHECK(kind_of([&] { vk::random_simple_cycle(line, 0, {4, 8, 20}); }) == ErrorKind::generation_failure);
}
