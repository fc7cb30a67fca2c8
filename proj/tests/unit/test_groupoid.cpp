#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "vk/error.hpp"
#include "vk/group_analysis.hpp"
#include "vk/groupoid.hpp"

using vk::Arrow;
using vk::ErrorKind;
using vk::GroupoidPresentation;
using vk::Letters;
using vk::Word;

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

GroupoidPresentation cycle_groupoid(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < n; ++k) objects.push_back("x" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) arrows.push_back({"a" + std::to_string(k), objects[k], objects[(k + 1) % n]});
  return GroupoidPresentation(objects, arrows);
}

}  // namespace

TEST_CASE("constructor enforces structural invariants", "[groupoid]") {
  CHECK(kind_of([] { GroupoidPresentation({"p", "p"}, {}); }) == ErrorKind::name);
  CHECK(kind_of([] { GroupoidPresentation({"p"}, {{"a", "p", "q"}}); }) == ErrorKind::unknown_object);
  CHECK(kind_of([] { GroupoidPresentation({"p", "q"}, {{"a", "p", "q"}, {"a", "q", "p"}}); }) == ErrorKind::name);
  CHECK(kind_of([] {
          GroupoidPresentation({"p", "q"}, {{"a", "p", "q"}}, {Word{"p", {{"a", 1}}}});
        }) == ErrorKind::relation_shape);
  try {
    GroupoidPresentation({"p", "q"}, {{"a", "p", "q"}}, {Word{"p", {{"a", 1}, {"a", -1}}}, Word{"p", {{"a", 1}}}});
    FAIL("non-loop relation accepted");
  } catch (const vk::Error& e) {
    CHECK(std::string(e.what()).find("relation 1") != std::string::npos);
  }
}

TEST_CASE("end_of follows letters and names the first bad index", "[groupoid]") {
  const GroupoidPresentation g({"p", "q", "r"}, {{"a", "p", "q"}, {"b", "q", "r"}});
  CHECK(g.end_of(Word{"p", {}}) == "p");
  CHECK(g.end_of(Word{"p", {{"a", 1}, {"b", 1}}}) == "r");
  CHECK(g.end_of(Word{"r", {{"b", -1}, {"a", -1}}}) == "p");
  try {
    g.end_of(Word{"p", {{"a", 1}, {"a", 1}}});
    FAIL("composition accepted");
  } catch (const vk::Error& e) {
    CHECK(e.kind() == ErrorKind::composition);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("reduce_word keeps endpoints", "[groupoid]") {
  const GroupoidPresentation g({"p", "q", "r", "s"}, {{"a", "p", "q"}, {"b", "q", "r"}, {"c", "q", "s"}});
  CHECK(vk::reduce_word(g, Word{"p", {}}) == Word{"p", {}});
  CHECK(vk::reduce_word(g, Word{"p", {{"a", 1}, {"a", -1}}}) == Word{"p", {}});
  const Word w{"p", {{"a", 1}, {"b", 1}, {"b", -1}, {"c", 1}}};
  CHECK(vk::reduce_word(g, w) == Word{"p", {{"a", 1}, {"c", 1}}});
  CHECK(oracle::all_cancellation_results(w.letters).size() == 1);
  CHECK(kind_of([&] { vk::reduce_word(g, Word{"p", {{"b", 1}}}); }) == ErrorKind::composition);
}

TEST_CASE("connected_components matches a BFS oracle", "[groupoid]") {
  const GroupoidPresentation none({"1", "2"}, {});
  CHECK(vk::connected_components(none) == std::vector<std::vector<std::string>>{{"1"}, {"2"}});
  const GroupoidPresentation two({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "3", "4"}});
  CHECK(vk::connected_components(two) == std::vector<std::vector<std::string>>{{"1", "2"}, {"3", "4"}});
  const auto square = cycle_groupoid(4);
  CHECK(vk::connected_components(square).size() == 1);

  const GroupoidPresentation mixed({"a", "b", "c", "d", "e", "f"},
                                   {{"x", "e", "a"}, {"y", "c", "f"}, {"z", "f", "d"}, {"w", "b", "b"}});
  std::set<std::set<std::string>> parts;
  for (const auto& part : vk::connected_components(mixed)) parts.insert({part.begin(), part.end()});
  CHECK(parts == oracle::bfs_partition(mixed.objects(), mixed.arrows()));
}

TEST_CASE("spanning_tree is breadth-first with lowest arrow first", "[groupoid]") {
  const GroupoidPresentation point({"p"}, {});
  CHECK(vk::spanning_tree(point, "p").tau("p") == Word{"p", {}});

  const GroupoidPresentation path({"p", "q", "s"}, {{"a", "p", "q"}, {"b", "q", "s"}});
  const auto t = vk::spanning_tree(path, "p");
  CHECK(t.tau("p").letters.empty());
  CHECK(t.tau("q").letters == Letters{{"a", 1}});
  CHECK(t.tau("s").letters == Letters{{"a", 1}, {"b", 1}});

  const GroupoidPresentation parallel({"p", "q"}, {{"a1", "p", "q"}, {"a2", "p", "q"}});
  CHECK(vk::spanning_tree(parallel, "p").tau("q").letters == Letters{{"a1", 1}});

  const GroupoidPresentation backwards({"p", "q"}, {{"a", "q", "p"}});
  CHECK(vk::spanning_tree(backwards, "p").tau("q").letters == Letters{{"a", -1}});

  CHECK(kind_of([&] { vk::spanning_tree(path, "zz"); }) == ErrorKind::unknown_object);
}

TEST_CASE("spanning_tree_from_arrows validates the tree", "[groupoid]") {
  const auto square = cycle_groupoid(4);
  const std::vector<std::string> good{"a1", "a2", "a3"};
  const auto t = vk::spanning_tree_from_arrows(square, "x0", good);
  CHECK(t.tau("x1").letters == Letters{{"a3", -1}, {"a2", -1}, {"a1", -1}});
  CHECK(square.end_of(t.tau("x1")) == "x1");
  const std::vector<std::string> short_tree{"a1", "a2"};
  CHECK(kind_of([&] { vk::spanning_tree_from_arrows(square, "x0", short_tree); }) == ErrorKind::shape);
  const std::vector<std::string> with_cycle{"a0", "a1", "a2", "a3"};
  CHECK(kind_of([&] { vk::spanning_tree_from_arrows(square, "x0", with_cycle); }) == ErrorKind::shape);
}

TEST_CASE("retract_arrow conjugates by tree words", "[groupoid]") {
  const GroupoidPresentation one({"p", "q"}, {{"a", "p", "q"}});
  const auto t1 = vk::spanning_tree(one, "p");
  CHECK(vk::retract_arrow(one, t1, Word{"p", {{"a", 1}}}).letters.empty());

  const GroupoidPresentation two({"p", "q"}, {{"a", "p", "q"}, {"b", "p", "q"}});
  const auto t2 = vk::spanning_tree(two, "p");
  CHECK(vk::retract_arrow(two, t2, Word{"p", {{"b", 1}}}).letters == Letters{{"b", 1}, {"a", -1}});
  const Word loop{"p", {{"b", 1}, {"a", -1}, {"a", 1}, {"a", -1}}};
  CHECK(vk::retract_arrow(two, t2, loop).letters == vk::free_reduce(loop.letters));

  const GroupoidPresentation split({"p", "q", "r"}, {{"a", "p", "q"}, {"c", "r", "r"}});
  CHECK(kind_of([&] { vk::retract_arrow(split, vk::spanning_tree(split, "p"), Word{"r", {{"c", 1}}}); }) ==
        ErrorKind::component);
}

TEST_CASE("retraction laws on a small groupoid", "[groupoid]") {
  const GroupoidPresentation g({"p", "q", "r"}, {{"a", "p", "q"}, {"b", "q", "r"}, {"c", "p", "r"}, {"d", "r", "q"}});
  const auto t = vk::spanning_tree(g, "p");
  for (const auto& y : g.objects()) CHECK(vk::retract_arrow(g, t, t.tau(y)).letters.empty());
  const Word gw{"q", {{"b", 1}, {"d", 1}}};
  const Word hw{"q", {{"a", -1}, {"c", 1}}};
  const auto lhs = vk::retract_arrow(g, t, g.compose(gw, hw)).letters;
  const auto rhs = vk::free_reduce(vk::concat(vk::retract_arrow(g, t, gw).letters, vk::retract_arrow(g, t, hw).letters));
  CHECK(lhs == rhs);
}

TEST_CASE("object_group_presentation follows the tree retraction", "[groupoid]") {
  for (std::size_t n : {1u, 3u, 6u}) {
    const auto p = vk::object_group_presentation(cycle_groupoid(n), "x0");
    CHECK(p.generators.size() == 1);
    CHECK(p.relators.empty());
  }
  const GroupoidPresentation tree({"p", "q", "r"}, {{"a", "p", "q"}, {"b", "r", "q"}});
  const auto tp = vk::object_group_presentation(tree, "q");
  CHECK(tp.generators.empty());
  CHECK(tp.relators.empty());

  const GroupoidPresentation cube({"p"}, {{"a", "p", "p"}}, {Word{"p", {{"a", 1}, {"a", 1}, {"a", 1}}}});
  const auto cp = vk::object_group_presentation(cube, "p");
  CHECK(vk::format_presentation(cp) == "⟨a | a^3⟩");
  CHECK(vk::abelianization(cp).torsion == std::vector<vk::Integer>{3});

  const GroupoidPresentation dense({"p", "q", "r", "s"},
                                   {{"a", "p", "q"}, {"b", "q", "r"}, {"c", "r", "s"}, {"d", "s", "p"},
                                    {"e", "p", "r"}, {"f", "q", "s"}, {"g", "q", "q"}});
  CHECK(vk::object_group_presentation(dense, "p").generators.size() == 7 - 4 + 1);
}

TEST_CASE("object groups agree across spanning trees", "[groupoid]") {
  const GroupoidPresentation g({"p", "q", "r"}, {{"a", "p", "q"}, {"b", "q", "r"}, {"c", "p", "r"}, {"d", "r", "q"}},
                               {Word{"q", {{"b", 1}, {"d", 1}, {"b", 1}, {"d", 1}}},
                                Word{"p", {{"a", 1}, {"b", 1}, {"c", -1}, {"a", 1}, {"b", 1}, {"c", -1}, {"a", 1}, {"b", 1}, {"c", -1}}}});
  const auto bfs = vk::abelianization(vk::object_group_presentation(g, "p"));
  for (const std::vector<std::string>& arrows :
       {std::vector<std::string>{"a", "b"}, {"a", "d"}, {"c", "d"}, {"c", "b"}, {"a", "c"}}) {
    const auto tree = vk::spanning_tree_from_arrows(g, "p", arrows);
    CHECK(vk::abelianization(vk::object_group_presentation(g, tree)) == bfs);
  }
}

TEST_CASE("free products rename colliding arrows", "[groupoid]") {
  const GroupoidPresentation g({"p"}, {{"a", "p", "p"}});
  const GroupoidPresentation h({"p"}, {{"b", "p", "p"}});
  const auto gh = vk::free_product(g, h);
  CHECK(gh.relations().empty());
  CHECK(vk::object_group_presentation(gh, "p").generators.size() == 2);

  const GroupoidPresentation id({"p"}, {});
  CHECK(vk::free_product(g, id) == g);

  const GroupoidPresentation t({"p", "q"}, {{"x", "p", "q"}});
  const GroupoidPresentation s({"p", "q"}, {{"x", "p", "q"}});
  const auto fp = vk::free_product_with_names(t, s, "T", "S");
  CHECK(fp.left_names.at("x") == "x.T");
  CHECK(fp.right_names.at("x") == "x.S");
  const auto ts = vk::object_group_presentation(fp.presentation, "p");
  CHECK(ts.generators.size() == 1);
  CHECK(ts.relators.empty());
}

TEST_CASE("quotient_by_relations adds loops", "[groupoid]") {
  const GroupoidPresentation g({"p", "q"}, {{"a", "p", "p"}, {"t", "p", "q"}, {"b", "q", "q"}});
  CHECK(vk::quotient_by_relations(g, {}) == g);
  const auto sq = vk::quotient_by_relations(g, {{"p", {Word{"p", {{"a", 1}, {"a", 1}}}}}});
  const auto pa = vk::object_group_presentation(sq, "p");
  CHECK(vk::abelianization(pa).torsion == std::vector<vk::Integer>{2});

  const auto at_q = vk::quotient_by_relations(g, {{"q", {Word{"q", {{"b", 1}, {"b", 1}, {"b", 1}}}}}});
  const auto pq = vk::object_group_presentation(at_q, "p");
  REQUIRE(pq.relators.size() == 1);
  CHECK(pq.relators[0] == Letters{{"b", 1}, {"b", 1}, {"b", 1}});

  CHECK(kind_of([&] { vk::quotient_by_relations(g, {{"p", {Word{"p", {{"t", 1}}}}}}); }) ==
        ErrorKind::relation_shape);
  CHECK(kind_of([&] { vk::quotient_by_relations(g, {{"zz", {}}}); }) == ErrorKind::unknown_object);
}

TEST_CASE("restrict_to_objects keeps object groups", "[groupoid]") {
  const GroupoidPresentation g({"p", "m", "q"}, {{"a", "p", "m"}, {"b", "m", "q"}, {"c", "m", "q"}});
  const std::vector<std::string> j{"p", "q"};
  const auto r = vk::restrict_to_objects(g, j);
  CHECK(r.presentation().objects() == j);
  CHECK(vk::connected_components(r.presentation()).size() == 1);
  CHECK(vk::abelianization(vk::object_group_presentation(r.presentation(), "p")) ==
        vk::abelianization(vk::object_group_presentation(g, "p")));
  const Word through{"p", {{"a", 1}, {"c", 1}}};
  const Word image = r.map_word(through);
  CHECK(r.presentation().end_of(image) == "q");
  CHECK(g.end_of(r.realize(image)) == "q");
}
