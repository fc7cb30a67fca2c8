#include "catch_amalgamated.hpp"
#include "vk/error.hpp"
#include "vk/group_analysis.hpp"

using vk::AbelianInvariants;
using vk::GroupPresentation;
using vk::Integer;
using vk::Letters;

namespace {

Letters power(const std::string& g, int n) {
  Letters w;
  for (int k = 0; k < std::abs(n); ++k) w.push_back({g, n > 0 ? 1 : -1});
  return w;
}

Letters commutator(const std::string& a, const std::string& b) { return {{a, 1}, {b, 1}, {a, -1}, {b, -1}}; }

}  // namespace

TEST_CASE("validate rejects malformed presentations", "[group]") {
  CHECK_THROWS_AS(vk::validate(GroupPresentation{{"a", "a"}, {}}), vk::Error);
  CHECK_THROWS_AS(vk::validate(GroupPresentation{{"a"}, {{{"b", 1}}}}), vk::Error);
  CHECK_THROWS_AS(vk::validate(GroupPresentation{{"a"}, {{{"a", 2}}}}), vk::Error);
  CHECK_NOTHROW(vk::validate(GroupPresentation{{"a"}, {{{"a", -1}}}}));
}

TEST_CASE("relator_matrix records exponent sums", "[group]") {
  const GroupPresentation p{{"a", "b"}, {{{"a", 1}, {"b", 1}, {"a", 1}, {"b", -1}}, commutator("a", "b")}};
  CHECK(vk::relator_matrix(p) == vk::IntegerMatrix::from_dense({{2, 0}, {0, 0}}));
}

TEST_CASE("abelianization of standard groups", "[group]") {
  CHECK(vk::abelianization({{}, {}}) == AbelianInvariants{});
  CHECK(vk::abelianization({{"a"}, {}}) == AbelianInvariants{1, {}});
  CHECK(vk::abelianization({{"a", "b"}, {}}) == AbelianInvariants{2, {}});
  CHECK(vk::abelianization({{"a"}, {power("a", 6)}}) == AbelianInvariants{0, {Integer(6)}});
  CHECK(vk::abelianization({{"a", "b"}, {commutator("a", "b")}}) == AbelianInvariants{2, {}});
  const AbelianInvariants klein = vk::abelianization({{"a", "b"}, {{{"a", 1}, {"b", 1}, {"a", 1}, {"b", -1}}}});
  CHECK(klein == AbelianInvariants{1, {Integer(2)}});
  CHECK(vk::format_invariants(klein) == "Z + Z/2");
  CHECK(vk::abelianization({{"a", "b"}, {power("a", 2), power("b", 3)}}) == AbelianInvariants{0, {Integer(6)}});
  CHECK(vk::abelianization({{"a", "b"}, {power("a", 2), power("b", 4)}}) ==
        AbelianInvariants{0, {Integer(2), Integer(4)}});
  CHECK(vk::abelianization({{"a"}, {{}}}) == AbelianInvariants{1, {}});
}

TEST_CASE("format_invariants", "[group]") {
  CHECK(vk::format_invariants({}) == "0");
  CHECK(vk::format_invariants({1, {}}) == "Z");
  CHECK(vk::format_invariants({3, {}}) == "Z^3");
  CHECK(vk::format_invariants({0, {Integer(2), Integer(4)}}) == "Z/2 + Z/4");
}

TEST_CASE("z-retract check is one-sided", "[group]") {
  using vk::ZRetractVerdict;
  CHECK(vk::no_z_retract_sufficient({{"a"}, {power("a", 5)}}) == ZRetractVerdict::certified_no_z_retract);
  CHECK(vk::no_z_retract_sufficient({{}, {}}) == ZRetractVerdict::certified_no_z_retract);
  CHECK(vk::no_z_retract_sufficient({{"a"}, {}}) == ZRetractVerdict::inconclusive);
  CHECK(vk::no_z_retract_sufficient({{"a", "b"}, {commutator("a", "b")}}) == ZRetractVerdict::inconclusive);
  CHECK(vk::to_string(ZRetractVerdict::certified_no_z_retract) == "certified_no_Z_retract");
}

TEST_CASE("tietze moves preserve the abelianization", "[group]") {
  const GroupPresentation z{{"a", "b"}, {{{"a", 1}, {"b", -1}}}};
  const auto zs = vk::tietze_simplify(z, 10);
  CHECK(zs.generators.size() == 1);
  CHECK(zs.relators.empty());

  CHECK(vk::tietze_simplify(z, 0) == z);

  const GroupPresentation conj{{"a", "b"}, {{{"b", 1}, {"a", 1}, {"a", 1}, {"b", -1}}}};
  const auto cs = vk::tietze_simplify(conj, 1);
  CHECK(cs.relators[0] == power("a", 2));

  const GroupPresentation empty_rel{{"a"}, {{}}};
  CHECK(vk::tietze_simplify(empty_rel, 5) == GroupPresentation{{"a"}, {}});

  const std::vector<GroupPresentation> samples{
      {{"a", "b", "c"}, {{{"a", 1}, {"b", 1}, {"c", 1}}, power("a", 4), commutator("a", "b")}},
      {{"a", "b"}, {{{"a", 1}, {"b", 1}, {"a", 1}, {"b", -1}}}},
      {{"x", "y", "z"}, {{{"x", 1}, {"y", 1}, {"x", -1}, {"z", -1}}, power("y", 3)}},
  };
  for (const auto& p : samples) {
    const auto q = vk::tietze_simplify(p, 20);
    CHECK_NOTHROW(vk::validate(q));
    CHECK(vk::abelianization(q) == vk::abelianization(p));
    CHECK(q.generators.size() <= p.generators.size());
  }
}
