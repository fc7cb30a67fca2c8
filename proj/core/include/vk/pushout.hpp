#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vk/group_analysis.hpp"
#include "vk/groupoid.hpp"

namespace vk {

/// An identity-on-objects morphism given on generators.
struct GroupoidMorphismData {
  std::map<ObjectId, ObjectId> object_map;
  std::map<ArrowId, Word> arrow_map;

  friend bool operator==(const GroupoidMorphismData&, const GroupoidMorphismData&) = default;
};

/// A square C -> A, C -> B of groupoids over the object set J, with C
/// totally disconnected and A, B connected.
struct PushoutInput {
  std::vector<ObjectId> objects;  // J
  ObjectId basepoint;             // p
  GroupoidPresentation c;
  GroupoidPresentation a;
  GroupoidPresentation b;
  GroupoidMorphismData i;  // C -> A
  GroupoidMorphismData j;  // C -> B

  friend bool operator==(const PushoutInput&, const PushoutInput&) = default;
};

/// Where a gluing relator came from: the generating loop gamma of C(x, x).
struct RelatorProvenance {
  std::size_t relator_index = 0;
  ObjectId object;
  ArrowId loop;
};

struct PushoutResult {
  /// Presentation of G(p): A(p) generators, then B(p) generators, then f_x.
  GroupPresentation presentation;
  std::vector<std::string> a_generators;
  std::vector<std::string> b_generators;
  /// One per x in J other than p, in J order; f_p = 1 is realised by omission.
  std::vector<std::string> f_generators;
  std::map<std::string, ObjectId> f_object;
  /// f_x = beta_x . alpha_x^-1 (left-to-right) as a word in A * B.
  std::map<std::string, Word> f_definition;
  SpanningTreeData a_tree;
  SpanningTreeData b_tree;
  /// Index maps from A / B arrow ids to their names in A * B and G(p).
  std::map<ArrowId, ArrowId> a_names;
  std::map<ArrowId, ArrowId> b_names;
  std::size_t a_relator_count = 0;
  std::size_t b_relator_count = 0;
  std::vector<RelatorProvenance> gluing;
  std::vector<ObjectId> objects;
  ObjectId basepoint;
};

/// Checks the hypotheses and returns a copy with identity object maps filled in.
PushoutInput validate_pushout_input(const PushoutInput& input);

/// A * B with one relation reduce(i(gamma) . j(gamma)^-1) per generating loop of C.
GroupoidPresentation groupoid_pushout_presentation(const PushoutInput& input);

/// G(p) as (A(p) * B(p) * F) / gluing relators r(i gamma) f_x^-1 s(j gamma)^-1 f_x.
PushoutResult pushout_object_group(const PushoutInput& input);
/// Same, with caller-chosen spanning trees of A and B rooted at p.
PushoutResult pushout_object_group(const PushoutInput& input, const SpanningTreeData& a_tree,
                                   const SpanningTreeData& b_tree);

/// The retraction onto F: drops A(p)- and B(p)-letters, keeps f-letters, reduces.
Letters retraction_rho(const PushoutResult& result, std::span<const Letter> w);

/// Nontrivial when |J| >= 2, nonabelian when |J| >= 3. Checks that rho kills
/// every relator before issuing anything.
Certificate certify(const PushoutResult& result);

}  // namespace vk
