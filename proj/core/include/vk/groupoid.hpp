#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vk/words.hpp"

namespace vk {

using ObjectId = std::string;
using ArrowId = std::string;

struct Arrow {
  ArrowId id;
  ObjectId src;
  ObjectId tgt;

  bool is_loop() const { return src == tgt; }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A groupoid element written as a composable sequence of signed arrows.
/// Composition is diagrammatic: `a b` means "first a, then b".
struct Word {
  ObjectId start;
  Letters letters;

  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// A group given by generators and relator words over them.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Letters> relators;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Throws ErrorKind::name for duplicate generators, bad signs, or relators
/// mentioning undeclared generators.
void validate(const GroupPresentation& p);

/// `⟨a, b | a^2 b^-1⟩`
std::string format_presentation(const GroupPresentation& p);

/// Objects, generating arrows, and loop relations. Immutable once built; the
/// constructor enforces every structural invariant.
class GroupoidPresentation {
 public:
  GroupoidPresentation() = default;
  GroupoidPresentation(std::vector<ObjectId> objects, std::vector<Arrow> arrows,
                       std::vector<Word> relations = {});

  const std::vector<ObjectId>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Word>& relations() const { return relations_; }

  bool has_object(const ObjectId& x) const { return object_index_.contains(x); }
  std::optional<std::size_t> object_index(const ObjectId& x) const;
  std::optional<std::size_t> arrow_index(const ArrowId& a) const;
  const Arrow& arrow(const ArrowId& a) const;

  /// End object of a word; throws ErrorKind::composition naming the first bad letter.
  ObjectId end_of(const Word& w) const;
  bool is_loop(const Word& w) const { return end_of(w) == w.start; }
  Word inverse(const Word& w) const;
  Word compose(const Word& a, const Word& b) const;

  friend bool operator==(const GroupoidPresentation& a, const GroupoidPresentation& b) {
    return a.objects_ == b.objects_ && a.arrows_ == b.arrows_ && a.relations_ == b.relations_;
  }

 private:
  std::vector<ObjectId> objects_;
  std::vector<Arrow> arrows_;
  std::vector<Word> relations_;
  std::unordered_map<ObjectId, std::size_t> object_index_;
  std::unordered_map<ArrowId, std::size_t> arrow_index_;
};

/// Loops to impose at each object: R = {R(x)}.
using RelationFamily = std::map<ObjectId, std::vector<Word>>;

/// Tree words tau_y from a basepoint to every object of its component,
/// stored as parent links; `tau` materialises a word on demand.
class SpanningTreeData {
 public:
  const ObjectId& basepoint() const { return basepoint_; }
  /// Objects of the component in discovery order (basepoint first).
  const std::vector<ObjectId>& objects() const { return order_; }
  const std::vector<ArrowId>& tree_arrows() const { return tree_arrows_; }

  bool reaches(const ObjectId& y) const { return y == basepoint_ || parent_.contains(y); }
  bool is_tree_arrow(const ArrowId& a) const { return tree_set_.contains(a); }

  /// tau_y; the empty word at the basepoint for y == basepoint.
  Word tau(const ObjectId& y) const;

 private:
  friend SpanningTreeData spanning_tree(const GroupoidPresentation&, const ObjectId&);
  friend SpanningTreeData spanning_tree_from_arrows(const GroupoidPresentation&, const ObjectId&,
                                                    std::span<const ArrowId>);

  ObjectId basepoint_;
  std::vector<ObjectId> order_;
  std::unordered_map<ObjectId, std::pair<ObjectId, Letter>> parent_;
  std::vector<ArrowId> tree_arrows_;
  std::unordered_set<ArrowId> tree_set_;
};

Word reduce_word(const GroupoidPresentation& g, const Word& w);

/// Parts ordered by first object appearance; members in object order.
std::vector<std::vector<ObjectId>> connected_components(const GroupoidPresentation& g);

/// Breadth-first from `p`, arrows scanned in ascending index order, first arrival wins.
SpanningTreeData spanning_tree(const GroupoidPresentation& g, const ObjectId& p);

/// Builds tree data from an explicit arrow set; throws ErrorKind::shape unless
/// the arrows form a spanning tree of the component of `p`.
SpanningTreeData spanning_tree_from_arrows(const GroupoidPresentation& g, const ObjectId& p,
                                           std::span<const ArrowId> arrows);

/// reduce(tau_x . g . tau_y^-1): the image of g: x -> y in the object group at the basepoint.
Word retract_arrow(const GroupoidPresentation& g, const SpanningTreeData& tree, const Word& w);

/// The object-group generator form of a retracted word: non-tree letters, freely reduced.
Letters rewrite_over_generators(const SpanningTreeData& tree, std::span<const Letter> letters);

GroupPresentation object_group_presentation(const GroupoidPresentation& g, const ObjectId& p);
GroupPresentation object_group_presentation(const GroupoidPresentation& g,
                                            const SpanningTreeData& tree);

struct FreeProduct {
  GroupoidPresentation presentation;
  /// Original arrow id -> id in the product, per side.
  std::unordered_map<ArrowId, ArrowId> left_names;
  std::unordered_map<ArrowId, ArrowId> right_names;
};

/// Names the arrows of both sides would carry in their free product: ids
/// present on both sides get the side's tag appended (`a.G`, `a.H`).
std::pair<std::unordered_map<ArrowId, ArrowId>, std::unordered_map<ArrowId, ArrowId>>
disjoint_arrow_names(const GroupoidPresentation& g, const GroupoidPresentation& h,
                     std::string_view left_tag, std::string_view right_tag);

FreeProduct free_product_with_names(const GroupoidPresentation& g, const GroupoidPresentation& h,
                                    std::string_view left_tag = "G",
                                    std::string_view right_tag = "H");
GroupoidPresentation free_product(const GroupoidPresentation& g, const GroupoidPresentation& h);

GroupoidPresentation quotient_by_relations(const GroupoidPresentation& g, const RelationFamily& r);

/// The full subgroupoid on a set of objects J, presented per component of the
/// source: each component meeting J gets a root (its first J object), its
/// non-tree arrows become loops at the root under their own ids, and every
/// other J object x gets a connector arrow root -> x. Relations are retracted
/// to the root.
class Restriction {
 public:
  const GroupoidPresentation& presentation() const { return presentation_; }
  const ObjectId& root_of(const ObjectId& x) const;
  /// Connector arrow id for a non-root object of J.
  const ArrowId& connector(const ObjectId& x) const;

  /// Image of a source word between objects of J.
  Word map_word(const Word& w) const;
  /// Source word realising a word of the restricted presentation.
  Word realize(const Word& w) const;

 private:
  friend Restriction restrict_to_objects(const GroupoidPresentation&, std::span<const ObjectId>);

  GroupoidPresentation source_;
  GroupoidPresentation presentation_;
  std::vector<SpanningTreeData> trees_;
  std::unordered_map<ObjectId, std::size_t> tree_of_;
  std::unordered_map<ObjectId, ArrowId> connector_;
  std::unordered_map<ArrowId, ObjectId> connector_target_;
  std::unordered_set<ArrowId> tree_arrows_;
};

Restriction restrict_to_objects(const GroupoidPresentation& g, std::span<const ObjectId> objects);

}  // namespace vk
