#include "vk/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

#include "vk/error.hpp"

namespace vk {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }

  std::vector<std::size_t> parent;
};

// Incidence lists per object index, arrows in ascending index order, loops omitted.
std::vector<std::vector<std::size_t>> incidence(const GroupoidPresentation& g,
                                                const std::vector<bool>* allowed = nullptr) {
  std::vector<std::vector<std::size_t>> adj(g.objects().size());
  const auto& arrows = g.arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k].is_loop()) continue;
    if (allowed && !(*allowed)[k]) continue;
    adj[*g.object_index(arrows[k].src)].push_back(k);
    adj[*g.object_index(arrows[k].tgt)].push_back(k);
  }
  return adj;
}

}  // namespace

void validate(const GroupPresentation& p) {
  std::unordered_set<std::string> names;
  for (const auto& g : p.generators) {
    if (!names.insert(g).second) throw Error(ErrorKind::name, "duplicate generator '" + g + "'");
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (const Letter& l : p.relators[i]) {
      if (!names.contains(l.symbol)) {
        throw Error(ErrorKind::name,
                    "relator " + std::to_string(i) + " uses undeclared generator '" + l.symbol + "'");
      }
      if (l.sign != 1 && l.sign != -1) {
        throw Error(ErrorKind::name, "relator " + std::to_string(i) + " has a sign other than +-1");
      }
    }
  }
}

std::string format_presentation(const GroupPresentation& p) {
  std::string out = "⟨";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_letters(p.relators[i]);
  }
  out += "⟩";
  return out;
}

// --- GroupoidPresentation ---------------------------------------------------

GroupoidPresentation::GroupoidPresentation(std::vector<ObjectId> objects, std::vector<Arrow> arrows,
                                           std::vector<Word> relations)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), relations_(std::move(relations)) {
  object_index_.reserve(objects_.size());
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (!object_index_.emplace(objects_[i], i).second) {
      throw Error(ErrorKind::name, "duplicate object '" + objects_[i] + "'");
    }
  }
  arrow_index_.reserve(arrows_.size());
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    const Arrow& a = arrows_[k];
    if (!object_index_.contains(a.src) || !object_index_.contains(a.tgt)) {
      throw Error(ErrorKind::unknown_object, "arrow '" + a.id + "' has an endpoint outside the object set");
    }
    if (!arrow_index_.emplace(a.id, k).second) {
      throw Error(ErrorKind::name, "duplicate arrow '" + a.id + "'");
    }
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const Word& r = relations_[i];
    ObjectId end;
    try {
      end = end_of(r);
    } catch (const Error& e) {
      throw Error(ErrorKind::relation_shape, "relation " + std::to_string(i) + ": " + e.what());
    }
    if (end != r.start) {
      throw Error(ErrorKind::relation_shape,
                  "relation " + std::to_string(i) + " is not a loop (" + r.start + " -> " + end + ")");
    }
  }
}

std::optional<std::size_t> GroupoidPresentation::object_index(const ObjectId& x) const {
  auto it = object_index_.find(x);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GroupoidPresentation::arrow_index(const ArrowId& a) const {
  auto it = arrow_index_.find(a);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

const Arrow& GroupoidPresentation::arrow(const ArrowId& a) const {
  auto it = arrow_index_.find(a);
  if (it == arrow_index_.end()) throw Error(ErrorKind::name, "unknown arrow '" + a + "'");
  return arrows_[it->second];
}

ObjectId GroupoidPresentation::end_of(const Word& w) const {
  if (!object_index_.contains(w.start)) {
    throw Error(ErrorKind::unknown_object, "word starts at unknown object '" + w.start + "'");
  }
  const ObjectId* cur = &w.start;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter& l = w.letters[i];
    auto it = arrow_index_.find(l.symbol);
    if (it == arrow_index_.end()) {
      throw Error(ErrorKind::composition,
                  "letter " + std::to_string(i) + " references unknown arrow '" + l.symbol + "'");
    }
    const Arrow& a = arrows_[it->second];
    const ObjectId& from = l.sign > 0 ? a.src : a.tgt;
    const ObjectId& to = l.sign > 0 ? a.tgt : a.src;
    if ((l.sign != 1 && l.sign != -1) || from != *cur) {
      throw Error(ErrorKind::composition, "letter " + std::to_string(i) + " ('" + l.symbol +
                                              "') does not compose at object '" + *cur + "'");
    }
    cur = &to;
  }
  return *cur;
}

Word GroupoidPresentation::inverse(const Word& w) const {
  return Word{end_of(w), vk::inverse(w.letters)};
}

Word GroupoidPresentation::compose(const Word& a, const Word& b) const {
  const ObjectId mid = end_of(a);
  if (mid != b.start) {
    throw Error(ErrorKind::composition, "cannot compose: first word ends at '" + mid +
                                            "', second starts at '" + b.start + "'");
  }
  end_of(b);
  return Word{a.start, concat(a.letters, b.letters)};
}

// --- SpanningTreeData -------------------------------------------------------

Word SpanningTreeData::tau(const ObjectId& y) const {
  if (!reaches(y)) {
    throw Error(ErrorKind::component, "object '" + y + "' is outside the component of '" + basepoint_ + "'");
  }
  Letters rev;
  const ObjectId* cur = &y;
  while (*cur != basepoint_) {
    const auto& link = parent_.at(*cur);
    rev.push_back(link.second);
    cur = &link.first;
  }
  std::reverse(rev.begin(), rev.end());
  return Word{basepoint_, std::move(rev)};
}

// --- operations -------------------------------------------------------------

Word reduce_word(const GroupoidPresentation& g, const Word& w) {
  g.end_of(w);
  return Word{w.start, free_reduce(w.letters)};
}

std::vector<std::vector<ObjectId>> connected_components(const GroupoidPresentation& g) {
  const auto& objects = g.objects();
  UnionFind uf(objects.size());
  for (const Arrow& a : g.arrows()) uf.unite(*g.object_index(a.src), *g.object_index(a.tgt));
  std::vector<std::vector<ObjectId>> parts;
  std::unordered_map<std::size_t, std::size_t> part_of_root;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::size_t root = uf.find(i);
    auto [it, fresh] = part_of_root.emplace(root, parts.size());
    if (fresh) parts.emplace_back();
    parts[it->second].push_back(objects[i]);
  }
  return parts;
}

namespace {

struct TreeWalk {
  std::vector<ObjectId> order;
  std::unordered_map<ObjectId, std::pair<ObjectId, Letter>> parent;
  std::vector<ArrowId> tree_arrows;
};

TreeWalk breadth_first(const GroupoidPresentation& g, const ObjectId& p,
                       const std::vector<bool>* allowed) {
  const auto start = g.object_index(p);
  if (!start) throw Error(ErrorKind::unknown_object, "'" + p + "' is not an object");
  const auto adj = incidence(g, allowed);
  const auto& objects = g.objects();
  const auto& arrows = g.arrows();
  std::vector<bool> seen(objects.size(), false);
  std::deque<std::size_t> queue{*start};
  seen[*start] = true;
  TreeWalk walk;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    walk.order.push_back(objects[u]);
    for (std::size_t k : adj[u]) {
      const Arrow& a = arrows[k];
      const bool forward = a.src == objects[u];
      const std::size_t v = *g.object_index(forward ? a.tgt : a.src);
      if (seen[v]) continue;
      seen[v] = true;
      walk.parent.emplace(objects[v], std::make_pair(objects[u], Letter{a.id, forward ? 1 : -1}));
      walk.tree_arrows.push_back(a.id);
      queue.push_back(v);
    }
  }
  return walk;
}

}  // namespace

SpanningTreeData spanning_tree(const GroupoidPresentation& g, const ObjectId& p) {
  TreeWalk walk = breadth_first(g, p, nullptr);
  SpanningTreeData t;
  t.basepoint_ = p;
  t.order_ = std::move(walk.order);
  t.parent_ = std::move(walk.parent);
  t.tree_arrows_ = std::move(walk.tree_arrows);
  t.tree_set_.insert(t.tree_arrows_.begin(), t.tree_arrows_.end());
  return t;
}

SpanningTreeData spanning_tree_from_arrows(const GroupoidPresentation& g, const ObjectId& p,
                                           std::span<const ArrowId> arrows) {
  const SpanningTreeData full = spanning_tree(g, p);
  std::vector<bool> allowed(g.arrows().size(), false);
  UnionFind uf(g.objects().size());
  for (const ArrowId& id : arrows) {
    const auto k = g.arrow_index(id);
    if (!k) throw Error(ErrorKind::name, "unknown arrow '" + id + "'");
    const Arrow& a = g.arrows()[*k];
    if (!full.reaches(a.src)) {
      throw Error(ErrorKind::shape, "tree arrow '" + id + "' lies outside the component of '" + p + "'");
    }
    if (allowed[*k] || !uf.unite(*g.object_index(a.src), *g.object_index(a.tgt))) {
      throw Error(ErrorKind::shape, "tree arrows contain a cycle at '" + id + "'");
    }
    allowed[*k] = true;
  }
  TreeWalk walk = breadth_first(g, p, &allowed);
  if (walk.order.size() != full.objects().size()) {
    throw Error(ErrorKind::shape, "tree arrows do not span the component of '" + p + "'");
  }
  SpanningTreeData t;
  t.basepoint_ = p;
  t.order_ = std::move(walk.order);
  t.parent_ = std::move(walk.parent);
  t.tree_arrows_ = std::move(walk.tree_arrows);
  t.tree_set_.insert(t.tree_arrows_.begin(), t.tree_arrows_.end());
  return t;
}

Word retract_arrow(const GroupoidPresentation& g, const SpanningTreeData& tree, const Word& w) {
  const ObjectId end = g.end_of(w);
  if (!tree.reaches(w.start) || !tree.reaches(end)) {
    throw Error(ErrorKind::component, "word endpoints lie outside the tree component of '" +
                                          tree.basepoint() + "'");
  }
  Letters letters = tree.tau(w.start).letters;
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  const Letters back = inverse(tree.tau(end).letters);
  letters.insert(letters.end(), back.begin(), back.end());
  return Word{tree.basepoint(), free_reduce(letters)};
}

Letters rewrite_over_generators(const SpanningTreeData& tree, std::span<const Letter> letters) {
  Letters kept;
  kept.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!tree.is_tree_arrow(l.symbol)) kept.push_back(l);
  }
  return free_reduce(kept);
}

GroupPresentation object_group_presentation(const GroupoidPresentation& g, const ObjectId& p) {
  return object_group_presentation(g, spanning_tree(g, p));
}

GroupPresentation object_group_presentation(const GroupoidPresentation& g,
                                            const SpanningTreeData& tree) {
  GroupPresentation out;
  for (const Arrow& a : g.arrows()) {
    if (tree.reaches(a.src) && !tree.is_tree_arrow(a.id)) out.generators.push_back(a.id);
  }
  for (const Word& r : g.relations()) {
    if (tree.reaches(r.start)) out.relators.push_back(rewrite_over_generators(tree, r.letters));
  }
  return out;
}

std::pair<std::unordered_map<ArrowId, ArrowId>, std::unordered_map<ArrowId, ArrowId>>
disjoint_arrow_names(const GroupoidPresentation& g, const GroupoidPresentation& h,
                     std::string_view left_tag, std::string_view right_tag) {
  std::unordered_set<ArrowId> taken;
  for (const Arrow& a : g.arrows()) taken.insert(a.id);
  for (const Arrow& a : h.arrows()) taken.insert(a.id);

  auto assign = [&](const GroupoidPresentation& side, const GroupoidPresentation& other,
                    std::string_view tag) {
    std::unordered_map<ArrowId, ArrowId> names;
    for (const Arrow& a : side.arrows()) {
      if (!other.arrow_index(a.id)) {
        names.emplace(a.id, a.id);
        continue;
      }
      std::string candidate = a.id;
      do {
        candidate += '.';
        candidate += tag;
      } while (taken.contains(candidate));
      taken.insert(candidate);
      names.emplace(a.id, candidate);
    }
    return names;
  };
  auto left = assign(g, h, left_tag);
  auto right = assign(h, g, right_tag);
  return {std::move(left), std::move(right)};
}

FreeProduct free_product_with_names(const GroupoidPresentation& g, const GroupoidPresentation& h,
                                    std::string_view left_tag, std::string_view right_tag) {
  FreeProduct out;
  std::tie(out.left_names, out.right_names) = disjoint_arrow_names(g, h, left_tag, right_tag);

  std::vector<ObjectId> objects = g.objects();
  for (const ObjectId& x : h.objects()) {
    if (!g.has_object(x)) objects.push_back(x);
  }
  std::vector<Arrow> arrows;
  std::vector<Word> relations;
  auto append = [&](const GroupoidPresentation& side, const std::unordered_map<ArrowId, ArrowId>& names) {
    for (const Arrow& a : side.arrows()) arrows.push_back(Arrow{names.at(a.id), a.src, a.tgt});
    for (const Word& r : side.relations()) {
      Word renamed{r.start, r.letters};
      for (Letter& l : renamed.letters) l.symbol = names.at(l.symbol);
      relations.push_back(std::move(renamed));
    }
  };
  append(g, out.left_names);
  append(h, out.right_names);
  out.presentation = GroupoidPresentation(std::move(objects), std::move(arrows), std::move(relations));
  return out;
}

GroupoidPresentation free_product(const GroupoidPresentation& g, const GroupoidPresentation& h) {
  return free_product_with_names(g, h).presentation;
}

GroupoidPresentation quotient_by_relations(const GroupoidPresentation& g, const RelationFamily& r) {
  for (const auto& [x, words] : r) {
    if (!g.has_object(x)) throw Error(ErrorKind::unknown_object, "relation family names unknown object '" + x + "'");
  }
  std::vector<Word> relations = g.relations();
  for (const ObjectId& x : g.objects()) {
    auto it = r.find(x);
    if (it == r.end()) continue;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      const Word& w = it->second[i];
      if (w.start != x || g.end_of(w) != x) {
        throw Error(ErrorKind::relation_shape,
                    "R(" + x + ")[" + std::to_string(i) + "] is not a loop at '" + x + "'");
      }
      relations.push_back(w);
    }
  }
  return GroupoidPresentation(g.objects(), g.arrows(), std::move(relations));
}

// --- Restriction ------------------------------------------------------------

const ObjectId& Restriction::root_of(const ObjectId& x) const {
  auto it = tree_of_.find(x);
  if (it == tree_of_.end()) throw Error(ErrorKind::component, "'" + x + "' is not covered by the restriction");
  return trees_[it->second].basepoint();
}

const ArrowId& Restriction::connector(const ObjectId& x) const {
  auto it = connector_.find(x);
  if (it == connector_.end()) throw Error(ErrorKind::name, "'" + x + "' has no connector arrow");
  return it->second;
}

Word Restriction::map_word(const Word& w) const {
  const ObjectId end = source_.end_of(w);
  for (const ObjectId* x : {&w.start, &end}) {
    if (!presentation_.has_object(*x)) {
      throw Error(ErrorKind::unknown_object, "'" + *x + "' is not one of the restriction objects");
    }
  }
  if (tree_of_.at(w.start) != tree_of_.at(end)) {
    throw Error(ErrorKind::component, "word joins different components");
  }
  Letters out;
  if (auto it = connector_.find(w.start); it != connector_.end()) out.push_back(Letter{it->second, -1});
  for (const Letter& l : w.letters) {
    if (!tree_arrows_.contains(l.symbol)) out.push_back(l);
  }
  if (auto it = connector_.find(end); it != connector_.end()) out.push_back(Letter{it->second, 1});
  return Word{w.start, free_reduce(out)};
}

Word Restriction::realize(const Word& w) const {
  presentation_.end_of(w);
  Letters out;
  for (const Letter& l : w.letters) {
    Letters piece;
    if (auto it = connector_target_.find(l.symbol); it != connector_target_.end()) {
      piece = trees_[tree_of_.at(it->second)].tau(it->second).letters;
    } else {
      const Arrow& a = source_.arrow(l.symbol);
      const SpanningTreeData& tree = trees_[tree_of_.at(a.src)];
      piece = tree.tau(a.src).letters;
      piece.push_back(Letter{a.id, 1});
      const Letters back = inverse(tree.tau(a.tgt).letters);
      piece.insert(piece.end(), back.begin(), back.end());
    }
    if (l.sign < 0) piece = inverse(piece);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return Word{w.start, free_reduce(out)};
}

Restriction restrict_to_objects(const GroupoidPresentation& g, std::span<const ObjectId> objects) {
  Restriction out;
  out.source_ = g;
  std::unordered_set<ArrowId> names;
  for (const Arrow& a : g.arrows()) names.insert(a.id);

  std::vector<Arrow> arrows;
  std::vector<Word> relations;
  std::unordered_set<ObjectId> seen;
  for (const ObjectId& x : objects) {
    if (!g.has_object(x)) throw Error(ErrorKind::unknown_object, "'" + x + "' is not an object");
    if (!seen.insert(x).second) throw Error(ErrorKind::name, "duplicate object '" + x + "'");
    if (out.tree_of_.contains(x)) continue;
    const std::size_t index = out.trees_.size();
    out.trees_.push_back(spanning_tree(g, x));
    for (const ObjectId& y : out.trees_.back().objects()) out.tree_of_.emplace(y, index);
    for (const ArrowId& a : out.trees_.back().tree_arrows()) out.tree_arrows_.insert(a);
  }
  for (const SpanningTreeData& tree : out.trees_) {
    for (const Arrow& a : g.arrows()) {
      if (tree.reaches(a.src) && !tree.is_tree_arrow(a.id)) {
        arrows.push_back(Arrow{a.id, tree.basepoint(), tree.basepoint()});
      }
    }
  }
  for (const ObjectId& x : objects) {
    const ObjectId& root = out.trees_[out.tree_of_.at(x)].basepoint();
    if (root == x) continue;
    std::string id = "t_" + x;
    while (names.contains(id)) id += '\'';
    names.insert(id);
    arrows.push_back(Arrow{id, root, x});
    out.connector_.emplace(x, id);
    out.connector_target_.emplace(id, x);
  }
  for (const Word& r : g.relations()) {
    auto it = out.tree_of_.find(r.start);
    if (it == out.tree_of_.end()) continue;
    const SpanningTreeData& tree = out.trees_[it->second];
    relations.push_back(Word{tree.basepoint(), rewrite_over_generators(tree, r.letters)});
  }
  out.presentation_ = GroupoidPresentation(std::vector<ObjectId>(objects.begin(), objects.end()),
                                           std::move(arrows), std::move(relations));
  return out;
}

}  // namespace vk
