#include "vk/pushout.hpp"

#include <algorithm>
#include <unordered_set>

#include "vk/error.hpp"

namespace vk {

namespace {

void check_morphism(const char* name, const GroupoidPresentation& c, const GroupoidPresentation& target,
                    const std::vector<ObjectId>& objects, GroupoidMorphismData& m) {
  for (const auto& [from, to] : m.object_map) {
    if (from != to) {
      throw Error(ErrorKind::shape, std::string(name) + " is not the identity on object '" + from + "'");
    }
  }
  for (const ObjectId& x : objects) m.object_map[x] = x;
  for (const auto& [id, w] : m.arrow_map) {
    if (!c.arrow_index(id)) {
      throw Error(ErrorKind::name, std::string(name) + " maps '" + id + "', which is not an arrow of C");
    }
  }
  for (const Arrow& gamma : c.arrows()) {
    auto it = m.arrow_map.find(gamma.id);
    if (it == m.arrow_map.end()) {
      throw Error(ErrorKind::name, std::string(name) + " has no image for '" + gamma.id + "'");
    }
    const Word& w = it->second;
    if (w.start != gamma.src || target.end_of(w) != gamma.tgt) {
      throw Error(ErrorKind::composition, std::string(name) + "(" + gamma.id +
                                              ") does not match the endpoints of '" + gamma.id + "'");
    }
  }
}

void check_connected_over(const char* name, const GroupoidPresentation& g,
                          const std::vector<ObjectId>& objects) {
  for (const ObjectId& x : objects) {
    if (!g.has_object(x)) {
      throw Error(ErrorKind::unknown_object, std::string(name) + " lacks object '" + x + "' of J");
    }
  }
  if (connected_components(g).size() != 1) {
    throw Error(ErrorKind::connectivity, std::string(name) + " is not connected");
  }
}

Letters renamed(std::span<const Letter> w, const std::map<ArrowId, ArrowId>& names) {
  Letters out(w.begin(), w.end());
  for (Letter& l : out) l.symbol = names.at(l.symbol);
  return out;
}

}  // namespace

PushoutInput validate_pushout_input(const PushoutInput& input) {
  PushoutInput out = input;
  std::unordered_set<ObjectId> members;
  for (const ObjectId& x : out.objects) {
    if (!members.insert(x).second) throw Error(ErrorKind::name, "J lists '" + x + "' twice");
  }
  if (!members.contains(out.basepoint)) {
    throw Error(ErrorKind::basepoint, "basepoint '" + out.basepoint + "' is not in J");
  }
  if (out.c.objects().size() != members.size() ||
      !std::all_of(out.c.objects().begin(), out.c.objects().end(),
                   [&](const ObjectId& x) { return members.contains(x); })) {
    throw Error(ErrorKind::unknown_object, "C must have object set exactly J");
  }
  for (const Arrow& gamma : out.c.arrows()) {
    if (!gamma.is_loop()) {
      throw Error(ErrorKind::total_disconnection,
                  "C has arrow '" + gamma.id + "' from '" + gamma.src + "' to '" + gamma.tgt + "'");
    }
  }
  check_connected_over("A", out.a, out.objects);
  check_connected_over("B", out.b, out.objects);
  check_morphism("i", out.c, out.a, out.objects, out.i);
  check_morphism("j", out.c, out.b, out.objects, out.j);
  return out;
}

GroupoidPresentation groupoid_pushout_presentation(const PushoutInput& raw) {
  const PushoutInput input = validate_pushout_input(raw);
  const FreeProduct product = free_product_with_names(input.a, input.b, "A", "B");
  const std::map<ArrowId, ArrowId> left(product.left_names.begin(), product.left_names.end());
  const std::map<ArrowId, ArrowId> right(product.right_names.begin(), product.right_names.end());
  std::vector<Word> relations = product.presentation.relations();
  for (const Arrow& gamma : input.c.arrows()) {
    const Letters ig = renamed(input.i.arrow_map.at(gamma.id).letters, left);
    const Letters jg = renamed(input.j.arrow_map.at(gamma.id).letters, right);
    relations.push_back(Word{gamma.src, free_reduce(concat(ig, inverse(jg)))});
  }
  return GroupoidPresentation(product.presentation.objects(), product.presentation.arrows(),
                              std::move(relations));
}

PushoutResult pushout_object_group(const PushoutInput& raw) {
  const PushoutInput input = validate_pushout_input(raw);
  return pushout_object_group(input, spanning_tree(input.a, input.basepoint),
                              spanning_tree(input.b, input.basepoint));
}

PushoutResult pushout_object_group(const PushoutInput& raw, const SpanningTreeData& a_tree,
                                   const SpanningTreeData& b_tree) {
  const PushoutInput input = validate_pushout_input(raw);
  const ObjectId& p = input.basepoint;
  if (a_tree.basepoint() != p || b_tree.basepoint() != p) {
    throw Error(ErrorKind::basepoint, "spanning trees must be rooted at '" + p + "'");
  }

  PushoutResult out;
  out.objects = input.objects;
  out.basepoint = p;
  out.a_tree = a_tree;
  out.b_tree = b_tree;
  {
    auto [left, right] = disjoint_arrow_names(input.a, input.b, "A", "B");
    out.a_names = std::map<ArrowId, ArrowId>(left.begin(), left.end());
    out.b_names = std::map<ArrowId, ArrowId>(right.begin(), right.end());
  }

  const GroupPresentation ap = object_group_presentation(input.a, out.a_tree);
  const GroupPresentation bp = object_group_presentation(input.b, out.b_tree);
  std::unordered_set<std::string> used;
  for (const auto& g : ap.generators) {
    out.a_generators.push_back(out.a_names.at(g));
    used.insert(out.a_generators.back());
  }
  for (const auto& g : bp.generators) {
    out.b_generators.push_back(out.b_names.at(g));
    used.insert(out.b_generators.back());
  }

  std::map<ObjectId, std::string> f_of;
  for (const ObjectId& x : input.objects) {
    if (x == p) continue;
    std::string name = "f_" + x;
    while (used.contains(name)) name += '\'';
    used.insert(name);
    out.f_generators.push_back(name);
    out.f_object.emplace(name, x);
    f_of.emplace(x, name);
    const Letters beta = renamed(out.b_tree.tau(x).letters, out.b_names);
    const Letters alpha = renamed(out.a_tree.tau(x).letters, out.a_names);
    out.f_definition.emplace(name, Word{p, free_reduce(concat(beta, inverse(alpha)))});
  }

  GroupPresentation& g = out.presentation;
  g.generators = out.a_generators;
  g.generators.insert(g.generators.end(), out.b_generators.begin(), out.b_generators.end());
  g.generators.insert(g.generators.end(), out.f_generators.begin(), out.f_generators.end());
  for (const Letters& r : ap.relators) g.relators.push_back(renamed(r, out.a_names));
  for (const Letters& r : bp.relators) g.relators.push_back(renamed(r, out.b_names));
  out.a_relator_count = ap.relators.size();
  out.b_relator_count = bp.relators.size();

  for (const Arrow& gamma : input.c.arrows()) {
    const ObjectId& x = gamma.src;
    Letters relator =
        renamed(rewrite_over_generators(out.a_tree, input.i.arrow_map.at(gamma.id).letters), out.a_names);
    const Letters sj =
        renamed(rewrite_over_generators(out.b_tree, input.j.arrow_map.at(gamma.id).letters), out.b_names);
    auto f = f_of.find(x);
    if (f != f_of.end()) relator.push_back(Letter{f->second, -1});
    relator = concat(relator, inverse(sj));
    if (f != f_of.end()) relator.push_back(Letter{f->second, 1});
    out.gluing.push_back(RelatorProvenance{g.relators.size(), x, gamma.id});
    g.relators.push_back(free_reduce(relator));
  }
  return out;
}

namespace {

Letters rho_with(const PushoutResult& result, const std::unordered_set<std::string>& known,
                 std::span<const Letter> w) {
  Letters kept;
  for (const Letter& l : w) {
    if (!known.contains(l.symbol)) {
      throw Error(ErrorKind::name, "'" + l.symbol + "' is not a generator of the pushout group");
    }
    if (result.f_object.contains(l.symbol)) kept.push_back(l);
  }
  return free_reduce(kept);
}

std::unordered_set<std::string> generator_set(const PushoutResult& result) {
  return {result.presentation.generators.begin(), result.presentation.generators.end()};
}

}  // namespace

Letters retraction_rho(const PushoutResult& result, std::span<const Letter> w) {
  return rho_with(result, generator_set(result), w);
}

Certificate certify(const PushoutResult& result) {
  const auto known = generator_set(result);
  for (std::size_t k = 0; k < result.presentation.relators.size(); ++k) {
    if (!rho_with(result, known, result.presentation.relators[k]).empty()) {
      throw Error(ErrorKind::pipeline,
                  "retraction does not kill relator " + std::to_string(k) + "; no certificate issued");
    }
  }
  Certificate cert;
  if (result.f_generators.empty()) return cert;
  const std::string& fx = result.f_generators[0];
  cert.kind = CertificateKind::nontrivial;
  cert.nontrivial_witness = retraction_rho(result, Letters{Letter{fx, 1}});
  if (result.f_generators.size() >= 2) {
    const std::string& fy = result.f_generators[1];
    const Letters commutator{{fx, 1}, {fy, 1}, {fx, -1}, {fy, -1}};
    cert.commutator_witness = retraction_rho(result, commutator);
    if (!cert.commutator_witness.empty()) cert.kind = CertificateKind::nonabelian;
  }
  return cert;
}

}  // namespace vk
