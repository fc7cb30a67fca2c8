#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vk/groupoid.hpp"
#include "vk/pushout.hpp"

namespace corpus {

/// J = {p, q, r, s, ...} truncated to `count`.
inline std::vector<vk::ObjectId> objects(std::size_t count) {
  static const std::vector<vk::ObjectId> names{"p", "q", "r", "s", "t", "u"};
  return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(count)};
}

/// Tree groupoids on J (a path for A, a star for B) and identity-only C.
inline vk::PushoutInput tree_square(std::size_t j_count) {
  const auto j = objects(j_count);
  std::vector<vk::Arrow> a_arrows;
  std::vector<vk::Arrow> b_arrows;
  for (std::size_t k = 1; k < j.size(); ++k) {
    a_arrows.push_back({"alpha" + std::to_string(k), j[k - 1], j[k]});
    b_arrows.push_back({"beta" + std::to_string(k), j[0], j[k]});
  }
  vk::PushoutInput in;
  in.objects = j;
  in.basepoint = j.front();
  in.c = vk::GroupoidPresentation(j, {});
  in.a = vk::GroupoidPresentation(j, a_arrows);
  in.b = vk::GroupoidPresentation(j, b_arrows);
  return in;
}

namespace detail {

struct RandomGroupoid {
  vk::GroupoidPresentation g;
  std::vector<vk::ArrowId> extra;
};

inline vk::Letters path_from_root(const vk::SpanningTreeData& tree, const vk::ObjectId& x) {
  return tree.tau(x).letters;
}

// tau_x^-1 . tau_src . e^sign . tau_tgt^-1 . tau_x : a loop at x through arrow e.
inline vk::Letters basic_loop(const vk::GroupoidPresentation& g, const vk::SpanningTreeData& tree,
                              const vk::ObjectId& x, const vk::ArrowId& e, int sign) {
  const vk::Arrow& a = g.arrow(e);
  const vk::ObjectId& from = sign > 0 ? a.src : a.tgt;
  const vk::ObjectId& to = sign > 0 ? a.tgt : a.src;
  vk::Letters w = vk::inverse(path_from_root(tree, x));
  w = vk::concat(w, path_from_root(tree, from));
  w.push_back({e, sign});
  w = vk::concat(w, vk::inverse(path_from_root(tree, to)));
  w = vk::concat(w, path_from_root(tree, x));
  return vk::free_reduce(w);
}

template <class Rng>
std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

template <class Rng>
RandomGroupoid random_groupoid(Rng& rng, const std::vector<vk::ObjectId>& j, const std::string& tag,
                               bool with_relation) {
  std::vector<vk::ObjectId> objects = j;
  const std::size_t extras = pick(rng, 3);
  for (std::size_t k = 0; k < extras; ++k) objects.push_back(tag + "_o" + std::to_string(k));

  std::vector<vk::Arrow> arrows;
  for (std::size_t k = 1; k < objects.size(); ++k) {
    const vk::ObjectId& other = objects[pick(rng, k)];
    const std::string id = tag + std::to_string(arrows.size());
    if (pick(rng, 2) == 0) {
      arrows.push_back({id, other, objects[k]});
    } else {
      arrows.push_back({id, objects[k], other});
    }
  }
  RandomGroupoid out;
  const std::size_t extra_arrows = pick(rng, 4);
  for (std::size_t k = 0; k < extra_arrows; ++k) {
    const std::string id = tag + std::to_string(arrows.size());
    arrows.push_back({id, objects[pick(rng, objects.size())], objects[pick(rng, objects.size())]});
    out.extra.push_back(id);
  }
  vk::GroupoidPresentation free(objects, arrows);
  std::vector<vk::Word> relations;
  if (with_relation && !out.extra.empty()) {
    const vk::SpanningTreeData tree = vk::spanning_tree(free, objects.front());
    const vk::ObjectId& x = objects[pick(rng, objects.size())];
    const vk::ArrowId& e = out.extra[pick(rng, out.extra.size())];
    const vk::Letters loop = basic_loop(free, tree, x, e, 1);
    const std::size_t power = 1 + pick(rng, 3);
    vk::Letters w;
    for (std::size_t k = 0; k < power; ++k) w = vk::concat(w, loop);
    relations.push_back(vk::Word{x, w});
  }
  out.g = vk::GroupoidPresentation(objects, arrows, relations);
  return out;
}

template <class Rng>
vk::Word random_loop(Rng& rng, const RandomGroupoid& rg, const vk::ObjectId& x) {
  if (rg.extra.empty()) return vk::Word{x, {}};
  const vk::SpanningTreeData tree = vk::spanning_tree(rg.g, rg.g.objects().front());
  vk::Letters w;
  const std::size_t factors = 1 + pick(rng, 2);
  for (std::size_t k = 0; k < factors; ++k) {
    const int sign = pick(rng, 2) == 0 ? 1 : -1;
    w = vk::concat(w, basic_loop(rg.g, tree, x, rg.extra[pick(rng, rg.extra.size())], sign));
  }
  return vk::Word{x, vk::free_reduce(w)};
}

}  // namespace detail

/// A seeded square over |J| = j_count with connected A, B (extra objects,
/// extra arrows, an occasional relation) and, when asked, generating loops in C.
inline vk::PushoutInput random_square(std::size_t j_count, bool nontrivial_c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto j = objects(j_count);
  const auto a = detail::random_groupoid(rng, j, "a", detail::pick(rng, 2) == 0);
  const auto b = detail::random_groupoid(rng, j, "b", detail::pick(rng, 2) == 0);

  vk::PushoutInput in;
  in.objects = j;
  in.basepoint = j.front();
  in.a = a.g;
  in.b = b.g;
  std::vector<vk::Arrow> c_arrows;
  if (nontrivial_c) {
    const std::size_t loops = 1 + detail::pick(rng, 2);
    for (std::size_t k = 0; k < loops; ++k) {
      const vk::ObjectId& x = j[detail::pick(rng, j.size())];
      const std::string id = "gamma" + std::to_string(k);
      c_arrows.push_back({id, x, x});
      in.i.arrow_map.emplace(id, detail::random_loop(rng, a, x));
      in.j.arrow_map.emplace(id, detail::random_loop(rng, b, x));
    }
  }
  in.c = vk::GroupoidPresentation(j, c_arrows);
  return in;
}

/// The fixed corpus: tree squares for |J| = 1..4 plus seeded random squares
/// over every |J| in 1..4, with C trivial and nontrivial.
inline std::vector<vk::PushoutInput> pushout_corpus() {
  std::vector<vk::PushoutInput> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(tree_square(n));
  std::uint64_t seed = 1;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      out.push_back(random_square(n, false, seed++));
      out.push_back(random_square(n, true, seed++));
    }
  }
  return out;
}

}  // namespace corpus
