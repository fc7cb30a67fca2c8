#include "vk/complex.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

#include "vk/error.hpp"

namespace vk {

CellComplex::CellComplex(std::vector<ObjectId> vertices, std::vector<Arrow> edges, std::vector<Face> faces)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)) {
  const std::size_t v = vertices_.size();
  const std::size_t e = edges_.size();
  names_.reserve(v + e + faces_.size());
  for (const auto& x : vertices_) names_.push_back(x);
  for (const auto& a : edges_) names_.push_back(a.id);
  for (const auto& f : faces_) names_.push_back(f.id);
  index_.reserve(names_.size());
  for (CellId c = 0; c < names_.size(); ++c) {
    if (!index_.emplace(names_[c], c).second) {
      throw Error(ErrorKind::name, "cell name '" + names_[c] + "' is used twice");
    }
  }

  std::vector<Word> relations;
  relations.reserve(faces_.size());
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    if (faces_[k].boundary.letters.empty()) {
      throw Error(ErrorKind::relation_shape, "face '" + faces_[k].id + "' has an empty boundary");
    }
    relations.push_back(faces_[k].boundary);
  }
  groupoid_ = GroupoidPresentation(vertices_, edges_, std::move(relations));

  boundary_.assign(names_.size(), {});
  coboundary_.assign(names_.size(), {});
  for (std::size_t k = 0; k < e; ++k) {
    auto& b = boundary_[v + k];
    b.push_back(index_.at(edges_[k].src));
    b.push_back(index_.at(edges_[k].tgt));
  }
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    auto& b = boundary_[v + e + k];
    for (const Letter& l : faces_[k].boundary.letters) b.push_back(index_.at(l.symbol));
  }
  for (CellId c = 0; c < names_.size(); ++c) {
    auto& b = boundary_[c];
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (CellId f : b) coboundary_[f].push_back(c);
  }
}

int CellComplex::dimension(CellId c) const {
  if (c < vertices_.size()) return 0;
  if (c < vertices_.size() + edges_.size()) return 1;
  if (c < names_.size()) return 2;
  throw Error(ErrorKind::name, "cell index " + std::to_string(c) + " is out of range");
}

std::optional<CellId> CellComplex::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CellId CellComplex::cell(std::string_view name) const {
  if (auto c = find(name)) return *c;
  throw Error(ErrorKind::name, "no cell named '" + std::string(name) + "'");
}

std::vector<CellId> CellComplex::proper_faces(CellId c) const {
  std::vector<CellId> out;
  for (CellId b : boundary_.at(c)) {
    out.push_back(b);
    for (CellId bb : boundary_[b]) out.push_back(bb);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long CellComplex::euler_characteristic() const {
  return static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) +
         static_cast<long>(faces_.size());
}

CellSet CellSet::of(std::size_t universe, std::span<const CellId> cells) {
  CellSet s(universe);
  for (CellId c : cells) {
    if (c >= universe) throw Error(ErrorKind::name, "cell index " + std::to_string(c) + " is out of range");
    s.insert(c);
  }
  return s;
}

CellSet CellSet::named(const CellComplex& x, std::span<const std::string> names) {
  CellSet s(x.cell_count());
  for (const auto& n : names) s.insert(x.cell(n));
  return s;
}

std::size_t CellSet::size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }

std::vector<CellId> CellSet::members() const {
  std::vector<CellId> out;
  for (CellId c = 0; c < mask_.size(); ++c) {
    if (mask_[c]) out.push_back(c);
  }
  return out;
}

CellSet CellSet::complement() const {
  CellSet out = *this;
  out.mask_.flip();
  return out;
}

namespace {

void require_same_universe(const CellSet& a, const CellSet& b) {
  if (a.universe() != b.universe()) {
    throw Error(ErrorKind::parameter, "cell sets belong to complexes of different sizes");
  }
}

}  // namespace

CellSet CellSet::united(const CellSet& other) const {
  require_same_universe(*this, other);
  CellSet out = *this;
  for (std::size_t c = 0; c < mask_.size(); ++c) out.mask_[c] = mask_[c] || other.mask_[c];
  return out;
}

CellSet CellSet::intersected(const CellSet& other) const {
  require_same_universe(*this, other);
  CellSet out = *this;
  for (std::size_t c = 0; c < mask_.size(); ++c) out.mask_[c] = mask_[c] && other.mask_[c];
  return out;
}

bool CellSet::disjoint(const CellSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t c = 0; c < mask_.size(); ++c) {
    if (mask_[c] && other.mask_[c]) return false;
  }
  return true;
}

bool CellSet::subset_of(const CellSet& other) const {
  require_same_universe(*this, other);
  for (std::size_t c = 0; c < mask_.size(); ++c) {
    if (mask_[c] && !other.mask_[c]) return false;
  }
  return true;
}

std::vector<std::string> cell_names(const CellComplex& x, const CellSet& s) {
  std::vector<std::string> out;
  for (CellId c : s.members()) out.push_back(x.name(c));
  return out;
}

bool is_closed(const CellComplex& x, const CellSet& s) {
  for (CellId c : s.members()) {
    for (CellId b : x.boundary(c)) {
      if (!s.contains(b)) return false;
    }
  }
  return true;
}

CellSet closure(const CellComplex& x, const CellSet& s) {
  CellSet out = s;
  for (CellId c : s.members()) {
    for (CellId b : x.proper_faces(c)) out.insert(b);
  }
  return out;
}

std::string_view to_string(Model m) {
  switch (m) {
    case Model::grid_sphere: return "grid_sphere";
    case Model::cycle: return "cycle";
    case Model::interval: return "interval";
    case Model::disk: return "disk";
    case Model::annulus: return "annulus";
  }
  return "grid_sphere";
}

Model parse_model(std::string_view name) {
  for (Model m : {Model::grid_sphere, Model::cycle, Model::interval, Model::disk, Model::annulus}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::parameter, "unknown model '" + std::string(name) + "'");
}

long declared_euler_characteristic(Model m) {
  switch (m) {
    case Model::grid_sphere: return 2;
    case Model::cycle: return 0;
    case Model::interval: return 1;
    case Model::disk: return 1;
    case Model::annulus: return 0;
  }
  return 0;
}

namespace {

std::string indexed(char prefix, std::size_t k) { return prefix + std::to_string(k); }

CellComplex grid(std::size_t n, bool outer_face, bool drop_centre) {
  const std::size_t w = n + 1;
  auto vid = [&](std::size_t r, std::size_t c) { return indexed('v', r * w + c); };
  std::vector<ObjectId> vertices;
  for (std::size_t k = 0; k < w * w; ++k) vertices.push_back(indexed('v', k));

  std::vector<Arrow> edges;
  // horizontal(r, c): (r, c) -> (r, c + 1); vertical(r, c): (r, c) -> (r + 1, c)
  auto horizontal = [&](std::size_t r, std::size_t c) { return indexed('e', r * n + c); };
  auto vertical = [&](std::size_t r, std::size_t c) { return indexed('e', w * n + r * w + c); };
  for (std::size_t r = 0; r < w; ++r) {
    for (std::size_t c = 0; c < n; ++c) edges.push_back({horizontal(r, c), vid(r, c), vid(r, c + 1)});
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < w; ++c) edges.push_back({vertical(r, c), vid(r, c), vid(r + 1, c)});
  }

  std::vector<Face> faces;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (drop_centre && r == n / 2 && c == n / 2) continue;
      faces.push_back({indexed('f', r * n + c),
                       Word{vid(r, c),
                            {{horizontal(r, c), 1},
                             {vertical(r, c + 1), 1},
                             {horizontal(r + 1, c), -1},
                             {vertical(r, c), -1}}}});
    }
  }
  if (outer_face) {
    Word rim{vid(0, 0), {}};
    for (std::size_t c = 0; c < n; ++c) rim.letters.push_back({horizontal(0, c), 1});
    for (std::size_t r = 0; r < n; ++r) rim.letters.push_back({vertical(r, n), 1});
    for (std::size_t c = n; c-- > 0;) rim.letters.push_back({horizontal(n, c), -1});
    for (std::size_t r = n; r-- > 0;) rim.letters.push_back({vertical(r, 0), -1});
    faces.push_back({indexed('f', n * n), std::move(rim)});
  }
  return CellComplex(std::move(vertices), std::move(edges), std::move(faces));
}

}  // namespace

CellComplex build_space(Model m, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::parameter, "size parameter must be positive");
  CellComplex x;
  switch (m) {
    case Model::grid_sphere: x = grid(n, true, false); break;
    case Model::disk: x = grid(n, false, false); break;
    case Model::annulus: x = grid(n, false, true); break;
    case Model::cycle:
    case Model::interval: {
      const std::size_t count = m == Model::cycle ? n : n + 1;
      std::vector<ObjectId> vertices;
      for (std::size_t k = 0; k < count; ++k) vertices.push_back(indexed('v', k));
      std::vector<Arrow> edges;
      for (std::size_t k = 0; k < n; ++k) edges.push_back({indexed('e', k), vertices[k], vertices[(k + 1) % count]});
      x = CellComplex(std::move(vertices), std::move(edges), {});
      break;
    }
  }
  if (x.euler_characteristic() != declared_euler_characteristic(m)) {
    throw Error(ErrorKind::parameter, std::string(to_string(m)) + " has Euler characteristic " +
                                          std::to_string(x.euler_characteristic()) + ", expected " +
                                          std::to_string(declared_euler_characteristic(m)));
  }
  return x;
}

BasedGroupoid fundamental_groupoid_presentation(const CellComplex& x, std::vector<ObjectId> basepoints) {
  if (basepoints.empty()) throw Error(ErrorKind::connectivity, "basepoint set is empty");
  const GroupoidPresentation& g = x.edge_path_groupoid();
  std::unordered_set<ObjectId> chosen;
  for (const ObjectId& p : basepoints) {
    if (!g.has_object(p)) throw Error(ErrorKind::unknown_object, "basepoint '" + p + "' is not a vertex");
    if (!chosen.insert(p).second) throw Error(ErrorKind::name, "basepoint '" + p + "' is listed twice");
  }
  for (const auto& part : connected_components(g)) {
    if (std::none_of(part.begin(), part.end(), [&](const ObjectId& v) { return chosen.contains(v); })) {
      throw Error(ErrorKind::connectivity, "no basepoint in the component of '" + part.front() + "'");
    }
  }
  return BasedGroupoid{g, std::move(basepoints)};
}

ComponentPartition complement_components(const CellComplex& x, const CellSet& removed) {
  const std::size_t n = x.cell_count();
  if (removed.universe() != n) throw Error(ErrorKind::parameter, "cell set does not match the complex");
  ComponentPartition out;
  out.part_of.assign(n, -1);
  out.witness_parent.assign(n, ComponentPartition::npos);
  std::deque<CellId> queue;
  for (CellId root = 0; root < n; ++root) {
    if (removed.contains(root) || out.part_of[root] >= 0) continue;
    const auto part = static_cast<std::ptrdiff_t>(out.parts.size());
    out.parts.emplace_back();
    out.part_of[root] = part;
    out.witness_parent[root] = root;
    queue.push_back(root);
    while (!queue.empty()) {
      const CellId c = queue.front();
      queue.pop_front();
      out.parts.back().push_back(c);
      auto visit = [&](CellId d) {
        if (removed.contains(d) || out.part_of[d] >= 0) return;
        out.part_of[d] = part;
        out.witness_parent[d] = c;
        queue.push_back(d);
      };
      for (CellId d : x.boundary(c)) visit(d);
      for (CellId d : x.coboundary(c)) visit(d);
    }
    std::sort(out.parts.back().begin(), out.parts.back().end());
  }
  return out;
}

CellSet component_boundary(const CellComplex& x, std::span<const CellId> part) {
  CellSet members = CellSet::of(x.cell_count(), part);
  CellSet out(x.cell_count());
  for (CellId c : part) {
    for (CellId b : x.proper_faces(c)) {
      if (!members.contains(b)) out.insert(b);
    }
  }
  return out;
}

namespace {

// Edges of `s` incident to vertex `v`, loops listed twice.
std::vector<CellId> incident_edges(const CellComplex& x, const CellSet& s, CellId v) {
  std::vector<CellId> out;
  for (CellId e : x.coboundary(v)) {
    if (!s.contains(e)) continue;
    const Arrow& a = x.edges()[e - x.vertex_count()];
    out.push_back(e);
    if (a.is_loop()) out.push_back(e);
  }
  return out;
}

CellId other_end(const CellComplex& x, CellId e, CellId v) {
  const Arrow& a = x.edges()[e - x.vertex_count()];
  const CellId s = x.cell(a.src);
  return s == v ? x.cell(a.tgt) : s;
}

// Empty when `s` is a valid 1-dimensional closed set; otherwise the reason.
std::string graph_shape_problem(const CellComplex& x, const CellSet& s) {
  if (s.universe() != x.cell_count()) return "cell set does not match the complex";
  for (CellId c : s.members()) {
    if (x.dimension(c) == 2) return "contains face '" + x.name(c) + "'";
  }
  if (!is_closed(x, s)) return "is not closed";
  return {};
}

bool connected_graph(const CellComplex& x, const CellSet& s) {
  const auto members = s.members();
  if (members.empty()) return false;
  return complement_components(x, s.complement()).count() == 1;
}

// Walks from `start` along edges of `s`, leaving `start` through `first`.
CellPath walk(const CellComplex& x, const CellSet& s, CellId start, CellId first, bool cycle) {
  CellPath path;
  CellId v = start;
  CellId e = first;
  while (true) {
    path.cells.push_back(v);
    if (e == ComponentPartition::npos) break;
    path.cells.push_back(e);
    const CellId next = other_end(x, e, v);
    if (cycle && next == start) break;
    CellId onward = ComponentPartition::npos;
    for (CellId f : incident_edges(x, s, next)) {
      if (f != e) onward = f;
    }
    v = next;
    e = onward;
  }
  return path;
}

}  // namespace

bool is_simple_cycle(const CellComplex& x, const CellSet& c) {
  if (!graph_shape_problem(x, c).empty()) return false;
  for (CellId v : c.members()) {
    if (x.dimension(v) == 0 && incident_edges(x, c, v).size() != 2) return false;
  }
  return connected_graph(x, c) && c.size() >= 2;
}

CellPath trace_cycle(const CellComplex& x, const CellSet& c) {
  if (const auto problem = graph_shape_problem(x, c); !problem.empty()) {
    throw Error(ErrorKind::shape, "cycle " + problem);
  }
  if (!is_simple_cycle(x, c)) throw Error(ErrorKind::shape, "cell set is not a simple cycle");
  const CellId start = c.members().front();
  const auto edges = incident_edges(x, c, start);
  CellId first = edges[0];
  const CellId n0 = other_end(x, edges[0], start);
  const CellId n1 = other_end(x, edges[1], start);
  if (n1 < n0 || (n1 == n0 && edges[1] < edges[0])) first = edges[1];
  return walk(x, c, start, first, true);
}

bool is_arc(const CellComplex& x, const CellSet& a) {
  if (!graph_shape_problem(x, a).empty() || !connected_graph(x, a)) return false;
  std::size_t ends = 0;
  for (CellId v : a.members()) {
    if (x.dimension(v) != 0) {
      if (x.edges()[v - x.vertex_count()].is_loop()) return false;
      continue;
    }
    const std::size_t degree = incident_edges(x, a, v).size();
    if (degree == 1) {
      ++ends;
    } else if (degree != 2 && !(degree == 0 && a.size() == 1)) {
      return false;
    }
  }
  return a.size() == 1 || ends == 2;
}

CellPath trace_arc(const CellComplex& x, const CellSet& a) {
  if (const auto problem = graph_shape_problem(x, a); !problem.empty()) {
    throw Error(ErrorKind::shape, "arc " + problem);
  }
  if (!is_arc(x, a)) throw Error(ErrorKind::shape, "cell set is not an arc");
  for (CellId v : a.members()) {
    const auto edges = incident_edges(x, a, v);
    if (edges.size() <= 1) {
      return walk(x, a, v, edges.empty() ? ComponentPartition::npos : edges[0], false);
    }
  }
  throw Error(ErrorKind::shape, "arc has no endpoint");
}

CellSet cells_of(const CellComplex& x, const CellPath& path) {
  return CellSet::of(x.cell_count(), path.cells);
}

CellSet random_simple_cycle(const CellComplex& x, std::uint64_t seed, const CycleBounds& bounds) {
  if (bounds.min_length == 0 || bounds.min_length > bounds.max_length) {
    throw Error(ErrorKind::parameter, "cycle length bounds are inconsistent");
  }
  const std::size_t nv = x.vertex_count();
  if (nv == 0) throw Error(ErrorKind::generation_failure, "complex has no vertices");

  // adjacency[v] = (edge cell, neighbour) over non-loop edges, ascending edge order
  std::vector<std::vector<std::pair<CellId, CellId>>> adjacency(nv);
  for (std::size_t k = 0; k < x.edge_count(); ++k) {
    const Arrow& a = x.edges()[k];
    if (a.is_loop()) continue;
    const CellId s = x.cell(a.src);
    const CellId t = x.cell(a.tgt);
    adjacency[s].emplace_back(x.edge_cell(k), t);
    adjacency[t].emplace_back(x.edge_cell(k), s);
  }

  std::mt19937_64 rng(seed);
  std::vector<char> on_walk(nv, 0);
  std::vector<CellId> via(nv);
  std::vector<CellId> prev(nv);
  for (std::size_t attempt = 0; attempt < bounds.retries; ++attempt) {
    std::fill(on_walk.begin(), on_walk.end(), 0);
    const CellId start = std::uniform_int_distribution<CellId>(0, nv - 1)(rng);
    const std::size_t target =
        std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, bounds.max_length - 1))(rng);
    std::vector<CellId> walk_vertices{start};
    std::vector<CellId> walk_edges;
    on_walk[start] = 1;
    CellId cur = start;
    while (walk_edges.size() < target) {
      std::vector<std::pair<CellId, CellId>> options;
      for (const auto& step : adjacency[cur]) {
        if (!on_walk[step.second]) options.push_back(step);
      }
      if (options.empty()) break;
      const auto& [e, next] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      walk_edges.push_back(e);
      walk_vertices.push_back(next);
      on_walk[next] = 1;
      cur = next;
    }
    if (walk_edges.empty()) continue;

    // Shortest path cur -> start through vertices off the walk.
    std::vector<char> seen(nv, 0);
    std::deque<CellId> queue{cur};
    seen[cur] = 1;
    bool found = false;
    while (!queue.empty() && !found) {
      const CellId v = queue.front();
      queue.pop_front();
      for (const auto& [e, w] : adjacency[v]) {
        if (seen[w]) continue;
        if (w == start) {
          if (v == cur && walk_edges.size() == 1 && e == walk_edges[0]) continue;
          via[w] = e;
          prev[w] = v;
          found = true;
          break;
        }
        if (on_walk[w]) continue;
        seen[w] = 1;
        via[w] = e;
        prev[w] = v;
        queue.push_back(w);
      }
    }
    if (!found) continue;
    std::vector<CellId> closing_vertices;
    std::vector<CellId> closing_edges;
    for (CellId v = start; v != cur; v = prev[v]) {
      closing_edges.push_back(via[v]);
      if (prev[v] != cur) closing_vertices.push_back(prev[v]);
    }
    const std::size_t length = walk_edges.size() + closing_edges.size();
    if (length < bounds.min_length || length > bounds.max_length) continue;

    CellSet out(x.cell_count());
    for (CellId c : walk_vertices) out.insert(c);
    for (CellId c : walk_edges) out.insert(c);
    for (CellId c : closing_vertices) out.insert(c);
    for (CellId c : closing_edges) out.insert(c);
    return out;
  }
  throw Error(ErrorKind::generation_failure,
              "no simple cycle with length in [" + std::to_string(bounds.min_length) + ", " +
                  std::to_string(bounds.max_length) + "] after " + std::to_string(bounds.retries) +
                  " attempts");
}

}  // namespace vk
