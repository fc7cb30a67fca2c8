#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vk/groupoid.hpp"

namespace vk {

/// Global cell index: vertices first, then edges, then faces.
using CellId = std::size_t;

struct Face {
  std::string id;
  Word boundary;

  friend bool operator==(const Face&, const Face&) = default;
};

/// A finite regular 2-dimensional cell complex. Edges are arrows between
/// vertices; each face is attached along a closed edge word. All cell names
/// are distinct.
class CellComplex {
 public:
  CellComplex() = default;
  CellComplex(std::vector<ObjectId> vertices, std::vector<Arrow> edges, std::vector<Face> faces);

  const std::vector<ObjectId>& vertices() const { return vertices_; }
  const std::vector<Arrow>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t cell_count() const { return names_.size(); }

  CellId vertex_cell(std::size_t i) const { return i; }
  CellId edge_cell(std::size_t k) const { return vertices_.size() + k; }
  CellId face_cell(std::size_t f) const { return vertices_.size() + edges_.size() + f; }

  int dimension(CellId c) const;
  const std::string& name(CellId c) const { return names_.at(c); }
  std::optional<CellId> find(std::string_view name) const;
  /// Throws ErrorKind::name for an unknown cell.
  CellId cell(std::string_view name) const;

  /// Immediate faces (endpoints of an edge, boundary edges of a face), sorted, distinct.
  std::span<const CellId> boundary(CellId c) const { return boundary_.at(c); }
  /// Cells having `c` in their immediate boundary.
  std::span<const CellId> coboundary(CellId c) const { return coboundary_.at(c); }
  /// Every cell in the closure of `c` other than `c` itself, sorted.
  std::vector<CellId> proper_faces(CellId c) const;

  long euler_characteristic() const;

  /// Objects = vertices, arrows = edges, relations = face boundaries.
  const GroupoidPresentation& edge_path_groupoid() const { return groupoid_; }

  friend bool operator==(const CellComplex& a, const CellComplex& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.faces_ == b.faces_;
  }

 private:
  std::vector<ObjectId> vertices_;
  std::vector<Arrow> edges_;
  std::vector<Face> faces_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, CellId> index_;
  std::vector<std::vector<CellId>> boundary_;
  std::vector<std::vector<CellId>> coboundary_;
  GroupoidPresentation groupoid_;
};

/// A set of cells of one complex, stored as a membership mask.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(std::size_t universe) : mask_(universe, false) {}
  static CellSet of(std::size_t universe, std::span<const CellId> cells);
  static CellSet named(const CellComplex& x, std::span<const std::string> names);

  std::size_t universe() const { return mask_.size(); }
  bool contains(CellId c) const { return c < mask_.size() && mask_[c]; }
  void insert(CellId c) { mask_.at(c) = true; }
  void erase(CellId c) { mask_.at(c) = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<CellId> members() const;

  CellSet complement() const;
  CellSet united(const CellSet& other) const;
  CellSet intersected(const CellSet& other) const;
  bool disjoint(const CellSet& other) const;
  bool subset_of(const CellSet& other) const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::vector<bool> mask_;
};

std::vector<std::string> cell_names(const CellComplex& x, const CellSet& s);

/// A subcomplex is closed when it contains the closure of each of its cells.
bool is_closed(const CellComplex& x, const CellSet& s);
CellSet closure(const CellComplex& x, const CellSet& s);

enum class Model { grid_sphere, cycle, interval, disk, annulus };

std::string_view to_string(Model m);
/// Throws ErrorKind::parameter for an unknown model name.
Model parse_model(std::string_view name);
long declared_euler_characteristic(Model m);

/// grid_sphere(n): n x n grid plus one outer face; cycle(n); interval(n) with
/// n edges; disk(n): grid alone; annulus(n): grid minus its central face.
CellComplex build_space(Model m, std::size_t n);

/// The edge-path groupoid with a marked set J of base vertices.
struct BasedGroupoid {
  GroupoidPresentation groupoid;
  std::vector<ObjectId> basepoints;
};

/// Throws ErrorKind::connectivity when J is empty or misses a component.
BasedGroupoid fundamental_groupoid_presentation(const CellComplex& x, std::vector<ObjectId> basepoints);

/// Connected pieces of the cells not in `removed`, under the face relation.
struct ComponentPartition {
  static constexpr CellId npos = static_cast<CellId>(-1);

  /// Each part sorted; parts ordered by their lowest cell.
  std::vector<std::vector<CellId>> parts;
  /// Part index per cell, -1 for removed cells.
  std::vector<std::ptrdiff_t> part_of;
  /// Breadth-first parent of each retained cell inside its part (roots map to
  /// themselves, removed cells to npos). Each link joins a cell to one of its
  /// faces or cofaces.
  std::vector<CellId> witness_parent;

  std::size_t count() const { return parts.size(); }
};

ComponentPartition complement_components(const CellComplex& x, const CellSet& removed);

/// closure(part) minus part.
CellSet component_boundary(const CellComplex& x, std::span<const CellId> part);

/// Alternating vertex/edge cells along an arc (v e v ... v) or a cycle
/// (v e v ... v e, the last edge returning to the first vertex).
struct CellPath {
  std::vector<CellId> cells;

  std::size_t edge_count() const { return cells.size() / 2; }
  friend bool operator==(const CellPath&, const CellPath&) = default;
};

bool is_simple_cycle(const CellComplex& x, const CellSet& c);
/// Starts at the lowest vertex, heading first towards its lower neighbour.
/// Throws ErrorKind::shape unless `c` is a simple cycle.
CellPath trace_cycle(const CellComplex& x, const CellSet& c);

bool is_arc(const CellComplex& x, const CellSet& a);
/// Starts at the endpoint with the lower vertex id. Throws ErrorKind::shape
/// unless `a` is an arc (a single vertex counts).
CellPath trace_arc(const CellComplex& x, const CellSet& a);

CellSet cells_of(const CellComplex& x, const CellPath& path);

struct CycleBounds {
  std::size_t min_length = 4;
  std::size_t max_length = 64;
  std::size_t retries = 10000;
};

/// Self-avoiding walk from a random vertex, closed by a shortest path that
/// avoids the walk; restarts until the length fits the bounds. Deterministic
/// in `seed`. Throws ErrorKind::generation_failure when the retries run out.
CellSet random_simple_cycle(const CellComplex& x, std::uint64_t seed, const CycleBounds& bounds);

}  // namespace vk
