#pragma once

#include <vector>

#include "vk/complex.hpp"
#include "vk/pushout.hpp"

namespace vk {

/// The order complex of the retained cells: one vertex per cell, one edge
/// `s<t` per comparable pair, one triangle `v<e<f` per vertex-edge-face chain.
/// When the retained cells form an up-set this is a model of the open set
/// they span.
CellComplex order_complex(const CellComplex& x, const CellSet& retained);

enum class CarveMode { general, pbp };

/// U = X \ D, V = X \ E and W = U n V for closed D, E.
struct Cover {
  CellSet d;
  CellSet e;
  CellSet u;
  CellSet v;
  CellSet w;
  ComponentPartition w_components;
  /// Lowest cell of each component of W.
  std::vector<CellId> basepoints;
  std::vector<ObjectId> basepoint_names;
  CellComplex u_model;
  CellComplex v_model;
  CellComplex w_model;
};

/// Throws ErrorKind::closure when D or E is not a subcomplex, and in pbp mode
/// ErrorKind::disjointness when they meet.
Cover carve_cover(const CellComplex& x, const CellSet& d, const CellSet& e,
                  CarveMode mode = CarveMode::general);

/// The square pi1(W, J) -> pi1(U, J), pi1(V, J) with J the cover's basepoints.
PushoutInput cover_pushout_input(const Cover& cover);

/// pi1 of a model at a vertex.
GroupPresentation object_group_at(const CellComplex& model, const ObjectId& basepoint);

}  // namespace vk
