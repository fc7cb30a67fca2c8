#include "vk/cover.hpp"

#include "vk/error.hpp"

namespace vk {

CellComplex order_complex(const CellComplex& x, const CellSet& retained) {
  if (retained.universe() != x.cell_count()) {
    throw Error(ErrorKind::parameter, "cell set does not match the complex");
  }
  const auto cells = retained.members();
  std::vector<ObjectId> vertices;
  vertices.reserve(cells.size());
  for (CellId c : cells) vertices.push_back(x.name(c));

  auto chain = [&](CellId lo, CellId hi) { return x.name(lo) + "<" + x.name(hi); };
  std::vector<Arrow> edges;
  std::vector<Face> faces;
  for (CellId t : cells) {
    for (CellId s : x.proper_faces(t)) {
      if (retained.contains(s)) edges.push_back({chain(s, t), x.name(s), x.name(t)});
    }
    if (x.dimension(t) != 2) continue;
    for (CellId e : x.boundary(t)) {
      if (!retained.contains(e)) continue;
      for (CellId v : x.boundary(e)) {
        if (!retained.contains(v)) continue;
        faces.push_back({x.name(v) + "<" + x.name(e) + "<" + x.name(t),
                         Word{x.name(v), {{chain(v, e), 1}, {chain(e, t), 1}, {chain(v, t), -1}}}});
      }
    }
  }
  return CellComplex(std::move(vertices), std::move(edges), std::move(faces));
}

Cover carve_cover(const CellComplex& x, const CellSet& d, const CellSet& e, CarveMode mode) {
  if (d.universe() != x.cell_count() || e.universe() != x.cell_count()) {
    throw Error(ErrorKind::parameter, "cell set does not match the complex");
  }
  if (!is_closed(x, d)) throw Error(ErrorKind::closure, "D is not a subcomplex");
  if (!is_closed(x, e)) throw Error(ErrorKind::closure, "E is not a subcomplex");
  if (mode == CarveMode::pbp && !d.disjoint(e)) throw Error(ErrorKind::disjointness, "D and E meet");

  Cover out;
  out.d = d;
  out.e = e;
  out.u = d.complement();
  out.v = e.complement();
  out.w = out.u.intersected(out.v);
  out.w_components = complement_components(x, d.united(e));
  for (const auto& part : out.w_components.parts) {
    out.basepoints.push_back(part.front());
    out.basepoint_names.push_back(x.name(part.front()));
  }
  out.u_model = order_complex(x, out.u);
  out.v_model = order_complex(x, out.v);
  out.w_model = order_complex(x, out.w);
  return out;
}

PushoutInput cover_pushout_input(const Cover& cover) {
  if (cover.basepoints.empty()) throw Error(ErrorKind::connectivity, "U n V is empty");
  const auto& j = cover.basepoint_names;
  const Restriction a = restrict_to_objects(cover.u_model.edge_path_groupoid(), j);
  const Restriction b = restrict_to_objects(cover.v_model.edge_path_groupoid(), j);
  const Restriction c = restrict_to_objects(cover.w_model.edge_path_groupoid(), j);

  PushoutInput in;
  in.objects = j;
  in.basepoint = j.front();
  in.a = a.presentation();
  in.b = b.presentation();
  in.c = c.presentation();
  for (const Arrow& gamma : in.c.arrows()) {
    const Word loop{gamma.src, {{gamma.id, 1}}};
    const Word path = c.realize(loop);
    in.i.arrow_map.emplace(gamma.id, a.map_word(path));
    in.j.arrow_map.emplace(gamma.id, b.map_word(path));
  }
  return in;
}

GroupPresentation object_group_at(const CellComplex& model, const ObjectId& basepoint) {
  return object_group_presentation(model.edge_path_groupoid(), basepoint);
}

}  // namespace vk
