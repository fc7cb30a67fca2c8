#include "vk/jordan.hpp"

#include <algorithm>
#include <random>

#include "vk/cover.hpp"
#include "vk/error.hpp"
#include "vk/pushout.hpp"

namespace vk {

bool separates(const CellComplex& x, const CellSet& d, CellId a, CellId b) {
  if (a >= x.cell_count() || b >= x.cell_count()) throw Error(ErrorKind::name, "cell index out of range");
  if (d.contains(a)) throw Error(ErrorKind::membership, "'" + x.name(a) + "' lies in the removed set");
  if (d.contains(b)) throw Error(ErrorKind::membership, "'" + x.name(b) + "' lies in the removed set");
  const ComponentPartition parts = complement_components(x, d);
  return parts.part_of[a] != parts.part_of[b];
}

std::string_view to_string(PbpVerdict v) { return v == PbpVerdict::violated ? "violated" : "holds"; }

PbpReport pbp_check(const CellComplex& x, const CellSet& d, const CellSet& e, CellId a, CellId b) {
  if (!is_closed(x, d)) throw Error(ErrorKind::closure, "D is not a subcomplex");
  if (!is_closed(x, e)) throw Error(ErrorKind::closure, "E is not a subcomplex");
  if (!d.disjoint(e)) throw Error(ErrorKind::disjointness, "D and E meet");
  for (CellId p : {a, b}) {
    if (p >= x.vertex_count()) throw Error(ErrorKind::parameter, "a and b must be vertices");
  }
  PbpReport r;
  r.d_separates = separates(x, d, a, b);
  r.e_separates = separates(x, e, a, b);
  r.union_separates = separates(x, d.united(e), a, b);
  if (!r.d_separates && !r.e_separates && r.union_separates) r.verdict = PbpVerdict::violated;
  return r;
}

PbpReport pbp_check(const PbpInstance& inst) { return pbp_check(inst.x, inst.d, inst.e, inst.a, inst.b); }

namespace {

std::vector<std::vector<std::pair<CellId, CellId>>> vertex_adjacency(const CellComplex& x) {
  std::vector<std::vector<std::pair<CellId, CellId>>> adj(x.vertex_count());
  for (std::size_t k = 0; k < x.edge_count(); ++k) {
    const Arrow& e = x.edges()[k];
    if (e.is_loop()) continue;
    const CellId s = x.cell(e.src);
    const CellId t = x.cell(e.tgt);
    adj[s].emplace_back(x.edge_cell(k), t);
    adj[t].emplace_back(x.edge_cell(k), s);
  }
  return adj;
}

template <class Rng>
std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// A vertex or a short self-avoiding path avoiding `blocked`.
template <class Rng>
std::optional<CellSet> small_closed_set(const CellComplex& x,
                                        const std::vector<std::vector<std::pair<CellId, CellId>>>& adj,
                                        Rng& rng, std::size_t max_edges, const CellSet& blocked) {
  std::vector<CellId> free;
  for (CellId v = 0; v < x.vertex_count(); ++v) {
    if (!blocked.contains(v)) free.push_back(v);
  }
  if (free.empty()) return std::nullopt;
  const std::size_t length = pick(rng, max_edges + 1);
  CellSet out(x.cell_count());
  CellId cur = free[pick(rng, free.size())];
  out.insert(cur);
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<std::pair<CellId, CellId>> options;
    for (const auto& link : adj[cur]) {
      if (!out.contains(link.second) && !blocked.contains(link.second) && !blocked.contains(link.first)) {
        options.push_back(link);
      }
    }
    if (options.empty()) break;
    const auto [e, next] = options[pick(rng, options.size())];
    out.insert(e);
    out.insert(next);
    cur = next;
  }
  return out;
}

}  // namespace

std::vector<PbpInstance> sample_pbp_family(const CellComplex& x, std::uint64_t seed, std::size_t count,
                                           std::size_t max_arc_edges) {
  const auto adj = vertex_adjacency(x);
  std::mt19937_64 rng(seed);
  std::vector<PbpInstance> out;
  constexpr std::size_t retries = 1000;
  while (out.size() < count) {
    bool made = false;
    for (std::size_t attempt = 0; attempt < retries && !made; ++attempt) {
      const CellSet none(x.cell_count());
      auto d = small_closed_set(x, adj, rng, max_arc_edges, none);
      if (!d) continue;
      auto e = small_closed_set(x, adj, rng, max_arc_edges, *d);
      if (!e) continue;
      const CellSet removed = d->united(*e);
      std::vector<CellId> free;
      for (CellId v = 0; v < x.vertex_count(); ++v) {
        if (!removed.contains(v)) free.push_back(v);
      }
      if (free.size() < 2) continue;
      const std::size_t ia = pick(rng, free.size());
      std::size_t ib = pick(rng, free.size() - 1);
      if (ib >= ia) ++ib;
      out.push_back(PbpInstance{x, std::move(*d), std::move(*e), free[ia], free[ib]});
      made = true;
    }
    if (!made) throw Error(ErrorKind::generation_failure, "could not sample a PBP instance");
  }
  return out;
}

PbpInstance cycle_witness(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::parameter, "the cycle witness needs at least 4 vertices");
  CellComplex x = build_space(Model::cycle, n);
  const std::size_t half = n / 2;
  CellSet d(x.cell_count());
  d.insert(x.vertex_cell(0));
  CellSet e(x.cell_count());
  e.insert(x.vertex_cell(half));
  return PbpInstance{std::move(x), std::move(d), std::move(e), 1, half + 1};
}

bool arc_complement_connected(const CellComplex& x, const CellSet& arc) {
  trace_arc(x, arc);
  return complement_components(x, arc).count() == 1;
}

std::optional<std::pair<CellSet, CellSet>> bisect_arc(const CellComplex& x, const CellSet& arc) {
  const CellPath path = trace_arc(x, arc);
  const std::size_t k = path.edge_count();
  if (k == 0) return std::nullopt;
  const auto& cells = path.cells;
  if (k == 1) {
    return std::pair{CellSet::of(x.cell_count(), std::span(cells).first(1)),
                     CellSet::of(x.cell_count(), std::span(cells).last(1))};
  }
  const std::size_t mid = 2 * ((k + 1) / 2);
  return std::pair{CellSet::of(x.cell_count(), std::span(cells).first(mid + 1)),
                   CellSet::of(x.cell_count(), std::span(cells).subspan(mid))};
}

BisectionResult bisection_separating_subarc(const CellComplex& x, const CellSet& arc, CellId a, CellId b) {
  trace_arc(x, arc);
  BisectionResult out;
  if (!separates(x, arc, a, b)) return out;
  CellSet current = arc;
  while (auto halves = bisect_arc(x, current)) {
    BisectionStep step{current, halves->first, halves->second, separates(x, halves->first, a, b),
                       separates(x, halves->second, a, b)};
    const bool first = step.first_separates;
    const bool second = step.second_separates;
    out.steps.push_back(std::move(step));
    if (first) {
      current = halves->first;
    } else if (second) {
      current = halves->second;
    } else {
      break;
    }
  }
  out.subarc = std::move(current);
  return out;
}

bool PipelineSummary::passed() const {
  return std::all_of(stages.begin(), stages.end(), [](const StageCheck& s) { return s.passed; });
}

std::optional<std::string> PipelineSummary::first_failure() const {
  for (const StageCheck& s : stages) {
    if (!s.passed) return s.stage;
  }
  return std::nullopt;
}

bool JordanReport::holds() const {
  return component_count == 2 && boundaries_equal_curve.size() == 2 &&
         std::all_of(boundaries_equal_curve.begin(), boundaries_equal_curve.end(), [](bool v) { return v; }) &&
         (!pipeline || pipeline->passed());
}

JordanReport jordan_curve_check(const CellComplex& x, const CellSet& curve) {
  trace_cycle(x, curve);
  const ComponentPartition parts = complement_components(x, curve);
  JordanReport r;
  r.component_count = parts.count();
  for (const auto& part : parts.parts) {
    r.component_sizes.push_back(part.size());
    r.boundaries_equal_curve.push_back(component_boundary(x, part) == curve);
  }
  return r;
}

PipelineSummary run_vankampen_jordan(const CellComplex& x, const CellSet& curve) {
  const CellPath cycle = trace_cycle(x, curve);
  const std::size_t length = cycle.edge_count();
  if (length < 4) throw Error(ErrorKind::shape, "curve has fewer than 4 edges");
  const std::size_t half = length / 2;
  const auto& cells = cycle.cells;
  CellPath arc_a{{cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(2 * half + 1)}};
  CellPath arc_b{{cells.begin() + static_cast<std::ptrdiff_t>(2 * half), cells.end()}};
  arc_b.cells.push_back(cells.front());

  PipelineSummary s;
  s.a = cells.front();
  s.b = cells[2 * half];
  s.arc_a_edges = arc_a.edge_count();
  s.arc_b_edges = arc_b.edge_count();
  auto stage = [&](std::string name, bool passed, std::string detail) {
    s.stages.push_back(StageCheck{std::move(name), passed, std::move(detail)});
    return passed;
  };

  const CellSet a_set = cells_of(x, arc_a);
  const CellSet b_set = cells_of(x, arc_b);
  const std::size_t u_parts = complement_components(x, a_set).count();
  const std::size_t v_parts = complement_components(x, b_set).count();
  const bool u_ok = stage("u_connected", u_parts == 1, std::to_string(u_parts) + " component(s)");
  const bool v_ok = stage("v_connected", v_parts == 1, std::to_string(v_parts) + " component(s)");
  if (!u_ok || !v_ok) return s;

  try {
    const Cover cover = carve_cover(x, a_set, b_set);
    s.basepoints = cover.basepoint_names;
    stage("basepoints", s.basepoints.size() == 2, "|J| = " + std::to_string(s.basepoints.size()));
    const ObjectId& p = s.basepoints.front();

    s.u_invariants = abelianization(object_group_at(cover.u_model, p));
    stage("u_trivial", s.u_invariants.trivial(), format_invariants(s.u_invariants));
    s.v_invariants = abelianization(object_group_at(cover.v_model, p));
    stage("v_trivial", s.v_invariants.trivial(), format_invariants(s.v_invariants));

    const PushoutInput input = cover_pushout_input(cover);
    const PushoutResult result = pushout_object_group(input);
    s.f_generators = result.f_generators.size();
    s.pushout_invariants = abelianization(result.presentation);
    stage("pushout_rank", s.pushout_invariants.free_rank == 1, format_invariants(s.pushout_invariants));

    s.groupoid_invariants =
        abelianization(object_group_presentation(groupoid_pushout_presentation(input), p));
    stage("groupoid_route", s.groupoid_invariants == s.pushout_invariants,
          format_invariants(s.groupoid_invariants));

    CellSet punctures(x.cell_count());
    punctures.insert(s.a);
    punctures.insert(s.b);
    s.direct_invariants = abelianization(object_group_at(order_complex(x, punctures.complement()), p));
    stage("direct_rank", s.direct_invariants.free_rank == 1, format_invariants(s.direct_invariants));
    stage("direct_route", s.direct_invariants == s.pushout_invariants, format_invariants(s.direct_invariants));

    stage("f_count", s.f_generators + 1 == s.basepoints.size(),
          std::to_string(s.f_generators) + " f-generator(s)");
    s.certificate = certify(result).kind;
    stage("certificate", s.certificate == CertificateKind::nontrivial, std::string(to_string(s.certificate)));
  } catch (const Error& e) {
    stage("pushout", false, e.what());
  }
  return s;
}

JordanReport vankampen_jordan_pipeline(const CellComplex& x, const CellSet& curve) {
  JordanReport r = jordan_curve_check(x, curve);
  r.pipeline = run_vankampen_jordan(x, curve);
  if (auto failed = r.pipeline->first_failure()) {
    const auto it = std::find_if(r.pipeline->stages.begin(), r.pipeline->stages.end(),
                                 [&](const StageCheck& st) { return st.stage == *failed; });
    throw Error(ErrorKind::pipeline, "stage '" + *failed + "' failed: " + it->detail);
  }
  return r;
}

}  // namespace vk
