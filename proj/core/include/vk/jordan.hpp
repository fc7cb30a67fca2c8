#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vk/complex.hpp"
#include "vk/group_analysis.hpp"

namespace vk {

/// True when a and b lie in different components of X \ D. Throws
/// ErrorKind::membership when a or b lies in D.
bool separates(const CellComplex& x, const CellSet& d, CellId a, CellId b);

struct PbpInstance {
  CellComplex x;
  CellSet d;
  CellSet e;
  CellId a = 0;
  CellId b = 0;
};

enum class PbpVerdict { holds, violated };

std::string_view to_string(PbpVerdict v);

struct PbpReport {
  bool d_separates = false;
  bool e_separates = false;
  bool union_separates = false;
  PbpVerdict verdict = PbpVerdict::holds;
};

/// Violated iff neither D nor E separates a from b but D u E does.
PbpReport pbp_check(const CellComplex& x, const CellSet& d, const CellSet& e, CellId a, CellId b);
PbpReport pbp_check(const PbpInstance& inst);

/// Disjoint pairs (D, E) drawn from single vertices and short arcs, with a, b
/// outside both. Deterministic in `seed`.
std::vector<PbpInstance> sample_pbp_family(const CellComplex& x, std::uint64_t seed, std::size_t count,
                                           std::size_t max_arc_edges = 3);

/// cycle(n) with D = {v0}, E = {v_(n/2)}, a = v1, b = v_(n/2+1). Needs n >= 4.
PbpInstance cycle_witness(std::size_t n);

/// Throws ErrorKind::shape unless `arc` is an arc.
bool arc_complement_connected(const CellComplex& x, const CellSet& arc);

/// The two halves of an arc, split at vertex ceil(k/2) of its k-edge
/// traversal; a one-edge arc splits into its endpoints. Empty for a vertex.
std::optional<std::pair<CellSet, CellSet>> bisect_arc(const CellComplex& x, const CellSet& arc);

struct BisectionStep {
  CellSet arc;
  CellSet first_half;
  CellSet second_half;
  bool first_separates = false;
  bool second_separates = false;
};

struct BisectionResult {
  /// Absent when the whole arc does not separate a from b.
  std::optional<CellSet> subarc;
  std::vector<BisectionStep> steps;
};

/// Repeated bisection toward a separating subarc whose halves do not separate
/// (or which is a single vertex), taking the first half when both separate.
BisectionResult bisection_separating_subarc(const CellComplex& x, const CellSet& arc, CellId a, CellId b);

struct StageCheck {
  std::string stage;
  bool passed = false;
  std::string detail;
};

struct PipelineSummary {
  CellId a = 0;
  CellId b = 0;
  std::size_t arc_a_edges = 0;
  std::size_t arc_b_edges = 0;
  std::vector<ObjectId> basepoints;
  AbelianInvariants u_invariants;
  AbelianInvariants v_invariants;
  /// Via the object-group pushout presentation.
  AbelianInvariants pushout_invariants;
  /// Via the groupoid pushout followed by object-group extraction.
  AbelianInvariants groupoid_invariants;
  /// Directly from X \ {a, b}.
  AbelianInvariants direct_invariants;
  std::size_t f_generators = 0;
  CertificateKind certificate = CertificateKind::none;
  std::vector<StageCheck> stages;

  bool passed() const;
  /// Name of the first failed stage.
  std::optional<std::string> first_failure() const;
};

struct JordanReport {
  std::size_t component_count = 0;
  std::vector<std::size_t> component_sizes;
  std::vector<bool> boundaries_equal_curve;
  std::optional<PipelineSummary> pipeline;

  /// Two components, each bounded by the curve, and a passing pipeline if one ran.
  bool holds() const;
};

/// Throws ErrorKind::shape unless `curve` is a simple cycle.
JordanReport jordan_curve_check(const CellComplex& x, const CellSet& curve);

/// Runs every stage and records the outcomes without throwing on failures.
PipelineSummary run_vankampen_jordan(const CellComplex& x, const CellSet& curve);

/// jordan_curve_check plus the pipeline; throws ErrorKind::pipeline naming the
/// first failed stage.
JordanReport vankampen_jordan_pipeline(const CellComplex& x, const CellSet& curve);

}  // namespace vk
