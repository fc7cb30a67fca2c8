#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "vk/groupoid.hpp"
#include "vk/smith.hpp"

namespace vk {

/// Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ...
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string format_invariants(const AbelianInvariants& a);

/// Row per relator, column per generator, entries are exponent sums.
IntegerMatrix relator_matrix(const GroupPresentation& p);

AbelianInvariants abelianization(const GroupPresentation& p);

enum class ZRetractVerdict { certified_no_z_retract, inconclusive };

std::string_view to_string(ZRetractVerdict v);

/// One-sided: a Z retract would split off a Z summand of the abelianization,
/// so free rank 0 rules it out. Never asserts that a retract exists.
ZRetractVerdict no_z_retract_sufficient(const GroupPresentation& p);

/// Applies at most `budget` sound Tietze moves: cyclic cancellation inside a
/// relator, deletion of an empty relator, and elimination of a generator that
/// occurs exactly once in some relator.
GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t budget);

enum class CertificateKind { none, nontrivial, nonabelian };

std::string_view to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::none;
  /// f_x, present for nontrivial and nonabelian certificates.
  Letters nontrivial_witness;
  /// [f_x, f_y], present for nonabelian certificates.
  Letters commutator_witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

}  // namespace vk
