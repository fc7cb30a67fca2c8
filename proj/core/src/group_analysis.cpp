#include "vk/group_analysis.hpp"

#include <algorithm>
#include <unordered_map>

namespace vk {

std::string format_invariants(const AbelianInvariants& a) {
  std::string out;
  if (a.free_rank > 0) out = a.free_rank == 1 ? "Z" : "Z^" + std::to_string(a.free_rank);
  for (const Integer& t : a.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out.empty() ? "0" : out;
}

IntegerMatrix relator_matrix(const GroupPresentation& p) {
  std::unordered_map<std::string, std::size_t> column;
  column.reserve(p.generators.size());
  for (std::size_t c = 0; c < p.generators.size(); ++c) column.emplace(p.generators[c], c);
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::unordered_map<std::size_t, long> sums;
    for (const Letter& l : p.relators[r]) sums[column.at(l.symbol)] += l.sign;
    for (const auto& [c, s] : sums) {
      if (s != 0) m.set(r, c, s);
    }
  }
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const std::vector<Integer> snf = smith_normal_form(relator_matrix(p));
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const Integer& d : snf) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = p.generators.size() - nonzero;
  return out;
}

std::string_view to_string(ZRetractVerdict v) {
  return v == ZRetractVerdict::certified_no_z_retract ? "certified_no_Z_retract" : "inconclusive";
}

ZRetractVerdict no_z_retract_sufficient(const GroupPresentation& p) {
  return abelianization(p).free_rank == 0 ? ZRetractVerdict::certified_no_z_retract
                                          : ZRetractVerdict::inconclusive;
}

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::none: return "none";
    case CertificateKind::nontrivial: return "nontrivial";
    case CertificateKind::nonabelian: return "nonabelian";
  }
  return "none";
}

namespace {

// g = expression solved from the single occurrence of g in `r`.
Letters solve_for(const Letters& r, std::size_t at) {
  const Letters before(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(at));
  const Letters after(r.begin() + static_cast<std::ptrdiff_t>(at) + 1, r.end());
  // u g v = 1  =>  g = u^-1 v^-1;   u g^-1 v = 1  =>  g = v u
  if (r[at].sign > 0) return free_reduce(concat(inverse(before), inverse(after)));
  return free_reduce(concat(after, before));
}

bool eliminate_once(GroupPresentation& p) {
  std::vector<std::size_t> order(p.relators.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.relators[a].size() < p.relators[b].size();
  });
  for (std::size_t ri : order) {
    const Letters& r = p.relators[ri];
    std::unordered_map<std::string, std::size_t> count;
    for (const Letter& l : r) ++count[l.symbol];
    for (std::size_t at = 0; at < r.size(); ++at) {
      if (count[r[at].symbol] != 1) continue;
      const std::string gen = r[at].symbol;
      const Letters value = solve_for(r, at);
      const Letters value_inv = inverse(value);
      std::vector<Letters> relators;
      for (std::size_t k = 0; k < p.relators.size(); ++k) {
        if (k == ri) continue;
        Letters rewritten;
        for (const Letter& l : p.relators[k]) {
          if (l.symbol != gen) {
            rewritten.push_back(l);
          } else {
            const Letters& v = l.sign > 0 ? value : value_inv;
            rewritten.insert(rewritten.end(), v.begin(), v.end());
          }
        }
        relators.push_back(free_reduce(rewritten));
      }
      p.relators = std::move(relators);
      std::erase(p.generators, gen);
      return true;
    }
  }
  return false;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t budget) {
  GroupPresentation out = p;
  for (std::size_t step = 0; step < budget; ++step) {
    bool moved = false;
    for (Letters& r : out.relators) {
      Letters reduced = cyclic_reduce(r);
      if (reduced.size() != r.size()) {
        r = std::move(reduced);
        moved = true;
        break;
      }
    }
    if (moved) continue;
    auto empty = std::find_if(out.relators.begin(), out.relators.end(),
                              [](const Letters& r) { return r.empty(); });
    if (empty != out.relators.end()) {
      out.relators.erase(empty);
      continue;
    }
    if (!eliminate_once(out)) break;
  }
  return out;
}

}  // namespace vk
