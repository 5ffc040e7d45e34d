#pragma once

#include <cstdint>
#include <vector>

#include "qsphere/quiver.hpp"

namespace qsphere {

enum class GroupKind { Borel, Full };

/// Dense matrix over F_p; entries are residues in [0, p).
struct ModMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint32_t> a;  // row-major

  std::uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  std::uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  static ModMatrix zero(int r, int c) { return {r, c, std::vector<std::uint32_t>(static_cast<size_t>(r) * c, 0)}; }
  static ModMatrix identity(int n);
};

ModMatrix mod_mul(const ModMatrix& x, const ModMatrix& y, std::uint32_t p);
int mod_nullity(ModMatrix m, std::uint32_t p);
ModMatrix mod_inverse(const ModMatrix& m, std::uint32_t p);

/// One invertible block per vertex; Borel blocks are upper triangular with
/// unit diagonal entries (nonzero residues).
using GroupElement = std::vector<ModMatrix>;

/// Hard limits: counting refuses rather than approximates. The environment
/// variable QSPHERE_MAX_COST overrides max_group_order at the CLI.
struct CostGuard {
  Int max_space_dim = 10;
  std::uint64_t max_group_order = 10'000'000;
};

struct OrbitReport {
  QuiverSetting setting;
  Int prime = 0;
  GroupKind kind = GroupKind::Borel;
  std::uint64_t group_order = 0;
  Int space_dim = 0;  // N with |R_d(F_p)| = p^N
  std::uint64_t space_size = 0;
  std::uint64_t orbit_count = 0;
};

std::uint64_t matrix_group_order(GroupKind kind, Int n, Int p);

/// Exact orbit count of the chosen group on the representation space over
/// F_p, by summing fixed-point counts over every group element. Each element
/// fixes p^nullity points, nullity taken per arrow from the operator
/// f -> g_tgt f - f g_src. The total must divide by the group order; the
/// count is never approximated.
OrbitReport count_orbits(const QuiverSetting& s, Int p, GroupKind kind,
                         const CostGuard& guard = {});

struct GrowthProbe {
  bool growing = false;
  std::vector<std::uint64_t> counts;
};

/// Borel orbit counts over an ascending list of primes; growing means
/// strictly increasing.
GrowthProbe growth_probe(const QuiverSetting& s, const std::vector<Int>& primes,
                         const CostGuard& guard = {});

/// Full-group orbit count on the flag-type points (all leg maps injective)
/// of the leg extension over F_p, by union-find over the whole point set.
/// Tiny settings only: p in {2,3}, dimension sum <= 4, extension space
/// p^N <= 2^21.
std::uint64_t flag_orbit_count(const QuiverSetting& s, Int p);

/// Compares Borel orbits on the original setting against full-group orbits
/// on flag-type points of the extension; the two counts come from
/// independent routes (element sums vs point merging).
bool flag_bijection_check(const QuiverSetting& s, Int p,
                          const CostGuard& guard = {});

}  // namespace qsphere
