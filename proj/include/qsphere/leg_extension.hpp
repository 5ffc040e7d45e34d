#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qsphere/quiver.hpp"

namespace qsphere {

/// Leg-extended setting: each original vertex i of dimension d_i becomes a
/// leg of vertices (i,1) -> (i,2) -> ... -> (i,d_i), original arrows attach
/// at the leg tops, and the extended dimension vector assigns level k to
/// vertex (i,k). Extended vertices are ordered leg by leg, levels ascending,
/// so the extended index space is the concatenation of the legs.
struct LegExtendedSetting {
  QuiverSetting extended;
  std::vector<int> leg_start;                 // original index -> index of (i,1)
  std::vector<int> top_of;                    // original index -> index of (i,d_i)
  std::vector<std::pair<int, Int>> level_of;  // extended index -> (original, level)
};

/// Requires every dimension >= 1.
LegExtendedSetting extend(const QuiverSetting& s);

/// Levels nondecreasing along every leg. Requires 0 <= e <= extended dims.
bool is_flag_type(const LegExtendedSetting& x, const DimVector& e);

/// Both e and dims - e of flag type; equivalently every leg of e starts at 0
/// or 1 and climbs by 0 or 1 per level. Both formulations are evaluated and
/// must agree.
bool is_gentle(const LegExtendedSetting& x, const DimVector& e);

/// Streams the nonzero gentle vectors below the extended dimension vector.
/// A gentle vector is its word of per-leg increments; words are concatenated
/// in vertex order and enumerated lexicographically (ascending counter,
/// first position most significant). Refuses more than 62 positions.
class GentleEnumerator {
 public:
  explicit GentleEnumerator(const LegExtendedSetting& x);

  /// Writes the next gentle vector and returns true, or returns false when
  /// exhausted.
  bool next(DimVector& out);

  std::uint64_t total_nonzero() const { return last_; }

 private:
  const LegExtendedSetting* x_;
  int positions_;
  std::uint64_t counter_;
  std::uint64_t last_;
};

std::vector<DimVector> all_gentle(const LegExtendedSetting& x);

/// Transport a vector on extend(small) to extend(big) along the level-shift
/// embedding (i,k) -> (i, k + big_i - small_i); unmapped vertices get 0.
/// Requires the same quiver and small.dims <= big.dims entrywise.
DimVector lift_witness(const QuiverSetting& small, const QuiverSetting& big,
                       const DimVector& e);

}  // namespace qsphere
