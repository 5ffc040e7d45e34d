#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsphere/leg_extension.hpp"
#include "qsphere/roots.hpp"

namespace qsphere {

enum class Method { RootCriterion, Structural, Both };

struct SphericityVerdict {
  QuiverSetting setting;
  bool spherical = false;
  Method method = Method::Structural;
  /// First gentle imaginary vector found on the leg extension, when the root
  /// criterion decided non-spherical.
  std::optional<DimVector> witness;
  std::optional<PieceDecomposition> decomposition;
  std::vector<std::string> piece_labels;  // aligned with decomposition.pieces
  std::optional<bool> agreement;          // set when both methods ran
};

/// check() runs the root criterion only when the gentle search space is this
/// small; larger settings get a structural-only verdict.
inline constexpr Int kCheckGentleSumLimit = 24;

/// Shape label for one split piece: "A1", "A2", "A3-(m,2,n)", "A3-(m,n,1)"
/// or "forbidden".
std::string piece_label(const QuiverSetting& piece);

/// Exhaustive search for a gentle imaginary vector on the leg extension;
/// spherical means none exists. Requires a connected, oriented-acyclic
/// setting with dimensions >= 1.
SphericityVerdict is_spherical_root_criterion(const QuiverSetting& s);

/// Simple tree whose thin-split pieces all carry an allowed label. Requires
/// a connected setting with dimensions >= 1.
SphericityVerdict is_spherical_structural(const QuiverSetting& s);

/// Structural verdict, cross-checked against the root criterion whenever the
/// quiver is oriented-acyclic and small enough to enumerate.
SphericityVerdict check(const QuiverSetting& s);

/// Support restriction, then one check() per connected component.
std::vector<SphericityVerdict> analyze(const QuiverSetting& s);

/// Gentle imaginary vector of least entry sum (first in enumeration order on
/// ties), when one exists. Same preconditions as the root criterion.
std::optional<DimVector> minimal_witness(const QuiverSetting& s);

struct ScanDisagreement {
  QuiverSetting setting;
  bool structural = false;
  bool root_criterion = false;
};

struct ScanReport {
  int max_vertices = 0;
  int max_dim = 0;
  std::uint64_t settings = 0;
  std::uint64_t spherical = 0;
  std::uint64_t non_spherical = 0;
  std::vector<ScanDisagreement> disagreements;
};

/// Every simple tree up to isomorphism on at most max_vertices vertices,
/// every arrow orientation, every dimension vector in [1, max_dim]^V; both
/// deciders run on each setting. Deterministic order, single-threaded.
void scan_settings(
    int max_vertices, int max_dim,
    const std::function<void(const QuiverSetting&, const SphericityVerdict&,
                             const SphericityVerdict&)>& visit);

ScanReport scan(int max_vertices, int max_dim);

/// Edge lists of the unlabeled trees on n vertices (vertices 0..n-1, edges
/// (u,v) with u < v, deterministic order).
std::vector<std::vector<std::pair<int, int>>> unlabeled_trees(int n);

}  // namespace qsphere
