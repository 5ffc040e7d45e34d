#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsphere/types.hpp"

namespace qsphere {

struct Arrow {
  int src = 0;
  int tgt = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite directed multigraph. Vertices are opaque string identifiers kept in
/// declaration order (the canonical order used by every vector and tie-break
/// in the library); arrows keep input order, parallel arrows and loops are
/// representable.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices,
         const std::vector<std::pair<std::string, std::string>>& arrows);
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::string& vertex_id(int i) const { return ids_.at(i); }
  int index_of(const std::string& id) const;  // throws on unknown id
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  bool has_loop() const;
  /// Undirected neighbour lists with multiplicity; loops appear once as a
  /// self-entry.
  std::vector<std::vector<int>> undirected_adjacency() const;
  bool is_oriented_acyclic() const;
  Quiver with_arrow_reversed(int arrow_index) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.ids_ == b.ids_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> index_;
};

/// A quiver together with a dimension vector on its vertices.
struct QuiverSetting {
  Quiver quiver;
  DimVector dims;
};

bool same_setting(const QuiverSetting& a, const QuiverSetting& b);

struct UnderlyingAnalysis {
  bool connected = false;
  bool simple_tree = false;
  bool has_cycle_or_multiedge = false;
  bool has_loop = false;
};

/// Pieces obtained by duplicating every thin cut vertex (dimension 1, degree
/// >= 2) once per incident edge. Pieces are full subquivers on original
/// vertex identifiers; a glue vertex belongs to each piece it touches.
struct PieceDecomposition {
  std::vector<QuiverSetting> pieces;
  std::vector<std::string> glue_vertices;
};

/// Full subquiver on the vertices of positive dimension.
QuiverSetting restrict_to_support(const QuiverSetting& s);

/// Shape facts about the underlying undirected multigraph. Dimension values
/// are ignored; run restrict_to_support first if that is the intent.
UnderlyingAnalysis underlying_analysis(const QuiverSetting& s);

PieceDecomposition split_at_thin_cut_vertices(const QuiverSetting& s);

/// Connected components as full subquivers, vertex order preserved.
std::vector<QuiverSetting> connected_components(const QuiverSetting& s);

}  // namespace qsphere
