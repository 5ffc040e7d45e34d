#include "qsphere/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsphere {

namespace {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;

  explicit UnionFind(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns false when x and y were already joined.
  bool unite(int x, int y) {
    int a = find(x);
    int b = find(y);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

void check_setting_shape(const QuiverSetting& s, const char* where) {
  if (s.dims.size() != s.quiver.vertex_count())
    throw std::invalid_argument(std::string(where) +
                                ": dimension vector does not match the vertex set");
}

QuiverSetting subsetting(const QuiverSetting& s, const std::vector<int>& vertices,
                         const std::vector<int>& arrow_indices) {
  std::vector<int> remap(s.quiver.vertex_count(), -1);
  std::vector<std::string> ids;
  ids.reserve(vertices.size());
  DimVector dims(static_cast<Eigen::Index>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i) {
    remap[vertices[i]] = static_cast<int>(i);
    ids.push_back(s.quiver.vertex_id(vertices[i]));
    dims[static_cast<Eigen::Index>(i)] = s.dims[vertices[i]];
  }
  std::vector<Arrow> arrows;
  arrows.reserve(arrow_indices.size());
  for (int ai : arrow_indices) {
    const Arrow& a = s.quiver.arrows()[ai];
    arrows.push_back({remap[a.src], remap[a.tgt]});
  }
  return {Quiver(std::move(ids), std::move(arrows)), std::move(dims)};
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices,
               const std::vector<std::pair<std::string, std::string>>& arrows)
    : ids_(std::move(vertices)) {
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i)
    if (!index_.emplace(ids_[i], i).second)
      throw std::invalid_argument("duplicate vertex identifier: " + ids_[i]);
  arrows_.reserve(arrows.size());
  for (const auto& [s, t] : arrows) arrows_.push_back({index_of(s), index_of(t)});
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : ids_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i)
    if (!index_.emplace(ids_[i], i).second)
      throw std::invalid_argument("duplicate vertex identifier: " + ids_[i]);
  for (const Arrow& a : arrows_)
    if (a.src < 0 || a.src >= vertex_count() || a.tgt < 0 || a.tgt >= vertex_count())
      throw std::invalid_argument("arrow endpoint out of range");
}

int Quiver::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + id);
  return it->second;
}

bool Quiver::has_loop() const {
  return std::any_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.src == a.tgt; });
}

std::vector<std::vector<int>> Quiver::undirected_adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count());
  for (const Arrow& a : arrows_) {
    adj[a.src].push_back(a.tgt);
    if (a.tgt != a.src) adj[a.tgt].push_back(a.src);
  }
  return adj;
}

bool Quiver::is_oriented_acyclic() const {
  const int n = vertex_count();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const Arrow& a : arrows_) {
    if (a.src == a.tgt) return false;
    ++indeg[a.tgt];
    out[a.src].push_back(a.tgt);
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

Quiver Quiver::with_arrow_reversed(int arrow_index) const {
  if (arrow_index < 0 || arrow_index >= arrow_count())
    throw std::invalid_argument("arrow index out of range");
  std::vector<Arrow> arrows = arrows_;
  std::swap(arrows[arrow_index].src, arrows[arrow_index].tgt);
  return Quiver(ids_, std::move(arrows));
}

bool same_setting(const QuiverSetting& a, const QuiverSetting& b) {
  return a.quiver == b.quiver && same_vector(a.dims, b.dims);
}

QuiverSetting restrict_to_support(const QuiverSetting& s) {
  check_setting_shape(s, "restrict_to_support");
  if ((s.dims.array() < 0).any())
    throw std::invalid_argument("restrict_to_support: negative dimension");
  std::vector<int> keep;
  for (int v = 0; v < s.quiver.vertex_count(); ++v)
    if (s.dims[v] > 0) keep.push_back(v);
  std::vector<char> kept(s.quiver.vertex_count(), 0);
  for (int v : keep) kept[v] = 1;
  std::vector<int> arrows;
  for (int ai = 0; ai < s.quiver.arrow_count(); ++ai) {
    const Arrow& a = s.quiver.arrows()[ai];
    if (kept[a.src] && kept[a.tgt]) arrows.push_back(ai);
  }
  return subsetting(s, keep, arrows);
}

UnderlyingAnalysis underlying_analysis(const QuiverSetting& s) {
  check_setting_shape(s, "underlying_analysis");
  const Quiver& q = s.quiver;
  const int n = q.vertex_count();
  UnderlyingAnalysis out;
  UnionFind uf(n);
  int components = n;
  for (const Arrow& a : q.arrows()) {
    if (a.src == a.tgt) {
      out.has_loop = true;
      out.has_cycle_or_multiedge = true;
      continue;
    }
    if (uf.unite(a.src, a.tgt))
      --components;
    else
      out.has_cycle_or_multiedge = true;
  }
  out.connected = components <= 1;
  out.simple_tree = n >= 1 && out.connected && !out.has_cycle_or_multiedge &&
                    q.arrow_count() == n - 1;
  return out;
}

PieceDecomposition split_at_thin_cut_vertices(const QuiverSetting& s) {
  check_setting_shape(s, "split_at_thin_cut_vertices");
  if (!underlying_analysis(s).simple_tree)
    throw std::invalid_argument(
        "split_at_thin_cut_vertices: underlying graph is not a simple tree");
  if ((s.dims.array() < 1).any())
    throw std::invalid_argument("split_at_thin_cut_vertices: zero dimension present");

  const Quiver& q = s.quiver;
  const int n = q.vertex_count();
  const int m = q.arrow_count();

  std::vector<int> degree(n, 0);
  for (const Arrow& a : q.arrows()) {
    ++degree[a.src];
    ++degree[a.tgt];
  }

  PieceDecomposition out;
  std::vector<char> cut(n, 0);
  for (int v = 0; v < n; ++v)
    if (s.dims[v] == 1 && degree[v] >= 2) {
      cut[v] = 1;
      out.glue_vertices.push_back(q.vertex_id(v));
    }

  if (m == 0) {
    out.pieces.push_back(s);  // a single vertex is its own piece
    return out;
  }

  // Edges sharing an unsplit endpoint stay in one piece.
  UnionFind uf(m);
  std::vector<int> last_edge_at(n, -1);
  for (int ai = 0; ai < m; ++ai) {
    const Arrow& a = q.arrows()[ai];
    for (int v : {a.src, a.tgt}) {
      if (cut[v]) continue;
      if (last_edge_at[v] >= 0) uf.unite(last_edge_at[v], ai);
      last_edge_at[v] = ai;
    }
  }

  std::vector<int> group_of(m, -1);
  std::vector<std::vector<int>> groups;
  for (int ai = 0; ai < m; ++ai) {
    int r = uf.find(ai);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(ai);
  }

  for (const std::vector<int>& edges : groups) {
    std::vector<char> in_piece(n, 0);
    for (int ai : edges) {
      in_piece[q.arrows()[ai].src] = 1;
      in_piece[q.arrows()[ai].tgt] = 1;
    }
    std::vector<int> vertices;
    for (int v = 0; v < n; ++v)
      if (in_piece[v]) vertices.push_back(v);
    out.pieces.push_back(subsetting(s, vertices, edges));
  }
  return out;
}

std::vector<QuiverSetting> connected_components(const QuiverSetting& s) {
  check_setting_shape(s, "connected_components");
  const int n = s.quiver.vertex_count();
  UnionFind uf(n);
  for (const Arrow& a : s.quiver.arrows()) uf.unite(a.src, a.tgt);

  std::vector<int> component_of(n, -1);
  std::vector<std::vector<int>> vertex_sets;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (component_of[r] < 0) {
      component_of[r] = static_cast<int>(vertex_sets.size());
      vertex_sets.emplace_back();
    }
    component_of[v] = component_of[r];
    vertex_sets[component_of[v]].push_back(v);
  }

  std::vector<std::vector<int>> arrow_sets(vertex_sets.size());
  for (int ai = 0; ai < s.quiver.arrow_count(); ++ai)
    arrow_sets[component_of[s.quiver.arrows()[ai].src]].push_back(ai);

  std::vector<QuiverSetting> out;
  out.reserve(vertex_sets.size());
  for (size_t c = 0; c < vertex_sets.size(); ++c)
    out.push_back(subsetting(s, vertex_sets[c], arrow_sets[c]));
  return out;
}

}  // namespace qsphere
