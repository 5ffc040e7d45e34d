#include "qsphere/sphericity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace qsphere {

namespace {

void check_analysis_input(const QuiverSetting& s, const char* where) {
  if (s.dims.size() != s.quiver.vertex_count())
    throw std::invalid_argument(std::string(where) +
                                ": dimension vector does not match the vertex set");
  if ((s.dims.array() < 1).any())
    throw std::invalid_argument(std::string(where) + ": dimension below 1");
  if (!underlying_analysis(s).connected)
    throw std::invalid_argument(std::string(where) + ": disconnected input");
}

// Euler quadratic form evaluated from the arrow list; imaginary vectors
// never have a positive value, so positives are skipped before the full
// reduction runs.
Int tits_form(const std::vector<Arrow>& arrows, const DimVector& e) {
  Int total = e.dot(e);
  for (const Arrow& a : arrows) total -= e[a.src] * e[a.tgt];
  return total;
}

}  // namespace

std::string piece_label(const QuiverSetting& piece) {
  const int edges = piece.quiver.arrow_count();
  if (edges == 0) return "A1";
  if (edges == 1) return "A2";
  if (edges != 2) return "forbidden";

  const int n = piece.quiver.vertex_count();  // 3 for a 2-edge tree piece
  std::vector<int> degree(n, 0);
  for (const Arrow& a : piece.quiver.arrows()) {
    ++degree[a.src];
    ++degree[a.tgt];
  }
  int middle = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 2) middle = v;
  std::vector<int> ends;
  for (int v = 0; v < n; ++v)
    if (v != middle) ends.push_back(v);

  if (piece.dims[middle] <= 2) return "A3-(m,2,n)";
  if (piece.dims[ends[0]] == 1 || piece.dims[ends[1]] == 1) return "A3-(m,n,1)";
  return "forbidden";
}

SphericityVerdict is_spherical_structural(const QuiverSetting& s) {
  check_analysis_input(s, "is_spherical_structural");
  SphericityVerdict v;
  v.setting = s;
  v.method = Method::Structural;

  if (!underlying_analysis(s).simple_tree) {
    v.spherical = false;
    return v;
  }
  v.decomposition = split_at_thin_cut_vertices(s);
  v.spherical = true;
  for (const QuiverSetting& piece : v.decomposition->pieces) {
    v.piece_labels.push_back(piece_label(piece));
    if (v.piece_labels.back() == "forbidden") v.spherical = false;
  }
  return v;
}

SphericityVerdict is_spherical_root_criterion(const QuiverSetting& s) {
  check_analysis_input(s, "is_spherical_root_criterion");
  if (!s.quiver.is_oriented_acyclic())
    throw std::invalid_argument("is_spherical_root_criterion: oriented cycle present");

  const LegExtendedSetting x = extend(s);
  const std::vector<Arrow>& arrows = x.extended.quiver.arrows();

  SphericityVerdict v;
  v.setting = s;
  v.method = Method::RootCriterion;
  v.spherical = true;

  GentleEnumerator gen(x);
  DimVector e;
  while (gen.next(e)) {
    if (tits_form(arrows, e) > 0) continue;
    if (classify_root(x.extended.quiver, e).kind == RootKind::ImaginaryRoot) {
      if (!is_gentle(x, e))
        throw std::logic_error("is_spherical_root_criterion: witness not gentle");
      v.spherical = false;
      v.witness = e;
      break;
    }
  }
  return v;
}

SphericityVerdict check(const QuiverSetting& s) {
  SphericityVerdict structural = is_spherical_structural(s);
  if (!s.quiver.is_oriented_acyclic() || s.dims.sum() > kCheckGentleSumLimit)
    return structural;

  SphericityVerdict root = is_spherical_root_criterion(s);
  SphericityVerdict v = structural;  // the reported flag is the structural one
  v.method = Method::Both;
  v.witness = root.witness;
  v.agreement = structural.spherical == root.spherical;
  return v;
}

std::vector<SphericityVerdict> analyze(const QuiverSetting& s) {
  const QuiverSetting supported = restrict_to_support(s);
  std::vector<SphericityVerdict> out;
  for (const QuiverSetting& component : connected_components(supported))
    out.push_back(check(component));
  return out;
}

std::optional<DimVector> minimal_witness(const QuiverSetting& s) {
  check_analysis_input(s, "minimal_witness");
  if (!s.quiver.is_oriented_acyclic())
    throw std::invalid_argument("minimal_witness: oriented cycle present");

  const LegExtendedSetting x = extend(s);
  const std::vector<Arrow>& arrows = x.extended.quiver.arrows();

  std::optional<DimVector> best;
  Int best_sum = 0;
  GentleEnumerator gen(x);
  DimVector e;
  while (gen.next(e)) {
    if (tits_form(arrows, e) > 0) continue;
    const Int sum = e.sum();
    if (best && sum >= best_sum) continue;
    if (classify_root(x.extended.quiver, e).kind == RootKind::ImaginaryRoot) {
      best = e;
      best_sum = sum;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Tree enumeration
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int c : code) {
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string rooted_canon(int v, int parent,
                         const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> children;
  for (int w : adj[v])
    if (w != parent) children.push_back(rooted_canon(w, v, adj));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const std::string& c : children) out += c;
  out += ")";
  return out;
}

std::string tree_canon(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // Peel leaves to find the one or two central vertices.
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<int> layer;
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int w : adj[v])
        if (!removed[w] && --degree[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::string best;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      std::string c = rooted_canon(v, -1, adj);
      if (best.empty() || c < best) best = c;
    }
  return best;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> unlabeled_trees(int n) {
  if (n < 1) throw std::invalid_argument("unlabeled_trees: need n >= 1");
  if (n == 1) return {{}};
  if (n == 2) return {{{0, 1}}};

  std::vector<std::vector<std::pair<int, int>>> out;
  std::set<std::string> seen;
  std::vector<int> code(n - 2, 0);
  while (true) {
    auto edges = prufer_decode(code);
    if (seen.insert(tree_canon(n, edges)).second) out.push_back(std::move(edges));
    int pos = n - 3;
    while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
  return out;
}

void scan_settings(
    int max_vertices, int max_dim,
    const std::function<void(const QuiverSetting&, const SphericityVerdict&,
                             const SphericityVerdict&)>& visit) {
  if (max_vertices < 1 || max_dim < 1)
    throw std::invalid_argument("scan: bounds must be at least 1");

  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::string> ids;
    for (int v = 1; v <= n; ++v) ids.push_back(std::to_string(v));

    for (const auto& edges : unlabeled_trees(n)) {
      const int m = static_cast<int>(edges.size());
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Arrow> arrows;
        arrows.reserve(m);
        for (int b = 0; b < m; ++b) {
          auto [u, v] = edges[b];
          if (mask & (1u << b))
            arrows.push_back({v, u});
          else
            arrows.push_back({u, v});
        }
        const Quiver quiver(ids, arrows);

        DimVector dims = DimVector::Ones(n);
        while (true) {
          const QuiverSetting s{quiver, dims};
          const SphericityVerdict structural = is_spherical_structural(s);
          const SphericityVerdict root = is_spherical_root_criterion(s);
          visit(s, structural, root);

          int pos = n - 1;
          while (pos >= 0 && dims[pos] == max_dim) dims[pos--] = 1;
          if (pos < 0) break;
          ++dims[pos];
        }
      }
    }
  }
}

ScanReport scan(int max_vertices, int max_dim) {
  ScanReport report;
  report.max_vertices = max_vertices;
  report.max_dim = max_dim;
  scan_settings(max_vertices, max_dim,
                [&report](const QuiverSetting& s, const SphericityVerdict& structural,
                          const SphericityVerdict& root) {
                  ++report.settings;
                  if (structural.spherical)
                    ++report.spherical;
                  else
                    ++report.non_spherical;
                  if (structural.spherical != root.spherical)
                    report.disagreements.push_back(
                        {s, structural.spherical, root.spherical});
                });
  return report;
}

}  // namespace qsphere
