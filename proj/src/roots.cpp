#include "qsphere/roots.hpp"

#include <stdexcept>
#include <vector>

namespace qsphere {

namespace {

void check_vector(const Quiver& q, const DimVector& v, const char* where) {
  if (v.size() != q.vertex_count())
    throw std::invalid_argument(std::string(where) +
                                ": vector does not match the vertex set");
}

void check_loop_free(const Quiver& q, const char* where) {
  if (q.has_loop())
    throw std::invalid_argument(std::string(where) + ": quiver has a loop");
}

bool support_connected(const Quiver& q, const DimVector& d) {
  const int n = q.vertex_count();
  int start = -1;
  int support_size = 0;
  for (int v = 0; v < n; ++v)
    if (d[v] != 0) {
      if (start < 0) start = v;
      ++support_size;
    }
  if (support_size == 0) return false;

  const auto adj = q.undirected_adjacency();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : adj[v])
      if (d[w] != 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return reached == support_size;
}

}  // namespace

IntMatrix euler_matrix(const Quiver& q) {
  check_loop_free(q, "euler_matrix");
  const int n = q.vertex_count();
  IntMatrix m = IntMatrix::Identity(n, n);
  for (const Arrow& a : q.arrows()) m(a.src, a.tgt) -= 1;
  return m;
}

IntMatrix cartan_matrix(const Quiver& q) {
  IntMatrix m = euler_matrix(q);
  return m + m.transpose().eval();
}

Int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  check_vector(q, d, "euler_form");
  check_vector(q, e, "euler_form");
  check_loop_free(q, "euler_form");
  Int total = d.dot(e);
  for (const Arrow& a : q.arrows()) total -= d[a.src] * e[a.tgt];
  return total;
}

Int cartan_pairing(const Quiver& q, const DimVector& d, const DimVector& e) {
  return euler_form(q, d, e) + euler_form(q, e, d);
}

DimVector reflect(const Quiver& q, const DimVector& d, int vertex) {
  check_vector(q, d, "reflect");
  check_loop_free(q, "reflect");
  if (vertex < 0 || vertex >= q.vertex_count())
    throw std::invalid_argument("reflect: unknown vertex");
  // (d, e_v) without forming the full matrix.
  Int pairing = 2 * d[vertex];
  for (const Arrow& a : q.arrows()) {
    if (a.src == vertex) pairing -= d[a.tgt];
    if (a.tgt == vertex) pairing -= d[a.src];
  }
  DimVector out = d;
  out[vertex] -= pairing;
  return out;
}

bool in_fundamental_domain(const Quiver& q, const DimVector& d) {
  check_vector(q, d, "in_fundamental_domain");
  check_loop_free(q, "in_fundamental_domain");
  if ((d.array() < 0).any())
    throw std::invalid_argument("in_fundamental_domain: negative entry");
  if (d.isZero(0))
    throw std::invalid_argument("in_fundamental_domain: zero vector");
  if (!support_connected(q, d)) return false;
  return ((cartan_matrix(q) * d).array() <= 0).all();
}

RootClass classify_root(const Quiver& q, const DimVector& d) {
  check_vector(q, d, "classify_root");
  check_loop_free(q, "classify_root");
  if ((d.array() < 0).any())
    throw std::invalid_argument("classify_root: negative entry");
  if (d.isZero(0)) throw std::invalid_argument("classify_root: zero vector");

  const IntMatrix cartan = cartan_matrix(q);
  const int n = q.vertex_count();
  RootClass out;
  DimVector cur = d;

  // Entries stay nonnegative at the top of the loop and the entry sum drops
  // with every reflection, so this terminates.
  while (true) {
    if (cur.sum() == 1) {
      out.kind = RootKind::RealRoot;
      out.representative = cur;
      return out;
    }
    if (!support_connected(q, cur)) {
      out.kind = RootKind::NotRoot;
      return out;
    }
    const DimVector pairings = cartan * cur;
    int best = -1;
    Int best_value = 0;
    for (int v = 0; v < n; ++v)
      if (pairings[v] > best_value) {
        best_value = pairings[v];
        best = v;
      }
    if (best < 0) {
      out.kind = RootKind::ImaginaryRoot;
      out.representative = cur;
      return out;
    }
    cur[best] -= best_value;
    out.trace.push_back(best);
    if (cur[best] < 0) {
      out.kind = RootKind::NotRoot;
      return out;
    }
  }
}

bool finite_orbit_type(const QuiverSetting& s) {
  if (s.dims.size() != s.quiver.vertex_count())
    throw std::invalid_argument(
        "finite_orbit_type: dimension vector does not match the vertex set");
  if ((s.dims.array() < 0).any())
    throw std::invalid_argument("finite_orbit_type: negative dimension");
  if (!s.quiver.is_oriented_acyclic())
    throw std::invalid_argument("finite_orbit_type: oriented cycle present");

  const int n = s.quiver.vertex_count();
  DimVector e = DimVector::Zero(n);
  while (true) {
    // Odometer over 0 <= e <= dims, last vertex fastest.
    int pos = n - 1;
    while (pos >= 0 && e[pos] == s.dims[pos]) {
      e[pos] = 0;
      --pos;
    }
    if (pos < 0) return true;
    ++e[pos];
    if (classify_root(s.quiver, e).kind == RootKind::ImaginaryRoot) return false;
  }
}

}  // namespace qsphere
