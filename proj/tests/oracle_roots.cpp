#include "oracle_roots.hpp"

#include <deque>
#include <stdexcept>

namespace oracle {
namespace {

std::vector<std::vector<long long>> cartan_of(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (const Edge& e : edges) {
    if (e.first == e.second) throw std::invalid_argument("oracle expects loop-free graphs");
    c[e.first][e.second] -= 1;
    c[e.second][e.first] -= 1;
  }
  return c;
}

long long pairing_at(const std::vector<std::vector<long long>>& c, const Vec& d, int v) {
  long long s = 0;
  for (size_t j = 0; j < d.size(); ++j) s += c[v][j] * d[j];
  return s;
}

bool support_connected(int n, const std::vector<Edge>& edges, const Vec& d) {
  int start = -1;
  for (int i = 0; i < n; ++i)
    if (d[i] > 0) { start = i; break; }
  if (start < 0) return false;
  std::vector<char> seen(n, 0);
  std::deque<int> todo{start};
  seen[start] = 1;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop_front();
    for (const Edge& e : edges) {
      int w = -1;
      if (e.first == v) w = e.second;
      if (e.second == v) w = e.first;
      if (w >= 0 && d[w] > 0 && !seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (d[i] > 0 && !seen[i]) return false;
  return true;
}

bool in_fundamental_region(int n, const std::vector<Edge>& edges,
                           const std::vector<std::vector<long long>>& c, const Vec& d) {
  bool nonzero = false;
  for (int i = 0; i < n; ++i) nonzero = nonzero || d[i] > 0;
  if (!nonzero) return false;
  if (!support_connected(n, edges, d)) return false;
  for (int v = 0; v < n; ++v)
    if (d[v] > 0 && pairing_at(c, d, v) > 0) return false;
  return true;
}

bool inside_box(const Vec& d, long long bound) {
  for (long long x : d)
    if (x < 0 || x > bound) return false;
  return true;
}

// Reflection closure of the seeds, pruned to the box.
std::set<Vec> close_under_reflections(int n, const std::vector<std::vector<long long>>& c,
                                      std::set<Vec> seeds, long long bound) {
  std::deque<Vec> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    const Vec d = todo.front();
    todo.pop_front();
    for (int v = 0; v < n; ++v) {
      Vec r = d;
      r[v] -= pairing_at(c, d, v);
      if (!inside_box(r, bound)) continue;
      if (seeds.insert(r).second) todo.push_back(r);
    }
  }
  return seeds;
}

}  // namespace

RootSets enumerate_roots(int n, const std::vector<Edge>& edges, long long bound) {
  const auto c = cartan_of(n, edges);
  RootSets out;

  std::set<Vec> coords;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    coords.insert(e);
  }
  out.real = close_under_reflections(n, c, std::move(coords), bound);

  std::set<Vec> fundamental;
  Vec d(n, 0);
  while (true) {
    if (in_fundamental_region(n, edges, c, d)) fundamental.insert(d);
    int pos = n - 1;
    while (pos >= 0 && d[pos] == bound) d[pos--] = 0;
    if (pos < 0) break;
    ++d[pos];
  }
  out.imaginary = close_under_reflections(n, c, std::move(fundamental), bound);

  return out;
}

}  // namespace oracle
