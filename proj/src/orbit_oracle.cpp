#include "qsphere/orbit_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsphere/leg_extension.hpp"

namespace qsphere {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u32 mod_pow(u32 base, u32 exp, u32 p) {
  u64 acc = 1;
  u64 b = base % p;
  while (exp) {
    if (exp & 1u) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1u;
  }
  return static_cast<u32>(acc);
}

u32 mod_inv_scalar(u32 x, u32 p) { return mod_pow(x, p - 2, p); }

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_prime(Int p, const char* where) {
  if (!is_prime(p))
    throw std::invalid_argument(std::string(where) + ": " + std::to_string(p) +
                                " is not prime");
}

u32 primitive_root(u32 p) {
  // p is a small prime; brute force is fine.
  for (u32 g = 2; g < p; ++g) {
    u32 x = g;
    u32 order = 1;
    while (x != 1) {
      x = static_cast<u32>(u64{x} * g % p);
      ++order;
    }
    if (order == p - 1) return g;
  }
  return 1;  // p == 2
}

// ---------------------------------------------------------------------------
// Group element enumeration
// ---------------------------------------------------------------------------

std::vector<ModMatrix> enumerate_borel(int n, u32 p) {
  // Mixed-radix counter: diagonal digits over [1,p), strict upper entries
  // over [0,p).
  const int uppers = n * (n - 1) / 2;
  std::vector<u32> diag(n, 1);
  std::vector<u32> up(uppers, 0);
  std::vector<ModMatrix> out;
  while (true) {
    ModMatrix m = ModMatrix::zero(n, n);
    int u = 0;
    for (int r = 0; r < n; ++r) {
      m.at(r, r) = diag[r];
      for (int c = r + 1; c < n; ++c) m.at(r, c) = up[u++];
    }
    out.push_back(std::move(m));

    int pos = uppers - 1;
    while (pos >= 0 && up[pos] == p - 1) up[pos--] = 0;
    if (pos >= 0) {
      ++up[pos];
      continue;
    }
    pos = n - 1;
    while (pos >= 0 && diag[pos] == p - 1) diag[pos--] = 1;
    if (pos < 0) break;
    ++diag[pos];
  }
  return out;
}

std::vector<ModMatrix> enumerate_full(int n, u32 p) {
  std::vector<u32> entries(static_cast<size_t>(n) * n, 0);
  std::vector<ModMatrix> out;
  while (true) {
    ModMatrix m{n, n, entries};
    if (mod_nullity(m, p) == 0) out.push_back(std::move(m));
    int pos = n * n - 1;
    while (pos >= 0 && entries[pos] == p - 1) entries[pos--] = 0;
    if (pos < 0) break;
    ++entries[pos];
  }
  return out;
}

// Fixed points of (g_src, g_tgt) acting on Hom(F^a, F^b) are the kernel of
// X -> g_tgt X - X g_src; its matrix on column-stacked X is
// I_a (x) g_tgt - g_src^T (x) I_b.
int sylvester_nullity(const ModMatrix& g_src, const ModMatrix& g_tgt, u32 p) {
  const int a = g_src.rows;
  const int b = g_tgt.rows;
  const int dim = a * b;
  ModMatrix m = ModMatrix::zero(dim, dim);
  for (int i = 0; i < a; ++i)
    for (int r = 0; r < b; ++r)
      for (int c = 0; c < b; ++c) {
        u32& cell = m.at(i * b + r, i * b + c);
        cell = (cell + g_tgt.at(r, c)) % p;
      }
  for (int r = 0; r < a; ++r)
    for (int c = 0; c < a; ++c)
      for (int j = 0; j < b; ++j) {
        u32& cell = m.at(c * b + j, r * b + j);
        cell = (cell + p - g_src.at(r, c) % p) % p;
      }
  return mod_nullity(std::move(m), p);
}

struct SpaceLayout {
  // One block per arrow: matrices of shape dims[tgt] x dims[src], entries
  // column-major, concatenated in arrow order. Point indices are the base-p
  // digits of that entry list, first entry most significant.
  std::vector<int> block_offset;
  std::vector<int> block_rows;
  std::vector<int> block_cols;
  int total = 0;
};

SpaceLayout space_layout(const QuiverSetting& s) {
  SpaceLayout lay;
  for (const Arrow& a : s.quiver.arrows()) {
    lay.block_offset.push_back(lay.total);
    lay.block_rows.push_back(static_cast<int>(s.dims[a.tgt]));
    lay.block_cols.push_back(static_cast<int>(s.dims[a.src]));
    lay.total += static_cast<int>(s.dims[a.tgt] * s.dims[a.src]);
  }
  return lay;
}

}  // namespace

ModMatrix ModMatrix::identity(int n) {
  ModMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ModMatrix mod_mul(const ModMatrix& x, const ModMatrix& y, u32 p) {
  ModMatrix out = ModMatrix::zero(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      const u64 xv = x.at(r, k);
      if (!xv) continue;
      for (int c = 0; c < y.cols; ++c)
        out.at(r, c) = static_cast<u32>((out.at(r, c) + xv * y.at(k, c)) % p);
    }
  return out;
}

int mod_nullity(ModMatrix m, u32 p) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const u32 inv = mod_inv_scalar(m.at(rank, col) % p, p);
    for (int c = col; c < m.cols; ++c)
      m.at(rank, c) = static_cast<u32>(u64{m.at(rank, c) % p} * inv % p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      const u32 f = m.at(r, col) % p;
      if (!f) continue;
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = static_cast<u32>((m.at(r, c) + u64{p - f} * m.at(rank, c)) % p);
    }
    ++rank;
  }
  return m.cols - rank;
}

ModMatrix mod_inverse(const ModMatrix& m, u32 p) {
  const int n = m.rows;
  ModMatrix work = m;
  ModMatrix inv = ModMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work.at(r, col) % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("mod_inverse: singular matrix");
    for (int c = 0; c < n; ++c) {
      std::swap(work.at(pivot, c), work.at(col, c));
      std::swap(inv.at(pivot, c), inv.at(col, c));
    }
    const u32 scale = mod_inv_scalar(work.at(col, col) % p, p);
    for (int c = 0; c < n; ++c) {
      work.at(col, c) = static_cast<u32>(u64{work.at(col, c) % p} * scale % p);
      inv.at(col, c) = static_cast<u32>(u64{inv.at(col, c) % p} * scale % p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const u32 f = work.at(r, col) % p;
      if (!f) continue;
      for (int c = 0; c < n; ++c) {
        work.at(r, c) =
            static_cast<u32>((work.at(r, c) + u64{p - f} * work.at(col, c)) % p);
        inv.at(r, c) =
            static_cast<u32>((inv.at(r, c) + u64{p - f} * inv.at(col, c)) % p);
      }
    }
  }
  return inv;
}

std::uint64_t matrix_group_order(GroupKind kind, Int n, Int p) {
  check_prime(p, "matrix_group_order");
  if (n < 0) throw std::invalid_argument("matrix_group_order: negative size");
  u128 order = 1;
  if (kind == GroupKind::Borel) {
    for (Int i = 0; i < n; ++i) order *= static_cast<u128>(p - 1);
    for (Int i = 0; i < n * (n - 1) / 2; ++i) order *= static_cast<u128>(p);
  } else {
    u128 pn = 1;
    for (Int i = 0; i < n; ++i) pn *= static_cast<u128>(p);
    u128 pk = 1;
    for (Int k = 0; k < n; ++k) {
      order *= pn - pk;
      pk *= static_cast<u128>(p);
    }
  }
  if (order > u128{UINT64_MAX})
    throw std::invalid_argument("matrix_group_order: order exceeds 64 bits");
  return static_cast<u64>(order);
}

OrbitReport count_orbits(const QuiverSetting& s, Int p, GroupKind kind,
                         const CostGuard& guard) {
  if (s.dims.size() != s.quiver.vertex_count())
    throw std::invalid_argument(
        "count_orbits: dimension vector does not match the vertex set");
  if ((s.dims.array() < 0).any())
    throw std::invalid_argument("count_orbits: negative dimension");
  check_prime(p, "count_orbits");

  const int n = s.quiver.vertex_count();
  const u32 up = static_cast<u32>(p);

  Int space_dim = 0;
  for (const Arrow& a : s.quiver.arrows()) space_dim += s.dims[a.src] * s.dims[a.tgt];
  if (space_dim > guard.max_space_dim)
    throw std::invalid_argument(
        "count_orbits: representation space dimension " + std::to_string(space_dim) +
        " exceeds the cost guard " + std::to_string(guard.max_space_dim));

  u128 order128 = 1;
  for (int v = 0; v < n; ++v) {
    order128 *= matrix_group_order(kind, s.dims[v], p);
    if (order128 > u128{guard.max_group_order})
      throw std::invalid_argument("count_orbits: group order exceeds the cost guard " +
                                  std::to_string(guard.max_group_order));
  }
  const u64 order = static_cast<u64>(order128);

  u128 space_size = 1;
  for (Int i = 0; i < space_dim; ++i) {
    space_size *= static_cast<u128>(p);
    if (space_size > u128{1'000'000'000'000'000'000ULL})
      throw std::invalid_argument("count_orbits: representation space exceeds 10^18 points");
  }

  std::vector<std::vector<ModMatrix>> lists(n);
  for (int v = 0; v < n; ++v) {
    const int d = static_cast<int>(s.dims[v]);
    if (d == 0)
      lists[v] = {ModMatrix::zero(0, 0)};
    else
      lists[v] = kind == GroupKind::Borel ? enumerate_borel(d, up) : enumerate_full(d, up);
  }

  std::vector<u128> p_power(space_dim + 1, 1);
  for (Int i = 1; i <= space_dim; ++i) p_power[i] = p_power[i - 1] * static_cast<u128>(p);

  u128 burnside = 0;
  std::vector<size_t> index(n, 0);
  while (true) {
    int nullity = 0;
    for (const Arrow& a : s.quiver.arrows()) {
      const ModMatrix& gs = lists[a.src][index[a.src]];
      const ModMatrix& gt = lists[a.tgt][index[a.tgt]];
      if (gs.rows == 0 || gt.rows == 0) continue;  // Hom space is zero
      nullity += sylvester_nullity(gs, gt, up);
    }
    burnside += p_power[nullity];

    int v = n - 1;
    while (v >= 0 && index[v] + 1 == lists[v].size()) index[v--] = 0;
    if (v < 0) break;
    ++index[v];
  }

  if (burnside % order != 0)
    throw std::logic_error("count_orbits: fixed-point sum not divisible by the group order");

  OrbitReport report;
  report.setting = s;
  report.prime = p;
  report.kind = kind;
  report.group_order = order;
  report.space_dim = space_dim;
  report.space_size = static_cast<u64>(space_size);
  report.orbit_count = static_cast<u64>(burnside / order);
  return report;
}

GrowthProbe growth_probe(const QuiverSetting& s, const std::vector<Int>& primes,
                         const CostGuard& guard) {
  if (primes.empty()) throw std::invalid_argument("growth_probe: no primes given");
  for (size_t i = 0; i + 1 < primes.size(); ++i)
    if (primes[i] >= primes[i + 1])
      throw std::invalid_argument("growth_probe: primes must be strictly ascending");

  GrowthProbe out;
  for (Int p : primes)
    out.counts.push_back(count_orbits(s, p, GroupKind::Borel, guard).orbit_count);
  out.growing = true;
  for (size_t i = 0; i + 1 < out.counts.size(); ++i)
    if (out.counts[i] >= out.counts[i + 1]) out.growing = false;
  if (out.counts.size() < 2) out.growing = false;
  return out;
}

// ---------------------------------------------------------------------------
// Flag side: union-find over all points of the extended representation space
// ---------------------------------------------------------------------------

namespace {

constexpr u64 kMaxFlagPoints = u64{1} << 21;

struct PointUnionFind {
  std::vector<std::int32_t> parent;

  explicit PointUnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::int32_t x, std::int32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[y] = x;
  }
};

void decode_point(u64 point, const SpaceLayout& lay, u32 p, std::vector<u32>& digits) {
  for (int i = lay.total - 1; i >= 0; --i) {
    digits[i] = static_cast<u32>(point % p);
    point /= p;
  }
}

u64 encode_point(const SpaceLayout& lay, u32 p, const std::vector<u32>& digits) {
  u64 out = 0;
  for (int i = 0; i < lay.total; ++i) out = out * p + digits[i];
  return out;
}

// One generator acting at a single vertex; arrows into the vertex multiply
// by g on the left, arrows out of it by g^{-1} on the right.
struct VertexGenerator {
  int vertex = 0;
  ModMatrix g;
  ModMatrix g_inv;
};

std::vector<VertexGenerator> full_group_generators(const QuiverSetting& s, u32 p) {
  std::vector<VertexGenerator> gens;
  for (int v = 0; v < s.quiver.vertex_count(); ++v) {
    const int d = static_cast<int>(s.dims[v]);
    if (d == 0) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        ModMatrix t = ModMatrix::identity(d);
        t.at(i, j) = 1;
        gens.push_back({v, t, mod_inverse(t, p)});
      }
    const u32 g = primitive_root(p);
    if (g != 1) {
      ModMatrix diag = ModMatrix::identity(d);
      diag.at(0, 0) = g;
      gens.push_back({v, diag, mod_inverse(diag, p)});
    }
  }
  return gens;
}

}  // namespace

std::uint64_t flag_orbit_count(const QuiverSetting& s, Int p) {
  if (p != 2 && p != 3)
    throw std::invalid_argument("flag_orbit_count: prime must be 2 or 3");
  if (s.dims.size() != s.quiver.vertex_count())
    throw std::invalid_argument(
        "flag_orbit_count: dimension vector does not match the vertex set");
  if (s.dims.sum() > 4)
    throw std::invalid_argument("flag_orbit_count: dimension sum exceeds 4");

  const u32 up = static_cast<u32>(p);
  const LegExtendedSetting x = extend(s);
  const QuiverSetting& ext = x.extended;
  const SpaceLayout lay = space_layout(ext);

  u128 points128 = 1;
  for (int i = 0; i < lay.total; ++i) {
    points128 *= up;
    if (points128 > u128{kMaxFlagPoints})
      throw std::invalid_argument(
          "flag_orbit_count: extended space exceeds the point guard");
  }
  const u64 points = static_cast<u64>(points128);

  const std::vector<VertexGenerator> gens = full_group_generators(ext, up);
  const std::vector<Arrow>& arrows = ext.quiver.arrows();

  PointUnionFind uf(points);
  std::vector<u32> digits(lay.total), moved(lay.total);
  std::vector<u32> scratch;
  for (u64 pt = 0; pt < points; ++pt) {
    decode_point(pt, lay, up, digits);
    for (const VertexGenerator& gen : gens) {
      moved = digits;
      for (size_t ai = 0; ai < arrows.size(); ++ai) {
        const int rows = lay.block_rows[ai];
        const int cols = lay.block_cols[ai];
        const int off = lay.block_offset[ai];
        const bool hits_tgt = arrows[ai].tgt == gen.vertex;
        const bool hits_src = arrows[ai].src == gen.vertex;
        if (!hits_tgt && !hits_src) continue;

        // Column-major block entries: digit off + c*rows + r.
        if (hits_tgt) {
          scratch.assign(static_cast<size_t>(rows) * cols, 0);
          for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) {
              u64 acc = 0;
              for (int k = 0; k < rows; ++k)
                acc += u64{gen.g.at(r, k)} * moved[off + c * rows + k];
              scratch[static_cast<size_t>(c) * rows + r] = static_cast<u32>(acc % up);
            }
          for (int i = 0; i < rows * cols; ++i) moved[off + i] = scratch[i];
        }
        if (hits_src) {
          scratch.assign(static_cast<size_t>(rows) * cols, 0);
          for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) {
              u64 acc = 0;
              for (int k = 0; k < cols; ++k)
                acc += u64{moved[off + k * rows + r]} * gen.g_inv.at(k, c);
              scratch[static_cast<size_t>(c) * rows + r] = static_cast<u32>(acc % up);
            }
          for (int i = 0; i < rows * cols; ++i) moved[off + i] = scratch[i];
        }
      }
      uf.unite(static_cast<std::int32_t>(pt),
               static_cast<std::int32_t>(encode_point(lay, up, moved)));
    }
  }

  // Flag-type points: every leg map injective, i.e. full column rank.
  std::vector<size_t> leg_arrows;
  for (size_t ai = 0; ai < arrows.size(); ++ai) {
    const auto& [src_orig, src_level] = x.level_of[arrows[ai].src];
    const auto& [tgt_orig, tgt_level] = x.level_of[arrows[ai].tgt];
    if (src_orig == tgt_orig && tgt_level == src_level + 1) leg_arrows.push_back(ai);
  }

  std::vector<char> root_is_flag_orbit(points, 0);
  u64 count = 0;
  for (u64 pt = 0; pt < points; ++pt) {
    decode_point(pt, lay, up, digits);
    bool flag = true;
    for (size_t ai : leg_arrows) {
      const int rows = lay.block_rows[ai];
      const int cols = lay.block_cols[ai];
      ModMatrix m = ModMatrix::zero(rows, cols);
      for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
          m.at(r, c) = digits[lay.block_offset[ai] + c * rows + r];
      if (mod_nullity(std::move(m), up) != 0) {
        flag = false;
        break;
      }
    }
    if (!flag) continue;
    const std::int32_t root = uf.find(static_cast<std::int32_t>(pt));
    if (!root_is_flag_orbit[root]) {
      root_is_flag_orbit[root] = 1;
      ++count;
    }
  }
  return count;
}

bool flag_bijection_check(const QuiverSetting& s, Int p, const CostGuard& guard) {
  const u64 borel = count_orbits(s, p, GroupKind::Borel, guard).orbit_count;
  const u64 flag = flag_orbit_count(s, p);
  return borel == flag;
}

}  // namespace qsphere
