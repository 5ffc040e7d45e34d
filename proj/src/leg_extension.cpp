#include "qsphere/leg_extension.hpp"

#include <stdexcept>
#include <unordered_set>

namespace qsphere {

namespace {

void check_box(const LegExtendedSetting& x, const DimVector& e, const char* where) {
  if (e.size() != x.extended.quiver.vertex_count())
    throw std::invalid_argument(std::string(where) +
                                ": vector does not match the extended vertex set");
  if ((e.array() < 0).any() || (e.array() > x.extended.dims.array()).any())
    throw std::invalid_argument(std::string(where) + ": vector out of box");
}

bool flag_type_unchecked(const LegExtendedSetting& x, const DimVector& e) {
  for (size_t i = 0; i < x.leg_start.size(); ++i) {
    const int start = x.leg_start[i];
    const Int len = x.extended.dims[x.top_of[i]];
    for (Int k = 1; k < len; ++k)
      if (e[start + k] < e[start + k - 1]) return false;
  }
  return true;
}

}  // namespace

LegExtendedSetting extend(const QuiverSetting& s) {
  const Quiver& q = s.quiver;
  const int n = q.vertex_count();
  if (s.dims.size() != n)
    throw std::invalid_argument("extend: dimension vector does not match the vertex set");
  if ((s.dims.array() < 1).any())
    throw std::invalid_argument("extend: zero dimension present");

  LegExtendedSetting x;
  x.leg_start.resize(n);
  x.top_of.resize(n);

  std::vector<std::string> ids;
  std::unordered_set<std::string> used;
  std::vector<Arrow> arrows;
  int next = 0;
  for (int i = 0; i < n; ++i) {
    x.leg_start[i] = next;
    for (Int k = 1; k <= s.dims[i]; ++k) {
      std::string id = "(" + q.vertex_id(i) + "," + std::to_string(k) + ")";
      if (!used.insert(id).second)
        throw std::invalid_argument("extend: generated vertex name collides: " + id);
      ids.push_back(std::move(id));
      x.level_of.emplace_back(i, k);
      if (k > 1) arrows.push_back({next - 1, next});
      ++next;
    }
    x.top_of[i] = next - 1;
  }
  for (const Arrow& a : q.arrows())
    arrows.push_back({x.top_of[a.src], x.top_of[a.tgt]});

  DimVector hat(next);
  for (int v = 0; v < next; ++v) hat[v] = x.level_of[v].second;
  x.extended = {Quiver(std::move(ids), std::move(arrows)), std::move(hat)};
  return x;
}

bool is_flag_type(const LegExtendedSetting& x, const DimVector& e) {
  check_box(x, e, "is_flag_type");
  return flag_type_unchecked(x, e);
}

bool is_gentle(const LegExtendedSetting& x, const DimVector& e) {
  check_box(x, e, "is_gentle");

  bool by_increments = true;
  for (size_t i = 0; i < x.leg_start.size() && by_increments; ++i) {
    const int start = x.leg_start[i];
    const Int len = x.extended.dims[x.top_of[i]];
    if (e[start] < 0 || e[start] > 1) by_increments = false;
    for (Int k = 1; k < len && by_increments; ++k) {
      const Int step = e[start + k] - e[start + k - 1];
      if (step < 0 || step > 1) by_increments = false;
    }
  }

  const bool by_flags =
      flag_type_unchecked(x, e) && flag_type_unchecked(x, x.extended.dims - e);
  if (by_increments != by_flags)
    throw std::logic_error("is_gentle: increment and flag formulations disagree");
  return by_increments;
}

GentleEnumerator::GentleEnumerator(const LegExtendedSetting& x)
    : x_(&x), positions_(x.extended.quiver.vertex_count()), counter_(0) {
  if (positions_ > 62)
    throw std::invalid_argument(
        "gentle enumeration: dimension sum exceeds 62 increment positions");
  last_ = (std::uint64_t{1} << positions_) - 1;
}

bool GentleEnumerator::next(DimVector& out) {
  if (counter_ >= last_) return false;
  ++counter_;
  out.resize(positions_);
  const int shift_base = positions_ - 1;
  for (size_t i = 0; i < x_->leg_start.size(); ++i) {
    const int start = x_->leg_start[i];
    const int top = x_->top_of[i];
    Int run = 0;
    for (int pos = start; pos <= top; ++pos) {
      run += static_cast<Int>((counter_ >> (shift_base - pos)) & 1u);
      out[pos] = run;
    }
  }
  return true;
}

std::vector<DimVector> all_gentle(const LegExtendedSetting& x) {
  std::vector<DimVector> out;
  GentleEnumerator gen(x);
  DimVector e;
  while (gen.next(e)) out.push_back(e);
  return out;
}

DimVector lift_witness(const QuiverSetting& small, const QuiverSetting& big,
                       const DimVector& e) {
  if (!(small.quiver == big.quiver))
    throw std::invalid_argument("lift_witness: settings live on different quivers");
  if (!entrywise_leq(small.dims, big.dims))
    throw std::invalid_argument("lift_witness: dimension vectors not comparable");

  const LegExtendedSetting sx = extend(small);
  const LegExtendedSetting bx = extend(big);
  check_box(sx, e, "lift_witness");

  DimVector out = DimVector::Zero(bx.extended.quiver.vertex_count());
  for (int i = 0; i < small.quiver.vertex_count(); ++i) {
    const Int shift = big.dims[i] - small.dims[i];
    for (Int k = 1; k <= small.dims[i]; ++k)
      out[bx.leg_start[i] + shift + k - 1] = e[sx.leg_start[i] + k - 1];
  }
  return out;
}

}  // namespace qsphere
