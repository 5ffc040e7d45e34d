#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace qsphere {

using Int = std::int64_t;

// Integer lattice vector indexed by quiver vertices in canonical order.
using DimVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline bool same_vector(const DimVector& a, const DimVector& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool entrywise_leq(const DimVector& a, const DimVector& b) {
  return a.size() == b.size() && (a.array() <= b.array()).all();
}

}  // namespace qsphere
