#pragma once

#include <optional>
#include <vector>

#include "qsphere/quiver.hpp"

namespace qsphere {

enum class RootKind { RealRoot, ImaginaryRoot, NotRoot };

/// Outcome of the reflection reduction. The trace lists the vertices
/// reflected at, in application order; applying those reflections to the
/// representative in reverse order recovers the classified vector.
struct RootClass {
  RootKind kind = RootKind::NotRoot;
  std::vector<int> trace;
  std::optional<DimVector> representative;
};

/// Matrix M of the Euler form, <d,e> = d^T M e: identity minus the matrix of
/// arrow counts. Requires a loop-free quiver.
IntMatrix euler_matrix(const Quiver& q);

/// Symmetrised Euler matrix: 2 on the diagonal, minus the number of edges
/// between distinct vertices elsewhere.
IntMatrix cartan_matrix(const Quiver& q);

Int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
Int cartan_pairing(const Quiver& q, const DimVector& d, const DimVector& e);

/// Simple reflection at a vertex: d - (d, e_v) * e_v. Entries may go
/// negative; callers decide what that means.
DimVector reflect(const Quiver& q, const DimVector& d, int vertex);

/// Connected support and nonpositive pairing against every coordinate
/// vector. Requires d nonzero with nonnegative entries.
bool in_fundamental_domain(const Quiver& q, const DimVector& d);

/// Reduce d by reflecting at the most positive pairing until a coordinate
/// vector, a fundamental-domain element, or a contradiction appears.
RootClass classify_root(const Quiver& q, const DimVector& d);

/// True when no nonzero e <= dims classifies imaginary; requires an
/// oriented-acyclic quiver.
bool finite_orbit_type(const QuiverSetting& s);

}  // namespace qsphere
