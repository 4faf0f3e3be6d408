#pragma once

#include <cstdlib>

namespace gaugering {

enum class BoundaryParity { periodic, antiperiodic };

/// Integer centre-of-mass momentum p. Single-valuedness of the two-body
/// wavefunction on the torus forces phi(x + 2 pi) = (-1)^p phi(x).
struct MomentumSector {
  int p = 0;

  BoundaryParity parity() const {
    return (std::abs(p) % 2 == 0) ? BoundaryParity::periodic : BoundaryParity::antiperiodic;
  }
  bool antiperiodic() const { return parity() == BoundaryParity::antiperiodic; }

  /// Offset of the relative wavenumber lattice: 0 (integers) or 1/2.
  template <typename Scalar = double>
  Scalar wavenumber_offset() const {
    return antiperiodic() ? Scalar(0.5) : Scalar(0);
  }

  friend bool operator==(const MomentumSector&, const MomentumSector&) = default;
};

/// Which sectors a ground-state search ranges over.
enum class SectorSet { even, all };

inline bool sector_included(int p, SectorSet set) {
  return set == SectorSet::all || std::abs(p) % 2 == 0;
}

}  // namespace gaugering
