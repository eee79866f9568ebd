//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_MOLGRAPH_RINGS_HPP
#define FFKIT_MOLGRAPH_RINGS_HPP

#include <vector>

#include "ffkit/molgraph/molecule.hpp"

namespace ffkit {

struct RingInfo {
    /// Per bond: true iff the bond lies on at least one cycle.
    std::vector<bool> bond_in_ring;
    /// Per atom: number of incident ring bonds (0-4).
    std::vector<int> ring_connectivity;
    /// Per atom: size of the smallest cycle containing the atom, 0 if acyclic.
    std::vector<int> min_ring_size;
    /// Smallest set of smallest rings, each ring as an ordered atom cycle.
    std::vector<std::vector<int>> sssr;
    /// Per atom: id of the fused ring system it belongs to, -1 if none.
    /// Ring systems are connected components of ring bonds.
    std::vector<int> ring_system;
};

RingInfo perceive_rings(const Molecule& mol);

}  // namespace ffkit

#endif  // FFKIT_MOLGRAPH_RINGS_HPP
