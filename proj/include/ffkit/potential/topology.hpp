//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_POTENTIAL_TOPOLOGY_HPP
#define FFKIT_POTENTIAL_TOPOLOGY_HPP

#include <array>
#include <vector>

#include "ffkit/molgraph/molecule.hpp"

namespace ffkit {

struct NbPair {
    int i = 0;
    int j = 0;
    double vdw_scale = 1.0;
    double coulomb_scale = 1.0;
};

/// Enumerated bonded terms plus the scaled non-bonded pair list.
///   - angles (i,j,k) have j central, i < k
///   - propers (i,j,k,l) are kept in one canonical direction
///   - impropers (a,b,c,d) follow the Amber layout: c is the trigonal center,
///     peripheral atoms sorted ascending
///   - nb_pairs exclude 1-2/1-3; 1-4 pairs carry Amber scale factors
struct Topology {
    std::vector<std::array<int, 2>> bonds;
    std::vector<std::array<int, 3>> angles;
    std::vector<std::array<int, 4>> propers;
    std::vector<std::array<int, 4>> impropers;
    std::vector<NbPair> nb_pairs;
};

Topology build_topology(const Molecule& mol);

}  // namespace ffkit

#endif  // FFKIT_POTENTIAL_TOPOLOGY_HPP
