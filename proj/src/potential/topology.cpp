//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/potential/topology.hpp"

#include <algorithm>

#include "ffkit/common/constants.hpp"

namespace ffkit {

Topology build_topology(const Molecule& mol) {
    Topology topo;
    const int n = mol.num_atoms();

    for (const Bond& b : mol.bonds()) {
        topo.bonds.push_back({std::min(b.i, b.j), std::max(b.i, b.j)});
    }
    std::sort(topo.bonds.begin(), topo.bonds.end());

    for (int j = 0; j < n; ++j) {
        const auto& nb = mol.neighbors(j);
        for (size_t a = 0; a < nb.size(); ++a) {
            for (size_t c = a + 1; c < nb.size(); ++c) {
                topo.angles.push_back({nb[a], j, nb[c]});
            }
        }
    }

    for (const Bond& bond : mol.bonds()) {
        int j = std::min(bond.i, bond.j), k = std::max(bond.i, bond.j);
        for (int i : mol.neighbors(j)) {
            if (i == k) continue;
            for (int l : mol.neighbors(k)) {
                if (l == j || l == i) continue;
                std::array<int, 4> fwd = {i, j, k, l};
                std::array<int, 4> rev = {l, k, j, i};
                topo.propers.push_back(std::min(fwd, rev));
            }
        }
    }
    std::sort(topo.propers.begin(), topo.propers.end());
    topo.propers.erase(std::unique(topo.propers.begin(), topo.propers.end()), topo.propers.end());

    // Impropers at trigonal centers: exactly three neighbors and at least one
    // incident double or aromatic bond. Center goes in the third slot.
    for (int c = 0; c < n; ++c) {
        const auto& nb = mol.neighbors(c);
        if (nb.size() != 3) continue;
        bool trigonal = false;
        for (int v : nb) {
            BondOrder order = mol.bond(mol.bond_between(c, v)).order;
            if (order == BondOrder::Double || order == BondOrder::Aromatic) trigonal = true;
        }
        if (!trigonal) continue;
        topo.impropers.push_back({nb[0], nb[1], c, nb[2]});
    }

    std::vector<std::vector<int>> dist = graph_distances(mol);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int d = dist[i][j];
            if (d >= 1 && d <= 2) continue;
            NbPair pair;
            pair.i = i;
            pair.j = j;
            if (d == 3) {
                pair.vdw_scale = kVdw14Scale;
                pair.coulomb_scale = kCoulomb14Scale;
            }
            topo.nb_pairs.push_back(pair);
        }
    }
    return topo;
}

}  // namespace ffkit
