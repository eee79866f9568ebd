//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/molgraph/features.hpp"

#include <algorithm>

namespace ffkit {

MolFeatures perceive(const Molecule& mol) {
    RingInfo rings = perceive_rings(mol);
    MolFeatures out;
    out.atoms.resize(mol.num_atoms());
    for (int i = 0; i < mol.num_atoms(); ++i) {
        AtomFeatures& f = out.atoms[i];
        f.element = mol.atom(i).element;
        f.formal_charge = mol.atom(i).formal_charge;
        f.ring_connectivity = rings.ring_connectivity[i];
        int mrs = rings.min_ring_size[i];
        f.min_ring_size = (mrs == 0) ? 0 : std::min(mrs, 12);
    }
    out.bonds.resize(mol.num_bonds());
    for (int b = 0; b < mol.num_bonds(); ++b) {
        out.bonds[b].order = mol.bond(b).order;
        out.bonds[b].in_ring = rings.bond_in_ring[b];
    }
    return out;
}

}  // namespace ffkit
