//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_MOLGRAPH_FEATURES_HPP
#define FFKIT_MOLGRAPH_FEATURES_HPP

#include <vector>

#include "ffkit/molgraph/molecule.hpp"
#include "ffkit/molgraph/rings.hpp"

namespace ffkit {

struct AtomFeatures {
    Element element = Element::C;
    int formal_charge = 0;
    int ring_connectivity = 0;  // incident ring bonds, 0-4
    int min_ring_size = 0;      // 0 if acyclic, else in [3, 12] (larger rings clamp to 12)
};

struct BondFeatures {
    BondOrder order = BondOrder::Single;
    bool in_ring = false;
};

struct MolFeatures {
    std::vector<AtomFeatures> atoms;
    std::vector<BondFeatures> bonds;
};

/// Ring-aware atom and bond features; deterministic under atom relabeling.
MolFeatures perceive(const Molecule& mol);

}  // namespace ffkit

#endif  // FFKIT_MOLGRAPH_FEATURES_HPP
