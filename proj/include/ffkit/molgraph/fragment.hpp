//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_MOLGRAPH_FRAGMENT_HPP
#define FFKIT_MOLGRAPH_FRAGMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffkit/molgraph/molecule.hpp"

namespace ffkit {

struct FragmentResult {
    std::vector<Molecule> fragments;
    /// Seeds whose expansion exceeded the atom cap, described for reporting.
    std::vector<std::string> skipped;
};

/// Cleaves a molecule into capped substructures: one fragment per bond, angle
/// and non-ring torsion seed. Each fragment keeps the seed atoms, every ring
/// or conjugated system touching them (transitively), and the first shell of
/// neighbors; severed bonds are capped with hydrogen at 1.09 Angstrom along
/// the cut direction. Fragments reaching max_atoms are reported, not emitted.
/// Duplicates are removed by canonical graph hash. A molecule already under
/// the cap contributes itself as one fragment.
FragmentResult fragment(const Molecule& mol, int max_atoms = 70);

/// Dedup hash over the element/order/charge-labeled graph (coordinates are
/// ignored). Stable across runs and atom relabelings.
uint64_t canonical_graph_hash(const Molecule& mol);

}  // namespace ffkit

#endif  // FFKIT_MOLGRAPH_FRAGMENT_HPP
