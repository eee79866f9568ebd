//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_MOLGRAPH_EQUIVALENCE_HPP
#define FFKIT_MOLGRAPH_EQUIVALENCE_HPP

#include <vector>

#include "ffkit/molgraph/molecule.hpp"

namespace ffkit {

/// Chemical-equivalence partition of atoms and bonds. Atom classes come from
/// iterative neighborhood refinement over the element-labeled graph with bond
/// orders and formal charges excluded, so resonance-delocalized groups
/// (carboxylate, nitro, guanidinium) collapse into single classes. Bond class
/// ids are derived from the unordered pair of endpoint atom classes.
///
/// Class ids are canonical: isomorphic molecules receive identical ids for
/// corresponding atoms regardless of atom order.
struct EquivalenceClasses {
    std::vector<int> atom_class;  // per atom
    std::vector<int> bond_class;  // per bond
    int num_atom_classes = 0;
    int num_bond_classes = 0;
};

EquivalenceClasses equivalence_classes(const Molecule& mol);

}  // namespace ffkit

#endif  // FFKIT_MOLGRAPH_EQUIVALENCE_HPP
