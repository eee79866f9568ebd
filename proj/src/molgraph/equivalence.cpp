//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/molgraph/equivalence.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ffkit {

EquivalenceClasses equivalence_classes(const Molecule& mol) {
    const int n = mol.num_atoms();

    // Initial colors: element only. Bond orders and formal charges are
    // deliberately excluded so that e.g. both carboxylate oxygens share one
    // class despite differing assigned orders/charges.
    std::vector<int> color(n);
    {
        std::map<int, int> rank;
        for (int i = 0; i < n; ++i) rank[static_cast<int>(mol.atom(i).element)] = 0;
        int next = 0;
        for (auto& [key, value] : rank) value = next++;
        for (int i = 0; i < n; ++i) color[i] = rank[static_cast<int>(mol.atom(i).element)];
    }

    // Refine to fixpoint. New ids are ranks of sorted signatures, which makes
    // the final ids canonical across isomorphic relabelings.
    int num_classes = *std::max_element(color.begin(), color.end()) + 1;
    while (true) {
        using Signature = std::pair<int, std::vector<int>>;
        std::vector<Signature> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> nb;
            nb.reserve(mol.neighbors(i).size());
            for (int v : mol.neighbors(i)) nb.push_back(color[v]);
            std::sort(nb.begin(), nb.end());
            sig[i] = {color[i], std::move(nb)};
        }
        std::map<Signature, int> rank;
        for (int i = 0; i < n; ++i) rank[sig[i]] = 0;
        int next = 0;
        for (auto& [key, value] : rank) value = next++;
        std::vector<int> refined(n);
        for (int i = 0; i < n; ++i) refined[i] = rank[sig[i]];

        // Refinement never merges classes; equal counts means a fixpoint.
        if (next == num_classes) {
            color = std::move(refined);
            break;
        }
        num_classes = next;
        color = std::move(refined);
    }

    EquivalenceClasses eq;
    eq.atom_class = std::move(color);
    eq.num_atom_classes = num_classes;

    std::map<std::pair<int, int>, int> bond_rank;
    for (const Bond& b : mol.bonds()) {
        auto key = std::minmax(eq.atom_class[b.i], eq.atom_class[b.j]);
        bond_rank[key] = 0;
    }
    int next = 0;
    for (auto& [key, value] : bond_rank) value = next++;
    eq.bond_class.resize(mol.num_bonds());
    for (int b = 0; b < mol.num_bonds(); ++b) {
        auto key = std::minmax(eq.atom_class[mol.bond(b).i], eq.atom_class[mol.bond(b).j]);
        eq.bond_class[b] = bond_rank[key];
    }
    eq.num_bond_classes = next;
    return eq;
}

}  // namespace ffkit
