//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/molgraph/fragment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ffkit/common/constants.hpp"
#include "ffkit/common/error.hpp"
#include "ffkit/molgraph/rings.hpp"

namespace ffkit {

namespace {

// Conjugated systems: maximal connected sets of atoms carrying any
// double/triple/aromatic bond, plus N/O/S atoms directly bonded to the set.
std::vector<int> conjugated_systems(const Molecule& mol) {
    const int n = mol.num_atoms();
    std::vector<char> pi_atom(n, 0);
    for (const Bond& b : mol.bonds()) {
        if (b.order != BondOrder::Single) {
            pi_atom[b.i] = 1;
            pi_atom[b.j] = 1;
        }
    }
    std::vector<int> system(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (!pi_atom[s] || system[s] >= 0) continue;
        std::vector<int> stack = {s};
        system[s] = next;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : mol.neighbors(u)) {
                if (pi_atom[v] && system[v] < 0) {
                    system[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    // Lone-pair adjacency: N/O/S bonded to a system joins it.
    for (int i = 0; i < n; ++i) {
        if (system[i] >= 0) continue;
        Element e = mol.atom(i).element;
        if (e != Element::N && e != Element::O && e != Element::S) continue;
        for (int v : mol.neighbors(i)) {
            if (system[v] >= 0) {
                system[i] = system[v];
                break;
            }
        }
    }
    return system;
}

std::string seed_name(const char* kind, const std::vector<int>& atoms) {
    std::ostringstream out;
    out << kind << " ";
    for (size_t k = 0; k < atoms.size(); ++k) out << (k ? "-" : "") << atoms[k];
    return out.str();
}

// Builds the capped fragment for one seed, or returns false when the
// expansion reaches the atom cap.
bool build_fragment(const Molecule& mol, const RingInfo& rings, const std::vector<int>& conj,
                    const std::vector<int>& seed, int max_atoms, Molecule* out) {
    const int n = mol.num_atoms();
    std::vector<char> keep(n, 0);
    std::vector<int> stack = seed;
    for (int a : seed) keep[a] = 1;

    // Closure over ring systems and conjugated systems touching kept atoms.
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int pass = 0; pass < 2; ++pass) {
            int sys = pass == 0 ? rings.ring_system[u] : conj[u];
            if (sys < 0) continue;
            const std::vector<int>& table = pass == 0 ? rings.ring_system : conj;
            for (int v = 0; v < n; ++v) {
                if (table[v] == sys && !keep[v]) {
                    keep[v] = 1;
                    stack.push_back(v);
                }
            }
        }
    }

    // First shell around the closure.
    std::vector<char> shell(n, 0);
    for (int u = 0; u < n; ++u) {
        if (!keep[u]) continue;
        for (int v : mol.neighbors(u)) {
            if (!keep[v]) shell[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (shell[v]) keep[v] = 1;
    }

    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
        if (keep[v]) members.push_back(v);
    }

    // Count caps before building: one hydrogen per severed bond.
    int caps = 0;
    for (const Bond& b : mol.bonds()) {
        if (keep[b.i] != keep[b.j]) ++caps;
    }
    if (static_cast<int>(members.size()) + caps >= max_atoms) return false;

    std::vector<int> new_index(n, -1);
    std::vector<Atom> atoms;
    int net = 0;
    for (int v : members) {
        new_index[v] = static_cast<int>(atoms.size());
        atoms.push_back(mol.atom(v));
        net += mol.atom(v).formal_charge;
    }
    std::vector<Bond> bonds;
    for (const Bond& b : mol.bonds()) {
        if (keep[b.i] && keep[b.j]) {
            bonds.push_back({new_index[b.i], new_index[b.j], b.order});
        } else if (keep[b.i] != keep[b.j]) {
            int in = keep[b.i] ? b.i : b.j;
            int outp = keep[b.i] ? b.j : b.i;
            Vec3 dir = mol.atom(outp).position - mol.atom(in).position;
            double len = dir.norm();
            if (len < 1e-9) dir = Vec3(1, 0, 0);
            else dir /= len;
            Atom cap;
            cap.element = Element::H;
            cap.formal_charge = 0;
            cap.position = mol.atom(in).position + kCapBondLength * dir;
            int cap_idx = static_cast<int>(atoms.size());
            atoms.push_back(cap);
            bonds.push_back({new_index[in], cap_idx, BondOrder::Single});
        }
    }
    *out = Molecule(mol.name(), net, std::move(atoms), std::move(bonds));
    return true;
}

}  // namespace

uint64_t canonical_graph_hash(const Molecule& mol) {
    const int n = mol.num_atoms();
    // Refinement over (element, charge) labels with typed edges, so isomorphic
    // fragments collide and differently-labeled ones almost surely do not.
    std::vector<uint64_t> color(n);
    for (int i = 0; i < n; ++i) {
        color[i] = 0x9e3779b97f4a7c15ULL * (static_cast<uint64_t>(element_z(mol.atom(i).element)) * 31 +
                                            static_cast<uint64_t>(mol.atom(i).formal_charge + 8));
    }
    for (int round = 0; round < n; ++round) {
        std::vector<uint64_t> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<uint64_t> nb;
            for (int v : mol.neighbors(i)) {
                int b = mol.bond_between(i, v);
                uint64_t edge = static_cast<uint64_t>(mol.bond(b).order) + 1;
                nb.push_back(color[v] * 4u + edge);
            }
            std::sort(nb.begin(), nb.end());
            uint64_t h = color[i];
            for (uint64_t x : nb) h = h * 0x100000001b3ULL ^ x;
            next[i] = h;
        }
        color = std::move(next);
    }
    std::sort(color.begin(), color.end());
    uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<uint64_t>(n);
    for (uint64_t x : color) h = h * 0x100000001b3ULL ^ x;
    return h;
}

FragmentResult fragment(const Molecule& mol, int max_atoms) {
    FragmentResult result;
    RingInfo rings = perceive_rings(mol);
    std::vector<int> conj = conjugated_systems(mol);

    std::vector<std::pair<std::string, std::vector<int>>> seeds;
    for (const Bond& b : mol.bonds()) seeds.emplace_back(seed_name("bond", {b.i, b.j}), std::vector<int>{b.i, b.j});
    for (int j = 0; j < mol.num_atoms(); ++j) {
        const auto& nb = mol.neighbors(j);
        for (size_t a = 0; a < nb.size(); ++a) {
            for (size_t c = a + 1; c < nb.size(); ++c) {
                seeds.emplace_back(seed_name("angle", {nb[a], j, nb[c]}),
                                   std::vector<int>{nb[a], j, nb[c]});
            }
        }
    }
    for (int b = 0; b < mol.num_bonds(); ++b) {
        if (rings.bond_in_ring[b]) continue;  // non-ring torsions only
        int j = mol.bond(b).i, k = mol.bond(b).j;
        for (int i : mol.neighbors(j)) {
            if (i == k) continue;
            for (int l : mol.neighbors(k)) {
                if (l == j || l == i) continue;
                seeds.emplace_back(seed_name("torsion", {i, j, k, l}), std::vector<int>{i, j, k, l});
            }
        }
    }

    std::set<uint64_t> seen;
    auto emit = [&](const Molecule& frag) {
        uint64_t h = canonical_graph_hash(frag);
        if (seen.insert(h).second) result.fragments.push_back(frag);
    };

    if (mol.num_atoms() < max_atoms) emit(mol);

    Molecule frag = mol;
    for (const auto& [name, seed] : seeds) {
        if (build_fragment(mol, rings, conj, seed, max_atoms, &frag)) {
            emit(frag);
        } else {
            result.skipped.push_back(mol.name() + ": seed " + name + " exceeds atom cap " +
                                     std::to_string(max_atoms));
        }
    }
    return result;
}

}  // namespace ffkit
