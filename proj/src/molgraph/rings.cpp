//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/molgraph/rings.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>

namespace ffkit {

namespace {

// Bridge detection (Tarjan). A bond is a ring bond iff it is not a bridge.
std::vector<bool> find_ring_bonds(const Molecule& mol) {
    const int n = mol.num_atoms();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> ring_bond(mol.num_bonds(), true);
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent_bond) {
        disc[u] = low[u] = timer++;
        for (int v : mol.neighbors(u)) {
            int b = mol.bond_between(u, v);
            if (b == parent_bond) continue;
            if (disc[v] < 0) {
                dfs(v, b);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) ring_bond[b] = false;
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] < 0) dfs(s, -1);
    }
    return ring_bond;
}

// Shortest cycle through bond (u,v): 1 + shortest path u..v avoiding the bond.
// Returns the cycle as an ordered atom list, empty if the bond is a bridge.
std::vector<int> shortest_cycle_through_bond(const Molecule& mol, int bond_id) {
    const Bond& b = mol.bond(bond_id);
    const int n = mol.num_atoms();
    std::vector<int> prev(n, -2);
    std::queue<int> bfs;
    bfs.push(b.i);
    prev[b.i] = -1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        if (u == b.j) break;
        for (int v : mol.neighbors(u)) {
            if (mol.bond_between(u, v) == bond_id) continue;
            if (prev[v] == -2) {
                prev[v] = u;
                bfs.push(v);
            }
        }
    }
    if (prev[b.j] == -2) return {};
    std::vector<int> path;
    for (int u = b.j; u != -1; u = prev[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());  // b.i ... b.j; bond closes the cycle
    return path;
}

// GF(2) bond-set vector for linear-independence checks in cycle space.
std::vector<uint64_t> cycle_bitset(const Molecule& mol, const std::vector<int>& cycle) {
    std::vector<uint64_t> bits((mol.num_bonds() + 63) / 64, 0);
    const int m = static_cast<int>(cycle.size());
    for (int k = 0; k < m; ++k) {
        int bid = mol.bond_between(cycle[k], cycle[(k + 1) % m]);
        bits[bid / 64] ^= (uint64_t{1} << (bid % 64));
    }
    return bits;
}

}  // namespace

RingInfo perceive_rings(const Molecule& mol) {
    RingInfo info;
    const int n = mol.num_atoms();
    info.bond_in_ring = find_ring_bonds(mol);

    info.ring_connectivity.assign(n, 0);
    for (int b = 0; b < mol.num_bonds(); ++b) {
        if (info.bond_in_ring[b]) {
            ++info.ring_connectivity[mol.bond(b).i];
            ++info.ring_connectivity[mol.bond(b).j];
        }
    }

    // Smallest cycle through each atom: minimum over incident ring bonds of
    // the shortest cycle through that bond... the cycle through the bond is
    // the smallest cycle containing the bond, and every cycle through an atom
    // passes two of its incident ring bonds.
    std::vector<std::vector<int>> bond_cycles(mol.num_bonds());
    for (int b = 0; b < mol.num_bonds(); ++b) {
        if (info.bond_in_ring[b]) bond_cycles[b] = shortest_cycle_through_bond(mol, b);
    }
    info.min_ring_size.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int best = 0;
        for (int v : mol.neighbors(i)) {
            int b = mol.bond_between(i, v);
            if (!info.bond_in_ring[b] || bond_cycles[b].empty()) continue;
            int size = static_cast<int>(bond_cycles[b].size());
            if (best == 0 || size < best) best = size;
        }
        info.min_ring_size[i] = best;
    }

    // SSSR: greedily collect independent shortest cycles until the cycle-space
    // rank (B - N + 1 for a connected graph) is reached.
    int target_rank = mol.num_bonds() - n + 1;
    if (target_rank > 0) {
        std::vector<std::pair<int, int>> order;  // (cycle size, bond id)
        for (int b = 0; b < mol.num_bonds(); ++b) {
            if (!bond_cycles[b].empty())
                order.emplace_back(static_cast<int>(bond_cycles[b].size()), b);
        }
        std::stable_sort(order.begin(), order.end());

        std::vector<std::vector<uint64_t>> basis;  // reduced echelon rows
        for (const auto& [size, b] : order) {
            if (static_cast<int>(info.sssr.size()) == target_rank) break;
            auto bits = cycle_bitset(mol, bond_cycles[b]);
            // Gaussian elimination over GF(2).
            for (const auto& row : basis) {
                int pivot = -1;
                for (size_t w = 0; w < row.size(); ++w) {
                    if (row[w]) {
                        pivot = static_cast<int>(w * 64) + __builtin_ctzll(row[w]);
                        break;
                    }
                }
                if (pivot >= 0 && (bits[pivot / 64] >> (pivot % 64)) & 1) {
                    for (size_t w = 0; w < bits.size(); ++w) bits[w] ^= row[w];
                }
            }
            bool nonzero = std::any_of(bits.begin(), bits.end(), [](uint64_t w) { return w != 0; });
            if (nonzero) {
                basis.push_back(bits);
                info.sssr.push_back(bond_cycles[b]);
            }
        }
    }

    // Fused ring systems: connected components over ring bonds.
    info.ring_system.assign(n, -1);
    int next_system = 0;
    for (int s = 0; s < n; ++s) {
        if (info.ring_connectivity[s] == 0 || info.ring_system[s] >= 0) continue;
        std::queue<int> bfs;
        bfs.push(s);
        info.ring_system[s] = next_system;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : mol.neighbors(u)) {
                int b = mol.bond_between(u, v);
                if (!info.bond_in_ring[b]) continue;
                if (info.ring_system[v] < 0) {
                    info.ring_system[v] = next_system;
                    bfs.push(v);
                }
            }
        }
        ++next_system;
    }

    return info;
}

}  // namespace ffkit
