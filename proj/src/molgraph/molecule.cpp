//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/molgraph/molecule.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "ffkit/common/error.hpp"

namespace ffkit {

namespace {
const std::array<std::string, 4> kOrderNames = {"single", "double", "triple", "aromatic"};
}

const std::string& bond_order_name(BondOrder order) {
    return kOrderNames[static_cast<int>(order)];
}

BondOrder bond_order_from_name(const std::string& name) {
    for (int i = 0; i < 4; ++i) {
        if (name == kOrderNames[i]) return static_cast<BondOrder>(i);
    }
    throw input_error("unknown bond order: '" + name + "'");
}

Molecule::Molecule(std::string name, int net_charge, std::vector<Atom> atoms,
                   std::vector<Bond> bonds)
    : name_(std::move(name)),
      net_charge_(net_charge),
      atoms_(std::move(atoms)),
      bonds_(std::move(bonds)) {
    const int n = num_atoms();
    if (n == 0) throw input_error("molecule '" + name_ + "' has no atoms");

    std::set<std::pair<int, int>> seen;
    for (const Bond& b : bonds_) {
        if (b.i < 0 || b.i >= n || b.j < 0 || b.j >= n)
            throw input_error("molecule '" + name_ + "': atom index out of range in bond");
        if (b.i == b.j)
            throw input_error("molecule '" + name_ + "': self-bond on atom " + std::to_string(b.i));
        auto key = std::minmax(b.i, b.j);
        if (!seen.insert(key).second)
            throw input_error("molecule '" + name_ + "': duplicate bond " +
                              std::to_string(key.first) + "-" + std::to_string(key.second));
    }

    int charge_sum = 0;
    for (const Atom& a : atoms_) charge_sum += a.formal_charge;
    if (charge_sum != net_charge_)
        throw input_error("molecule '" + name_ + "': formal charges sum to " +
                          std::to_string(charge_sum) + " but net_charge is " +
                          std::to_string(net_charge_));

    adjacency_.assign(n, {});
    bond_index_.assign(n, {});
    for (int b = 0; b < num_bonds(); ++b) {
        adjacency_[bonds_[b].i].push_back(bonds_[b].j);
        adjacency_[bonds_[b].j].push_back(bonds_[b].i);
        bond_index_[bonds_[b].i].emplace_back(bonds_[b].j, b);
        bond_index_[bonds_[b].j].emplace_back(bonds_[b].i, b);
    }
    for (int i = 0; i < n; ++i) {
        std::sort(adjacency_[i].begin(), adjacency_[i].end());
        std::sort(bond_index_[i].begin(), bond_index_[i].end());
    }

    // Connectivity: multi-fragment inputs are rejected.
    std::vector<char> visited(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    visited[0] = 1;
    int count = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int v : adjacency_[u]) {
            if (!visited[v]) {
                visited[v] = 1;
                ++count;
                bfs.push(v);
            }
        }
    }
    if (count != n)
        throw input_error("molecule '" + name_ + "' is disconnected (" + std::to_string(count) +
                          " of " + std::to_string(n) + " atoms reachable)");
}

int Molecule::bond_between(int i, int j) const {
    for (const auto& [nb, b] : bond_index_[i]) {
        if (nb == j) return b;
    }
    return -1;
}

Coords Molecule::coords() const {
    Coords c(atoms_.size());
    for (size_t i = 0; i < atoms_.size(); ++i) c[i] = atoms_[i].position;
    return c;
}

Molecule Molecule::with_coords(const Coords& coords) const {
    if (static_cast<int>(coords.size()) != num_atoms())
        throw input_error("with_coords: size mismatch");
    std::vector<Atom> atoms = atoms_;
    for (size_t i = 0; i < coords.size(); ++i) atoms[i].position = coords[i];
    return Molecule(name_, net_charge_, std::move(atoms), bonds_);
}

Molecule Molecule::permuted(const std::vector<int>& perm) const {
    const int n = num_atoms();
    if (static_cast<int>(perm.size()) != n) throw input_error("permuted: size mismatch");
    std::vector<int> inverse(n, -1);
    for (int k = 0; k < n; ++k) {
        if (perm[k] < 0 || perm[k] >= n || inverse[perm[k]] != -1)
            throw input_error("permuted: not a permutation");
        inverse[perm[k]] = k;
    }
    std::vector<Atom> atoms(n);
    for (int k = 0; k < n; ++k) atoms[k] = atoms_[perm[k]];
    std::vector<Bond> bonds = bonds_;
    for (Bond& b : bonds) {
        b.i = inverse[b.i];
        b.j = inverse[b.j];
    }
    return Molecule(name_, net_charge_, std::move(atoms), std::move(bonds));
}

std::vector<std::vector<int>> graph_distances(const Molecule& mol) {
    const int n = mol.num_atoms();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> bfs;
        bfs.push(s);
        dist[s][s] = 0;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : mol.neighbors(u)) {
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    bfs.push(v);
                }
            }
        }
    }
    return dist;
}

int shortest_path_length(const Molecule& mol, int from, int to, int skip_bond) {
    const int n = mol.num_atoms();
    std::vector<int> dist(n, -1);
    std::queue<int> bfs;
    bfs.push(from);
    dist[from] = 0;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        if (u == to) return dist[u];
        for (int v : mol.neighbors(u)) {
            int b = mol.bond_between(u, v);
            if (b == skip_bond) continue;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                bfs.push(v);
            }
        }
    }
    return -1;
}

std::vector<int> split_by_bond(const Molecule& mol, int bond_id) {
    const int n = mol.num_atoms();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> bfs;
        bfs.push(s);
        comp[s] = next;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : mol.neighbors(u)) {
                if (mol.bond_between(u, v) == bond_id) continue;
                if (comp[v] < 0) {
                    comp[v] = next;
                    bfs.push(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace ffkit
