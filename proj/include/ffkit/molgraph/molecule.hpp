//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_MOLGRAPH_MOLECULE_HPP
#define FFKIT_MOLGRAPH_MOLECULE_HPP

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "ffkit/common/elements.hpp"

namespace ffkit {

using Vec3 = Eigen::Vector3d;
using Coords = std::vector<Vec3>;

enum class BondOrder : int { Single = 0, Double, Triple, Aromatic };

const std::string& bond_order_name(BondOrder order);
BondOrder bond_order_from_name(const std::string& name);

struct Atom {
    Element element = Element::C;
    int formal_charge = 0;
    Vec3 position = Vec3::Zero();
};

struct Bond {
    int i = 0;
    int j = 0;
    BondOrder order = BondOrder::Single;
};

/// A validated molecular graph with explicit hydrogens and 3D coordinates.
/// Immutable after construction; safe to share across threads.
class Molecule {
public:
    Molecule(std::string name, int net_charge, std::vector<Atom> atoms, std::vector<Bond> bonds);

    const std::string& name() const { return name_; }
    int net_charge() const { return net_charge_; }
    int num_atoms() const { return static_cast<int>(atoms_.size()); }
    int num_bonds() const { return static_cast<int>(bonds_.size()); }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Bond>& bonds() const { return bonds_; }
    const Atom& atom(int i) const { return atoms_[i]; }
    const Bond& bond(int b) const { return bonds_[b]; }

    /// Neighbor atom indices of atom i, sorted ascending.
    const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }

    /// Index of the bond connecting i and j, or -1.
    int bond_between(int i, int j) const;

    bool are_bonded(int i, int j) const { return bond_between(i, j) >= 0; }

    Coords coords() const;

    /// Same graph with replacement coordinates (atom order preserved).
    Molecule with_coords(const Coords& coords) const;

    /// Same graph with atoms relabeled: new index k holds old atom perm[k].
    Molecule permuted(const std::vector<int>& perm) const;

private:
    std::string name_;
    int net_charge_;
    std::vector<Atom> atoms_;
    std::vector<Bond> bonds_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<std::pair<int, int>>> bond_index_;  // (neighbor, bond id)
};

/// Graph distance matrix (BFS hop counts); entries -1 when unreachable.
std::vector<std::vector<int>> graph_distances(const Molecule& mol);

/// Shortest hop distance between two atoms, optionally ignoring one bond.
int shortest_path_length(const Molecule& mol, int from, int to, int skip_bond = -1);

/// Connected components after conceptually removing one bond. Returns the
/// component id per atom (0 or 1 when the bond is a bridge).
std::vector<int> split_by_bond(const Molecule& mol, int bond_id);

}  // namespace ffkit

#endif  // FFKIT_MOLGRAPH_MOLECULE_HPP
