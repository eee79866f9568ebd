//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FFKIT_PARAMS_PARAM_SET_HPP
#define FFKIT_PARAMS_PARAM_SET_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ffkit/molgraph/equivalence.hpp"
#include "ffkit/molgraph/molecule.hpp"
#include "ffkit/potential/topology.hpp"

namespace ffkit {

// Term-class keys are tuples of atom equivalence-class ids; storing
// parameters on these keys enforces the symmetry constraints by construction.
using BondKey = std::array<int, 2>;      // sorted
using AngleKey = std::array<int, 3>;     // center in the middle, outer sorted
using ProperKey = std::array<int, 4>;    // min of tuple vs reversal
using ImproperKey = std::array<int, 4>;  // {center, sorted peripherals...}

BondKey bond_key(const EquivalenceClasses& eq, int i, int j);
AngleKey angle_key(const EquivalenceClasses& eq, int i, int j, int k);
ProperKey proper_key(const EquivalenceClasses& eq, int i, int j, int k, int l);
ImproperKey improper_key(const EquivalenceClasses& eq, int a, int b, int c, int d);

std::string key_to_string(const BondKey& k);
std::string key_to_string(const AngleKey& k);
std::string key_to_string(const ProperKey& k);

struct BondParams {
    double k_r = 0.0;  // kcal/mol/A^2
    double r0 = 1.0;   // Angstrom
};
struct AngleParams {
    double k_theta = 0.0;  // kcal/mol/rad^2
    double theta0 = 2.0;   // radians, in (0, pi)
};
struct ProperParams {
    std::array<double, 4> k{};  // k_phi^n for n = 1..4, kcal/mol, any sign
};
struct ImproperParams {
    double k_psi = 0.0;  // kcal/mol, n = 2 with phase 180 degrees
};
struct AtomTypeParams {
    double sigma = 3.0;     // Angstrom
    double epsilon = 0.05;  // kcal/mol
};

/// Per-molecule MM parameters stored on equivalence-derived term classes.
/// Charges are per atom; all other values live on class keys, so atoms and
/// bonds in one equivalence class carry identical parameters structurally.
struct ParamSet {
    std::map<BondKey, BondParams> bonds;
    std::map<AngleKey, AngleParams> angles;
    std::map<ProperKey, ProperParams> propers;
    std::map<ImproperKey, ImproperParams> impropers;
    std::map<int, AtomTypeParams> atom_types;  // atom class id -> vdW
    std::vector<double> charges;               // per atom, e
};

/// Per-term parameter view aligned with a Topology, for fast evaluation.
struct ResolvedParams {
    std::vector<BondParams> bond;
    std::vector<AngleParams> angle;
    std::vector<ProperParams> proper;
    std::vector<ImproperParams> improper;
    std::vector<AtomTypeParams> atom;  // per atom
    std::vector<double> charge;        // per atom
    std::vector<BondKey> bond_keys;
    std::vector<AngleKey> angle_keys;
    std::vector<ProperKey> proper_keys;
    std::vector<ImproperKey> improper_keys;
};

/// Expands class-keyed parameters onto topology terms. Throws Error naming
/// the first uncovered term class.
ResolvedParams resolve(const ParamSet& params, const Molecule& mol, const Topology& topo,
                       const EquivalenceClasses& eq);

/// Antisymmetric per-bond charge transfers: value[b] is the charge moved from
/// bond b's second atom to its first (b(i<-j)); applying them net-conserves
/// the total charge by pairwise cancellation.
struct ChargeCorrectionSet {
    std::vector<std::array<int, 2>> bonds;  // directed (i, j) per entry
    std::vector<double> value;              // b(i<-j); the reverse entry must negate
};

/// q_i = q_raw_i + sum_{j in N(i)} b(i<-j). Throws on non-antisymmetric input.
std::vector<double> apply_charge_corrections(const std::vector<double>& q_raw,
                                             const ChargeCorrectionSet& corrections);

struct Violation {
    std::string what;
    double magnitude = 0.0;
};

/// Diagnostics, not failures: empty iff all ParamSet invariants hold against
/// the molecule (charge conservation, class coverage, physical ranges,
/// per-class charge equality).
std::vector<Violation> validate(const ParamSet& params, const Molecule& mol,
                                const EquivalenceClasses& eq);

/// Checks a per-term expansion for exact class-tying equality as well; this
/// is where a hand-perturbed symmetric term shows up.
std::vector<Violation> validate_resolved(const ResolvedParams& rp, const Molecule& mol,
                                         const Topology& topo, const EquivalenceClasses& eq);

std::string params_to_json(const ParamSet& params);
ParamSet params_from_json(const std::string& text);
void save_params(const ParamSet& params, const std::string& path);
ParamSet load_params(const std::string& path);

/// Flat view over a ParamSet's values for optimizer updates. Indices are
/// stable for a fixed key layout (deterministic map order).
class ParamSpace {
public:
    enum class Kind { BondK, BondR0, AngleK, AngleTheta0, ProperK, ImproperK, Sigma, Epsilon, Charge };

    struct Entry {
        Kind kind;
        int class_index;  // dense index within its kind's map order
        int component;    // periodicity-1 for ProperK, else 0
    };

    explicit ParamSpace(const ParamSet& layout);

    int size() const { return static_cast<int>(entries_.size()); }
    const Entry& entry(int idx) const { return entries_[idx]; }
    const std::vector<Entry>& entries() const { return entries_; }

    Eigen::VectorXd to_vector(const ParamSet& params) const;
    void apply(const Eigen::VectorXd& values, ParamSet* params) const;

    /// Index lookups; -1 when absent.
    int index_bond_k(const BondKey& key) const;
    int index_angle_k(const AngleKey& key) const;
    int index_proper_k(const ProperKey& key, int n) const;  // n in 1..4
    int index_improper_k(const ImproperKey& key) const;

    /// True for force-constant entries (BondK, AngleK, ProperK, ImproperK).
    static bool is_force_constant(Kind k);

    std::string describe(int idx) const;

private:
    std::vector<Entry> entries_;
    std::vector<BondKey> bond_keys_;
    std::vector<AngleKey> angle_keys_;
    std::vector<ProperKey> proper_keys_;
    std::vector<ImproperKey> improper_keys_;
    std::vector<int> atom_type_keys_;
    int num_charges_ = 0;
    std::map<BondKey, int> bond_pos_;
    std::map<AngleKey, int> angle_pos_;
    std::map<ProperKey, int> proper_pos_;
    std::map<ImproperKey, int> improper_pos_;
    std::map<Kind, int> kind_offsets_;
};

}  // namespace ffkit

#endif  // FFKIT_PARAMS_PARAM_SET_HPP
