//
// Copyright 2026 ffkit developers
// SPDX-License-Identifier: Apache-2.0
//

#include "ffkit/params/param_set.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ffkit/common/constants.hpp"
#include "ffkit/common/error.hpp"

namespace ffkit {

using nlohmann::json;

BondKey bond_key(const EquivalenceClasses& eq, int i, int j) {
    auto [a, b] = std::minmax(eq.atom_class[i], eq.atom_class[j]);
    return {a, b};
}

AngleKey angle_key(const EquivalenceClasses& eq, int i, int j, int k) {
    auto [a, c] = std::minmax(eq.atom_class[i], eq.atom_class[k]);
    return {a, eq.atom_class[j], c};
}

ProperKey proper_key(const EquivalenceClasses& eq, int i, int j, int k, int l) {
    ProperKey fwd = {eq.atom_class[i], eq.atom_class[j], eq.atom_class[k], eq.atom_class[l]};
    ProperKey rev = {fwd[3], fwd[2], fwd[1], fwd[0]};
    return std::min(fwd, rev);
}

ImproperKey improper_key(const EquivalenceClasses& eq, int a, int b, int c, int d) {
    std::array<int, 3> periph = {eq.atom_class[a], eq.atom_class[b], eq.atom_class[d]};
    std::sort(periph.begin(), periph.end());
    return {eq.atom_class[c], periph[0], periph[1], periph[2]};
}

std::string key_to_string(const BondKey& k) {
    return std::to_string(k[0]) + "-" + std::to_string(k[1]);
}
std::string key_to_string(const AngleKey& k) {
    return std::to_string(k[0]) + "-" + std::to_string(k[1]) + "-" + std::to_string(k[2]);
}
std::string key_to_string(const ProperKey& k) {
    return std::to_string(k[0]) + "-" + std::to_string(k[1]) + "-" + std::to_string(k[2]) + "-" +
           std::to_string(k[3]);
}

namespace {

std::string improper_key_to_string(const ImproperKey& k) {
    return std::to_string(k[0]) + "|" + std::to_string(k[1]) + "-" + std::to_string(k[2]) + "-" +
           std::to_string(k[3]);
}

template <typename Key>
Key key_from_string(const std::string& s);

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (c == '-' && cur.empty()) {
            cur += c;  // leading minus of a negative id (never produced, but accept)
        } else if (c == '-' || c == '|') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

}  // namespace

ResolvedParams resolve(const ParamSet& params, const Molecule& mol, const Topology& topo,
                       const EquivalenceClasses& eq) {
    ResolvedParams rp;
    if (static_cast<int>(params.charges.size()) != mol.num_atoms())
        throw input_error("parameters: charge vector size " + std::to_string(params.charges.size()) +
                          " does not match atom count " + std::to_string(mol.num_atoms()));
    rp.charge = params.charges;

    rp.atom.resize(mol.num_atoms());
    for (int i = 0; i < mol.num_atoms(); ++i) {
        auto it = params.atom_types.find(eq.atom_class[i]);
        if (it == params.atom_types.end())
            throw input_error("parameters: missing vdW entry for atom class " +
                              std::to_string(eq.atom_class[i]) + " (atom " + std::to_string(i) + ")");
        rp.atom[i] = it->second;
    }

    for (const auto& b : topo.bonds) {
        BondKey key = bond_key(eq, b[0], b[1]);
        auto it = params.bonds.find(key);
        if (it == params.bonds.end())
            throw input_error("parameters: missing bond class " + key_to_string(key));
        rp.bond.push_back(it->second);
        rp.bond_keys.push_back(key);
    }
    for (const auto& a : topo.angles) {
        AngleKey key = angle_key(eq, a[0], a[1], a[2]);
        auto it = params.angles.find(key);
        if (it == params.angles.end())
            throw input_error("parameters: missing angle class " + key_to_string(key));
        rp.angle.push_back(it->second);
        rp.angle_keys.push_back(key);
    }
    for (const auto& p : topo.propers) {
        ProperKey key = proper_key(eq, p[0], p[1], p[2], p[3]);
        auto it = params.propers.find(key);
        if (it == params.propers.end())
            throw input_error("parameters: missing proper torsion class " + key_to_string(key));
        rp.proper.push_back(it->second);
        rp.proper_keys.push_back(key);
    }
    for (const auto& im : topo.impropers) {
        ImproperKey key = improper_key(eq, im[0], im[1], im[2], im[3]);
        auto it = params.impropers.find(key);
        if (it == params.impropers.end())
            throw input_error("parameters: missing improper class " + improper_key_to_string(key));
        rp.improper.push_back(it->second);
        rp.improper_keys.push_back(key);
    }
    return rp;
}

std::vector<double> apply_charge_corrections(const std::vector<double>& q_raw,
                                             const ChargeCorrectionSet& corrections) {
    if (corrections.bonds.size() != corrections.value.size())
        throw input_error("charge corrections: bonds/value size mismatch");
    // Antisymmetry: each directed entry must have its exact negation present.
    std::map<std::pair<int, int>, double> dir;
    for (size_t e = 0; e < corrections.bonds.size(); ++e) {
        dir[{corrections.bonds[e][0], corrections.bonds[e][1]}] = corrections.value[e];
    }
    for (const auto& [key, v] : dir) {
        auto it = dir.find({key.second, key.first});
        if (it == dir.end() || it->second != -v)
            throw input_error("charge corrections: entry " + std::to_string(key.first) + "<-" +
                              std::to_string(key.second) + " has no exact antisymmetric partner");
    }
    std::vector<double> q = q_raw;
    for (size_t e = 0; e < corrections.bonds.size(); ++e) {
        int i = corrections.bonds[e][0];
        if (i < 0 || i >= static_cast<int>(q.size()))
            throw input_error("charge corrections: atom index out of range");
        q[i] += corrections.value[e];
    }
    return q;
}

namespace {

void check_range(std::vector<Violation>* out, const std::string& what, bool ok, double magnitude) {
    if (!ok) out->push_back({what, magnitude});
}

}  // namespace

std::vector<Violation> validate(const ParamSet& params, const Molecule& mol,
                                const EquivalenceClasses& eq) {
    std::vector<Violation> v;

    if (static_cast<int>(params.charges.size()) != mol.num_atoms()) {
        v.push_back({"charges: size mismatch", 0.0});
        return v;
    }
    double qsum = 0.0;
    for (double q : params.charges) qsum += q;
    double dq = qsum - mol.net_charge();
    if (std::abs(dq) > 1e-10)
        v.push_back({"charge conservation: sum deviates from net charge", std::abs(dq)});

    // Charges must be equal within atom equivalence classes.
    std::map<int, double> class_charge;
    for (int i = 0; i < mol.num_atoms(); ++i) {
        auto [it, fresh] = class_charge.emplace(eq.atom_class[i], params.charges[i]);
        if (!fresh && it->second != params.charges[i]) {
            v.push_back({"charge equivalence: atom " + std::to_string(i) + " differs within class " +
                             std::to_string(eq.atom_class[i]),
                         std::abs(it->second - params.charges[i])});
        }
    }

    for (const auto& [key, p] : params.bonds) {
        check_range(&v, "bond class " + key_to_string(key) + ": k_r < 0", p.k_r >= 0.0, p.k_r);
        check_range(&v, "bond class " + key_to_string(key) + ": r0 <= 0", p.r0 > 0.0, p.r0);
    }
    for (const auto& [key, p] : params.angles) {
        check_range(&v, "angle class " + key_to_string(key) + ": k_theta < 0", p.k_theta >= 0.0,
                    p.k_theta);
        check_range(&v, "angle class " + key_to_string(key) + ": theta0 out of (0, pi)",
                    p.theta0 > 0.0 && p.theta0 < kPi, p.theta0);
    }
    for (const auto& [key, p] : params.impropers) {
        check_range(&v, "improper class " + improper_key_to_string(key) + ": k_psi < 0",
                    p.k_psi >= 0.0, p.k_psi);
    }
    for (const auto& [cls, p] : params.atom_types) {
        check_range(&v, "atom class " + std::to_string(cls) + ": sigma <= 0", p.sigma > 0.0, p.sigma);
        check_range(&v, "atom class " + std::to_string(cls) + ": epsilon < 0", p.epsilon >= 0.0,
                    p.epsilon);
    }

    // Coverage of the molecule's term classes.
    try {
        Topology topo = build_topology(mol);
        resolve(params, mol, topo, eq);
    } catch (const Error& e) {
        v.push_back({e.what(), 0.0});
    }
    return v;
}

std::vector<Violation> validate_resolved(const ResolvedParams& rp, const Molecule& mol,
                                         const Topology& topo, const EquivalenceClasses& eq) {
    std::vector<Violation> v;

    auto check_tied = [&v](const std::string& kind, const std::string& key, double a, double b) {
        if (a != b)
            v.push_back({kind + " class " + key + ": parameters differ within class",
                         std::abs(a - b)});
    };

    std::map<BondKey, BondParams> bond_rep;
    for (size_t t = 0; t < rp.bond.size(); ++t) {
        auto [it, fresh] = bond_rep.emplace(rp.bond_keys[t], rp.bond[t]);
        if (!fresh) {
            check_tied("bond", key_to_string(rp.bond_keys[t]), it->second.k_r, rp.bond[t].k_r);
            check_tied("bond", key_to_string(rp.bond_keys[t]), it->second.r0, rp.bond[t].r0);
        }
    }
    std::map<AngleKey, AngleParams> angle_rep;
    for (size_t t = 0; t < rp.angle.size(); ++t) {
        auto [it, fresh] = angle_rep.emplace(rp.angle_keys[t], rp.angle[t]);
        if (!fresh) {
            check_tied("angle", key_to_string(rp.angle_keys[t]), it->second.k_theta,
                       rp.angle[t].k_theta);
            check_tied("angle", key_to_string(rp.angle_keys[t]), it->second.theta0,
                       rp.angle[t].theta0);
        }
    }
    std::map<ProperKey, ProperParams> proper_rep;
    for (size_t t = 0; t < rp.proper.size(); ++t) {
        auto [it, fresh] = proper_rep.emplace(rp.proper_keys[t], rp.proper[t]);
        if (!fresh) {
            for (int n = 0; n < 4; ++n)
                check_tied("proper", key_to_string(rp.proper_keys[t]), it->second.k[n],
                           rp.proper[t].k[n]);
        }
    }
    std::map<ImproperKey, ImproperParams> imp_rep;
    for (size_t t = 0; t < rp.improper.size(); ++t) {
        auto [it, fresh] = imp_rep.emplace(rp.improper_keys[t], rp.improper[t]);
        if (!fresh)
            check_tied("improper", improper_key_to_string(rp.improper_keys[t]), it->second.k_psi,
                       rp.improper[t].k_psi);
    }

    std::map<int, AtomTypeParams> atom_rep;
    std::map<int, double> charge_rep;
    for (int i = 0; i < mol.num_atoms(); ++i) {
        auto [it, fresh] = atom_rep.emplace(eq.atom_class[i], rp.atom[i]);
        if (!fresh) {
            check_tied("atom", std::to_string(eq.atom_class[i]), it->second.sigma, rp.atom[i].sigma);
            check_tied("atom", std::to_string(eq.atom_class[i]), it->second.epsilon,
                       rp.atom[i].epsilon);
        }
        auto [qit, qfresh] = charge_rep.emplace(eq.atom_class[i], rp.charge[i]);
        if (!qfresh) check_tied("charge", std::to_string(eq.atom_class[i]), qit->second, rp.charge[i]);
    }

    double qsum = 0.0;
    for (double q : rp.charge) qsum += q;
    if (std::abs(qsum - mol.net_charge()) > 1e-10)
        v.push_back({"charge conservation: sum deviates from net charge",
                     std::abs(qsum - mol.net_charge())});
    (void)topo;
    return v;
}

std::string params_to_json(const ParamSet& params) {
    json j;
    j["bond_classes"] = json::object();
    for (const auto& [key, p] : params.bonds) {
        j["bond_classes"][key_to_string(key)] = {{"k_r", p.k_r}, {"r0", p.r0}};
    }
    j["angle_classes"] = json::object();
    for (const auto& [key, p] : params.angles) {
        j["angle_classes"][key_to_string(key)] = {{"k_theta", p.k_theta}, {"theta0", p.theta0}};
    }
    j["proper_classes"] = json::object();
    for (const auto& [key, p] : params.propers) {
        j["proper_classes"][key_to_string(key)] = {
            {"k1", p.k[0]}, {"k2", p.k[1]}, {"k3", p.k[2]}, {"k4", p.k[3]}};
    }
    j["improper_classes"] = json::object();
    for (const auto& [key, p] : params.impropers) {
        j["improper_classes"][improper_key_to_string(key)] = {{"k2", p.k_psi}};
    }
    j["atom_classes"] = json::object();
    for (const auto& [cls, p] : params.atom_types) {
        j["atom_classes"][std::to_string(cls)] = {{"sigma", p.sigma}, {"epsilon", p.epsilon}};
    }
    j["charges"] = params.charges;
    return j.dump(2);
}

ParamSet params_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("parameter JSON: ") + e.what());
    }
    ParamSet p;
    auto require_keys = [](const json& obj, const std::vector<std::string>& allowed,
                           const std::string& where) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
                throw input_error("parameter JSON: unknown field '" + it.key() + "' in " + where);
        }
    };
    if (j.contains("bond_classes")) {
        for (auto it = j["bond_classes"].begin(); it != j["bond_classes"].end(); ++it) {
            auto ids = split_ints(it.key());
            if (ids.size() != 2) throw input_error("parameter JSON: bad bond key '" + it.key() + "'");
            require_keys(it.value(), {"k_r", "r0"}, "bond class " + it.key());
            BondParams bp{it.value().at("k_r").get<double>(), it.value().at("r0").get<double>()};
            if (bp.k_r < 0) throw input_error("parameter JSON: k_r < 0 in bond class " + it.key());
            if (bp.r0 <= 0) throw input_error("parameter JSON: r0 <= 0 in bond class " + it.key());
            p.bonds[{ids[0], ids[1]}] = bp;
        }
    }
    if (j.contains("angle_classes")) {
        for (auto it = j["angle_classes"].begin(); it != j["angle_classes"].end(); ++it) {
            auto ids = split_ints(it.key());
            if (ids.size() != 3)
                throw input_error("parameter JSON: bad angle key '" + it.key() + "'");
            require_keys(it.value(), {"k_theta", "theta0"}, "angle class " + it.key());
            AngleParams ap{it.value().at("k_theta").get<double>(),
                           it.value().at("theta0").get<double>()};
            if (ap.k_theta < 0)
                throw input_error("parameter JSON: k_theta < 0 in angle class " + it.key());
            if (!(ap.theta0 > 0 && ap.theta0 < kPi))
                throw input_error("parameter JSON: theta0 out of (0, pi) in angle class " + it.key());
            p.angles[{ids[0], ids[1], ids[2]}] = ap;
        }
    }
    if (j.contains("proper_classes")) {
        for (auto it = j["proper_classes"].begin(); it != j["proper_classes"].end(); ++it) {
            auto ids = split_ints(it.key());
            if (ids.size() != 4)
                throw input_error("parameter JSON: bad proper key '" + it.key() + "'");
            require_keys(it.value(), {"k1", "k2", "k3", "k4"},
                         "proper class " + it.key() + " (periodicities 1-4 only)");
            ProperParams pp;
            pp.k = {it.value().value("k1", 0.0), it.value().value("k2", 0.0),
                    it.value().value("k3", 0.0), it.value().value("k4", 0.0)};
            p.propers[{ids[0], ids[1], ids[2], ids[3]}] = pp;
        }
    }
    if (j.contains("improper_classes")) {
        for (auto it = j["improper_classes"].begin(); it != j["improper_classes"].end(); ++it) {
            auto ids = split_ints(it.key());
            if (ids.size() != 4)
                throw input_error("parameter JSON: bad improper key '" + it.key() + "'");
            require_keys(it.value(), {"k2"}, "improper class " + it.key() + " (n = 2 only)");
            ImproperParams ip{it.value().at("k2").get<double>()};
            if (ip.k_psi < 0)
                throw input_error("parameter JSON: k2 < 0 in improper class " + it.key());
            p.impropers[{ids[0], ids[1], ids[2], ids[3]}] = ip;
        }
    }
    if (j.contains("atom_classes")) {
        for (auto it = j["atom_classes"].begin(); it != j["atom_classes"].end(); ++it) {
            require_keys(it.value(), {"sigma", "epsilon"}, "atom class " + it.key());
            AtomTypeParams ap{it.value().at("sigma").get<double>(),
                              it.value().at("epsilon").get<double>()};
            if (ap.sigma <= 0)
                throw input_error("parameter JSON: sigma <= 0 in atom class " + it.key());
            if (ap.epsilon < 0)
                throw input_error("parameter JSON: epsilon < 0 in atom class " + it.key());
            p.atom_types[std::stoi(it.key())] = ap;
        }
    }
    if (j.contains("charges")) p.charges = j["charges"].get<std::vector<double>>();
    return p;
}

void save_params(const ParamSet& params, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << params_to_json(params) << "\n";
}

ParamSet load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return params_from_json(ss.str());
}

ParamSpace::ParamSpace(const ParamSet& layout) {
    for (const auto& [key, value] : layout.bonds) bond_keys_.push_back(key);
    for (const auto& [key, value] : layout.angles) angle_keys_.push_back(key);
    for (const auto& [key, value] : layout.propers) proper_keys_.push_back(key);
    for (const auto& [key, value] : layout.impropers) improper_keys_.push_back(key);
    for (const auto& [key, value] : layout.atom_types) atom_type_keys_.push_back(key);
    num_charges_ = static_cast<int>(layout.charges.size());
    for (size_t i = 0; i < bond_keys_.size(); ++i) bond_pos_[bond_keys_[i]] = static_cast<int>(i);
    for (size_t i = 0; i < angle_keys_.size(); ++i) angle_pos_[angle_keys_[i]] = static_cast<int>(i);
    for (size_t i = 0; i < proper_keys_.size(); ++i)
        proper_pos_[proper_keys_[i]] = static_cast<int>(i);
    for (size_t i = 0; i < improper_keys_.size(); ++i)
        improper_pos_[improper_keys_[i]] = static_cast<int>(i);

    auto add = [this](Kind kind, int count, int components) {
        kind_offsets_[kind] = static_cast<int>(entries_.size());
        for (int c = 0; c < count; ++c) {
            for (int comp = 0; comp < components; ++comp) entries_.push_back({kind, c, comp});
        }
    };
    add(Kind::BondK, static_cast<int>(bond_keys_.size()), 1);
    add(Kind::BondR0, static_cast<int>(bond_keys_.size()), 1);
    add(Kind::AngleK, static_cast<int>(angle_keys_.size()), 1);
    add(Kind::AngleTheta0, static_cast<int>(angle_keys_.size()), 1);
    add(Kind::ProperK, static_cast<int>(proper_keys_.size()), 4);
    add(Kind::ImproperK, static_cast<int>(improper_keys_.size()), 1);
    add(Kind::Sigma, static_cast<int>(atom_type_keys_.size()), 1);
    add(Kind::Epsilon, static_cast<int>(atom_type_keys_.size()), 1);
    add(Kind::Charge, num_charges_, 1);
}

Eigen::VectorXd ParamSpace::to_vector(const ParamSet& params) const {
    Eigen::VectorXd v(size());
    for (int idx = 0; idx < size(); ++idx) {
        const Entry& e = entries_[idx];
        switch (e.kind) {
            case Kind::BondK: v[idx] = params.bonds.at(bond_keys_[e.class_index]).k_r; break;
            case Kind::BondR0: v[idx] = params.bonds.at(bond_keys_[e.class_index]).r0; break;
            case Kind::AngleK: v[idx] = params.angles.at(angle_keys_[e.class_index]).k_theta; break;
            case Kind::AngleTheta0:
                v[idx] = params.angles.at(angle_keys_[e.class_index]).theta0;
                break;
            case Kind::ProperK:
                v[idx] = params.propers.at(proper_keys_[e.class_index]).k[e.component];
                break;
            case Kind::ImproperK:
                v[idx] = params.impropers.at(improper_keys_[e.class_index]).k_psi;
                break;
            case Kind::Sigma: v[idx] = params.atom_types.at(atom_type_keys_[e.class_index]).sigma; break;
            case Kind::Epsilon:
                v[idx] = params.atom_types.at(atom_type_keys_[e.class_index]).epsilon;
                break;
            case Kind::Charge: v[idx] = params.charges[e.class_index]; break;
        }
    }
    return v;
}

void ParamSpace::apply(const Eigen::VectorXd& values, ParamSet* params) const {
    if (values.size() != size()) throw input_error("ParamSpace::apply: size mismatch");
    for (int idx = 0; idx < size(); ++idx) {
        const Entry& e = entries_[idx];
        double v = values[idx];
        switch (e.kind) {
            case Kind::BondK: params->bonds[bond_keys_[e.class_index]].k_r = v; break;
            case Kind::BondR0: params->bonds[bond_keys_[e.class_index]].r0 = v; break;
            case Kind::AngleK: params->angles[angle_keys_[e.class_index]].k_theta = v; break;
            case Kind::AngleTheta0: params->angles[angle_keys_[e.class_index]].theta0 = v; break;
            case Kind::ProperK: params->propers[proper_keys_[e.class_index]].k[e.component] = v; break;
            case Kind::ImproperK: params->impropers[improper_keys_[e.class_index]].k_psi = v; break;
            case Kind::Sigma: params->atom_types[atom_type_keys_[e.class_index]].sigma = v; break;
            case Kind::Epsilon: params->atom_types[atom_type_keys_[e.class_index]].epsilon = v; break;
            case Kind::Charge: params->charges[e.class_index] = v; break;
        }
    }
}

int ParamSpace::index_bond_k(const BondKey& key) const {
    auto it = bond_pos_.find(key);
    return it == bond_pos_.end() ? -1 : kind_offsets_.at(Kind::BondK) + it->second;
}
int ParamSpace::index_angle_k(const AngleKey& key) const {
    auto it = angle_pos_.find(key);
    return it == angle_pos_.end() ? -1 : kind_offsets_.at(Kind::AngleK) + it->second;
}
int ParamSpace::index_proper_k(const ProperKey& key, int n) const {
    auto it = proper_pos_.find(key);
    return it == proper_pos_.end() ? -1 : kind_offsets_.at(Kind::ProperK) + 4 * it->second + (n - 1);
}
int ParamSpace::index_improper_k(const ImproperKey& key) const {
    auto it = improper_pos_.find(key);
    return it == improper_pos_.end() ? -1 : kind_offsets_.at(Kind::ImproperK) + it->second;
}

bool ParamSpace::is_force_constant(Kind k) {
    return k == Kind::BondK || k == Kind::AngleK || k == Kind::ProperK || k == Kind::ImproperK;
}

std::string ParamSpace::describe(int idx) const {
    const Entry& e = entries_[idx];
    switch (e.kind) {
        case Kind::BondK: return "k_r[" + key_to_string(bond_keys_[e.class_index]) + "]";
        case Kind::BondR0: return "r0[" + key_to_string(bond_keys_[e.class_index]) + "]";
        case Kind::AngleK: return "k_theta[" + key_to_string(angle_keys_[e.class_index]) + "]";
        case Kind::AngleTheta0: return "theta0[" + key_to_string(angle_keys_[e.class_index]) + "]";
        case Kind::ProperK:
            return "k_phi" + std::to_string(e.component + 1) + "[" +
                   key_to_string(proper_keys_[e.class_index]) + "]";
        case Kind::ImproperK:
            return "k_psi[" + improper_key_to_string(improper_keys_[e.class_index]) + "]";
        case Kind::Sigma: return "sigma[class " + std::to_string(atom_type_keys_[e.class_index]) + "]";
        case Kind::Epsilon:
            return "epsilon[class " + std::to_string(atom_type_keys_[e.class_index]) + "]";
        case Kind::Charge: return "q[atom " + std::to_string(e.class_index) + "]";
    }
    return "?";
}

}  // namespace ffkit
