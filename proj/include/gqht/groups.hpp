#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gqht/su2.hpp"

// Faithful projective single-qubit representations of the finite subgroups of
// SU(2) handled here: C_n, D_2n (order 2n), A_4 and S_4, with multiplication
// tables, cosets, cycle types and m-th-power subgroup utilities.

namespace gqht {

using ElementLabel = std::string;

enum class GroupFamily { Cyclic, Dihedral, A4, S4 };

struct GroupId {
    GroupFamily family;
    int n = 0;  // cyclic order / dihedral half-order; unused for A4, S4

    /// Accepts "C:8", "D:7" (dihedral of order 14), "A4", "S4".
    static GroupId parse(const std::string& text);
    std::string format() const;
    int order() const;
};

/// Permutation of 4 symbols in one-line notation, images of 1..4 stored 0-based.
using Perm4 = std::array<int, 4>;

/// Cycle type of a permutation of 4 symbols: counts (c_1, c_2, c_3, c_4),
/// sum of j*c_j = 4.
struct CycleType {
    std::array<int, 4> counts{};
    bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const Perm4& perm);
bool is_even_permutation(const Perm4& perm);
std::string perm_to_label(const Perm4& perm);
Perm4 label_to_perm(const std::string& label);

class GroupRep {
  public:
    GroupId id() const { return id_; }
    const std::vector<ElementLabel>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }

    const Su2Matrix& image(const ElementLabel& g) const;
    ElementLabel mul(const ElementLabel& g, const ElementLabel& h) const;
    ElementLabel inverse(const ElementLabel& g) const;
    ElementLabel identity_label() const { return elements_.front(); }

    /// One-line permutation identity for A_4/S_4 elements (labels *are* the
    /// one-line notation for those groups). Empty for cyclic/dihedral.
    std::optional<Perm4> perm(const ElementLabel& g) const;

    bool contains(const ElementLabel& g) const { return index_.count(g) != 0; }

    friend GroupRep build_cyclic(int n, const Axis& axis);
    friend GroupRep build_dihedral(int n);
    friend GroupRep build_a4();
    friend GroupRep build_s4();

  private:
    GroupRep() = default;
    void finalize_tables();  // mul/inverse via nearest projective match

    GroupId id_{};
    std::vector<ElementLabel> elements_;
    std::map<ElementLabel, int> index_;
    std::vector<Su2Matrix> images_;
    std::vector<std::vector<int>> mul_;      // mul_[i][j] = index of g_i g_j
    std::vector<int> inv_;
    std::vector<Perm4> perms_;               // only for A4/S4
};

/// Order-n rotation group about `axis`: element m -> rotation(axis, m*2pi/n).
/// Labels "0".."n-1". Throws on n < 1.
GroupRep build_cyclic(int n, const Axis& axis);

/// Order-2n dihedral group: sigma -> R_z(2pi/n), tau -> R_x(pi). Labels
/// "s^a" and "t*s^a". Throws on n < 1.
GroupRep build_dihedral(int n);

/// Rotation groups of the tetrahedron/cube lifted to SU(2); elements are
/// labeled by their permutation of the cube's four space diagonals
/// (one-line notation, identity "1234").
GroupRep build_a4();
GroupRep build_s4();

GroupRep build_group(const GroupId& id);

/// Subgroup generated by all m-th powers, as a set of labels (closure
/// iteration on the multiplication table).
std::set<ElementLabel> m_power_generated_subgroup(const GroupRep& rep, int m);

/// Stable coset identifier for g with respect to a normal subgroup (the
/// minimal member index of g*N). Throws if the subgroup is not normal.
int coset_of(const ElementLabel& g, const std::set<ElementLabel>& normal_subgroup,
             const GroupRep& rep);

}  // namespace gqht
