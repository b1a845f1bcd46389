#include "gqht/groups.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

namespace gqht {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Vec3 {
    double x, y, z;
};

std::array<double, 9> rotation_matrix_3d(const Axis& axis, double theta) {
    // Rodrigues' formula.
    const double c = std::cos(theta), s = std::sin(theta);
    const double x = axis.nx(), y = axis.ny(), z = axis.nz();
    return {c + x * x * (1 - c),     x * y * (1 - c) - z * s, x * z * (1 - c) + y * s,
            y * x * (1 - c) + z * s, c + y * y * (1 - c),     y * z * (1 - c) - x * s,
            z * x * (1 - c) - y * s, z * y * (1 - c) + x * s, c + z * z * (1 - c)};
}

Vec3 apply3(const std::array<double, 9>& m, const Vec3& v) {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

// Space diagonals of the cube with vertices (+-1,+-1,+-1), up to sign.
const std::array<Vec3, 4> kDiagonals = {Vec3{1, 1, 1}, Vec3{1, 1, -1},
                                        Vec3{1, -1, 1}, Vec3{-1, 1, 1}};

/// Permutation of the four diagonals induced by a rotation.
Perm4 diagonal_perm(const Axis& axis, double theta) {
    const auto m = rotation_matrix_3d(axis, theta);
    Perm4 p{-1, -1, -1, -1};
    for (int i = 0; i < 4; ++i) {
        const Vec3 w = apply3(m, kDiagonals[i]);
        for (int j = 0; j < 4; ++j) {
            const Vec3& d = kDiagonals[j];
            const double dot = (w.x * d.x + w.y * d.y + w.z * d.z) / 3.0;
            if (std::abs(std::abs(dot) - 1.0) < 1e-9) {
                p[i] = j;
                break;
            }
        }
        if (p[i] < 0) throw std::runtime_error("rotation does not permute cube diagonals");
    }
    return p;
}

Perm4 compose(const Perm4& g, const Perm4& h) {  // (g h)(i) = g(h(i))
    return {g[h[0]], g[h[1]], g[h[2]], g[h[3]]};
}

}  // namespace

GroupId GroupId::parse(const std::string& text) {
    if (text == "A4") return {GroupFamily::A4, 0};
    if (text == "S4") return {GroupFamily::S4, 0};
    if (text.size() >= 3 && text[1] == ':') {
        int n = 0;
        try {
            std::size_t pos = 0;
            n = std::stoi(text.substr(2), &pos);
            if (pos != text.size() - 2) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad group id: " + text);
        }
        if (n < 1) throw std::invalid_argument("group order parameter must be >= 1");
        if (text[0] == 'C') return {GroupFamily::Cyclic, n};
        if (text[0] == 'D') return {GroupFamily::Dihedral, n};
    }
    throw std::invalid_argument("bad group id: " + text);
}

std::string GroupId::format() const {
    switch (family) {
        case GroupFamily::Cyclic: return "C:" + std::to_string(n);
        case GroupFamily::Dihedral: return "D:" + std::to_string(n);
        case GroupFamily::A4: return "A4";
        case GroupFamily::S4: return "S4";
    }
    return "?";
}

int GroupId::order() const {
    switch (family) {
        case GroupFamily::Cyclic: return n;
        case GroupFamily::Dihedral: return 2 * n;
        case GroupFamily::A4: return 12;
        case GroupFamily::S4: return 24;
    }
    return 0;
}

CycleType cycle_type(const Perm4& perm) {
    std::array<bool, 4> seen{};
    CycleType t;
    for (int i = 0; i < 4; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        t.counts[len - 1] += 1;
    }
    return t;
}

bool is_even_permutation(const Perm4& perm) {
    const CycleType t = cycle_type(perm);
    // Parity = (-1)^(sum over cycles of (len-1)).
    const int transpositions = t.counts[1] + 2 * t.counts[2] + 3 * t.counts[3];
    return transpositions % 2 == 0;
}

std::string perm_to_label(const Perm4& perm) {
    std::string s(4, '?');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('1' + perm[i]);
    return s;
}

Perm4 label_to_perm(const std::string& label) {
    if (label.size() != 4) throw std::invalid_argument("bad permutation label: " + label);
    Perm4 p{};
    std::array<bool, 4> seen{};
    for (int i = 0; i < 4; ++i) {
        const int v = label[i] - '1';
        if (v < 0 || v > 3 || seen[v]) throw std::invalid_argument("bad permutation label: " + label);
        seen[v] = true;
        p[i] = v;
    }
    return p;
}

const Su2Matrix& GroupRep::image(const ElementLabel& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw std::invalid_argument("unknown element: " + g);
    return images_[it->second];
}

ElementLabel GroupRep::mul(const ElementLabel& g, const ElementLabel& h) const {
    auto gi = index_.find(g), hi = index_.find(h);
    if (gi == index_.end() || hi == index_.end())
        throw std::invalid_argument("unknown element in mul");
    return elements_[mul_[gi->second][hi->second]];
}

ElementLabel GroupRep::inverse(const ElementLabel& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw std::invalid_argument("unknown element: " + g);
    return elements_[inv_[it->second]];
}

std::optional<Perm4> GroupRep::perm(const ElementLabel& g) const {
    if (perms_.empty()) return std::nullopt;
    auto it = index_.find(g);
    if (it == index_.end()) throw std::invalid_argument("unknown element: " + g);
    return perms_[it->second];
}

void GroupRep::finalize_tables() {
    const int n = order();
    for (int i = 0; i < n; ++i) index_[elements_[i]] = i;

    // Faithfulness: injectivity up to phase.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (equal_up_to_phase(images_[i], images_[j], tol::group_match)) {
                throw std::runtime_error("representation not faithful: " + elements_[i] +
                                         " ~ " + elements_[j]);
            }
        }
    }

    mul_.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Su2Matrix p = images_[i] * images_[j];
            int found = -1;
            for (int k = 0; k < n; ++k) {
                if (equal_up_to_phase(p, images_[k], tol::group_match)) {
                    if (found >= 0) {
                        throw std::runtime_error("ambiguous product match in group table");
                    }
                    found = k;
                }
            }
            if (found < 0) {
                throw std::runtime_error("group not closed: " + elements_[i] + " * " +
                                         elements_[j]);
            }
            mul_[i][j] = found;
        }
    }

    const int e = index_.at(identity_label());
    inv_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (mul_[i][k] == e) {
                inv_[i] = k;
                break;
            }
        }
        if (inv_[i] < 0) throw std::runtime_error("element without inverse");
    }
}

GroupRep build_cyclic(int n, const Axis& axis) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    GroupRep rep;
    rep.id_ = {GroupFamily::Cyclic, n};
    for (int m = 0; m < n; ++m) {
        rep.elements_.push_back(std::to_string(m));
        rep.images_.push_back(rotation(axis, m * 2.0 * kPi / n));
    }
    rep.finalize_tables();
    return rep;
}

GroupRep build_dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral half-order must be >= 1");
    GroupRep rep;
    rep.id_ = {GroupFamily::Dihedral, n};
    const Su2Matrix tau = rotation(Axis::x(), kPi);
    for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < n; ++a) {
            const std::string label = (b ? "t*s^" : "s^") + std::to_string(a);
            Su2Matrix img = rotation(Axis::z(), a * 2.0 * kPi / n);
            if (b) img = tau * img;
            rep.elements_.push_back(label);
            rep.images_.push_back(img);
        }
    }
    rep.finalize_tables();
    return rep;
}

namespace {

GroupRep build_platonic(bool full_s4) {
    struct Gen {
        Axis axis;
        double theta;
    };
    const double third = 1.0 / std::sqrt(3.0);
    const double half2 = 1.0 / std::sqrt(2.0);
    std::vector<Gen> gens = {
        {Axis::x(), kPi},
        {Axis::y(), kPi},
        {Axis::unit_vector(third, third, third), 2.0 * kPi / 3.0},
    };
    if (full_s4) gens.push_back({Axis::unit_vector(half2, half2, 0.0), kPi});

    std::map<std::string, Su2Matrix> found;
    std::map<std::string, Perm4> perms;
    const Perm4 id_perm{0, 1, 2, 3};
    found.emplace("1234", Su2Matrix::identity());
    perms.emplace("1234", id_perm);

    std::deque<std::string> todo{"1234"};
    std::vector<std::pair<Perm4, Su2Matrix>> gen_data;
    gen_data.reserve(gens.size());
    for (const auto& g : gens) {
        gen_data.emplace_back(diagonal_perm(g.axis, g.theta), rotation(g.axis, g.theta));
    }

    while (!todo.empty()) {
        const std::string cur = todo.front();
        todo.pop_front();
        const Perm4 pc = perms.at(cur);
        const Su2Matrix ic = found.at(cur);
        for (const auto& [pg, ig] : gen_data) {
            const Perm4 pn = compose(pc, pg);
            const std::string ln = perm_to_label(pn);
            if (!found.count(ln)) {
                found.emplace(ln, ic * ig);
                perms.emplace(ln, pn);
                todo.push_back(ln);
            }
        }
    }

    GroupRep rep;
    rep.id_ = {full_s4 ? GroupFamily::S4 : GroupFamily::A4, 0};
    for (const auto& [label, img] : found) {  // std::map order: "1234" first
        rep.elements_.push_back(label);
        rep.images_.push_back(img);
        rep.perms_.push_back(perms.at(label));
    }
    if (rep.order() != (full_s4 ? 24 : 12)) {
        throw std::runtime_error("platonic group closure produced wrong order");
    }
    rep.finalize_tables();
    return rep;
}

}  // namespace

GroupRep build_a4() { return build_platonic(false); }
GroupRep build_s4() { return build_platonic(true); }

GroupRep build_group(const GroupId& id) {
    switch (id.family) {
        case GroupFamily::Cyclic: return build_cyclic(id.n, Axis::x());
        case GroupFamily::Dihedral: return build_dihedral(id.n);
        case GroupFamily::A4: return build_a4();
        case GroupFamily::S4: return build_s4();
    }
    throw std::invalid_argument("bad group id");
}

std::set<ElementLabel> m_power_generated_subgroup(const GroupRep& rep, int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    std::set<ElementLabel> gens;
    for (const auto& g : rep.elements()) {
        ElementLabel p = rep.identity_label();
        for (int k = 0; k < m; ++k) p = rep.mul(p, g);
        gens.insert(p);
    }
    // Closure iteration on the table.
    std::set<ElementLabel> sub = gens;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& a : sub) {
            for (const auto& b : sub) {
                if (sub.insert(rep.mul(a, b)).second) grew = true;
            }
            if (grew) break;  // iterators invalidated
        }
    }
    return sub;
}

int coset_of(const ElementLabel& g, const std::set<ElementLabel>& normal_subgroup,
             const GroupRep& rep) {
    if (normal_subgroup.empty() || !normal_subgroup.count(rep.identity_label())) {
        throw std::invalid_argument("subgroup must contain the identity");
    }
    for (const auto& s : normal_subgroup) {
        if (!rep.contains(s)) throw std::invalid_argument("subgroup member not in group");
        for (const auto& h : rep.elements()) {
            const ElementLabel conj = rep.mul(rep.mul(h, s), rep.inverse(h));
            if (!normal_subgroup.count(conj)) {
                throw std::invalid_argument("subgroup is not normal");
            }
        }
    }
    int best = rep.order();
    std::map<ElementLabel, int> pos;
    for (int i = 0; i < rep.order(); ++i) pos[rep.elements()[i]] = i;
    for (const auto& s : normal_subgroup) {
        best = std::min(best, pos.at(rep.mul(g, s)));
    }
    return best;
}

}  // namespace gqht
