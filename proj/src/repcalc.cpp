#include "liehr/repcalc.hpp"

#include <algorithm>

namespace liehr {

Int IrrepSpec::complex_degree() const {
    if (weights.size() != group.simple_factors.size())
        throw domain_error("one weight per simple factor required");
    Int deg = 1;
    for (size_t i = 0; i < weights.size(); i++)
        deg *= weyl_dim(group.simple_factors[i], weights[i]);
    return deg;
}

int tensor_indicator(const std::vector<int>& indicators) {
    int prod = 1;
    for (int ind : indicators) {
        if (ind == 0) return 0;
        prod *= ind;
    }
    return prod;
}

RealRepSpec realify(const IrrepSpec& irrep) {
    for (int c : irrep.torus_charges)
        if (c != 0) throw domain_error("nonzero torus charges are out of scope");
    std::vector<int> inds;
    for (size_t i = 0; i < irrep.weights.size(); i++)
        inds.push_back(fs_indicator(irrep.group.simple_factors[i], irrep.weights[i]));
    int reality = tensor_indicator(inds);
    RealRepSpec out;
    out.source = irrep;
    out.reality = reality;
    Int deg = irrep.complex_degree();
    if (reality == +1) {
        out.real_dim = deg;
        out.abs_irred = true;
    } else {
        out.real_dim = 2 * deg;
        out.abs_irred = false;
    }
    return out;
}

namespace {

bool weight_is(const HighestWeight& w, std::initializer_list<int> coords) {
    return w.coords.size() == coords.size() &&
           std::equal(coords.begin(), coords.end(), w.coords.begin());
}

bool is_fundamental(const HighestWeight& w, int node) {
    for (size_t i = 0; i < w.coords.size(); i++)
        if (w.coords[i] != (static_cast<int>(i) == node - 1 ? 1 : 0)) return false;
    return true;
}

}  // namespace

bool image_is_full_orthogonal(SimpleType t, const HighestWeight& w) {
    switch (t.family) {
        case Family::A:
            if (t.rank == 1 && weight_is(w, {2})) return true;  // SO(3)
            if (t.rank == 3 && is_fundamental(w, 2)) return true;  // SU(4) -> SO(6)
            return false;
        case Family::B:
            return t.rank >= 2 && is_fundamental(w, 1);  // vector of SO(2n+1)
        case Family::C:
            return t.rank == 2 && is_fundamental(w, 2);  // Sp(2) -> SO(5)
        case Family::D:
            if (is_fundamental(w, 1)) return true;  // vector of SO(2n)
            // triality: the spin representations of Spin(8) have image SO(8)
            if (t.rank == 4 && (is_fundamental(w, 3) || is_fundamental(w, 4))) return true;
            return false;
        default:
            return false;
    }
}

bool image_is_full_symplectic(SimpleType t, const HighestWeight& w) {
    switch (t.family) {
        case Family::A:
            return t.rank == 1 && weight_is(w, {1});  // Sp(1)
        case Family::B:
            if (t.rank == 1 && weight_is(w, {1})) return true;  // B1 alias of A1
            return t.rank == 2 && is_fundamental(w, 2);  // Spin(5) -> Sp(2)
        case Family::C:
            return is_fundamental(w, 1);  // vector of Sp(n)
        default:
            return false;
    }
}

std::vector<std::pair<HighestWeight, Int>> dominant_weights_up_to(SimpleType t,
                                                                  const Int& cap) {
    std::vector<std::pair<HighestWeight, Int>> out;
    HighestWeight w = zero_weight(t);
    // weyl_dim is strictly increasing in each coordinate, so plain
    // backtracking over coordinate vectors terminates quickly
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == t.rank) {
            if (!w.is_zero()) {
                Int d = weyl_dim(t, w);
                if (d <= cap) out.emplace_back(w, d);
            }
            return;
        }
        for (int c = 0;; c++) {
            w.coords[pos] = c;
            if (weyl_dim(t, w) > cap) break;
            self(self, pos + 1);
        }
        w.coords[pos] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return x.first.coords < y.first.coords;
    });
    return out;
}

int min_degree_real(SimpleType t, bool exclude_full_orthogonal, int cap) {
    for (const auto& [w, deg] : dominant_weights_up_to(t, cap)) {
        if (fs_indicator(t, w) != +1) continue;
        if (exclude_full_orthogonal && image_is_full_orthogonal(t, w)) continue;
        return static_cast<int>(deg);
    }
    throw cap_exceeded("no absolutely irreducible representation of " + t.name() +
                       " with degree <= " + std::to_string(cap));
}

std::optional<int> min_degree_quaternionic(SimpleType t, bool exclude_full_symplectic,
                                           int cap) {
    if (!admits_quaternionic(t)) return std::nullopt;
    for (const auto& [w, deg] : dominant_weights_up_to(t, cap)) {
        if (fs_indicator(t, w) != -1) continue;
        if (exclude_full_symplectic && image_is_full_symplectic(t, w)) continue;
        return static_cast<int>(deg / 2);
    }
    throw cap_exceeded("quaternionic irreps of " + t.name() + " exist but exceed cap " +
                       std::to_string(cap));
}

}  // namespace liehr
