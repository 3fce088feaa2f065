#pragma once

#include <optional>

#include "liehr/lie_core.hpp"

namespace liehr {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Irreducible complex representation of a product group: one dominant
// weight per simple factor, zero charge on every torus coordinate.
struct IrrepSpec {
    GroupSpec group;
    std::vector<HighestWeight> weights;
    std::vector<int> torus_charges;  // must be all zero

    Int complex_degree() const;
};

struct RealRepSpec {
    IrrepSpec source;
    Int real_dim;
    bool abs_irred;
    int reality;  // +1 real, 0 complex, -1 quaternionic
};

// Product with 0 absorbing.
int tensor_indicator(const std::vector<int>& indicators);

RealRepSpec realify(const IrrepSpec& irrep);

// Whether the image of the irrep (t, w) is the full SO(q) or Sp(q/2) it
// maps into.  Finite rule table over low-rank isogenies; triality for D4
// spins is included as data.
bool image_is_full_orthogonal(SimpleType t, const HighestWeight& w);
bool image_is_full_symplectic(SimpleType t, const HighestWeight& w);

// All nonzero dominant weights with weyl_dim <= cap, ordered by
// (degree, coords).
std::vector<std::pair<HighestWeight, Int>> dominant_weights_up_to(SimpleType t,
                                                                  const Int& cap);

// Minimal degree of an absolutely irreducible (real-type) representation,
// optionally skipping those whose image is the full SO(s).
int min_degree_real(SimpleType t, bool exclude_full_orthogonal, int cap = 300);

// Half the minimal degree of a quaternionic-type irrep, optionally skipping
// those whose image is the full Sp(s).  nullopt when the type admits no
// quaternionic irrep at all; cap exhaustion throws instead.
std::optional<int> min_degree_quaternionic(SimpleType t,
                                           bool exclude_full_symplectic,
                                           int cap = 300);

}  // namespace liehr
