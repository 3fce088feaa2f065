#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace liehr {

using Int = boost::multiprecision::cpp_int;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

const char* family_name(Family f);

// A compact simple Lie group family together with its rank.
// Low-rank aliases are accepted (B1, C1 ~ A1; D3 ~ A3); D2 is rejected
// because it is not simple.
struct SimpleType {
    Family family;
    int rank;

    SimpleType(Family f, int r);

    std::string name() const;
    bool operator==(const SimpleType& o) const = default;
    bool operator<(const SimpleType& o) const {
        if (family != o.family) return family < o.family;
        return rank < o.rank;
    }
};

// Dominant weight in fundamental-weight coordinates, Bourbaki node order.
struct HighestWeight {
    std::vector<int> coords;

    bool is_zero() const;
};

int simple_dim(SimpleType t);

// Root system data in the simple-root basis.  cartan(i,j) = <alpha_i, alpha_j^vee>.
// d[i] is half the squared length of alpha_i, scaled so that all d[i] are
// integers (long roots of B get 2, of G2 get 3, etc.).
struct RootSystem {
    int rank;
    std::vector<std::vector<int>> cartan;
    std::vector<int> d;
    std::vector<std::vector<int>> positive_roots;  // coords in simple-root basis
    // parity of <w_i, 2 rho^vee> per fundamental weight, drives the
    // Frobenius-Schur indicator of self-dual weights
    std::vector<int> coroot_sum_parity;
};

// Cached per type; the cache behaves as if computed once.
const RootSystem& root_system(SimpleType t);

std::vector<std::vector<int>> positive_roots(SimpleType t);

// Exact Weyl dimension formula.
Int weyl_dim(SimpleType t, const HighestWeight& w);

// lambda == -w0(lambda); family involution for A_n, D_odd, E6, identity else.
bool self_dual(SimpleType t, const HighestWeight& w);

// +1 real, 0 complex, -1 quaternionic.
int fs_indicator(SimpleType t, const HighestWeight& w);

// Whether the type has any irreducible representation of quaternionic type.
bool admits_quaternionic(SimpleType t);

HighestWeight fundamental_weight(SimpleType t, int node);  // node is 1-based
HighestWeight zero_weight(SimpleType t);
HighestWeight highest_root_weight(SimpleType t);  // adjoint representation

// Image of the weight under the diagram involution induced by -w0.
HighestWeight dual_weight(SimpleType t, const HighestWeight& w);

// Product of simple factors and a central torus.
struct GroupSpec {
    std::vector<SimpleType> simple_factors;
    int torus_rank = 0;
    std::string display_name;
    bool finite_flag = false;

    int rank() const;
    long long dim() const;
    std::string canonical_name() const;
    bool same_isomorphism_data(const GroupSpec& o) const;
};

}  // namespace liehr
