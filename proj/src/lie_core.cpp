#include "liehr/lie_core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace liehr {

using Rational = boost::rational<Int>;

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
    }
    return "?";
}

static int fixed_rank(Family f) {
    switch (f) {
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
        case Family::F4: return 4;
        case Family::G2: return 2;
        default: return 0;
    }
}

SimpleType::SimpleType(Family f, int r) : family(f), rank(r) {
    switch (f) {
        case Family::A:
            if (r < 1) throw domain_error("A_n requires n >= 1");
            break;
        case Family::B:
        case Family::C:
            // B1 and C1 are accepted as aliases of A1
            if (r < 1) throw domain_error("B_n/C_n require n >= 1");
            break;
        case Family::D:
            // D3 is accepted as an alias of A3; D2 is not simple
            if (r < 3) throw domain_error("D_n requires n >= 3");
            break;
        default:
            if (r != fixed_rank(f))
                throw domain_error(std::string(family_name(f)) + " has fixed rank");
            break;
    }
}

std::string SimpleType::name() const {
    if (fixed_rank(family) > 0) return family_name(family);
    return std::string(family_name(family)) + std::to_string(rank);
}

bool HighestWeight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

int simple_dim(SimpleType t) {
    int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 2);
        case Family::B: return n * (2 * n + 1);
        case Family::C: return n * (2 * n + 1);
        case Family::D: return n * (2 * n - 1);
        case Family::E6: return 78;
        case Family::E7: return 133;
        case Family::E8: return 248;
        case Family::F4: return 52;
        case Family::G2: return 14;
    }
    throw domain_error("bad family");
}

namespace {

struct CartanData {
    std::vector<std::vector<int>> cartan;
    std::vector<int> d;
};

CartanData make_cartan(SimpleType t) {
    int n = t.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; i++) a[i][i] = 2;
    auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    std::vector<int> d(n, 1);
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; i++) chain(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 2 < n; i++) chain(i, i + 1);
            if (n >= 2) {
                a[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee> = -1
                a[n - 1][n - 2] = -1;
            }
            for (int i = 0; i + 1 < n; i++) d[i] = 2;
            break;
        case Family::C:
            for (int i = 0; i + 2 < n; i++) chain(i, i + 1);
            if (n >= 2) {
                a[n - 2][n - 1] = -1;
                a[n - 1][n - 2] = -2;
            }
            d[n - 1] = 2;
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; i++) chain(i, i + 1);
            chain(n - 3, n - 1);
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8: {
            // Bourbaki: branch node 2 attached to node 4, chain 1-3-4-5-...
            chain(0, 2);
            chain(2, 3);
            chain(1, 3);
            for (int i = 3; i + 1 < n; i++) chain(i, i + 1);
            break;
        }
        case Family::F4:
            chain(0, 1);
            chain(2, 3);
            a[1][2] = -2;
            a[2][1] = -1;
            d[0] = d[1] = 2;
            break;
        case Family::G2:
            a[0][1] = -1;
            a[1][0] = -3;
            d[1] = 3;
            break;
    }
    // B1/C1 degenerate to A1
    return {a, d};
}

std::vector<std::vector<int>> generate_positive_roots(const CartanData& cd) {
    int n = static_cast<int>(cd.d.size());
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; i++) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    auto pairing = [&](const std::vector<int>& m, int j) {
        int s = 0;
        for (int i = 0; i < n; i++) s += m[i] * cd.cartan[i][j];
        return s;
    };
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& alpha : frontier) {
            for (int j = 0; j < n; j++) {
                // alpha + k*alpha_j is a root for k in the j-string through alpha
                int p = 0;
                auto down = alpha;
                for (;;) {
                    down[j] -= 1;
                    if (down[j] < 0 || !roots.count(down)) break;
                    p++;
                }
                int q = p - pairing(alpha, j);
                if (q > 0) {
                    auto up = alpha;
                    up[j] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> out(roots.begin(), roots.end());
    // sort by height then lexicographically for a stable order
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        int hx = std::accumulate(x.begin(), x.end(), 0);
        int hy = std::accumulate(y.begin(), y.end(), 0);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    return out;
}

// Closed-form positive roots for the classical families, written in the
// simple-root basis (Bourbaki numbering).  The root-string algorithm above is
// O(rank^4) and the classical types appear at large rank, so spell them out.
std::vector<std::vector<int>> classical_positive_roots(Family f, int n) {
    std::vector<std::vector<int>> out;
    auto bump = [](std::vector<int>& v, int a, int b) {
        for (int k = a; k <= b; k++) v[k]++;
    };
    if (f == Family::A) {
        for (int a = 0; a < n; a++)
            for (int b = a; b < n; b++) {
                std::vector<int> v(n, 0);
                bump(v, a, b);
                out.push_back(v);
            }
        return out;
    }
    // e_a - e_b for a < b, shared by B, C, D
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++) {
            std::vector<int> v(n, 0);
            bump(v, a, b - 1);
            out.push_back(v);
        }
    if (f == Family::B) {
        for (int a = 0; a < n; a++) {  // e_a
            std::vector<int> v(n, 0);
            bump(v, a, n - 2);
            v[n - 1]++;
            out.push_back(v);
        }
        for (int a = 0; a < n; a++)  // e_a + e_b, a < b
            for (int b = a + 1; b < n; b++) {
                std::vector<int> v(n, 0);
                bump(v, a, n - 2);
                bump(v, b, n - 2);
                v[n - 1] += 2;
                out.push_back(v);
            }
    } else if (f == Family::C) {
        for (int a = 0; a < n; a++)  // e_a + e_b, a <= b (a = b gives 2e_a)
            for (int b = a; b < n; b++) {
                std::vector<int> v(n, 0);
                bump(v, a, n - 2);
                bump(v, b, n - 2);
                v[n - 1]++;
                out.push_back(v);
            }
    } else {                         // D
        for (int a = 0; a < n; a++)  // e_a + e_b, a < b
            for (int b = a + 1; b < n; b++) {
                std::vector<int> v(n, 0);
                bump(v, a, n - 3);
                if (b <= n - 2) bump(v, b, n - 2);
                v[n - 1]++;
                out.push_back(v);
            }
    }
    return out;
}

RootSystem build_root_system(SimpleType t) {
    RootSystem rs;
    rs.rank = t.rank;
    auto cd = make_cartan(t);
    rs.cartan = cd.cartan;
    rs.d = cd.d;
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D:
            rs.positive_roots = classical_positive_roots(t.family, t.rank);
            std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
                      [](const auto& x, const auto& y) {
                          int hx = std::accumulate(x.begin(), x.end(), 0);
                          int hy = std::accumulate(y.begin(), y.end(), 0);
                          if (hx != hy) return hx < hy;
                          return x < y;
                      });
            break;
        default:
            rs.positive_roots = generate_positive_roots(cd);
    }
    int expected = (simple_dim(t) - t.rank) / 2;
    if (static_cast<int>(rs.positive_roots.size()) != expected)
        throw domain_error("root count mismatch for " + t.name());

    // <w_i, 2 rho^vee> = sum over positive roots of m_i d_i / d_alpha;
    // accumulate 6x the value in plain integers since d_alpha | 6 always
    int n = t.rank;
    std::vector<long long> pairings6(n, 0);
    for (const auto& m : rs.positive_roots) {
        std::vector<int> nz;
        for (int i = 0; i < n; i++)
            if (m[i] != 0) nz.push_back(i);
        // d_alpha = (alpha,alpha)/2 with (alpha_i,alpha_j) = d_j * cartan(i,j)
        long long num = 0;
        for (int i : nz)
            for (int j : nz)
                num += static_cast<long long>(m[i]) * m[j] * cd.d[j] * cd.cartan[i][j];
        if (num % 2 != 0 || num <= 0) throw domain_error("bad root norm");
        long long d_alpha = num / 2;
        if (6 % d_alpha != 0) throw domain_error("unexpected root length");
        for (int i : nz) pairings6[i] += m[i] * cd.d[i] * (6 / d_alpha);
    }
    rs.coroot_sum_parity.resize(n);
    for (int i = 0; i < n; i++) {
        if (pairings6[i] % 6 != 0)
            throw domain_error("non-integral coroot pairing");
        rs.coroot_sum_parity[i] = static_cast<int>((pairings6[i] / 6) % 2);
    }
    return rs;
}

std::map<std::pair<int, int>, RootSystem>& root_cache() {
    static std::map<std::pair<int, int>, RootSystem> cache;
    return cache;
}
std::mutex root_cache_mutex;

}  // namespace

const RootSystem& root_system(SimpleType t) {
    std::lock_guard<std::mutex> lock(root_cache_mutex);
    auto key = std::make_pair(static_cast<int>(t.family), t.rank);
    auto it = root_cache().find(key);
    if (it == root_cache().end())
        it = root_cache().emplace(key, build_root_system(t)).first;
    return it->second;
}

std::vector<std::vector<int>> positive_roots(SimpleType t) {
    return root_system(t).positive_roots;
}

static void check_weight(SimpleType t, const HighestWeight& w) {
    if (static_cast<int>(w.coords.size()) != t.rank)
        throw domain_error("weight length != rank for " + t.name());
    for (int c : w.coords)
        if (c < 0) throw domain_error("weight must be dominant");
}

Int weyl_dim(SimpleType t, const HighestWeight& w) {
    check_weight(t, w);
    const auto& rs = root_system(t);
    Int num = 1, den = 1;
    for (const auto& m : rs.positive_roots) {
        Int a = 0, b = 0;
        for (int i = 0; i < rs.rank; i++) {
            Int md = Int(m[i]) * rs.d[i];
            a += md * (w.coords[i] + 1);
            b += md;
        }
        num *= a;
        den *= b;
    }
    return num / den;
}

HighestWeight dual_weight(SimpleType t, const HighestWeight& w) {
    check_weight(t, w);
    HighestWeight out = w;
    int n = t.rank;
    switch (t.family) {
        case Family::A:
            std::reverse(out.coords.begin(), out.coords.end());
            break;
        case Family::D:
            if (n % 2 == 1) std::swap(out.coords[n - 2], out.coords[n - 1]);
            break;
        case Family::E6:
            std::swap(out.coords[0], out.coords[5]);
            std::swap(out.coords[2], out.coords[4]);
            break;
        default:
            break;  // -w0 = identity
    }
    return out;
}

bool self_dual(SimpleType t, const HighestWeight& w) {
    return dual_weight(t, w).coords == w.coords;
}

int fs_indicator(SimpleType t, const HighestWeight& w) {
    if (!self_dual(t, w)) return 0;
    const auto& rs = root_system(t);
    int parity = 0;
    for (int i = 0; i < rs.rank; i++)
        parity += rs.coroot_sum_parity[i] * w.coords[i];
    return parity % 2 == 0 ? +1 : -1;
}

bool admits_quaternionic(SimpleType t) {
    // The lattice of self-dual dominant weights is spanned by the fundamental
    // weights fixed by the duality involution plus sums over swapped pairs;
    // the FS parity is additive, so a quaternionic irrep exists iff some
    // generator has odd parity.
    const auto& rs = root_system(t);
    for (int i = 0; i < t.rank; i++) {
        HighestWeight gen = zero_weight(t);
        gen.coords[i] = 1;
        auto img = dual_weight(t, gen);
        if (img.coords != gen.coords) {
            for (int j = 0; j < t.rank; j++) gen.coords[j] += img.coords[j];
        }
        int parity = 0;
        for (int j = 0; j < t.rank; j++)
            parity += rs.coroot_sum_parity[j] * gen.coords[j];
        if (parity % 2 != 0) return true;
    }
    return false;
}

HighestWeight fundamental_weight(SimpleType t, int node) {
    if (node < 1 || node > t.rank) throw domain_error("bad node index");
    HighestWeight w;
    w.coords.assign(t.rank, 0);
    w.coords[node - 1] = 1;
    return w;
}

HighestWeight zero_weight(SimpleType t) {
    HighestWeight w;
    w.coords.assign(t.rank, 0);
    return w;
}

HighestWeight highest_root_weight(SimpleType t) {
    const auto& rs = root_system(t);
    const auto& theta = rs.positive_roots.back();
    HighestWeight w = zero_weight(t);
    for (int j = 0; j < t.rank; j++) {
        int s = 0;
        for (int i = 0; i < t.rank; i++) s += theta[i] * rs.cartan[i][j];
        w.coords[j] = s;
    }
    return w;
}

int GroupSpec::rank() const {
    if (finite_flag) return 0;
    int r = torus_rank;
    for (const auto& f : simple_factors) r += f.rank;
    return r;
}

long long GroupSpec::dim() const {
    if (finite_flag) return 0;
    long long d = torus_rank;
    for (const auto& f : simple_factors) d += simple_dim(f);
    return d;
}

std::string GroupSpec::canonical_name() const {
    if (finite_flag) return "finite";
    std::string s;
    auto sorted = simple_factors;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& f : sorted) {
        if (!s.empty()) s += "*";
        s += f.name();
    }
    if (torus_rank > 0) {
        if (!s.empty()) s += "*";
        s += "T" + std::to_string(torus_rank);
    }
    if (s.empty()) s = "trivial";
    return s;
}

bool GroupSpec::same_isomorphism_data(const GroupSpec& o) const {
    return canonical_name() == o.canonical_name() && finite_flag == o.finite_flag;
}

}  // namespace liehr
