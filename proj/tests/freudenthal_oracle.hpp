#pragma once

// Independent dimension oracle: builds the full dominant weight-multiplicity
// table with Freudenthal's recursion and sums Weyl-orbit sizes.  Shares no
// code with weyl_dim beyond the root-system tables.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "liehr/lie_core.hpp"

namespace liehr::oracle {

using Vec = std::vector<long long>;

// Solves (C^T) b = v exactly over the rationals; returns false when b is not
// a nonnegative integer vector (i.e. v is not in the positive root cone).
inline bool alpha_coords(const std::vector<std::vector<int>>& cartan, const Vec& v,
                         Vec& b) {
    int n = static_cast<int>(v.size());
    // augmented rational elimination with a shared denominator per row
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n + 1));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) m[i][j] = cartan[j][i];  // (C^T)_{ij}
        m[i][n] = v[i];
    }
    for (int col = 0; col < n; col++) {
        int piv = -1;
        for (int r = col; r < n; r++)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(m[col], m[piv]);
        for (int r = 0; r < n; r++) {
            if (r == col || m[r][col] == 0) continue;
            long long a = m[col][col], c = m[r][col];
            for (int j = 0; j <= n; j++) m[r][j] = m[r][j] * a - m[col][j] * c;
            long long g = 0;
            for (int j = 0; j <= n; j++) g = std::gcd(g, std::abs(m[r][j]));
            if (g > 1)
                for (int j = 0; j <= n; j++) m[r][j] /= g;
        }
    }
    b.assign(n, 0);
    for (int i = 0; i < n; i++) {
        if (m[i][n] % m[i][i] != 0) return false;
        b[i] = m[i][n] / m[i][i];
        if (b[i] < 0) return false;
    }
    return true;
}

// Order of the Weyl group of the subdiagram spanned by `nodes`.
inline long long weyl_order(const std::vector<std::vector<int>>& cartan,
                            const std::vector<int>& nodes) {
    int n = static_cast<int>(nodes.size());
    std::vector<int> comp(n, -1);
    long long order = 1;
    for (int start = 0; start < n; start++) {
        if (comp[start] >= 0) continue;
        // flood-fill one connected component
        std::vector<int> stack{start}, members;
        comp[start] = start;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int v = 0; v < n; v++)
                if (comp[v] < 0 && cartan[nodes[u]][nodes[v]] != 0) {
                    comp[v] = start;
                    stack.push_back(v);
                }
        }
        int k = static_cast<int>(members.size());
        int max_bond = 1, busy_double_ends = 0;
        bool branch = false;
        for (int u : members) {
            int deg = 0, double_here = 0;
            for (int v : members) {
                if (u == v) continue;
                int bond = cartan[nodes[u]][nodes[v]] * cartan[nodes[v]][nodes[u]];
                if (bond > 0) deg++;
                if (bond == 2) double_here = 1;
                max_bond = std::max(max_bond, bond);
            }
            if (deg >= 3) branch = true;
            if (double_here && deg >= 2) busy_double_ends++;
        }
        // only F4 has single-bond neighbours on BOTH ends of its double bond;
        // in B_k/C_k the double bond sits at the end of the chain
        bool interior_double = busy_double_ends >= 2;
        long long fact = 1;
        for (int i = 2; i <= k; i++) fact *= i;
        if (max_bond == 3)
            order *= 12;  // G2
        else if (max_bond == 2 && interior_double)
            order *= 1152;  // F4 (k is necessarily 4)
        else if (max_bond == 2)
            order *= fact << k;  // B/C family: 2^k k!
        else if (branch)
            order *= fact << (k - 1);  // D family: 2^(k-1) k!
        else
            order *= fact * (k + 1);  // A family: (k+1)!
    }
    return order;
}

inline long long freudenthal_dim(SimpleType t, const HighestWeight& w) {
    const RootSystem& rs = root_system(t);
    int n = rs.rank;
    Vec lam(w.coords.begin(), w.coords.end());

    // lambda - w0(lambda) in alpha coordinates bounds the weight support
    Vec span(n);
    HighestWeight dual = dual_weight(t, w);
    for (int i = 0; i < n; i++) span[i] = lam[i] + dual.coords[i];
    Vec span_b;
    if (!alpha_coords(rs.cartan, span, span_b))
        throw std::logic_error("lambda - w0(lambda) not in the root lattice");

    // Per-coordinate bound: b(mu)_i = sum_j inv(C^T)_ij mu_j with every
    // inverse-Cartan entry positive, and b(lambda) <= b(span) componentwise
    // (lambda itself may sit outside the root lattice), so
    // mu_j <= min_i b(span)_i / inv_ij.
    std::vector<std::vector<double>> inv(n, std::vector<double>(n));
    {
        std::vector<std::vector<double>> m(n, std::vector<double>(2 * n, 0.0));
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) m[i][j] = rs.cartan[j][i];
            m[i][n + i] = 1.0;
        }
        for (int col = 0; col < n; col++) {
            int piv = col;
            for (int r = col; r < n; r++)
                if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
            std::swap(m[col], m[piv]);
            double p = m[col][col];
            for (int j = 0; j < 2 * n; j++) m[col][j] /= p;
            for (int r = 0; r < n; r++) {
                if (r == col) continue;
                double f = m[r][col];
                for (int j = 0; j < 2 * n; j++) m[r][j] -= f * m[col][j];
            }
        }
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) inv[i][j] = m[i][n + j];
    }
    Vec bound(n);
    for (int j = 0; j < n; j++) {
        double best = 1e18;
        for (int i = 0; i < n; i++)
            if (inv[i][j] > 1e-12)
                best = std::min(best, span_b[i] / inv[i][j]);
        bound[j] = static_cast<long long>(best + 1.0);
    }

    std::vector<Vec> dominant;  // omega coords
    std::vector<Vec> depth_b;   // alpha coords of lambda - mu
    std::map<Vec, size_t> index;
    Vec mu(n, 0);
    auto scan = [&](auto&& self, int j) -> void {
        if (j == n) {
            Vec diff(n);
            for (int i = 0; i < n; i++) diff[i] = lam[i] - mu[i];
            Vec b;
            if (alpha_coords(rs.cartan, diff, b)) {
                index[mu] = dominant.size();
                dominant.push_back(mu);
                depth_b.push_back(b);
            }
            return;
        }
        for (long long v = 0; v <= bound[j]; v++) {
            mu[j] = v;
            self(self, j + 1);
        }
        mu[j] = 0;
    };
    scan(scan, 0);

    // process by increasing depth so mu + k*alpha is always already known
    std::vector<size_t> order_idx(dominant.size());
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
        long long ha = std::accumulate(depth_b[a].begin(), depth_b[a].end(), 0LL);
        long long hb = std::accumulate(depth_b[b].begin(), depth_b[b].end(), 0LL);
        return ha < hb;
    });

    auto dominant_conjugate = [&](Vec v) {
        for (bool moved = true; moved;) {
            moved = false;
            for (int i = 0; i < n; i++) {
                if (v[i] >= 0) continue;
                long long c = v[i];
                for (int k = 0; k < n; k++) v[k] -= c * rs.cartan[i][k];
                moved = true;
            }
        }
        return v;
    };

    // (x, alpha_j) pairing data: (omega_i, alpha_j) = delta_ij d_j
    auto pair_with_root = [&](const Vec& x_omega, const std::vector<int>& a) {
        long long s = 0;
        for (int j = 0; j < n; j++) s += x_omega[j] * a[j] * rs.d[j];
        return s;
    };
    std::vector<long long> root_norm(rs.positive_roots.size());
    std::vector<Vec> root_omega(rs.positive_roots.size(), Vec(n));
    for (size_t r = 0; r < rs.positive_roots.size(); r++) {
        const auto& a = rs.positive_roots[r];
        long long norm = 0;
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                norm += static_cast<long long>(a[i]) * rs.cartan[i][j] * rs.d[j] * a[j];
        root_norm[r] = norm;
        for (int k = 0; k < n; k++) {
            long long s = 0;
            for (int j = 0; j < n; j++) s += a[j] * rs.cartan[j][k];
            root_omega[r][k] = s;
        }
    }

    std::vector<long long> mult(dominant.size(), 0);
    mult[order_idx[0]] = 1;  // lambda itself
    long long dim = 0;
    for (size_t step = 0; step < order_idx.size(); step++) {
        size_t i = order_idx[step];
        const Vec& m_omega = dominant[i];
        const Vec& b = depth_b[i];
        if (step > 0) {
            long long num = 0;
            for (size_t r = 0; r < rs.positive_roots.size(); r++) {
                const auto& a = rs.positive_roots[r];
                long long pairing = pair_with_root(m_omega, a);
                for (long long k = 1;; k++) {
                    bool feasible = true;
                    for (int j = 0; j < n; j++)
                        if (b[j] - k * a[j] < 0) {
                            feasible = false;
                            break;
                        }
                    if (!feasible) break;
                    Vec nu(n);
                    for (int j = 0; j < n; j++)
                        nu[j] = m_omega[j] + k * root_omega[r][j];
                    auto it = index.find(dominant_conjugate(std::move(nu)));
                    if (it == index.end()) continue;
                    num += mult[it->second] * (pairing + k * root_norm[r]);
                }
            }
            // denominator (lambda + mu + 2 rho, lambda - mu)
            long long den = 0;
            for (int j = 0; j < n; j++)
                den += (lam[j] + m_omega[j] + 2) * rs.d[j] * b[j];
            if (den == 0 || (2 * num) % den != 0)
                throw std::logic_error("Freudenthal division failed");
            mult[i] = 2 * num / den;
        }
        if (mult[i] == 0) continue;
        std::vector<int> zero_nodes;
        for (int j = 0; j < n; j++)
            if (m_omega[j] == 0) zero_nodes.push_back(j);
        std::vector<int> all_nodes(n);
        std::iota(all_nodes.begin(), all_nodes.end(), 0);
        long long orbit =
            weyl_order(rs.cartan, all_nodes) / weyl_order(rs.cartan, zero_nodes);
        dim += mult[i] * orbit;
    }
    return dim;
}

}  // namespace liehr::oracle
