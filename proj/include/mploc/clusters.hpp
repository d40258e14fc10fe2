#pragma once

#include <limits>
#include <numeric>
#include <vector>

#include "mploc/errors.hpp"
#include "mploc/lattice.hpp"

namespace mploc {

// ----------------------------------------------------------------------------
// Singular-cluster decomposition: bad centers are chained whenever consecutive
// gaps are <= 2 l^2; each chain class, fattened by the cover radius, is one
// cluster Omega_j. Everything outside the clusters is the good set G.
// ----------------------------------------------------------------------------

struct ClusterDecomposition {
    std::vector<std::vector<LatticePoint>> clusters; // center sets Omega_j (cores)
    int l = 0;
    int cover_radius = 0;

    // diameter of the fattened cluster: center spread + both cover margins
    int diameter(size_t j) const {
        const auto& cl = clusters[j];
        int diam = 0;
        for (size_t a = 0; a < cl.size(); ++a)
            for (size_t b = a + 1; b < cl.size(); ++b)
                diam = std::max(diam, max_norm_diff(cl[a], cl[b]));
        return diam + 2 * cover_radius;
    }

    // smallest max-norm distance between two distinct fattened clusters
    int min_gap() const {
        int gap = std::numeric_limits<int>::max();
        for (size_t a = 0; a < clusters.size(); ++a)
            for (size_t b = a + 1; b < clusters.size(); ++b)
                for (const auto& x : clusters[a])
                    for (const auto& y : clusters[b])
                        gap = std::min(gap, max_norm_diff(x, y) - 2 * cover_radius);
        return gap;
    }

    bool in_bad_set(const LatticePoint& x) const {
        for (const auto& cl : clusters)
            for (const auto& k : cl)
                if (max_norm_diff(x, k) <= cover_radius) return true;
        return false;
    }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t m) : parent(m) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

// Chain relation: k ~ k' when some sequence of centers steps by <= 2 l^2.
// Requires l >= 2 and l^2 > 2 * cover_radius (the l > 2 C~(n) hypothesis with
// C~(n) = cover_radius / l); then diam(Omega_j) <= (2J+1) l^2 and distinct
// clusters stay >= l^2 apart.
inline ClusterDecomposition cluster_singular_centers(const std::vector<LatticePoint>& centers,
                                                     int l, int cover_radius) {
    if (l < 2) throw ScaleTooSmall("cluster scale l must be >= 2");
    if (2 * cover_radius >= l * l)
        throw ScaleTooSmall("cover radius too large for scale l (needs l > 2*C~)");

    ClusterDecomposition out;
    out.l = l;
    out.cover_radius = cover_radius;
    const size_t m = centers.size();
    if (m == 0) return out;

    detail::UnionFind uf(m);
    const int chain_gap = 2 * l * l;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b)
            if (max_norm_diff(centers[a], centers[b]) <= chain_gap) uf.unite(static_cast<int>(a), static_cast<int>(b));

    std::vector<int> root_to_cluster(m, -1);
    for (size_t a = 0; a < m; ++a) {
        int r = uf.find(static_cast<int>(a));
        if (root_to_cluster[r] < 0) {
            root_to_cluster[r] = static_cast<int>(out.clusters.size());
            out.clusters.emplace_back();
        }
        out.clusters[root_to_cluster[r]].push_back(centers[a]);
    }
    return out;
}

} // namespace mploc
