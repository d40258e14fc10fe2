#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mploc/errors.hpp"

namespace mploc {

// ----------------------------------------------------------------------------
// n-particle lattice points
// ----------------------------------------------------------------------------

// A point x = (x_1, ..., x_n) in Z^{nd}, stored particle-major: particle j's
// i-th coordinate is c[j*d + i]. All distances are max-norm over every
// coordinate of every particle.
struct LatticePoint {
    int n = 1;
    int d = 1;
    std::vector<int> c;

    LatticePoint() = default;
    LatticePoint(int n_, int d_, std::vector<int> coords) : n(n_), d(d_), c(std::move(coords)) {}

    static LatticePoint zero(int n_, int d_) { return LatticePoint(n_, d_, std::vector<int>(static_cast<size_t>(n_) * d_, 0)); }

    // 1D convenience: one coordinate per particle
    static LatticePoint of_1d(std::vector<int> coords) {
        const int n_ = static_cast<int>(coords.size());
        return LatticePoint(n_, 1, std::move(coords));
    }

    int coord(int j, int i) const { return c[static_cast<size_t>(j) * d + i]; }
    int& coord(int j, int i) { return c[static_cast<size_t>(j) * d + i]; }

    bool operator==(const LatticePoint& o) const { return n == o.n && d == o.d && c == o.c; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
    bool operator<(const LatticePoint& o) const { return c < o.c; }

    std::string to_string() const {
        std::string s;
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(c[k]);
        }
        return s;
    }
};

inline int max_norm(const LatticePoint& x) {
    int m = 0;
    for (int v : x.c) m = std::max(m, std::abs(v));
    return m;
}

inline int max_norm_diff(const LatticePoint& x, const LatticePoint& y) {
    int m = 0;
    for (size_t k = 0; k < x.c.size(); ++k) m = std::max(m, std::abs(x.c[k] - y.c[k]));
    return m;
}

// <x> = max(1, ||x||)
inline int gauge(int norm) { return std::max(1, norm); }

// ----------------------------------------------------------------------------
// Axis-aligned integer boxes (single-particle projections live here)
// ----------------------------------------------------------------------------

struct Box {
    std::vector<int> lo, hi; // inclusive

    int dim() const { return static_cast<int>(lo.size()); }

    bool contains(const int* p) const {
        for (int i = 0; i < dim(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }

    bool contains_box(const Box& o) const {
        for (int i = 0; i < dim(); ++i)
            if (o.lo[i] < lo[i] || o.hi[i] > hi[i]) return false;
        return true;
    }

    bool intersects(const Box& o) const {
        for (int i = 0; i < dim(); ++i)
            if (hi[i] < o.lo[i] || o.hi[i] < lo[i]) return false;
        return true;
    }

    // max-norm distance between boxes (0 when they intersect)
    int distance(const Box& o) const {
        int dist = 0;
        for (int i = 0; i < dim(); ++i) {
            int gap = 0;
            if (hi[i] < o.lo[i]) gap = o.lo[i] - hi[i];
            else if (o.hi[i] < lo[i]) gap = lo[i] - o.hi[i];
            dist = std::max(dist, gap);
        }
        return dist;
    }

    std::int64_t volume() const {
        std::int64_t v = 1;
        for (int i = 0; i < dim(); ++i) v *= (hi[i] - lo[i] + 1);
        return v;
    }

    Box hull(const Box& o) const {
        Box h = *this;
        for (int i = 0; i < dim(); ++i) {
            h.lo[i] = std::min(h.lo[i], o.lo[i]);
            h.hi[i] = std::max(h.hi[i], o.hi[i]);
        }
        return h;
    }
};

// distance from a union of boxes to another union (exact interval arithmetic)
inline int union_distance(const std::vector<Box>& a, const std::vector<Box>& b) {
    int dist = -1;
    for (const Box& x : a)
        for (const Box& y : b) {
            int d = x.distance(y);
            if (dist < 0 || d < dist) dist = d;
        }
    return dist;
}

inline bool unions_disjoint(const std::vector<Box>& a, const std::vector<Box>& b) {
    for (const Box& x : a)
        for (const Box& y : b)
            if (x.intersects(y)) return false;
    return true;
}

// ----------------------------------------------------------------------------
// n-particle cubes Lambda_L(u)
// ----------------------------------------------------------------------------

struct Cube {
    LatticePoint center;
    int radius = 0;

    Cube() = default;
    Cube(LatticePoint u, int L) : center(std::move(u)), radius(L) {}

    int n() const { return center.n; }
    int d() const { return center.d; }

    // per-particle box [u_j - (L+enlarge), u_j + (L+enlarge)]^d
    Box particle_box(int j, int enlarge = 0) const {
        Box b;
        b.lo.resize(d());
        b.hi.resize(d());
        for (int i = 0; i < d(); ++i) {
            b.lo[i] = center.coord(j, i) - (radius + enlarge);
            b.hi[i] = center.coord(j, i) + (radius + enlarge);
        }
        return b;
    }

    // projections Pi_J as a list of boxes; empty J means the full projection
    std::vector<Box> projection(const std::vector<int>& J, int enlarge = 0) const {
        std::vector<Box> out;
        if (J.empty()) {
            for (int j = 0; j < n(); ++j) out.push_back(particle_box(j, enlarge));
        } else {
            for (int j : J) out.push_back(particle_box(j - 1, enlarge)); // 1-based J
        }
        return out;
    }

    bool contains(const LatticePoint& x) const {
        for (size_t k = 0; k < x.c.size(); ++k)
            if (std::abs(x.c[k] - center.c[k]) > radius) return false;
        return true;
    }

    // (2L+1)^{nd} without overflow (saturates at INT64_MAX)
    std::int64_t site_count() const {
        const std::int64_t side = 2 * static_cast<std::int64_t>(radius) + 1;
        std::int64_t v = 1;
        for (int k = 0; k < n() * d(); ++k) {
            if (v > (std::numeric_limits<std::int64_t>::max)() / side) return (std::numeric_limits<std::int64_t>::max)();
            v *= side;
        }
        return v;
    }

    bool operator==(const Cube& o) const { return radius == o.radius && center == o.center; }
};

// Lexicographic enumeration of all sites; the order is the canonical index
// map used by Hamiltonian matrices.
inline std::vector<LatticePoint> sites(const Cube& cube, std::int64_t max_sites = 1 << 22) {
    const std::int64_t count = cube.site_count();
    if (count > max_sites)
        throw BudgetExceeded("cube with " + std::to_string(count) + " sites exceeds budget of " + std::to_string(max_sites));

    const int dim = cube.n() * cube.d();
    std::vector<LatticePoint> out;
    out.reserve(static_cast<size_t>(count));
    LatticePoint x = cube.center;
    for (int k = 0; k < dim; ++k) x.c[k] -= cube.radius;
    const LatticePoint lo = x;
    while (true) {
        out.push_back(x);
        int k = dim - 1;
        for (; k >= 0; --k) {
            if (x.c[k] < cube.center.c[k] + cube.radius) {
                ++x.c[k];
                for (int m = k + 1; m < dim; ++m) x.c[m] = lo.c[m];
                break;
            }
        }
        if (k < 0) break;
    }
    return out;
}

// index of a site in the lexicographic enumeration
inline std::int64_t site_index(const Cube& cube, const LatticePoint& x) {
    const int side = 2 * cube.radius + 1;
    std::int64_t idx = 0;
    for (size_t k = 0; k < x.c.size(); ++k)
        idx = idx * side + (x.c[k] - (cube.center.c[k] - cube.radius));
    return idx;
}

// ----------------------------------------------------------------------------
// Diagonal distance and the FI / PI split
// ----------------------------------------------------------------------------

// dist(u, D_0) = min_{x in Z^d} max_j ||u_j - x||. Coordinates decouple, and
// per coordinate min_x max_j |a_j - x| = ceil((max a - min a)/2).
inline int distance_to_diagonal(const LatticePoint& u) {
    int dist = 0;
    for (int i = 0; i < u.d; ++i) {
        int lo = u.coord(0, i), hi = lo;
        for (int j = 1; j < u.n; ++j) {
            lo = std::min(lo, u.coord(j, i));
            hi = std::max(hi, u.coord(j, i));
        }
        dist = std::max(dist, (hi - lo + 1) / 2);
    }
    return dist;
}

inline bool is_fully_interactive(const Cube& cube, int r0) {
    return distance_to_diagonal(cube.center) <= 2 * cube.n() * (static_cast<std::int64_t>(cube.radius) + r0);
}

// ----------------------------------------------------------------------------
// Separability predicates
// ----------------------------------------------------------------------------

struct SeparationWitness {
    bool on_first = true;    // witness side: true = first cube
    std::vector<int> J;      // 1-based particle indices
};

namespace detail {

inline std::vector<int> mask_to_indices(unsigned mask, int n) {
    std::vector<int> J;
    for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) J.push_back(j + 1);
    return J;
}

inline bool witness_holds(const Cube& side, const Cube& other, unsigned mask, int r0) {
    const int n = side.n();
    std::vector<Box> pj, rest;
    for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) pj.push_back(side.particle_box(j, r0));
        else rest.push_back(side.particle_box(j, r0));
    }
    for (int j = 0; j < n; ++j) rest.push_back(other.particle_box(j, r0));
    return unions_disjoint(pj, rest);
}

} // namespace detail

// Exhaustive search over all nonempty J on both sides; J = {1..n} (empty
// complement) is admitted and reduces to complete separability. Deterministic
// order: first cube first, J by increasing bitmask with bit 0 = particle 1.
inline std::optional<SeparationWitness> is_weakly_separable(const Cube& a, const Cube& b, int r0) {
    if (a.n() != b.n() || a.d() != b.d() || a.radius != b.radius)
        throw PreconditionViolation("weak separability requires equal (n, d, L)");
    const int n = a.n();
    const unsigned full = (1u << n) - 1u;
    for (int side = 0; side < 2; ++side) {
        const Cube& s = side == 0 ? a : b;
        const Cube& o = side == 0 ? b : a;
        for (unsigned mask = 1; mask <= full; ++mask)
            if (detail::witness_holds(s, o, mask, r0))
                return SeparationWitness{side == 0, detail::mask_to_indices(mask, n)};
    }
    return std::nullopt;
}

inline bool is_separable(const Cube& a, const Cube& b, int r0) {
    if (max_norm_diff(a.center, b.center) <= 11ll * a.n() * a.radius) return false;
    return is_weakly_separable(a, b, r0).has_value();
}

inline bool is_completely_separable(const Cube& a, const Cube& b, int r0) {
    if (a.n() != b.n() || a.d() != b.d() || a.radius != b.radius)
        throw PreconditionViolation("complete separability requires equal (n, d, L)");
    return unions_disjoint(a.projection({}, r0), b.projection({}, r0));
}

// For a PI cube, the smallest (by bitmask order) nonempty proper J with
// Pi_J Lambda_{L+r0} disjoint from Pi_{J^C} Lambda_{L+r0}.
inline std::pair<std::vector<int>, std::vector<int>> canonical_decomposition(const Cube& cube, int r0) {
    if (is_fully_interactive(cube, r0))
        throw NoDecomposition("cube is fully interactive");
    const int n = cube.n();
    const unsigned full = (1u << n) - 1u;
    for (unsigned mask = 1; mask < full; ++mask) {
        std::vector<Box> pj, pc;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) pj.push_back(cube.particle_box(j, r0));
            else pc.push_back(cube.particle_box(j, r0));
        }
        if (unions_disjoint(pj, pc))
            return {detail::mask_to_indices(mask, n), detail::mask_to_indices(full & ~mask, n)};
    }
    // Unreachable for PI cubes: the paper guarantees a splitting exists.
    throw NoDecomposition("no disjoint particle split found");
}

} // namespace mploc
