#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "mploc/lattice.hpp"
#include "mploc/rng.hpp"

using namespace mploc;

namespace {

int rand_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

LatticePoint rand_point(Rng& rng, int n, int d, int span) {
    LatticePoint p = LatticePoint::zero(n, d);
    for (auto& v : p.c) v = rand_int(rng, -span, span);
    return p;
}

// Brute-force oracle: enumerate x over the bounding box of {u_j}.
int diag_distance_oracle(const LatticePoint& u) {
    std::vector<int> lo(u.d), hi(u.d);
    for (int i = 0; i < u.d; ++i) {
        lo[i] = hi[i] = u.coord(0, i);
        for (int j = 1; j < u.n; ++j) {
            lo[i] = std::min(lo[i], u.coord(j, i));
            hi[i] = std::max(hi[i], u.coord(j, i));
        }
    }
    int best = std::numeric_limits<int>::max();
    std::vector<int> x = lo;
    while (true) {
        int dist = 0;
        for (int j = 0; j < u.n; ++j)
            for (int i = 0; i < u.d; ++i) dist = std::max(dist, std::abs(u.coord(j, i) - x[i]));
        best = std::min(best, dist);
        int k = u.d - 1;
        for (; k >= 0; --k) {
            if (x[k] < hi[k]) {
                ++x[k];
                for (int m = k + 1; m < u.d; ++m) x[m] = lo[m];
                break;
            }
        }
        if (k < 0) break;
    }
    return best;
}

// Set-based projection oracle, independent of the interval arithmetic path.
std::set<std::vector<int>> proj_sites(const Cube& c, const std::vector<int>& J, int enlarge) {
    std::set<std::vector<int>> out;
    std::vector<int> idx = J;
    if (idx.empty())
        for (int j = 1; j <= c.n(); ++j) idx.push_back(j);
    for (int j : idx) {
        Box b = c.particle_box(j - 1, enlarge);
        std::vector<int> x = b.lo;
        while (true) {
            out.insert(x);
            int k = b.dim() - 1;
            for (; k >= 0; --k) {
                if (x[k] < b.hi[k]) {
                    ++x[k];
                    for (int m = k + 1; m < b.dim(); ++m) x[m] = b.lo[m];
                    break;
                }
            }
            if (k < 0) break;
        }
    }
    return out;
}

bool sets_disjoint(const std::set<std::vector<int>>& a, const std::set<std::vector<int>>& b) {
    for (const auto& x : a)
        if (b.count(x)) return false;
    return true;
}

bool oracle_witness_holds(const Cube& side, const Cube& other, unsigned mask, int r0) {
    std::vector<int> J, Jc;
    for (int j = 0; j < side.n(); ++j)
        (mask & (1u << j) ? J : Jc).push_back(j + 1);
    auto pj = proj_sites(side, J, r0);
    auto rest = proj_sites(other, {}, r0);
    if (!Jc.empty()) {
        auto pc = proj_sites(side, Jc, r0);
        rest.insert(pc.begin(), pc.end());
    }
    return sets_disjoint(pj, rest);
}

bool oracle_weakly_separable(const Cube& a, const Cube& b, int r0) {
    const unsigned full = (1u << a.n()) - 1u;
    for (int side = 0; side < 2; ++side)
        for (unsigned mask = 1; mask <= full; ++mask)
            if (oracle_witness_holds(side == 0 ? a : b, side == 0 ? b : a, mask, r0)) return true;
    return false;
}

} // namespace

TEST_CASE("site enumeration: counts and order") {
    Cube c1(LatticePoint::of_1d({0}), 1);
    auto s1 = sites(c1);
    REQUIRE(s1.size() == 3);
    CHECK(s1[0].c == std::vector<int>{-1});
    CHECK(s1[1].c == std::vector<int>{0});
    CHECK(s1[2].c == std::vector<int>{1});

    Cube c2(LatticePoint::of_1d({0, 0}), 1);
    auto s2 = sites(c2);
    REQUIRE(s2.size() == 9);
    CHECK(s2.front().c == std::vector<int>{-1, -1});
    CHECK(s2.back().c == std::vector<int>{1, 1});
    CHECK(std::is_sorted(s2.begin(), s2.end()));

    Cube c3(LatticePoint::zero(2, 2), 2);
    CHECK(c3.site_count() == 625);
    CHECK(sites(c3).size() == 625);

    for (size_t i = 0; i < s2.size(); ++i) CHECK(site_index(c2, s2[i]) == static_cast<std::int64_t>(i));
}

TEST_CASE("site enumeration: budget guard") {
    Cube big(LatticePoint::zero(3, 1), 100);
    CHECK_THROWS_AS(sites(big, 5000), BudgetExceeded);
}

TEST_CASE("distance to diagonal") {
    CHECK(distance_to_diagonal(LatticePoint::of_1d({0, 0})) == 0);
    CHECK(distance_to_diagonal(LatticePoint::of_1d({0, 100})) == 50);
    CHECK(distance_to_diagonal(LatticePoint::of_1d({0, 4, 8})) == 4);

    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        auto u = rand_point(rng, rand_int(rng, 1, 3), rand_int(rng, 1, 2), 12);
        CHECK(distance_to_diagonal(u) == diag_distance_oracle(u));
    }
    // zero iff all particle rows coincide
    for (int t = 0; t < 200; ++t) {
        auto u = rand_point(rng, rand_int(rng, 2, 3), rand_int(rng, 1, 2), 5);
        bool all_equal = true;
        for (int j = 1; j < u.n && all_equal; ++j)
            for (int i = 0; i < u.d; ++i)
                if (u.coord(j, i) != u.coord(0, i)) { all_equal = false; break; }
        CHECK((distance_to_diagonal(u) == 0) == all_equal);
    }
}

TEST_CASE("fully interactive vs partially interactive") {
    CHECK(is_fully_interactive(Cube(LatticePoint::of_1d({0, 0}), 2), 1));        // 0 <= 12
    CHECK_FALSE(is_fully_interactive(Cube(LatticePoint::of_1d({0, 100}), 2), 1)); // 50 > 12
    CHECK(is_fully_interactive(Cube(LatticePoint::of_1d({0, 24}), 2), 1));       // 12 <= 12 boundary
}

TEST_CASE("weak separability: examples and witness validity") {
    const int r0 = 1, L = 2;
    Cube a(LatticePoint::of_1d({0, 0}), L), far(LatticePoint::of_1d({100, 100}), L);
    auto w = is_weakly_separable(a, far, r0);
    REQUIRE(w.has_value());
    CHECK(w->on_first);
    CHECK(w->J == std::vector<int>{1, 2});

    Cube close(LatticePoint::of_1d({0, 4}), L);
    CHECK_FALSE(is_weakly_separable(a, close, r0).has_value());

    Cube u(LatticePoint::of_1d({0, 10}), L), v(LatticePoint::of_1d({0, 0}), L);
    auto w2 = is_weakly_separable(u, v, r0);
    REQUIRE(w2.has_value());
    CHECK(w2->on_first);
    CHECK(w2->J == std::vector<int>{2});
}

TEST_CASE("weak separability agrees with the set-based oracle") {
    Rng rng(7);
    for (int t = 0; t < 400; ++t) {
        const int n = rand_int(rng, 2, 3), d = rand_int(rng, 1, 2);
        const int L = rand_int(rng, 1, 3), r0 = rand_int(rng, 1, 2);
        Cube a(rand_point(rng, n, d, 10), L), b(rand_point(rng, n, d, 10), L);
        auto w = is_weakly_separable(a, b, r0);
        CHECK(w.has_value() == oracle_weakly_separable(a, b, r0));
        if (w.has_value()) {
            unsigned mask = 0;
            for (int j : w->J) mask |= 1u << (j - 1);
            CHECK(oracle_witness_holds(w->on_first ? a : b, w->on_first ? b : a, mask, r0));
        }
    }
}

// Norm-gap criterion. The gap needs the particle factor 2n(L+r0): a chain of
// touching fattened boxes can bridge the outermost particle down to the other
// cube's region, e.g. u=(15,25), v=(5,5), L=4, r0=1 admits no witness even
// though ||u|| > ||v|| + 2(L+r0). With the n-factor the chain component of the
// outermost particle clears both the complement and the other cube.
TEST_CASE("norm gap of 2n(L+r0) forces weak separability") {
    Rng rng(23);
    int tested = 0;
    while (tested < 1000) {
        const int n = rand_int(rng, 2, 3), d = rand_int(rng, 1, 2);
        const int L = rand_int(rng, 1, 4), r0 = rand_int(rng, 1, 2);
        auto v = rand_point(rng, n, d, 6);
        auto u = rand_point(rng, n, d, 60);
        if (max_norm(u) <= max_norm(v) + 2 * n * (L + r0)) continue;
        ++tested;
        CHECK(is_weakly_separable(Cube(u, L), Cube(v, L), r0).has_value());
    }
    // the touching-chain counterexample at the weaker gap
    Cube cu(LatticePoint::of_1d({15, 25}), 4), cv(LatticePoint::of_1d({5, 5}), 4);
    REQUIRE(max_norm(cu.center) > max_norm(cv.center) + 2 * (4 + 1));
    CHECK_FALSE(is_weakly_separable(cu, cv, 1).has_value());
}

TEST_CASE("separable = weak witness + 11nL gap") {
    const int r0 = 1, L = 2;
    Cube u(LatticePoint::of_1d({0, 10}), L), v(LatticePoint::of_1d({0, 0}), L);
    CHECK_FALSE(is_separable(u, v, r0)); // 10 <= 44 despite weak separability
    Cube a(LatticePoint::of_1d({0, 0}), L), far(LatticePoint::of_1d({100, 100}), L);
    CHECK(is_separable(a, far, r0));     // 100 > 44
    CHECK_FALSE(is_separable(a, a, r0));
    CHECK(is_weakly_separable(a, far, r0).has_value()); // separable implies witness
}

TEST_CASE("complete separability") {
    const int r0 = 1, L = 2;
    Cube a(LatticePoint::of_1d({0, 0}), L);
    CHECK(is_completely_separable(a, Cube(LatticePoint::of_1d({100, 100}), L), r0));
    CHECK_FALSE(is_completely_separable(a, Cube(LatticePoint::of_1d({0, 100}), L), r0));

    // Lemma 2.7 style property: FI pairs far apart are completely separable
    Rng rng(41);
    int tested = 0;
    while (tested < 300) {
        const int n = rand_int(rng, 2, 3), d = rand_int(rng, 1, 2);
        const int Lr = rand_int(rng, 1, 3), rr = rand_int(rng, 1, 2);
        auto du = rand_point(rng, n, d, 2 * n * (Lr + rr) / 2 + 1);
        LatticePoint u = LatticePoint::zero(n, d);
        for (int i = 0; i < d; ++i) {
            int base = rand_int(rng, -20, 20);
            for (int j = 0; j < n; ++j) u.coord(j, i) = base + du.coord(j, i) % (Lr + rr);
        }
        auto shift = rand_point(rng, 1, d, 80);
        LatticePoint v = u;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < d; ++i) v.coord(j, i) += shift.coord(0, i);
        Cube cu(u, Lr), cv(v, Lr);
        if (!is_fully_interactive(cu, rr) || !is_fully_interactive(cv, rr)) continue;
        if (max_norm_diff(u, v) <= n * (10 * Lr + 8 * rr)) continue;
        ++tested;
        CHECK(is_completely_separable(cu, cv, rr));
    }
}

TEST_CASE("pairwise predicates are symmetric") {
    Rng rng(99);
    for (int t = 0; t < 300; ++t) {
        const int n = rand_int(rng, 2, 3), d = rand_int(rng, 1, 2);
        const int L = rand_int(rng, 1, 3), r0 = rand_int(rng, 1, 2);
        Cube a(rand_point(rng, n, d, 15), L), b(rand_point(rng, n, d, 15), L);
        CHECK(is_weakly_separable(a, b, r0).has_value() == is_weakly_separable(b, a, r0).has_value());
        CHECK(is_separable(a, b, r0) == is_separable(b, a, r0));
        CHECK(is_completely_separable(a, b, r0) == is_completely_separable(b, a, r0));
    }
}

TEST_CASE("canonical decomposition") {
    const int r0 = 1, L = 2;
    auto [J1, C1] = canonical_decomposition(Cube(LatticePoint::of_1d({0, 100}), L), r0);
    CHECK(J1 == std::vector<int>{1});
    CHECK(C1 == std::vector<int>{2});

    auto [J2, C2] = canonical_decomposition(Cube(LatticePoint::of_1d({0, 1, 100}), L), r0);
    CHECK(J2 == std::vector<int>{1, 2});
    CHECK(C2 == std::vector<int>{3});

    CHECK_THROWS_AS(canonical_decomposition(Cube(LatticePoint::of_1d({0, 0}), L), r0), NoDecomposition);

    // returned split is genuinely disjoint (set oracle)
    Rng rng(5);
    int tested = 0;
    while (tested < 200) {
        const int n = rand_int(rng, 2, 3), d = rand_int(rng, 1, 2);
        const int Lr = rand_int(rng, 1, 3), rr = rand_int(rng, 1, 2);
        Cube c(rand_point(rng, n, d, 40), Lr);
        if (is_fully_interactive(c, rr)) continue;
        ++tested;
        auto [J, Jc] = canonical_decomposition(c, rr);
        REQUIRE(!J.empty());
        REQUIRE(!Jc.empty());
        CHECK(sets_disjoint(proj_sites(c, J, rr), proj_sites(c, Jc, rr)));
    }
}
