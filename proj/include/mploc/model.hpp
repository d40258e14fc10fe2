#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mploc/errors.hpp"
#include "mploc/lattice.hpp"
#include "mploc/rng.hpp"

namespace mploc {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// ----------------------------------------------------------------------------
// Disorder
// ----------------------------------------------------------------------------

enum class DisorderKind { uniform, power_pushed };

// uniform:      V ~ U[-M, M]
// power_pushed: V = M sign(W) |W|^{1/rho}, W ~ U[-1, 1]
struct DisorderSpec {
    DisorderKind kind = DisorderKind::uniform;
    double M = 1.0;
    double rho = 1.0;          // Hoelder exponent (power_pushed only; uniform has rho = 1)
    std::uint64_t seed = 0;

    double effective_rho() const { return kind == DisorderKind::uniform ? 1.0 : rho; }
};

// Continuity modulus sigma(eps) = sup_t mu(t+eps) - mu(t), in closed form.
// For power_pushed the density is monotone on each half-axis, so the sup is
// attained either centered at 0 (rho < 1) or flush at the support edge
// (rho > 1); both candidates are evaluated and the larger taken.
inline double holder_modulus(const DisorderSpec& dist, double eps) {
    if (eps < 0) throw PreconditionViolation("holder_modulus needs eps >= 0");
    if (eps == 0) return 0.0;
    const double M = dist.M;
    if (eps >= 2 * M) return 1.0;
    switch (dist.kind) {
        case DisorderKind::uniform:
            return std::min(1.0, eps / (2 * M));
        case DisorderKind::power_pushed: {
            const double rho = dist.rho;
            const double centered = std::pow(eps / (2 * M), rho);
            double edge;
            if (eps <= M)
                edge = 0.5 * (1.0 - std::pow((M - eps) / M, rho));
            else
                edge = 0.5 + 0.5 * std::pow((eps - M) / M, rho);
            return std::min(1.0, std::max(centered, edge));
        }
    }
    throw UnsupportedDistribution("unknown disorder kind");
}

// Largest admissible kappa (closed form where known): sigma(eps) <= kappa^{-1} eps^rho.
inline double holder_kappa_max(const DisorderSpec& dist) {
    if (dist.kind == DisorderKind::uniform) return 2 * dist.M;
    if (dist.kind == DisorderKind::power_pushed && dist.rho <= 1.0)
        return std::pow(2 * dist.M, dist.rho);
    throw UnsupportedDistribution("no closed-form kappa for this distribution");
}

inline double draw_disorder(const DisorderSpec& dist, Rng& rng) {
    switch (dist.kind) {
        case DisorderKind::uniform:
            return dist.M * rng.symmetric();
        case DisorderKind::power_pushed: {
            const double w = rng.symmetric();
            const double mag = std::pow(std::abs(w), 1.0 / dist.rho);
            return dist.M * (w < 0 ? -mag : mag);
        }
    }
    throw UnsupportedDistribution("unknown disorder kind");
}

// ----------------------------------------------------------------------------
// Model parameters (Assumptions A, B, C in one ledger)
// ----------------------------------------------------------------------------

struct ModelParams {
    int n = 1;
    int d = 1;
    double g = 1.0;        // disorder coupling, |g| >= 1 typical
    double r = 6.0;        // hopping exponent, needs r > nd for summable rows
    int r0 = 1;            // interaction range, >= 1
    double u_amp = 0.0;    // interaction amplitude, |u_amp| <= M1
    double M = 1.0;        // potential half-support
    double M1 = 1.0;       // interaction bound
    DisorderSpec dist;
    // Hopping diagonal convention: <0>^{-r} = 1 puts a g^{-1} identity shift
    // on the diagonal. Toggleable because the tensor decomposition of a PI
    // cube must count the shift exactly once across its factors.
    bool t_diagonal = true;

    void check() const {
        if (n < 1 || d < 1) throw ConfigError("n and d must be >= 1");
        if (r0 < 1) throw ConfigError("interaction range r0 must be >= 1");
        if (std::abs(u_amp) > M1) throw ConfigError("|u_amp| must be <= M1");
        if (r <= n * d) throw ConfigError("hopping exponent r must exceed n*d");
        if (g == 0) throw ConfigError("coupling g must be nonzero");
    }

    ModelParams restricted_to(int n_sub) const {
        ModelParams p = *this;
        p.n = n_sub;
        return p;
    }
};

// ----------------------------------------------------------------------------
// Random potential field on a single-particle window
// ----------------------------------------------------------------------------

struct PotentialField {
    Box window;                 // single-particle box in Z^d
    std::vector<double> values; // lexicographic over the window

    double at(const int* site) const {
        std::int64_t idx = 0;
        for (int i = 0; i < window.dim(); ++i) {
            if (site[i] < window.lo[i] || site[i] > window.hi[i])
                throw WindowTooSmall("site outside potential window");
            idx = idx * (window.hi[i] - window.lo[i] + 1) + (site[i] - window.lo[i]);
        }
        return values[static_cast<size_t>(idx)];
    }

    // V(x) = sum_j V(x_j)
    double total_at(const LatticePoint& x) const {
        double v = 0;
        for (int j = 0; j < x.n; ++j) v += at(x.c.data() + static_cast<size_t>(j) * x.d);
        return v;
    }

    bool covers(const Cube& cube) const {
        for (int j = 0; j < cube.n(); ++j)
            if (!window.contains_box(cube.particle_box(j))) return false;
        return true;
    }
};

// IID draws per site in lexicographic window order; bit-for-bit reproducible
// from (dist.seed, stream).
inline PotentialField sample_potential(const Box& window, const DisorderSpec& dist, std::uint64_t stream) {
    PotentialField field;
    field.window = window;
    const std::int64_t count = window.volume();
    if (count <= 0) throw PreconditionViolation("potential window is empty");
    field.values.reserve(static_cast<size_t>(count));
    Rng rng(derive_seed(dist.seed, stream));
    for (std::int64_t k = 0; k < count; ++k) field.values.push_back(draw_disorder(dist, rng));
    return field;
}

// smallest single-particle window covering every projection of every cube
inline Box potential_window(const std::vector<Cube>& cubes, int margin = 0) {
    Box w = cubes.at(0).particle_box(0, margin);
    for (const Cube& c : cubes)
        for (int j = 0; j < c.n(); ++j) w = w.hull(c.particle_box(j, margin));
    return w;
}

// ----------------------------------------------------------------------------
// Hopping, interaction, assembly
// ----------------------------------------------------------------------------

// T(x,y) = <y_j - x_j>^{-r} when x and y differ in at most one particle row,
// 0 otherwise; T(x,x) = 1 under the <0> = 1 convention.
inline double hopping_entry(const LatticePoint& x, const LatticePoint& y, double r) {
    int moved = -1;
    for (int j = 0; j < x.n; ++j) {
        for (int i = 0; i < x.d; ++i) {
            if (x.coord(j, i) != y.coord(j, i)) {
                if (moved >= 0 && moved != j) return 0.0;
                moved = j;
                break;
            }
        }
    }
    if (moved < 0) return 1.0;
    int norm = 0;
    for (int i = 0; i < x.d; ++i) norm = std::max(norm, std::abs(y.coord(moved, i) - x.coord(moved, i)));
    return std::pow(static_cast<double>(gauge(norm)), -r);
}

// Default interaction kernel: u_amp * 1{ ||a-b|| < r0 }. Any symmetric
// finite-range bounded kernel is admissible; this is the simplest one.
using InteractionKernel = double (*)(const int*, const int*, int d, int r0, double u_amp);

inline double indicator_kernel(const int* a, const int* b, int d, int r0, double u_amp) {
    int norm = 0;
    for (int i = 0; i < d; ++i) norm = std::max(norm, std::abs(a[i] - b[i]));
    return norm < r0 ? u_amp : 0.0;
}

inline double interaction_energy(const LatticePoint& x, int r0, double u_amp,
                                 InteractionKernel kernel = indicator_kernel) {
    double u = 0;
    for (int j1 = 0; j1 < x.n; ++j1)
        for (int j2 = j1 + 1; j2 < x.n; ++j2)
            u += kernel(x.c.data() + static_cast<size_t>(j1) * x.d,
                        x.c.data() + static_cast<size_t>(j2) * x.d, x.d, r0, u_amp);
    return u;
}

struct HamiltonianMatrix {
    Cube cube;
    ModelParams params;
    Mat mat;
    std::vector<LatticePoint> site_list;

    std::int64_t dim() const { return mat.rows(); }
};

// H = g^{-1}(T + U) + V restricted to the cube by plain truncation.
inline HamiltonianMatrix assemble(const Cube& cube, const ModelParams& params,
                                  const PotentialField& potential,
                                  std::int64_t max_dim = 1 << 14,
                                  InteractionKernel kernel = indicator_kernel) {
    params.check();
    if (!potential.covers(cube)) throw WindowTooSmall("potential window does not cover the cube");
    const std::int64_t m = cube.site_count();
    if (m > max_dim)
        throw BudgetExceeded("matrix dimension " + std::to_string(m) + " exceeds cap " + std::to_string(max_dim));

    HamiltonianMatrix H;
    H.cube = cube;
    H.params = params;
    H.site_list = sites(cube, max_dim);
    const auto& pts = H.site_list;
    const double ginv = 1.0 / params.g;
    H.mat.setZero(m, m);
    for (std::int64_t a = 0; a < m; ++a) {
        H.mat(a, a) = ginv * ((params.t_diagonal ? 1.0 : 0.0) + interaction_energy(pts[a], params.r0, params.u_amp, kernel))
                      + potential.total_at(pts[a]);
        for (std::int64_t b = a + 1; b < m; ++b) {
            const double t = hopping_entry(pts[a], pts[b], params.r);
            if (t != 0.0) {
                H.mat(a, b) = ginv * t;
                H.mat(b, a) = H.mat(a, b); // mirrored, bitwise equal
            }
        }
    }
    return H;
}

} // namespace mploc
