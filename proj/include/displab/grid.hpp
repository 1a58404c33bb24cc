#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

#include <Eigen/Core>

namespace displab {

using Complex = std::complex<double>;
using CVector = Eigen::ArrayXcd;  // flattened spatial samples or spectra
using RVector = Eigen::ArrayXd;
using CMatrix = Eigen::ArrayXXcd;  // space x time
using RMatrix = Eigen::ArrayXXd;
using Vec2 = Eigen::Vector2d;  // spatial point or frequency; component 1 unused when n = 1

/// Uniform periodic grid on [-L, L)^n with Nt time samples on [-T, T].
///
/// The frequency lattice is xi_k = pi*k/L for k in [-N/2, N/2); spatial
/// samples sit at x_i = -L + i*dx. Time nodes are inclusive of both
/// endpoints, t_m = -T + m*dt with dt = 2T/(Nt-1), so an odd Nt puts a
/// node at t = 0.
struct GridSpec {
    int n = 1;     // spatial dimension (1 or 2 at desk scale)
    int N = 8;     // points per spatial axis (power of two)
    double L = 1;  // half-width of the periodic spatial box
    int Nt = 2;    // number of time samples
    double T = 1;  // half-width of the time window

    double dx() const { return 2.0 * L / N; }
    double dt() const { return 2.0 * T / (Nt - 1); }
    double dxi() const { return M_PI / L; }  // frequency lattice spacing

    Eigen::Index space_points() const {
        Eigen::Index p = 1;
        for (int d = 0; d < n; ++d) p *= N;
        return p;
    }

    double coord(int i) const { return -L + i * dx(); }
    double time_node(int m) const { return -T + m * dt(); }

    int signed_mode(int k_idx) const { return k_idx < N / 2 ? k_idx : k_idx - N; }
    double freq(int k_idx) const { return M_PI * signed_mode(k_idx) / L; }

    // Flattened layout: axis 0 fastest, index = i0 + N*i1.
    Eigen::Index flat(int i0, int i1 = 0) const { return i0 + static_cast<Eigen::Index>(N) * i1; }
    int axis_index(Eigen::Index flat, int axis) const {
        return axis == 0 ? static_cast<int>(flat % N) : static_cast<int>(flat / N);
    }

    Vec2 point(Eigen::Index flat) const {
        return {coord(axis_index(flat, 0)), n == 2 ? coord(axis_index(flat, 1)) : 0.0};
    }
    Vec2 freq_point(Eigen::Index flat) const {
        return {freq(axis_index(flat, 0)), n == 2 ? freq(axis_index(flat, 1)) : 0.0};
    }
    double freq_radius(Eigen::Index flat) const { return freq_point(flat).head(n).norm(); }

    double box_measure() const {  // (2L)^n
        double m = 1;
        for (int d = 0; d < n; ++d) m *= 2.0 * L;
        return m;
    }
    double cell_measure() const {  // dx^n
        double m = 1;
        for (int d = 0; d < n; ++d) m *= dx();
        return m;
    }
    double time_span() const { return 2.0 * T; }
    int zero_time_index() const;  // node with t = 0, throws if absent

    bool same_layout(const GridSpec& o) const {
        return n == o.n && N == o.N && Nt == o.Nt && L == o.L && T == o.T;
    }
    bool operator==(const GridSpec&) const = default;
};

/// Validates the GridSpec invariants: N a power of two >= 8, Nt >= 2,
/// positive box sizes, n in {1, 2}.
GridSpec make_grid(int n, int N, double L, int Nt, double T);

/// Complex samples on the spatial grid (initial data f, g).
struct Field {
    GridSpec grid;
    CVector values;  // size N^n
};

/// Complex samples on the space-time grid (solutions u, forcings F).
/// Column m holds the spatial samples at time node m.
struct SpaceTimeField {
    GridSpec grid;
    CMatrix values;  // N^n x Nt
};

/// Nonnegative real samples on the space-time grid (weights w, |V|, chi_B).
struct Weight {
    GridSpec grid;
    RMatrix values;  // N^n x Nt
};

/// Parameter tuple (n, gamma, s, p, alpha) of a weighted estimate.
/// For the scale-invariant homogeneous estimates alpha = 2s + gamma.
struct EstimateParams {
    int n = 1;
    double gamma = 2;
    double s = 0;
    double p = 1;
    double alpha = 2;
};

/// Params for the homogeneous dispersive estimate; alpha is pinned by scaling.
inline EstimateParams strichartz_params(int n, double gamma, double s, double p) {
    return {n, gamma, s, p, 2 * s + gamma};
}

using SpaceRule = std::function<Complex(const Vec2&)>;
using SpaceTimeRule = std::function<Complex(const Vec2&, double)>;
using RealRule = std::function<double(const Vec2&, double)>;

/// Sample a pointwise rule at the grid nodes. Non-finite samples are
/// rejected; weight construction rejects negative samples instead of
/// clamping them.
Field sample_field(const GridSpec& grid, const SpaceRule& rule);
SpaceTimeField sample_spacetime_field(const GridSpec& grid, const SpaceTimeRule& rule);
Weight sample_weight(const GridSpec& grid, const RealRule& rule);

/// Trapezoid quadrature masses for the time axis: dt everywhere except
/// half-cells at the two endpoints.
RVector time_quadrature(const GridSpec& grid);

}  // namespace displab
