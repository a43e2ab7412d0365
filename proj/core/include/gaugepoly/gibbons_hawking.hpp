#pragma once

#include <array>
#include <string>
#include <vector>

namespace gp::gh {

using Vec3 = std::array<double, 3>;

// Multi-center monopole data: integers m_0 <= ... <= m_n and axis points
// x_1 < ... < x_n; charge_i = m_i - m_{i-1}.
struct MonopoleConfig {
    std::vector<long> m;          // n+1 values
    std::vector<double> centers;  // n axis coordinates

    int n() const { return int(centers.size()); }
    long charge(int i) const { return m[i] - m[i - 1]; }  // i = 1..n
    Vec3 center(int i) const { return {centers[i - 1], 0.0, 0.0}; }
    void validate() const;
    double min_separation() const;
};

// Distance guard: evaluation rejected closer than this to a center (or to a
// Dirac string ray).
inline constexpr double kProximity = 1e-9;

// Harmonic potential u(q) = Σ charge_i / |q - x_i| and its closed-form
// gradient.
double potential(const MonopoleConfig& cfg, const Vec3& q);
Vec3 grad_potential(const MonopoleConfig& cfg, const Vec3& q);

// The monopole 2-form as the triple (α_yz, α_zx, α_xy):
// α = Σ charge_k ((x-x_k) dy∧dz + y dz∧dx + z dx∧dy)/|q-x_k|³,
// the Hodge dual of du in the orientation with positive sphere flux.
Vec3 monopole_form(const MonopoleConfig& cfg, const Vec3& q);

// Local connection potential with Dirac strings along ±z from every center:
// per center charge·(±1 - cosθ)dψ. Returns Cartesian covector components.
// string_up=false places strings along -z (the default gauge).
Vec3 dirac_potential(const MonopoleConfig& cfg, const Vec3& q, bool string_up = false);

// Scalar curvature R = (3/2) u^{-4} |∇u|².
double scalar_curvature(const MonopoleConfig& cfg, const Vec3& q);

// Finite-difference residuals (central differences at spacing h).
double laplacian_fd(const MonopoleConfig& cfg, const Vec3& q, double h);
// Componentwise residual of the monopole equation da = α for the chosen
// string gauge (max-norm of the three components).
double monopole_equation_residual_fd(const MonopoleConfig& cfg, const Vec3& q, double h,
                                     bool string_up = false);
// FD exterior derivative of the 2-form (the divergence of its vector proxy).
double dalpha_fd(const MonopoleConfig& cfg, const Vec3& q, double h);

// Flux of α through the sphere of the given radius about center i, by
// Gauss-Legendre x trapezoid quadrature.
double sphere_flux(const MonopoleConfig& cfg, int i, double radius, int order = 48);

// Loop integral of a 1-form (Cartesian components supplied by f) around a
// horizontal circle of the given radius centered on the axis point.
double loop_integral_z_axis(const MonopoleConfig& cfg, int i, double radius, double z,
                            bool up_minus_down, int samples = 4096);

// sup over a sphere sample of |u·|q - x_i| - charge_i|: the deviation from
// the one-center model at radius r.
struct CylinderCompare {
    double sup_deviation = 0.0;
    double radius = 0.0;
};
CylinderCompare cylinder_model_compare(const MonopoleConfig& cfg, int i, double radius,
                                       int samples = 512);

}  // namespace gp::gh
