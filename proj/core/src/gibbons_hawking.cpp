#include "gaugepoly/gibbons_hawking.hpp"

#include <cmath>
#include <stdexcept>

namespace gp::gh {

namespace {

double dist(const Vec3& a, const Vec3& b) {
    double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

void check_point(const MonopoleConfig& cfg, const Vec3& q) {
    for (int i = 1; i <= cfg.n(); ++i)
        if (dist(q, cfg.center(i)) < kProximity)
            throw std::invalid_argument("evaluation at a monopole center");
}

}  // namespace

void MonopoleConfig::validate() const {
    if (centers.empty()) throw std::invalid_argument("empty configuration");
    if (m.size() != centers.size() + 1)
        throw std::invalid_argument("need one more m value than centers");
    for (std::size_t i = 0; i + 1 < centers.size(); ++i)
        if (!(centers[i] < centers[i + 1]))
            throw std::invalid_argument("centers must be strictly increasing");
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] > m[i + 1]) throw std::invalid_argument("m must be non-decreasing");
}

double MonopoleConfig::min_separation() const {
    if (centers.size() < 2) return 1.0;
    double best = centers[1] - centers[0];
    for (std::size_t i = 1; i + 1 < centers.size(); ++i)
        best = std::min(best, centers[i + 1] - centers[i]);
    return best;
}

double potential(const MonopoleConfig& cfg, const Vec3& q) {
    check_point(cfg, q);
    double u = 0;
    for (int i = 1; i <= cfg.n(); ++i) u += double(cfg.charge(i)) / dist(q, cfg.center(i));
    return u;
}

Vec3 grad_potential(const MonopoleConfig& cfg, const Vec3& q) {
    check_point(cfg, q);
    Vec3 g{0, 0, 0};
    for (int i = 1; i <= cfg.n(); ++i) {
        Vec3 c = cfg.center(i);
        double r = dist(q, c);
        double f = -double(cfg.charge(i)) / (r * r * r);
        g[0] += f * (q[0] - c[0]);
        g[1] += f * (q[1] - c[1]);
        g[2] += f * (q[2] - c[2]);
    }
    return g;
}

Vec3 monopole_form(const MonopoleConfig& cfg, const Vec3& q) {
    check_point(cfg, q);
    Vec3 a{0, 0, 0};
    for (int i = 1; i <= cfg.n(); ++i) {
        Vec3 c = cfg.center(i);
        double r = dist(q, c);
        double f = double(cfg.charge(i)) / (r * r * r);
        a[0] += f * (q[0] - c[0]);
        a[1] += f * (q[1] - c[1]);
        a[2] += f * (q[2] - c[2]);
    }
    return a;
}

Vec3 dirac_potential(const MonopoleConfig& cfg, const Vec3& q, bool string_up) {
    check_point(cfg, q);
    Vec3 a{0, 0, 0};
    for (int i = 1; i <= cfg.n(); ++i) {
        Vec3 c = cfg.center(i);
        double dx = q[0] - c[0], dy = q[1] - c[1], dz = q[2] - c[2];
        double rho2 = dx * dx + dy * dy;
        double r = std::sqrt(rho2 + dz * dz);
        if (rho2 < kProximity * kProximity && ((string_up && dz > 0) || (!string_up && dz < 0)))
            throw std::invalid_argument("evaluation on a Dirac string");
        double costheta = dz / r;
        double coeff = string_up ? -double(cfg.charge(i)) * (1.0 + costheta)
                                 : double(cfg.charge(i)) * (1.0 - costheta);
        // a = coeff dψ, dψ = (-dy' dx + dx' dy)/ρ² at the center frame
        a[0] += coeff * (-dy) / rho2;
        a[1] += coeff * dx / rho2;
    }
    return a;
}

double scalar_curvature(const MonopoleConfig& cfg, const Vec3& q) {
    double u = potential(cfg, q);
    Vec3 g = grad_potential(cfg, q);
    double g2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
    return 1.5 * g2 / (u * u * u * u);
}

double laplacian_fd(const MonopoleConfig& cfg, const Vec3& q, double h) {
    double acc = -6.0 * potential(cfg, q);
    for (int axis = 0; axis < 3; ++axis) {
        Vec3 p = q, mns = q;
        p[axis] += h;
        mns[axis] -= h;
        acc += potential(cfg, p) + potential(cfg, mns);
    }
    return acc / (h * h);
}

namespace {

// Central-difference partial derivative of one component of the potential.
double d_component(const MonopoleConfig& cfg, const Vec3& q, int axis, int comp, double h,
                   bool string_up) {
    Vec3 p = q, m = q;
    p[axis] += h;
    m[axis] -= h;
    return (dirac_potential(cfg, p, string_up)[comp] - dirac_potential(cfg, m, string_up)[comp]) /
           (2 * h);
}

}  // namespace

double monopole_equation_residual_fd(const MonopoleConfig& cfg, const Vec3& q, double h,
                                     bool string_up) {
    // (da)_yz = ∂y a_z - ∂z a_y, cyclically
    double da_yz = d_component(cfg, q, 1, 2, h, string_up) - d_component(cfg, q, 2, 1, h, string_up);
    double da_zx = d_component(cfg, q, 2, 0, h, string_up) - d_component(cfg, q, 0, 2, h, string_up);
    double da_xy = d_component(cfg, q, 0, 1, h, string_up) - d_component(cfg, q, 1, 0, h, string_up);
    Vec3 alpha = monopole_form(cfg, q);
    return std::max({std::fabs(da_yz - alpha[0]), std::fabs(da_zx - alpha[1]),
                     std::fabs(da_xy - alpha[2])});
}

double dalpha_fd(const MonopoleConfig& cfg, const Vec3& q, double h) {
    // dα for α = V_x dy∧dz + V_y dz∧dx + V_z dx∧dy is (div V) dx∧dy∧dz
    double acc = 0;
    for (int axis = 0; axis < 3; ++axis) {
        Vec3 p = q, m = q;
        p[axis] += h;
        m[axis] -= h;
        acc += (monopole_form(cfg, p)[axis] - monopole_form(cfg, m)[axis]) / (2 * h);
    }
    return acc;
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = 0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
            }
            double dp = n * (t * p0 - p1) / (t * t - 1);
            double t1 = t - p0 / dp;
            if (std::fabs(t1 - t) < 1e-15) {
                t = t1;
                break;
            }
            t = t1;
        }
        double p0 = 1, p1 = 0;
        for (int j = 0; j < n; ++j) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
        }
        double dp = n * (t * p0 - p1) / (t * t - 1);
        x[i] = t;
        w[i] = 2.0 / ((1 - t * t) * dp * dp);
    }
}

}  // namespace

double sphere_flux(const MonopoleConfig& cfg, int i, double radius, int order) {
    cfg.validate();
    if (i < 1 || i > cfg.n()) throw std::invalid_argument("center index out of range");
    Vec3 c = cfg.center(i);
    std::vector<double> xs, ws;
    gauss_legendre(order, xs, ws);
    int nphi = 2 * order;
    double flux = 0;
    for (int a = 0; a < order; ++a) {
        double ct = xs[a];  // cosθ
        double st = std::sqrt(std::max(0.0, 1 - ct * ct));
        for (int b = 0; b < nphi; ++b) {
            double phi = 2 * M_PI * b / nphi;
            Vec3 nrm{st * std::cos(phi), st * std::sin(phi), ct};
            Vec3 q{c[0] + radius * nrm[0], c[1] + radius * nrm[1], c[2] + radius * nrm[2]};
            Vec3 v = monopole_form(cfg, q);
            double vn = v[0] * nrm[0] + v[1] * nrm[1] + v[2] * nrm[2];
            flux += ws[a] * (2 * M_PI / nphi) * vn * radius * radius;
        }
    }
    return flux;
}

double loop_integral_z_axis(const MonopoleConfig& cfg, int i, double radius, double z,
                            bool up_minus_down, int samples) {
    Vec3 c = cfg.center(i);
    double acc = 0;
    for (int s = 0; s < samples; ++s) {
        double phi = 2 * M_PI * s / samples;
        Vec3 q{c[0] + radius * std::cos(phi), c[1] + radius * std::sin(phi), c[2] + z};
        Vec3 tangent{-std::sin(phi), std::cos(phi), 0};
        Vec3 a1 = dirac_potential(cfg, q, true);
        Vec3 a2 = dirac_potential(cfg, q, false);
        Vec3 a;
        for (int k = 0; k < 3; ++k) a[k] = up_minus_down ? a1[k] - a2[k] : a1[k];
        acc += (a[0] * tangent[0] + a[1] * tangent[1] + a[2] * tangent[2]) * radius *
               (2 * M_PI / samples);
    }
    return acc;
}

CylinderCompare cylinder_model_compare(const MonopoleConfig& cfg, int i, double radius,
                                       int samples) {
    cfg.validate();
    if (i < 1 || i > cfg.n()) throw std::invalid_argument("center index out of range");
    if (cfg.n() > 1 && radius >= 0.5 * cfg.min_separation())
        throw std::invalid_argument("radius too large for the cylinder model comparison");
    Vec3 c = cfg.center(i);
    CylinderCompare out;
    out.radius = radius;
    // golden-angle sphere sample
    double ga = M_PI * (3.0 - std::sqrt(5.0));
    for (int s = 0; s < samples; ++s) {
        double zz = 1.0 - 2.0 * (s + 0.5) / samples;
        double rr = std::sqrt(std::max(0.0, 1 - zz * zz));
        double phi = ga * s;
        Vec3 q{c[0] + radius * rr * std::cos(phi), c[1] + radius * rr * std::sin(phi),
               c[2] + radius * zz};
        double dev = std::fabs(potential(cfg, q) * radius - double(cfg.charge(i)));
        out.sup_deviation = std::max(out.sup_deviation, dev);
    }
    return out;
}

}  // namespace gp::gh
