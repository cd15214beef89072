#include "propslice/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace propslice {

namespace {
constexpr double kPi = std::numbers::pi;
}

double smooth_step(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    double a = std::exp(-1.0 / s);
    double b = std::exp(-1.0 / (1.0 - s));
    return a / (a + b);
}

CutoffProfile::CutoffProfile(double support_radius, double plateau_radius)
    : support_(support_radius), plateau_(plateau_radius) {
    if (!(plateau_ > 0.0) || !(support_ > plateau_))
        throw std::invalid_argument("cutoff: need 0 < plateau < support");
}

CutoffProfile CutoffProfile::fractions(const ManifoldModel& m, double support_fraction,
                                       double plateau_fraction) {
    if (!(support_fraction > 0.0) || !(support_fraction < 1.0) ||
        !(plateau_fraction > 0.0) || !(plateau_fraction < support_fraction))
        throw std::invalid_argument(
            "cutoff: fractions must satisfy 0 < plateau < support < 1");
    double d = m.injectivity_radius();
    return CutoffProfile(support_fraction * d, plateau_fraction * d);
}

double CutoffProfile::operator()(double r) const {
    if (r <= plateau_) return 1.0;
    if (r >= support_) return 0.0;
    return smooth_step((support_ - r) / (support_ - plateau_));
}

double action(double t, double r) {
    if (!(t > 0.0)) throw std::invalid_argument("action: t must be > 0");
    if (!(r >= 0.0)) throw std::invalid_argument("action: r must be >= 0");
    return r * r / (2.0 * t);
}

double van_vleck_sqrt(const ManifoldModel& m, double t, double r) {
    if (!(t > 0.0)) throw std::invalid_argument("van_vleck_sqrt: t must be > 0");
    double det = m.normal_metric_det(r);  // rejects r >= injectivity radius
    return std::pow(t, -0.5 * m.dimension()) * std::pow(det, -0.25);
}

std::complex<double> kernel_value(const ManifoldModel& m, const CutoffProfile& cutoff,
                                  double t, double r) {
    if (!(cutoff.support_radius() < m.injectivity_radius()))
        throw std::invalid_argument("kernel_value: cutoff support must lie inside the injectivity radius");
    double chi = cutoff(r);
    if (chi == 0.0) {
        if (!(t > 0.0)) throw std::invalid_argument("kernel_value: t must be > 0");
        if (!(r >= 0.0) || r >= m.injectivity_radius())
            throw std::domain_error("kernel_value: r outside [0, injectivity radius)");
        return {0.0, 0.0};
    }
    double n = m.dimension();
    double amp = chi * van_vleck_sqrt(m, t, r) * std::pow(2.0 * kPi, -0.5 * n);
    double phase = r * r / (2.0 * t) - kPi * n / 4.0;
    return std::polar(amp, phase);
}

double mean_curvature(const ManifoldModel& m, double r) {
    double g = m.polar_volume_density(r);
    if (!(g > 0.0)) throw std::domain_error("mean_curvature: polar density vanishes at r");
    return m.polar_volume_density_deriv(r) / g;
}

namespace {

// sum of pure second differences of a(t, .) over the n coordinate axes;
// a is radial so every axis contributes the same radial difference
double fd_laplacian(const ManifoldModel& m, double t, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("curvature_limit: h must be > 0");
    double f0 = van_vleck_sqrt(m, t, 0.0);
    double fh = van_vleck_sqrt(m, t, h);  // rejects h >= injectivity radius
    return m.dimension() * 2.0 * (fh - f0) / (h * h);
}

}  // namespace

double curvature_limit_check(const ManifoldModel& m, double t, double h,
                             double flag_tolerance) {
    double coarse = fd_laplacian(m, t, h);
    double fine = fd_laplacian(m, t, 0.5 * h);
    double scale = std::pow(t, -0.5 * m.dimension());
    if (std::abs(fine - coarse) / 3.0 > flag_tolerance * scale)
        throw std::domain_error("curvature_limit_check: step too large, Richardson estimate "
                                "disagrees beyond tolerance");
    return coarse;
}

double curvature_limit_richardson(const ManifoldModel& m, double t, double h) {
    double coarse = fd_laplacian(m, t, h);
    double fine = fd_laplacian(m, t, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace propslice
