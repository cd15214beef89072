#pragma once

#include <complex>

#include "propslice/manifold.hpp"

namespace propslice {

/// C-infinity smooth step built from exp(-1/s): 0 for s <= 0, 1 for s >= 1,
/// all derivatives vanishing at both ends.
double smooth_step(double s);

/// Radial bump chi(r): identically 1 on [0, plateau], identically 0 beyond
/// the support radius, smooth in between. Support must sit strictly inside
/// the injectivity radius of whatever manifold it is used on.
class CutoffProfile {
public:
    CutoffProfile(double support_radius, double plateau_radius);

    /// Radii as fractions of the injectivity radius.
    static CutoffProfile fractions(const ManifoldModel& m,
                                   double support_fraction = 0.8,
                                   double plateau_fraction = 0.4);

    double operator()(double r) const;
    double support_radius() const { return support_; }
    double plateau_radius() const { return plateau_; }

private:
    double support_;
    double plateau_;
};

/// Geodesic action of the minimizing path traversed in time t: r^2 / (2 t).
/// Rejects t <= 0.
double action(double t, double r);

/// Kernel amplitude a(t,r) = sqrt(V) = t^{-n/2} (det g)^{-1/4} in normal
/// coordinates. Rejects t <= 0 and r outside [0, injectivity radius).
double van_vleck_sqrt(const ManifoldModel& m, double t, double r);

/// Full cut-off kernel (2 pi i)^{-n/2} chi(r) a(t,r) e^{i r^2/(2t)} with the
/// principal branch i^{n/2} = e^{i pi n / 4}.
std::complex<double> kernel_value(const ManifoldModel& m, const CutoffProfile& cutoff,
                                  double t, double r);

/// Radial mean curvature of the geodesic sphere: H(r) = g'(r)/g(r).
double mean_curvature(const ManifoldModel& m, double r);

/// Central finite-difference Laplacian of the amplitude a(t, .) at the base
/// point in normal coordinates; converges to t^{-n/2} R/6 at O(h^2).
/// Throws if the Richardson estimate flags h as too large.
double curvature_limit_check(const ManifoldModel& m, double t, double h,
                             double flag_tolerance = 5e-2);

/// Richardson-extrapolated value of the same finite difference.
double curvature_limit_richardson(const ManifoldModel& m, double t, double h);

}  // namespace propslice
