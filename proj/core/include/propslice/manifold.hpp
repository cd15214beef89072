#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace propslice {

enum class ManifoldKind { Circle, FlatTorus, Sphere2 };

/// Chart coordinates on a manifold. Circle: {angle}; FlatTorus: {x_1..x_n};
/// Sphere2: {colatitude, longitude}.
struct PointCoord {
    std::vector<double> values;
};

/// One of the supported rank-1 locally symmetric manifolds, with its exact
/// geometric data: distance law, injectivity radius, scalar curvature,
/// normal-coordinate metric determinant and polar volume density.
///
/// Immutable after construction; all member functions are pure.
class ManifoldModel {
public:
    static ManifoldModel circle(double radius);
    static ManifoldModel flat_torus(std::vector<double> periods);
    static ManifoldModel sphere2(double radius);

    /// Parses a manifold key: "circle:R", "torus:P1,P2,...", "sphere2:R".
    static ManifoldModel parse(std::string_view key);

    ManifoldKind kind() const { return kind_; }
    int dimension() const { return dimension_; }
    double scalar_curvature() const { return scalar_curvature_; }
    double injectivity_radius() const { return injectivity_radius_; }
    double total_volume() const { return total_volume_; }

    /// Circle/Sphere2 radius parameter. FlatTorus has none.
    double radius() const;
    const std::vector<double>& periods() const;

    /// Canonical key, round-trips through parse().
    std::string key() const;

    /// Wraps coordinates into the fundamental domain. Idempotent.
    PointCoord normalize(const PointCoord& p) const;

    /// Minimizing geodesic distance; symmetric, in [0, injectivity_radius()]
    /// on the diagonal-neighborhood chart used throughout.
    double geodesic_distance(const PointCoord& x, const PointCoord& y) const;

    /// det g_ij(x) in Riemann normal coordinates at geodesic distance r from
    /// the base point. Distance-only by two-point homogeneity.
    /// Throws std::domain_error for r outside [0, injectivity_radius()).
    double normal_metric_det(double r) const;

    /// g(r) with dvol = g(r) dr dtheta in geodesic polar coordinates;
    /// g(r)/r^{n-1} -> 1 as r -> 0+. Same domain restriction as above.
    double polar_volume_density(double r) const;

    /// d/dr of polar_volume_density, used for the radial mean curvature.
    double polar_volume_density_deriv(double r) const;

private:
    ManifoldModel() = default;
    void check_radial_domain(double r, const char* op) const;

    ManifoldKind kind_ = ManifoldKind::Circle;
    int dimension_ = 1;
    double scalar_curvature_ = 0.0;
    double injectivity_radius_ = 0.0;
    double total_volume_ = 0.0;
    double radius_ = 0.0;                // Circle, Sphere2
    std::vector<double> periods_;        // FlatTorus
};

}  // namespace propslice
