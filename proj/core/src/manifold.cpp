#include "propslice/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace propslice {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_period(double x, double period) {
    double y = std::fmod(x, period);
    if (y < 0.0) y += period;
    if (y >= period) y -= period;  // fmod can land exactly on the period
    return y;
}

// shortest representative of x on a circle of circumference `period`
double wrap_distance(double dx, double period) {
    double d = std::abs(wrap_period(dx, period));
    return std::min(d, period - d);
}

// sin(u)/u, accurate through u = 0
double sinc(double u) {
    if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
    return std::sin(u) / u;
}

double parse_number(std::string_view s, const char* what) {
    try {
        size_t pos = 0;
        double v = std::stod(std::string(s), &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("manifold: bad numeric parameter '") +
                                    std::string(s) + "' in " + what);
    }
}

}  // namespace

ManifoldModel ManifoldModel::circle(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("manifold: circle radius must be > 0");
    ManifoldModel m;
    m.kind_ = ManifoldKind::Circle;
    m.dimension_ = 1;
    m.scalar_curvature_ = 0.0;
    m.injectivity_radius_ = kPi * radius;
    m.total_volume_ = 2.0 * kPi * radius;
    m.radius_ = radius;
    return m;
}

ManifoldModel ManifoldModel::flat_torus(std::vector<double> periods) {
    if (periods.empty()) throw std::invalid_argument("manifold: torus needs at least one period");
    for (double p : periods)
        if (!(p > 0.0)) throw std::invalid_argument("manifold: torus periods must be > 0");
    ManifoldModel m;
    m.kind_ = ManifoldKind::FlatTorus;
    m.dimension_ = static_cast<int>(periods.size());
    m.scalar_curvature_ = 0.0;
    m.injectivity_radius_ = 0.5 * *std::min_element(periods.begin(), periods.end());
    m.total_volume_ = 1.0;
    for (double p : periods) m.total_volume_ *= p;
    m.periods_ = std::move(periods);
    return m;
}

ManifoldModel ManifoldModel::sphere2(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("manifold: sphere radius must be > 0");
    ManifoldModel m;
    m.kind_ = ManifoldKind::Sphere2;
    m.dimension_ = 2;
    m.scalar_curvature_ = 2.0 / (radius * radius);
    m.injectivity_radius_ = kPi * radius;
    m.total_volume_ = 4.0 * kPi * radius * radius;
    m.radius_ = radius;
    return m;
}

ManifoldModel ManifoldModel::parse(std::string_view key) {
    auto colon = key.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("manifold: key must look like 'circle:R', 'torus:P1,P2' or 'sphere2:R'");
    std::string_view name = key.substr(0, colon);
    std::string_view args = key.substr(colon + 1);
    if (name == "circle") return circle(parse_number(args, "circle"));
    if (name == "sphere2") return sphere2(parse_number(args, "sphere2"));
    if (name == "torus") {
        std::vector<double> periods;
        size_t start = 0;
        while (start <= args.size()) {
            size_t comma = args.find(',', start);
            if (comma == std::string_view::npos) comma = args.size();
            periods.push_back(parse_number(args.substr(start, comma - start), "torus"));
            start = comma + 1;
        }
        return flat_torus(std::move(periods));
    }
    throw std::invalid_argument("manifold: unknown kind '" + std::string(name) + "'");
}

double ManifoldModel::radius() const {
    if (kind_ == ManifoldKind::FlatTorus)
        throw std::logic_error("manifold: flat torus has no radius parameter");
    return radius_;
}

const std::vector<double>& ManifoldModel::periods() const {
    if (kind_ != ManifoldKind::FlatTorus)
        throw std::logic_error("manifold: only the flat torus has periods");
    return periods_;
}

std::string ManifoldModel::key() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
        case ManifoldKind::Circle: os << "circle:" << radius_; break;
        case ManifoldKind::Sphere2: os << "sphere2:" << radius_; break;
        case ManifoldKind::FlatTorus:
            os << "torus:";
            for (size_t i = 0; i < periods_.size(); ++i) {
                if (i) os << ',';
                os << periods_[i];
            }
            break;
    }
    return os.str();
}

PointCoord ManifoldModel::normalize(const PointCoord& p) const {
    PointCoord q = p;
    switch (kind_) {
        case ManifoldKind::Circle:
            if (q.values.size() != 1) throw std::invalid_argument("manifold: circle point needs 1 coordinate");
            q.values[0] = wrap_period(q.values[0], 2.0 * kPi);
            break;
        case ManifoldKind::FlatTorus:
            if (q.values.size() != periods_.size())
                throw std::invalid_argument("manifold: torus point has wrong coordinate count");
            for (size_t i = 0; i < q.values.size(); ++i)
                q.values[i] = wrap_period(q.values[i], periods_[i]);
            break;
        case ManifoldKind::Sphere2: {
            if (q.values.size() != 2) throw std::invalid_argument("manifold: sphere point needs 2 coordinates");
            double colat = wrap_period(q.values[0], 2.0 * kPi);
            double lon = q.values[1];
            if (colat > kPi) {  // fold through the pole
                colat = 2.0 * kPi - colat;
                lon += kPi;
            }
            q.values[0] = colat;
            q.values[1] = wrap_period(lon, 2.0 * kPi);
            break;
        }
    }
    return q;
}

double ManifoldModel::geodesic_distance(const PointCoord& x, const PointCoord& y) const {
    switch (kind_) {
        case ManifoldKind::Circle:
            return radius_ * wrap_distance(x.values[0] - y.values[0], 2.0 * kPi);
        case ManifoldKind::FlatTorus: {
            double s = 0.0;
            for (size_t i = 0; i < periods_.size(); ++i) {
                double d = wrap_distance(x.values[i] - y.values[i], periods_[i]);
                s += d * d;
            }
            return std::sqrt(s);
        }
        case ManifoldKind::Sphere2: {
            // haversine form of the central angle, stable near coincident points
            double dc = 0.5 * (x.values[0] - y.values[0]);
            double dl = 0.5 * (x.values[1] - y.values[1]);
            double h = std::sin(dc) * std::sin(dc) +
                       std::sin(x.values[0]) * std::sin(y.values[0]) * std::sin(dl) * std::sin(dl);
            h = std::clamp(h, 0.0, 1.0);
            return radius_ * 2.0 * std::asin(std::sqrt(h));
        }
    }
    return 0.0;
}

void ManifoldModel::check_radial_domain(double r, const char* op) const {
    if (!(r >= 0.0) || r >= injectivity_radius_)
        throw std::domain_error(std::string(op) +
                                ": r must lie in [0, injectivity radius); got r=" + std::to_string(r));
}

double ManifoldModel::normal_metric_det(double r) const {
    check_radial_domain(r, "normal_metric_det");
    if (kind_ != ManifoldKind::Sphere2) return 1.0;
    double s = sinc(r / radius_);
    return s * s;
}

double ManifoldModel::polar_volume_density(double r) const {
    check_radial_domain(r, "polar_volume_density");
    switch (kind_) {
        case ManifoldKind::Circle: return 1.0;
        case ManifoldKind::FlatTorus: {
            double g = 1.0;
            for (int i = 1; i < dimension_; ++i) g *= r;
            return g;
        }
        case ManifoldKind::Sphere2: return radius_ * std::sin(r / radius_);
    }
    return 1.0;
}

double ManifoldModel::polar_volume_density_deriv(double r) const {
    check_radial_domain(r, "polar_volume_density_deriv");
    switch (kind_) {
        case ManifoldKind::Circle: return 0.0;
        case ManifoldKind::FlatTorus: {
            int n = dimension_;
            if (n == 1) return 0.0;
            double g = static_cast<double>(n - 1);
            for (int i = 2; i < n; ++i) g *= r;
            return g;
        }
        case ManifoldKind::Sphere2: return std::cos(r / radius_);
    }
    return 0.0;
}

}  // namespace propslice
