#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "propslice/manifold.hpp"

namespace propslice {

/// One Laplace eigenspace: eigenvalue of -Delta and the size of its
/// orthonormal real basis.
struct EigenLevel {
    int index = 0;
    double eigenvalue = 0.0;
    int multiplicity = 1;
};

/// Sobolev exponent alpha = 2 + (1/2) floor((n+2)/2) as a function of the
/// dimension; fractional for odd n.
double alpha_exponent(int dimension);

/// Complete orthonormal Laplace eigenbasis up to an energy cutoff.
/// Closed-form eigen-data only: Fourier modes, lattice modes, real
/// spherical harmonics. Immutable after construction.
class EigenBasis {
public:
    EigenBasis(const ManifoldModel& m, double e_max);

    const ManifoldModel& manifold() const { return manifold_; }
    double e_max() const { return e_max_; }
    const std::vector<EigenLevel>& levels() const { return levels_; }
    int total_functions() const { return total_functions_; }

    /// Evaluates the m-th orthonormal real eigenfunction of the given level.
    double eval(int level, int m, const PointCoord& p) const;

    /// Flat coefficient-vector offset of (level, m).
    int offset(int level, int m) const;

private:
    struct TorusMode {
        std::vector<double> frequency;  // 2 pi k_i / P_i
        bool sine = false;
        bool constant = false;
    };

    ManifoldModel manifold_;
    double e_max_ = 0.0;
    std::vector<EigenLevel> levels_;
    std::vector<int> offsets_;
    int total_functions_ = 0;
    // per-level payloads, indexed by level
    std::vector<int> circle_k_;
    std::vector<int> sphere_l_;
    std::vector<std::vector<TorusMode>> torus_modes_;
};

/// A function on the manifold represented by complex coefficients in the
/// truncated eigenbasis. Plain data; cheap to copy and move.
class SpectralState {
public:
    explicit SpectralState(std::shared_ptr<const EigenBasis> basis);

    /// State concentrated on a single basis function.
    static SpectralState basis_mode(std::shared_ptr<const EigenBasis> basis, int level, int m,
                                    std::complex<double> amplitude = 1.0);

    const EigenBasis& basis() const { return *basis_; }
    std::shared_ptr<const EigenBasis> basis_ptr() const { return basis_; }

    std::complex<double> coeff(int level, int m) const;
    void set_coeff(int level, int m, std::complex<double> c);
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
    std::vector<std::complex<double>>& coeffs() { return coeffs_; }

    double norm() const;

    /// Pointwise evaluation sum_{j,m} c_{j,m} u_{j,m}(p).
    std::complex<double> evaluate(const PointCoord& p) const;

private:
    std::shared_ptr<const EigenBasis> basis_;
    std::vector<std::complex<double>> coeffs_;
};

/// Spectral projector rho(E): zeroes coefficients with E_j > E. Idempotent,
/// norm nonincreasing.
SpectralState project(const SpectralState& f, double e);

/// Exact curvature-corrected propagator e^{i t (Delta - R/6)/2}: multiplies
/// each coefficient by exp(-i t (E_j + R/6) / 2). Unitary.
SpectralState exact_propagate(double t, const SpectralState& f);

/// Same evolution with the uncorrected generator Delta (no R/6 shift).
SpectralState exact_propagate_plain(double t, const SpectralState& f);

/// L2 distance via coefficients. Throws if the states live on different
/// manifolds or cutoffs.
double l2_error(const SpectralState& f, const SpectralState& g);

/// Sobolev norm ||(-Delta + 1)^{k/2} f||_{L2} = sqrt(sum (E_j+1)^k |c|^2).
double sobolev_norm(const SpectralState& f, int k);

/// Deterministic pseudo-random state with unit norm (property tests).
SpectralState random_state(std::shared_ptr<const EigenBasis> basis, unsigned seed);

}  // namespace propslice
