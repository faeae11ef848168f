#pragma once

// The Hellmann potential V(r) = -A/r + B exp(-C r)/r and its relation to the
// hydrogenic basis h(r) = -1/r.
//
// Units: hbar = 2m = 1, so the Hamiltonian is H = -omega Laplacian + V and the
// hydrogenic levels of -omega Laplacian - v/r are -v^2 / (4 omega N^2).

#include <string_view>
#include <utility>

namespace hellmann {

class HellmannParams {
public:
    /// Throws DomainError unless A > 0, C > 0, omega > 0 and all are finite.
    HellmannParams(double A, double B, double C, double omega = 1.0);

    double A() const noexcept { return A_; }
    double B() const noexcept { return B_; }
    double C() const noexcept { return C_; }
    double omega() const noexcept { return omega_; }

    /// Same potential multiplied by a coupling v > 0, i.e. v*V(r).
    HellmannParams scaled_by(double v) const;

    friend bool operator==(HellmannParams const&, HellmannParams const&) = default;

private:
    double A_;
    double B_;
    double C_;
    double omega_;
};

class QuantumNumbers {
public:
    /// n >= 1 counts radial states (n - 1 nodes), ell >= 0.
    QuantumNumbers(int n, int ell);

    int n() const noexcept { return n_; }
    int ell() const noexcept { return ell_; }
    /// Principal-like number n + ell.
    int N() const noexcept { return n_ + ell_; }

    friend bool operator==(QuantumNumbers const&, QuantumNumbers const&) = default;

private:
    int n_;
    int ell_;
};

struct ScaledParams {
    double alpha;
    double beta;
    double multiplier; // C^2 * omega
};

enum class Convexity { Convex, Concave, Affine };
enum class BoundDirection { Lower, Upper, Exact };

std::string_view to_string(Convexity c) noexcept;
std::string_view to_string(BoundDirection d) noexcept;

double evaluate_potential(HellmannParams const& p, double r);
double potential_derivative(HellmannParams const& p, double r);

/// g(h) = A h - B h exp(C/h), defined for h < 0, with g(-1/r) = V(r).
double transform_g(HellmannParams const& p, double h);

/// g''(h) at h = -1/r, i.e. B C^2 r^3 exp(-C r).
double g_second_derivative(HellmannParams const& p, double r);

Convexity convexity_class(HellmannParams const& p) noexcept;
BoundDirection bound_direction(Convexity c) noexcept;

/// E(omega, A, B, C) = C^2 omega E(1, A/(omega C), B/(omega C), 1).
ScaledParams reduce_scale(HellmannParams const& p) noexcept;

/// Reduced problem as a parameter set: (alpha, beta, 1, omega = 1).
HellmannParams reduced_params(ScaledParams const& s);

/// Inverse of reduce_scale given the original C and omega; returns (A, B).
std::pair<double, double> restore_scale(ScaledParams const& s, double C, double omega);

/// V(r) + omega l(l+1)/r^2.
double effective_potential(HellmannParams const& p, QuantumNumbers const& q, double r);

struct EnergyInterval {
    double lower;
    double upper;
};

/// Eigenvalue bracket from the pair of solvable potentials that sandwich V.
///
/// B <= 0: -(A+|B|)/r <= V <= -A/r.
/// B > 0:  -A/r <= V <= -A/r + (B/(eC))/r^2, whose upper edge is solved by an
/// effective angular momentum L with L(L+1) = l(l+1) + B/(e C omega).
EnergyInterval hydrogenic_sandwich(HellmannParams const& p, QuantumNumbers const& q);

/// Exact level of -omega Laplacian - coupling/r at principal number N.
double hydrogenic_level(double coupling, double omega, double N) noexcept;

} // namespace hellmann
