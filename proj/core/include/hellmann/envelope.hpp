#pragma once

// Semi-classical bounds from the envelope of tangential Coulomb potentials.
//
// With the basis h(r) = -1/r the kinetic potential is exactly
// hbar(s) = -sqrt(s)/N, N = n + l. Writing V = g(h), the approximation
// fbar(s) ~ g(hbar(s)) turns the basis energy formula min_s {s + v hbar(s)}
// into
//
//     E_nl ~ min_{r>0} { omega N^2/r^2 + V(r) },
//
// a lower bound when g is convex (B > 0), an upper bound when g is concave
// (B < 0) and exact for B = 0.

#include "hellmann/minimize.hpp"
#include "hellmann/model.hpp"

namespace hellmann {

struct BoundResult {
    double energy;
    BoundDirection direction;
    double minimizer_r;
    QuantumNumbers quantum;
};

/// Affine-in-h potential a + b h(r) touching V at r = contact_t.
struct TangentCoefficients {
    double contact_t;
    double a;
    double b;
};

struct EnvelopeOptions {
    int scan_points = 2000;
    double span = 1e4; // scan r in [r0/span, r0*span], r0 = 2 omega N^2 / A
    double rel_width = 1e-12;
};

double kinetic_potential_basis(QuantumNumbers const& q, double s);

/// g(hbar(s)): the approximate kinetic potential of V.
double approx_kinetic_potential(HellmannParams const& p, QuantumNumbers const& q, double s);

/// Global minimizer of omega N^2/r^2 + V(r). Throws NumericalError when the
/// scan cannot bracket an interior minimum.
BoundResult envelope_energy(HellmannParams const& p, QuantumNumbers const& q,
                            EnvelopeOptions const& opts = {});

TangentCoefficients tangent_potential(HellmannParams const& p, double t);

/// a(t) - b(t)^2 / (4 omega N^2): exact level of the tangential potential.
/// Throws DomainError if b(t) <= 0 (no bound states).
double tangent_bound_energy(HellmannParams const& p, QuantumNumbers const& q, double t);

struct TangentOptimum {
    double energy;
    double contact_t;
};

/// Best tangential bound: sup over t for convex g, inf for concave g,
/// restricted to contact points with b(t) > 0.
TangentOptimum optimal_tangent_bound(HellmannParams const& p, QuantumNumbers const& q,
                                     EnvelopeOptions const& opts = {});

struct SubstitutionCheck {
    double s;            // omega-free s = N^2 / r^2
    double objective_s;  // omega s + g(hbar(s))
    double objective_r;  // omega N^2 / r^2 + V(r)
};

/// Evaluates both sides of the s <-> r change of variables at r.
SubstitutionCheck substitution_check(HellmannParams const& p, QuantumNumbers const& q, double r);

} // namespace hellmann
