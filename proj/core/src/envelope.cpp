#include "hellmann/envelope.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hellmann/errors.hpp"

namespace hellmann {

namespace {

double reference_radius(HellmannParams const& p, QuantumNumbers const& q) {
    double const N = q.N();
    return 2.0 * p.omega() * N * N / p.A();
}

LogScan scan_around(double r0, EnvelopeOptions const& opts) {
    return {r0 / opts.span, r0 * opts.span, opts.scan_points, opts.rel_width};
}

} // namespace

double kinetic_potential_basis(QuantumNumbers const& q, double s) {
    if (!(s > 0.0)) throw DomainError("kinetic_potential_basis: s must be positive");
    return -std::sqrt(s) / q.N();
}

double approx_kinetic_potential(HellmannParams const& p, QuantumNumbers const& q, double s) {
    return transform_g(p, kinetic_potential_basis(q, s));
}

BoundResult envelope_energy(HellmannParams const& p, QuantumNumbers const& q,
                            EnvelopeOptions const& opts) {
    double const r0 = reference_radius(p, q);
    auto const direction = bound_direction(convexity_class(p));
    if (direction == BoundDirection::Exact) {
        return {hydrogenic_level(p.A(), p.omega(), q.N()), direction, r0, q};
    }
    double const kinetic = p.omega() * q.N() * q.N();
    auto objective = [&](double r) { return kinetic / (r * r) + evaluate_potential(p, r); };
    Minimum const m = scan_minimize(objective, scan_around(r0, opts));
    return {m.value, direction, m.x, q};
}

TangentCoefficients tangent_potential(HellmannParams const& p, double t) {
    double const v = evaluate_potential(p, t);
    double const dv = potential_derivative(p, t);
    // h(t) = -1/t, h'(t) = 1/t^2
    return {t, v + t * dv, t * t * dv};
}

double tangent_bound_energy(HellmannParams const& p, QuantumNumbers const& q, double t) {
    auto const tc = tangent_potential(p, t);
    if (!(tc.b > 0.0)) {
        throw DomainError("tangent_bound_energy: tangential coupling b(t) = " +
                          std::to_string(tc.b) + " is not attractive at t = " +
                          std::to_string(t));
    }
    return tc.a + hydrogenic_level(tc.b, p.omega(), q.N());
}

TangentOptimum optimal_tangent_bound(HellmannParams const& p, QuantumNumbers const& q,
                                     EnvelopeOptions const& opts) {
    double const r0 = reference_radius(p, q);
    auto const shape = convexity_class(p);
    if (shape == Convexity::Affine) return {tangent_bound_energy(p, q, r0), r0};

    // Convex: every tangent lies below V, keep the highest bound.
    double const sign = shape == Convexity::Convex ? -1.0 : 1.0;
    auto objective = [&](double t) {
        auto const tc = tangent_potential(p, t);
        if (!(tc.b > 0.0)) return std::numeric_limits<double>::infinity();
        return sign * (tc.a + hydrogenic_level(tc.b, p.omega(), q.N()));
    };
    Minimum const m = scan_minimize(objective, scan_around(r0, opts));
    return {sign * m.value, m.x};
}

SubstitutionCheck substitution_check(HellmannParams const& p, QuantumNumbers const& q, double r) {
    if (!(r > 0.0)) throw DomainError("substitution_check: r must be positive");
    double const N = q.N();
    double const s = N * N / (r * r);
    double const lhs = p.omega() * s + approx_kinetic_potential(p, q, s);
    double const rhs = p.omega() * N * N / (r * r) + evaluate_potential(p, r);
    return {s, lhs, rhs};
}

} // namespace hellmann
