#include "hellmann/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hellmann/errors.hpp"

namespace hellmann {

namespace {

void require_positive_radius(double r, char const* what) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError(std::string(what) + ": radius must be positive and finite, got " +
                          std::to_string(r));
    }
}

} // namespace

HellmannParams::HellmannParams(double A, double B, double C, double omega)
    : A_(A), B_(B), C_(C), omega_(omega) {
    if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C) || !std::isfinite(omega)) {
        throw DomainError("HellmannParams: parameters must be finite");
    }
    if (!(A > 0.0)) throw DomainError("HellmannParams: A must be positive");
    if (!(C > 0.0)) throw DomainError("HellmannParams: C must be positive");
    if (!(omega > 0.0)) throw DomainError("HellmannParams: omega must be positive");
}

HellmannParams HellmannParams::scaled_by(double v) const {
    if (!(v > 0.0)) throw DomainError("HellmannParams::scaled_by: coupling must be positive");
    return HellmannParams(v * A_, v * B_, C_, omega_);
}

QuantumNumbers::QuantumNumbers(int n, int ell) : n_(n), ell_(ell) {
    if (n < 1) throw DomainError("QuantumNumbers: n must be >= 1");
    if (ell < 0) throw DomainError("QuantumNumbers: ell must be >= 0");
}

std::string_view to_string(Convexity c) noexcept {
    switch (c) {
    case Convexity::Convex: return "convex";
    case Convexity::Concave: return "concave";
    case Convexity::Affine: return "affine";
    }
    return "?";
}

std::string_view to_string(BoundDirection d) noexcept {
    switch (d) {
    case BoundDirection::Lower: return "lower";
    case BoundDirection::Upper: return "upper";
    case BoundDirection::Exact: return "exact";
    }
    return "?";
}

double evaluate_potential(HellmannParams const& p, double r) {
    require_positive_radius(r, "evaluate_potential");
    return (-p.A() + p.B() * std::exp(-p.C() * r)) / r;
}

double potential_derivative(HellmannParams const& p, double r) {
    require_positive_radius(r, "potential_derivative");
    double const cr = p.C() * r;
    return (p.A() - p.B() * std::exp(-cr) * (1.0 + cr)) / (r * r);
}

double transform_g(HellmannParams const& p, double h) {
    if (!(h < 0.0) || !std::isfinite(h)) {
        throw DomainError("transform_g: h must be negative, got " + std::to_string(h));
    }
    return p.A() * h - p.B() * h * std::exp(p.C() / h);
}

double g_second_derivative(HellmannParams const& p, double r) {
    require_positive_radius(r, "g_second_derivative");
    double const C = p.C();
    return p.B() * C * C * r * r * r * std::exp(-C * r);
}

Convexity convexity_class(HellmannParams const& p) noexcept {
    if (p.B() > 0.0) return Convexity::Convex;
    if (p.B() < 0.0) return Convexity::Concave;
    return Convexity::Affine;
}

BoundDirection bound_direction(Convexity c) noexcept {
    switch (c) {
    case Convexity::Convex: return BoundDirection::Lower;
    case Convexity::Concave: return BoundDirection::Upper;
    case Convexity::Affine: return BoundDirection::Exact;
    }
    return BoundDirection::Exact;
}

ScaledParams reduce_scale(HellmannParams const& p) noexcept {
    double const wc = p.omega() * p.C();
    return {p.A() / wc, p.B() / wc, p.C() * p.C() * p.omega()};
}

HellmannParams reduced_params(ScaledParams const& s) {
    return HellmannParams(s.alpha, s.beta, 1.0, 1.0);
}

std::pair<double, double> restore_scale(ScaledParams const& s, double C, double omega) {
    if (!(C > 0.0) || !(omega > 0.0)) {
        throw DomainError("restore_scale: C and omega must be positive");
    }
    double const wc = omega * C;
    return {s.alpha * wc, s.beta * wc};
}

double effective_potential(HellmannParams const& p, QuantumNumbers const& q, double r) {
    double const l = q.ell();
    return evaluate_potential(p, r) + p.omega() * l * (l + 1.0) / (r * r);
}

double hydrogenic_level(double coupling, double omega, double N) noexcept {
    return -coupling * coupling / (4.0 * omega * N * N);
}

EnergyInterval hydrogenic_sandwich(HellmannParams const& p, QuantumNumbers const& q) {
    double const w = p.omega();
    double const N = q.N();
    if (p.B() <= 0.0) {
        return {hydrogenic_level(p.A() + std::abs(p.B()), w, N), hydrogenic_level(p.A(), w, N)};
    }
    // max of r exp(-C r) is 1/(e C), so B exp(-C r)/r <= (B/(e C))/r^2.
    double const barrier = p.B() / (std::numbers::e * p.C());
    double const l = q.ell();
    double const L = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * l * (l + 1.0) + 4.0 * barrier / w));
    return {hydrogenic_level(p.A(), w, N), hydrogenic_level(p.A(), w, q.n() + L)};
}

} // namespace hellmann
