#include "hellmann/curves.hpp"

#include <cmath>
#include <sstream>

#include "hellmann/envelope.hpp"
#include "hellmann/errors.hpp"

namespace hellmann {

EnergyCurvePoint curve_point(HellmannParams const& p, QuantumNumbers const& q, double r) {
    double const dv = potential_derivative(p, r);
    if (!(dv > 0.0)) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "energy_curve: V'(r) = " << dv << " <= 0 at r = " << r
            << "; the coupling v would not be positive";
        throw DomainError(msg.str());
    }
    double const N = q.N();
    double const kinetic = p.omega() * N * N;
    double const v = 2.0 * kinetic / (r * r * r * dv);
    double const energy = kinetic / (r * r) + v * evaluate_potential(p, r);
    return {v, energy, r, energy / (v * v)};
}

std::vector<EnergyCurvePoint> energy_curve(HellmannParams const& p, QuantumNumbers const& q,
                                           double r_min, double r_max, int steps,
                                           Spacing spacing) {
    if (!(r_min > 0.0) || !(r_max > r_min)) {
        throw DomainError("energy_curve: need 0 < r_min < r_max");
    }
    if (steps < 2) throw DomainError("energy_curve: need at least 2 steps");
    std::vector<EnergyCurvePoint> points;
    points.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        double const t = static_cast<double>(i) / (steps - 1);
        double r = spacing == Spacing::Log
                       ? std::exp(std::log(r_min) + t * (std::log(r_max) - std::log(r_min)))
                       : r_min + t * (r_max - r_min);
        if (i == steps - 1) r = r_max;
        if (i == 0) r = r_min;
        points.push_back(curve_point(p, q, r));
    }
    return points;
}

std::vector<SweepRow> sweep_b(SweepSpec const& spec) {
    if (spec.B_min > spec.B_max) throw DomainError("sweep_b: need B_min <= B_max");
    if (spec.steps < 2) throw DomainError("sweep_b: need at least 2 steps");
    int const rows = spec.B_min == spec.B_max ? 1 : spec.steps;

    std::vector<SweepRow> out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) {
        double const B =
            rows == 1 ? spec.B_min
                      : spec.B_min + (spec.B_max - spec.B_min) * i / (spec.steps - 1);
        SweepRow row{B, std::nan(""), BoundDirection::Exact, std::nullopt, std::nullopt, "ok"};
        try {
            HellmannParams const p(spec.A, B, spec.C);
            auto const bound = envelope_energy(p, spec.quantum);
            row.bound = bound.energy;
            row.direction = bound.direction;
            if (spec.with_oracle) {
                OracleOptions opts;
                opts.tol = spec.tol;
                auto const sol = solve_eigenvalue(p, spec.quantum, opts);
                row.oracle = sol.energy;
                row.gap = std::abs(bound.energy - sol.energy);
                if (!direction_holds(bound.direction, bound.energy, sol.energy, spec.tol)) {
                    row.status = "violation";
                }
            }
        } catch (std::exception const& e) {
            row.status = std::string("error: ") + e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace hellmann
