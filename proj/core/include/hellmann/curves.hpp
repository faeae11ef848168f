#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hellmann/model.hpp"
#include "hellmann/oracle.hpp"

namespace hellmann {

/// One point {v, E(v)} of the coupling curve of -omega Laplacian + v V(r),
/// parametrised by the contact radius r:
///   v = 2 omega N^2 / (r^3 V'(r)),   E = omega N^2 / r^2 + v V(r).
struct EnergyCurvePoint {
    double v;
    double energy;
    double contact_r;
    double scaled; // energy / v^2
};

enum class Spacing { Log, Linear };

/// Throws DomainError naming the first sampled r where V'(r) <= 0.
std::vector<EnergyCurvePoint> energy_curve(HellmannParams const& p, QuantumNumbers const& q,
                                           double r_min, double r_max, int steps,
                                           Spacing spacing = Spacing::Log);

EnergyCurvePoint curve_point(HellmannParams const& p, QuantumNumbers const& q, double r);

struct SweepRow {
    double B;
    double bound;
    BoundDirection direction;
    std::optional<double> oracle;
    std::optional<double> gap;
    std::string status; // "ok", "violation" or "error: <what>"

    bool ok() const noexcept { return status == "ok"; }
};

struct SweepSpec {
    double A = 2.0;
    double C = 1.0;
    QuantumNumbers quantum{1, 0};
    double B_min = -2.0;
    double B_max = 2.0;
    int steps = 81;
    bool with_oracle = false;
    double tol = 1e-8;
};

/// Uniform B values B_min + (B_max - B_min) i/(steps - 1), endpoints included.
/// B_min == B_max yields a single row. Per-row failures are recorded in the
/// row status rather than thrown.
std::vector<SweepRow> sweep_b(SweepSpec const& spec);

} // namespace hellmann
