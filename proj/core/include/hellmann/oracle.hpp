#pragma once

// Radial eigensolver for -omega u'' + [omega l(l+1)/r^2 + V(r)] u = E u.
//
// Numerov integration on a uniform grid: outward from r_min with the regular
// series u ~ r^(l+1) (1 + c1 r + c2 r^2), inward from r_max with a decaying
// exponential, matched at the outermost classical turning point. The level is
// isolated by node counting and refined by bisection on the discrete
// Wronskian of the two branches.

#include <iosfwd>
#include <vector>

#include "hellmann/envelope.hpp"
#include "hellmann/model.hpp"

namespace hellmann {

class RadialGrid {
public:
    /// Requires 0 < r_min < r_max and num_points >= 1000.
    RadialGrid(double r_min, double r_max, int num_points);

    double r_min() const noexcept { return r_min_; }
    double r_max() const noexcept { return r_max_; }
    int num_points() const noexcept { return num_points_; }
    double step() const noexcept { return (r_max_ - r_min_) / (num_points_ - 1); }
    double r(int i) const noexcept { return r_min_ + step() * i; }

    /// Half the step over twice the width.
    RadialGrid refined() const;

private:
    double r_min_;
    double r_max_;
    int num_points_;
};

struct RadialSample {
    double r;
    double u;
};

struct EigenSolution {
    double energy;
    int nodes;
    QuantumNumbers quantum;
    std::vector<RadialSample> samples;
    double tolerance;
    RadialGrid grid;
    double tail_ratio; // |u(r_max)| / max |u|
};

struct OracleOptions {
    double tol = 1e-8;
    int num_points = 20001;
    double r_max_factor = 40.0;    // r_max = factor * omega N^2 / A
    double r_min_factor = 1e-6;    // r_min = factor / max(A, C)
    double tail_threshold = 1e-10;
    int max_tail_doublings = 8;
    int max_points = (1 << 23) + 1;
};

/// Starting grid before tail expansion and refinement.
RadialGrid default_grid(HellmannParams const& p, QuantumNumbers const& q,
                        OracleOptions const& opts = {});

/// One solve on a fixed grid, without convergence checks on the grid itself.
EigenSolution solve_on_grid(HellmannParams const& p, QuantumNumbers const& q,
                            RadialGrid const& grid, double tol);

/// Converged n-th level at angular momentum l. r_max is doubled until the tail
/// criterion holds, then the grid is refined (half step, twice r_max) until
/// successive energies differ by less than tol.
///
/// Throws SpectrumError if no level with n - 1 nodes exists in
/// [1.05 * sandwich lower edge, -tol]; NumericalError if refinement does not
/// converge within max_points.
EigenSolution solve_eigenvalue(HellmannParams const& p, QuantumNumbers const& q,
                               RadialGrid const& grid, double tol,
                               OracleOptions const& opts = {});
EigenSolution solve_eigenvalue(HellmannParams const& p, QuantumNumbers const& q,
                               OracleOptions const& opts = {});

/// Strict sign changes of u, ignoring |u| below 1e-12 max|u|.
int count_nodes(EigenSolution const& sol);
int count_nodes(std::vector<RadialSample> const& samples);

struct VerificationReport {
    BoundResult bound;
    EigenSolution oracle;
    bool passed;
    double gap; // |bound - oracle|
};

/// Lower: bound <= oracle + tol; Upper: bound >= oracle - tol;
/// Exact: |bound - oracle| <= tol.
bool direction_holds(BoundDirection d, double bound, double oracle, double tol) noexcept;

VerificationReport verify_bound(HellmannParams const& p, QuantumNumbers const& q, double tol,
                                OracleOptions const& opts = {});

/// Debug dump of the sampled wavefunction, columns r,u.
void write_samples_csv(std::ostream& os, EigenSolution const& sol);

} // namespace hellmann
