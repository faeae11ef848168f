#include "hellmann/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "hellmann/errors.hpp"

namespace hellmann {

RadialGrid::RadialGrid(double r_min, double r_max, int num_points)
    : r_min_(r_min), r_max_(r_max), num_points_(num_points) {
    if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
        throw DomainError("RadialGrid: need 0 < r_min < r_max");
    }
    if (num_points < 1000) throw DomainError("RadialGrid: need at least 1000 points");
}

RadialGrid RadialGrid::refined() const {
    // step' = step / 2 on a span of roughly twice the width
    return RadialGrid(r_min_, r_min_ + 2.0 * (r_max_ - r_min_), 4 * (num_points_ - 1) + 1);
}

namespace {

constexpr double kRescaleAbove = 1e150;
constexpr double kRescaleBy = 1e-150;

// Numerov kernel for u'' = f(r) u with f = g(r) - E/omega:
//   k_{i+1} u_{i+1} = (12 - 10 k_i) u_i - k_{i-1} u_{i-1},  k = 1 - h^2 f / 12.
class RadialProblem {
public:
    RadialProblem(HellmannParams const& p, QuantumNumbers const& q, RadialGrid const& grid)
        : p_(p), q_(q), grid_(grid), g_(grid.num_points()) {
        double const l = q.ell();
        double const w = p.omega();
        for (int i = 0; i < grid.num_points(); ++i) {
            double const r = grid.r(i);
            g_[i] = (evaluate_potential(p, r) + w * l * (l + 1.0) / (r * r)) / w;
        }
        h2_12_ = grid.step() * grid.step() / 12.0;
    }

    int size() const noexcept { return static_cast<int>(g_.size()); }

    double k(int i, double energy) const noexcept {
        return 1.0 - h2_12_ * (g_[i] - energy / p_.omega());
    }

    // Regular series u = r^(l+1) (1 + c1 r + c2 r^2) near the origin, where
    // V ~ (B - A)/r - B C.
    double regular_start(double r, double energy) const noexcept {
        double const l = q_.ell();
        double const w = p_.omega();
        double const z = (p_.A() - p_.B()) / w;
        double const e = (energy + p_.B() * p_.C()) / w;
        double const c1 = -z / (2.0 * l + 2.0);
        double const c2 = (-z * c1 - e) / (2.0 * (2.0 * l + 3.0));
        return std::pow(r, l + 1.0) * (1.0 + r * (c1 + r * c2));
    }

    // Outermost index in the classically allowed region, clamped to the interior.
    int matching_index(double energy) const noexcept {
        double const e = energy / p_.omega();
        int m = -1;
        for (int i = size() - 1; i >= 0; --i) {
            if (g_[i] < e) {
                m = i;
                break;
            }
        }
        if (m < 0) m = size() / 2;
        return std::clamp(m, 2, size() - 3);
    }

    // Nodes of the outward solution across the full grid.
    int outward_nodes(double energy) const {
        double u0 = regular_start(grid_.r(0), energy);
        double u1 = regular_start(grid_.r(1), energy);
        double k0 = k(0, energy);
        double k1 = k(1, energy);
        int nodes = 0;
        for (int i = 1; i + 1 < size(); ++i) {
            double const k2 = k(i + 1, energy);
            double u2 = ((12.0 - 10.0 * k1) * u1 - k0 * u0) / k2;
            if ((u2 < 0.0) != (u1 < 0.0) && u2 != 0.0) ++nodes;
            if (std::abs(u2) > kRescaleAbove) {
                u2 *= kRescaleBy;
                u1 *= kRescaleBy;
            }
            u0 = u1;
            u1 = u2;
            k0 = k1;
            k1 = k2;
        }
        return nodes;
    }

    // Outward values u[0..last].
    std::vector<double> outward(double energy, int last) const {
        std::vector<double> u(last + 1);
        u[0] = regular_start(grid_.r(0), energy);
        u[1] = regular_start(grid_.r(1), energy);
        for (int i = 1; i < last; ++i) {
            u[i + 1] = ((12.0 - 10.0 * k(i, energy)) * u[i] - k(i - 1, energy) * u[i - 1]) /
                       k(i + 1, energy);
            if (std::abs(u[i + 1]) > kRescaleAbove) {
                for (int j = 0; j <= i + 1; ++j) u[j] *= kRescaleBy;
            }
        }
        return u;
    }

    // Inward values u[first..size-1], stored at offset first.
    std::vector<double> inward(double energy, int first) const {
        int const last = size() - 1;
        std::vector<double> u(last - first + 1);
        double const kappa = std::sqrt(std::max(g_[last] - energy / p_.omega(), 0.0));
        u[last - first] = 1.0;
        u[last - first - 1] = std::exp(kappa * grid_.step());
        for (int i = last - 1; i > first; --i) {
            double& next = u[i - 1 - first];
            next = ((12.0 - 10.0 * k(i, energy)) * u[i - first] -
                    k(i + 1, energy) * u[i + 1 - first]) /
                   k(i - 1, energy);
            if (std::abs(next) > kRescaleAbove) {
                for (int j = i - 1 - first; j < static_cast<int>(u.size()); ++j) u[j] *= kRescaleBy;
            }
        }
        return u;
    }

    // Scale-free discrete Wronskian of the outward and inward branches. Its
    // sign does not depend on the matching index.
    double mismatch(double energy) const {
        int const m = matching_index(energy);
        auto const out = outward(energy, m + 1);
        auto const in = inward(energy, m);
        double const w = k(m, energy) * k(m + 1, energy) * (out[m] * in[1] - out[m + 1] * in[0]);
        double const norm = (std::abs(out[m]) + std::abs(out[m + 1])) *
                            (std::abs(in[0]) + std::abs(in[1]));
        return norm > 0.0 ? w / norm : 0.0;
    }

    std::vector<RadialSample> profile(double energy) const {
        int const m = matching_index(energy);
        auto const out = outward(energy, m + 1);
        auto const in = inward(energy, m);
        double const scale = (out[m] * in[0] + out[m + 1] * in[1]) / (in[0] * in[0] + in[1] * in[1]);
        std::vector<RadialSample> samples(size());
        for (int i = 0; i < size(); ++i) {
            double const u = i <= m ? out[i] : scale * in[i - m];
            samples[i] = {grid_.r(i), u};
        }
        return samples;
    }

private:
    HellmannParams p_;
    QuantumNumbers q_;
    RadialGrid grid_;
    std::vector<double> g_;
    double h2_12_;
};

double locate_level(RadialProblem const& problem, HellmannParams const& p,
                    QuantumNumbers const& q, double tol) {
    int const target = q.n() - 1;
    double lo = 1.05 * hydrogenic_sandwich(p, q).lower;
    double hi = -tol;

    int nodes_hi = problem.outward_nodes(hi);
    int nodes_lo = problem.outward_nodes(lo);
    if (nodes_hi <= target) {
        std::ostringstream msg;
        msg << "no bound state with " << target << " nodes above E = " << lo
            << " and below E = " << hi << " (level too shallow for the grid)";
        throw SpectrumError(msg.str());
    }
    if (nodes_lo > target) {
        throw NumericalError("spectral window lower edge already exceeds the target node count");
    }

    // Isolate the level: nodes(lo) == n - 1, nodes(hi) == n.
    for (int iter = 0; nodes_lo != target || nodes_hi != target + 1; ++iter) {
        if (iter > 200) throw NumericalError("node bracketing did not converge");
        double const mid = 0.5 * (lo + hi);
        int const nodes = problem.outward_nodes(mid);
        if (nodes > target) {
            hi = mid;
            nodes_hi = nodes;
        } else {
            lo = mid;
            nodes_lo = nodes;
        }
    }

    double f_lo = problem.mismatch(lo);
    double const f_hi = problem.mismatch(hi);
    bool const use_mismatch = (f_lo < 0.0) != (f_hi < 0.0);
    for (int iter = 0; iter < 200; ++iter) {
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= 1e-15 * std::abs(mid)) break;
        if (use_mismatch) {
            double const f_mid = problem.mismatch(mid);
            if (f_mid == 0.0) return mid;
            if ((f_mid < 0.0) == (f_lo < 0.0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        } else if (problem.outward_nodes(mid) > target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double tail_ratio_of(std::vector<RadialSample> const& samples) {
    double peak = 0.0;
    for (auto const& s : samples) peak = std::max(peak, std::abs(s.u));
    return peak > 0.0 ? std::abs(samples.back().u) / peak : 1.0;
}

} // namespace

RadialGrid default_grid(HellmannParams const& p, QuantumNumbers const& q,
                        OracleOptions const& opts) {
    double const N = q.N();
    double const r_min = opts.r_min_factor / std::max(p.A(), p.C());
    double const r_max = opts.r_max_factor * p.omega() * N * N / p.A();
    return RadialGrid(r_min, r_max, opts.num_points);
}

EigenSolution solve_on_grid(HellmannParams const& p, QuantumNumbers const& q,
                            RadialGrid const& grid, double tol) {
    if (!(tol > 0.0)) throw DomainError("solve_on_grid: tol must be positive");
    RadialProblem const problem(p, q, grid);
    double const energy = locate_level(problem, p, q, tol);
    auto samples = problem.profile(energy);
    double const tail = tail_ratio_of(samples);
    EigenSolution sol{energy, 0, q, std::move(samples), tol, grid, tail};
    sol.nodes = count_nodes(sol);
    return sol;
}

EigenSolution solve_eigenvalue(HellmannParams const& p, QuantumNumbers const& q,
                               RadialGrid const& grid, double tol, OracleOptions const& opts) {
    EigenSolution current = solve_on_grid(p, q, grid, tol);
    for (int i = 0; current.tail_ratio >= opts.tail_threshold; ++i) {
        if (i >= opts.max_tail_doublings) {
            throw NumericalError("solve_eigenvalue: wavefunction tail did not decay below threshold");
        }
        auto const& g = current.grid;
        current = solve_on_grid(
            p, q, RadialGrid(g.r_min(), g.r_min() + 2.0 * (g.r_max() - g.r_min()), 2 * (g.num_points() - 1) + 1),
            tol);
    }
    while (true) {
        auto const finer_grid = current.grid.refined();
        if (finer_grid.num_points() > opts.max_points) {
            std::ostringstream msg;
            msg << "solve_eigenvalue: grid refinement did not converge to tol " << tol
                << " within " << opts.max_points << " points";
            throw NumericalError(msg.str());
        }
        EigenSolution finer = solve_on_grid(p, q, finer_grid, tol);
        bool const converged = std::abs(finer.energy - current.energy) < tol;
        current = std::move(finer);
        if (converged) break;
    }
    if (current.nodes != q.n() - 1) {
        std::ostringstream msg;
        msg << "solve_eigenvalue: converged state has " << current.nodes << " nodes, expected "
            << q.n() - 1;
        throw NumericalError(msg.str());
    }
    return current;
}

EigenSolution solve_eigenvalue(HellmannParams const& p, QuantumNumbers const& q,
                               OracleOptions const& opts) {
    return solve_eigenvalue(p, q, default_grid(p, q, opts), opts.tol, opts);
}

int count_nodes(std::vector<RadialSample> const& samples) {
    double peak = 0.0;
    for (auto const& s : samples) peak = std::max(peak, std::abs(s.u));
    double const floor = 1e-12 * peak;
    int nodes = 0;
    int last_sign = 0;
    for (auto const& s : samples) {
        if (std::abs(s.u) <= floor) continue;
        int const sign = s.u > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

int count_nodes(EigenSolution const& sol) {
    return count_nodes(sol.samples);
}

bool direction_holds(BoundDirection d, double bound, double oracle, double tol) noexcept {
    switch (d) {
    case BoundDirection::Lower: return bound <= oracle + tol;
    case BoundDirection::Upper: return bound >= oracle - tol;
    case BoundDirection::Exact: return std::abs(bound - oracle) <= tol;
    }
    return false;
}

VerificationReport verify_bound(HellmannParams const& p, QuantumNumbers const& q, double tol,
                                OracleOptions const& opts) {
    if (!(tol > 0.0)) throw DomainError("verify_bound: tol must be positive");
    auto bound = envelope_energy(p, q);
    OracleOptions solver = opts;
    solver.tol = std::min(tol, opts.tol);
    auto oracle = solve_eigenvalue(p, q, solver);
    bool const passed = direction_holds(bound.direction, bound.energy, oracle.energy, tol);
    double const gap = std::abs(bound.energy - oracle.energy);
    return {bound, std::move(oracle), passed, gap};
}

void write_samples_csv(std::ostream& os, EigenSolution const& sol) {
    auto const old_precision = os.precision(12);
    os << "r,u\n";
    for (auto const& s : sol.samples) os << s.r << ',' << s.u << '\n';
    os.precision(old_precision);
}

} // namespace hellmann
