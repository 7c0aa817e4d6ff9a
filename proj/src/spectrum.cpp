#include "ramanqed/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "ramanqed/dissipation.hpp"
#include "ramanqed/floquet.hpp"
#include "ramanqed/sweep.hpp"

namespace ramanqed {

namespace {

void require_ascending(const std::vector<double>& grid, const char* name) {
    if (grid.empty()) {
        throw std::invalid_argument(std::string(name) + " grid is empty");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument(std::string(name) +
                                        " grid must be strictly ascending");
        }
    }
}

std::string point_label(const char* axis, std::size_t index, double value) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s[%zu] = %.6g: ", axis, index, value);
    return buf;
}

}  // namespace

void SweepDiagnostics::absorb(const PointDiagnostics& d) {
    n_fock = d.n_fock;
    n_dressed = d.n_dressed;
    max_n_floquet = std::max(max_n_floquet, d.n_floquet_used);
    dropped_up_total += d.dropped_up;
    max_residual = std::max(max_residual, d.residual);
    max_convergence_delta = std::max(max_convergence_delta, d.convergence_delta);
    min_eigenvalue = std::min(min_eigenvalue, d.min_eigenvalue);
}

Operator sensor_collector(const EigenSystem& eig, double omega_s, int n_fock) {
    const Operator sx = sensor_operator(pauli(Axis::x), n_fock);
    return dressed_jump(eig, sx, WeightRule::freq_ratio(omega_s),
                        DecayChannel::sensor, 1.0)
        .matrix;
}

double sensor_emission(const Operator& rho0, const Operator& collector) {
    const Eigen::Index m = rho0.rows();
    if (collector.rows() < m) {
        throw std::invalid_argument(
            "collector is smaller than the density matrix");
    }
    const Operator c = collector.topLeftCorner(m, m);
    const Complex val = (rho0 * (c.adjoint() * c)).trace();
    if (std::abs(val.imag()) > 1e-10) {
        throw std::runtime_error(
            "emission rate has a non-negligible imaginary part");
    }
    double out = val.real();
    if (out < 0.0) {
        if (out < -1e-12) {
            throw std::runtime_error("emission rate is negative");
        }
        out = 0.0;
    }
    return out;
}

SpectrumPoint solve_single_point(const ModelParams& p, double omega_s,
                                 int n_fock) {
    ModelParams q = p;
    q.omega_s = omega_s;
    q.validate();

    const Operator h = build_hamiltonian(q, true, n_fock);
    const EigenSystem eig = diagonalize(h);
    int dropped = 0;
    const auto jumps = standard_jumps(q, eig, n_fock, &dropped);
    const LiouvillianParts parts = build_liouvillian(q, eig, jumps, n_fock);
    const FloquetSolution sol = steady_state(parts, q.n_floquet);
    const Operator collector = sensor_collector(eig, omega_s, n_fock);

    SpectrumPoint out;
    out.omega_s = omega_s;
    out.intensity = sensor_emission(sol.rho0, collector);
    out.diagnostics.n_fock = n_fock;
    out.diagnostics.n_dressed = parts.dim;
    out.diagnostics.n_floquet_used = sol.n_floquet_used;
    out.diagnostics.dropped_up = dropped;
    out.diagnostics.residual = sol.residual;
    out.diagnostics.convergence_delta = sol.convergence_delta;
    out.diagnostics.min_eigenvalue = sol.min_eigenvalue;
    return out;
}

SpectrumCurve emission_spectrum(const ModelParams& p,
                                const std::vector<double>& omega_s_grid,
                                int workers) {
    p.validate();
    require_ascending(omega_s_grid, "omega_s");
    const int n_fock = resolve_n_fock(p);

    std::vector<SpectrumPoint> points(omega_s_grid.size());
    parallel_for_indexed(omega_s_grid.size(), workers, [&](std::size_t i) {
        try {
            points[i] = solve_single_point(p, omega_s_grid[i], n_fock);
        } catch (const std::exception& e) {
            throw std::runtime_error(
                point_label("omega_s", i, omega_s_grid[i]) + e.what());
        }
    });

    SpectrumCurve curve;
    curve.omega_s_grid = omega_s_grid;
    curve.intensity.resize(points.size());
    curve.params = p;
    for (std::size_t i = 0; i < points.size(); ++i) {
        curve.intensity[i] = points[i].intensity;
        curve.diagnostics.absorb(points[i].diagnostics);
    }
    return curve;
}

SpectrumMap excitation_emission_map(const ModelParams& p,
                                    const std::vector<double>& omega_L_grid,
                                    const std::vector<double>& omega_s_grid,
                                    int workers) {
    p.validate();
    require_ascending(omega_L_grid, "omega_L");
    require_ascending(omega_s_grid, "omega_s");
    const int n_fock = resolve_n_fock(p);

    const std::size_t n_rows = omega_L_grid.size();
    const std::size_t n_cols = omega_s_grid.size();
    std::vector<SpectrumPoint> points(n_rows * n_cols);
    parallel_for_indexed(points.size(), workers, [&](std::size_t k) {
        const std::size_t row = k / n_cols;
        const std::size_t col = k % n_cols;
        ModelParams q = p;
        q.omega_L = omega_L_grid[row];
        try {
            points[k] = solve_single_point(q, omega_s_grid[col], n_fock);
        } catch (const std::exception& e) {
            throw std::runtime_error(
                point_label("omega_L", row, omega_L_grid[row]) +
                point_label("omega_s", col, omega_s_grid[col]) + e.what());
        }
    });

    SpectrumMap map;
    map.omega_L_grid = omega_L_grid;
    map.omega_s_grid = omega_s_grid;
    map.temperature = p.T;
    map.params = p;
    map.intensity.resize(static_cast<Eigen::Index>(n_rows),
                         static_cast<Eigen::Index>(n_cols));
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto row = static_cast<Eigen::Index>(k / n_cols);
        const auto col = static_cast<Eigen::Index>(k % n_cols);
        map.intensity(row, col) = points[k].intensity;
        map.diagnostics.absorb(points[k].diagnostics);
    }
    return map;
}

double peak_intensity(const SpectrumCurve& curve, double center,
                      double half_window) {
    if (!(half_window > 0.0)) {
        throw std::invalid_argument("half_window must be positive");
    }
    const auto& grid = curve.omega_s_grid;
    const double lo = center - half_window;
    const double hi = center + half_window;
    if (grid.empty() || lo < grid.front() || hi > grid.back()) {
        throw std::out_of_range("peak window extends outside the grid");
    }
    const auto first = std::lower_bound(grid.begin(), grid.end(), lo);
    const auto last = std::upper_bound(grid.begin(), grid.end(), hi);
    const auto a = static_cast<std::size_t>(first - grid.begin());
    const auto b = static_cast<std::size_t>(last - grid.begin());
    if (b - a < 2) {
        throw std::out_of_range("peak window contains fewer than two samples");
    }

    const double x0 = grid[a];
    const double x1 = grid[b - 1];
    const double y0 = curve.intensity[a];
    const double y1 = curve.intensity[b - 1];
    const double slope = (y1 - y0) / (x1 - x0);
    auto baseline = [&](double x) { return y0 + slope * (x - x0); };

    double integral = 0.0;
    for (std::size_t i = a; i + 1 < b; ++i) {
        const double fa = curve.intensity[i] - baseline(grid[i]);
        const double fb = curve.intensity[i + 1] - baseline(grid[i + 1]);
        integral += 0.5 * (fa + fb) * (grid[i + 1] - grid[i]);
    }
    return std::max(integral, 0.0);
}

PeakLocation strongest_local_max(const std::vector<double>& grid,
                                 const std::vector<double>& values, double lo,
                                 double hi) {
    if (grid.size() != values.size() || grid.size() < 3) {
        throw std::invalid_argument("need at least three samples");
    }
    bool found = false;
    PeakLocation best;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (grid[i] < lo || grid[i] > hi) continue;
        if (values[i] < values[i - 1] || values[i] < values[i + 1]) continue;
        if (!found || values[i] > best.height) {
            best.omega = grid[i];
            best.height = values[i];
            best.index = i;
            found = true;
        }
    }
    if (!found) {
        throw std::runtime_error("no local maximum inside the window");
    }
    return best;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("grid needs at least two points");
    if (!(hi > lo)) throw std::invalid_argument("grid range is empty");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

std::vector<double> zoom_grid(double center, double half_width, int n) {
    if (!(half_width > 0.0)) {
        throw std::invalid_argument("zoom half-width must be positive");
    }
    return linear_grid(center - half_width, center + half_width, n);
}

double normalize_global(std::vector<double>& values) {
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, v);
    if (peak > 0.0) {
        for (double& v : values) v /= peak;
    }
    return peak;
}

double normalize_global(Eigen::MatrixXd& values) {
    const double peak = values.size() > 0 ? values.maxCoeff() : 0.0;
    if (peak > 0.0) values /= peak;
    return peak;
}

}  // namespace ramanqed
