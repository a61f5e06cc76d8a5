#include "phaser/sweep.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phaser {

void SweepSpec::validate() const
{
    base.validate();
    if (count < 2)
        throw std::invalid_argument("SweepSpec: count must be >= 2");
    if (!(start < stop))
        throw std::invalid_argument("SweepSpec: start must be < stop");
    if (log_spaced && !(start > 0.0))
        throw std::invalid_argument("SweepSpec: log-spaced grid needs start > 0");
    if (n_max < 1)
        throw std::invalid_argument("SweepSpec: n_max must be >= 1");
    if (hamiltonian != HamiltonianKind::full && !base.identical_emitters())
        throw std::invalid_argument("SweepSpec: effective sweeps need identical emitters");
}

std::vector<double> SweepSpec::grid() const
{
    std::vector<double> xs(count);
    if (log_spaced) {
        double la = std::log10(start), lb = std::log10(stop);
        for (int i = 0; i < count; ++i)
            xs[i] = std::pow(10.0, la + (lb - la) * i / (count - 1));
    } else {
        for (int i = 0; i < count; ++i)
            xs[i] = start + (stop - start) * i / (count - 1);
    }
    return xs;
}

SystemParams params_at(const SweepSpec& spec, double x)
{
    SystemParams p = spec.base;
    if (spec.variable == SweepVariable::delta_over_omega_ph)
        p.omega_L = p.omega_cv[0] + x * p.omega_ph;
    else
        p.Omega = mev_to_radfs(x);
    return p;
}

namespace {

Operator point_hamiltonian(const SweepSpec& spec, const SystemParams& p,
                           const HilbertConfig& config)
{
    switch (spec.hamiltonian) {
    case HamiltonianKind::full:
        return build_h0(p, config) + build_hi(p, config);
    case HamiltonianKind::effective:
        return build_h_eff(p, config, true);
    case HamiltonianKind::effective_no_qdqd:
        return build_h_eff(p, config, false);
    }
    throw std::logic_error("unreachable");
}

SweepPoint evaluate_point(const SweepSpec& spec, double x)
{
    SweepPoint pt;
    pt.x = x;
    try {
        SystemParams p = params_at(spec, x);
        HilbertConfig config(p.n_qd(), spec.n_max);
        Operator h = point_hamiltonian(spec, p, config);
        Liouvillian l = build_liouvillian(h, build_dissipators(p, config));
        SolverOptions opts = spec.solver;
        opts.permutation_symmetric = p.identical_emitters();
        SteadyStateResult ss = steady_state(l, opts);
        ss.rho.validate();
        pt.record = make_record(ss.rho, ss.residual, spec.g2_floor);
        if (pt.record.truncation >= spec.truncation_limit) {
            pt.failed = true;
            pt.flag = "truncation";
        }
    } catch (const std::exception& e) {
        pt.failed = true;
        pt.flag = e.what();
    }
    return pt;
}

int resolve_workers(int workers)
{
    if (workers > 0)
        return workers;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace

SweepSeries run_sweep(const SweepSpec& spec)
{
    spec.validate();
    std::vector<double> xs = spec.grid();
    SweepSeries series{spec, std::vector<SweepPoint>(xs.size())};
    const int n = static_cast<int>(xs.size());
    const int workers = resolve_workers(spec.workers);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < n; ++i)
        series.points[i] = evaluate_point(spec, xs[i]);
    bool all_failed = std::all_of(series.points.begin(), series.points.end(),
                                  [](const SweepPoint& p) { return p.failed; });
    if (all_failed)
        throw std::runtime_error("run_sweep: every grid point failed");
    return series;
}

SweepSeries run_sweep_serial(const SweepSpec& spec)
{
    spec.validate();
    std::vector<double> xs = spec.grid();
    SweepSeries series{spec, {}};
    series.points.reserve(xs.size());
    for (double x : xs)
        series.points.push_back(evaluate_point(spec, x));
    bool all_failed = std::all_of(series.points.begin(), series.points.end(),
                                  [](const SweepPoint& p) { return p.failed; });
    if (all_failed)
        throw std::runtime_error("run_sweep: every grid point failed");
    return series;
}

std::vector<ResonancePeak> find_peaks(const SweepSeries& series, double min_height)
{
    const auto& pts = series.points;
    int valid = 0;
    for (const auto& p : pts)
        if (!p.failed)
            ++valid;
    if (valid < 5)
        throw std::invalid_argument("find_peaks: need at least 5 valid points");

    std::vector<ResonancePeak> peaks;
    const int n = static_cast<int>(pts.size());
    auto y = [&](int i) { return pts[i].record.phonon_number; };
    for (int i = 1; i + 1 < n; ++i) {
        if (pts[i].failed || pts[i - 1].failed || pts[i + 1].failed)
            continue;
        if (!(y(i) > y(i - 1) && y(i) > y(i + 1)))
            continue;
        if (y(i) <= min_height)
            continue;
        ResonancePeak pk;
        // 3-point parabolic refinement around the grid maximum.
        double d1 = y(i - 1), d2 = y(i), d3 = y(i + 1);
        double denom = d1 - 2.0 * d2 + d3;
        double shift = denom != 0.0 ? 0.5 * (d1 - d3) / denom : 0.0;
        double dx = pts[i + 1].x - pts[i].x;
        pk.position = pts[i].x + shift * dx;
        pk.height = d2 - 0.25 * (d1 - d3) * shift;
        pk.g2_at_peak = pts[i].record.g2_zero;

        // FWHM from linear interpolation to half height on each side.
        double half = pk.height / 2.0;
        double left = pts.front().x, right = pts.back().x;
        bool left_clipped = true, right_clipped = true;
        for (int j = i; j > 0; --j) {
            if (pts[j - 1].failed)
                break;
            if (y(j - 1) < half && y(j) >= half) {
                double f = (half - y(j - 1)) / (y(j) - y(j - 1));
                left = pts[j - 1].x + f * (pts[j].x - pts[j - 1].x);
                left_clipped = false;
                break;
            }
        }
        for (int j = i; j + 1 < n; ++j) {
            if (pts[j + 1].failed)
                break;
            if (y(j + 1) < half && y(j) >= half) {
                double f = (half - y(j + 1)) / (y(j) - y(j + 1));
                right = pts[j + 1].x - f * (pts[j + 1].x - pts[j].x);
                right_clipped = false;
                break;
            }
        }
        pk.fwhm = right - left;
        pk.fwhm_is_lower_bound = left_clipped || right_clipped;
        peaks.push_back(pk);
    }
    return peaks;
}

ComparisonReport compare_predictions(const std::vector<ResonancePeak>& peaks,
                                     const std::vector<ResonancePrediction>& predicted,
                                     double tol)
{
    ComparisonReport rep;
    rep.tolerance = tol;
    std::vector<bool> peak_used(peaks.size(), false);
    std::vector<bool> pred_used(predicted.size(), false);

    // Greedy nearest matching over all remaining pairs.
    while (true) {
        double best = std::numeric_limits<double>::infinity();
        int bi = -1, bj = -1;
        for (std::size_t i = 0; i < predicted.size(); ++i) {
            if (pred_used[i])
                continue;
            for (std::size_t j = 0; j < peaks.size(); ++j) {
                if (peak_used[j])
                    continue;
                double d = std::abs(peaks[j].position - predicted[i].delta);
                if (d < best) {
                    best = d;
                    bi = static_cast<int>(i);
                    bj = static_cast<int>(j);
                }
            }
        }
        if (bi < 0)
            break;
        pred_used[bi] = true;
        peak_used[bj] = true;
        rep.matches.push_back({predicted[bi].label, predicted[bi].delta,
                               peaks[bj].position, best});
    }
    for (std::size_t j = 0; j < peaks.size(); ++j)
        if (!peak_used[j])
            rep.unmatched_peaks.push_back(peaks[j].position);
    for (std::size_t i = 0; i < predicted.size(); ++i)
        if (!pred_used[i])
            rep.unmatched_predictions.push_back(predicted[i].label);
    rep.pass = rep.unmatched_predictions.empty() &&
               std::all_of(rep.matches.begin(), rep.matches.end(),
                           [&](const PredictionMatch& m) { return m.deviation <= tol; });
    return rep;
}

namespace {

WitnessPoint evaluate_witness_point(const SweepSpec& spec, DetuningChoice detuning,
                                    double x)
{
    WitnessPoint pt;
    pt.x = x;
    try {
        SystemParams two = spec.base;
        two.Omega = mev_to_radfs(x);
        auto preds = predict_resonances(two, 2);
        const char* want = detuning == DetuningChoice::collective_resonance
                               ? "collective"
                               : "single_1";
        double delta_two = 0.0;
        for (const auto& r : preds)
            if (r.label == want)
                delta_two = r.delta;
        two.omega_L = two.omega_cv[0] + delta_two;

        SystemParams one = two;
        one.omega_cv.resize(1);
        one.g.resize(1);
        one.omega_L = one.omega_cv[0] + predict_resonances(one, 1)[0].delta;

        auto solve = [&](const SystemParams& p) {
            HilbertConfig config(p.n_qd(), spec.n_max);
            Liouvillian l = build_liouvillian(
                build_h0(p, config) + build_hi(p, config),
                build_dissipators(p, config));
            SolverOptions opts = spec.solver;
            opts.permutation_symmetric = p.identical_emitters();
            return steady_state(l, opts);
        };
        SteadyStateResult ss2 = solve(two);
        SteadyStateResult ss1 = solve(one);
        ss2.rho.validate();
        ss1.rho.validate();
        pt.record = make_record(ss2.rho, ss2.residual, spec.g2_floor);
        pt.n_two = pt.record.phonon_number;
        pt.n_one = phonon_number(ss1.rho);
        double trunc1 = truncation_metric(ss1.rho);
        if (pt.record.truncation >= spec.truncation_limit ||
            trunc1 >= spec.truncation_limit) {
            pt.failed = true;
            pt.flag = "truncation";
        }
        if (pt.n_one >= spec.g2_floor)
            pt.witness = phonance_witness(pt.n_two, pt.n_one);
        else
            pt.flag = pt.flag.empty() ? "n_one_below_floor" : pt.flag;
    } catch (const std::exception& e) {
        pt.failed = true;
        pt.flag = e.what();
    }
    return pt;
}

} // namespace

WitnessSeries run_witness_sweep(const SweepSpec& spec, DetuningChoice detuning)
{
    spec.validate();
    if (spec.variable != SweepVariable::omega_pump)
        throw std::invalid_argument("run_witness_sweep: variable must be omega_pump");
    if (spec.base.n_qd() != 2)
        throw std::invalid_argument("run_witness_sweep: base params must have two emitters");

    std::vector<double> xs = spec.grid();
    WitnessSeries series{spec, detuning, std::vector<WitnessPoint>(xs.size())};
    const int n = static_cast<int>(xs.size());
    const int workers = resolve_workers(spec.workers);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < n; ++i)
        series.points[i] = evaluate_witness_point(spec, detuning, xs[i]);
    bool all_failed = std::all_of(series.points.begin(), series.points.end(),
                                  [](const WitnessPoint& p) { return p.failed; });
    if (all_failed)
        throw std::runtime_error("run_witness_sweep: every grid point failed");
    return series;
}

} // namespace phaser
