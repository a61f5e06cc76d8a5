// Acceptance gate: end-to-end checks of the resonance structure, coherence
// statistics, effective-model validation, and output determinism.  Prints one
// pass/fail line per criterion; exit status is the number of failures.

#include "phaser/cli.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace phaser;

namespace {

double now_seconds()
{
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

void progress(const std::string& msg)
{
    std::fprintf(stderr, "[%8.1f s] %s\n", now_seconds(), msg.c_str());
    std::fflush(stderr);
}

struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string detail;
};

std::vector<CriterionResult> g_results;

// --quick shrinks every grid for a fast smoke run; precision criteria are
// expected to fail in that mode.
int g_count = 201;
int g_wcount = 61;

void report(int id, bool pass, const std::string& detail)
{
    g_results.push_back({id, pass, detail});
    progress("criterion " + std::to_string(id) + (pass ? " PASS: " : " FAIL: ") +
             detail);
}

// Criterion 2 accumulator: every steady state produced anywhere in this run
// must satisfy the full state-validity contract.
struct ValidityLedger {
    long states = 0;
    long invalid = 0;
    std::vector<std::string> notes;

    void add(bool ok, const std::string& what)
    {
        ++states;
        if (!ok) {
            ++invalid;
            if (notes.size() < 8)
                notes.push_back(what);
        }
    }

    void add_series(const SweepSeries& s, const std::string& name)
    {
        for (const auto& p : s.points)
            add(!p.failed, name + " x=" + std::to_string(p.x) + " [" + p.flag + "]");
    }

    void add_witness(const WitnessSeries& s, const std::string& name)
    {
        for (const auto& p : s.points)
            add(!p.failed, name + " x=" + std::to_string(p.x) + " [" + p.flag + "]");
    }
};

ValidityLedger g_ledger;

// Single-point evaluation mirroring the sweep path, used to redo
// truncation-flagged points at a larger Fock cutoff.
SweepPoint eval_point(const SweepSpec& spec, double x, int n_max)
{
    SweepPoint pt;
    pt.x = x;
    try {
        SystemParams p = params_at(spec, x);
        HilbertConfig config(p.n_qd(), n_max);
        Operator h = spec.hamiltonian == HamiltonianKind::full
                         ? build_h0(p, config) + build_hi(p, config)
                         : build_h_eff(p, config,
                                       spec.hamiltonian == HamiltonianKind::effective);
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

SweepSeries run_with_rerun(const SweepSpec& spec, int rerun_n_max,
                           const std::string& name)
{
    progress("sweep " + name + " started (" + std::to_string(spec.count) +
             " points, n_max=" + std::to_string(spec.n_max) + ")");
    SweepSeries s = run_sweep(spec);
    int reruns = 0;
    for (auto& p : s.points)
        if (p.failed && p.flag == "truncation") {
            p = eval_point(spec, p.x, rerun_n_max);
            ++reruns;
        }
    progress("sweep " + name + " done, " + std::to_string(reruns) +
             " points redone at n_max=" + std::to_string(rerun_n_max));
    g_ledger.add_series(s, name);
    return s;
}

// One steady-state solve at explicit parameters; records validity.
ObservableRecord solve_at(const SystemParams& p, int n_max, const std::string& name)
{
    HilbertConfig config(p.n_qd(), n_max);
    Liouvillian l = build_liouvillian(build_h0(p, config) + build_hi(p, config),
                                      build_dissipators(p, config));
    SolverOptions opts;
    opts.permutation_symmetric = p.identical_emitters();
    SteadyStateResult ss = steady_state(l, opts);
    bool ok = true;
    try {
        ss.rho.validate();
    } catch (const std::exception&) {
        ok = false;
    }
    ObservableRecord rec = make_record(ss.rho, ss.residual);
    g_ledger.add(ok && ss.residual < 1e-11 * l.max_norm() && rec.truncation < 1e-6,
                 name);
    return rec;
}

int nearest_index(const SweepSeries& s, double x)
{
    int best = 0;
    for (int i = 1; i < static_cast<int>(s.points.size()); ++i)
        if (std::abs(s.points[i].x - x) < std::abs(s.points[best].x - x))
            best = i;
    return best;
}

// All detected peaks must carry near-coherent statistics.
bool peaks_are_coherent(const std::vector<ResonancePeak>& peaks, std::string& why)
{
    for (const auto& pk : peaks) {
        if (!pk.g2_at_peak) {
            why = "peak at " + std::to_string(pk.position) + " has undefined g2";
            return false;
        }
        if (std::abs(*pk.g2_at_peak - 1.0) >= 0.1) {
            why = "peak at " + std::to_string(pk.position) +
                  " g2=" + std::to_string(*pk.g2_at_peak);
            return false;
        }
    }
    return true;
}

bool midpoints_are_thermal(const SweepSeries& s,
                           const std::vector<ResonancePeak>& peaks, std::string& why)
{
    for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
        int idx = nearest_index(s, 0.5 * (peaks[i].position + peaks[i + 1].position));
        const auto& rec = s.points[idx].record;
        if (!rec.g2_zero || *rec.g2_zero <= 1.2) {
            why = "midpoint at x=" + std::to_string(s.points[idx].x) + " g2=" +
                  (rec.g2_zero ? std::to_string(*rec.g2_zero) : "undefined");
            return false;
        }
    }
    return true;
}

const ResonancePeak* peak_nearest(const std::vector<ResonancePeak>& peaks, double x)
{
    const ResonancePeak* best = nullptr;
    for (const auto& pk : peaks)
        if (!best || std::abs(pk.position - x) < std::abs(best->position - x))
            best = &pk;
    return best;
}

std::string fmt2(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_1()
{
    double t0 = now_seconds();
    HilbertConfig config(1, 5);
    SystemParams p = default_params(1, 0.96694 * 0.011);
    Liouvillian l = build_liouvillian(build_h0(p, config) + build_hi(p, config),
                                      build_dissipators(p, config));
    SteadyStateResult sparse = steady_state(l);
    SolverOptions dense_opts;
    dense_opts.force_dense = true;
    SteadyStateResult dense = steady_state(l, dense_opts);
    double dev_dense =
        (sparse.rho.matrix - dense.rho.matrix).cwiseAbs().maxCoeff();

    PropagationResult prop = propagate(DensityMatrix::maximally_mixed(config), l,
                                       20.0 / (2.0 * p.kappa), 2.5 / l.inf_norm(),
                                       /*parallel=*/false);
    double dev_prop = (prop.rho.matrix - sparse.rho.matrix).cwiseAbs().maxCoeff();
    double dt = now_seconds() - t0;

    // deliberately truncated solver probe: full validity except the
    // truncation gate, which is meaningless at n_max = 5
    for (const auto* r : {&sparse, &dense}) {
        bool ok = true;
        try {
            r->rho.validate();
        } catch (const std::exception&) {
            ok = false;
        }
        g_ledger.add(ok && r->residual < 1e-11 * l.max_norm(), "criterion1 state");
    }

    bool pass = dev_dense < 1e-8 && dev_prop < 1e-6 && dt < 10.0;
    report(1, pass,
           "dense-oracle dev " + fmt2(dev_dense) + " (<1e-8), propagation dev " +
               fmt2(dev_prop) + " (<1e-6), runtime " + fmt2(dt) + " s (<10)");
}

void criterion_3()
{
    double t0 = now_seconds();
    HilbertConfig c(2, 4);
    SystemParams p = default_params(2, 0.96694 * 0.011);
    Operator is = cplx(0.0, 1.0) * build_sw_generator(p, c);
    Operator hi = build_hi(p, c);
    Eigen::MatrixXcd first((commutator(is, build_h0(p, c)) + hi).matrix());
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(c.dim(), c.dim());
    for (int i = 0; i < c.dim(); ++i)
        if (c.decode(i).second <= c.n_max - 1)
            proj(i, i) = 1.0;
    double norm = (proj * first * proj).cwiseAbs().maxCoeff();
    double bound = 1e-12 * hi.max_norm();
    double dt = now_seconds() - t0;
    report(3, norm < bound && dt < 1.0,
           "|P([iS,H0]+H_I)P| = " + fmt2(norm) + " < " + fmt2(bound) +
               ", runtime " + fmt2(dt) + " s");
}

struct Criterion4Out {
    double n1_peak_height = 0.0;
};

Criterion4Out criterion_4()
{
    Criterion4Out out;
    SweepSpec spec;
    spec.base = default_params(1, 0.011);
    spec.start = 0.85;
    spec.stop = 1.05;
    spec.count = g_count;
    spec.n_max = 40;
    SweepSeries s1 = run_with_rerun(spec, 60, "c4_N1");

    spec.base = default_params(2, 0.011);
    spec.n_max = 60;
    SweepSeries s2 = run_with_rerun(spec, 80, "c4_N2");

    spec.base = default_params(3, 0.011);
    spec.n_max = 80;
    SweepSeries s3 = run_with_rerun(spec, 95, "c4_N3");

    auto p1 = find_peaks(s1);
    auto p2 = find_peaks(s2);
    auto p3 = find_peaks(s3);

    std::string why;
    bool pass = true;
    std::ostringstream d;
    if (p1.size() != 1 || std::abs(p1[0].position - 0.96694) >= 0.01) {
        pass = false;
        d << "N=1: " << p1.size() << " peaks";
        if (!p1.empty())
            d << " nearest " << fmt2(peak_nearest(p1, 0.96694)->position);
        d << "; ";
    } else {
        out.n1_peak_height = p1[0].height;
        d << "N=1 peak at " << fmt2(p1[0].position) << " h=" << fmt2(p1[0].height)
          << "; ";
    }
    const ResonancePeak* coll = p2.empty() ? nullptr : peak_nearest(p2, 0.93388);
    if (p2.size() != 2 || !coll || std::abs(coll->position - 0.93388) >= 0.01) {
        pass = false;
        d << "N=2: " << p2.size() << " peaks; ";
    } else {
        d << "N=2 collective at " << fmt2(coll->position) << "; ";
    }
    if (p3.size() != 3) {
        pass = false;
        d << "N=3: " << p3.size() << " peaks (want 3); ";
    } else {
        d << "N=3 peaks at " << fmt2(p3[0].position) << "/" << fmt2(p3[1].position)
          << "/" << fmt2(p3[2].position) << "; ";
    }
    for (const auto& pair :
         {std::make_pair(&s1, &p1), std::make_pair(&s2, &p2), std::make_pair(&s3, &p3)}) {
        if (!peaks_are_coherent(*pair.second, why) ||
            !midpoints_are_thermal(*pair.first, *pair.second, why)) {
            pass = false;
            d << why << "; ";
        }
    }
    if (pass)
        d << "all peaks |g2-1|<0.1, midpoints g2>1.2";
    report(4, pass, d.str());
    return out;
}

void criterion_5(double n1_one_phonon_height)
{
    SweepSpec spec;
    spec.base = default_params(1, 0.011);
    spec.start = 1.85;
    spec.stop = 2.05;
    spec.count = g_count;
    spec.n_max = 60;
    SweepSeries s1 = run_with_rerun(spec, 95, "c5_N1");

    spec.base = default_params(2, 0.011);
    SweepSeries s2 = run_with_rerun(spec, 95, "c5_N2");

    auto p1 = find_peaks(s1);
    auto p2 = find_peaks(s2);

    std::string why;
    bool pass = !p1.empty() && !p2.empty();
    std::ostringstream d;
    if (!pass)
        d << "N=1: " << p1.size() << " peaks, N=2: " << p2.size() << " peaks; ";
    if (pass && (!peaks_are_coherent(p1, why) || !peaks_are_coherent(p2, why))) {
        pass = false;
        d << why << "; ";
    }
    double ratio = 0.0;
    if (pass && n1_one_phonon_height > 0.0) {
        double h2 = 0.0;
        for (const auto& pk : p1)
            h2 = std::max(h2, pk.height);
        ratio = h2 / n1_one_phonon_height;
        if (!(ratio > 1.5 && ratio < 2.5)) {
            pass = false;
            d << "two-phonon/one-phonon height ratio " << fmt2(ratio)
              << " outside [1.5, 2.5]; ";
        } else {
            d << "height ratio " << fmt2(ratio) << " (2x +- 25%), peaks coherent";
        }
    }
    report(5, pass, d.str());
}

void criterion_6()
{
    SweepSpec spec;
    spec.base = default_params(2, 0.011);
    spec.base.g = {4e-3, 4e-3};
    spec.start = 0.70;
    spec.stop = 0.95;
    spec.count = g_count;
    spec.n_max = 60;

    spec.hamiltonian = HamiltonianKind::full;
    SweepSeries full = run_with_rerun(spec, 80, "c6_full");
    spec.hamiltonian = HamiltonianKind::effective;
    SweepSeries eff = run_with_rerun(spec, 80, "c6_eff");
    spec.hamiltonian = HamiltonianKind::effective_no_qdqd;
    SweepSeries effno = run_with_rerun(spec, 80, "c6_eff_no_qdqd");

    auto pf = find_peaks(full);
    auto pe = find_peaks(eff);
    auto pn = find_peaks(effno);

    bool pass = pf.size() == 2 && pe.size() == 2 && pn.size() == 1;
    std::ostringstream d;
    d << "peaks full/eff/no-qdqd = " << pf.size() << "/" << pe.size() << "/"
      << pn.size();
    if (pass) {
        for (int i = 0; i < 2; ++i) {
            double dev = std::abs(pf[i].position - pe[i].position);
            d << ", match dev " << fmt2(dev);
            if (dev >= 0.02)
                pass = false;
        }
    }
    report(6, pass, d.str());
}

void criterion_7()
{
    SystemParams two = default_params(2, 0.011);
    SystemParams one = default_params(1, 0.011);
    double coll_delta = 0.0;
    for (const auto& r : predict_resonances(two, 2))
        if (r.label == "collective")
            coll_delta = r.delta;
    double single_delta = predict_resonances(one, 1)[0].delta;

    auto eval = [&](double pump_mev, double& n_coll, double& n_one) {
        SystemParams t = two;
        t.Omega = mev_to_radfs(pump_mev);
        t.omega_L = t.omega_cv[0] + coll_delta;
        n_coll = solve_at(t, 60, "c7 N2 @" + fmt2(pump_mev) + "meV").phonon_number;
        SystemParams o = one;
        o.Omega = mev_to_radfs(pump_mev);
        o.omega_L = o.omega_cv[0] + single_delta;
        n_one = solve_at(o, 60, "c7 N1 @" + fmt2(pump_mev) + "meV").phonon_number;
    };

    double c003, s003, c010, s010, c025, s025;
    eval(0.03, c003, s003);
    eval(0.10, c010, s010);
    eval(0.25, c025, s025);

    bool low_ok = c003 < 0.5 && s003 > 1.0;
    double ratio = c025 / s025;
    bool high_ok = ratio > 1.6 && ratio < 2.4;
    std::ostringstream d;
    d << "0.03 meV: collective " << fmt2(c003) << " vs single " << fmt2(s003)
      << "; 0.1 meV: " << fmt2(c010) << " vs " << fmt2(s010)
      << "; 0.25 meV ratio " << fmt2(ratio) << " (2x +- 20%)";
    report(7, low_ok && high_ok, d.str());
}

void criterion_8()
{
    bool pass = true;
    std::ostringstream d;

    auto run_case = [&](SystemParams base, double lo, const std::string& name,
                        double coll_tol, bool check_order) {
        SweepSpec spec;
        spec.base = base;
        spec.start = lo;
        spec.stop = 1.0;
        spec.count = g_count;
        spec.n_max = 50;
        SweepSeries s = run_with_rerun(spec, 70, name);
        auto peaks = find_peaks(s);
        auto preds = predict_resonances(base, 2);
        d << name << ": " << peaks.size() << " peaks";
        if (peaks.size() != 3)
            pass = false;
        const ResonancePeak* coll_pk = nullptr;
        const ResonancePeak* s2_pk = nullptr;
        for (const auto& pr : preds) {
            double target = pr.delta / base.omega_ph;
            double tol = pr.label == "collective" ? coll_tol : 0.01;
            const ResonancePeak* pk = peak_nearest(peaks, target);
            double dev = pk ? std::abs(pk->position - target) : 1e9;
            d << " " << pr.label << " dev " << fmt2(dev);
            if (dev >= tol)
                pass = false;
            if (pr.label == "collective")
                coll_pk = pk;
            if (pr.label == "single_2")
                s2_pk = pk;
        }
        if (check_order && coll_pk && s2_pk) {
            bool order = s2_pk->position < coll_pk->position &&
                         s2_pk->height > coll_pk->height;
            d << (order ? " ordering ok" : " ORDERING VIOLATED");
            if (!order)
                pass = false;
        }
        d << "; ";
    };

    SystemParams g2x = SystemParams::from_delta1({2.28, 2.28}, 0.011, 0.011,
                                                 4.56e-4, {2e-3, 4e-3}, 1e-5, 5e-7);
    run_case(g2x, 0.80, "c8_g2eq2g1", 0.02, false);

    SystemParams g4x = SystemParams::from_delta1({2.28, 2.28}, 0.011, 0.011,
                                                 4.56e-4, {2e-3, 8e-3}, 1e-5, 5e-7);
    run_case(g4x, 0.42, "c8_g2eq4g1", 0.02, true);

    SystemParams dw = SystemParams::from_delta1({2.28, 2.28 - 0.1 * 0.011}, 0.011,
                                                0.011, 4.56e-4, {2e-3, 2e-3},
                                                1e-5, 5e-7);
    run_case(dw, 0.82, "c8_delta_omega", 0.02, false);

    report(8, pass, d.str());
}

// Witness evaluation with a per-point Fock-cutoff retry.
WitnessPoint eval_witness(const SweepSpec& spec, DetuningChoice det, double x,
                          int n_max)
{
    WitnessPoint pt;
    pt.x = x;
    try {
        SystemParams two = spec.base;
        two.Omega = mev_to_radfs(x);
        double delta_two = 0.0;
        const char* want =
            det == DetuningChoice::collective_resonance ? "collective" : "single_1";
        for (const auto& r : predict_resonances(two, 2))
            if (r.label == want)
                delta_two = r.delta;
        two.omega_L = two.omega_cv[0] + delta_two;
        SystemParams one = two;
        one.omega_cv.resize(1);
        one.g.resize(1);
        one.omega_L = one.omega_cv[0] + predict_resonances(one, 1)[0].delta;

        auto solve = [&](const SystemParams& p) {
            HilbertConfig config(p.n_qd(), n_max);
            Liouvillian l = build_liouvillian(
                build_h0(p, config) + build_hi(p, config),
                build_dissipators(p, config));
            SolverOptions opts = spec.solver;
            opts.permutation_symmetric = p.identical_emitters();
            SteadyStateResult r = steady_state(l, opts);
            r.rho.validate();
            return r;
        };
        SteadyStateResult ss2 = solve(two);
        SteadyStateResult ss1 = solve(one);
        pt.record = make_record(ss2.rho, ss2.residual, spec.g2_floor);
        pt.n_two = pt.record.phonon_number;
        pt.n_one = phonon_number(ss1.rho);
        if (pt.record.truncation >= spec.truncation_limit ||
            truncation_metric(ss1.rho) >= spec.truncation_limit) {
            pt.failed = true;
            pt.flag = "truncation";
        }
        if (pt.n_one >= spec.g2_floor)
            pt.witness = phonance_witness(pt.n_two, pt.n_one);
        else if (pt.flag.empty())
            pt.flag = "n_one_below_floor";
    } catch (const std::exception& e) {
        pt.failed = true;
        pt.flag = e.what();
    }
    return pt;
}

void criterion_9()
{
    SweepSpec spec;
    spec.base = default_params(2, 0.011);
    spec.variable = SweepVariable::omega_pump;
    spec.log_spaced = true;
    spec.start = 0.01;
    spec.stop = 10.0;
    spec.count = g_wcount;
    spec.n_max = 60;

    auto run_curve = [&](DetuningChoice det, const std::string& name) {
        progress("witness " + name + " started");
        WitnessSeries s = run_witness_sweep(spec, det);
        int reruns = 0;
        for (auto& p : s.points)
            if (p.failed && p.flag == "truncation") {
                p = eval_witness(spec, det, p.x, 95);
                ++reruns;
            }
        progress("witness " + name + " done, " + std::to_string(reruns) +
                 " points redone at n_max=95");
        g_ledger.add_witness(s, name);
        return s;
    };

    WitnessSeries coll = run_curve(DetuningChoice::collective_resonance, "c9_coll");
    WitnessSeries single =
        run_curve(DetuningChoice::single_emitter_resonance, "c9_single");

    bool pass = true;
    std::ostringstream d;

    // collective curve: starts at R = -1 +- 0.05
    const WitnessPoint* first = nullptr;
    for (const auto& p : coll.points)
        if (p.witness) {
            first = &p;
            break;
        }
    if (!first || first->x > 0.02 || std::abs(*first->witness + 1.0) > 0.05) {
        pass = false;
        d << "collective start "
          << (first ? "R=" + fmt2(*first->witness) + " at " + fmt2(first->x) + " meV"
                    : "undefined")
          << " not -1 +- 0.05; ";
    } else {
        d << "collective starts R=" << fmt2(*first->witness) << "; ";
    }

    // zero crossing inside [0.1, 0.4] meV
    std::optional<double> crossing;
    for (std::size_t i = 0; i + 1 < coll.points.size(); ++i) {
        const auto& a = coll.points[i];
        const auto& b = coll.points[i + 1];
        if (a.witness && b.witness && *a.witness < 0.0 && *b.witness >= 0.0) {
            double f = -*a.witness / (*b.witness - *a.witness);
            crossing = a.x + f * (b.x - a.x);
            break;
        }
    }
    if (!crossing || *crossing < 0.1 || *crossing > 0.4) {
        pass = false;
        d << "collective R=0 crossing "
          << (crossing ? fmt2(*crossing) + " meV" : "absent")
          << " outside [0.1, 0.4]; ";
    } else {
        d << "crossing at " << fmt2(*crossing) << " meV; ";
    }

    auto max_in = [](const WitnessSeries& s, double lo, double hi) {
        double m = -1e9;
        for (const auto& p : s.points)
            if (p.witness && p.x >= lo && p.x <= hi)
                m = std::max(m, *p.witness);
        return m;
    };
    auto min_in = [](const WitnessSeries& s, double lo, double hi) {
        double m = 1e9;
        for (const auto& p : s.points)
            if (p.witness && p.x >= lo && p.x <= hi)
                m = std::min(m, *p.witness);
        return m;
    };

    double coll_high = max_in(coll, 1.0, 10.0);
    if (coll_high <= 1.0) {
        pass = false;
        d << "collective max R in [1,10] meV = " << fmt2(coll_high) << " <= 1; ";
    } else {
        d << "collective high-pump R up to " << fmt2(coll_high) << "; ";
    }

    double single_mid = min_in(single, 0.05, 1.0);
    double single_high = max_in(single, 1.0, 10.0);
    if (!(single_mid < 0.0) || !(single_high > 1.0)) {
        pass = false;
        d << "single curve: min R(mid)=" << fmt2(single_mid) << ", max R(high)="
          << fmt2(single_high) << "; ";
    } else {
        d << "single curve dips to " << fmt2(single_mid) << " and reaches "
          << fmt2(single_high);
    }

    report(9, pass, d.str());
}

void criterion_10()
{
    const char* cfg_text = R"cfg(
n_qd = 1
n_max = 40
omega_cv = 2.28 radfs
omega_ph = 0.011 radfs
delta1 = 0.011 radfs
Omega = 4.56e-4 radfs
g = 2e-3 radfs
gamma_R = 1e-5 radfs
kappa = 5e-7 radfs
sweep_start = 0.95
sweep_stop = 0.98
sweep_count = 21
)cfg";
    RunConfig cfg = parse_config(cfg_text);
    std::string path1 = "/tmp/phaser_acceptance_a.csv";
    std::string path2 = "/tmp/phaser_acceptance_b.csv";
    std::ostringstream log1, log2;
    int rc1 = dispatch(Command::sweep_detuning, cfg, path1, log1);
    int rc2 = dispatch(Command::sweep_detuning, cfg, path2, log2);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(path1), b = slurp(path2);
    bool pass = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    report(10, pass,
           "two runs, " + std::to_string(a.size()) + " bytes each, " +
               (a == b ? "byte-identical" : "DIFFERENT"));
}

void criterion_2()
{
    std::ostringstream d;
    d << g_ledger.states << " steady states checked, " << g_ledger.invalid
      << " invalid";
    for (const auto& n : g_ledger.notes)
        d << "; " << n;
    report(2, g_ledger.invalid == 0 && g_ledger.states > 0, d.str());
}

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1 && std::string(argv[1]) == "--quick") {
        g_count = 21;
        g_wcount = 9;
    }
    criterion_1();
    criterion_3();
    Criterion4Out c4 = criterion_4();
    criterion_5(c4.n1_peak_height);
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_2();

    std::sort(g_results.begin(), g_results.end(),
              [](const CriterionResult& a, const CriterionResult& b) {
                  return a.id < b.id;
              });
    int failures = 0;
    for (const auto& r : g_results) {
        std::printf("criterion %2d: %s  %s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.detail.c_str());
        if (!r.pass)
            ++failures;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(g_results.size()) - failures, g_results.size());
    return failures;
}
