#include "phaser/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace phaser {

namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v)
{
    return v ? fmt(*v) : "nan";
}

void write_header(std::ostream& os, const RunConfig& cfg)
{
    os << "# " << kVersion << "\n";
    std::istringstream echo(cfg.echo());
    std::string line;
    while (std::getline(echo, line))
        os << "# " << line << "\n";
}

void write_point_fields(std::ostream& os, const SweepPoint& p, int n_qd)
{
    os << fmt(p.x) << "," << fmt(p.record.phonon_number) << ","
       << fmt_opt(p.record.g2_zero);
    for (int i = 0; i < n_qd; ++i)
        os << ","
           << (i < static_cast<int>(p.record.excited_populations.size())
                   ? fmt(p.record.excited_populations[i])
                   : "nan");
    os << "," << fmt(p.record.residual) << "," << fmt(p.record.truncation) << ","
       << (p.flag.empty() ? "ok" : p.flag);
}

} // namespace

Command parse_command(const std::string& name)
{
    if (name == "steady")
        return Command::steady;
    if (name == "sweep-detuning")
        return Command::sweep_detuning;
    if (name == "sweep-pump")
        return Command::sweep_pump;
    if (name == "witness")
        return Command::witness;
    if (name == "validate-effective")
        return Command::validate_effective;
    if (name == "predict")
        return Command::predict;
    throw std::invalid_argument("unknown command: " + name);
}

void write_sweep_csv(std::ostream& os, const RunConfig& cfg, const SweepSeries& series)
{
    write_header(os, cfg);
    os << "x,phonon_number,g2_zero";
    for (int i = 1; i <= cfg.n_qd; ++i)
        os << ",pop_c_" << i;
    os << ",residual,truncation_metric,flag\n";
    for (const auto& p : series.points) {
        write_point_fields(os, p, cfg.n_qd);
        os << "\n";
    }
}

void write_witness_csv(std::ostream& os, const RunConfig& cfg,
                       const WitnessSeries& single_res, const WitnessSeries& collective_res)
{
    write_header(os, cfg);
    os << "x,detuning_choice,phonon_number,g2_zero";
    for (int i = 1; i <= 2; ++i)
        os << ",pop_c_" << i;
    os << ",residual,truncation_metric,flag,n_one,n_two,R\n";
    auto emit = [&](const WitnessSeries& s, const char* label) {
        for (const auto& p : s.points) {
            os << fmt(p.x) << "," << label << "," << fmt(p.record.phonon_number)
               << "," << fmt_opt(p.record.g2_zero);
            for (int i = 0; i < 2; ++i)
                os << ","
                   << (i < static_cast<int>(p.record.excited_populations.size())
                           ? fmt(p.record.excited_populations[i])
                           : "nan");
            os << "," << fmt(p.record.residual) << "," << fmt(p.record.truncation)
               << "," << (p.flag.empty() ? "ok" : p.flag) << "," << fmt(p.n_one)
               << "," << fmt(p.n_two) << "," << fmt_opt(p.witness) << "\n";
        }
    };
    emit(single_res, "single_emitter");
    emit(collective_res, "collective");
}

void write_three_series_csv(std::ostream& os, const RunConfig& cfg,
                            const SweepSeries& full, const SweepSeries& eff,
                            const SweepSeries& eff_no_qdqd)
{
    write_header(os, cfg);
    os << "x,phonon_number_full,g2_full,flag_full,phonon_number_eff,g2_eff,flag_eff,"
          "phonon_number_eff_no_qdqd,g2_eff_no_qdqd,flag_eff_no_qdqd\n";
    for (std::size_t i = 0; i < full.points.size(); ++i) {
        const auto& a = full.points[i];
        const auto& b = eff.points[i];
        const auto& c = eff_no_qdqd.points[i];
        os << fmt(a.x) << "," << fmt(a.record.phonon_number) << ","
           << fmt_opt(a.record.g2_zero) << "," << (a.flag.empty() ? "ok" : a.flag)
           << "," << fmt(b.record.phonon_number) << "," << fmt_opt(b.record.g2_zero)
           << "," << (b.flag.empty() ? "ok" : b.flag) << ","
           << fmt(c.record.phonon_number) << "," << fmt_opt(c.record.g2_zero) << ","
           << (c.flag.empty() ? "ok" : c.flag) << "\n";
    }
}

namespace {

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    return out;
}

int run_steady(const RunConfig& cfg, std::ostream& log)
{
    const SystemParams& p = cfg.params;
    HilbertConfig config(cfg.n_qd, cfg.n_max);
    Liouvillian l = build_liouvillian(build_h0(p, config) + build_hi(p, config),
                                      build_dissipators(p, config));
    SolverOptions opts;
    opts.residual_tol = cfg.residual_tol;
    opts.max_iters = cfg.max_iters;
    opts.permutation_symmetric = p.identical_emitters();
    SteadyStateResult ss = steady_state(l, opts);
    ss.rho.validate();
    ObservableRecord rec = make_record(ss.rho, ss.residual, cfg.g2_floor);
    log << "phonon_number " << fmt(rec.phonon_number) << "\n";
    log << "g2_zero " << fmt_opt(rec.g2_zero) << "\n";
    for (std::size_t i = 0; i < rec.excited_populations.size(); ++i)
        log << "pop_c_" << (i + 1) << " " << fmt(rec.excited_populations[i]) << "\n";
    log << "residual " << fmt(rec.residual) << "\n";
    log << "truncation_metric " << fmt(rec.truncation) << "\n";
    return 0;
}

int run_predict(const RunConfig& cfg, std::ostream& log)
{
    auto preds = predict_resonances(cfg.params, std::min(cfg.n_qd, 2));
    log << "label delta_radfs delta_over_omega_ph\n";
    for (const auto& r : preds)
        log << r.label << " " << fmt(r.delta) << " "
            << fmt(r.delta / cfg.params.omega_ph) << "\n";
    return 0;
}

} // namespace

int dispatch(Command cmd, const RunConfig& cfg, const std::string& output_path,
             std::ostream& log)
{
    try {
        switch (cmd) {
        case Command::steady:
            return run_steady(cfg, log);
        case Command::predict:
            return run_predict(cfg, log);
        case Command::sweep_detuning:
        case Command::sweep_pump: {
            RunConfig c = cfg;
            c.sweep_variable = cmd == Command::sweep_detuning
                                   ? SweepVariable::delta_over_omega_ph
                                   : SweepVariable::omega_pump;
            SweepSeries series = run_sweep(c.sweep_spec());
            auto out = open_output(output_path);
            write_sweep_csv(out, c, series);
            auto peaks = find_peaks(series, c.min_height);
            log << "points " << series.points.size() << " peaks " << peaks.size()
                << "\n";
            for (const auto& pk : peaks)
                log << "peak " << fmt(pk.position) << " height " << fmt(pk.height)
                    << " fwhm " << fmt(pk.fwhm) << " g2 " << fmt_opt(pk.g2_at_peak)
                    << "\n";
            return 0;
        }
        case Command::witness: {
            RunConfig c = cfg;
            c.sweep_variable = SweepVariable::omega_pump;
            SweepSpec spec = c.sweep_spec();
            WitnessSeries s1 = run_witness_sweep(spec, DetuningChoice::single_emitter_resonance);
            WitnessSeries s2 = run_witness_sweep(spec, DetuningChoice::collective_resonance);
            auto out = open_output(output_path);
            write_witness_csv(out, c, s1, s2);
            log << "points " << s1.points.size() + s2.points.size() << "\n";
            return 0;
        }
        case Command::validate_effective: {
            RunConfig c = cfg;
            c.sweep_variable = SweepVariable::delta_over_omega_ph;
            SweepSpec spec = c.sweep_spec();
            spec.hamiltonian = HamiltonianKind::full;
            SweepSeries full = run_sweep(spec);
            spec.hamiltonian = HamiltonianKind::effective;
            SweepSeries eff = run_sweep(spec);
            spec.hamiltonian = HamiltonianKind::effective_no_qdqd;
            SweepSeries eff_no = run_sweep(spec);
            auto out = open_output(output_path);
            write_three_series_csv(out, c, full, eff, eff_no);
            log << "peaks_full " << find_peaks(full, c.min_height).size()
                << " peaks_eff " << find_peaks(eff, c.min_height).size()
                << " peaks_eff_no_qdqd " << find_peaks(eff_no, c.min_height).size()
                << "\n";
            return 0;
        }
        }
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace phaser
