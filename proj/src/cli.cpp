//---------------------------------------------------------------------------//
// Copyright 2026 rydeit contributors.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cli.cpp
//---------------------------------------------------------------------------//
#include "rydeit/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>

#include "rydeit/analysis.hpp"
#include "rydeit/analytic.hpp"
#include "rydeit/ddi.hpp"
#include "rydeit/nnd.hpp"
#include "rydeit/params.hpp"
#include "rydeit/svg_plot.hpp"
#include "rydeit/table.hpp"

namespace rydeit
{
namespace
{
//---------------------------------------------------------------------------//
class UsageError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// Keys whose values carry a frequency unit (c6 is frequency * um^6)
std::set<std::string> const frequency_keys = {
    "gamma", "omega_c", "omega_p", "omega_p_in", "delta_p",
    "delta_c", "gamma0", "gamma2", "c6", "strength",
};
std::set<std::string> const plain_keys = {
    "alpha", "n_atom", "epsilon", "c6_sign",
};

//---------------------------------------------------------------------------//
struct Options
{
    std::vector<std::string> assignments;
    std::string format{"csv"};
    std::string output;
    std::string plot;
    std::optional<double> gamma_mhz;
    bool angular{false};
    double tol{1e-8};
    bool timestamp{false};

    std::string axis{"probe"};
    std::optional<double> from;
    std::optional<double> to;
    std::optional<std::size_t> points;
    double peak_from{-0.5};
    double peak_to{0.5};
    std::size_t peak_points{401};
    std::string vs{"power"};
    std::string input;
    double beta_weight{1};
    double phi_weight{1};
    std::uint64_t seed{1};
    std::int64_t count{1000};
};

struct Resolved
{
    EitParams eit;
    DdiParams ddi;
    std::map<std::string, double> given;  //!< converted to gamma units
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

double parse_value(std::string const& key, std::string_view text)
{
    double value{};
    auto const res
        = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    {
        throw UsageError("invalid value for '" + key + "': '"
                         + std::string(text) + "'");
    }
    return value;
}

//---------------------------------------------------------------------------//
Resolved resolve(Options const& o)
{
    if (o.angular && !o.gamma_mhz)
    {
        throw UsageError("--angular requires --gamma-mhz");
    }
    if (o.gamma_mhz && !(*o.gamma_mhz > 0))
    {
        throw UsageError("--gamma-mhz must be positive");
    }
    // Value v [MHz] means a frequency of v (or 2 pi v) in units of 2 pi G
    double const to_gamma
        = o.gamma_mhz
              ? (o.angular ? 2 * std::numbers::pi : 1.0)
                    / (2 * std::numbers::pi * *o.gamma_mhz)
              : 1.0;

    Resolved r;
    for (auto const& a : o.assignments)
    {
        auto const eq = a.find('=');
        if (eq == std::string::npos)
        {
            throw UsageError("expected key=value, got '" + a + "'");
        }
        std::string const key = a.substr(0, eq);
        double value = parse_value(key, std::string_view(a).substr(eq + 1));
        if (frequency_keys.count(key))
        {
            value *= to_gamma;
        }
        else if (!plain_keys.count(key))
        {
            throw UsageError("unknown parameter '" + key + "'");
        }
        r.given[key == "omega_p" ? "omega_p_in" : key] = value;
    }

    auto get = [&r](char const* key, double fallback) {
        auto it = r.given.find(key);
        return it == r.given.end() ? fallback : it->second;
    };
    auto has = [&r](char const* key) { return r.given.count(key) > 0; };

    EitParams& e = r.eit;
    e.gamma = get("gamma", e.gamma);
    e.omega_c = get("omega_c", e.omega_c);
    e.omega_p_in = get("omega_p_in", e.omega_p_in);
    e.delta_p = get("delta_p", e.delta_p);
    e.delta_c = get("delta_c", e.delta_c);
    e.gamma0 = get("gamma0", e.gamma0);
    e.alpha = get("alpha", e.alpha);
    e.gamma2 = get("gamma2", e.gamma2);
    e.validate();

    std::optional<int> sign;
    if (has("c6_sign"))
    {
        double const s = get("c6_sign", -1);
        if (s != 1 && s != -1)
        {
            throw UsageError("c6_sign must be +1 or -1");
        }
        sign = static_cast<int>(s);
    }
    if (has("strength"))
    {
        if (has("c6") || has("n_atom") || has("epsilon"))
        {
            throw UsageError(
                "strength cannot be combined with c6, n_atom or epsilon");
        }
        r.ddi = DdiParams::from_combined(get("strength", 0), sign.value_or(-1));
    }
    else if (has("c6"))
    {
        if (!has("n_atom"))
        {
            throw UsageError("c6 requires n_atom");
        }
        double const c6 = get("c6", 0);
        if (sign && (c6 < 0 ? -1 : 1) != *sign)
        {
            throw UsageError("c6_sign contradicts the sign of c6");
        }
        r.ddi = DdiParams::from_microscopic(
            c6, get("n_atom", 0), get("epsilon", 1));
    }
    else if (has("n_atom") || has("epsilon"))
    {
        throw UsageError("n_atom and epsilon require c6");
    }
    else
    {
        r.ddi = DdiParams::from_combined(0, sign.value_or(-1));
    }

    auto& p = r.params;
    p["units"] = "gamma";
    if (o.gamma_mhz)
    {
        p["gamma_mhz"] = *o.gamma_mhz;
        p["angular_input"] = o.angular;
    }
    p["gamma"] = e.gamma;
    p["omega_c"] = e.omega_c;
    p["omega_p_in"] = e.omega_p_in;
    p["delta_p"] = e.delta_p;
    p["delta_c"] = e.delta_c;
    p["gamma0"] = e.gamma0;
    p["alpha"] = e.alpha;
    p["gamma2"] = e.gamma2;
    p["c6_sign"] = r.ddi.c6_sign();
    p["strength"] = r.ddi.combined_strength();
    if (r.ddi.has_microscopic())
    {
        auto const& m = r.ddi.microscopic();
        p["c6"] = r.ddi.c6_sign() * m.c6_abs;
        p["n_atom"] = m.n_atom;
        p["epsilon"] = m.epsilon;
    }
    p["rel_tol"] = o.tol;
    return r;
}

SweepAxis parse_axis(std::string const& s)
{
    return s == "coupling" ? SweepAxis::coupling : SweepAxis::probe;
}

std::vector<double> grid_from(Options const& o,
                              double from,
                              double to,
                              std::size_t points,
                              nlohmann::ordered_json& params)
{
    double const a = o.from.value_or(from);
    double const b = o.to.value_or(to);
    std::size_t const n = o.points.value_or(points);
    if (n < 2)
    {
        throw UsageError("--points must be at least 2");
    }
    if (!(b > a))
    {
        throw UsageError("--to must exceed --from");
    }
    params["grid"] = {{"from", a}, {"to", b}, {"points", n}};
    return linspace(a, b, n);
}

std::string utc_now()
{
    std::time_t const t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

//---------------------------------------------------------------------------//
// COMMANDS
//---------------------------------------------------------------------------//
struct Outcome
{
    Table table;
    std::optional<PlotStyle> plot;
    bool converged{true};
};

Outcome run_spectrum(Options const& o, Resolved const& r, ExpectOptions const& q)
{
    SweepAxis const axis = parse_axis(o.axis);
    Outcome out;
    out.table.params = r.params;
    out.table.params["axis"] = to_cstring(axis);
    auto grid = grid_from(o, -0.5, 0.5, 401, out.table.params);

    auto const bare = sweep(r.eit, r.ddi, axis, grid, false, q);
    auto const ddi = sweep(r.eit, r.ddi, axis, grid, true, q);
    out.table.columns = {"delta",
                         "transmission_no_ddi",
                         "transmission_ddi",
                         "phase_no_ddi",
                         "phase_ddi",
                         "quadrature_error",
                         "converged"};
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        bool const ok = ddi.status[i] == QuadStatus::converged;
        out.table.rows.push_back({grid[i],
                                  bare.transmission[i],
                                  ddi.transmission[i],
                                  bare.phase[i],
                                  ddi.phase[i],
                                  ddi.error[i],
                                  ok ? 1.0 : 0.0});
    }
    out.converged = ddi.all_converged();
    out.plot = PlotStyle{"delta",
                         {{"transmission_ddi", "with DDI", false},
                          {"transmission_no_ddi", "without DDI", true}},
                         "Probe transmission",
                         "two-photon detuning [gamma]",
                         "transmission"};
    return out;
}

Outcome run_ddi(Options const& o, Resolved const& r, ExpectOptions const& q)
{
    bool const vs_power = o.vs != "delta_c";
    Outcome out;
    out.table.params = r.params;
    out.table.params["vs"] = vs_power ? "power" : "delta_c";
    auto const grid = vs_power
                          ? grid_from(o, 0.005, 0.04, 8, out.table.params)
                          : grid_from(o, -2, 2, 41, out.table.params);
    double const delta = r.eit.delta();

    out.table.columns = {"x",
                         "delta_beta_quad",
                         "delta_phi_quad",
                         "delta_beta_analytic",
                         "delta_phi_analytic",
                         "err_beta",
                         "err_phi",
                         "converged"};
    for (double x : grid)
    {
        EitParams point = r.eit;
        if (vs_power)
        {
            if (x < 0)
            {
                throw UsageError("probe power grid must be non-negative");
            }
            point.omega_p_in = std::sqrt(x);
        }
        else
        {
            point.delta_c = x;
            point.delta_p = -x + delta;
        }
        auto const quad = beta_phi_ddi(point, r.ddi, q);
        auto const ana = delta_beta_phi_corrected(point, r.ddi);
        out.table.rows.push_back({x,
                                  quad.delta_beta,
                                  quad.delta_phi,
                                  ana.delta_beta,
                                  ana.delta_phi,
                                  quad.err_beta,
                                  quad.err_phi,
                                  quad.converged() ? 1.0 : 0.0});
        out.converged = out.converged && quad.converged();
    }
    out.plot = PlotStyle{"x",
                         {{"delta_beta_quad", "delta beta", false},
                          {"delta_phi_quad", "delta phi", false},
                          {"delta_beta_analytic", "delta beta (formula)", true},
                          {"delta_phi_analytic", "delta phi (formula)", true}},
                         "DDI excess attenuation and phase",
                         vs_power ? "probe power [gamma^2]"
                                  : "coupling detuning [gamma]",
                         ""};
    return out;
}

Outcome
run_peak_shift(Options const& o, Resolved const& r, ExpectOptions const& q)
{
    SweepAxis const axis = parse_axis(o.axis);
    bool const probe = axis == SweepAxis::probe;
    Outcome out;
    out.table.params = r.params;
    out.table.params["axis"] = to_cstring(axis);
    auto const grid = grid_from(o, -2, 2, 21, out.table.params);
    if (o.peak_points < 3 || !(o.peak_to > o.peak_from))
    {
        throw UsageError("peak search grid needs >= 3 increasing points");
    }
    out.table.params["peak_grid"] = {{"from", o.peak_from},
                                     {"to", o.peak_to},
                                     {"points", o.peak_points}};
    auto const fine = linspace(o.peak_from, o.peak_to, o.peak_points);

    out.table.columns = {
        "x", "shift_formula", "shift_numerical", "validity", "converged"};
    for (double x : grid)
    {
        EitParams point = r.eit;
        double formula{};
        double width{};
        if (probe)
        {
            point.delta_c = x;
            formula = peak_shift_probe_sweep(point, r.ddi);
            width = eit_linewidth(point.gamma, point.omega_c, x);
        }
        else
        {
            point.delta_p = x;
            formula = peak_shift_coupling_sweep(point, r.ddi);
            width = eit_linewidth(point.gamma, point.omega_c, -x);
        }

        auto const bare = sweep(point, r.ddi, axis, fine, false, q);
        auto const ddi = sweep(point, r.ddi, axis, fine, true, q);
        double numerical = nan;
        bool ok = ddi.all_converged();
        try
        {
            numerical = find_peak(ddi).position - find_peak(bare).position;
        }
        catch (PeakNotBracketed const&)
        {
            ok = false;
        }
        out.table.rows.push_back(
            {x, formula, numerical, std::fabs(formula) / width, ok ? 1.0 : 0.0});
        out.converged = out.converged && ok;
    }
    out.plot = PlotStyle{"x",
                         {{"shift_numerical", "numerical", false},
                          {"shift_formula", "formula", true}},
                         "EIT peak shift",
                         probe ? "coupling detuning [gamma]"
                               : "probe detuning [gamma]",
                         "peak shift [gamma]"};
    return out;
}

Outcome run_fit(Options const& o, Resolved const& r)
{
    if (o.input.empty())
    {
        throw UsageError("fit requires --input");
    }
    if (!r.ddi.has_microscopic() || r.given.count("epsilon"))
    {
        throw UsageError("fit requires c6 and n_atom (and no epsilon)");
    }
    std::string text;
    try
    {
        text = read_file(o.input);
    }
    catch (std::runtime_error const& e)
    {
        throw UsageError(e.what());
    }
    Table const slopes = parse_csv(text);
    auto const dc = slopes.column("delta_c");
    auto const sb = slopes.column("slope_beta");
    auto const sp = slopes.column("slope_phi");
    std::vector<double> weight(dc.size(), 1.0);
    if (std::find(slopes.columns.begin(), slopes.columns.end(), "weight")
        != slopes.columns.end())
    {
        weight = slopes.column("weight");
    }
    std::vector<SlopeObservation> obs;
    for (std::size_t i = 0; i < dc.size(); ++i)
    {
        obs.push_back({dc[i], sb[i], sp[i], weight[i]});
    }

    auto const& m = r.ddi.microscopic();
    auto const fit = fit_epsilon(obs,
                                 r.eit,
                                 r.ddi.c6_sign() * m.c6_abs,
                                 m.n_atom,
                                 {o.beta_weight, o.phi_weight});
    Outcome out;
    out.table.params = r.params;
    out.table.params.erase("epsilon");
    out.table.params["input"] = o.input;
    out.table.params["beta_weight"] = o.beta_weight;
    out.table.params["phi_weight"] = o.phi_weight;
    out.table.columns = {
        "epsilon", "std_error", "strength", "residual", "equations", "clamped"};
    out.table.rows.push_back({fit.epsilon,
                              fit.std_error,
                              fit.strength,
                              fit.residual,
                              static_cast<double>(fit.equations),
                              fit.clamped ? 1.0 : 0.0});
    return out;
}

Outcome run_check(Resolved const& r)
{
    auto const rep = regime_report(r.eit, r.ddi);
    auto cube = [](std::optional<double> v) {
        return v ? *v * *v * *v : nan;
    };
    Outcome out;
    out.table.params = r.params;
    out.table.columns = {"omega_a",
                         "eit_linewidth",
                         "linewidth_ratio",
                         "validity_beta",
                         "validity_phi",
                         "beta_valid",
                         "phi_valid",
                         "perturbative",
                         "r_a",
                         "r_b",
                         "r_a_cubed",
                         "r_b_cubed",
                         "blockade_ratio"};
    out.table.rows.push_back({rep.omega_a,
                              rep.eit_linewidth,
                              rep.linewidth_ratio,
                              rep.validity_beta,
                              rep.validity_phi,
                              rep.beta_formula_valid ? 1.0 : 0.0,
                              rep.phi_formula_valid ? 1.0 : 0.0,
                              rep.perturbative_probe ? 1.0 : 0.0,
                              rep.r_a.value_or(nan),
                              rep.r_b.value_or(nan),
                              cube(rep.r_a),
                              cube(rep.r_b),
                              rep.blockade_ratio.value_or(nan)});
    return out;
}

Outcome run_sample(Options const& o, Resolved const& r)
{
    if (o.count < 1)
    {
        throw UsageError("--count must be positive");
    }
    double const wa = derive_scales(r.eit, r.ddi).omega_a;
    Outcome out;
    out.table.params = r.params;
    out.table.params["omega_a"] = wa;
    out.table.params["seed"] = o.seed;
    out.table.params["count"] = o.count;
    out.table.columns = {"omega"};
    for (double w : sample_shift(o.count, o.seed, wa))
    {
        out.table.rows.push_back({w});
    }
    return out;
}

//---------------------------------------------------------------------------//
void add_common(CLI::App* app, Options& o, bool plot)
{
    app->add_option("--set", o.assignments, "Parameter assignment key=value")
        ->take_all()
        ->allow_extra_args();
    app->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--output,-o", o.output, "Output file (default stdout)");
    app->add_option("--gamma-mhz",
                    o.gamma_mhz,
                    "Gamma/2pi in MHz; frequency inputs are then in MHz");
    app->add_flag(
        "--angular", o.angular, "Frequency inputs are angular (times 2 pi)");
    app->add_option("--tol", o.tol, "Relative quadrature tolerance")
        ->check(CLI::PositiveNumber);
    app->add_flag(
        "--timestamp", o.timestamp, "Record the generation time (json only)");
    if (plot)
    {
        app->add_option("--plot", o.plot, "Write an SVG plot to this path");
    }
}

void add_grid(CLI::App* app, Options& o)
{
    app->add_option("--from", o.from, "Grid start");
    app->add_option("--to", o.to, "Grid stop");
    app->add_option("--points", o.points, "Grid point count");
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err)
{
    Options o;
    CLI::App app{"Mean-field Rydberg EIT response with dipole-dipole "
                 "interactions",
                 "rydeit"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand(
        "spectrum", "Transmission and phase versus two-photon detuning");
    add_common(spectrum, o, true);
    add_grid(spectrum, o);
    spectrum->add_option("--axis", o.axis, "Swept field")
        ->check(CLI::IsMember({"probe", "coupling"}));

    auto* ddi = app.add_subcommand(
        "ddi", "DDI excess attenuation and phase, quadrature and formula");
    add_common(ddi, o, true);
    add_grid(ddi, o);
    ddi->add_option("--vs", o.vs, "Independent variable")
        ->check(CLI::IsMember({"power", "delta_c"}));

    auto* peak = app.add_subcommand(
        "peak-shift", "Interaction-induced EIT peak shift");
    add_common(peak, o, true);
    add_grid(peak, o);
    peak->add_option("--axis", o.axis, "Swept field")
        ->check(CLI::IsMember({"probe", "coupling"}));
    peak->add_option("--peak-from", o.peak_from, "Peak search start");
    peak->add_option("--peak-to", o.peak_to, "Peak search stop");
    peak->add_option("--peak-points", o.peak_points, "Peak search points");

    auto* fit = app.add_subcommand(
        "fit", "Fit the ensemble factor epsilon to a slope table");
    add_common(fit, o, false);
    fit->add_option("--input,-i", o.input, "Slope table (CSV)");
    fit->add_option("--beta-weight", o.beta_weight, "Weight of beta slopes")
        ->check(CLI::NonNegativeNumber);
    fit->add_option("--phi-weight", o.phi_weight, "Weight of phi slopes")
        ->check(CLI::NonNegativeNumber);

    auto* check = app.add_subcommand(
        "check", "Regime report: length scales and validity indicators");
    add_common(check, o, false);

    auto* sample = app.add_subcommand(
        "sample", "Monte Carlo samples of the frequency shift");
    add_common(sample, o, false);
    sample->add_option("--seed", o.seed, "Random seed");
    sample->add_option("--count", o.count, "Number of samples");

    std::vector<char const*> argv{"rydeit"};
    for (auto const& a : args)
    {
        argv.push_back(a.c_str());
    }
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return exit_ok;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    CLI::App const* cmd = app.get_subcommands().front();
    if (cmd->get_option_no_throw("--help") && cmd->count("--help"))
    {
        out << cmd->help();
        return exit_ok;
    }

    try
    {
        Resolved const r = resolve(o);
        ExpectOptions q;
        q.rel_tol = o.tol;

        Outcome result;
        std::string const name = cmd->get_name();
        if (name == "spectrum")
            result = run_spectrum(o, r, q);
        else if (name == "ddi")
            result = run_ddi(o, r, q);
        else if (name == "peak-shift")
            result = run_peak_shift(o, r, q);
        else if (name == "fit")
            result = run_fit(o, r);
        else if (name == "check")
            result = run_check(r);
        else
            result = run_sample(o, r);

        Table& t = result.table;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        params["command"] = name;
        params.update(t.params);
        if (o.timestamp)
        {
            params["generated"] = utc_now();
        }
        t.params = std::move(params);

        if (!o.plot.empty() && result.plot)
        {
            write_file_atomic(o.plot, emit_plot(t, *result.plot));
        }
        std::string const body = o.format == "json" ? to_json(t) : to_csv(t);
        if (o.output.empty())
        {
            out << body;
        }
        else
        {
            write_file_atomic(o.output, body);
        }

        if (!result.converged)
        {
            err << "warning: numerical non-convergence or unbracketed peak "
                   "in rows with converged = 0\n";
            return exit_not_converged;
        }
        return exit_ok;
    }
    catch (Unidentifiable const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_unidentifiable;
    }
    catch (std::invalid_argument const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (std::domain_error const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

//---------------------------------------------------------------------------//
}  // namespace rydeit
