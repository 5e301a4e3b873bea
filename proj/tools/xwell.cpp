#include "CLI11.hpp"

#include "xwell/bound.hpp"
#include "xwell/curve_table.hpp"
#include "xwell/errors.hpp"
#include "xwell/oracle.hpp"
#include "xwell/scatter.hpp"
#include "xwell/semiclassical.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace {

using xwell::CurveTable;

int threads_default()
{
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0)
        n = 1;
    if (const char* cap = std::getenv("XWELL_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(cap, &end, 10);
        if (end != cap && v >= 1 && v < static_cast<long>(n))
            n = static_cast<unsigned>(v);
    }
    return static_cast<int>(n);
}

// plain key=value file; '#' starts a comment; flags override config values
std::map<std::string, std::string> load_config(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw xwell::IoError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty())
            out[key] = value;
    }
    return out;
}

using ConfigTarget = std::variant<double*, int*, std::string*>;

void apply_config(CLI::App* cmd, const std::string& config_path,
                  const std::map<std::string, ConfigTarget>& targets)
{
    if (config_path.empty())
        return;
    auto values = load_config(config_path);
    for (const auto& [key, target] : targets) {
        auto it = values.find(key);
        if (it == values.end())
            continue;
        if (cmd->count("--" + key) > 0)
            continue; // flag wins
        std::istringstream is(it->second);
        bool ok = false;
        if (auto d = std::get_if<double*>(&target))
            ok = static_cast<bool>(is >> **d);
        else if (auto i = std::get_if<int*>(&target))
            ok = static_cast<bool>(is >> **i);
        else if (auto s = std::get_if<std::string*>(&target)) {
            **s = it->second;
            ok = true;
        }
        if (!ok)
            throw xwell::Error("bad config value for '" + key + "': " + it->second);
    }
}

void write_table(const CurveTable& table, const std::string& format,
                 const std::string& out)
{
    xwell::TableFormat f = xwell::parse_format(format);
    if (out == "-")
        xwell::emit(table, f, std::cout);
    else
        xwell::emit_file(table, f, out);
}

std::string parity_name(xwell::bound::Parity p)
{
    return p == xwell::bound::Parity::even ? "even" : "odd";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and semiclassical solver for the exponential open well "
                 "and bottomless barrier"};
    app.require_subcommand(1);

    double v0 = 1.0, u0 = 5.0, a = 1.0, c = 1.0;
    double emin = -10.0, emax = 10.0;
    int nmax = 3, points = 401;
    std::string format = "csv", out = "-", config, psi_out;
    int psi_points = 401;

    auto add_common = [&](CLI::App* cmd, bool barrier) {
        if (barrier)
            cmd->add_option("--u0", u0, "barrier strength U0")->check(CLI::PositiveNumber);
        else
            cmd->add_option("--v0", v0, "well strength V0")->check(CLI::PositiveNumber);
        cmd->add_option("--a", a, "potential width a")->check(CLI::PositiveNumber);
        cmd->add_option("--two-mu-over-hbar2", c, "unit constant 2 mu / hbar^2")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "output format (csv or json)")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out, "output path ('-' = stdout)");
        cmd->add_option("--config", config, "key=value config file (flags override)");
    };
    auto common_targets = [&](bool barrier) {
        std::map<std::string, ConfigTarget> t{
            {"a", &a}, {"two-mu-over-hbar2", &c}, {"format", &format}, {"out", &out}};
        t.emplace(barrier ? "u0" : "v0", barrier ? &u0 : &v0);
        return t;
    };

    auto* spectrum = app.add_subcommand("spectrum", "exact bound states of the well");
    add_common(spectrum, false);
    spectrum->add_option("--nmax", nmax, "highest quantum number");
    spectrum->add_option("--psi-out", psi_out,
                         "also write one x,psi table per state to PREFIX_n<N>");
    spectrum->add_option("--psi-points", psi_points, "samples per psi table");

    auto* wkb = app.add_subcommand("wkb", "semiclassical action and spectrum");
    add_common(wkb, false);
    wkb->add_option("--nmax", nmax, "highest quantum number");
    wkb->add_option("--points", points, "action curve samples");

    auto* scatter_cmd = app.add_subcommand("scatter", "R/T sweep over energy");
    add_common(scatter_cmd, true);
    scatter_cmd->add_option("--emin", emin, "sweep start");
    scatter_cmd->add_option("--emax", emax, "sweep end");
    scatter_cmd->add_option("--points", points, "grid points");

    auto* tunnel = app.add_subcommand("tunnel-compare",
                                      "exact vs semiclassical transmission below the top");
    add_common(tunnel, true);
    tunnel->add_option("--emin", emin, "sweep start (< 0)");
    tunnel->add_option("--emax", emax, "sweep end (< 0)");
    tunnel->add_option("--points", points, "grid points");

    auto* poles = app.add_subcommand("poles",
                                     "continued R/T of the well and its pole list");
    add_common(poles, false);
    poles->add_option("--nmax", nmax, "highest pole index");
    poles->add_option("--points", points, "curve samples");

    auto* crossover = app.add_subcommand("crossover", "energy where R = T = 1/2");
    add_common(crossover, true);
    crossover->add_option("--emin", emin, "search interval start");
    crossover->add_option("--emax", emax, "search interval end");

    app.add_subcommand("selfcheck", "run every oracle-vs-main comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors are exit 1, --help is 0
    }

    try {
        if (spectrum->parsed()) {
            auto targets = common_targets(false);
            targets.emplace("nmax", &nmax);
            targets.emplace("psi-points", &psi_points);
            apply_config(spectrum, config, targets);
            xwell::WellParams params{v0, a, c};
            auto states = xwell::bound::solve_spectrum(params, nmax);
            CurveTable t;
            t.columns = {{"n", ""}, {"parity", "0=even,1=odd"}, {"E", "energy"},
                         {"k", "1/length"}};
            for (const auto& s : states)
                t.add_row({static_cast<double>(s.n),
                           s.parity == xwell::bound::Parity::even ? 0.0 : 1.0,
                           s.energy, s.k});
            t.metadata["v0"] = xwell::format_double(v0);
            t.metadata["a"] = xwell::format_double(a);
            t.metadata["two_mu_over_hbar2"] = xwell::format_double(c);
            write_table(t, format, out);
            if (!psi_out.empty()) {
                double cap = xwell::bound::x_cap(params);
                for (const auto& s : states) {
                    auto ns = xwell::bound::normalize(params, s);
                    CurveTable pt;
                    pt.columns = {{"x", "length"}, {"psi", ""}};
                    for (int i = 0; i < psi_points; ++i) {
                        double x = -cap + 2.0 * cap * i / (psi_points - 1.0);
                        pt.add_row({x, xwell::bound::eigenfunction(params, ns, x)});
                    }
                    pt.metadata["n"] = std::to_string(s.n);
                    pt.metadata["parity"] = parity_name(s.parity);
                    pt.metadata["E"] = xwell::format_double(s.energy);
                    std::string ext = format == "csv" ? ".csv" : ".json";
                    xwell::emit_file(pt, xwell::parse_format(format),
                                     psi_out + "_n" + std::to_string(s.n) + ext);
                }
            }
        } else if (wkb->parsed()) {
            auto targets = common_targets(false);
            targets.emplace("nmax", &nmax);
            targets.emplace("points", &points);
            apply_config(wkb, config, targets);
            xwell::WellParams params{v0, a, c};
            auto levels = xwell::semiclassical::wkb_spectrum(params, nmax);
            CurveTable t;
            t.columns = {{"E", "energy"}, {"f", ""}};
            double e_top = levels.back().second * 1.05;
            for (int i = 0; i < points; ++i) {
                double e = e_top * i / (points - 1.0);
                t.add_row({e, xwell::semiclassical::action_f(params, e).value});
            }
            t.metadata["v0"] = xwell::format_double(v0);
            t.metadata["a"] = xwell::format_double(a);
            t.metadata["two_mu_over_hbar2"] = xwell::format_double(c);
            for (const auto& [n, e] : levels)
                t.metadata["wkb_E" + std::to_string(n)] = xwell::format_double(e);
            write_table(t, format, out);
        } else if (scatter_cmd->parsed()) {
            auto targets = common_targets(true);
            targets.emplace("emin", &emin);
            targets.emplace("emax", &emax);
            targets.emplace("points", &points);
            apply_config(scatter_cmd, config, targets);
            CurveTable t = xwell::scatter::sweep({u0, a, c}, {emin, emax, points},
                                                 threads_default());
            write_table(t, format, out);
        } else if (tunnel->parsed()) {
            if (!tunnel->count("--emax"))
                emax = -0.01;
            auto targets = common_targets(true);
            targets.emplace("emin", &emin);
            targets.emplace("emax", &emax);
            targets.emplace("points", &points);
            apply_config(tunnel, config, targets);
            if (emax >= 0.0 || emin >= emax)
                throw CLI::ValidationError("tunnel-compare needs emin < emax < 0");
            xwell::BarrierParams params{u0, a, c};
            CurveTable t;
            t.columns = {{"E", "energy"}, {"T_exact", ""}, {"T_wkb", ""}};
            for (int i = 0; i < points; ++i) {
                double e = emin + (emax - emin) * i / (points - 1.0);
                t.add_row({e, xwell::scatter::rt_probabilities(params, e).t,
                           xwell::semiclassical::t_wkb(params, e)});
            }
            t.metadata["u0"] = xwell::format_double(u0);
            t.metadata["a"] = xwell::format_double(a);
            t.metadata["two_mu_over_hbar2"] = xwell::format_double(c);
            write_table(t, format, out);
        } else if (poles->parsed()) {
            auto targets = common_targets(false);
            targets.emplace("nmax", &nmax);
            targets.emplace("points", &points);
            apply_config(poles, config, targets);
            xwell::WellParams params{v0, a, c};
            auto pole_list = xwell::scatter::pole_locate(params, nmax);
            CurveTable t;
            t.columns = {{"E", "energy"}, {"R", ""}, {"T", ""}};
            double e_lo = 0.0, e_hi = pole_list.back().first * 1.1;
            int skipped = 0;
            for (int i = 0; i < points; ++i) {
                double e = e_lo + (e_hi - e_lo) * i / (points - 1.0);
                try {
                    auto pt = xwell::scatter::substituted_rt(params, e);
                    t.add_row({e, pt.r, pt.t});
                } catch (const xwell::Error&) {
                    ++skipped;
                }
            }
            t.metadata["v0"] = xwell::format_double(v0);
            t.metadata["a"] = xwell::format_double(a);
            t.metadata["two_mu_over_hbar2"] = xwell::format_double(c);
            t.metadata["invalid_points"] = std::to_string(skipped);
            int idx = 0;
            for (const auto& [e, kind] : pole_list) {
                std::string base = "pole_" + std::to_string(idx++);
                t.metadata[base + "_E"] = xwell::format_double(e);
                t.metadata[base + "_kind"] =
                    kind == xwell::scatter::PoleKind::k_zero ? "K" : "Kprime";
            }
            write_table(t, format, out);
        } else if (crossover->parsed()) {
            if (!crossover->count("--emin"))
                emin = -5.0;
            if (!crossover->count("--emax"))
                emax = 5.0;
            auto targets = common_targets(true);
            targets.emplace("emin", &emin);
            targets.emplace("emax", &emax);
            apply_config(crossover, config, targets);
            double ec = xwell::scatter::find_crossover({u0, a, c}, emin, emax);
            std::cout << xwell::format_double(ec) << "\n";
        } else { // selfcheck
            return xwell::oracle::selfcheck(std::cout) ? 0 : 2;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const xwell::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
