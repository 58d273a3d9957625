#include "xgd/sweep.hpp"

#include <sstream>
#include <stdexcept>

#include "xgd/geodiscord.hpp"
#include "xgd/monogamy.hpp"
#include "xgd/state_io.hpp"
#include "xgd/xstate.hpp"

namespace xgd {

namespace {

const char* const kColumns[] = {"discord_1_23", "d12", "d13", "residual", "k1", "k2", "k3"};

bool known_column(const std::string& name) {
    for (const char* c : kColumns)
        if (name == c) return true;
    return false;
}

DensityMatrix build_state(const SweepSpec& spec, double v) {
    if (spec.family == "ghz") return ghz_mixed(v);
    if (spec.family == "w") return w_mixed(v);
    // bell: substitute the swept coefficient into the base triple
    double c1 = spec.c1, c2 = spec.c2, c3 = spec.c3;
    if (spec.parameter == "c1") c1 = v;
    else if (spec.parameter == "c2") c2 = v;
    else c3 = v;
    return bell_type(c1, c2, c3);
}

}  // namespace

std::string run_sweep(const SweepSpec& spec) {
    if (spec.family != "ghz" && spec.family != "w" && spec.family != "bell") {
        throw std::invalid_argument("run_sweep: unknown family '" + spec.family +
                                    "' (expected ghz, w or bell)");
    }
    const bool bell = spec.family == "bell";
    if (bell) {
        if (spec.parameter != "c1" && spec.parameter != "c2" && spec.parameter != "c3") {
            throw std::invalid_argument("run_sweep: bell sweeps take parameter c1, c2 or c3, got '" +
                                        spec.parameter + "'");
        }
    } else if (spec.parameter != "p") {
        throw std::invalid_argument("run_sweep: " + spec.family +
                                    " sweeps take parameter p, got '" + spec.parameter + "'");
    }
    if (!(spec.from <= spec.to)) {
        throw std::invalid_argument("run_sweep: requires from <= to");
    }
    if (spec.steps < 2) {
        throw std::invalid_argument("run_sweep: steps must be at least 2, got " +
                                    std::to_string(spec.steps));
    }
    if (spec.outputs.empty()) {
        throw std::invalid_argument("run_sweep: at least one output column required");
    }
    for (const std::string& c : spec.outputs) {
        if (!known_column(c)) {
            throw std::invalid_argument("run_sweep: unknown output column '" + c + "'");
        }
    }

    std::ostringstream csv;
    csv << spec.parameter;
    for (const std::string& c : spec.outputs) csv << ',' << c;
    csv << '\n';

    for (int i = 0; i < spec.steps; ++i) {
        const double v =
            spec.from + (spec.to - spec.from) * static_cast<double>(i) / (spec.steps - 1);
        const DensityMatrix rho = build_state(spec, v);
        const DiscordResult d = discord3(rho);
        const MonogamyReport m = monogamy_report(rho);
        csv << format_significant(v, 12);
        for (const std::string& c : spec.outputs) {
            double out = 0.0;
            if (c == "discord_1_23") out = d.value;
            else if (c == "d12") out = m.d_12;
            else if (c == "d13") out = m.d_13;
            else if (c == "residual") out = m.residual;
            else if (c == "k1") out = d.k1;
            else if (c == "k2") out = d.k2;
            else out = d.k3;
            csv << ',' << format_significant(out, 12);
        }
        csv << '\n';
    }
    return csv.str();
}

}  // namespace xgd
