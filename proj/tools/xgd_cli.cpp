// xgd: geometric quantum discord of two- and three-qubit X states.
//
// Exit codes: 0 success, 2 parse failure (command line or state file),
// 3 validation failure (density-matrix invariants), 4 class mismatch,
// 1 any other error.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xgd/errors.hpp"
#include "xgd/geodiscord.hpp"
#include "xgd/monogamy.hpp"
#include "xgd/oracle.hpp"
#include "xgd/state_io.hpp"
#include "xgd/sweep.hpp"
#include "xgd/xstate.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitClassMismatch = 4;

std::string num(double v) { return xgd::format_significant(v, 12); }

void print_kv(const std::string& key, const std::string& value) {
    std::printf("%-14s: %s\n", key.c_str(), value.c_str());
}

std::string vec3(const std::array<double, 3>& e) {
    return "(" + num(e[0]) + ", " + num(e[1]) + ", " + num(e[2]) + ")";
}

const char* branch_name(xgd::Branch b) { return b == xgd::Branch::B1 ? "B1" : "B3"; }

const char* method_name(xgd::Method m) {
    switch (m) {
        case xgd::Method::Class1Closed: return "class1";
        case xgd::Method::Class2Closed: return "class2";
        case xgd::Method::Tensor: return "tensor";
        case xgd::Method::TwoQubit: return "twoqubit";
    }
    return "?";
}

xgd::SphereGrid parse_grid(const std::string& grid_text, double refine_tol) {
    xgd::SphereGrid g;
    if (!grid_text.empty()) {
        const auto x = grid_text.find('x');
        try {
            if (x == std::string::npos) throw std::invalid_argument("no separator");
            g.n_theta = std::stoi(grid_text.substr(0, x));
            g.n_phi = std::stoi(grid_text.substr(x + 1));
        } catch (const std::exception&) {
            throw xgd::ParseError("--grid expects the form NxM (e.g. 64x128), got '" + grid_text +
                                  "'");
        }
    }
    if (refine_tol > 0.0) g.refine_tol = refine_tol;
    return g;
}

xgd::DensityMatrix load_input(const std::string& path, const std::string& permute) {
    xgd::DensityMatrix rho = xgd::load_state(path);
    if (permute.empty()) return rho;
    std::array<int, 3> p{};
    if (std::sscanf(permute.c_str(), "%d,%d,%d", &p[0], &p[1], &p[2]) != 3) {
        throw xgd::ParseError("--permute expects three comma-separated qubit indices, got '" +
                              permute + "'");
    }
    return xgd::permute_qubits(rho, p);
}

// ---- validate ----------------------------------------------------------

int entry_pattern_group(int index, xgd::XClass cls) {
    // Entries may be nonzero only between basis states of equal parity group.
    if (cls == xgd::XClass::TwoQubitX) {
        const int b1 = (index >> 1) & 1, b2 = index & 1;
        return (b1 + b2) % 2;
    }
    const int b1 = (index >> 2) & 1, b2 = (index >> 1) & 1, b3 = index & 1;
    return cls == xgd::XClass::Class1 ? (b1 + b2) % 2 : (b1 + b2 + b3) % 2;
}

double off_pattern_entry_max(const xgd::DensityMatrix& rho, xgd::XClass cls) {
    double m = 0.0;
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j)
            if (entry_pattern_group(i, cls) != entry_pattern_group(j, cls))
                m = std::max(m, std::abs(rho(i, j)));
    return m;
}

int cmd_validate(const std::string& path, bool as_json) {
    const xgd::DensityMatrix rho = xgd::load_state(path);
    const xgd::XClass cls = xgd::classify(rho);
    json j;
    j["file"] = path;
    j["dim"] = rho.dim();
    j["class"] = xgd::to_string(cls);
    if (rho.dim() == 8) {
        const double c1 = xgd::commutator_residual(rho, xgd::XClass::Class1);
        const double c2 = xgd::commutator_residual(rho, xgd::XClass::Class2);
        j["comm_class1"] = c1;
        j["comm_class2"] = c2;
        const xgd::CorrelationTensor3 t = xgd::bloch3(rho);
        if (cls == xgd::XClass::Class1 || cls == xgd::XClass::Both) {
            j["off_support_class1"] = xgd::off_support_max(t, xgd::XClass::Class1);
            j["off_pattern_class1"] = off_pattern_entry_max(rho, xgd::XClass::Class1);
        }
        if (cls == xgd::XClass::Class2 || cls == xgd::XClass::Both) {
            j["off_support_class2"] = xgd::off_support_max(t, xgd::XClass::Class2);
            j["off_pattern_class2"] = off_pattern_entry_max(rho, xgd::XClass::Class2);
        }
        j["compliant"] = cls != xgd::XClass::NonX;
    } else {
        j["comm_twoqubit"] = xgd::commutator_residual(rho, xgd::XClass::TwoQubitX);
        j["off_pattern"] = off_pattern_entry_max(rho, xgd::XClass::TwoQubitX);
        j["compliant"] = cls == xgd::XClass::TwoQubitX;
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& [key, value] : j.items()) {
        print_kv(key, value.is_string() ? value.get<std::string>() : value.dump());
    }
    return kExitOk;
}

// ---- discord ------------------------------------------------------------

xgd::KMatrix kmatrix_by_route(const xgd::DensityMatrix& rho, const std::string& route) {
    if (route == "class1") return xgd::kmatrix_class1(rho);
    if (route == "class2") return xgd::kmatrix_class2(rho);
    return xgd::kmatrix_tensor(rho);
}

int cmd_discord(const std::string& path, const std::string& method, const std::string& kroute,
                const std::string& grid_text, double refine_tol, const std::string& permute,
                bool as_json) {
    const xgd::DensityMatrix rho = load_input(path, permute);

    xgd::DiscordResult d;
    if (rho.dim() == 4) {
        if (kroute != "auto") {
            throw std::invalid_argument("--kroute applies to 8x8 states only");
        }
        d = xgd::discord2(rho);
    } else if (kroute == "auto") {
        d = xgd::discord3(rho);
    } else {
        const xgd::KMatrix k = kmatrix_by_route(rho, kroute);
        const xgd::KEigen ke = xgd::k_eigen(k);
        d.k1 = ke.k1;
        d.k2 = ke.k2;
        d.k3 = ke.k3;
        d.e_max = ke.e_max;
        d.branch = ke.branch;
        d.method = kroute == "class1"   ? xgd::Method::Class1Closed
                   : kroute == "class2" ? xgd::Method::Class2Closed
                                        : xgd::Method::Tensor;
        const double kmax = ke.branch == xgd::Branch::B3 ? ke.k3 : ke.k1;
        d.value = (ke.k1 + ke.k2 + ke.k3 - kmax) / 8.0;
    }

    json j;
    j["file"] = path;
    j["value"] = d.value;
    j["k1"] = d.k1;
    j["k2"] = d.k2;
    j["k3"] = d.k3;
    j["branch"] = branch_name(d.branch);
    j["method"] = method_name(d.method);
    j["e_max"] = {d.e_max[0], d.e_max[1], d.e_max[2]};

    if (method == "oracle") {
        const xgd::SphereGrid grid = parse_grid(grid_text, refine_tol);
        double worst = 0.0;
        if (rho.dim() == 8) {
            const xgd::OracleResult s = xgd::oracle_discord_sphere(rho, grid);
            j["oracle_sphere"] = s.value;
            j["oracle_sphere_psd_ok"] = s.chi_psd_ok;
            worst = std::max(worst, std::abs(s.value - d.value));
        }
        const xgd::OracleResult m = xgd::oracle_discord_measurement(rho, grid);
        j["oracle_measurement"] = m.value;
        j["oracle_measurement_psd_ok"] = m.chi_psd_ok;
        worst = std::max(worst, std::abs(m.value - d.value));
        j["oracle_max_gap"] = worst;
    }

    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    print_kv("file", path);
    print_kv("value", num(d.value));
    print_kv("k1", num(d.k1));
    print_kv("k2", num(d.k2));
    print_kv("k3", num(d.k3));
    print_kv("branch", branch_name(d.branch));
    print_kv("method", method_name(d.method));
    print_kv("e_max", vec3(d.e_max));
    if (method == "oracle") {
        if (j.contains("oracle_sphere")) print_kv("oracle_sphere", num(j["oracle_sphere"]));
        print_kv("oracle_meas", num(j["oracle_measurement"]));
        print_kv("oracle_gap", num(j["oracle_max_gap"]));
    }
    return kExitOk;
}

// ---- closest ------------------------------------------------------------

int cmd_closest(const std::string& path, const std::string& out, bool as_json) {
    const xgd::DensityMatrix rho = xgd::load_state(path);
    const xgd::ClassicalState c =
        rho.dim() == 8 ? xgd::closest_classical3(rho) : xgd::closest_classical2(rho);
    const double discord = rho.dim() == 8 ? xgd::discord3(rho).value : xgd::discord2(rho).value;

    if (!out.empty()) {
        xgd::save_state(out, c.chi, "closest classical state of " + path);
    }
    json j;
    j["file"] = path;
    j["psd_ok"] = c.psd_ok;
    j["distance_sq"] = c.distance_sq;
    j["discord"] = discord;
    j["certificate_gap"] = std::abs(c.distance_sq - discord);
    if (!out.empty()) j["out"] = out;
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (out.empty()) {
        std::cout << xgd::format_state(c.chi, "closest classical state of " + path);
        std::fprintf(stderr, "psd_ok        : %s\n", c.psd_ok ? "yes" : "no");
        std::fprintf(stderr, "distance_sq   : %s\n", num(c.distance_sq).c_str());
        std::fprintf(stderr, "discord       : %s\n", num(discord).c_str());
        return kExitOk;
    }
    print_kv("out", out);
    print_kv("psd_ok", c.psd_ok ? "yes" : "no");
    print_kv("distance_sq", num(c.distance_sq));
    print_kv("discord", num(discord));
    print_kv("certificate_gap", num(std::abs(c.distance_sq - discord)));
    return kExitOk;
}

// ---- monogamy -----------------------------------------------------------

int cmd_monogamy(const std::string& path, bool as_json) {
    const xgd::DensityMatrix rho = xgd::load_state(path);
    if (rho.dim() != 8) {
        throw std::invalid_argument("monogamy: expected an 8x8 state, got dimension " +
                                    std::to_string(rho.dim()));
    }
    const xgd::MonogamyReport r = xgd::monogamy_report(rho);
    if (as_json) {
        json j;
        j["file"] = path;
        j["class"] = xgd::to_string(r.cls);
        j["d_1_23"] = r.d_1_23;
        j["d_12"] = r.d_12;
        j["d_13"] = r.d_13;
        j["residual"] = r.residual;
        j["monogamous"] = r.monogamous;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    print_kv("file", path);
    print_kv("class", xgd::to_string(r.cls));
    print_kv("d_1_23", num(r.d_1_23));
    print_kv("d_12", num(r.d_12));
    print_kv("d_13", num(r.d_13));
    print_kv("residual", num(r.residual));
    print_kv("monogamous", r.monogamous ? "yes" : "no");
    return kExitOk;
}

// ---- family / random ----------------------------------------------------

int emit_state(const xgd::DensityMatrix& rho, const std::string& label, const std::string& emit,
               const std::string& out, bool as_json) {
    if (emit == "discord") {
        const xgd::DiscordResult d =
            rho.dim() == 8 ? xgd::discord3(rho) : xgd::discord2(rho);
        if (as_json) {
            json j;
            j["label"] = label;
            j["value"] = d.value;
            j["k1"] = d.k1;
            j["k2"] = d.k2;
            j["k3"] = d.k3;
            j["branch"] = branch_name(d.branch);
            j["method"] = method_name(d.method);
            std::cout << j.dump(2) << "\n";
        } else {
            print_kv("label", label);
            print_kv("value", num(d.value));
            print_kv("k1", num(d.k1));
            print_kv("k2", num(d.k2));
            print_kv("k3", num(d.k3));
            print_kv("branch", branch_name(d.branch));
            print_kv("method", method_name(d.method));
        }
        return kExitOk;
    }
    if (out.empty()) {
        std::cout << xgd::format_state(rho.matrix(), label);
    } else {
        xgd::save_state(out, rho.matrix(), label);
        print_kv("out", out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric quantum discord of two- and three-qubit X states"};
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "Classify a state file and check X patterns");
    std::string v_path;
    bool v_json = false;
    validate->add_option("file", v_path, "state file")->required();
    validate->add_flag("--json", v_json, "machine-readable output");

    // discord
    auto* discord = app.add_subcommand("discord", "Geometric discord of the 1|23 split");
    std::string d_path, d_method = "analytic", d_kroute = "auto", d_grid, d_permute;
    double d_refine_tol = 0.0;
    bool d_json = false;
    discord->add_option("file", d_path, "state file")->required();
    discord->add_option("--method", d_method, "analytic | oracle")
        ->check(CLI::IsMember({"analytic", "oracle"}));
    discord->add_option("--kroute", d_kroute, "K-matrix route: auto | class1 | class2 | tensor")
        ->check(CLI::IsMember({"auto", "class1", "class2", "tensor"}));
    discord->add_option("--grid", d_grid, "oracle grid NxM (default 64x128)");
    discord->add_option("--refine-tol", d_refine_tol, "oracle refinement tolerance");
    discord->add_option("--permute", d_permute, "relabel qubits, e.g. 2,1,3");
    discord->add_flag("--json", d_json, "machine-readable output");

    // closest
    auto* closest = app.add_subcommand("closest", "Closest zero-discord classical state");
    std::string c_path, c_out;
    bool c_json = false;
    closest->add_option("file", c_path, "state file")->required();
    closest->add_option("--out", c_out, "write the classical state here");
    closest->add_flag("--json", c_json, "machine-readable output");

    // monogamy
    auto* monogamy = app.add_subcommand("monogamy", "D(1|23) vs D(1,2) + D(1,3)");
    std::string m_path;
    bool m_json = false;
    monogamy->add_option("file", m_path, "state file")->required();
    monogamy->add_flag("--json", m_json, "machine-readable output");

    // family
    auto* family = app.add_subcommand("family", "Construct ghz, w or bell family states");
    std::string f_name, f_emit = "state", f_out, f_label;
    double f_p = 0.0, f_c1 = 0.0, f_c2 = 0.0, f_c3 = 0.0;
    bool f_json = false;
    family->add_option("name", f_name, "ghz | w | bell")
        ->required()
        ->check(CLI::IsMember({"ghz", "w", "bell"}));
    family->add_option("--p", f_p, "mixing weight (ghz, w)");
    family->add_option("--c1", f_c1, "bell coefficient c1");
    family->add_option("--c2", f_c2, "bell coefficient c2");
    family->add_option("--c3", f_c3, "bell coefficient c3");
    family->add_option("--emit", f_emit, "state | discord")
        ->check(CLI::IsMember({"state", "discord"}));
    family->add_option("--out", f_out, "write the state here");
    family->add_option("--label", f_label, "state label");
    family->add_flag("--json", f_json, "machine-readable output");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Family parameter sweep to CSV");
    xgd::SweepSpec spec;
    std::string s_outputs, s_out;
    sweep->add_option("--family", spec.family, "ghz | w | bell")->required();
    sweep->add_option("--param", spec.parameter, "p (ghz, w) or c1|c2|c3 (bell)")->required();
    sweep->add_option("--from", spec.from, "start value")->required();
    sweep->add_option("--to", spec.to, "end value")->required();
    sweep->add_option("--steps", spec.steps, "row count (>= 2)")->required();
    sweep->add_option("--outputs", s_outputs,
                      "comma list among discord_1_23,d12,d13,residual,k1,k2,k3");
    sweep->add_option("--c1", spec.c1, "fixed bell c1");
    sweep->add_option("--c2", spec.c2, "fixed bell c2");
    sweep->add_option("--c3", spec.c3, "fixed bell c3");
    sweep->add_option("--out", s_out, "write CSV here instead of stdout");

    // random
    auto* random = app.add_subcommand("random", "Seeded random (twirled) test states");
    std::string r_class = "class1", r_out, r_label;
    std::uint64_t r_seed = 0;
    int r_dim = 8;
    random->add_option("--class", r_class, "class1 | class2 | twoqubit | none")
        ->check(CLI::IsMember({"class1", "class2", "twoqubit", "none"}));
    random->add_option("--dim", r_dim, "dimension for --class none (2, 4 or 8)");
    random->add_option("--seed", r_seed, "RNG seed")->required();
    random->add_option("--out", r_out, "write the state here");
    random->add_option("--label", r_label, "state label");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (validate->parsed()) return cmd_validate(v_path, v_json);
        if (discord->parsed())
            return cmd_discord(d_path, d_method, d_kroute, d_grid, d_refine_tol, d_permute,
                               d_json);
        if (closest->parsed()) return cmd_closest(c_path, c_out, c_json);
        if (monogamy->parsed()) return cmd_monogamy(m_path, m_json);
        if (family->parsed()) {
            xgd::DensityMatrix rho = f_name == "ghz"   ? xgd::ghz_mixed(f_p)
                                     : f_name == "w"   ? xgd::w_mixed(f_p)
                                                       : xgd::bell_type(f_c1, f_c2, f_c3);
            std::string label = f_label;
            if (label.empty()) {
                label = f_name == "bell" ? f_name + " c=(" + num(f_c1) + "," + num(f_c2) + "," +
                                               num(f_c3) + ")"
                                         : f_name + " p=" + num(f_p);
            }
            return emit_state(rho, label, f_emit, f_out, f_json);
        }
        if (sweep->parsed()) {
            if (!s_outputs.empty()) {
                spec.outputs.clear();
                std::string token;
                for (char ch : s_outputs + ",") {
                    if (ch == ',') {
                        if (!token.empty()) spec.outputs.push_back(token);
                        token.clear();
                    } else {
                        token += ch;
                    }
                }
            }
            const std::string csv = xgd::run_sweep(spec);
            if (s_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream f(s_out, std::ios::binary);
                if (!f) throw xgd::ParseError("sweep: cannot open '" + s_out + "' for writing");
                f << csv;
                print_kv("out", s_out);
            }
            return kExitOk;
        }
        if (random->parsed()) {
            xgd::DensityMatrix rho = r_class == "class1" ? xgd::random_x_state(xgd::XClass::Class1, r_seed)
                                     : r_class == "class2"
                                         ? xgd::random_x_state(xgd::XClass::Class2, r_seed)
                                     : r_class == "twoqubit"
                                         ? xgd::random_x_state(xgd::XClass::TwoQubitX, r_seed)
                                         : xgd::random_density(r_dim, r_seed);
            std::string label = r_label.empty()
                                    ? "random " + r_class + " seed=" + std::to_string(r_seed)
                                    : r_label;
            return emit_state(rho, label, "state", r_out, false);
        }
    } catch (const xgd::ClassMismatchError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitClassMismatch;
    } catch (const xgd::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return kExitError;
}
