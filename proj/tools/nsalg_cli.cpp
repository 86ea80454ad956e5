// Command-line front end: exact brackets, normal ordering, truncated module
// construction, simplicity probes, and structure scans.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsalg/algebra.hpp"
#include "nsalg/analysis.hpp"
#include "nsalg/io.hpp"
#include "nsalg/scan.hpp"

using namespace nsalg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReducible = 1;
constexpr int kExitError = 2;

Rational parse_rational_flag(const std::string& text) { return Rational::from_string(text); }

HalfInt parse_level_flag(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return HalfInt::whole(std::stoll(text));
    if (text.substr(slash + 1) != "2") throw ParseError("levels are integers or halves, got '" + text + "'");
    return HalfInt::halves(std::stoll(text.substr(0, slash)));
}

WhittakerData whittaker_from_flags(int k, const std::vector<std::string>& sets,
                                   const std::string& ell) {
    WhittakerData psi;
    psi.k = k;
    psi.ell = parse_rational_flag(ell);
    for (const auto& entry : sets) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || entry.empty() || entry[0] != 'L')
            throw ParseError("--set expects Lm=value, got '" + entry + "'");
        psi.values[std::stoi(entry.substr(1, eq - 1))] = parse_rational_flag(entry.substr(eq + 1));
    }
    return psi;
}

void print_basis(const InducedModule& M, bool as_json) {
    if (as_json) {
        json rows = json::array();
        for (std::size_t idx = 0; idx < M.basis_size(); ++idx) {
            const auto& key = M.basis_key(idx);
            rows.push_back(json{{"index", idx},
                                {"vector", M.format_key(key)},
                                {"weight", InducedModule::weight_of(key)},
                                {"l0_offset", InducedModule::l0_offset(key).str()}});
        }
        std::cout << json{{"cap", M.cap()}, {"dim", M.basis_size()}, {"basis", rows}}.dump(2)
                  << "\n";
        return;
    }
    std::cout << "basis (" << M.basis_size() << " vectors, cap " << M.cap() << ")\n";
    for (std::size_t idx = 0; idx < M.basis_size(); ++idx) {
        const auto& key = M.basis_key(idx);
        std::cout << idx << ": " << M.format_key(key) << "  weight " << InducedModule::weight_of(key)
                  << "  L0-offset " << InducedModule::l0_offset(key).str() << "\n";
    }
}

int print_probe(const InducedModule& M, std::uint64_t seed, bool as_json) {
    const SimplicityReport report = simplicity_probe(M, seed);
    if (as_json) {
        std::cout << simplicity_to_json(report, M).dump(2) << "\n";
    } else {
        std::cout << "verdict: " << verdict_str(report.verdict) << "\n";
        if (report.witness) std::cout << "witness: " << M.format(*report.witness) << "\n";
    }
    return report.verdict == Verdict::Reducible ? kExitReducible : kExitOk;
}

struct ModuleFlags {
    std::string spec_path;
    std::string h;
    int k = -1;
    std::vector<std::string> sets;
    std::string ell = "0";
    long cap = 4;
    long inner_cap = -1;

    void attach(CLI::App* cmd, bool with_shortcuts = true) {
        cmd->add_option("--spec", spec_path, "module spec JSON file");
        if (with_shortcuts) {
            cmd->add_option("--h", h, "highest-weight shortcut: L0 eigenvalue");
            cmd->add_option("--k", k, "character order for the Whittaker shortcut");
            cmd->add_option("--set", sets, "character value Lm=q (repeatable)");
        }
        cmd->add_option("--ell", ell, "central charge");
        cmd->add_option("--cap", cap, "weight cap of the materialized slice");
        cmd->add_option("--inner-cap", inner_cap, "inner cap for capped realizations");
    }

    InducedModule build() const {
        std::optional<long> inner;
        if (inner_cap >= 0) inner = inner_cap;
        const Rational ell_q = parse_rational_flag(ell);
        if (!spec_path.empty())
            return InducedModule::induce(load_spec_file(spec_path), ell_q, cap, inner);
        if (!h.empty()) return verma(parse_rational_flag(h), ell_q, cap);
        if (k >= 0) {
            WhittakerData psi = whittaker_from_flags(k, sets, ell);
            return InducedModule::induce(whittaker_bmodule(psi), ell_q, cap, inner);
        }
        throw ParseError("no module given: use --spec, --h, or --k/--set");
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Neveu-Schwarz algebra toolkit"};
    app.require_subcommand(1);
    // --h is an option on several commands, so help is long-form only
    app.set_help_flag("--help", "print help");
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");
    auto sub = [&](const char* name, const char* desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->set_help_flag("--help", "print help");
        return cmd;
    };

    // bracket X Y
    auto* cmd_bracket = sub("bracket", "super-bracket of two generators");
    std::string arg_x, arg_y;
    cmd_bracket->add_option("x", arg_x, "first generator")->required();
    cmd_bracket->add_option("y", arg_y, "second generator")->required();

    // normal-order WORD
    auto* cmd_no = sub("normal-order", "straighten a word of generators");
    std::string arg_word;
    cmd_no->add_option("word", arg_word, "juxtaposed generators, e.g. \"L(1)L(-1)\"")->required();

    // act
    auto* cmd_act = sub("act", "apply an element to a module vector");
    ModuleFlags act_flags;
    act_flags.attach(cmd_act);
    std::string act_x, act_v;
    cmd_act->add_option("--x", act_x, "element to apply")->required();
    cmd_act->add_option("--v", act_v, "module vector, e.g. \"L(-1)⊗v\"")->required();

    // verma
    auto* cmd_verma = sub("verma", "highest-weight module slice");
    std::string verma_h{"0"}, verma_ell{"0"};
    long verma_cap = 4;
    bool verma_probe = false;
    cmd_verma->add_option("--h", verma_h, "L0 eigenvalue")->required();
    cmd_verma->add_option("--ell", verma_ell, "central charge")->required();
    cmd_verma->add_option("--cap", verma_cap, "weight cap");
    cmd_verma->add_flag("--probe", verma_probe, "run the simplicity probe");

    // whittaker
    auto* cmd_wh = sub("whittaker", "Whittaker-type module slice");
    int wh_k = 0;
    std::vector<std::string> wh_sets;
    std::string wh_ell{"0"};
    long wh_cap = 4, wh_inner = -1;
    bool wh_probe = false, wh_criterion = false;
    cmd_wh->add_option("--k", wh_k, "character order")->required();
    cmd_wh->add_option("--set", wh_sets, "character value Lm=q (repeatable)");
    cmd_wh->add_option("--ell", wh_ell, "central charge")->required();
    cmd_wh->add_option("--cap", wh_cap, "weight cap");
    cmd_wh->add_option("--inner-cap", wh_inner, "inner cap of the realization");
    cmd_wh->add_flag("--probe", wh_probe, "run the simplicity probe");
    cmd_wh->add_flag("--criterion", wh_criterion, "print the closed-form simplicity criterion");

    // induce
    auto* cmd_induce = sub("induce", "induce from a module spec file");
    ModuleFlags induce_flags;
    induce_flags.attach(cmd_induce, /*with_shortcuts=*/false);

    // probe-simplicity
    auto* cmd_probe = sub("probe-simplicity", "simplicity probe of a module slice");
    ModuleFlags probe_flags;
    probe_flags.attach(cmd_probe);
    std::uint64_t probe_seed = kDefaultSeed;
    cmd_probe->add_option("--seed", probe_seed, "seed for randomized checks");

    // check-jacobi
    auto* cmd_jacobi = sub("check-jacobi", "structure-constant identity sweep");
    int jacobi_max = 16;
    bool jacobi_serial = false;
    cmd_jacobi->add_option("--max-index", jacobi_max, "range bound on |2*index|");
    cmd_jacobi->add_flag("--serial", jacobi_serial, "use the serial reference kernels");

    // singular-vectors
    auto* cmd_sing = sub("singular-vectors", "singular vectors of a Verma slice");
    std::string sing_h, sing_ell, sing_level;
    cmd_sing->add_option("--h", sing_h, "L0 eigenvalue")->required();
    cmd_sing->add_option("--ell", sing_ell, "central charge")->required();
    cmd_sing->add_option("--level", sing_level, "level: 1/2, 1, 3/2 or 2")->required();

    // validate
    auto* cmd_validate = sub("validate", "validate a module spec file");
    std::string validate_path;
    cmd_validate->add_option("--spec", validate_path, "module spec JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (cmd_bracket->parsed()) {
            const Element b = bracket(parse_generator(arg_x), parse_generator(arg_y));
            if (as_json) std::cout << json{{"result", b.str()}}.dump(2) << "\n";
            else std::cout << b.str() << "\n";
            return kExitOk;
        }
        if (cmd_no->parsed()) {
            const Element e = normal_order(parse_word(arg_word));
            if (as_json) std::cout << json{{"result", e.str()}}.dump(2) << "\n";
            else std::cout << e.str() << "\n";
            return kExitOk;
        }
        if (cmd_act->parsed()) {
            const InducedModule M = act_flags.build();
            const IndVector v = parse_ind_vector(act_v, M);
            const IndVector out = M.act(parse_element(act_x), v);
            if (as_json)
                std::cout << json{{"result", M.format(out)},
                                  {"terms", ind_vector_to_json(out, M)}}
                                 .dump(2)
                          << "\n";
            else std::cout << M.format(out) << "\n";
            return kExitOk;
        }
        if (cmd_verma->parsed()) {
            const InducedModule M =
                verma(parse_rational_flag(verma_h), parse_rational_flag(verma_ell), verma_cap);
            if (verma_probe) return print_probe(M, kDefaultSeed, as_json);
            print_basis(M, as_json);
            return kExitOk;
        }
        if (cmd_wh->parsed()) {
            const WhittakerData psi = whittaker_from_flags(wh_k, wh_sets, wh_ell);
            if (wh_criterion) {
                const bool simple = whittaker_simplicity_criterion(psi);
                if (as_json) std::cout << json{{"simple", simple}}.dump(2) << "\n";
                else std::cout << "criterion: " << (simple ? "simple" : "not simple") << "\n";
                return simple ? kExitOk : kExitReducible;
            }
            std::optional<long> inner;
            if (wh_inner >= 0) inner = wh_inner;
            const InducedModule M = whittaker_module(psi, wh_cap, inner);
            if (wh_probe) return print_probe(M, kDefaultSeed, as_json);
            print_basis(M, as_json);
            return kExitOk;
        }
        if (cmd_induce->parsed()) {
            const InducedModule M = induce_flags.build();
            print_basis(M, as_json);
            return kExitOk;
        }
        if (cmd_probe->parsed()) {
            const InducedModule M = probe_flags.build();
            return print_probe(M, probe_seed, as_json);
        }
        if (cmd_jacobi->parsed()) {
            const ScanStats anti =
                jacobi_serial ? scan_antisymmetry_serial(jacobi_max) : scan_antisymmetry(jacobi_max);
            const ScanStats jac =
                jacobi_serial ? scan_super_jacobi_serial(jacobi_max) : scan_super_jacobi(jacobi_max);
            if (as_json) {
                std::cout << json{{"antisymmetry",
                                   json{{"checked", anti.checked}, {"failures", anti.failures}}},
                                  {"jacobi",
                                   json{{"checked", jac.checked}, {"failures", jac.failures}}}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "antisymmetry: checked " << anti.checked << ", failures "
                          << anti.failures << "\n";
                std::cout << "jacobi: checked " << jac.checked << ", failures " << jac.failures
                          << "\n";
                for (const auto& sample : anti.failure_samples) std::cout << "  " << sample << "\n";
                for (const auto& sample : jac.failure_samples) std::cout << "  " << sample << "\n";
            }
            return (anti.ok() && jac.ok()) ? kExitOk : kExitReducible;
        }
        if (cmd_sing->parsed()) {
            const Rational h = parse_rational_flag(sing_h);
            const Rational ell = parse_rational_flag(sing_ell);
            const SingularReport report = singular_vectors(h, ell, parse_level_flag(sing_level));
            const InducedModule M = verma(h, ell, 2);
            if (as_json) {
                std::cout << singular_to_json(report, M).dump(2) << "\n";
            } else if (report.vectors.empty()) {
                std::cout << "none\n";
            } else {
                for (const auto& v : report.vectors) std::cout << M.format(v) << "\n";
            }
            return kExitOk;
        }
        if (cmd_validate->parsed()) {
            const BModuleSpec spec = load_spec_file(validate_path);
            const ValidationReport report = validate_bmodule(spec);
            if (as_json) std::cout << validation_to_json(report).dump(2) << "\n";
            else std::cout << report.str() << "\n";
            return report.ok() ? kExitOk : kExitError;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const SpecError& e) {
        std::cerr << "invalid module spec: " << e.what() << "\n";
        return kExitError;
    } catch (const TruncationOverflow& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
