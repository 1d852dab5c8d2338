#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mullineux/analyze.hpp"
#include "mullineux/fixed_points.hpp"
#include "mullineux/js.hpp"
#include "mullineux/json_io.hpp"
#include "mullineux/symbols.hpp"
#include "mullineux/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

mlx::CoreShape parse_core(const std::string& text) {
    if (text == "empty" || text == "0") return mlx::CoreShape::empty();
    const auto sep = text.find_first_of(",^");
    if (sep == std::string::npos) {
        const int j = std::stoi(text);
        return mlx::CoreShape::rect(j, j);
    }
    const int l = std::stoi(text.substr(0, sep));
    const int a = std::stoi(text.substr(sep + 1));
    return mlx::CoreShape::rect(l, a);
}

void print_report(const mlx::VerificationReport& report, const std::string& format) {
    if (format == "text") {
        for (const auto& prop : report.properties) {
            std::cout << (prop.fail == 0 ? "[PASS] " : "[FAIL] ") << report.suite
                      << ": " << prop.name << " (" << prop.pass << " checks";
            if (prop.fail > 0)
                std::cout << ", " << prop.fail
                          << " failures, first: " << prop.first_counterexample;
            std::cout << ")\n";
        }
    } else {
        std::cout << mlx::to_json(report).dump(2) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mullineux symbols, residue symbols and Jantzen-Seitz partitions"};
    app.require_subcommand(1);

    int p = 5;
    int alpha = 0;
    int nmax = 16;
    int wmax = 6;
    int weight_arg = 0;
    bool fixed = false;
    std::string partition_text;
    std::string format = "json";
    std::string core_text = "empty";
    std::string suite = "all";
    std::string p_list = "3,5,7";

    auto* analyze_cmd = app.add_subcommand("analyze", "full report on one partition");
    analyze_cmd->add_option("--p", p, "modulus")->required();
    analyze_cmd->add_option("partition", partition_text, "e.g. 6,6,5,4 or 5^2,4,1^3")
        ->required();

    auto* mullineux_cmd =
        app.add_subcommand("mullineux", "symbols and Mullineux image of a partition");
    mullineux_cmd->add_option("--p", p, "modulus")->required();
    mullineux_cmd->add_option("partition", partition_text, "e.g. 6,6,5,4")->required();

    auto* graph_cmd = app.add_subcommand("graph", "construction graph export");
    graph_cmd->add_option("--p", p, "modulus")->required();
    graph_cmd->add_option("--alpha", alpha, "type (ignored with --fixed)");
    graph_cmd->add_flag("--fixed", fixed, "restrict to Mullineux fixed points");
    graph_cmd->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    auto* jsw_cmd = app.add_subcommand("js-witness",
                                       "JS partition with a given core and weight");
    jsw_cmd->add_option("--p", p, "modulus")->required();
    jsw_cmd->add_option("--weight", weight_arg, "target weight")->required();
    jsw_cmd->add_option("--core", core_text, "empty, or l,a for a rectangle");

    auto* fw_cmd = app.add_subcommand(
        "fixed-witness", "Mullineux fixed JS partition with a given core and weight");
    fw_cmd->add_option("--p", p, "modulus")->required();
    fw_cmd->add_option("--weight", weight_arg, "target weight (even)")->required();
    fw_cmd->add_option("--core", core_text, "0 for empty, or j for the square (j^j)");

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive verification suites");
    verify_cmd
        ->add_option("suite", suite,
                     "roundtrip, peaks, js-equiv, cores, weights, fixed or all")
        ->check(CLI::IsMember(
            {"roundtrip", "peaks", "js-equiv", "cores", "weights", "fixed", "all"}));
    verify_cmd->add_option("--p", p_list, "comma separated moduli");
    verify_cmd->add_option("--nmax", nmax, "largest partition size");
    verify_cmd->add_option("--wmax", wmax, "largest witness weight");
    verify_cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze_cmd) {
            const auto lambda = mlx::parse_partition(partition_text);
            std::cout << mlx::analyze_partition(lambda, p).dump(2) << '\n';
            return kExitOk;
        }

        if (*mullineux_cmd) {
            const auto lambda = mlx::parse_partition(partition_text);
            const auto symbol = mlx::mullineux_symbol(lambda, p);
            const auto residues = mlx::residue_symbol(symbol, p);
            mlx::json out;
            out["schema"] = 1;
            out["p"] = p;
            out["partition"] = mlx::to_json(lambda);
            out["mullineux_symbol"] = mlx::to_json(symbol);
            out["residue_symbol"] = mlx::to_json(residues);
            out["image"] = mlx::to_json(mlx::mullineux_image(lambda, p));
            out["image_symbol"] = mlx::to_json(mlx::mullineux_map(symbol, p));
            out["fixed"] = mlx::is_mullineux_fixed(lambda, p);
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }

        if (*graph_cmd) {
            const auto graph =
                fixed ? mlx::build_fixed_js_graph(p) : mlx::build_js_graph(alpha, p);
            if (format == "dot")
                std::cout << mlx::to_dot(graph);
            else
                std::cout << mlx::to_json(graph).dump(2) << '\n';
            return kExitOk;
        }

        if (*jsw_cmd) {
            const auto witness = mlx::js_witness(parse_core(core_text), weight_arg, p);
            std::cout << mlx::to_json(witness).dump() << '\n';
            return kExitOk;
        }

        if (*fw_cmd) {
            const auto witness =
                mlx::fixed_witness(weight_arg, parse_core(core_text), p);
            if (!witness) {
                std::cout << "infeasible\n";
                return kExitOk;
            }
            std::cout << mlx::to_json(*witness).dump() << '\n';
            return kExitOk;
        }

        if (*verify_cmd) {
            std::vector<int> ps;
            std::stringstream ss(p_list);
            std::string token;
            while (std::getline(ss, token, ',')) ps.push_back(std::stoi(token));
            if (ps.empty()) throw std::invalid_argument("empty modulus list");

            std::vector<mlx::VerificationReport> reports;
            if (suite == "all") reports.push_back(mlx::verify_worked_examples());
            if (suite == "roundtrip" || suite == "all")
                reports.push_back(mlx::verify_roundtrip(ps, nmax));
            if (suite == "peaks" || suite == "all")
                reports.push_back(mlx::verify_peaks(ps, nmax));
            if (suite == "js-equiv" || suite == "all")
                reports.push_back(mlx::verify_js_equivalence(ps, nmax));
            if (suite == "cores" || suite == "all") {
                reports.push_back(mlx::verify_construction(ps, nmax));
                reports.push_back(mlx::verify_core_theorems(ps, nmax));
                reports.push_back(mlx::verify_js_witnesses(ps, wmax));
            }
            if (suite == "weights" || suite == "all")
                reports.push_back(mlx::verify_weight_formula(ps, nmax));
            if (suite == "fixed" || suite == "all")
                reports.push_back(mlx::verify_fixed_points(ps, nmax, 10));

            bool ok = true;
            for (const auto& report : reports) {
                print_report(report, format);
                ok = ok && report.ok();
            }
            return ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
