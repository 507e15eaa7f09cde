#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "zetapoly/cli.hpp"

namespace zc = zetapoly::cli;

int main(int argc, char** argv) {
    CLI::App app{"Zeta polynomials from Hecke eigenforms and Habiro lambda-structure checks"};
    app.require_subcommand(1);

    zc::RunConfig cfg;
    std::string format = "json";
    std::string out_path;
    std::string roots_dir;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--prec-bits", cfg.prec_bits, "Working precision in bits for numeric parts")->capture_default_str();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
        sub->add_option("--out", out_path, "Output path (default: standard output)");
    };
    auto add_weight = [&](CLI::App* sub) {
        sub->add_option_function<int>("--weight", [&](const int& k) { cfg.weight = k; }, "Weight k of the eigenform");
    };
    auto add_d = [&](CLI::App* sub) {
        sub->add_option_function<int>("--d", [&](const int& d) { cfg.d = d; }, "Denominator exponent d > e (default e+2)");
    };

    const std::map<std::string, std::pair<zc::Command, std::string>> commands{
        {"periods", {zc::Command::periods, "Odd period polynomial and CFI quotient"}},
        {"rv", {zc::Command::rv, "Zeta polynomial H_f with functional equation and zero certificates"}},
        {"certify", {zc::Command::certify, "Unit-circle and critical-line certificates"}},
        {"habiro", {zc::Command::habiro, "Lambda-structure checks on the truncated Habiro ring"}},
        {"lfun", {zc::Command::lfun, "Completed L-values at the critical integers"}},
        {"report", {zc::Command::report, "Sweep all supported weights and d = e+1..e+6"}},
    };
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.second);
        add_common(sub);
        if (name == "periods" || name == "rv" || name == "certify" || name == "lfun") add_weight(sub);
        if (name == "rv" || name == "certify") add_d(sub);
        if (name == "habiro")
            sub->add_option_function<int>("--level", [&](const int& n) { cfg.level = n; }, "Truncation level N");
        if (name == "report") sub->add_option("--roots-dir", roots_dir, "Directory for per-record roots files");
        sub->callback([&cfg, cmd = entry.first] { cfg.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : zc::kExitInvalid;
    }
    cfg.format = format == "csv" ? zc::Format::csv : zc::Format::json;
    if (!out_path.empty()) cfg.output = out_path;
    if (!roots_dir.empty()) cfg.roots_dir = roots_dir;

    const zc::CmdResult res = zc::run(cfg);
    if (!res.message.empty()) std::cerr << res.message << "\n";
    if (!res.payload.empty()) {
        if (cfg.output) {
            std::ofstream out(*cfg.output);
            if (!out) {
                std::cerr << "cannot write " << cfg.output->string() << "\n";
                return zc::kExitInvalid;
            }
            out << res.payload;
        } else {
            std::cout << res.payload;
        }
    }
    return res.exit_code;
}
