#pragma once

// Batch command surface. Each command returns an exit code plus its payload so
// the same code paths serve the executable and the tests.
//
// Exit codes: 0 all checks pass, 1 computation ran but a check failed,
// 2 invalid or unsupported input.

#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "habiro.hpp"
#include "json_io.hpp"
#include "modforms.hpp"
#include "periods.hpp"
#include "rvtransform.hpp"
#include "zerocert.hpp"

namespace zetapoly::cli {

enum class Command { periods, rv, certify, habiro, lfun, report };
enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;

struct RunConfig {
    Command command = Command::periods;
    std::optional<int> weight;
    std::optional<int> d;
    std::optional<int> level;
    int prec_bits = kDefaultPrecBits;
    std::optional<std::filesystem::path> output;  // empty: standard output
    std::optional<std::filesystem::path> roots_dir;
    Format format = Format::json;
};

struct CmdResult {
    int exit_code = kExitOk;
    std::string payload;  // written to --out or stdout
    std::string message;  // diagnostics for stderr
};

inline const std::vector<int>& supported_weights() {
    static const std::vector<int> w{12, 16, 18, 20, 22, 26};
    return w;
}

namespace detail {

inline CmdResult invalid(std::string msg) { return {kExitInvalid, {}, std::move(msg)}; }

inline std::optional<CmdResult> require_weight(const RunConfig& cfg) {
    if (!cfg.weight) return invalid("--weight is required");
    if (!supported_eigen_weight(*cfg.weight))
        return invalid("weight " + std::to_string(*cfg.weight) +
                       " unsupported: only level-one weights with dim S_k = 1 (12, 16, 18, 20, 22, 26) have a "
                       "canonical eigenform here");
    return std::nullopt;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string join_coeffs(const RatPoly& p) {
    std::string s;
    for (const auto& c : coeff_strings(p)) s += (s.empty() ? "" : " ") + c;
    return s;
}

struct Cell {
    int weight = 0;
    int e = 0;
    int d = 0;
    RatPoly U;
    ZetaPolyRecord record;
    Certificate unit_circle;
    Certificate critical_line;
    bool funceq = false;
    std::string error;

    bool passed() const { return error.empty() && funceq && unit_circle.passed && critical_line.passed; }
};

inline Cell evaluate_cell(const CFIQuotient& cfi, int d) {
    Cell cell;
    cell.weight = cfi.weight;
    cell.e = cfi.e;
    cell.d = d;
    cell.U = cfi.U;
    try {
        cell.record = rv_polynomial(cfi, d);
        cell.funceq = functional_equation_defect(cell.record.H, d, cfi.e).is_zero();
        cell.unit_circle = unit_circle_certify(cfi.U);
        // Q has even degree e, so its reflection symmetry has sign +1.
        cell.critical_line = critical_line_certify(cell.record.Q, cell.record.critical_line, 1);
    } catch (const Error& ex) {
        cell.error = ex.what();
    }
    return cell;
}

inline Json cell_json(const Cell& c) {
    Json j = to_json(c.record);
    j["certificates"] = Json::array({to_json(c.unit_circle), to_json(c.critical_line)});
    return j;
}

}  // namespace detail

inline CmdResult cmd_periods(const RunConfig& cfg) {
    if (auto bad = detail::require_weight(cfg)) return *bad;
    const int k = *cfg.weight;
    const RatPoly rminus = odd_period_polynomial(k);
    const CFIQuotient q = cfi_quotient(rminus, k);
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << "weight,w,e,r_minus,U\n"
           << k << "," << k - 2 << "," << q.e << "," << detail::join_coeffs(rminus) << "," << detail::join_coeffs(q.U)
           << "\n";
        return {kExitOk, os.str(), {}};
    }
    return {kExitOk, detail::dump(to_json(q, rminus)), {}};
}

inline CmdResult cmd_rv(const RunConfig& cfg) {
    if (auto bad = detail::require_weight(cfg)) return *bad;
    const CFIQuotient q = cfi_quotient_for_weight(*cfg.weight);
    const int d = cfg.d.value_or(default_d(q.e));
    if (d <= q.e)
        return detail::invalid("d = " + std::to_string(d) + " must exceed e = " + std::to_string(q.e) + " for weight " +
                               std::to_string(*cfg.weight));
    const detail::Cell cell = detail::evaluate_cell(q, d);
    if (!cell.error.empty()) return {kExitCheckFailed, {}, cell.error};
    const int code = cell.passed() ? kExitOk : kExitCheckFailed;
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << "weight,e,d,critical_line,H,Q\n"
           << cell.weight << "," << cell.e << "," << d << "," << to_string(cell.record.critical_line) << ","
           << detail::join_coeffs(cell.record.H) << "," << detail::join_coeffs(cell.record.Q) << "\n";
        return {code, os.str(), {}};
    }
    return {code, detail::dump(detail::cell_json(cell)), {}};
}

inline CmdResult cmd_certify(const RunConfig& cfg) {
    if (auto bad = detail::require_weight(cfg)) return *bad;
    const CFIQuotient q = cfi_quotient_for_weight(*cfg.weight);
    const int d = cfg.d.value_or(default_d(q.e));
    if (d <= q.e) return detail::invalid("d must exceed e = " + std::to_string(q.e));
    const detail::Cell cell = detail::evaluate_cell(q, d);
    if (!cell.error.empty()) return {kExitCheckFailed, {}, cell.error};
    const int code = cell.unit_circle.passed && cell.critical_line.passed ? kExitOk : kExitCheckFailed;
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << "kind,passed,expected,counted,witness\n";
        for (const auto* c : {&cell.unit_circle, &cell.critical_line})
            os << to_string(c->kind) << "," << (c->passed ? "true" : "false") << "," << c->expected_roots << ","
               << c->counted_roots << "," << detail::csv_quote(c->witness) << "\n";
        return {code, os.str(), {}};
    }
    Json j{{"weight", cell.weight},
           {"e", cell.e},
           {"d", d},
           {"U", to_json(q.U)},
           {"Q", to_json(cell.record.Q)},
           {"critical_line", to_string(cell.record.critical_line)},
           {"unit_circle", to_json(cell.unit_circle)},
           {"critical_line_certificate", to_json(cell.critical_line)}};
    return {code, detail::dump(j), {}};
}

inline CmdResult cmd_habiro(const RunConfig& cfg) {
    if (!cfg.level) return detail::invalid("--level is required");
    const int level = *cfg.level;
    if (level < 1) return detail::invalid("--level must be >= 1");
    const auto checks = habiro_battery(level);
    bool all = true;
    for (const auto& [name, ok] : checks) all = all && ok;
    const int code = all ? kExitOk : kExitCheckFailed;
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << "check,passed\n";
        for (const auto& [name, ok] : checks) os << name << "," << (ok ? "true" : "false") << "\n";
        return {code, os.str(), {}};
    }
    Json results = Json::object();
    for (const auto& [name, ok] : checks) results[name] = ok;
    Json j{{"level", level}, {"all_passed", all}, {"checks", results}, {"r", to_json(habiro_r(level))}};
    return {code, detail::dump(j), {}};
}

inline CmdResult cmd_lfun(const RunConfig& cfg) {
    if (auto bad = detail::require_weight(cfg)) return *bad;
    if (cfg.prec_bits < 16) return detail::invalid("--prec-bits must be >= 16");
    const int k = *cfg.weight;
    const QExpansion f = eigenform(k, kDefaultQPrec);
    PrecisionScope scope(cfg.prec_bits + 32);
    std::vector<Real> values;
    try {
        for (int s = 1; s <= k - 1; ++s) values.push_back(lambda_numeric(f, s, cfg.prec_bits).value);
    } catch (const PrecisionError& ex) {
        return detail::invalid(ex.what());
    }
    const int sign = (k / 2) % 2 == 0 ? 1 : -1;
    Real worst(0);
    for (int s = 1; s <= k - 1; ++s) worst = std::max(worst, abs(values[s - 1] - sign * values[k - s - 1]));
    const bool ok = worst < pow2(-cfg.prec_bits + 8);
    const int digits = static_cast<int>(cfg.prec_bits * 0.30103);
    const int code = ok ? kExitOk : kExitCheckFailed;
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << "s,lambda\n";
        for (int s = 1; s <= k - 1; ++s) os << s << "," << to_decimal(values[s - 1], digits) << "\n";
        return {code, os.str(), {}};
    }
    Json vals = Json::array();
    for (int s = 1; s <= k - 1; ++s) vals.push_back(Json{{"s", s}, {"lambda", to_decimal(values[s - 1], digits)}});
    Json j{{"weight", k},
           {"prec_bits", cfg.prec_bits},
           {"values", vals},
           {"functional_equation_defect", to_decimal(worst, 6)},
           {"functional_equation", ok ? "pass" : "fail"}};
    return {code, detail::dump(j), {}};
}

/// Sweep of every supported weight with d = e+1..e+6. Writes the CSV summary
/// as the payload and, when a roots directory is known, one roots file per
/// (weight, d).
inline CmdResult cmd_report(const RunConfig& cfg) {
    if (cfg.prec_bits < 16) return detail::invalid("--prec-bits must be >= 16");
    std::vector<std::future<std::vector<detail::Cell>>> jobs;
    for (int k : supported_weights()) {
        jobs.push_back(std::async(std::launch::async, [k] {
            const CFIQuotient q = cfi_quotient_for_weight(k);
            std::vector<detail::Cell> cells;
            for (int d = q.e + 1; d <= q.e + 6; ++d) cells.push_back(detail::evaluate_cell(q, d));
            return cells;
        }));
    }
    std::vector<detail::Cell> cells;
    for (auto& j : jobs)
        for (auto& c : j.get()) cells.push_back(std::move(c));

    auto status = [](bool ok) { return ok ? "pass" : "fail"; };
    std::ostringstream csv;
    csv << "weight,e,d,funceq,unit_circle,critical_line\n";
    bool all = true;
    for (const auto& c : cells) {
        const bool ok = c.error.empty();
        csv << c.weight << "," << c.e << "," << c.d << "," << status(ok && c.funceq) << ","
            << status(ok && c.unit_circle.passed) << "," << status(ok && c.critical_line.passed) << "\n";
        all = all && c.passed();
    }

    std::optional<std::filesystem::path> roots_dir = cfg.roots_dir;
    if (!roots_dir && cfg.output) roots_dir = cfg.output->parent_path().empty() ? "." : cfg.output->parent_path();
    std::string message;
    if (roots_dir) {
        std::filesystem::create_directories(*roots_dir);
        // Serial: numeric routines share the process-wide MPFR precision.
        for (const auto& c : cells) {
            if (!c.error.empty()) continue;
            const RootsResult q_roots = roots_numeric(c.record.Q, cfg.prec_bits);
            const RootsResult u_roots = roots_numeric(c.U, cfg.prec_bits);
            Json j{{"weight", c.weight},
                   {"e", c.e},
                   {"d", c.d},
                   {"critical_line", to_string(c.record.critical_line)},
                   {"converged", q_roots.converged && u_roots.converged},
                   {"Q_roots", roots_json(q_roots.roots)},
                   {"U_roots", roots_json(u_roots.roots)}};
            std::ofstream out(*roots_dir / ("roots_k" + std::to_string(c.weight) + "_d" + std::to_string(c.d) + ".json"));
            out << detail::dump(j);
        }
    } else {
        message = "no --out or --roots-dir given; roots files not written";
    }
    return {all ? kExitOk : kExitCheckFailed, csv.str(), message};
}

inline CmdResult run(const RunConfig& cfg) {
    try {
        switch (cfg.command) {
            case Command::periods: return cmd_periods(cfg);
            case Command::rv: return cmd_rv(cfg);
            case Command::certify: return cmd_certify(cfg);
            case Command::habiro: return cmd_habiro(cfg);
            case Command::lfun: return cmd_lfun(cfg);
            case Command::report: return cmd_report(cfg);
        }
    } catch (const PreconditionError& ex) {
        return detail::invalid(ex.what());
    } catch (const Error& ex) {
        return {kExitCheckFailed, {}, ex.what()};
    }
    return detail::invalid("unknown command");
}

}  // namespace zetapoly::cli
