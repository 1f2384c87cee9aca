#ifndef CATSUM_CLI_HPP
#define CATSUM_CLI_HPP

/*
 * Command-line front end.
 *
 *   matrix -n N [--t T] [--x P/Q] [--output json|pretty]
 *   lu     -n N [--t T] [--x P/Q] [--oracle] [--output json|pretty]
 *   det    -n N [--t T] [--x P/Q] [--output json|pretty]
 *   verify [-n N] [--checks all|theorem1,entry,det,uworld] [--i-max I] [--j-max J]
 *          [--k-max K] [--kernel-k-max K] [--parallel] [--output json|pretty]
 *
 * Exit status: 0 success, 1 library domain error or failed check, 2 usage.
 */

#include <catsum/big_rational.hpp>
#include <catsum/closed_forms.hpp>
#include <catsum/elimination.hpp>
#include <catsum/errors.hpp>
#include <catsum/matrix.hpp>
#include <catsum/serialize.hpp>
#include <catsum/verifier.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace catsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Output { json, pretty };

struct CliConfig {
    std::string subcommand;
    long n = 0;
    long t = 0;
    std::optional<BigRational> x;
    bool oracle = false;
    std::set<Check> checks;
    CheckRanges ranges;
    Output output = Output::pretty;
};

namespace detail {

template <typename T>
void print_matrix(std::ostream& out, const DenseMatrix<T>& m) {
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        out << "[ ";
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            if (j > 1) out << ", ";
            out << m.at(i, j).to_string();
        }
        out << " ]\n";
    }
}

template <typename T>
void emit_matrix(std::ostream& out, const CliConfig& cfg, const DenseMatrix<T>& m) {
    if (cfg.output == Output::json)
        out << to_json(m).dump() << '\n';
    else
        print_matrix(out, m);
}

template <typename T>
void emit_lu(std::ostream& out, const CliConfig& cfg, const std::string& label, const DenseMatrix<T>& L,
             const DenseMatrix<T>& U, Json& json_out) {
    if (cfg.output == Output::json) {
        json_out[label] = Json{{"L", to_json(L)}, {"U", to_json(U)}};
        return;
    }
    out << label << " L:\n";
    print_matrix(out, L);
    out << label << " U:\n";
    print_matrix(out, U);
}

inline Json header(const CliConfig& cfg) {
    Json j = Json::object();
    j["n"] = cfg.n;
    j["t"] = cfg.t;
    j["x"] = cfg.x ? Json(cfg.x->to_string()) : Json(nullptr);
    return j;
}

inline int run_matrix(const CliConfig& cfg, std::ostream& out) {
    const auto n = static_cast<std::size_t>(cfg.n);
    if (cfg.x)
        emit_matrix(out, cfg, build_matrix(n, cfg.t, *cfg.x));
    else
        emit_matrix(out, cfg, build_matrix(n, cfg.t));
    return kExitOk;
}

inline int run_lu(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto n = static_cast<std::size_t>(cfg.n);
    Json j = header(cfg);
    const bool closed_form = cfg.t == 0;
    if (!closed_form) {
        const std::string notice = "no closed form is claimed for t > 0; showing the Doolittle factors only";
        err << "notice: " << notice << '\n';
        j["notice"] = notice;
    }
    if (closed_form) {
        const ClosedFormLU cf = closed_form_lu(n);
        if (cfg.x) {
            const auto at = [&](const RationalFunction& r) { return r.eval(*cfg.x); };
            emit_lu(out, cfg, "closed-form", cf.L.map(at), cf.U.map(at), j);
        } else {
            emit_lu(out, cfg, "closed-form", cf.L, cf.U, j);
        }
    }
    if (cfg.oracle || !closed_form) {
        if (cfg.x) {
            const auto lu = doolittle_lu(build_matrix(n, cfg.t, *cfg.x));
            emit_lu(out, cfg, "doolittle", lu.L, lu.U, j);
        } else {
            const auto lu = doolittle_lu(to_ratfun(build_matrix(n, cfg.t)));
            emit_lu(out, cfg, "doolittle", lu.L, lu.U, j);
        }
    }
    if (cfg.output == Output::json) out << j.dump() << '\n';
    return kExitOk;
}

inline int run_det(const CliConfig& cfg, std::ostream& out) {
    const auto n = static_cast<std::size_t>(cfg.n);
    const Polynomial det = bareiss_det(build_matrix(n, cfg.t));
    std::optional<BigRational> value;
    if (cfg.x) value = bareiss_det(build_matrix(n, cfg.t, *cfg.x));
    if (cfg.output == Output::json) {
        Json j = header(cfg);
        j["det"] = to_json(det);
        j["value"] = value ? to_json(*value) : Json(nullptr);
        out << j.dump() << '\n';
    } else {
        out << (value ? value->to_string() : det.to_string()) << '\n';
    }
    return kExitOk;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out) {
    const auto reports = run_checks(cfg.checks, cfg.ranges);
    bool all_pass = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed();
        if (cfg.output == Output::json) {
            arr.push_back(r.to_json());
            continue;
        }
        out << r.check << ": " << (r.instances.size() - r.failures()) << "/" << r.instances.size() << " pass"
            << (r.passed() ? "" : "  FAILED") << '\n';
        for (const auto& in : r.to_json()["instances"])
            if (in["status"] == "fail") out << "  fail " << in.dump() << '\n';
    }
    if (cfg.output == Output::json) out << (arr.size() == 1 ? arr[0] : arr).dump() << '\n';
    return all_pass ? kExitOk : kExitFailure;
}

inline std::set<Check> parse_checks(const std::vector<std::string>& names) {
    std::set<Check> out;
    for (const auto& name : names) {
        if (name == "all") return {Check::theorem1, Check::entry, Check::det, Check::uworld};
        if (name == "theorem1")
            out.insert(Check::theorem1);
        else if (name == "entry")
            out.insert(Check::entry);
        else if (name == "det")
            out.insert(Check::det);
        else if (name == "uworld")
            out.insert(Check::uworld);
        else
            throw UsageError("unknown check '" + name + "'");
    }
    return out;
}

} // namespace detail

/// Parses args (without the program name) and executes the subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Catalan-sum Hankel matrices: construction, LU factors, determinants, identity checks",
                 "catsum"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string x_text;
    std::string output = "pretty";
    std::vector<std::string> checks{"all"};
    long i_max = 0;
    long j_max = 0;
    long k_max = 0;
    long kernel_k_max = 0;

    const auto add_common = [&](CLI::App* sub, bool need_n) {
        auto* opt = sub->add_option("-n,--n", cfg.n, "matrix dimension")->check(CLI::Range(1L, 100000L));
        if (need_n) opt->required();
        sub->add_option("--output", output, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    };
    const auto add_matrix_opts = [&](CLI::App* sub) {
        add_common(sub, true);
        sub->add_option("--t", cfg.t, "shift of the Catalan index (default 0)")->check(CLI::NonNegativeNumber);
        sub->add_option("--x", x_text, "exact rational value p/q for x (symbolic when absent)");
    };

    auto* matrix = app.add_subcommand("matrix", "print M_n(x, t)");
    add_matrix_opts(matrix);
    auto* lu = app.add_subcommand("lu", "print the closed-form L and U");
    add_matrix_opts(lu);
    lu->add_flag("--oracle", cfg.oracle, "also print the Doolittle factors");
    auto* det = app.add_subcommand("det", "print the determinant");
    add_matrix_opts(det);
    auto* verify = app.add_subcommand("verify", "run identity checks, exit nonzero on any failure");
    add_common(verify, false);
    verify->add_option("--checks", checks, "subset of all, theorem1, entry, det, uworld")->delimiter(',');
    verify->add_option("--i-max", i_max, "largest row index for entry checks (default n)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--j-max", j_max, "largest column index for entry and F checks (default n)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--k-max", k_max, "largest k for the u-substitution checks (default n)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--kernel-k-max", kernel_k_max, "largest k for the partial-fraction kernel (default k-max)")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--parallel", cfg.ranges.parallel, "evaluate parameters concurrently");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.output = output == "json" ? Output::json : Output::pretty;
        if (!x_text.empty()) cfg.x = BigRational::parse(x_text);
        if (cfg.subcommand == "verify") {
            if (cfg.n == 0) cfg.n = 8;
            cfg.checks = detail::parse_checks(checks);
            cfg.ranges.n_max = cfg.n;
            cfg.ranges.i_max = i_max ? i_max : cfg.n;
            cfg.ranges.j_max = j_max ? j_max : cfg.n;
            cfg.ranges.k_max = k_max ? k_max : cfg.n;
            cfg.ranges.kernel_k_max = kernel_k_max ? kernel_k_max : cfg.ranges.k_max;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cfg.subcommand == "matrix") return detail::run_matrix(cfg, out);
        if (cfg.subcommand == "lu") return detail::run_lu(cfg, out, err);
        if (cfg.subcommand == "det") return detail::run_det(cfg, out);
        return detail::run_verify(cfg, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace catsum::cli

#endif // CATSUM_CLI_HPP
