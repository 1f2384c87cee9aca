#ifndef CATSUM_VERIFIER_HPP
#define CATSUM_VERIFIER_HPP

/*
 * Pass/fail checks of the LU factorization of M_n(x) and the identities
 * around it. Every instance compares two canonical values exactly, so each
 * one is decided; a failing instance keeps both sides for inspection.
 *
 * Instances are listed in lexicographic parameter order. The range runners
 * may evaluate parameters concurrently; the assembled order does not depend
 * on completion order.
 */

#include <catsum/big_rational.hpp>
#include <catsum/closed_forms.hpp>
#include <catsum/combinatorics.hpp>
#include <catsum/elimination.hpp>
#include <catsum/matrix.hpp>
#include <catsum/polynomial.hpp>
#include <catsum/rational_function.hpp>
#include <catsum/serialize.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace catsum {

enum class Status { pass, fail };

struct Instance {
    std::string part;
    std::vector<std::pair<std::string, long>> params;
    Status status = Status::pass;
    Json lhs;  // null on pass
    Json rhs;
};

struct VerificationReport {
    std::string check;
    std::vector<Instance> instances;

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(
            instances.begin(), instances.end(), [](const Instance& in) { return in.status == Status::fail; }));
    }
    bool passed() const { return failures() == 0; }

    void append(VerificationReport other) {
        for (auto& in : other.instances) instances.push_back(std::move(in));
    }

    Json to_json() const {
        Json arr = Json::array();
        for (const auto& in : instances) {
            Json params = Json::object();
            params["part"] = in.part;
            for (const auto& [name, value] : in.params) params[name] = value;
            Json item = Json::object();
            item["params"] = std::move(params);
            item["status"] = in.status == Status::pass ? "pass" : "fail";
            if (in.status == Status::fail) {
                item["lhs"] = in.lhs;
                item["rhs"] = in.rhs;
            }
            arr.push_back(std::move(item));
        }
        Json out = Json::object();
        out["check"] = check;
        out["instances"] = std::move(arr);
        return out;
    }
};

namespace detail {

template <typename A, typename B>
Instance compare(std::string part, std::vector<std::pair<std::string, long>> params, const A& lhs, const B& rhs) {
    Instance in;
    in.part = std::move(part);
    in.params = std::move(params);
    if (!(lhs == rhs)) {
        in.status = Status::fail;
        in.lhs = catsum::to_json(lhs);
        in.rhs = catsum::to_json(rhs);
    }
    return in;
}

inline Instance failed(std::string part, std::vector<std::pair<std::string, long>> params, const std::string& why) {
    Instance in;
    in.part = std::move(part);
    in.params = std::move(params);
    in.status = Status::fail;
    in.lhs = why;
    return in;
}

/// Runs body(first..last) and concatenates the reports in index order.
inline VerificationReport run_range(const std::string& check, long first, long last,
                                    const std::function<VerificationReport(long)>& body, bool parallel) {
    VerificationReport out{check, {}};
    if (!parallel) {
        for (long v = first; v <= last; ++v) out.append(body(v));
        return out;
    }
    std::vector<std::future<VerificationReport>> pending;
    for (long v = first; v <= last; ++v) pending.push_back(std::async(std::launch::async, body, v));
    for (auto& f : pending) out.append(f.get());
    return out;
}

} // namespace detail

/// L*U = M_n(x) for the closed-form factors, and the factors agree with the
/// unpivoted elimination of M_n(x) over Q(x).
inline VerificationReport verify_theorem1(std::size_t n) {
    if (n < 1) throw DomainError("verify_theorem1: n must be at least 1");
    const long nn = static_cast<long>(n);
    VerificationReport report{"theorem1", {}};
    const auto m = to_ratfun(build_matrix(n, 0));
    const ClosedFormLU cf = closed_form_lu(n);

    const auto product = mat_mul(cf.L, cf.U);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            report.instances.push_back(detail::compare(
                "LU=M", {{"n", nn}, {"i", static_cast<long>(i)}, {"j", static_cast<long>(j)}},
                product.at(i, j), m.at(i, j)));

    try {
        const auto oracle = doolittle_lu(m);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = 1; k <= n; ++k)
                report.instances.push_back(detail::compare(
                    "L=doolittle", {{"n", nn}, {"i", static_cast<long>(i)}, {"k", static_cast<long>(k)}},
                    cf.L.at(i, k), oracle.L.at(i, k)));
        for (std::size_t k = 1; k <= n; ++k)
            for (std::size_t j = 1; j <= n; ++j)
                report.instances.push_back(detail::compare(
                    "U=doolittle", {{"n", nn}, {"k", static_cast<long>(k)}, {"j", static_cast<long>(j)}},
                    cf.U.at(k, j), oracle.U.at(k, j)));
    } catch (const ZeroPivotError& e) {
        report.instances.push_back(detail::failed("doolittle", {{"n", nn}}, e.what()));
    }
    return report;
}

/// F(k,i) F(k,j) / (g(k) g(k-1)) over Q(x).
inline RationalFunction entry_sum_term(long k, long i, long j) {
    return RationalFunction(F_poly(k, i) * F_poly(k, j), g_poly(k) * g_poly(k - 1));
}

/// Sum over k = 1..min(i, j) of entry_sum_term(k, i, j).
inline RationalFunction entry_sum_lhs(long i, long j) {
    RationalFunction acc(Var::x);
    for (long k = 1; k <= std::min(i, j); ++k) acc += entry_sum_term(k, i, j);
    return acc;
}

/// Number of k beyond min(i, j) whose terms are checked to vanish.
inline constexpr long kExtraVanishingTerms = 2;

inline VerificationReport verify_entry_identity(long i, long j) {
    if (i < 1 || j < 1) throw DomainError("verify_entry_identity: i and j must be at least 1");
    VerificationReport report{"entry", {}};
    const Polynomial target(Var::x, {BigRational(catalan(i + j - 2)), BigRational(catalan(i + j - 1))});
    report.instances.push_back(
        detail::compare("sum", {{"i", i}, {"j", j}}, entry_sum_lhs(i, j), RationalFunction(target)));
    const long top = std::min(i, j);
    for (long k = top + 1; k <= top + kExtraVanishingTerms; ++k)
        report.instances.push_back(detail::compare("vanish", {{"i", i}, {"j", j}, {"k", k}},
                                                   entry_sum_term(k, i, j), RationalFunction(Var::x)));
    return report;
}

/// Diagonal of U, its telescoping product, the fraction-free determinant,
/// and the x = 1 value F_{2n+1}.
inline VerificationReport verify_determinant(std::size_t n) {
    if (n < 1) throw DomainError("verify_determinant: n must be at least 1");
    const long nn = static_cast<long>(n);
    VerificationReport report{"det", {}};
    const ClosedFormLU cf = closed_form_lu(n);
    const Polynomial gn = g_poly(nn);

    RationalFunction product = RationalFunction::constant(Var::x, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        const long kk = static_cast<long>(k);
        report.instances.push_back(detail::compare("diag", {{"n", nn}, {"k", kk}}, cf.U.at(k, k),
                                                   RationalFunction(g_poly(kk), g_poly(kk - 1))));
        product *= cf.U.at(k, k);
    }
    report.instances.push_back(detail::compare("telescope", {{"n", nn}}, product, RationalFunction(gn)));
    report.instances.push_back(detail::compare("bareiss", {{"n", nn}}, bareiss_det(build_matrix(n, 0)), gn));
    report.instances.push_back(detail::compare("fibonacci", {{"n", nn}},
                                               bareiss_det(build_matrix(n, 0, BigRational(1))),
                                               BigRational(fibonacci(2 * nn + 1))));
    return report;
}

/// g and F under x = -u/(1+u)^2 against their closed forms in u, and the
/// partial-fraction kernel for 1/(g(k) g(k-1)).
inline VerificationReport verify_uworld(long k_max, long j_max, long kernel_k_max) {
    if (k_max < 1 || j_max < 1 || kernel_k_max < 1)
        throw DomainError("verify_uworld: ranges must be at least 1");
    VerificationReport report{"uworld", {}};
    const RationalFunction sub = x_of_u();
    for (long k = 0; k <= k_max; ++k)
        report.instances.push_back(
            detail::compare("g", {{"k", k}}, poly_compose_rf(g_poly(k), sub), g_closed_u(k)));
    for (long k = 1; k <= k_max; ++k)
        for (long j = 1; j <= j_max; ++j)
            report.instances.push_back(detail::compare("F", {{"k", k}, {"j", j}},
                                                       poly_compose_rf(F_poly(k, j), sub), F_closed_u(k, j)));
    for (long k = 1; k <= kernel_k_max; ++k)
        report.instances.push_back(detail::compare("kernel", {{"k", k}}, pf_kernel_lhs(k), pf_kernel_rhs(k)));
    return report;
}

inline VerificationReport verify_uworld(long k_max, long j_max) { return verify_uworld(k_max, j_max, k_max); }

// ---- range runners ----

inline VerificationReport verify_theorem1_upto(long n_max, bool parallel = false) {
    return detail::run_range("theorem1", 1, n_max,
                             [](long n) { return verify_theorem1(static_cast<std::size_t>(n)); }, parallel);
}

inline VerificationReport verify_determinant_upto(long n_max, bool parallel = false) {
    return detail::run_range("det", 1, n_max,
                             [](long n) { return verify_determinant(static_cast<std::size_t>(n)); }, parallel);
}

inline VerificationReport verify_entry_identity_upto(long i_max, long j_max, bool parallel = false) {
    return detail::run_range(
        "entry", 1, i_max,
        [j_max](long i) {
            VerificationReport row{"entry", {}};
            for (long j = 1; j <= j_max; ++j) row.append(verify_entry_identity(i, j));
            return row;
        },
        parallel);
}

enum class Check { theorem1, entry, det, uworld };

struct CheckRanges {
    long n_max = 8;
    long i_max = 8;
    long j_max = 8;
    long k_max = 8;
    long kernel_k_max = 8;
    bool parallel = false;
};

/// Runs the selected checks in a fixed order: theorem1, entry, det, uworld.
inline std::vector<VerificationReport> run_checks(const std::set<Check>& selected, const CheckRanges& r) {
    std::vector<VerificationReport> out;
    if (selected.count(Check::theorem1)) out.push_back(verify_theorem1_upto(r.n_max, r.parallel));
    if (selected.count(Check::entry)) out.push_back(verify_entry_identity_upto(r.i_max, r.j_max, r.parallel));
    if (selected.count(Check::det)) out.push_back(verify_determinant_upto(r.n_max, r.parallel));
    if (selected.count(Check::uworld)) out.push_back(verify_uworld(r.k_max, r.j_max, r.kernel_k_max));
    return out;
}

} // namespace catsum

#endif // CATSUM_VERIFIER_HPP
