#ifndef CATSUM_SERIALIZE_HPP
#define CATSUM_SERIALIZE_HPP

/*
 * JSON forms:
 *   BigRational       "num/den" (or "num" when the denominator is 1)
 *   Polynomial        array of BigRational strings, ascending degree
 *   RationalFunction  {"num": [...], "den": [...]}
 *   DenseMatrix       {"rows": r, "cols": c, "domain": d, "entries": [[...], ...]}
 * with d one of "rational", "poly-x", "ratfun-x".
 */

#include <catsum/big_rational.hpp>
#include <catsum/errors.hpp>
#include <catsum/matrix.hpp>
#include <catsum/polynomial.hpp>
#include <catsum/rational_function.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace catsum {

using Json = nlohmann::ordered_json;

inline Json to_json(const BigRational& r) { return r.to_string(); }

inline Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

inline Json to_json(const RationalFunction& r) {
    Json obj = Json::object();
    obj["num"] = to_json(r.numerator());
    obj["den"] = to_json(r.denominator());
    return obj;
}

inline BigRational rational_from_json(const Json& j) {
    if (!j.is_string()) throw UsageError("expected a rational string, got " + j.dump());
    return BigRational::parse(j.get<std::string>());
}

inline Polynomial polynomial_from_json(const Json& j, Var v = Var::x) {
    if (!j.is_array()) throw UsageError("expected a coefficient array, got " + j.dump());
    std::vector<BigRational> cs;
    cs.reserve(j.size());
    for (const auto& c : j) cs.push_back(rational_from_json(c));
    Polynomial p(v, std::move(cs));
    if (p.coeffs().size() != j.size()) throw UsageError("polynomial has trailing zero coefficients");
    return p;
}

inline RationalFunction rational_function_from_json(const Json& j, Var v = Var::x) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw UsageError("expected {\"num\": [...], \"den\": [...]}, got " + j.dump());
    return RationalFunction(polynomial_from_json(j.at("num"), v), polynomial_from_json(j.at("den"), v));
}

template <typename T>
Json to_json(const DenseMatrix<T>& m) {
    Json obj = Json::object();
    obj["rows"] = m.rows();
    obj["cols"] = m.cols();
    obj["domain"] = RingTraits<T>::domain;
    Json rows = Json::array();
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    obj["entries"] = std::move(rows);
    return obj;
}

namespace detail {

template <typename T>
T entry_from_json(const Json& j);

template <>
inline BigRational entry_from_json<BigRational>(const Json& j) { return rational_from_json(j); }

template <>
inline Polynomial entry_from_json<Polynomial>(const Json& j) { return polynomial_from_json(j, Var::x); }

template <>
inline RationalFunction entry_from_json<RationalFunction>(const Json& j) {
    return rational_function_from_json(j, Var::x);
}

} // namespace detail

template <typename T>
DenseMatrix<T> matrix_from_json(const Json& j) {
    if (!j.is_object()) throw UsageError("matrix JSON must be an object");
    const auto domain = j.at("domain").get<std::string>();
    if (domain != RingTraits<T>::domain)
        throw UsageError("matrix domain '" + domain + "' does not match '" + RingTraits<T>::domain + "'");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) throw UsageError("matrix JSON: row count mismatch");
    std::vector<T> flat;
    flat.reserve(rows * cols);
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols) throw UsageError("matrix JSON: column count mismatch");
        for (const auto& e : row) flat.push_back(detail::entry_from_json<T>(e));
    }
    return DenseMatrix<T>(rows, cols, std::move(flat));
}

} // namespace catsum

#endif // CATSUM_SERIALIZE_HPP
