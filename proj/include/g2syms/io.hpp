#pragma once

// JSON encodings: scalars as [[p,q],[r,s]] meaning p/q + (r/s) sqrt2 with
// positive denominators, Lie algebras as sparse bracket tables over i < j,
// cocycles as index/value lists, 3-forms as sorted index-triple maps, and
// reports. Integers that fit in 64 bits are written as JSON numbers,
// anything larger as decimal strings; the parser accepts both.

#include "g2syms/catalog.hpp"
#include "g2syms/lie.hpp"
#include "g2syms/linalg.hpp"
#include "g2syms/quadext.hpp"
#include "g2syms/report.hpp"
#include "g2syms/scalar.hpp"

#include <json.hpp>

#include <cstdio>
#include <limits>
#include <string>

namespace g2syms {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// ------------------------------------------------------------------ scalars

inline Json bigint_to_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() &&
        v >= std::numeric_limits<std::int64_t>::min())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw ParseError("expected an integer or a decimal string");
}

inline Json scalar_to_json(const QSqrt2& x) {
    return Json::array({Json::array({bigint_to_json(numerator(x.rat_part())),
                                     bigint_to_json(denominator(x.rat_part()))}),
                        Json::array({bigint_to_json(numerator(x.sqrt2_part())),
                                     bigint_to_json(denominator(x.sqrt2_part()))})});
}

inline QSqrt2 scalar_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw ParseError("scalar must be [[p,q],[r,s]]");
    BigInt p = bigint_from_json(j[0][0]), q = bigint_from_json(j[0][1]);
    BigInt r = bigint_from_json(j[1][0]), s = bigint_from_json(j[1][1]);
    if (q <= 0 || s <= 0) throw ParseError("scalar denominators must be positive");
    return QSqrt2(Rational(p, q), Rational(r, s));
}

// ---------------------------------------------------------- vectors/matrices

inline Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v[i]));
    return out;
}

inline Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("vector must be an array");
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i]);
    return v;
}

inline Json mat_to_json(const Mat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
    return out;
}

inline Mat mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
    std::size_t rows = j.size(), cols = j[0].size();
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec r = vec_from_json(j[i]);
        if (r.size() != cols) throw ParseError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
    }
    return m;
}

// -------------------------------------------------------------- Lie algebras

// {dim, labels, brackets: [[i, j, [[k, scalar], ...]], ...]} with i < j only.
inline Json lie_to_json(const LieAlgebra& l) {
    Json out;
    out["dim"] = l.dim();
    out["labels"] = l.labels();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            Vec v = l.basis_bracket(i, j);
            if (v.is_zero()) continue;
            Json terms = Json::array();
            for (std::size_t k = 0; k < l.dim(); ++k)
                if (!v[k].is_zero()) terms.push_back(Json::array({k, scalar_to_json(v[k])}));
            brackets.push_back(Json::array({i, j, terms}));
        }
    out["brackets"] = brackets;
    return out;
}

inline LieAlgebra lie_from_json(const Json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    LieAlgebra l(dim, std::move(labels));
    for (const Json& entry : j.at("brackets")) {
        if (!entry.is_array() || entry.size() != 3) throw ParseError("bracket entry must be [i,j,terms]");
        std::size_t i = entry[0].get<std::size_t>(), jj = entry[1].get<std::size_t>();
        if (i >= jj || jj >= dim) throw ParseError("bracket indices must satisfy i < j < dim");
        Vec v(dim);
        for (const Json& term : entry[2]) {
            std::size_t k = term.at(0).get<std::size_t>();
            if (k >= dim) throw ParseError("bracket target out of range");
            v[k] = scalar_from_json(term.at(1));
        }
        l.set_bracket(i, jj, std::move(v));
    }
    return l;
}

// ------------------------------------------------------------------ cocycles

// {alpha: [[i, j, a-vector], ...], gamma: [[i, j, k, scalar], ...]}
inline Json cocycle_to_json(const QuadraticCocycle& c) {
    Json out;
    Json alpha = Json::array();
    for (const auto& [ij, v] : c.alpha.terms())
        alpha.push_back(Json::array({ij.first, ij.second, vec_to_json(v)}));
    Json gamma = Json::array();
    for (const auto& [ijk, v] : c.gamma.terms()) {
        auto [i, j, k] = ijk;
        gamma.push_back(Json::array({i, j, k, scalar_to_json(v)}));
    }
    out["alpha"] = alpha;
    out["gamma"] = gamma;
    return out;
}

inline QuadraticCocycle cocycle_from_json(const Json& j, std::size_t l_dim, std::size_t a_dim) {
    QuadraticCocycle c = QuadraticCocycle::zero(l_dim, a_dim);
    for (const Json& e : j.at("alpha"))
        c.alpha.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), vec_from_json(e.at(2)));
    for (const Json& e : j.at("gamma"))
        c.gamma.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                    e.at(2).get<std::size_t>(), scalar_from_json(e.at(3)));
    return c;
}

// ------------------------------------------------------------------- 3-forms

// sorted index-triple -> scalar map, keys "i,j,k"
inline Json alt3_to_json(const Alt3<QSqrt2>& w) {
    Json out = Json::object();
    for (const auto& [ijk, v] : w.terms()) {
        auto [i, j, k] = ijk;
        out[std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k)] =
            scalar_to_json(v);
    }
    return out;
}

inline Alt3<QSqrt2> alt3_from_json(const Json& j, std::size_t dim) {
    Alt3<QSqrt2> w(dim, QSqrt2(0));
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t i, jj, k;
        if (std::sscanf(it.key().c_str(), "%zu,%zu,%zu", &i, &jj, &k) != 3)
            throw ParseError("3-form key must be \"i,j,k\"");
        w.set(i, jj, k, scalar_from_json(it.value()));
    }
    return w;
}

// --------------------------------------------------------------- triple file

inline Json catalog_triple_to_json(const CatalogTriple& ct) {
    Json out;
    out["family"] = to_string(ct.spec.family);
    if (ct.spec.family != Family::F2b)
        out["a_signature"] = Json::array({ct.spec.a_signature.neg, ct.spec.a_signature.pos});
    if (ct.spec.family == Family::F1) out["t"] = scalar_to_json(ct.spec.t);
    out["algebra"] = lie_to_json(ct.triple.algebra());
    out["theta"] = mat_to_json(ct.triple.theta());
    out["metric"] = mat_to_json(ct.triple.ip().gram());
    out["omega"] = alt3_to_json(ct.omega.omega);
    if (ct.omega.witt_witness) out["witness"] = mat_to_json(*ct.omega.witt_witness);
    return out;
}

struct TripleFile {
    MetricInvolutiveLie triple;
    GStructure omega;
};

inline TripleFile triple_from_json(const Json& j) {
    LieAlgebra alg = lie_from_json(j.at("algebra"));
    Mat theta = mat_from_json(j.at("theta"));
    Mat metric = mat_from_json(j.at("metric"));
    if (metric.rows() != alg.dim() || theta.rows() != alg.dim())
        throw ParseError("algebra, theta, and metric dimensions disagree");
    MetricInvolutiveLie triple(std::move(alg), std::move(theta), SymmetricForm(metric));
    if (triple.algebra().dim() < 7) throw ParseError("triple must contain a 7-dimensional minus part");
    Alt3<QSqrt2> omega = alt3_from_json(j.at("omega"), 7);
    Mat minus_gram(7, 7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j2 = 0; j2 < 7; ++j2) minus_gram(i, j2) = metric(i, j2);
    std::optional<Mat> witness;
    if (j.contains("witness")) witness = mat_from_json(j["witness"]);
    GStructure g{std::move(omega), SymmetricForm(std::move(minus_gram)), std::move(witness)};
    return TripleFile{std::move(triple), std::move(g)};
}

// ------------------------------------------------------------------- reports

inline Json report_to_json(const Report& rpt) {
    Json checks = Json::array();
    for (const CheckResult& c : rpt.checks) {
        Json e;
        e["name"] = c.name;
        e["verdict"] = to_string(c.verdict);
        e["details"] = c.details;
        checks.push_back(std::move(e));
    }
    Json quantities = Json::object();
    for (const auto& [k, v] : rpt.quantities) quantities[k] = v;
    Json out;
    out["checks"] = std::move(checks);
    out["quantities"] = std::move(quantities);
    out["notes"] = rpt.notes;
    return out;
}

}  // namespace g2syms
