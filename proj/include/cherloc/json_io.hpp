#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of every artifact (scalars, parameters, labels,
 *        relations, witnesses, certificates) and the scalar text syntax used
 *        on the command line.
 *
 * Rationals are canonical "num/den" strings and big integers are decimal
 * strings, so documents are exact and byte-stable (nlohmann::json keeps
 * object keys sorted).
 */

#include "cherloc/deform.hpp"
#include "cherloc/loci.hpp"
#include "cherloc/order.hpp"

#include <json.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cherloc {

using json = nlohmann::json;

struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw JsonError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline Rational rational_field(const json& j) {
    if (j.is_number_integer()) return Rational(BigInt(j.get<long long>()));
    if (!j.is_string()) throw JsonError("rational must be a \"num/den\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw JsonError(e.what());
    }
}

inline BigInt integer_field(const json& j) {
    Rational q = rational_field(j);
    if (!is_integer(q)) throw JsonError("expected an integer, got " + to_string(q));
    return numerator_of(q);
}

inline long small_integer(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer()) throw JsonError(std::string("field '") + key + "' must be an integer");
    return v.get<long>();
}

}  // namespace detail

// ---- scalars -------------------------------------------------------------

inline json to_json(const ParamScalar& x) {
    json j = {{"a", to_string(x.constant())}};
    if (x.is_formal()) j["b"] = to_string(x.kappa_coeff());
    return j;
}

inline ParamScalar scalar_from_json(const json& j, const KappaMode& mode) {
    if (j.is_string()) return mode.constant(detail::rational_field(j));
    Rational a = detail::rational_field(detail::require(j, "a"));
    Rational b = j.contains("b") ? detail::rational_field(j.at("b")) : Rational(0);
    return mode.scalar(a, b);
}

/**
 * Text form "a", "a+bk", "bk", "k", "-k", with a, b rationals ("1/2+3/4k").
 * In rational mode the kappa part is substituted.
 */
inline ParamScalar parse_scalar_text(std::string_view text, const KappaMode& mode) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    Rational a(0), b(0);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = pos + 1;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (!term.empty() && term.back() == 'k') {
            std::string coeff = term.substr(0, term.size() - 1);
            if (coeff.empty() || coeff == "+") b += 1;
            else if (coeff == "-") b -= 1;
            else b += parse_rational(coeff);
        } else {
            a += parse_rational(term);
        }
        pos = end;
    }
    return mode.scalar(a, b);
}

inline std::vector<ParamScalar> parse_scalar_list(std::string_view text, const KappaMode& mode) {
    std::vector<ParamScalar> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_scalar_text(text.substr(pos, comma - pos), mode));
        pos = comma + 1;
    }
    return out;
}

/// True when the text mentions kappa (used to pick a formal mode when none is given).
inline bool mentions_kappa(std::string_view text) { return text.find('k') != std::string_view::npos; }

// ---- parameters ----------------------------------------------------------

inline json to_json(const Params& p) {
    json h = json::array();
    for (const auto& hi : p.h()) h.push_back(to_json(hi));
    return {{"ell", p.ell()}, {"kappa", p.is_formal() ? std::string("formal") : to_string(p.mode().value())}, {"h", h}};
}

inline KappaMode kappa_mode_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "formal") return KappaMode::formal();
    return KappaMode::rational(detail::rational_field(j));
}

inline Params params_from_json(const json& j) {
    KappaMode mode = kappa_mode_from_json(detail::require(j, "kappa"));
    const json& h = detail::require(j, "h");
    if (!h.is_array() || h.empty()) throw JsonError("'h' must be a nonempty array");
    std::vector<ParamScalar> hs;
    for (const auto& e : h) hs.push_back(scalar_from_json(e, mode));
    if (j.contains("ell") && detail::small_integer(j, "ell") != static_cast<long>(hs.size()))
        throw JsonError("'ell' does not match the length of 'h'");
    return Params(mode, hs);
}

// ---- labels and relations ------------------------------------------------

inline json to_json(const Multipartition& m) {
    json j = json::array();
    for (const auto& part : m.parts()) j.push_back(part);
    return j;
}

inline Multipartition multipartition_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw JsonError("multipartition must be a nonempty list of lists");
    std::vector<Partition> parts;
    for (const auto& part : j) {
        if (!part.is_array()) throw JsonError("multipartition component must be a list");
        Partition p;
        for (const auto& v : part) {
            if (!v.is_number_integer()) throw JsonError("partition entries must be integers");
            p.push_back(v.get<int>());
        }
        parts.push_back(std::move(p));
    }
    try {
        return Multipartition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw JsonError(e.what());
    }
}

inline json to_json(const MultipartitionRelation& r) {
    json labels = json::array();
    for (const auto& l : r.labels()) labels.push_back(to_json(l));
    json matrix = json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r.size(); ++j) row.push_back(r.holds(i, j) ? 1 : 0);
        matrix.push_back(std::move(row));
    }
    return {{"labels", labels}, {"matrix", matrix}};
}

inline MultipartitionRelation relation_from_json(const json& j) {
    const json& labels = detail::require(j, "labels");
    const json& matrix = detail::require(j, "matrix");
    if (!labels.is_array() || !matrix.is_array()) throw JsonError("'labels' and 'matrix' must be arrays");
    std::vector<Multipartition> ls;
    for (const auto& l : labels) ls.push_back(multipartition_from_json(l));
    if (matrix.size() != ls.size()) throw JsonError("matrix must be square over the labels");
    std::optional<MultipartitionRelation> r;
    try {
        r.emplace(ls);
    } catch (const std::invalid_argument& e) {
        throw JsonError(e.what());
    }
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const json& row = matrix[i];
        if (!row.is_array() || row.size() != ls.size()) throw JsonError("matrix must be square over the labels");
        for (std::size_t k = 0; k < ls.size(); ++k) {
            const json& v = row[k];
            if (v.is_boolean()) {
                if (v.get<bool>()) r->set(i, k);
            } else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) {
                if (v.get<int>() == 1) r->set(i, k);
            } else {
                throw JsonError("matrix entries must be 0/1");
            }
        }
    }
    return std::move(*r);
}

// ---- stability, genericity, witnesses -------------------------------------

inline json to_json(const Stability& s) {
    json j = json::array();
    for (const auto& t : s.theta) j.push_back(to_json(t));
    return j;
}

inline Stability stability_from_json(const json& j, const KappaMode& mode) {
    if (!j.is_array() || j.empty()) throw JsonError("stability must be a nonempty array of scalars");
    Stability s;
    for (const auto& e : j) s.theta.push_back(scalar_from_json(e, mode));
    return s;
}

inline json to_json(const GenericityWitness& w) {
    if (w.kind == GenericityWitness::Kind::Sum) return {{"condition", "sum"}};
    return {{"condition", "difference"}, {"i", w.i}, {"j", w.j}, {"m", w.m}};
}

inline json to_json(const HyperplaneWitness& w) {
    if (const auto* k = std::get_if<KappaFraction>(&w)) return {{"family", "KappaFraction"}, {"r", k->r}, {"s", k->s}};
    const auto& c = std::get<ContentHyperplane>(w);
    return {{"family", "ContentHyperplane"}, {"i", c.i}, {"m", c.m}, {"N", c.N}, {"j", c.j}};
}

inline HyperplaneWitness witness_from_json(const json& j) {
    const json& fam = detail::require(j, "family");
    if (fam == "KappaFraction") return KappaFraction{detail::small_integer(j, "r"), detail::small_integer(j, "s")};
    if (fam == "ContentHyperplane")
        return ContentHyperplane{detail::small_integer(j, "i"), detail::small_integer(j, "m"),
                                 detail::small_integer(j, "N"), detail::small_integer(j, "j")};
    throw JsonError("unknown hyperplane family");
}

inline json to_json(const std::vector<HyperplaneWitness>& ws) {
    json j = json::array();
    for (const auto& w : ws) j.push_back(to_json(w));
    return j;
}

// ---- certificates ----------------------------------------------------------

namespace detail {

inline json big_list(const std::vector<BigInt>& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

inline std::vector<BigInt> big_list_from(const json& j) {
    if (!j.is_array()) throw JsonError("expected an array of integers");
    std::vector<BigInt> out;
    for (const auto& e : j) out.push_back(integer_field(e));
    return out;
}

inline CheckStatus check_status_from(const std::string& s) {
    for (auto st : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped, CheckStatus::Info})
        if (s == to_string(st)) return st;
    throw JsonError("unknown check status '" + s + "'");
}

inline IndexMode index_mode_from(const std::string& s) {
    if (s == to_string(IndexMode::Literal)) return IndexMode::Literal;
    if (s == to_string(IndexMode::IncludeZero)) return IndexMode::IncludeZero;
    throw JsonError("unknown index mode '" + s + "'");
}

inline const char* box_mode_name(BoxOrderMode m) { return m == BoxOrderMode::Literal ? "literal" : "step1-tiebreak"; }

inline BoxOrderMode box_mode_from(const std::string& s) {
    if (s == "literal") return BoxOrderMode::Literal;
    if (s == "step1-tiebreak") return BoxOrderMode::Step1Tiebreak;
    throw JsonError("unknown box order mode '" + s + "'");
}

inline std::vector<std::string> string_list(const json& j) {
    if (!j.is_array()) throw JsonError("expected an array of strings");
    return j.get<std::vector<std::string>>();
}

}  // namespace detail

inline json to_json(const Certificate& c) {
    json plan = {{"case", c.plan.formal ? "formal" : "rational"},
                 {"M", c.plan.M.str()},
                 {"m", detail::big_list(c.plan.m)},
                 {"kappa_shift", c.plan.kappa_shift.str()},
                 {"candidate", c.plan.candidate}};
    if (c.plan.formal) plan["s_classes"] = c.plan.s_classes;
    json checks = json::array();
    for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"status", to_string(ch.status)}, {"detail", ch.detail}});
    return {{"n", c.n},
            {"p", to_json(c.p)},
            {"p_prime", to_json(c.p_prime)},
            {"theta", to_json(c.theta)},
            {"plan", plan},
            {"integral_difference",
             {{"kappa_shift", c.difference.kappa_shift.str()},
              {"h_shift", detail::big_list(c.difference.h_shift)},
              {"common_summand", to_string(c.difference.common_summand)}}},
            {"index_mode", to_string(c.index_mode)},
            {"box_order_mode", detail::box_mode_name(c.box_mode)},
            {"checks", checks},
            {"spherical_p", c.spherical_p},
            {"aspherical_witnesses", to_json(c.aspherical_witnesses_p)},
            {"assumed_lemmas", c.assumed_lemmas},
            {"notes", c.notes}};
}

inline Certificate certificate_from_json(const json& j) {
    using namespace detail;
    Params p = params_from_json(require(j, "p"));
    Params p2 = params_from_json(require(j, "p_prime"));

    const json& pj = require(j, "plan");
    DeformPlan plan;
    plan.formal = require(pj, "case") == "formal";
    plan.M = integer_field(require(pj, "M"));
    plan.m = big_list_from(require(pj, "m"));
    plan.kappa_shift = integer_field(require(pj, "kappa_shift"));
    plan.candidate = static_cast<int>(small_integer(pj, "candidate"));
    if (plan.formal) plan.s_classes = require(pj, "s_classes").get<std::vector<int>>();

    const json& dj = require(j, "integral_difference");
    IntegralDifference diff;
    diff.integral = true;
    diff.kappa_shift = integer_field(require(dj, "kappa_shift"));
    diff.h_shift = big_list_from(require(dj, "h_shift"));
    diff.common_summand = rational_field(require(dj, "common_summand"));

    std::vector<CheckResult> checks;
    for (const auto& cj : require(j, "checks"))
        checks.push_back({require(cj, "name").get<std::string>(),
                          check_status_from(require(cj, "status").get<std::string>()),
                          require(cj, "detail").get<std::string>()});

    std::vector<HyperplaneWitness> ws;
    for (const auto& wj : require(j, "aspherical_witnesses")) ws.push_back(witness_from_json(wj));

    Stability theta = stability_from_json(require(j, "theta"), p2.mode());
    return Certificate{static_cast<int>(small_integer(j, "n")),
                       std::move(p),
                       std::move(p2),
                       std::move(theta),
                       std::move(plan),
                       std::move(diff),
                       index_mode_from(require(j, "index_mode").get<std::string>()),
                       box_mode_from(require(j, "box_order_mode").get<std::string>()),
                       std::move(checks),
                       require(j, "spherical_p").get<bool>(),
                       std::move(ws),
                       string_list(require(j, "assumed_lemmas")),
                       string_list(require(j, "notes"))};
}

}  // namespace cherloc
