// serialize.hpp
// JSON and text formats for fields, arrays, states, QOAs and reports.
// All emitters use insertion-ordered keys so identical inputs produce
// identical bytes; doubles round-trip exactly.

#pragma once

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

#include "quoa/oarray.hpp"
#include "quoa/qoa.hpp"
#include "quoa/verify.hpp"

namespace quoa {

using Json = nlohmann::ordered_json;

// --- Field: {"p":..., "t":..., "poly":[...]}; elements travel as indices ---

inline Json field_to_json(const Field& f) {
    return Json{{"p", f.p()}, {"t", f.degree()}, {"poly", f.modulus()}};
}

inline Field field_from_json(const Json& j) {
    return Field(j.at("p").get<int>(), j.at("t").get<int>(), j.at("poly").get<std::vector<int>>());
}

// --- OrthogonalArray -------------------------------------------------------

inline Json oa_to_json(const OrthogonalArray& oa) {
    Json j{{"r", oa.runs()}, {"N", oa.factors()}, {"d", oa.levels}, {"k", oa.strength}, {"rows", oa.rows}};
    if (oa.field) j["field"] = field_to_json(*oa.field);
    return j;
}

inline OrthogonalArray oa_from_json(const Json& j) {
    OrthogonalArray oa;
    oa.levels = j.at("d").get<int>();
    oa.strength = j.at("k").get<int>();
    oa.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (j.contains("field")) oa.field = field_from_json(j.at("field"));
    if (oa.runs() != j.at("r").get<int>() || oa.factors() != j.at("N").get<int>())
        throw std::invalid_argument("orthogonal array JSON: header disagrees with rows");
    return oa;
}

/// Text form: header "OA r N d k" then one whitespace-separated row per line.
inline std::string oa_to_text(const OrthogonalArray& oa) {
    std::ostringstream os;
    os << "OA " << oa.runs() << ' ' << oa.factors() << ' ' << oa.levels << ' ' << oa.strength << '\n';
    for (const auto& row : oa.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << '\n';
    }
    return os.str();
}

inline OrthogonalArray oa_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int r = 0, N = 0, d = 0, k = 0;
    if (!(is >> tag >> r >> N >> d >> k) || tag != "OA")
        throw std::invalid_argument("orthogonal array text: bad header");
    OrthogonalArray oa;
    oa.levels = d;
    oa.strength = k;
    oa.rows.assign(r, std::vector<int>(N));
    for (auto& row : oa.rows)
        for (int& x : row)
            if (!(is >> x)) throw std::invalid_argument("orthogonal array text: truncated rows");
    return oa;
}

// --- SparseState: {"d":..., "n":..., "amps":[{"ket":[...],"re":...,"im":...}]}

inline Json state_to_json(const SparseState& st) {
    Json amps = Json::array();
    for (const auto& [ket, a] : st.amps()) {  // std::map iterates kets lexicographically
        Json term{{"ket", Json::array()}, {"re", a.real()}, {"im", a.imag()}};
        for (auto digit : ket) term["ket"].push_back(static_cast<int>(digit));
        amps.push_back(std::move(term));
    }
    return Json{{"d", st.dim()}, {"n", st.sites()}, {"amps", std::move(amps)}};
}

inline SparseState state_from_json(const Json& j) {
    SparseState st(j.at("d").get<int>(), j.at("n").get<int>());
    for (const auto& term : j.at("amps")) {
        Ket ket;
        for (const auto& digit : term.at("ket")) ket.push_back(static_cast<std::uint8_t>(digit.get<int>()));
        st.accumulate(ket, Amplitude{term.at("re").get<double>(), term.at("im").get<double>()});
    }
    return st;
}

// --- QuantumOA --------------------------------------------------------------

inline Json qoa_to_json(const QuantumOA& q) {
    Json rows = Json::array();
    for (const auto& row : q.rows) rows.push_back(state_to_json(row));
    return Json{{"r", q.r}, {"N", q.N}, {"d", q.d}, {"k", q.k}, {"provenance", q.provenance}, {"rows", std::move(rows)}};
}

inline QuantumOA qoa_from_json(const Json& j) {
    QuantumOA q;
    q.r = j.at("r").get<int>();
    q.N = j.at("N").get<int>();
    q.d = j.at("d").get<int>();
    q.k = j.at("k").get<int>();
    q.provenance = j.value("provenance", std::string{});
    for (const auto& row : j.at("rows")) q.rows.push_back(state_from_json(row));
    if (static_cast<int>(q.rows.size()) != q.r) throw std::invalid_argument("QOA JSON: r disagrees with rows");
    for (const auto& row : q.rows)
        if (row.dim() != q.d || row.sites() != q.N) throw std::invalid_argument("QOA JSON: row shape mismatch");
    return q;
}

// --- UniformityReport -------------------------------------------------------

inline Json report_to_json(const UniformityReport& rep) {
    return Json{{"k", rep.k},
                {"subsets_checked", rep.subsets_checked},
                {"max_deviation", rep.max_deviation},
                {"worst_subset", rep.worst_subset},
                {"passed", rep.passed},
                {"wall_seconds", rep.wall_seconds},
                {"tolerance", rep.tolerance}};
}

inline std::string report_to_text(const UniformityReport& rep) {
    std::ostringstream os;
    os << (rep.passed ? "PASS" : "FAIL") << " k=" << rep.k << " subsets=" << rep.subsets_checked
       << " max_deviation=" << rep.max_deviation << " tolerance=" << rep.tolerance << " worst_subset={";
    for (std::size_t i = 0; i < rep.worst_subset.size(); ++i) os << (i ? "," : "") << rep.worst_subset[i];
    os << "} wall_seconds=" << rep.wall_seconds;
    return os.str();
}

}  // namespace quoa
