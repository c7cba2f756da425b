#pragma once

// All reports are built as JSON first; the text renderer in cli.hpp works
// from the JSON alone.  Ordered maps keep key order stable so identical
// inputs produce byte-identical documents.

#include "composita/composite.hpp"
#include "composita/format.hpp"
#include "composita/harness.hpp"

#include <json.hpp>

namespace composita {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "1.0.0";

inline Json tri_json(const TriVal& t) {
    if (!t.known()) return "unknown";
    return t.is_true();
}

/// Internal flag names carry capitals (K, L, M as field letters); JSON keys
/// are plain snake_case.
inline std::string snake_key(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline Json classify_json(const ExtensionReport& rep) {
    Json r;
    r["degree"] = rep.degree ? Json(*rep.degree) : Json(nullptr);
    r["finite"] = tri_json(rep.finite);
    r["algebraic"] = tri_json(rep.algebraic);
    r["separable"] = tri_json(rep.separable);
    r["normal"] = tri_json(rep.normal);
    r["galois"] = tri_json(rep.galois);
    r["aut_order"] = rep.aut_order ? Json(*rep.aut_order) : Json(nullptr);
    r["group"] = rep.group_id;
    r["fixed_field_is_k"] = tri_json(rep.fixed_field_is_K);
    Json hyp = Json::object();
    for (const auto& [name, v] : rep.hypothesis_flags) hyp[snake_key(name)] = tri_json(v);
    r["hypothesis_flags"] = hyp;
    return r;
}

/// Reasons attached to any undecided classification answers.
inline std::vector<std::string> classify_notes(const ExtensionReport& rep) {
    std::vector<std::string> notes;
    auto add = [&](const char* name, const TriVal& t) {
        if (!t.known() && !t.reason.empty())
            notes.push_back(std::string(name) + " undecided: " + t.reason);
    };
    add("finite", rep.finite);
    add("algebraic", rep.algebraic);
    add("separable", rep.separable);
    add("normal", rep.normal);
    add("galois", rep.galois);
    add("fixed_field_is_k", rep.fixed_field_is_K);
    return notes;
}

inline Json composite_json(const Extension& E, std::size_t bound,
                           std::vector<std::string>& notes) {
    CompositeRing T = make_composite(E);
    Json r;
    r["noetherian"] = is_noetherian(T);
    r["degree"] = E.degree ? Json(*E.degree) : Json(nullptr);
    if (!E.degree) {
        notes.push_back("X*L[X] is not finitely generated over T for infinite degree");
        r["generators"] = Json(nullptr);
        r["certificate"] = Json(nullptr);
        return r;
    }
    std::vector<CompositeElement> gens = xl_ideal_generators(T);
    Json g = Json::array();
    for (const auto& e : gens) g.push_back(poly_str(e.f));
    r["generators"] = g;
    Json cert;
    cert["bound"] = bound;
    try {
        GenerationCertificate c = certify_generation(T, gens, bound);
        cert["certified"] = true;
        Json rows = Json::array();
        for (const auto& row : c.rows) {
            Json jr;
            jr["target"] = poly_str(row.target);
            Json cof = Json::array();
            for (const auto& p : row.cofactors) cof.push_back(poly_str(p));
            jr["cofactors"] = cof;
            rows.push_back(jr);
        }
        cert["rows"] = rows;
    } catch (const not_generated_error& e) {
        cert["certified"] = false;
        notes.push_back(e.what());
    }
    r["certificate"] = cert;
    return r;
}

inline Json tensor_json(const TriVal& separable, const TensorReport& t) {
    Json r;
    r["separable"] = tri_json(separable);
    r["nilradical_zero"] = t.nilradical_zero;
    r["all_unit_times_idempotent"] = t.all_unit_idem;
    r["generated_by_idempotents"] = t.idempotents_span;
    bool consistent = separable.known() && separable.is_true() == t.nilradical_zero &&
                      t.nilradical_zero == t.all_unit_idem &&
                      t.all_unit_idem == t.idempotents_span;
    r["consistent"] = consistent;
    r["algebra_dim"] = t.algebra_dim;
    r["nilradical_dim"] = t.nilradical_dim;
    r["idempotent_count"] = t.idempotent_count;
    r["element_mode"] = t.element_mode;
    r["elements_tested"] = t.elements_tested;
    return r;
}

inline Json row_json(const PropositionCheck& r) {
    Json j;
    j["id"] = r.id;
    j["direction"] = r.direction;
    j["entry"] = r.entry;
    j["verdict"] = verdict_name(r.verdict);
    Json hyp = Json::object();
    for (const auto& [name, v] : r.hypotheses) hyp[snake_key(name)] = tri_json(v);
    j["hypotheses"] = hyp;
    j["lhs"] = r.lhs ? Json(*r.lhs) : Json(nullptr);
    j["rhs"] = r.rhs ? Json(*r.rhs) : Json(nullptr);
    j["notes"] = r.notes;
    return j;
}

inline Json verify_json(const VerdictTable& tab, std::size_t entries) {
    Json r;
    r["entries"] = entries;
    r["row_count"] = tab.rows.size();
    Json counts;
    counts["consistent"] = tab.consistent;
    counts["violation"] = tab.violation;
    counts["hypothesis_not_met"] = tab.hypothesis_not_met;
    counts["capability_limited"] = tab.capability_limited;
    r["counts"] = counts;
    r["ok"] = tab.ok();
    Json rows = Json::array();
    for (const auto& row : tab.rows) rows.push_back(row_json(row));
    r["rows"] = rows;
    return r;
}

/// Top-level document: {tool_version, input, report, notes}.
inline Json envelope(Json input, Json report, const std::vector<std::string>& notes) {
    Json doc;
    doc["tool_version"] = tool_version;
    doc["input"] = std::move(input);
    doc["report"] = std::move(report);
    doc["notes"] = notes;
    return doc;
}

} // namespace composita
