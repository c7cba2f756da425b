#pragma once

// Command dispatch shared by the binary and the tests.  Each handler builds
// the JSON document first; text output is rendered from that JSON and never
// computed separately.  Exit codes: 0 success, 1 bad input, 2 a checked
// statement was violated, 3 the computation is out of scope.

#include "composita/json_report.hpp"
#include "composita/parse.hpp"

#include <fstream>
#include <iostream>

namespace composita {

struct CliOptions {
    std::string command;          // classify | composite | magid | verify
    std::string base = "Q";
    std::vector<std::string> ext; // tower step moduli, innermost first
    std::size_t bound = 6;
    std::uint64_t seed = 0;
    std::string format = "json";  // json | text
    std::string catalog = "builtin";
};

/// Adjoin each modulus in turn; strings are parsed over the current top field.
inline Extension build_extension(const std::string& base, const std::vector<std::string>& ext) {
    Field K = parse_base_token(base);
    Field top = K;
    for (const auto& s : ext) {
        Poly f = parse_poly(s, top).monic();
        if (f.deg() < 2)
            throw domain_error("tower step must have degree at least 2: '" + s + "'");
        top = make_extension(top, f).upper;
    }
    return make_step(K, top);
}

// ---------------------------------------------------------------------------
// Text rendering (from the JSON only).

namespace detail {

inline bool scalar_json(const Json& j) { return !j.is_object() && !j.is_array(); }

inline std::string inline_json(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

inline void render_text(const Json& j, std::ostream& os, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (scalar_json(v)) {
                os << pad << k << ": " << inline_json(v) << "\n";
            } else if (v.is_array() && std::all_of(v.begin(), v.end(), scalar_json)) {
                os << pad << k << ":";
                if (v.empty()) os << " []";
                for (const auto& e : v) os << " " << inline_json(e);
                os << "\n";
            } else {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (scalar_json(e)) {
                os << pad << "- " << inline_json(e) << "\n";
            } else {
                os << pad << "-\n";
                render_text(e, os, indent + 2);
            }
        }
    } else {
        os << pad << inline_json(j) << "\n";
    }
}

} // namespace detail

inline void emit(const Json& doc, const std::string& format, std::ostream& os) {
    if (format == "text")
        detail::render_text(doc, os, 0);
    else
        os << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Catalog files.

/// JSON list of entries: {name, base, ext[], split?, infinite?, expected?}.
/// `split` = number of steps in the lower part of a three-field tower;
/// `infinite` = "algebraic" | "transcendental" (ext must then be empty);
/// `expected` may pin degree, separable, normal, galois, group.
inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open catalog file: " + path);
    Json doc = Json::parse(in, nullptr, true, true); // allow comments
    if (!doc.is_array()) throw domain_error("catalog file must be a JSON array");
    std::vector<CatalogEntry> out;
    for (const auto& e : doc) {
        CatalogEntry c;
        c.name = e.at("name").get<std::string>();
        std::string base = e.at("base").get<std::string>();
        Field K = parse_base_token(base);
        std::vector<std::string> ext;
        if (e.contains("ext")) ext = e.at("ext").get<std::vector<std::string>>();
        if (e.contains("infinite")) {
            if (!ext.empty())
                throw domain_error("entry '" + c.name + "': infinite markers take no tower");
            std::string kind = e.at("infinite").get<std::string>();
            if (kind != "algebraic" && kind != "transcendental")
                throw domain_error("entry '" + c.name + "': infinite must be algebraic or transcendental");
            c.K = K;
            c.L = K.extended_infinite(kind == "algebraic");
        } else {
            std::size_t split = e.value("split", std::size_t{0});
            if (split >= ext.size() && split != 0)
                throw domain_error("entry '" + c.name + "': split must leave an upper step");
            Field top = K;
            for (std::size_t i = 0; i < ext.size(); ++i) {
                Poly f = parse_poly(ext[i], top).monic();
                if (f.deg() < 2)
                    throw domain_error("entry '" + c.name + "': tower step must have degree at least 2");
                top = make_extension(top, f).upper;
                if (split != 0 && i + 1 == split) {
                    c.triple = true;
                    c.mid = top;
                }
            }
            c.K = K;
            c.L = top;
        }
        if (e.contains("expected")) {
            const Json& x = e.at("expected");
            if (x.contains("degree")) c.expected.degree = x.at("degree").get<std::size_t>();
            if (x.contains("infinite")) c.expected.infinite = x.at("infinite").get<bool>();
            if (x.contains("separable")) c.expected.separable = x.at("separable").get<bool>();
            if (x.contains("normal")) c.expected.normal = x.at("normal").get<bool>();
            if (x.contains("galois")) c.expected.galois = x.at("galois").get<bool>();
            if (x.contains("group")) c.expected.group = x.at("group").get<std::string>();
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
    return out;
}

// ---------------------------------------------------------------------------
// Handlers.

inline Json input_echo(const CliOptions& o) {
    Json in;
    in["command"] = o.command;
    if (o.command != "verify") {
        in["base"] = o.base;
        in["ext"] = o.ext;
    }
    if (o.command == "composite") in["bound"] = o.bound;
    if (o.command == "magid" || o.command == "verify") in["seed"] = o.seed;
    if (o.command == "verify") in["catalog"] = o.catalog;
    in["format"] = o.format;
    return in;
}

inline int run_cli(const CliOptions& o, std::ostream& out, std::ostream& err) {
    Json input = input_echo(o);
    std::vector<std::string> notes;
    try {
        Json report;
        int code = 0;
        if (o.command == "classify") {
            Extension E = build_extension(o.base, o.ext);
            ExtensionReport rep = classify(E);
            report = classify_json(rep);
            notes = classify_notes(rep);
        } else if (o.command == "composite") {
            Extension E = build_extension(o.base, o.ext);
            report = composite_json(E, o.bound, notes);
        } else if (o.command == "magid") {
            Extension E = build_extension(o.base, o.ext);
            TriVal sep = TriVal::of(is_separable(E));
            TensorReport t = tensor_structure(E, o.seed);
            notes.push_back(t.note);
            report = tensor_json(sep, t);
            tensor_check(E, sep.is_true(), o.seed); // hard consistency assert
        } else if (o.command == "verify") {
            std::vector<CatalogEntry> cat =
                o.catalog == "builtin" ? builtin_catalog() : load_catalog(o.catalog);
            VerdictTable tab = run_all(cat, o.seed);
            report = verify_json(tab, cat.size());
            if (!tab.ok()) {
                notes.push_back("violations found");
                code = 2;
            }
        } else {
            throw domain_error("unknown command: " + o.command);
        }
        emit(envelope(std::move(input), std::move(report), notes), o.format, out);
        return code;
    } catch (const parse_error& e) {
        notes.push_back(std::string("input error: ") + e.what());
        emit(envelope(std::move(input), Json(nullptr), notes), o.format, out);
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const capability_error& e) {
        notes.push_back(std::string("capability limit: ") + e.what());
        emit(envelope(std::move(input), Json(nullptr), notes), o.format, out);
        err << "capability limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        notes.push_back(std::string("error: ") + e.what());
        emit(envelope(std::move(input), Json(nullptr), notes), o.format, out);
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace composita
