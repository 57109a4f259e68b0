#pragma once

// Reading and writing algebra files: one JSON object with the fields
// rank, names, involution and lambda[i][j][k].

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "algebra.hpp"

namespace tazeta {

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline BigInt json_integer(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    throw Error(Errc::parse_error, "field " + where + ": expected an integer");
}

}  // namespace detail

inline TableAlgebra parse_algebra(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, detail::line_col(text, e.byte) + ": malformed JSON");
    }
    if (!doc.is_object()) throw Error(Errc::parse_error, "top level must be an object");
    static const std::set<std::string> known{"rank", "names", "involution", "lambda"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key())) throw Error(Errc::parse_error, "unknown field '" + it.key() + "'");
    for (const char* f : {"rank", "involution", "lambda"})
        if (!doc.contains(f)) throw Error(Errc::parse_error, std::string("missing field '") + f + "'");

    BigInt rank_big = detail::json_integer(doc["rank"], "'rank'");
    if (rank_big < 1 || rank_big > 64) throw Error(Errc::parse_error, "field 'rank': must be between 1 and 64");
    const int n = static_cast<int>(rank_big);

    std::vector<std::string> names;
    if (doc.contains("names")) {
        const auto& jn = doc["names"];
        if (!jn.is_array() || static_cast<int>(jn.size()) != n)
            throw Error(Errc::parse_error, "field 'names': expected a list of " + std::to_string(n) + " strings");
        for (std::size_t i = 0; i < jn.size(); ++i) {
            if (!jn[i].is_string()) throw Error(Errc::parse_error, "field 'names[" + std::to_string(i) + "]': expected a string");
            names.push_back(jn[i].get<std::string>());
        }
    }

    const auto& ji = doc["involution"];
    if (!ji.is_array() || static_cast<int>(ji.size()) != n)
        throw Error(Errc::parse_error, "field 'involution': expected a list of " + std::to_string(n) + " integers");
    std::vector<int> inv;
    for (std::size_t i = 0; i < ji.size(); ++i) {
        BigInt v = detail::json_integer(ji[i], "'involution[" + std::to_string(i) + "]'");
        if (v < 0 || v >= n) throw Error(Errc::parse_error, "field 'involution[" + std::to_string(i) + "]': out of range");
        inv.push_back(static_cast<int>(v));
    }

    const auto& jl = doc["lambda"];
    auto shape_error = [&](const std::string& path) {
        return Error(Errc::parse_error, "field 'lambda" + path + "': expected a list of " + std::to_string(n) + " entries");
    };
    if (!jl.is_array() || static_cast<int>(jl.size()) != n) throw shape_error("");
    TableAlgebra t = TableAlgebra::zeros(n, inv, names);
    for (int i = 0; i < n; ++i) {
        const auto& a = jl[static_cast<std::size_t>(i)];
        std::string pi = "[" + std::to_string(i) + "]";
        if (!a.is_array() || static_cast<int>(a.size()) != n) throw shape_error(pi);
        for (int j = 0; j < n; ++j) {
            const auto& b = a[static_cast<std::size_t>(j)];
            std::string pj = pi + "[" + std::to_string(j) + "]";
            if (!b.is_array() || static_cast<int>(b.size()) != n) throw shape_error(pj);
            for (int k = 0; k < n; ++k)
                t.set(i, j, k, detail::json_integer(b[static_cast<std::size_t>(k)], "'lambda" + pj + "[" + std::to_string(k) + "]'"));
        }
    }
    return t;
}

inline TableAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

inline nlohmann::json algebra_to_json(const TableAlgebra& t) {
    nlohmann::json doc;
    doc["rank"] = t.rank();
    doc["names"] = t.names();
    doc["involution"] = t.involution();
    auto lam = nlohmann::json::array();
    for (int i = 0; i < t.rank(); ++i) {
        auto a = nlohmann::json::array();
        for (int j = 0; j < t.rank(); ++j) {
            auto b = nlohmann::json::array();
            for (int k = 0; k < t.rank(); ++k) b.push_back(static_cast<std::int64_t>(t.lambda(i, j, k)));
            a.push_back(b);
        }
        lam.push_back(a);
    }
    doc["lambda"] = lam;
    return doc;
}

}  // namespace tazeta
