#ifndef SUPERLIE_JSON_IO_HPP
#define SUPERLIE_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superlie/algebra.hpp"
#include "superlie/extensions.hpp"

namespace superlie {

using Json = nlohmann::ordered_json;

/// Runtime field tag carried by documents.
struct FieldDesc {
    bool rational = true;
    std::uint64_t prime = 0;
};

inline FieldDesc field_of_document(const Json& doc) {
    if (!doc.is_object() || !doc.contains("field"))
        throw ParseError("document needs a 'field' entry");
    const Json& f = doc["field"];
    if (f.is_string()) {
        if (f.get<std::string>() != "rational")
            throw ParseError("unknown field descriptor '" + f.get<std::string>() + "'");
        return {true, 0};
    }
    if (f.is_object() && f.contains("prime") && f["prime"].is_number_unsigned())
        return {false, f["prime"].get<std::uint64_t>()};
    throw ParseError("field must be \"rational\" or {\"prime\": p}");
}

namespace detail {

inline void expect_keys(const Json& obj, std::initializer_list<const char*> keys,
                        const std::string& what) {
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* key : keys) known |= (k == key);
        if (!known) throw ParseError("unexpected key '" + k + "' in " + what);
    }
    for (const char* key : keys)
        if (!obj.contains(key)) throw ParseError(what + " is missing '" + std::string(key) + "'");
}

template <Field K>
Json field_json(const typename K::Context& ctx);

template <>
inline Json field_json<Rational>(const Rational::Context&) {
    return Json("rational");
}

template <>
inline Json field_json<PrimeField>(const PrimeField::Context& ctx) {
    Json f = Json::object();
    f["prime"] = ctx.p;
    return f;
}

} // namespace detail

template <Field K>
struct LoadedAlgebra {
    LieSuperalgebra<K> algebra;
    std::vector<std::string> notices; // canonicalizations applied on load
};

template <Field K>
LoadedAlgebra<K> load_algebra(const Json& doc, const typename K::Context& ctx) {
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    detail::expect_keys(doc, {"field", "basis", "brackets"}, "algebra document");
    if (doc["field"] != detail::field_json<K>(ctx))
        throw ParseError("document field does not match the requested field");

    std::vector<std::string> names;
    std::vector<Parity> parities;
    if (!doc["basis"].is_array()) throw ParseError("'basis' must be an array");
    for (const Json& b : doc["basis"]) {
        if (!b.is_object()) throw ParseError("basis entries must be objects");
        detail::expect_keys(b, {"name", "parity"}, "basis entry");
        if (!b["name"].is_string() || !b["parity"].is_number_integer())
            throw ParseError("basis entries need a string name and an integer parity");
        long p = b["parity"].get<long>();
        if (p != 0 && p != 1) throw ParseError("parity must be 0 or 1");
        names.push_back(b["name"].get<std::string>());
        parities.push_back(static_cast<Parity>(p));
    }
    long n = static_cast<long>(names.size());

    std::vector<std::string> notices;
    std::map<std::pair<long, long>, SparseVec<K>> entries;
    if (!doc["brackets"].is_array()) throw ParseError("'brackets' must be an array");
    std::pair<long, long> prev{-1, -1};
    bool sorted = true;
    for (const Json& e : doc["brackets"]) {
        if (!e.is_object()) throw ParseError("bracket entries must be objects");
        detail::expect_keys(e, {"left", "right", "value"}, "bracket entry");
        if (!e["left"].is_number_integer() || !e["right"].is_number_integer())
            throw ParseError("bracket indices must be integers");
        long i = e["left"].get<long>(), j = e["right"].get<long>();
        if (i < 0 || i >= n || j < 0 || j >= n) throw ParseError("bracket index out of range");
        if (!e["value"].is_array() || e["value"].empty())
            throw ParseError("bracket value must be a nonempty array of [index, scalar] pairs");
        SparseVec<K> val;
        long previdx = -1;
        for (const Json& t : e["value"]) {
            if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
                throw ParseError("bracket value entries must be [index, \"scalar\"] pairs");
            long m = t[0].get<long>();
            if (m < 0 || m >= n) throw ParseError("value index out of range");
            if (m <= previdx) {
                if (m == previdx) throw ParseError("duplicate value index in a bracket entry");
                notices.push_back("bracket value of (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") reordered by index");
            }
            K c = ctx.parse(t[1].get<std::string>());
            if (c.is_zero()) throw ParseError("explicit zero scalar in a bracket value");
            val.emplace_back(m, std::move(c));
            previdx = std::max(previdx, m);
        }
        std::sort(val.begin(), val.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (entries.count({i, j})) throw ParseError("duplicate bracket entry (" + std::to_string(i) +
                                                    ", " + std::to_string(j) + ")");
        entries[{i, j}] = std::move(val);
        if (std::make_pair(i, j) < prev) sorted = false;
        prev = {i, j};
    }
    if (!sorted) notices.push_back("bracket entries reordered to (left, right) order");

    LieSuperalgebra<K> L(ctx, std::move(names), std::move(parities), entries);
    // non-canonical orientations (upper-triangle mirrors) are accepted and noted
    for (const auto& [ij, val] : entries)
        if (ij.first > ij.second)
            notices.push_back("bracket (" + std::to_string(ij.first) + ", " +
                              std::to_string(ij.second) + ") stored in mirror orientation");
    return {std::move(L), std::move(notices)};
}

template <Field K>
Json save_algebra(const LieSuperalgebra<K>& L) {
    Json doc = Json::object();
    doc["field"] = detail::field_json<K>(L.ctx());
    doc["basis"] = Json::array();
    for (long i = 0; i < L.dim(); ++i) {
        Json b = Json::object();
        b["name"] = L.names()[static_cast<std::size_t>(i)];
        b["parity"] = L.parity(i);
        doc["basis"].push_back(std::move(b));
    }
    doc["brackets"] = Json::array();
    for (const auto& [ij, val] : L.canonical_entries()) {
        Json e = Json::object();
        e["left"] = ij.first;
        e["right"] = ij.second;
        e["value"] = Json::array();
        for (const auto& [m, c] : val) e["value"].push_back(Json::array({m, L.ctx().format(c)}));
        doc["brackets"].push_back(std::move(e));
    }
    return doc;
}

template <Field K>
struct LoadedExtension {
    ExtensionSpec<K> spec;
    std::vector<std::string> notices;
};

template <Field K>
LoadedExtension<K> load_extension(const Json& doc, const typename K::Context& ctx) {
    if (!doc.is_object()) throw ParseError("extension document must be a JSON object");
    detail::expect_keys(doc, {"total", "kernel", "base", "projection"}, "extension document");
    auto total = load_algebra<K>(doc["total"], ctx);
    auto base = load_algebra<K>(doc["base"], ctx);

    GradedSubspace<K> kernel(total.algebra.sdim());
    if (!doc["kernel"].is_array()) throw ParseError("'kernel' must be an array");
    for (const Json& k : doc["kernel"]) {
        if (k.is_number_integer()) {
            long i = k.get<long>();
            if (i < 0 || i >= total.algebra.dim()) throw ParseError("kernel index out of range");
            kernel.add(total.algebra.basis_vector(i));
        } else if (k.is_array()) {
            if (static_cast<long>(k.size()) != total.algebra.dim())
                throw ParseError("kernel vector length mismatch");
            Vec<K> v;
            for (const Json& s : k) {
                if (!s.is_string()) throw ParseError("kernel vector entries must be scalar strings");
                v.push_back(ctx.parse(s.get<std::string>()));
            }
            kernel.add(std::move(v));
        } else {
            throw ParseError("kernel entries must be indices or coordinate vectors");
        }
    }

    const Json& pj = doc["projection"];
    if (!pj.is_array() || static_cast<long>(pj.size()) != base.algebra.dim())
        throw ParseError("projection must have one row per base basis element");
    Mat<K> proj = Mat<K>::zero(base.algebra.dim(), total.algebra.dim());
    for (long r = 0; r < base.algebra.dim(); ++r) {
        const Json& row = pj[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<long>(row.size()) != total.algebra.dim())
            throw ParseError("projection row length mismatch");
        for (long c = 0; c < total.algebra.dim(); ++c) {
            const Json& s = row[static_cast<std::size_t>(c)];
            if (!s.is_string()) throw ParseError("projection entries must be scalar strings");
            proj.at(r, c) = ctx.parse(s.get<std::string>());
        }
    }
    std::vector<std::string> notices = total.notices;
    notices.insert(notices.end(), base.notices.begin(), base.notices.end());
    return {{std::move(total.algebra), std::move(kernel), std::move(base.algebra), std::move(proj)},
            std::move(notices)};
}

template <Field K>
Json save_extension(const ExtensionSpec<K>& e) {
    Json doc = Json::object();
    doc["total"] = save_algebra(e.total);

    // kernels spanned by coordinate vectors serialize as index lists
    bool coordinate_kernel = true;
    std::vector<long> idxs;
    for (const auto& row : e.kernel.basis()) {
        long nz = -1;
        bool unit = true;
        for (long i = 0; i < static_cast<long>(row.size()); ++i) {
            const K& c = row[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (nz >= 0 || c != e.total.one()) { unit = false; break; }
            nz = i;
        }
        if (!unit || nz < 0) { coordinate_kernel = false; break; }
        idxs.push_back(nz);
    }
    doc["kernel"] = Json::array();
    if (coordinate_kernel) {
        std::sort(idxs.begin(), idxs.end());
        for (long i : idxs) doc["kernel"].push_back(i);
    } else {
        for (const auto& row : e.kernel.basis()) {
            Json v = Json::array();
            for (const K& c : row) v.push_back(e.total.ctx().format(c));
            doc["kernel"].push_back(std::move(v));
        }
    }

    doc["base"] = save_algebra(e.base);
    doc["projection"] = Json::array();
    for (long r = 0; r < e.projection.rows; ++r) {
        Json row = Json::array();
        for (long c = 0; c < e.projection.cols; ++c)
            row.push_back(e.base.ctx().format(e.projection.at(r, c)));
        doc["projection"].push_back(std::move(row));
    }
    return doc;
}

/// Canonical byte rendering used by every command that emits documents.
inline std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

} // namespace superlie

#endif
