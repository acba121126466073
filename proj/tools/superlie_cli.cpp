// Command-line interface for exact Lie superalgebra computations:
// validation, structural invariants, multipliers by two methods, stem
// extension checks, family constructors and the family comparison tables.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "superlie/families.hpp"
#include "superlie/freepres.hpp"
#include "superlie/json_io.hpp"

using namespace superlie;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;   // verification failure or table mismatch
constexpr int kBadInput = 2; // malformed documents or invalid parameters

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError("malformed JSON in '" + path + "': " + ex.what());
    }
    return doc;
}

void print_notices(const std::vector<std::string>& notices) {
    for (const auto& n : notices) std::cerr << "notice: " << n << "\n";
}

template <Field K>
Json subspace_json(const GradedSubspace<K>& s, const typename K::Context& ctx) {
    Json out = Json::object();
    out["sdim"] = Json::array({s.sdim().even, s.sdim().odd});
    for (Parity p : {0, 1}) {
        Json rows = Json::array();
        const auto& basis = p == 0 ? s.even_basis() : s.odd_basis();
        for (const auto& row : basis) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(ctx.format(c));
            rows.push_back(std::move(r));
        }
        out[p == 0 ? "even" : "odd"] = std::move(rows);
    }
    return out;
}

template <Field K>
int run_validate(const Json& doc, const typename K::Context& ctx) {
    auto loaded = load_algebra<K>(doc, ctx);
    print_notices(loaded.notices);
    auto rep = loaded.algebra.validate();
    if (rep.ok) {
        std::cout << "ok\n";
        return kOk;
    }
    for (const auto& v : rep.violations) std::cout << v.detail << "\n";
    return kFailed;
}

template <Field K>
int run_invariants(const Json& doc, const typename K::Context& ctx) {
    auto loaded = load_algebra<K>(doc, ctx);
    print_notices(loaded.notices);
    const auto& L = loaded.algebra;
    Json out = Json::object();
    out["sdim"] = Json::array({L.sdim().even, L.sdim().odd});
    out["center"] = subspace_json(center(L), ctx);
    out["derived"] = subspace_json(derived(L), ctx);
    Json series = Json::array();
    auto lcs = lower_central_series(L);
    for (const auto& term : lcs) series.push_back(subspace_json(term, ctx));
    out["lower_central_series"] = std::move(series);
    bool nil = L.dim() == 0 || lcs.back().sdim() == SuperDim{0, 0};
    out["nilpotent"] = nil;
    if (nil) out["class"] = L.dim() == 0 ? 0 : static_cast<long>(lcs.size()) - 1;
    std::cout << render(out);
    return kOk;
}

template <Field K>
int run_multiplier(const Json& doc, const typename K::Context& ctx, const std::string& method,
                   std::optional<long> class_bound, const std::string& denominator) {
    auto loaded = load_algebra<K>(doc, ctx);
    print_notices(loaded.notices);
    const auto& L = loaded.algebra;
    auto rep = L.validate();
    if (!rep.ok) {
        for (const auto& v : rep.violations) std::cout << v.detail << "\n";
        return kFailed;
    }
    SuperDim m{};
    if (method == "h2") {
        m = multiplier_sdim(L);
    } else {
        HopfDenominator den = denominator == "rr" ? HopfDenominator::RR : HopfDenominator::RF;
        m = hopf_multiplier(L, class_bound, den);
    }
    std::cout << m.str() << "\n";
    return kOk;
}

template <Field K>
int run_verify_stem(const Json& doc, const typename K::Context& ctx, bool maximal) {
    auto loaded = load_extension<K>(doc, ctx);
    print_notices(loaded.notices);
    const auto& e = loaded.spec;
    auto rep = verify_extension(e);
    if (!rep.ok) {
        for (const auto& p : rep.problems) std::cout << p << "\n";
        return kFailed;
    }
    if (!is_central(e)) {
        std::cout << "kernel is not central in the total algebra\n";
        return kFailed;
    }
    if (!is_stem(e)) {
        std::cout << "kernel is not contained in the derived subalgebra\n";
        return kFailed;
    }
    if (maximal && !is_maximal_stem(e)) {
        std::cout << "stem extension is not maximal: kernel " << e.kernel.sdim().str()
                  << " vs multiplier " << multiplier_sdim(e.base).str() << "\n";
        return kFailed;
    }
    std::cout << (maximal ? "maximal stem extension\n" : "stem extension\n");
    return kOk;
}

template <Field K>
int run_stem_deform(const Json& doc, const typename K::Context& ctx) {
    auto loaded = load_extension<K>(doc, ctx);
    print_notices(loaded.notices);
    const auto& e = loaded.spec;
    auto rep = verify_extension(e);
    if (!rep.ok) {
        for (const auto& p : rep.problems) std::cout << p << "\n";
        return kFailed;
    }
    auto X = stem_denominator(e);
    auto def = stem_deformation(e, X);
    std::cout << render(save_extension(def));
    return kOk;
}

template <Field K>
int run_canonicalize(const Json& doc, const typename K::Context& ctx) {
    if (doc.is_object() && doc.contains("total")) {
        auto loaded = load_extension<K>(doc, ctx);
        print_notices(loaded.notices);
        std::cout << render(save_extension(loaded.spec));
    } else {
        auto loaded = load_algebra<K>(doc, ctx);
        print_notices(loaded.notices);
        std::cout << render(save_algebra(loaded.algebra));
    }
    return kOk;
}

FamilyId parse_family(const std::string& kind, long p, long q, long n, long m) {
    if (kind == "heisenberg-even") return {FamilyKind::HeisenbergEven, p, q, 0, 0};
    if (kind == "heisenberg-odd") return {FamilyKind::HeisenbergOdd, 0, 0, n, 0};
    if (kind == "model-filiform") return {FamilyKind::ModelFiliform, 0, 0, n, m};
    throw DomainError("unknown family '" + kind +
                      "' (expected heisenberg-even, heisenberg-odd or model-filiform)");
}

template <Field K>
LieSuperalgebra<K> build_family(const FamilyId& id, const typename K::Context& ctx) {
    switch (id.kind) {
        case FamilyKind::HeisenbergEven: return heisenberg_even<K>(id.p, id.q, ctx);
        case FamilyKind::HeisenbergOdd: return heisenberg_odd<K>(id.n, ctx);
        case FamilyKind::ModelFiliform: return model_filiform<K>(id.n, id.m, ctx);
    }
    throw DomainError("unknown family");
}

template <Field K>
ExtensionSpec<K> build_cover(const FamilyId& id, const typename K::Context& ctx) {
    id.check();
    switch (id.kind) {
        case FamilyKind::HeisenbergOdd: return cover_heisenberg_odd<K>(id.n, ctx);
        case FamilyKind::ModelFiliform: return cover_filiform<K>(id.n, id.m, ctx);
        case FamilyKind::HeisenbergEven:
            return cover_from_cohomology(heisenberg_even<K>(id.p, id.q, ctx));
    }
    throw DomainError("unknown family");
}

template <Field K>
int run_family(const std::string& kind, long p, long q, long n, long m, bool cover,
               const typename K::Context& ctx) {
    FamilyId id = parse_family(kind, p, q, n, m);
    if (cover) {
        std::cout << render(save_extension(build_cover<K>(id, ctx)));
    } else {
        if (id.kind != FamilyKind::ModelFiliform) id.check();
        std::cout << render(save_algebra(build_family<K>(id, ctx)));
    }
    return kOk;
}

struct TableRow {
    std::string parameters;
    SuperDim computed;
    SuperDim formula;
    bool match() const { return computed == formula; }
};

int run_table(const std::string& kind, long maxn, const std::string& format) {
    if (maxn < 1) throw DomainError("--max must be at least 1");
    const Rational::Context Q;
    std::vector<TableRow> rows;
    auto add = [&](const std::string& params, const FamilyId& id) {
        rows.push_back({params, multiplier_sdim(build_family<Rational>(id, Q)),
                        multiplier_formula(id)});
    };
    if (kind == "heisenberg-odd") {
        for (long n = 1; n <= maxn; ++n)
            add("n=" + std::to_string(n), {FamilyKind::HeisenbergOdd, 0, 0, n, 0});
    } else if (kind == "heisenberg-even") {
        for (long s = 1; s <= maxn; ++s)
            for (long p = 0; p <= s; ++p)
                add("p=" + std::to_string(p) + " q=" + std::to_string(s - p),
                    {FamilyKind::HeisenbergEven, p, s - p, 0, 0});
    } else if (kind == "model-filiform") {
        for (long n = 1; n <= maxn; ++n)
            for (long m = 0; m <= maxn; ++m) {
                if (n == 1 && (m == 0 || m == 1)) continue;
                add("n=" + std::to_string(n) + " m=" + std::to_string(m),
                    {FamilyKind::ModelFiliform, 0, 0, n, m});
            }
    } else {
        throw DomainError("unknown family '" + kind + "'");
    }

    bool all_match = true;
    for (const auto& r : rows) all_match &= r.match();
    if (format == "json") {
        Json out = Json::array();
        for (const auto& r : rows) {
            Json row = Json::object();
            row["parameters"] = r.parameters;
            row["computed"] = Json::array({r.computed.even, r.computed.odd});
            row["formula"] = Json::array({r.formula.even, r.formula.odd});
            row["match"] = r.match();
            out.push_back(std::move(row));
        }
        std::cout << render(out);
    } else {
        std::cout << "parameters,computed_even,computed_odd,formula_even,formula_odd,match\n";
        for (const auto& r : rows)
            std::cout << r.parameters << "," << r.computed.even << "," << r.computed.odd << ","
                      << r.formula.even << "," << r.formula.odd << ","
                      << (r.match() ? "true" : "false") << "\n";
    }
    return all_match ? kOk : kFailed;
}

/// Run a document command over the field named in the document itself.
template <typename F>
int dispatch_doc(const Json& doc, F&& f) {
    FieldDesc fd = field_of_document(doc.is_object() && doc.contains("total") ? doc["total"] : doc);
    if (fd.rational) {
        Rational::Context ctx;
        return f(ctx);
    }
    PrimeField::Context ctx(fd.prime);
    return f(ctx);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multipliers, covers and stem extensions of Lie superalgebras"};
    app.require_subcommand(1);

    std::string file, method, denominator = "rf", kind, format = "csv", field = "rational";
    long p = 0, q = 0, n = 1, m = 0, maxn = 1, cb = -1;
    std::uint64_t prime = 0;
    bool cover = false, maximal = false;

    auto* c_validate = app.add_subcommand("validate", "check the Lie superalgebra axioms");
    c_validate->add_option("file", file)->required();

    auto* c_inv = app.add_subcommand("invariants", "center, derived subalgebra, lower central series");
    c_inv->add_option("file", file)->required();

    auto* c_family = app.add_subcommand("family", "emit a family algebra or its cover");
    c_family->add_option("kind", kind)->required();
    c_family->add_option("--p", p);
    c_family->add_option("--q", q);
    c_family->add_option("--n", n);
    c_family->add_option("--m", m);
    c_family->add_flag("--cover", cover);
    c_family->add_option("--field", field)->check(CLI::IsMember({"rational", "prime"}));
    c_family->add_option("--prime", prime);

    auto* c_mult = app.add_subcommand("multiplier", "multiplier superdimension of an algebra");
    c_mult->add_option("file", file)->required();
    c_mult->add_option("--method", method)->required()->check(CLI::IsMember({"h2", "hopf"}));
    c_mult->add_option("--class-bound", cb);
    c_mult->add_option("--denominator", denominator)->check(CLI::IsMember({"rf", "rr"}));

    auto* c_verify = app.add_subcommand("verify-stem", "verify a (maximal) stem extension");
    c_verify->add_option("file", file)->required();
    c_verify->add_flag("--maximal", maximal);

    auto* c_deform = app.add_subcommand("stem-deform", "canonical stem deformation of an extension");
    c_deform->add_option("file", file)->required();

    auto* c_canon = app.add_subcommand("canonicalize", "reprint a document in canonical form");
    c_canon->add_option("file", file)->required();

    auto* c_table = app.add_subcommand("table", "computed vs closed-form multiplier table");
    c_table->add_option("kind", kind)->required();
    c_table->add_option("--max", maxn)->required();
    c_table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);
    std::optional<long> class_bound;
    if (cb >= 0) class_bound = cb;

    try {
        if (c_family->parsed()) {
            if (field == "prime") {
                PrimeField::Context ctx(prime);
                return run_family<PrimeField>(kind, p, q, n, m, cover, ctx);
            }
            Rational::Context ctx;
            return run_family<Rational>(kind, p, q, n, m, cover, ctx);
        }
        if (c_table->parsed()) return run_table(kind, maxn, format);

        Json doc = read_json_file(file);
        return dispatch_doc(doc, [&](const auto& ctx) {
            using K = std::decay_t<decltype(ctx.zero())>;
            if (c_validate->parsed()) return run_validate<K>(doc, ctx);
            if (c_inv->parsed()) return run_invariants<K>(doc, ctx);
            if (c_mult->parsed()) return run_multiplier<K>(doc, ctx, method, class_bound, denominator);
            if (c_verify->parsed()) return run_verify_stem<K>(doc, ctx, maximal);
            if (c_deform->parsed()) return run_stem_deform<K>(doc, ctx);
            if (c_canon->parsed()) return run_canonicalize<K>(doc, ctx);
            return kBadInput;
        });
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kBadInput;
    } catch (const DomainError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kBadInput;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kFailed;
    }
}
