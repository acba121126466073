#ifndef SUPERLIE_FAMILIES_HPP
#define SUPERLIE_FAMILIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superlie/algebra.hpp"
#include "superlie/cohomology.hpp"
#include "superlie/extensions.hpp"

namespace superlie {

enum class FamilyKind { HeisenbergEven, HeisenbergOdd, ModelFiliform };

struct FamilyId {
    FamilyKind kind;
    long p = 0, q = 0; // heisenberg_even
    long n = 0, m = 0; // heisenberg_odd / model_filiform

    void check() const {
        switch (kind) {
            case FamilyKind::HeisenbergEven:
                if (p < 0 || q < 0 || p + q < 1)
                    throw DomainError("heisenberg_even requires p, q >= 0 and p + q >= 1");
                break;
            case FamilyKind::HeisenbergOdd:
                if (n < 1) throw DomainError("heisenberg_odd requires n >= 1");
                break;
            case FamilyKind::ModelFiliform:
                if (n < 1 || m < 0) throw DomainError("model_filiform requires n >= 1, m >= 0");
                if ((n == 1 && m == 0) || (n == 1 && m == 1))
                    throw DomainError("model filiform excludes (1,0) and (1,1), which are abelian");
                break;
        }
    }
};

/// Heisenberg superalgebra of even center H(p, q):
/// basis {u_1..u_p, v_1..v_p, z | w_1..w_q}, [u_i, v_i] = z, [w_k, w_k] = z.
template <Field K>
LieSuperalgebra<K> heisenberg_even(long p, long q, const typename K::Context& ctx) {
    if (p < 0 || q < 0 || p + q < 1) throw DomainError("heisenberg_even requires p + q >= 1");
    std::vector<std::string> names;
    std::vector<Parity> parities;
    for (long i = 1; i <= p; ++i) { names.push_back("u" + std::to_string(i)); parities.push_back(0); }
    for (long i = 1; i <= p; ++i) { names.push_back("v" + std::to_string(i)); parities.push_back(0); }
    names.push_back("z");
    parities.push_back(0);
    for (long k = 1; k <= q; ++k) { names.push_back("w" + std::to_string(k)); parities.push_back(1); }
    long z = 2 * p;
    std::map<std::pair<long, long>, SparseVec<K>> entries;
    K one = ctx.from_long(1);
    for (long i = 0; i < p; ++i) entries[{i, p + i}] = {{z, one}};
    for (long k = 0; k < q; ++k) entries[{2 * p + 1 + k, 2 * p + 1 + k}] = {{z, one}};
    return LieSuperalgebra<K>(ctx, std::move(names), std::move(parities), entries);
}

/// Heisenberg superalgebra of odd center H(n):
/// basis {u_1..u_n | z, w_1..w_n}, [u_i, w_i] = z.
template <Field K>
LieSuperalgebra<K> heisenberg_odd(long n, const typename K::Context& ctx) {
    if (n < 1) throw DomainError("heisenberg_odd requires n >= 1");
    std::vector<std::string> names;
    std::vector<Parity> parities;
    for (long i = 1; i <= n; ++i) { names.push_back("u" + std::to_string(i)); parities.push_back(0); }
    names.push_back("z");
    parities.push_back(1);
    for (long i = 1; i <= n; ++i) { names.push_back("w" + std::to_string(i)); parities.push_back(1); }
    long z = n;
    std::map<std::pair<long, long>, SparseVec<K>> entries;
    K one = ctx.from_long(1);
    for (long i = 0; i < n; ++i) entries[{i, n + 1 + i}] = {{z, one}};
    return LieSuperalgebra<K>(ctx, std::move(names), std::move(parities), entries);
}

/// Model filiform superalgebra F(n, m):
/// basis {x_0..x_n | y_1..y_m}, [x_0, x_i] = x_{i+1}, [x_0, y_j] = y_{j+1}.
/// The abelian cases (1,0) and (1,1) are still constructible here.
template <Field K>
LieSuperalgebra<K> model_filiform(long n, long m, const typename K::Context& ctx) {
    if (n < 1 || m < 0) throw DomainError("model_filiform requires n >= 1, m >= 0");
    std::vector<std::string> names;
    std::vector<Parity> parities;
    for (long i = 0; i <= n; ++i) { names.push_back("x" + std::to_string(i)); parities.push_back(0); }
    for (long j = 1; j <= m; ++j) { names.push_back("y" + std::to_string(j)); parities.push_back(1); }
    std::map<std::pair<long, long>, SparseVec<K>> entries;
    K one = ctx.from_long(1);
    for (long i = 1; i <= n - 1; ++i) entries[{0, i}] = {{i + 1, one}};
    for (long j = 1; j <= m - 1; ++j) entries[{0, n + j}] = {{n + j + 1, one}};
    return LieSuperalgebra<K>(ctx, std::move(names), std::move(parities), entries);
}

/// Closed-form multiplier superdimensions as published for these families.
/// For the Heisenberg families the values agree with the exact computation;
/// the model filiform table is reproduced verbatim and the `table` command
/// reports where it disagrees with the computed values.
inline SuperDim multiplier_formula(const FamilyId& id) {
    id.check();
    switch (id.kind) {
        case FamilyKind::HeisenbergEven: {
            long p = id.p, q = id.q;
            if (p == 0 && q == 1) return {0, 0};
            if (p == 1 && q == 0) return {2, 0};
            return {2 * p * p - p + q * (q + 1) / 2 - 1, 2 * p * q};
        }
        case FamilyKind::HeisenbergOdd: {
            long n = id.n;
            if (n == 1) return {1, 1};
            return {n * n, n * n - 1};
        }
        case FamilyKind::ModelFiliform: {
            long n = id.n, m = id.m;
            if (m == 0) return {n - 1, 0};
            if (n == 1) return {0, 1}; // m >= 2 here
            if (m == 1) return {n, 1};
            return {n - 1, n + m - 1};
        }
    }
    throw DomainError("unknown family");
}

/// Cover of H(n) by the explicit bracket table: Case 1 for n = 1 (basis
/// a, w | b, c, m), Case 2 for n >= 2 (a_i, y_{i,j}, w_{i,j} | b_i, c, y_i,
/// z_{i,j}). The w_{i,j} range includes i = j: [b_i, b_i] = w_{i,i} is a
/// legitimate odd square and the kernel count (n^2 | n^2 - 1) needs it.
template <Field K>
ExtensionSpec<K> cover_heisenberg_odd(long n, const typename K::Context& ctx) {
    if (n < 1) throw DomainError("cover_heisenberg_odd requires n >= 1");
    LieSuperalgebra<K> base = heisenberg_odd<K>(n, ctx);
    K one = ctx.from_long(1);

    std::vector<std::string> names;
    std::vector<Parity> parities;
    std::map<std::string, long> at;
    auto push = [&](const std::string& nm, Parity p) {
        at[nm] = static_cast<long>(names.size());
        names.push_back(nm);
        parities.push_back(p);
    };

    std::map<std::pair<long, long>, SparseVec<K>> entries;
    std::vector<long> kernel_coords;

    if (n == 1) {
        push("a", 0);
        push("w", 0);
        push("b", 1);
        push("c", 1);
        push("m", 1);
        entries[{at["a"], at["b"]}] = {{at["c"], one}};
        entries[{at["a"], at["c"]}] = {{at["m"], one}};
        entries[{at["b"], at["b"]}] = {{at["w"], one}};
        kernel_coords = {at["w"], at["m"]};
    } else {
        for (long i = 1; i <= n; ++i) push("a" + std::to_string(i), 0);
        for (long i = 1; i <= n; ++i)
            for (long j = i + 1; j <= n; ++j)
                push("y_" + std::to_string(i) + "_" + std::to_string(j), 0);
        for (long i = 1; i <= n; ++i)
            for (long j = i; j <= n; ++j)
                push("w_" + std::to_string(i) + "_" + std::to_string(j), 0);
        for (long i = 1; i <= n; ++i) push("b" + std::to_string(i), 1);
        push("c", 1);
        for (long i = 2; i <= n; ++i) push("y" + std::to_string(i), 1);
        for (long i = 1; i <= n; ++i)
            for (long j = 1; j <= n; ++j)
                if (i != j) push("z_" + std::to_string(i) + "_" + std::to_string(j), 1);

        auto a = [&](long i) { return at.at("a" + std::to_string(i)); };
        auto b = [&](long i) { return at.at("b" + std::to_string(i)); };
        for (long i = 1; i <= n; ++i)
            for (long j = i + 1; j <= n; ++j)
                entries[{a(i), a(j)}] = {{at.at("y_" + std::to_string(i) + "_" + std::to_string(j)), one}};
        entries[{a(1), b(1)}] = {{at.at("c"), one}};
        for (long i = 2; i <= n; ++i)
            entries[{a(i), b(i)}] = {{at.at("c"), one}, {at.at("y" + std::to_string(i)), one}};
        for (long i = 1; i <= n; ++i)
            for (long j = 1; j <= n; ++j)
                if (i != j)
                    entries[{a(i), b(j)}] = {{at.at("z_" + std::to_string(i) + "_" + std::to_string(j)), one}};
        for (long i = 1; i <= n; ++i)
            for (long j = i; j <= n; ++j)
                entries[{b(i), b(j)}] = {{at.at("w_" + std::to_string(i) + "_" + std::to_string(j)), one}};

        for (const auto& [nm, idx] : at)
            if (nm[0] == 'y' || nm[0] == 'w' || nm[0] == 'z') kernel_coords.push_back(idx);
    }

    // normalize sparse value ordering
    for (auto& [ij, val] : entries)
        std::sort(val.begin(), val.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    LieSuperalgebra<K> total(ctx, names, parities, entries);
    GradedSubspace<K> kernel(total.sdim());
    for (long c : kernel_coords) kernel.add(total.basis_vector(c));

    // hat-dropping projection onto the standard basis of H(n)
    Mat<K> proj = Mat<K>::zero(base.dim(), total.dim());
    if (n == 1) {
        proj.at(0, at["a"]) = one; // u1
        proj.at(1, at["c"]) = one; // z
        proj.at(2, at["b"]) = one; // w1
    } else {
        for (long i = 1; i <= n; ++i) proj.at(i - 1, at.at("a" + std::to_string(i))) = one;
        proj.at(n, at.at("c")) = one;
        for (long i = 1; i <= n; ++i) proj.at(n + i, at.at("b" + std::to_string(i))) = one;
    }
    return {std::move(total), std::move(kernel), std::move(base), std::move(proj)};
}

/// Maximal stem extension of any algebra, built from canonical cocycle
/// representatives of H^2.
template <Field K>
ExtensionSpec<K> cover_from_cohomology(const LieSuperalgebra<K>& L) {
    return central_extension(L, multiplier_representatives(L));
}

/// Maximal stem extension of the model filiform superalgebra F(n, m). The
/// published explicit tables for these covers do not satisfy the super
/// Jacobi identity at all parameters, so the cover is produced from
/// canonical cohomology representatives instead; it passes verify_extension,
/// is_stem and is_maximal_stem for every admissible (n, m).
template <Field K>
ExtensionSpec<K> cover_filiform(long n, long m, const typename K::Context& ctx) {
    FamilyId id{FamilyKind::ModelFiliform, 0, 0, n, m};
    id.check();
    return cover_from_cohomology(model_filiform<K>(n, m, ctx));
}

} // namespace superlie

#endif
