#ifndef SUPERLIE_EXTENSIONS_HPP
#define SUPERLIE_EXTENSIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/algebra.hpp"
#include "superlie/cohomology.hpp"

namespace superlie {

/// An extension 0 -> kernel -> total -> base -> 0, with the kernel sitting
/// inside the total algebra's coordinate space.
template <Field K>
struct ExtensionSpec {
    LieSuperalgebra<K> total;
    GradedSubspace<K> kernel;
    LieSuperalgebra<K> base;
    Mat<K> projection; // base.dim() x total.dim()
};

struct ExtensionReport {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Kernel of a coordinate matrix as a graded subspace of the source.
template <Field K>
GradedSubspace<K> matrix_kernel(const Mat<K>& m, const SuperDim& source_dim, const K& one) {
    std::vector<Vec<K>> constraints;
    for (const auto& row : m.data) constraints.push_back(row);
    return graded_kernel(constraints, source_dim, one);
}

template <Field K>
ExtensionReport verify_extension(const ExtensionSpec<K>& e) {
    ExtensionReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.problems.push_back(std::move(msg));
    };
    if (!(e.kernel.host() == e.total.sdim())) {
        fail("kernel host does not match the total algebra");
        return rep;
    }
    if (e.projection.rows != e.base.dim() || e.projection.cols != e.total.dim()) {
        fail("projection matrix shape does not match total -> base");
        return rep;
    }
    if (!is_even_map(e.projection, e.total, e.base)) {
        fail("projection is not an even map");
        return rep;
    }
    if (!is_ideal(e.total, e.kernel)) fail("kernel is not an ideal of the total algebra");
    HomSpec<K> h{e.total, e.base, e.projection};
    if (!verify_hom(h)) fail("projection is not a homomorphism");
    if (e.projection.rank() != e.base.dim()) fail("projection is not surjective");
    GradedSubspace<K> null = matrix_kernel(e.projection, e.total.sdim(), e.total.one());
    if (!(null == e.kernel)) fail("kernel does not equal the nullspace of the projection");
    return rep;
}

template <Field K>
bool is_central(const ExtensionSpec<K>& e) {
    return center(e.total).contains(e.kernel);
}

template <Field K>
bool is_stem(const ExtensionSpec<K>& e) {
    return is_central(e) && derived(e.total).contains(e.kernel);
}

/// Checks the two stem-denominator conditions
///   A = (A cap [B,B]) + X   and   [B,B] cap X = [A,B]
/// for [A,B] <= X <= A. Precondition failures are reported distinctly.
template <Field K>
bool is_stem_denominator(const ExtensionSpec<K>& e, const GradedSubspace<K>& X) {
    GradedSubspace<K> full = e.total.full_space();
    GradedSubspace<K> AB = bracket_span(e.total, e.kernel, full);
    if (!X.contains(AB) || !e.kernel.contains(X))
        throw DomainError("stem denominator candidate must satisfy [A,B] <= X <= A");
    GradedSubspace<K> BB = derived(e.total);
    GradedSubspace<K> AcapBB = e.kernel.intersect(BB);
    if (!(AcapBB.sum(X) == e.kernel)) return false;
    if (!(BB.intersect(X) == AB)) return false;
    return true;
}

/// Deterministic stem denominator: X = [A,B] + greedily chosen canonical
/// basis vectors of A (or of `within`) completing A cap [B,B] inside A.
template <Field K>
GradedSubspace<K> stem_denominator(const ExtensionSpec<K>& e,
                                   const std::optional<GradedSubspace<K>>& within = std::nullopt) {
    GradedSubspace<K> full = e.total.full_space();
    GradedSubspace<K> AB = bracket_span(e.total, e.kernel, full);
    GradedSubspace<K> BB = derived(e.total);
    GradedSubspace<K> AcapBB = e.kernel.intersect(BB);

    GradedSubspace<K> pool = e.kernel;
    if (within) {
        pool = within->intersect(e.kernel);
        if (!pool.contains(AB))
            throw DomainError("stem denominator constraint does not contain [A,B]");
    }
    GradedSubspace<K> X = AB;
    GradedSubspace<K> covered = AcapBB.sum(X);
    for (const auto& v : pool.basis()) {
        if (covered.contains(v)) continue;
        X.add(v);
        covered.add(v);
    }
    if (!(covered == e.kernel))
        throw DomainError("stem denominator constraint is unsatisfiable");
    return X;
}

/// Quotient of an extension by a stem denominator: a stem extension with
/// kernel of superdimension sdim(A cap [B,B]) - sdim([A,B]).
template <Field K>
ExtensionSpec<K> stem_deformation(const ExtensionSpec<K>& e, const GradedSubspace<K>& X) {
    if (!is_stem_denominator(e, X)) throw DomainError("not a stem denominator");
    if (X.sdim() == SuperDim{0, 0}) return e;
    Quotient<K> q = quotient(e.total, X);
    // kernel A/X
    GradedSubspace<K> newker(q.algebra.sdim());
    for (const auto& v : e.kernel.basis()) newker.add(q.projection.apply(v));
    // induced projection B/X -> L through the canonical section
    Mat<K> proj = Mat<K>::zero(e.base.dim(), q.algebra.dim());
    for (long a = 0; a < q.algebra.dim(); ++a) {
        Vec<K> img = e.projection.apply(e.total.basis_vector(q.section_coords[static_cast<std::size_t>(a)]));
        for (long r = 0; r < e.base.dim(); ++r) proj.at(r, a) = img[static_cast<std::size_t>(r)];
    }
    return {std::move(q.algebra), std::move(newker), e.base, std::move(proj)};
}

/// Maximality test through the unique multiplier: a stem extension is maximal
/// iff its kernel has the multiplier's superdimension.
template <Field K>
bool is_maximal_stem(const ExtensionSpec<K>& e) {
    if (!is_stem(e)) throw DomainError("is_maximal_stem requires a stem extension");
    return e.kernel.sdim() == multiplier_sdim(e.base);
}

/// Central extension of L with one new central direction per 2-cocycle:
/// brackets of lifts are twisted by the cocycle values.
template <Field K>
ExtensionSpec<K> central_extension(const LieSuperalgebra<K>& L,
                                   const std::vector<Vec<K>>& cocycles) {
    CochainIndex<K> ix(L);
    GradedSubspace<K> Z = cocycle_space_full(L);
    for (const auto& f : cocycles)
        if (!Z.contains(f)) throw DomainError("central_extension requires 2-cocycles");
    long nl = L.dim();
    long ke = 0, ko = 0;
    std::vector<Parity> cpar;
    for (const auto& f : cocycles) {
        auto p = support_parity(f, ix.host());
        if (!p) throw DomainError("central_extension: zero cocycle");
        cpar.push_back(*p);
        (*p == 0 ? ke : ko)++;
    }

    // total coordinates: [L even | new even | L odd | new odd]
    long se = L.sdim().even, so = L.sdim().odd;
    SuperDim tdim{se + ke, so + ko};
    std::vector<long> lift(static_cast<std::size_t>(nl));
    for (long i = 0; i < se; ++i) lift[static_cast<std::size_t>(i)] = i;
    for (long i = se; i < nl; ++i) lift[static_cast<std::size_t>(i)] = i + ke;
    std::vector<long> kcoord;
    long next_even = se, next_odd = se + ke + so;
    for (Parity p : cpar) kcoord.push_back(p == 0 ? next_even++ : next_odd++);

    std::vector<std::string> names(static_cast<std::size_t>(tdim.total()));
    std::vector<Parity> parities(static_cast<std::size_t>(tdim.total()));
    for (long i = 0; i < nl; ++i) {
        names[static_cast<std::size_t>(lift[static_cast<std::size_t>(i)])] =
            L.names()[static_cast<std::size_t>(i)];
        parities[static_cast<std::size_t>(lift[static_cast<std::size_t>(i)])] = L.parity(i);
    }
    for (std::size_t r = 0; r < cocycles.size(); ++r) {
        std::string nm = "m" + std::to_string(r);
        while (std::find(names.begin(), names.end(), nm) != names.end()) nm += "'";
        names[static_cast<std::size_t>(kcoord[r])] = nm;
        parities[static_cast<std::size_t>(kcoord[r])] = cpar[r];
    }

    std::map<std::pair<long, long>, SparseVec<K>> table;
    for (long i = 0; i < nl; ++i)
        for (long j = 0; j < nl; ++j) {
            Vec<K> val(static_cast<std::size_t>(tdim.total()));
            for (const auto& [m, c] : L.bracket(i, j))
                val[static_cast<std::size_t>(lift[static_cast<std::size_t>(m)])] += c;
            auto co = ix.coord_of(i, j);
            if (co)
                for (std::size_t r = 0; r < cocycles.size(); ++r) {
                    const K& f = cocycles[r][static_cast<std::size_t>(co->first)];
                    if (!f.is_zero()) val[static_cast<std::size_t>(kcoord[r])] += f.times(co->second);
                }
            if (!vec_is_zero(val))
                table[{lift[static_cast<std::size_t>(i)], lift[static_cast<std::size_t>(j)]}] = sparsify(val);
        }
    LieSuperalgebra<K> total =
        LieSuperalgebra<K>::raw(L.ctx(), std::move(names), std::move(parities), table);

    GradedSubspace<K> kernel(tdim);
    for (long c : kcoord) kernel.add(total.basis_vector(c));

    Mat<K> proj = Mat<K>::zero(nl, tdim.total());
    for (long i = 0; i < nl; ++i) proj.at(i, lift[static_cast<std::size_t>(i)]) = L.one();
    return {std::move(total), std::move(kernel), L, std::move(proj)};
}

/// The identity extension 0 -> 0 -> L -> L -> 0.
template <Field K>
ExtensionSpec<K> identity_extension(const LieSuperalgebra<K>& L) {
    return {L, L.zero_space(), L, Mat<K>::identity(L.dim(), L.one())};
}

/// The split extension 0 -> A -> A (+) L -> L -> 0.
template <Field K>
ExtensionSpec<K> split_extension(const LieSuperalgebra<K>& A, const LieSuperalgebra<K>& L) {
    LieSuperalgebra<K> B = direct_sum(A, L);
    // merged coordinates: [A even | L even | A odd | L odd]
    auto embedA = [&](long i) {
        return i < A.sdim().even ? i : i + L.sdim().even;
    };
    auto embedL = [&](long i) {
        return i < L.sdim().even ? A.sdim().even + i : A.sdim().even + A.sdim().odd + i;
    };
    GradedSubspace<K> kernel(B.sdim());
    for (long i = 0; i < A.dim(); ++i) kernel.add(B.basis_vector(embedA(i)));
    Mat<K> proj = Mat<K>::zero(L.dim(), B.dim());
    for (long i = 0; i < L.dim(); ++i) proj.at(i, embedL(i)) = L.one();
    return {std::move(B), std::move(kernel), L, std::move(proj)};
}

} // namespace superlie

#endif
