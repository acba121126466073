#ifndef SUPERLIE_COHOMOLOGY_HPP
#define SUPERLIE_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superlie/algebra.hpp"

namespace superlie {

/// Coordinates on the space of super-antisymmetric 2-cochains with trivial
/// coefficients. Parity-0 cochains live on (even,even) pairs i<j and
/// (odd,odd) pairs i<=j; parity-1 cochains on (even,odd) pairs. The two
/// blocks sit in one graded host: even block = parity-0 coordinates.
template <Field K>
class CochainIndex {
public:
    explicit CochainIndex(const LieSuperalgebra<K>& L) : L_(&L) {
        long s = L.sdim().even, n = L.dim();
        for (long i = 0; i < s; ++i)
            for (long j = i + 1; j < s; ++j) pairs0_.emplace_back(i, j);
        for (long i = s; i < n; ++i)
            for (long j = i; j < n; ++j) pairs0_.emplace_back(i, j);
        for (long i = 0; i < s; ++i)
            for (long j = s; j < n; ++j) pairs1_.emplace_back(i, j);
        for (std::size_t c = 0; c < pairs0_.size(); ++c) coord_[pairs0_[c]] = static_cast<long>(c);
        for (std::size_t c = 0; c < pairs1_.size(); ++c)
            coord_[pairs1_[c]] = static_cast<long>(pairs0_.size() + c);
    }

    SuperDim host() const {
        return {static_cast<long>(pairs0_.size()), static_cast<long>(pairs1_.size())};
    }

    const std::vector<std::pair<long, long>>& pairs(Parity p) const {
        return p == 0 ? pairs0_ : pairs1_;
    }

    std::pair<long, long> pair_of(long coord) const {
        if (coord < static_cast<long>(pairs0_.size())) return pairs0_[static_cast<std::size_t>(coord)];
        return pairs1_[static_cast<std::size_t>(coord - static_cast<long>(pairs0_.size()))];
    }

    /// Coordinate carrying f(e_i, e_j) together with the sign relating it to
    /// the stored orientation; nullopt when f(e_i, e_j) vanishes identically.
    std::optional<std::pair<long, int>> coord_of(long i, long j) const {
        Parity pi = L_->parity(i), pj = L_->parity(j);
        if (pi == 0 && pj == 0) {
            if (i == j) return std::nullopt;
            if (i < j) return std::make_pair(coord_.at({i, j}), 1);
            return std::make_pair(coord_.at({j, i}), -1);
        }
        if (pi == 1 && pj == 1) {
            if (i <= j) return std::make_pair(coord_.at({i, j}), 1);
            return std::make_pair(coord_.at({j, i}), 1);
        }
        if (pi == 0) return std::make_pair(coord_.at({i, j}), 1);
        return std::make_pair(coord_.at({j, i}), -1);
    }

private:
    const LieSuperalgebra<K>* L_;
    std::vector<std::pair<long, long>> pairs0_, pairs1_;
    std::map<std::pair<long, long>, long> coord_;
};

/// A parity-homogeneous super-antisymmetric bilinear form with scalar values,
/// stored on the canonical pair orientations.
template <Field K>
struct Cochain2 {
    Parity parity = 0;
    std::map<std::pair<long, long>, K> coeffs;

    K evaluate(const LieSuperalgebra<K>& L, long i, long j) const {
        CochainIndex<K> ix(L);
        auto c = ix.coord_of(i, j);
        if (!c) return K{};
        auto [coord, sign] = *c;
        auto key = ix.pair_of(coord);
        auto it = coeffs.find(key);
        if (it == coeffs.end()) return K{};
        return it->second.times(sign);
    }
};

/// Canonical basis of parity-p 2-cochains. Dimension: s(s-1)/2 + t(t+1)/2
/// for parity 0 and s*t for parity 1.
template <Field K>
std::vector<Cochain2<K>> cochain2_basis(const LieSuperalgebra<K>& L, Parity p) {
    CochainIndex<K> ix(L);
    std::vector<Cochain2<K>> out;
    for (const auto& pr : ix.pairs(p)) {
        Cochain2<K> f;
        f.parity = p;
        f.coeffs[pr] = L.one();
        out.push_back(std::move(f));
    }
    return out;
}

namespace detail {

/// Rows of the degree-2 differential, one per basis multiset (i <= j <= k)
/// with visible brackets, over the cochain coordinate host.
template <Field K>
std::vector<Vec<K>> cocycle_constraints(const LieSuperalgebra<K>& L, const CochainIndex<K>& ix) {
    long n = L.dim();
    long width = ix.host().total();
    std::vector<Vec<K>> rows;
    for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j)
            for (long k = j; k < n; ++k) {
                if (L.bracket(i, j).empty() && L.bracket(j, k).empty() && L.bracket(k, i).empty())
                    continue;
                Vec<K> row(static_cast<std::size_t>(width));
                bool nonzero = false;
                auto add_term = [&](long a, long b, long c, int sign) {
                    // sign * f([e_a, e_b], e_c)
                    for (const auto& [m, cm] : L.bracket(a, b)) {
                        auto co = ix.coord_of(m, c);
                        if (!co) continue;
                        auto [coord, s2] = *co;
                        row[static_cast<std::size_t>(coord)] += cm.times(sign * s2);
                        nonzero = true;
                    }
                };
                auto sgn = [&](long a, long b) {
                    return (L.parity(a) * L.parity(b)) % 2 == 1 ? -1 : 1;
                };
                // (-1)^{|x||z|} f([x,y],z) + (-1)^{|x||y|} f([y,z],x) + (-1)^{|y||z|} f([z,x],y)
                add_term(i, j, k, sgn(i, k));
                add_term(j, k, i, sgn(i, j));
                add_term(k, i, j, sgn(j, k));
                if (nonzero) rows.push_back(std::move(row));
            }
    return rows;
}

} // namespace detail

/// Cocycles of both parities as one graded subspace of the cochain host.
template <Field K>
GradedSubspace<K> cocycle_space_full(const LieSuperalgebra<K>& L) {
    CochainIndex<K> ix(L);
    auto rows = detail::cocycle_constraints(L, ix);
    return graded_kernel(rows, ix.host(), L.one());
}

/// Coboundaries of both parities: the span of g -> g([.,.]) over linear
/// functionals g of each parity.
template <Field K>
GradedSubspace<K> coboundary_space_full(const LieSuperalgebra<K>& L) {
    CochainIndex<K> ix(L);
    GradedSubspace<K> out(ix.host());
    long n = L.dim();
    for (long m = 0; m < n; ++m) {
        Vec<K> row(static_cast<std::size_t>(ix.host().total()));
        bool nonzero = false;
        for (Parity p : {0, 1})
            for (const auto& [i, j] : ix.pairs(p)) {
                for (const auto& [mm, c] : L.bracket(i, j))
                    if (mm == m) {
                        auto co = ix.coord_of(i, j);
                        row[static_cast<std::size_t>(co->first)] += c.times(co->second);
                        nonzero = true;
                    }
            }
        if (nonzero) out.add(std::move(row));
    }
    return out;
}

/// Restriction of a cochain-host subspace to one parity block.
template <Field K>
GradedSubspace<K> cochain_block(const GradedSubspace<K>& full, Parity p) {
    GradedSubspace<K> out(full.host());
    const auto& rows = (p == 0) ? full.even_basis() : full.odd_basis();
    for (const auto& r : rows) out.add(r);
    return out;
}

template <Field K>
GradedSubspace<K> cocycle_space(const LieSuperalgebra<K>& L, Parity p) {
    return cochain_block(cocycle_space_full(L), p);
}

template <Field K>
GradedSubspace<K> coboundary_space(const LieSuperalgebra<K>& L, Parity p) {
    return cochain_block(coboundary_space_full(L), p);
}

/// sdim Z^2 - sdim B^2, computed per parity. Signals if B^2 is not contained
/// in Z^2, which would indicate a sign-convention bug.
template <Field K>
SuperDim multiplier_sdim(const LieSuperalgebra<K>& L) {
    GradedSubspace<K> Z = cocycle_space_full(L);
    GradedSubspace<K> B = coboundary_space_full(L);
    if (!Z.contains(B))
        throw Error("coboundaries escape the cocycle space; differential conventions are inconsistent");
    return Z.sdim() - B.sdim();
}

/// Upper bound for stem-extension kernels over a base of superdimension
/// (s|t): ( s(s-1)/2 + t(t+1)/2 + s , st ).
inline SuperDim kernel_bound(const SuperDim& d) {
    long s = d.even, t = d.odd;
    return {s * (s - 1) / 2 + t * (t + 1) / 2 + s, s * t};
}

/// Representative cocycles spanning H^2, one list entry per kernel basis
/// vector of a maximal stem extension: canonical Z^2 rows independent mod B^2.
template <Field K>
std::vector<Vec<K>> multiplier_representatives(const LieSuperalgebra<K>& L) {
    GradedSubspace<K> Z = cocycle_space_full(L);
    GradedSubspace<K> B = coboundary_space_full(L);
    if (!Z.contains(B))
        throw Error("coboundaries escape the cocycle space; differential conventions are inconsistent");
    std::vector<Vec<K>> reps;
    GradedSubspace<K> seen = B;
    for (const auto& row : Z.basis())
        if (seen.add(row)) reps.push_back(row);
    return reps;
}

} // namespace superlie

#endif
