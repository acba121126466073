#ifndef SUPERLIE_FREEPRES_HPP
#define SUPERLIE_FREEPRES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/algebra.hpp"
#include "superlie/extensions.hpp"

namespace superlie {

/// Free nilpotent Lie superalgebra on graded generators, truncated at a
/// class bound: gamma_k is spanned by the basis vectors of degree >= k and
/// gamma_{c+1} = 0.
template <Field K>
struct FreeNilpotent {
    LieSuperalgebra<K> algebra;
    long class_bound = 0;
    std::vector<long> degree;     // per basis coordinate
    std::vector<long> generators; // basis coordinates of the degree-1 part, in generator order
    // basis coordinate -> (generator slot, lower basis coordinate) with
    // [g, u] equal to that basis element; (-1, -1) for the generators
    std::vector<std::pair<long, long>> defining_pair;
};

namespace detail {

/// Degree-by-degree construction: the degree-k space is the span of
/// candidates [g, u] (g a generator, u a degree-(k-1) basis element) modulo
/// the super skew and super Jacobi relations against all lower degrees.
template <Field K>
class FreeBuilder {
public:
    FreeBuilder(const std::vector<Parity>& gen_parities, long c, const typename K::Context& ctx)
        : ctx_(ctx), c_(c), gen_par_(gen_parities) {
        if (gen_par_.empty()) throw DomainError("free_nilpotent needs at least one generator");
        if (c_ < 1) throw DomainError("class bound must be >= 1");
        for (Parity p : gen_par_)
            if (p != 0 && p != 1) throw DomainError("parity must be 0 or 1");
        build();
    }

    FreeNilpotent<K> finish() {
        // final ordering: even block first, stable by construction order
        long n = static_cast<long>(par_.size());
        std::vector<long> final_of(static_cast<std::size_t>(n));
        std::vector<long> order;
        for (long i = 0; i < n; ++i)
            if (par_[static_cast<std::size_t>(i)] == 0) order.push_back(i);
        for (long i = 0; i < n; ++i)
            if (par_[static_cast<std::size_t>(i)] == 1) order.push_back(i);
        for (long f = 0; f < n; ++f) final_of[static_cast<std::size_t>(order[static_cast<std::size_t>(f)])] = f;

        std::vector<std::string> names(static_cast<std::size_t>(n));
        std::vector<Parity> parities(static_cast<std::size_t>(n));
        std::vector<long> degree(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            long f = final_of[static_cast<std::size_t>(i)];
            names[static_cast<std::size_t>(f)] = name_[static_cast<std::size_t>(i)];
            parities[static_cast<std::size_t>(f)] = par_[static_cast<std::size_t>(i)];
            degree[static_cast<std::size_t>(f)] = deg_[static_cast<std::size_t>(i)];
        }
        std::map<std::pair<long, long>, SparseVec<K>> final_table;
        for (const auto& [ij, val] : table_) {
            if (val.empty()) continue;
            SparseVec<K> mapped;
            for (const auto& [m, cc] : val)
                mapped.emplace_back(final_of[static_cast<std::size_t>(m)], cc);
            std::sort(mapped.begin(), mapped.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            final_table[{final_of[static_cast<std::size_t>(ij.first)],
                         final_of[static_cast<std::size_t>(ij.second)]}] = std::move(mapped);
        }
        FreeNilpotent<K> out{
            LieSuperalgebra<K>::raw(ctx_, std::move(names), std::move(parities), final_table),
            c_, std::move(degree), {}, {}};
        for (long g : levels_[1]) out.generators.push_back(final_of[static_cast<std::size_t>(g)]);
        out.defining_pair.assign(static_cast<std::size_t>(n), {-1, -1});
        for (long i = 0; i < n; ++i) {
            auto [g, u] = def_[static_cast<std::size_t>(i)];
            if (g >= 0)
                out.defining_pair[static_cast<std::size_t>(final_of[static_cast<std::size_t>(i)])] = {
                    g, final_of[static_cast<std::size_t>(u)]};
        }
        return out;
    }

private:
    typename K::Context ctx_;
    long c_;
    std::vector<Parity> gen_par_;

    // provisional elements, degree-major construction order
    std::vector<Parity> par_;
    std::vector<long> deg_;
    std::vector<std::string> name_;
    std::vector<std::pair<long, long>> def_; // (generator slot, lower element) or (-1,-1)
    std::vector<std::vector<long>> levels_;  // levels_[k] = provisional ids of degree k
    std::map<std::pair<long, long>, SparseVec<K>> table_; // completed, provisional ids

    K one() const { return ctx_.from_long(1); }
    int sgn(long i, long j) const {
        return (par_[static_cast<std::size_t>(i)] * par_[static_cast<std::size_t>(j)]) % 2 == 1 ? -1 : 1;
    }

    const SparseVec<K>& entry(long i, long j) const {
        static const SparseVec<K> empty;
        auto it = table_.find({i, j});
        return it == table_.end() ? empty : it->second;
    }

    void set_pair(long i, long j, const SparseVec<K>& v) {
        if (!v.empty()) table_[{i, j}] = v;
        if (i == j) return;
        SparseVec<K> mir = v;
        for (auto& [m, cc] : mir) cc = cc.times(-sgn(i, j));
        if (!mir.empty()) table_[{j, i}] = std::move(mir);
    }

    void build() {
        levels_.assign(static_cast<std::size_t>(c_) + 1, {});
        for (std::size_t g = 0; g < gen_par_.size(); ++g) {
            par_.push_back(gen_par_[g]);
            deg_.push_back(1);
            name_.push_back("g" + std::to_string(g + 1));
            def_.emplace_back(-1, -1);
            levels_[1].push_back(static_cast<long>(par_.size()) - 1);
        }
        for (long k = 2; k <= c_; ++k) build_level(k);
    }

    void build_level(long k) {
        const std::vector<long>& below = levels_[static_cast<std::size_t>(k - 1)];
        long G = static_cast<long>(levels_[1].size());
        long width = G * static_cast<long>(below.size());
        if (width == 0) return;
        auto cid = [&](long g, long upos) { return g * static_cast<long>(below.size()) + upos; };
        std::vector<long> upos_of(par_.size(), -1);
        for (std::size_t t = 0; t < below.size(); ++t)
            upos_of[static_cast<std::size_t>(below[t])] = static_cast<long>(t);

        // a vector over degree-(k-1) basis mapped into candidate space via [g, .]
        auto lift = [&](long g, const SparseVec<K>& v, int sign, Vec<K>& row) {
            for (const auto& [m, cc] : v)
                row[static_cast<std::size_t>(cid(g, upos_of[static_cast<std::size_t>(m)]))] += cc.times(sign);
        };

        // [u, v] with deg u + deg v == k expressed over candidate coordinates
        std::map<std::pair<long, long>, Vec<K>> expand_cache;
        auto expand = [&](auto&& self, long u, long v) -> const Vec<K>& {
            auto it = expand_cache.find({u, v});
            if (it != expand_cache.end()) return it->second;
            Vec<K> row(static_cast<std::size_t>(width));
            if (deg_[static_cast<std::size_t>(u)] == 1) {
                long g = upos_in_gens(u);
                row[static_cast<std::size_t>(cid(g, upos_of[static_cast<std::size_t>(v)]))] += one();
            } else {
                auto [g, w] = def_[static_cast<std::size_t>(u)];
                // [[g,w],v] = [g,[w,v]] - (-1)^{|g||w|} [w,[g,v]]
                lift(g, entry(w, v), 1, row);
                int s = sgn(levels_[1][static_cast<std::size_t>(g)], w);
                for (const auto& [m, cc] : entry(levels_[1][static_cast<std::size_t>(g)], v)) {
                    const Vec<K>& sub = self(self, w, m);
                    for (long t = 0; t < width; ++t)
                        if (!sub[static_cast<std::size_t>(t)].is_zero())
                            row[static_cast<std::size_t>(t)] += (cc * sub[static_cast<std::size_t>(t)]).times(-s);
                }
            }
            return expand_cache.emplace(std::make_pair(u, v), std::move(row)).first->second;
        };

        Echelon<K> relations(width);
        if (k == 2) {
            for (long g = 0; g < G; ++g)
                for (long h = g; h < G; ++h) {
                    Vec<K> row(static_cast<std::size_t>(width));
                    Parity pg = gen_par_[static_cast<std::size_t>(g)], ph = gen_par_[static_cast<std::size_t>(h)];
                    if (g == h) {
                        if (pg == 1) continue; // odd squares are free
                        row[static_cast<std::size_t>(cid(g, upos_of[static_cast<std::size_t>(levels_[1][static_cast<std::size_t>(g)])]))] = one();
                    } else {
                        row[static_cast<std::size_t>(cid(g, upos_of[static_cast<std::size_t>(levels_[1][static_cast<std::size_t>(h)])]))] += one();
                        int s = (pg * ph) % 2 == 1 ? -1 : 1;
                        row[static_cast<std::size_t>(cid(h, upos_of[static_cast<std::size_t>(levels_[1][static_cast<std::size_t>(g)])]))] += one().times(s);
                    }
                    relations.insert(std::move(row));
                }
        } else {
            const std::vector<long>& mids = levels_[static_cast<std::size_t>(k - 2)];
            for (long g = 0; g < G; ++g)
                for (long h = g; h < G; ++h)
                    for (long w : mids) {
                        long gp = levels_[1][static_cast<std::size_t>(g)];
                        long hp = levels_[1][static_cast<std::size_t>(h)];
                        Vec<K> row(static_cast<std::size_t>(width));
                        // (-1)^{|g||w|}[g,[h,w]] + (-1)^{|g||h|}[h,[w,g]] + (-1)^{|h||w|}[w,[g,h]]
                        lift(g, entry(hp, w), sgn(gp, w), row);
                        lift(h, entry(w, gp), sgn(gp, hp), row);
                        int s3 = sgn(hp, w);
                        for (const auto& [b2, cc] : entry(gp, hp)) {
                            const Vec<K>& sub = expand(expand, w, b2);
                            for (long t = 0; t < width; ++t)
                                if (!sub[static_cast<std::size_t>(t)].is_zero())
                                    row[static_cast<std::size_t>(t)] += (cc * sub[static_cast<std::size_t>(t)]).times(s3);
                        }
                        if (!vec_is_zero(row)) relations.insert(std::move(row));
                    }
        }

        // quotient basis: non-pivot candidates, in candidate order
        std::vector<bool> is_pivot(static_cast<std::size_t>(width), false);
        std::vector<long> pivot_row(static_cast<std::size_t>(width), -1);
        for (std::size_t r = 0; r < relations.pivots().size(); ++r) {
            is_pivot[static_cast<std::size_t>(relations.pivots()[r])] = true;
            pivot_row[static_cast<std::size_t>(relations.pivots()[r])] = static_cast<long>(r);
        }
        std::vector<long> newidx_of_cand(static_cast<std::size_t>(width), -1);
        for (long j = 0; j < width; ++j) {
            if (is_pivot[static_cast<std::size_t>(j)]) continue;
            long g = j / static_cast<long>(below.size());
            long upos = j % static_cast<long>(below.size());
            long u = below[static_cast<std::size_t>(upos)];
            Parity p = (gen_par_[static_cast<std::size_t>(g)] + par_[static_cast<std::size_t>(u)]) % 2;
            par_.push_back(p);
            deg_.push_back(k);
            name_.push_back("h" + std::to_string(k) + "_" + std::to_string(levels_[static_cast<std::size_t>(k)].size()));
            def_.emplace_back(g, u);
            long id = static_cast<long>(par_.size()) - 1;
            levels_[static_cast<std::size_t>(k)].push_back(id);
            newidx_of_cand[static_cast<std::size_t>(j)] = id;
        }

        // image of a candidate unit in the new basis
        auto cand_image = [&](long j) {
            SparseVec<K> out;
            if (!is_pivot[static_cast<std::size_t>(j)]) {
                out.emplace_back(newidx_of_cand[static_cast<std::size_t>(j)], one());
                return out;
            }
            const Vec<K>& row = relations.rows()[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(j)])];
            for (long t = 0; t < width; ++t) {
                if (t == j || row[static_cast<std::size_t>(t)].is_zero()) continue;
                out.emplace_back(newidx_of_cand[static_cast<std::size_t>(t)], -row[static_cast<std::size_t>(t)]);
            }
            std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            return out;
        };

        // structure constants (1, k-1)
        for (long g = 0; g < G; ++g)
            for (std::size_t t = 0; t < below.size(); ++t)
                set_pair(levels_[1][static_cast<std::size_t>(g)], below[t],
                         cand_image(cid(g, static_cast<long>(t))));

        // structure constants (a, k-a) for a >= 2, ascending left degree
        for (long a = 2; 2 * a <= k; ++a) {
            long b = k - a;
            const auto& lefts = levels_[static_cast<std::size_t>(a)];
            const auto& rights = levels_[static_cast<std::size_t>(b)];
            for (long u : lefts)
                for (long v : rights) {
                    if (a == b && u > v) continue; // mirrors via set_pair
                    auto [g, w] = def_[static_cast<std::size_t>(u)];
                    long gp = levels_[1][static_cast<std::size_t>(g)];
                    // [[g,w],v] = [g,[w,v]] - (-1)^{|g||w|}[w,[g,v]]
                    Vec<K> acc(par_.size());
                    for (const auto& [m, cc] : entry(w, v))
                        for (const auto& [r, cr] : entry(gp, m))
                            acc[static_cast<std::size_t>(r)] += cc * cr;
                    int s = sgn(gp, w);
                    for (const auto& [m, cc] : entry(gp, v))
                        for (const auto& [r, cr] : entry(w, m))
                            acc[static_cast<std::size_t>(r)] += (cc * cr).times(-s);
                    set_pair(u, v, sparsify(acc));
                }
        }
    }

    long upos_in_gens(long prov) const {
        for (std::size_t g = 0; g < levels_[1].size(); ++g)
            if (levels_[1][g] == prov) return static_cast<long>(g);
        throw Error("internal: generator lookup failed");
    }
};

} // namespace detail

template <Field K>
FreeNilpotent<K> free_nilpotent(const std::vector<Parity>& generator_parities, long class_bound,
                                const typename K::Context& ctx) {
    detail::FreeBuilder<K> b(generator_parities, class_bound, ctx);
    return b.finish();
}

/// A bounded-class free presentation 0 -> R -> F -> L -> 0.
template <Field K>
struct Presentation {
    FreeNilpotent<K> free;
    LieSuperalgebra<K> target;
    std::vector<Vec<K>> images; // generator images in target coordinates
    Mat<K> hom;                 // target.dim() x free.dim()
    GradedSubspace<K> relations;
};

template <Field K>
Presentation<K> presentation(const LieSuperalgebra<K>& L, const std::vector<Vec<K>>& images,
                             long class_bound) {
    if (!is_nilpotent(L)) throw DomainError("presentation target must be nilpotent");
    if (nilpotency_class(L) > class_bound)
        throw DomainError("target is not nilpotent within the class bound");
    std::vector<Parity> parities;
    for (const auto& v : images) {
        auto p = support_parity(v, L.sdim());
        if (!p) throw DomainError("generator images must be nonzero and parity-homogeneous");
        parities.push_back(*p);
    }
    FreeNilpotent<K> F = free_nilpotent<K>(parities, class_bound, L.ctx());

    // phi on basis elements, by increasing degree through the definitions
    long nf = F.algebra.dim();
    std::vector<Vec<K>> phi(static_cast<std::size_t>(nf));
    std::vector<long> by_order(static_cast<std::size_t>(nf));
    for (long i = 0; i < nf; ++i) by_order[static_cast<std::size_t>(i)] = i;
    std::sort(by_order.begin(), by_order.end(), [&](long a, long b) {
        return F.degree[static_cast<std::size_t>(a)] < F.degree[static_cast<std::size_t>(b)];
    });
    // generator images first, then [g, u] definitions by increasing degree
    for (std::size_t g = 0; g < F.generators.size(); ++g)
        phi[static_cast<std::size_t>(F.generators[g])] = images[g];
    for (long idx : by_order) {
        if (F.degree[static_cast<std::size_t>(idx)] == 1) continue;
        auto [g, u] = F.defining_pair[static_cast<std::size_t>(idx)];
        phi[static_cast<std::size_t>(idx)] =
            L.bracket(phi[static_cast<std::size_t>(F.generators[static_cast<std::size_t>(g)])],
                      phi[static_cast<std::size_t>(u)]);
    }

    Mat<K> hom = Mat<K>::zero(L.dim(), nf);
    for (long i = 0; i < nf; ++i)
        for (long r = 0; r < L.dim(); ++r) hom.at(r, i) = phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
    if (hom.rank() != L.dim())
        throw DomainError("generator images do not generate the target at this class bound");
    GradedSubspace<K> R = matrix_kernel(hom, F.algebra.sdim(), L.ctx().from_long(1));
    return {std::move(F), L, images, std::move(hom), std::move(R)};
}

/// Canonical minimal generating images: the deterministic complement of the
/// derived subalgebra.
template <Field K>
std::vector<Vec<K>> canonical_generators(const LieSuperalgebra<K>& L) {
    return derived(L).complement(L.one()).basis();
}

enum class HopfDenominator { RF, RR };

namespace detail {

template <Field K>
SuperDim hopf_value(const LieSuperalgebra<K>& L, long c, HopfDenominator den) {
    Presentation<K> P = presentation(L, canonical_generators(L), c);
    const auto& F = P.free.algebra;
    GradedSubspace<K> FF = derived(F);
    GradedSubspace<K> RIF = P.relations.intersect(FF);
    GradedSubspace<K> D = (den == HopfDenominator::RF)
                              ? bracket_span(F, P.relations, F.full_space())
                              : bracket_span(F, P.relations, P.relations);
    if (!RIF.contains(D))
        throw Error("denominator escapes R cap [F,F]; free presentation machinery is inconsistent");
    return RIF.sdim() - D.sdim();
}

} // namespace detail

/// Hopf-type multiplier from a bounded-class free presentation:
/// sdim of (R cap [F,F]) minus the chosen denominator, [R,F] or [R,R].
/// The class bound defaults to nilpotency class + 1. For the RF variant the
/// built-in stability check recomputes at c + 1 and reports a too-small
/// bound; the RR variant is truncation-relative (R cap [F,F] picks up whole
/// degrees that [R,R] never reaches, so its value grows with c) and is
/// reported at the requested bound as is.
template <Field K>
SuperDim hopf_multiplier(const LieSuperalgebra<K>& L, std::optional<long> class_bound,
                         HopfDenominator den, bool check_stability = true) {
    if (L.dim() == 0) return {0, 0};
    long k = nilpotency_class(L);
    long c = class_bound.value_or(k + 1);
    if (c < k) throw DomainError("class bound below the nilpotency class");
    SuperDim value = detail::hopf_value(L, c, den);
    if (check_stability && den == HopfDenominator::RF) {
        SuperDim next = detail::hopf_value(L, c + 1, den);
        if (!(next == value))
            throw DomainError("class bound too small: value changes from class " +
                              std::to_string(c) + " to " + std::to_string(c + 1));
    }
    return value;
}

/// Cover through the free presentation: the stem deformation of
/// 0 -> R/[R,F] -> F/[R,F] -> L -> 0 with the canonical stem denominator.
template <Field K>
ExtensionSpec<K> cover_from_free(const LieSuperalgebra<K>& L, std::optional<long> class_bound) {
    if (L.dim() == 0) throw DomainError("cover of the zero algebra is itself; nothing to build");
    long k = nilpotency_class(L);
    long c = class_bound.value_or(k + 1);
    Presentation<K> P = presentation(L, canonical_generators(L), c);
    const auto& F = P.free.algebra;
    GradedSubspace<K> RF = bracket_span(F, P.relations, F.full_space());
    Quotient<K> q = quotient(F, RF);
    GradedSubspace<K> A(q.algebra.sdim());
    for (const auto& r : P.relations.basis()) {
        Vec<K> img = q.projection.apply(r);
        if (!vec_is_zero(img)) A.add(std::move(img));
    }
    Mat<K> proj = Mat<K>::zero(L.dim(), q.algebra.dim());
    for (long a = 0; a < q.algebra.dim(); ++a) {
        Vec<K> img = P.hom.apply(F.basis_vector(q.section_coords[static_cast<std::size_t>(a)]));
        for (long r = 0; r < L.dim(); ++r) proj.at(r, a) = img[static_cast<std::size_t>(r)];
    }
    ExtensionSpec<K> e{std::move(q.algebra), std::move(A), L, std::move(proj)};
    GradedSubspace<K> X = stem_denominator(e);
    return stem_deformation(e, X);
}

} // namespace superlie

#endif
