#ifndef SUPERLIE_ALGEBRA_HPP
#define SUPERLIE_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superlie/scalar.hpp"
#include "superlie/sdim.hpp"
#include "superlie/subspace.hpp"

namespace superlie {

/// Sparse coordinate vector: (index, value) pairs sorted by index, no zeros.
template <Field K>
using SparseVec = std::vector<std::pair<long, K>>;

template <Field K>
SparseVec<K> sparsify(const Vec<K>& v) {
    SparseVec<K> out;
    for (long i = 0; i < static_cast<long>(v.size()); ++i)
        if (!v[static_cast<std::size_t>(i)].is_zero())
            out.emplace_back(i, v[static_cast<std::size_t>(i)]);
    return out;
}

template <Field K>
Vec<K> densify(const SparseVec<K>& s, long n) {
    Vec<K> out(static_cast<std::size_t>(n));
    for (const auto& [i, c] : s) out[static_cast<std::size_t>(i)] = c;
    return out;
}

/// Dense matrix acting on coordinate column vectors.
template <Field K>
struct Mat {
    long rows = 0, cols = 0;
    std::vector<Vec<K>> data; // rows entries, each of length cols

    static Mat zero(long r, long c) {
        Mat m;
        m.rows = r;
        m.cols = c;
        m.data.assign(static_cast<std::size_t>(r), Vec<K>(static_cast<std::size_t>(c)));
        return m;
    }
    static Mat identity(long n, const K& one) {
        Mat m = zero(n, n);
        for (long i = 0; i < n; ++i) m.data[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = one;
        return m;
    }

    K& at(long r, long c) { return data[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const K& at(long r, long c) const { return data[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    Vec<K> apply(const Vec<K>& v) const {
        if (static_cast<long>(v.size()) != cols) throw DomainError("matrix/vector size mismatch");
        Vec<K> out(static_cast<std::size_t>(rows));
        for (long r = 0; r < rows; ++r) {
            const Vec<K>& row = data[static_cast<std::size_t>(r)];
            K acc{};
            for (long c = 0; c < cols; ++c)
                if (!row[static_cast<std::size_t>(c)].is_zero() && !v[static_cast<std::size_t>(c)].is_zero())
                    acc += row[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
            out[static_cast<std::size_t>(r)] = acc;
        }
        return out;
    }

    long rank() const {
        Echelon<K> e(cols);
        for (const auto& row : data) e.insert(row);
        return e.rank();
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows != b.rows || a.cols != b.cols) return false;
        for (long r = 0; r < a.rows; ++r)
            for (long c = 0; c < a.cols; ++c)
                if (a.at(r, c) != b.at(r, c)) return false;
        return true;
    }
};

enum class ViolationKind { Parity, Skew, Jacobi };

struct Violation {
    ViolationKind kind;
    long i = -1, j = -1, k = -1;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Finite-dimensional Lie superalgebra over K, presented by a graded basis
/// (even coordinates first) and sparse structure constants.
template <Field K>
class LieSuperalgebra {
public:
    using Context = typename K::Context;

    /// Canonical-input constructor: entries may omit mirrors (derived by super
    /// skew-symmetry); explicitly conflicting mirrors are an error.
    LieSuperalgebra(Context ctx, std::vector<std::string> names, std::vector<Parity> parities,
                    const std::map<std::pair<long, long>, SparseVec<K>>& entries)
        : LieSuperalgebra(std::move(ctx), std::move(names), std::move(parities)) {
        for (const auto& [ij, val] : entries) {
            auto [i, j] = ij;
            check_index(i);
            check_index(j);
            for (const auto& [m, c] : val) {
                check_index(m);
                if (c.is_zero()) throw DomainError("explicit zero in structure constants");
            }
            set_entry(i, j, val);
        }
        for (const auto& [ij, val] : entries) {
            auto [i, j] = ij;
            SparseVec<K> mirror = negate_mirror(val, parity(i), parity(j));
            auto it = entries.find({j, i});
            if (it != entries.end()) {
                if (i != j && !sparse_equal(it->second, mirror))
                    throw DomainError("conflicting mirror entries for bracket (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
            } else if (i != j) {
                set_entry(j, i, mirror);
            }
        }
    }

    /// Raw constructor: the table is taken verbatim (no mirror completion).
    /// Meant for loaders and tests that need full control.
    static LieSuperalgebra raw(Context ctx, std::vector<std::string> names,
                               std::vector<Parity> parities,
                               const std::map<std::pair<long, long>, SparseVec<K>>& full_table) {
        LieSuperalgebra L(std::move(ctx), std::move(names), std::move(parities));
        for (const auto& [ij, val] : full_table) L.set_entry(ij.first, ij.second, val);
        return L;
    }

    const Context& ctx() const { return ctx_; }
    const std::vector<std::string>& names() const { return names_; }
    Parity parity(long i) const { return i < dim_.even ? 0 : 1; }
    SuperDim sdim() const { return dim_; }
    long dim() const { return dim_.total(); }

    K one() const { return ctx_.from_long(1); }

    const SparseVec<K>& bracket(long i, long j) const {
        return table_[static_cast<std::size_t>(i * dim() + j)];
    }

    /// Bilinear extension of the structure constants.
    Vec<K> bracket(const Vec<K>& u, const Vec<K>& v) const {
        if (static_cast<long>(u.size()) != dim() || static_cast<long>(v.size()) != dim())
            throw DomainError("bracket operand dimension mismatch");
        Vec<K> out(static_cast<std::size_t>(dim()));
        for (long i = 0; i < dim(); ++i) {
            const K& a = u[static_cast<std::size_t>(i)];
            if (a.is_zero()) continue;
            for (long j = 0; j < dim(); ++j) {
                const K& b = v[static_cast<std::size_t>(j)];
                if (b.is_zero()) continue;
                const SparseVec<K>& t = bracket(i, j);
                if (t.empty()) continue;
                K ab = a * b;
                for (const auto& [m, c] : t) out[static_cast<std::size_t>(m)] += ab * c;
            }
        }
        return out;
    }

    Vec<K> basis_vector(long i) const {
        Vec<K> v(static_cast<std::size_t>(dim()));
        v[static_cast<std::size_t>(i)] = one();
        return v;
    }

    GradedSubspace<K> full_space() const { return GradedSubspace<K>::full(dim_, one()); }
    GradedSubspace<K> zero_space() const { return GradedSubspace<K>::zero(dim_); }

    ValidationReport validate() const {
        ValidationReport rep;
        long n = dim();
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                const auto& t = bracket(i, j);
                if (t.empty()) continue;
                Parity want = (parity(i) + parity(j)) % 2;
                for (const auto& [m, c] : t)
                    if (parity(m) != want) {
                        rep.violations.push_back({ViolationKind::Parity, i, j, -1,
                                                  "bracket [" + names_[static_cast<std::size_t>(i)] + ", " +
                                                      names_[static_cast<std::size_t>(j)] +
                                                      "] has support of wrong parity at " +
                                                      names_[static_cast<std::size_t>(m)]});
                        break;
                    }
            }
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) {
                // [x,y] + (-1)^{|x||y|}[y,x] must vanish
                Vec<K> acc(static_cast<std::size_t>(n));
                for (const auto& [m, c] : bracket(i, j)) acc[static_cast<std::size_t>(m)] += c;
                int sign = (parity(i) * parity(j)) % 2 == 1 ? -1 : 1;
                for (const auto& [m, c] : bracket(j, i))
                    acc[static_cast<std::size_t>(m)] += c.times(sign);
                if (!vec_is_zero(acc))
                    rep.violations.push_back({ViolationKind::Skew, i, j, -1,
                                              "super skew-symmetry fails on (" +
                                                  names_[static_cast<std::size_t>(i)] + ", " +
                                                  names_[static_cast<std::size_t>(j)] + ")"});
            }
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j)
                for (long k = j; k < n; ++k) {
                    if (bracket(j, k).empty() && bracket(k, i).empty() && bracket(i, j).empty())
                        continue;
                    Vec<K> acc = jacobiator(i, j, k);
                    if (!vec_is_zero(acc))
                        rep.violations.push_back({ViolationKind::Jacobi, i, j, k,
                                                  "super Jacobi fails on (" +
                                                      names_[static_cast<std::size_t>(i)] + ", " +
                                                      names_[static_cast<std::size_t>(j)] + ", " +
                                                      names_[static_cast<std::size_t>(k)] + ")"});
                }
        rep.ok = rep.violations.empty();
        return rep;
    }

    /// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|x||y|}[y,[z,x]] + (-1)^{|y||z|}[z,[x,y]]
    Vec<K> jacobiator(long i, long j, long k) const {
        long n = dim();
        Vec<K> acc(static_cast<std::size_t>(n));
        auto add_term = [&](long a, long b, long c, int sign) {
            const auto& inner = bracket(b, c);
            for (const auto& [m, cm] : inner) {
                const auto& outer = bracket(a, m);
                for (const auto& [r, cr] : outer)
                    acc[static_cast<std::size_t>(r)] += (cm * cr).times(sign);
            }
        };
        auto sgn = [&](long a, long b) { return (parity(a) * parity(b)) % 2 == 1 ? -1 : 1; };
        add_term(i, j, k, sgn(i, k));
        add_term(j, k, i, sgn(i, j));
        add_term(k, i, j, sgn(j, k));
        return acc;
    }

    friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b) {
        return a.ctx_ == b.ctx_ && a.names_ == b.names_ && a.dim_ == b.dim_ && a.table_ == b.table_;
    }

    /// Structure constants as a canonical map, suitable for serialization:
    /// same-parity pairs stored for i <= j, mixed pairs for the even index
    /// first (which is the smaller index in the even-first ordering).
    std::map<std::pair<long, long>, SparseVec<K>> canonical_entries() const {
        std::map<std::pair<long, long>, SparseVec<K>> out;
        for (long i = 0; i < dim(); ++i)
            for (long j = i; j < dim(); ++j)
                if (!bracket(i, j).empty()) out[{i, j}] = bracket(i, j);
        return out;
    }

private:
    Context ctx_;
    std::vector<std::string> names_;
    SuperDim dim_;
    std::vector<SparseVec<K>> table_;

    LieSuperalgebra(Context ctx, std::vector<std::string> names, std::vector<Parity> parities)
        : ctx_(std::move(ctx)), names_(std::move(names)) {
        if (names_.size() != parities.size())
            throw DomainError("basis names and parities differ in length");
        long even = 0, odd = 0;
        bool seen_odd = false;
        for (Parity p : parities) {
            if (p != 0 && p != 1) throw DomainError("parity must be 0 or 1");
            if (p == 0) {
                if (seen_odd) throw DomainError("basis must list even elements before odd ones");
                ++even;
            } else {
                seen_odd = true;
                ++odd;
            }
        }
        dim_ = {even, odd};
        for (std::size_t a = 0; a < names_.size(); ++a)
            for (std::size_t b = a + 1; b < names_.size(); ++b)
                if (names_[a] == names_[b]) throw DomainError("duplicate basis name '" + names_[a] + "'");
        table_.assign(static_cast<std::size_t>(dim() * dim()), {});
    }

    void check_index(long i) const {
        if (i < 0 || i >= dim()) throw DomainError("basis index out of range");
    }

    void set_entry(long i, long j, SparseVec<K> val) {
        table_[static_cast<std::size_t>(i * dim() + j)] = std::move(val);
    }

    static SparseVec<K> negate_mirror(const SparseVec<K>& v, Parity pi, Parity pj) {
        int sign = (pi * pj) % 2 == 1 ? 1 : -1; // -(-1)^{|x||y|}
        SparseVec<K> out = v;
        for (auto& [m, c] : out) c = c.times(sign);
        return out;
    }

    static bool sparse_equal(const SparseVec<K>& a, const SparseVec<K>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a[t].first != b[t].first || a[t].second != b[t].second) return false;
        return true;
    }
};

/// Span of all brackets [x, y] with x in X, y in Y.
template <Field K>
GradedSubspace<K> bracket_span(const LieSuperalgebra<K>& L, const GradedSubspace<K>& X,
                               const GradedSubspace<K>& Y) {
    if (!(X.host() == L.sdim()) || !(Y.host() == L.sdim()))
        throw DomainError("bracket_span: subspace host mismatch");
    GradedSubspace<K> out(L.sdim());
    for (const auto& x : X.basis())
        for (const auto& y : Y.basis()) {
            Vec<K> b = L.bracket(x, y);
            if (!vec_is_zero(b)) out.add(std::move(b));
        }
    return out;
}

template <Field K>
GradedSubspace<K> derived(const LieSuperalgebra<K>& L) {
    // the span of all structure-constant vectors
    GradedSubspace<K> out(L.sdim());
    for (long i = 0; i < L.dim(); ++i)
        for (long j = i; j < L.dim(); ++j) {
            const auto& t = L.bracket(i, j);
            if (!t.empty()) out.add(densify(t, L.dim()));
        }
    return out;
}

/// Largest graded subspace Z with [Z, L] = 0.
template <Field K>
GradedSubspace<K> center(const LieSuperalgebra<K>& L) {
    long n = L.dim();
    // constraint rows over the v-coordinate, one per (j, output coord m)
    std::map<std::pair<long, long>, Vec<K>> rows;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (const auto& [m, c] : L.bracket(i, j)) {
                auto& row = rows.try_emplace({j, m}, Vec<K>(static_cast<std::size_t>(n))).first->second;
                row[static_cast<std::size_t>(i)] += c;
            }
    std::vector<Vec<K>> constraints;
    constraints.reserve(rows.size());
    for (auto& [key, row] : rows) constraints.push_back(std::move(row));
    return graded_kernel(constraints, L.sdim(), L.one());
}

/// gamma_1 = L, gamma_{k+1} = [L, gamma_k], listed until stabilization.
template <Field K>
std::vector<GradedSubspace<K>> lower_central_series(const LieSuperalgebra<K>& L) {
    std::vector<GradedSubspace<K>> out;
    out.push_back(L.full_space());
    for (long step = 0; step <= L.dim(); ++step) {
        GradedSubspace<K> next = bracket_span(L, out.front(), out.back());
        if (next == out.back()) break;
        out.push_back(std::move(next));
        if (out.back().sdim() == SuperDim{0, 0}) break;
    }
    return out;
}

template <Field K>
bool is_nilpotent(const LieSuperalgebra<K>& L) {
    auto series = lower_central_series(L);
    return series.back().sdim() == SuperDim{0, 0} || L.dim() == 0;
}

/// Number of nonzero terms of the lower central series (abelian: 1).
template <Field K>
long nilpotency_class(const LieSuperalgebra<K>& L) {
    if (L.dim() == 0) return 0;
    auto series = lower_central_series(L);
    if (!(series.back().sdim() == SuperDim{0, 0}))
        throw DomainError("algebra is not nilpotent");
    return static_cast<long>(series.size()) - 1;
}

template <Field K>
bool is_ideal(const LieSuperalgebra<K>& L, const GradedSubspace<K>& S) {
    return S.contains(bracket_span(L, S, L.full_space()));
}

/// Even linear map between two algebras' coordinate spaces.
template <Field K>
struct HomSpec {
    LieSuperalgebra<K> source;
    LieSuperalgebra<K> target;
    Mat<K> matrix; // target.dim() x source.dim()
};

template <Field K>
bool is_even_map(const Mat<K>& m, const LieSuperalgebra<K>& source,
                 const LieSuperalgebra<K>& target) {
    for (long r = 0; r < m.rows; ++r)
        for (long c = 0; c < m.cols; ++c)
            if (!m.at(r, c).is_zero() && target.parity(r) != source.parity(c)) return false;
    return true;
}

template <Field K>
bool verify_hom(const HomSpec<K>& h) {
    const auto& S = h.source;
    const auto& T = h.target;
    if (h.matrix.rows != T.dim() || h.matrix.cols != S.dim()) return false;
    if (!(S.ctx() == T.ctx())) return false;
    if (!is_even_map(h.matrix, S, T)) return false;
    std::vector<Vec<K>> images;
    images.reserve(static_cast<std::size_t>(S.dim()));
    for (long i = 0; i < S.dim(); ++i) images.push_back(h.matrix.apply(S.basis_vector(i)));
    for (long i = 0; i < S.dim(); ++i)
        for (long j = 0; j < S.dim(); ++j) {
            Vec<K> lhs = h.matrix.apply(densify(S.bracket(i, j), S.dim()));
            Vec<K> rhs = T.bracket(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
            for (long m = 0; m < T.dim(); ++m)
                if (lhs[static_cast<std::size_t>(m)] != rhs[static_cast<std::size_t>(m)]) return false;
        }
    return true;
}

template <Field K>
bool verify_iso(const HomSpec<K>& h) {
    if (!verify_hom(h)) return false;
    if (h.source.dim() != h.target.dim()) return false;
    return h.matrix.rank() == h.source.dim();
}

/// Quotient by an ideal, on the canonical complement coordinates.
template <Field K>
struct Quotient {
    LieSuperalgebra<K> algebra;
    Mat<K> projection;                 // algebra.dim() x L.dim()
    std::vector<long> section_coords;  // quotient basis index -> L coordinate
};

template <Field K>
Quotient<K> quotient(const LieSuperalgebra<K>& L, const GradedSubspace<K>& I) {
    if (!is_ideal(L, I)) throw DomainError("quotient requires an ideal");
    std::vector<long> rep = I.complement_coords();
    long q = static_cast<long>(rep.size());
    std::vector<long> coord_slot(static_cast<std::size_t>(L.dim()), -1);
    for (long a = 0; a < q; ++a) coord_slot[static_cast<std::size_t>(rep[static_cast<std::size_t>(a)])] = a;

    auto to_quotient = [&](const Vec<K>& v) {
        Vec<K> red = I.reduce_mod(v);
        Vec<K> out(static_cast<std::size_t>(q));
        for (long i = 0; i < L.dim(); ++i)
            if (!red[static_cast<std::size_t>(i)].is_zero()) {
                long slot = coord_slot[static_cast<std::size_t>(i)];
                if (slot < 0) throw DomainError("reduction left support on a pivot coordinate");
                out[static_cast<std::size_t>(slot)] = red[static_cast<std::size_t>(i)];
            }
        return out;
    };

    std::vector<std::string> names;
    std::vector<Parity> parities;
    for (long a = 0; a < q; ++a) {
        names.push_back("q" + std::to_string(a));
        parities.push_back(L.parity(rep[static_cast<std::size_t>(a)]));
    }
    std::map<std::pair<long, long>, SparseVec<K>> table;
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b) {
            Vec<K> br = L.bracket(L.basis_vector(rep[static_cast<std::size_t>(a)]),
                                  L.basis_vector(rep[static_cast<std::size_t>(b)]));
            Vec<K> qv = to_quotient(br);
            if (!vec_is_zero(qv)) table[{a, b}] = sparsify(qv);
        }
    LieSuperalgebra<K> Q = LieSuperalgebra<K>::raw(L.ctx(), std::move(names), std::move(parities), table);

    Mat<K> proj = Mat<K>::zero(q, L.dim());
    for (long i = 0; i < L.dim(); ++i) {
        Vec<K> col = to_quotient(L.basis_vector(i));
        for (long a = 0; a < q; ++a) proj.at(a, i) = col[static_cast<std::size_t>(a)];
    }
    return {std::move(Q), std::move(proj), std::move(rep)};
}

template <Field K>
LieSuperalgebra<K> direct_sum(const LieSuperalgebra<K>& A, const LieSuperalgebra<K>& B) {
    if (!(A.ctx() == B.ctx())) throw DomainError("direct sum requires matching fields");
    // coordinate embeddings into the even-first merged ordering
    std::vector<long> embedA(static_cast<std::size_t>(A.dim())), embedB(static_cast<std::size_t>(B.dim()));
    long pos = 0;
    for (long i = 0; i < A.sdim().even; ++i) embedA[static_cast<std::size_t>(i)] = pos++;
    for (long i = 0; i < B.sdim().even; ++i) embedB[static_cast<std::size_t>(i)] = pos++;
    for (long i = A.sdim().even; i < A.dim(); ++i) embedA[static_cast<std::size_t>(i)] = pos++;
    for (long i = B.sdim().even; i < B.dim(); ++i) embedB[static_cast<std::size_t>(i)] = pos++;

    long total = A.dim() + B.dim();
    std::vector<std::string> names(static_cast<std::size_t>(total));
    std::vector<Parity> parities(static_cast<std::size_t>(total));
    for (long i = 0; i < A.dim(); ++i) {
        names[static_cast<std::size_t>(embedA[static_cast<std::size_t>(i)])] = A.names()[static_cast<std::size_t>(i)];
        parities[static_cast<std::size_t>(embedA[static_cast<std::size_t>(i)])] = A.parity(i);
    }
    for (long i = 0; i < B.dim(); ++i) {
        std::string n = B.names()[static_cast<std::size_t>(i)];
        while (std::find(names.begin(), names.end(), n) != names.end()) n += "'";
        names[static_cast<std::size_t>(embedB[static_cast<std::size_t>(i)])] = n;
        parities[static_cast<std::size_t>(embedB[static_cast<std::size_t>(i)])] = B.parity(i);
    }

    std::map<std::pair<long, long>, SparseVec<K>> table;
    auto copy_block = [&](const LieSuperalgebra<K>& L, const std::vector<long>& embed) {
        for (long i = 0; i < L.dim(); ++i)
            for (long j = 0; j < L.dim(); ++j) {
                const auto& t = L.bracket(i, j);
                if (t.empty()) continue;
                SparseVec<K> mapped;
                for (const auto& [m, c] : t) mapped.emplace_back(embed[static_cast<std::size_t>(m)], c);
                std::sort(mapped.begin(), mapped.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                table[{embed[static_cast<std::size_t>(i)], embed[static_cast<std::size_t>(j)]}] = std::move(mapped);
            }
    };
    copy_block(A, embedA);
    copy_block(B, embedB);
    return LieSuperalgebra<K>::raw(A.ctx(), std::move(names), std::move(parities), table);
}

template <Field K>
LieSuperalgebra<K> abelian(long s, long t, const typename K::Context& ctx) {
    if (s < 0 || t < 0) throw DomainError("abelian dimensions must be nonnegative");
    std::vector<std::string> names;
    std::vector<Parity> parities;
    for (long i = 1; i <= s; ++i) { names.push_back("e" + std::to_string(i)); parities.push_back(0); }
    for (long i = 1; i <= t; ++i) { names.push_back("o" + std::to_string(i)); parities.push_back(1); }
    return LieSuperalgebra<K>::raw(ctx, std::move(names), std::move(parities), {});
}

} // namespace superlie

#endif
