#ifndef SUPERLIE_SUBSPACE_HPP
#define SUPERLIE_SUBSPACE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "superlie/scalar.hpp"
#include "superlie/sdim.hpp"

namespace superlie {

template <Field K>
using Vec = std::vector<K>;

template <Field K>
bool vec_is_zero(const Vec<K>& v) {
    return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

/// v += c * w, skipping the work when c is zero.
template <Field K>
void vec_axpy(Vec<K>& v, const K& c, const Vec<K>& w) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!w[i].is_zero()) v[i] += c * w[i];
}

inline Parity coord_parity(const SuperDim& host, long i) { return i < host.even ? 0 : 1; }

/// Parity of the block carrying v's support; zero vectors report no parity.
template <Field K>
std::optional<Parity> support_parity(const Vec<K>& v, const SuperDim& host) {
    bool has_even = false, has_odd = false;
    for (long i = 0; i < static_cast<long>(v.size()); ++i)
        if (!v[i].is_zero()) (coord_parity(host, i) == 0 ? has_even : has_odd) = true;
    if (has_even && has_odd) throw DomainError("vector is not parity-homogeneous");
    if (!has_even && !has_odd) return std::nullopt;
    return has_odd ? 1 : 0;
}

/// Reduced row echelon form over an exact field, maintained incrementally.
/// Rows have unit pivots, pivot columns are otherwise zero, pivots strictly
/// increase down the rows. Equal row spaces have identical representations.
template <Field K>
class Echelon {
public:
    explicit Echelon(long width = 0) : width_(width) {}

    long width() const { return width_; }
    long rank() const { return static_cast<long>(rows_.size()); }
    const std::vector<Vec<K>>& rows() const { return rows_; }
    const std::vector<long>& pivots() const { return pivots_; }

    /// Reduce v by the current rows (in place); returns v's own pivot column
    /// or -1 when v reduces to zero.
    long reduce(Vec<K>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[static_cast<std::size_t>(pivots_[r])];
            if (!c.is_zero()) {
                K m = -c;
                vec_axpy(v, m, rows_[r]);
            }
        }
        for (long j = 0; j < width_; ++j)
            if (!v[static_cast<std::size_t>(j)].is_zero()) return j;
        return -1;
    }

    /// Insert the span of v; returns true when the rank grew.
    bool insert(Vec<K> v) {
        long p = reduce(v);
        if (p < 0) return false;
        K inv = v[static_cast<std::size_t>(p)].inverse();
        for (auto& x : v) if (!x.is_zero()) x *= inv;
        // clear the new pivot column in existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            K c = rows_[r][static_cast<std::size_t>(p)];
            if (!c.is_zero()) {
                K m = -c;
                vec_axpy(rows_[r], m, v);
            }
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

    bool contains(Vec<K> v) const { return reduce(v) < 0; }

    friend bool operator==(const Echelon& a, const Echelon& b) {
        if (a.width_ != b.width_ || a.pivots_ != b.pivots_) return false;
        for (std::size_t r = 0; r < a.rows_.size(); ++r)
            for (long j = 0; j < a.width_; ++j)
                if (a.rows_[r][static_cast<std::size_t>(j)] != b.rows_[r][static_cast<std::size_t>(j)])
                    return false;
        return true;
    }

private:
    long width_;
    std::vector<Vec<K>> rows_;
    std::vector<long> pivots_;
};

/// A parity-split subspace of a graded coordinate space, in canonical reduced
/// echelon form per parity block.
template <Field K>
class GradedSubspace {
public:
    GradedSubspace() : host_{0, 0}, even_(0), odd_(0) {}
    explicit GradedSubspace(SuperDim host)
        : host_(host), even_(host.total()), odd_(host.total()) {}

    const SuperDim& host() const { return host_; }
    SuperDim sdim() const { return {even_.rank(), odd_.rank()}; }

    const Echelon<K>& block(Parity p) const { return p == 0 ? even_ : odd_; }

    const std::vector<Vec<K>>& even_basis() const { return even_.rows(); }
    const std::vector<Vec<K>>& odd_basis() const { return odd_.rows(); }

    /// All basis rows, even block first.
    std::vector<Vec<K>> basis() const {
        std::vector<Vec<K>> out = even_.rows();
        out.insert(out.end(), odd_.rows().begin(), odd_.rows().end());
        return out;
    }

    bool add(Vec<K> v) {
        if (static_cast<long>(v.size()) != host_.total())
            throw DomainError("vector length does not match host dimension");
        auto p = support_parity(v, host_);
        if (!p) return false;
        return (*p == 0 ? even_ : odd_).insert(std::move(v));
    }

    bool contains(const Vec<K>& v) const {
        if (static_cast<long>(v.size()) != host_.total())
            throw DomainError("vector length does not match host dimension");
        auto p = support_parity(v, host_);
        if (!p) return true;
        return (*p == 0 ? even_ : odd_).contains(v);
    }

    bool contains(const GradedSubspace& other) const {
        check_host(other);
        for (const auto& r : other.even_.rows()) if (!even_.contains(r)) return false;
        for (const auto& r : other.odd_.rows()) if (!odd_.contains(r)) return false;
        return true;
    }

    GradedSubspace sum(const GradedSubspace& other) const {
        check_host(other);
        GradedSubspace out = *this;
        for (const auto& r : other.even_.rows()) out.even_.insert(r);
        for (const auto& r : other.odd_.rows()) out.odd_.insert(r);
        return out;
    }

    GradedSubspace intersect(const GradedSubspace& other) const {
        check_host(other);
        GradedSubspace out(host_);
        out.even_ = intersect_block(even_, other.even_, host_.total());
        out.odd_ = intersect_block(odd_, other.odd_, host_.total());
        return out;
    }

    /// Deterministic supplementary subspace: standard coordinate vectors at
    /// the non-pivot positions of each parity block. Needs a unit scalar to
    /// build one-hot vectors.
    GradedSubspace complement(const K& one) const {
        GradedSubspace out(host_);
        std::vector<bool> is_pivot(static_cast<std::size_t>(host_.total()), false);
        for (long p : even_.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
        for (long p : odd_.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
        for (long j = 0; j < host_.total(); ++j) {
            if (is_pivot[static_cast<std::size_t>(j)]) continue;
            Vec<K> v(static_cast<std::size_t>(host_.total()));
            v[static_cast<std::size_t>(j)] = one;
            out.add(std::move(v));
        }
        return out;
    }

    /// Coordinates of the complement's standard basis vectors, per parity,
    /// even block first (the non-pivot positions).
    std::vector<long> complement_coords() const {
        std::vector<bool> is_pivot(static_cast<std::size_t>(host_.total()), false);
        for (long p : even_.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
        for (long p : odd_.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
        std::vector<long> out;
        for (long j = 0; j < host_.total(); ++j)
            if (!is_pivot[static_cast<std::size_t>(j)]) out.push_back(j);
        return out;
    }

    /// Canonical remainder of v modulo this subspace (reduction against the
    /// echelon rows of the matching parity block, or both for zero).
    Vec<K> reduce_mod(Vec<K> v) const {
        even_.reduce(v);
        odd_.reduce(v);
        return v;
    }

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
        return a.host_ == b.host_ && a.even_ == b.even_ && a.odd_ == b.odd_;
    }

    static GradedSubspace zero(SuperDim host) { return GradedSubspace(host); }

    static GradedSubspace full(SuperDim host, const K& one) {
        return GradedSubspace(host).complement(one);
    }

private:
    SuperDim host_;
    Echelon<K> even_;
    Echelon<K> odd_;

    void check_host(const GradedSubspace& other) const {
        if (!(host_ == other.host_)) throw DomainError("host dimension mismatch");
    }

    /// Zassenhaus: row reduce [U|U; W|0]; rows with vanishing left half carry
    /// the intersection in their right half.
    static Echelon<K> intersect_block(const Echelon<K>& a, const Echelon<K>& b, long n) {
        Echelon<K> work(2 * n);
        auto widen = [n](const Vec<K>& u, bool duplicate) {
            Vec<K> row(static_cast<std::size_t>(2 * n));
            for (long j = 0; j < n; ++j) {
                row[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j)];
                if (duplicate) row[static_cast<std::size_t>(n + j)] = u[static_cast<std::size_t>(j)];
            }
            return row;
        };
        for (const auto& u : a.rows()) work.insert(widen(u, true));
        for (const auto& w : b.rows()) work.insert(widen(w, false));
        Echelon<K> out(n);
        for (const auto& row : work.rows()) {
            bool left_zero = true;
            for (long j = 0; j < n && left_zero; ++j)
                left_zero = row[static_cast<std::size_t>(j)].is_zero();
            if (!left_zero) continue;
            Vec<K> right(row.begin() + n, row.end());
            out.insert(std::move(right));
        }
        return out;
    }
};

/// Span of parity-homogeneous vectors as a canonical graded subspace.
template <Field K>
GradedSubspace<K> echelonize(const std::vector<Vec<K>>& vectors, SuperDim host) {
    GradedSubspace<K> out(host);
    for (const auto& v : vectors) out.add(v);
    return out;
}

/// Kernel of a parity-pure constraint system over a graded host: each
/// constraint row must be supported inside a single parity block.
template <Field K>
GradedSubspace<K> graded_kernel(const std::vector<Vec<K>>& constraints, SuperDim host,
                                const K& one) {
    Echelon<K> even_c(host.total()), odd_c(host.total());
    for (const auto& row : constraints) {
        auto p = support_parity(row, host);
        if (!p) continue;
        (*p == 0 ? even_c : odd_c).insert(row);
    }
    GradedSubspace<K> out(host);
    for (Parity p : {0, 1}) {
        const Echelon<K>& cons = (p == 0 ? even_c : odd_c);
        std::vector<bool> is_pivot(static_cast<std::size_t>(host.total()), false);
        for (long q : cons.pivots()) is_pivot[static_cast<std::size_t>(q)] = true;
        long lo = (p == 0) ? 0 : host.even;
        long hi = (p == 0) ? host.even : host.total();
        for (long j = lo; j < hi; ++j) {
            if (is_pivot[static_cast<std::size_t>(j)]) continue;
            Vec<K> v(static_cast<std::size_t>(host.total()));
            v[static_cast<std::size_t>(j)] = one;
            const auto& rows = cons.rows();
            const auto& pivs = cons.pivots();
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const K& c = rows[r][static_cast<std::size_t>(j)];
                if (!c.is_zero()) v[static_cast<std::size_t>(pivs[r])] = -c;
            }
            out.add(std::move(v));
        }
    }
    return out;
}

} // namespace superlie

#endif
