#ifndef SUPERLIE_SDIM_HPP
#define SUPERLIE_SDIM_HPP

#include <string>

#include "superlie/scalar.hpp"

namespace superlie {

using Parity = int; // 0 even, 1 odd

/// Superdimension: a pair (even dimension | odd dimension).
struct SuperDim {
    long even = 0;
    long odd = 0;

    long total() const { return even + odd; }

    /// Componentwise partial order; incomparable pairs exist.
    bool leq(const SuperDim& o) const { return even <= o.even && odd <= o.odd; }

    friend bool operator==(const SuperDim&, const SuperDim&) = default;

    SuperDim operator+(const SuperDim& o) const { return {even + o.even, odd + o.odd}; }
    SuperDim operator-(const SuperDim& o) const {
        if (!o.leq(*this)) throw DomainError("superdimension subtraction would go negative");
        return {even - o.even, odd - o.odd};
    }

    std::string str() const {
        return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
    }
};

inline bool superdim_leq(const SuperDim& a, const SuperDim& b) { return a.leq(b); }

} // namespace superlie

#endif
