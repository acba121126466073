#ifndef SUPERLIE_SCALAR_HPP
#define SUPERLIE_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace superlie {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or non-canonical input (documents, scalar literals, parameters).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Violated precondition of an operation (host mismatch, parity error, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

namespace detail {

inline bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    // no leading zeros except "0" itself
    std::size_t d = (s[0] == '-') ? 1 : 0;
    if (s[d] == '0' && s.size() > d + 1) return false;
    if (s == "-0") return false;
    return true;
}

} // namespace detail

/// Arbitrary-precision rational number. Always kept in lowest terms with a
/// positive denominator (mpq canonical form).
class Rational {
public:
    Rational() : v_(0) {}
    explicit Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }

    bool is_zero() const { return sgn(v_) == 0; }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    Rational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        Rational r(1);
        r.v_ /= v_;
        return r;
    }

    /// Multiply by a machine integer (the integers act on every field).
    Rational times(long n) const { Rational r; r.v_ = v_ * n; return r; }

    std::string str() const { return v_.get_str(); }

    /// Field descriptor; for rationals it carries no data.
    struct Context {
        Rational zero() const { return Rational(); }
        Rational one() const { return Rational(1); }
        Rational from_long(long n) const { return Rational(n); }

        /// Parse a canonical fraction literal: "n" or "n/d" with d > 1 and
        /// gcd(n, d) = 1. Anything else is rejected.
        Rational parse(const std::string& s) const {
            auto slash = s.find('/');
            if (slash == std::string::npos) {
                if (!detail::is_integer_literal(s))
                    throw ParseError("malformed rational literal '" + s + "'");
                Rational r;
                r.v_ = mpq_class(s);
                return r;
            }
            std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den))
                throw ParseError("malformed rational literal '" + s + "'");
            mpz_class n(num), d(den);
            if (sgn(d) <= 0)
                throw ParseError("non-canonical rational '" + s + "': denominator must be positive");
            if (d == 1)
                throw ParseError("non-canonical rational '" + s + "': denominator 1 must be omitted");
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            if (g != 1)
                throw ParseError("non-canonical rational '" + s + "': not in lowest terms");
            Rational r;
            r.v_ = mpq_class(n, d);
            return r;
        }

        std::string format(const Rational& x) const { return x.str(); }

        bool operator==(const Context&) const { return true; }
        std::string describe() const { return "rational"; }
    };

private:
    mpq_class v_;
};

/// Element of a prime field Z/p with p >= 5. The modulus travels with the
/// element; a default-constructed value is the absolute zero, compatible with
/// every modulus, so that zero-filled vectors need no field context.
class PrimeField {
public:
    PrimeField() : v_(0), p_(0) {}

    bool is_zero() const { return v_ == 0; }

    PrimeField operator-() const {
        PrimeField r = *this;
        if (r.v_ != 0) r.v_ = r.p_ - r.v_;
        return r;
    }
    PrimeField& operator+=(const PrimeField& o) {
        merge(o);
        if (p_ == 0) return *this; // both unattached zeros
        v_ = (v_ + o.v_) % p_;
        normalize();
        return *this;
    }
    PrimeField& operator-=(const PrimeField& o) { return *this += -o; }
    PrimeField& operator*=(const PrimeField& o) {
        if (is_zero() || o.is_zero()) { *this = PrimeField(); return *this; }
        merge(o);
        v_ = mulmod(v_, o.v_, p_);
        normalize();
        return *this;
    }
    PrimeField& operator/=(const PrimeField& o) { return *this *= o.inverse(); }
    friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
    friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
    friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
    friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }
    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.p_ != b.p_) throw DomainError("prime field mismatch");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

    PrimeField inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_),
                     nr = static_cast<std::int64_t>(v_);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        PrimeField out;
        out.p_ = p_;
        out.v_ = static_cast<std::uint64_t>(t);
        return out;
    }

    PrimeField times(long n) const {
        if (is_zero()) return PrimeField();
        std::int64_t m = n % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        PrimeField r = *this;
        r.v_ = mulmod(r.v_, static_cast<std::uint64_t>(m), p_);
        r.normalize();
        return r;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    struct Context {
        std::uint64_t p = 0;

        Context() = default;
        explicit Context(std::uint64_t prime) : p(prime) {
            if (p < 5) throw ParseError("prime field characteristic must be >= 5");
            if (p > 2147483647ULL) throw ParseError("prime field modulus must fit in 31 bits");
            for (std::uint64_t d = 2; d * d <= p; ++d)
                if (p % d == 0) throw ParseError("prime field modulus must be prime");
        }

        PrimeField zero() const { return PrimeField(); }
        PrimeField one() const { return from_long(1); }
        PrimeField from_long(long n) const {
            std::int64_t m = n % static_cast<std::int64_t>(p);
            if (m < 0) m += static_cast<std::int64_t>(p);
            PrimeField r;
            if (m != 0) { r.v_ = static_cast<std::uint64_t>(m); r.p_ = p; }
            return r;
        }

        /// Canonical representative: decimal integer in [0, p).
        PrimeField parse(const std::string& s) const {
            if (!detail::is_integer_literal(s) || s[0] == '-')
                throw ParseError("malformed prime field literal '" + s + "'");
            std::uint64_t x = 0;
            for (char ch : s) {
                x = x * 10 + static_cast<std::uint64_t>(ch - '0');
                if (x >= p) throw ParseError("non-canonical prime field literal '" + s +
                                             "': must lie in [0, " + std::to_string(p) + ")");
            }
            PrimeField r;
            if (x != 0) { r.v_ = x; r.p_ = p; }
            return r;
        }

        std::string format(const PrimeField& x) const { return std::to_string(x.value()); }

        bool operator==(const Context& o) const { return p == o.p; }
        std::string describe() const { return "GF(" + std::to_string(p) + ")"; }
    };

private:
    std::uint64_t v_;
    std::uint64_t p_; // 0 marks the unattached zero

    void merge(const PrimeField& o) {
        if (p_ == 0) p_ = o.p_;
        else if (o.p_ != 0 && o.p_ != p_) throw DomainError("prime field mismatch");
    }
    void normalize() {
        if (v_ == 0) p_ = 0;
    }
    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
};

template <typename K>
concept Field = requires(K a, const K b, const typename K::Context ctx, const std::string s) {
    { a.is_zero() } -> std::convertible_to<bool>;
    { -b };
    { a += b };
    { a *= b };
    { b.inverse() };
    { b.times(2L) };
    { ctx.from_long(1L) };
    { ctx.parse(s) };
    { ctx.format(b) } -> std::convertible_to<std::string>;
};

} // namespace superlie

#endif
