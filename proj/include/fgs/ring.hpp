#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace fgs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

/// Representative of a mod m in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// g = gcd(a,b) together with x, y such that a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return boost::multiprecision::abs(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Modular inverse of a mod m; a must be a unit.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = ext_gcd(mod_floor(a, m), m, x, y);
    if (g != 1) throw error("mod_inverse: not a unit");
    return mod_floor(x, m);
}

enum class RingKind { Integers, IntegersMod, Rationals };

/// Base ring of all scalar arithmetic: Z, Z/m (m >= 2) or Q. Values of the
/// ring are held as Rat with a canonical representative: integer (denominator
/// one) for Z and Z/m, with mod-m entries in [0, m).
class RingSpec {
public:
    RingSpec() : kind_(RingKind::Integers), m_(0) {}

    static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
    static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
    static RingSpec integers_mod(Int m) {
        if (m < 2) throw error("IntegersMod requires modulus >= 2");
        return RingSpec(RingKind::IntegersMod, std::move(m));
    }

    RingKind kind() const { return kind_; }
    bool is_integers() const { return kind_ == RingKind::Integers; }
    bool is_mod() const { return kind_ == RingKind::IntegersMod; }
    bool is_rationals() const { return kind_ == RingKind::Rationals; }
    const Int& modulus() const { return m_; }

    Int characteristic() const { return is_mod() ? m_ : Int(0); }
    bool is_field() const { return is_rationals() || (is_mod() && is_prime(m_)); }

    bool operator==(const RingSpec& o) const { return kind_ == o.kind_ && m_ == o.m_; }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

    std::string name() const {
        switch (kind_) {
            case RingKind::Integers: return "Z";
            case RingKind::Rationals: return "Q";
            case RingKind::IntegersMod: return "Z/" + m_.str();
        }
        return "?";
    }

    Rat canonical(const Rat& x) const {
        switch (kind_) {
            case RingKind::Rationals:
                return x;
            case RingKind::Integers:
                if (rat_den(x) != 1) throw error("non-integer scalar over Z");
                return x;
            case RingKind::IntegersMod: {
                if (rat_den(x) != 1) throw error("non-integer scalar over Z/m");
                return Rat(mod_floor(rat_num(x), m_));
            }
        }
        return x;
    }

    Rat add(const Rat& a, const Rat& b) const { return canonical(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return canonical(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return canonical(a * b); }
    Rat neg(const Rat& a) const { return canonical(-a); }

    bool is_unit(const Rat& a) const {
        switch (kind_) {
            case RingKind::Rationals: return a != 0;
            case RingKind::Integers: return a == 1 || a == -1;
            case RingKind::IntegersMod: return gcd(rat_num(a), m_) == 1;
        }
        return false;
    }

    Rat inverse(const Rat& a) const {
        switch (kind_) {
            case RingKind::Rationals:
                if (a == 0) throw error("division by zero");
                return 1 / a;
            case RingKind::Integers:
                if (a == 1 || a == -1) return a;
                throw error("not a unit in Z");
            case RingKind::IntegersMod:
                return Rat(mod_inverse(rat_num(a), m_));
        }
        throw error("inverse: bad ring");
    }

    /// n viewed in this ring: does n lie in the ideal generated by d?
    /// Over Z: d | n (d = 0 only divides 0). Over Z/m: gcd(d, m) | n.
    /// Over Q: every nonzero d generates (1); the zero ideal holds only 0.
    bool in_ideal(const Int& n, const Int& d) const {
        switch (kind_) {
            case RingKind::Rationals: return d != 0 || n == 0;
            case RingKind::Integers: return d == 0 ? n == 0 : n % d == 0;
            case RingKind::IntegersMod: {
                Int g = d == 0 ? m_ : gcd(d, m_);
                return mod_floor(n, m_) % g == 0;
            }
        }
        return false;
    }

private:
    RingSpec(RingKind k, Int m) : kind_(k), m_(std::move(m)) {}

    RingKind kind_;
    Int m_;
};

}  // namespace fgs
