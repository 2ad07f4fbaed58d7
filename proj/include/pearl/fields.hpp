#pragma once

// Exact coefficient fields: GF(2) and arbitrary-precision rationals.
// Every computation in the library runs over one of these; there is no
// floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace pearl {

enum class BaseField { GF2, Rational };

struct Gf2 {
    bool v = false;

    Gf2() = default;
    explicit constexpr Gf2(bool b) : v(b) {}

    static constexpr Gf2 zero() { return Gf2(false); }
    static constexpr Gf2 one() { return Gf2(true); }
    static Gf2 from_int(long long n) { return Gf2((n & 1) != 0); }
    static constexpr BaseField tag() { return BaseField::GF2; }

    bool is_zero() const { return !v; }
    bool is_one() const { return v; }

    friend Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.v != b.v); }
    friend Gf2 operator-(Gf2 a, Gf2 b) { return a + b; }
    friend Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.v && b.v); }
    friend Gf2 operator/(Gf2 a, Gf2 b) {
        if (!b.v)
            throw std::domain_error("GF(2): division by zero");
        return a;
    }
    Gf2 operator-() const { return *this; }
    Gf2& operator+=(Gf2 o) { v = (v != o.v); return *this; }
    friend bool operator==(Gf2 a, Gf2 b) { return a.v == b.v; }

    std::string str() const { return v ? "1" : "0"; }
};

struct Rat {
    boost::multiprecision::cpp_rational v;

    Rat() = default;
    explicit Rat(boost::multiprecision::cpp_rational q) : v(std::move(q)) {}
    Rat(long long num, long long den) : v(num, den) {}

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1, 1); }
    static Rat from_int(long long n) { return Rat(n, 1); }
    static constexpr BaseField tag() { return BaseField::Rational; }

    bool is_zero() const { return v.is_zero(); }
    bool is_one() const { return v == 1; }
    bool is_integer() const { return boost::multiprecision::denominator(v) == 1; }

    // Mod-2 reduction of an integer value; rejects non-integers.
    Gf2 mod2() const {
        if (!is_integer())
            throw std::domain_error("mod-2 reduction of a non-integer rational");
        return Gf2(boost::multiprecision::numerator(v) % 2 != 0);
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v + b.v); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v - b.v); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v * b.v); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero())
            throw std::domain_error("rational division by zero");
        return Rat(a.v / b.v);
    }
    Rat operator-() const { return Rat(-v); }
    Rat& operator+=(const Rat& o) { v += o.v; return *this; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }

    std::string str() const {
        std::ostringstream os;
        os << v;
        return os.str();
    }
};

}  // namespace pearl
