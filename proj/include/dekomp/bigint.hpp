#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dekomp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(Int a, Int b) {
    a = int_abs(a);
    b = int_abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// g = gcd(a,b) together with x,y such that a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return int_abs(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, Int(a % b), x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Inverse of a modulo m (m >= 2), or false if gcd(a,m) != 1.
inline bool mod_inverse(const Int& a, const Int& m, Int& out) {
    Int x, y;
    Int g = ext_gcd(a, m, x, y);
    if (g != 1) return false;
    out = ((x % m) + m) % m;
    return true;
}

inline bool is_prime_int(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace dekomp
