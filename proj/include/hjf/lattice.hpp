// Half-integral Gaussian lattice points and their residue classes.
//
// Fourier indices r of Hermitian Jacobi expansions live in the inverse
// different of Q(i), which as a set is (1/2)Z[i].  We store r in *doubled*
// coordinates: HalfPoint{x, y} means r = (x + i y)/2 with x, y integers.
// N(r) = (x^2 + y^2)/4.
//
// Residue classes modulo m*Z[i] are keyed by Rep{a, b} with a, b reduced into
// [0, 2m): r = (x+iy)/2 and r' = (x'+iy')/2 are congruent mod m*Z[i] exactly
// when x ≡ x' and y ≡ y' (mod 2m).  There are 4m^2 classes.

#pragma once

#include "hjf/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace hjf {

struct HalfPoint {
    long long x = 0, y = 0;  // r = (x + i y)/2

    HalfPoint() = default;
    HalfPoint(long long x_, long long y_) : x(x_), y(y_) {}

    // N(r) as an exact rational (x^2 + y^2)/4.
    Rat norm() const { return rat(x * x + y * y, 4); }

    // 4*N(r), always a non-negative integer.
    long long norm4() const { return x * x + y * y; }

    HalfPoint conj() const { return HalfPoint(x, -y); }

    // Multiplication by i: i*(x+iy)/2 = (-y+ix)/2.
    HalfPoint times_i() const { return HalfPoint(-y, x); }

    // Multiplication by a Gaussian integer a+bi (keeps doubled coordinates integral).
    HalfPoint times(long long a, long long b) const {
        return HalfPoint(a * x - b * y, a * y + b * x);
    }

    HalfPoint operator+(const HalfPoint& o) const { return HalfPoint(x + o.x, y + o.y); }
    HalfPoint operator-() const { return HalfPoint(-x, -y); }

    friend bool operator==(const HalfPoint&, const HalfPoint&) = default;
    auto operator<=>(const HalfPoint& o) const { return std::tie(x, y) <=> std::tie(o.x, o.y); }
};

// Canonical residue class of a HalfPoint modulo m*Z[i]; coordinates in [0, 2m).
struct Rep {
    int a = 0, b = 0;

    Rep() = default;
    Rep(int a_, int b_) : a(a_), b(b_) {}

    friend bool operator==(const Rep&, const Rep&) = default;
    auto operator<=>(const Rep& o) const { return std::tie(a, b) <=> std::tie(o.a, o.b); }
};

inline long long mod_pos(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

inline Rep reduce(const HalfPoint& p, long long m) {
    if (m < 1) throw std::invalid_argument("reduce: index m must be >= 1");
    return Rep(static_cast<int>(mod_pos(p.x, 2 * m)), static_cast<int>(mod_pos(p.y, 2 * m)));
}

// All 4m^2 classes in lexicographic (a, b) order — the deterministic key order
// used everywhere (component maps, JSON, reports).
inline std::vector<Rep> representatives(long long m) {
    if (m < 1) throw std::invalid_argument("representatives: index m must be >= 1");
    std::vector<Rep> out;
    out.reserve(static_cast<size_t>(4 * m * m));
    for (int a = 0; a < 2 * m; ++a)
        for (int b = 0; b < 2 * m; ++b) out.emplace_back(a, b);
    return out;
}

// Class of i^e * s (the unit action on residue classes).
inline Rep unit_index(long e, const Rep& s, long long m) {
    HalfPoint p(s.a, s.b);
    switch (((e % 4) + 4) % 4) {
        case 0: break;
        case 1: p = p.times_i(); break;
        case 2: p = -p; break;
        default: p = -p.times_i(); break;
    }
    return reduce(p, m);
}

// Minimal value of 4*N(r) over the class s (attained at the centered
// representative); used for precision bookkeeping of theta components.
inline long long min_norm4_in_class(const Rep& s, long long m) {
    auto center = [&](long long c) {
        long long v = mod_pos(c, 2 * m);
        return v > m ? v - 2 * m : v;  // representative in (-m, m]
    };
    long long cx = center(s.a), cy = center(s.b);
    return cx * cx + cy * cy;
}

inline std::string rep_to_string(const Rep& s) {
    return std::to_string(s.a) + "," + std::to_string(s.b);
}

inline Rep rep_from_string(const std::string& str) {
    auto comma = str.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("rep_from_string: expected \"a,b\", got '" + str + "'");
    try {
        return Rep(std::stoi(str.substr(0, comma)), std::stoi(str.substr(comma + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("rep_from_string: cannot parse '" + str + "'");
    }
}

}  // namespace hjf
