#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcubics {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

/** Largest integer <= q. */
inline Int floor_rat(const Rat& q) {
    Int n = num(q), d = den(q);
    Int f = n / d;
    if (n < 0 && n % d != 0) f -= 1;
    return f;
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw domain_error("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IVec& a, const QVec& b) {
    if (a.size() != b.size()) throw domain_error("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw domain_error("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/** Divides out the gcd of all entries; the zero vector is left alone. */
inline void make_primitive(IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g <= 1) return;
    for (Int& x : v) x /= g;
}

/** Primitive form whose first nonzero entry is positive; all-zero stays all-zero. */
inline void normalize_signed(IVec& v) {
    make_primitive(v);
    for (const Int& x : v) {
        if (x != 0) {
            if (x < 0)
                for (Int& y : v) y = -y;
            return;
        }
    }
}

/** Clears denominators: returns the primitive integer vector proportional to q. */
inline IVec to_primitive_integer(const QVec& q) {
    Int l = 1;
    for (const Rat& x : q) l = boost::multiprecision::lcm(l, den(x));
    IVec v(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) v[i] = num(q[i]) * (l / den(q[i]));
    make_primitive(v);
    return v;
}

inline QVec to_qvec(const IVec& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = v[i];
    return q;
}

/** Parses "a", "-a" or "a/b" with nonzero b. */
inline Rat parse_rational(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, pos)), d(s.substr(pos + 1));
        if (d == 0) throw domain_error("rational with zero denominator: " + s);
        return Rat(n, d);
    } catch (const std::runtime_error&) {
        throw domain_error("cannot parse rational: '" + s + "'");
    }
}

inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

} // namespace tropcubics
