#pragma once

// Hand-written reference data for the anyonic models. Nothing here calls
// the engine's algebra tables: tensors over k[t]/t^3 are kept as maps from
// exponent tuples to scalars and multiplied by adding exponents.

#include <map>
#include <random>
#include <vector>

#include "bgt/cyclotomic.hpp"
#include "bgt/graded.hpp"

namespace fx {

using bgt::Scalar;
using bgt::Vec;

inline Scalar q() { return Scalar::q(3); }
inline Scalar one_q() { return Scalar(1) + q(); }

// ---------------------------------------------------------------- tensors over k[t]/t^3

using Tensor = std::map<std::vector<int>, Scalar>;

inline Tensor mono(std::vector<int> e, const Scalar& c = 1) {
    for (int x : e)
        if (x > 2) return {};
    return {{std::move(e), c}};
}

inline Tensor& operator+=(Tensor& a, const Tensor& b) {
    for (const auto& [k, v] : b) {
        a[k] += v;
        if (a[k].is_zero()) a.erase(k);
    }
    return a;
}
inline Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
inline Tensor operator*(const Scalar& s, const Tensor& a) {
    Tensor r;
    if (s.is_zero()) return r;
    for (const auto& [k, v] : a) r[k] = s * v;
    return r;
}
inline Tensor operator-(Tensor a, const Tensor& b) { return a += Scalar(-1) * b; }

/// d(t^a) = 1 (x) t^a - t^a (x) 1.
inline Tensor d(int a) { return mono({0, a}) - mono({a, 0}); }
/// The element t^a itself.
inline Tensor t(int a) { return mono({a}); }

/// Product of forms: the last factor of u times the first factor of v.
inline Tensor wedge(const Tensor& u, const Tensor& v) {
    Tensor r;
    for (const auto& [a, x] : u)
        for (const auto& [b, y] : v) {
            std::vector<int> e(a.begin(), a.end() - 1);
            e.push_back(a.back() + b.front());
            e.insert(e.end(), b.begin() + 1, b.end());
            r += mono(e, x * y);
        }
    return r;
}
inline Tensor wedge(const Tensor& u, const Tensor& v, const Tensor& w) { return wedge(wedge(u, v), w); }

/// Coordinates in (k[t]/t^3)^{(x)k} with basis 1, t, t^2 and the first factor major.
inline Vec to_vec(const Tensor& x, int k) {
    std::size_t n = 1;
    for (int i = 0; i < k; ++i) n *= 3;
    Vec v(n);
    for (const auto& [e, c] : x) {
        std::size_t idx = 0;
        for (int a : e) idx = idx * 3 + static_cast<std::size_t>(a);
        v[idx] += c;
    }
    return v;
}

// ---------------------------------------------------------------- the anyonic line B = k[xi]/xi^3

/// Delta(xi^k) column in B (x) B.
inline Vec delta(int k) {
    Tensor r;
    if (k == 0) r = mono({0, 0});
    if (k == 1) r = mono({1, 0}) + mono({0, 1});
    if (k == 2) r = mono({2, 0}) + one_q() * mono({1, 1}) + mono({0, 2});
    return to_vec(r, 2);
}
/// S(1) = 1, S(xi) = -xi, S(xi^2) = q xi^2.
inline Vec antipode(int k) {
    const Scalar c[3] = {Scalar(1), Scalar(-1), q()};
    return to_vec(mono({k}, c[k]), 1);
}

// ---------------------------------------------------------------- P = M (x) B, basis theta^a xi^b at index 3a + b

/// theta^a xi^b theta^c xi^d = q^{bc} theta^{a+c} xi^{b+d}.
inline Vec p_product(int a, int b, int c, int e) {
    Vec v(9);
    if (a + c > 2 || b + e > 2) return v;
    v[static_cast<std::size_t>(3 * (a + c) + b + e)] = Scalar::q_power(3, static_cast<long>(b) * c);
    return v;
}

/// The trivial connection of P = M (x) B in P (x) P:
/// omega0(xi) = d xi, omega0(xi^2) = d xi^2 - (1+q) xi d xi.
inline Vec trivial_connection(int k) {
    Vec v(81);
    auto at = [](int a, int b, int c, int e) { return static_cast<std::size_t>((3 * a + b) * 9 + 3 * c + e); };
    if (k == 1) {
        v[at(0, 0, 0, 1)] += 1;
        v[at(0, 1, 0, 0)] -= 1;
    }
    if (k == 2) {
        v[at(0, 0, 0, 2)] += 1;
        v[at(0, 2, 0, 0)] -= 1;
        // -(1+q) xi (1 (x) xi - xi (x) 1)
        v[at(0, 1, 0, 1)] -= one_q();
        v[at(0, 2, 0, 0)] += one_q();
    }
    return v;
}

// ---------------------------------------------------------------- N = k[x]/x^2 and N (x) N

namespace n2 {
inline Vec one() { return {Scalar(1), Scalar(0)}; }
inline Vec x() { return {Scalar(0), Scalar(1)}; }
inline Vec mul(const Vec& a, const Vec& b) { return {a[0] * b[0], a[0] * b[1] + a[1] * b[0]}; }
inline Vec tens(const Vec& a, const Vec& b) {
    Vec r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i * 2 + j] = a[i] * b[j];
    return r;
}
/// c . (n (x) n') = cn (x) n'
inline Vec left(const Vec& c, const Vec& u) {
    Vec r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Vec e(2);
            e[i] = 1;
            const Vec p = mul(c, e);
            for (int k = 0; k < 2; ++k) r[k * 2 + j] += p[k] * u[i * 2 + j];
        }
    return r;
}
/// (n (x) n') . c = n (x) n'c
inline Vec right(const Vec& u, const Vec& c) {
    Vec r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Vec e(2);
            e[j] = 1;
            const Vec p = mul(e, c);
            for (int k = 0; k < 2; ++k) r[i * 2 + k] += p[k] * u[i * 2 + j];
        }
    return r;
}
inline Vec d(const Vec& n) { return bgt::sub(tens(one(), n), tens(n, one())); }
}  // namespace n2

// ---------------------------------------------------------------- random draws

/// Rationals with small numerators and denominators, plus a q-part.
class Draw {
public:
    explicit Draw(unsigned seed) : rng_(seed) {}
    Scalar rational() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
        return Scalar(bgt::Rational(num(rng_), den(rng_)));
    }
    Scalar scalar() { return rational() + rational() * q(); }
    Scalar nonzero() {
        for (;;) {
            Scalar s = scalar();
            if (!s.is_zero()) return s;
        }
    }
    Vec vec(std::size_t n) {
        Vec v(n);
        for (auto& s : v) s = scalar();
        return v;
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937 rng_;
};

}  // namespace fx
