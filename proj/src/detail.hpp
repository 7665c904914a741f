#pragma once

// Small helpers shared by the bundle-level sources.

#include <string>
#include <vector>

#include "bgt/algebra.hpp"
#include "bgt/calculus.hpp"

namespace bgt::detail {

inline std::size_t ipow(std::size_t base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

inline GradedMap id(const GradedSpace& v) { return GradedMap::identity(v); }

inline Vec kron(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

inline std::vector<Vec> columns(const GradedMap& f) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < f.domain().dim(); ++j) cols.push_back(f.column(j));
    return cols;
}

inline Vec flatten(const GradedMap& f) {
    Vec out;
    for (std::size_t j = 0; j < f.domain().dim(); ++j) {
        const Vec c = f.column(j);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

/// x |-> d(f(x)) for f with values in A^{(x)(n+1)}.
inline GradedMap d_after(const Calculus& c, const GradedMap& f, int n) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < f.domain().dim(); ++j) cols.push_back(c.d(f.column(j), n));
    return GradedMap::from_columns(f.domain(), c.power(n + 2), cols);
}

inline Bilinear wedge_op(const Calculus& c, int n, int m) {
    return [&c, n, m](const Vec& u, const Vec& v) { return c.wedge(u, n, v, m); };
}

inline void add_equality(Report& r, const std::string& name, const GradedMap& lhs, const GradedMap& rhs) {
    const auto diff = first_difference(lhs, rhs);
    r.add(name, !diff.has_value(), diff.value_or(""));
}

}  // namespace bgt::detail
