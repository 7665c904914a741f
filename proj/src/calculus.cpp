#include "bgt/calculus.hpp"

#include <optional>
#include <stdexcept>

namespace bgt {

namespace {

std::size_t ipow(std::size_t base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

std::size_t FormSpace::dim_in_degree(int d) const {
    const GradedSpace& amb = carrier.ambient();
    const int n = amb.modulus();
    const int dd = ((d % n) + n) % n;
    std::size_t count = 0;
    for (const auto& row : carrier.basis())
        if (amb.homogeneous_degree(row) == dd) ++count;
    return count;
}

Calculus::Calculus(Algebra p) : p_(std::move(p)) {}

const GradedSpace& Calculus::power(int k) const {
    if (k < 1) throw std::invalid_argument("tensor power must be at least 1");
    std::lock_guard lock(mutex_);
    auto it = powers_.find(k);
    if (it != powers_.end()) return *it->second;
    GradedSpace s = tensor_power(p_.space, k);
    auto [pos, inserted] = powers_.emplace(k, std::make_unique<GradedSpace>(std::move(s)));
    return *pos->second;
}

Vec Calculus::d(const Vec& u, int n) const {
    const std::size_t D = dim();
    if (u.size() != ipow(D, n + 1)) throw std::invalid_argument("d: vector is not in the stated tensor power");
    Vec out(ipow(D, n + 2));
    for (std::size_t idx = 0; idx < u.size(); ++idx) {
        if (u[idx].is_zero()) continue;
        for (int slot = 0; slot <= n + 1; ++slot) {
            // split idx into (head: first `slot` factors, tail: the remaining n+1-slot)
            const std::size_t tail_size = ipow(D, n + 1 - slot);
            const std::size_t head = idx / tail_size, tail = idx % tail_size;
            for (std::size_t e = 0; e < D; ++e) {
                if (p_.unit[e].is_zero()) continue;
                const Scalar c = (slot % 2 == 0 ? u[idx] : -u[idx]) * p_.unit[e];
                out[(head * D + e) * tail_size + tail] += c;
            }
        }
    }
    return out;
}

Vec Calculus::wedge(const Vec& u, int n, const Vec& v, int m) const {
    const std::size_t D = dim();
    if (u.size() != ipow(D, n + 1) || v.size() != ipow(D, m + 1))
        throw std::invalid_argument("wedge: vectors are not in the stated tensor powers");
    const std::size_t tail_size = ipow(D, m);
    Vec out(ipow(D, n + m + 1));
    for (std::size_t iu = 0; iu < u.size(); ++iu) {
        if (u[iu].is_zero()) continue;
        const std::size_t prefix = iu / D, a = iu % D;
        for (std::size_t iv = 0; iv < v.size(); ++iv) {
            if (v[iv].is_zero()) continue;
            const std::size_t b = iv / tail_size, suffix = iv % tail_size;
            const Vec& prod = p_.basis_product(a, b);
            const Scalar c = u[iu] * v[iv];
            for (std::size_t k = 0; k < D; ++k)
                if (!prod[k].is_zero()) out[(prefix * D + k) * tail_size + suffix] += c * prod[k];
        }
    }
    return out;
}

Vec Calculus::left(const Vec& p, const Vec& u, int n) const { return wedge(p, 0, u, n); }

Vec Calculus::right(const Vec& u, int n, const Vec& p) const { return wedge(u, n, p, 0); }

GradedMap Calculus::adjacent_product(int n, int i) const {
    if (n < 1 || i < 0 || i >= n) throw std::invalid_argument("adjacent_product: slot out of range");
    const GradedSpace unit = GradedSpace::unit(p_.modulus());
    const GradedSpace& before = i == 0 ? unit : power(i);
    const GradedSpace& after = n - 1 - i == 0 ? unit : power(n - 1 - i);
    return tensor_map(GradedMap::identity(before), tensor_map(p_.mult, GradedMap::identity(after)));
}

GradedMap Calculus::d_map(int n) const {
    const GradedSpace& dom = power(n + 1);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dom.dim(); ++j) cols.push_back(d(dom.basis_vector(j), n));
    return GradedMap::from_columns(dom, power(n + 2), cols);
}

const FormSpace& Calculus::omega(int n) const {
    if (n < 0) throw std::invalid_argument("form degree must be non-negative");
    {
        std::lock_guard lock(mutex_);
        auto it = forms_.find(n);
        if (it != forms_.end()) return *it->second;
    }
    auto fs = std::make_unique<FormSpace>();
    fs->calculus = this;
    fs->degree = n;
    if (n == 0) {
        fs->carrier = Subspace::whole(p_.space);
    } else {
        std::vector<GradedMap> maps;
        for (int i = 0; i < n; ++i) maps.push_back(adjacent_product(n, i));
        fs->carrier = joint_kernel(maps);
    }
    std::lock_guard lock(mutex_);
    auto [pos, inserted] = forms_.emplace(n, std::move(fs));
    return *pos->second;
}

Form Calculus::form(const Vec& ambient, int n) const {
    const FormSpace& fs = omega(n);
    auto c = fs.carrier.coordinates(ambient);
    if (!c) throw std::logic_error("vector is not a form of degree " + std::to_string(n));
    return Form{&fs, std::move(*c)};
}

Vec Calculus::exact_monomial(const std::vector<Vec>& factors) const {
    if (factors.empty()) throw std::invalid_argument("exact_monomial needs at least one factor");
    Vec u = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k)
        u = wedge(u, static_cast<int>(k) - 1, d(factors[k], 0), 1);
    return u;
}

Vec Calculus::extend(const std::function<Vec(std::size_t)>& h_on_basis, const Vec& u, int n) const {
    const std::size_t D = dim();
    if (u.size() != ipow(D, n + 1)) throw std::invalid_argument("extend: vector is not in the stated tensor power");
    std::vector<Vec> h(D);
    std::vector<bool> have(D, false);
    Vec out(u.size());
    std::vector<std::size_t> digits(static_cast<std::size_t>(n) + 1);
    for (std::size_t idx = 0; idx < u.size(); ++idx) {
        if (u[idx].is_zero()) continue;
        std::size_t rem = idx;
        for (int t = n; t >= 0; --t) {
            digits[t] = rem % D;
            rem /= D;
        }
        Vec acc = p_.space.basis_vector(digits[0]);
        for (int t = 1; t <= n; ++t) {
            const std::size_t x = digits[t];
            if (!have[x]) {
                h[x] = h_on_basis(x);
                have[x] = true;
            }
            acc = wedge(acc, t - 1, h[x], 1);
        }
        axpy(out, u[idx], acc);
    }
    return out;
}

Subspace Calculus::base_forms_right(const GradedMap& incl, int n) const {
    const std::size_t dm = incl.domain().dim();
    std::vector<Vec> ms;
    for (std::size_t i = 0; i < dm; ++i) ms.push_back(incl.column(i));
    std::vector<Vec> monomials;
    const std::size_t count = ipow(dm, n + 1);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<Vec> factors(static_cast<std::size_t>(n) + 1);
        std::size_t rem = idx;
        for (int t = n; t >= 0; --t) {
            factors[t] = ms[rem % dm];
            rem /= dm;
        }
        Vec mono = exact_monomial(factors);
        if (!is_zero(mono)) monomials.push_back(std::move(mono));
    }
    const Subspace base = Subspace::span(power(n + 1), monomials);
    std::vector<Vec> gens;
    for (const auto& b : base.basis())
        for (std::size_t p = 0; p < dim(); ++p) gens.push_back(right(b, n, p_.space.basis_vector(p)));
    return Subspace::span(power(n + 1), std::move(gens));
}

Subspace Calculus::base_forms_both(const GradedMap& incl, int n) const {
    const Subspace r = base_forms_right(incl, n);
    std::vector<Vec> gens;
    for (const auto& b : r.basis())
        for (std::size_t p = 0; p < dim(); ++p) gens.push_back(left(p_.space.basis_vector(p), b, n));
    return Subspace::span(power(n + 1), std::move(gens));
}

Horizontal horizontal_subspaces(const Calculus& p, const GradedMap& incl) {
    return Horizontal{p.base_forms_both(incl, 1), p.base_forms_right(incl, 1)};
}


std::string format_form(const Calculus& c, const Vec& u, int n) {
    const Algebra& a = c.algebra();
    const std::size_t D = a.dim();
    std::optional<std::size_t> unit;
    for (std::size_t i = 0; i < D; ++i)
        if (a.space.basis_vector(i) == a.unit) unit = i;
    if (!unit) return format_vector(c.power(n + 1), u);

    // On Omega^n the coefficient of m0 dm1 ... dmn is the coefficient of
    // m0 (x) m1 (x) ... (x) mn, read off with m1..mn non-unit.
    std::string out;
    std::vector<std::size_t> digits(static_cast<std::size_t>(n) + 1);
    for (std::size_t idx = 0; idx < u.size(); ++idx) {
        if (u[idx].is_zero()) continue;
        std::size_t rem = idx;
        for (int t = n; t >= 0; --t) {
            digits[t] = rem % D;
            rem /= D;
        }
        bool basis_term = true;
        for (int t = 1; t <= n; ++t)
            if (digits[t] == *unit) basis_term = false;
        if (!basis_term) continue;

        std::string mono;
        if (digits[0] != *unit) mono = a.space[digits[0]].name;
        for (int t = 1; t <= n; ++t) {
            const std::string& name = a.space[digits[t]].name;
            const bool compound = name.find('.') != std::string::npos;
            mono += (mono.empty() ? "d" : " d") + (compound ? "(" + name + ")" : name);
        }
        std::string coef = u[idx].str();
        const bool compound = coef.find_first_of("+-", 1) != std::string::npos;
        const bool negative = !compound && coef[0] == '-';
        if (negative) coef = coef.substr(1);
        if (compound) coef = "(" + coef + ")";
        if (coef == "1" && !mono.empty()) coef.clear();
        const std::string term = mono.empty() ? coef : (coef.empty() ? mono : coef + " " + mono);
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace bgt
