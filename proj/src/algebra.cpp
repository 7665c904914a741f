#include "bgt/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace bgt {

// ---------------------------------------------------------------- Report

void Report::add(std::string name, bool passed, std::string witness) {
    checks_.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
}

void Report::append(const Report& other) {
    for (const auto& c : other.checks_) {
        CheckResult r = c;
        if (!other.title_.empty()) r.name = other.title_ + ": " + r.name;
        checks_.push_back(std::move(r));
    }
    for (const auto& n : other.notes_) notes_.push_back(n);
}

bool Report::passed() const {
    for (const auto& c : checks_)
        if (!c.passed) return false;
    return true;
}

const CheckResult* Report::find(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

std::string Report::str() const {
    std::ostringstream out;
    if (!title_.empty()) out << "== " << title_ << " ==\n";
    for (const auto& c : checks_) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.passed && !c.witness.empty()) out << " -- witness: " << c.witness;
        out << "\n";
    }
    for (const auto& n : notes_) out << "note: " << n << "\n";
    return out.str();
}

std::optional<std::string> first_difference(const GradedMap& lhs, const GradedMap& rhs) {
    if (lhs.domain() != rhs.domain() || lhs.codomain() != rhs.codomain())
        return std::string("maps have different domain or codomain");
    for (std::size_t j = 0; j < lhs.domain().dim(); ++j) {
        const Vec a = lhs.column(j), b = rhs.column(j);
        if (a != b)
            return "on " + lhs.domain()[j].name + ": " + format_vector(lhs.codomain(), a) + " vs " +
                   format_vector(rhs.codomain(), b);
    }
    return std::nullopt;
}

namespace {

void add_equality(Report& r, const std::string& name, const GradedMap& lhs, const GradedMap& rhs) {
    const auto diff = first_difference(lhs, rhs);
    r.add(name, !diff.has_value(), diff.value_or(""));
}

GradedMap id(const GradedSpace& v) { return GradedMap::identity(v); }

}  // namespace

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(GradedSpace space_, Vec unit_, GradedMap mult_)
    : space(std::move(space_)), unit(std::move(unit_)), mult(std::move(mult_)) {
    if (unit.size() != space.dim()) throw std::invalid_argument("unit vector has the wrong length");
    if (mult.domain() != tensor(space, space) || mult.codomain() != space)
        throw std::invalid_argument("product must map A (x) A to A");
    if (mult.shift() != 0) throw std::logic_error("degree violation: product must preserve degree");
    if (auto d = space.homogeneous_degree(unit); d && *d != 0) throw std::logic_error("degree violation: unit not in degree 0");
    table_.reserve(space.dim() * space.dim());
    for (std::size_t k = 0; k < space.dim() * space.dim(); ++k) table_.push_back(mult.column(k));
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
    const std::size_t n = dim();
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const Vec& col = table_[i * n + j];
            const Scalar c = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!col[k].is_zero()) r[k] += c * col[k];
        }
    }
    return r;
}

GradedMap Algebra::unit_map() const {
    return GradedMap::from_columns(GradedSpace::unit(modulus()), space, {unit});
}

Algebra ground_algebra(int modulus) {
    const GradedSpace k = GradedSpace::unit(modulus);
    Matrix m(1, 1);
    m(0, 0) = 1;
    return Algebra(k, Vec{Scalar(1)}, GradedMap(tensor(k, k), k, m));
}

Algebra braided_tensor_algebra(const Algebra& a, const Algebra& c) {
    const GradedSpace ac = tensor(a.space, c.space);
    const std::size_t na = a.dim(), nc = c.dim(), n = ac.dim();
    const int mod = a.modulus();
    std::vector<Vec> cols(n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nc; ++l) {
                    // (a_i c_j)(a_k c_l) = q^{|c_j||a_k|} a_i a_k (x) c_j c_l
                    const Scalar braid = Scalar::q_power(mod, static_cast<long>(c.space.degree(j)) * a.space.degree(k));
                    const Vec& left = a.basis_product(i, k);
                    const Vec& right = c.basis_product(j, l);
                    Vec col(n);
                    for (std::size_t x = 0; x < na; ++x) {
                        if (left[x].is_zero()) continue;
                        for (std::size_t y = 0; y < nc; ++y)
                            if (!right[y].is_zero()) col[x * nc + y] = braid * left[x] * right[y];
                    }
                    cols[(i * nc + j) * n + (k * nc + l)] = std::move(col);
                }
    Vec unit(n);
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nc; ++y)
            if (!a.unit[x].is_zero() && !c.unit[y].is_zero()) unit[x * nc + y] = a.unit[x] * c.unit[y];
    return Algebra(ac, unit, GradedMap::from_columns(tensor(ac, ac), ac, cols));
}

Hopf ground_hopf(int modulus) {
    Hopf h;
    h.algebra = ground_algebra(modulus);
    const GradedSpace& k = h.algebra.space;
    h.comul = id(k);  // k (x) k = k
    h.counit = id(k);
    h.antipode = id(k);
    h.antipode_inverse = id(k);
    return h;
}

// ---------------------------------------------------------------- checkers

Report check_algebra(const Algebra& a, const std::string& label) {
    Report r(label);
    const GradedSpace& v = a.space;
    const GradedMap& m = a.mult;
    add_equality(r, "associativity", compose(m, tensor_map(m, id(v))), compose(m, tensor_map(id(v), m)));
    const GradedMap eta = a.unit_map();
    add_equality(r, "left unit", compose(m, tensor_map(eta, id(v))), id(v));
    add_equality(r, "right unit", compose(m, tensor_map(id(v), eta)), id(v));
    return r;
}

Report check_coalgebra(const Hopf& h, const std::string& label) {
    Report r(label);
    const GradedSpace& v = h.space();
    add_equality(r, "coassociativity", compose(tensor_map(h.comul, id(v)), h.comul),
                 compose(tensor_map(id(v), h.comul), h.comul));
    add_equality(r, "left counit", compose(tensor_map(h.counit, id(v)), h.comul), id(v));
    add_equality(r, "right counit", compose(tensor_map(id(v), h.counit), h.comul), id(v));
    return r;
}

Report check_hopf(const Hopf& h, const std::string& label) {
    Report r(label);
    const GradedSpace& v = h.space();
    const Algebra& a = h.algebra;
    {
        const Report sub = check_algebra(a, "");
        for (const auto& c : sub.checks()) r.add(c);
    }
    {
        const Report sub = check_coalgebra(h, "");
        for (const auto& c : sub.checks()) r.add(c);
    }

    const Algebra bb = braided_tensor_algebra(a, a);
    add_equality(r, "comultiplication is multiplicative", compose(h.comul, a.mult),
                 compose(bb.mult, tensor_map(h.comul, h.comul)));
    add_equality(r, "comultiplication is unital", compose(h.comul, a.unit_map()), bb.unit_map());
    const GradedSpace k = GradedSpace::unit(h.modulus());
    add_equality(r, "counit is multiplicative", compose(h.counit, a.mult), tensor_map(h.counit, h.counit));
    add_equality(r, "counit is unital", compose(h.counit, a.unit_map()), id(k));

    const GradedMap unit_counit = compose(a.unit_map(), h.counit);
    add_equality(r, "antipode left", compose(a.mult, compose(tensor_map(h.antipode, id(v)), h.comul)), unit_counit);
    add_equality(r, "antipode right", compose(a.mult, compose(tensor_map(id(v), h.antipode), h.comul)), unit_counit);
    if (h.antipode_inverse) {
        add_equality(r, "antipode inverse", compose(*h.antipode_inverse, h.antipode), id(v));
        add_equality(r, "antipode inverse (other side)", compose(h.antipode, *h.antipode_inverse), id(v));
    }
    return r;
}

Report check_coaction(const Coaction& c, const std::string& label) {
    Report r(label);
    const GradedSpace& v = c.carrier;
    const GradedSpace& b = c.hopf.space();
    add_equality(r, "coaction coassociativity", compose(tensor_map(c.rho, id(b)), c.rho),
                 compose(tensor_map(id(v), c.hopf.comul), c.rho));
    add_equality(r, "coaction counit", compose(tensor_map(id(v), c.hopf.counit), c.rho), id(v));
    return r;
}

Report check_comodule_algebra(const Algebra& a, const Coaction& c, const std::string& label) {
    Report r(label);
    {
        const Report sub = check_coaction(c, "");
        for (const auto& x : sub.checks()) r.add(x);
    }
    const Algebra ab = braided_tensor_algebra(a, c.hopf.algebra);
    add_equality(r, "coaction is multiplicative", compose(c.rho, a.mult), compose(ab.mult, tensor_map(c.rho, c.rho)));
    add_equality(r, "coaction is unital", compose(c.rho, a.unit_map()), ab.unit_map());
    return r;
}

// ---------------------------------------------------------------- convolution

GradedMap convolve(const GradedMap& f, const GradedMap& g, const GradedMap& split, const Bilinear& combine,
                   const GradedSpace& target) {
    const std::size_t ng = g.domain().dim();
    if (split.codomain().dim() != f.domain().dim() * ng) throw std::invalid_argument("convolve: split codomain mismatch");
    std::vector<Vec> fcols(f.domain().dim()), gcols(ng);
    for (std::size_t a = 0; a < fcols.size(); ++a) fcols[a] = f.column(a);
    for (std::size_t b = 0; b < ng; ++b) gcols[b] = g.column(b);
    std::vector<Vec> out;
    for (std::size_t j = 0; j < split.domain().dim(); ++j) {
        Vec acc(target.dim());
        const Vec s = split.column(j);
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k].is_zero()) continue;
            const std::size_t a = k / ng, b = k % ng;
            if (is_zero(fcols[a]) || is_zero(gcols[b])) continue;
            axpy(acc, s[k], combine(fcols[a], gcols[b]));
        }
        out.push_back(std::move(acc));
    }
    return GradedMap::from_columns(split.domain(), target, out, f.shift() + g.shift() + split.shift());
}

GradedMap convolution(const GradedMap& f, const GradedMap& g, const Algebra& a, const Hopf& b) {
    return convolve(f, g, b.comul, [&a](const Vec& x, const Vec& y) { return a.multiply(x, y); }, a.space);
}

GradedMap convolution_unit(const Algebra& a, const Hopf& b) { return compose(a.unit_map(), b.counit); }

GradedMap convolution_inverse(const GradedMap& f, const Algebra& a, const Hopf& b) {
    const GradedSpace& dom = b.space();
    const GradedSpace& cod = a.space;
    // Unknowns: the degree-allowed entries of g.
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t i = 0; i < cod.dim(); ++i)
        for (std::size_t j = 0; j < dom.dim(); ++j)
            if (cod.degree(i) == dom.degree(j)) unknowns.emplace_back(i, j);
    const GradedMap target = convolution_unit(a, b);
    const std::size_t rows = cod.dim() * dom.dim();
    auto flatten = [&](const GradedMap& m) {
        Vec v(rows);
        for (std::size_t j = 0; j < dom.dim(); ++j)
            for (std::size_t i = 0; i < cod.dim(); ++i) v[j * cod.dim() + i] = m.matrix()(i, j);
        return v;
    };
    std::vector<Vec> cols;
    for (auto [i, j] : unknowns) {
        Matrix e(cod.dim(), dom.dim());
        e(i, j) = 1;
        cols.push_back(flatten(convolution(f, GradedMap(dom, cod, e), a, b)));
    }
    const auto sol = solve(Matrix::from_columns(rows, cols), flatten(target));
    auto fail = [&]() {
        const Vec f1 = f(b.algebra.unit);
        return NoInverse("no convolution inverse: f(1) = " + format_vector(cod, f1) + " is not invertible");
    };
    if (!sol) throw fail();
    Matrix g(cod.dim(), dom.dim());
    for (std::size_t k = 0; k < unknowns.size(); ++k) g(unknowns[k].first, unknowns[k].second) = (*sol)[k];
    GradedMap inv(dom, cod, g);
    if (convolution(inv, f, a, b) != target) throw fail();
    return inv;
}

// ---------------------------------------------------------------- coactions

Coaction adjoint_coaction(const Hopf& h) {
    const GradedSpace& v = h.space();
    GradedMap m = compose(tensor_map(h.comul, id(v)), h.comul);
    m = compose(tensor_map(braiding(v, v), id(v)), m);
    m = compose(tensor_map(id(v), tensor_map(h.antipode, id(v))), m);
    m = compose(tensor_map(id(v), h.algebra.mult), m);
    return Coaction{v, h, m};
}

Coaction regular_coaction(const Hopf& h) { return Coaction{h.space(), h, h.comul}; }

Coaction trivial_coaction(const GradedSpace& v, const Hopf& h) {
    return Coaction{v, h, tensor_map(id(v), h.algebra.unit_map())};
}

Coaction anyonic_comodule(const GradedSpace& v, const GradedMap& beta, const Hopf& line) {
    if (v.modulus() != 3 || line.modulus() != 3) throw std::invalid_argument("anyonic comodules are defined for n = 3");
    if (beta.domain() != v || beta.codomain() != v || beta.shift() != 2)
        throw std::invalid_argument("beta must be a degree -1 endomorphism");
    const GradedMap beta2 = compose(beta, beta);
    if (compose(beta, beta2).matrix() != Matrix(v.dim(), v.dim()))
        throw std::invalid_argument("invalid comodule data: beta^3 != 0");
    const GradedSpace& b = line.space();
    std::optional<std::size_t> gen;
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (b.degree(i) == 1) {
            if (gen) throw std::invalid_argument("structure group has more than one degree-1 generator");
            gen = i;
        }
    if (!gen) throw std::invalid_argument("structure group has no degree-1 generator");
    const Vec xi = b.basis_vector(*gen);
    const Vec xi2 = line.algebra.multiply(xi, xi);
    const Scalar inv1q = (Scalar(1) + Scalar::q(3)).inverse();
    const GradedSpace vb = tensor(v, b);
    std::vector<Vec> cols;
    auto put = [&](Vec& out, const Vec& x, const Vec& y, const Scalar& c) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.size(); ++j)
                if (!y[j].is_zero()) out[i * b.dim() + j] += c * x[i] * y[j];
        }
    };
    for (std::size_t j = 0; j < v.dim(); ++j) {
        Vec out(vb.dim());
        const Vec e = v.basis_vector(j);
        put(out, e, line.algebra.unit, Scalar(1));
        put(out, beta(e), xi, Scalar(1));
        put(out, beta2(e), xi2, inv1q);
        cols.push_back(std::move(out));
    }
    return Coaction{v, line, GradedMap::from_columns(v, vb, cols)};
}

Vec coact_tensor(const std::vector<const Coaction*>& factors, const Vec& x) {
    if (factors.empty()) throw std::invalid_argument("coact_tensor: no factors");
    const Hopf& h = factors.front()->hopf;
    const std::size_t nb = h.dim();
    const int n = h.modulus();
    std::vector<std::size_t> dims;
    std::size_t total = 1;
    for (auto* f : factors) {
        dims.push_back(f->carrier.dim());
        total *= f->carrier.dim();
    }
    if (x.size() != total) throw std::invalid_argument("coact_tensor: vector length mismatch");

    // Sparse columns of each rho: (carrier index, B index, coefficient).
    struct Entry {
        std::size_t v, b;
        Scalar c;
    };
    std::vector<std::vector<std::vector<Entry>>> cols(factors.size());
    for (std::size_t t = 0; t < factors.size(); ++t) {
        const auto& rho = factors[t]->rho;
        cols[t].resize(dims[t]);
        for (std::size_t j = 0; j < dims[t]; ++j)
            for (std::size_t r = 0; r < rho.codomain().dim(); ++r) {
                const Scalar& c = rho.matrix()(r, j);
                if (!c.is_zero()) cols[t][j].push_back({r / nb, r % nb, c});
            }
    }

    struct Term {
        std::size_t prefix;
        Vec b;
        int bdeg;
        Scalar c;
    };
    Vec out(total * nb);
    std::vector<std::size_t> idx(factors.size());
    for (std::size_t flat = 0; flat < total; ++flat) {
        if (x[flat].is_zero()) continue;
        std::size_t rem = flat;
        for (std::size_t t = factors.size(); t-- > 0;) {
            idx[t] = rem % dims[t];
            rem /= dims[t];
        }
        std::vector<Term> terms{{0, h.algebra.unit, 0, x[flat]}};
        for (std::size_t t = 0; t < factors.size(); ++t) {
            std::vector<Term> next;
            for (const auto& term : terms)
                for (const auto& e : cols[t][idx[t]]) {
                    const int vdeg = factors[t]->carrier.degree(e.v);
                    const int edeg = h.space().degree(e.b);
                    // the accumulated B-part braids past the new carrier factor
                    const Scalar braid = Scalar::q_power(n, static_cast<long>(term.bdeg) * vdeg);
                    Vec nbv = h.algebra.multiply(term.b, h.space().basis_vector(e.b));
                    if (is_zero(nbv)) continue;
                    next.push_back({term.prefix * dims[t] + e.v, std::move(nbv), (term.bdeg + edeg) % n,
                                    term.c * e.c * braid});
                }
            terms = std::move(next);
        }
        for (const auto& term : terms)
            for (std::size_t k = 0; k < nb; ++k)
                if (!term.b[k].is_zero()) out[term.prefix * nb + k] += term.c * term.b[k];
    }
    return out;
}

Coaction tensor_coaction(const std::vector<const Coaction*>& factors) {
    GradedSpace carrier = factors.front()->carrier;
    for (std::size_t t = 1; t < factors.size(); ++t) carrier = tensor(carrier, factors[t]->carrier);
    const Hopf& h = factors.front()->hopf;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < carrier.dim(); ++j) cols.push_back(coact_tensor(factors, carrier.basis_vector(j)));
    return Coaction{carrier, h, GradedMap::from_columns(carrier, tensor(carrier, h.space()), cols)};
}

}  // namespace bgt
