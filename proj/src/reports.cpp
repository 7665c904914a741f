#include "bgt/reports.hpp"

#include <algorithm>
#include <sstream>

#include "bgt/associated.hpp"
#include "bgt/models.hpp"

namespace bgt {

// ---------------------------------------------------------------- parameters

std::map<std::string, std::string> parse_params(const std::string& text, const std::vector<std::string>& required) {
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw InputError("parameter '" + item + "' is not of the form name=value");
        const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (std::find(required.begin(), required.end(), key) == required.end())
            throw InputError("unknown parameter '" + key + "'");
        if (!out.emplace(key, value).second) throw InputError("parameter '" + key + "' given twice");
    }
    std::string missing;
    for (const auto& r : required)
        if (!out.count(r)) missing += (missing.empty() ? "" : ", ") + r;
    if (!missing.empty()) throw InputError("missing parameters: " + missing);
    return out;
}

Vec parse_coordinates(const std::string& text, std::size_t dim, int modulus) {
    Vec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) v.push_back(parse_literal(item, modulus));
    if (!text.empty() && text.back() == ':') throw InputError("trailing ':' in '" + text + "'");
    if (v.size() != dim)
        throw InputError("'" + text + "' has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(dim));
    return v;
}

const std::vector<std::string>& anyonic_param_names() {
    static const std::vector<std::string> names{"a1", "a2", "b1", "b2", "c1", "c2", "s0", "s1", "s2"};
    return names;
}

const std::vector<std::string>& composite_param_names() {
    static const std::vector<std::string> names{"A1", "A2", "a1", "a2", "b1", "b2", "c1",
                                                "c2", "s0", "s1", "s2", "a",  "b"};
    return names;
}

namespace {

Scalar scalar_param(const std::map<std::string, std::string>& p, const std::string& name) {
    try {
        return parse_literal(p.at(name), 3);
    } catch (const std::out_of_range&) {
        throw InputError("missing parameter '" + name + "'");
    } catch (const std::exception& e) {
        throw InputError("parameter " + name + ": " + e.what());
    }
}

Vec vector_param(const std::map<std::string, std::string>& p, const std::string& name, std::size_t dim) {
    try {
        return parse_coordinates(p.at(name), dim, 3);
    } catch (const InputError& e) {
        throw InputError("parameter " + name + ": " + e.what());
    } catch (const std::out_of_range&) {
        throw InputError("missing parameter '" + name + "'");
    } catch (const std::exception& e) {
        throw InputError("parameter " + name + ": " + e.what());
    }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Collects cross-checks; the first failure decides the exit code.
class CrossChecks {
public:
    void add(std::ostream& out, const std::string& name, bool ok) {
        out << name << ": " << yes_no(ok) << "\n";
        if (!ok) failed_.push_back(name);
    }
    int finish(std::ostream& out) const {
        if (failed_.empty()) {
            out << "\nall cross-checks passed\n";
            return 0;
        }
        for (const auto& f : failed_) out << "\nCROSS-CHECK FAILED: " << f;
        out << "\n";
        return 1;
    }

private:
    std::vector<std::string> failed_;
};

/// Prints f(b) for every basis element b of B except the unit.
void print_map(std::ostream& out, const Calculus& c, const std::string& label, const GradedMap& f, int n) {
    for (std::size_t i = 1; i < f.domain().dim(); ++i)
        out << label << "(" << f.domain()[i].name << ") = " << format_form(c, f.column(i), n) << "\n";
}

void print_section(std::ostream& out, const Calculus& c, const std::string& label, const GradedMap& f, int n) {
    for (std::size_t i = 0; i < f.domain().dim(); ++i)
        out << label << "(" << f.domain()[i].name << ") = " << format_form(c, f.column(i), n) << "\n";
}

std::string tuple(const std::vector<Scalar>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
    return s + ")";
}

/// Rank of the tangent map of gamma |-> 0^gamma at the identity, i.e. of
/// delta |-> d o delta on degree-preserving delta : B -> M with delta(1) = 0.
std::size_t zero_orbit_dimension(const Calculus& c, const Hopf& b) {
    const Algebra& m = c.algebra();
    std::vector<Vec> images;
    for (std::size_t j = 0; j < b.dim(); ++j) {
        if (b.space()[j].name == "1") continue;
        for (std::size_t i = 0; i < m.dim(); ++i) {
            if (m.space.degree(i) != b.space().degree(j)) continue;
            Vec col(b.dim() * c.power(2).dim());
            const Vec dv = c.d(m.space.basis_vector(i), 0);
            std::copy(dv.begin(), dv.end(), col.begin() + static_cast<long>(j * dv.size()));
            images.push_back(std::move(col));
        }
    }
    if (images.empty()) return 0;
    return rank(Matrix::from_columns(images.front().size(), images));
}

}  // namespace

// ---------------------------------------------------------------- anyonic

ReportOutput anyonic_report(const std::map<std::string, std::string>& params) {
    const Scalar a1 = scalar_param(params, "a1"), a2 = scalar_param(params, "a2"), b1 = scalar_param(params, "b1"),
                 b2 = scalar_param(params, "b2"), c1 = scalar_param(params, "c1"), c2 = scalar_param(params, "c2"),
                 s0 = scalar_param(params, "s0"), s1 = scalar_param(params, "s1"), s2 = scalar_param(params, "s2");

    const AnyonicModel model;
    const Calculus& c = model.calc();
    const Hopf& b = model.B();
    std::ostringstream out;
    CrossChecks checks;

    out << "anyonic line bundle over M = k[theta]/theta^3 with B = k[xi]/xi^3, q^3 = 1\n";
    out << "parameters:";
    for (const auto& name : anyonic_param_names()) out << " " << name << "=" << scalar_param(params, name).str();
    out << "\n\n[1-forms on M]\n";
    const FormSpace& o1 = c.omega(1);
    out << "dim Omega^1 M = " << o1.carrier.dim() << "\n";
    std::vector<Vec> monomials;
    for (std::size_t j = 0; j < c.dim(); ++j) {
        if (model.M().space[j].name == "1") continue;
        for (std::size_t i = 0; i < c.dim(); ++i) {
            const Vec u = c.exact_monomial({model.M().space.basis_vector(i), model.M().space.basis_vector(j)});
            out << "  " << format_form(c, u, 1) << "\n";
            monomials.push_back(u);
        }
    }
    checks.add(out, "the monomials m dm' form a basis",
               monomials.size() == o1.carrier.dim() && Subspace::span(c.power(2), monomials) == o1.carrier);

    out << "\n[gauge field]\n";
    const GradedMap a = model.field(a1, a2, b1, b2);
    print_map(out, c, "A", a, 1);

    out << "\n[curvature]\n";
    const GradedMap f = curvature(c, b, a);
    print_map(out, c, "F", f, 2);
    const bool flat = is_zero(f.matrix().column(1)) && is_zero(f.matrix().column(2));
    const auto to_zero = gauge_to_zero(c, b, a);
    const bool reaches_zero = to_zero && transform_field(c, b, a, *to_zero) == GradedMap::zero(b.space(), c.power(2));
    out << "FLAT: " << yes_no(flat) << "; gauge-equivalent to zero field: " << yes_no(reaches_zero) << "\n";
    const GradedMap bianchi = bianchi_residual(c, b, a);
    checks.add(out, "Bianchi identity dF + A*F - F*A = 0", bianchi == GradedMap::zero(b.space(), bianchi.codomain()));
    checks.add(out, "a flat field is gauge-equivalent to zero", !flat || reaches_zero);
    checks.add(out, "a field gauge-equivalent to zero is flat", !reaches_zero || flat);

    out << "\n[gauge transformation]\n";
    const GradedMap gamma = model.gauge(c1, c2);
    print_section(out, c, "gamma", gamma, 0);
    const GradedMap ag = transform_field(c, b, a, gamma);
    print_map(out, c, "A^gamma", ag, 1);
    const auto comp = model.field_components(ag);
    out << "A^gamma components (a1, a2, b1, b2) = " << tuple({comp[0], comp[1], comp[2], comp[3]}) << "\n";
    const auto sq = model.gauge_components(gauge_compose(model.M(), b, gamma, gamma));
    const auto inv = model.gauge_components(gauge_inverse(model.M(), b, gamma));
    out << "gamma * gamma = " << tuple({sq[0], sq[1]}) << "\n";
    out << "gamma^{-1} = " << tuple({inv[0], inv[1]}) << "\n";
    checks.add(out, "(A^gamma)^{gamma^{-1}} = A",
               transform_field(c, b, ag, gauge_inverse(model.M(), b, gamma)) == a);
    {
        const GradedMap gi = gauge_inverse(model.M(), b, gamma);
        const auto left = [&](const Vec& x, const Vec& y) { return c.left(x, y, 2); };
        const auto right = [&](const Vec& x, const Vec& y) { return c.right(x, 2, y); };
        const GradedMap conjugated = convolve(convolve(gi, f, b.comul, left, c.power(3)), gamma, b.comul, right, c.power(3));
        checks.add(out, "F^gamma = gamma^{-1} * F * gamma", curvature(c, b, ag) == conjugated);
    }

    out << "\n[canonical form]\n";
    const auto canon = model.canonical_form(a);
    const auto gc = model.gauge_components(canon.gamma);
    const auto rc = model.field_components(canon.representative);
    out << "gamma = " << tuple({gc[0], gc[1]}) << "\n";
    out << "representative (a1, a2, b1, b2) = " << tuple({rc[0], rc[1], rc[2], rc[3]}) << "\n";
    checks.add(out, "representative has a1 = b1 = 0", rc[0].is_zero() && rc[2].is_zero());

    out << "\n[moduli]\n";
    const std::size_t field_dim = gauge_field_dimension(c, b), group_dim = gauge_group_dimension(model.M(), b);
    const std::size_t orbit = zero_orbit_dimension(c, b);
    out << "gauge fields: " << field_dim << "-dimensional\n";
    out << "gauge group: " << group_dim << "-dimensional\n";
    out << "orbit of the zero field: " << orbit << "-dimensional, stabilizer " << group_dim - orbit
        << "-dimensional\n";

    out << "\n[sections of the coregular bundle]\n";
    const FiberComodule fr = coregular_fiber(b);
    const GradedMap sigma = model.section(s0, s1, s2);
    print_section(out, c, "sigma", sigma, 0);
    const GradedMap ns = nabla(c, fr, sigma, 0, a);
    print_section(out, c, "nabla sigma", ns, 1);
    const GradedMap sg = transform_section(c, fr, sigma, 0, gamma);
    const auto sgc = model.section_components(sg);
    out << "sigma^gamma (s0, s1, s2) = " << tuple({sgc[0], sgc[1], sgc[2]}) << "\n";
    checks.add(out, "covariance nabla^gamma sigma^gamma = (nabla sigma)^gamma",
               nabla(c, fr, sg, 0, ag) == transform_section(c, fr, ns, 1, gamma));
    checks.add(out, "nabla^2 sigma = -sigma * F",
               nabla(c, fr, ns, 1, a) == Scalar(-1) * section_times(c, fr, sigma, 0, f, 2));

    const int code = checks.finish(out);
    return {out.str(), code};
}

// ---------------------------------------------------------------- composite

ReportOutput composite_report(const Algebra& n, const std::map<std::string, std::string>& params) {
    const std::size_t dn = n.dim(), dnn = dn * dn;
    std::optional<CompositeModel> model;
    try {
        model.emplace(n);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    CompositeModel::Field field{vector_param(params, "A1", dnn), vector_param(params, "A2", dnn),
                                vector_param(params, "a1", dnn), vector_param(params, "a2", dnn),
                                vector_param(params, "b1", dnn), vector_param(params, "b2", dnn)};
    const Vec c1 = vector_param(params, "c1", dn), c2 = vector_param(params, "c2", dn);
    const Vec s0 = vector_param(params, "s0", dn), s1 = vector_param(params, "s1", dn), s2 = vector_param(params, "s2", dn);
    const Vec fa = vector_param(params, "a", dn), fb = vector_param(params, "b", dn);

    const Calculus& c = model->calc();
    const Calculus& cn = model->calc_N();
    const Hopf& b = model->B();
    const GradedSpace nn = tensor(n.space, n.space);
    std::ostringstream out;
    CrossChecks checks;

    GradedMap a;
    try {
        a = model->field(field);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }

    auto print_field = [&](const CompositeModel::Field& x) {
        out << "A1 = " << format_form(cn, x.A1, 1) << "\n";
        out << "A2 = " << format_form(cn, x.A2, 1) << "\n";
        out << "a1 = " << format_vector(nn, x.a1) << "\n";
        out << "a2 = " << format_vector(nn, x.a2) << "\n";
        out << "b1 = " << format_vector(nn, x.b1) << "\n";
        out << "b2 = " << format_vector(nn, x.b2) << "\n";
    };

    out << "composite base M = N (x) k[theta]/theta^3 with B = k[xi]/xi^3, q^3 = 1\n";
    out << "N: basis";
    for (const auto& e : n.space.basis()) out << " " << e.name;
    out << "; dim M = " << c.dim() << "; dim Omega^1 M = " << c.omega(1).carrier.dim() << "\n";

    out << "\n[gauge field]\n";
    print_field(field);
    print_map(out, c, "A", a, 1);

    out << "\n[curvature]\n";
    const GradedMap f = curvature(c, b, a);
    print_map(out, c, "F", f, 2);
    const bool flat = is_zero(f.matrix().column(1)) && is_zero(f.matrix().column(2));
    out << "FLAT: " << yes_no(flat) << "\n";
    checks.add(out, "Bianchi identity dF + A*F - F*A = 0",
               bianchi_residual(c, b, a) == GradedMap::zero(b.space(), c.power(4)));

    out << "\n[gauge transformation]\n";
    const GradedMap gamma = model->gauge(c1, c2);
    out << "c1 = " << format_vector(n.space, c1) << "\n";
    out << "c2 = " << format_vector(n.space, c2) << "\n";
    CompositeModel::Field fg;
    try {
        fg = model->components(transform_field(c, b, a, gamma));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("gauge transformation: ") + e.what());
    }
    out << "A^gamma components:\n";
    print_field(fg);
    checks.add(out, "(A^gamma)^{gamma^{-1}} = A",
               transform_field(c, b, transform_field(c, b, a, gamma), gauge_inverse(model->M(), b, gamma)) == a);

    out << "\n[flat family]\n";
    out << "a = " << format_vector(n.space, fa) << "\n";
    out << "b = " << format_vector(n.space, fb) << "\n";
    const CompositeModel::Field flat_f = model->flat_family(fa, fb);
    print_field(flat_f);
    const GradedMap flat_a = model->field(flat_f);
    const GradedMap residual = curvature(c, b, flat_a);
    out << "residual F(xi) = " << format_form(c, residual.column(1), 2) << "\n";
    out << "residual F(xi2) = " << format_form(c, residual.column(2), 2) << "\n";
    checks.add(out, "flat family has zero curvature", residual == GradedMap::zero(b.space(), c.power(3)));
    const auto to_zero = gauge_to_zero(c, b, flat_a);
    checks.add(out, "flat family is gauge-equivalent to zero",
               to_zero && transform_field(c, b, flat_a, *to_zero) == GradedMap::zero(b.space(), c.power(2)));

    out << "\n[sections of the coregular bundle]\n";
    const FiberComodule fr = coregular_fiber(b);
    const GradedMap sigma = model->section(s0, s1, s2);
    print_section(out, c, "sigma", sigma, 0);
    const GradedMap ns = nabla(c, fr, sigma, 0, a);
    print_section(out, c, "nabla sigma", ns, 1);
    checks.add(out, "covariance nabla^gamma sigma^gamma = (nabla sigma)^gamma",
               nabla(c, fr, transform_section(c, fr, sigma, 0, gamma), 0, transform_field(c, b, a, gamma)) ==
                   transform_section(c, fr, ns, 1, gamma));
    checks.add(out, "nabla^2 sigma = -sigma * F",
               nabla(c, fr, ns, 1, a) == Scalar(-1) * section_times(c, fr, sigma, 0, f, 2));

    const int code = checks.finish(out);
    return {out.str(), code};
}

// ---------------------------------------------------------------- verification

Suite parse_suite(const std::string& name) {
    if (name == "algebra") return Suite::Algebra;
    if (name == "hopf") return Suite::Hopf;
    if (name == "comodule") return Suite::Comodule;
    if (name == "principal") return Suite::Principal;
    if (name == "connection") return Suite::Connection;
    if (name == "all") return Suite::All;
    throw InputError("unknown suite '" + name + "'");
}

namespace {

template <class F>
Report guarded(const std::string& title, F&& run) {
    try {
        return run();
    } catch (const std::exception& e) {
        Report r(title);
        r.add("completes", false, e.what());
        return r;
    }
}

}  // namespace

ReportOutput verify_model(const ModelFile& m, Suite suite) {
    const auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
    std::vector<Report> reports;

    if (want(Suite::Algebra))
        for (const auto& name : m.algebra_order)
            reports.push_back(guarded("algebra " + name, [&] { return check_algebra(m.algebra(name), "algebra " + name); }));

    if (want(Suite::Hopf))
        for (const auto& name : m.hopf_order)
            reports.push_back(guarded("braided group " + name, [&] { return check_hopf(m.hopf(name), "braided group " + name); }));

    if (want(Suite::Comodule))
        for (const auto& name : m.coaction_order) {
            const NamedCoaction& c = m.coactions.at(name);
            reports.push_back(guarded("comodule " + name, [&] { return check_coaction(c.coaction, "comodule " + name); }));
            reports.push_back(guarded("comodule algebra " + name, [&] {
                return check_comodule_algebra(m.algebra(c.algebra), c.coaction, "comodule algebra " + name);
            }));
        }

    if (want(Suite::Principal) || want(Suite::Connection)) {
        for (const auto& name : m.coaction_order) {
            const NamedCoaction& c = m.coactions.at(name);
            std::optional<PrincipalBundle> bundle;
            reports.push_back(guarded("principal bundle " + name, [&] {
                bundle = make_bundle(m.algebra(c.algebra), c.coaction);
                return verify_principal(*bundle);
            }));
            if (!want(Suite::Connection)) continue;
            bool found = false;
            for (const auto& map_name : m.map_order) {
                const NamedMap& phi = m.maps.at(map_name);
                if (phi.domain != tangle::Object{c.hopf} || phi.codomain != tangle::Object{c.algebra}) continue;
                found = true;
                const std::string title = "connection on " + name + " trivialized by " + map_name;
                reports.push_back(guarded(title, [&] {
                    if (!bundle) throw std::runtime_error("the principal bundle could not be built");
                    PrincipalBundle pb = *bundle;
                    const Trivialization t = make_trivialization(pb, phi.map);
                    Report r(title);
                    r.append(check_trivialization(pb, t));
                    const GradedMap omega = trivial_connection(pb, t);
                    r.append(check_connection(pb, omega));
                    const GradedMap pi = projection_from_connection(pb, omega);
                    r.append(check_projection(pb, pi));
                    r.add("connection from the projection is omega", connection_from_projection(pb, pi) == omega);
                    return r;
                }));
            }
            if (!found) {
                Report r("connection on " + name);
                r.add("a trivialization " + c.hopf + " -> " + c.algebra + " is declared", false,
                      "declare 'map NAME : " + c.hopf + " -> " + c.algebra + "'");
                reports.push_back(r);
            }
        }
    }

    std::ostringstream out;
    bool ok = true;
    std::size_t count = 0, failed = 0;
    for (const auto& r : reports) {
        out << r.str();
        for (const auto& check : r.checks()) {
            ++count;
            if (!check.passed) ++failed;
        }
        ok = ok && r.passed();
    }
    out << "\n" << count - failed << " of " << count << " checks passed\n";
    return {out.str(), ok ? 0 : 1};
}

ReportOutput check_tangle_file(const std::string& text, const tangle::Env& env) {
    const auto ids = tangle::parse_identities(text);
    for (const auto& id : ids) {
        const auto l = tangle::typecheck(id.lhs, env), r = tangle::typecheck(id.rhs, env);
        if (l.domain != r.domain || l.codomain != r.codomain)
            throw tangle::TypeError("line " + std::to_string(id.line) + ": sides have types " +
                                    tangle::format_object(l.domain) + " -> " + tangle::format_object(l.codomain) +
                                    " and " + tangle::format_object(r.domain) + " -> " +
                                    tangle::format_object(r.codomain));
    }
    std::ostringstream out;
    for (const auto& id : ids) {
        const auto res = tangle::check_identity(id.lhs, id.rhs, env);
        if (!res.holds) {
            out << "[FAIL] line " << id.line << ": " << id.source << "\n  counterexample " << res.counterexample << "\n";
            return {out.str(), 1};
        }
        out << "[PASS] line " << id.line << ": " << id.source << "\n";
    }
    out << ids.size() << " identities hold\n";
    return {out.str(), 0};
}

}  // namespace bgt
