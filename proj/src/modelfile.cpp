#include "bgt/modelfile.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace bgt {

ModelError::ModelError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}

const Algebra& ModelFile::algebra(const std::string& name) const {
    const auto it = algebras.find(name);
    if (it == algebras.end()) throw std::out_of_range("no algebra named '" + name + "'");
    return it->second;
}

const Hopf& ModelFile::hopf(const std::string& name) const {
    const auto it = hopfs.find(name);
    if (it == hopfs.end()) throw std::out_of_range("no coalgebra named '" + name + "'");
    return it->second;
}

// ---------------------------------------------------------------- literals and combinations

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool wrapped_in_parens(std::string_view s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && i + 1 < s.size()) return false;
    }
    return true;
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Scalar parse_literal(std::string_view text, int modulus) {
    text = trim(text);
    bool negate = false;
    if (!text.empty() && text.front() == '-' && wrapped_in_parens(trim(text.substr(1)))) {
        negate = true;
        text = trim(text.substr(1));
    }
    while (wrapped_in_parens(text)) text = trim(text.substr(1, text.size() - 2));
    const Scalar s = parse_scalar(text, modulus);
    return negate ? -s : s;
}

Vec parse_combination(std::string_view text, const GradedSpace& space) {
    text = trim(text);
    Vec v = space.zero();
    if (text == "0") return v;
    if (text.empty()) throw std::invalid_argument("empty linear combination");

    // Split at '+' and '-' outside parentheses.
    std::vector<std::pair<bool, std::string_view>> terms;
    int depth = 0;
    bool negative = false;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const char c = i < text.size() ? text[i] : '\0';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw std::invalid_argument("unbalanced ')' in '" + std::string(text) + "'");
        if (i == text.size() || (depth == 0 && (c == '+' || c == '-'))) {
            const std::string_view body = trim(text.substr(start, i - start));
            if (!body.empty()) {
                terms.emplace_back(negative, body);
            } else if (i != 0) {
                throw std::invalid_argument("missing term in '" + std::string(text) + "'");
            }
            negative = c == '-';
            start = i + 1;
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced '(' in '" + std::string(text) + "'");

    for (const auto& [neg, body] : terms) {
        Scalar coef(1);
        std::string_view name = body;
        const std::size_t cut = body.find_last_of(" \t");
        if (cut != std::string_view::npos) {
            coef = parse_literal(body.substr(0, cut), space.modulus());
            name = trim(body.substr(cut + 1));
        }
        const auto idx = space.find(std::string(name));
        if (!idx) {
            if (space.is_unit() && cut == std::string_view::npos) {
                v[0] += neg ? -parse_literal(name, space.modulus()) : parse_literal(name, space.modulus());
                continue;
            }
            throw std::invalid_argument("unknown basis element '" + std::string(name) + "'");
        }
        v[*idx] += neg ? -coef : coef;
    }
    return v;
}

// ---------------------------------------------------------------- model files

namespace {

struct AlgebraDraft {
    std::string name;
    int line = 0;
    std::optional<int> modulus;
    std::optional<GradedSpace> space;
    std::optional<Vec> unit;
    std::map<std::pair<std::size_t, std::size_t>, Vec> products;
};

struct MapDraft {
    enum class Kind { Coalgebra, Coaction, Map } kind;
    std::string name;
    int line = 0;
    // Coalgebra
    std::map<std::size_t, Vec> comul, counit, antipode, antipode_inverse;
    // Coaction and map
    std::string algebra, hopf;
    tangle::Object domain, codomain;
    std::map<std::size_t, Vec> send;
};

class ModelParser {
public:
    ModelFile run(std::string_view text) {
        int line = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view raw = text.substr(pos, end - pos);
            ++line;
            pos = end + 1;
            if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
            const bool indented = !raw.empty() && (raw.front() == ' ' || raw.front() == '\t');
            const std::string_view body = trim(raw);
            if (!body.empty()) {
                try {
                    indented ? block_line(line, body) : directive(line, body);
                } catch (const ModelError&) {
                    throw;
                } catch (const std::exception& e) {
                    throw ModelError(line, e.what());
                }
            }
            if (end == text.size()) break;
        }
        finish();
        if (out_.modulus == 0) out_.modulus = 3;
        return std::move(out_);
    }

private:
    [[noreturn]] static void fail(int line, const std::string& what) { throw ModelError(line, what); }

    int modulus(int line) const {
        if (out_.modulus == 0) fail(line, "modulus is not set");
        return out_.modulus;
    }

    void set_modulus(int line, int n) {
        if (n < 2) fail(line, "modulus must be at least 2");
        if (out_.modulus != 0 && out_.modulus != n) fail(line, "modulus " + std::to_string(n) + " conflicts with " + std::to_string(out_.modulus));
        out_.modulus = n;
    }

    void check_new_name(int line, const std::string& name, bool algebra_ns) {
        if (algebra_ns && out_.algebras.count(name)) fail(line, "algebra '" + name + "' is already defined");
        if (!algebra_ns && (out_.coactions.count(name) || out_.maps.count(name)))
            fail(line, "'" + name + "' is already defined");
    }

    GradedSpace object_space(int line, const tangle::Object& o) const {
        if (o.empty()) return GradedSpace::unit(modulus(line));
        GradedSpace s = algebra_ref(line, o[0]).space;
        for (std::size_t i = 1; i < o.size(); ++i) s = tensor(s, algebra_ref(line, o[i]).space);
        return s;
    }

    const Algebra& algebra_ref(int line, const std::string& name) const {
        const auto it = out_.algebras.find(name);
        if (it == out_.algebras.end()) fail(line, "unknown algebra '" + name + "'");
        return it->second;
    }

    static tangle::Object parse_object(int line, std::string_view text) {
        tangle::Object o;
        std::size_t start = 0;
        text = trim(text);
        for (;;) {
            const std::size_t star = text.find('*', start);
            const std::string_view part = trim(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
            if (part.empty()) fail(line, "malformed object '" + std::string(text) + "'");
            if (part != "I") o.emplace_back(part);
            if (star == std::string_view::npos) return o;
            start = star + 1;
        }
    }

    // -------------------------------------------------------------- directives

    void directive(int line, std::string_view body) {
        finish();
        const auto words = split_words(body);
        const std::string_view key = words[0];
        if (key == "modulus") {
            if (words.size() != 2) fail(line, "expected 'modulus N'");
            set_modulus(line, std::stoi(std::string(words[1])));
        } else if (key == "algebra") {
            if (words.size() == 2) {
                check_new_name(line, std::string(words[1]), true);
                alg_ = AlgebraDraft{std::string(words[1]), line, {}, {}, {}, {}};
            } else if (words.size() >= 5 && words[2] == "=") {
                const std::string name(words[1]);
                check_new_name(line, name, true);
                const std::size_t eq = body.find('=');
                const tangle::Object factors = parse_object(line, body.substr(eq + 1));
                if (factors.size() < 2) fail(line, "a tensor product algebra needs at least two factors");
                Algebra a = algebra_ref(line, factors[0]);
                for (std::size_t i = 1; i < factors.size(); ++i) a = braided_tensor_algebra(a, algebra_ref(line, factors[i]));
                out_.algebras.emplace(name, std::move(a));
                out_.algebra_order.push_back(name);
            } else {
                fail(line, "expected 'algebra NAME' or 'algebra NAME = A * B'");
            }
        } else if (key == "coalgebra") {
            if (words.size() != 2) fail(line, "expected 'coalgebra NAME'");
            const std::string name(words[1]);
            algebra_ref(line, name);
            if (out_.hopfs.count(name)) fail(line, "coalgebra '" + name + "' is already defined");
            map_ = MapDraft{MapDraft::Kind::Coalgebra, name, line, {}, {}, {}, {}, {}, {}, {}, {}, {}};
        } else if (key == "coaction") {
            if (words.size() != 6 || words[2] != "on" || words[4] != "by") fail(line, "expected 'coaction NAME on ALGEBRA by COALGEBRA'");
            const std::string name(words[1]);
            check_new_name(line, name, false);
            algebra_ref(line, std::string(words[3]));
            if (!out_.hopfs.count(std::string(words[5]))) fail(line, "unknown coalgebra '" + std::string(words[5]) + "'");
            map_ = MapDraft{MapDraft::Kind::Coaction, name, line, {}, {}, {}, {}, std::string(words[3]), std::string(words[5]), {}, {}, {}};
        } else if (key == "map") {
            const std::size_t colon = body.find(':'), arrow = body.find("->");
            if (words.size() < 2 || colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon)
                fail(line, "expected 'map NAME : A -> B'");
            const std::string name(trim(body.substr(3, colon - 3)));
            check_new_name(line, name, false);
            MapDraft d{MapDraft::Kind::Map, name, line, {}, {}, {}, {}, {}, {}, {}, {}, {}};
            d.domain = parse_object(line, body.substr(colon + 1, arrow - colon - 1));
            d.codomain = parse_object(line, body.substr(arrow + 2));
            object_space(line, d.domain);
            object_space(line, d.codomain);
            map_ = std::move(d);
        } else {
            fail(line, "unknown directive '" + std::string(key) + "'");
        }
    }

    // -------------------------------------------------------------- block lines

    /// Splits "lhs -> rhs".
    static std::pair<std::string_view, std::string_view> arrow(int line, std::string_view s) {
        const std::size_t a = s.find("->");
        if (a == std::string_view::npos) fail(line, "expected '->'");
        return {trim(s.substr(0, a)), trim(s.substr(a + 2))};
    }

    std::size_t basis_index(int line, const GradedSpace& s, std::string_view name) const {
        const auto idx = s.find(std::string(name));
        if (!idx) fail(line, "unknown basis element '" + std::string(name) + "'");
        return *idx;
    }

    static void check_degree(int line, const std::string& lhs, int expected, const GradedSpace& out, const Vec& v) {
        const int n = out.modulus();
        expected = ((expected % n) + n) % n;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero() || out.degree(i) == expected) continue;
            fail(line, "degree violation: " + lhs + " has degree " + std::to_string(expected) + " but " + out[i].name +
                           " has degree " + std::to_string(out.degree(i)));
        }
    }

    void block_line(int line, std::string_view body) {
        const auto words = split_words(body);
        const std::string_view key = words[0];
        const std::string_view rest = trim(body.substr(key.size()));
        if (alg_) {
            algebra_line(line, key, rest);
            return;
        }
        if (!map_) fail(line, "indented line outside a block");
        MapDraft& d = *map_;
        if (d.kind == MapDraft::Kind::Coalgebra) {
            const GradedSpace& h = algebra_ref(line, d.name).space;
            const auto [l, r] = arrow(line, rest);
            const std::size_t x = basis_index(line, h, l);
            const std::string lhs = std::string(key) + "(" + std::string(l) + ")";
            if (key == "comul") {
                const GradedSpace hh = tensor(h, h);
                Vec v = parse_combination(r, hh);
                check_degree(line, lhs, h.degree(x), hh, v);
                d.comul[x] = std::move(v);
            } else if (key == "counit") {
                const GradedSpace u = GradedSpace::unit(h.modulus());
                Vec v = parse_combination(r, u);
                check_degree(line, lhs, h.degree(x), u, v);
                d.counit[x] = std::move(v);
            } else if (key == "antipode" || key == "antipode_inverse") {
                Vec v = parse_combination(r, h);
                check_degree(line, lhs, h.degree(x), h, v);
                (key == "antipode" ? d.antipode : d.antipode_inverse)[x] = std::move(v);
            } else {
                fail(line, "unknown coalgebra line '" + std::string(key) + "'");
            }
            return;
        }
        if (key != "send") fail(line, "expected 'send'");
        const auto [l, r] = arrow(line, rest);
        GradedSpace dom, cod;
        if (d.kind == MapDraft::Kind::Coaction) {
            dom = algebra_ref(line, d.algebra).space;
            cod = tensor(dom, out_.hopfs.at(d.hopf).space());
        } else {
            dom = object_space(line, d.domain);
            cod = object_space(line, d.codomain);
        }
        const std::size_t x = basis_index(line, dom, l);
        Vec v = parse_combination(r, cod);
        check_degree(line, d.name + "(" + std::string(l) + ")", dom.degree(x), cod, v);
        d.send[x] = std::move(v);
    }

    void algebra_line(int line, std::string_view key, std::string_view rest) {
        AlgebraDraft& a = *alg_;
        if (key == "modulus") {
            a.modulus = std::stoi(std::string(rest));
            set_modulus(line, *a.modulus);
        } else if (key == "basis") {
            std::vector<BasisElement> basis;
            for (const auto w : split_words(rest)) {
                const std::size_t colon = w.find(':');
                if (colon == std::string_view::npos) fail(line, "expected NAME:DEGREE, got '" + std::string(w) + "'");
                const std::string name(w.substr(0, colon));
                if (name.find('.') != std::string::npos) fail(line, "basis names may not contain '.'");
                for (const auto& b : basis)
                    if (b.name == name) fail(line, "duplicate basis element '" + name + "'");
                basis.push_back({name, std::stoi(std::string(w.substr(colon + 1)))});
            }
            if (basis.empty()) fail(line, "empty basis");
            a.space = GradedSpace(modulus(line), std::move(basis));
        } else if (key == "unit") {
            if (!a.space) fail(line, "basis must come before unit");
            Vec u = parse_combination(rest, *a.space);
            check_degree(line, "the unit", 0, *a.space, u);
            a.unit = std::move(u);
        } else if (key == "mul") {
            if (!a.space) fail(line, "basis must come before mul");
            const auto [l, r] = arrow(line, rest);
            const auto names = split_words(l);
            if (names.size() != 2) fail(line, "expected 'mul X Y -> ...'");
            const std::size_t i = basis_index(line, *a.space, names[0]), j = basis_index(line, *a.space, names[1]);
            Vec v = parse_combination(r, *a.space);
            check_degree(line, std::string(names[0]) + "." + std::string(names[1]), a.space->degree(i) + a.space->degree(j),
                         *a.space, v);
            if (a.products.count({i, j})) fail(line, "product " + std::string(l) + " given twice");
            a.products[{i, j}] = std::move(v);
        } else {
            fail(line, "unknown algebra line '" + std::string(key) + "'");
        }
    }

    // -------------------------------------------------------------- finishing blocks

    void finish() {
        if (alg_) finish_algebra();
        if (map_) finish_map();
    }

    void finish_algebra() {
        AlgebraDraft a = std::move(*alg_);
        alg_.reset();
        if (!a.space) fail(a.line, "algebra '" + a.name + "' has no basis");
        if (!a.unit) fail(a.line, "algebra '" + a.name + "' has no unit");
        const GradedSpace& s = *a.space;
        const std::size_t D = s.dim();
        Matrix mult(D, D * D);
        std::optional<std::size_t> u;
        for (std::size_t i = 0; i < D; ++i)
            if (s.basis_vector(i) == *a.unit) u = i;
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                Vec v = s.zero();
                if (const auto it = a.products.find({i, j}); it != a.products.end()) {
                    v = it->second;
                } else if (u && (i == *u || j == *u)) {
                    v = s.basis_vector(i == *u ? j : i);
                }
                for (std::size_t k = 0; k < D; ++k) mult(k, i * D + j) = v[k];
            }
        out_.algebras.emplace(a.name, Algebra(s, *a.unit, GradedMap(tensor(s, s), s, std::move(mult))));
        out_.algebra_order.push_back(a.name);
    }

    static Matrix columns(std::size_t rows, std::size_t cols, const std::map<std::size_t, Vec>& given) {
        Matrix m(rows, cols);
        for (const auto& [j, v] : given)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[i];
        return m;
    }

    void finish_map() {
        MapDraft d = std::move(*map_);
        map_.reset();
        if (d.kind == MapDraft::Kind::Coalgebra) {
            const Algebra& a = algebra_ref(d.line, d.name);
            const GradedSpace& h = a.space;
            const GradedSpace hh = tensor(h, h), u = GradedSpace::unit(h.modulus());
            Hopf hopf{a,
                      GradedMap(h, hh, columns(hh.dim(), h.dim(), d.comul)),
                      GradedMap(h, u, columns(1, h.dim(), d.counit)),
                      GradedMap(h, h, columns(h.dim(), h.dim(), d.antipode)),
                      std::nullopt};
            if (!d.antipode_inverse.empty())
                hopf.antipode_inverse = GradedMap(h, h, columns(h.dim(), h.dim(), d.antipode_inverse));
            else
                hopf.antipode_inverse = inverse(hopf.antipode);
            out_.hopfs.emplace(d.name, std::move(hopf));
            out_.hopf_order.push_back(d.name);
        } else if (d.kind == MapDraft::Kind::Coaction) {
            const Algebra& a = algebra_ref(d.line, d.algebra);
            const Hopf& h = out_.hopfs.at(d.hopf);
            const GradedSpace cod = tensor(a.space, h.space());
            Coaction c{a.space, h, GradedMap(a.space, cod, columns(cod.dim(), a.dim(), d.send))};
            out_.coactions.emplace(d.name, NamedCoaction{d.algebra, d.hopf, std::move(c)});
            out_.coaction_order.push_back(d.name);
        } else {
            const GradedSpace dom = object_space(d.line, d.domain), cod = object_space(d.line, d.codomain);
            out_.maps.emplace(d.name, NamedMap{d.domain, d.codomain, GradedMap(dom, cod, columns(cod.dim(), dom.dim(), d.send))});
            out_.map_order.push_back(d.name);
        }
    }

    ModelFile out_;
    std::optional<AlgebraDraft> alg_;
    std::optional<MapDraft> map_;
};

}  // namespace

ModelFile parse_model(std::string_view text) { return ModelParser().run(text); }

ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError(0, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

tangle::Env tangle_env(const ModelFile& m) {
    tangle::Env env(m.modulus);
    for (const auto& name : m.algebra_order) env.add_object(name, m.algebras.at(name).space);
    for (const auto& name : m.map_order) {
        const NamedMap& f = m.maps.at(name);
        env.add_morphism(name, f.domain, f.codomain, f.map);
    }
    for (const auto& name : m.coaction_order) {
        const NamedCoaction& c = m.coactions.at(name);
        env.add_morphism(name, {c.algebra}, {c.algebra, c.hopf}, c.coaction.rho);
    }
    auto add = [&](const std::string& name, tangle::Object d, tangle::Object c, const GradedMap& f) {
        if (!env.has_morphism(name)) env.add_morphism(name, std::move(d), std::move(c), f);
    };
    for (const auto& name : m.algebra_order) {
        const Algebra& a = m.algebras.at(name);
        add("mul_" + name, {name, name}, {name}, a.mult);
        add("eta_" + name, {}, {name}, a.unit_map());
    }
    for (const auto& name : m.hopf_order) {
        const Hopf& h = m.hopfs.at(name);
        add("comul_" + name, {name}, {name, name}, h.comul);
        add("eps_" + name, {name}, {}, h.counit);
        add("S_" + name, {name}, {name}, h.antipode);
        if (h.antipode_inverse) add("Sinv_" + name, {name}, {name}, *h.antipode_inverse);
    }
    if (m.hopf_order.size() == 1) {
        const std::string& name = m.hopf_order.front();
        const Hopf& h = m.hopfs.at(name);
        add("mul", {name, name}, {name}, h.algebra.mult);
        add("eta", {}, {name}, h.algebra.unit_map());
        add("comul", {name}, {name, name}, h.comul);
        add("eps", {name}, {}, h.counit);
        add("S", {name}, {name}, h.antipode);
        if (h.antipode_inverse) add("Sinv", {name}, {name}, *h.antipode_inverse);
    }
    return env;
}

}  // namespace bgt
