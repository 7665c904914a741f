#include "bgt/tangle.hpp"

#include <cctype>
#include <sstream>

namespace bgt::tangle {

std::string format_object(const Object& o) {
    if (o.empty()) return "I";
    std::string s;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) s += "*";
        s += o[i];
    }
    return s;
}

// ---------------------------------------------------------------- printing

namespace {

std::string print_at(const Expr& e, int context) {
    // context: 0 top level, 1 inside a tensor, 2 inside a composition
    switch (e.kind) {
        case Expr::Kind::Gen:
            return e.name;
        case Expr::Kind::Id:
            return "id[" + format_object(e.left) + "]";
        case Expr::Kind::Psi:
            return "psi[" + format_object(e.left) + "," + format_object(e.right) + "]";
        case Expr::Kind::PsiInv:
            return "psinv[" + format_object(e.left) + "," + format_object(e.right) + "]";
        case Expr::Kind::Tensor: {
            std::string s;
            for (std::size_t i = 0; i < e.parts.size(); ++i) {
                if (i) s += " * ";
                s += print_at(e.parts[i], 1);
            }
            return context == 1 ? "(" + s + ")" : s;
        }
        case Expr::Kind::Compose: {
            std::string s;
            for (std::size_t i = 0; i < e.parts.size(); ++i) {
                if (i) s += " . ";
                s += print_at(e.parts[i], 2);
            }
            return context != 0 ? "(" + s + ")" : s;
        }
    }
    return {};
}

}  // namespace

std::string print(const Expr& e) { return print_at(e, 0); }

bool same_shape(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.name != b.name || a.left != b.left || a.right != b.right ||
        a.parts.size() != b.parts.size())
        return false;
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        if (!same_shape(a.parts[i], b.parts[i])) return false;
    return true;
}

// ---------------------------------------------------------------- parsing

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line(line),
      column(column) {}

namespace {

struct Token {
    enum class Kind { Name, Dot, Star, LParen, RParen, LBracket, RBracket, Comma, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Token::Kind::Name: return "'" + t.text + "'";
        case Token::Kind::End: return "end of input";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view text, int line, int column) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Token::Kind::Name, std::string(text.substr(i, j - i)), line, column});
            advance(j - i);
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '.': k = Token::Kind::Dot; break;
            case '*': k = Token::Kind::Star; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            case '[': k = Token::Kind::LBracket; break;
            case ']': k = Token::Kind::RBracket; break;
            case ',': k = Token::Kind::Comma; break;
            default: throw ParseError(line, column, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), line, column});
        advance(1);
    }
    out.push_back({Token::Kind::End, "", line, column});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Expr parse_all() {
        Expr e = seq();
        if (peek().kind != Token::Kind::End) fail(peek(), "expected '.', '*' or end of input but found " + describe(peek()));
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] static void fail(const Token& t, const std::string& what) { throw ParseError(t.line, t.column, what); }

    const Token& expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) fail(peek(), "expected " + what + " but found " + describe(peek()));
        return take();
    }

    Expr seq() {
        const Token& start = peek();
        Expr first = ten();
        if (peek().kind != Token::Kind::Dot) return first;
        Expr e;
        e.kind = Expr::Kind::Compose;
        e.line = start.line;
        e.column = start.column;
        e.parts.push_back(std::move(first));
        while (peek().kind == Token::Kind::Dot) {
            take();
            e.parts.push_back(ten());
        }
        return e;
    }

    Expr ten() {
        const Token& start = peek();
        Expr first = atom();
        if (peek().kind != Token::Kind::Star) return first;
        Expr e;
        e.kind = Expr::Kind::Tensor;
        e.line = start.line;
        e.column = start.column;
        e.parts.push_back(std::move(first));
        while (peek().kind == Token::Kind::Star) {
            take();
            e.parts.push_back(atom());
        }
        return e;
    }

    Object object() {
        Object o;
        for (;;) {
            const Token& t = expect(Token::Kind::Name, "an object name");
            if (t.text != "I") o.push_back(t.text);
            if (peek().kind != Token::Kind::Star) return o;
            take();
        }
    }

    Expr atom() {
        const Token& t = peek();
        Expr e;
        e.line = t.line;
        e.column = t.column;
        if (t.kind == Token::Kind::LParen) {
            take();
            Expr inner = seq();
            expect(Token::Kind::RParen, "')' to close the '(' at " + std::to_string(t.line) + ":" +
                                            std::to_string(t.column));
            return inner;
        }
        if (t.kind != Token::Kind::Name) fail(t, "expected a morphism but found " + describe(t));
        take();
        const bool bracket = peek().kind == Token::Kind::LBracket;
        if (t.text == "id" || t.text == "psi" || t.text == "psinv") {
            if (!bracket) fail(peek(), "expected '[' after " + t.text);
            take();
            e.left = object();
            if (t.text == "id") {
                e.kind = Expr::Kind::Id;
            } else {
                e.kind = t.text == "psi" ? Expr::Kind::Psi : Expr::Kind::PsiInv;
                expect(Token::Kind::Comma, "','");
                e.right = object();
            }
            expect(Token::Kind::RBracket, "']'");
            return e;
        }
        if (bracket) fail(peek(), "'" + t.text + "' takes no object arguments");
        e.kind = Expr::Kind::Gen;
        e.name = t.text;
        return e;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, int line, int column) { return Parser(lex(text, line, column)).parse_all(); }

std::vector<Identity> parse_identities(std::string_view text) {
    std::vector<Identity> out;
    int line = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++line;
        start = end + 1;
        if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        const std::string_view body = raw.substr(first);
        const std::string_view key = "check:";
        if (body.substr(0, key.size()) != key)
            throw ParseError(line, static_cast<int>(first) + 1, "expected 'check:'");
        const std::size_t offset = first + key.size();
        const std::string_view rest = raw.substr(offset);
        const std::size_t eq = rest.find("==");
        if (eq == std::string_view::npos)
            throw ParseError(line, static_cast<int>(raw.size()) + 1, "expected '==' between the two sides");
        Identity id;
        id.line = line;
        id.source = std::string(body);
        while (!id.source.empty() && (id.source.back() == ' ' || id.source.back() == '\t' || id.source.back() == '\r'))
            id.source.pop_back();
        id.lhs = parse(rest.substr(0, eq), line, static_cast<int>(offset) + 1);
        id.rhs = parse(rest.substr(eq + 2), line, static_cast<int>(offset + eq + 2) + 1);
        out.push_back(std::move(id));
        if (end == text.size()) break;
    }
    return out;
}

// ---------------------------------------------------------------- environment

void Env::add_object(const std::string& name, GradedSpace space) {
    if (name == "I" || name == "id" || name == "psi" || name == "psinv")
        throw std::invalid_argument("'" + name + "' is reserved");
    if (objects_.count(name) != 0) throw std::invalid_argument("object '" + name + "' is already defined");
    if (space.modulus() != modulus_) throw std::invalid_argument("object '" + name + "' has the wrong modulus");
    objects_.emplace(name, std::move(space));
}

void Env::add_morphism(const std::string& name, Object domain, Object codomain, GradedMap map) {
    if (name == "I" || name == "id" || name == "psi" || name == "psinv")
        throw std::invalid_argument("'" + name + "' is reserved");
    if (morphisms_.count(name) != 0) throw std::invalid_argument("morphism '" + name + "' is already defined");
    if (map.shift() != 0) throw std::invalid_argument("morphism '" + name + "' does not preserve degree");
    const GradedSpace d = space(domain), c = space(codomain);
    if (map.domain().dim() != d.dim() || map.codomain().dim() != c.dim())
        throw std::invalid_argument("morphism '" + name + "' does not match " + format_object(domain) + " -> " +
                                    format_object(codomain));
    morphisms_.emplace(name, Morphism{std::move(domain), std::move(codomain), GradedMap(d, c, map.matrix())});
}

const GradedSpace& Env::object(const std::string& name) const {
    const auto it = objects_.find(name);
    if (it == objects_.end()) throw TypeError("unknown object '" + name + "'");
    return it->second;
}

const Morphism& Env::morphism(const std::string& name) const {
    const auto it = morphisms_.find(name);
    if (it == morphisms_.end()) throw TypeError("unknown morphism '" + name + "'");
    return it->second;
}

GradedSpace Env::space(const Object& o) const {
    if (o.empty()) return GradedSpace::unit(modulus_);
    GradedSpace s = object(o[0]);
    for (std::size_t i = 1; i < o.size(); ++i) s = tensor(s, object(o[i]));
    return s;
}

std::vector<std::string> Env::object_names() const {
    std::vector<std::string> r;
    for (const auto& [k, v] : objects_) r.push_back(k);
    return r;
}

std::vector<std::string> Env::morphism_names() const {
    std::vector<std::string> r;
    for (const auto& [k, v] : morphisms_) r.push_back(k);
    return r;
}

// ---------------------------------------------------------------- typing and evaluation

namespace {

std::string where(const Expr& e) { return std::to_string(e.line) + ":" + std::to_string(e.column); }

Object concat(Object a, const Object& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void check_objects(const Object& o, const Env& env, const Expr& e) {
    for (const auto& n : o)
        if (!env.has_object(n)) throw TypeError(where(e) + ": unknown object '" + n + "'");
}

}  // namespace

Signature typecheck(const Expr& e, const Env& env) {
    switch (e.kind) {
        case Expr::Kind::Gen: {
            if (!env.has_morphism(e.name)) throw TypeError(where(e) + ": unknown morphism '" + e.name + "'");
            const Morphism& m = env.morphism(e.name);
            return {m.domain, m.codomain};
        }
        case Expr::Kind::Id:
            check_objects(e.left, env, e);
            return {e.left, e.left};
        case Expr::Kind::Psi:
            check_objects(e.left, env, e);
            check_objects(e.right, env, e);
            return {concat(e.left, e.right), concat(e.right, e.left)};
        case Expr::Kind::PsiInv:
            check_objects(e.left, env, e);
            check_objects(e.right, env, e);
            return {concat(e.right, e.left), concat(e.left, e.right)};
        case Expr::Kind::Tensor: {
            Signature s;
            for (const auto& p : e.parts) {
                const Signature t = typecheck(p, env);
                s.domain = concat(std::move(s.domain), t.domain);
                s.codomain = concat(std::move(s.codomain), t.codomain);
            }
            return s;
        }
        case Expr::Kind::Compose: {
            std::vector<Signature> sig;
            for (const auto& p : e.parts) sig.push_back(typecheck(p, env));
            for (std::size_t i = sig.size() - 1; i > 0; --i) {
                if (sig[i].codomain != sig[i - 1].domain)
                    throw TypeError(where(e.parts[i - 1]) + ": stage '" + print(e.parts[i - 1]) + "' expects " +
                                    format_object(sig[i - 1].domain) + " but '" + print(e.parts[i]) + "' produces " +
                                    format_object(sig[i].codomain));
            }
            return {sig.back().domain, sig.front().codomain};
        }
    }
    return {};
}

namespace {

std::size_t dim_of(const Object& o, const Env& env) {
    std::size_t d = 1;
    for (const auto& n : o) d *= env.object(n).dim();
    return d;
}

// Applies a well-typed expression to a vector, stage by stage and factor by factor.
Vec apply(const Expr& e, const Env& env, const Vec& v) {
    switch (e.kind) {
        case Expr::Kind::Gen:
            return env.morphism(e.name).map(v);
        case Expr::Kind::Id:
            return v;
        case Expr::Kind::Psi:
            return braiding(env.space(e.left), env.space(e.right))(v);
        case Expr::Kind::PsiInv:
            return braiding_inverse(env.space(e.left), env.space(e.right))(v);
        case Expr::Kind::Tensor: {
            std::vector<Signature> sig;
            for (const auto& p : e.parts) sig.push_back(typecheck(p, env));
            Vec x = v;
            for (std::size_t i = 0; i < e.parts.size(); ++i) {
                std::size_t left = 1, right = 1;
                for (std::size_t j = 0; j < i; ++j) left *= dim_of(sig[j].codomain, env);
                for (std::size_t j = i + 1; j < sig.size(); ++j) right *= dim_of(sig[j].domain, env);
                const std::size_t in = dim_of(sig[i].domain, env);
                const std::size_t out = dim_of(sig[i].codomain, env);
                Matrix m(out, in);
                for (std::size_t c = 0; c < in; ++c) {
                    Vec b(in);
                    b[c] = 1;
                    const Vec col = apply(e.parts[i], env, b);
                    for (std::size_t r = 0; r < out; ++r) m(r, c) = col[r];
                }
                x = apply_to_factor(m, x, left, right);
            }
            return x;
        }
        case Expr::Kind::Compose: {
            Vec x = v;
            for (std::size_t i = e.parts.size(); i-- > 0;) x = apply(e.parts[i], env, x);
            return x;
        }
    }
    return v;
}

}  // namespace

GradedMap evaluate(const Expr& e, const Env& env) {
    const Signature s = typecheck(e, env);
    const GradedSpace dom = env.space(s.domain), cod = env.space(s.codomain);
    std::vector<Vec> cols;
    cols.reserve(dom.dim());
    for (std::size_t j = 0; j < dom.dim(); ++j) cols.push_back(apply(e, env, dom.basis_vector(j)));
    return GradedMap(dom, cod, Matrix::from_columns(cod.dim(), cols));
}

IdentityResult check_identity(const Expr& lhs, const Expr& rhs, const Env& env) {
    const Signature a = typecheck(lhs, env), b = typecheck(rhs, env);
    if (a.domain != b.domain || a.codomain != b.codomain)
        throw TypeError(where(rhs) + ": the sides have different types, " + format_object(a.domain) + " -> " +
                        format_object(a.codomain) + " and " + format_object(b.domain) + " -> " +
                        format_object(b.codomain));
    const GradedSpace dom = env.space(a.domain), cod = env.space(a.codomain);
    for (std::size_t j = 0; j < dom.dim(); ++j) {
        const Vec x = dom.basis_vector(j);
        const Vec l = apply(lhs, env, x), r = apply(rhs, env, x);
        if (l != r) {
            std::ostringstream os;
            os << "on " << dom[j].name << ": lhs = " << format_vector(cod, l) << ", rhs = " << format_vector(cod, r);
            return {false, os.str()};
        }
    }
    return {true, {}};
}

}  // namespace bgt::tangle
