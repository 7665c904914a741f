#include "bgt/cyclotomic.hpp"

#include <array>
#include <cctype>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

namespace bgt {

namespace {

constexpr int kMaxOrder = 256;

std::vector<long> compute_cyclotomic(int n, const std::vector<std::vector<long>>& smaller) {
    // x^n - 1 divided by every Phi_d, d | n, d < n.
    std::vector<long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& div = smaller[d];
        const int dd = static_cast<int>(div.size()) - 1;
        std::vector<long> quotient(poly.size() - dd, 0);
        for (int k = static_cast<int>(poly.size()) - 1; k >= dd; --k) {
            const long coef = poly[k];  // divisor is monic
            quotient[k - dd] = coef;
            for (int j = 0; j <= dd; ++j) poly[k - dd + j] -= coef * div[j];
        }
        poly = std::move(quotient);
    }
    return poly;
}

const std::vector<std::vector<long>>& cyclotomic_table() {
    static const std::vector<std::vector<long>> table = [] {
        std::vector<std::vector<long>> t(kMaxOrder + 1);
        t[0] = {1};
        for (int n = 1; n <= kMaxOrder; ++n) t[n] = compute_cyclotomic(n, t);
        return t;
    }();
    return table;
}

void check_order(int n) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("root of unity order out of range: " + std::to_string(n));
}

// Solves a square rational system by Gauss-Jordan elimination. The system is
// known to be nonsingular (multiplication by a nonzero field element).
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular multiplication matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rational inv = 1 / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
    check_order(n);
    return cyclotomic_table()[n];
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

Scalar::Scalar(const Rational& r) {
    if (r != 0) {
        c_.push_back(r);
        c_.back().canonicalize();
    }
}

Scalar Scalar::q(int n) { return q_power(n, 1); }

Scalar Scalar::q_power(int n, long k) {
    check_order(n);
    long e = k % n;
    if (e < 0) e += n;
    std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1);
    coeffs[e] = 1;
    return from_coefficients(n, std::move(coeffs));
}

Scalar Scalar::from_coefficients(int n, std::vector<Rational> coeffs) {
    check_order(n);
    Scalar s;
    s.order_ = n;
    s.c_ = std::move(coeffs);
    for (auto& c : s.c_) c.canonicalize();
    s.reduce();
    return s;
}

bool Scalar::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational Scalar::coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

std::vector<Rational> Scalar::coefficients() const {
    const std::size_t len = order_ == 0 ? 1 : static_cast<std::size_t>(euler_phi(order_));
    std::vector<Rational> out(len);
    for (std::size_t k = 0; k < c_.size() && k < len; ++k) out[k] = c_[k];
    return out;
}

int Scalar::adopt(const Scalar& other) {
    if (order_ == other.order_ || other.order_ == 0) return order_;
    if (order_ == 0) return other.order_;
    throw std::invalid_argument("scalar moduli differ: " + std::to_string(order_) + " vs " +
                                std::to_string(other.order_));
}

void Scalar::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Scalar::reduce() {
    if (order_ == 0) {
        trim();
        return;
    }
    const auto& phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = c_.size(); k-- > deg;) {
        if (c_[k] == 0) continue;
        const Rational coef = c_[k];
        for (std::size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) c_[k - deg + j] -= coef * phi[j];
        c_[k] = 0;
    }
    trim();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    order_ = adopt(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    order_ = adopt(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    order_ = adopt(rhs);
    if (c_.empty()) return *this;
    if (rhs.c_.empty()) {
        c_.clear();
        return *this;
    }
    if (rhs.c_.size() == 1) {
        for (auto& c : c_) c *= rhs.c_[0];
        return *this;
    }
    if (c_.size() == 1) {
        const Rational f = c_[0];
        c_ = rhs.c_;
        for (auto& c : c_) c *= f;
        return *this;
    }
    std::vector<Rational> prod(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) prod[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(prod);
    reduce();
    return *this;
}

Scalar Scalar::inverse() const {
    if (c_.empty()) throw std::domain_error("division by zero in Q(q)");
    if (c_.size() == 1) {
        Scalar r;
        r.order_ = order_;
        r.c_.push_back(1 / c_[0]);
        return r;
    }
    // Column j of the system is x * q^j in the power basis.
    const std::size_t deg = static_cast<std::size_t>(euler_phi(order_));
    std::vector<std::vector<Rational>> a(deg, std::vector<Rational>(deg));
    for (std::size_t j = 0; j < deg; ++j) {
        const Scalar col = *this * q_power(order_, static_cast<long>(j));
        for (std::size_t i = 0; i < deg; ++i) a[i][j] = col.coefficient(i);
    }
    std::vector<Rational> rhs(deg);
    rhs[0] = 1;
    return from_coefficients(order_, solve_rational(std::move(a), std::move(rhs)));
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result = Rational(1);
    result.order_ = order_;
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.order_ != b.order_ && a.order_ != 0 && b.order_ != 0)
        throw std::invalid_argument("comparing scalars of different moduli");
    return a.c_ == b.c_;
}

std::string Scalar::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        std::string term;
        if (k == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str();
            term += "q";
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (first) {
            out = (negative ? "-" : "") + term;
        } else {
            out += (negative ? "-" : "+") + term;
        }
        first = false;
    }
    return out;
}

std::string format_scalar(const Scalar& x) { return x.str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, int n) : n_(n) {
        // Keep original byte offsets; accept U+2212 as a minus sign.
        for (std::size_t i = 0; i < text.size(); ++i) {
            const unsigned char c = static_cast<unsigned char>(text[i]);
            if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                static_cast<unsigned char>(text[i + 2]) == 0x92) {
                chars_.emplace_back('-', i);
                i += 2;
            } else if (!std::isspace(c)) {
                chars_.emplace_back(static_cast<char>(c), i);
            }
        }
        end_offset_ = text.size();
    }

    Scalar parse() {
        if (chars_.empty()) fail("empty scalar literal");
        Scalar total;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        total += signed_term(negate);
        while (pos_ < chars_.size()) {
            const char c = peek();
            if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
            ++pos_;
            total += signed_term(c == '-');
        }
        return total;
    }

private:
    char peek() const { return pos_ < chars_.size() ? chars_[pos_].first : '\0'; }
    std::size_t offset() const { return pos_ < chars_.size() ? chars_[pos_].second : end_offset_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ScalarParseError(offset(), msg); }

    std::string digits() {
        std::string s;
        while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(peek()))) s += chars_[pos_++].first;
        if (s.empty()) fail("expected digits");
        return s;
    }

    Scalar signed_term(bool negate) {
        Scalar t = term();
        return negate ? -t : t;
    }

    Scalar term() {
        Rational coef = 1;
        bool has_rat = false;
        if (peek() == '-') {
            // rat := '-'? uint ...
            ++pos_;
            coef = -1;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational num(digits());
            if (peek() == '/') {
                ++pos_;
                Rational den(digits());
                if (den == 0) fail("zero denominator");
                num /= den;
            }
            coef *= num;
            has_rat = true;
        }
        if (peek() == 'q') {
            ++pos_;
            long power = 1;
            if (peek() == '^') {
                ++pos_;
                power = std::stol(digits());
            }
            return Scalar(coef) * Scalar::q_power(n_, power);
        }
        if (!has_rat) fail("expected a rational or q");
        return Scalar(coef);
    }

    int n_;
    std::vector<std::pair<char, std::size_t>> chars_;
    std::size_t pos_ = 0;
    std::size_t end_offset_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, int n) { return ScalarParser(text, n).parse(); }

}  // namespace bgt
