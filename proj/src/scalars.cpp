#include "colorlie/scalars.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace colorlie {

namespace {

// Dense rational polynomials, constant term first, trailing zeros trimmed.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Division with remainder; divisor need not be monic.
std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
    Poly q;
    if (degree(num) >= degree(den)) q.resize(num.size() - den.size() + 1);
    while (degree(num) >= degree(den) && !num.empty()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    trim(q);
    return {q, num};
}

struct CycContext {
    unsigned phi;
    Poly modulus;  // Phi_n, degree phi, monic
};

const CycContext& context(unsigned n) {
    static std::map<unsigned, CycContext> cache;
    static std::recursive_mutex m;  // the divisor recursion below re-enters
    std::lock_guard<std::recursive_mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CycContext ctx;
    ctx.phi = euler_phi(n);
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    Poly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod(num, context(d).modulus);
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        num = q;
    }
    ctx.modulus = num;
    return cache.emplace(n, std::move(ctx)).first->second;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    return context(n).modulus;
}

CycScalar::CycScalar(unsigned order) : order_(order), coeffs_(context(order).phi) {}

CycScalar CycScalar::zero(unsigned order) { return CycScalar(order); }

CycScalar CycScalar::one(unsigned order) {
    CycScalar s(order);
    s.coeffs_[0] = 1;
    return s;
}

CycScalar CycScalar::from_rational(const Rational& r, unsigned order) {
    CycScalar s(order);
    s.coeffs_[0] = r;
    return s;
}

CycScalar CycScalar::from_int(long v, unsigned order) { return from_rational(Rational(v), order); }

CycScalar CycScalar::root(unsigned order) {
    CycScalar s(order);
    std::vector<Rational> raw(2);
    raw[1] = 1;
    s.reduce(std::move(raw));
    return s;
}

void CycScalar::reduce(std::vector<Rational> raw) {
    const auto& ctx = context(order_);
    trim(raw);
    if (degree(raw) >= static_cast<int>(ctx.phi)) raw = divmod(std::move(raw), ctx.modulus).second;
    raw.resize(ctx.phi);
    coeffs_ = std::move(raw);
}

bool CycScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycScalar CycScalar::operator-() const {
    CycScalar r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {
void check_orders(const CycScalar& a, const CycScalar& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}
}  // namespace

CycScalar CycScalar::operator+(const CycScalar& o) const {
    check_orders(*this, o);
    CycScalar r(*this);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
    check_orders(*this, o);
    CycScalar r(*this);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
    check_orders(*this, o);
    Poly a(coeffs_), b(o.coeffs_);
    trim(a);
    trim(b);
    CycScalar r(order_);
    r.reduce(mul(a, b));
    return r;
}

CycScalar CycScalar::operator/(const CycScalar& o) const { return *this * o.inverse(); }

bool CycScalar::operator==(const CycScalar& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    // Extended Euclid against Phi_n: maintain r == s * a (mod Phi_n).
    Poly a(coeffs_);
    trim(a);
    Poly r0 = a, r1 = context(order_).modulus;
    Poly s0 = {Rational(1)}, s1 = {};
    while (!r1.empty()) {
        auto [q, rem] = divmod(r0, r1);
        Poly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree(r0) != 0) throw std::logic_error("cyclotomic modulus not coprime to element");
    for (auto& c : s0) c /= r0[0];
    CycScalar inv(order_);
    inv.reduce(std::move(s0));
    return inv;
}

CycScalar CycScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar base(*this), acc = one(order_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::optional<unsigned long> CycScalar::root_of_unity_order() const {
    if (is_zero()) return std::nullopt;
    const unsigned long bound = 2ul * order_ * order_;
    CycScalar acc = one(order_);
    for (unsigned long m = 1; m <= bound; ++m) {
        acc = acc * *this;
        if (acc.is_one()) return m;
    }
    return std::nullopt;
}

std::string CycScalar::to_string() const {
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string zpart = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        if (k == 0)
            out += rational_str(abs);
        else if (abs == 1)
            out += zpart;
        else
            out += rational_str(abs) + "*" + zpart;
    }
    return out.empty() ? "0" : out;
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    unsigned order;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("bad scalar literal \"" + text + "\" at position " +
                                    std::to_string(pos) + ": " + why);
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return mpz_class(text.substr(start, pos - start));
    }

    Rational rational() {
        mpz_class num = integer();
        if (eat('/')) {
            mpz_class den = integer();
            if (den <= 0) fail("denominator must be positive");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    // Returns the exponent of a z-part, already reduced into [0, order).
    unsigned zpart() {
        ++pos;  // 'z'
        long long k = 1;
        if (eat('^')) k = integer().get_si();
        if (order == 1) fail("z has no meaning at cyclotomic order 1");
        long long m = k % static_cast<long long>(order);
        if (m < 0) m += order;
        return static_cast<unsigned>(m);
    }

    // One signed term accumulated into raw coefficients.
    void term(std::vector<Rational>& raw, bool negate) {
        skip_ws();
        if (pos >= text.size()) fail("expected term");
        Rational coeff(1);
        unsigned exp = 0;
        if (text[pos] == 'z') {
            exp = zpart();
        } else {
            coeff = rational();
            if (eat('*')) {
                skip_ws();
                if (pos >= text.size() || text[pos] != 'z') fail("expected z after *");
                exp = zpart();
            }
        }
        if (negate) coeff = -coeff;
        if (raw.size() <= exp) raw.resize(exp + 1);
        raw[exp] += coeff;
    }
};

}  // namespace

CycScalar parse_scalar(const std::string& text, unsigned order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
    Parser p{text, 0, order};
    std::vector<Rational> raw;
    p.skip_ws();
    bool neg = false;
    if (p.eat('-'))
        neg = true;
    else
        p.eat('+');
    p.term(raw, neg);
    p.skip_ws();
    while (p.pos < p.text.size()) {
        if (p.eat('-'))
            neg = true;
        else if (p.eat('+'))
            neg = false;
        else
            p.fail("expected + or - between terms");
        p.term(raw, neg);
        p.skip_ws();
    }
    CycScalar s = CycScalar::zero(order);
    for (size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        CycScalar t = CycScalar::from_rational(raw[k], order);
        if (k > 0) t = t * CycScalar::root(order).pow(static_cast<long long>(k));
        s += t;
    }
    return s;
}

}  // namespace colorlie
