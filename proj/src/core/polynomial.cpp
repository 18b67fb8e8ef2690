#include "polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace duality {

namespace {
const MonomialOrder kCanonical = MonomialOrder::grevlex();
}

Polynomial::Polynomial(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.push_back({Monomial(ring_->nvars()), c});
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

Polynomial Polynomial::variable(const RingPtr& ring, int idx, int power) {
    Monomial m(ring->nvars());
    m.e[idx] = power;
    return monomial(ring, m);
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m, Rational c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return kCanonical.cmp(a.m, b.m) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    // A cancellation can leave an interior zero adjacent-merge missed; sweep.
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Term& t) { return t.c == 0; }),
              out.end());
    terms_ = std::move(out);
}

Rational Polynomial::constant_value() const {
    return terms_.empty() ? Rational(0) : terms_[0].c;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.m.deg());
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.m.e[var]);
    return d;
}

const Term& Polynomial::leading(const MonomialOrder& ord) const {
    const Term* best = &terms_.front();
    for (auto& t : terms_)
        if (ord.cmp(t.m, best->m) > 0) best = &t;
    return *best;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kCanonical.cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0)
            out.push_back(terms_[i++]);
        else if (c < 0)
            out.push_back(o.terms_[j++]);
        else {
            Rational s = terms_[i].c + o.terms_[j].c;
            if (s != 0) out.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r; // order preserved: multiplication by a monomial is monotone
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial acc(ring_);
    for (auto& t : o.terms_) acc = acc + mul_term(t.m, t.c);
    return acc;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

Polynomial Polynomial::derivative(int var) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Term d = t;
        d.c *= t.m.e[var];
        d.m.e[var] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::derivative(const Monomial& beta) const {
    Polynomial r = *this;
    for (size_t v = 0; v < beta.e.size(); ++v)
        for (int k = 0; k < beta.e[v]; ++k) r = r.derivative(static_cast<int>(v));
    return r;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& bindings) const {
    Polynomial acc(ring_);
    for (auto& t : terms_) {
        Polynomial prod(ring_, t.c);
        Monomial rest(ring_->nvars());
        for (int v = 0; v < ring_->nvars(); ++v) {
            int e = t.m.e[v];
            if (!e) continue;
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                rest.e[v] = e;
            } else {
                require_same_ring(ring_, it->second.ring());
                for (int k = 0; k < e; ++k) prod = prod * it->second;
            }
        }
        acc = acc + prod.mul_term(rest, Rational(1));
    }
    return acc;
}

Polynomial Polynomial::map_ring(const RingPtr& target,
                                const std::vector<int>& var_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        Monomial m(target->nvars());
        for (int v = 0; v < ring_->nvars(); ++v) m.e[var_map[v]] = t.m.e[v];
        out.push_back({std::move(m), t.c});
    }
    return Polynomial(target, std::move(out));
}

bool Polynomial::supported_on(const std::vector<char>& vars) const {
    for (auto& t : terms_)
        for (int v = 0; v < ring_->nvars(); ++v)
            if (t.m.e[v] && !vars[v]) return false;
    return true;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = kCanonical.cmp(a.terms_[i].m, b.terms_[i].m);
        if (c) return c;
        if (a.terms_[i].c != b.terms_[i].c)
            return a.terms_[i].c < b.terms_[i].c ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Rational c = t.c;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (t.m.is_one()) {
            os << to_string(c);
        } else {
            bool star = false;
            if (c != 1) { os << to_string(c); star = true; }
            for (int v = 0; v < ring_->nvars(); ++v) {
                if (!t.m.e[v]) continue;
                if (star) os << "*";
                os << ring_->vars[v];
                if (t.m.e[v] > 1) os << "^" << t.m.e[v];
                star = true;
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    void skip() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("parse error at position " + std::to_string(pos) + ": " + what);
    }

    Integer integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) fail("expected integer");
        return Integer(s.substr(start, pos - start));
    }

    int exponent() {
        Integer e = integer();
        if (e < 0 || e > 100000) fail("exponent out of range");
        return static_cast<int>(e);
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit((unsigned char)c)) {
            Integer num = integer();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                Integer den = integer();
                if (den == 0) fail("zero denominator");
                return Polynomial(ring, Rational(num, den));
            }
            return Polynomial(ring, Rational(num));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = ring->var_index(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Polynomial::variable(ring, idx);
        }
        fail("unexpected character");
    }

    Polynomial power() {
        Polynomial b = base();
        if (eat('^')) {
            int e = exponent();
            Polynomial r(ring, Rational(1));
            for (int i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }

    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Polynomial term() {
        Polynomial p = unary();
        while (eat('*')) p = p * unary();
        return p;
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                return p;
        }
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Parser parser{ring, text};
    Polynomial p = parser.expr();
    parser.skip();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return p;
}

// ------------------------------------------------------------ gcd, division

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::runtime_error("exact_divide: division by zero");
    Polynomial rem = p, quot(p.ring());
    const Term& dl = d.leading();
    while (!rem.is_zero()) {
        const Term& rl = rem.leading();
        if (!dl.m.divides(rl.m))
            throw std::runtime_error("exact_divide: not divisible");
        Monomial qm = rl.m / dl.m;
        Rational qc = rl.c / dl.c;
        quot = quot + Polynomial::monomial(p.ring(), qm, qc);
        rem = rem - d.mul_term(qm, qc);
    }
    return quot;
}

Polynomial coefficient_in(const Polynomial& p, int var, int d) {
    std::vector<Term> out;
    for (auto& t : p.terms()) {
        if (t.m.e[var] != d) continue;
        Term u = t;
        u.m.e[var] = 0;
        out.push_back(std::move(u));
    }
    return Polynomial(p.ring(), std::move(out));
}

namespace {

Polynomial coeff_of(const Polynomial& p, int var, int d) {
    return coefficient_in(p, var, d);
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading().c);
}

Polynomial content_wrt(const Polynomial& p, int var) {
    Polynomial c(p.ring());
    for (int d = 0; d <= p.degree_in(var); ++d) {
        Polynomial cd = coeff_of(p, var, d);
        if (!cd.is_zero()) c = poly_gcd(c, cd);
        if (c.is_one()) break;
    }
    return c;
}

// Pseudo-remainder of a by b with respect to var (deg_var(b) >= 1).
Polynomial prem(Polynomial a, const Polynomial& b, int var) {
    int db = b.degree_in(var);
    Polynomial lb = coeff_of(b, var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        int da = a.degree_in(var);
        Polynomial la = coeff_of(a, var, da);
        Polynomial shift = Polynomial::variable(a.ring(), var, da - db);
        a = a * lb - b * (la * shift);
    }
    return a;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    int var = -1;
    for (int v = a.ring()->nvars(); v-- > 0;) {
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) { var = v; break; }
    }
    if (var < 0) return Polynomial(a.ring(), Rational(1)); // both constants
    if (a.degree_in(var) == 0) return monic(poly_gcd(content_wrt(b, var), a));
    if (b.degree_in(var) == 0) return monic(poly_gcd(content_wrt(a, var), b));

    Polynomial ca = content_wrt(a, var), cb = content_wrt(b, var);
    Polynomial c = poly_gcd(ca, cb);
    Polynomial A = exact_divide(a, ca), B = exact_divide(b, cb);
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
    while (!B.is_zero()) {
        Polynomial r = prem(A, B, var);
        A = B;
        if (r.is_zero()) { B = Polynomial(a.ring()); break; }
        B = exact_divide(r, content_wrt(r, var));
    }
    Polynomial pp = exact_divide(A, content_wrt(A, var));
    return monic(c * pp);
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
    return monic(exact_divide(a * b, poly_gcd(a, b)));
}

} // namespace duality
