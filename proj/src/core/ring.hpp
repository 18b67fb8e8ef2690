#pragma once

#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace duality {

struct Ring {
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(Ring{std::move(vars)});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->vars == b->vars);
}

// Exponent vector; length always equals the ambient ring's variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        for (int x : e)
            if (x) return false;
        return true;
    }
    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }
    // Requires m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < a.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < a.e.size(); ++i)
            if (b.e[i] < r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
};

enum class OrderKind { Grevlex, Lex, Block };

// Total order on monomials refining divisibility. Block orders compare
// the designated first block (grevlex) before the rest (grevlex); used
// for elimination.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<char> first_block; // per-variable flag, Block only

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder block(std::vector<char> first) {
        return {OrderKind::Block, std::move(first)};
    }

    // <0 if a < b, 0 if equal, >0 if a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case OrderKind::Grevlex:
            return cmp_grevlex(a.e, b.e, nullptr, false);
        case OrderKind::Lex: {
            for (size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        }
        case OrderKind::Block: {
            int c = cmp_grevlex(a.e, b.e, &first_block, true);
            if (c) return c;
            return cmp_grevlex(a.e, b.e, &first_block, false);
        }
        }
        return 0;
    }

private:
    static int cmp_grevlex(const std::vector<int>& a, const std::vector<int>& b,
                           const std::vector<char>* mask, bool in_mask) {
        auto use = [&](size_t i) {
            return !mask || (static_cast<bool>((*mask)[i]) == in_mask);
        };
        int da = 0, db = 0;
        for (size_t i = 0; i < a.size(); ++i)
            if (use(i)) { da += a[i]; db += b[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (use(i) && a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    }
};

struct RingMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw RingMismatchError("ring mismatch");
}

} // namespace duality
