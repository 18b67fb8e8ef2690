#pragma once

#include "polynomial.hpp"

namespace duality {

// Differential operator sum_beta c_beta * d^beta / dx^beta with
// polynomial coefficients; plain partial derivatives, no factorial
// normalization. Terms are kept sorted by beta (degree, then lex).
class DiffOperator {
public:
    explicit DiffOperator(RingPtr ring) : ring_(std::move(ring)) {}

    static DiffOperator identity(const RingPtr& ring) {
        DiffOperator op(ring);
        op.add_term(Monomial(ring->nvars()), Polynomial(ring, Rational(1)));
        return op;
    }

    void add_term(Monomial beta, Polynomial coeff) {
        if (coeff.is_zero()) return;
        terms_.push_back({std::move(beta), std::move(coeff)});
        std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) {
            return beta_cmp(a.first, b.first) < 0;
        });
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::pair<Monomial, Polynomial>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int order() const {
        int d = 0;
        for (auto& t : terms_) d = std::max(d, t.first.deg());
        return d;
    }

    bool is_identity() const {
        return terms_.size() == 1 && terms_[0].first.is_one() &&
               terms_[0].second.is_one();
    }

    Polynomial apply(const Polynomial& phi) const {
        require_same_ring(ring_, phi.ring());
        Polynomial acc(ring_);
        for (auto& [beta, coeff] : terms_) acc = acc + coeff * phi.derivative(beta);
        return acc;
    }

    static int beta_cmp(const Monomial& a, const Monomial& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [beta, coeff] : terms_) {
            if (!s.empty()) s += " + ";
            std::string d;
            for (int v = 0; v < ring_->nvars(); ++v) {
                if (!beta.e[v]) continue;
                if (!d.empty()) d += "*";
                d += "d" + ring_->vars[v];
                if (beta.e[v] > 1) d += "^" + std::to_string(beta.e[v]);
            }
            if (d.empty())
                s += coeff.str();
            else if (coeff.is_one())
                s += d;
            else
                s += "(" + coeff.str() + ")*" + d;
        }
        return s;
    }

private:
    RingPtr ring_;
    std::vector<std::pair<Monomial, Polynomial>> terms_;
};

} // namespace duality
