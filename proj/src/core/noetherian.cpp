#include "noetherian.hpp"

#include <algorithm>

namespace duality {

namespace {

// Monomials in the dependent variables of total degree <= d, ascending.
std::vector<Monomial> dependent_monomials(const RingPtr& ring,
                                          const std::vector<int>& dep, int d) {
    std::vector<Monomial> out{Monomial(ring->nvars())};
    for (int step = 0; step < d; ++step) {
        std::vector<Monomial> next = out;
        for (auto& m : out) {
            if (m.deg() != step) continue;
            for (int v : dep) {
                Monomial e = m;
                e.e[v] += 1;
                if (std::find(next.begin(), next.end(), e) == next.end())
                    next.push_back(e);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return DiffOperator::beta_cmp(a, b) < 0;
    });
    return out;
}

// Kill every term carrying a dependent variable (evaluation at w = 0).
Polynomial eval_dependent_zero(const Polynomial& p, const std::vector<char>& dependent) {
    std::vector<Term> out;
    for (auto& t : p.terms()) {
        bool pure = true;
        for (size_t v = 0; v < dependent.size(); ++v)
            if (dependent[v] && t.m.e[v]) { pure = false; break; }
        if (pure) out.push_back(t);
    }
    return Polynomial(p.ring(), std::move(out));
}

// Reduced row echelon form over the rational-function field; returns
// pivot column per row.
std::vector<int> rref(std::vector<std::vector<RatFunc>>& M) {
    std::vector<int> pivots;
    if (M.empty()) return pivots;
    size_t rows = M.size(), cols = M[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && M[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(M[r], M[sel]);
        RatFunc inv = RatFunc(Polynomial(M[r][c].ring(), Rational(1))) / M[r][c];
        for (size_t j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            RatFunc f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    M.resize(r); // drop zero rows
    return pivots;
}

// Nullspace basis of M (rows x cols), echelonized against the column order.
std::vector<std::vector<RatFunc>> nullspace(std::vector<std::vector<RatFunc>> M,
                                            size_t cols, const RingPtr& ring) {
    RatFunc zero = RatFunc(Polynomial(ring));
    RatFunc one = RatFunc(Polynomial(ring, Rational(1)));
    std::vector<int> pivots = rref(M);
    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<RatFunc>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<RatFunc> v(cols, zero);
        v[fc] = one;
        for (size_t r = 0; r < M.size(); ++r) v[pivots[r]] = -M[r][fc];
        basis.push_back(std::move(v));
    }
    // Echelonize the basis itself so the output is canonical.
    rref(basis);
    return basis;
}

std::vector<Polynomial> translated_generators(const std::vector<Polynomial>& Q,
                                              const RationalSection& section) {
    std::map<int, Polynomial> shift;
    for (auto& [v, g] : section.graph) {
        Polynomial w = Polynomial::variable(g.ring(), v);
        shift.emplace(v, w + g);
    }
    std::vector<Polynomial> out;
    for (auto& q : Q) out.push_back(q.substitute(shift));
    return out;
}

} // namespace

bool check_noether_position(const std::vector<Polynomial>& Q, const VariableSplit& split) {
    const RingPtr& ring = Q.front().ring();
    std::vector<char> free_mask = split.free_mask();
    // Block order with the dependent variables first eliminates them.
    MonomialOrder ord = MonomialOrder::block(split.dependent);
    GroebnerBasis G = ideal_gb(Q, ord);
    for (auto& g : G.gens)
        if (g[0].supported_on(free_mask)) return false; // Q meets k[free]
    for (int v = 0; v < ring->nvars(); ++v) {
        if (!split.dependent[v]) continue;
        bool pure_power = false;
        for (auto& g : G.gens) {
            const Monomial& lt = g[0].leading(ord).m;
            bool only_v = lt.e[v] > 0;
            for (int u = 0; u < ring->nvars() && only_v; ++u)
                if (u != v && lt.e[u]) only_v = false;
            if (only_v) { pure_power = true; break; }
        }
        if (!pure_power) return false;
    }
    return true;
}

bool check_section(const std::vector<Polynomial>& Q, const VariableSplit& split,
                   const RationalSection& section) {
    const RingPtr& ring = Q.front().ring();
    std::vector<char> free_mask = split.free_mask();
    std::vector<Polynomial> P;
    for (int v = 0; v < ring->nvars(); ++v) {
        if (!split.dependent[v]) continue;
        auto it = section.graph.find(v);
        if (it == section.graph.end()) return false;
        if (!it->second.supported_on(free_mask)) return false;
        P.push_back(Polynomial::variable(ring, v) - it->second);
    }
    // P subset of sqrt(Q) ...
    for (auto& gen : P)
        if (!radical_membership(gen, Q)) return false;
    // ... and Q subset of P, so sqrt(Q) = P (P is prime).
    GroebnerBasis GP = ideal_gb(P);
    for (auto& q : Q)
        if (!membership(q, GP)) return false;
    return true;
}

std::vector<DualSpaceOp> dual_space(const std::vector<Polynomial>& Q,
                                    const VariableSplit& split,
                                    const RationalSection& section) {
    const RingPtr& ring = Q.front().ring();
    if (!check_noether_position(Q, split))
        throw RejectError("position-not-verified",
                          "variables are not in Noether position for this ideal");
    if (!check_section(Q, split, section))
        throw RejectError("section-mismatch",
                          "section does not present the radical of the ideal");

    std::vector<int> dep = split.dependent_indices(ring);
    std::vector<Polynomial> gens = translated_generators(Q, section);

    auto space_at = [&](int d) {
        std::vector<Monomial> betas = dependent_monomials(ring, dep, d);
        std::vector<Monomial> gammas = betas; // same bound on multipliers
        std::vector<std::vector<RatFunc>> rows;
        for (auto& q : gens) {
            for (auto& gamma : gammas) {
                Polynomial qg = q.mul_term(gamma, Rational(1));
                std::vector<RatFunc> row;
                row.reserve(betas.size());
                bool nonzero = false;
                for (auto& beta : betas) {
                    Polynomial cell =
                        eval_dependent_zero(qg.derivative(beta), split.dependent);
                    if (!cell.is_zero()) nonzero = true;
                    row.push_back(RatFunc(cell));
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        return std::make_pair(betas, nullspace(std::move(rows), betas.size(), ring));
    };

    int prev_dim = -1;
    for (int d = 0;; ++d) {
        auto [betas, basis] = space_at(d);
        int dim = static_cast<int>(basis.size());
        if (dim == prev_dim) {
            std::vector<DualSpaceOp> ops;
            for (auto& vec : basis) {
                DualSpaceOp op;
                for (size_t j = 0; j < betas.size(); ++j)
                    if (!vec[j].is_zero()) op.terms.push_back({betas[j], vec[j]});
                ops.push_back(std::move(op));
            }
            return ops;
        }
        prev_dim = dim;
        if (d > 200)
            throw std::runtime_error("dual_space: did not stabilize");
    }
}

NoetherianSystem clear_denominators(const std::vector<DualSpaceOp>& ops,
                                    const std::vector<Polynomial>& Q,
                                    const VariableSplit& split,
                                    const RationalSection& section) {
    const RingPtr& ring = Q.front().ring();
    NoetherianSystem S;
    S.ring = ring;
    S.split = split;
    for (int v = 0; v < ring->nvars(); ++v)
        if (split.dependent[v])
            S.variety_ideal.push_back(Polynomial::variable(ring, v) -
                                      section.graph.at(v));
    Polynomial h(ring, Rational(1));
    for (auto& op : ops)
        for (auto& [beta, c] : op.terms) h = poly_lcm(h, c.den());
    S.clearing_poly = h;
    S.clearing_power = 0;
    // A shear w -> w + g(free) commutes with d/dw, so the cleared
    // coefficients transfer to the original coordinates unchanged.
    for (auto& op : ops) {
        bool needs_h = false;
        for (auto& [beta, c] : op.terms)
            if (!c.den().is_one()) { needs_h = true; break; }
        DiffOperator L(ring);
        for (auto& [beta, c] : op.terms) {
            Polynomial coeff =
                needs_h ? c.num() * exact_divide(h, c.den()) : c.num();
            L.add_term(beta, coeff);
        }
        S.operators.push_back(std::move(L));
        if (needs_h) S.clearing_power = 1;
        S.nil_index = std::max(S.nil_index, S.operators.back().order());
    }
    return S;
}

NoetherianSystem noetherian_system(const std::vector<Polynomial>& Q,
                                   const VariableSplit& split,
                                   const RationalSection& section) {
    return clear_denominators(dual_space(Q, split, section), Q, split, section);
}

bool noetherian_membership(const Polynomial& phi, const NoetherianSystem& S) {
    GroebnerBasis GP = ideal_gb(S.variety_ideal);
    for (auto& L : S.operators)
        if (!membership(L.apply(phi), GP)) return false;
    return true;
}

} // namespace duality
