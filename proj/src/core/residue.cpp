#include "residue.hpp"

#include <algorithm>

namespace duality {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();
}

std::vector<Rational> QuotientAlgebra::coordinates(const Polynomial& phi) const {
    Polynomial nf = normal_form(phi, gb);
    std::vector<Rational> coords(basis.size(), Rational(0));
    for (auto& t : nf.terms()) {
        auto it = std::find(basis.begin(), basis.end(), t.m);
        if (it == basis.end())
            throw std::runtime_error("quotient algebra: non-standard monomial in NF");
        coords[static_cast<size_t>(it - basis.begin())] = t.c;
    }
    return coords;
}

std::vector<std::vector<Rational>> QuotientAlgebra::mult_matrix(const Polynomial& phi) const {
    std::vector<std::vector<Rational>> M(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        Polynomial pb = phi.mul_term(basis[j], Rational(1));
        M[j] = coordinates(pb); // column j stored as row; symmetric use below
    }
    // Transpose so M[i][j] = coefficient of b_i in phi*b_j.
    std::vector<std::vector<Rational>> T(basis.size(),
                                         std::vector<Rational>(basis.size(), Rational(0)));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < basis.size(); ++i) T[i][j] = M[j][i];
    return T;
}

QuotientAlgebra quotient_algebra(const std::vector<Polynomial>& gens) {
    QuotientAlgebra A;
    A.ring = gens.front().ring();
    A.generators = gens;
    A.gb = ideal_gb(gens);
    if (ideal_dimension(A.gb) != 0)
        throw RejectError("not-zero-dimensional",
                          "quotient algebra requires a zero-dimensional ideal");
    auto lts = leading_monomials(A.gb);
    int n = A.ring->nvars();
    std::vector<int> bound(n, -1);
    for (auto& m : lts) {
        for (int v = 0; v < n; ++v) {
            bool pure = m.e[v] > 0;
            for (int u = 0; u < n && pure; ++u)
                if (u != v && m.e[u]) pure = false;
            if (pure && (bound[v] < 0 || m.e[v] < bound[v])) bound[v] = m.e[v];
        }
    }
    for (int v = 0; v < n; ++v)
        if (bound[v] < 0)
            throw std::runtime_error("quotient algebra: missing pure power bound");
    std::vector<Monomial> box{Monomial(n)};
    for (int v = 0; v < n; ++v) {
        std::vector<Monomial> next;
        for (auto& m : box)
            for (int e = 0; e < bound[v]; ++e) {
                Monomial u = m;
                u.e[v] = e;
                next.push_back(u);
            }
        box = std::move(next);
    }
    for (auto& m : box) {
        bool standard = true;
        for (auto& lt : lts)
            if (lt.divides(m)) { standard = false; break; }
        if (standard) A.basis.push_back(m);
    }
    std::sort(A.basis.begin(), A.basis.end(), [](const Monomial& a, const Monomial& b) {
        return kGrevlex.cmp(a, b) < 0;
    });
    return A;
}

Polynomial DoubledRing::zeta_to_base(const Polynomial& p) const {
    std::vector<int> back(ring->nvars(), -1);
    for (int v = 0; v < base->nvars(); ++v) back[zeta_of[v]] = v;
    std::vector<Term> out;
    for (auto& t : p.terms()) {
        Monomial m(base->nvars());
        for (int v = 0; v < ring->nvars(); ++v) {
            if (!t.m.e[v]) continue;
            if (back[v] < 0)
                throw std::runtime_error("zeta_to_base: z variable present");
            m.e[back[v]] = t.m.e[v];
        }
        out.push_back({std::move(m), t.c});
    }
    return Polynomial(base, std::move(out));
}

DoubledRing double_ring(const RingPtr& base) {
    std::vector<std::string> vars;
    for (auto& v : base->vars) {
        std::string name = v + "_";
        while (base->var_index(name) >= 0) name += "_";
        vars.push_back(name);
    }
    for (auto& v : base->vars) vars.push_back(v);
    DoubledRing dr;
    dr.ring = make_ring(vars);
    dr.base = base;
    int n = base->nvars();
    for (int v = 0; v < n; ++v) {
        dr.zeta_of.push_back(v);
        dr.z_of.push_back(n + v);
    }
    return dr;
}

namespace {

// Exact quotient of g by (z_var - zeta_var), synthetic division in z_var.
Polynomial divide_linear(const DoubledRing& dr, const Polynomial& g, int base_var) {
    int zv = dr.z_of[base_var], cv = dr.zeta_of[base_var];
    int d = g.degree_in(zv);
    Polynomial zeta = Polynomial::variable(dr.ring, cv);
    Polynomial quot(dr.ring);
    Polynomial carry(dr.ring); // running Horner coefficient
    for (int k = d; k >= 1; --k) {
        carry = coefficient_in(g, zv, k) + zeta * carry;
        quot = quot + carry * Polynomial::variable(dr.ring, zv, k - 1);
    }
    Polynomial rem = coefficient_in(g, zv, 0) + zeta * carry;
    if (!rem.is_zero())
        throw std::runtime_error("hefer: division by linear factor not exact");
    return quot;
}

} // namespace

PolyMatrix hefer_matrix(const DoubledRing& dr, const std::vector<Polynomial>& f,
                        const std::vector<int>& order) {
    int n = dr.base->nvars();
    if (static_cast<int>(f.size()) != n)
        throw RejectError("not-complete-intersection",
                          "hefer matrix needs n polynomials in n variables");
    std::vector<int> ord = order;
    if (ord.empty())
        for (int v = 0; v < n; ++v) ord.push_back(v);
    PolyMatrix h(dr.ring, n, n);
    for (int k = 0; k < n; ++k) {
        // Mixed substitutions telescoping f_k(z) - f_k(zeta) along ord.
        std::vector<Polynomial> mixed;
        for (int j = 0; j <= n; ++j) {
            std::vector<int> var_map(n);
            for (int v = 0; v < n; ++v) var_map[v] = dr.z_of[v];
            for (int t = 0; t < j; ++t) var_map[ord[t]] = dr.zeta_of[ord[t]];
            mixed.push_back(f[k].map_ring(dr.ring, var_map));
        }
        for (int j = 0; j < n; ++j) {
            Polynomial diff = mixed[j] - mixed[j + 1]; // divisible by z_j - zeta_j
            h.at(ord[j], k) = -divide_linear(dr, diff, ord[j]);
        }
    }
    // Re-verify the defining identity by expansion.
    for (int k = 0; k < n; ++k) {
        Polynomial lhs(dr.ring);
        for (int j = 0; j < n; ++j) {
            Polynomial zeta = Polynomial::variable(dr.ring, dr.zeta_of[j]);
            Polynomial z = Polynomial::variable(dr.ring, dr.z_of[j]);
            lhs = lhs + h.at(j, k) * (zeta - z);
        }
        Polynomial rhs = dr.to_z(f[k]) - dr.to_zeta(f[k]);
        if (!(lhs == rhs))
            throw std::runtime_error("hefer: identity verification failed");
    }
    return h;
}

Polynomial jacobian_det(const std::vector<Polynomial>& f) {
    const RingPtr& ring = f.front().ring();
    int n = ring->nvars();
    PolyMatrix J(ring, n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) J.at(k, j) = f[k].derivative(j);
    return J.det();
}

Rational ResidueFunctional::residue(const Polynomial& phi) const {
    std::vector<Rational> coords = algebra.coordinates(phi);
    Rational acc(0);
    for (size_t i = 0; i < coords.size(); ++i) acc += coords[i] * values[i];
    return acc;
}

std::vector<std::vector<Rational>> ResidueFunctional::gram() const {
    size_t d = algebra.basis.size();
    std::vector<std::vector<Rational>> G(d, std::vector<Rational>(d, Rational(0)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Polynomial bi = Polynomial::monomial(algebra.ring, algebra.basis[i]);
            G[i][j] = residue(bi.mul_term(algebra.basis[j], Rational(1)));
        }
    return G;
}

Rational ResidueFunctional::trace_form(const Polynomial& phi) const {
    auto M = algebra.mult_matrix(phi);
    Rational tr(0);
    for (size_t i = 0; i < M.size(); ++i) tr += M[i][i];
    return tr;
}

namespace {

// Solve A x = b over Q; A is square and must be invertible.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> A,
                                     std::vector<Rational> b) {
    size_t n = A.size();
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && A[sel][c] == 0) ++sel;
        if (sel == n)
            throw std::runtime_error("residue: dual basis matrix is singular");
        std::swap(A[c], A[sel]);
        std::swap(b[c], b[sel]);
        Rational inv = Rational(1) / A[c][c];
        for (size_t j = 0; j < n; ++j) A[c][j] *= inv;
        b[c] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (size_t j = 0; j < n; ++j) A[i][j] -= f * A[c][j];
            b[i] -= f * b[c];
        }
    }
    return b;
}

} // namespace

ResidueFunctional residue_functional(const std::vector<Polynomial>& f,
                                     const std::vector<int>& hefer_order) {
    ResidueFunctional R;
    R.algebra = quotient_algebra(f);
    const RingPtr& base = R.algebra.ring;
    R.doubled = double_ring(base);
    R.hefer = hefer_matrix(R.doubled, f, hefer_order);
    R.bezoutian = R.hefer.det();

    // Reduce the Bezoutian modulo J(zeta) + J(z); both supports stay
    // standard, giving the decomposition sum_i a_i(zeta) b_i(z).
    std::vector<Polynomial> doubled_gens;
    for (auto& g : f) doubled_gens.push_back(R.doubled.to_zeta(g));
    for (auto& g : f) doubled_gens.push_back(R.doubled.to_z(g));
    GroebnerBasis G2 = ideal_gb(doubled_gens);
    Polynomial nf = normal_form(R.bezoutian, G2);

    size_t dim = R.algebra.basis.size();
    int n = base->nvars();
    std::vector<Polynomial> a(dim, Polynomial(base));
    for (auto& t : nf.terms()) {
        Monomial zeta_part(n), z_part(n);
        for (int v = 0; v < n; ++v) {
            zeta_part.e[v] = t.m.e[R.doubled.zeta_of[v]];
            z_part.e[v] = t.m.e[R.doubled.z_of[v]];
        }
        auto it = std::find(R.algebra.basis.begin(), R.algebra.basis.end(), z_part);
        if (it == R.algebra.basis.end())
            throw std::runtime_error("bezoutian: non-standard z-monomial in NF");
        size_t i = static_cast<size_t>(it - R.algebra.basis.begin());
        a[i] = a[i] + Polynomial::monomial(base, zeta_part, t.c);
    }

    // Residues of the basis from the dual-basis expansion of 1.
    std::vector<std::vector<Rational>> A(dim, std::vector<Rational>(dim, Rational(0)));
    for (size_t i = 0; i < dim; ++i) {
        std::vector<Rational> coords = R.algebra.coordinates(a[i]);
        for (size_t m = 0; m < dim; ++m) A[m][i] = coords[m];
    }
    std::vector<Rational> e1(dim, Rational(0));
    if (!R.algebra.basis[0].is_one())
        throw std::runtime_error("residue: basis does not start at 1");
    e1[0] = Rational(1);
    R.values = solve_rational(A, e1);
    R.dual_basis = a;
    R.sign = 1;

    // Anchor the global sign with the trace identity res(Jac) = dim.
    Rational rj = R.residue(jacobian_det(f));
    Rational want = Rational(static_cast<int>(dim));
    if (rj == -want) {
        R.sign = -1;
        for (auto& v : R.values) v = -v;
        for (auto& p : R.dual_basis) p = -p;
        R.bezoutian = -R.bezoutian;
    } else if (rj != want) {
        throw std::runtime_error("residue: trace normalization failed");
    }
    return R;
}

} // namespace duality
