#include "groebner.hpp"

#include <algorithm>
#include <set>

namespace duality {

int ModuleOrder::cmp(int ca, const Monomial& ma, int cb, const Monomial& mb) const {
    if (mode == ModuleOrderMode::ComponentElim) {
        int blka = ca < elim_components ? 0 : 1;
        int blkb = cb < elim_components ? 0 : 1;
        if (blka != blkb) return blka < blkb ? 1 : -1; // block 0 dominates
    }
    if (mode == ModuleOrderMode::POT) {
        if (ca != cb) return ca < cb ? 1 : -1; // lower component is greater
        return base.cmp(ma, mb);
    }
    int c = base.cmp(ma, mb);
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
}

namespace {

struct ModTerm {
    int comp;
    Monomial m;
    Rational c;
};

// Flat term list sorted descending under the active module order.
using ModPoly = std::vector<ModTerm>;

ModPoly flatten(const FreeModuleElement& v, const ModuleOrder& ord) {
    ModPoly p;
    for (int comp = 0; comp < static_cast<int>(v.size()); ++comp)
        for (auto& t : v[comp].terms()) p.push_back({comp, t.m, t.c});
    std::sort(p.begin(), p.end(), [&](const ModTerm& a, const ModTerm& b) {
        return ord.cmp(a.comp, a.m, b.comp, b.m) > 0;
    });
    return p;
}

FreeModuleElement unflatten(const ModPoly& p, const RingPtr& ring, int rank) {
    std::vector<std::vector<Term>> buckets(rank);
    for (auto& t : p) buckets[t.comp].push_back({t.m, t.c});
    FreeModuleElement v;
    v.reserve(rank);
    for (int i = 0; i < rank; ++i) v.emplace_back(ring, std::move(buckets[i]));
    return v;
}

// r += c * x^m * g, resorted under ord.
ModPoly axpy(const ModPoly& r, const Rational& c, const Monomial& m,
             const ModPoly& g, const ModuleOrder& ord) {
    ModPoly shifted;
    shifted.reserve(g.size());
    for (auto& t : g) shifted.push_back({t.comp, t.m * m, t.c * c});
    ModPoly out;
    out.reserve(r.size() + shifted.size());
    size_t i = 0, j = 0;
    while (i < r.size() && j < shifted.size()) {
        int cv = ord.cmp(r[i].comp, r[i].m, shifted[j].comp, shifted[j].m);
        if (cv > 0)
            out.push_back(r[i++]);
        else if (cv < 0)
            out.push_back(shifted[j++]);
        else {
            Rational s = r[i].c + shifted[j].c;
            if (s != 0) out.push_back({r[i].comp, r[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < r.size(); ++i) out.push_back(r[i]);
    for (; j < shifted.size(); ++j) out.push_back(shifted[j]);
    return out;
}

ModPoly make_monic(ModPoly p) {
    if (p.empty()) return p;
    Rational lc = p.front().c;
    for (auto& t : p) t.c /= lc;
    return p;
}

// Full reduction: every term of the result is irreducible against G.
ModPoly reduce_full(ModPoly p, const std::vector<ModPoly>& G, const ModuleOrder& ord) {
    ModPoly rem;
    while (!p.empty()) {
        const ModTerm& lt = p.front();
        const ModPoly* red = nullptr;
        for (auto& g : G) {
            if (g.empty()) continue;
            if (g.front().comp == lt.comp && g.front().m.divides(lt.m)) {
                red = &g;
                break;
            }
        }
        if (red) {
            p = axpy(p, -lt.c / red->front().c, lt.m / red->front().m, *red, ord);
        } else {
            rem.push_back(lt);
            p.erase(p.begin());
        }
    }
    return rem;
}

std::vector<ModPoly> buchberger_raw(const RingPtr& ring,
                                    const std::vector<FreeModuleElement>& gens,
                                    const ModuleOrder& ord) {
    std::vector<ModPoly> G;
    for (auto& v : gens) {
        ModPoly p = flatten(v, ord);
        if (!p.empty()) G.push_back(make_monic(std::move(p)));
    }
    // Normal strategy: minimal lcm degree first, ties by pair index.
    struct Pair {
        int deg, i, j;
        bool operator<(const Pair& o) const {
            return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
        }
    };
    std::set<Pair> pairs;
    // The coprimality criterion is only sound when both elements live
    // entirely in one component (the ideal case); tails in other
    // components make the S-vector a genuine syzygy.
    auto single_component = [](const ModPoly& p) {
        for (auto& t : p)
            if (t.comp != p.front().comp) return false;
        return true;
    };
    auto add_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (G[i].front().comp != G[j].front().comp) continue;
            Monomial l = lcm(G[i].front().m, G[j].front().m);
            if (l == G[i].front().m * G[j].front().m &&
                single_component(G[i]) && single_component(G[j]))
                continue;
            pairs.insert({l.deg(), i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(G.size()); ++j) add_pairs(j);

    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        Monomial l = lcm(G[i].front().m, G[j].front().m);
        ModPoly s = axpy(ModPoly{}, Rational(1), l / G[i].front().m, G[i], ord);
        s = axpy(s, Rational(-1), l / G[j].front().m, G[j], ord);
        s = reduce_full(std::move(s), G, ord);
        if (!s.empty()) {
            G.push_back(make_monic(std::move(s)));
            add_pairs(static_cast<int>(G.size()) - 1);
        }
    }
    return G;
}

std::vector<ModPoly> reduce_basis(std::vector<ModPoly> G, const ModuleOrder& ord) {
    // Minimal: drop elements whose leading term another one divides.
    std::vector<ModPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = G[i].front();
            const auto& lj = G[j].front();
            if (lj.comp == li.comp && lj.m.divides(li.m) &&
                !(li.m == lj.m && j > i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // Reduced: tail-reduce each against the rest.
    std::vector<ModPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(make_monic(reduce_full(minimal[i], others, ord)));
    }
    std::sort(out.begin(), out.end(), [&](const ModPoly& a, const ModPoly& b) {
        return ord.cmp(a.front().comp, a.front().m, b.front().comp, b.front().m) > 0;
    });
    return out;
}

} // namespace

GroebnerBasis buchberger(const RingPtr& ring, int rank,
                         const std::vector<FreeModuleElement>& gens,
                         const ModuleOrder& order) {
    for (auto& v : gens) {
        if (static_cast<int>(v.size()) != rank)
            throw std::runtime_error("buchberger: rank mismatch");
        for (auto& p : v) require_same_ring(ring, p.ring());
    }
    auto G = reduce_basis(buchberger_raw(ring, gens, order), order);
    GroebnerBasis out;
    out.ring = ring;
    out.rank = rank;
    out.order = order;
    for (auto& g : G) out.gens.push_back(unflatten(g, ring, rank));
    return out;
}

GroebnerBasis ideal_gb(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    if (gens.empty()) throw std::runtime_error("ideal_gb: empty generator list");
    RingPtr ring = gens.front().ring();
    std::vector<FreeModuleElement> vs;
    for (auto& g : gens) vs.push_back({g});
    ModuleOrder mo{order, ModuleOrderMode::TOP, 0};
    return buchberger(ring, 1, vs, mo);
}

FreeModuleElement normal_form(const FreeModuleElement& v, const GroebnerBasis& G) {
    if (static_cast<int>(v.size()) != G.rank)
        throw std::runtime_error("normal_form: rank mismatch");
    std::vector<ModPoly> basis;
    for (auto& g : G.gens) basis.push_back(flatten(g, G.order));
    ModPoly r = reduce_full(flatten(v, G.order), basis, G.order);
    return unflatten(r, G.ring, G.rank);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
    return normal_form(FreeModuleElement{p}, G)[0];
}

bool membership(const FreeModuleElement& v, const GroebnerBasis& G) {
    for (auto& p : normal_form(v, G))
        if (!p.is_zero()) return false;
    return true;
}

bool membership(const Polynomial& p, const GroebnerBasis& G) {
    return normal_form(p, G).is_zero();
}

bool is_unit_ideal(const GroebnerBasis& G) {
    for (auto& g : G.gens)
        if (g[0].is_constant() && !g[0].is_zero()) return true;
    return false;
}

PolyMatrix syzygy_matrix(const PolyMatrix& M) {
    const RingPtr& ring = M.ring();
    int r = M.rows(), s = M.cols();
    // Embed column i as (column_i, e_i) in R^(r+s); with the original
    // components dominating, basis elements supported on the tail block
    // generate the syzygy module.
    std::vector<FreeModuleElement> gens;
    for (int c = 0; c < s; ++c) {
        FreeModuleElement v(r + s, Polynomial(ring));
        for (int i = 0; i < r; ++i) v[i] = M.at(i, c);
        v[r + c] = Polynomial(ring, Rational(1));
        gens.push_back(std::move(v));
    }
    ModuleOrder ord{MonomialOrder::grevlex(), ModuleOrderMode::ComponentElim, r};
    GroebnerBasis G = buchberger(ring, r + s, gens, ord);
    std::vector<FreeModuleElement> syz;
    for (auto& g : G.gens) {
        bool head_zero = true;
        for (int i = 0; i < r; ++i)
            if (!g[i].is_zero()) { head_zero = false; break; }
        if (head_zero) {
            FreeModuleElement tail(g.begin() + r, g.end());
            syz.push_back(std::move(tail));
        }
    }
    PolyMatrix S(ring, s, static_cast<int>(syz.size()));
    for (int c = 0; c < S.cols(); ++c) S.set_column(c, syz[c]);
    return S;
}

std::vector<Monomial> leading_monomials(const GroebnerBasis& I) {
    if (I.rank != 1) throw std::runtime_error("leading_monomials: rank-1 only");
    std::vector<Monomial> lts;
    for (auto& g : I.gens) lts.push_back(g[0].leading(I.order.base).m);
    return lts;
}

int ideal_dimension(const GroebnerBasis& I) {
    if (is_unit_ideal(I)) return -1;
    auto lts = leading_monomials(I);
    int n = I.ring->nvars();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (auto& m : lts) {
            bool inside = true;
            for (int v = 0; v < n; ++v)
                if (m.e[v] && !(mask & (1u << v))) { inside = false; break; }
            if (inside) { independent = false; break; }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

int ideal_dimension(const std::vector<Polynomial>& gens) {
    return ideal_dimension(ideal_gb(gens));
}

int ideal_codim(const std::vector<Polynomial>& gens) {
    return gens.front().ring()->nvars() - ideal_dimension(gens);
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<char>& vars_to_keep) {
    std::vector<char> first;
    for (char k : vars_to_keep) first.push_back(k ? 0 : 1); // eliminated block first
    GroebnerBasis G = ideal_gb(gens, MonomialOrder::block(first));
    std::vector<Polynomial> out;
    for (auto& g : G.gens)
        if (g[0].supported_on(vars_to_keep)) out.push_back(g[0]);
    return out;
}

bool radical_membership(const Polynomial& phi, const std::vector<Polynomial>& gens) {
    const RingPtr& ring = phi.ring();
    std::vector<std::string> vars = ring->vars;
    std::string t = "t_";
    while (std::find(vars.begin(), vars.end(), t) != vars.end()) t += "_";
    vars.push_back(t);
    RingPtr ext = make_ring(vars);
    std::vector<int> var_map;
    for (int v = 0; v < ring->nvars(); ++v) var_map.push_back(v);
    std::vector<Polynomial> ext_gens;
    for (auto& g : gens) ext_gens.push_back(g.map_ring(ext, var_map));
    Polynomial one(ext, Rational(1));
    Polynomial tv = Polynomial::variable(ext, ext->nvars() - 1);
    ext_gens.push_back(one - tv * phi.map_ring(ext, var_map));
    return is_unit_ideal(ideal_gb(ext_gens));
}

} // namespace duality
