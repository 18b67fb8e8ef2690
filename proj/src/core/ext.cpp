#include "ext.hpp"

namespace duality {

namespace {

// Generators of the ideal of (#rows)-minors of the presentation.
std::vector<Polynomial> fitting0(const PolyMatrix& relations) {
    return relations.minors(relations.rows());
}

bool is_unit(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> nz;
    for (auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return false;
    return is_unit_ideal(ideal_gb(nz));
}

} // namespace

ExtModule ext_module(const FreeResolution& r, int k) {
    const Complex& c = r.complex;
    const RingPtr& ring = c.diffs[0].ring();
    int N = c.length();
    if (k < 0 || k > N) throw std::runtime_error("ext_module: k out of range");

    // Dual differential g_j = f_j^T maps E_{j-1}^* -> E_j^*.
    PolyMatrix K = (k < N) ? syzygy_matrix(c.diffs[k].transpose())
                           : identity_matrix(ring, c.ranks[N]);
    ExtModule m;
    m.k = k;
    m.num_generators = K.cols();
    if (K.cols() == 0) {
        m.relations = PolyMatrix(ring, 0, 0);
        m.fitt0 = {Polynomial(ring, Rational(1))};
        m.zero = true;
        m.support_codim = ring->nvars() + 1;
        return m;
    }
    // Relations: x with K*x in im(g_k), including syzygies of K itself;
    // read off from the syzygies of [K | g_k].
    PolyMatrix gk = (k >= 1) ? c.diffs[k - 1].transpose() : PolyMatrix(ring, K.rows(), 0);
    PolyMatrix A(ring, K.rows(), K.cols() + gk.cols());
    for (int rr = 0; rr < K.rows(); ++rr) {
        for (int cc = 0; cc < K.cols(); ++cc) A.at(rr, cc) = K.at(rr, cc);
        for (int cc = 0; cc < gk.cols(); ++cc) A.at(rr, K.cols() + cc) = gk.at(rr, cc);
    }
    PolyMatrix S = syzygy_matrix(A);
    PolyMatrix rel(ring, K.cols(), S.cols());
    for (int rr = 0; rr < K.cols(); ++rr)
        for (int cc = 0; cc < S.cols(); ++cc) rel.at(rr, cc) = S.at(rr, cc);
    m.relations = rel;
    m.fitt0 = fitting0(rel);
    m.zero = is_unit(ring, m.fitt0);
    m.support_codim = m.zero ? ring->nvars() + 1 : codim_of_ideal(ring, m.fitt0);
    return m;
}

std::vector<ExtModule> all_ext_modules(const FreeResolution& r) {
    std::vector<ExtModule> out;
    for (int k = 0; k <= r.length(); ++k) out.push_back(ext_module(r, k));
    return out;
}

int support_codim(const ExtModule& m) { return m.support_codim; }

PurityReport purity_check(const FreeResolution& r) {
    const Complex& c = r.complex;
    const RingPtr& ring = c.diffs[0].ring();
    int n = ring->nvars();
    // codim of F from Fitt_0(f_1), which cuts the support of F.
    std::vector<Polynomial> ann_locus = c.diffs[0].minors(c.ranks[0]);
    int p = codim_of_ideal(ring, ann_locus);
    if (p <= 0 || p > n) throw CodimZeroError();

    auto loci = rank_loci(r);
    auto exts = all_ext_modules(r);

    PurityReport rep;
    rep.p = p;
    rep.pure_by_rank_loci = true;
    rep.pure_by_ext_support = true;
    rep.cohen_macaulay = true;
    for (int k = 1; k <= r.length(); ++k) {
        PurityEvidence ev;
        ev.k = k;
        ev.codim_Zk = loci[k - 1].codim;
        ev.codim_supp_ext = exts[k].support_codim;
        rep.per_k.push_back(ev);
        if (k > p) {
            if (ev.codim_Zk < k + 1) rep.pure_by_rank_loci = false;
            if (ev.codim_supp_ext < k + 1) rep.pure_by_ext_support = false;
            if (ev.codim_Zk != n + 1) rep.cohen_macaulay = false;
        }
    }
    rep.routes_agree = rep.pure_by_rank_loci == rep.pure_by_ext_support;
    if (rep.cohen_macaulay)
        rep.verdict = PurityVerdict::CohenMacaulay;
    else if (rep.pure_by_rank_loci)
        rep.verdict = PurityVerdict::Pure;
    else
        rep.verdict = PurityVerdict::Impure;
    return rep;
}

std::vector<std::pair<int, bool>> support_containment(const FreeResolution& r) {
    auto loci = rank_loci(r);
    auto exts = all_ext_modules(r);
    std::vector<std::pair<int, bool>> out;
    for (int k = 1; k <= r.length(); ++k) {
        const ExtModule& m = exts[k];
        bool contained = true;
        if (!m.zero) {
            // V(Fitt_0(Ext^k)) subset of V(I_{r_k}(f_k)) iff every minor
            // generator lies in the radical of Fitt_0.
            std::vector<Polynomial> fitt;
            for (auto& g : m.fitt0)
                if (!g.is_zero()) fitt.push_back(g);
            for (auto& g : loci[k - 1].minor_ideal) {
                if (g.is_zero()) continue;
                if (fitt.empty() || !radical_membership(g, fitt)) {
                    contained = false;
                    break;
                }
            }
        }
        out.push_back({k, contained});
    }
    return out;
}

} // namespace duality
