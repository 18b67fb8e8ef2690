#include "resolution.hpp"

namespace duality {

bool Complex::is_complex() const {
    for (size_t k = 0; k + 1 < diffs.size(); ++k)
        if (!(diffs[k] * diffs[k + 1]).is_zero()) return false;
    return true;
}

namespace {

void check_complex(const Complex& c) {
    for (size_t k = 0; k + 1 < c.diffs.size(); ++k)
        if (!(c.diffs[k] * c.diffs[k + 1]).is_zero())
            throw NotAComplexError(static_cast<int>(k) + 1);
}

// Drop generators of the kernel that the remaining columns already span.
PolyMatrix prune_columns(const PolyMatrix& S) {
    if (S.cols() <= 1) return S;
    const RingPtr& ring = S.ring();
    std::vector<std::vector<Polynomial>> cols;
    for (int c = 0; c < S.cols(); ++c) cols.push_back(S.column(c));
    std::vector<bool> keep(cols.size(), true);
    for (size_t i = 0; i < cols.size(); ++i) {
        std::vector<FreeModuleElement> others;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != i && keep[j]) others.push_back(cols[j]);
        if (others.empty()) continue;
        GroebnerBasis G = buchberger(ring, S.rows(), others,
                                     ModuleOrder{MonomialOrder::grevlex(),
                                                 ModuleOrderMode::TOP, 0});
        if (membership(cols[i], G)) keep[i] = false;
    }
    int kept = 0;
    for (bool k : keep) kept += k;
    PolyMatrix out(ring, S.rows(), kept);
    for (size_t i = 0, c = 0; i < cols.size(); ++i)
        if (keep[i]) out.set_column(static_cast<int>(c++), cols[i]);
    return out;
}

} // namespace

FreeResolution free_resolution(const PolyMatrix& presentation, bool minimalized) {
    const RingPtr& ring = presentation.ring();
    Complex c;
    c.ranks.push_back(presentation.rows());
    PolyMatrix cur = presentation;
    int cap = ring->nvars() + 4;
    for (int step = 0; step < cap; ++step) {
        c.diffs.push_back(cur);
        c.ranks.push_back(cur.cols());
        PolyMatrix syz = prune_columns(syzygy_matrix(cur));
        if (syz.cols() == 0) break;
        cur = syz;
        if (step == cap - 1)
            throw std::runtime_error("free_resolution: did not terminate");
    }
    FreeResolution raw;
    raw.complex = std::move(c);
    raw.minimal = false;
    if (!minimalized) {
        Complex min = minimalize(raw.complex);
        raw.betti = min.ranks;
        return raw;
    }
    return minimalize(raw);
}

Complex minimalize(Complex c) {
    check_complex(c);
    const RingPtr ring = c.diffs.empty() ? nullptr : c.diffs[0].ring();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k < c.length() && !changed; ++k) {
            PolyMatrix& f = c.diffs[k];
            for (int i = 0; i < f.rows() && !changed; ++i) {
                for (int j = 0; j < f.cols() && !changed; ++j) {
                    const Polynomial& piv = f.at(i, j);
                    if (piv.is_zero() || !piv.is_constant()) continue;
                    Rational cval = piv.constant_value();
                    // Column operations on f_k, mirrored on rows of f_{k+1}.
                    for (int j2 = 0; j2 < f.cols(); ++j2) {
                        if (j2 == j || f.at(i, j2).is_zero()) continue;
                        Polynomial lam = f.at(i, j2) * (Rational(1) / cval);
                        for (int r = 0; r < f.rows(); ++r)
                            f.at(r, j2) = f.at(r, j2) - lam * f.at(r, j);
                        if (k + 1 < c.length()) {
                            PolyMatrix& g = c.diffs[k + 1];
                            for (int cc = 0; cc < g.cols(); ++cc)
                                g.at(j, cc) = g.at(j, cc) + lam * g.at(j2, cc);
                        }
                    }
                    // Row operations on f_k, mirrored on columns of f_{k-1}.
                    for (int i2 = 0; i2 < f.rows(); ++i2) {
                        if (i2 == i || f.at(i2, j).is_zero()) continue;
                        Polynomial mu = f.at(i2, j) * (Rational(1) / cval);
                        for (int cc = 0; cc < f.cols(); ++cc)
                            f.at(i2, cc) = f.at(i2, cc) - mu * f.at(i, cc);
                        if (k > 0) {
                            PolyMatrix& h = c.diffs[k - 1];
                            for (int r = 0; r < h.rows(); ++r)
                                h.at(r, i) = h.at(r, i) + mu * h.at(r, i2);
                        }
                    }
                    // Split off the trivial summand.
                    c.diffs[k] = f.drop_row(i).drop_col(j);
                    c.ranks[k] -= 1;
                    c.ranks[k + 1] -= 1;
                    if (k + 1 < c.length()) c.diffs[k + 1] = c.diffs[k + 1].drop_row(j);
                    if (k > 0) c.diffs[k - 1] = c.diffs[k - 1].drop_col(i);
                    changed = true;
                }
            }
        }
        // Trim trailing zero modules.
        while (!c.diffs.empty() && c.ranks.back() == 0) {
            c.diffs.pop_back();
            c.ranks.pop_back();
        }
    }
    (void)ring;
    return c;
}

FreeResolution minimalize(const FreeResolution& r) {
    FreeResolution out;
    out.complex = minimalize(r.complex);
    out.minimal = true;
    out.betti = out.complex.ranks;
    return out;
}

Complex dualize(const Complex& c) {
    check_complex(c);
    Complex d;
    for (int k = c.length(); k >= 1; --k) d.diffs.push_back(c.diffs[k - 1].transpose());
    d.ranks.assign(c.ranks.rbegin(), c.ranks.rend());
    return d;
}

int codim_of_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> nz;
    for (auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return 0; // zero ideal cuts nothing
    GroebnerBasis G = ideal_gb(nz);
    int dim = ideal_dimension(G);
    if (dim < 0) return ring->nvars() + 1; // empty locus sentinel
    return ring->nvars() - dim;
}

std::vector<BEStep> be_exactness(const Complex& c) {
    check_complex(c);
    const RingPtr& ring = c.diffs.empty() ? nullptr : c.diffs[0].ring();
    std::vector<BEStep> steps;
    std::vector<int> ranks(c.length() + 2, 0);
    for (int k = 1; k <= c.length(); ++k) ranks[k] = c.diffs[k - 1].rank();
    for (int k = 1; k <= c.length(); ++k) {
        BEStep s;
        s.k = k;
        s.rank_fk = ranks[k];
        s.rank_fk_next = ranks[k + 1];
        std::vector<Polynomial> minors = c.diffs[k - 1].minors(ranks[k]);
        s.codim_minors = codim_of_ideal(ring, minors);
        if (ranks[k] + ranks[k + 1] != c.ranks[k])
            s.verdict = StepVerdict::FailsRank;
        else if (s.codim_minors < k)
            s.verdict = StepVerdict::FailsCodim;
        else
            s.verdict = StepVerdict::Exact;
        steps.push_back(std::move(s));
    }
    return steps;
}

std::vector<RankLocus> rank_loci(const FreeResolution& r) {
    const Complex& c = r.complex;
    const RingPtr& ring = c.diffs[0].ring();
    int N = c.length();
    std::vector<int> expected(N + 2, 0);
    for (int k = N; k >= 1; --k) expected[k] = c.ranks[k] - expected[k + 1];
    std::vector<RankLocus> out;
    for (int k = 1; k <= N; ++k) {
        RankLocus z;
        z.k = k;
        z.expected_rank = expected[k];
        z.minor_ideal = c.diffs[k - 1].minors(expected[k]);
        z.codim = codim_of_ideal(ring, z.minor_ideal);
        out.push_back(std::move(z));
    }
    return out;
}

} // namespace duality
