#include "engine.hpp"

#include <random>
#include <sstream>

#include "ext.hpp"
#include "residue.hpp"

namespace duality {

namespace {

using nlohmann::json;

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

json j_poly_list(const std::vector<Polynomial>& ps) {
    json a = json::array();
    for (auto& p : ps) a.push_back(p.str());
    return a;
}

json j_matrix(const PolyMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json j_complex(const Complex& c) {
    json out;
    out["ranks"] = c.ranks;
    json diffs = json::array();
    for (auto& d : c.diffs) diffs.push_back(j_matrix(d));
    out["differentials"] = std::move(diffs);
    return out;
}

const char* verdict_str(StepVerdict v) {
    switch (v) {
    case StepVerdict::Exact: return "exact";
    case StepVerdict::FailsRank: return "fails-rank";
    case StepVerdict::FailsCodim: return "fails-codim";
    }
    return "?";
}

json j_be_steps(const std::vector<BEStep>& steps) {
    json a = json::array();
    for (auto& s : steps) {
        json e;
        e["k"] = s.k;
        e["rank"] = s.rank_fk;
        e["rank_next"] = s.rank_fk_next;
        e["codim_minors"] = s.codim_minors;
        e["verdict"] = verdict_str(s.verdict);
        a.push_back(std::move(e));
    }
    return a;
}

// The complex under analysis: explicit matrices if given, otherwise the
// minimal resolution of the presentation.
Complex input_complex(const Problem& prob) {
    if (!prob.complex_matrices.empty()) {
        Complex c;
        c.diffs = prob.complex_matrices;
        c.ranks.push_back(c.diffs[0].rows());
        for (auto& d : c.diffs) c.ranks.push_back(d.cols());
        if (!c.is_complex()) {
            for (size_t k = 0; k + 1 < c.diffs.size(); ++k)
                if (!(c.diffs[k] * c.diffs[k + 1]).is_zero())
                    throw NotAComplexError(static_cast<int>(k) + 1);
        }
        return c;
    }
    return free_resolution(prob.presentation()).complex;
}

VariableSplit effective_split(const Problem& prob, const EngineOptions& opts) {
    if (!opts.split.empty()) return parse_split(prob.ring, opts.split);
    if (prob.split) return *prob.split;
    throw RejectError("missing-split", "command needs a free/dependent split");
}

RationalSection effective_section(const Problem& prob, const EngineOptions& opts) {
    if (!opts.section.empty()) return parse_section(prob.ring, opts.section);
    if (prob.section) return *prob.section;
    throw RejectError("missing-section", "command needs a section for the variety");
}

json j_split(const RingPtr& ring, const VariableSplit& split) {
    json free_vars = json::array(), dep_vars = json::array();
    for (int v = 0; v < ring->nvars(); ++v)
        (split.dependent[v] ? dep_vars : free_vars).push_back(ring->vars[v]);
    return json{{"free", std::move(free_vars)}, {"dependent", std::move(dep_vars)}};
}

json j_operator(const DiffOperator& op) {
    json terms = json::array();
    for (auto& [beta, coeff] : op.terms()) {
        json t;
        t["coeff"] = coeff.str();
        json partial = json::object();
        for (int v = 0; v < op.ring()->nvars(); ++v)
            if (beta.e[v]) partial[op.ring()->vars[v]] = beta.e[v];
        t["partial"] = std::move(partial);
        terms.push_back(std::move(t));
    }
    return json{{"op", op.str()}, {"order", op.order()}, {"terms", std::move(terms)}};
}

json j_noetherian_system(const NoetherianSystem& S) {
    json out;
    out["split"] = j_split(S.ring, S.split);
    out["variety_ideal"] = j_poly_list(S.variety_ideal);
    json ops = json::array();
    for (auto& op : S.operators) ops.push_back(j_operator(op));
    out["operators"] = std::move(ops);
    out["nil_index"] = S.nil_index;
    out["clearing_power"] = S.clearing_power;
    out["clearing_poly"] = S.clearing_poly.str();
    return out;
}

MonomialOrder order_from(const EngineOptions& opts) {
    if (opts.order == "grevlex") return MonomialOrder::grevlex();
    if (opts.order == "lex") return MonomialOrder::lex();
    throw std::invalid_argument("unknown order '" + opts.order + "'");
}

Polynomial required_phi(const Problem& prob, const EngineOptions& opts) {
    if (opts.phi.empty())
        throw std::invalid_argument("command needs a query polynomial (phi)");
    return parse_polynomial(prob.ring, opts.phi);
}

const char* purity_verdict_str(PurityVerdict v) {
    switch (v) {
    case PurityVerdict::CohenMacaulay: return "cohen-macaulay";
    case PurityVerdict::Pure: return "pure";
    case PurityVerdict::Impure: return "impure";
    }
    return "?";
}

json run_purity(const Problem& prob) {
    FreeResolution r = free_resolution(prob.presentation());
    PurityReport rep = purity_check(r);
    auto containment = support_containment(r);
    json out;
    out["p"] = rep.p;
    out["verdict"] = purity_verdict_str(rep.verdict);
    out["cohen_macaulay"] = rep.cohen_macaulay;
    out["pure_by_rank_loci"] = rep.pure_by_rank_loci;
    out["pure_by_ext_support"] = rep.pure_by_ext_support;
    out["routes_agree"] = rep.routes_agree;
    json per_k = json::array();
    for (size_t i = 0; i < rep.per_k.size(); ++i) {
        auto& e = rep.per_k[i];
        json jk;
        jk["k"] = e.k;
        jk["codim_Zk"] = e.codim_Zk;
        jk["codim_supp_ext"] = e.codim_supp_ext;
        jk["supp_in_Zk"] = containment[i].second;
        per_k.push_back(std::move(jk));
    }
    out["per_k"] = std::move(per_k);
    return out;
}

json run_residue(const Problem& prob) {
    ResidueFunctional rf = residue_functional(prob.ideal_generators());
    json out;
    out["dim"] = rf.algebra.dim();
    json basis = json::array(), values = json::array();
    for (int i = 0; i < rf.algebra.dim(); ++i) {
        basis.push_back(Polynomial::monomial(rf.algebra.ring, rf.algebra.basis[i]).str());
        values.push_back(rat_str(rf.values[i]));
    }
    out["basis"] = std::move(basis);
    out["residues"] = std::move(values);
    out["dual_basis"] = j_poly_list(rf.dual_basis);
    json gram = json::array();
    for (auto& row : rf.gram()) {
        json jr = json::array();
        for (auto& v : row) jr.push_back(rat_str(v));
        gram.push_back(std::move(jr));
    }
    out["gram"] = std::move(gram);
    Polynomial jac = jacobian_det(rf.algebra.generators);
    out["jacobian"] = jac.str();
    out["jacobian_residue"] = rat_str(rf.residue(jac));
    return out;
}

// Structured random polynomials for the cross-check: degree <= maxdeg,
// one to three terms, small coefficients.
Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int maxdeg) {
    int nterms = 1 + static_cast<int>(rng() % 3);
    Polynomial p(ring);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(ring->nvars());
        int d = static_cast<int>(rng() % (maxdeg + 1));
        for (int i = 0; i < d; ++i) m.e[rng() % ring->nvars()] += 1;
        int c = static_cast<int>(rng() % 6) - 3;
        if (c >= 0) ++c; // skip zero
        p = p + Polynomial::monomial(ring, m, Rational(c));
    }
    return p;
}

Polynomial random_trial(std::mt19937_64& rng, int category,
                        const std::vector<Polynomial>& Q,
                        const std::vector<Polynomial>& P, const RingPtr& ring) {
    switch (category) {
    case 0: { // ideal member
        Polynomial p(ring);
        int k = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < k; ++i)
            p = p + random_poly(rng, ring, 2) * Q[rng() % Q.size()];
        return p;
    }
    case 1: { // member perturbed by a low-degree tail
        Polynomial p = random_poly(rng, ring, 2) * Q[rng() % Q.size()];
        return p + random_poly(rng, ring, 2);
    }
    case 2: { // element of the radical: product of variety-ideal generators
        Polynomial p = P[rng() % P.size()];
        if (rng() % 2) p = p * P[rng() % P.size()];
        return p * random_poly(rng, ring, 1);
    }
    default: // unstructured
        return random_poly(rng, ring, 3);
    }
}

json run_oracle_xcheck(const Problem& prob, const EngineOptions& opts) {
    const std::vector<Polynomial>& Q = prob.ideal_generators();
    VariableSplit split = effective_split(prob, opts);
    NoetherianSystem S = noetherian_system(Q, split, effective_section(prob, opts));
    GroebnerBasis G = ideal_gb(Q, order_from(opts));

    std::mt19937_64 rng(opts.seed);
    int agreements = 0;
    json disagreements = json::array();
    for (int t = 0; t < opts.trials; ++t) {
        Polynomial phi =
            random_trial(rng, t % 4, Q, S.variety_ideal, prob.ring);
        bool by_gb = membership(phi, G);
        bool by_ops = noetherian_membership(phi, S);
        if (by_gb == by_ops) {
            ++agreements;
        } else if (disagreements.size() < 10) {
            disagreements.push_back(json{{"phi", phi.str()},
                                         {"groebner", by_gb},
                                         {"noetherian", by_ops}});
        }
    }
    json out;
    out["trials"] = opts.trials;
    out["seed"] = opts.seed;
    out["agreements"] = agreements;
    out["all_agree"] = agreements == opts.trials;
    out["order0_only"] = S.nil_index == 0;
    out["disagreements"] = std::move(disagreements);
    return out;
}

json dispatch(const Problem& prob, const std::string& command,
              const EngineOptions& opts) {
    if (command == "resolve") {
        FreeResolution r = free_resolution(prob.presentation());
        json out = j_complex(r.complex);
        out["minimal"] = r.minimal;
        out["length"] = r.length();
        out["betti"] = r.betti;
        return out;
    }
    if (command == "dualize") return j_complex(dualize(input_complex(prob)));
    if (command == "be-check") {
        Complex c = input_complex(prob);
        auto steps = be_exactness(c);
        bool exact = true;
        for (auto& s : steps) exact = exact && s.verdict == StepVerdict::Exact;
        return json{{"steps", j_be_steps(steps)}, {"exact", exact}};
    }
    if (command == "ext") {
        FreeResolution r = free_resolution(prob.presentation());
        json mods = json::array();
        for (auto& m : all_ext_modules(r)) {
            json jm;
            jm["k"] = m.k;
            jm["zero"] = m.zero;
            jm["num_generators"] = m.num_generators;
            jm["support_codim"] = m.support_codim;
            jm["fitt0"] = j_poly_list(m.fitt0);
            jm["relations"] = j_matrix(m.relations);
            mods.push_back(std::move(jm));
        }
        return json{{"modules", std::move(mods)}};
    }
    if (command == "purity") return run_purity(prob);
    if (command == "cm-check") {
        FreeResolution r = free_resolution(prob.presentation());
        PurityReport rep = purity_check(r);
        auto dual_steps = be_exactness(dualize(r));
        bool dual_exact = true;
        for (auto& s : dual_steps)
            dual_exact = dual_exact && s.verdict == StepVerdict::Exact;
        return json{{"p", rep.p},
                    {"resolution_length", r.length()},
                    {"cohen_macaulay", rep.cohen_macaulay},
                    {"dual_exact", dual_exact},
                    {"dual_steps", j_be_steps(dual_steps)}};
    }
    if (command == "noetherian") {
        VariableSplit split = effective_split(prob, opts);
        NoetherianSystem S = noetherian_system(prob.ideal_generators(), split,
                                               effective_section(prob, opts));
        return j_noetherian_system(S);
    }
    if (command == "membership") {
        Polynomial phi = required_phi(prob, opts);
        bool by_gb =
            membership(phi, ideal_gb(prob.ideal_generators(), order_from(opts)));
        json out;
        out["phi"] = phi.str();
        out["groebner"] = by_gb;
        bool have_hints = !opts.split.empty() || static_cast<bool>(prob.split);
        if (have_hints) {
            VariableSplit split = effective_split(prob, opts);
            NoetherianSystem S = noetherian_system(prob.ideal_generators(), split,
                                                   effective_section(prob, opts));
            bool by_ops = noetherian_membership(phi, S);
            out["noetherian"] = by_ops;
            out["agree"] = by_gb == by_ops;
        } else {
            out["noetherian"] = nullptr;
            out["agree"] = nullptr;
        }
        return out;
    }
    if (command == "residue") return run_residue(prob);
    if (command == "bezoutian") {
        ResidueFunctional rf = residue_functional(prob.ideal_generators());
        return json{{"hefer", j_matrix(rf.hefer)},
                    {"bezoutian", rf.bezoutian.str()},
                    {"doubled_vars", rf.doubled.ring->vars},
                    {"sign", rf.sign}};
    }
    if (command == "oracle-xcheck") return run_oracle_xcheck(prob, opts);
    throw std::invalid_argument("unknown command '" + command + "'");
}

} // namespace

std::string input_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

EngineOptions parse_options(const std::string& options_json) {
    EngineOptions opts;
    if (options_json.empty()) return opts;
    json j = json::parse(options_json);
    if (!j.is_object()) throw std::invalid_argument("options must be a JSON object");
    for (auto& [key, val] : j.items()) {
        if (key == "order")
            opts.order = val.get<std::string>();
        else if (key == "phi")
            opts.phi = val.get<std::string>();
        else if (key == "split")
            opts.split = val.get<std::string>();
        else if (key == "section")
            opts.section = val.get<std::string>();
        else if (key == "seed")
            opts.seed = val.get<std::uint64_t>();
        else if (key == "trials")
            opts.trials = val.get<int>();
        else
            throw std::invalid_argument("unknown option '" + key + "'");
    }
    if (opts.trials < 1) throw std::invalid_argument("trials must be positive");
    return opts;
}

nlohmann::json run_command(const Problem& prob, const std::string& command,
                           const EngineOptions& opts) {
    json report;
    report["command"] = command;
    report["engine_version"] = kEngineVersion;
    report["input_digest"] = input_digest(prob.raw_text);
    report["result"] = dispatch(prob, command, opts);
    return report;
}

} // namespace duality
