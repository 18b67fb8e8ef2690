#pragma once

#include "diffop.hpp"
#include "groebner.hpp"
#include "ratfunc.hpp"

namespace duality {

// Partition of the ring variables into free (parameters on the variety)
// and dependent directions.
struct VariableSplit {
    std::vector<char> dependent; // per-variable flag; free = !dependent

    std::vector<int> dependent_indices(const RingPtr& ring) const {
        std::vector<int> out;
        for (int v = 0; v < ring->nvars(); ++v)
            if (dependent[v]) out.push_back(v);
        return out;
    }
    std::vector<char> free_mask() const {
        std::vector<char> f;
        for (char d : dependent) f.push_back(d ? 0 : 1);
        return f;
    }
};

// Graph presentation of the variety: each dependent variable equals a
// polynomial in the free ones.
struct RationalSection {
    std::map<int, Polynomial> graph; // dependent var index -> g(free vars)
};

struct NoetherianSystem {
    RingPtr ring;
    VariableSplit split;
    std::vector<Polynomial> variety_ideal; // P = (w_i - g_i)
    std::vector<DiffOperator> operators;
    int nil_index = 0;       // max derivative order
    int clearing_power = 0;  // power of h used to clear denominators
    Polynomial clearing_poly; // h
};

struct RejectError : std::runtime_error {
    std::string reason_code;
    RejectError(std::string code, const std::string& msg)
        : std::runtime_error(msg), reason_code(std::move(code)) {}
};

// Noether position: Q meets k[free] trivially and the initial ideal
// contains a pure power of every dependent variable.
bool check_noether_position(const std::vector<Polynomial>& Q, const VariableSplit& split);

// Verifies sqrt(Q) = P for the graph ideal P of the section.
bool check_section(const std::vector<Polynomial>& Q, const VariableSplit& split,
                   const RationalSection& section);

// Functionals D = sum c_beta(free) d^beta/dw^beta annihilating Q along
// the section, via Macaulay-matrix nullspaces of increasing order;
// echelonized, so the output is canonical.
struct DualSpaceOp {
    std::vector<std::pair<Monomial, RatFunc>> terms; // beta -> coefficient in k(free)
};

std::vector<DualSpaceOp> dual_space(const std::vector<Polynomial>& Q,
                                    const VariableSplit& split,
                                    const RationalSection& section);

// Multiplies by the minimal power of h (the lcm of all coefficient
// denominators) and re-expresses the operators in the original
// coordinates; a shear leaves the d/dw directions intact.
NoetherianSystem clear_denominators(const std::vector<DualSpaceOp>& ops,
                                    const std::vector<Polynomial>& Q,
                                    const VariableSplit& split,
                                    const RationalSection& section);

// Convenience: position + section checks, dual space, clearing.
NoetherianSystem noetherian_system(const std::vector<Polynomial>& Q,
                                   const VariableSplit& split,
                                   const RationalSection& section);

// phi in Q iff every operator maps phi into the variety ideal.
bool noetherian_membership(const Polynomial& phi, const NoetherianSystem& S);

} // namespace duality
