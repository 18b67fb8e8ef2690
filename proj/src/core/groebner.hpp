#pragma once

#include "matrix.hpp"
#include "polynomial.hpp"

namespace duality {

using FreeModuleElement = std::vector<Polynomial>; // one Polynomial per component

enum class ModuleOrderMode { TOP, POT, ComponentElim };

// Order on module terms (component, monomial). ComponentElim makes every
// term in components < elim_components dominate the rest; used to read
// off syzygies.
struct ModuleOrder {
    MonomialOrder base;
    ModuleOrderMode mode = ModuleOrderMode::TOP;
    int elim_components = 0;

    int cmp(int comp_a, const Monomial& ma, int comp_b, const Monomial& mb) const;
};

struct GroebnerBasis {
    RingPtr ring;
    int rank = 1;
    ModuleOrder order;
    std::vector<FreeModuleElement> gens; // reduced, monic, sorted by leading term
    bool reduced = true;
};

// Reduced Groebner basis of the submodule generated by gens.
GroebnerBasis buchberger(const RingPtr& ring, int rank,
                         const std::vector<FreeModuleElement>& gens,
                         const ModuleOrder& order);

GroebnerBasis ideal_gb(const std::vector<Polynomial>& gens,
                       const MonomialOrder& order = MonomialOrder::grevlex());

FreeModuleElement normal_form(const FreeModuleElement& v, const GroebnerBasis& G);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

bool membership(const FreeModuleElement& v, const GroebnerBasis& G);
bool membership(const Polynomial& p, const GroebnerBasis& G);

bool is_unit_ideal(const GroebnerBasis& G); // rank-1

// Columns of the result generate ker(M); M * result == 0.
PolyMatrix syzygy_matrix(const PolyMatrix& M);

// Krull dimension of V(I) via independent variable subsets modulo the
// leading-term ideal; unit ideal gives -1.
int ideal_dimension(const GroebnerBasis& I);
inline int ideal_codim(const GroebnerBasis& I) {
    return I.ring->nvars() - ideal_dimension(I);
}

int ideal_dimension(const std::vector<Polynomial>& gens);
int ideal_codim(const std::vector<Polynomial>& gens);

// Generators of I intersected with the subring on the flagged variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<char>& vars_to_keep);

// phi in sqrt(I), by the Rabinowitsch device.
bool radical_membership(const Polynomial& phi, const std::vector<Polynomial>& gens);

// Exponent vectors of the leading monomials of a rank-1 basis.
std::vector<Monomial> leading_monomials(const GroebnerBasis& I);

} // namespace duality
