#pragma once

#include "groebner.hpp"
#include "matrix.hpp"
#include "noetherian.hpp" // RejectError

namespace duality {

// k[z]/J for a zero-dimensional ideal, with the standard-monomial basis
// of its grevlex Groebner basis.
struct QuotientAlgebra {
    RingPtr ring;
    std::vector<Polynomial> generators;
    GroebnerBasis gb;
    std::vector<Monomial> basis; // standard monomials, ascending grevlex

    int dim() const { return static_cast<int>(basis.size()); }
    // Coordinates of the normal form of phi over the basis.
    std::vector<Rational> coordinates(const Polynomial& phi) const;
    // Multiplication-by-phi matrix on the basis.
    std::vector<std::vector<Rational>> mult_matrix(const Polynomial& phi) const;
};

QuotientAlgebra quotient_algebra(const std::vector<Polynomial>& gens);

// The original ring doubled: one copy of each variable for zeta (first
// block) and one for z (second block, original names).
struct DoubledRing {
    RingPtr ring;            // 2n variables
    RingPtr base;            // original n variables
    std::vector<int> zeta_of; // base var -> zeta copy index
    std::vector<int> z_of;    // base var -> z copy index

    Polynomial to_z(const Polynomial& p) const { return p.map_ring(ring, z_of); }
    Polynomial to_zeta(const Polynomial& p) const { return p.map_ring(ring, zeta_of); }
    // Pull a zeta-supported polynomial back to the base ring.
    Polynomial zeta_to_base(const Polynomial& p) const;
};

DoubledRing double_ring(const RingPtr& base);

// Hefer matrix h[j][k] with sum_j h_jk (zeta_j - z_j) = f_k(z) - f_k(zeta),
// by telescoping along the variables in `order` (default ascending).
PolyMatrix hefer_matrix(const DoubledRing& dr, const std::vector<Polynomial>& f,
                        const std::vector<int>& order = {});

struct ResidueFunctional {
    QuotientAlgebra algebra;
    DoubledRing doubled;
    PolyMatrix hefer;
    Polynomial bezoutian;              // det of the Hefer matrix (doubled ring)
    std::vector<Polynomial> dual_basis; // a_i in the base ring, res(a_i b_j) = delta
    std::vector<Rational> values;      // res on the basis monomials
    int sign = 1; // normalization so that res(det Jacobian) = +dim

    Rational residue(const Polynomial& phi) const;
    std::vector<std::vector<Rational>> gram() const; // res(b_i b_j)
    // Trace of the multiplication matrix; classical identity
    // trace(M_phi) = res(Jacobian * phi) serves as a cross-check oracle.
    Rational trace_form(const Polynomial& phi) const;
};

Polynomial jacobian_det(const std::vector<Polynomial>& f);

// Full construction for a zero-dimensional complete intersection.
ResidueFunctional residue_functional(const std::vector<Polynomial>& f,
                                     const std::vector<int>& hefer_order = {});

} // namespace duality
