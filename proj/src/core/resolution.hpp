#pragma once

#include "groebner.hpp"
#include "matrix.hpp"

namespace duality {

// Chain of differentials d_1..d_N with d_k: F_k -> F_{k-1} and
// d_k d_{k+1} = 0; ranks[k] = rank of F_k, k = 0..N.
struct Complex {
    std::vector<PolyMatrix> diffs;
    std::vector<int> ranks;

    int length() const { return static_cast<int>(diffs.size()); }
    bool is_complex() const;
};

struct FreeResolution {
    Complex complex;
    bool minimal = false;
    std::vector<int> betti; // ranks of the minimal resolution

    int length() const { return complex.length(); }
};

struct NotAComplexError : std::runtime_error {
    int step;
    explicit NotAComplexError(int k)
        : std::runtime_error("not a complex at step " + std::to_string(k)), step(k) {}
};

// Iterated syzygies of the presentation f_1, minimalized; Betti numbers
// are those of the minimal resolution.
FreeResolution free_resolution(const PolyMatrix& presentation, bool minimalized = true);

FreeResolution minimalize(const FreeResolution& r);
Complex minimalize(Complex c);

// Transposed differentials in reversed order.
Complex dualize(const Complex& c);
inline Complex dualize(const FreeResolution& r) { return dualize(r.complex); }

enum class StepVerdict { Exact, FailsRank, FailsCodim };

struct BEStep {
    int k;
    int rank_fk;        // actual rank
    int rank_fk_next;   // actual rank of f_{k+1} (0 past the end)
    int codim_minors;   // codim I_{r}(f_k) at r = rank f_k; n+1 sentinel if empty
    StepVerdict verdict;
};

// Buchsbaum-Eisenbud exactness test; the complex is a resolution iff
// every step is Exact.
std::vector<BEStep> be_exactness(const Complex& c);

struct RankLocus {
    int k;
    int expected_rank;             // alternating sum of ranks
    std::vector<Polynomial> minor_ideal; // generators of I_{r_k}(f_k)
    int codim;                     // n+1 sentinel when Z_k is empty
};

std::vector<RankLocus> rank_loci(const FreeResolution& r);

// Codim of V(I) for a generator list; the zero ideal has codim 0 and the
// unit ideal gets the n+1 sentinel.
int codim_of_ideal(const RingPtr& ring, const std::vector<Polynomial>& gens);

} // namespace duality
