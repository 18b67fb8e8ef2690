#pragma once

#include "resolution.hpp"

namespace duality {

// Ext^k(F,O) presented as coker of `relations` on `num_generators`
// generators (a syzygy basis of the dual differential's kernel).
struct ExtModule {
    int k = 0;
    int num_generators = 0;
    PolyMatrix relations;                 // num_generators rows
    std::vector<Polynomial> fitt0;        // maximal minors of the presentation
    int support_codim = 0;                // n+1 sentinel when the module vanishes
    bool zero = true;
};

ExtModule ext_module(const FreeResolution& r, int k);
std::vector<ExtModule> all_ext_modules(const FreeResolution& r);

int support_codim(const ExtModule& m);

enum class PurityVerdict { CohenMacaulay, Pure, Impure };

struct PurityEvidence {
    int k;
    int codim_Zk;       // n+1 sentinel when empty
    int codim_supp_ext; // n+1 sentinel when Ext^k = 0
};

struct PurityReport {
    int p = 0; // codim of F
    PurityVerdict verdict = PurityVerdict::Impure;
    bool pure_by_rank_loci = false;  // route A: codim Z_k >= k+1 for k > p
    bool pure_by_ext_support = false; // route B: codim supp Ext^k >= k+1 for k > p
    bool cohen_macaulay = false;
    bool routes_agree = false;
    std::vector<PurityEvidence> per_k;
};

struct CodimZeroError : std::runtime_error {
    CodimZeroError()
        : std::runtime_error("module has codimension 0; purity analysis "
                             "requires positive codimension") {}
};

PurityReport purity_check(const FreeResolution& r);

// Per-k verdicts of supp Ext^k being contained in the rank locus Z_k,
// via radical membership of the minor-ideal generators.
std::vector<std::pair<int, bool>> support_containment(const FreeResolution& r);

} // namespace duality
