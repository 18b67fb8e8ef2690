#pragma once

#include <optional>

#include "matrix.hpp"
#include "noetherian.hpp"

namespace duality {

// Parsed problem file: a ring declaration plus ideal generators, module
// generator columns, or explicit complex differentials, with optional
// split/section hints for Noetherian runs.
struct Problem {
    RingPtr ring;
    std::vector<Polynomial> ideal;
    std::optional<PolyMatrix> module;          // columns generate a submodule
    std::vector<PolyMatrix> complex_matrices;  // d_1, d_2, ... in order
    std::optional<VariableSplit> split;
    std::optional<RationalSection> section;
    std::string raw_text;

    // Presentation f_1 of the quotient (1 x g for ideals).
    PolyMatrix presentation() const;
    const std::vector<Polynomial>& ideal_generators() const;
};

Problem parse_problem(const std::string& text);

// Shared line parsers, reused for CLI hint overrides.
VariableSplit parse_split(const RingPtr& ring, const std::string& body);
RationalSection parse_section(const RingPtr& ring, const std::string& body);

} // namespace duality
