#pragma once

#include <cstdint>
#include <random>

#include "letlab/formula.hpp"
#include "letlab/logic.hpp"

namespace letlab {

// Seeded formula/sequent source for the cross-procedure suites.  Fully
// deterministic: draws come from a mt19937_64 reduced with plain modulo, so
// identical seeds give identical streams on every platform.
//
// A formula is grown top-down: at depth 0, or with probability 1/4, a leaf
// is emitted (one of the `num_vars` variables, or ⊤/⊥ with probability 1/8
// each when constants are enabled); otherwise a connective is drawn
// uniformly from the fragment's set {¬, ∘, ∧, ∨ (, →)} and its children are
// generated at depth − 1.
class FormulaGen {
public:
    explicit FormulaGen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next(std::uint64_t bound);  // uniform-ish draw in [0, bound)

    struct Options {
        int max_depth = 4;
        int num_vars = 3;
        bool allow_implication = true;
        bool with_constants = false;
    };

    Formula formula(const Options& options);
    // 0–3 premises plus a conclusion, all drawn with the same options
    Sequent sequent(const Options& options);

private:
    Formula grow(int depth, const Options& options);
    std::mt19937_64 rng_;
};

}  // namespace letlab
