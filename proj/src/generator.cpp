#include "letlab/generator.hpp"

namespace letlab {

std::uint64_t FormulaGen::next(std::uint64_t bound) { return rng_() % bound; }

Formula FormulaGen::grow(int depth, const Options& options) {
    const bool leaf = depth <= 0 || next(4) == 0;
    if (leaf) {
        if (options.with_constants && next(8) == 0) return Formula::top();
        if (options.with_constants && next(8) == 0) return Formula::bot();
        return Formula::var("p" + std::to_string(next(static_cast<std::uint64_t>(options.num_vars)) + 1));
    }
    const std::uint64_t pick = next(options.allow_implication ? 5 : 4);
    switch (pick) {
        case 0: return Formula::neg(grow(depth - 1, options));
        case 1: return Formula::circ(grow(depth - 1, options));
        case 2: return Formula::conj(grow(depth - 1, options), grow(depth - 1, options));
        case 3: return Formula::disj(grow(depth - 1, options), grow(depth - 1, options));
        default: return Formula::impl(grow(depth - 1, options), grow(depth - 1, options));
    }
}

Formula FormulaGen::formula(const Options& options) { return grow(options.max_depth, options); }

Sequent FormulaGen::sequent(const Options& options) {
    const std::uint64_t premise_count = next(4);
    std::vector<Formula> premises;
    for (std::uint64_t i = 0; i < premise_count; ++i) premises.push_back(formula(options));
    return Sequent{std::move(premises), formula(options)};
}

}  // namespace letlab
