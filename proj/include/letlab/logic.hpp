#pragma once

#include <optional>
#include <string>

#include "letlab/formula.hpp"

namespace letlab {

// The four logics handled by the engines.  LetK / LetFMinus have the
// non-deterministic six-valued semantics; LetKPlus / LetFPlus (their
// extensions by classicality-propagation rules) have the deterministic one.
// The F variants are the implication-free fragments.
enum class Logic { LetK, LetKPlus, LetFMinus, LetFPlus };

inline bool has_implication(Logic logic) {
    return logic == Logic::LetK || logic == Logic::LetKPlus;
}

inline bool is_plus(Logic logic) {
    return logic == Logic::LetKPlus || logic == Logic::LetFPlus;
}

inline const char* to_string(Logic logic) {
    switch (logic) {
        case Logic::LetK: return "letk";
        case Logic::LetKPlus: return "letk+";
        case Logic::LetFMinus: return "letf-";
        case Logic::LetFPlus: return "letf+";
    }
    return "?";
}

inline std::optional<Logic> logic_from_string(const std::string& name) {
    if (name == "letk") return Logic::LetK;
    if (name == "letk+") return Logic::LetKPlus;
    if (name == "letf-") return Logic::LetFMinus;
    if (name == "letf+") return Logic::LetFPlus;
    return std::nullopt;
}

// Throws FragmentError if `f` contains an implication but `logic` is an
// implication-free fragment.
void require_in_fragment(const Formula& f, Logic logic);
void require_in_fragment(const Sequent& s, Logic logic);

}  // namespace letlab
