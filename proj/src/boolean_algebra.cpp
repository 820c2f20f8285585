#include "letlab/boolean_algebra.hpp"

#include <sstream>

namespace letlab {

BooleanAlgebra::BooleanAlgebra(int atoms, int atom_cap) : atoms_(atoms) {
    if (atoms < 0) throw std::invalid_argument("atom count must be nonnegative");
    if (atoms > atom_cap)
        throw std::invalid_argument("atom count " + std::to_string(atoms) +
                                    " exceeds the cap of " + std::to_string(atom_cap));
    top_ = static_cast<BElem>((std::uint64_t{1} << atoms) - 1);
}

std::string BooleanAlgebra::element_name(BElem a) const {
    check(a);
    if (a == 0) return "0";
    if (a == top_) return "1";
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i = 0; i < atoms_; ++i) {
        if (a >> i & 1) {
            if (!first) out << ',';
            out << 'a' << i;
            first = false;
        }
    }
    out << '}';
    return out.str();
}

}  // namespace letlab
