#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace letlab {

// Element of a finite powerset algebra, encoded as an atom-subset mask.
using BElem = std::uint32_t;

// Finite Boolean algebra presented as the powerset algebra over `atoms`
// atoms.  Every finite Boolean algebra is isomorphic to one of these, so no
// general interface is provided.  Elements are the 2^atoms subset masks;
// 0 is the bottom (empty set) and the full mask is the top.  With atoms == 0
// the algebra is degenerate: 0 = 1.
//
// Immutable value type; freely shareable.
class BooleanAlgebra {
public:
    static constexpr int kDefaultAtomCap = 4;

    explicit BooleanAlgebra(int atoms, int atom_cap = kDefaultAtomCap);

    int atoms() const { return atoms_; }
    std::size_t size() const { return std::size_t{1} << atoms_; }
    BElem bottom() const { return 0; }
    BElem top() const { return top_; }
    bool contains(BElem a) const { return (a & ~top_) == 0; }

    BElem meet(BElem a, BElem b) const { return check(a) & check(b); }
    BElem join(BElem a, BElem b) const { return check(a) | check(b); }
    BElem comp(BElem a) const { return top_ & ~check(a); }
    // a ⇒ b, defined as comp(a) ⊔ b.
    BElem imp(BElem a, BElem b) const { return comp(a) | check(b); }
    bool leq(BElem a, BElem b) const { return (check(a) & ~check(b)) == 0; }

    // "{}", "{a0}", "{a0,a2}", ...; the empty set and the full set print as
    // "0" and "1".
    std::string element_name(BElem a) const;

private:
    BElem check(BElem a) const {
        if (!contains(a))
            throw std::out_of_range("element " + std::to_string(a) + " outside algebra with " +
                                    std::to_string(atoms_) + " atoms");
        return a;
    }

    int atoms_;
    BElem top_;
};

}  // namespace letlab
