#ifndef POWMON_TESTS_MUTANTS_HPP
#define POWMON_TESTS_MUTANTS_HPP

// One-token mutations of the cone membership predicates, for checking that
// the property suite actually constrains membership.

#include <powmon/cones.hpp>

namespace powmon::mutants {

// y > 0  ->  y >= 0: lets (-1,0) in, so the cone is no longer reduced.
struct LexMutantWeakY {
    bool contains(const GroupElement& g) const { return g.y.sign() >= 0 || (g.y.is_zero() && g.x.sign() >= 0); }
};

// x >= 0  ->  x > 0: drops the identity.
struct LexMutantStrictX {
    bool contains(const GroupElement& g) const { return g.y.sign() > 0 || (g.y.is_zero() && g.x.sign() > 0); }
};

// >= 0  ->  > 0: drops the identity.
struct SlopeMutantStrict {
    QuadraticIrrational alpha;
    bool contains(const GroupElement& g) const { return cmp_slope(alpha, g.x, g.y) > 0; }
};

// >= 0  ->  <= 0: the opposite cone. This is again the positive cone of a
// total order, so it is an equivalent mutant that no property can kill.
struct SlopeMutantReversed {
    QuadraticIrrational alpha;
    bool contains(const GroupElement& g) const { return cmp_slope(alpha, g.x, g.y) <= 0; }
};

} // namespace powmon::mutants

#endif // POWMON_TESTS_MUTANTS_HPP
