#ifndef POWMON_CONES_HPP
#define POWMON_CONES_HPP

// Reduced valuation submonoids of Z^2, each presented as the nonnegative cone
// of a total group order:
//
//   lex          H1 = (Z x N) u (N0 x {0})   (compare y first, then x)
//   slope:alpha  H2 = {(x, y) : y <= alpha*x} for a positive irrational alpha
//
// For both, exactly one of g, -g is a member unless g = 0, which makes them
// reduced valuation monoids with quotient group Z^2.

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "errors.hpp"
#include "lattice.hpp"

namespace powmon {

/// Anything with a membership predicate on Z^2. The power-monoid algorithms
/// are written against this so tests can plug in deliberately broken cones.
template <class M>
concept Cone = requires(const M& m, const GroupElement& g) {
    { m.contains(g) } -> std::convertible_to<bool>;
};

struct LexCone {
    bool contains(const GroupElement& g) const { return g.y.sign() > 0 || (g.y.is_zero() && g.x.sign() >= 0); }
};

struct SlopeCone {
    QuadraticIrrational alpha;

    bool contains(const GroupElement& g) const { return cmp_slope(alpha, g.x, g.y) >= 0; }
};

/// Z^2 itself. Not reduced; used to draw elements of Pfin,1(Z^2).
struct WholeGroup {
    bool contains(const GroupElement&) const { return true; }
};

enum class ConeKind { lex, slope };

/// Runtime choice between the two shipped cones.
class MonoidSpec {
public:
    MonoidSpec(LexCone c) : cone_(c) {}
    MonoidSpec(SlopeCone c) : cone_(std::move(c)) {}

    static MonoidSpec lex() { return MonoidSpec(LexCone{}); }
    static MonoidSpec slope(QuadraticIrrational alpha) { return MonoidSpec(SlopeCone{std::move(alpha)}); }

    ConeKind kind() const { return std::holds_alternative<LexCone>(cone_) ? ConeKind::lex : ConeKind::slope; }

    /// The slope cone, or nullptr for lex.
    const SlopeCone* as_slope() const { return std::get_if<SlopeCone>(&cone_); }

    bool contains(const GroupElement& g) const {
        return std::visit([&](const auto& c) { return c.contains(g); }, cone_);
    }

    std::string str() const {
        if (const SlopeCone* s = as_slope())
            return "slope:" + s->alpha.str();
        return "lex";
    }

    friend bool operator==(const MonoidSpec& l, const MonoidSpec& r) {
        if (l.kind() != r.kind())
            return false;
        return l.kind() == ConeKind::lex || l.as_slope()->alpha == r.as_slope()->alpha;
    }

private:
    std::variant<LexCone, SlopeCone> cone_;
};

/// `lex` or `slope:<alpha>`.
inline MonoidSpec parse_monoid(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && t.front() == ' ')
        t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ')
        t.remove_suffix(1);
    if (t == "lex")
        return MonoidSpec::lex();
    if (t.starts_with("slope:"))
        return MonoidSpec::slope(parse_quadratic(t.substr(6)));
    throw parse_error("unknown monoid \"" + std::string(text) + "\" (expected lex or slope:<alpha>)");
}

template <Cone M>
bool contains(const M& m, const GroupElement& g) {
    return m.contains(g);
}

template <Cone M>
bool is_unit(const M& m, const GroupElement& g) {
    return m.contains(g) && m.contains(-g);
}

template <Cone M>
bool valuation_check(const M& m, const GroupElement& g) {
    return m.contains(g) || m.contains(-g);
}

/// Two nonzero members summing to the factored element.
struct FactorWitness {
    GroupElement g1;
    GroupElement g2;

    friend bool operator==(const FactorWitness&, const FactorWitness&) = default;
};

/// Checks the witness predicate: both parts nonzero members and g1 + g2 = g.
template <Cone M>
bool witness_valid(const M& m, const GroupElement& g, const FactorWitness& w) {
    return !w.g1.is_zero() && !w.g2.is_zero() && m.contains(w.g1) && m.contains(w.g2) && w.g1 + w.g2 == g;
}

inline constexpr std::uint64_t default_max_radius = 1'000'000;

/// Finds a nontrivial split g = g1 + g2 in the slope cone.
///
/// For x1 in scan order (r = 1: -1, 0, 1; then -r, r for r = 2, 3, ...), the
/// admissible y1 form the interval [g.y - floor(alpha*(g.x - x1)),
/// floor(alpha*x1)]; y1 is taken from the top down and the first split with
/// both parts nonzero wins. This visits candidates in the same order as
/// rescanning every |x1| <= r for each r.
///
/// Throws search_exhausted if no split has |x1| <= max_radius.
inline FactorWitness factor_nontrivial(const SlopeCone& m, const GroupElement& g,
                                       std::uint64_t max_radius = default_max_radius) {
    if (!m.contains(g))
        throw precondition_violation("factor_nontrivial: " + to_string(g) + " is not in the monoid");
    if (g.is_zero())
        throw precondition_violation("factor_nontrivial: the identity has no nontrivial factorization");

    auto try_column = [&](const Integer& x1) -> std::optional<FactorWitness> {
        const Integer hi = floor_mul(m.alpha, x1);
        const Integer lo = g.y - floor_mul(m.alpha, g.x - x1);
        // At most two y1 values can make a part zero.
        for (Integer y1 = hi; y1 >= lo; --y1) {
            GroupElement g1{x1, y1};
            GroupElement g2 = g - g1;
            if (!g1.is_zero() && !g2.is_zero())
                return FactorWitness{std::move(g1), std::move(g2)};
        }
        return std::nullopt;
    };

    for (std::uint64_t r = 1; r <= max_radius; ++r) {
        const Integer radius(r);
        if (r == 1) {
            for (int x1 = -1; x1 <= 1; ++x1)
                if (auto w = try_column(Integer(x1)))
                    return *w;
        } else {
            if (auto w = try_column(Integer(-radius)))
                return *w;
            if (auto w = try_column(radius))
                return *w;
        }
    }
    throw search_exhausted(max_radius);
}

/// Outcome of an irreducibility query.
struct Irreducibility {
    enum class Kind { irreducible, reducible, unit };

    Kind kind;
    std::optional<FactorWitness> witness; // set iff kind == reducible

    static Irreducibility unit() { return {Kind::unit, std::nullopt}; }
    static Irreducibility irreducible() { return {Kind::irreducible, std::nullopt}; }
    static Irreducibility reducible(FactorWitness w) { return {Kind::reducible, std::move(w)}; }
};

/// Closed form for the lex cone, whose only atom is (1,0):
///   y >= 2:         (x,1) + (0,y-1)
///   y == 1:         (1,0) + (x-1,1)
///   y == 0, x >= 2: (1,0) + (x-1,0)
/// Derived from the membership rule and cross-checked by an exhaustive box
/// scan in the tests.
inline Irreducibility is_irreducible(const LexCone& m, const GroupElement& g) {
    if (!m.contains(g))
        throw precondition_violation("is_irreducible: " + to_string(g) + " is not in the monoid");
    if (g.is_zero())
        return Irreducibility::unit();
    if (g.y >= 2)
        return Irreducibility::reducible({{g.x, 1}, {0, g.y - 1}});
    if (g.y == 1)
        return Irreducibility::reducible({{1, 0}, {g.x - 1, 1}});
    if (g.x == 1)
        return Irreducibility::irreducible();
    return Irreducibility::reducible({{1, 0}, {g.x - 1, 0}});
}

/// The slope cone has no atoms; every non-unit member gets a searched witness.
inline Irreducibility is_irreducible(const SlopeCone& m, const GroupElement& g,
                                     std::uint64_t max_radius = default_max_radius) {
    if (!m.contains(g))
        throw precondition_violation("is_irreducible: " + to_string(g) + " is not in the monoid");
    if (g.is_zero())
        return Irreducibility::unit();
    return Irreducibility::reducible(factor_nontrivial(m, g, max_radius));
}

inline Irreducibility is_irreducible(const MonoidSpec& m, const GroupElement& g,
                                     std::uint64_t max_radius = default_max_radius) {
    if (const SlopeCone* s = m.as_slope())
        return is_irreducible(*s, g, max_radius);
    return is_irreducible(LexCone{}, g);
}

/// (h1, h2) with both in the monoid and h1 - h2 = g.
template <Cone M>
std::pair<GroupElement, GroupElement> difference_witness(const M& m, const GroupElement& g) {
    if (m.contains(g))
        return {g, GroupElement{0, 0}};
    return {GroupElement{0, 0}, -g};
}

} // namespace powmon

#endif // POWMON_CONES_HPP
