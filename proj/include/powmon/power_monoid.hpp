#ifndef POWMON_POWER_MONOID_HPP
#define POWMON_POWER_MONOID_HPP

// The reduced finitary power monoid Pfin,1(H): finite subsets of H that
// contain the identity, under setwise addition.
//
// Notation is additive throughout. A shift a applied to X is a + X, the
// inverse of x is -x and the identity is (0,0).

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cones.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "text.hpp"

namespace powmon {

/// Sorted, duplicate-free finite set of group elements that contains (0,0).
/// Equality is structural on the normal form.
class FinSubset {
public:
    /// The identity {(0,0)}.
    FinSubset() : elems_{GroupElement{0, 0}} {}

    /// Normalizes `points` (sort + dedup). Throws precondition_violation if
    /// (0,0) is missing.
    static FinSubset from(std::vector<GroupElement> points) {
        canonicalize(points);
        if (!std::binary_search(points.begin(), points.end(), GroupElement{0, 0}))
            throw precondition_violation("set does not contain the identity (0,0)");
        return FinSubset(std::move(points));
    }

    /// Sorts and deduplicates in place.
    static void canonicalize(std::vector<GroupElement>& points) {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
    }

    std::span<const GroupElement> elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(const GroupElement& g) const { return std::binary_search(elems_.begin(), elems_.end(), g); }

    friend bool operator==(const FinSubset& l, const FinSubset& r) { return l.elems_ == r.elems_; }

private:
    explicit FinSubset(std::vector<GroupElement> sorted) : elems_(std::move(sorted)) {}

    std::vector<GroupElement> elems_;
};

inline std::string to_string(std::span<const GroupElement> points) {
    std::string out = "{";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i)
            out += ',';
        out += to_string(points[i]);
    }
    return out + "}";
}

inline std::string to_string(const FinSubset& s) { return to_string(s.elements()); }

inline std::ostream& operator<<(std::ostream& os, const FinSubset& s) { return os << to_string(s); }

/// Parses `{(0,0),(1,2),(-3,1)}`, whitespace-insensitive. The set must
/// contain (0,0); duplicates collapse.
inline FinSubset parse_subset(std::string_view text) {
    detail::cursor in(text);
    in.expect('{');
    std::vector<GroupElement> points;
    if (!in.accept('}')) {
        do {
            points.push_back(detail::parse_element(in));
        } while (in.accept(','));
        in.expect('}');
    }
    in.finish();
    try {
        return FinSubset::from(std::move(points));
    } catch (const precondition_violation& e) {
        throw parse_error(std::string(e.what()) + ": \"" + std::string(text) + "\"");
    }
}

/// {x + y : x in X, y in Y}.
inline FinSubset setwise_product(const FinSubset& X, const FinSubset& Y) {
    std::vector<GroupElement> sums;
    sums.reserve(X.size() * Y.size());
    for (const auto& x : X)
        for (const auto& y : Y)
            sums.push_back(x + y);
    return FinSubset::from(std::move(sums));
}

/// a + X in canonical order. The result need not contain (0,0).
inline std::vector<GroupElement> translate(const GroupElement& a, std::span<const GroupElement> X) {
    std::vector<GroupElement> out;
    out.reserve(X.size());
    for (const auto& x : X)
        out.push_back(a + x);
    // Translation preserves the lexicographic order, but callers may pass
    // arbitrary ranges.
    FinSubset::canonicalize(out);
    return out;
}

inline std::vector<GroupElement> translate(const GroupElement& a, const FinSubset& X) {
    return translate(a, X.elements());
}

template <Cone M>
bool all_members(const M& m, std::span<const GroupElement> points) {
    return std::all_of(points.begin(), points.end(), [&](const GroupElement& g) { return m.contains(g); });
}

/// The unique a with 0 in a + X and a + X inside the monoid.
struct ShiftResult {
    GroupElement shift;
    FinSubset normalized;

    friend bool operator==(const ShiftResult&, const ShiftResult&) = default;
};

/// Every candidate -x (x in X) whose translate lands inside m. A shift must
/// send some x to 0, so these are the only possible candidates; for a reduced
/// valuation cone exactly one survives.
template <Cone M>
std::vector<GroupElement> normalizing_shifts(const M& m, const FinSubset& X) {
    std::vector<GroupElement> found;
    for (const auto& x : X) {
        const GroupElement a = -x;
        const bool inside =
            std::all_of(X.begin(), X.end(), [&](const GroupElement& y) { return m.contains(a + y); });
        if (inside)
            found.push_back(a);
    }
    return found;
}

/// Reference oracle: tries all |X| candidates and insists on exactly one.
template <Cone M>
ShiftResult normalize_shift_bruteforce(const M& m, const FinSubset& X) {
    std::vector<GroupElement> found = normalizing_shifts(m, X);
    if (found.empty())
        throw no_shift_found("no normalizing shift for " + to_string(X) + " (membership predicate is broken)");
    if (found.size() > 1)
        throw multiple_shifts_found(std::to_string(found.size()) + " normalizing shifts for " + to_string(X) +
                                    ", e.g. " + to_string(found[0]) + " and " + to_string(found[1]) +
                                    " (membership predicate is broken)");
    return {found.front(), FinSubset::from(translate(found.front(), X))};
}

/// Induction on |X|: remove the largest non-identity x, normalize the rest
/// to get a, then keep a if a + x is a member and switch to -x otherwise.
/// Unrolled, this re-adds the elements in ascending order starting from
/// {(0,0)} with shift (0,0).
template <Cone M>
ShiftResult normalize_shift_inductive(const M& m, const FinSubset& X) {
    GroupElement a{0, 0};
    for (const auto& x : X) {
        if (x.is_zero())
            continue;
        if (!m.contains(a + x))
            a = -x;
    }
    std::vector<GroupElement> image = translate(a, X);
    if (!all_members(m, std::span<const GroupElement>(image)))
        throw postcondition_failed("inductive normalization of " + to_string(X) + " produced shift " +
                                   to_string(a) + " which leaves the monoid");
    return {std::move(a), FinSubset::from(std::move(image))};
}

/// The isomorphism Pfin,1(src) -> Pfin,1(dst), X -> a + X, together with
/// its shift a.
template <Cone Src, Cone Dst>
ShiftResult transport_shift(const Src& src, const Dst& dst, const FinSubset& X) {
    for (const auto& x : X)
        if (!src.contains(x))
            throw not_in_source_monoid("element " + to_string(x) + " of " + to_string(X) +
                                       " is not in the source monoid");
    return normalize_shift_inductive(dst, X);
}

template <Cone Src, Cone Dst>
FinSubset transport(const Src& src, const Dst& dst, const FinSubset& X) {
    return transport_shift(src, dst, X).normalized;
}

/// Random element of Pfin,1(m): {(0,0)} plus up to size_bound - 1 points
/// rejection-sampled from [-coord_bound, coord_bound]^2 intersected with m.
/// Deterministic in the generator state.
template <Cone M, std::uniform_random_bit_generator Rng>
FinSubset gen_subset(const M& m, std::int64_t size_bound, std::int64_t coord_bound, Rng& rng) {
    if (size_bound < 1)
        throw precondition_violation("gen_subset: size_bound must be >= 1");
    if (coord_bound < 1)
        throw precondition_violation("gen_subset: coord_bound must be >= 1");
    constexpr int attempts_per_point = 1000;

    std::uniform_int_distribution<std::int64_t> count(0, size_bound - 1);
    std::uniform_int_distribution<std::int64_t> coord(-coord_bound, coord_bound);
    const std::int64_t extra = count(rng);

    std::vector<GroupElement> points{GroupElement{0, 0}};
    for (std::int64_t i = 0; i < extra; ++i) {
        int attempt = 0;
        for (;; ++attempt) {
            if (attempt == attempts_per_point)
                throw rejection_budget_exceeded("gen_subset: no member found in the box after " +
                                                std::to_string(attempts_per_point) + " draws");
            // Draw order is fixed so outputs do not depend on argument
            // evaluation order.
            const std::int64_t x = coord(rng);
            const std::int64_t y = coord(rng);
            GroupElement g{x, y};
            if (m.contains(g)) {
                points.push_back(std::move(g));
                break;
            }
        }
    }
    return FinSubset::from(std::move(points));
}

} // namespace powmon

#endif // POWMON_POWER_MONOID_HPP
