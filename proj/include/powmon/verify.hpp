#ifndef POWMON_VERIFY_HPP
#define POWMON_VERIFY_HPP

// Seeded property harness for the isomorphism X -> a + X between the power
// monoids of two reduced valuation cones.
//
// Each trial draws its inputs from its own generator, seeded from the master
// seed and the trial index only, so the failure set does not depend on how
// trials are spread over worker threads. Any failing trial can be replayed
// alone with run_trial.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cones.hpp"
#include "errors.hpp"
#include "power_monoid.hpp"

namespace powmon {

/// Property names, in report order.
inline constexpr const char* property_names[] = {"uniqueness", "oracle_equivalence", "homomorphism", "round_trip",
                                                 "identity"};
inline constexpr std::size_t property_count = std::size(property_names);

enum class Property : std::size_t { uniqueness, oracle_equivalence, homomorphism, round_trip, identity };

struct VerifyOptions {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::int64_t size_bound = 8;
    std::int64_t coord_bound = 50;
    unsigned workers = 1; // 0 = hardware concurrency
};

/// A failed check with everything needed to replay it.
struct FailureRecord {
    std::string property;
    std::uint64_t trial = 0;
    std::uint64_t trial_seed = 0;
    std::vector<std::string> inputs; // set literals
    std::string detail;

    friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct PropertyTally {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;

    friend bool operator==(const PropertyTally&, const PropertyTally&) = default;
};

struct VerifyReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
    std::int64_t size_bound = 0;
    std::int64_t coord_bound = 0;
    std::vector<PropertyTally> tallies;
    std::vector<FailureRecord> failure_records;
    std::chrono::milliseconds elapsed{0};

    bool ok() const { return failures == 0; }
};

/// Per-trial seed: splitmix64 finalizer over (seed, trial).
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Outcome of one trial: checks performed and failures seen per property.
struct TrialOutcome {
    std::uint64_t checks[property_count] = {};
    std::vector<FailureRecord> failures;
};

namespace detail {

class trial_context {
public:
    trial_context(TrialOutcome& out, std::uint64_t trial, std::uint64_t seed)
        : out_(out), trial_(trial), seed_(seed) {}

    // Runs one check. `body` returns an empty string on success or a
    // description of the violation. Exceptions count as failures.
    template <class Body>
    void check(Property p, std::vector<std::string> inputs, Body&& body) {
        ++out_.checks[static_cast<std::size_t>(p)];
        std::string detail;
        try {
            detail = body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!detail.empty())
            out_.failures.push_back(
                {property_names[static_cast<std::size_t>(p)], trial_, seed_, std::move(inputs), std::move(detail)});
    }

private:
    TrialOutcome& out_;
    std::uint64_t trial_;
    std::uint64_t seed_;
};

} // namespace detail

/// Exactly one candidate shift normalizes X. Empty string on success.
template <Cone M>
std::string check_uniqueness(const M& m, const FinSubset& X) {
    const auto found = normalizing_shifts(m, X);
    if (found.size() == 1)
        return {};
    return std::to_string(found.size()) + " normalizing shifts";
}

template <Cone M>
std::string check_oracle_equivalence(const M& m, const FinSubset& X) {
    const ShiftResult brute = normalize_shift_bruteforce(m, X);
    const ShiftResult inductive = normalize_shift_inductive(m, X);
    if (brute == inductive)
        return {};
    return "brute shift " + to_string(brute.shift) + " != inductive shift " + to_string(inductive.shift);
}

/// f(XY) = f(X)f(Y) and the shifts add up.
template <Cone Src, Cone Dst>
std::string check_homomorphism(const Src& src, const Dst& dst, const FinSubset& X, const FinSubset& Y) {
    const ShiftResult fx = transport_shift(src, dst, X);
    const ShiftResult fy = transport_shift(src, dst, Y);
    const ShiftResult fxy = transport_shift(src, dst, setwise_product(X, Y));
    const FinSubset product = setwise_product(fx.normalized, fy.normalized);
    if (fxy.normalized != product)
        return "f(XY) = " + to_string(fxy.normalized) + " but f(X)f(Y) = " + to_string(product);
    if (fx.shift + fy.shift != fxy.shift)
        return "shifts " + to_string(fx.shift) + " + " + to_string(fy.shift) + " != " + to_string(fxy.shift);
    return {};
}

/// Transporting there and back is the identity.
template <Cone Src, Cone Dst>
std::string check_round_trip(const Src& src, const Dst& dst, const FinSubset& X) {
    const FinSubset there = transport(src, dst, X);
    const FinSubset back = transport(dst, src, there);
    if (back == X)
        return {};
    return "round trip gives " + to_string(back) + " via " + to_string(there);
}

template <Cone Src, Cone Dst>
std::string check_identity(const Src& src, const Dst& dst) {
    const FinSubset image = transport(src, dst, FinSubset{});
    if (image == FinSubset{})
        return {};
    return "identity maps to " + to_string(image);
}

/// Runs every property once on inputs drawn for trial `trial`.
template <Cone Src, Cone Dst>
TrialOutcome run_trial(const Src& src, const Dst& dst, const VerifyOptions& opt, std::uint64_t trial) {
    TrialOutcome out;
    const std::uint64_t seed = trial_seed(opt.seed, trial);
    detail::trial_context ctx(out, trial, seed);
    std::mt19937_64 rng(seed);

    auto draw = [&](const auto& cone) { return gen_subset(cone, opt.size_bound, opt.coord_bound, rng); };

    // Inputs are drawn up front, in a fixed order, so a generation failure
    // is attributed to the property that needed the set.
    std::optional<FinSubset> any, x_src, y_src, y_dst;
    std::string gen_error;
    try {
        any = draw(WholeGroup{});
        x_src = draw(src);
        y_src = draw(src);
        y_dst = draw(dst);
    } catch (const std::exception& e) {
        gen_error = std::string("input generation: ") + e.what();
    }
    auto require = [&](const std::optional<FinSubset>& s) -> const FinSubset& {
        if (!s)
            throw rejection_budget_exceeded(gen_error);
        return *s;
    };
    auto lit = [](const std::optional<FinSubset>& s) { return s ? to_string(*s) : std::string("<not generated>"); };

    ctx.check(Property::uniqueness, {lit(any)}, [&] {
        std::string r = check_uniqueness(src, require(any));
        return r.empty() ? r : "source: " + r;
    });
    ctx.check(Property::uniqueness, {lit(any)}, [&] {
        std::string r = check_uniqueness(dst, require(any));
        return r.empty() ? r : "target: " + r;
    });
    ctx.check(Property::oracle_equivalence, {lit(any)}, [&] { return check_oracle_equivalence(src, require(any)); });
    ctx.check(Property::oracle_equivalence, {lit(any)}, [&] { return check_oracle_equivalence(dst, require(any)); });
    ctx.check(Property::homomorphism, {lit(x_src), lit(y_src)},
              [&] { return check_homomorphism(src, dst, require(x_src), require(y_src)); });
    ctx.check(Property::round_trip, {lit(x_src)}, [&] { return check_round_trip(src, dst, require(x_src)); });
    ctx.check(Property::round_trip, {lit(y_dst)}, [&] { return check_round_trip(dst, src, require(y_dst)); });
    ctx.check(Property::identity, {}, [&] { return check_identity(src, dst); });
    ctx.check(Property::identity, {}, [&] { return check_identity(dst, src); });
    return out;
}

/// Runs `opt.trials` trials. Throws precondition_violation for trials == 0
/// or nonpositive bounds; property violations are reported, not thrown.
template <Cone Src, Cone Dst>
VerifyReport verify(const Src& src, const Dst& dst, const VerifyOptions& opt) {
    if (opt.trials == 0)
        throw precondition_violation("verify: trials must be >= 1");
    if (opt.size_bound < 1 || opt.coord_bound < 1)
        throw precondition_violation("verify: size_bound and coord_bound must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(opt.trials);

    unsigned workers = opt.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.workers;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, opt.trials));
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t t; (t = next.fetch_add(1)) < opt.trials;)
            outcomes[t] = run_trial(src, dst, opt, t);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(work);
    }

    VerifyReport report;
    report.trials = opt.trials;
    report.seed = opt.seed;
    report.size_bound = opt.size_bound;
    report.coord_bound = opt.coord_bound;
    for (const char* name : property_names)
        report.tallies.push_back({name, 0, 0});
    for (auto& o : outcomes) {
        for (std::size_t p = 0; p < property_count; ++p)
            report.tallies[p].checks += o.checks[p];
        for (auto& f : o.failures) {
            const auto it = std::find(std::begin(property_names), std::end(property_names), f.property);
            ++report.tallies[static_cast<std::size_t>(it - std::begin(property_names))].failures;
            report.failure_records.push_back(std::move(f));
        }
    }
    report.failures = report.failure_records.size();
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

/// Human-readable report. Leaves out the elapsed time so identical runs print
/// identical text.
inline std::string to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "trials=" << r.trials << " seed=" << r.seed << " size_bound=" << r.size_bound
       << " coord_bound=" << r.coord_bound << '\n';
    for (const auto& t : r.tallies)
        os << "  " << t.name << ": checks=" << t.checks << " failures=" << t.failures << '\n';
    for (const auto& f : r.failure_records) {
        os << "FAIL " << f.property << " trial=" << f.trial << " trial_seed=" << f.trial_seed;
        for (const auto& in : f.inputs)
            os << ' ' << in;
        os << " : " << f.detail << '\n';
    }
    os << "failures=" << r.failures << '\n';
    return os.str();
}

} // namespace powmon

#endif // POWMON_VERIFY_HPP
