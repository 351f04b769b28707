#ifndef POWMON_CLI_HPP
#define POWMON_CLI_HPP

// Command-line front end. Kept header-only and stream-based so the tests can
// drive it without spawning processes; tools/powmon.cpp only forwards argv.
//
// Exit codes: 0 success, 1 property failure / inconclusive search / internal
// error, 2 parse or validation error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cones.hpp"
#include "errors.hpp"
#include "json.hpp"
#include "lattice.hpp"
#include "power_monoid.hpp"
#include "verify.hpp"

namespace powmon::cli {

inline constexpr const char* subcommands[] = {"member", "mul", "normalize", "transport", "factor", "atoms", "verify"};

/// A validated invocation. Literal fields hold canonical text forms.
struct Command {
    std::string subcommand;
    std::string monoid; // -m
    std::string from;
    std::string to;
    std::string element; // -g
    std::string set_x;   // -X
    std::string set_y;   // -Y
    std::string algo = "both";
    std::uint64_t max_radius = default_max_radius;
    std::int64_t box = 20;
    bool witnesses = false;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::int64_t size_bound = 8;
    std::int64_t coord_bound = 50;
    bool json = false;

    friend bool operator==(const Command&, const Command&) = default;

    /// Arguments that parse back to an equal Command.
    std::vector<std::string> to_args() const {
        std::vector<std::string> a{subcommand};
        auto add = [&](const char* flag, const std::string& v) {
            a.push_back(flag);
            a.push_back(v);
        };
        if (subcommand == "member") {
            add("-m", monoid);
            add("-g", element);
        } else if (subcommand == "mul") {
            add("-X", set_x);
            add("-Y", set_y);
        } else if (subcommand == "normalize") {
            add("-m", monoid);
            add("-X", set_x);
            add("--algo", algo);
        } else if (subcommand == "transport") {
            add("--from", from);
            add("--to", to);
            add("-X", set_x);
        } else if (subcommand == "factor") {
            add("-m", monoid);
            add("-g", element);
            add("--max-radius", std::to_string(max_radius));
        } else if (subcommand == "atoms") {
            add("-m", monoid);
            add("--box", std::to_string(box));
            add("--max-radius", std::to_string(max_radius));
            if (witnesses)
                a.push_back("--witnesses");
        } else if (subcommand == "verify") {
            add("--from", from);
            add("--to", to);
            add("--trials", std::to_string(trials));
            add("--seed", std::to_string(seed));
            add("--size-bound", std::to_string(size_bound));
            add("--coord-bound", std::to_string(coord_bound));
        }
        if (json)
            a.push_back("--json");
        return a;
    }
};

/// Thrown by parse_command for --help; carries the help text.
struct help_requested {
    std::string text;
};

/// Parses and validates `args` (without the program name). Throws
/// parse_error on bad flags or literals, help_requested for --help.
/// `env_seed` is the value of POWMON_SEED, if set.
inline Command parse_command(const std::vector<std::string>& args, const char* env_seed = nullptr) {
    CLI::App app{"Reduced finitary power monoids over valuation cones of Z^2", "powmon"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Command c;
    app.add_flag("--json", c.json, "Machine-readable output");

    const std::string spec_help = "Monoid: lex or slope:<alpha>, e.g. slope:sqrt(2)";
    std::optional<std::uint64_t> seed_flag;

    auto* member = app.add_subcommand("member", "Membership test");
    member->add_option("-m", c.monoid, spec_help)->required();
    member->add_option("-g", c.element, "Element (x,y)")->required();

    auto* mul = app.add_subcommand("mul", "Setwise product of two sets");
    mul->add_option("-X", c.set_x, "Set {(0,0),...}")->required();
    mul->add_option("-Y", c.set_y, "Set {(0,0),...}")->required();

    auto* normalize = app.add_subcommand("normalize", "Unique normalizing shift of a set");
    normalize->add_option("-m", c.monoid, spec_help)->required();
    normalize->add_option("-X", c.set_x, "Set {(0,0),...}")->required();
    normalize->add_option("--algo", c.algo, "inductive|brute|both")
        ->check(CLI::IsMember({"inductive", "brute", "both"}));

    auto* transport_cmd = app.add_subcommand("transport", "Image of a set under the power-monoid isomorphism");
    transport_cmd->add_option("--from", c.from, spec_help)->required();
    transport_cmd->add_option("--to", c.to, spec_help)->required();
    transport_cmd->add_option("-X", c.set_x, "Set {(0,0),...}")->required();

    auto* factor = app.add_subcommand("factor", "Nontrivial factorization witness");
    factor->add_option("-m", c.monoid, spec_help)->required();
    factor->add_option("-g", c.element, "Element (x,y)")->required();
    factor->add_option("--max-radius", c.max_radius, "Search cap for slope cones")->check(CLI::PositiveNumber);

    auto* atoms = app.add_subcommand("atoms", "Irreducible members in the box |x|,|y| <= B");
    atoms->add_option("-m", c.monoid, spec_help)->required();
    atoms->add_option("--box", c.box, "Box half-width B")->check(CLI::NonNegativeNumber);
    atoms->add_option("--max-radius", c.max_radius, "Search cap for slope cones")->check(CLI::PositiveNumber);
    atoms->add_flag("--witnesses", c.witnesses, "Also print a witness for every reducible member");

    auto* verify_cmd = app.add_subcommand("verify", "Seeded property check of the isomorphism");
    verify_cmd->add_option("--from", c.from, spec_help)->required();
    verify_cmd->add_option("--to", c.to, spec_help)->required();
    verify_cmd->add_option("--trials", c.trials, "Number of trials")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed_flag, "Master seed (default: $POWMON_SEED or 0)");
    verify_cmd->add_option("--size-bound", c.size_bound, "Max set size")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--coord-bound", c.coord_bound, "Coordinate box half-width")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw help_requested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw parse_error(e.what());
    }
    c.subcommand = app.get_subcommands().front()->get_name();

    if (seed_flag) {
        c.seed = *seed_flag;
    } else if (c.subcommand == "verify" && env_seed != nullptr) {
        try {
            std::size_t used = 0;
            c.seed = std::stoull(env_seed, &used);
            if (used != std::string(env_seed).size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw parse_error(std::string("POWMON_SEED is not an unsigned integer: ") + env_seed);
        }
    }

    // Validate every literal up front and keep its canonical form.
    auto canon_monoid = [](std::string& s) {
        if (!s.empty())
            s = parse_monoid(s).str();
    };
    canon_monoid(c.monoid);
    canon_monoid(c.from);
    canon_monoid(c.to);
    if (!c.element.empty())
        c.element = to_string(parse_element(c.element));
    if (!c.set_x.empty())
        c.set_x = to_string(parse_subset(c.set_x));
    if (!c.set_y.empty())
        c.set_y = to_string(parse_subset(c.set_y));
    return c;
}

namespace detail {

inline void check_member(const MonoidSpec& m, const FinSubset& X, const char* role) {
    for (const auto& x : X)
        if (!m.contains(x))
            throw not_in_source_monoid(std::string(role) + " element " + to_string(x) + " is not in " + m.str());
}

struct outcome {
    int code = 0;
    std::string text;
    nlohmann::json result = nlohmann::json::object();
};

inline outcome execute(const Command& c) {
    outcome o;
    if (c.subcommand == "member") {
        const bool in = parse_monoid(c.monoid).contains(parse_element(c.element));
        o.text = in ? "true" : "false";
        o.result = {{"member", in}};
    } else if (c.subcommand == "mul") {
        const FinSubset p = setwise_product(parse_subset(c.set_x), parse_subset(c.set_y));
        o.text = to_string(p);
        o.result = {{"product", subset_to_json(p)}};
    } else if (c.subcommand == "normalize") {
        const MonoidSpec m = parse_monoid(c.monoid);
        const FinSubset X = parse_subset(c.set_x);
        std::optional<ShiftResult> brute, inductive;
        if (c.algo != "inductive")
            brute = normalize_shift_bruteforce(m, X);
        if (c.algo != "brute")
            inductive = normalize_shift_inductive(m, X);
        if (brute && inductive && !(*brute == *inductive))
            throw postcondition_failed("normalization algorithms disagree: brute shift " + to_string(brute->shift) +
                                       ", inductive shift " + to_string(inductive->shift));
        const ShiftResult& r = inductive ? *inductive : *brute;
        o.text = "shift=" + to_string(r.shift) + " normalized=" + to_string(r.normalized);
        o.result = {{"shift", element_to_json(r.shift)}, {"normalized", subset_to_json(r.normalized)}, {"algo", c.algo}};
    } else if (c.subcommand == "transport") {
        const MonoidSpec src = parse_monoid(c.from);
        const MonoidSpec dst = parse_monoid(c.to);
        const ShiftResult r = transport_shift(src, dst, parse_subset(c.set_x));
        o.text = "shift=" + to_string(r.shift) + " image=" + to_string(r.normalized);
        o.result = {{"shift", element_to_json(r.shift)}, {"image", subset_to_json(r.normalized)}};
    } else if (c.subcommand == "factor") {
        const MonoidSpec m = parse_monoid(c.monoid);
        const GroupElement g = parse_element(c.element);
        if (!m.contains(g))
            throw precondition_violation(to_string(g) + " is not in " + m.str());
        const Irreducibility r = is_irreducible(m, g, c.max_radius);
        switch (r.kind) {
        case Irreducibility::Kind::unit:
            o.text = "UNIT";
            o.result = {{"kind", "unit"}};
            break;
        case Irreducibility::Kind::irreducible:
            o.text = "IRREDUCIBLE";
            o.result = {{"kind", "irreducible"}};
            break;
        case Irreducibility::Kind::reducible:
            if (!witness_valid(m, g, *r.witness))
                throw postcondition_failed("invalid witness for " + to_string(g));
            o.text = to_string(r.witness->g1) + " + " + to_string(r.witness->g2);
            o.result = {{"kind", "reducible"}, {"witness", witness_to_json(*r.witness)}};
            break;
        }
    } else if (c.subcommand == "atoms") {
        const MonoidSpec m = parse_monoid(c.monoid);
        std::vector<GroupElement> found;
        std::uint64_t scanned = 0;
        std::string witness_lines;
        nlohmann::json witness_json = nlohmann::json::array();
        for (std::int64_t x = -c.box; x <= c.box; ++x) {
            for (std::int64_t y = -c.box; y <= c.box; ++y) {
                const GroupElement g{x, y};
                if (g.is_zero() || !m.contains(g))
                    continue;
                ++scanned;
                const Irreducibility r = is_irreducible(m, g, c.max_radius);
                if (r.kind == Irreducibility::Kind::irreducible) {
                    found.push_back(g);
                    continue;
                }
                if (!witness_valid(m, g, *r.witness))
                    throw postcondition_failed("invalid witness for " + to_string(g));
                if (c.witnesses) {
                    witness_lines += "\n" + to_string(g) + " = " + to_string(r.witness->g1) + " + " +
                                     to_string(r.witness->g2);
                    witness_json.push_back({{"element", element_to_json(g)}, {"witness", witness_to_json(*r.witness)}});
                }
            }
        }
        o.text = "atoms=" + to_string(std::span<const GroupElement>(found)) + " scanned=" + std::to_string(scanned) +
                 witness_lines;
        o.result = {{"atoms", points_to_json(found)}, {"scanned", scanned}};
        if (c.witnesses)
            o.result["witnesses"] = witness_json;
    } else if (c.subcommand == "verify") {
        const MonoidSpec src = parse_monoid(c.from);
        const MonoidSpec dst = parse_monoid(c.to);
        VerifyOptions opt;
        opt.trials = c.trials;
        opt.seed = c.seed;
        opt.size_bound = c.size_bound;
        opt.coord_bound = c.coord_bound;
        opt.workers = 0;
        const VerifyReport report = verify(src, dst, opt);
        o.text = "verify from=" + src.str() + " to=" + dst.str() + "\n" + to_text(report);
        if (!o.text.empty() && o.text.back() == '\n')
            o.text.pop_back();
        o.result = report_to_json(report);
        o.code = report.ok() ? 0 : 1;
    }
    return o;
}

inline nlohmann::json inputs_json(const Command& c) {
    nlohmann::json in = nlohmann::json::object();
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty())
            in[key] = v;
    };
    put("monoid", c.monoid);
    put("from", c.from);
    put("to", c.to);
    put("element", c.element);
    put("X", c.set_x);
    put("Y", c.set_y);
    if (c.subcommand == "normalize")
        in["algo"] = c.algo;
    if (c.subcommand == "factor" || c.subcommand == "atoms")
        in["max_radius"] = c.max_radius;
    if (c.subcommand == "atoms") {
        in["box"] = c.box;
        in["witnesses"] = c.witnesses;
    }
    if (c.subcommand == "verify") {
        in["trials"] = c.trials;
        in["seed"] = c.seed;
        in["size_bound"] = c.size_bound;
        in["coord_bound"] = c.coord_bound;
    }
    return in;
}

} // namespace detail

/// Runs one command. Results go to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const char* env_seed = nullptr) {
    Command c;
    try {
        c = parse_command(args, env_seed);
    } catch (const help_requested& h) {
        out << h.text;
        return 0;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    detail::outcome o;
    try {
        o = detail::execute(c);
    } catch (const search_exhausted& e) {
        err << "error: " << e.what() << " (inconclusive; raise --max-radius)\n";
        return 1;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const invalid_value& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const precondition_violation& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const not_in_source_monoid& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    if (c.json) {
        nlohmann::json doc = {{"command", c.subcommand},
                              {"inputs", detail::inputs_json(c)},
                              {"result", o.result},
                              {"elapsed_ms", elapsed.count()}};
        out << doc.dump() << '\n';
    } else {
        out << o.text << '\n';
    }
    if (o.code != 0)
        err << "verify: property failures detected\n";
    return o.code;
}

} // namespace powmon::cli

#endif // POWMON_CLI_HPP
