#include "coop/harness.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "coop/detail/scaled.hpp"
#include "coop/rng.hpp"

namespace coop {

namespace {

using detail::ScaledTable;

std::string default_instance(const Game& g) {
    return "game(n=" + std::to_string(g.player_count()) + ")";
}

void require_supermodular(const Game& g, const char* theorem) {
    if (auto w = supermodularity_witness(g)) {
        throw Error(std::string(theorem) + " applies to supermodular games only; violation at " +
                    w->to_string());
    }
}

std::string rational_text(const BigInt& num, const BigInt& den) {
    return to_fraction_string(Rational(num, den));
}

// First coalition where the (a, b)-boycott exceeds the original worth, if any.
std::optional<Mask> raised_coalition(const ScaledTable& t, Mask a, Mask b, Mask full) {
    const Mask both = a | b;
    for (Mask s = 0; s <= full; ++s) {
        if (t.nums[s & ~a] + t.nums[s & ~b] - t.nums[s & ~both] > t.nums[s]) {
            return s;
        }
    }
    return std::nullopt;
}

} // namespace

std::string TheoremReport::to_string() const {
    std::ostringstream out;
    out << (holds ? "[holds]   " : "[violated] ") << theorem_id << ": " << instance << ", "
        << cases_checked << " case" << (cases_checked == 1 ? "" : "s");
    if (!witness.empty()) {
        out << "; witness: " << witness;
    }
    if (!details.empty()) {
        out << "; " << details;
    }
    return out.str();
}

TheoremReport verify_convexity_theorem(const Game& g) {
    const int n = g.player_count();
    if (n > 10) {
        throw InstanceTooLarge("exhaustive (A,B) enumeration capped at 10 players, got " +
                               std::to_string(n));
    }
    TheoremReport report;
    report.theorem_id = "convexity-biconditional";
    report.instance = default_instance(g);

    const auto super = supermodularity_witness(g);
    const ScaledTable scaled = detail::scale_table(g);
    const Mask full = g.full_mask();

    std::uint64_t specs = 0;
    std::optional<std::string> raised;
    for (Mask a = 0; a <= full && !raised; ++a) {
        const Mask rest = full & ~a;
        Mask b = 0;
        while (true) {
            ++specs;
            // An empty side leaves the game unchanged; nothing to scan.
            if (a != 0 && b != 0) {
                if (auto s = raised_coalition(scaled, a, b, full)) {
                    const BigInt vab = scaled.nums[*s & ~a] + scaled.nums[*s & ~b] -
                                       scaled.nums[*s & ~(a | b)];
                    raised = "A=" + mask_to_string(a) + " B=" + mask_to_string(b) +
                             " S=" + mask_to_string(*s) + ": v^AB(S)=" +
                             rational_text(vab, scaled.den) + " > v(S)=" +
                             rational_text(scaled.nums[*s], scaled.den);
                    break;
                }
            }
            if (b == rest) {
                break;
            }
            b = (b - rest) & rest;
        }
    }
    report.cases_checked = specs;

    if (!super) {
        // Convex direction: no boycott may raise any coalition's worth.
        report.holds = !raised.has_value();
        if (raised) {
            report.witness = "supermodular game with a raised coalition: " + *raised;
        } else {
            report.details = "supermodular; no boycott raises any coalition";
        }
    } else {
        // Converse: a non-convex game must admit a raising boycott.
        report.holds = raised.has_value();
        if (raised) {
            report.details = "not supermodular (" + super->to_string() +
                             "); raising boycott found: " + *raised;
        } else {
            report.witness = "not supermodular (" + super->to_string() +
                             ") yet no boycott raises any coalition";
        }
    }
    return report;
}

TheoremReport verify_nested_monotonicity(const Game& g, const EnumerationPlan& plan) {
    require_supermodular(g, "nested monotonicity");
    TheoremReport report;
    report.theorem_id = "nested-monotonicity";
    report.instance = default_instance(g);

    const ScaledTable scaled = detail::scale_table(g);
    const Mask full = g.full_mask();
    std::vector<BigInt> outer; // v^CD numerators

    std::uint64_t cases = 0;
    auto check_chain = [&](Mask a, Mask b, Mask c, Mask d) -> bool {
        ++cases;
        // An empty side of (C, D) makes both games collapse to v; equal
        // endpoints make them identical. Either way there is nothing to scan.
        if ((a == c && b == d) || c == 0 || d == 0) {
            return true;
        }
        const Mask ab = a | b;
        for (Mask s = 0; s <= full; ++s) {
            const BigInt inner =
                scaled.nums[s & ~a] + scaled.nums[s & ~b] - scaled.nums[s & ~ab];
            if (outer[s] > inner) {
                report.holds = false;
                report.witness = "A=" + mask_to_string(a) + " B=" + mask_to_string(b) +
                                 " C=" + mask_to_string(c) + " D=" + mask_to_string(d) +
                                 " S=" + mask_to_string(s) + ": v^CD(S)=" +
                                 rational_text(outer[s], scaled.den) + " > v^AB(S)=" +
                                 rational_text(inner, scaled.den);
                return false;
            }
        }
        return true;
    };

    if (plan.exhaustive) {
        for (Mask c = 0; c <= full && report.holds; ++c) {
            const Mask rest = full & ~c;
            Mask d = 0;
            while (report.holds) {
                detail::boycott_nums(scaled, c, d, outer);
                // All sub-pairs A within C, B within D.
                Mask a = 0;
                bool more_a = true;
                while (more_a && report.holds) {
                    Mask b = 0;
                    bool more_b = true;
                    while (more_b && report.holds) {
                        check_chain(a, b, c, d);
                        more_b = b != d;
                        b = (b - d) & d;
                    }
                    more_a = a != c;
                    a = (a - c) & c;
                }
                if (d == rest) {
                    break;
                }
                d = (d - rest) & rest;
            }
        }
    } else {
        SplitMix64 rng(stream_seed(plan.seed, 0x6e657374));
        for (std::uint64_t t = 0; t < plan.trials && report.holds; ++t) {
            Mask a = 0, b = 0, c = 0, d = 0;
            for (int p = 0; p < g.player_count(); ++p) {
                switch (rng.next_below(5)) {
                case 0: // outside both
                    break;
                case 1:
                    c |= player_bit(p);
                    break;
                case 2:
                    c |= player_bit(p);
                    a |= player_bit(p);
                    break;
                case 3:
                    d |= player_bit(p);
                    break;
                case 4:
                    d |= player_bit(p);
                    b |= player_bit(p);
                    break;
                }
            }
            detail::boycott_nums(scaled, c, d, outer);
            check_chain(a, b, c, d);
        }
    }
    report.cases_checked = cases;
    if (report.holds) {
        report.details = "v^CD <= v^AB on every checked chain";
    }
    return report;
}

TheoremReport verify_many_on_one(const Game& g, const EnumerationPlan& plan) {
    require_supermodular(g, "many-on-one maximality");
    TheoremReport report;
    report.theorem_id = "many-on-one-maximal-impact";
    report.instance = default_instance(g);

    const int n = g.player_count();
    const ScaledTable scaled = detail::scale_table(g);
    const ValueVector pre = detail::shapley_from_nums(scaled.nums, scaled.den, n);
    std::vector<BigInt> nums;

    std::uint64_t cases = 0;
    auto check_spec = [&](PlayerId i, Mask b) -> bool {
        ++cases;
        detail::boycott_nums(scaled, player_bit(i), b, nums);
        const ValueVector post = detail::shapley_from_nums(nums, scaled.den, n);
        const Rational impact_i = pre[static_cast<std::size_t>(i)] - post[static_cast<std::size_t>(i)];
        for (PlayerId p = 0; p < n; ++p) {
            const Rational impact_p =
                pre[static_cast<std::size_t>(p)] - post[static_cast<std::size_t>(p)];
            if (impact_p > impact_i) {
                report.holds = false;
                report.witness = "i=" + std::to_string(i) + " B=" + mask_to_string(b) +
                                 ": impact on player " + std::to_string(p) + " is " +
                                 to_fraction_string(impact_p) + " > impact on i of " +
                                 to_fraction_string(impact_i);
                return false;
            }
        }
        return true;
    };

    if (plan.exhaustive) {
        for (PlayerId i = 0; i < n && report.holds; ++i) {
            const Mask rest = g.full_mask() & ~player_bit(i);
            Mask b = 0;
            while (report.holds) {
                b = (b - rest) & rest; // nonempty targets only
                if (b == 0) {
                    break;
                }
                check_spec(i, b);
                if (b == rest) {
                    break;
                }
            }
        }
    } else if (n >= 2) {
        SplitMix64 rng(stream_seed(plan.seed, 0x6d616e79));
        for (std::uint64_t t = 0; t < plan.trials && report.holds; ++t) {
            const PlayerId i = static_cast<PlayerId>(rng.next_below(static_cast<std::uint32_t>(n)));
            const Mask rest = g.full_mask() & ~player_bit(i);
            Mask b = 0;
            while (b == 0) {
                b = static_cast<Mask>(rng.next()) & rest;
            }
            check_spec(i, b);
        }
    }
    report.cases_checked = cases;
    if (report.holds) {
        report.details = "the boycotting player's impact is maximal in every checked spec";
    }
    return report;
}

TheoremReport verify_sign_theorem(const Game& g, const EnumerationPlan& plan) {
    require_supermodular(g, "impact sign theorem");
    TheoremReport report;
    report.theorem_id = "impact-signs";
    report.instance = default_instance(g);

    const int n = g.player_count();
    const Mask full = g.full_mask();
    const ScaledTable scaled = detail::scale_table(g);
    const ValueVector pre = detail::shapley_from_nums(scaled.nums, scaled.den, n);
    std::vector<BigInt> nums;

    std::uint64_t cases = 0;
    auto check_spec = [&](Mask a, Mask b) -> bool {
        ++cases;
        detail::boycott_nums(scaled, a, b, nums);
        // Any player contained only in unchanged coalitions is invariant.
        Mask affected = 0;
        for (Mask s = 0; s <= full; ++s) {
            if (nums[s] != scaled.nums[s]) {
                affected |= s;
            }
        }
        const ValueVector post = detail::shapley_from_nums(nums, scaled.den, n);
        for (PlayerId p = 0; p < n; ++p) {
            const Rational delta =
                pre[static_cast<std::size_t>(p)] - post[static_cast<std::size_t>(p)];
            const bool participates = ((a | b) & player_bit(p)) != 0;
            const bool invariant = (affected & player_bit(p)) == 0;
            if (participates && delta < 0) {
                report.holds = false;
                report.witness = "A=" + mask_to_string(a) + " B=" + mask_to_string(b) +
                                 ": participant " + std::to_string(p) + " has negative impact " +
                                 to_fraction_string(delta);
                return false;
            }
            if (invariant && delta > 0) {
                report.holds = false;
                report.witness = "A=" + mask_to_string(a) + " B=" + mask_to_string(b) +
                                 ": invariant player " + std::to_string(p) +
                                 " has positive impact " + to_fraction_string(delta);
                return false;
            }
        }
        return true;
    };

    if (plan.exhaustive) {
        for (Mask a = 1; a <= full && report.holds; ++a) {
            const Mask rest = full & ~a;
            Mask b = 0;
            while (report.holds) {
                b = (b - rest) & rest;
                if (b == 0) {
                    break;
                }
                check_spec(a, b);
                if (b == rest) {
                    break;
                }
            }
        }
    } else if (n >= 2) {
        SplitMix64 rng(stream_seed(plan.seed, 0x7369676e));
        for (std::uint64_t t = 0; t < plan.trials && report.holds; ++t) {
            Mask a = 0, b = 0;
            while (a == 0 || b == 0) {
                a = 0;
                b = 0;
                for (int p = 0; p < n; ++p) {
                    switch (rng.next_below(3)) {
                    case 1:
                        a |= player_bit(p);
                        break;
                    case 2:
                        b |= player_bit(p);
                        break;
                    default:
                        break;
                    }
                }
            }
            check_spec(a, b);
        }
    }
    report.cases_checked = cases;
    if (report.holds) {
        report.details = "participants never gain, invariant players never lose";
    }
    return report;
}

TheoremReport verify_lemma1(const Game& g, const Coalition& a, const Coalition& b) {
    if (auto w = disjoint_productivity_witness(g, a, b)) {
        throw Error("marginal invariance requires disjointly productive coalitions; violation at " +
                    w->to_string());
    }
    TheoremReport report;
    report.theorem_id = "lemma1-marginal-invariance";
    report.instance = default_instance(g) + " A=" + a.to_string() + " B=" + b.to_string();

    const Mask rest = g.full_mask() & ~(a.bits() | b.bits());
    std::uint64_t cases = 0;
    Mask s = 0;
    bool more_s = true;
    while (more_s && report.holds) {
        Mask ap = 0;
        bool more_a = true;
        while (more_a && report.holds) {
            Mask bp = 0;
            bool more_b = true;
            while (more_b && report.holds) {
                ++cases;
                // dv_B'(S u A') must equal dv_B'(S).
                const Rational with_a = g.value(s | ap | bp) - g.value(s | ap);
                const Rational without_a = g.value(s | bp) - g.value(s);
                if (with_a != without_a) {
                    report.holds = false;
                    report.witness = "A'=" + mask_to_string(ap) + " B'=" + mask_to_string(bp) +
                                     " S=" + mask_to_string(s) + ": dv_B'(S u A')=" +
                                     to_fraction_string(with_a) + " != dv_B'(S)=" +
                                     to_fraction_string(without_a);
                }
                more_b = bp != b.bits();
                bp = (bp - b.bits()) & b.bits();
            }
            more_a = ap != a.bits();
            ap = (ap - a.bits()) & a.bits();
        }
        more_s = s != rest;
        s = (s - rest) & rest;
    }
    report.cases_checked = cases;
    if (report.holds) {
        report.details = "coalition marginals of B' are unchanged by adding members of A";
    }
    return report;
}

// --- Scenario reproduction -------------------------------------------------

namespace {

struct Expectation {
    std::optional<Rational> pre;
    std::optional<Rational> post;
    bool advisory = false;
};

void append_note(ScenarioReport& report, const std::string& text, bool ok) {
    report.notes.push_back(text + (ok ? " [ok]" : " [MISMATCH]"));
    if (!ok) {
        report.all_match = false;
    }
}

void append_info(ScenarioReport& report, const std::string& text) {
    report.notes.push_back(text);
}

} // namespace

ScenarioReport run_scenario(const ScenarioSpec& spec, const BoycottSpec& boycott_spec) {
    const Game game = instantiate(spec);
    const int n = game.player_count();
    if (boycott_spec.boycotters.universe_size() != n) {
        throw InvalidCoalition("boycott spec universe mismatch for " + spec.to_string());
    }

    ScenarioReport report{spec.to_string(), boycott_spec, {}, {}, true};
    const Game after = boycott(game, boycott_spec);
    const ValueVector pre = shapley_exact(game);
    const ValueVector post = shapley_exact(after);

    const Mask a = boycott_spec.boycotters.bits();
    const Mask b = boycott_spec.boycotted.bits();
    std::vector<Expectation> expect(static_cast<std::size_t>(n));

    switch (spec.family) {
    case Family::triangle: {
        for (auto& e : expect) {
            e.pre = Rational(4);
        }
        if (boycott_spec.boycotters.size() == 1 && boycott_spec.boycotted.size() == 1) {
            for (PlayerId p = 0; p < n; ++p) {
                expect[static_cast<std::size_t>(p)].post =
                    ((a | b) & player_bit(p)) ? Rational(3) : Rational(6);
            }
        }
        break;
    }
    case Family::homogeneous: {
        const int size_a = boycott_spec.boycotters.size();
        const int size_b = boycott_spec.boycotted.size();
        for (PlayerId p = 0; p < n; ++p) {
            auto& e = expect[static_cast<std::size_t>(p)];
            e.pre = Rational(n - 1, n);
            if (a & player_bit(p)) {
                e.post = Rational(n - size_b - 1, n - size_b);
            } else if (b & player_bit(p)) {
                e.post = Rational(n - size_a - 1, n - size_a);
            }
        }
        break;
    }
    case Family::heterogeneous: {
        const Mask bx = player_bit(spec.special);
        for (PlayerId p = 0; p < n; ++p) {
            auto& e = expect[static_cast<std::size_t>(p)];
            e.pre = (player_bit(p) & bx) ? Rational(n * n - 1, n) : Rational(2 * n - 1, n);
        }
        if (b == bx && a != 0 && (a & bx) == 0) {
            const int size_a = boycott_spec.boycotters.size();
            for (PlayerId p = 0; p < n; ++p) {
                auto& e = expect[static_cast<std::size_t>(p)];
                if (a & player_bit(p)) {
                    e.post = Rational(n - 2, n - 1);
                } else if (player_bit(p) & bx) {
                    const int remaining = n - size_a;
                    e.post = Rational(remaining * remaining - 1, remaining);
                }
            }
        }
        break;
    }
    case Family::three_block: {
        const ThreeBlockLayout layout = three_block_layout(spec.n);
        const int block_size = layout.block_size;
        const Mask keys = player_bit(layout.key_i) | player_bit(layout.key_j) |
                          player_bit(layout.key_k);
        const Rational phi_ordinary(5, 3);
        const Rational phi_key = Rational(4 * block_size, 3) + Rational(5, 3);
        for (PlayerId p = 0; p < n; ++p) {
            expect[static_cast<std::size_t>(p)].pre =
                (keys & player_bit(p)) ? phi_key : phi_ordinary;
        }

        const Mask block_masks[3] = {layout.block_i.bits(), layout.block_j.bits(),
                                     layout.block_k.bits()};
        int full_block_a = -1, full_block_b = -1, dropout_block_a = -1;
        for (int x = 0; x < 3; ++x) {
            if (a == block_masks[x]) {
                full_block_a = x;
            }
            if (b == block_masks[x]) {
                full_block_b = x;
            }
            const Mask key_bit = block_masks[x] & (~block_masks[x] + 1);
            if (block_size >= 2 && a == (block_masks[x] & ~key_bit)) {
                dropout_block_a = x;
            }
        }

        if (full_block_a >= 0 && full_block_b >= 0) {
            // Block-on-block boycott: the third block is untouched, values
            // inside the boycotting blocks drop to 4/3 (ordinary) and
            // (2/3)n + 4/3 (keys).
            const Rational post_ordinary(4, 3);
            const Rational post_key = Rational(2 * block_size, 3) + Rational(4, 3);
            for (PlayerId p = 0; p < n; ++p) {
                auto& e = expect[static_cast<std::size_t>(p)];
                if ((a | b) & player_bit(p)) {
                    e.post = (keys & player_bit(p)) ? post_key : post_ordinary;
                } else {
                    e.post = e.pre; // bystander block keeps its values exactly
                }
            }
        } else if (dropout_block_a >= 0 && full_block_b >= 0 && dropout_block_a != full_block_b) {
            // Key player of block A dropped out: prose-level expectations,
            // surfaced for inspection rather than asserted.
            const Mask key_b = block_masks[full_block_b] & (~block_masks[full_block_b] + 1);
            for (PlayerId p = 0; p < n; ++p) {
                auto& e = expect[static_cast<std::size_t>(p)];
                if (a & player_bit(p)) {
                    e.post = Rational(4, 3);
                    e.advisory = true;
                } else if ((b & player_bit(p)) && !(key_b & player_bit(p))) {
                    e.post = Rational(5, 3);
                    e.advisory = true;
                }
            }
        }
        break;
    }
    default:
        break;
    }

    report.rows.reserve(static_cast<std::size_t>(n));
    bool any_advisory_mismatch = false;
    for (PlayerId p = 0; p < n; ++p) {
        const std::size_t idx = static_cast<std::size_t>(p);
        ScenarioRow row;
        row.player = p;
        row.label = game.player_label(p);
        row.pre = pre[idx];
        row.post = post[idx];
        row.impact = pre[idx] - post[idx];
        row.role = (a & player_bit(p))   ? BoycottRole::boycotter
                   : (b & player_bit(p)) ? BoycottRole::boycotted
                                         : BoycottRole::bystander;
        row.expected_pre = expect[idx].pre;
        row.expected_post = expect[idx].post;
        row.advisory = expect[idx].advisory;
        row.match = (!row.expected_pre || *row.expected_pre == row.pre) &&
                    (!row.expected_post || *row.expected_post == row.post);
        if (!row.match) {
            if (row.advisory) {
                any_advisory_mismatch = true;
            } else {
                report.all_match = false;
            }
        }
        report.rows.push_back(std::move(row));
    }

    // Family-specific identity checks and findings.
    if (spec.family == Family::three_block) {
        const int block_size = spec.n;
        append_note(report,
                    "v(N) = " + to_fraction_string(game.grand_value()) + ", expected 9n = " +
                        std::to_string(9 * block_size),
                    game.grand_value() == 9 * block_size);
        const ThreeBlockLayout layout = three_block_layout(block_size);
        const Mask block_masks[3] = {layout.block_i.bits(), layout.block_j.bits(),
                                     layout.block_k.bits()};
        const bool block_pair = std::any_of(std::begin(block_masks), std::end(block_masks),
                                            [&](Mask m) { return m == a; }) &&
                                std::any_of(std::begin(block_masks), std::end(block_masks),
                                            [&](Mask m) { return m == b; });
        if (block_pair) {
            append_note(report,
                        "v^AB(N) = " + to_fraction_string(after.grand_value()) +
                            ", expected 7n = " + std::to_string(7 * block_size),
                        after.grand_value() == 7 * block_size);
        } else if (after.grand_value() != game.grand_value()) {
            append_info(report, "v^AB(N) = " + to_fraction_string(after.grand_value()));
        }
    }
    if (spec.family == Family::homogeneous) {
        bool bystanders_ok = true;
        for (const ScenarioRow& row : report.rows) {
            if (row.role == BoycottRole::bystander && row.post < row.pre) {
                bystanders_ok = false;
            }
        }
        bool invariant_ok = true;
        for (const ScenarioRow& row : report.rows) {
            if (row.role == BoycottRole::bystander &&
                !is_invariant_player(game, after, row.player)) {
                invariant_ok = false;
            }
        }
        if (boycott_spec.participants() != 0 &&
            boycott_spec.participants() != game.full_mask()) {
            append_note(report, "bystanders are invariant", invariant_ok);
            append_note(report, "bystander values did not decrease", bystanders_ok);
        }
    }
    if (any_advisory_mismatch) {
        append_info(report, "advisory expectations differ; see rows marked advisory");
    }
    return report;
}

namespace {

std::string scenario_tag(const std::string& family, const std::string& params) {
    return family + "(" + params + ")";
}

} // namespace

ScenarioReport scenario_triangle() {
    ScenarioSpec spec;
    spec.family = Family::triangle;
    spec.n = 3;
    BoycottSpec b(Coalition::single(0, 3), Coalition::single(1, 3));
    ScenarioReport report = run_scenario(spec, b);
    report.scenario_id = "triangle";
    return report;
}

ScenarioReport scenario_homogeneous(int player_count, int boycotter_count, int boycotted_count) {
    if (player_count < 2 || boycotter_count < 1 || boycotted_count < 1 ||
        boycotter_count + boycotted_count > player_count) {
        throw Error("homogeneous scenario needs n >= 2, a >= 1, b >= 1, a + b <= n");
    }
    ScenarioSpec spec;
    spec.family = Family::homogeneous;
    spec.n = player_count;
    Mask a = (Mask{1} << boycotter_count) - 1;
    Mask b = ((Mask{1} << boycotted_count) - 1) << boycotter_count;
    ScenarioReport report = run_scenario(
        spec, BoycottSpec(Coalition(a, player_count), Coalition(b, player_count)));
    report.scenario_id = scenario_tag(
        "homogeneous", "n=" + std::to_string(player_count) + ",a=" + std::to_string(boycotter_count) +
                           ",b=" + std::to_string(boycotted_count));
    return report;
}

ScenarioReport scenario_heterogeneous(int player_count, int boycotter_count) {
    if (player_count < 2 || boycotter_count < 1 || boycotter_count > player_count - 1) {
        throw Error("heterogeneous scenario needs n >= 2 and 1 <= a <= n - 1");
    }
    ScenarioSpec spec;
    spec.family = Family::heterogeneous;
    spec.n = player_count;
    spec.special = 0;
    // A = {1..a} boycotts the special player x = 0.
    Mask a = ((Mask{1} << boycotter_count) - 1) << 1;
    ScenarioReport report = run_scenario(
        spec, BoycottSpec(Coalition(a, player_count), Coalition::single(0, player_count)));
    report.scenario_id = scenario_tag(
        "heterogeneous", "n=" + std::to_string(player_count) + ",a=" + std::to_string(boycotter_count));
    return report;
}

ScenarioReport scenario_three_block_blocks(int block_size) {
    ScenarioSpec spec;
    spec.family = Family::three_block;
    spec.n = block_size;
    const ThreeBlockLayout layout = three_block_layout(block_size);
    ScenarioReport report = run_scenario(spec, BoycottSpec(layout.block_i, layout.block_j));
    report.scenario_id =
        scenario_tag("three-block", "n=" + std::to_string(block_size) + ",variant=blocks");
    return report;
}

ScenarioReport scenario_three_block_dropout(int block_size) {
    if (block_size < 2) {
        throw Error("dropout scenario needs block size >= 2 (the key player leaves A)");
    }
    ScenarioSpec spec;
    spec.family = Family::three_block;
    spec.n = block_size;
    const ThreeBlockLayout layout = three_block_layout(block_size);
    const Coalition a = layout.block_i.minus(Coalition::single(layout.key_i, 3 * block_size));
    ScenarioReport report = run_scenario(spec, BoycottSpec(a, layout.block_j));
    report.scenario_id =
        scenario_tag("three-block", "n=" + std::to_string(block_size) + ",variant=dropout");

    // Findings for the claims that have no unambiguous reading:
    // who carries the maximum impact, and which quantity equals n + 2.
    const PlayerId key_i = layout.key_i;
    const PlayerId key_j = layout.key_j;
    Rational max_impact = report.rows.front().impact;
    for (const ScenarioRow& row : report.rows) {
        max_impact = std::max(max_impact, row.impact);
    }
    std::string maximizers;
    for (const ScenarioRow& row : report.rows) {
        if (row.impact == max_impact) {
            if (!maximizers.empty()) {
                maximizers += ",";
            }
            maximizers += row.label;
        }
    }
    const Rational impact_i = report.rows[static_cast<std::size_t>(key_i)].impact;
    const Rational impact_j = report.rows[static_cast<std::size_t>(key_j)].impact;
    const Rational post_i = report.rows[static_cast<std::size_t>(key_i)].post;
    const Rational post_j = report.rows[static_cast<std::size_t>(key_j)].post;
    const bool keys_maximal = impact_i == max_impact && impact_j == max_impact;
    append_info(report, std::string("impact maximizers: {") + maximizers + "}; keys i and j " +
                            (keys_maximal ? "do" : "do not") + " jointly maximize the impact");
    const Rational target(block_size + 2);
    auto reading = [&](const char* name, const Rational& value) {
        append_info(report, std::string(name) + " = " + to_fraction_string(value) +
                                (value == target ? " (= n+2)" : " (!= n+2)"));
    };
    reading("impact on i", impact_i);
    reading("impact on j", impact_j);
    reading("post-boycott value of i", post_i);
    reading("post-boycott value of j", post_j);
    return report;
}

std::string ScenarioReport::to_string() const {
    std::ostringstream out;
    out << scenario_id << " [" << spec.to_string() << "]: "
        << (all_match ? "all expectations match" : "EXPECTATION MISMATCH");
    for (const std::string& note : notes) {
        out << "\n  " << note;
    }
    return out.str();
}

} // namespace coop
