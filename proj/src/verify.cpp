#include "desa/verify.hpp"

#include <algorithm>
#include <sstream>

#include "desa/errors.hpp"
#include "desa/random_instance.hpp"

namespace desa {

SynthesisRun run_synthesis(const ProblemInstance& inst) {
    SupervisorRealization sr =
        validate_supervisor(inst.supervisor, inst.universe, inst.options.repair_selfloops);
    if (inst.options.strict_damage && !is_complete(inst.damage, inst.universe)) {
        throw Error(ErrorKind::kDamageIncomplete,
                    "damage automaton is partial and strict mode is on");
    }
    Fsa h = complete_damage_automaton(inst.damage, inst.universe);
    AnnotatedSupervisor sa = annotate_supervisor(sr);
    GeneralizedProduct gp = generalized_product(inst.plant, sa, h);
    MooreAttacker m = subset_with_labels(gp);
    AttackVerdict verdict = is_attackable(m);
    return SynthesisRun{std::move(sr), std::move(h),       std::move(sa),
                        std::move(gp), std::move(m),       verdict};
}

namespace {

using Word = std::vector<std::string>;

std::string show(const Word& w) { return w.empty() ? "(empty)" : join(w, " "); }

std::set<Word> attacked_words(const Fsa& g, const SupervisorRealization& sr,
                              const MooreAttacker& attacker, const Fsa& h, int max_len) {
    AttackedLoop loop = build_attacked_loop(g, sr, attacker, h);
    std::set<Word> out;
    for (const auto& w : enumerate_language(loop.fsa(), max_len)) out.insert(to_events(w));
    return out;
}

MooreAttacker prune(const MooreAttacker& base, std::mt19937_64& rng) {
    MooreAttacker out = base;
    std::vector<std::pair<std::string, std::string>> kept;
    for (auto& [y, lf] : out.lf) {
        std::set<std::string> next;
        for (const auto& sigma : lf) {
            if (rng() % 2 == 0) {
                next.insert(sigma);
                kept.emplace_back(y, sigma);
            }
        }
        lf = std::move(next);
    }
    if (kept.empty()) {
        // keep one attack so the pruned attacker still succeeds
        std::vector<std::pair<std::string, std::string>> all;
        for (const auto& [y, lf] : base.lf) {
            for (const auto& sigma : lf) all.emplace_back(y, sigma);
        }
        const auto& pick = all[rng() % all.size()];
        out.lf[pick.first].insert(pick.second);
    }
    return out;
}

}  // namespace

CheckReport cross_check(const ProblemInstance& inst, int max_len, std::mt19937_64& rng,
                        int prunings) {
    CheckReport report;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
    };

    SynthesisRun run = run_synthesis(inst);
    report.attackable = run.verdict.attackable;
    const Fsa& g = inst.plant;
    const SupervisorRealization& sr = run.supervisor;
    const Fsa& h = run.damage_complete;

    const std::vector<Word> words = oracle_closed_loop(g, sr, max_len);
    const std::set<Word> loop_words(words.begin(), words.end());
    const std::vector<AttackPair> pairs = oracle_attack_pairs(g, sr, h, max_len);

    // attackability verdict vs. brute-force attack pairs
    add("attackability-matches-bruteforce-pairs",
        run.verdict.attackable == !pairs.empty(),
        run.verdict.attackable ? "pipeline: attackable" : "pipeline: not attackable");

    // per-observation attack sets vs. brute force, for every bounded string
    {
        std::map<std::vector<ObsLabel>, std::set<std::string>> brute;
        for (const auto& pair : pairs) {
            brute[oracle_observation(sr, pair.s)].insert(pair.sigma);
        }
        bool pass = true;
        std::string detail;
        for (const auto& w : words) {
            std::vector<ObsLabel> obs = oracle_observation(sr, w);
            std::string y = run.attacker.fsa.initial();
            bool feasible = true;
            for (const auto& l : obs) {
                const std::string* t = run.attacker.fsa.next(y, Label::observation(l));
                if (t == nullptr) {
                    feasible = false;
                    break;
                }
                y = *t;
            }
            if (!feasible) {
                pass = false;
                detail = "observation of \"" + show(w) + "\" not accepted by the attacker";
                break;
            }
            auto it = brute.find(obs);
            const std::set<std::string> expected =
                it == brute.end() ? std::set<std::string>{} : it->second;
            if (run.attacker.lf.at(y) != expected) {
                pass = false;
                detail = "attack set mismatch after \"" + show(w) + "\"";
                break;
            }
        }
        add("estimate-labels-match-bruteforce", pass, detail);
    }

    // attacked behavior of the synthesized attacker vs. the brute-force union
    const std::set<Word> supremal_words = attacked_words(g, sr, run.attacker, h, max_len);
    {
        std::set<Word> expected = loop_words;
        for (const auto& pair : pairs) {
            for (auto& ext : oracle_En(g, sr, pair, max_len)) expected.insert(std::move(ext));
        }
        bool pass = supremal_words == expected;
        std::string detail;
        if (!pass) {
            std::vector<Word> diff;
            std::set_symmetric_difference(supremal_words.begin(), supremal_words.end(),
                                          expected.begin(), expected.end(),
                                          std::back_inserter(diff));
            detail = "first difference: \"" + show(diff.front()) + "\"";
        }
        add("supremal-behavior-is-union-of-enabled-extensions", pass, detail);
    }

    // success and covertness of the synthesized attacker
    {
        AttackedLoop loop = build_attacked_loop(g, sr, run.attacker, h);
        SuccessReport report = check_success(loop);
        if (run.verdict.attackable) {
            add("supremal-attack-successful-and-covert", report.successful,
                report.detected_reachable ? "detected-without-damage is reachable"
                                          : (report.damage_reachable ? "" : "damage unreachable"));
        } else {
            add("supremal-attack-successful-and-covert",
                !report.damage_reachable && !report.detected_reachable,
                "not attackable: loop must stay within the supervised behavior");
        }
    }

    // every successful pruning of the attacker stays within its behavior
    {
        bool pass = true;
        std::string detail;
        if (run.verdict.attackable) {
            for (int i = 0; i < prunings && pass; ++i) {
                MooreAttacker pruned = prune(run.attacker, rng);
                AttackedLoop loop = build_attacked_loop(g, sr, pruned, h);
                if (!check_success(loop).successful) {
                    pass = false;
                    detail = "pruned attacker lost success";
                    break;
                }
                std::set<Word> pruned_words;
                for (const auto& w : enumerate_language(loop.fsa(), max_len)) {
                    pruned_words.insert(to_events(w));
                }
                for (const auto& w : pruned_words) {
                    if (supremal_words.count(w) == 0) {
                        pass = false;
                        detail = "pruned attacker generated \"" + show(w) + "\"";
                        break;
                    }
                }
            }
        } else {
            detail = "not attackable";
        }
        add("pruned-attackers-stay-within-supremal", pass, detail);
    }

    // strings outside the supervised behavior are exactly one step beyond it
    {
        bool pass = true;
        std::string detail;
        for (const auto& w : supremal_words) {
            if (loop_words.count(w) != 0) continue;
            Word prefix(w.begin(), w.end() - 1);
            if (loop_words.count(prefix) == 0) {
                pass = false;
                detail = "escape \"" + show(w) + "\" is not a one-step extension";
                break;
            }
        }
        add("escapes-are-one-step", pass, detail);
    }

    return results;
}

CampaignSummary run_campaign(uint64_t seed, int n, int max_len, int prunings) {
    CampaignSummary summary;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
        ProblemInstance inst = random_instance(rng);
        std::vector<CheckResult> checks = cross_check(inst, max_len, rng, prunings);
        ++summary.instances;
        bool attackable = false;
        for (const auto& c : checks) {
            ++summary.checks;
            if (!c.pass) {
                ++summary.failures;
                std::ostringstream msg;
                msg << "instance " << i << ": " << c.name;
                if (!c.detail.empty()) msg << " (" << c.detail << ")";
                summary.failure_details.push_back(msg.str());
            }
        }
        SynthesisRun run = run_synthesis(inst);
        if (run.verdict.attackable) ++summary.attackable;
        (void)attackable;
    }
    return summary;
}

}  // namespace desa
