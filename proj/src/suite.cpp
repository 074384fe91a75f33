#include "mbal/suite.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "mbal/boolcore.hpp"
#include "mbal/correspondence.hpp"
#include "mbal/duality.hpp"
#include "mbal/errors.hpp"

namespace mbal {

namespace {

constexpr std::size_t kCriteria = 9;

const std::array<const char*, kCriteria> kNames{
    "axiom soundness",
    "frame roundtrip",
    "operator roundtrip",
    "correspondence biconditionals",
    "box/diamond interdefinability and diamond forms",
    "idempotent diagram",
    "set identities",
    "alternative axiomatization",
    "morphism duality",
};

// Counters for one criterion within one chunk of work.
struct Tally {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    Json first_failure;
    std::map<std::string, std::uint64_t> info;

    void check(bool ok, const std::function<Json()>& describe)
    {
        ++checked;
        if (!ok) {
            if (failures == 0) {
                first_failure = describe();
            }
            ++failures;
        }
    }

    void merge(Tally&& o)
    {
        if (failures == 0 && o.failures != 0) {
            first_failure = std::move(o.first_failure);
        }
        checked += o.checked;
        failures += o.failures;
        for (auto& [k, v] : o.info) {
            info[k] += v;
        }
    }
};

using Tallies = std::array<Tally, kCriteria>;

// Splits [0, count) into fixed chunks, runs them on `threads` workers, and
// merges the per-chunk tallies in chunk order.
void run_chunked(std::uint64_t count, unsigned threads, Tallies& out,
                 const std::function<void(std::uint64_t, Tallies&)>& body)
{
    if (count == 0) {
        return;
    }
    const std::uint64_t chunk = std::max<std::uint64_t>(1, count / 256);
    const std::uint64_t chunks = (count + chunk - 1) / chunk;
    std::vector<Tallies> partial(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
            try {
                const std::uint64_t end = std::min(count, (c + 1) * chunk);
                for (std::uint64_t i = c * chunk; i < end; ++i) {
                    body(i, partial[c]);
                }
            } catch (...) {
                errors[c] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1U, threads);
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    for (std::uint64_t c = 0; c < chunks; ++c) {
        if (errors[c]) {
            std::rethrow_exception(errors[c]);
        }
        for (std::size_t k = 0; k < kCriteria; ++k) {
            out[k].merge(std::move(partial[c][k]));
        }
    }
}

Json frame_json(const Frame& f) { return frame_to_json(f); }

constexpr std::array<Law, 17> kSoundnessLaws{
    Law::M1, Law::M2, Law::M3, Law::M4, Law::M5, Law::L1, Law::L2, Law::L3, Law::L4,
    Law::L5, Law::L6, Law::L7, Law::D1, Law::D2, Law::D3, Law::D4, Law::D5,
};

// Criterion 5, first half: ◇f = 1 - □(1 - f) and □f = 1 - ◇(1 - f) on every pool input.
void check_interdefinability(const Frame& frame, const SamplePool& pool, Tally& t)
{
    for (const Func& f : pool.funcs) {
        const Func dia = diamond_r(frame, f);
        const Func box = box_r(frame, f);
        const bool ok = dia == 1 - box_r(frame, 1 - f) && box == 1 - diamond_r(frame, 1 - f);
        t.check(ok, [&] {
            return Json{{"check", "interdefinability"}, {"frame", frame_json(frame)}, {"f", values_to_json(f)}};
        });
    }
}

// Criterion 5, second half: □-form and ◇-form verdicts agree for every scheme.
void check_forms(const Frame& frame, const std::array<SchemeVerdict, 4>& verdicts, Tally& t)
{
    for (const SchemeVerdict& v : verdicts) {
        t.check(v.forms_agree(), [&] {
            return Json{{"check", "scheme forms"}, {"frame", frame_json(frame)}, {"verdict", scheme_verdict_to_json(v)}};
        });
    }
}

std::array<SchemeVerdict, 4> scheme_verdicts(const ModalOperator& op, const SamplePool& pool)
{
    return {check_scheme(op, Scheme::D, pool), check_scheme(op, Scheme::T, pool), check_scheme(op, Scheme::K4, pool),
            check_scheme(op, Scheme::B, pool)};
}

void check_agreement(const FramePtr& frame, const SamplePool& pool, Tallies& t)
{
    const AgreementResult r = agreement(frame, pool);
    t[3].check(r.agree(), [&] { return Json{{"frame", frame_json(*frame)}, {"agreement", agreement_to_json(r)}}; });
    for (const SchemeAgreement& s : r.schemes) {
        if (s.witness) {
            ++t[3].info[std::string{"witness_"} + std::string{stage_id(s.witness->stage)}];
        }
    }
    std::array<SchemeVerdict, 4> verdicts{r.schemes[0].algebra, r.schemes[1].algebra, r.schemes[2].algebra,
                                          r.schemes[3].algebra};
    check_forms(*frame, verdicts, t[4]);
}

void check_roundtrips(const FramePtr& frame, const ModalOperator& op, const SamplePool& pool, Tallies& t)
{
    const FrameRoundtrip fr = roundtrip_frame(frame);
    t[1].check(fr.equal(), [&] { return Json{{"frame", frame_json(*frame)}, {"roundtrip", frame_roundtrip_to_json(*frame, fr)}}; });
    const OperatorRoundtrip orr = roundtrip_operator(op, pool);
    t[2].check(orr.status == OperatorRoundtrip::Status::equal,
               [&] { return Json{{"frame", frame_json(*frame)}, {"roundtrip", operator_roundtrip_to_json(orr)}}; });
}

// One relation of the exhaustive sweep: criteria 1-6 and 8.
void exhaustive_frame(const SuiteConfig& cfg, std::size_t n, std::uint64_t code, Tallies& t)
{
    const FramePtr frame = share(Frame::from_code(n, code));
    const ModalOperator op = ModalOperator::relation_induced(frame);
    const SamplePool pool = make_pool(frame, cfg.samples, derive_seed(cfg.seed, {1, n, code}));

    bool m1_to_m4 = true;
    bool m5 = true;
    for (Law law : kSoundnessLaws) {
        const Verdict v = check_law(op, law, pool);
        t[0].info["instances"] += v.checked;
        t[0].check(v.holds_on_samples(), [&] { return Json{{"frame", frame_json(*frame)}, {"verdict", verdict_to_json(v)}}; });
        if (law == Law::M5) {
            m5 = v.holds_on_samples();
        } else if (law <= Law::M4) {
            m1_to_m4 = m1_to_m4 && v.holds_on_samples();
        }
    }

    AxiomatizationComparison cmp{m1_to_m4, m5, check_law(op, Law::V1, pool).holds_on_samples(),
                                 check_law(op, Law::V2, pool).holds_on_samples()};
    t[7].check(cmp.systems_agree(), [&] {
        return Json{{"frame", frame_json(*frame)}, {"m5", cmp.m5}, {"v1", cmp.v1}, {"v2", cmp.v2}};
    });
    if (!cmp.axioms_agree()) {
        ++t[7].info["raw_m5_vs_v1v2_disagreements"];
    }

    check_roundtrips(frame, op, pool, t);

    check_interdefinability(*frame, pool, t[4]);
    if (n <= cfg.correspondence_exhaustive) {
        check_agreement(frame, pool, t);
    } else {
        check_forms(*frame, scheme_verdicts(op, pool), t[4]);
    }

    const DiagramVerdict dv = diagram_commutes(frame, false);
    const MeetPreservation mp = check_meet_preservation(idempotent_algebra(frame), *frame);
    t[5].check(dv.commutes() && mp.ok(), [&] {
        Json j{{"frame", frame_json(*frame)}, {"diagram_commutes", dv.commutes()}, {"meets_preserved", mp.ok()}};
        if (dv.box_mismatch) {
            j["subset"] = point_set_to_json(*frame, *dv.box_mismatch);
        }
        return j;
    });
}

struct MutantSpec {
    Mutation kind;
    Rational param;
};

const std::array<MutantSpec, 10> kMutants{{
    {Mutation::dead_end_value, 0},
    {Mutation::shift_live, 1},
    {Mutation::scale_live, 2},
    {Mutation::square_live, 0},
    {Mutation::max_at_first, 0},
    {Mutation::dead_end_value, 2},
    {Mutation::shift_live, Rational{-1, 2}},
    {Mutation::scale_live, Rational{1, 2}},
    {Mutation::dead_end_value, Rational{1, 2}},
    {Mutation::scale_live, -1},
}};

// Whether the mutation can change anything on this frame.
bool mutation_applies(const Frame& f, Mutation kind)
{
    switch (kind) {
    case Mutation::dead_end_value:
        return !f.dead_ends().empty();
    case Mutation::max_at_first: {
        const auto live = f.dead_free().indices();
        return !live.empty() && f.successors(live.front()).size() >= 2;
    }
    default:
        return !f.dead_free().empty();
    }
}

void mutant(const SuiteConfig& cfg, std::uint64_t i, Tallies& t)
{
    const MutantSpec& spec = kMutants[i % kMutants.size()];
    FramePtr frame;
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::size_t n = 2 + (i + attempt) % 3;
        Frame f = random_frame(n, 0.5, derive_seed(cfg.seed, {8, i, attempt}));
        if (mutation_applies(f, spec.kind)) {
            frame = share(std::move(f));
            break;
        }
    }
    const ModalOperator op = mutate(frame, spec.kind, spec.param);
    const SamplePool pool = make_pool(frame, cfg.samples, derive_seed(cfg.seed, {8, i}));
    const AxiomatizationComparison cmp = compare_axiomatizations(op, pool);
    t[7].check(cmp.systems_agree(), [&] {
        return Json{{"operator", op.describe()}, {"frame", frame_json(*frame)}, {"m1_to_m4", cmp.m1_to_m4},
                    {"m5", cmp.m5}, {"v1", cmp.v1}, {"v2", cmp.v2}};
    });
    ++t[7].info["mutants"];
    if (!cmp.standard()) {
        ++t[7].info["mutants_rejected_by_axioms"];
    }
    if (!cmp.axioms_agree()) {
        ++t[7].info["raw_m5_vs_v1v2_disagreements"];
    }
}

// All maps between every relation on `a` points and every relation on `b`
// points, for one source relation.
void morphisms_from(std::size_t a, std::size_t b, std::uint64_t src_code, const std::vector<FramePtr>& targets,
                    const std::vector<std::vector<Func>>& inputs, Tally& t)
{
    const FramePtr src = share(Frame::from_code(a, src_code));
    std::uint64_t maps = 1;
    for (std::size_t k = 0; k < a; ++k) {
        maps *= b;
    }
    std::vector<PointIndex> image(a);
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        for (std::uint64_t m = 0; m < maps; ++m) {
            std::uint64_t rest = m;
            for (std::size_t k = 0; k < a; ++k) {
                image[k] = rest % b;
                rest /= b;
            }
            const PointMap pm{src, targets[ti], image};
            const MorphismDuality d = dual_of_map(pm, inputs[ti]);
            t.check(d.consistent(), [&] {
                Json j{{"source", frame_json(*src)},
                       {"target", frame_json(*targets[ti])},
                       {"map", image},
                       {"bounded", d.bounded},
                       {"commutes", d.commutes}};
                if (d.witness) {
                    j["g"] = values_to_json(*d.witness);
                }
                return j;
            });
            if (d.bounded) {
                ++t.info["bounded_maps"];
            }
        }
    }
}

} // namespace

void SuiteConfig::set_exhaustive(std::size_t n)
{
    max_exhaustive = n;
    correspondence_exhaustive = std::min<std::size_t>(n, 3);
    morphism_exhaustive = std::min<std::size_t>(n, 3);
}

void SuiteConfig::set_random_sizes(std::vector<std::size_t> sizes)
{
    roundtrip_sizes = sizes;
    correspondence_sizes = sizes;
    identity_max_size = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

bool SuiteReport::passed() const
{
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed(); });
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags)
{
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t h = mix(base);
    for (std::uint64_t tag : tags) {
        h = mix(h ^ tag);
    }
    return h;
}

Frame suite_frame(std::size_t n, std::uint64_t index, std::uint64_t seed)
{
    static constexpr std::array<double, 5> densities{0.1, 0.25, 0.4, 0.6, 0.8};
    static constexpr std::array<FrameConstraints, 7> constraints{{
        {},
        {.serial = true},
        {.reflexive = true},
        {.transitive = true},
        {.symmetric = true},
        {.reflexive = true, .transitive = true},
        {.reflexive = true, .symmetric = true, .transitive = true},
    }};
    return random_frame(n, densities[index % densities.size()], seed, constraints[index % constraints.size()]);
}

SuiteReport run_suite(const SuiteConfig& cfg)
{
    if (cfg.max_exhaustive > 5 || cfg.correspondence_exhaustive > 5 || cfg.morphism_exhaustive > 3) {
        throw InputError("exhaustive bounds are limited to 5 points (3 for morphisms)");
    }
    for (std::size_t n : cfg.roundtrip_sizes) {
        if (n == 0 || n > 8) {
            throw InputError("random frame sizes must be between 1 and 8");
        }
    }
    for (std::size_t n : cfg.correspondence_sizes) {
        if (n == 0 || n > 8) {
            throw InputError("random frame sizes must be between 1 and 8");
        }
    }
    if (cfg.samples == 0) {
        throw InputError("samples must be at least 1");
    }

    Tallies t;

    // Exhaustive sweep: criteria 1-6 and 8.
    for (std::size_t n = 1; n <= std::max(cfg.max_exhaustive, cfg.correspondence_exhaustive); ++n) {
        if (n <= cfg.max_exhaustive) {
            run_chunked(relation_count(n), cfg.threads, t,
                        [&](std::uint64_t code, Tallies& out) { exhaustive_frame(cfg, n, code, out); });
        } else {
            run_chunked(relation_count(n), cfg.threads, t, [&](std::uint64_t code, Tallies& out) {
                const FramePtr frame = share(Frame::from_code(n, code));
                check_agreement(frame, make_pool(frame, cfg.samples, derive_seed(cfg.seed, {4, n, code})), out);
            });
        }
        if (n <= cfg.max_exhaustive) {
            // The boolean operations on indicators depend only on the point count.
            const DiagramVerdict dv = diagram_commutes(share(identity_frame(n)), true);
            t[5].check(dv.commutes(), [&] { return Json{{"check", "boolean operations on indicators"}, {"points", n}}; });
        }
    }

    // Random frames for the roundtrips.
    for (std::size_t n : cfg.roundtrip_sizes) {
        run_chunked(cfg.trials, cfg.threads, t, [&](std::uint64_t i, Tallies& out) {
            const FramePtr frame = share(suite_frame(n, i, derive_seed(cfg.seed, {2, n, i})));
            const ModalOperator op = ModalOperator::relation_induced(frame);
            const SamplePool pool = make_pool(frame, cfg.samples, derive_seed(cfg.seed, {3, n, i}));
            check_roundtrips(frame, op, pool, out);
            check_interdefinability(*frame, pool, out[4]);
        });
    }

    // Random frames for correspondence.
    for (std::size_t n : cfg.correspondence_sizes) {
        run_chunked(cfg.trials, cfg.threads, t, [&](std::uint64_t i, Tallies& out) {
            const FramePtr frame = share(suite_frame(n, i, derive_seed(cfg.seed, {5, n, i})));
            const SamplePool pool = make_pool(frame, cfg.samples, derive_seed(cfg.seed, {6, n, i}));
            check_agreement(frame, pool, out);
            check_interdefinability(*frame, pool, out[4]);
        });
    }

    // Set identities on random nonnegative functions.
    for (std::size_t n = 1; n <= cfg.identity_max_size; ++n) {
        run_chunked(cfg.trials, cfg.threads, t, [&](std::uint64_t i, Tallies& out) {
            const FramePtr frame = share(suite_frame(n, i, derive_seed(cfg.seed, {7, n, i})));
            Rng rng{derive_seed(cfg.seed, {7, n, i, 1})};
            Func f = random_nonnegative_func(frame, rng);
            // Plant zeros so the zero sets are not almost always empty.
            if (i % 2 == 0) {
                f = f * Func::indicator(frame, PointSet{rng() & PointSet::all(n).bits()});
            }
            const SetIdentities s = zero_set_identities(*frame, f);
            out[6].check(s.all(), [&] {
                return Json{{"frame", frame_json(*frame)},
                            {"f", values_to_json(f)},
                            {"preimage_of_zero_set", s.preimage_of_zero_set},
                            {"dead_free_is_zero_of_box0", s.dead_free_is_zero_of_box0},
                            {"preimage_of_cozero_set", s.preimage_of_cozero_set},
                            {"union_pointwise", s.union_pointwise}};
            });
        });
    }

    // Mutated operators.
    run_chunked(cfg.mutants, cfg.threads, t, [&](std::uint64_t i, Tallies& out) { mutant(cfg, i, out); });

    // Morphism duality, exhaustive over maps and relation pairs.
    for (std::size_t a = 1; a <= cfg.morphism_exhaustive; ++a) {
        for (std::size_t b = 1; b <= cfg.morphism_exhaustive; ++b) {
            std::vector<FramePtr> targets;
            std::vector<std::vector<Func>> inputs;
            for (std::uint64_t code = 0; code < relation_count(b); ++code) {
                targets.push_back(share(Frame::from_code(b, code)));
                inputs.push_back(make_pool(targets.back(), 4, derive_seed(cfg.seed, {9, b, code})).funcs);
            }
            run_chunked(relation_count(a), cfg.threads, t, [&](std::uint64_t code, Tallies& out) {
                morphisms_from(a, b, code, targets, inputs, out[8]);
            });
        }
    }

    SuiteReport report{cfg, {}};
    for (std::size_t k = 0; k < kCriteria; ++k) {
        CriterionResult c;
        c.id = static_cast<int>(k + 1);
        c.name = kNames[k];
        c.checked = t[k].checked;
        c.failures = t[k].failures;
        c.first_failure = std::move(t[k].first_failure);
        for (const auto& [key, value] : t[k].info) {
            c.info[key] = value;
        }
        report.criteria.push_back(std::move(c));
    }
    return report;
}

Json config_to_json(const SuiteConfig& c)
{
    return Json{{"max_exhaustive", c.max_exhaustive},
                {"correspondence_exhaustive", c.correspondence_exhaustive},
                {"morphism_exhaustive", c.morphism_exhaustive},
                {"roundtrip_sizes", c.roundtrip_sizes},
                {"correspondence_sizes", c.correspondence_sizes},
                {"identity_max_size", c.identity_max_size},
                {"trials", c.trials},
                {"samples", c.samples},
                {"mutants", c.mutants},
                {"seed", c.seed}};
}

Json suite_to_json(const SuiteReport& report)
{
    Json criteria = Json::array();
    for (const CriterionResult& c : report.criteria) {
        Json j{{"id", c.id},
               {"name", c.name},
               {"verdict", c.passed() ? "pass" : "fail"},
               {"checked", c.checked},
               {"failures", c.failures}};
        if (!c.info.empty()) {
            j["info"] = c.info;
        }
        if (!c.first_failure.is_null()) {
            j["first_failure"] = c.first_failure;
        }
        criteria.push_back(std::move(j));
    }
    return Json{{"config", config_to_json(report.config)}, {"criteria", std::move(criteria)}, {"pass", report.passed()}};
}

} // namespace mbal
