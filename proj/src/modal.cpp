#include "mbal/modal.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "mbal/errors.hpp"
#include "mbal/term.hpp"

namespace mbal {

Func box_r(const Frame& frame, const Func& f)
{
    require_on_frame(f, frame);
    Values out;
    out.reserve(frame.size());
    for (PointIndex x = 0; x < frame.size(); ++x) {
        std::uint64_t succ = frame.successors(x).bits();
        if (succ == 0) {
            out.emplace_back(1);
            continue;
        }
        const Rational* best = &f[static_cast<PointIndex>(std::countr_zero(succ))];
        for (succ &= succ - 1; succ != 0; succ &= succ - 1) {
            const Rational& v = f[static_cast<PointIndex>(std::countr_zero(succ))];
            if (v < *best) {
                best = &v;
            }
        }
        out.push_back(*best);
    }
    return Func{f.frame(), std::move(out)};
}

Func diamond_r(const Frame& frame, const Func& f)
{
    require_on_frame(f, frame);
    Values out;
    out.reserve(frame.size());
    for (PointIndex x = 0; x < frame.size(); ++x) {
        std::uint64_t succ = frame.successors(x).bits();
        if (succ == 0) {
            out.emplace_back(0);
            continue;
        }
        const Rational* best = &f[static_cast<PointIndex>(std::countr_zero(succ))];
        for (succ &= succ - 1; succ != 0; succ &= succ - 1) {
            const Rational& v = f[static_cast<PointIndex>(std::countr_zero(succ))];
            if (*best < v) {
                best = &v;
            }
        }
        out.push_back(*best);
    }
    return Func{f.frame(), std::move(out)};
}

// ---------------------------------------------------------------------------
// ModalOperator

ModalOperator::ModalOperator(FramePtr frame, Eval eval, Provenance provenance)
    : frame_{std::move(frame)}, eval_{std::move(eval)}, provenance_{std::move(provenance)}
{
    if (!frame_ || !eval_) {
        throw InputError("modal operator needs a frame and an evaluator");
    }
    if (const auto* rel = std::get_if<RelationInduced>(&provenance_)) {
        if (!rel->frame || *rel->frame != *frame_) {
            throw InputError("relation-induced operator must live on its own frame");
        }
        std::vector<Func> probes{Func::zero(frame_), Func::one(frame_)};
        for (PointIndex y = 0; y < frame_->size(); ++y) {
            probes.push_back(1 - Func::indicator(frame_, PointSet::single(y)));
        }
        for (const auto& p : probes) {
            if ((*this)(p) != box_r(*frame_, p)) {
                throw InvariantViolation("relation-induced operator disagrees with box_r on " + to_string(p));
            }
        }
    }
}

ModalOperator ModalOperator::relation_induced(FramePtr frame)
{
    const Frame* raw = frame.get();
    // The evaluator captures the frame through the operator's own FramePtr lifetime.
    Eval eval = [keep = frame, raw](const Func& f) { return box_r(*raw, f); };
    return ModalOperator{frame, std::move(eval), RelationInduced{frame}};
}

ModalOperator ModalOperator::external(FramePtr frame, std::string label, Eval eval)
{
    return ModalOperator{std::move(frame), std::move(eval), External{std::move(label)}};
}

std::string ModalOperator::describe() const
{
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RelationInduced>) {
                return "relation-induced";
            } else if constexpr (std::is_same_v<T, TermDefined>) {
                return "term-defined: " + p.variable + " |-> " + print(*p.term);
            } else {
                return "external: " + p.label;
            }
        },
        provenance_);
}

Func ModalOperator::operator()(const Func& f) const
{
    require_on_frame(f, *frame_);
    Func out = eval_(f);
    if (out.size() != frame_->size()) {
        throw InvariantViolation("operator returned a function of the wrong size");
    }
    return out;
}

Func ModalOperator::diamond(const Func& f) const { return 1 - box(1 - f); }

// ---------------------------------------------------------------------------
// Law catalog

namespace {

struct LawName {
    Law law;
    std::string_view id;
};

constexpr std::array kLawNames{
    LawName{Law::M1, "M1"},   LawName{Law::M2, "M2"},   LawName{Law::M3, "M3"}, LawName{Law::M4, "M4"},
    LawName{Law::M5, "M5"},   LawName{Law::V1, "V1"},   LawName{Law::V2, "V2"}, LawName{Law::L1, "L1"},
    LawName{Law::L2, "L2"},   LawName{Law::L3, "L3"},   LawName{Law::L4, "L4"}, LawName{Law::L5, "L5"},
    LawName{Law::L6, "L6"},   LawName{Law::L7, "L7"},   LawName{Law::D1, "D1"}, LawName{Law::D2, "D2"},
    LawName{Law::D3, "D3"},   LawName{Law::D4, "D4"},   LawName{Law::D5, "D5"}, LawName{Law::M2s, "M2'"},
    LawName{Law::M4s, "M4'"}, LawName{Law::M5s, "M5'"}, LawName{Law::DS, "DS"},
};

constexpr std::array kAxiomLaws{Law::M1, Law::M2, Law::M3, Law::M4, Law::M5, Law::V1, Law::V2};
constexpr std::array kDerivedLaws{Law::L1, Law::L2, Law::L3, Law::L4, Law::L5, Law::L6,
                                  Law::L7, Law::D1, Law::D2, Law::D3, Law::D4, Law::D5};
constexpr std::array kSerialLaws{Law::M2s, Law::M4s, Law::M5s, Law::DS};

bool needs_nonnegative_scalar(Law law) { return law == Law::M5 || law == Law::V1 || law == Law::D5 || law == Law::M5s; }

} // namespace

std::string_view law_id(Law law)
{
    for (const auto& n : kLawNames) {
        if (n.law == law) {
            return n.id;
        }
    }
    return "?";
}

Law parse_law(std::string_view id)
{
    for (const auto& n : kLawNames) {
        if (n.id == id) {
            return n.law;
        }
    }
    throw InputError("unknown law id '" + std::string(id) + "'");
}

std::span<const Law> axiom_laws() { return kAxiomLaws; }
std::span<const Law> derived_laws() { return kDerivedLaws; }
std::span<const Law> serial_laws() { return kSerialLaws; }

bool is_axiom_law(Law law) { return std::find(kAxiomLaws.begin(), kAxiomLaws.end(), law) != kAxiomLaws.end(); }
bool is_derived_law(Law law) { return std::find(kDerivedLaws.begin(), kDerivedLaws.end(), law) != kDerivedLaws.end(); }

LawEvaluation evaluate_law(const ModalOperator& op, Law law, const LawInstance& input)
{
    const FramePtr& fr = op.frame();
    const Func& a = input.a;
    const Func& b = input.b;
    const Rational& lam = input.lambda;
    require_on_frame(a, *fr);
    require_on_frame(b, *fr);

    auto box = [&](const Func& f) { return op.box(f); };
    auto dia = [&](const Func& f) { return op.diamond(f); };
    const Func zero = Func::zero(fr);
    const Func one = Func::one(fr);
    const Func lam_const = Func::constant(fr, lam);

    LawEvaluation ev{law, input, true, Comparison::equal, zero, zero, true};
    auto set = [&](Func lhs, Func rhs) {
        ev.lhs = std::move(lhs);
        ev.rhs = std::move(rhs);
    };

    switch (law) {
    case Law::M1:
        set(box(meet(a, b)), meet(box(a), box(b)));
        break;
    case Law::M2:
        set(box(lam_const), lam_const + (1 - lam) * box(zero));
        break;
    case Law::M3:
        set(box(pos_part(a)), pos_part(box(a)));
        break;
    case Law::M4:
        set(box(a + lam), box(a) + box(lam_const) - box(zero));
        break;
    case Law::M5:
        ev.premise = lam.sign() >= 0;
        set(box(lam * a), box(lam_const) * box(a));
        break;
    case Law::V1:
        ev.premise = lam.sign() >= 0;
        set(box(lam * a), lam * box(a) + (1 - lam) * box(zero));
        break;
    case Law::V2:
        set(meet(box(zero), pos_part(1 - box(a))), zero);
        break;
    case Law::L1:
        ev.premise = leq(a, b);
        ev.comparison = Comparison::less_equal;
        set(box(a), box(b));
        break;
    case Law::L2:
        set(box(one), one);
        break;
    case Law::L3:
        ev.premise = is_nonnegative(a);
        ev.comparison = Comparison::less_equal;
        set(zero, box(a));
        break;
    case Law::L4: {
        Func b0 = box(zero);
        Func sq = b0 * b0;
        if (sq != b0) {
            // □0 itself is not idempotent; report that instance.
            set(std::move(sq), b0);
        } else {
            set(b0 * box(a), b0);
        }
        break;
    }
    case Law::L5:
        set(box(a + lam), box(a) + lam * (1 - box(zero)));
        break;
    case Law::L6:
        set(dia(a), -box(-a) * (1 - box(zero)));
        break;
    case Law::L7:
        set(dia(a) * box(zero), zero);
        break;
    case Law::D1:
        set(dia(join(a, b)), join(dia(a), dia(b)));
        break;
    case Law::D2:
        set(dia(lam_const), lam * dia(one));
        break;
    case Law::D3:
        set(dia(meet(a, one)), meet(dia(a), one));
        break;
    case Law::D4:
        set(dia(a + lam), dia(a) + dia(lam_const));
        break;
    case Law::D5:
        ev.premise = lam.sign() >= 0;
        set(dia(lam * a), dia(lam_const) * dia(a));
        break;
    case Law::M2s:
        set(box(lam_const), lam_const);
        break;
    case Law::M4s:
        set(box(a + lam), box(a) + lam);
        break;
    case Law::M5s:
        ev.premise = lam.sign() >= 0;
        set(box(lam * a), lam * box(a));
        break;
    case Law::DS:
        set(dia(a), -box(-a));
        break;
    }

    if (!ev.premise) {
        ev.holds = true;
    } else if (ev.comparison == Comparison::equal) {
        ev.holds = ev.lhs == ev.rhs;
    } else {
        ev.holds = leq(ev.lhs, ev.rhs);
    }
    return ev;
}

// ---------------------------------------------------------------------------
// Sampling

Rational random_scalar(Rng& rng)
{
    auto den = static_cast<std::int64_t>(1 + rng() % 16);
    auto span = static_cast<std::uint64_t>(20 * den + 1);
    auto num = static_cast<std::int64_t>(rng() % span) - 10 * den;
    return Rational{num, den};
}

Func random_func(const FramePtr& frame, Rng& rng)
{
    Values v;
    v.reserve(frame->size());
    for (std::size_t i = 0; i < frame->size(); ++i) {
        v.push_back(random_scalar(rng));
    }
    return Func{frame, std::move(v)};
}

Func random_nonnegative_func(const FramePtr& frame, Rng& rng)
{
    Values v;
    v.reserve(frame->size());
    for (std::size_t i = 0; i < frame->size(); ++i) {
        auto den = static_cast<std::int64_t>(1 + rng() % 16);
        auto num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(10 * den + 1));
        v.emplace_back(num, den);
    }
    return Func{frame, std::move(v)};
}

std::span<const Rational> scalar_battery()
{
    static const std::array<Rational, 9> kScalars{Rational{0},    Rational{1},  Rational{-1},
                                                  Rational{2},    Rational{-2}, Rational{1, 2},
                                                  Rational{-1, 2}, Rational{3}, Rational{-7, 3}};
    return kScalars;
}

std::vector<Func> corner_battery(const FramePtr& frame)
{
    std::vector<Func> out;
    auto add = [&](Func f) {
        if (std::find(out.begin(), out.end(), f) == out.end()) {
            out.push_back(std::move(f));
        }
    };
    for (const Rational& c : {Rational{0}, Rational{1}, Rational{-1}, Rational{2}, Rational{-2}, Rational{1, 2},
                              Rational{-1, 2}}) {
        add(Func::constant(frame, c));
    }
    const std::size_t n = frame->size();
    // All indicators only while that stays small; larger frames get singletons
    // and their complements.
    if (n <= 10) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            add(Func::indicator(frame, PointSet{mask}));
        }
    } else {
        for (PointIndex y = 0; y < n; ++y) {
            add(Func::indicator(frame, PointSet::single(y)));
        }
    }
    for (PointIndex y = 0; y < n; ++y) {
        Func co = 1 - Func::indicator(frame, PointSet::single(y));
        add(co);
        add(-co);
    }
    return out;
}

SamplePool make_pool(const FramePtr& frame, std::size_t samples, std::uint64_t seed)
{
    SamplePool pool;
    pool.funcs = corner_battery(frame);
    const std::size_t nb = pool.funcs.size();
    const auto scalars = scalar_battery();
    for (std::size_t i = 0; i < nb; ++i) {
        pool.partners.push_back(pool.funcs[(i + 1) % nb]);
        pool.scalars.push_back(scalars[i % scalars.size()]);
    }
    Rng rng{seed};
    for (std::size_t i = 0; i < samples; ++i) {
        pool.funcs.push_back(random_func(frame, rng));
        pool.partners.push_back(random_func(frame, rng));
        pool.scalars.push_back(random_scalar(rng));
    }
    return pool;
}

namespace {

LawInstance instance_at(Law law, const SamplePool& pool, std::size_t i)
{
    LawInstance inst{pool.funcs[i], pool.partners[i], pool.scalars[i]};
    if (needs_nonnegative_scalar(law)) {
        inst.lambda = abs(inst.lambda);
    }
    if (law == Law::L1) {
        inst.b = inst.a + abs(inst.b);
    }
    if (law == Law::L3) {
        inst.a = pos_part(inst.a);
    }
    return inst;
}

} // namespace

std::vector<LawInstance> law_instances(Law law, const SamplePool& pool)
{
    std::vector<LawInstance> out;
    out.reserve(pool.funcs.size());
    for (std::size_t i = 0; i < pool.funcs.size(); ++i) {
        out.push_back(instance_at(law, pool, i));
    }
    return out;
}

Verdict check_law(const ModalOperator& op, Law law, const SamplePool& pool)
{
    Verdict v{law, 0, std::nullopt};
    for (std::size_t i = 0; i < pool.funcs.size(); ++i) {
        LawEvaluation ev = evaluate_law(op, law, instance_at(law, pool, i));
        ++v.checked;
        if (!ev.holds) {
            v.violation = std::move(ev);
            break;
        }
    }
    return v;
}

Verdict check_axiom(const ModalOperator& op, Law law, std::size_t samples, std::uint64_t seed)
{
    if (!is_axiom_law(law)) {
        throw InputError("'" + std::string(law_id(law)) + "' is not an axiom id (M1-M5, V1, V2)");
    }
    if (samples == 0) {
        throw InputError("at least one sample is required");
    }
    return check_law(op, law, make_pool(op.frame(), samples, seed));
}

Verdict check_derived(const ModalOperator& op, Law law, std::size_t samples, std::uint64_t seed)
{
    if (!is_derived_law(law)) {
        throw InputError("'" + std::string(law_id(law)) + "' is not a derived-law id (L1-L7, D1-D5)");
    }
    if (samples == 0) {
        throw InputError("at least one sample is required");
    }
    return check_law(op, law, make_pool(op.frame(), samples, seed));
}

AxiomatizationComparison compare_axiomatizations(const ModalOperator& op, const SamplePool& pool)
{
    AxiomatizationComparison c;
    c.m1_to_m4 = true;
    for (Law law : {Law::M1, Law::M2, Law::M3, Law::M4}) {
        if (!check_law(op, law, pool).holds_on_samples()) {
            c.m1_to_m4 = false;
            break;
        }
    }
    c.m5 = check_law(op, Law::M5, pool).holds_on_samples();
    c.v1 = check_law(op, Law::V1, pool).holds_on_samples();
    c.v2 = check_law(op, Law::V2, pool).holds_on_samples();
    return c;
}

bool satisfies_axioms_on(const ModalOperator& op, const SamplePool& pool)
{
    for (Law law : {Law::M1, Law::M2, Law::M3, Law::M4, Law::M5}) {
        if (!check_law(op, law, pool).holds_on_samples()) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Mutations

std::string_view mutation_id(Mutation m)
{
    switch (m) {
    case Mutation::dead_end_value:
        return "dead_end_value";
    case Mutation::shift_live:
        return "shift_live";
    case Mutation::scale_live:
        return "scale_live";
    case Mutation::square_live:
        return "square_live";
    case Mutation::max_at_first:
        return "max_at_first";
    }
    return "?";
}

ModalOperator mutate(const FramePtr& frame, Mutation kind, const Rational& param)
{
    const Frame* raw = frame.get();
    const PointSet live = frame->dead_free();
    std::string label = std::string(mutation_id(kind)) + "(" + param.str() + ")";
    ModalOperator::Eval eval = [keep = frame, raw, live, kind, param](const Func& f) {
        Func boxed = box_r(*raw, f);
        Func dia = diamond_r(*raw, f);
        Values v = boxed.values();
        bool first_done = false;
        for (PointIndex x = 0; x < v.size(); ++x) {
            const bool is_live = live.contains(x);
            switch (kind) {
            case Mutation::dead_end_value:
                if (!is_live) {
                    v[x] = param;
                }
                break;
            case Mutation::shift_live:
                if (is_live) {
                    v[x] += param;
                }
                break;
            case Mutation::scale_live:
                if (is_live) {
                    v[x] *= param;
                }
                break;
            case Mutation::square_live:
                if (is_live) {
                    v[x] = v[x] * v[x];
                }
                break;
            case Mutation::max_at_first:
                if (is_live && !first_done) {
                    v[x] = dia[x];
                    first_done = true;
                }
                break;
            }
        }
        return Func{boxed.frame(), std::move(v)};
    };
    return ModalOperator::external(frame, std::move(label), std::move(eval));
}

} // namespace mbal
