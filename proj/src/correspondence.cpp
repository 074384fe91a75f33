#include "mbal/correspondence.hpp"

#include "mbal/errors.hpp"

namespace mbal {

namespace {

bool frame_has(const FrameProperties& p, Scheme s)
{
    switch (s) {
    case Scheme::D:
        return p.serial;
    case Scheme::T:
        return p.reflexive;
    case Scheme::K4:
        return p.transitive;
    case Scheme::B:
        return p.symmetric;
    }
    return false;
}

std::size_t scheme_index(Scheme s) { return static_cast<std::size_t>(s); }

// Pool functions followed by their complements 1 - f.
std::vector<Func> scheme_inputs(const SamplePool& pool)
{
    std::vector<Func> out;
    out.reserve(2 * pool.funcs.size());
    for (const Func& f : pool.funcs) {
        out.push_back(f);
    }
    for (const Func& f : pool.funcs) {
        out.push_back(1 - f);
    }
    return out;
}

} // namespace

std::string_view scheme_id(Scheme s)
{
    switch (s) {
    case Scheme::D:
        return "D";
    case Scheme::T:
        return "T";
    case Scheme::K4:
        return "K4";
    case Scheme::B:
        return "B";
    }
    return "?";
}

Scheme parse_scheme(std::string_view id)
{
    for (Scheme s : kSchemes) {
        if (scheme_id(s) == id) {
            return s;
        }
    }
    throw InputError("unknown scheme id '" + std::string{id} + "'");
}

bool ClassSet::has(Scheme s) const
{
    switch (s) {
    case Scheme::D:
        return D;
    case Scheme::T:
        return T;
    case Scheme::K4:
        return K4;
    case Scheme::B:
        return B;
    }
    return false;
}

std::vector<std::string> ClassSet::ids() const
{
    std::vector<std::string> out;
    const std::pair<bool, const char*> all[] = {{D, "D"}, {T, "T"}, {K4, "K4"}, {B, "B"}, {S4, "S4"}, {S5, "S5"}};
    for (const auto& [member, id] : all) {
        if (member) {
            out.emplace_back(id);
        }
    }
    return out;
}

ClassSet make_class_set(bool d, bool t, bool k4, bool b)
{
    ClassSet c;
    c.D = d;
    c.T = t;
    c.K4 = k4;
    c.B = b;
    c.S4 = t && k4;
    c.S5 = c.S4 && b;
    return c;
}

ClassSet classify_frame(const Frame& frame)
{
    const FrameProperties p = frame_properties(frame);
    return make_class_set(p.serial, p.reflexive, p.transitive, p.symmetric);
}

std::string_view form_id(SchemeForm f) { return f == SchemeForm::box ? "box" : "diamond"; }

SchemeEvaluation evaluate_scheme(const ModalOperator& op, Scheme s, SchemeForm form, const Func& a)
{
    const FramePtr& fr = op.frame();
    require_on_frame(a, *fr);
    SchemeEvaluation ev{s, form, a, a, a, true};
    bool equality = false;

    if (form == SchemeForm::box) {
        switch (s) {
        case Scheme::D:
            ev.lhs = op(Func::zero(fr));
            ev.rhs = Func::zero(fr);
            equality = true;
            break;
        case Scheme::T:
            ev.lhs = op(a);
            ev.rhs = a;
            break;
        case Scheme::K4: {
            const Func b0 = op(Func::zero(fr));
            ev.lhs = op(a);
            ev.rhs = op(ev.lhs * (1 - b0) + a * b0);
            break;
        }
        case Scheme::B: {
            const Func live = 1 - op(Func::zero(fr));
            ev.lhs = op.diamond(op(a)) * live;
            ev.rhs = a * live;
            break;
        }
        }
    } else {
        switch (s) {
        case Scheme::D:
            ev.lhs = op.diamond(Func::one(fr));
            ev.rhs = Func::one(fr);
            equality = true;
            break;
        case Scheme::T:
            ev.lhs = a;
            ev.rhs = op.diamond(a);
            break;
        case Scheme::K4: {
            const Func d1 = op.diamond(Func::one(fr));
            ev.rhs = op.diamond(a);
            ev.lhs = op.diamond(ev.rhs + a * (1 - d1));
            break;
        }
        case Scheme::B:
            ev.lhs = op.diamond(op(a));
            ev.rhs = a * op.diamond(Func::one(fr));
            break;
        }
    }
    ev.holds = equality ? ev.lhs == ev.rhs : leq(ev.lhs, ev.rhs);
    return ev;
}

SchemeVerdict check_scheme(const ModalOperator& op, Scheme s, const SamplePool& pool)
{
    SchemeVerdict v{s, 0, std::nullopt, std::nullopt};
    if (s == Scheme::D) {
        const Func zero = Func::zero(op.frame());
        v.checked = 1;
        if (auto ev = evaluate_scheme(op, s, SchemeForm::box, zero); !ev.holds) {
            v.box_violation = std::move(ev);
        }
        if (auto ev = evaluate_scheme(op, s, SchemeForm::diamond, zero); !ev.holds) {
            v.diamond_violation = std::move(ev);
        }
        return v;
    }
    for (const Func& a : scheme_inputs(pool)) {
        ++v.checked;
        if (!v.box_violation) {
            if (auto ev = evaluate_scheme(op, s, SchemeForm::box, a); !ev.holds) {
                v.box_violation = std::move(ev);
            }
        }
        if (!v.diamond_violation) {
            if (auto ev = evaluate_scheme(op, s, SchemeForm::diamond, a); !ev.holds) {
                v.diamond_violation = std::move(ev);
            }
        }
    }
    return v;
}

bool AlgebraClassification::forms_agree() const
{
    for (const auto& v : verdicts) {
        if (!v.forms_agree()) {
            return false;
        }
    }
    return true;
}

AlgebraClassification classify_algebra(const ModalOperator& op, const SamplePool& pool)
{
    AlgebraClassification c{{check_scheme(op, Scheme::D, pool), check_scheme(op, Scheme::T, pool),
                             check_scheme(op, Scheme::K4, pool), check_scheme(op, Scheme::B, pool)},
                            {}};
    c.classes = make_class_set(c.verdicts[0].holds_on_samples(), c.verdicts[1].holds_on_samples(),
                               c.verdicts[2].holds_on_samples(), c.verdicts[3].holds_on_samples());
    return c;
}

AlgebraClassification classify_algebra(const ModalOperator& op, std::size_t samples, std::uint64_t seed)
{
    return classify_algebra(op, make_pool(op.frame(), samples, seed));
}

std::string_view stage_id(WitnessStage s)
{
    switch (s) {
    case WitnessStage::complement_indicator:
        return "complement_indicator";
    case WitnessStage::scaled_indicator:
        return "scaled_indicator";
    case WitnessStage::grid:
        return "grid";
    }
    return "?";
}

std::optional<Witness> search_witness(const FramePtr& frame, Scheme s)
{
    const std::size_t n = frame->size();
    if (n > 8) {
        throw InputError("witness search is limited to 8 points");
    }
    const ModalOperator op = ModalOperator::relation_induced(frame);
    auto attempt = [&](const Func& a, WitnessStage stage) -> std::optional<Witness> {
        SchemeEvaluation ev = evaluate_scheme(op, s, SchemeForm::box, a);
        if (ev.holds) {
            return std::nullopt;
        }
        return Witness{stage, std::move(ev)};
    };

    for (PointIndex y = 0; y < n; ++y) {
        if (auto w = attempt(1 - Func::indicator(frame, PointSet::single(y)), WitnessStage::complement_indicator)) {
            return w;
        }
    }
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::size_t lambda = 1; lambda <= n; ++lambda) {
        for (std::uint64_t u = 0; u < subsets; ++u) {
            const Func a = Rational{static_cast<std::int64_t>(lambda)} * Func::indicator(frame, PointSet{u});
            if (auto w = attempt(a, WitnessStage::scaled_indicator)) {
                return w;
            }
        }
    }
    std::vector<std::int64_t> digits(n, 0);
    for (;;) {
        Values v;
        for (auto d : digits) {
            v.emplace_back(d);
        }
        if (auto w = attempt(Func{frame, std::move(v)}, WitnessStage::grid)) {
            return w;
        }
        std::size_t k = 0;
        for (; k < n; ++k) {
            if (++digits[k] <= static_cast<std::int64_t>(n)) {
                break;
            }
            digits[k] = 0;
        }
        if (k == n) {
            break;
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_witness(const FramePtr& frame, Scheme s)
{
    if (frame_has(frame_properties(*frame), s)) {
        return std::nullopt;
    }
    return search_witness(frame, s);
}

bool AgreementResult::agree() const
{
    for (const auto& s : schemes) {
        if (!s.agree()) {
            return false;
        }
    }
    return true;
}

AgreementResult agreement(const FramePtr& frame, const SamplePool& pool)
{
    const ModalOperator op = ModalOperator::relation_induced(frame);
    const FrameProperties props = frame_properties(*frame);
    AgreementResult r{classify_frame(*frame), {}};
    for (Scheme s : kSchemes) {
        SchemeAgreement& a = r.schemes[scheme_index(s)];
        a.scheme = s;
        a.frame_has = frame_has(props, s);
        a.algebra = check_scheme(op, s, pool);
        if (!a.frame_has) {
            a.witness = search_witness(frame, s);
        }
    }
    return r;
}

AgreementResult agreement(const FramePtr& frame, std::size_t samples, std::uint64_t seed)
{
    return agreement(frame, make_pool(frame, samples, seed));
}

SerialSpecialization serial_specialization(const ModalOperator& op, const SamplePool& pool)
{
    SerialSpecialization r;
    const FramePtr& fr = op.frame();
    r.applicable = op(Func::zero(fr)) == Func::zero(fr);
    if (!r.applicable) {
        return r;
    }
    for (const Func& a : scheme_inputs(pool)) {
        ++r.checked;
        const Func boxed = op(a);
        const bool k4_full = evaluate_scheme(op, Scheme::K4, SchemeForm::box, a).holds;
        const bool k4_simple = leq(boxed, op(boxed));
        const bool b_full = evaluate_scheme(op, Scheme::B, SchemeForm::box, a).holds;
        const bool b_simple = leq(op.diamond(boxed), a);
        if (k4_full != k4_simple) {
            r.k4_agree = false;
        }
        if (b_full != b_simple) {
            r.b_agree = false;
        }
        if (!r.agree() && !r.disagreement) {
            r.disagreement = a;
        }
    }
    return r;
}

} // namespace mbal
