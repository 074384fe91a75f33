#include "mbal/duality.hpp"

#include "mbal/errors.hpp"

namespace mbal {

std::vector<MaxIdeal> yosida_points(const Frame& frame)
{
    std::vector<MaxIdeal> out;
    out.reserve(frame.size());
    for (PointIndex i = 0; i < frame.size(); ++i) {
        out.push_back({i, frame.name(i)});
    }
    return out;
}

Frame reconstruct_relation(const ModalOperator& op)
{
    const FramePtr& fr = op.frame();
    const std::size_t n = fr->size();
    const Func box0 = op(Func::zero(fr));
    const PointSet live = zero_set(box0);
    std::vector<std::uint64_t> rows(n, 0);
    for (PointIndex y = 0; y < n; ++y) {
        const Func witness = op(1 - Func::indicator(fr, PointSet::single(y)));
        const PointSet reach = live & zero_set(witness);
        for (PointIndex x : reach.indices()) {
            rows[x] |= std::uint64_t{1} << y;
        }
    }
    return Frame::from_rows(fr->points(), std::move(rows));
}

std::vector<std::pair<PointIndex, PointIndex>> audit_reconstruction(const ModalOperator& op)
{
    const FramePtr& fr = op.frame();
    const std::size_t n = fr->size();
    const Frame fast = reconstruct_relation(op);
    std::vector<std::pair<PointIndex, PointIndex>> disagreements;

    for (PointIndex y = 0; y < n; ++y) {
        // Points where □f vanishes for every grid member f with f(y) = 0.
        PointSet vanish_all = fr->universe();
        std::vector<int> digits(n, 0);
        for (;;) {
            Values v;
            for (PointIndex i = 0; i < n; ++i) {
                v.emplace_back(digits[i]);
            }
            vanish_all = vanish_all & zero_set(op(Func{fr, std::move(v)}));

            // Odometer over {0,1,2}^(points except y).
            std::size_t k = 0;
            for (; k < n; ++k) {
                if (k == y) {
                    continue;
                }
                if (++digits[k] < 3) {
                    break;
                }
                digits[k] = 0;
            }
            if (k == n) {
                break;
            }
        }
        for (PointIndex x = 0; x < n; ++x) {
            if (vanish_all.contains(x) != fast.related(x, y)) {
                disagreements.emplace_back(x, y);
            }
        }
    }
    return disagreements;
}

Frame reconstruct_relation_audited(const ModalOperator& op)
{
    auto bad = audit_reconstruction(op);
    if (!bad.empty()) {
        const auto& fr = *op.frame();
        throw InvariantViolation("two-witness reconstruction disagrees with the full definition at (" +
                                 fr.name(bad.front().first) + ", " + fr.name(bad.front().second) + ")");
    }
    return reconstruct_relation(op);
}

FrameRoundtrip roundtrip_frame(const FramePtr& frame)
{
    const Frame rebuilt = reconstruct_relation(ModalOperator::relation_induced(frame));
    FrameRoundtrip r;
    for (PointIndex x = 0; x < frame->size(); ++x) {
        for (PointIndex y = 0; y < frame->size(); ++y) {
            const bool before = frame->related(x, y);
            const bool after = rebuilt.related(x, y);
            if (before && !after) {
                r.missing.emplace_back(x, y);
            } else if (!before && after) {
                r.extra.emplace_back(x, y);
            }
        }
    }
    return r;
}

std::string_view status_label(OperatorRoundtrip::Status s)
{
    switch (s) {
    case OperatorRoundtrip::Status::equal:
        return "equal";
    case OperatorRoundtrip::Status::mismatch:
        return "mismatch";
    case OperatorRoundtrip::Status::not_applicable:
        return "not_applicable";
    }
    return "?";
}

OperatorRoundtrip roundtrip_operator(const ModalOperator& op, const SamplePool& pool)
{
    OperatorRoundtrip r;
    for (Law law : {Law::M1, Law::M2, Law::M3, Law::M4, Law::M5}) {
        Verdict v = check_law(op, law, pool);
        if (!v.holds_on_samples()) {
            r.status = OperatorRoundtrip::Status::not_applicable;
            r.failed_axiom = std::move(v);
            return r;
        }
    }
    r.reconstructed = reconstruct_relation(op);
    const FramePtr rebuilt_frame = share(*r.reconstructed);
    for (const Func& f : pool.funcs) {
        Func original = op(f);
        Func rebuilt = box_r(*rebuilt_frame, Func{rebuilt_frame, f.values()});
        ++r.compared;
        if (original != rebuilt) {
            r.status = OperatorRoundtrip::Status::mismatch;
            r.witness = f;
            r.original_value = std::move(original);
            r.reconstructed_value = std::move(rebuilt);
            return r;
        }
    }
    return r;
}

OperatorRoundtrip roundtrip_operator(const ModalOperator& op, std::size_t samples, std::uint64_t seed)
{
    return roundtrip_operator(op, make_pool(op.frame(), samples, seed));
}

SetIdentities zero_set_identities(const Frame& frame, const Func& f)
{
    require_on_frame(f, frame);
    if (!is_nonnegative(f)) {
        throw InputError("zero-set identities need a nonnegative function, got " + to_string(f));
    }
    const Func boxed = box_r(frame, f);
    const Func box0 = box_r(frame, Func::zero(f.frame()));
    const Func dia = diamond_r(frame, f);
    const PointSet zf = zero_set(f);

    SetIdentities s;
    s.preimage_of_zero_set = preimage(frame, zf) == zero_set(boxed);
    s.dead_free_is_zero_of_box0 = frame.dead_free() == zero_set(box0);
    s.preimage_of_cozero_set = preimage(frame, cozero_set(f)) == cozero_set(dia);
    s.union_pointwise = true;
    for (PointIndex x : frame.dead_free().indices()) {
        const bool vanishes = boxed[x].is_zero();
        const bool has_zero_successor = !(frame.successors(x) & zf).empty();
        if (vanishes != has_zero_successor) {
            s.union_pointwise = false;
        }
    }
    return s;
}

bool diamond_kernel_lemma(const ModalOperator& op, const Frame& frame, const Func& f)
{
    const Func dia = op.diamond(f);
    const Func fp = pos_part(f);
    for (PointIndex x = 0; x < frame.size(); ++x) {
        if (!dia[x].is_zero()) {
            continue;
        }
        for (PointIndex y : frame.successors(x).indices()) {
            if (!fp[y].is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool dead_end_coset_lemma(const ModalOperator& op, const Func& f)
{
    const Func box0 = op(Func::zero(op.frame()));
    const Func one_minus = 1 - op(f);
    for (PointIndex x = 0; x < box0.size(); ++x) {
        if (!box0[x].is_zero() && !one_minus[x].is_zero()) {
            return false;
        }
    }
    return true;
}

Func pullback(const PointMap& m, const Func& g)
{
    require_on_frame(g, *m.target());
    Values v;
    v.reserve(m.source()->size());
    for (PointIndex x = 0; x < m.source()->size(); ++x) {
        v.push_back(g[m(x)]);
    }
    return Func{m.source(), std::move(v)};
}

PointMap recover_point_map(const FramePtr& source, const FramePtr& target, const Pullback& hom)
{
    std::vector<Func> images;
    images.reserve(target->size());
    for (PointIndex y = 0; y < target->size(); ++y) {
        Func img = hom(Func::indicator(target, PointSet::single(y)));
        require_on_frame(img, *source);
        images.push_back(std::move(img));
    }
    std::vector<PointIndex> map(source->size());
    for (PointIndex x = 0; x < source->size(); ++x) {
        std::optional<PointIndex> found;
        for (PointIndex y = 0; y < target->size(); ++y) {
            const Rational& v = images[y][x];
            if (v == Rational{1}) {
                if (found) {
                    throw InvariantViolation("kernel at " + source->name(x) + " pulls back to several points");
                }
                found = y;
            } else if (!v.is_zero()) {
                throw InvariantViolation("algebra map does not send idempotents to idempotents");
            }
        }
        if (!found) {
            throw InvariantViolation("kernel at " + source->name(x) + " pulls back to no point");
        }
        map[x] = *found;
    }
    return PointMap{source, target, std::move(map)};
}

MorphismDuality dual_of_map(const PointMap& m, std::span<const Func> inputs)
{
    const Frame& src = *m.source();
    const Frame& tgt = *m.target();
    MorphismDuality d;
    d.bounded = is_bounded_morphism(m);
    d.commutes = true;
    for (const Func& g : inputs) {
        Func lhs = pullback(m, box_r(tgt, g));
        Func rhs = box_r(src, pullback(m, g));
        if (lhs != rhs) {
            d.commutes = false;
            d.witness = g;
            d.lhs = std::move(lhs);
            d.rhs = std::move(rhs);
            break;
        }
    }
    if (d.commutes) {
        PointMap recovered = recover_point_map(m.source(), m.target(), [&](const Func& g) { return pullback(m, g); });
        if (recovered.images() != m.images()) {
            throw InvariantViolation("point map recovered from kernels differs from the original");
        }
        d.recovered_bounded = is_bounded_morphism(recovered);
    }
    return d;
}

MorphismDuality dual_of_map(const PointMap& m, std::size_t samples, std::uint64_t seed)
{
    SamplePool pool = make_pool(m.target(), samples, seed);
    return dual_of_map(m, pool.funcs);
}

} // namespace mbal
