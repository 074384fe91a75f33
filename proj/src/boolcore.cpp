#include "mbal/boolcore.hpp"

#include "mbal/errors.hpp"
#include "mbal/func.hpp"
#include "mbal/modal.hpp"

namespace mbal {

ModalAlgebraFin::ModalAlgebraFin(std::size_t points, std::vector<PointSet> table) : n_{points}, table_{std::move(table)}
{
    if (n_ > kMaxAlgebraPoints) {
        throw InputError("modal algebra tables are limited to " + std::to_string(kMaxAlgebraPoints) + " points");
    }
    if (table_.size() != (std::size_t{1} << n_)) {
        throw InputError("box table needs one entry per subset");
    }
    for (PointSet s : table_) {
        if (!s.subset_of(top())) {
            throw InputError("box table entry outside the carrier");
        }
    }
}

ModalAlgebraFin idempotent_algebra(const FramePtr& frame)
{
    const std::size_t n = frame->size();
    if (n > kMaxAlgebraPoints) {
        throw InputError("modal algebra tables are limited to " + std::to_string(kMaxAlgebraPoints) + " points");
    }
    std::vector<PointSet> table(std::size_t{1} << n);
    for (std::uint64_t u = 0; u < table.size(); ++u) {
        const Func boxed = box_r(*frame, Func::indicator(frame, PointSet{u}));
        if (!is_idempotent(boxed)) {
            throw InvariantViolation("box of an idempotent is not idempotent: " + to_string(boxed));
        }
        table[u] = cozero_set(boxed);
    }
    return ModalAlgebraFin{n, std::move(table)};
}

PointSet classical_box(const Frame& frame, PointSet u)
{
    if (!u.subset_of(frame.universe())) {
        throw InputError("subset has points outside the frame");
    }
    const std::size_t n = frame.size();
    return preimage(frame, u.complement(n)).complement(n);
}

DiagramVerdict diagram_commutes(const FramePtr& frame, bool check_boolean_ops)
{
    const ModalAlgebraFin alg = idempotent_algebra(frame);
    const std::size_t n = frame->size();
    const std::uint64_t count = std::uint64_t{1} << n;
    DiagramVerdict v;
    for (std::uint64_t u = 0; u < count; ++u) {
        ++v.subsets;
        if (alg.box(PointSet{u}) != classical_box(*frame, PointSet{u})) {
            v.box_mismatch = PointSet{u};
            break;
        }
    }
    if (!check_boolean_ops) {
        return v;
    }
    v.boolean_checked = true;
    const Func one = Func::one(frame);
    for (std::uint64_t u = 0; u < count && !v.boolean_mismatch; ++u) {
        const PointSet us{u};
        const Func e = Func::indicator(frame, us);
        const bool complement_ok = 1 - e == Func::indicator(frame, us.complement(n));
        for (std::uint64_t w = 0; w < count; ++w) {
            const PointSet ws{w};
            const Func f = Func::indicator(frame, ws);
            const Func ef = e * f;
            if (!complement_ok || ef != Func::indicator(frame, us & ws) ||
                e + f - ef != Func::indicator(frame, us | ws)) {
                v.boolean_mismatch = std::pair{us, ws};
                break;
            }
        }
    }
    return v;
}

MeetPreservation check_meet_preservation(const ModalAlgebraFin& algebra, const Frame& frame)
{
    if (frame.size() != algebra.points()) {
        throw InputError("frame and modal algebra have different point counts");
    }
    MeetPreservation r;
    r.top = algebra.box(algebra.top()) == algebra.top();
    const std::uint64_t count = std::uint64_t{1} << algebra.points();
    for (std::uint64_t u = 0; u < count; ++u) {
        const PointSet us{u};
        if (!r.diamond_failure && algebra.diamond(us) != preimage(frame, us)) {
            r.diamond_failure = us;
        }
        if (r.meet_failure) {
            continue;
        }
        for (std::uint64_t w = 0; w < count; ++w) {
            const PointSet ws{w};
            if (algebra.box(us & ws) != (algebra.box(us) & algebra.box(ws))) {
                r.meet_failure = std::pair{us, ws};
                break;
            }
        }
    }
    return r;
}

} // namespace mbal
