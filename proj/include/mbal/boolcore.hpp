#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mbal/frame.hpp"

namespace mbal {

/// Powerset boolean algebra of a frame's points with a box map, stored as a
/// table indexed by subset bitmask.
class ModalAlgebraFin {
public:
    /// `table[u]` is box(U) for the subset with bitmask u; needs 2^n entries.
    ModalAlgebraFin(std::size_t points, std::vector<PointSet> table);

    [[nodiscard]] std::size_t points() const { return n_; }
    [[nodiscard]] PointSet top() const { return PointSet::all(n_); }
    [[nodiscard]] PointSet box(PointSet u) const { return table_.at(u.bits()); }
    /// X \ box(X \ U)
    [[nodiscard]] PointSet diamond(PointSet u) const { return box(u.complement(n_)).complement(n_); }
    [[nodiscard]] const std::vector<PointSet>& table() const { return table_; }

    friend bool operator==(const ModalAlgebraFin&, const ModalAlgebraFin&) = default;

private:
    std::size_t n_;
    std::vector<PointSet> table_;
};

/// Largest frame for which the subset tables are built.
inline constexpr std::size_t kMaxAlgebraPoints = 16;

/// box(U) is the support of □_R χ_U. Throws InvariantViolation if some □_R χ_U
/// is not idempotent, InputError above kMaxAlgebraPoints.
[[nodiscard]] ModalAlgebraFin idempotent_algebra(const FramePtr& frame);

/// X \ R^{-1}[X \ U]. Throws InputError if U has points outside the frame.
[[nodiscard]] PointSet classical_box(const Frame& frame, PointSet u);

struct DiagramVerdict {
    std::size_t subsets = 0;
    std::optional<PointSet> box_mismatch;  ///< U where the two boxes differ
    std::optional<std::pair<PointSet, PointSet>> boolean_mismatch; ///< U, V where ef, e+f-ef or 1-e misbehaves
    bool boolean_checked = false;

    [[nodiscard]] bool commutes() const { return !box_mismatch && !boolean_mismatch; }
};

/// Compares idempotent_algebra(F).box with classical_box on every subset. With
/// `check_boolean_ops`, also checks that ef, e + f - ef and 1 - e on
/// indicators match ∩, ∪ and complement for every pair of subsets; that part
/// depends only on the point count.
[[nodiscard]] DiagramVerdict diagram_commutes(const FramePtr& frame, bool check_boolean_ops = true);

struct MeetPreservation {
    bool top = false;  ///< box(X) = X
    std::optional<std::pair<PointSet, PointSet>> meet_failure; ///< box(U ∩ V) ≠ box U ∩ box V
    std::optional<PointSet> diamond_failure; ///< ◇U ≠ R^{-1}[U]

    [[nodiscard]] bool ok() const { return top && !meet_failure && !diamond_failure; }
};

/// Exhaustive over subset pairs of the algebra's carrier; the diamond is
/// compared with preimages in `frame`.
[[nodiscard]] MeetPreservation check_meet_preservation(const ModalAlgebraFin& algebra, const Frame& frame);

} // namespace mbal
