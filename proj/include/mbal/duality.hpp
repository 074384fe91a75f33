#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mbal/frame.hpp"
#include "mbal/func.hpp"
#include "mbal/modal.hpp"

namespace mbal {

/// The maximal ℓ-ideal M_x = {f | f(x) = 0} of the function algebra. On a
/// finite frame these evaluation kernels are all of the maximal ℓ-ideals.
struct MaxIdeal {
    PointIndex point;
    std::string name;

    [[nodiscard]] bool contains(const Func& f) const { return f[point].is_zero(); }
    friend bool operator==(const MaxIdeal&, const MaxIdeal&) = default;
};

/// One kernel per point, in frame order.
[[nodiscard]] std::vector<MaxIdeal> yosida_points(const Frame& frame);

/// x R y iff □0 and □(1 - χ_y) both vanish at x.
[[nodiscard]] Frame reconstruct_relation(const ModalOperator& op);

/// Pairs where the two-witness test and the full definition (□f vanishes at x
/// for every f with values in {0,1,2} and f(y) = 0) disagree. The grid has
/// 3^(n-1) members per y, so this is meant for small frames.
[[nodiscard]] std::vector<std::pair<PointIndex, PointIndex>> audit_reconstruction(const ModalOperator& op);

/// reconstruct_relation, then audit; throws InvariantViolation on disagreement.
[[nodiscard]] Frame reconstruct_relation_audited(const ModalOperator& op);

struct FrameRoundtrip {
    std::vector<std::pair<PointIndex, PointIndex>> missing; ///< edges of F absent after reconstruction
    std::vector<std::pair<PointIndex, PointIndex>> extra;   ///< reconstructed edges not in F

    [[nodiscard]] bool equal() const { return missing.empty() && extra.empty(); }
};

/// Reconstructs the relation from □_R and compares it with R edge by edge.
[[nodiscard]] FrameRoundtrip roundtrip_frame(const FramePtr& frame);

struct OperatorRoundtrip {
    enum class Status { equal, mismatch, not_applicable };

    Status status = Status::equal;
    std::optional<Frame> reconstructed;
    std::optional<Verdict> failed_axiom; ///< set when not_applicable
    std::optional<Func> witness;         ///< first input where the operators differ
    std::optional<Func> original_value;
    std::optional<Func> reconstructed_value;
    std::size_t compared = 0;
};

[[nodiscard]] std::string_view status_label(OperatorRoundtrip::Status s);

/// If op satisfies M1-M5 on the pool, compares op with the box of its
/// reconstructed relation on every pool input; otherwise not_applicable.
[[nodiscard]] OperatorRoundtrip roundtrip_operator(const ModalOperator& op, std::size_t samples, std::uint64_t seed);
[[nodiscard]] OperatorRoundtrip roundtrip_operator(const ModalOperator& op, const SamplePool& pool);

/// Finite forms of the zero-set lemmas for a nonnegative f.
struct SetIdentities {
    bool preimage_of_zero_set = false;  ///< R^{-1}[Z(f)] = Z(□f)
    bool dead_free_is_zero_of_box0 = false; ///< D = Z(□0)
    bool preimage_of_cozero_set = false; ///< R^{-1}[coz(f)] = coz(◇f)
    bool union_pointwise = false;        ///< x ∈ D: (□f)(x) = 0 iff some successor y has f(y) = 0

    [[nodiscard]] bool all() const
    {
        return preimage_of_zero_set && dead_free_is_zero_of_box0 && preimage_of_cozero_set && union_pointwise;
    }
};

/// Throws InputError if f has a negative value or lives on another frame.
[[nodiscard]] SetIdentities zero_set_identities(const Frame& frame, const Func& f);

/// (◇f)(x) = 0 and x R y imply f⁺(y) = 0, with R the relation of `frame`.
[[nodiscard]] bool diamond_kernel_lemma(const ModalOperator& op, const Frame& frame, const Func& f);
/// (□0)(x) ≠ 0 implies (1 - □f)(x) = 0 at every point.
[[nodiscard]] bool dead_end_coset_lemma(const ModalOperator& op, const Func& f);

/// g ↦ g ∘ m, from functions on the target to functions on the source.
[[nodiscard]] Func pullback(const PointMap& m, const Func& g);

using Pullback = std::function<Func(const Func&)>;

/// Recovers the point map behind an algebra map C(target) → C(source) from
/// evaluation kernels: x goes to the unique y with hom(χ_y)(x) = 1. Throws
/// InvariantViolation if hom does not come from a point map.
[[nodiscard]] PointMap recover_point_map(const FramePtr& source, const FramePtr& target, const Pullback& hom);

struct MorphismDuality {
    bool bounded = false;
    bool commutes = false;
    std::optional<Func> witness; ///< a g with m*(□_S g) ≠ □_R m*(g)
    std::optional<Func> lhs;
    std::optional<Func> rhs;
    std::optional<bool> recovered_bounded; ///< set when commutes

    [[nodiscard]] bool consistent() const
    {
        return bounded == commutes && (!commutes || recovered_bounded.value_or(false));
    }
};

/// Checks m*(□_S g) = □_R m*(g) on the target's battery plus samples and
/// compares with is_bounded_morphism(m). When the pullback commutes, the point
/// map is recovered from kernels and tested as a bounded morphism.
[[nodiscard]] MorphismDuality dual_of_map(const PointMap& m, std::size_t samples = 0, std::uint64_t seed = 0);
/// Same check over caller-supplied functions on the target frame.
[[nodiscard]] MorphismDuality dual_of_map(const PointMap& m, std::span<const Func> inputs);

} // namespace mbal
