#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbal/frame.hpp"
#include "mbal/func.hpp"
#include "mbal/modal.hpp"

namespace mbal {

/// Correspondence schemes and their frame conditions:
///   D   □0 = 0                        serial
///   T   □a ≤ a                        reflexive
///   K4  □a ≤ □(□a(1-□0) + a□0)        transitive
///   B   ◇□a(1-□0) ≤ a(1-□0)           symmetric
enum class Scheme { D, T, K4, B };

inline constexpr std::array<Scheme, 4> kSchemes{Scheme::D, Scheme::T, Scheme::K4, Scheme::B};

[[nodiscard]] std::string_view scheme_id(Scheme s);
/// Throws InputError for an unknown id.
[[nodiscard]] Scheme parse_scheme(std::string_view id);

/// Membership in D, T, K4, B and the intersections S4 = T ∧ K4, S5 = S4 ∧ B.
struct ClassSet {
    bool D = false;
    bool T = false;
    bool K4 = false;
    bool B = false;
    bool S4 = false;
    bool S5 = false;

    [[nodiscard]] bool has(Scheme s) const;
    /// Ids of the member classes in the order D, T, K4, B, S4, S5.
    [[nodiscard]] std::vector<std::string> ids() const;
    friend bool operator==(const ClassSet&, const ClassSet&) = default;
};

/// Builds the class set from the four base flags.
[[nodiscard]] ClassSet make_class_set(bool d, bool t, bool k4, bool b);

[[nodiscard]] ClassSet classify_frame(const Frame& frame);

enum class SchemeForm { box, diamond };

[[nodiscard]] std::string_view form_id(SchemeForm f);

/// One scheme instance. D has no parameter; its instance ignores `a`.
/// The ◇-forms are a ≤ ◇a, ◇(◇a + a(1-◇1)) ≤ ◇a, ◇□a ≤ a◇1 and ◇1 = 1.
struct SchemeEvaluation {
    Scheme scheme;
    SchemeForm form;
    Func a;
    Func lhs;
    Func rhs;
    bool holds = true;
};

[[nodiscard]] SchemeEvaluation evaluate_scheme(const ModalOperator& op, Scheme s, SchemeForm form, const Func& a);

struct SchemeVerdict {
    Scheme scheme;
    std::size_t checked = 0;
    std::optional<SchemeEvaluation> box_violation;
    std::optional<SchemeEvaluation> diamond_violation;

    [[nodiscard]] bool holds_on_samples() const { return !box_violation; }
    [[nodiscard]] bool forms_agree() const { return box_violation.has_value() == diamond_violation.has_value(); }
    [[nodiscard]] std::string_view label() const { return box_violation ? "violated" : "holds_on_samples"; }
};

/// Both forms of the scheme over the pool functions and their complements
/// 1 - f. The complements are included because the ◇-forms of T and K4 at a
/// correspond to the □-forms at 1 - a.
[[nodiscard]] SchemeVerdict check_scheme(const ModalOperator& op, Scheme s, const SamplePool& pool);

struct AlgebraClassification {
    std::array<SchemeVerdict, 4> verdicts; ///< indexed like kSchemes
    ClassSet classes;                      ///< from the □-form verdicts

    [[nodiscard]] bool forms_agree() const;
};

[[nodiscard]] AlgebraClassification classify_algebra(const ModalOperator& op, const SamplePool& pool);
[[nodiscard]] AlgebraClassification classify_algebra(const ModalOperator& op, std::size_t samples, std::uint64_t seed);

/// Which family of the staged search produced a witness.
enum class WitnessStage { complement_indicator, scaled_indicator, grid };

[[nodiscard]] std::string_view stage_id(WitnessStage s);

struct Witness {
    WitnessStage stage;
    SchemeEvaluation evaluation; ///< □-form on box_r over the frame
};

/// Runs the staged search only if the frame lacks the scheme's relational
/// property, and returns none otherwise.
[[nodiscard]] std::optional<Witness> find_witness(const FramePtr& frame, Scheme s);

/// The staged search regardless of frame properties: {1 - χ_y}, then
/// {λχ_U | λ ∈ 1..n, U ⊆ X}, then the grid {0..n}^X. The grid has (n+1)^n
/// members; throws InputError above 8 points.
[[nodiscard]] std::optional<Witness> search_witness(const FramePtr& frame, Scheme s);

struct SchemeAgreement {
    Scheme scheme;
    bool frame_has = false;
    SchemeVerdict algebra;
    std::optional<Witness> witness;

    /// Property present: no sampled violation. Property absent: a witness exists.
    [[nodiscard]] bool agree() const { return frame_has ? algebra.holds_on_samples() : witness.has_value(); }
};

struct AgreementResult {
    ClassSet frame_classes;
    std::array<SchemeAgreement, 4> schemes;

    [[nodiscard]] bool agree() const;
};

[[nodiscard]] AgreementResult agreement(const FramePtr& frame, const SamplePool& pool);
[[nodiscard]] AgreementResult agreement(const FramePtr& frame, std::size_t samples, std::uint64_t seed);

/// When □0 = 0 the K4 and B schemes reduce to □a ≤ □□a and ◇□a ≤ a.
struct SerialSpecialization {
    bool applicable = false; ///< □0 = 0 for op
    std::size_t checked = 0;
    bool k4_agree = true;
    bool b_agree = true;
    std::optional<Func> disagreement; ///< first input where a verdict differs

    [[nodiscard]] bool agree() const { return k4_agree && b_agree; }
};

[[nodiscard]] SerialSpecialization serial_specialization(const ModalOperator& op, const SamplePool& pool);

} // namespace mbal
