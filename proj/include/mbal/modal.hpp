#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mbal/frame.hpp"
#include "mbal/func.hpp"

namespace mbal {

class Term;

/// (□_R f)(x) = min f(R[x]) for x with successors, 1 for dead ends.
[[nodiscard]] Func box_r(const Frame& frame, const Func& f);
/// (◇_R f)(x) = max f(R[x]) for x with successors, 0 for dead ends.
[[nodiscard]] Func diamond_r(const Frame& frame, const Func& f);

struct RelationInduced {
    FramePtr frame;
};
struct TermDefined {
    std::shared_ptr<const Term> term;
    std::string variable;
};
struct External {
    std::string label;
};
using Provenance = std::variant<RelationInduced, TermDefined, External>;

/// A unary map on the functions over one frame, together with where it came
/// from. Evaluation is deterministic and reentrant.
class ModalOperator {
public:
    using Eval = std::function<Func(const Func&)>;

    /// Relation-induced operators with a custom `eval` are spot-checked against
    /// box_r on 0, 1 and every 1 - χ_y; disagreement throws InvariantViolation.
    ModalOperator(FramePtr frame, Eval eval, Provenance provenance);

    static ModalOperator relation_induced(FramePtr frame);
    static ModalOperator external(FramePtr frame, std::string label, Eval eval);

    [[nodiscard]] const FramePtr& frame() const { return frame_; }
    [[nodiscard]] const Provenance& provenance() const { return provenance_; }
    [[nodiscard]] bool is_relation_induced() const { return std::holds_alternative<RelationInduced>(provenance_); }
    [[nodiscard]] std::string describe() const;

    /// □f. Throws InputError if f does not live on this operator's frame.
    [[nodiscard]] Func operator()(const Func& f) const;
    [[nodiscard]] Func box(const Func& f) const { return (*this)(f); }
    /// ◇f = 1 - □(1 - f).
    [[nodiscard]] Func diamond(const Func& f) const;

private:
    FramePtr frame_;
    Eval eval_;
    Provenance provenance_;
};

/// Catalog of checkable identities. The M and V ids are the axioms and the
/// vector-lattice alternative to M5; L are consequences of the axioms; D the
/// dual ◇ laws. The primed ids are the simplified forms valid when □0 = 0.
enum class Law {
    M1, M2, M3, M4, M5,
    V1, V2,
    L1, L2, L3, L4, L5, L6, L7,
    D1, D2, D3, D4, D5,
    M2s, M4s, M5s, DS,
};

[[nodiscard]] std::string_view law_id(Law law);
/// Throws InputError for an unknown id.
[[nodiscard]] Law parse_law(std::string_view id);
[[nodiscard]] std::span<const Law> axiom_laws();   // M1..M5, V1, V2
[[nodiscard]] std::span<const Law> derived_laws(); // L1..L7, D1..D5
[[nodiscard]] std::span<const Law> serial_laws();  // M2', M4', M5', ◇a = -□(-a)
[[nodiscard]] bool is_axiom_law(Law law);
[[nodiscard]] bool is_derived_law(Law law);

struct LawInstance {
    Func a;
    Func b;
    Rational lambda;
};

enum class Comparison { equal, less_equal };

/// Both sides of one law on one input. `premise` is false when the input does
/// not meet the law's side condition (λ ≥ 0, a ≤ b, a ≥ 0); such instances hold
/// vacuously.
struct LawEvaluation {
    Law law;
    LawInstance input;
    bool premise = true;
    Comparison comparison = Comparison::equal;
    Func lhs;
    Func rhs;
    bool holds = true;
};

[[nodiscard]] LawEvaluation evaluate_law(const ModalOperator& op, Law law, const LawInstance& input);

using Rng = std::mt19937_64;

/// Uniform rational in [-10, 10] with denominator drawn from 1..16.
[[nodiscard]] Rational random_scalar(Rng& rng);
[[nodiscard]] Func random_func(const FramePtr& frame, Rng& rng);
/// Uniform rational in [0, 10] with denominator from 1..16.
[[nodiscard]] Func random_nonnegative_func(const FramePtr& frame, Rng& rng);

/// Deterministic scalars paired with battery functions.
[[nodiscard]] std::span<const Rational> scalar_battery();

/// 0, 1, the constants ±1/2, -1, ±2, every 0/1 indicator, and ±(1 - χ_y) for
/// every point y, without duplicates, in a fixed order.
[[nodiscard]] std::vector<Func> corner_battery(const FramePtr& frame);

/// Inputs shared by every law check on one frame: the corner battery followed
/// by `samples` seeded random functions, each with a partner function and a
/// scalar.
struct SamplePool {
    std::vector<Func> funcs;
    std::vector<Func> partners;
    std::vector<Rational> scalars;
};

[[nodiscard]] SamplePool make_pool(const FramePtr& frame, std::size_t samples, std::uint64_t seed);

/// Instances for `law` built from the pool, adjusted to satisfy the premise
/// (λ replaced by |λ|, b by a + |b|, a by a⁺ where the law requires it).
[[nodiscard]] std::vector<LawInstance> law_instances(Law law, const SamplePool& pool);

/// Outcome of checking one law over a sample set. The vocabulary is
/// "holds on samples" or "violated", never a proof.
struct Verdict {
    Law law;
    std::size_t checked = 0;
    std::optional<LawEvaluation> violation;

    [[nodiscard]] bool holds_on_samples() const { return !violation.has_value(); }
    [[nodiscard]] std::string_view label() const { return violation ? "violated" : "holds_on_samples"; }
};

[[nodiscard]] Verdict check_law(const ModalOperator& op, Law law, const SamplePool& pool);
/// Requires an M or V id; throws InputError otherwise or when samples == 0.
[[nodiscard]] Verdict check_axiom(const ModalOperator& op, Law law, std::size_t samples, std::uint64_t seed);
/// Requires an L or D id; throws InputError otherwise or when samples == 0.
[[nodiscard]] Verdict check_derived(const ModalOperator& op, Law law, std::size_t samples, std::uint64_t seed);

/// M5 against its replacement by V1 and V2. The replacement is claimed only in
/// the presence of M1-M4, so `systems_agree` compares the two complete
/// axiom systems; `axioms_agree` compares M5 with V1 ∧ V2 on their own.
struct AxiomatizationComparison {
    bool m1_to_m4 = false;
    bool m5 = false;
    bool v1 = false;
    bool v2 = false;

    [[nodiscard]] bool standard() const { return m1_to_m4 && m5; }
    [[nodiscard]] bool alternative() const { return m1_to_m4 && v1 && v2; }
    [[nodiscard]] bool systems_agree() const { return standard() == alternative(); }
    [[nodiscard]] bool axioms_agree() const { return m5 == (v1 && v2); }
};

[[nodiscard]] AxiomatizationComparison compare_axiomatizations(const ModalOperator& op, const SamplePool& pool);

/// True if M1-M5 all hold on the pool.
[[nodiscard]] bool satisfies_axioms_on(const ModalOperator& op, const SamplePool& pool);

/// Deliberate corruptions of a relation-induced operator.
enum class Mutation {
    dead_end_value, ///< dead ends return `param` instead of 1
    shift_live,     ///< points with successors get `param` added
    scale_live,     ///< points with successors get multiplied by `param`
    square_live,    ///< points with successors get squared
    max_at_first,   ///< the first point with successors uses max instead of min
};

[[nodiscard]] std::string_view mutation_id(Mutation m);
[[nodiscard]] ModalOperator mutate(const FramePtr& frame, Mutation kind, const Rational& param);

} // namespace mbal
