#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "mbal/frame.hpp"
#include "mbal/rational.hpp"

namespace mbal {

using Values = boost::container::small_vector<Rational, 8>;

/// A rational-valued function on the points of a frame: an element of the
/// finite function algebra over that frame. All binary operations require both
/// operands to live on the same frame and throw InputError otherwise.
class Func {
public:
    Func(FramePtr frame, Values values);

    static Func constant(FramePtr frame, const Rational& value);
    static Func zero(FramePtr frame) { return constant(std::move(frame), 0); }
    static Func one(FramePtr frame) { return constant(std::move(frame), 1); }
    /// 0/1-valued characteristic function of `set`.
    static Func indicator(FramePtr frame, PointSet set);

    [[nodiscard]] const FramePtr& frame() const { return frame_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const Rational& operator[](PointIndex i) const { return values_[i]; }
    [[nodiscard]] const Values& values() const { return values_; }

    /// Values only; the frames are compared separately by same_frame.
    friend bool operator==(const Func& a, const Func& b) { return a.values_ == b.values_; }

private:
    FramePtr frame_;
    Values values_;
};

/// True if both functions live on structurally identical frames.
[[nodiscard]] bool same_frame(const Func& a, const Func& b);
/// Throws InputError unless same_frame(a, b).
void require_same_frame(const Func& a, const Func& b);
void require_on_frame(const Func& f, const Frame& frame);

Func operator+(const Func& a, const Func& b);
Func operator-(const Func& a, const Func& b);
Func operator*(const Func& a, const Func& b);
Func operator-(const Func& a);
Func operator*(const Rational& s, const Func& f);
Func operator+(const Func& f, const Rational& s);
Func operator+(const Rational& s, const Func& f);
Func operator-(const Func& f, const Rational& s);
Func operator-(const Rational& s, const Func& f);

Func meet(const Func& a, const Func& b);
Func join(const Func& a, const Func& b);
/// f ∨ 0
Func pos_part(const Func& f);
/// (-f) ∨ 0
Func neg_part(const Func& f);
Func abs(const Func& f);

/// Pointwise a <= b.
[[nodiscard]] bool leq(const Func& a, const Func& b);
[[nodiscard]] bool is_nonnegative(const Func& f);

/// Sup norm: the least λ with |f| <= λ, attained as a maximum on a finite frame.
[[nodiscard]] Rational norm(const Func& f);

/// e·e = e. Also evaluates the lattice characterization 1 ∧ 2e = e and throws
/// InvariantViolation if the two disagree.
[[nodiscard]] bool is_idempotent(const Func& f);
/// No zero value, i.e. invertible in the algebra.
[[nodiscard]] bool is_unit(const Func& f);

struct CleanDecomposition {
    Func idempotent;
    Func unit;
};

/// f = e + u with e(x) = 1 where f(x) = 0 and e(x) = 0 elsewhere.
[[nodiscard]] CleanDecomposition clean_decomposition(const Func& f);

/// Z(f): points where f vanishes.
[[nodiscard]] PointSet zero_set(const Func& f);
/// coz(f): points where f does not vanish.
[[nodiscard]] PointSet cozero_set(const Func& f);

[[nodiscard]] std::string to_string(const Func& f);
std::ostream& operator<<(std::ostream& os, const Func& f);

} // namespace mbal
