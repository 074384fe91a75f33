#include "mbal/func.hpp"

#include <ostream>

#include "mbal/errors.hpp"

namespace mbal {

namespace {

template <typename Op>
Func zip(const Func& a, const Func& b, Op op)
{
    require_same_frame(a, b);
    Values out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(op(a[i], b[i]));
    }
    return Func{a.frame(), std::move(out)};
}

template <typename Op>
Func map(const Func& f, Op op)
{
    Values out;
    out.reserve(f.size());
    for (const auto& v : f.values()) {
        out.push_back(op(v));
    }
    return Func{f.frame(), std::move(out)};
}

} // namespace

Func::Func(FramePtr frame, Values values) : frame_{std::move(frame)}, values_{std::move(values)}
{
    if (!frame_) {
        throw InputError("function without a frame");
    }
    if (values_.size() != frame_->size()) {
        throw InputError("function has " + std::to_string(values_.size()) + " values for a frame of " +
                         std::to_string(frame_->size()) + " points");
    }
}

Func Func::constant(FramePtr frame, const Rational& value)
{
    const std::size_t n = frame->size();
    return Func{std::move(frame), Values(n, value)};
}

Func Func::indicator(FramePtr frame, PointSet set)
{
    if (!set.subset_of(frame->universe())) {
        throw InputError("indicator set has points outside the frame");
    }
    Values v;
    v.reserve(frame->size());
    for (PointIndex i = 0; i < frame->size(); ++i) {
        v.emplace_back(set.contains(i) ? 1 : 0);
    }
    return Func{std::move(frame), std::move(v)};
}

bool same_frame(const Func& a, const Func& b) { return a.frame() == b.frame() || *a.frame() == *b.frame(); }

void require_same_frame(const Func& a, const Func& b)
{
    if (!same_frame(a, b)) {
        throw InputError("functions live on different frames");
    }
}

void require_on_frame(const Func& f, const Frame& frame)
{
    if (f.frame().get() != &frame && *f.frame() != frame) {
        throw InputError("function does not live on the given frame");
    }
}

Func operator+(const Func& a, const Func& b)
{
    return zip(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

Func operator-(const Func& a, const Func& b)
{
    return zip(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

Func operator*(const Func& a, const Func& b)
{
    return zip(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}

Func operator-(const Func& a)
{
    return map(a, [](const Rational& x) { return -x; });
}

Func operator*(const Rational& s, const Func& f)
{
    return map(f, [&](const Rational& x) { return s * x; });
}

Func operator+(const Func& f, const Rational& s)
{
    return map(f, [&](const Rational& x) { return x + s; });
}

Func operator+(const Rational& s, const Func& f) { return f + s; }

Func operator-(const Func& f, const Rational& s)
{
    return map(f, [&](const Rational& x) { return x - s; });
}

Func operator-(const Rational& s, const Func& f)
{
    return map(f, [&](const Rational& x) { return s - x; });
}

Func meet(const Func& a, const Func& b)
{
    return zip(a, b, [](const Rational& x, const Rational& y) { return min(x, y); });
}

Func join(const Func& a, const Func& b)
{
    return zip(a, b, [](const Rational& x, const Rational& y) { return max(x, y); });
}

Func pos_part(const Func& f)
{
    return map(f, [](const Rational& x) { return x.sign() > 0 ? x : Rational{}; });
}

Func neg_part(const Func& f)
{
    return map(f, [](const Rational& x) { return x.sign() < 0 ? -x : Rational{}; });
}

Func abs(const Func& f)
{
    return map(f, [](const Rational& x) { return mbal::abs(x); });
}

bool leq(const Func& a, const Func& b)
{
    require_same_frame(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] < a[i]) {
            return false;
        }
    }
    return true;
}

bool is_nonnegative(const Func& f)
{
    for (const auto& v : f.values()) {
        if (v.sign() < 0) {
            return false;
        }
    }
    return true;
}

Rational norm(const Func& f)
{
    Rational m;
    for (const auto& v : f.values()) {
        m = max(m, mbal::abs(v));
    }
    return m;
}

bool is_idempotent(const Func& f)
{
    const bool ring_form = f * f == f;
    const bool lattice_form = meet(Func::one(f.frame()), Rational{2} * f) == f;
    if (ring_form != lattice_form) {
        throw InvariantViolation("idempotence tests disagree on " + to_string(f));
    }
    return ring_form;
}

bool is_unit(const Func& f)
{
    for (const auto& v : f.values()) {
        if (v.is_zero()) {
            return false;
        }
    }
    return true;
}

CleanDecomposition clean_decomposition(const Func& f)
{
    Func e = Func::indicator(f.frame(), zero_set(f));
    Func u = f - e;
    return {std::move(e), std::move(u)};
}

PointSet zero_set(const Func& f)
{
    PointSet z;
    for (PointIndex i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) {
            z.insert(i);
        }
    }
    return z;
}

PointSet cozero_set(const Func& f) { return zero_set(f).complement(f.size()); }

std::string to_string(const Func& f)
{
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) {
            s += ", ";
        }
        s += f[i].str();
    }
    s += ")";
    return s;
}

std::ostream& operator<<(std::ostream& os, const Func& f) { return os << to_string(f); }

} // namespace mbal
