#include "mbal/frame.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "mbal/errors.hpp"

namespace mbal {

namespace {

void check_point_names(const std::vector<std::string>& points)
{
    if (points.empty()) {
        throw InputError("frame must have at least one point");
    }
    if (points.size() > kMaxPoints) {
        throw InputError("frame has " + std::to_string(points.size()) + " points; at most " +
                         std::to_string(kMaxPoints) + " are supported");
    }
    std::unordered_set<std::string> seen;
    for (const auto& p : points) {
        if (!seen.insert(p).second) {
            throw InputError("duplicate point '" + p + "'");
        }
    }
}

} // namespace

Frame::Frame(std::vector<std::string> points, const std::vector<std::pair<PointIndex, PointIndex>>& edges)
{
    check_point_names(points);
    const std::size_t n = points.size();
    rows_.assign(n, 0);
    for (auto [x, y] : edges) {
        if (x >= n || y >= n) {
            throw InputError("edge endpoint out of range");
        }
        if (related(x, y)) {
            throw InputError("duplicate edge (" + points[x] + ", " + points[y] + ")");
        }
        rows_[x] |= std::uint64_t{1} << y;
    }
    points_ = std::move(points);
}

Frame Frame::from_rows(std::vector<std::string> points, std::vector<std::uint64_t> successors)
{
    check_point_names(points);
    if (successors.size() != points.size()) {
        throw InputError("successor table does not match the point list");
    }
    const std::uint64_t mask = PointSet::all(points.size()).bits();
    for (auto row : successors) {
        if ((row & ~mask) != 0) {
            throw InputError("edge endpoint out of range");
        }
    }
    Frame f;
    f.points_ = std::move(points);
    f.rows_ = std::move(successors);
    return f;
}

Frame Frame::from_code(std::size_t n, std::uint64_t code)
{
    if (n == 0 || n * n >= 64) {
        throw InputError("relation codes need 1 <= n <= 7");
    }
    std::vector<std::uint64_t> rows(n);
    const std::uint64_t row_mask = PointSet::all(n).bits();
    for (std::size_t x = 0; x < n; ++x) {
        rows[x] = (code >> (x * n)) & row_mask;
    }
    return from_rows(default_point_names(n), std::move(rows));
}

PointIndex Frame::index_of(std::string_view name) const
{
    auto it = std::find(points_.begin(), points_.end(), name);
    if (it == points_.end()) {
        throw InputError("unknown point '" + std::string(name) + "'");
    }
    return static_cast<PointIndex>(it - points_.begin());
}

PointSet Frame::dead_free() const
{
    PointSet d;
    for (PointIndex x = 0; x < size(); ++x) {
        if (rows_[x] != 0) {
            d.insert(x);
        }
    }
    return d;
}

std::vector<std::pair<PointIndex, PointIndex>> Frame::edges() const
{
    std::vector<std::pair<PointIndex, PointIndex>> out;
    for (PointIndex x = 0; x < size(); ++x) {
        for (PointIndex y : successors(x).indices()) {
            out.emplace_back(x, y);
        }
    }
    return out;
}

std::uint64_t Frame::code() const
{
    const std::size_t n = size();
    if (n * n >= 64) {
        throw InputError("relation codes need 1 <= n <= 7");
    }
    std::uint64_t c = 0;
    for (std::size_t x = 0; x < n; ++x) {
        c |= rows_[x] << (x * n);
    }
    return c;
}

std::vector<std::string> default_point_names(std::size_t n)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
    }
    return names;
}

Frame identity_frame(std::size_t n)
{
    std::vector<std::uint64_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = std::uint64_t{1} << i;
    }
    return Frame::from_rows(default_point_names(n), std::move(rows));
}

Frame empty_frame(std::size_t n) { return Frame::from_rows(default_point_names(n), std::vector<std::uint64_t>(n, 0)); }

Frame total_frame(std::size_t n)
{
    return Frame::from_rows(default_point_names(n), std::vector<std::uint64_t>(n, PointSet::all(n).bits()));
}

std::uint64_t relation_count(std::size_t n)
{
    if (n * n >= 64) {
        throw InputError("relation count overflows for n = " + std::to_string(n));
    }
    return std::uint64_t{1} << (n * n);
}

PointSet image(const Frame& f, PointIndex x)
{
    if (x >= f.size()) {
        throw InputError("unknown point index " + std::to_string(x));
    }
    return f.successors(x);
}

PointSet image(const Frame& f, std::string_view x) { return f.successors(f.index_of(x)); }

PointSet preimage(const Frame& f, PointSet u)
{
    if (!u.subset_of(f.universe())) {
        throw InputError("point set contains points outside the frame");
    }
    PointSet out;
    for (PointIndex x = 0; x < f.size(); ++x) {
        if (!(f.successors(x) & u).empty()) {
            out.insert(x);
        }
    }
    return out;
}

FrameProperties frame_properties(const Frame& f)
{
    const std::size_t n = f.size();
    FrameProperties p{true, true, true, true};
    for (PointIndex x = 0; x < n; ++x) {
        if (f.successors(x).empty()) {
            p.serial = false;
        }
        if (!f.related(x, x)) {
            p.reflexive = false;
        }
        for (PointIndex y = 0; y < n; ++y) {
            if (!f.related(x, y)) {
                continue;
            }
            if (!f.related(y, x)) {
                p.symmetric = false;
            }
            for (PointIndex z = 0; z < n; ++z) {
                if (f.related(y, z) && !f.related(x, z)) {
                    p.transitive = false;
                }
            }
        }
    }
    return p;
}

PointMap::PointMap(FramePtr source, FramePtr target, std::vector<PointIndex> image)
    : source_{std::move(source)}, target_{std::move(target)}, image_{std::move(image)}
{
    if (!source_ || !target_) {
        throw InputError("point map needs both frames");
    }
    if (image_.size() != source_->size()) {
        throw InputError("point map is not total on the source frame");
    }
    for (auto y : image_) {
        if (y >= target_->size()) {
            throw InputError("point map sends a point outside the target frame");
        }
    }
}

PointSet PointMap::apply(PointSet s) const
{
    PointSet out;
    for (PointIndex x : s.indices()) {
        out.insert(image_[x]);
    }
    return out;
}

PointMap identity_map(const FramePtr& f)
{
    std::vector<PointIndex> img(f->size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        img[i] = i;
    }
    return PointMap{f, f, std::move(img)};
}

bool is_bounded_morphism(const PointMap& m)
{
    const Frame& src = *m.source();
    const Frame& tgt = *m.target();
    for (PointIndex x = 0; x < src.size(); ++x) {
        if (m.apply(src.successors(x)) != tgt.successors(m(x))) {
            return false;
        }
    }
    return true;
}

Frame random_frame(std::size_t n, double density, std::uint64_t seed, FrameConstraints constraints)
{
    if (n == 0) {
        throw InputError("random frame needs at least one point");
    }
    if (n > kMaxPoints) {
        throw InputError("random frame larger than " + std::to_string(kMaxPoints) + " points");
    }
    if (!(density >= 0.0 && density <= 1.0)) {
        throw InputError("density must lie in [0, 1]");
    }
    std::mt19937_64 rng{seed};
    std::vector<std::uint64_t> rows(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            // 53 random bits mapped onto [0, 1); independent of the library's distributions.
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < density) {
                rows[x] |= std::uint64_t{1} << y;
            }
        }
    }
    if (constraints.serial) {
        for (std::size_t x = 0; x < n; ++x) {
            if (rows[x] == 0) {
                rows[x] = std::uint64_t{1} << x;
            }
        }
    }
    if (constraints.reflexive) {
        for (std::size_t x = 0; x < n; ++x) {
            rows[x] |= std::uint64_t{1} << x;
        }
    }
    if (constraints.symmetric) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if ((rows[x] >> y) & 1U) {
                    rows[y] |= std::uint64_t{1} << x;
                }
            }
        }
    }
    if (constraints.transitive) {
        // Warshall: after pivot k, every path through points < k+1 is short-circuited.
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t x = 0; x < n; ++x) {
                if ((rows[x] >> k) & 1U) {
                    rows[x] |= rows[k];
                }
            }
        }
    }
    return Frame::from_rows(default_point_names(n), std::move(rows));
}

} // namespace mbal
