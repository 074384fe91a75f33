#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mbal {

using PointIndex = std::size_t;

/// Frames are capped at 64 points so that point sets fit in one machine word.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of a frame's points, as a bitmask over dense point indices.
class PointSet {
public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_{bits} {}

    static constexpr PointSet single(PointIndex i) { return PointSet{std::uint64_t{1} << i}; }
    static constexpr PointSet all(std::size_t n)
    {
        return PointSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool contains(PointIndex i) const { return (bits_ >> i) & 1U; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr PointSet& insert(PointIndex i)
    {
        bits_ |= std::uint64_t{1} << i;
        return *this;
    }

    /// Complement relative to the first n points.
    [[nodiscard]] constexpr PointSet complement(std::size_t n) const { return PointSet{~bits_ & all(n).bits_}; }

    [[nodiscard]] std::vector<PointIndex> indices() const
    {
        std::vector<PointIndex> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(static_cast<PointIndex>(std::countr_zero(b)));
        }
        return out;
    }

    friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet{a.bits_ | b.bits_}; }
    friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet{a.bits_ & b.bits_}; }
    friend constexpr bool operator==(PointSet a, PointSet b) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Finite Kripke frame: named points with a binary relation stored as one
/// successor bitmask per point. Immutable after construction.
class Frame {
public:
    /// Builds a frame from point names and index pairs. Throws InputError on an
    /// empty or oversized point list, duplicate names, duplicate edges, or
    /// out-of-range endpoints.
    Frame(std::vector<std::string> points, const std::vector<std::pair<PointIndex, PointIndex>>& edges);

    /// Row i of `successors` is the bitmask R[i]. Duplicates are impossible here.
    static Frame from_rows(std::vector<std::string> points, std::vector<std::uint64_t> successors);

    /// Points named "0".."n-1"; bit (x*n + y) of `code` set iff x R y. Used for
    /// exhaustive enumeration of all 2^(n*n) relations.
    static Frame from_code(std::size_t n, std::uint64_t code);

    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] const std::vector<std::string>& points() const { return points_; }
    [[nodiscard]] const std::string& name(PointIndex i) const { return points_.at(i); }
    /// Throws InputError for an unknown point name.
    [[nodiscard]] PointIndex index_of(std::string_view name) const;

    [[nodiscard]] bool related(PointIndex x, PointIndex y) const { return (rows_[x] >> y) & 1U; }
    [[nodiscard]] PointSet successors(PointIndex x) const { return PointSet{rows_[x]}; }
    [[nodiscard]] PointSet universe() const { return PointSet::all(size()); }

    /// D: points with at least one successor.
    [[nodiscard]] PointSet dead_free() const;
    /// E: points with no successor.
    [[nodiscard]] PointSet dead_ends() const { return dead_free().complement(size()); }

    [[nodiscard]] std::vector<std::pair<PointIndex, PointIndex>> edges() const;
    [[nodiscard]] std::uint64_t code() const;

    friend bool operator==(const Frame& a, const Frame& b) = default;

private:
    Frame() = default;

    std::vector<std::string> points_;
    std::vector<std::uint64_t> rows_;
};

using FramePtr = std::shared_ptr<const Frame>;

[[nodiscard]] inline FramePtr share(Frame f) { return std::make_shared<const Frame>(std::move(f)); }

[[nodiscard]] std::vector<std::string> default_point_names(std::size_t n);
[[nodiscard]] Frame identity_frame(std::size_t n);
[[nodiscard]] Frame empty_frame(std::size_t n);
[[nodiscard]] Frame total_frame(std::size_t n);

/// Number of distinct relations on n points, 2^(n*n). Requires n*n < 64.
[[nodiscard]] std::uint64_t relation_count(std::size_t n);

/// R[x]. Throws InputError if x is not a point of the frame.
[[nodiscard]] PointSet image(const Frame& f, PointIndex x);
[[nodiscard]] PointSet image(const Frame& f, std::string_view x);

/// R^{-1}[U] = {x | R[x] meets U}. Throws InputError if U has bits outside the frame.
[[nodiscard]] PointSet preimage(const Frame& f, PointSet u);

struct FrameProperties {
    bool serial = false;
    bool reflexive = false;
    bool transitive = false;
    bool symmetric = false;

    friend bool operator==(const FrameProperties&, const FrameProperties&) = default;
};

[[nodiscard]] FrameProperties frame_properties(const Frame& f);

/// A total map from the points of `source` into the points of `target`.
class PointMap {
public:
    /// Throws InputError unless `image` has one in-range entry per source point.
    PointMap(FramePtr source, FramePtr target, std::vector<PointIndex> image);

    [[nodiscard]] const FramePtr& source() const { return source_; }
    [[nodiscard]] const FramePtr& target() const { return target_; }
    [[nodiscard]] PointIndex operator()(PointIndex x) const { return image_[x]; }
    [[nodiscard]] const std::vector<PointIndex>& images() const { return image_; }
    [[nodiscard]] PointSet apply(PointSet s) const;

private:
    FramePtr source_;
    FramePtr target_;
    std::vector<PointIndex> image_;
};

[[nodiscard]] PointMap identity_map(const FramePtr& f);

/// m(R[x]) = S[m(x)] for every source point x.
[[nodiscard]] bool is_bounded_morphism(const PointMap& m);

/// Closure constraints for random generation, applied as serial, reflexive,
/// symmetric, then transitive closure.
struct FrameConstraints {
    bool serial = false;
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
};

/// Each ordered pair becomes an edge independently with probability `density`.
/// Same arguments always give the same frame. Throws InputError for n == 0,
/// n > kMaxPoints, or density outside [0, 1].
[[nodiscard]] Frame random_frame(std::size_t n, double density, std::uint64_t seed, FrameConstraints constraints = {});

} // namespace mbal
