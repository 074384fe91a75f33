#include <doctest.h>

#include "helpers.hpp"
#include "mbal/errors.hpp"
#include "oracle.hpp"

using namespace mbal;
using testing::f1;
using testing::set;

TEST_CASE("image")
{
    const auto f = f1();
    CHECK(image(*f, 0) == set({1, 2}));
    CHECK(image(*f, 2).empty());
    CHECK(image(identity_frame(2), "1") == set({1}));
    CHECK_THROWS_AS((void)image(*f, 3), InputError);
    CHECK_THROWS_AS((void)image(*f, "x"), InputError);
}

TEST_CASE("preimage")
{
    const auto f = f1();
    CHECK(preimage(*f, set({0, 2})) == set({0}));
    CHECK(preimage(*f, PointSet{}).empty());
    CHECK(preimage(*f, set({1})) == set({0, 1}));
    CHECK_THROWS_AS((void)preimage(*f, set({3})), InputError);
}

TEST_CASE("frame properties")
{
    CHECK(frame_properties(*f1()) == FrameProperties{false, false, true, false});
    CHECK(frame_properties(identity_frame(2)) == FrameProperties{true, true, true, true});
    CHECK(frame_properties(empty_frame(1)) == FrameProperties{false, false, true, true});
}

TEST_CASE("frame construction errors")
{
    CHECK_THROWS_AS(Frame({}, {}), InputError);
    CHECK_THROWS_AS(Frame({"a", "a"}, {}), InputError);
    CHECK_THROWS_AS(Frame({"a", "b"}, {{0, 1}, {0, 1}}), InputError);
    CHECK_THROWS_AS(Frame({"a", "b"}, {{0, 2}}), InputError);
    CHECK_THROWS_AS(Frame(default_point_names(65), {}), InputError);
    CHECK_NOTHROW(Frame(default_point_names(64), {{63, 0}}));
}

TEST_CASE("bounded morphisms")
{
    const auto f = f1();
    CHECK(is_bounded_morphism(identity_map(f)));
    const auto id1 = share(identity_frame(1));
    const auto empty1 = share(empty_frame(1));
    CHECK_FALSE(is_bounded_morphism(PointMap{id1, empty1, {0}}));
    CHECK(is_bounded_morphism(PointMap{share(empty_frame(2)), empty1, {0, 0}}));
    CHECK_THROWS_AS(PointMap(id1, empty1, {1}), InputError);
    CHECK_THROWS_AS(PointMap(id1, empty1, {}), InputError);
}

TEST_CASE("exhaustive relation calculus against the oracle, up to 4 points")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t code = 0; code < relation_count(n); ++code) {
            const Frame f = Frame::from_code(n, code);
            const auto m = oracle::matrix_of_code(n, code);
            REQUIRE(oracle::matrix_of(f) == m);
            REQUIRE(f.code() == code);
            const FrameProperties p = frame_properties(f);
            REQUIRE(p.serial == oracle::serial(m));
            REQUIRE(p.reflexive == oracle::reflexive(m));
            REQUIRE(p.symmetric == oracle::symmetric(m));
            REQUIRE(p.transitive == oracle::transitive(m));
            REQUIRE(f.dead_free() == preimage(f, f.universe()));
            REQUIRE(f.dead_ends() == f.dead_free().complement(n));
            REQUIRE(is_bounded_morphism(identity_map(share(f))));
            for (std::uint64_t u = 0; u < (1U << n); ++u) {
                PointSet unions;
                for (PointIndex y : PointSet{u}.indices()) {
                    unions = unions | preimage(f, PointSet::single(y));
                }
                REQUIRE(preimage(f, PointSet{u}) == unions);
                REQUIRE(oracle::set_of(preimage(f, PointSet{u})) == oracle::preimage(m, oracle::set_of(PointSet{u})));
            }
        }
    }
}

TEST_CASE("bounded morphisms against the oracle, maps between 2-point frames")
{
    for (std::uint64_t a = 0; a < 16; ++a) {
        for (std::uint64_t b = 0; b < 16; ++b) {
            const auto src = share(Frame::from_code(2, a));
            const auto tgt = share(Frame::from_code(2, b));
            for (std::vector<PointIndex> img : {std::vector<PointIndex>{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
                REQUIRE(is_bounded_morphism(PointMap{src, tgt, img}) ==
                        oracle::bounded(oracle::matrix_of(*src), oracle::matrix_of(*tgt), img));
            }
        }
    }
}

TEST_CASE("random frames")
{
    CHECK(random_frame(3, 0.0, 7) == empty_frame(3));
    CHECK(random_frame(2, 1.0, 1) == total_frame(2));
    const Frame t = random_frame(4, 0.3, 42, {.transitive = true});
    CHECK(frame_properties(t).transitive);
    CHECK(random_frame(5, 0.4, 9) == random_frame(5, 0.4, 9));
    CHECK_THROWS_AS((void)random_frame(0, 0.5, 1), InputError);
    CHECK_THROWS_AS((void)random_frame(3, 1.5, 1), InputError);
}

TEST_CASE("constrained random frames satisfy their constraints for 10^4 seeds")
{
    const FrameConstraints all[] = {
        {.serial = true},
        {.reflexive = true},
        {.symmetric = true},
        {.transitive = true},
        {.serial = true, .symmetric = true, .transitive = true},
        {.reflexive = true, .transitive = true},
    };
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const FrameConstraints& c = all[seed % std::size(all)];
        const std::size_t n = 1 + seed % 7;
        const double density = static_cast<double>(seed % 10) / 10.0;
        const Frame f = random_frame(n, density, seed, c);
        const auto m = oracle::matrix_of(f);
        REQUIRE((!c.serial || oracle::serial(m)));
        REQUIRE((!c.reflexive || oracle::reflexive(m)));
        REQUIRE((!c.symmetric || oracle::symmetric(m)));
        REQUIRE((!c.transitive || oracle::transitive(m)));
    }
}
