#include <doctest.h>

#include "helpers.hpp"
#include "mbal/duality.hpp"
#include "mbal/errors.hpp"
#include "oracle.hpp"

using namespace mbal;
using testing::f1;
using testing::fn;
using testing::set;

TEST_CASE("yosida points")
{
    const auto pts = yosida_points(*f1());
    REQUIRE(pts.size() == 3);
    CHECK(pts[1].name == "1");
    CHECK(pts[1].contains(fn(f1(), {4, 0, 4})));
    CHECK_FALSE(pts[0].contains(fn(f1(), {4, 0, 4})));
    CHECK(yosida_points(identity_frame(1)).size() == 1);
    CHECK_THROWS_AS(Frame({}, {}), InputError);
}

TEST_CASE("reconstruct relation")
{
    const auto f = f1();
    CHECK(reconstruct_relation(ModalOperator::relation_induced(f)) == *f);
    CHECK(reconstruct_relation(ModalOperator::relation_induced(share(identity_frame(2)))) == identity_frame(2));
    CHECK(reconstruct_relation(ModalOperator::relation_induced(share(empty_frame(3)))) == empty_frame(3));
    // The identity operator is the box of the identity relation.
    const ModalOperator id = ModalOperator::external(f, "id", [](const Func& g) { return g; });
    CHECK(reconstruct_relation(id).edges() == identity_frame(3).edges());
}

TEST_CASE("audit agrees with the two-witness test, every relation on up to 3 points")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t code = 0; code < relation_count(n); ++code) {
            const auto f = share(Frame::from_code(n, code));
            REQUIRE(audit_reconstruction(ModalOperator::relation_induced(f)).empty());
            REQUIRE(reconstruct_relation_audited(ModalOperator::relation_induced(f)) == *f);
        }
    }
}

TEST_CASE("frame roundtrip")
{
    CHECK(roundtrip_frame(f1()).equal());
    CHECK(roundtrip_frame(share(total_frame(2))).equal());
    for (std::uint64_t code = 0; code < relation_count(4); ++code) {
        REQUIRE(roundtrip_frame(share(Frame::from_code(4, code))).equal());
    }
}

TEST_CASE("operator roundtrip")
{
    const auto f = f1();
    const OperatorRoundtrip r = roundtrip_operator(ModalOperator::relation_induced(f), 20, 1);
    CHECK(r.status == OperatorRoundtrip::Status::equal);
    CHECK(r.compared > 20);
    CHECK(*r.reconstructed == *f);

    const ModalOperator id = ModalOperator::external(f, "id", [](const Func& g) { return g; });
    const OperatorRoundtrip rid = roundtrip_operator(id, 20, 1);
    CHECK(rid.status == OperatorRoundtrip::Status::equal);
    CHECK(rid.reconstructed->edges() == identity_frame(3).edges());

    const ModalOperator shift = ModalOperator::external(f, "shift", [](const Func& g) { return g + Rational{1}; });
    const OperatorRoundtrip rs = roundtrip_operator(shift, 20, 1);
    CHECK(rs.status == OperatorRoundtrip::Status::not_applicable);
    CHECK(status_label(rs.status) == "not_applicable");
    REQUIRE(rs.failed_axiom);
    CHECK(rs.failed_axiom->label() == "violated");
}

TEST_CASE("zero-set identities")
{
    const auto f = f1();
    CHECK(zero_set_identities(*f, fn(f, {1, 0, 1})).all());
    CHECK(preimage(*f, set({1})) == set({0, 1}));
    CHECK(zero_set(box_r(*f, fn(f, {1, 0, 1}))) == set({0, 1}));
    CHECK(zero_set_identities(*f, Func::zero(f)).all());
    CHECK(zero_set_identities(*f, Func::one(f)).all());
    CHECK_THROWS_AS((void)zero_set_identities(*f, fn(f, {1, -1, 0})), InputError);

    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 1 + seed % 6;
        const auto fr = share(random_frame(n, 0.35, seed));
        Rng rng{seed};
        Func g = random_nonnegative_func(fr, rng) * Func::indicator(fr, PointSet{rng() & PointSet::all(n).bits()});
        REQUIRE(zero_set_identities(*fr, g).all());
    }
}

TEST_CASE("kernel and coset lemmas on sampled functions")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto fr = share(random_frame(1 + seed % 5, 0.4, seed));
        const ModalOperator op = ModalOperator::relation_induced(fr);
        for (const Func& g : make_pool(fr, 10, seed).funcs) {
            REQUIRE(diamond_kernel_lemma(op, *fr, g));
            REQUIRE(dead_end_coset_lemma(op, g));
        }
    }
    // A corrupted operator breaks the coset lemma.
    const auto f = f1();
    const ModalOperator bad = mutate(f, Mutation::dead_end_value, 2);
    CHECK_FALSE(dead_end_coset_lemma(bad, Func::zero(f)));
}

TEST_CASE("morphism duality examples")
{
    const auto f = f1();
    for (const Func& g : corner_battery(f)) {
        const PointMap id = identity_map(f);
        CHECK(pullback(id, box_r(*f, g)) == box_r(*f, pullback(id, g)));
    }
    CHECK(dual_of_map(identity_map(f), 10, 1).consistent());

    // Identity on points from the identity relation to the empty relation.
    const auto id2 = share(identity_frame(2));
    const auto e2 = share(empty_frame(2));
    const PointMap nb{id2, e2, {0, 1}};
    const MorphismDuality d = dual_of_map(nb);
    CHECK_FALSE(d.bounded);
    CHECK_FALSE(d.commutes);
    CHECK(d.consistent());
    REQUIRE(d.witness);
    CHECK(*d.witness == Func::zero(e2));
    CHECK(*d.lhs == Func::one(id2));
    CHECK(*d.rhs == Func::zero(id2));

    // Collapse of the identity frame on two points onto one point.
    const auto id1 = share(identity_frame(1));
    const PointMap collapse{id2, id1, {0, 0}};
    const MorphismDuality c = dual_of_map(collapse, 10, 3);
    CHECK(c.bounded);
    CHECK(c.commutes);
    CHECK(c.recovered_bounded == true);
    for (int v = -3; v <= 3; ++v) {
        const Func g = Func::constant(id1, v);
        CHECK(pullback(collapse, box_r(*id1, g)) == Func::constant(id2, v));
        CHECK(box_r(*id2, pullback(collapse, g)) == Func::constant(id2, v));
    }
}

TEST_CASE("recovering point maps from algebra maps")
{
    const auto src = share(identity_frame(2));
    const auto tgt = f1();
    const PointMap m{src, tgt, {2, 0}};
    const PointMap back = recover_point_map(src, tgt, [&](const Func& g) { return pullback(m, g); });
    CHECK(back.images() == m.images());
    // Doubling is not induced by a point map.
    CHECK_THROWS_AS((void)recover_point_map(src, tgt, [&](const Func& g) { return Rational{2} * pullback(m, g); }),
                    InvariantViolation);
}

TEST_CASE("morphism duality against the oracle, all maps between 2-point frames")
{
    for (std::uint64_t a = 0; a < 16; ++a) {
        for (std::uint64_t b = 0; b < 16; ++b) {
            const auto src = share(Frame::from_code(2, a));
            const auto tgt = share(Frame::from_code(2, b));
            for (std::vector<PointIndex> img : {std::vector<PointIndex>{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
                const MorphismDuality d = dual_of_map(PointMap{src, tgt, img}, 5, a * 16 + b);
                REQUIRE(d.consistent());
                REQUIRE(d.bounded == oracle::bounded(oracle::matrix_of(*src), oracle::matrix_of(*tgt), img));
            }
        }
    }
}
