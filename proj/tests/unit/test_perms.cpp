#include <doctest.h>

#include <set>

#include "altsum/errors.hpp"
#include "altsum/perms.hpp"
#include "oracles.hpp"

using namespace altsum;

namespace {

std::size_t displaced(const SignedPerm& a, const SignedPerm& b) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < a.size(); ++j) count += a(j) != b(j);
    return count;
}

} // namespace

TEST_SUITE("perms") {

TEST_CASE("signed permutations") {
    const SignedPerm id = SignedPerm::identity(4);
    CHECK(id.parity == 1);
    const SignedPerm p = SignedPerm::from_mapping({1, 2, 0});
    CHECK(p.parity == 1);
    const SignedPerm q = SignedPerm::from_mapping({1, 0, 2});
    CHECK(q.parity == -1);
    CHECK_THROWS_AS(SignedPerm::from_mapping({0, 0, 1}), InputError);
    CHECK_THROWS_AS(SignedPerm::from_mapping({0, 3, 1}), InputError);
    CHECK(compose(p, inverse(p)) == SignedPerm::identity(3));
    // (p o q)(j) = p(q(j))
    CHECK(compose(p, q).mapping == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("parity agrees with cycle structure for every small permutation") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& m : oracle::all_perms(n)) {
            CHECK(inversion_parity(m) == oracle::cycle_sign(m));
            CHECK(SignedPerm::from_mapping(m).parity == oracle::cycle_sign(m));
        }
}

TEST_CASE("group laws on random permutations") {
    oracle::Gen gen(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = gen.integer(1, 7);
        const std::uint64_t order = factorial(n);
        const SignedPerm a = sjt_unrank(n, gen.integer(0, order - 1));
        const SignedPerm b = sjt_unrank(n, gen.integer(0, order - 1));
        const SignedPerm c = sjt_unrank(n, gen.integer(0, order - 1));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, b).parity == a.parity * b.parity);
        CHECK(inverse(a).parity == a.parity);
        CHECK(compose(inverse(a), a) == SignedPerm::identity(n));
    }
}

TEST_CASE("plain changes visits every permutation once with alternating parity") {
    for (std::size_t n = 1; n <= 7; ++n) {
        std::set<std::vector<std::size_t>> seen;
        PlainChanges pc(n);
        CHECK(pc.order() == factorial(n));
        std::optional<SignedPerm> previous;
        int expected_parity = 1;
        while (!pc.done()) {
            const SignedPerm& cur = pc.current();
            CHECK(cur.parity == expected_parity);
            CHECK(cur.parity == oracle::cycle_sign(cur.mapping));
            CHECK(sjt_rank(cur) == pc.rank());
            if (previous) {
                CHECK(displaced(*previous, cur) == 2);
            }
            seen.insert(cur.mapping);
            previous = cur;
            expected_parity = -expected_parity;
            pc.advance();
        }
        CHECK(seen.size() == factorial(n));
    }
    CHECK_THROWS_AS(PlainChanges(0), DimensionError);
}

TEST_CASE("consecutive plain-change permutations differ by an adjacent swap") {
    PlainChanges pc(5);
    SignedPerm prev = pc.current();
    for (pc.advance(); !pc.done(); pc.advance()) {
        const SignedPerm& cur = pc.current();
        std::vector<std::size_t> diff;
        for (std::size_t j = 0; j < 5; ++j)
            if (prev(j) != cur(j)) diff.push_back(j);
        REQUIRE(diff.size() == 2);
        CHECK(diff[1] == diff[0] + 1);
        CHECK(prev(diff[0]) == cur(diff[1]));
        CHECK(prev(diff[1]) == cur(diff[0]));
        prev = cur;
    }
}

TEST_CASE("rank and unrank round-trip and restart") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::uint64_t r = 0; r < factorial(n); ++r) CHECK(sjt_rank(sjt_unrank(n, r)) == r);
    PlainChanges a(6);
    for (int i = 0; i < 100; ++i) a.advance();
    PlainChanges b(6, 100);
    CHECK(a.current() == b.current());
    b.reset(3);
    CHECK(b.current() == sjt_unrank(6, 3));
    CHECK(b.rank() == 3);
}

TEST_CASE("product stream covers the group and splits cleanly") {
    const Shape shape({3, 2, 3});
    std::vector<SignedPermTuple> whole;
    for (ProductStream s(shape); !s.done(); s.advance()) whole.push_back(s.current());
    CHECK(whole.size() == 72);
    std::set<std::vector<std::vector<std::size_t>>> distinct;
    for (const auto& t : whole) {
        std::vector<std::vector<std::size_t>> key;
        int parity = 1;
        for (const auto& p : t.parts) {
            key.push_back(p.mapping);
            parity *= oracle::cycle_sign(p.mapping);
        }
        CHECK(t.parity == parity);
        distinct.insert(key);
    }
    CHECK(distinct.size() == 72);

    for (std::uint64_t cut : {0u, 1u, 5u, 36u, 71u, 72u}) {
        std::vector<SignedPermTuple> pieces;
        for (ProductStream s(shape, 0, cut); !s.done(); s.advance()) pieces.push_back(s.current());
        for (ProductStream s(shape, cut, 72); !s.done(); s.advance()) pieces.push_back(s.current());
        CHECK(pieces == whole);
    }
    ProductStream empty_shape{Shape()};
    CHECK(!empty_shape.done());
    empty_shape.advance();
    CHECK(empty_shape.done());
}

TEST_CASE("acting by sigma and by sigma inverse") {
    oracle::Gen gen(4);
    const Shape shape({3, 2});
    const MatrixTuple a = gen.tuple(shape);
    for (ProductStream s(shape); !s.done(); s.advance()) {
        const SignedPermTuple& sigma = s.current();
        std::vector<std::vector<std::size_t>> maps;
        for (const auto& p : sigma.parts) maps.push_back(p.mapping);
        CHECK(act(sigma, a) == oracle::place(maps, a));
        CHECK(act_inverse(sigma, a) == act(inverse(sigma), a));
        CHECK(act(sigma, act_inverse(sigma, a)) == a);
        CHECK(act(compose(sigma, sigma), a) == act(sigma, act(sigma, a)));
    }
}

}
