#include <doctest.h>

#include <random>

#include "nakwide/wide.hpp"
#include "test_support.hpp"

using namespace nakwide;
using namespace nakwide::wide;
using nakwide::testing::throws_kind;

namespace {
const AlgebraParams P = validate_params(9, 4, 4);
Subcat W(std::vector<int> v) { return Subcat::from_indices(P, v); }
using V = std::vector<int>;
} // namespace

TEST_CASE("Subcat basics")
{
    const auto w = W({11, 2, 3});
    CHECK(w.members() == V{2, 3, 11});
    CHECK(w.size() == 3);
    CHECK(w.contains(11));
    CHECK_FALSE(w.contains(12));
    CHECK(Subcat::full(P).size() == 12);
    CHECK(throws_kind(ErrorKind::RangeError, [] { W({13}); }));
    CHECK(throws_kind(ErrorKind::RangeError, [] { require_subcat(P, Subcat(1u << 12)); }));
}

TEST_CASE("semisimple predicates")
{
    CHECK(is_semisimple(P, W({1, 5, 9})));
    CHECK_FALSE(is_semisimple(P, W({2, 3})));
    CHECK(is_semisimple(P, W({})));
    CHECK(semisimple_wide(P, W({1, 5, 9})));
    CHECK_FALSE(semisimple_wide(P, W({1, 12})));
    CHECK(semisimple_wide(P, W({7})));
    CHECK(throws_kind(ErrorKind::PreconditionViolation, [] { semisimple_wide(P, W({2, 3})); }));
}

TEST_CASE("periodicity")
{
    CHECK(is_l_periodic(P, W({2, 3, 6, 7, 10, 11})));
    CHECK_FALSE(is_l_periodic(P, W({2, 3, 6, 7, 10})));
    CHECK_FALSE(is_l_periodic(P, W({1, 5, 9})));
    CHECK(is_l_periodic(P, Subcat::full(P)));
}

TEST_CASE("wide_fast examples")
{
    auto v = wide_fast(P, W({2, 3, 6, 7, 10, 11}));
    CHECK(v.is_wide);
    CHECK(v.kind == WideKind::Periodic);
    CHECK_FALSE(wide_fast(P, W({1, 12})).is_wide);
    CHECK(wide_fast(P, Subcat::full(P)).is_wide);
    CHECK(wide_fast(P, W({})).kind == WideKind::Semisimple);
    CHECK(to_string(WideKind::Periodic) == "l-periodic");
}

TEST_CASE("wide_bruteforce examples")
{
    CHECK(wide_bruteforce(P, W({2, 3, 6, 7, 10, 11})).is_wide);
    const auto v = wide_bruteforce(P, W({2, 3}));
    CHECK_FALSE(v.is_wide);
    REQUIRE(v.witness);
    CHECK(v.witness->clause == Clause::Cokernel);
    CHECK(v.witness->source == IndecIndex{2});
    CHECK(v.witness->target == IndecIndex{3});
    CHECK(nakwide::testing::values(v.witness->missing) == V{6, 7, 10, 11});
    CHECK(wide_bruteforce(P, W({})).is_wide);

    // Closed under morphisms but not extensions: {1, 10} has Ext^d(f_10, f_1) != 0.
    const auto e = wide_bruteforce(P, W({1, 10}));
    CHECK_FALSE(e.is_wide);
    REQUIRE(e.witness);
    CHECK(e.witness->clause == Clause::Extension);
}

TEST_CASE("property: classifiers agree on random subsets")
{
    std::mt19937 rng(7);
    for (const auto& params : nakwide::testing::desk_params()) {
        const ClosureTables tables(params);
        const std::uint32_t mask = (params.n() >= 32) ? ~0u : ((1u << params.n()) - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const Subcat w(std::uint32_t(rng()) & mask);
            CHECK(wide_fast(tables, w).is_wide == wide_bruteforce(tables, w).is_wide);
        }
    }
}

TEST_CASE("necessity: wide non-semisimple subsets are periodic")
{
    const auto r = enumerate_wide(P);
    for (const auto& w : r.nonsemisimple)
        CHECK(is_l_periodic(P, w));
    CHECK(r.closed_but_not_periodic == 0);
}

TEST_CASE("count formula")
{
    CHECK(count_nonsemisimple_formula(4) == 11);
    CHECK(count_nonsemisimple_formula(2) == 1);
    CHECK(count_nonsemisimple_formula(3) == 4);
    CHECK(count_nonsemisimple_formula(P) == 11);
}

TEST_CASE("enumeration")
{
    const auto r = enumerate_wide(P);
    CHECK(r.nonsemisimple_count() == 11);
    CHECK(r.agreement());
    CHECK(r.subsets_checked == 4096);
    CHECK(std::is_sorted(r.wide.begin(), r.wide.end()));
    CHECK(r.wide.size() == r.semisimple.size() + r.nonsemisimple.size());

    CHECK(enumerate_wide(validate_params(4, 2, 3)).nonsemisimple_count() == 1);
    CHECK(enumerate_wide(validate_params(7, 3, 4)).nonsemisimple_count() == 4);

    EnumerationOptions tight;
    tight.enum_bound = 10;
    CHECK(throws_kind(ErrorKind::EnumerationBoundExceeded, [&] { enumerate_wide(P, tight); }));

    EnumerationOptions threaded;
    threaded.workers = 3;
    const auto t = enumerate_wide(P, threaded);
    CHECK(t.wide == r.wide);
    CHECK(t.semisimple == r.semisimple);
}

TEST_CASE("cyclic distance view")
{
    CHECK(cyclic_distance_view(P, W({1, 5, 9})));
    CHECK_FALSE(cyclic_distance_view(P, W({1, 12})));
    CHECK(cyclic_distance_view(P, W({4})));
    // agrees with semisimple_wide on every semisimple subset
    for (const auto& params : nakwide::testing::desk_params()) {
        if (params.n() > 14)
            continue;
        for (std::uint32_t b = 0; b < (1u << params.n()); ++b) {
            const Subcat w(b);
            if (is_semisimple(params, w))
                CHECK(cyclic_distance_view(params, w) == semisimple_wide(params, w));
        }
    }
}
