#include <doctest.h>

#include <set>

#include "nakwide/reduction.hpp"
#include "nakwide/wide.hpp"
#include "test_support.hpp"

using namespace nakwide;
using namespace nakwide::reduction;
using nakwide::testing::throws_kind;
using nakwide::testing::values;

namespace {
const AlgebraParams P = validate_params(9, 4, 4);
const wide::Subcat EX = wide::Subcat::from_indices(P, {2, 3, 6, 7, 10, 11});
using V = std::vector<int>;
} // namespace

TEST_CASE("periodic profile of W = {2,3,6,7,10,11}")
{
    const auto prof = periodic_profile(P, EX);
    CHECK(prof.ell_prime == 2);
    CHECK(prof.m_prime == 5);
    CHECK(values(prof.iota) == V{2, 3, 6, 7, 10, 11});
    CHECK(values(prof.s_indices) == V{2, 3, 6, 7, 10});
    const auto rp = prof.reduced_params(P);
    CHECK(rp.m() == 5);
    CHECK(rp.ell() == 2);
    CHECK(rp.d() == 4);
}

TEST_CASE("full subcategory reduces to itself")
{
    for (const auto& params : nakwide::testing::desk_params()) {
        const auto prof = periodic_profile(params, wide::Subcat::full(params));
        CHECK(prof.ell_prime == params.ell());
        CHECK(prof.m_prime == params.m());
        for (int i = 1; i <= params.n(); ++i)
            CHECK(prof.image(i) == IndecIndex{i});
    }
}

TEST_CASE("non-periodic subcategories are rejected")
{
    CHECK(throws_kind(ErrorKind::NotPeriodic, [] { periodic_profile(P, wide::Subcat::from_indices(P, {1, 5, 9})); }));
    CHECK(throws_kind(ErrorKind::NotPeriodic, [] { periodic_profile(P, wide::Subcat::from_indices(P, {2, 3, 6, 7, 10})); }));
}

TEST_CASE("gamma iso")
{
    const auto prof = periodic_profile(P, EX);
    CHECK(verify_gamma_iso(P, prof));
    CHECK(verify_gamma_iso(P, periodic_profile(P, wide::Subcat::full(P))));
    auto bad = prof;
    std::swap(bad.iota[1], bad.iota[2]);
    CHECK_FALSE(verify_gamma_iso(P, bad));
}

TEST_CASE("reduction conditions for W = {2,3,6,7,10,11}")
{
    const auto report = thmB_conditions(P, periodic_profile(P, EX));
    for (const auto& c : report.conditions)
        CHECK_MESSAGE(c.passed, c.detail);
    CHECK(report.all_passed());
}

TEST_CASE("property: every periodic subcategory reduces cleanly")
{
    for (const auto& params : nakwide::testing::small_params()) {
        const auto census = wide::enumerate_wide(params);
        for (const auto& w : census.nonsemisimple) {
            const auto prof = periodic_profile(params, w);
            const auto rp = prof.reduced_params(params);
            CHECK(rp.d() == params.d());
            CHECK(rp.n() == w.size());
            CHECK(std::is_sorted(prof.iota.begin(), prof.iota.end()));
            CHECK(verify_gamma_iso(params, prof));
            CHECK(thmB_conditions(params, prof).all_passed());
            // reducing the reduced algebra by its full subcategory changes nothing
            const auto again = periodic_profile(rp, wide::Subcat::full(rp));
            CHECK(again.reduced_params(rp).m() == rp.m());
            CHECK(again.reduced_params(rp).ell() == rp.ell());
        }
    }
}

TEST_CASE("hom_s_image")
{
    const auto prof = periodic_profile(P, EX);
    const auto rp = prof.reduced_params(P);
    CHECK(hom_s_image(P, prof, {11}) == V{0, 0, 0, 0, 1});
    CHECK(hom_s_image(P, prof, {11}) == dimension_vector(rp, {6}));
    CHECK(hom_s_image(P, prof, {2}) == dimension_vector(rp, {1}));
    CHECK(hom_s_image(P, prof, {6}) == V{0, 1, 1, 0, 0});
    CHECK(hom_s_image(P, prof, {6}) == dimension_vector(rp, {3}));
    CHECK(throws_kind(ErrorKind::NotMember, [&] { hom_s_image(P, prof, {5}); }));
    for (const auto& row : hom_image_table(P, prof))
        CHECK(row.matches);
}

TEST_CASE("dimension vectors of indecomposables are distinct")
{
    for (const auto& params : nakwide::testing::desk_params()) {
        std::set<std::vector<int>> seen;
        for (int i = 1; i <= params.n(); ++i)
            seen.insert(dimension_vector(params, {i}));
        CHECK(int(seen.size()) == params.n());
    }
}
