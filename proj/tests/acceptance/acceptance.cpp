// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "nakwide/approximation.hpp"
#include "nakwide/calculus.hpp"
#include "nakwide/cli.hpp"
#include "nakwide/reduction.hpp"
#include "nakwide/rep.hpp"
#include "nakwide/wide.hpp"
#include "test_support.hpp"

using namespace nakwide;

namespace {

struct Tally {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first;

    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++checks;
        if (!ok && failures++ == 0)
            first = what();
    }
};

std::string tag(const AlgebraParams& p)
{
    return "(" + std::to_string(p.m()) + "," + std::to_string(p.ell()) + "," + std::to_string(p.d()) + ")";
}

std::string pair(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

const std::vector<AlgebraParams>& params_set()
{
    static const auto set = nakwide::testing::desk_params();
    return set;
}

// 1. non-semisimple wide count equals 2^ell - ell - 1
void c1(Tally& t)
{
    for (const auto& p : params_set()) {
        const std::uint64_t want = (std::uint64_t(1) << p.ell()) - std::uint64_t(p.ell()) - 1;
        const auto r = wide::enumerate_wide(p);
        t.expect(r.nonsemisimple_count() == want,
                 [&] { return tag(p) + " count " + std::to_string(r.nonsemisimple_count()) + " != " + std::to_string(want); });
    }
    // the explicitly listed values
    const std::pair<AlgebraParams, std::uint64_t> listed[] = {{validate_params(9, 4, 4), 11}, {validate_params(7, 3, 4), 4},
                                                              {validate_params(4, 2, 3), 1},  {validate_params(6, 2, 5), 1},
                                                              {validate_params(13, 6, 4), 57}, {validate_params(11, 5, 4), 26}};
    for (const auto& [p, want] : listed)
        t.expect(wide::enumerate_wide(p).nonsemisimple_count() == want, [&, p = p] { return tag(p) + " listed value"; });
}

// 2. brute force and fast rules agree on every subset
void c2(Tally& t)
{
    for (const auto& p : params_set()) {
        const wide::ClosureTables tables(p);
        for (std::uint32_t bits = 0; bits < (1u << p.n()); ++bits) {
            const wide::Subcat w(bits);
            t.expect(wide::wide_bruteforce(tables, w).is_wide == wide::wide_fast(tables, w).is_wide,
                     [&] { return tag(p) + " subset bits " + std::to_string(bits); });
        }
    }
}

// 3. rep-engine Hom dimension equals the closed form, over two primes
void c3(Tally& t)
{
    for (const auto& p : params_set()) {
        std::vector<std::vector<int>> seen[2];
        int slot = 0;
        for (std::uint32_t prime : {2u, 101u}) {
            const auto a = rep::algebra_for(p, prime);
            auto& table = seen[slot++];
            table.assign(std::size_t(p.n()), std::vector<int>(std::size_t(p.n())));
            for (int i = 1; i <= p.n(); ++i)
                for (int j = 1; j <= p.n(); ++j) {
                    const int dim = rep::hom_space(rep::f_module(a, p, {i}), rep::f_module(a, p, {j})).dimension;
                    table[std::size_t(i - 1)][std::size_t(j - 1)] = dim;
                    const int want = (j - i >= 0 && j - i <= p.ell() - 1) ? 1 : 0;
                    t.expect(dim == want, [&] { return tag(p) + " p=" + std::to_string(prime) + " hom " + pair(i, j); });
                }
        }
        t.expect(seen[0] == seen[1], [&] { return tag(p) + " tables differ between primes"; });
    }
}

// 4. Ext^d closed form, AR duality, vanishing of intermediate Ext
void c4(Tally& t)
{
    for (const auto& p : params_set()) {
        const auto a = rep::algebra_for(p);
        const int n = p.n(), m = p.m(), d = p.d();
        std::vector<rep::Representation> f;
        for (int i = 1; i <= n; ++i)
            f.push_back(rep::f_module(a, p, {i}));
        for (int i = 1; i <= n; ++i) {
            const auto res = rep::projective_resolution(f[std::size_t(i - 1)]);
            for (int j = 1; j <= n; ++j) {
                const auto dims = rep::ext_dims(res, f[std::size_t(j - 1)], d);
                t.expect(dims[std::size_t(d)] == (i - j >= m ? 1 : 0), [&] { return tag(p) + " Ext^d " + pair(i, j); });
                for (int k = 1; k <= d - 1; ++k)
                    t.expect(dims[std::size_t(k)] == 0, [&] { return tag(p) + " Ext^" + std::to_string(k) + " " + pair(i, j); });
                if (j <= p.ell() - 1)
                    t.expect(dims[std::size_t(d)] == rep::stable_hom_dim(f[std::size_t(j + m - 1)], f[std::size_t(i - 1)]),
                             [&] { return tag(p) + " duality " + pair(i, j); });
            }
        }
    }
}

// 5. realized windows are exact, have d+2 terms, and truncate to the minimal d-kernel / d-cokernel
void c5(Tally& t)
{
    for (const auto& p : params_set()) {
        const auto a = rep::algebra_for(p);
        const int n = p.n(), d = p.d();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (calc::hom_dim(p, {i}, {j}) == 0)
                    continue;
                const auto w = calc::e_complex(p, {i}, {j});
                const auto terms = w.nonzero();
                t.expect(int(terms.size()) == d + 2, [&] { return tag(p) + " window size " + pair(i, j); });
                t.expect(rep::is_exact(nakwide::testing::realize(p, a, terms)), [&] { return tag(p) + " window exact " + pair(i, j); });

                // the window read left of f_i and right of f_j
                const auto pos = std::find(terms.begin(), terms.end(), IndecIndex{i}) - terms.begin();
                std::vector<int> left, right;
                for (std::ptrdiff_t k = 0; k < pos; ++k)
                    left.push_back(terms[std::size_t(k)].value);
                for (std::size_t k = std::size_t(pos) + 2; k < terms.size(); ++k)
                    right.push_back(terms[k].value);
                left.insert(left.begin(), std::size_t(d) - left.size(), 0);
                right.resize(std::size_t(d), 0);
                const auto ker = nakwide::testing::values(calc::minimal_d_kernel(p, {i}, {j}));
                const auto cok = nakwide::testing::values(calc::minimal_d_cokernel(p, {i}, {j}));
                t.expect(ker == left, [&] { return tag(p) + " kernel truncation " + pair(i, j); });
                t.expect(cok == right, [&] { return tag(p) + " cokernel truncation " + pair(i, j); });

                const bool ker_zero = std::all_of(ker.begin(), ker.end(), [](int v) { return v == 0; });
                const bool cok_zero = std::all_of(cok.begin(), cok.end(), [](int v) { return v == 0; });
                const auto mu = rep::interval_map(a, interval_of(p, {i}), interval_of(p, {j}));
                t.expect(ker_zero == (j <= p.ell()) && ker_zero == mu.is_injective(),
                         [&] { return tag(p) + " kernel zero iff mono " + pair(i, j); });
                t.expect(cok_zero == (i >= p.m()) && cok_zero == mu.is_surjective(),
                         [&] { return tag(p) + " cokernel zero iff epi " + pair(i, j); });
            }
    }
}

// 6. (9,4,4) with W = {2,3,6,7,10,11}
void c6(Tally& t)
{
    const auto p = validate_params(9, 4, 4);
    const auto w = wide::Subcat::from_indices(p, {2, 3, 6, 7, 10, 11});
    const auto prof = reduction::periodic_profile(p, w);
    t.expect(prof.ell_prime == 2 && prof.m_prime == 5, [] { return "profile"; });
    t.expect(reduction::verify_gamma_iso(p, prof), [] { return "gamma iso"; });
    const auto a = rep::algebra_for(p);
    t.expect(rep::is_exact(nakwide::testing::realize(p, a, {{2}, {3}, {6}, {7}, {10}, {11}})), [] { return "sequence exactness"; });
    const auto rp = prof.reduced_params(p);
    t.expect(reduction::hom_s_image(p, prof, {11}) == reduction::dimension_vector(rp, {6}), [] { return "Hom(s, f_11)"; });
    const auto report = reduction::thmB_conditions(p, prof);
    for (std::size_t k = 0; k < 4; ++k)
        t.expect(report.conditions[k].passed, [&] { return "condition " + std::to_string(k + 1) + ": " + report.conditions[k].detail; });
}

// 7. every interval module has an F-resolution with at most d nonaugmented terms
void c7(Tally& t)
{
    for (const auto& p : params_set()) {
        const auto a = rep::algebra_for(p);
        for (const auto& s : rep::all_intervals(a)) {
            const auto where = [&] { return tag(p) + " [" + std::to_string(s.a) + "," + std::to_string(s.b) + "]"; };
            try {
                const auto r = rep::f_resolution(p, rep::build_interval(a, s));
                t.expect(r.length() <= p.d() - 1, where);
                t.expect(r.augmented.terms.size() <= std::size_t(p.d() + 1), where);
                t.expect(rep::is_exact(r.augmented), where);
            } catch (const Error& e) {
                t.expect(false, [&] { return where() + ": " + e.what(); });
            }
        }
    }
}

// 8. F is d-cluster tilting; F minus f_2 is not
void c8(Tally& t)
{
    for (const auto& p : params_set()) {
        t.expect(rep::verify_cluster_tilting(p), [&] { return tag(p) + " F rejected"; });
        auto perturbed = rep::f_supports(p);
        perturbed.erase(interval_of(p, {2}));
        t.expect(!rep::verify_cluster_tilting(p, 2, perturbed), [&] { return tag(p) + " F minus f_2 accepted"; });
    }
}

// 9. enumerate reports do not depend on the worker count
void c9(Tally& t)
{
    for (const auto& p : params_set()) {
        cli::RunConfig one;
        one.m = p.m();
        one.ell = p.ell();
        one.d = p.d();
        auto four = one;
        four.workers = 4;
        const auto a = cli::cmd_enumerate(one);
        const auto b = cli::cmd_enumerate(four);
        t.expect(a.exit_code == 0 && !a.document.empty() && a.document == b.document, [&] { return tag(p) + " reports differ"; });
    }
}

} // namespace

int main()
{
    const std::pair<const char*, void (*)(Tally&)> criteria[] = {
        {"non-semisimple wide count 2^ell - ell - 1", c1},
        {"classifier agreement (exhaustive)", c2},
        {"Hom oracle vs closed form, p = 2 and 101", c3},
        {"Ext^d closed form, AR duality, Ext^1..d-1 vanish", c4},
        {"window exactness and truncations", c5},
        {"(9,4,4) reduction of W = {2,3,6,7,10,11}", c6},
        {"F-resolutions of length <= d-1", c7},
        {"cluster tilting check", c8},
        {"enumerate determinism across worker counts", c9},
    };
    int failed = 0;
    int number = 0;
    for (const auto& [name, fn] : criteria) {
        ++number;
        Tally t;
        try {
            fn(t);
        } catch (const std::exception& e) {
            t.expect(false, [&] { return std::string("exception: ") + e.what(); });
        }
        const bool ok = t.failures == 0 && t.checks > 0;
        failed += ok ? 0 : 1;
        std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << t.checks << " checks";
        if (!ok)
            std::cout << ", " << t.failures << " failed, first: " << t.first;
        std::cout << ")\n";
    }
    std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << '\n';
    return failed ? 1 : 0;
}
