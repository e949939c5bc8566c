#include "nakwide/reduction.hpp"

#include <algorithm>

#include "nakwide/approximation.hpp"
#include "nakwide/calculus.hpp"
#include "nakwide/error.hpp"
#include "nakwide/rep.hpp"

namespace nakwide::reduction {

namespace {

std::string f_name(IndecIndex i) { return "f" + std::to_string(i.value); }

void invariant(bool condition, const std::string& what)
{
    if (!condition)
        throw Error(ErrorKind::PreconditionViolation, "reduction profile invariant violated: " + what);
}

} // namespace

AlgebraParams ReductionProfile::reduced_params(const AlgebraParams& params) const
{
    return validate_params(m_prime, ell_prime, params.d());
}

ReductionProfile periodic_profile(const AlgebraParams& params, wide::Subcat w)
{
    if (!wide::is_l_periodic(params, w))
        throw Error(ErrorKind::NotPeriodic, "subcategory is not ell-periodic");
    const int ell = params.ell();
    const int d = params.d();

    ReductionProfile profile;
    profile.ell_prime = -1;
    for (int i = 1; i <= params.m(); ++i) {
        int count = 0;
        for (int q = i; q <= i + ell - 1; ++q)
            count += w.contains(q) ? 1 : 0;
        if (profile.ell_prime < 0)
            profile.ell_prime = count;
        invariant(count == profile.ell_prime, "window counts differ");
    }
    invariant(profile.ell_prime >= 2, "ell' >= 2");
    invariant((profile.ell_prime * d) % 2 == 0, "ell' * d even");
    profile.m_prime = profile.ell_prime * d / 2 + 1;
    for (int q : w.members())
        profile.iota.push_back({q});
    invariant(int(profile.iota.size()) == profile.m_prime + profile.ell_prime - 1, "|W| = m' + ell' - 1");
    invariant(2 * int(profile.iota.size()) == profile.ell_prime * (d + 2), "|W| = ell'(d+2)/2");
    for (int i = 1; i + profile.ell_prime <= int(profile.iota.size()); ++i)
        invariant(profile.image(i + profile.ell_prime).value == profile.image(i).value + ell,
                  "iota(i' + ell') = iota(i') + ell");
    profile.s_indices.assign(profile.iota.begin(), profile.iota.begin() + profile.m_prime);
    (void)profile.reduced_params(params);
    return profile;
}

bool verify_gamma_iso(const AlgebraParams& params, const ReductionProfile& profile, std::uint32_t prime)
{
    const int mp = profile.m_prime;
    const int lp = profile.ell_prime;
    if (int(profile.iota.size()) != mp + lp - 1 || int(profile.s_indices.size()) != mp)
        return false;
    for (const auto& i : profile.iota)
        if (!params.in_range(i))
            return false;
    if (!std::is_sorted(profile.iota.begin(), profile.iota.end())
        || std::adjacent_find(profile.iota.begin(), profile.iota.end()) != profile.iota.end())
        return false;
    if (!std::equal(profile.s_indices.begin(), profile.s_indices.end(), profile.iota.begin()))
        return false;

    const rep::Algebra algebra = rep::algebra_for(params, prime);
    std::vector<rep::Representation> s;
    for (const auto& i : profile.s_indices)
        s.push_back(rep::f_module(algebra, params, i));

    for (int a = 1; a <= mp; ++a) {
        for (int b = 1; b <= mp; ++b) {
            const int expected = (b - a >= 0 && b - a <= lp - 1) ? 1 : 0;
            if (calc::hom_dim(params, profile.image(a), profile.image(b)) != expected)
                return false;
            if (rep::hom_space(s[std::size_t(a - 1)], s[std::size_t(b - 1)]).dimension != expected)
                return false;
        }
    }
    for (int a = 1; a <= mp; ++a) {
        for (int b = a; b <= mp && b - a <= lp - 1; ++b) {
            for (int q = a; q <= b; ++q) {
                if (!calc::factors_through(params, profile.image(a), profile.image(q), profile.image(b)))
                    return false;
                const auto first = rep::hom_space(s[std::size_t(a - 1)], s[std::size_t(q - 1)]);
                const auto second = rep::hom_space(s[std::size_t(q - 1)], s[std::size_t(b - 1)]);
                if (first.dimension != 1 || second.dimension != 1)
                    return false;
                if (rep::compose(second.basis.front(), first.basis.front()).is_zero())
                    return false;
            }
        }
    }
    return true;
}

bool ThmBReport::all_passed() const noexcept
{
    return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.passed; });
}

std::vector<int> dimension_vector(const AlgebraParams& params, IndecIndex i)
{
    const IntervalSupport support = interval_of(params, i);
    std::vector<int> dims(std::size_t(params.m()), 0);
    for (int v = support.a; v <= support.b; ++v)
        dims[std::size_t(v - 1)] = 1;
    return dims;
}

std::vector<int> hom_s_image(const AlgebraParams& params, const ReductionProfile& profile, IndecIndex w,
                             std::uint32_t prime)
{
    if (std::find(profile.iota.begin(), profile.iota.end(), w) == profile.iota.end())
        throw Error(ErrorKind::NotMember, f_name(w) + " is not in the subcategory");
    const rep::Algebra algebra = rep::algebra_for(params, prime);
    const rep::Representation target = rep::f_module(algebra, params, w);
    std::vector<int> image;
    for (const auto& s : profile.s_indices)
        image.push_back(rep::hom_space(rep::f_module(algebra, params, s), target).dimension);
    return image;
}

std::vector<HomImageRow> hom_image_table(const AlgebraParams& params, const ReductionProfile& profile,
                                         std::uint32_t prime)
{
    const AlgebraParams reduced = profile.reduced_params(params);
    std::vector<HomImageRow> rows;
    for (int k = 1; k <= int(profile.iota.size()); ++k) {
        HomImageRow row;
        row.w = profile.image(k);
        row.reduced_index = k;
        row.image = hom_s_image(params, profile, row.w, prime);
        row.matches = row.image == dimension_vector(reduced, {k});
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

ConditionResult check_projdim(const AlgebraParams& params, const ReductionProfile& profile,
                              const rep::Algebra& algebra)
{
    for (int k = 1; k <= profile.m_prime; ++k) {
        const IndecIndex s = profile.image(k);
        try {
            const auto res = rep::projective_resolution(rep::f_module(algebra, params, s), params.d());
            (void)res;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ResolutionOverflow)
                throw;
            return {false, "projective resolution of " + f_name(s) + " exceeds length d", s.value};
        }
    }
    return {true, "every s_i' has a projective resolution of length <= d", std::nullopt};
}

ConditionResult check_ext_vanishing(const AlgebraParams& params, const ReductionProfile& profile,
                                    const rep::Algebra& algebra)
{
    const int d = params.d();
    std::vector<rep::Representation> s;
    for (const auto& i : profile.s_indices)
        s.push_back(rep::f_module(algebra, params, i));
    for (int a = 1; a <= profile.m_prime; ++a) {
        const auto res = rep::projective_resolution(s[std::size_t(a - 1)], d);
        for (int b = 1; b <= profile.m_prime; ++b) {
            const auto dims = rep::ext_dims(res, s[std::size_t(b - 1)], d);
            for (int k = 1; k <= d; ++k)
                if (dims[std::size_t(k)] != 0)
                    return {false,
                            "Ext^" + std::to_string(k) + "(" + f_name(profile.image(a)) + ", "
                                + f_name(profile.image(b)) + ") != 0",
                            profile.image(a).value};
            if (calc::ext_d_dim(params, profile.image(a), profile.image(b)) != 0)
                return {false, "closed-form Ext^d does not vanish on s", profile.image(a).value};
        }
    }
    // tau_d^- s_i' = f_{iota(i' + m' - 1) + 1} and it maps to nothing in add(s).
    for (int a = 1; a <= profile.ell_prime && a + profile.m_prime - 1 <= int(profile.iota.size()); ++a) {
        const IndecIndex si = profile.image(a);
        const int shifted = profile.image(a + profile.m_prime - 1).value + 1;
        if (shifted != si.value + params.m())
            return {false, "iota(i' + m' - 1) + 1 differs from iota(i') + m", si.value};
        if (si.value > params.ell() - 1)
            continue;
        const IndecIndex tau = calc::tau_d_inverse(params, si);
        if (tau.value != shifted)
            return {false, "tau_d^- disagrees with the shifted index", si.value};
        const auto tau_module = rep::f_module(algebra, params, tau);
        for (int b = 1; b <= profile.m_prime; ++b) {
            if (calc::hom_dim(params, tau, profile.image(b)) != 0
                || rep::stable_hom_dim(tau_module, s[std::size_t(b - 1)]) != 0)
                return {false, "Hom(tau_d^- " + f_name(si) + ", s) != 0", si.value};
        }
    }
    return {true, "Ext^k(s, s) = 0 for 1 <= k <= d", std::nullopt};
}

ConditionResult check_resolutions(const AlgebraParams& params, const ReductionProfile& profile,
                                  const rep::Algebra& algebra)
{
    const AlgebraParams reduced = profile.reduced_params(params);
    const int mp = profile.m_prime;
    for (int ip = mp + 1; ip <= int(profile.iota.size()); ++ip) {
        const IndecIndex target = profile.image(ip);
        const auto window = calc::e_complex(reduced, {mp}, {ip});
        const auto terms = window.nonzero();
        if (terms.front().value != 1 || terms.back().value != ip)
            return {false, "sequence for " + f_name(target) + " does not run from s_1", target.value};
        for (std::size_t k = 0; k + 1 < terms.size(); ++k)
            if (terms[k].value > mp)
                return {false, "sequence for " + f_name(target) + " leaves add(s)", target.value};
        rep::ComplexOfReps complex;
        for (const auto& t : terms)
            complex.terms.push_back(rep::f_module(algebra, params, profile.image(t.value)));
        for (std::size_t k = 0; k + 1 < terms.size(); ++k)
            complex.maps.push_back(rep::interval_map(algebra, interval_of(params, profile.image(terms[k].value)),
                                                     interval_of(params, profile.image(terms[k + 1].value))));
        if (!rep::is_exact(complex))
            return {false, "sequence ending in " + f_name(target) + " is not exact", target.value};
    }
    return {true, "each member of W has an exact add(s)-resolution", std::nullopt};
}

ConditionResult check_cluster_tilting(const AlgebraParams& params, const ReductionProfile& profile,
                                      std::uint32_t prime)
{
    const AlgebraParams reduced = profile.reduced_params(params);
    for (const auto& row : hom_image_table(params, profile, prime))
        if (!row.matches)
            return {false, "Hom(s, " + f_name(row.w) + ") differs from f'" + std::to_string(row.reduced_index),
                    row.w.value};
    const int size = int(profile.iota.size());
    for (int a = 1; a <= size; ++a)
        for (int b = 1; b <= size; ++b)
            if (calc::hom_dim(params, profile.image(a), profile.image(b)) != calc::hom_dim(reduced, {a}, {b}))
                return {false, "Hom dimensions are not preserved by Hom(s, -)", profile.image(a).value};
    if (!rep::verify_cluster_tilting(reduced, prime))
        return {false, "image is not d-cluster tilting in mod End(s)", std::nullopt};
    return {true, "Hom(s, W) is the d-cluster tilting subcategory of mod End(s)", std::nullopt};
}

} // namespace

ThmBReport thmB_conditions(const AlgebraParams& params, const ReductionProfile& profile, std::uint32_t prime)
{
    const rep::Algebra algebra = rep::algebra_for(params, prime);
    ThmBReport report;
    report.conditions[0] = check_projdim(params, profile, algebra);
    report.conditions[1] = check_ext_vanishing(params, profile, algebra);
    report.conditions[2] = check_resolutions(params, profile, algebra);
    report.conditions[3] = check_cluster_tilting(params, profile, prime);
    return report;
}

} // namespace nakwide::reduction
