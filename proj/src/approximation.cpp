#include "nakwide/approximation.hpp"

#include <algorithm>
#include <string>

#include "nakwide/error.hpp"

namespace nakwide::rep {

std::vector<IntervalSupport> all_intervals(const Algebra& algebra)
{
    std::vector<IntervalSupport> out;
    for (int a = 1; a <= algebra.m; ++a)
        for (int b = a; b <= algebra.m && b - a + 1 <= algebra.ell; ++b)
            out.push_back({a, b});
    return out;
}

std::set<IntervalSupport> f_supports(const AlgebraParams& params)
{
    std::set<IntervalSupport> out;
    for (int i = 1; i <= params.n(); ++i)
        out.insert(interval_of(params, {i}));
    return out;
}

namespace {

std::vector<Representation> f_modules(const AlgebraParams& params, const Algebra& algebra)
{
    std::vector<Representation> out;
    for (int q = 1; q <= params.n(); ++q)
        out.push_back(f_module(algebra, params, {q}));
    return out;
}

RepMorphism assemble(const std::vector<Representation>& summands, const std::vector<RepMorphism>& parts,
                     const Representation& target)
{
    if (parts.empty())
        return RepMorphism::zero(Representation::zero(target.algebra()), target);
    return from_sum(direct_sum(summands), parts);
}

bool approximates(const std::vector<Representation>& fmods, const RepMorphism& map)
{
    for (const auto& f : fmods) {
        const int needed = hom_space(f, map.target()).dimension;
        if (needed == 0)
            continue;
        if (postcomposition_rank(hom_space(f, map.source()), map) != needed)
            return false;
    }
    return true;
}

} // namespace

bool is_f_approximation(const AlgebraParams& params, const RepMorphism& map)
{
    return approximates(f_modules(params, map.target().algebra()), map);
}

FCover f_cover(const AlgebraParams& params, const Representation& x)
{
    const Algebra& algebra = x.algebra();
    const int n = params.n();
    const auto fmods = f_modules(params, algebra);
    std::vector<HomSpace> to_x;
    for (const auto& f : fmods)
        to_x.push_back(hom_space(f, x));

    // Generators of the functor Hom(-, X) on F modulo its radical: maps f_q -> X
    // not reachable as g o h with h : f_q -> f_r a non-isomorphism.
    std::vector<Representation> summands;
    std::vector<RepMorphism> parts;
    std::vector<IndecIndex> indices;
    for (int q = 1; q <= n; ++q) {
        const HomSpace& direct = to_x[std::size_t(q - 1)];
        if (direct.dimension == 0)
            continue;
        std::vector<Matrix> rows;
        for (int r = 1; r <= n; ++r) {
            if (r == q)
                continue;
            for (const auto& h : hom_space(fmods[std::size_t(q - 1)], fmods[std::size_t(r - 1)]).basis)
                for (const auto& g : to_x[std::size_t(r - 1)].basis)
                    rows.push_back(compose(g, h).coordinates());
        }
        const std::size_t width = direct.basis.front().coordinates().cols();
        std::size_t current = rows.empty() ? 0 : linalg::rank(linalg::vstack(rows, x.field(), width));
        for (const auto& b : direct.basis) {
            rows.push_back(b.coordinates());
            const std::size_t next = linalg::rank(linalg::vstack(rows, x.field(), width));
            if (next == current) {
                rows.pop_back();
                continue;
            }
            current = next;
            summands.push_back(fmods[std::size_t(q - 1)]);
            parts.push_back(b);
            indices.push_back({q});
        }
    }

    RepMorphism map = assemble(summands, parts, x);
    if (!approximates(fmods, map))
        throw Error(ErrorKind::PreconditionViolation, "F-cover construction failed to approximate");

    bool minimal = true;
    for (std::size_t drop = 0; drop < parts.size() && minimal; ++drop) {
        std::vector<Representation> s2;
        std::vector<RepMorphism> p2;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k == drop)
                continue;
            s2.push_back(summands[k]);
            p2.push_back(parts[k]);
        }
        if (approximates(fmods, assemble(s2, p2, x)))
            minimal = false;
    }
    Representation object = map.source();
    return {std::move(indices), std::move(object), std::move(map), minimal};
}

FResolution f_resolution(const AlgebraParams& params, const Representation& x)
{
    FResolution res;
    std::vector<RepMorphism> maps_right_to_left; // F_0 -> X, F_1 -> F_0, ...
    Representation current = x;
    std::optional<RepMorphism> previous_inclusion;
    while (!current.is_zero()) {
        if (int(res.covers.size()) == params.d())
            throw Error(ErrorKind::ResolutionOverflow,
                        "F-resolution needs more than d = " + std::to_string(params.d()) + " terms");
        FCover cover = f_cover(params, current);
        KernelResult kernel = kernel_rep(cover.map);
        if (previous_inclusion)
            maps_right_to_left.push_back(compose(*previous_inclusion, cover.map));
        else
            maps_right_to_left.push_back(cover.map);
        res.covers.push_back(std::move(cover));
        current = std::move(kernel.object);
        previous_inclusion = std::move(kernel.inclusion);
    }
    for (auto it = res.covers.rbegin(); it != res.covers.rend(); ++it)
        res.augmented.terms.push_back(it->object);
    res.augmented.terms.push_back(x);
    res.augmented.maps.assign(maps_right_to_left.rbegin(), maps_right_to_left.rend());
    return res;
}

bool verify_cluster_tilting(const AlgebraParams& params, std::uint32_t prime,
                            const std::set<IntervalSupport>& candidate)
{
    const Algebra algebra = algebra_for(params, prime);
    const auto intervals = all_intervals(algebra);
    for (const auto& c : candidate)
        if (std::find(intervals.begin(), intervals.end(), c) == intervals.end())
            return false;

    std::vector<Representation> modules;
    std::vector<ProjectiveResolution> resolutions;
    for (const auto& s : intervals) {
        modules.push_back(build_interval(algebra, s));
        resolutions.push_back(projective_resolution(modules.back()));
    }
    const std::size_t count = intervals.size();
    // perp[x][y]: Ext^k(x, y) = 0 for 1 <= k <= d-1
    std::vector<std::vector<bool>> perp(count, std::vector<bool>(count, true));
    if (params.d() >= 2) {
        for (std::size_t x = 0; x < count; ++x) {
            for (std::size_t y = 0; y < count; ++y) {
                const auto dims = ext_dims(resolutions[x], modules[y], params.d() - 1);
                perp[x][y] = std::all_of(dims.begin() + 1, dims.end(), [](int v) { return v == 0; });
            }
        }
    }
    std::set<IntervalSupport> left;
    std::set<IntervalSupport> right;
    for (std::size_t mod = 0; mod < count; ++mod) {
        bool in_left = true;
        bool in_right = true;
        for (std::size_t c = 0; c < count; ++c) {
            if (!candidate.contains(intervals[c]))
                continue;
            in_left = in_left && perp[c][mod];
            in_right = in_right && perp[mod][c];
        }
        if (in_left)
            left.insert(intervals[mod]);
        if (in_right)
            right.insert(intervals[mod]);
    }
    return left == candidate && right == candidate;
}

bool verify_cluster_tilting(const AlgebraParams& params, std::uint32_t prime)
{
    return verify_cluster_tilting(params, prime, f_supports(params));
}

HomExtTables hom_ext_tables(const AlgebraParams& params, std::uint32_t prime)
{
    const Algebra algebra = algebra_for(params, prime);
    const auto fmods = f_modules(params, algebra);
    const std::size_t n = fmods.size();
    const int d = params.d();
    HomExtTables t;
    t.hom.assign(n, std::vector<int>(n, 0));
    t.ext_d.assign(n, std::vector<int>(n, 0));
    t.ext.assign(std::size_t(d + 1), std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    for (std::size_t i = 0; i < n; ++i) {
        const auto res = projective_resolution(fmods[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const auto dims = ext_dims(res, fmods[j], d);
            t.hom[i][j] = hom_space(fmods[i], fmods[j]).dimension;
            for (int k = 0; k <= d; ++k)
                t.ext[std::size_t(k)][i][j] = dims[std::size_t(k)];
            t.ext_d[i][j] = dims[std::size_t(d)];
        }
    }
    return t;
}

} // namespace nakwide::rep
