#include "nakwide/wide.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "nakwide/calculus.hpp"
#include "nakwide/error.hpp"

namespace nakwide::wide {

namespace {

std::uint32_t full_mask(const AlgebraParams& params)
{
    return params.n() >= 32 ? ~0u : ((1u << params.n()) - 1u);
}

std::uint32_t bit(int i) { return 1u << (i - 1); }

std::uint32_t mask_of(const std::vector<Slot>& slots)
{
    std::uint32_t mask = 0;
    for (const auto& s : slots)
        if (s)
            mask |= bit(s->value);
    return mask;
}

} // namespace

Subcat Subcat::from_indices(const AlgebraParams& params, const std::vector<int>& indices)
{
    std::uint32_t bits = 0;
    for (int i : indices) {
        require_index(params, {i});
        bits |= bit(i);
    }
    return Subcat(bits);
}

Subcat Subcat::full(const AlgebraParams& params) { return Subcat(full_mask(params)); }

int Subcat::size() const noexcept { return std::popcount(bits_); }

std::vector<int> Subcat::members() const
{
    std::vector<int> out;
    for (int i = 1; i <= 32; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

std::string_view to_string(WideKind kind) noexcept
{
    switch (kind) {
    case WideKind::Semisimple: return "semisimple";
    case WideKind::Periodic: return "l-periodic";
    case WideKind::NotWide: return "not-wide";
    }
    return "unknown";
}

std::string_view to_string(Clause clause) noexcept
{
    switch (clause) {
    case Clause::Kernel: return "i";
    case Clause::Cokernel: return "ii";
    case Clause::Extension: return "iii";
    }
    return "?";
}

void require_subcat(const AlgebraParams& params, Subcat w)
{
    if ((w.bits() & ~full_mask(params)) != 0)
        throw Error(ErrorKind::RangeError, "subcategory has members outside 1.." + std::to_string(params.n()));
}

bool is_semisimple(const AlgebraParams& params, Subcat w)
{
    require_subcat(params, w);
    for (int k = 1; k < params.ell(); ++k)
        if ((w.bits() & (w.bits() >> k)) != 0)
            return false;
    return true;
}

bool semisimple_wide(const AlgebraParams& params, Subcat w)
{
    if (!is_semisimple(params, w))
        throw Error(ErrorKind::PreconditionViolation, "subcategory is not semisimple");
    const auto members = w.members();
    if (members.empty())
        return true;
    // Members are pairwise >= ell apart already; only the spread can break it.
    return members.back() - members.front() <= params.m() - 1;
}

bool is_l_periodic(const AlgebraParams& params, Subcat w)
{
    if (is_semisimple(params, w))
        return false;
    const std::uint32_t up = (w.bits() << params.ell()) & full_mask(params);
    const std::uint32_t down = w.bits() >> params.ell();
    return (up & ~w.bits()) == 0 && (down & ~w.bits()) == 0;
}

bool cyclic_distance_view(const AlgebraParams& params, Subcat w)
{
    if (!is_semisimple(params, w))
        throw Error(ErrorKind::PreconditionViolation, "subcategory is not semisimple");
    const int n = params.n();
    const auto members = w.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const int diff = members[b] - members[a];
            if (std::min(diff, n - diff) < params.ell())
                return false;
        }
    }
    return true;
}

std::uint64_t count_nonsemisimple_formula(int ell)
{
    return (std::uint64_t(1) << ell) - std::uint64_t(ell) - 1;
}

std::uint64_t count_nonsemisimple_formula(const AlgebraParams& params)
{
    return count_nonsemisimple_formula(params.ell());
}

ClosureTables::ClosureTables(const AlgebraParams& params) : params_(params)
{
    const int n = params.n();
    pairs_.resize(std::size_t(n * n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            PairMasks& p = pairs_[std::size_t((i - 1) * n + (j - 1))];
            if (i != j && calc::hom_dim(params, {i}, {j}) == 1) {
                p.hom = true;
                p.kernel = mask_of(calc::minimal_d_kernel(params, {i}, {j}));
                p.cokernel = mask_of(calc::minimal_d_cokernel(params, {i}, {j}));
            }
            if (calc::ext_d_dim(params, {i}, {j}) == 1) {
                p.ext = true;
                const auto terms = calc::canonical_ext_representative(params, {i}, {j});
                for (std::size_t k = 1; k + 1 < terms.size(); ++k)
                    p.extension |= bit(terms[k].value);
            }
        }
    }
}

Witness ClosureTables::make_witness(Clause clause, int i, int j, std::uint32_t required, Subcat w) const
{
    Witness witness{clause, {i}, {j}, {}};
    for (int q : Subcat(required & ~w.bits()).members())
        witness.missing.push_back({q});
    return witness;
}

std::optional<Witness> ClosureTables::first_violation(Subcat w) const
{
    const int n = params_.n();
    const std::uint32_t bits = w.bits();
    for (int i = 1; i <= n; ++i) {
        if (!w.contains(i))
            continue;
        for (int j = 1; j <= n; ++j) {
            if (!w.contains(j))
                continue;
            const PairMasks& p = at(i, j);
            if (!p.hom)
                continue;
            if ((p.kernel & ~bits) != 0)
                return make_witness(Clause::Kernel, i, j, p.kernel, w);
            if ((p.cokernel & ~bits) != 0)
                return make_witness(Clause::Cokernel, i, j, p.cokernel, w);
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (!w.contains(i))
            continue;
        for (int j = 1; j <= n; ++j) {
            if (!w.contains(j))
                continue;
            const PairMasks& p = at(i, j);
            if (p.ext && (p.extension & ~bits) != 0)
                return make_witness(Clause::Extension, i, j, p.extension, w);
        }
    }
    return std::nullopt;
}

bool ClosureTables::closed_under_kernels_and_cokernels(Subcat w) const
{
    const int n = params_.n();
    const std::uint32_t bits = w.bits();
    for (int i = 1; i <= n; ++i) {
        if (!w.contains(i))
            continue;
        for (int j = i + 1; j <= n; ++j) {
            if (!w.contains(j))
                continue;
            const PairMasks& p = at(i, j);
            if (p.hom && ((p.kernel | p.cokernel) & ~bits) != 0)
                return false;
        }
    }
    return true;
}

WideVerdict wide_fast(const ClosureTables& tables, Subcat w)
{
    const AlgebraParams& params = tables.params();
    if (is_semisimple(params, w)) {
        if (semisimple_wide(params, w))
            return {true, WideKind::Semisimple, std::nullopt};
        // Offending pair: the extremes are more than m - 1 apart.
        const auto members = w.members();
        const int i = members.back();
        const int j = members.front();
        auto terms = calc::canonical_ext_representative(params, {i}, {j});
        std::uint32_t middle = 0;
        for (std::size_t k = 1; k + 1 < terms.size(); ++k)
            middle |= bit(terms[k].value);
        Witness witness{Clause::Extension, {i}, {j}, {}};
        for (int q : Subcat(middle & ~w.bits()).members())
            witness.missing.push_back({q});
        return {false, WideKind::NotWide, std::move(witness)};
    }
    if (is_l_periodic(params, w))
        return {true, WideKind::Periodic, std::nullopt};
    // Not periodic: some minimal d-kernel or d-cokernel escapes W.
    auto witness = tables.first_violation(w);
    if (!witness || witness->clause == Clause::Extension)
        throw Error(ErrorKind::PreconditionViolation,
                    "non-periodic subcategory closed under minimal d-kernels and d-cokernels");
    return {false, WideKind::NotWide, std::move(witness)};
}

WideVerdict wide_fast(const AlgebraParams& params, Subcat w) { return wide_fast(ClosureTables(params), w); }

WideVerdict wide_bruteforce(const ClosureTables& tables, Subcat w)
{
    require_subcat(tables.params(), w);
    if (auto witness = tables.first_violation(w))
        return {false, WideKind::NotWide, std::move(witness)};
    const WideKind kind = is_semisimple(tables.params(), w) ? WideKind::Semisimple : WideKind::Periodic;
    return {true, kind, std::nullopt};
}

WideVerdict wide_bruteforce(const AlgebraParams& params, Subcat w)
{
    return wide_bruteforce(ClosureTables(params), w);
}

namespace {

struct Partial {
    std::vector<Subcat> wide;
    std::uint64_t checked = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t closed_but_not_periodic = 0;
};

// Boolean form of wide_fast without witness construction.
bool fast_is_wide(const AlgebraParams& params, Subcat w)
{
    if (is_semisimple(params, w))
        return semisimple_wide(params, w);
    return is_l_periodic(params, w);
}

void scan(const ClosureTables& tables, std::uint64_t begin, std::uint64_t end, Partial& out)
{
    const AlgebraParams& params = tables.params();
    for (std::uint64_t bits = begin; bits < end; ++bits) {
        const Subcat w(static_cast<std::uint32_t>(bits));
        const bool brute = !tables.first_violation(w).has_value();
        const bool fast = fast_is_wide(params, w);
        if (brute != fast)
            ++out.disagreements;
        if (brute)
            out.wide.push_back(w);
        if (!is_semisimple(params, w) && tables.closed_under_kernels_and_cokernels(w) && !is_l_periodic(params, w))
            ++out.closed_but_not_periodic;
        ++out.checked;
    }
}

} // namespace

EnumerationResult enumerate_wide(const AlgebraParams& params, const EnumerationOptions& options)
{
    if (params.n() > options.enum_bound || params.n() > 30)
        throw Error(ErrorKind::EnumerationBoundExceeded,
                    "n = " + std::to_string(params.n()) + " exceeds enumeration bound "
                        + std::to_string(std::min(options.enum_bound, 30)));
    const ClosureTables tables(params);
    const std::uint64_t total = std::uint64_t(1) << params.n();
    const int workers = std::max(1, options.workers);
    std::vector<Partial> partials(static_cast<std::size_t>(workers));
    {
        std::vector<std::jthread> threads;
        for (int k = 0; k < workers; ++k) {
            const std::uint64_t begin = total * std::uint64_t(k) / std::uint64_t(workers);
            const std::uint64_t end = total * std::uint64_t(k + 1) / std::uint64_t(workers);
            threads.emplace_back([&tables, begin, end, &slot = partials[std::size_t(k)]] { scan(tables, begin, end, slot); });
        }
    }
    EnumerationResult result;
    for (auto& p : partials) {
        result.wide.insert(result.wide.end(), p.wide.begin(), p.wide.end());
        result.subsets_checked += p.checked;
        result.disagreements += p.disagreements;
        result.closed_but_not_periodic += p.closed_but_not_periodic;
    }
    std::sort(result.wide.begin(), result.wide.end());
    for (const auto& w : result.wide)
        (is_semisimple(params, w) ? result.semisimple : result.nonsemisimple).push_back(w);
    return result;
}

} // namespace nakwide::wide
