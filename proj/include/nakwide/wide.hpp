#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nakwide/model.hpp"

namespace nakwide::wide {

/// Additive subcategory add{f_i : i in members} of F, as a bitset (bit i-1 for f_i).
class Subcat {
public:
    Subcat() = default;
    explicit Subcat(std::uint32_t bits) : bits_(bits) {}

    /// RangeError for indices outside 1..n.
    static Subcat from_indices(const AlgebraParams& params, const std::vector<int>& indices);
    static Subcat full(const AlgebraParams& params);

    std::uint32_t bits() const noexcept { return bits_; }
    bool contains(int i) const noexcept { return i >= 1 && i <= 32 && (bits_ >> (i - 1)) & 1u; }
    bool contains(IndecIndex i) const noexcept { return contains(i.value); }
    bool empty() const noexcept { return bits_ == 0; }
    int size() const noexcept;
    /// Ascending.
    std::vector<int> members() const;

    friend auto operator<=>(Subcat, Subcat) = default;

private:
    std::uint32_t bits_ = 0;
};

enum class WideKind { Semisimple, Periodic, NotWide };
std::string_view to_string(WideKind kind) noexcept;

/// Clause of the wideness definition: closure under d-kernels, d-cokernels,
/// and d-extensions.
enum class Clause { Kernel = 1, Cokernel = 2, Extension = 3 };
std::string_view to_string(Clause clause) noexcept;

struct Witness {
    Clause clause = Clause::Kernel;
    /// The morphism f_source -> f_target (clauses i, ii) or the extension pair
    /// Ext^d(f_source, f_target) (clause iii).
    IndecIndex source;
    IndecIndex target;
    /// Required terms absent from the subcategory.
    std::vector<IndecIndex> missing;
};

struct WideVerdict {
    bool is_wide = false;
    WideKind kind = WideKind::NotWide;
    std::optional<Witness> witness;
};

/// Throws RangeError if W has members outside 1..n.
void require_subcat(const AlgebraParams& params, Subcat w);

/// All distinct members satisfy |i - j| >= ell.
bool is_semisimple(const AlgebraParams& params, Subcat w);
/// For semisimple W: all distinct members satisfy ell <= |i - j| <= m - 1.
bool semisimple_wide(const AlgebraParams& params, Subcat w);
/// Not semisimple, and closed under in-range shifts by multiples of ell.
bool is_l_periodic(const AlgebraParams& params, Subcat w);
/// For semisimple W: pairwise distance on the n-cycle is at least ell.
bool cyclic_distance_view(const AlgebraParams& params, Subcat w);

/// 2^ell - ell - 1.
std::uint64_t count_nonsemisimple_formula(int ell);
std::uint64_t count_nonsemisimple_formula(const AlgebraParams& params);

/// Precomputed closure requirements for every pair of indecomposables, shared by
/// the brute-force checker. Immutable after construction.
class ClosureTables {
public:
    explicit ClosureTables(const AlgebraParams& params);

    const AlgebraParams& params() const noexcept { return params_; }

    /// First violated clause in canonical order, or nullopt if W is wide.
    std::optional<Witness> first_violation(Subcat w) const;
    /// Clauses (i) and (ii) only.
    bool closed_under_kernels_and_cokernels(Subcat w) const;

private:
    struct PairMasks {
        std::uint32_t kernel = 0;
        std::uint32_t cokernel = 0;
        std::uint32_t extension = 0;
        bool hom = false;
        bool ext = false;
    };

    const PairMasks& at(int i, int j) const { return pairs_[std::size_t((i - 1) * params_.n() + (j - 1))]; }
    Witness make_witness(Clause clause, int i, int j, std::uint32_t required, Subcat w) const;

    AlgebraParams params_;
    std::vector<PairMasks> pairs_;
};

/// Semisimple and periodicity rules.
WideVerdict wide_fast(const AlgebraParams& params, Subcat w);
WideVerdict wide_fast(const ClosureTables& tables, Subcat w);

/// Direct check of the three closure clauses on indecomposable morphisms and
/// extension pairs using the calculus' minimal d-kernels, d-cokernels and
/// canonical extension representatives.
WideVerdict wide_bruteforce(const AlgebraParams& params, Subcat w);
WideVerdict wide_bruteforce(const ClosureTables& tables, Subcat w);

inline constexpr int kDefaultEnumerationBound = 24;

struct EnumerationOptions {
    int enum_bound = kDefaultEnumerationBound;
    int workers = 1;
};

struct EnumerationResult {
    /// Every wide subcategory per the brute-force check, ascending by bitset.
    std::vector<Subcat> wide;
    /// Partition of `wide` into semisimple and non-semisimple members.
    std::vector<Subcat> semisimple;
    std::vector<Subcat> nonsemisimple;
    std::uint64_t subsets_checked = 0;
    /// Subsets on which brute force and the fast rules disagree.
    std::uint64_t disagreements = 0;
    /// Non-semisimple subsets closed under minimal d-kernels and d-cokernels
    /// that are not ell-periodic.
    std::uint64_t closed_but_not_periodic = 0;

    bool agreement() const noexcept { return disagreements == 0; }
    std::uint64_t nonsemisimple_count() const noexcept { return nonsemisimple.size(); }
};

/// Exhaustive census over all 2^n subsets. EnumerationBoundExceeded if n > enum_bound.
EnumerationResult enumerate_wide(const AlgebraParams& params, const EnumerationOptions& options = {});

} // namespace nakwide::wide
