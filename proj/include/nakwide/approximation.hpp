#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "nakwide/model.hpp"
#include "nakwide/rep.hpp"

// Subcategory-level oracles on top of the representation engine: covers by
// add(F), F-resolutions, cluster tilting verification and Hom/Ext tables.
namespace nakwide::rep {

/// All indecomposable modules of the Nakayama algebra: intervals [a, b] with
/// b - a + 1 <= ell, ordered by (a, b).
std::vector<IntervalSupport> all_intervals(const Algebra& algebra);

/// Right F-approximation F -> X with F in add(F).
struct FCover {
    /// f-indices of the indecomposable summands of F, ascending, with multiplicity.
    std::vector<IndecIndex> summands;
    Representation object;
    RepMorphism map;
    /// No single summand can be dropped while keeping the approximation property.
    bool right_minimal = false;
};

/// Every map f_q -> X factors through `map` (checked for all q).
bool is_f_approximation(const AlgebraParams& params, const RepMorphism& map);

FCover f_cover(const AlgebraParams& params, const Representation& x);

struct FResolution {
    /// F_0, F_1, ..., F_L as covers of the successive kernels.
    std::vector<FCover> covers;
    /// 0 -> F_L -> ... -> F_0 -> X -> 0 as a left-to-right sequence.
    ComplexOfReps augmented;

    int length() const noexcept { return int(covers.size()) - 1; }
};

/// Iterated F-covers of kernels. Throws ResolutionOverflow when more than d
/// nonaugmented terms (F_0 .. F_{d-1}) would be needed.
FResolution f_resolution(const AlgebraParams& params, const Representation& x);

/// Checks that `candidate` equals both perpendicular categories
/// { M : Ext^{1..d-1}(candidate, M) = 0 } and { M : Ext^{1..d-1}(M, candidate) = 0 }
/// among all indecomposable modules.
bool verify_cluster_tilting(const AlgebraParams& params, std::uint32_t prime,
                            const std::set<IntervalSupport>& candidate);
/// Same, for the subcategory {f_1, ..., f_{m+ell-1}}.
bool verify_cluster_tilting(const AlgebraParams& params, std::uint32_t prime = 2);

std::set<IntervalSupport> f_supports(const AlgebraParams& params);

/// Dense tables indexed by f-indices (row i-1, column j-1).
struct HomExtTables {
    std::vector<std::vector<int>> hom;
    std::vector<std::vector<int>> ext_d;
    /// ext[k][i-1][j-1] = dim Ext^k(f_i, f_j) for k = 0..d.
    std::vector<std::vector<std::vector<int>>> ext;
};

HomExtTables hom_ext_tables(const AlgebraParams& params, std::uint32_t prime = 2);

} // namespace nakwide::rep
