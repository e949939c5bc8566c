#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nakwide/model.hpp"
#include "nakwide/wide.hpp"

// Reduction of an ell-periodic subcategory W to the smaller algebra
// End(s) = Phi_{m', ell'}, and the checks that make W wide.
namespace nakwide::reduction {

struct ReductionProfile {
    int ell_prime = 0;
    int m_prime = 0;
    /// Increasing map {1..m'+ell'-1} -> {1..n}; iota[k] is the image of k+1.
    std::vector<IndecIndex> iota;
    /// iota(1), ..., iota(m'): the summands s_1, ..., s_{m'} of s.
    std::vector<IndecIndex> s_indices;

    IndecIndex image(int i_prime) const { return iota.at(std::size_t(i_prime - 1)); }
    /// (m', ell', d); throws like validate_params when the profile is inconsistent.
    AlgebraParams reduced_params(const AlgebraParams& params) const;
};

/// NotPeriodic unless W is ell-periodic.
ReductionProfile periodic_profile(const AlgebraParams& params, wide::Subcat w);

/// End(s) has the Hom pattern and factorisations of Phi_{m', ell'}: checked by the
/// closed form and by composing rep-engine basis maps.
bool verify_gamma_iso(const AlgebraParams& params, const ReductionProfile& profile, std::uint32_t prime = 2);

struct ConditionResult {
    bool passed = false;
    std::string detail;
    std::optional<int> offending_index;
};

struct ThmBReport {
    /// (i) finite projective dimension of s, (ii) Ext^{>=1}(s, s) = 0,
    /// (iii) add(s)-resolutions of the members of W, (iv) Hom(s, W) is the
    /// d-cluster tilting subcategory of mod End(s).
    std::array<ConditionResult, 4> conditions;

    bool all_passed() const noexcept;
};

ThmBReport thmB_conditions(const AlgebraParams& params, const ReductionProfile& profile, std::uint32_t prime = 2);

/// (dim Hom(s_1, f_w), ..., dim Hom(s_{m'}, f_w)). NotMember unless w is in W.
std::vector<int> hom_s_image(const AlgebraParams& params, const ReductionProfile& profile, IndecIndex w,
                             std::uint32_t prime = 2);

/// Dimension vector of the interval module f_i over Phi_{m, ell}.
std::vector<int> dimension_vector(const AlgebraParams& params, IndecIndex i);

struct HomImageRow {
    IndecIndex w;
    int reduced_index = 0;
    std::vector<int> image;
    bool matches = false;
};

/// hom_s_image for every member of W against f'_{i'} over Phi_{m', ell'}.
std::vector<HomImageRow> hom_image_table(const AlgebraParams& params, const ReductionProfile& profile,
                                         std::uint32_t prime = 2);

} // namespace nakwide::reduction
