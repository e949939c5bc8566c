#pragma once

#include <compare>
#include <optional>
#include <ostream>

namespace nakwide {

/// Index i of the indecomposable f_i of the cluster tilting subcategory.
/// Numbering is 1-based; validity is always relative to an AlgebraParams.
struct IndecIndex {
    int value = 0;

    friend constexpr auto operator<=>(IndecIndex, IndecIndex) = default;
    friend std::ostream& operator<<(std::ostream& os, IndecIndex i) { return os << 'f' << i.value; }
};

/// A possibly-zero object of the subcategory. `std::nullopt` is the zero module,
/// which is how out-of-range indices (q <= 0 or q >= m + ell) are represented.
using Slot = std::optional<IndecIndex>;

/// Support [a, b] of an interval module over the linear quiver m -> ... -> 1.
struct IntervalSupport {
    int a = 1;
    int b = 1;

    int length() const noexcept { return b - a + 1; }
    friend constexpr auto operator<=>(const IntervalSupport&, const IntervalSupport&) = default;
};

/// Validated triple (m, ell, d) for the Nakayama algebra kQ/(rad kQ)^ell with
/// Q = (m -> ... -> 1) and its d-cluster tilting subcategory. Construct with
/// `validate_params`.
class AlgebraParams {
public:
    int m() const noexcept { return m_; }
    int ell() const noexcept { return ell_; }
    int d() const noexcept { return d_; }
    /// Number of indecomposables m + ell - 1.
    int n() const noexcept { return m_ + ell_ - 1; }

    bool in_range(int i) const noexcept { return i >= 1 && i <= n(); }
    bool in_range(IndecIndex i) const noexcept { return in_range(i.value); }

    /// Index if in 1..n, otherwise the zero object.
    Slot slot(int i) const noexcept { return in_range(i) ? Slot{IndecIndex{i}} : std::nullopt; }

    friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

private:
    AlgebraParams(int m, int ell, int d) : m_(m), ell_(ell), d_(d) {}
    friend AlgebraParams validate_params(int m, int ell, int d);

    int m_;
    int ell_;
    int d_;
};

/// Throws Error with kind RangeError, NonIntegralRatio or ParityViolation.
AlgebraParams validate_params(int m, int ell, int d);

/// Throws RangeError unless 1 <= i <= n.
void require_index(const AlgebraParams& params, IndecIndex i);

/// [max(1, i - ell + 1), min(i, m)].
IntervalSupport interval_of(const AlgebraParams& params, IndecIndex i);

/// f_i = p_i for i <= m.
bool is_projective(const AlgebraParams& params, IndecIndex i);
/// f_i is injective iff i >= ell (p_i = q_{i-ell+1} for ell <= i <= m).
bool is_injective(const AlgebraParams& params, IndecIndex i);

/// Inverse of interval_of on the supports of the f_i; nullopt if [a, b] is not one.
std::optional<IndecIndex> index_of_interval(const AlgebraParams& params, IntervalSupport support);

} // namespace nakwide
