#pragma once

#include <vector>

#include "nakwide/model.hpp"

// Closed-form calculus on the cluster tilting subcategory F = add(f_1 ... f_n).
// Every rule here is cross-checked against the representation engine in tests.
namespace nakwide::calc {

/// 1 iff 0 <= j - i <= ell - 1.
int hom_dim(const AlgebraParams& params, IndecIndex i, IndecIndex j);

/// Whether the nonzero map f_i -> f_j factors through f_q, i.e. i <= q <= j.
/// PreconditionViolation when Hom(f_i, f_j) = 0.
bool factors_through(const AlgebraParams& params, IndecIndex i, IndecIndex q, IndecIndex j);

/// The nonzero map f_i -> f_j is injective iff j <= ell, surjective iff i >= m.
/// The identity (i == j) is both. PreconditionViolation when Hom(f_i, f_j) = 0.
bool is_mono(const AlgebraParams& params, IndecIndex i, IndecIndex j);
bool is_epi(const AlgebraParams& params, IndecIndex i, IndecIndex j);

/// f_{i+m}, defined for 1 <= i <= ell - 1 (DomainError otherwise).
IndecIndex tau_d_inverse(const AlgebraParams& params, IndecIndex i);

/// dim Ext^d(f_i, f_j): 1 iff i - j >= m.
int ext_d_dim(const AlgebraParams& params, IndecIndex i, IndecIndex j);

/// The nonzero part of the complex ... f_{i-ell} -> f_{j-ell} -> f_i -> f_j ->
/// f_{i+ell} -> f_{j+ell} ... built from mu : f_i -> f_j. The terms interleave
/// the progressions i + r*ell and j + r*ell and are increasing.
struct DWindow {
    /// d + 2 consecutive terms; nullopt marks a zero object.
    std::vector<Slot> slots;
    /// Position of f_i (the source of mu) inside `slots`.
    int mu_position = 0;

    int nonzero_count() const;
    std::vector<IndecIndex> nonzero() const;
};

/// Term k of the interleaved progression through (i, j): k = 0 is i, k = 1 is j,
/// k = 2 is i + ell, k = -1 is j - ell, and so on. May be out of range.
int interleaved_term(const AlgebraParams& params, IndecIndex i, IndecIndex j, int k);

/// PreconditionViolation unless Hom(f_i, f_j) != 0 and i != j.
DWindow e_complex(const AlgebraParams& params, IndecIndex i, IndecIndex j);

/// The d terms left of f_i, left to right.
std::vector<Slot> minimal_d_kernel(const AlgebraParams& params, IndecIndex i, IndecIndex j);
/// The d terms right of f_j, left to right.
std::vector<Slot> minimal_d_cokernel(const AlgebraParams& params, IndecIndex i, IndecIndex j);

/// Terms j, j+t, j+ell, j+ell+t, ..., i (t = i - j - m + 1) of a d-exact sequence
/// 0 -> f_j -> ... -> f_i -> 0 representing the nonzero class in Ext^d(f_i, f_j).
/// NoExtension when ext_d_dim(i, j) = 0.
std::vector<IndecIndex> canonical_ext_representative(const AlgebraParams& params, IndecIndex i, IndecIndex j);

} // namespace nakwide::calc
