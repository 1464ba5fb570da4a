#ifndef HILBERT_HODGE_KUNNETH_HPP
#define HILBERT_HODGE_KUNNETH_HPP

#include <vector>

#include "hilbert_hodge/model.hpp"
#include "hilbert_hodge/sheaf_matrix.hpp"

namespace hilbert_hodge {

/// C_I = (x)_{i in I} L_i^{m_i+2} (x) (x)_{i not in I} L_i^{-m_i}.
LineBundleMonomial sheaf_monomial(const std::vector<int>& m, SubsetMask subset);

/// Closed form of the cohomology sheaves: C_I sits at (|m_I| + |I|, |I|) for
/// every subset I of {1..n}, each with multiplicity one.
SheafMatrix cohomology_sheaf_closed_form(const LocalSystemSpec& spec);

/// Sheaf matrix of the zero-dimensional factor: one empty monomial at (0, 0).
SheafMatrix trivial_sheaf_matrix();

/// Künneth product. The factors' index sets are disjoint, so the monomials
/// of `a` and `b` are concatenated and (P, l) add.
SheafMatrix kunneth_product(const SheafMatrix& a, const SheafMatrix& b);

/// N(m, P) = #{I : |m_I| + |I| = P}, by pruned enumeration of subsets.
Integer count_N(const std::vector<int>& m, long P);

/// Coefficients of prod_i (1 + x^{m_i + 1}); entry P equals N(m, P).
std::vector<Integer> count_N_generating(const std::vector<int>& m);

}  // namespace hilbert_hodge

#endif  // HILBERT_HODGE_KUNNETH_HPP
