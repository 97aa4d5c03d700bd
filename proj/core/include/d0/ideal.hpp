#pragma once

#include "d0/ncsf.hpp"

namespace d0 {

// Largest ambient dimension N^d accepted by irkst_membership.
inline constexpr long kMembershipCap = 15625;  // 5^6

// h_X = v bac w - v bca w - v acb w + v cab w for letters a < b < c.
WordVector kr_generator(const Word& v, int a, int b, int c, const Word& w);

// Decides g in I_rkst (degree-d part over [N]) over the rationals.
bool irkst_membership(const WordVector& g, int N);

}  // namespace d0
