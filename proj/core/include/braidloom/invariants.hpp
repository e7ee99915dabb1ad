#pragma once

#include <string>

#include "braidloom/braid.hpp"
#include "braidloom/laurent.hpp"

namespace braidloom {

/// Number of components of the closure: cycles of the permutation.
int closure_components(const BraidWord& w);

/// Sum of the letter signs.
int writhe(const BraidWord& w);

/// Jones polynomial of the closure as a polynomial in A, with t = A^-4 (so
/// t^k is A^(-4k)). Kauffman bracket state sum, writhe normalized, unknot = 1.
/// Throws ResourceLimit above Limits::jones_max_crossings letters.
OneVarLaurent jones_via_bracket(const BraidWord& w);

/// HOMFLY polynomial P(v, z) of the closure, v^-1 P(L+) - v P(L-) = z P(L0),
/// P(unknot) = 1. Hecke algebra on the permutation basis with the Ocneanu
/// trace. Throws ResourceLimit above the strand or length caps.
TwoVarLaurent homfly(const BraidWord& w);

/// P(mirror L)(v, z) = P(L)(v^-1, -z).
TwoVarLaurent homfly_mirror(const TwoVarLaurent& p);

/// Specializes v = A^-4, z = A^-2 - A^2. Agrees with jones_via_bracket.
OneVarLaurent jones_from_homfly(const TwoVarLaurent& p);

/// Half the v-degree spread plus one: lower bound for the braid index.
int mfw_bound(const TwoVarLaurent& p);

std::string jones_to_string(const OneVarLaurent& p);
std::string homfly_to_string(const TwoVarLaurent& p);

}  // namespace braidloom
