#pragma once

#include <cstddef>

#include "homalg/hom_structures.hpp"

namespace homalg::examples {

// Group algebra of the cyclic group of order n, basis g^0 .. g^{n-1}, alpha = id.
HomHopfAlgebra cyclic_group_algebra(std::size_t n);
// Algebra automorphism g^a -> g^{r a mod n}.
LinearMap cyclic_power_map(std::size_t n, std::size_t r);
// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx.
HomHopfAlgebra sweedler();
// g -> g, x -> c x; a Hopf automorphism for every nonzero c.
LinearMap sweedler_scale_map(const Scalar& c);

HomHopfAlgebra kc2();
// kC4 twisted by g -> g^3.
HomHopfAlgebra twisted_kc4();
// Sweedler algebra twisted by x -> c x.
HomHopfAlgebra twisted_sweedler(const Scalar& c = -1);
// The ground field as a one-dimensional Hopf algebra.
HomHopfAlgebra ground_field();

}  // namespace homalg::examples
