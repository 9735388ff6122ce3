#pragma once

#include "homalg/check_report.hpp"
#include "homalg/hom_structures.hpp"

namespace homalg {

// Parameters (i, j) of the twisted category of spaces with automorphisms:
// a(x (x) y (x) z) = alpha^{i+1}(x) (x) y (x) alpha^{-j-1}(z), l = alpha^{j+1}, r = alpha^{i+1}.
struct MonoidalContext {
  int i = 0;
  int j = 0;
};

LinearMap associator(MonoidalContext ctx, const ObjectWithAut& x, const ObjectWithAut& y, const ObjectWithAut& z);
LinearMap associator_inverse(MonoidalContext ctx, const ObjectWithAut& x, const ObjectWithAut& y,
                             const ObjectWithAut& z);
LinearMap unit_left(MonoidalContext ctx, const ObjectWithAut& x);
LinearMap unit_left_inverse(MonoidalContext ctx, const ObjectWithAut& x);
LinearMap unit_right(MonoidalContext ctx, const ObjectWithAut& x);
LinearMap unit_right_inverse(MonoidalContext ctx, const ObjectWithAut& x);

CheckReport check_pentagon(MonoidalContext ctx, const ObjectWithAut& w, const ObjectWithAut& x,
                           const ObjectWithAut& y, const ObjectWithAut& z);
CheckReport check_triangle(MonoidalContext ctx, const ObjectWithAut& x, const ObjectWithAut& y);

}  // namespace homalg
