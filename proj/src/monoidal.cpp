#include "homalg/monoidal.hpp"

namespace homalg {

namespace {

void add_matrix_identity(CheckReport& r, std::string id, const LinearMap& lhs, const LinearMap& rhs) {
  r.compare(std::move(id), Wiring({lhs.dom()}).map(0, lhs), Wiring({rhs.dom()}).map(0, rhs));
}

}  // namespace

LinearMap associator(MonoidalContext ctx, const ObjectWithAut& x, const ObjectWithAut& y, const ObjectWithAut& z) {
  return kron({x.alpha_pow(ctx.i + 1), LinearMap::identity(y.dim()), z.alpha_pow(-ctx.j - 1)});
}

LinearMap associator_inverse(MonoidalContext ctx, const ObjectWithAut& x, const ObjectWithAut& y,
                             const ObjectWithAut& z) {
  return kron({x.alpha_pow(-ctx.i - 1), LinearMap::identity(y.dim()), z.alpha_pow(ctx.j + 1)});
}

LinearMap unit_left(MonoidalContext ctx, const ObjectWithAut& x) { return x.alpha_pow(ctx.j + 1); }
LinearMap unit_left_inverse(MonoidalContext ctx, const ObjectWithAut& x) { return x.alpha_pow(-ctx.j - 1); }
LinearMap unit_right(MonoidalContext ctx, const ObjectWithAut& x) { return x.alpha_pow(ctx.i + 1); }
LinearMap unit_right_inverse(MonoidalContext ctx, const ObjectWithAut& x) { return x.alpha_pow(-ctx.i - 1); }

CheckReport check_pentagon(MonoidalContext ctx, const ObjectWithAut& w, const ObjectWithAut& x,
                           const ObjectWithAut& y, const ObjectWithAut& z) {
  CheckReport r("pentagon");
  const auto wx = tensor(w, x), xy = tensor(x, y), yz = tensor(y, z);
  LinearMap top = compose(associator(ctx, w, x, yz), associator(ctx, wx, y, z));
  LinearMap bottom = compose({kron(LinearMap::identity(w.dim()), associator(ctx, x, y, z)), associator(ctx, w, xy, z),
                              kron(associator(ctx, w, x, y), LinearMap::identity(z.dim()))});
  add_matrix_identity(r, "pentagon", top, bottom);
  return r;
}

CheckReport check_triangle(MonoidalContext ctx, const ObjectWithAut& x, const ObjectWithAut& y) {
  CheckReport r("triangle");
  const ObjectWithAut unit;
  LinearMap lhs = compose(kron(LinearMap::identity(x.dim()), unit_left(ctx, y)), associator(ctx, x, unit, y));
  add_matrix_identity(r, "triangle", lhs, kron(unit_right(ctx, x), LinearMap::identity(y.dim())));
  return r;
}

}  // namespace homalg
