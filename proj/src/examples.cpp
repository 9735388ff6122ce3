#include "homalg/examples.hpp"

namespace homalg::examples {

HomHopfAlgebra cyclic_group_algebra(std::size_t n) {
  LinearMap mult(n, n * n), comult(n * n, n), unit(n, 1), counit(1, n), antipode(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult((a + b) % n, a * n + b) = 1;
    comult(a * n + a, a) = 1;
    counit(0, a) = 1;
    antipode((n - a) % n, a) = 1;
  }
  unit(0, 0) = 1;
  ObjectWithAut carrier = ObjectWithAut::plain(n);
  return HomHopfAlgebra(HomBialgebra(HomAlgebra(carrier, mult, unit), HomCoalgebra(carrier, comult, counit)), antipode);
}

LinearMap cyclic_power_map(std::size_t n, std::size_t r) {
  LinearMap m(n, n);
  for (std::size_t a = 0; a < n; ++a) m((r * a) % n, a) = 1;
  return m;
}

// Index of g^a x^b is a + 2b, i.e. basis 1, g, x, gx.
HomHopfAlgebra sweedler() {
  const std::size_t d = 4;
  LinearMap mult(d, d * d), comult(d * d, d), unit(d, 1), counit(1, d), antipode(d, d);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t e = 0; e < 2; ++e) {
          // g^a x^b g^c x^e = (-1)^{bc} g^{a+c} x^{b+e}
          if (b + e > 1) continue;
          const long sign = (b * c) % 2 ? -1 : 1;
          mult((a + c) % 2 + 2 * (b + e), (a + 2 * b) * d + (c + 2 * e)) = sign;
        }
  // Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x, Delta(gx) = gx(x)g + 1(x)gx.
  comult(0 * d + 0, 0) = 1;
  comult(1 * d + 1, 1) = 1;
  comult(2 * d + 0, 2) = 1;
  comult(1 * d + 2, 2) = 1;
  comult(3 * d + 1, 3) = 1;
  comult(0 * d + 3, 3) = 1;
  unit(0, 0) = 1;
  counit(0, 0) = 1;
  counit(0, 1) = 1;
  // S(g) = g, S(x) = -gx, S(gx) = x.
  antipode(0, 0) = 1;
  antipode(1, 1) = 1;
  antipode(3, 2) = -1;
  antipode(2, 3) = 1;
  ObjectWithAut carrier = ObjectWithAut::plain(d);
  return HomHopfAlgebra(HomBialgebra(HomAlgebra(carrier, mult, unit), HomCoalgebra(carrier, comult, counit)), antipode);
}

LinearMap sweedler_scale_map(const Scalar& c) { return LinearMap::diagonal({1, 1, c, c}); }

HomHopfAlgebra kc2() { return cyclic_group_algebra(2); }
HomHopfAlgebra twisted_kc4() { return yau_twist(cyclic_group_algebra(4), cyclic_power_map(4, 3)); }
HomHopfAlgebra twisted_sweedler(const Scalar& c) { return yau_twist(sweedler(), sweedler_scale_map(c)); }
HomHopfAlgebra ground_field() { return cyclic_group_algebra(1); }

}  // namespace homalg::examples
