#include "hilbk3/lattice.hpp"

#include "hilbk3/isometry.hpp"

namespace hilbk3 {

DiscriminantAction discriminant_action(const Mat2& M, const NsGram& g) {
  if (!verify_isometry(M, g.gram))
    throw std::invalid_argument("discriminant_action: matrix is not an isometry of the form");

  const Int nm1 = g.n - 1;
  const Int modulus = 2 * nm1;
  // column convention: M(e2) = u e1 + c e2
  const Int u = M(0, 1);
  const Int c = M(1, 1);

  std::optional<Int> glue;
  const Int tu = g.t * u;
  if (tu % nm1 == 0) glue = mod_floor(tu / nm1, 2 * g.t);

  return DiscriminantAction{modulus, mod_floor(c, modulus), u, glue};
}

}  // namespace hilbk3
