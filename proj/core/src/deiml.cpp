#include "mackey/burnside.hpp"
#include "mackey/errors.hpp"

namespace mackey {

namespace {

void require_p_prime_denominators(const Matrix& m, unsigned long p, const char* which) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (mpz_divisible_ui_p(m(i, j).get_den_mpz_t(), p)) {
        throw InvariantViolation(std::string("Deiml ") + which + " has a denominator divisible by " +
                                 std::to_string(p));
      }
    }
  }
}

}  // namespace

DeimlBasis deiml_basis(const BurnsideRing& ring, unsigned long p) {
  if (!is_prime(p)) throw InputError("Deiml basis needs a prime, got " + std::to_string(p));
  DeimlBasis basis;
  basis.p = p;
  const SubgroupLattice& lat = ring.lattice();

  std::vector<ClassId> op(ring.rank());
  for (ClassId c = 0; c < ring.rank(); ++c) op[c] = lat.op_p_class(c, p);

  for (ClassId j : ring.p_perfect_classes(p)) {
    for (ClassId i = 0; i < ring.rank(); ++i)
      if (op[i] == j) basis.entries.push_back({i, j});
  }
  if (basis.entries.size() != ring.rank()) {
    throw InvariantViolation("Deiml basis has " + std::to_string(basis.entries.size()) + " entries for rank " +
                             std::to_string(ring.rank()));
  }

  const std::size_t n = ring.rank();
  basis.change_of_basis = Matrix(n, n);
  std::optional<ClassId> last_j;
  BurnsideElement f;
  for (std::size_t e = 0; e < n; ++e) {
    const auto [i, j] = basis.entries[e];
    if (last_j != j) {
      f = ring.idempotent_f(j, p);
      last_j = j;
    }
    const BurnsideElement col = ring.multiply(ring.transitive(i), f);
    for (std::size_t k = 0; k < n; ++k) basis.change_of_basis(k, e) = col.coeffs[k];
  }
  auto inv = inverse(basis.change_of_basis);
  if (!inv) throw InvariantViolation("Deiml change of basis is singular");
  basis.inverse = std::move(*inv);
  require_p_prime_denominators(basis.change_of_basis, p, "change of basis");
  require_p_prime_denominators(basis.inverse, p, "inverse change of basis");
  return basis;
}

std::optional<ClassId> s_j_class(const BurnsideRing& ring, ClassId j, unsigned long p) {
  std::optional<ClassId> found;
  for (ClassId c : ring.op_p_fibre(j, p)) {
    if (c == j) continue;
    if (found) {
      throw InvariantViolation("more than one class L != J with O^p(L) = J for J = class " + std::to_string(j));
    }
    found = c;
  }
  return found;
}

}  // namespace mackey
