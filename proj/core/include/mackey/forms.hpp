#ifndef MACKEY_FORMS_HPP
#define MACKEY_FORMS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mackey/burnside.hpp"
#include "mackey/exact.hpp"

namespace mackey {

/// A family of linear forms (phi_H) on the Burnside rings of all subgroups.
struct TraceFamily {
  enum class Kind { Semisimple, Integral, PLocal };
  Kind kind = Kind::Semisimple;
  unsigned long p = 0;  // PLocal only

  static TraceFamily semisimple() { return {Kind::Semisimple, 0}; }
  static TraceFamily integral() { return {Kind::Integral, 0}; }
  static TraceFamily plocal(unsigned long p);

  /// "semisimple", "integral", "plocal:<p>".
  static TraceFamily parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const TraceFamily&, const TraceFamily&) = default;
};

/// phi(X) = sum_{H in [s(G)]} |X^H| / |N_G(H)|
Rational phi_semisimple(const BurnsideRing& ring, const BurnsideElement& x);
/// Coefficient of G/1.
Rational phi_integral(const BurnsideRing& ring, const BurnsideElement& x);
/// Sum of Deiml coordinates on entries with I = J. Throws InvariantViolation
/// if the result has a denominator divisible by p.
Rational phi_plocal(const BurnsideRing& ring, const DeimlBasis& basis, const BurnsideElement& x);
/// sum_H |H| |X^H| / |N_G(H)|; agrees with phi_plocal when p does not divide |G|.
Rational phi_plocal_coprime(const BurnsideRing& ring, const BurnsideElement& x);

/// phi_G for one family on one group, with its values on the transitive
/// basis cached. Evaluation is then a dot product.
class TraceForm {
 public:
  TraceForm(const BurnsideRing& ring, TraceFamily family);

  const BurnsideRing& ring() const { return *ring_; }
  TraceFamily family() const { return family_; }
  /// phi(G/K) for every class K.
  const std::vector<Rational>& on_transitive() const { return values_; }
  /// Present for the p-local family only.
  const std::optional<DeimlBasis>& deiml() const { return deiml_; }

  Rational operator()(const BurnsideElement& x) const;
  Rational on_coefficients(const std::vector<Rational>& coeffs) const;

 private:
  const BurnsideRing* ring_;
  TraceFamily family_;
  std::optional<DeimlBasis> deiml_;
  std::vector<Rational> values_;
};

enum class BurnsideBasis { Transitive, Deiml };

/// Matrix of b_phi(X, Y) = phi(XY). The Deiml basis requires the p-local family.
Matrix b_phi_matrix(const BurnsideRing& ring, TraceFamily family, BurnsideBasis basis = BurnsideBasis::Transitive);
Matrix b_phi_matrix(const TraceForm& form, BurnsideBasis basis = BurnsideBasis::Transitive);

/// prod_{H in [s(G)]} |N_G(H)| / |H|^2
Rational semisimple_det_formula(const BurnsideRing& ring);

struct StabilityWitness {
  SubgroupId subgroup;  // H (ambient id, a class representative)
  ClassId local_class;  // K, as a class of H
  Rational ambient_value;  // phi_G(Ind_H^G(H/K))
  Rational local_value;    // phi_H(H/K)
};

struct StabilityResult {
  bool stable = true;
  std::optional<StabilityWitness> witness;
};

/// Checks phi_G(Ind_H^G(H/K)) = phi_H(H/K) for one H per conjugacy class and
/// every transitive H-set H/K.
StabilityResult check_induction_stability(const BurnsideRing& ring, TraceFamily family);

struct PLocalBlock {
  ClassId j;
  std::optional<ClassId> s_j;
  std::size_t size;
  Rational det;          // computed from the Deiml-basis matrix
  Rational formula_det;  // |N(J)|/|J|, or -|N(J)||N(S_J)|/|S_J|^2
};

struct PLocalBlockReport {
  unsigned long p;
  bool block_diagonal;  // no entries between different J blocks
  std::vector<PLocalBlock> blocks;
};

/// Block decomposition of the p-local b_phi in the Deiml basis. Requires
/// p^2 not dividing |G| (InputError otherwise).
PLocalBlockReport plocal_block_dets(const BurnsideRing& ring, unsigned long p);

/// Lazily built Burnside rings of subgroups, keyed by ambient class (all
/// members of a class give isomorphic rings). Not thread safe.
class SubgroupRingCache {
 public:
  explicit SubgroupRingCache(const BurnsideRing& ambient) : ambient_(&ambient) {}
  const SubgroupEmbedding& of_class(ClassId c);
  const TraceForm& form(ClassId c, TraceFamily family);
  /// det of b_phi for the representative of class c, transitive basis.
  const Rational& det(ClassId c, TraceFamily family);

 private:
  const BurnsideRing* ambient_;
  std::map<ClassId, std::unique_ptr<SubgroupEmbedding>> rings_;
  std::map<std::pair<ClassId, std::string>, std::unique_ptr<TraceForm>> forms_;
  std::map<std::pair<ClassId, std::string>, Rational> dets_;
};

}  // namespace mackey

#endif  // MACKEY_FORMS_HPP
