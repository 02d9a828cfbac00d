#ifndef MACKEY_BURNSIDE_HPP
#define MACKEY_BURNSIDE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "mackey/exact.hpp"
#include "mackey/lattice.hpp"

namespace mackey {

class BurnsideRing;

/// An element of QB(G) in the transitive basis {G/H : H in [s(G)]},
/// indexed by subgroup class.
struct BurnsideElement {
  const BurnsideRing* ring = nullptr;
  std::vector<Rational> coeffs;

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const;

  BurnsideElement& operator+=(const BurnsideElement& rhs);
  BurnsideElement& operator-=(const BurnsideElement& rhs);
  BurnsideElement& operator*=(const Rational& scalar);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator*(const Rational& s, BurnsideElement a) { return a *= s; }
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.ring == b.ring && a.coeffs == b.coeffs;
  }
};

/// The Burnside ring of a finite group with its table of marks and
/// structure constants, both computed once at construction.
class BurnsideRing {
 public:
  explicit BurnsideRing(std::shared_ptr<const FiniteGroup> group);
  // Elements point back at their ring, so rings stay put.
  BurnsideRing(const BurnsideRing&) = delete;
  BurnsideRing& operator=(const BurnsideRing&) = delete;

  const FiniteGroup& group() const { return lattice_.group(); }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return lattice_.group_ptr(); }
  const SubgroupLattice& lattice() const { return lattice_; }
  std::size_t rank() const { return lattice_.num_classes(); }

  BurnsideElement zero() const;
  BurnsideElement one() const { return transitive(static_cast<ClassId>(rank() - 1)); }
  /// G/K for K in class k.
  BurnsideElement transitive(ClassId k) const;

  /// |(G/K)^H|: the number of cosets gK fixed by H.
  long mark(ClassId k, ClassId h) const { return marks_[k][h]; }
  /// Row k lists the marks of G/K at every class H.
  const std::vector<std::vector<long>>& table_of_marks() const { return marks_; }

  std::vector<Rational> marks_of(const BurnsideElement& x) const;
  /// Inverse of marks_of (triangular solve).
  BurnsideElement from_marks(const std::vector<Rational>& marks) const;

  /// G/H x G/K = sum over [H\G/K] of G/(H ∩ ^gK), as (class, multiplicity).
  const std::vector<std::pair<ClassId, long>>& transitive_product(ClassId h, ClassId k) const {
    return products_[h * rank() + k];
  }
  BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) const;

  /// e_H^G = 1/|N_G(H)| sum_{K <= H} |K| mu(K,H) G/K
  BurnsideElement idempotent_e(ClassId h) const;

  /// Classes whose representative J satisfies O^p(J) = J.
  std::vector<ClassId> p_perfect_classes(unsigned long p) const;
  /// f_J = sum of e_K over classes K with O^p(K) =_G J. Throws InputError
  /// unless J is p-perfect.
  BurnsideElement idempotent_f(ClassId j, unsigned long p) const;
  /// Classes L with O^p(L) =_G J, ascending.
  std::vector<ClassId> op_p_fibre(ClassId j, unsigned long p) const;

  void require_same(const BurnsideElement& x) const;

 private:
  SubgroupLattice lattice_;
  std::vector<std::vector<long>> marks_;
  std::vector<std::vector<std::pair<ClassId, long>>> products_;
};

/// A subgroup H <= G with its own Burnside ring and the maps between the
/// two lattices.
class SubgroupEmbedding {
 public:
  SubgroupEmbedding(const BurnsideRing& ambient, SubgroupId h);

  const BurnsideRing& ambient() const { return *ambient_; }
  const BurnsideRing& local() const { return local_; }
  SubgroupId subgroup() const { return subgroup_; }

  /// Ambient element index of a local element.
  Element to_ambient(Element local) const { return element_map_[local]; }
  /// Ambient subgroup id of a local subgroup id.
  SubgroupId to_ambient_subgroup(SubgroupId local) const { return subgroup_map_[local]; }
  /// G-class of a local class.
  ClassId class_image(ClassId local) const { return class_image_[local]; }
  /// Local class of an ambient subgroup contained in H.
  ClassId local_class_of(SubgroupId ambient) const;

 private:
  const BurnsideRing* ambient_;
  SubgroupId subgroup_;
  BurnsideRing local_;
  std::vector<Element> element_map_;
  std::vector<SubgroupId> subgroup_map_;
  std::vector<ClassId> class_image_;
  std::vector<std::optional<SubgroupId>> inverse_subgroup_map_;
};

/// Ind_H^G: H/K -> G/K.
BurnsideElement induce(const SubgroupEmbedding& emb, const BurnsideElement& x);
/// Res^G_H: G/K -> sum over [H\G/K] of H/(H ∩ ^gK).
BurnsideElement restrict(const SubgroupEmbedding& emb, const BurnsideElement& x);

/// The basis {G/I * f_J^G : O^p(I) =_G J, J p-perfect}, ordered by
/// (J class, I class).
struct DeimlEntry {
  ClassId i;
  ClassId j;
};

struct DeimlBasis {
  unsigned long p = 0;
  std::vector<DeimlEntry> entries;
  /// Column e holds G/I_e * f_{J_e} in the transitive basis.
  Matrix change_of_basis;
  /// Coordinates in the Deiml basis of each transitive G/K (column K).
  Matrix inverse;

  /// Deiml coordinates of x.
  std::vector<Rational> coordinates(const BurnsideElement& x) const { return inverse * x.coeffs; }
};

/// Throws InvariantViolation if the change of basis is singular or carries
/// a denominator divisible by p.
DeimlBasis deiml_basis(const BurnsideRing& ring, unsigned long p);

/// S_J: the unique class L != J with O^p(L) =_G J, when one exists. Throws
/// InvariantViolation if there are several.
std::optional<ClassId> s_j_class(const BurnsideRing& ring, ClassId j, unsigned long p);

}  // namespace mackey

#endif  // MACKEY_BURNSIDE_HPP
