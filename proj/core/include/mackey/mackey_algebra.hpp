#ifndef MACKEY_MACKEY_ALGEBRA_HPP
#define MACKEY_MACKEY_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mackey/burnside.hpp"
#include "mackey/forms.hpp"

namespace mackey {

/// The basis element t^H_K x r^L_{K^x}: H = left, L = right, x the least
/// element of the double coset HxL, and K <= H ∩ ^xL the least member of its
/// (H ∩ ^xL)-conjugacy class. H and L range over all subgroups of G.
struct MackeyBasisElement {
  SubgroupId left;
  SubgroupId right;
  Element x;
  SubgroupId inner;

  friend bool operator==(const MackeyBasisElement&, const MackeyBasisElement&) = default;
};

/// Sparse combination of basis elements; zero coefficients are never stored.
using MackeyElement = std::map<std::size_t, Rational>;

/// Basis elements sharing (H, L, x) occupy one contiguous index range.
struct MackeySegment {
  SubgroupId left;
  SubgroupId right;
  Element x;
  SubgroupId stabilizer;  // H ∩ ^xL
  std::size_t begin;
  std::size_t end;
};

/// A potentially nonzero block (H, L, x, y) of the bilinear form matrix:
/// rows from segment (H, L, x), columns from segment (L, H, y), with
/// HxL = Hy^{-1}L.
struct MackeyBlock {
  SubgroupId left;
  SubgroupId right;
  Element x;
  Element y;
  std::size_t row_begin, row_end;
  std::size_t col_begin, col_end;
  SubgroupId theta;  // L ∩ H^x
};

/// mu(G) over the rationals in the t/x/r basis, with its structure constants
/// and the Burnside trace. Immutable after construction.
class MackeyAlgebra {
 public:
  explicit MackeyAlgebra(const BurnsideRing& ring);
  MackeyAlgebra(const MackeyAlgebra&) = delete;
  MackeyAlgebra& operator=(const MackeyAlgebra&) = delete;

  const BurnsideRing& burnside() const { return *ring_; }
  const SubgroupLattice& lattice() const { return ring_->lattice(); }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<MackeyBasisElement>& basis() const { return basis_; }
  const MackeyBasisElement& element(std::size_t i) const { return basis_.at(i); }
  const std::vector<MackeySegment>& segments() const { return segments_; }
  const std::vector<MackeyBlock>& blocks() const { return blocks_; }

  std::optional<std::size_t> index_of(const MackeyBasisElement& b) const;

  /// Index of t^H_C g r^N_{C^g} after rewriting g as h*x*n with x canonical
  /// and moving C to its canonical conjugate. Requires C <= H ∩ ^gN.
  std::size_t canonical_word(SubgroupId left, SubgroupId right, Element g, SubgroupId inner) const;

  /// Sum over all subgroups H of t^H_H.
  MackeyElement one() const;
  MackeyElement basis_element(std::size_t i) const { return {{i, Rational(1)}}; }
  MackeyElement basis_product(std::size_t i, std::size_t j) const;
  MackeyElement product(const MackeyElement& a, const MackeyElement& b) const;

  /// Btr(t^H_K x r^L) = G/K if H = L and x in L, else 0.
  BurnsideElement btr(std::size_t i) const;
  BurnsideElement btr(const MackeyElement& a) const;
  /// Btr(b_i b_j) by the closed double-coset formula, without forming the product.
  BurnsideElement btr_product(std::size_t i, std::size_t j) const;

  /// Whether block (H, L, x, y) can be nonzero: HxL = Hy^{-1}L.
  bool block_may_be_nonzero(SubgroupId h, SubgroupId l, Element x, Element y) const;

  std::string subgroup_label(SubgroupId s) const;
  std::string label(std::size_t i) const;

 private:
  struct PairCosets {
    std::vector<Element> reps;         // ascending
    std::vector<std::uint32_t> which;  // element -> double coset index
    std::vector<Element> left_factor;  // element g = a * reps[which[g]] * b with a = left_factor[g]
    std::size_t first_segment = 0;
  };

  const PairCosets& pair(SubgroupId a, SubgroupId b) const { return pairs_[a * lattice().num_subgroups() + b]; }
  const MackeySegment& segment_of(SubgroupId left, SubgroupId right, std::uint32_t coset) const;
  template <typename Visit>
  void for_each_product_term(const MackeyBasisElement& a, const MackeyBasisElement& b, Visit&& visit) const;

  const BurnsideRing* ring_;
  std::vector<PairCosets> pairs_;
  // canonical_[s][c]: least S-conjugate of subgroup c <= s (only defined for c <= s).
  std::vector<std::vector<SubgroupId>> canonical_;
  std::vector<MackeyBasisElement> basis_;
  std::vector<MackeySegment> segments_;
  std::vector<MackeyBlock> blocks_;
};

struct BilinearMatrix {
  SparseMatrix matrix;
  std::vector<MackeyBlock> blocks;
};

/// Entry (i, j) = phi_G(Btr(b_i b_j)). Computes every entry whose outer
/// subgroups pair up, so blocks outside the listed ones are checked zero
/// rather than assumed.
BilinearMatrix bilinear_matrix(const MackeyAlgebra& algebra, const TraceForm& phi);

struct BlockCheck {
  MackeyBlock block;
  ClassId theta_class;
  Rational block_det;
  Rational theta_det;
  bool match;  // |block_det| == |theta_det|
};

/// Compares every potentially nonzero block with b_phi on B(Theta),
/// Theta = L ∩ H^x, in the transitive basis.
std::vector<BlockCheck> block_det_check(const MackeyAlgebra& algebra, const BilinearMatrix& m, TraceFamily family,
                                        SubgroupRingCache& cache);

/// prod over blocks of |det b_phi_Theta|: the magnitude of the full form
/// determinant for a family stable under induction.
Rational block_product_det(const MackeyAlgebra& algebra, TraceFamily family, SubgroupRingCache& cache);

}  // namespace mackey

#endif  // MACKEY_MACKEY_ALGEBRA_HPP
