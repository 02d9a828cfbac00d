#include "mackey/mackey_algebra.hpp"

#include <algorithm>

#include "mackey/errors.hpp"

namespace mackey {

MackeyAlgebra::MackeyAlgebra(const BurnsideRing& ring) : ring_(&ring) {
  const SubgroupLattice& lat = ring.lattice();
  const FiniteGroup& g = lat.group();
  const std::size_t ns = lat.num_subgroups();
  const std::size_t n = g.order();

  canonical_.resize(ns);
  for (SubgroupId s = 0; s < ns; ++s) {
    canonical_[s].assign(ns, 0);
    for (SubgroupId c : lat.subgroups_of(s)) {
      SubgroupId best = c;
      for (Element t : lat.subgroup(s).elements()) best = std::min(best, lat.conjugate(c, t));
      canonical_[s][c] = best;
    }
  }

  pairs_.resize(ns * ns);
  for (SubgroupId a = 0; a < ns; ++a) {
    const Subgroup& sa = lat.subgroup(a);
    for (SubgroupId b = 0; b < ns; ++b) {
      const Subgroup& sb = lat.subgroup(b);
      PairCosets& pc = pairs_[a * ns + b];
      pc.which.assign(n, UINT32_MAX);
      pc.left_factor.assign(n, 0);
      for (Element x = 0; x < n; ++x) {
        if (pc.which[x] != UINT32_MAX) continue;
        const auto idx = static_cast<std::uint32_t>(pc.reps.size());
        pc.reps.push_back(x);
        for (Element u : sa.elements()) {
          const Element ux = g.multiply(u, x);
          for (Element v : sb.elements()) {
            const Element w = g.multiply(ux, v);
            if (pc.which[w] == UINT32_MAX) {
              pc.which[w] = idx;
              pc.left_factor[w] = u;
            }
          }
        }
      }
      pc.first_segment = segments_.size();
      for (Element x : pc.reps) {
        MackeySegment seg;
        seg.left = a;
        seg.right = b;
        seg.x = x;
        seg.stabilizer = lat.intersect(a, lat.conjugate(b, x));
        seg.begin = basis_.size();
        for (SubgroupId c : lat.subgroups_of(seg.stabilizer)) {
          if (canonical_[seg.stabilizer][c] == c) basis_.push_back({a, b, x, c});
        }
        seg.end = basis_.size();
        segments_.push_back(seg);
      }
    }
  }

  for (const MackeySegment& row : segments_) {
    const PairCosets& back = pair(row.right, row.left);
    const std::uint32_t yi = back.which[g.inverse(row.x)];
    const MackeySegment& col = segment_of(row.right, row.left, yi);
    MackeyBlock block;
    block.left = row.left;
    block.right = row.right;
    block.x = row.x;
    block.y = col.x;
    block.row_begin = row.begin;
    block.row_end = row.end;
    block.col_begin = col.begin;
    block.col_end = col.end;
    block.theta = lat.intersect(row.right, lat.conjugate(row.left, g.inverse(row.x)));
    blocks_.push_back(block);
  }
}

const MackeySegment& MackeyAlgebra::segment_of(SubgroupId left, SubgroupId right, std::uint32_t coset) const {
  return segments_[pair(left, right).first_segment + coset];
}

std::optional<std::size_t> MackeyAlgebra::index_of(const MackeyBasisElement& b) const {
  const std::size_t ns = lattice().num_subgroups();
  if (b.left >= ns || b.right >= ns || b.x >= lattice().group().order()) return std::nullopt;
  const PairCosets& pc = pair(b.left, b.right);
  const std::uint32_t coset = pc.which[b.x];
  if (pc.reps[coset] != b.x) return std::nullopt;
  const MackeySegment& seg = segment_of(b.left, b.right, coset);
  auto first = basis_.begin() + static_cast<std::ptrdiff_t>(seg.begin);
  auto last = basis_.begin() + static_cast<std::ptrdiff_t>(seg.end);
  auto it = std::lower_bound(first, last, b.inner,
                             [](const MackeyBasisElement& e, SubgroupId k) { return e.inner < k; });
  if (it == last || it->inner != b.inner) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

std::size_t MackeyAlgebra::canonical_word(SubgroupId left, SubgroupId right, Element g, SubgroupId inner) const {
  const SubgroupLattice& lat = lattice();
  const FiniteGroup& grp = lat.group();
  if (!lat.contains(inner, left) || !lat.contains(inner, lat.conjugate(right, g))) {
    throw InputError("inner subgroup is not contained in H ∩ ^gL");
  }
  const PairCosets& pc = pair(left, right);
  const std::uint32_t coset = pc.which[g];
  const MackeySegment& seg = segment_of(left, right, coset);
  // g = a x n: t^H_C a = t^H_{C^a}, and n is absorbed on the right.
  const SubgroupId moved = lat.conjugate(inner, grp.inverse(pc.left_factor[g]));
  if (!lat.contains(moved, seg.stabilizer)) {
    throw InvariantViolation("canonicalized inner subgroup left the stabilizer");
  }
  const SubgroupId canon = canonical_[seg.stabilizer][moved];
  auto idx = index_of({left, right, seg.x, canon});
  if (!idx) throw InvariantViolation("canonical word missing from the basis");
  return *idx;
}

MackeyElement MackeyAlgebra::one() const {
  MackeyElement e;
  for (SubgroupId h = 0; h < lattice().num_subgroups(); ++h) {
    e.emplace(*index_of({h, h, FiniteGroup::identity(), h}), 1);
  }
  return e;
}

// Applies the Mackey formula to r^L_{K^x} t^L_Q and calls
// visit(g = x*alpha*y, C = K ∩ ^{x alpha}Q) once per alpha in [K^x \ L / Q].
template <typename Visit>
void MackeyAlgebra::for_each_product_term(const MackeyBasisElement& a, const MackeyBasisElement& b,
                                          Visit&& visit) const {
  const SubgroupLattice& lat = lattice();
  const FiniteGroup& grp = lat.group();
  const SubgroupId kx = lat.conjugate(a.inner, grp.inverse(a.x));
  for (Element alpha : double_coset_reps(lat.subgroup(kx), lat.subgroup(b.inner), lat.subgroup(a.right))) {
    const Element xa = grp.multiply(a.x, alpha);
    const SubgroupId c = lat.intersect(a.inner, lat.conjugate(b.inner, xa));
    visit(grp.multiply(xa, b.x), c);
  }
}

MackeyElement MackeyAlgebra::basis_product(std::size_t i, std::size_t j) const {
  const MackeyBasisElement& a = basis_.at(i);
  const MackeyBasisElement& b = basis_.at(j);
  MackeyElement out;
  if (a.right != b.left) return out;
  for_each_product_term(a, b, [&](Element g, SubgroupId c) { out[canonical_word(a.left, b.right, g, c)] += 1; });
  return out;
}

MackeyElement MackeyAlgebra::product(const MackeyElement& a, const MackeyElement& b) const {
  MackeyElement out;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      if (basis_[i].right != basis_[j].left) continue;
      const Rational c = ci * cj;
      for (const auto& [k, ck] : basis_product(i, j)) out[k] += c * ck;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BurnsideElement MackeyAlgebra::btr(std::size_t i) const {
  const MackeyBasisElement& b = basis_.at(i);
  BurnsideElement out = ring_->zero();
  if (b.left == b.right && lattice().subgroup(b.right).contains(b.x)) {
    out.coeffs[lattice().class_of(b.inner)] = 1;
  }
  return out;
}

BurnsideElement MackeyAlgebra::btr(const MackeyElement& a) const {
  BurnsideElement out = ring_->zero();
  for (const auto& [i, c] : a) {
    const MackeyBasisElement& b = basis_.at(i);
    if (b.left == b.right && lattice().subgroup(b.right).contains(b.x)) {
      out.coeffs[lattice().class_of(b.inner)] += c;
    }
  }
  return out;
}

BurnsideElement MackeyAlgebra::btr_product(std::size_t i, std::size_t j) const {
  const MackeyBasisElement& a = basis_.at(i);
  const MackeyBasisElement& b = basis_.at(j);
  BurnsideElement out = ring_->zero();
  if (a.right != b.left || a.left != b.right) return out;
  const Subgroup& h = lattice().subgroup(a.left);
  for_each_product_term(a, b, [&](Element g, SubgroupId c) {
    if (h.contains(g)) out.coeffs[lattice().class_of(c)] += 1;
  });
  return out;
}

bool MackeyAlgebra::block_may_be_nonzero(SubgroupId h, SubgroupId l, Element x, Element y) const {
  const PairCosets& pc = pair(h, l);
  return pc.which[x] == pc.which[lattice().group().inverse(y)];
}

std::string MackeyAlgebra::subgroup_label(SubgroupId s) const { return "S" + std::to_string(s); }

std::string MackeyAlgebra::label(std::size_t i) const {
  const MackeyBasisElement& b = basis_.at(i);
  return "t^" + subgroup_label(b.left) + "_" + subgroup_label(b.inner) + " " +
         lattice().group().element(b.x).to_cycle_string() + " r^" + subgroup_label(b.right);
}

// ---------------------------------------------------------------------------
// Bilinear form

BilinearMatrix bilinear_matrix(const MackeyAlgebra& algebra, const TraceForm& phi) {
  if (&phi.ring() != &algebra.burnside()) throw InputError("trace form belongs to a different group");
  BilinearMatrix out{SparseMatrix(algebra.rank()), algebra.blocks()};
  const SubgroupLattice& lat = algebra.lattice();
  const std::size_t ns = lat.num_subgroups();

  // Row segments (H, L, *) only meet column segments (L, H, *).
  std::vector<std::vector<std::size_t>> by_pair(ns * ns);
  for (std::size_t s = 0; s < algebra.segments().size(); ++s) {
    const auto& seg = algebra.segments()[s];
    by_pair[seg.left * ns + seg.right].push_back(s);
  }
  for (const auto& row : algebra.segments()) {
    for (std::size_t cs : by_pair[row.right * ns + row.left]) {
      const auto& col = algebra.segments()[cs];
      for (std::size_t i = row.begin; i < row.end; ++i) {
        for (std::size_t j = col.begin; j < col.end; ++j) {
          const Rational v = phi(algebra.btr_product(i, j));
          if (v != 0) out.matrix.set(i, j, v);
        }
      }
    }
  }
  return out;
}

std::vector<BlockCheck> block_det_check(const MackeyAlgebra& algebra, const BilinearMatrix& m, TraceFamily family,
                                        SubgroupRingCache& cache) {
  std::vector<BlockCheck> out;
  for (const MackeyBlock& block : m.blocks) {
    const std::size_t rows = block.row_end - block.row_begin;
    const std::size_t cols = block.col_end - block.col_begin;
    BlockCheck check;
    check.block = block;
    check.theta_class = algebra.lattice().class_of(block.theta);
    check.theta_det = cache.det(check.theta_class, family);
    if (rows != cols) {
      check.block_det = 0;
      check.match = false;
    } else {
      Matrix dense(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (const auto& [j, v] : m.matrix.row(block.row_begin + i)) {
          if (j >= block.col_begin && j < block.col_end) dense(i, j - block.col_begin) = v;
        }
      }
      check.block_det = det_exact(dense);
      check.match = abs(check.block_det) == abs(check.theta_det);
    }
    out.push_back(std::move(check));
  }
  return out;
}

Rational block_product_det(const MackeyAlgebra& algebra, TraceFamily family, SubgroupRingCache& cache) {
  Rational det = 1;
  for (const MackeyBlock& block : algebra.blocks()) {
    det *= abs(cache.det(algebra.lattice().class_of(block.theta), family));
    if (det == 0) break;
  }
  return det;
}

}  // namespace mackey
