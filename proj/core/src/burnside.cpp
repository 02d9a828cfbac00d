#include "mackey/burnside.hpp"

#include "mackey/errors.hpp"

namespace mackey {

// ---------------------------------------------------------------------------
// BurnsideElement

bool BurnsideElement::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& rhs) {
  if (ring != rhs.ring) throw InputError("adding Burnside elements of different groups");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rhs.coeffs[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& rhs) {
  if (ring != rhs.ring) throw InputError("subtracting Burnside elements of different groups");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= rhs.coeffs[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator*=(const Rational& scalar) {
  for (auto& c : coeffs) c *= scalar;
  return *this;
}

// ---------------------------------------------------------------------------
// BurnsideRing

BurnsideRing::BurnsideRing(std::shared_ptr<const FiniteGroup> group) : lattice_(std::move(group)) {
  const std::size_t c = rank();
  const auto& lat = lattice_;

  marks_.assign(c, std::vector<long>(c, 0));
  for (ClassId k = 0; k < c; ++k) {
    const Subgroup& kk = lat.representative(k);
    for (ClassId h = 0; h < c; ++h) {
      const auto& cls = lat.subgroup_class(h);
      if (cls.subgroup_order > kk.order() || kk.order() % cls.subgroup_order != 0) continue;
      long inside = 0;
      for (SubgroupId member : cls.members) {
        if (lat.subgroup(member).is_subgroup_of(kk)) ++inside;
      }
      marks_[k][h] = inside * static_cast<long>(cls.normalizer_order) / static_cast<long>(kk.order());
    }
  }

  products_.resize(c * c);
  for (ClassId h = 0; h < c; ++h) {
    const SubgroupId hid = lat.subgroup_class(h).representative;
    for (ClassId k = h; k < c; ++k) {
      const SubgroupId kid = lat.subgroup_class(k).representative;
      std::vector<long> counts(c, 0);
      for (Element g : double_coset_reps(lat.subgroup(hid), lat.subgroup(kid))) {
        counts[lat.class_of(lat.intersect(hid, lat.conjugate(kid, g)))] += 1;
      }
      auto& out = products_[h * c + k];
      for (ClassId r = 0; r < c; ++r)
        if (counts[r] != 0) out.emplace_back(r, counts[r]);
      products_[k * c + h] = out;
    }
  }
}

void BurnsideRing::require_same(const BurnsideElement& x) const {
  if (x.ring != this) throw InputError("Burnside element belongs to a different group");
}

BurnsideElement BurnsideRing::zero() const { return BurnsideElement{this, std::vector<Rational>(rank())}; }

BurnsideElement BurnsideRing::transitive(ClassId k) const {
  BurnsideElement x = zero();
  x.coeffs.at(k) = 1;
  return x;
}

std::vector<Rational> BurnsideRing::marks_of(const BurnsideElement& x) const {
  require_same(x);
  std::vector<Rational> m(rank());
  for (ClassId k = 0; k < rank(); ++k) {
    if (x.coeffs[k] == 0) continue;
    for (ClassId h = 0; h < rank(); ++h)
      if (marks_[k][h] != 0) m[h] += x.coeffs[k] * marks_[k][h];
  }
  return m;
}

BurnsideElement BurnsideRing::from_marks(const std::vector<Rational>& marks) const {
  if (marks.size() != rank()) throw InputError("mark vector has the wrong length");
  BurnsideElement x = zero();
  // marks_[k][h] != 0 forces h <=_G k, hence class h <= class k.
  for (std::size_t hh = rank(); hh-- > 0;) {
    Rational rest = marks[hh];
    for (std::size_t k = hh + 1; k < rank(); ++k) rest -= x.coeffs[k] * marks_[k][hh];
    x.coeffs[hh] = rest / marks_[hh][hh];
  }
  return x;
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement& a, const BurnsideElement& b) const {
  require_same(a);
  require_same(b);
  BurnsideElement out = zero();
  for (ClassId h = 0; h < rank(); ++h) {
    if (a.coeffs[h] == 0) continue;
    for (ClassId k = 0; k < rank(); ++k) {
      if (b.coeffs[k] == 0) continue;
      const Rational ab = a.coeffs[h] * b.coeffs[k];
      for (const auto& [r, mult] : transitive_product(h, k)) out.coeffs[r] += ab * mult;
    }
  }
  return out;
}

BurnsideElement BurnsideRing::idempotent_e(ClassId h) const {
  const auto& cls = lattice_.subgroup_class(h);
  BurnsideElement e = zero();
  for (SubgroupId k : lattice_.subgroups_of(cls.representative)) {
    const long mu = lattice_.moebius(k, cls.representative);
    if (mu == 0) continue;
    e.coeffs[lattice_.class_of(k)] += static_cast<long>(lattice_.subgroup(k).order()) * mu;
  }
  e *= fraction(1, static_cast<unsigned long>(cls.normalizer_order));
  return e;
}

std::vector<ClassId> BurnsideRing::p_perfect_classes(unsigned long p) const {
  if (!is_prime(p)) throw InputError("p-perfect classes need a prime, got " + std::to_string(p));
  std::vector<ClassId> out;
  for (ClassId c = 0; c < rank(); ++c)
    if (lattice_.op_p_class(c, p) == c) out.push_back(c);
  return out;
}

std::vector<ClassId> BurnsideRing::op_p_fibre(ClassId j, unsigned long p) const {
  std::vector<ClassId> out;
  for (ClassId c = 0; c < rank(); ++c)
    if (lattice_.op_p_class(c, p) == j) out.push_back(c);
  return out;
}

BurnsideElement BurnsideRing::idempotent_f(ClassId j, unsigned long p) const {
  if (!is_prime(p)) throw InputError("f_J needs a prime, got " + std::to_string(p));
  if (lattice_.op_p_class(j, p) != j) {
    throw InputError("class " + std::to_string(j) + " is not " + std::to_string(p) + "-perfect");
  }
  BurnsideElement f = zero();
  for (ClassId k : op_p_fibre(j, p)) f += idempotent_e(k);
  return f;
}

// ---------------------------------------------------------------------------
// SubgroupEmbedding

SubgroupEmbedding::SubgroupEmbedding(const BurnsideRing& ambient, SubgroupId h)
    : ambient_(&ambient),
      subgroup_(h),
      local_(as_group(ambient.lattice().subgroup(h), ambient.group().name() + "[" + std::to_string(h) + "]")) {
  const FiniteGroup& big = ambient.group();
  const FiniteGroup& small = local_.group();
  const SubgroupLattice& big_lat = ambient.lattice();
  const SubgroupLattice& small_lat = local_.lattice();

  element_map_.resize(small.order());
  for (Element e = 0; e < small.order(); ++e) {
    auto idx = big.index_of(small.element(e));
    if (!idx) throw InvariantViolation("subgroup element missing from ambient group");
    element_map_[e] = *idx;
  }
  subgroup_map_.resize(small_lat.num_subgroups());
  inverse_subgroup_map_.assign(big_lat.num_subgroups(), std::nullopt);
  for (SubgroupId s = 0; s < small_lat.num_subgroups(); ++s) {
    ElementSet members(big.order());
    for (Element e : small_lat.subgroup(s).elements()) members.set(element_map_[e]);
    auto id = big_lat.find(members);
    if (!id) throw InvariantViolation("local subgroup missing from ambient lattice");
    subgroup_map_[s] = *id;
    inverse_subgroup_map_[*id] = s;
  }
  class_image_.resize(small_lat.num_classes());
  for (ClassId c = 0; c < small_lat.num_classes(); ++c) {
    class_image_[c] = big_lat.class_of(subgroup_map_[small_lat.subgroup_class(c).representative]);
  }
}

ClassId SubgroupEmbedding::local_class_of(SubgroupId ambient) const {
  const auto& local = inverse_subgroup_map_.at(ambient);
  if (!local) throw InputError("subgroup is not contained in the embedded subgroup");
  return local_.lattice().class_of(*local);
}

BurnsideElement induce(const SubgroupEmbedding& emb, const BurnsideElement& x) {
  emb.local().require_same(x);
  BurnsideElement out = emb.ambient().zero();
  for (ClassId k = 0; k < x.size(); ++k) {
    if (x.coeffs[k] != 0) out.coeffs[emb.class_image(k)] += x.coeffs[k];
  }
  return out;
}

BurnsideElement restrict(const SubgroupEmbedding& emb, const BurnsideElement& x) {
  const BurnsideRing& big = emb.ambient();
  big.require_same(x);
  const SubgroupLattice& lat = big.lattice();
  const SubgroupId h = emb.subgroup();
  BurnsideElement out = emb.local().zero();
  for (ClassId k = 0; k < x.size(); ++k) {
    if (x.coeffs[k] == 0) continue;
    const SubgroupId kid = lat.subgroup_class(k).representative;
    for (Element g : double_coset_reps(lat.subgroup(h), lat.subgroup(kid))) {
      out.coeffs[emb.local_class_of(lat.intersect(h, lat.conjugate(kid, g)))] += x.coeffs[k];
    }
  }
  return out;
}

}  // namespace mackey
