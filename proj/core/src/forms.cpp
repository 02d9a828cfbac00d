#include "mackey/forms.hpp"

#include <charconv>

#include "mackey/errors.hpp"

namespace mackey {

TraceFamily TraceFamily::plocal(unsigned long p) {
  if (!is_prime(p)) throw InputError("p-local family needs a prime, got " + std::to_string(p));
  return {Kind::PLocal, p};
}

TraceFamily TraceFamily::parse(std::string_view text) {
  if (text == "semisimple") return semisimple();
  if (text == "integral") return integral();
  constexpr std::string_view prefix = "plocal:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view digits = text.substr(prefix.size());
    unsigned long p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size()) return plocal(p);
  }
  throw InputError("unknown family '" + std::string(text) + "' (expected semisimple, integral, plocal:<p>)");
}

std::string TraceFamily::to_string() const {
  switch (kind) {
    case Kind::Semisimple: return "semisimple";
    case Kind::Integral: return "integral";
    case Kind::PLocal: return "plocal:" + std::to_string(p);
  }
  return "?";
}

Rational phi_semisimple(const BurnsideRing& ring, const BurnsideElement& x) {
  const auto marks = ring.marks_of(x);
  Rational sum = 0;
  for (ClassId h = 0; h < ring.rank(); ++h) {
    sum += marks[h] / Rational(static_cast<unsigned long>(ring.lattice().subgroup_class(h).normalizer_order));
  }
  return sum;
}

Rational phi_integral(const BurnsideRing& ring, const BurnsideElement& x) {
  ring.require_same(x);
  return x.coeffs.at(0);
}

Rational phi_plocal(const BurnsideRing& ring, const DeimlBasis& basis, const BurnsideElement& x) {
  ring.require_same(x);
  const auto coords = basis.coordinates(x);
  Rational sum = 0;
  for (std::size_t e = 0; e < basis.entries.size(); ++e) {
    if (basis.entries[e].i == basis.entries[e].j) sum += coords[e];
  }
  if (mpz_divisible_ui_p(sum.get_den_mpz_t(), basis.p)) {
    throw InvariantViolation("p-local trace value " + to_string(sum) + " has a denominator divisible by p");
  }
  return sum;
}

Rational phi_plocal_coprime(const BurnsideRing& ring, const BurnsideElement& x) {
  const auto marks = ring.marks_of(x);
  Rational sum = 0;
  for (ClassId h = 0; h < ring.rank(); ++h) {
    const auto& cls = ring.lattice().subgroup_class(h);
    sum += marks[h] * fraction(static_cast<unsigned long>(cls.subgroup_order),
                               static_cast<unsigned long>(cls.normalizer_order));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// TraceForm

TraceForm::TraceForm(const BurnsideRing& ring, TraceFamily family) : ring_(&ring), family_(family) {
  const std::size_t n = ring.rank();
  values_.resize(n);
  switch (family.kind) {
    case TraceFamily::Kind::Semisimple:
      for (ClassId k = 0; k < n; ++k) {
        Rational v = 0;
        for (ClassId h = 0; h < n; ++h) {
          if (ring.mark(k, h) == 0) continue;
          v += Rational(ring.mark(k, h)) /
               Rational(static_cast<unsigned long>(ring.lattice().subgroup_class(h).normalizer_order));
        }
        values_[k] = v;
      }
      break;
    case TraceFamily::Kind::Integral:
      values_[0] = 1;
      break;
    case TraceFamily::Kind::PLocal: {
      deiml_ = deiml_basis(ring, family.p);
      for (ClassId k = 0; k < n; ++k) {
        Rational v = 0;
        for (std::size_t e = 0; e < n; ++e) {
          if (deiml_->entries[e].i == deiml_->entries[e].j) v += deiml_->inverse(e, k);
        }
        values_[k] = v;
      }
      break;
    }
  }
}

Rational TraceForm::operator()(const BurnsideElement& x) const {
  ring_->require_same(x);
  return on_coefficients(x.coeffs);
}

Rational TraceForm::on_coefficients(const std::vector<Rational>& coeffs) const {
  Rational sum = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0 && values_[k] != 0) sum += coeffs[k] * values_[k];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// b_phi

Matrix b_phi_matrix(const BurnsideRing& ring, TraceFamily family, BurnsideBasis basis) {
  return b_phi_matrix(TraceForm(ring, family), basis);
}

Matrix b_phi_matrix(const TraceForm& form, BurnsideBasis basis) {
  const BurnsideRing& ring = form.ring();
  const std::size_t n = ring.rank();
  Matrix m(n, n);
  if (basis == BurnsideBasis::Transitive) {
    for (ClassId i = 0; i < n; ++i) {
      for (ClassId j = i; j < n; ++j) {
        Rational v = 0;
        for (const auto& [r, mult] : ring.transitive_product(i, j)) v += mult * form.on_transitive()[r];
        m(i, j) = v;
        m(j, i) = v;
      }
    }
    return m;
  }
  if (!form.deiml()) throw InputError("the Deiml basis needs the p-local family");
  const Matrix& change = form.deiml()->change_of_basis;
  std::vector<BurnsideElement> vectors;
  for (std::size_t e = 0; e < n; ++e) {
    BurnsideElement v = ring.zero();
    for (std::size_t k = 0; k < n; ++k) v.coeffs[k] = change(k, e);
    vectors.push_back(std::move(v));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Rational v = form(ring.multiply(vectors[a], vectors[b]));
      m(a, b) = v;
      m(b, a) = v;
    }
  }
  return m;
}

Rational semisimple_det_formula(const BurnsideRing& ring) {
  Rational det = 1;
  for (const auto& cls : ring.lattice().classes()) {
    const unsigned long h = cls.subgroup_order;
    det *= fraction(static_cast<unsigned long>(cls.normalizer_order), h * h);
  }
  det.canonicalize();
  return det;
}

// ---------------------------------------------------------------------------
// Stability

StabilityResult check_induction_stability(const BurnsideRing& ring, TraceFamily family) {
  const TraceForm ambient(ring, family);
  const SubgroupLattice& lat = ring.lattice();
  for (ClassId c = 0; c < lat.num_classes(); ++c) {
    const SubgroupId h = lat.subgroup_class(c).representative;
    const SubgroupEmbedding emb(ring, h);
    const TraceForm local(emb.local(), family);
    for (ClassId k = 0; k < emb.local().rank(); ++k) {
      const Rational& big = ambient.on_transitive()[emb.class_image(k)];
      const Rational& small = local.on_transitive()[k];
      if (big != small) return {false, StabilityWitness{h, k, big, small}};
    }
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// p-local blocks

PLocalBlockReport plocal_block_dets(const BurnsideRing& ring, unsigned long p) {
  if (!is_prime(p)) throw InputError("p-local blocks need a prime, got " + std::to_string(p));
  if (valuation(Integer(static_cast<unsigned long>(ring.group().order())), p) > 1) {
    throw InputError("p-local block determinants need p^2 not dividing |G|");
  }
  const TraceForm form(ring, TraceFamily::plocal(p));
  const Matrix m = b_phi_matrix(form, BurnsideBasis::Deiml);
  const auto& entries = form.deiml()->entries;
  const SubgroupLattice& lat = ring.lattice();

  PLocalBlockReport report{p, true, {}};
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b)
      if (entries[a].j != entries[b].j && m(a, b) != 0) report.block_diagonal = false;

  std::size_t start = 0;
  while (start < entries.size()) {
    std::size_t end = start;
    while (end < entries.size() && entries[end].j == entries[start].j) ++end;
    PLocalBlock block;
    block.j = entries[start].j;
    block.size = end - start;
    block.det = det_exact(m.submatrix(start, start, block.size, block.size));
    block.s_j = s_j_class(ring, block.j, p);
    const auto& cj = lat.subgroup_class(block.j);
    if (block.s_j) {
      const auto& cs = lat.subgroup_class(*block.s_j);
      const unsigned long s = cs.subgroup_order;
      block.formula_det = -fraction(static_cast<unsigned long>(cj.normalizer_order * cs.normalizer_order), s * s);
    } else {
      block.formula_det = fraction(static_cast<unsigned long>(cj.normalizer_order),
                                   static_cast<unsigned long>(cj.subgroup_order));
    }
    block.formula_det.canonicalize();
    report.blocks.push_back(std::move(block));
    start = end;
  }
  return report;
}

// ---------------------------------------------------------------------------
// SubgroupRingCache

const SubgroupEmbedding& SubgroupRingCache::of_class(ClassId c) {
  auto& slot = rings_[c];
  if (!slot) {
    slot = std::make_unique<SubgroupEmbedding>(*ambient_, ambient_->lattice().subgroup_class(c).representative);
  }
  return *slot;
}

const TraceForm& SubgroupRingCache::form(ClassId c, TraceFamily family) {
  auto& slot = forms_[{c, family.to_string()}];
  if (!slot) slot = std::make_unique<TraceForm>(of_class(c).local(), family);
  return *slot;
}

const Rational& SubgroupRingCache::det(ClassId c, TraceFamily family) {
  const auto key = std::make_pair(c, family.to_string());
  auto it = dets_.find(key);
  if (it == dets_.end()) it = dets_.emplace(key, det_exact(b_phi_matrix(form(c, family)))).first;
  return it->second;
}

}  // namespace mackey
