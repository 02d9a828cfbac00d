// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mackey/catalog.hpp"
#include "mackey/errors.hpp"
#include "mackey/report.hpp"
#include "oracles.hpp"

using namespace mackey;

namespace {

class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    failed_ |= !ok;
  }
  bool passed() const { return !failed_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::shared_ptr<const FiniteGroup> group(const std::string& spec) { return parse_group(spec); }

std::string str(const Rational& x) { return to_string(x); }

std::vector<unsigned long> primes_dividing(std::size_t n) {
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p <= n; ++p) {
    if (n % p == 0 && is_prime(p)) out.push_back(p);
  }
  return out;
}

bool exactly_once(unsigned long p, std::size_t n) { return n % p == 0 && n % (p * p) != 0; }

Rational det_of_subgroup_form(const BurnsideRing& ring, ClassId c, TraceFamily family) {
  const SubgroupEmbedding emb(ring, ring.lattice().subgroup_class(c).representative);
  return det_exact(b_phi_matrix(emb.local(), family));
}

// Product of |N(H)| / |H|^2 over oracle conjugacy classes.
Rational oracle_semisimple_det(const FiniteGroup& g) {
  const auto subs = oracle::all_subgroups(g);
  Rational det = 1;
  for (const auto& cls : oracle::subgroup_classes(g, subs)) {
    const auto& h = subs[cls.front()];
    const unsigned long order = h.size();
    det *= fraction(static_cast<unsigned long>(oracle::normalizer_order(g, h)), order * order);
  }
  return det;
}

// ---------------------------------------------------------------------------

void semisimple_determinant(Outcome& out) {
  for (const std::string& spec : oracle::catalog()) {
    const auto g = group(spec);
    const BurnsideRing b(g);
    const Rational det = det_exact(b_phi_matrix(b, TraceFamily::semisimple()));
    out.require(det == semisimple_det_formula(b), spec + ": det " + str(det) + " vs library formula");
    out.require(det == oracle_semisimple_det(*g), spec + ": det " + str(det) + " vs brute-force formula");
    if (g->is_abelian()) out.require(det == 1, spec + ": abelian but det " + str(det));
  }
}

void order_32_group(Outcome& out) {
  const auto g = group(std::string("file:") + MACKEYSYM_DATA_DIR + "/groups/c4xc2_by_c4.gens");
  out.require(g->order() == 32, "order " + std::to_string(g->order()));
  out.require(!g->is_abelian(), "abelian");
  // a^4 = b^4 = 1, c = [b, a] central of order 2: the group is a quotient of
  // the presented group of order 32, hence equal to it.
  const Perm& a = g->generators().at(0);
  const Perm& bb = g->generators().at(1);
  const Perm c = bb.inverse() * a.inverse() * bb * a;
  out.require(a.order() == 4 && bb.order() == 4, "generator orders");
  out.require(c.order() == 2, "commutator order");
  out.require(c * a == a * c && c * bb == bb * c, "commutator not central");

  const BurnsideRing b(g);
  const auto subs = oracle::all_subgroups(*g);
  const auto classes = oracle::subgroup_classes(*g, subs);
  out.require(b.lattice().num_subgroups() == subs.size(),
              "subgroups " + std::to_string(b.lattice().num_subgroups()) + " vs " + std::to_string(subs.size()));
  out.require(b.rank() == classes.size(),
              "classes " + std::to_string(b.rank()) + " vs " + std::to_string(classes.size()));
  const Rational det = det_exact(b_phi_matrix(b, TraceFamily::semisimple()));
  out.require(det == 1, "semisimple det " + str(det));
  out.require(semisimple_det_formula(b) == 1, "formula " + str(semisimple_det_formula(b)));
}

void integral_determinant(Outcome& out) {
  for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:6", "symmetric:3", "dihedral:5", "cyclic:15"}) {
    const BurnsideRing b(group(spec));
    const Rational det = det_exact(b_phi_matrix(b, TraceFamily::integral()));
    out.require(det == 1 || det == -1, std::string(spec) + ": det " + str(det));
  }
  for (const char* spec : {"cyclic:4", "cyclic:9", "klein4", "dihedral:4", "alternating:4", "quaternion:8"}) {
    const BurnsideRing b(group(spec));
    const std::size_t n = b.group().order();
    const Rational det = det_exact(b_phi_matrix(b, TraceFamily::integral()));
    for (unsigned long p : primes_dividing(n)) {
      if (n % (p * p) != 0) continue;
      out.require(det.get_den() == 1 && det.get_num() % p == 0,
                  std::string(spec) + ": det " + str(det) + " not divisible by " + std::to_string(p));
      // Every subgroup of order p^2 carries a degenerate form mod p.
      bool found = false;
      for (ClassId c = 0; c < b.rank(); ++c) {
        if (b.lattice().subgroup_class(c).subgroup_order != p * p) continue;
        found = true;
        const Rational d = det_of_subgroup_form(b, c, TraceFamily::integral());
        out.require(d.get_den() == 1 && d.get_num() % p == 0,
                    std::string(spec) + ": order p^2 subgroup det " + str(d));
      }
      out.require(found, std::string(spec) + ": no subgroup of order p^2");
    }
  }
}

void cyclic_p_squared_matrix(Outcome& out) {
  for (long p : {2L, 3L}) {
    const BurnsideRing b(group("cyclic:" + std::to_string(p * p)));
    const Matrix m = b_phi_matrix(b, TraceFamily::integral());
    const Matrix expected = Matrix::from_integers({{p * p, p, 1}, {p, 0, 0}, {1, 0, 0}});
    out.require(m == expected, "C_" + std::to_string(p * p) + " matrix differs");
  }
}

void plocal_blocks(Outcome& out) {
  const std::vector<std::pair<std::string, unsigned long>> cases = {
      {"symmetric:3", 3}, {"symmetric:3", 2}, {"cyclic:6", 2}, {"cyclic:6", 3}, {"dihedral:5", 5}, {"alternating:4", 3}};
  for (const auto& [spec, p] : cases) {
    const std::string tag = spec + " p=" + std::to_string(p);
    const auto g = group(spec);
    const BurnsideRing b(g);
    const auto& lat = b.lattice();
    const TraceForm form(b, TraceFamily::plocal(p));
    const Matrix m = b_phi_matrix(form, BurnsideBasis::Deiml);
    const auto& entries = form.deiml()->entries;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (entries[i].j != entries[j].j) out.require(m(i, j) == 0, tag + ": entry off the J blocks");

    const auto report = plocal_block_dets(b, p);
    out.require(report.block_diagonal, tag + ": not block diagonal");
    std::size_t start = 0;
    for (const auto& blk : report.blocks) {
      const Rational direct = oracle::cofactor_det(m.submatrix(start, start, blk.size, blk.size));
      start += blk.size;
      out.require(direct == blk.det, tag + ": block det mismatch");
      const auto& cj = lat.subgroup_class(blk.j);
      const Rational nj(static_cast<unsigned long>(oracle::normalizer_order(*g, {lat.representative(blk.j).elements().begin(),
                                                                                  lat.representative(blk.j).elements().end()})));
      Rational expected;
      if (blk.size == 1) {
        expected = nj / Rational(static_cast<unsigned long>(cj.subgroup_order));
        out.require(!blk.s_j.has_value(), tag + ": size-1 block with S_J");
      } else {
        out.require(blk.size == 2 && blk.s_j.has_value(), tag + ": unexpected block size");
        if (!blk.s_j) continue;
        const auto& sj = lat.representative(*blk.s_j);
        const Rational ns(static_cast<unsigned long>(oracle::normalizer_order(*g, {sj.elements().begin(), sj.elements().end()})));
        const Rational s(static_cast<unsigned long>(sj.order()));
        expected = -nj * ns / (s * s);
      }
      out.require(direct == expected, tag + ": block det " + str(direct) + " vs " + str(expected));
      out.require(valuation(direct, p) == 0, tag + ": block det " + str(direct) + " has nonzero valuation");
    }
    out.require(start == m.rows(), tag + ": blocks do not cover the basis");
  }
}

void mackey_block_reduction(Outcome& out) {
  for (const std::string& spec : oracle::catalog()) {
    const auto g = group(spec);
    if (g->order() > 12) continue;
    const BurnsideRing b(g);
    const MackeyAlgebra alg(b);
    std::vector<TraceFamily> families = {TraceFamily::semisimple(), TraceFamily::integral()};
    for (unsigned long p : primes_dividing(g->order()))
      if (exactly_once(p, g->order())) families.push_back(TraceFamily::plocal(p));
    SubgroupRingCache cache(b);
    for (const TraceFamily& family : families) {
      const std::string tag = spec + " " + family.to_string();
      const BilinearMatrix m = bilinear_matrix(alg, TraceForm(b, family));
      const Rational full = det_exact(m.matrix);
      Rational product = 1;
      for (const BlockCheck& check : block_det_check(alg, m, family, cache)) {
        product *= abs(check.block_det);
        const Rational theta = det_of_subgroup_form(b, check.theta_class, family);
        out.require(abs(check.block_det) == abs(theta),
                    tag + ": block det " + str(check.block_det) + " vs Theta det " + str(theta));
      }
      out.require(abs(full) == product, tag + ": full det " + str(full) + " vs block product " + str(product));
    }
  }
}

void induction_stability(Outcome& out) {
  for (const std::string& spec : oracle::catalog()) {
    const BurnsideRing b(group(spec));
    out.require(check_induction_stability(b, TraceFamily::semisimple()).stable, spec + ": semisimple");
    out.require(check_induction_stability(b, TraceFamily::integral()).stable, spec + ": integral");
    for (unsigned long p : primes_dividing(b.group().order())) {
      if (!exactly_once(p, b.group().order())) continue;
      out.require(check_induction_stability(b, TraceFamily::plocal(p)).stable, spec + ": plocal:" + std::to_string(p));
    }
  }
}

void burnside_trace(Outcome& out) {
  std::mt19937 rng(2024);
  for (const std::string& spec : oracle::catalog()) {
    const auto g = group(spec);
    if (g->order() > 12) continue;
    const BurnsideRing b(g);
    const MackeyAlgebra alg(b);
    auto check_pair = [&](std::size_t i, std::size_t j) {
      const BurnsideElement ab = alg.btr(alg.basis_product(i, j));
      const BurnsideElement ba = alg.btr(alg.basis_product(j, i));
      out.require(ab == ba, spec + ": Btr(ab) != Btr(ba) at " + alg.label(i) + " , " + alg.label(j));
      out.require(alg.btr_product(i, j) == ab, spec + ": closed formula differs at " + alg.label(i) + " , " + alg.label(j));
    };
    if (g->order() <= 8) {
      for (std::size_t i = 0; i < alg.rank(); ++i)
        for (std::size_t j = 0; j < alg.rank(); ++j) check_pair(i, j);
    } else {
      // Half uniform, half with matching outer subgroups so the trace is nonzero.
      for (int t = 0; t < 500; ++t) {
        const std::size_t i = rng() % alg.rank();
        std::size_t j = rng() % alg.rank();
        if (t % 2 == 1) {
          const auto& a = alg.element(i);
          std::vector<std::size_t> partners;
          for (const auto& seg : alg.segments())
            if (seg.left == a.right && seg.right == a.left)
              for (std::size_t k = seg.begin; k < seg.end; ++k) partners.push_back(k);
          j = partners[rng() % partners.size()];
        }
        check_pair(i, j);
      }
    }
  }
}

void idempotents(Outcome& out) {
  for (const std::string& spec : oracle::catalog()) {
    const BurnsideRing b(group(spec));
    const auto& lat = b.lattice();
    BurnsideElement total = b.zero();
    for (ClassId h = 0; h < b.rank(); ++h) {
      const BurnsideElement e = b.idempotent_e(h);
      total += e;
      const auto marks = b.marks_of(e);
      for (ClassId k = 0; k < b.rank(); ++k) {
        out.require(marks[k] == (k == h ? 1 : 0), spec + ": marks of e_H");
        out.require(b.multiply(e, b.idempotent_e(k)) == (k == h ? e : b.zero()), spec + ": e_H orthogonality");
        out.require(b.multiply(b.transitive(k), e) == Rational(b.mark(k, h)) * e, spec + ": X e_H = |X^H| e_H");
      }
    }
    out.require(total == b.one(), spec + ": sum of e_H");

    for (unsigned long p : {2UL, 3UL, 5UL}) {
      const auto perfect = b.p_perfect_classes(p);
      BurnsideElement fsum = b.zero();
      for (ClassId j : perfect) {
        const BurnsideElement f = b.idempotent_f(j, p);
        fsum += f;
        for (ClassId k : perfect)
          out.require(b.multiply(f, b.idempotent_f(k, p)) == (k == j ? f : b.zero()), spec + ": f_J orthogonality");
      }
      out.require(fsum == b.one(), spec + ": sum of f_J");
    }

    for (ClassId kc = 0; kc < b.rank(); ++kc) {
      const SubgroupEmbedding emb(b, lat.subgroup_class(kc).representative);
      const BurnsideRing& loc = emb.local();
      for (ClassId h = 0; h < loc.rank(); ++h) {
        const ClassId gh = emb.class_image(h);
        const Rational ratio = fraction(static_cast<unsigned long>(lat.subgroup_class(gh).normalizer_order),
                                  static_cast<unsigned long>(loc.lattice().subgroup_class(h).normalizer_order));
        out.require(induce(emb, loc.idempotent_e(h)) == ratio * b.idempotent_e(gh), spec + ": induced e_H");
      }
    }
  }
}

void mackey_rank(Outcome& out) {
  out.require(MackeyAlgebra(BurnsideRing(group("cyclic:2"))).rank() == 6, "C_2 rank");
  for (const std::string& spec : oracle::catalog()) {
    const auto g = group(spec);
    const std::size_t rank = MackeyAlgebra(BurnsideRing(g)).rank();
    const std::size_t expected = oracle::mackey_rank(*g);
    out.require(rank == expected, spec + ": rank " + std::to_string(rank) + " vs " + std::to_string(expected));
  }
}

void verdict_agreement(Outcome& out) {
  for (const std::string& spec : oracle::catalog()) {
    const BurnsideRing b(group(spec));
    std::vector<RingSpec> rings = {RingSpec::integers(), RingSpec::rationals()};
    for (unsigned long p : primes_dividing(b.group().order())) {
      rings.push_back(RingSpec::p_local(p));
      rings.push_back(RingSpec::prime_field(p));
    }
    for (const RingSpec& ring : rings) {
      const SymmetryReport r = verdict(b, ring);
      out.require(r.theorem_check.agrees, spec + " over " + ring.to_string() + ": verdict " + r.verdict +
                                              " disagrees with " + r.theorem_check.criterion);
      out.require((r.verdict == "symmetric") == r.theorem_check.expected_symmetric,
                  spec + " over " + ring.to_string() + ": verdict " + r.verdict);
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"semisimple det(b_phi) = prod |N_G(H)|/|H|^2, and 1 for abelian groups", semisimple_determinant},
      {"order-32 (C4 x C2) : C4 realization, semisimple det = 1", order_32_group},
      {"integral det = +-1 iff square-free, else divisible by p", integral_determinant},
      {"integral b_phi of C_{p^2} = [[p^2,p,1],[p,0,0],[1,0,0]] for p = 2, 3", cyclic_p_squared_matrix},
      {"p-local Deiml blocks: diagonal, closed-form dets, p-valuation 0", plocal_blocks},
      {"Mackey det = product of block dets = product of Theta dets (|G| <= 12)", mackey_block_reduction},
      {"induction stability of semisimple, integral, p-local (p || |G|)", induction_stability},
      {"Burnside trace central and equal to the double-coset formula", burnside_trace},
      {"idempotents e_H, f_J: orthogonal partitions, marks, induction", idempotents},
      {"Mackey rank matches brute-force orbit count (C_2: 6)", mackey_rank},
      {"verdict agrees with the divisibility criteria over Z, Q, Z_(p), F_p", verdict_agreement},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2zu  %s  [%zu checks, %.2fs]\n", out.passed() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), out.checks(), secs);
    for (const auto& f : out.failures()) std::printf("        %s\n", f.c_str());
    failed += !out.passed();
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
