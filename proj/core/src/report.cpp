#include "mackey/report.hpp"

#include <sstream>

#include "mackey/errors.hpp"

namespace mackey {

namespace {

std::vector<unsigned long> prime_divisors(std::size_t n) {
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool divides(unsigned long p, std::size_t n) { return p != 0 && n % p == 0; }

std::string block_label(const MackeyAlgebra& alg, const MackeyBlock& b) {
  const FiniteGroup& g = alg.lattice().group();
  return "(" + alg.subgroup_label(b.left) + "," + alg.subgroup_label(b.right) + "," +
         g.element(b.x).to_cycle_string() + "," + g.element(b.y).to_cycle_string() + ")";
}

std::string rational_field(const Json& j) { return j.get<std::string>(); }

}  // namespace

TraceFamily default_family(const FiniteGroup& group, const RingSpec& ring) {
  switch (ring.kind) {
    case RingSpec::Kind::Integers: return TraceFamily::integral();
    case RingSpec::Kind::Rationals: return TraceFamily::semisimple();
    case RingSpec::Kind::PrimeField:
    case RingSpec::Kind::PLocal:
      return divides(ring.p, group.order()) ? TraceFamily::plocal(ring.p) : TraceFamily::semisimple();
  }
  return TraceFamily::semisimple();
}

void check_admissible(const FiniteGroup& group, const RingSpec& ring, const TraceFamily& family) {
  const std::string what = family.to_string() + " family over " + ring.to_string();
  switch (family.kind) {
    case TraceFamily::Kind::Integral:
      return;
    case TraceFamily::Kind::Semisimple:
      // Every |N_G(H)| must be invertible; N_G(1) = G makes that |G|.
      if (ring.kind == RingSpec::Kind::Rationals) return;
      if (ring.kind == RingSpec::Kind::Integers) {
        if (group.order() == 1) return;
        throw InputError(what + " is not admissible: 1/|N_G(H)| is not an integer");
      }
      if (divides(ring.p, group.order())) {
        throw InputError(what + " is not admissible: p divides |G|");
      }
      return;
    case TraceFamily::Kind::PLocal:
      if (ring.kind == RingSpec::Kind::Rationals) return;
      if (ring.kind == RingSpec::Kind::Integers) throw InputError(what + " is not admissible");
      if (ring.p != family.p) throw InputError(what + " is not admissible: primes differ");
      return;
  }
}

TheoremCheck theorem_expectation(const FiniteGroup& group, const RingSpec& ring) {
  TheoremCheck t;
  const std::size_t n = group.order();
  switch (ring.kind) {
    case RingSpec::Kind::Rationals:
      t.criterion = "always symmetric over Q";
      t.expected_symmetric = true;
      break;
    case RingSpec::Kind::Integers: {
      t.criterion = "|G| square-free";
      t.expected_symmetric = true;
      for (unsigned long p : prime_divisors(n))
        if (n % (p * p) == 0) t.expected_symmetric = false;
      break;
    }
    case RingSpec::Kind::PrimeField:
    case RingSpec::Kind::PLocal:
      t.criterion = "p^2 does not divide |G|";
      t.expected_symmetric = n % (ring.p * ring.p) != 0;
      break;
  }
  return t;
}

SymmetryReport verdict(const BurnsideRing& ring, const RingSpec& spec, const VerdictOptions& options) {
  const FiniteGroup& g = ring.group();
  SymmetryReport r;
  r.group = g.name();
  r.order = g.order();
  r.ring = spec;
  r.family = options.family ? *options.family : default_family(g, spec);
  check_admissible(g, spec, r.family);

  SubgroupRingCache cache(ring);
  const SubgroupLattice& lat = ring.lattice();
  for (ClassId c = 0; c < lat.num_classes(); ++c) {
    r.burnside_dets.push_back({c, lat.subgroup_class(c).subgroup_order, cache.det(c, r.family)});
  }
  r.stability = check_induction_stability(ring, r.family).stable;

  const MackeyAlgebra alg(ring);
  r.mackey_rank = alg.rank();
  if (alg.rank() <= options.direct_rank_limit) {
    const BilinearMatrix m = bilinear_matrix(alg, TraceForm(ring, r.family));
    r.mackey_det = det_exact(m.matrix);
    r.mackey_det_method = "direct";
    for (const BlockCheck& check : block_det_check(alg, m, r.family, cache)) {
      r.block_table.push_back({block_label(alg, check.block), check.theta_class, check.block_det});
    }
  } else if (r.stability) {
    r.mackey_det = block_product_det(alg, r.family, cache);
    r.mackey_det_method = "block-product";
    for (const MackeyBlock& b : alg.blocks()) {
      const ClassId theta = lat.class_of(b.theta);
      r.block_table.push_back({block_label(alg, b), theta, cache.det(theta, r.family)});
    }
  } else {
    r.mackey_det_method = "skipped";
  }

  const bool symmetric = r.stability && r.mackey_det && is_unit(*r.mackey_det, spec);
  r.theorem_check = theorem_expectation(g, spec);
  r.theorem_check.computed_symmetric = symmetric;
  r.theorem_check.agrees = symmetric == r.theorem_check.expected_symmetric;
  if (symmetric) {
    r.verdict = "symmetric";
  } else {
    r.verdict = r.theorem_check.expected_symmetric ? "not-symmetric-for-this-form" : "not-symmetric";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Serialization

Json to_json(const SymmetryReport& r) {
  Json j;
  j["group"] = {{"name", r.group}, {"order", r.order}};
  j["ring"] = r.ring.to_string();
  j["family"] = r.family.to_string();
  j["mackey_rank"] = r.mackey_rank;
  Json dets = Json::array();
  for (const auto& d : r.burnside_dets) {
    dets.push_back({{"class", d.subgroup_class}, {"order", d.subgroup_order}, {"det", to_string(d.det)}});
  }
  j["burnside_dets"] = std::move(dets);
  j["mackey_det"] = r.mackey_det ? Json(to_string(*r.mackey_det)) : Json(nullptr);
  j["mackey_det_method"] = r.mackey_det_method;
  Json blocks = Json::array();
  for (const auto& b : r.block_table) {
    blocks.push_back({{"label", b.label}, {"theta", b.theta_class}, {"det", to_string(b.det)}});
  }
  j["block_table"] = std::move(blocks);
  j["stability"] = r.stability;
  j["verdict"] = r.verdict;
  j["theorem_check"] = {{"criterion", r.theorem_check.criterion},
                        {"expected_symmetric", r.theorem_check.expected_symmetric},
                        {"computed_symmetric", r.theorem_check.computed_symmetric},
                        {"agrees", r.theorem_check.agrees}};
  return j;
}

SymmetryReport report_from_json(const Json& j) {
  try {
    SymmetryReport r;
    r.group = j.at("group").at("name").get<std::string>();
    r.order = j.at("group").at("order").get<std::size_t>();
    r.ring = RingSpec::parse(j.at("ring").get<std::string>());
    r.family = TraceFamily::parse(j.at("family").get<std::string>());
    r.mackey_rank = j.at("mackey_rank").get<std::size_t>();
    for (const auto& d : j.at("burnside_dets")) {
      r.burnside_dets.push_back({d.at("class").get<ClassId>(), d.at("order").get<std::size_t>(),
                                 parse_rational(rational_field(d.at("det")))});
    }
    if (!j.at("mackey_det").is_null()) r.mackey_det = parse_rational(rational_field(j.at("mackey_det")));
    r.mackey_det_method = j.at("mackey_det_method").get<std::string>();
    for (const auto& b : j.at("block_table")) {
      r.block_table.push_back(
          {b.at("label").get<std::string>(), b.at("theta").get<ClassId>(), parse_rational(rational_field(b.at("det")))});
    }
    r.stability = j.at("stability").get<bool>();
    r.verdict = j.at("verdict").get<std::string>();
    const Json& t = j.at("theorem_check");
    r.theorem_check = {t.at("criterion").get<std::string>(), t.at("expected_symmetric").get<bool>(),
                       t.at("computed_symmetric").get<bool>(), t.at("agrees").get<bool>()};
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string emit_report(const SymmetryReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "group        " << r.group << " (order " << r.order << ")\n";
  out << "ring         " << r.ring.to_string() << "\n";
  out << "family       " << r.family.to_string() << "\n";
  out << "mackey rank  " << r.mackey_rank << "\n";
  out << "burnside dets\n";
  for (const auto& d : r.burnside_dets) {
    out << "  class " << d.subgroup_class << " (order " << d.subgroup_order << "): " << to_string(d.det) << "\n";
  }
  out << "mackey det   " << (r.mackey_det ? to_string(*r.mackey_det) : "n/a") << " [" << r.mackey_det_method
      << "]\n";
  out << "blocks       " << r.block_table.size() << "\n";
  out << "stable       " << (r.stability ? "yes" : "no") << "\n";
  out << "verdict      " << r.verdict << "\n";
  out << "theorem      " << r.theorem_check.criterion << ": expected "
      << (r.theorem_check.expected_symmetric ? "symmetric" : "not symmetric") << ", "
      << (r.theorem_check.agrees ? "agrees" : "DISAGREES") << "\n";
  return out.str();
}

Json tom_json(const BurnsideRing& ring) {
  const SubgroupLattice& lat = ring.lattice();
  Json classes = Json::array();
  for (ClassId c = 0; c < lat.num_classes(); ++c) {
    const auto& cls = lat.subgroup_class(c);
    classes.push_back({{"class", c},
                       {"order", cls.subgroup_order},
                       {"normalizer_order", cls.normalizer_order},
                       {"class_size", cls.members.size()}});
  }
  Json j;
  j["group"] = {{"name", ring.group().name()}, {"order", ring.group().order()}};
  j["classes"] = std::move(classes);
  j["marks"] = ring.table_of_marks();
  return j;
}

Json basis_json(const MackeyAlgebra& alg) {
  const SubgroupLattice& lat = alg.lattice();
  Json subgroups = Json::array();
  for (SubgroupId s = 0; s < lat.num_subgroups(); ++s) {
    subgroups.push_back({{"label", alg.subgroup_label(s)},
                         {"order", lat.subgroup(s).order()},
                         {"class", lat.class_of(s)}});
  }
  Json basis = Json::array();
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    const auto& b = alg.element(i);
    basis.push_back({{"H", alg.subgroup_label(b.left)},
                     {"L", alg.subgroup_label(b.right)},
                     {"x", lat.group().element(b.x).to_cycle_string()},
                     {"K", alg.subgroup_label(b.inner)}});
  }
  Json j;
  j["group"] = {{"name", lat.group().name()}, {"order", lat.group().order()}};
  j["rank"] = alg.rank();
  j["subgroups"] = std::move(subgroups);
  j["basis"] = std::move(basis);
  return j;
}

Json bform_json(const BurnsideRing& ring, TraceFamily family, BurnsideBasis basis) {
  const TraceForm form(ring, family);
  const Matrix m = b_phi_matrix(form, basis);
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  Json labels = Json::array();
  if (basis == BurnsideBasis::Deiml) {
    for (const auto& e : form.deiml()->entries) labels.push_back({{"I", e.i}, {"J", e.j}});
  } else {
    for (ClassId c = 0; c < ring.rank(); ++c) labels.push_back({{"class", c}});
  }
  Json j;
  j["group"] = {{"name", ring.group().name()}, {"order", ring.group().order()}};
  j["family"] = family.to_string();
  j["basis"] = basis == BurnsideBasis::Deiml ? "deiml" : "transitive";
  j["labels"] = std::move(labels);
  j["matrix"] = std::move(rows);
  j["det"] = to_string(det_exact(m));
  return j;
}

Json mform_json(const MackeyAlgebra& alg, const BilinearMatrix& m) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < alg.rank(); ++i) basis.push_back(alg.label(i));
  const FiniteGroup& g = alg.lattice().group();
  Json blocks = Json::array();
  for (const auto& b : m.blocks) {
    blocks.push_back({{"H", alg.subgroup_label(b.left)},
                      {"L", alg.subgroup_label(b.right)},
                      {"x", g.element(b.x).to_cycle_string()},
                      {"y", g.element(b.y).to_cycle_string()},
                      {"rows", {b.row_begin, b.row_end}},
                      {"cols", {b.col_begin, b.col_end}}});
  }
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.matrix.size(); ++i) {
    for (const auto& [k, v] : m.matrix.row(i)) entries.push_back({i, k, to_string(v)});
  }
  Json j;
  j["basis"] = std::move(basis);
  j["blocks"] = std::move(blocks);
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace mackey
