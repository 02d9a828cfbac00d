#ifndef MACKEY_REPORT_HPP
#define MACKEY_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mackey/burnside.hpp"
#include "mackey/exact.hpp"
#include "mackey/forms.hpp"
#include "mackey/mackey_algebra.hpp"

namespace mackey {

using Json = nlohmann::ordered_json;

struct BurnsideDet {
  ClassId subgroup_class;
  std::size_t subgroup_order;
  Rational det;

  friend bool operator==(const BurnsideDet&, const BurnsideDet&) = default;
};

struct BlockRow {
  std::string label;  // (H,L,x,y)
  ClassId theta_class;
  Rational det;

  friend bool operator==(const BlockRow&, const BlockRow&) = default;
};

struct TheoremCheck {
  std::string criterion;
  bool expected_symmetric = false;
  bool computed_symmetric = false;
  bool agrees = false;

  friend bool operator==(const TheoremCheck&, const TheoremCheck&) = default;
};

struct SymmetryReport {
  std::string group;
  std::size_t order = 0;
  RingSpec ring;
  TraceFamily family;
  std::size_t mackey_rank = 0;
  std::vector<BurnsideDet> burnside_dets;
  std::optional<Rational> mackey_det;
  std::string mackey_det_method;  // direct | block-product | skipped
  std::vector<BlockRow> block_table;
  bool stability = false;
  std::string verdict;  // symmetric | not-symmetric-for-this-form | not-symmetric
  TheoremCheck theorem_check;

  friend bool operator==(const SymmetryReport&, const SymmetryReport&) = default;
};

struct VerdictOptions {
  std::optional<TraceFamily> family;
  /// Above this Mackey rank the full determinant is taken as the product of
  /// block determinants (stable families only) instead of by elimination.
  std::size_t direct_rank_limit = 4000;
};

/// Z -> integral, Q -> semisimple, F_p / Z_(p) -> p-local when p | |G|,
/// semisimple otherwise.
TraceFamily default_family(const FiniteGroup& group, const RingSpec& ring);

/// Throws InputError when the family's values do not live in the ring.
void check_admissible(const FiniteGroup& group, const RingSpec& ring, const TraceFamily& family);

/// Square-free for Z, p^2 not dividing |G| for F_p and Z_(p), always for Q.
TheoremCheck theorem_expectation(const FiniteGroup& group, const RingSpec& ring);

SymmetryReport verdict(const BurnsideRing& ring, const RingSpec& spec, const VerdictOptions& options = {});

Json to_json(const SymmetryReport& report);
SymmetryReport report_from_json(const Json& j);

enum class ReportFormat { Json, Text };
std::string emit_report(const SymmetryReport& report, ReportFormat format);

/// Table of marks as a row-major integer matrix plus class metadata.
Json tom_json(const BurnsideRing& ring);
Json basis_json(const MackeyAlgebra& algebra);
Json bform_json(const BurnsideRing& ring, TraceFamily family, BurnsideBasis basis);
/// {basis, blocks: [{H,L,x,y,rows,cols}], entries: [[i, j, "num/den"], ...]}
Json mform_json(const MackeyAlgebra& algebra, const BilinearMatrix& m);

}  // namespace mackey

#endif  // MACKEY_REPORT_HPP
