// mackey-sym: symmetry verdicts and exports for Mackey algebras of small groups.
//
// Exit status: 0 on success, 2 on bad input, 1 on an internal check failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mackey/catalog.hpp"
#include "mackey/errors.hpp"
#include "mackey/report.hpp"

using namespace mackey;

namespace {

struct Common {
  std::string group;
  std::size_t order_bound = kDefaultOrderBound;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--group,-g", c.group, "group spec, e.g. cyclic:6 or file:path")->required();
  cmd->add_option("--order-bound", c.order_bound, "largest group order accepted")->capture_default_str();
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  throw InputError("unknown format '" + s + "'");
}

// One line: <group-spec> <ring> [family]
Json run_batch_line(const std::string& line, std::size_t order_bound, std::size_t direct_limit, bool& failed) {
  std::istringstream in(line);
  std::string group, ring, family;
  in >> group >> ring >> family;
  try {
    if (group.empty() || ring.empty()) throw InputError("expected '<group> <ring> [family]'");
    const BurnsideRing b(parse_group(group, order_bound));
    VerdictOptions opts;
    opts.direct_rank_limit = direct_limit;
    if (!family.empty()) opts.family = TraceFamily::parse(family);
    return to_json(verdict(b, RingSpec::parse(ring), opts));
  } catch (const InputError& e) {
    failed = true;
    return Json{{"input", line}, {"error", e.what()}};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry of Mackey algebras of finite groups"};
  app.require_subcommand(1);

  Common common;
  std::string ring = "Q", family, format = "json", batch_file;
  std::size_t direct_limit = VerdictOptions{}.direct_rank_limit;
  bool deiml = false;

  auto* v = app.add_subcommand("verdict", "decide symmetry over a ring");
  add_common(v, common);
  v->add_option("--ring,-r", ring, "Z, Q, Fp:<p> or Zp:<p>")->required();
  v->add_option("--family,-f", family, "semisimple, integral or plocal:<p>");
  v->add_option("--format", format, "json or text")->capture_default_str();
  v->add_option("--direct-limit", direct_limit, "largest Mackey rank for direct elimination")->capture_default_str();

  auto* tom = app.add_subcommand("tom", "table of marks");
  add_common(tom, common);

  auto* basis = app.add_subcommand("basis", "Mackey algebra basis");
  add_common(basis, common);

  auto* bform = app.add_subcommand("bform", "Burnside bilinear form matrix");
  add_common(bform, common);
  bform->add_option("--family,-f", family, "semisimple, integral or plocal:<p>")->required();
  bform->add_flag("--deiml", deiml, "use the Deiml basis (p-local family)");

  auto* mform = app.add_subcommand("mform", "Mackey bilinear form matrix");
  add_common(mform, common);
  mform->add_option("--family,-f", family, "semisimple, integral or plocal:<p>")->required();

  auto* batch = app.add_subcommand("batch", "verdicts for a list of '<group> <ring> [family]' lines");
  batch->add_option("--file", batch_file, "input list")->required();
  batch->add_option("--order-bound", common.order_bound, "largest group order accepted")->capture_default_str();
  batch->add_option("--direct-limit", direct_limit, "largest Mackey rank for direct elimination")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*v) {
      const BurnsideRing b(parse_group(common.group, common.order_bound));
      VerdictOptions opts;
      opts.direct_rank_limit = direct_limit;
      if (!family.empty()) opts.family = TraceFamily::parse(family);
      const ReportFormat fmt = parse_format(format);
      std::cout << emit_report(verdict(b, RingSpec::parse(ring), opts), fmt);
    } else if (*tom) {
      const BurnsideRing b(parse_group(common.group, common.order_bound));
      std::cout << tom_json(b).dump(2) << "\n";
    } else if (*basis) {
      const BurnsideRing b(parse_group(common.group, common.order_bound));
      const MackeyAlgebra alg(b);
      std::cout << basis_json(alg).dump(2) << "\n";
    } else if (*bform) {
      const BurnsideRing b(parse_group(common.group, common.order_bound));
      const TraceFamily fam = TraceFamily::parse(family);
      std::cout << bform_json(b, fam, deiml ? BurnsideBasis::Deiml : BurnsideBasis::Transitive).dump(2) << "\n";
    } else if (*mform) {
      const BurnsideRing b(parse_group(common.group, common.order_bound));
      const MackeyAlgebra alg(b);
      const TraceForm form(b, TraceFamily::parse(family));
      std::cout << mform_json(alg, bilinear_matrix(alg, form)).dump(2) << "\n";
    } else if (*batch) {
      std::ifstream in(batch_file);
      if (!in) throw InputError("cannot open " + batch_file);
      Json out = Json::array();
      bool failed = false;
      std::string line;
      while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        out.push_back(run_batch_line(line.substr(start), common.order_bound, direct_limit, failed));
      }
      std::cout << out.dump(2) << "\n";
      return failed ? 2 : 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
