#ifndef MACKEY_CATALOG_HPP
#define MACKEY_CATALOG_HPP

#include <memory>
#include <string>
#include <string_view>

#include "mackey/group.hpp"

namespace mackey {

/// Builds a group from a spec string:
///
///   trivial | cyclic:n | klein4 | dihedral:n (order 2n) | symmetric:n
///   | alternating:n | quaternion:8 | product:<spec>,<spec> | file:<path>
///
/// The group's name is the input string itself.
std::shared_ptr<const FiniteGroup> parse_group(std::string_view spec,
                                               std::size_t order_bound = kDefaultOrderBound);

/// Generator file contents: a `degree: n` line followed by `gen: (a b)(c d e)`
/// lines in 1-based cycle notation. Blank lines and `#` comments are ignored.
std::shared_ptr<const FiniteGroup> parse_generator_text(std::string_view text, std::string name,
                                                        std::size_t order_bound = kDefaultOrderBound);

std::shared_ptr<const FiniteGroup> load_generator_file(const std::string& path,
                                                       std::size_t order_bound = kDefaultOrderBound);

/// External direct product acting on the disjoint union of the point sets.
std::shared_ptr<const FiniteGroup> direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name,
                                                  std::size_t order_bound = kDefaultOrderBound);

}  // namespace mackey

#endif  // MACKEY_CATALOG_HPP
