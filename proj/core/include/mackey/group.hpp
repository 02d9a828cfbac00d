#ifndef MACKEY_GROUP_HPP
#define MACKEY_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mackey/perm.hpp"

namespace mackey {

using Element = std::uint32_t;  // index into FiniteGroup::elements()

inline constexpr std::size_t kDefaultOrderBound = 256;

/// Fixed-width bit set over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool test(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void set(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  std::size_t count() const;
  bool is_subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  std::vector<Element> to_vector() const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// A finite permutation group with every element enumerated. Elements are
/// indexed in increasing order of their image tuples, so the identity is
/// always element 0. Products and inverses are table lookups.
///
/// Instances are immutable and always handled through shared_ptr, since
/// subgroups keep a pointer to their parent.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> generate(std::string name, std::size_t degree,
                                                     std::vector<Perm> generators,
                                                     std::size_t order_bound = kDefaultOrderBound);

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(Element e) const { return elements_[e]; }
  std::optional<Element> index_of(const Perm& p) const;

  static constexpr Element identity() { return 0; }
  Element multiply(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  /// g a g^{-1}
  Element conjugate(Element g, Element a) const { return multiply(multiply(g, a), inverse(g)); }
  std::size_t element_order(Element a) const { return orders_[a]; }
  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::size_t> orders_;
};

/// A subgroup of a FiniteGroup, stored as its member set. Does not own the
/// parent; the parent must outlive it.
class Subgroup {
 public:
  Subgroup() = default;
  /// Takes a set already known to be closed. Use closure() otherwise.
  Subgroup(const FiniteGroup& parent, ElementSet members);

  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return *parent_; }
  const ElementSet& members() const { return members_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element e) const { return members_.test(e); }
  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const FiniteGroup* parent_ = nullptr;
  ElementSet members_;
  std::vector<Element> elements_;
};

/// Smallest subgroup containing `generators`.
Subgroup closure(const FiniteGroup& group, std::span<const Element> generators);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// ^gH = g H g^{-1}
Subgroup conjugate(const Subgroup& h, Element g);

/// N_G(H) in the parent group, or N_W(H) = N_G(H) ∩ W.
Subgroup normalizer(const Subgroup& h);
Subgroup normalizer(const Subgroup& h, const Subgroup& within);

bool is_normal_in(const Subgroup& n, const Subgroup& h);

/// O^p(H): the subgroup generated by the p'-elements of H.
Subgroup op_p(const Subgroup& h, unsigned long p);

/// Representatives of the double cosets A\W/B with A, B <= W (W defaults
/// to the whole group). Each representative is the least element index in
/// its double coset, so the identity represents A*1*B. Listed in increasing
/// element order.
std::vector<Element> double_coset_reps(const Subgroup& a, const Subgroup& b);
std::vector<Element> double_coset_reps(const Subgroup& a, const Subgroup& b, const Subgroup& within);

/// The group H realized as a FiniteGroup of its own, on the same points.
std::shared_ptr<const FiniteGroup> as_group(const Subgroup& h, std::string name);

}  // namespace mackey

#endif  // MACKEY_GROUP_HPP
