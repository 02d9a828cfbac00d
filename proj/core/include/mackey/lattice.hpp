#ifndef MACKEY_LATTICE_HPP
#define MACKEY_LATTICE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

using SubgroupId = std::uint32_t;
using ClassId = std::uint32_t;

struct SubgroupClass {
  SubgroupId representative;        // lexicographically least member set
  std::vector<SubgroupId> members;  // all conjugates, ascending id
  std::size_t subgroup_order;
  std::size_t normalizer_order;
};

/// Every subgroup of a finite group, grouped into conjugacy classes.
///
/// Classes are ordered by subgroup order, ties broken by the sorted element
/// list of the representative. Subgroup ids are ordered by (class, element
/// list), so the representative of class c is the first id of that class.
/// All tables are filled at construction; the lattice is immutable.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(std::shared_ptr<const FiniteGroup> group);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }

  std::size_t num_subgroups() const { return subgroups_.size(); }
  std::size_t num_classes() const { return classes_.size(); }
  const Subgroup& subgroup(SubgroupId id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const SubgroupClass& subgroup_class(ClassId c) const { return classes_[c]; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const Subgroup& representative(ClassId c) const { return subgroups_[classes_[c].representative]; }

  ClassId class_of(SubgroupId id) const { return class_of_[id]; }
  std::optional<SubgroupId> find(const ElementSet& members) const;
  /// Throws InputError if the subgroup is not from this lattice's group.
  SubgroupId id_of(const Subgroup& h) const;
  ClassId class_of(const Subgroup& h) const { return class_of_[id_of(h)]; }

  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return static_cast<SubgroupId>(subgroups_.size() - 1); }

  /// Id of g H g^{-1}.
  SubgroupId conjugate(SubgroupId h, Element g) const { return conj_[static_cast<std::size_t>(g) * subgroups_.size() + h]; }
  /// Some g with g * rep * g^{-1} = subgroup(id), rep the class representative.
  Element conjugator(SubgroupId id) const { return conjugator_[id]; }

  bool contains(SubgroupId small, SubgroupId big) const;
  SubgroupId intersect(SubgroupId a, SubgroupId b) const;
  /// Subgroups contained in `id`, ascending id.
  const std::vector<SubgroupId>& subgroups_of(SubgroupId id) const { return below_[id]; }

  /// Moebius function of the subgroup poset; throws InputError unless k <= h.
  long moebius(SubgroupId k, SubgroupId h) const;

  /// Class id of O^p(representative of c).
  ClassId op_p_class(ClassId c, unsigned long p) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::vector<SubgroupClass> classes_;
  std::vector<ClassId> class_of_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> index_;
  std::vector<SubgroupId> conj_;
  std::vector<Element> conjugator_;
  std::vector<std::vector<SubgroupId>> below_;
  // moebius_[c][k]: mu(k, representative of c) for every k below the rep.
  std::vector<std::unordered_map<SubgroupId, long>> moebius_;
};

}  // namespace mackey

#endif  // MACKEY_LATTICE_HPP
