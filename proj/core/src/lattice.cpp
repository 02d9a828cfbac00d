#include "mackey/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mackey/errors.hpp"

namespace mackey {

namespace {

struct Discovered {
  Subgroup subgroup;
  std::vector<Element> generators;
};

}  // namespace

SubgroupLattice::SubgroupLattice(std::shared_ptr<const FiniteGroup> group) : group_(std::move(group)) {
  const FiniteGroup& g = *group_;
  const std::size_t n = g.order();

  // Cyclic subgroups seed the search; every subgroup is reached from the
  // trivial one by repeatedly joining a cyclic subgroup.
  std::vector<std::pair<Subgroup, Element>> cyclic;
  {
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    for (Element e = 0; e < n; ++e) {
      const Element gen[] = {e};
      Subgroup c = closure(g, gen);
      if (seen.emplace(c.members(), cyclic.size()).second) cyclic.emplace_back(std::move(c), e);
    }
  }

  std::vector<Discovered> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> found_index;
  found.push_back({Subgroup::trivial(g), {}});
  found_index.emplace(found.back().subgroup.members(), 0);
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (const auto& [c, gen] : cyclic) {
      if (c.is_subgroup_of(found[next].subgroup)) continue;
      std::vector<Element> gens = found[next].generators;
      gens.push_back(gen);
      Subgroup joined = closure(g, gens);
      if (found_index.contains(joined.members())) continue;
      found_index.emplace(joined.members(), found.size());
      found.push_back({std::move(joined), std::move(gens)});
    }
  }

  // Conjugacy classes over the discovery order.
  const std::size_t total = found.size();
  std::vector<std::size_t> raw_class(total, SIZE_MAX);
  std::vector<std::vector<std::size_t>> raw_members;
  for (std::size_t i = 0; i < total; ++i) {
    if (raw_class[i] != SIZE_MAX) continue;
    const std::size_t c = raw_members.size();
    raw_members.emplace_back();
    for (Element x = 0; x < n; ++x) {
      const std::size_t j = found_index.at(mackey::conjugate(found[i].subgroup, x).members());
      if (raw_class[j] == SIZE_MAX) {
        raw_class[j] = c;
        raw_members[c].push_back(j);
      }
    }
  }

  // Canonical ordering.
  std::vector<std::vector<Element>> keys(total);
  for (std::size_t i = 0; i < total; ++i) keys[i] = found[i].subgroup.elements();
  for (auto& members : raw_members) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  }
  std::vector<std::size_t> class_order(raw_members.size());
  std::iota(class_order.begin(), class_order.end(), 0);
  std::sort(class_order.begin(), class_order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = keys[raw_members[a].front()];
    const auto& rb = keys[raw_members[b].front()];
    if (ra.size() != rb.size()) return ra.size() < rb.size();
    return ra < rb;
  });

  subgroups_.reserve(total);
  class_of_.reserve(total);
  for (std::size_t ci = 0; ci < class_order.size(); ++ci) {
    const auto& members = raw_members[class_order[ci]];
    SubgroupClass cls;
    cls.representative = static_cast<SubgroupId>(subgroups_.size());
    cls.subgroup_order = keys[members.front()].size();
    cls.normalizer_order = n / members.size();
    for (std::size_t raw : members) {
      cls.members.push_back(static_cast<SubgroupId>(subgroups_.size()));
      index_.emplace(found[raw].subgroup.members(), static_cast<SubgroupId>(subgroups_.size()));
      subgroups_.push_back(found[raw].subgroup);
      class_of_.push_back(static_cast<ClassId>(ci));
    }
    classes_.push_back(std::move(cls));
  }

  const std::size_t ns = subgroups_.size();
  conj_.resize(n * ns);
  for (Element x = 0; x < n; ++x) {
    for (SubgroupId s = 0; s < ns; ++s) {
      conj_[static_cast<std::size_t>(x) * ns + s] = index_.at(mackey::conjugate(subgroups_[s], x).members());
    }
  }
  conjugator_.assign(ns, 0);
  for (const auto& cls : classes_) {
    std::vector<bool> done(ns, false);
    for (Element x = 0; x < n; ++x) {
      const SubgroupId target = conjugate(cls.representative, x);
      if (!done[target]) {
        done[target] = true;
        conjugator_[target] = x;
      }
    }
  }

  below_.resize(ns);
  for (SubgroupId big = 0; big < ns; ++big)
    for (SubgroupId small = 0; small < ns; ++small)
      if (subgroups_[small].is_subgroup_of(subgroups_[big])) below_[big].push_back(small);

  moebius_.resize(classes_.size());
  for (ClassId c = 0; c < classes_.size(); ++c) {
    const SubgroupId h = classes_[c].representative;
    auto chain = below_[h];
    std::sort(chain.begin(), chain.end(),
              [&](SubgroupId a, SubgroupId b) { return subgroups_[a].order() > subgroups_[b].order(); });
    auto& mu = moebius_[c];
    for (SubgroupId k : chain) {
      if (k == h) {
        mu[k] = 1;
        continue;
      }
      long sum = 0;
      for (const auto& [j, value] : mu) {
        if (j != k && subgroups_[k].is_subgroup_of(subgroups_[j])) sum += value;
      }
      mu[k] = -sum;
    }
  }
}

std::optional<SubgroupId> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(const Subgroup& h) const {
  if (&h.parent() != group_.get()) throw InputError("subgroup belongs to a different group");
  auto id = find(h.members());
  if (!id) throw InvariantViolation("subgroup missing from lattice");
  return *id;
}

bool SubgroupLattice::contains(SubgroupId small, SubgroupId big) const {
  return subgroups_[small].is_subgroup_of(subgroups_[big]);
}

SubgroupId SubgroupLattice::intersect(SubgroupId a, SubgroupId b) const {
  return index_.at(subgroups_[a].members() & subgroups_[b].members());
}

long SubgroupLattice::moebius(SubgroupId k, SubgroupId h) const {
  if (!contains(k, h)) throw InputError("moebius(K, H) requires K <= H");
  const ClassId c = class_of_[h];
  const Element x = conjugator_[h];  // h = x rep x^{-1}
  const SubgroupId k_rep = conjugate(k, group_->inverse(x));
  return moebius_[c].at(k_rep);
}

ClassId SubgroupLattice::op_p_class(ClassId c, unsigned long p) const {
  return class_of(mackey::op_p(representative(c), p));
}

}  // namespace mackey
