#include "mackey/group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "mackey/errors.hpp"

namespace mackey {

// ---------------------------------------------------------------------------
// ElementSet

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::vector<Element> ElementSet::to_vector() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h;
}

// ---------------------------------------------------------------------------
// FiniteGroup

std::shared_ptr<const FiniteGroup> FiniteGroup::generate(std::string name, std::size_t degree,
                                                         std::vector<Perm> generators,
                                                         std::size_t order_bound) {
  if (degree == 0) throw InputError("group degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree does not match group degree");
  }

  std::set<Perm> seen{Perm::identity(degree)};
  std::deque<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    Perm current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Perm next = current * g;
      if (seen.insert(next).second) {
        if (seen.size() > order_bound) {
          throw InputError("group order exceeds bound " + std::to_string(order_bound));
        }
        frontier.push_back(std::move(next));
      }
    }
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->name_ = std::move(name);
  group->degree_ = degree;
  group->generators_ = std::move(generators);
  group->elements_.assign(seen.begin(), seen.end());

  const std::size_t n = group->elements_.size();
  group->table_.resize(n * n);
  group->inverses_.resize(n);
  group->orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      group->table_[a * n + b] = *group->index_of(group->elements_[a] * group->elements_[b]);
    }
    group->inverses_[a] = *group->index_of(group->elements_[a].inverse());
    group->orders_[a] = group->elements_[a].order();
  }
  return group;
}

std::optional<Element> FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<Element>(it - elements_.begin());
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(const FiniteGroup& parent, ElementSet members)
    : parent_(&parent), members_(std::move(members)), elements_(members_.to_vector()) {}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  ElementSet s(parent.order());
  s.set(FiniteGroup::identity());
  return Subgroup(parent, std::move(s));
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  ElementSet s(parent.order());
  for (Element e = 0; e < parent.order(); ++e) s.set(e);
  return Subgroup(parent, std::move(s));
}

Subgroup closure(const FiniteGroup& group, std::span<const Element> generators) {
  ElementSet members(group.order());
  members.set(FiniteGroup::identity());
  std::vector<Element> frontier{FiniteGroup::identity()};
  while (!frontier.empty()) {
    const Element current = frontier.back();
    frontier.pop_back();
    for (Element g : generators) {
      const Element next = group.multiply(current, g);
      if (!members.test(next)) {
        members.set(next);
        frontier.push_back(next);
      }
    }
  }
  return Subgroup(group, std::move(members));
}

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (&a.parent() != &b.parent()) throw InputError("subgroups belong to different parent groups");
}

}  // namespace

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return Subgroup(a.parent(), a.members() & b.members());
}

Subgroup conjugate(const Subgroup& h, Element g) {
  const FiniteGroup& group = h.parent();
  ElementSet s(group.order());
  for (Element e : h.elements()) s.set(group.conjugate(g, e));
  return Subgroup(group, std::move(s));
}

Subgroup normalizer(const Subgroup& h) { return normalizer(h, Subgroup::whole(h.parent())); }

Subgroup normalizer(const Subgroup& h, const Subgroup& within) {
  require_same_parent(h, within);
  const FiniteGroup& group = h.parent();
  ElementSet s(group.order());
  for (Element g : within.elements()) {
    bool fixes = true;
    for (Element e : h.elements()) {
      if (!h.contains(group.conjugate(g, e))) {
        fixes = false;
        break;
      }
    }
    if (fixes) s.set(g);
  }
  return Subgroup(group, std::move(s));
}

bool is_normal_in(const Subgroup& n, const Subgroup& h) {
  require_same_parent(n, h);
  if (!n.is_subgroup_of(h)) return false;
  const FiniteGroup& group = n.parent();
  for (Element g : h.elements())
    for (Element e : n.elements())
      if (!n.contains(group.conjugate(g, e))) return false;
  return true;
}

Subgroup op_p(const Subgroup& h, unsigned long p) {
  const FiniteGroup& group = h.parent();
  std::vector<Element> gens;
  for (Element e : h.elements()) {
    if (group.element_order(e) % p != 0) gens.push_back(e);
  }
  return closure(group, gens);
}

std::vector<Element> double_coset_reps(const Subgroup& a, const Subgroup& b) {
  return double_coset_reps(a, b, Subgroup::whole(a.parent()));
}

std::vector<Element> double_coset_reps(const Subgroup& a, const Subgroup& b, const Subgroup& within) {
  require_same_parent(a, b);
  require_same_parent(a, within);
  const FiniteGroup& group = a.parent();
  std::vector<bool> visited(group.order(), false);
  std::vector<Element> reps;
  for (Element g : within.elements()) {  // ascending
    if (visited[g]) continue;
    reps.push_back(g);
    for (Element x : a.elements()) {
      const Element xg = group.multiply(x, g);
      for (Element y : b.elements()) visited[group.multiply(xg, y)] = true;
    }
  }
  return reps;
}

std::shared_ptr<const FiniteGroup> as_group(const Subgroup& h, std::string name) {
  const FiniteGroup& group = h.parent();
  std::vector<Perm> gens;
  // A generating set: add elements until the closure is all of h.
  std::vector<Element> chosen;
  Subgroup span_so_far = Subgroup::trivial(group);
  for (Element e : h.elements()) {
    if (span_so_far.contains(e)) continue;
    chosen.push_back(e);
    span_so_far = closure(group, chosen);
    if (span_so_far.order() == h.order()) break;
  }
  for (Element e : chosen) gens.push_back(group.element(e));
  return FiniteGroup::generate(std::move(name), group.degree(), std::move(gens), h.order());
}

}  // namespace mackey
