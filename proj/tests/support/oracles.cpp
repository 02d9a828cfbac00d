#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

Element mul(const FiniteGroup& g, Element a, Element b) {
  auto idx = g.index_of(g.element(a) * g.element(b));
  if (!idx) throw std::logic_error("product left the group");
  return *idx;
}

Element inv(const FiniteGroup& g, Element a) { return *g.index_of(g.element(a).inverse()); }

ESet close(const FiniteGroup& g, ESet gens) {
  ESet out = std::move(gens);
  out.insert(FiniteGroup::identity());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Element> cur(out.begin(), out.end());
    for (Element a : cur)
      for (Element b : cur) grew |= out.insert(mul(g, a, b)).second;
  }
  return out;
}

ESet conjugate(const FiniteGroup& g, const ESet& h, Element x) {
  ESet out;
  const Element xi = inv(g, x);
  for (Element e : h) out.insert(mul(g, mul(g, x, e), xi));
  return out;
}

bool subset(const ESet& a, const ESet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

ESet intersect(const ESet& a, const ESet& b) {
  ESet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::vector<ESet> all_subgroups(const FiniteGroup& g) {
  std::set<ESet> seen{ESet{FiniteGroup::identity()}};
  std::vector<ESet> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<ESet> next;
    for (const ESet& h : frontier) {
      for (Element e = 0; e < g.order(); ++e) {
        if (h.count(e)) continue;
        ESet gens = h;
        gens.insert(e);
        ESet k = close(g, std::move(gens));
        if (seen.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::size_t>> subgroup_classes(const FiniteGroup& g, const std::vector<ESet>& subs) {
  std::vector<int> cls(subs.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] >= 0) continue;
    std::set<ESet> conj;
    for (Element x = 0; x < g.order(); ++x) conj.insert(conjugate(g, subs[i], x));
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (conj.count(subs[j])) {
        cls[j] = static_cast<int>(out.size());
        members.push_back(j);
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

std::size_t normalizer_order(const FiniteGroup& g, const ESet& h) {
  std::size_t n = 0;
  for (Element x = 0; x < g.order(); ++x) n += conjugate(g, h, x) == h;
  return n;
}

long mark(const FiniteGroup& g, const ESet& k, const ESet& h) {
  std::set<ESet> cosets;
  for (Element x = 0; x < g.order(); ++x) {
    ESet c;
    for (Element e : k) c.insert(mul(g, x, e));
    cosets.insert(std::move(c));
  }
  long fixed = 0;
  for (const ESet& c : cosets) {
    bool ok = true;
    for (Element e : h) {
      ESet moved;
      for (Element y : c) moved.insert(mul(g, e, y));
      if (moved != c) {
        ok = false;
        break;
      }
    }
    fixed += ok;
  }
  return fixed;
}

long moebius(const std::vector<ESet>& subs, const ESet& k, const ESet& h) {
  if (!subset(k, h)) throw std::invalid_argument("moebius needs K <= H");
  if (k == h) return 1;
  long sum = 0;
  for (const ESet& j : subs) {
    if (j != h && subset(k, j) && subset(j, h)) sum += moebius(subs, k, j);
  }
  return -sum;
}

std::vector<ESet> double_cosets(const FiniteGroup& g, const ESet& a, const ESet& b) {
  std::set<ESet> out;
  for (Element x = 0; x < g.order(); ++x) {
    ESet d;
    for (Element u : a)
      for (Element v : b) d.insert(mul(g, mul(g, u, x), v));
    out.insert(std::move(d));
  }
  return {out.begin(), out.end()};
}

std::size_t mackey_rank(const FiniteGroup& g) {
  const auto subs = all_subgroups(g);
  std::size_t rank = 0;
  for (const ESet& h : subs) {
    for (const ESet& l : subs) {
      // Points (x, C) with C a subgroup of H ∩ xLx^-1.
      std::vector<std::pair<Element, std::size_t>> points;
      for (Element x = 0; x < g.order(); ++x) {
        const ESet s = intersect(h, conjugate(g, l, x));
        for (std::size_t c = 0; c < subs.size(); ++c)
          if (subset(subs[c], s)) points.emplace_back(x, c);
      }
      std::vector<std::size_t> parent(points.size());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
      };
      auto index = [&](Element x, std::size_t c) {
        auto it = std::lower_bound(points.begin(), points.end(), std::make_pair(x, c));
        return static_cast<std::size_t>(it - points.begin());
      };
      for (std::size_t p = 0; p < points.size(); ++p) {
        const auto [x, c] = points[p];
        for (Element a : h) {
          const ESet moved = conjugate(g, subs[c], a);
          const std::size_t mc = static_cast<std::size_t>(std::find(subs.begin(), subs.end(), moved) - subs.begin());
          for (Element b : l) {
            const Element y = mul(g, mul(g, a, x), inv(g, b));
            parent[find(p)] = find(index(y, mc));
          }
        }
      }
      for (std::size_t p = 0; p < points.size(); ++p) rank += find(p) == p;
    }
  }
  return rank;
}

mackey::Rational cofactor_det(const mackey::Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  mackey::Rational sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    mackey::Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const mackey::Rational term = m(0, c) * cofactor_det(minor);
    sum += (c % 2 == 0) ? term : mackey::Rational(-term);
  }
  return sum;
}

bool is_square_free(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> groups = {
      "trivial",      "cyclic:2",   "cyclic:3",     "cyclic:4",      "cyclic:6",  "cyclic:9",  "klein4",
      "symmetric:3", "dihedral:4", "quaternion:8", "dihedral:5", "alternating:4", "cyclic:15", "dihedral:6"};
  return groups;
}

}  // namespace oracle
