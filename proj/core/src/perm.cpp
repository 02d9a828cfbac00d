#include "mackey/perm.hpp"

#include <cctype>
#include <numeric>

#include "mackey/errors.hpp"

namespace mackey {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw InputError("generator is not a permutation");
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), Point{0});
  Perm p;
  p.images_ = std::move(id);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> moved(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      const Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) {
        throw InputError("cycle point " + std::to_string(from + 1) + " exceeds degree " + std::to_string(degree));
      }
      if (moved[from]) throw InputError("point " + std::to_string(from + 1) + " appears twice in cycle notation");
      moved[from] = true;
      images[from] = to;
    }
  }
  return Perm(std::move(images));
}

Perm Perm::parse_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("malformed cycle notation: expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw InputError("malformed cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw InputError(std::string("malformed cycle notation: unexpected '") + text[i] + "'");
      }
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > 1'000'000) throw InputError("malformed cycle notation: point out of range");
        ++i;
      }
      if (value == 0) throw InputError("malformed cycle notation: points are 1-based");
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw InputError("composing permutations of different degree");
  std::vector<Point> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[i] = rhs.images_[images_[i]];
  Perm p;
  p.images_ = std::move(out);
  return p;
}

Perm Perm::inverse() const {
  std::vector<Point> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[images_[i]] = static_cast<Point>(i);
  Perm p;
  p.images_ = std::move(out);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace mackey
