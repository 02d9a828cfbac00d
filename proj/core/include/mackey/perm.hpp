#ifndef MACKEY_PERM_HPP
#define MACKEY_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mackey {

/// A permutation of {0, ..., degree-1}. Points act on the right:
/// i^(a*b) = (i^a)^b.
class Perm {
 public:
  using Point = std::uint32_t;

  Perm() = default;
  /// Throws InputError if `images` is not a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// Cycles use 0-based points.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  /// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "()".
  static Perm parse_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  /// 1-based cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace mackey

#endif  // MACKEY_PERM_HPP
