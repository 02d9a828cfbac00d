#include "mackey/catalog.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mackey/errors.hpp"

namespace mackey {

namespace {

using Point = Perm::Point;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Perm cycle_of_length(std::size_t degree, std::size_t len) {
  std::vector<Point> c(len);
  for (std::size_t i = 0; i < len; ++i) c[i] = static_cast<Point>(i);
  return Perm::from_cycles(degree, {c});
}

std::shared_ptr<const FiniteGroup> make_trivial(std::string name) {
  return FiniteGroup::generate(std::move(name), 1, {});
}

std::shared_ptr<const FiniteGroup> make_cyclic(std::size_t n, std::string name, std::size_t bound) {
  if (n == 0) throw InputError("cyclic:n needs n >= 1");
  if (n == 1) return make_trivial(std::move(name));
  return FiniteGroup::generate(std::move(name), n, {cycle_of_length(n, n)}, bound);
}

std::shared_ptr<const FiniteGroup> make_klein4(std::string name) {
  return FiniteGroup::generate(std::move(name), 4,
                               {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

std::shared_ptr<const FiniteGroup> make_dihedral(std::size_t n, std::string name, std::size_t bound) {
  if (n == 0) throw InputError("dihedral:n needs n >= 1");
  if (n == 1) return make_cyclic(2, std::move(name), bound);
  if (n == 2) return make_klein4(std::move(name));
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return FiniteGroup::generate(std::move(name), n, {cycle_of_length(n, n), Perm(reflection)}, bound);
}

std::shared_ptr<const FiniteGroup> make_symmetric(std::size_t n, std::string name, std::size_t bound) {
  if (n == 0) throw InputError("symmetric:n needs n >= 1");
  if (n == 1) return make_trivial(std::move(name));
  return FiniteGroup::generate(std::move(name), n,
                               {Perm::from_cycles(n, {{0, 1}}), cycle_of_length(n, n)}, bound);
}

std::shared_ptr<const FiniteGroup> make_alternating(std::size_t n, std::string name, std::size_t bound) {
  if (n == 0) throw InputError("alternating:n needs n >= 1");
  if (n < 3) return make_trivial(std::move(name));
  std::vector<Perm> gens;
  for (std::size_t k = 2; k < n; ++k) gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(k)}}));
  return FiniteGroup::generate(std::move(name), n, std::move(gens), bound);
}

std::shared_ptr<const FiniteGroup> make_quaternion(std::size_t n, std::string name) {
  if (n != 8) throw InputError("only quaternion:8 is supported");
  // Left-regular action on {1, i, -1, -i, j, -k, -j, k} (points 1..8).
  return FiniteGroup::generate(std::move(name), 8,
                               {Perm::parse_cycles(8, "(1 2 3 4)(5 6 7 8)"),
                                Perm::parse_cycles(8, "(1 5 3 7)(2 8 4 6)")});
}

class SpecParser {
 public:
  SpecParser(std::string_view text, std::size_t bound) : text_(text), bound_(bound) {}

  std::shared_ptr<const FiniteGroup> parse_all() {
    auto g = parse_one();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("bad group spec '" + std::string(text_) + "': " + why);
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  std::size_t number() {
    std::size_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a number at offset " + std::to_string(pos_));
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::shared_ptr<const FiniteGroup> parse_one() {
    const std::size_t start = pos_;
    auto name = [&] { return std::string(text_.substr(start, pos_ - start)); };
    if (consume("trivial")) return make_trivial(name());
    if (consume("klein4")) return make_klein4(name());
    if (consume("cyclic:")) {
      const std::size_t n = number();
      return make_cyclic(n, name(), bound_);
    }
    if (consume("dihedral:")) {
      const std::size_t n = number();
      return make_dihedral(n, name(), bound_);
    }
    if (consume("symmetric:")) {
      const std::size_t n = number();
      return make_symmetric(n, name(), bound_);
    }
    if (consume("alternating:")) {
      const std::size_t n = number();
      return make_alternating(n, name(), bound_);
    }
    if (consume("quaternion:")) {
      const std::size_t n = number();
      return make_quaternion(n, name());
    }
    if (consume("product:")) {
      auto a = parse_one();
      if (!consume(",")) fail("product needs two comma-separated factors");
      auto b = parse_one();
      return direct_product(*a, *b, name(), bound_);
    }
    if (consume("file:")) {
      std::size_t end = text_.find(',', pos_);
      if (end == std::string_view::npos) end = text_.size();
      const std::string path(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (path.empty()) fail("file: needs a path");
      auto g = load_generator_file(path, bound_);
      return FiniteGroup::generate(name(), g->degree(), g->generators(), bound_);
    }
    fail("unknown group family at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t bound_;
  std::size_t pos_ = 0;
};

}  // namespace

std::shared_ptr<const FiniteGroup> parse_group(std::string_view spec, std::size_t order_bound) {
  return SpecParser(spec, order_bound).parse_all();
}

std::shared_ptr<const FiniteGroup> parse_generator_text(std::string_view text, std::string name,
                                                        std::size_t order_bound) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<std::string> gen_lines;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw InputError("generator file line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    const std::string key = trim(std::string_view(t).substr(0, colon));
    const std::string value = trim(std::string_view(t).substr(colon + 1));
    if (key == "degree") {
      std::size_t d = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc() || ptr != value.data() + value.size() || d == 0) {
        throw InputError("generator file line " + std::to_string(line_no) + ": bad degree");
      }
      degree = d;
    } else if (key == "gen") {
      gen_lines.push_back(value);
    } else {
      throw InputError("generator file line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!degree) throw InputError("generator file is missing a 'degree:' line");
  if (gen_lines.empty()) throw InputError("generator file has no 'gen:' lines");
  std::vector<Perm> gens;
  for (const auto& g : gen_lines) gens.push_back(Perm::parse_cycles(*degree, g));
  return FiniteGroup::generate(std::move(name), *degree, std::move(gens), order_bound);
}

std::shared_ptr<const FiniteGroup> load_generator_file(const std::string& path, std::size_t order_bound) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open generator file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_generator_text(buf.str(), "file:" + path, order_bound);
}

std::shared_ptr<const FiniteGroup> direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name,
                                                  std::size_t order_bound) {
  if (a.order() * b.order() > order_bound) {
    throw InputError("group order exceeds bound " + std::to_string(order_bound));
  }
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = i < a.degree() ? g[i] : static_cast<Point>(i);
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = i < a.degree() ? static_cast<Point>(i) : static_cast<Point>(a.degree() + g[i - a.degree()]);
    }
    gens.emplace_back(std::move(images));
  }
  return FiniteGroup::generate(std::move(name), degree, std::move(gens), order_bound);
}

}  // namespace mackey
