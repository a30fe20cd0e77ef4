#pragma once

#include <cctype>
#include <string>
#include <variant>

#include "pdcox/rational.hpp"

namespace pdcox {

// point of the projective line: a rational coordinate, the point at
// infinity, or a symbolic point (used for unnamed preimages under covers)
class P1Point {
 public:
  P1Point() : value_(Rat(0)) {}
  static P1Point rational(const Rat& v) { return P1Point(v); }
  static P1Point infinity() { return P1Point(Inf{}); }
  static P1Point symbolic(std::string label) { return P1Point(Sym{std::move(label)}); }

  bool is_rational() const { return std::holds_alternative<Rat>(value_); }
  bool is_infinity() const { return std::holds_alternative<Inf>(value_); }
  bool is_symbolic() const { return std::holds_alternative<Sym>(value_); }

  const Rat& coordinate() const { return std::get<Rat>(value_); }
  const std::string& label() const { return std::get<Sym>(value_).label; }

  bool operator==(const P1Point& o) const {
    if (value_.index() != o.value_.index()) return false;
    if (is_rational()) return coordinate() == o.coordinate();
    if (is_symbolic()) return label() == o.label();
    return true;
  }
  bool operator!=(const P1Point& o) const { return !(*this == o); }

  // rationals by value, then infinity, then symbolic by label
  bool operator<(const P1Point& o) const {
    if (value_.index() != o.value_.index()) return value_.index() < o.value_.index();
    if (is_rational()) return coordinate() < o.coordinate();
    if (is_symbolic()) return label() < o.label();
    return false;
  }

  std::string to_string() const {
    if (is_rational()) return pdcox::to_string(coordinate());
    if (is_infinity()) return "inf";
    return label();
  }

  static P1Point parse(const std::string& s, int line = 0) {
    if (s == "inf" || s == "infinity") return infinity();
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' || s[0] == '+'))
      return rational(parse_rational(s, line));
    if (s.empty()) throw SchemaError("empty point", line);
    return symbolic(s);
  }

 private:
  struct Inf {};
  struct Sym {
    std::string label;
  };
  explicit P1Point(Rat v) : value_(std::move(v)) {}
  explicit P1Point(Inf i) : value_(i) {}
  explicit P1Point(Sym s) : value_(std::move(s)) {}

  std::variant<Rat, Inf, Sym> value_;
};

}  // namespace pdcox
