#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace avoid321 {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in multiplication");
  return r;
}

/// Sparse polynomial with exact signed 64-bit coefficients in one (q) or two
/// (q, t) variables. Zero coefficients are never stored; every operation
/// throws std::overflow_error instead of wrapping.
template <std::size_t Arity>
class SignedPolynomial {
  static_assert(Arity == 1 || Arity == 2);

 public:
  using Exponent = std::array<int, Arity>;
  using Terms = std::map<Exponent, std::int64_t>;

  SignedPolynomial() = default;

  static SignedPolynomial monomial(const Exponent& e, std::int64_t coefficient = 1) {
    SignedPolynomial p;
    p.add(e, coefficient);
    return p;
  }

  void add(const Exponent& e, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coefficient);
    if (!inserted) {
      it->second = checked_add(it->second, coefficient);
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SignedPolynomial& operator+=(const SignedPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
  }

  SignedPolynomial& operator-=(const SignedPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add(e, checked_mul(c, -1));
    return *this;
  }

  friend SignedPolynomial operator+(SignedPolynomial a, const SignedPolynomial& b) { return a += b; }
  friend SignedPolynomial operator-(SignedPolynomial a, const SignedPolynomial& b) { return a -= b; }

  friend SignedPolynomial operator*(const SignedPolynomial& a, const SignedPolynomial& b) {
    SignedPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t v = 0; v < Arity; ++v) e[v] = ea[v] + eb[v];
        out.add(e, checked_mul(ca, cb));
      }
    }
    return out;
  }

  friend bool operator==(const SignedPolynomial&, const SignedPolynomial&) = default;

  /// Exponent key used by JSON/CSV reports: "3" or "3,2".
  static std::string key(const Exponent& e) {
    std::string s = std::to_string(e[0]);
    for (std::size_t v = 1; v < Arity; ++v) s += "," + std::to_string(e[v]);
    return s;
  }

 private:
  Terms terms_;
};

using Polynomial = SignedPolynomial<1>;
using BivariatePolynomial = SignedPolynomial<2>;

/// Human-readable form such as "q^3 - q" or "q^3*t^2 + 1"; "0" when empty.
template <std::size_t Arity>
std::string to_string(const SignedPolynomial<Arity>& p) {
  if (p.is_zero()) return "0";
  static constexpr const char* names[] = {"q", "t"};
  std::ostringstream out;
  bool first = true;
  // Highest degree first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (e[v] != 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << mono;
    }
  }
  return out.str();
}

}  // namespace avoid321
