#pragma once

// Exact arithmetic in GF(q^2), q = p^e, with elements stored as discrete
// logarithms to a fixed primitive element mu and addition via Zech tables.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skewlines {

/// A field element: either zero or mu^log with 0 <= log < q^2 - 1.
struct FieldElem {
  std::int32_t log = -1;

  static constexpr FieldElem zero() { return FieldElem{-1}; }
  static constexpr FieldElem one() { return FieldElem{0}; }

  constexpr bool is_zero() const { return log < 0; }
  constexpr bool is_one() const { return log == 0; }

  friend constexpr auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

enum class ArithOp { Add, Sub, Mul, Div };

class FieldSpec {
 public:
  /// GF(p^{2e}) built from the lexicographically smallest primitive
  /// polynomial of degree 2e over GF(p), coefficients compared constant
  /// term first.
  static FieldSpec build(int p, int e);

  /// Same field presented by a caller-supplied monic primitive polynomial
  /// (coefficients constant term first, length 2e + 1).
  static FieldSpec with_modulus(int p, int e, const std::vector<int>& modulus);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  /// q^2, the number of elements.
  int order() const { return order_; }
  /// q^2 - 1, the multiplicative group order.
  int unit_order() const { return order_ - 1; }
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem mu() const { return FieldElem{1}; }
  FieldElem power_of_mu(long long k) const;
  FieldElem minus_one() const { return minus_one_; }
  /// nu = mu^{(q-1) gcd(2,q) / 2}; satisfies nu^{q+1} = -1.
  FieldElem nu() const;
  /// Image of an integer in the prime subfield.
  FieldElem from_int(long long k) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a.is_zero() || b.is_zero()) return FieldElem::zero();
    return FieldElem{static_cast<std::int32_t>((a.log + b.log) % unit_order())};
  }
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, long long k) const;
  FieldElem arith(FieldElem a, FieldElem b, ArithOp op) const;

  /// a^{p^k}.
  FieldElem frobenius(FieldElem a, int k) const;
  /// a^q, the involution of GF(q^2) fixing GF(q).
  FieldElem conj(FieldElem a) const { return frobenius(a, e_); }
  /// a^{q+1}.
  FieldElem norm(FieldElem a) const { return pow(a, q_ + 1); }
  bool in_base_field(FieldElem a) const { return conj(a) == a; }

  /// Additive representation: base-p digits of the polynomial in mu.
  int to_code(FieldElem a) const;
  FieldElem from_code(int code) const;

  /// All elements: zero first, then mu^0, mu^1, ...
  std::vector<FieldElem> elements() const;
  /// All k-th roots of c, sorted by exponent.
  std::vector<FieldElem> roots(FieldElem c, int k) const;
  std::string to_string(FieldElem a) const;

 private:
  FieldSpec() = default;
  void build_tables(const std::vector<int>& modulus);

  int p_ = 0;
  int e_ = 0;
  int q_ = 0;
  int order_ = 0;
  std::vector<int> modulus_;
  std::vector<std::int32_t> exp_;   // exponent -> additive code
  std::vector<std::int32_t> log_;   // additive code -> exponent (-1 for 0)
  std::vector<std::int32_t> zech_;  // a -> log(1 + mu^a), -1 if zero
  FieldElem minus_one_;
};

bool is_prime(long long n);

/// Factors q = p^e; throws PreconditionViolated if q is not a prime power.
std::pair<int, int> prime_power(int q);

/// Order of mu^a as a multiplicative element; 0 for zero.
long long multiplicative_order(const FieldSpec& f, FieldElem a);

/// Whether the monic degree-n polynomial over GF(p) (coefficients constant
/// first, length n + 1) is primitive. Brute force on the power sequence of x.
bool is_primitive_polynomial(int p, const std::vector<int>& coeffs);

}  // namespace skewlines
