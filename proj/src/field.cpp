#include "skewlines/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewlines/error.hpp"

namespace skewlines {

namespace {

constexpr long long kMaxOrder = 1 << 16;

long long ipow(long long b, int k) {
  long long r = 1;
  while (k-- > 0) r *= b;
  return r;
}

// Walks the powers of x modulo a monic polynomial and returns the order of
// x, or 0 if x never returns to 1 within p^n - 1 steps. Codes are base-p
// digit strings, digit i = coefficient of x^i.
long long order_of_x(int p, const std::vector<int>& coeffs,
                     std::vector<std::int32_t>* powers) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  const long long total = ipow(p, n) - 1;
  std::vector<int> cur(n, 0);
  cur[0] = 1;
  auto encode = [&](const std::vector<int>& v) {
    std::int32_t code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * p + v[i];
    return code;
  };
  if (powers) powers->assign(1, encode(cur));
  for (long long k = 1; k <= total; ++k) {
    // multiply by x; x^n = -sum c_i x^i
    const int top = cur[n - 1];
    for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < n; ++i)
        cur[i] = ((cur[i] - top * coeffs[i]) % p + p) % p;
    }
    bool is_one = cur[0] == 1;
    for (int i = 1; i < n && is_one; ++i) is_one = cur[i] == 0;
    if (is_one) return k;
    if (powers) powers->push_back(encode(cur));
  }
  return 0;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::DivideByZero: return "DivideByZero";
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::OffSurfaceLine: return "OffSurfaceLine";
    case ErrorCode::SameLine: return "SameLine";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::EmptyPivotPool: return "EmptyPivotPool";
    case ErrorCode::InvalidStabilizer: return "InvalidStabilizer";
    case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NotSkewTriple: return "NotSkewTriple";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::DegenerateQuadric: return "DegenerateQuadric";
    case ErrorCode::ChordCountMismatch: return "ChordCountMismatch";
    case ErrorCode::PairingFailure: return "PairingFailure";
    case ErrorCode::CrossLineOffSurface: return "CrossLineOffSurface";
    case ErrorCode::NotSkewInternal: return "NotSkewInternal";
    case ErrorCode::ConfigCountMismatch: return "ConfigCountMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) break;
    int e = 0, rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest == 1) return {p, e};
    break;
  }
  throw Error(ErrorCode::PreconditionViolated, std::to_string(q) + " is not a prime power");
}

bool is_primitive_polynomial(int p, const std::vector<int>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1 || coeffs.back() != 1 || coeffs[0] % p == 0) return false;
  return order_of_x(p, coeffs, nullptr) == ipow(p, n) - 1;
}

FieldSpec FieldSpec::build(int p, int e) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p));
  if (e < 1) throw Error(ErrorCode::FieldTooLarge, "e must be positive");
  const int n = 2 * e;
  if (n > 16 || ipow(p, n) > kMaxOrder)
    throw Error(ErrorCode::FieldTooLarge,
                "q^2 = " + std::to_string(p) + "^" + std::to_string(n) +
                    " exceeds 2^16");
  // Lexicographic order on (c0, c1, ..., c_{n-1}): c_{n-1} varies fastest.
  std::vector<int> coeffs(n + 1, 0);
  coeffs[n] = 1;
  const long long candidates = ipow(p, n);
  for (long long idx = 0; idx < candidates; ++idx) {
    long long rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      coeffs[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    if (is_primitive_polynomial(p, coeffs)) return with_modulus(p, e, coeffs);
  }
  throw Error(ErrorCode::Internal, "no primitive polynomial found");
}

FieldSpec FieldSpec::with_modulus(int p, int e, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p));
  const int n = 2 * e;
  if (e < 1 || n > 16 || ipow(p, n) > kMaxOrder)
    throw Error(ErrorCode::FieldTooLarge, "q^2 exceeds 2^16");
  if (static_cast<int>(modulus.size()) != n + 1)
    throw Error(ErrorCode::InvalidModulus,
                "expected " + std::to_string(n + 1) + " coefficients");
  for (int c : modulus)
    if (c < 0 || c >= p)
      throw Error(ErrorCode::InvalidModulus, "coefficient out of range");
  if (!is_primitive_polynomial(p, modulus))
    throw Error(ErrorCode::InvalidModulus, "polynomial is not primitive");
  FieldSpec f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<int>(ipow(p, e));
  f.order_ = static_cast<int>(ipow(p, n));
  f.build_tables(modulus);
  return f;
}

void FieldSpec::build_tables(const std::vector<int>& modulus) {
  modulus_ = modulus;
  order_of_x(p_, modulus, &exp_);
  const int units = unit_order();
  log_.assign(order_, -1);
  for (int a = 0; a < units; ++a) log_[exp_[a]] = a;
  zech_.assign(units, -1);
  for (int a = 0; a < units; ++a) {
    // adding 1 touches only the constant digit
    const int code = exp_[a];
    const int digit0 = code % p_;
    const int sum = code - digit0 + (digit0 + 1) % p_;
    zech_[a] = log_[sum];
  }
  minus_one_ = p_ == 2 ? FieldElem::one() : FieldElem{units / 2};
}

FieldElem FieldSpec::power_of_mu(long long k) const {
  const long long n = unit_order();
  return FieldElem{static_cast<std::int32_t>(((k % n) + n) % n)};
}

FieldElem FieldSpec::nu() const {
  const int g = p_ == 2 ? 2 : 1;
  const FieldElem v = power_of_mu(static_cast<long long>(q_ - 1) * g / 2);
  if (pow(v, q_ + 1) != minus_one_)
    throw Error(ErrorCode::Internal, "nu^{q+1} != -1; field tables are broken");
  return v;
}

FieldElem FieldSpec::from_int(long long k) const {
  const int r = static_cast<int>(((k % p_) + p_) % p_);
  return from_code(r);
}

FieldElem FieldSpec::add(FieldElem a, FieldElem b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int n = unit_order();
  const int d = ((b.log - a.log) % n + n) % n;
  const int z = zech_[d];
  if (z < 0) return FieldElem::zero();
  return FieldElem{static_cast<std::int32_t>((a.log + z) % n)};
}

FieldElem FieldSpec::neg(FieldElem a) const { return mul(a, minus_one_); }

FieldElem FieldSpec::inv(FieldElem a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivideByZero, "inverse of zero");
  const int n = unit_order();
  return FieldElem{static_cast<std::int32_t>((n - a.log) % n)};
}

FieldElem FieldSpec::pow(FieldElem a, long long k) const {
  if (a.is_zero()) {
    if (k == 0) return FieldElem::one();
    if (k < 0) throw Error(ErrorCode::DivideByZero, "negative power of zero");
    return a;
  }
  const long long n = unit_order();
  const long long r = ((static_cast<long long>(a.log) * (k % n)) % n + n) % n;
  return FieldElem{static_cast<std::int32_t>(r)};
}

FieldElem FieldSpec::arith(FieldElem a, FieldElem b, ArithOp op) const {
  switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::Div: return div(a, b);
  }
  return FieldElem::zero();
}

FieldElem FieldSpec::frobenius(FieldElem a, int k) const {
  if (a.is_zero()) return a;
  const long long n = unit_order();
  long long m = 1;
  for (int i = 0; i < k; ++i) m = (m * p_) % n;
  return FieldElem{static_cast<std::int32_t>((a.log * m) % n)};
}

int FieldSpec::to_code(FieldElem a) const {
  return a.is_zero() ? 0 : exp_[a.log];
}

FieldElem FieldSpec::from_code(int code) const {
  return FieldElem{log_.at(code)};
}

std::vector<FieldElem> FieldSpec::elements() const {
  std::vector<FieldElem> out;
  out.reserve(order_);
  out.push_back(FieldElem::zero());
  for (int a = 0; a < unit_order(); ++a) out.push_back(FieldElem{a});
  return out;
}

std::vector<FieldElem> FieldSpec::roots(FieldElem c, int k) const {
  std::vector<FieldElem> out;
  if (c.is_zero()) {
    out.push_back(FieldElem::zero());
    return out;
  }
  for (int a = 0; a < unit_order(); ++a)
    if (pow(FieldElem{a}, k) == c) out.push_back(FieldElem{a});
  return out;
}

std::string FieldSpec::to_string(FieldElem a) const {
  if (a.is_zero()) return "0";
  if (a.log == 0) return "1";
  std::ostringstream os;
  os << "mu^" << a.log;
  return os.str();
}

long long multiplicative_order(const FieldSpec& f, FieldElem a) {
  if (a.is_zero()) return 0;
  const long long n = f.unit_order();
  return n / std::gcd(static_cast<long long>(a.log), n);
}

}  // namespace skewlines
