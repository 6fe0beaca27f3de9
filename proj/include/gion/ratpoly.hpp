#pragma once

#include "gion/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gion {

/// Dense univariate polynomial with exact rational coefficients, stored by
/// ascending degree and kept trimmed (nonzero leading coefficient).
class RatPoly {
 public:
  RatPoly() = default;  // zero polynomial
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(int degree, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^k; zero outside the stored range.
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;

  RatPoly derivative() const;
  RatPoly monic() const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& lhs, const RatPoly& rhs);
  friend RatPoly operator-(const RatPoly& lhs, const RatPoly& rhs);
  friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
  RatPoly operator*(const Rational& c) const;
  friend bool operator==(const RatPoly& lhs, const RatPoly& rhs) = default;

  /// Euclidean division: *this == quotient * divisor + remainder with
  /// deg remainder < deg divisor. Throws std::domain_error on zero divisor.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Rational eval(const RatPoly& poly, const Rational& point);
/// Horner evaluation on double-rounded coefficients.
double eval(const RatPoly& poly, double point);

/// Monic greatest common divisor; gcd(f, 0) = monic f.
/// Throws std::domain_error when both arguments are zero.
RatPoly gcd(const RatPoly& f, const RatPoly& g);

/// f with repeated roots stripped: f / gcd(f, f'). Leading sign follows f.
RatPoly square_free_part(const RatPoly& f);

/// Sturm sequence of a square-free polynomial. The first two entries are
/// the polynomial and its derivative; each later entry is the negated
/// Euclidean remainder rescaled to primitive integer form by a positive
/// factor, which leaves every sign variation unchanged.
struct SturmChain {
  std::vector<RatPoly> polys;
  /// Number of sign changes in the chain evaluated exactly at `at`
  /// (zeros skipped).
  int sign_variations(const Rational& at) const;
};

SturmChain sturm_chain(const RatPoly& square_free);

/// Exact number of distinct real roots in the half-open interval (lo, hi].
/// Throws EndpointRootError if an endpoint is a root, std::invalid_argument
/// on a zero polynomial or lo >= hi.
int sturm_count(const RatPoly& poly, const Rational& lo, const Rational& hi);

struct RootRefinement {
  double root = 0;
  double lo = 0;  // final bracket
  double hi = 0;
  int iterations = 0;
};

/// Hybrid Newton/bisection refinement of a bracketed root: Newton steps are
/// accepted only when they stay inside the current bracket and reduce |f|;
/// otherwise the interval is bisected. Stops once the bracket width is
/// <= 2*tol (so the returned midpoint is within tol of the root).
/// Throws BracketingError without a sign change on [lo, hi] and
/// ConvergenceError past 200 iterations.
RootRefinement refine_root_info(const RatPoly& poly, double lo, double hi,
                                double tol);
double refine_root(const RatPoly& poly, double lo, double hi, double tol);

/// Degrees of the irreducible factors of poly mod p, repeated factors
/// reported with their multiplicity (so the degrees sum to deg(poly mod p)).
/// Requires p an odd prime dividing neither the leading numerator nor any
/// coefficient denominator (else BadPrimeError).
std::multiset<int> factor_degrees_mod_p(const RatPoly& poly, std::uint64_t p);

enum class IrredVerdict { Irreducible, Reducible, Unknown };

std::string to_string(IrredVerdict verdict);

struct IrreducibilityCertificate {
  IrredVerdict verdict = IrredVerdict::Unknown;
  /// Prime p with poly irreducible mod p (verdict Irreducible).
  std::optional<std::uint64_t> witness_prime;
  /// Rational root exhibiting a linear factor (verdict Reducible).
  std::optional<Rational> witness_root;
  std::string detail;
};

/// One-sided irreducibility test over Q: a rational-root scan (degree >= 2)
/// followed by reduction mod the first 25 odd primes that do not divide the
/// leading coefficient or a denominator. Irreducible mod p certifies
/// irreducibility over Q; if no prime certifies and no rational root was
/// found the verdict is Unknown (the test is sufficient, not necessary).
IrreducibilityCertificate irreducibility_certificate(const RatPoly& poly);

}  // namespace gion
