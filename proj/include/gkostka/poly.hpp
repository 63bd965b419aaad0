#pragma once

// Polynomials in q with integer coefficients, generalized Kostka polynomials, the iterated
// Littlewood-Richardson oracle and the Kostka-Foulkes polynomials.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gkostka/lrwords.hpp"
#include "gkostka/report.hpp"

namespace gkostka {

class QPoly {
 public:
  QPoly() = default;
  static QPoly monomial(int degree, std::int64_t c = 1);

  void add(int degree, std::int64_t c);
  [[nodiscard]] std::int64_t coeff(int degree) const;
  [[nodiscard]] const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] int degree() const;  // -1 for zero
  [[nodiscard]] std::int64_t at_one() const;
  /// q^n P(1/q). Throws if some degree exceeds n.
  [[nodiscard]] QPoly reflected(int n) const;
  /// Coefficientwise comparison.
  [[nodiscard]] bool leq(const QPoly& other) const;

  QPoly& operator+=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  bool operator==(const QPoly&) const = default;

 private:
  std::map<int, std::int64_t> terms_;  // no zero coefficients
};

/// "c0 + c1 q + c2 q^2", "0" for the zero polynomial.
[[nodiscard]] std::string to_string(const QPoly& p);
/// Dense coefficient array [c0, c1, ...].
[[nodiscard]] std::string to_json(const QPoly& p);

/// K_{shape;R}(q) = sum over LRT(shape;R) of q^{charge_R}.
[[nodiscard]] QPoly kostka_poly(const Partition& shape, const RectSeq& r);
/// All shapes at once.
[[nodiscard]] std::map<Partition, QPoly> kostka_polys(const RectSeq& r);

/// Coefficient of s_shape in the product of the rectangular Schur functions, by the iterated
/// Littlewood-Richardson rule on skew lattice fillings.
[[nodiscard]] std::int64_t lr_mult(const Partition& shape, const RectSeq& r);

/// Cocharge generating function of CST(lambda, mu).
[[nodiscard]] QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

/// K_{shape;R} <= K_{shape;S} for every shape, with theta as the witness.
[[nodiscard]] PropertyReport verify_monotonicity(const RectSeq& r, const RectSeq& s);
/// K_{shape^t;R'}(q) = q^{n(R)} K_{shape;R}(1/q), R' the dominant form of R^t.
[[nodiscard]] PropertyReport verify_duality(const RectSeq& r);

}  // namespace gkostka
