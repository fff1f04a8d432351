#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slicefloer {

// Integer Laurent polynomial. coeffs[k] is the coefficient of
// t^(min_degree + k). The zero polynomial has an empty coefficient list;
// otherwise the first and last coefficients are nonzero.
//
// All arithmetic is exact; any int64 overflow throws InternalError rather
// than wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int min_degree, std::vector<std::int64_t> coeffs);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(std::int64_t c);
  static LaurentPoly monomial(std::int64_t c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const { return min_degree_; }
  int max_degree() const;
  // max_degree - min_degree; 0 for constants and the zero polynomial.
  int span() const;
  std::int64_t coeff(int degree) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const = default;

  // Multiply by t^k.
  LaurentPoly shifted(int k) const;
  // Substitute t -> t^-1.
  LaurentPoly reciprocal() const;
  std::int64_t evaluate(std::int64_t t) const;  // only for t = +-1 sized inputs
  bool is_palindromic() const;                  // p(t) == p(1/t)

  // Exact division; throws InternalError if the division leaves a remainder.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // "min:c0,c1,..." e.g. "-1:1,-1,1" for t^-1 - 1 + t; "0:" for zero.
  std::string serialize() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void trim();
  int min_degree_ = 0;
  std::vector<std::int64_t> coeffs_;
};

// Normalize a knot polynomial computed up to units +-t^a: center it so that
// p(t) = p(1/t) and scale by -1 if needed so p(1) = 1. Throws InternalError
// if the input cannot be normalized that way (|p(1)| != 1 or asymmetric
// support), which signals a bug in the caller's determinant.
LaurentPoly normalize_alexander(const LaurentPoly& p);

}  // namespace slicefloer
