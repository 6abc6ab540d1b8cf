#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "lpa/ambient.hpp"
#include "lpa/basis.hpp"

namespace lpa {

/// Element of L(E): a finite linear combination of basis paths.
///
/// Terms with zero coefficient are never stored, so two elements are equal
/// iff their term maps are equal.
class AlgebraElement {
 public:
  explicit AlgebraElement(AmbientPtr ambient) : ambient_(std::move(ambient)) {}

  /// k * x for a basis path x. Throws Error if x is not in X.
  static AlgebraElement monomial(AmbientPtr ambient, const Path& x, const Scalar& k = Scalar(1));

  const AmbientPtr& ambient() const { return ambient_; }
  const std::map<Path, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Path& x) const;

  /// Adds k * x without checking that x is a basis path.
  void add_term(const Path& x, const Scalar& k);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  AmbientPtr ambient_;
  std::map<Path, Scalar> terms_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const Scalar& k, const AlgebraElement& a);

/// Product of two basis paths, rewritten to normal form.
AlgebraElement multiply_monomials(const AmbientPtr& ambient, const Path& x, const Path& y);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Image of a word in the generators v, e, e* (ill-composed words give 0).
AlgebraElement reduce_word(const AmbientPtr& ambient, std::span<const Letter> word);
AlgebraElement reduce_word(const AmbientPtr& ambient, std::string_view word);

/// "2*d.e* + -1/2*v - e". With reduce = false every monomial must already be
/// a basis path; with reduce = true monomials are arbitrary words.
AlgebraElement parse_element(const AmbientPtr& ambient, std::string_view text, bool reduce = false);
/// Terms in basis order; "0" for the zero element.
std::string format_element(const AlgebraElement& a);

}  // namespace lpa
