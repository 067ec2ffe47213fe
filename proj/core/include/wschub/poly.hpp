#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wschub {

using Rational = mpq_class;

/// Reduced "num/den" text; the denominator is always present.
std::string rational_to_string(const Rational& q);
/// Accepts "num/den" or a bare integer. Throws DomainError otherwise.
Rational parse_rational(const std::string& text);

inline constexpr int kMaxVariables = 16;

/// Ordered list of distinct variable names. Contexts compare by names, so two
/// independently built contexts with the same names are interchangeable.
class VariableContext {
 public:
  static std::shared_ptr<const VariableContext> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_;
  }

 private:
  explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

/// "y1".."yn".
ContextPtr ordinary_context(int n);
/// "y1".."yn","z".
ContextPtr cone_context(int n);
/// "Yw1".."Ywn".
ContextPtr weighted_context(int n);

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Dense exponent vector, one byte per variable. Variables 0..7 live in `hi`
/// and 8..15 in `lo`, most significant byte first, so lexicographic order on
/// exponent vectors is the unsigned order on (hi, lo).
class Monomial {
 public:
  constexpr Monomial() = default;

  int exponent(std::size_t var) const {
    const std::uint64_t word = var < 8 ? hi_ : lo_;
    return static_cast<int>((word >> shift(var)) & 0xffu);
  }
  void set_exponent(std::size_t var, int e);

  int degree() const { return byte_sum(hi_) + byte_sum(lo_); }
  bool is_one() const { return hi_ == 0 && lo_ == 0; }

  /// Throws DomainError if any exponent would exceed 255.
  Monomial operator*(const Monomial& o) const;

  /// Graded lexicographic: total degree first, then lex on declared order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const { return std::hash<std::uint64_t>{}(hi_ * 0x9e3779b97f4a7c15ull ^ lo_); }

 private:
  static constexpr unsigned shift(std::size_t var) { return static_cast<unsigned>(56 - 8 * (var % 8)); }
  static int byte_sum(std::uint64_t w) {
    w = (w & 0x00ff00ff00ff00ffull) + ((w >> 8) & 0x00ff00ff00ff00ffull);
    w = (w & 0x0000ffff0000ffffull) + ((w >> 16) & 0x0000ffff0000ffffull);
    return static_cast<int>((w & 0xffffffffull) + (w >> 32));
  }

  std::uint64_t hi_ = 0;
  std::uint64_t lo_ = 0;
};

struct Term {
  Monomial mono;
  Rational coeff;

  Term() = default;
  Term(Monomial m, Rational c) noexcept : mono(m) { mpq_swap(coeff.get_mpq_t(), c.get_mpq_t()); }
  Term(const Term&) = default;
  Term& operator=(const Term&) = default;
  // gmpxx's move constructor is not noexcept, which would make vector growth copy.
  Term(Term&& o) noexcept : mono(o.mono) { mpq_swap(coeff.get_mpq_t(), o.coeff.get_mpq_t()); }
  Term& operator=(Term&& o) noexcept {
    mono = o.mono;
    mpq_swap(coeff.get_mpq_t(), o.coeff.get_mpq_t());
    return *this;
  }
};

/// Exact multivariate polynomial over Q. Terms are kept sorted in decreasing
/// graded-lex order with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t var);
  static Polynomial variable(ContextPtr ctx, const std::string& name);
  /// Builds from arbitrary (possibly duplicate, unsorted) terms.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Highest exponent of `var` over all terms.
  int degree_in(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned k) const;

  /// Value with every variable replaced by the given rationals.
  Rational evaluate(std::span<const Rational> point) const;

  /// Same terms, re-labelled into another context of equal arity.
  Polynomial renamed(ContextPtr ctx) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Human-readable form, e.g. "Yw1^2 - 3/2*Yw2*Yw3 + 1".
  std::string to_string() const;

 private:
  void add_scaled(const Polynomial& o, int sign);
  ContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Homogeneous degree-one form with at least one nonzero coefficient.
class LinearForm {
 public:
  /// Throws DomainError if all coefficients vanish or the arity is wrong.
  LinearForm(ContextPtr ctx, std::vector<Rational> coefficients);
  /// Throws DomainError unless `p` is a nonzero homogeneous linear polynomial.
  static LinearForm from_polynomial(const Polynomial& p);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

  Polynomial to_polynomial() const;
  std::string to_string() const { return to_polynomial().to_string(); }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return same_context(a.ctx_, b.ctx_) && a.coeffs_ == b.coeffs_;
  }

 private:
  ContextPtr ctx_;
  std::vector<Rational> coeffs_;
};

/// The exact quotient p / form, or nullopt if the form does not divide p.
/// Throws ContextMismatch if the contexts differ.
std::optional<Polynomial> exact_divide(const Polynomial& p, const LinearForm& form);

/// Ring homomorphism sending source variable i to images[i] (each a
/// polynomial in `target`; a zero image is allowed). Throws DomainError if
/// the number of images differs from the arity of p's context.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, const ContextPtr& target);

/// A linear change of variables: source variable i maps to
/// Σ_j matrix[i][j]·target_j.
struct LinearSubstitution {
  ContextPtr source;
  ContextPtr target;
  std::vector<std::vector<Rational>> matrix;

  /// Identity on a context.
  static LinearSubstitution identity(ContextPtr ctx);
  std::vector<Polynomial> images() const;
};

Polynomial substitute_linear(const Polynomial& p, const LinearSubstitution& map);

struct NamedForm {
  std::string name;
  LinearForm form;
};

/// Rewrites p in the coordinates given by `forms` followed by `complement`
/// (together a basis of the degree-one forms of p's context). Returns the
/// result as a polynomial in the `forms` names only, or nullopt if any
/// complement coordinate survives. Throws DomainError if the forms are not a
/// basis.
std::optional<Polynomial> expand_in_forms(const Polynomial& p, std::span<const NamedForm> forms,
                                          std::span<const NamedForm> complement);

/// Canonical representative of p in Q[x]/(forms): the forms are row-reduced
/// and each pivot variable (the last variable of its row) is eliminated.
Polynomial reduce_modulo(const Polynomial& p, std::span<const LinearForm> forms);

/// Rank of the coefficient matrix of the forms.
std::size_t linear_rank(std::span<const LinearForm> forms);

/// Inverse of a square rational matrix, or nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> invert_matrix(std::vector<std::vector<Rational>> m);

}  // namespace wschub
