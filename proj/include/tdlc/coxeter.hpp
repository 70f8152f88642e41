#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tdlc/ratlin.hpp"

namespace tdlc {

/// m_st label meaning m = infinity.
inline constexpr std::size_t kInfinity = 0;

/// Coxeter matrix: m_ss = 1, m_st = m_ts in {2, 3, ...} or kInfinity.
class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  /// Throws InvalidInput.
  explicit CoxeterSystem(std::vector<std::vector<std::size_t>> m);

  std::size_t size() const noexcept { return m_.size(); }
  std::size_t m(std::size_t s, std::size_t t) const { return m_.at(s).at(t); }
  const std::vector<std::vector<std::size_t>>& matrix() const noexcept { return m_; }

  CoxeterSystem restrict_to(std::span<const std::size_t> nodes) const;

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  std::vector<std::vector<std::size_t>> m_;
};

/// One irreducible finite Coxeter diagram.
struct FiniteType {
  char family = 'A';        // A B D E F H I
  std::size_t rank = 0;
  std::size_t m = 0;        // dihedral label for family I
  std::vector<std::size_t> nodes;

  std::string name() const;
  /// Degrees d_i of the basic invariants; |W| = prod d_i.
  std::vector<std::size_t> degrees() const;
};

/// Splits the diagram on T into components and names each one; nullopt when
/// some component is not of finite type.
std::optional<std::vector<FiniteType>> classify(const CoxeterSystem& c, std::span<const std::size_t> t);

bool is_spherical(const CoxeterSystem& c, std::span<const std::size_t> t);
bool is_finite(const CoxeterSystem& c);

/// Integer Cartan matrix: a_ii = 2, a_ij <= 0 off the diagonal,
/// a_ij = 0 iff a_ji = 0.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  /// Throws InvalidInput.
  explicit CartanMatrix(std::vector<std::vector<std::int64_t>> a);

  /// "A3", "B2", "C3", "D4", "E6", "F4", "G2", ...
  static CartanMatrix preset(const std::string& name);

  std::size_t size() const noexcept { return a_.size(); }
  std::int64_t at(std::size_t i, std::size_t j) const { return a_.at(i).at(j); }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return a_; }
  CartanMatrix submatrix(std::span<const std::size_t> nodes) const;
  /// m_ij from a_ij a_ji: 0 -> 2, 1 -> 3, 2 -> 4, 3 -> 6, >= 4 -> infinity.
  CoxeterSystem coxeter() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::vector<std::vector<std::int64_t>> a_;
};

/// Affine Cartan matrix together with the node whose removal leaves the
/// finite diagram.
struct AffineDiagram {
  CartanMatrix affine;
  std::size_t extended_node = 0;

  /// "affine A2", "affine C2", "affine G2", ... (extended node 0).
  static AffineDiagram preset(const std::string& name);
  CartanMatrix finite_part() const;
};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  /// 1 + t + ... + t^{d-1}.
  static IntPolynomial t_analogue(std::size_t d);

  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  mpz_class operator[](std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }

  IntPolynomial operator*(const IntPolynomial& o) const;
  /// Exact division; nullopt if the divisor does not divide.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;
  mpz_class evaluate(const mpz_class& t) const;
  Rational evaluate(const Rational& t) const;

  std::string to_string() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<mpz_class> c_;
};

/// Power series known exactly in degrees 0..precision.
class IntSeries {
 public:
  IntSeries(const IntPolynomial& p, std::size_t precision);
  /// Multiplies by 1 / (1 - t^k), k >= 1.
  void divide_one_minus_t_power(std::size_t k);

  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  std::size_t precision() const noexcept { return c_.size() - 1; }

 private:
  std::vector<mpz_class> c_;
};

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// counts[l] = #{w : l(w) = l} via BFS over integer reflection matrices on
/// the simple-root basis. Stops at max_len or when a layer is empty.
/// Throws StateExplosion past `cap` visited elements.
std::vector<std::uint64_t> enumerate_by_length(const CartanMatrix& a, std::optional<std::size_t> max_len,
                                               std::size_t cap = kDefaultStateCap);

/// p_W(t) by enumeration. Throws InvalidInput for infinite W.
IntPolynomial poincare_poly(const CartanMatrix& a, std::size_t cap = kDefaultStateCap);
/// p_W(t) = prod over components and degrees of [d]_t. Throws InvalidInput
/// for infinite W.
IntPolynomial poincare_from_classification(const CoxeterSystem& c);

/// m_i with prod [m_i + 1]_t = p, ascending. Throws NotAProductOfTAnalogues.
std::vector<std::size_t> exponents(const IntPolynomial& p);

/// Affine series from BFS against p_W(t) / prod (1 - t^{m_i}) to degree n.
bool bott_check(const CartanMatrix& finite, const CartanMatrix& affine, std::size_t n);

struct AlternatingSum {
  Rational lhs;  // sum over proper I of (-1)^{|I|-1} / p_{W(I)}(q)
  Rational rhs;  // (-1)^{n+1} / p_W~(q), p_W~(q) = p_W(q) / prod (1 - q^{m_i})
  bool holds() const { return lhs == rhs; }
};

/// Evaluates both sides; p_{W(I)} comes from the classification data.
/// Throws InvalidInput for q <= 1 or a diagram with a single node.
AlternatingSum alternating_sum(const AffineDiagram& d, const Rational& q);
bool alternating_sum_identity(const AffineDiagram& d, const Rational& q);

}  // namespace tdlc
