#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace otk {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[sqrt3]: rational + root3 * sqrt(3). The ring is closed under
// +, -, * and has no zero divisors, so polynomial identities proved here are
// exact statements.
struct SqrtThreeInt {
  BigInt rational = 0;
  BigInt root3 = 0;

  bool is_zero() const { return rational == 0 && root3 == 0; }
  double to_double() const;

  friend SqrtThreeInt operator+(const SqrtThreeInt& x, const SqrtThreeInt& y) {
    return {x.rational + y.rational, x.root3 + y.root3};
  }
  friend SqrtThreeInt operator-(const SqrtThreeInt& x, const SqrtThreeInt& y) {
    return {x.rational - y.rational, x.root3 - y.root3};
  }
  friend SqrtThreeInt operator*(const SqrtThreeInt& x, const SqrtThreeInt& y) {
    return {x.rational * y.rational + 3 * x.root3 * y.root3,
            x.rational * y.root3 + x.root3 * y.rational};
  }
  friend bool operator==(const SqrtThreeInt& x, const SqrtThreeInt& y) {
    return x.rational == y.rational && x.root3 == y.root3;
  }
};

// a^i b^j c^k.
struct Monomial {
  int i = 0;
  int j = 0;
  int k = 0;

  int degree() const { return i + j + k; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Total degree first, then lexicographic by exponent.
struct GradedLexLess {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (x.i != y.i) return x.i < y.i;
    if (x.j != y.j) return x.j < y.j;
    return x.k < y.k;
  }
};

// Sparse trivariate polynomial over Z[sqrt3]. Zero coefficients are never
// stored, so map equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, SqrtThreeInt, GradedLexLess>;

  MultiPoly() = default;
  static MultiPoly term(SqrtThreeInt coeff, Monomial m);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) {
    x += y;
    return x;
  }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) {
    x -= y;
    return x;
  }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
    return x.terms_ == y.terms_;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool homogeneous(int degree) const;
  SqrtThreeInt coefficient(Monomial m) const;
  SqrtThreeInt eval_exact(long a, long b, long c) const;
  double eval(double a, double b, double c) const;

  // One term per line, graded-lex ascending: "i j k rational root3".
  std::string serialize() const;

 private:
  void add_term(Monomial m, const SqrtThreeInt& coeff);

  TermMap terms_;
};

// Numerators u, v and common denominator d of the first isogonic point of
// the frame triangle (0,a), (-b,0), (c,0).
struct FramePolynomials {
  MultiPoly u, v, d;
};

FramePolynomials frame_polynomials();

// Degree-7 positivity witness a d u (c-b) + d v (a^2+3bc) - a b c d^2
// - 3 a u^2 - 3 a v^2, fully expanded.
MultiPoly frame_lhs_expanded();

// 2 (b+c) (sqrt3(a^2+b^2+c^2+bc) + 3ab + 3ac) (a^4+a^2b^2-8a^2bc+a^2c^2+9b^2c^2).
MultiPoly frame_rhs_factored();

MultiPoly frame_quartic();

// The quartic factor equals (a^2 - 3bc)^2 + (ab - ac)^2 exactly.
bool frame_quartic_is_sum_of_squares();

struct ProofResult {
  bool equal = false;        // expanded witness == factorization, bit exact
  bool homogeneous = false;  // both sides homogeneous of degree 7
  bool sos = false;          // quartic factor is the stated sum of squares
  std::string expansion;     // serialized expanded witness
};

ProofResult prove_frame_identity();

}  // namespace otk
