#include "core/polyid.hpp"

#include <cmath>
#include <sstream>

namespace otk {

namespace {

MultiPoly mono(long rational, long root3, int i, int j, int k) {
  return MultiPoly::term({BigInt(rational), BigInt(root3)}, {i, j, k});
}

}  // namespace

double SqrtThreeInt::to_double() const {
  return rational.convert_to<double>() +
         root3.convert_to<double>() * std::sqrt(3.0);
}

MultiPoly MultiPoly::term(SqrtThreeInt coeff, Monomial m) {
  MultiPoly p;
  p.add_term(m, coeff);
  return p;
}

void MultiPoly::add_term(Monomial m, const SqrtThreeInt& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, coeff] : other.terms_) add_term(m, coeff);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, coeff] : other.terms_) {
    add_term(m, SqrtThreeInt{} - coeff);
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      out.add_term({mx.i + my.i, mx.j + my.j, mx.k + my.k}, cx * cy);
    }
  }
  return out;
}

bool MultiPoly::homogeneous(int degree) const {
  for (const auto& [m, coeff] : terms_) {
    if (m.degree() != degree) return false;
  }
  return true;
}

SqrtThreeInt MultiPoly::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? SqrtThreeInt{} : it->second;
}

SqrtThreeInt MultiPoly::eval_exact(long a, long b, long c) const {
  SqrtThreeInt acc;
  for (const auto& [m, coeff] : terms_) {
    BigInt power = 1;
    for (int n = 0; n < m.i; ++n) power *= a;
    for (int n = 0; n < m.j; ++n) power *= b;
    for (int n = 0; n < m.k; ++n) power *= c;
    acc = acc + SqrtThreeInt{coeff.rational * power, coeff.root3 * power};
  }
  return acc;
}

double MultiPoly::eval(double a, double b, double c) const {
  double acc = 0.0;
  for (const auto& [m, coeff] : terms_) {
    acc += coeff.to_double() * std::pow(a, m.i) * std::pow(b, m.j) *
           std::pow(c, m.k);
  }
  return acc;
}

std::string MultiPoly::serialize() const {
  std::ostringstream out;
  for (const auto& [m, coeff] : terms_) {
    out << m.i << ' ' << m.j << ' ' << m.k << ' ' << coeff.rational << ' '
        << coeff.root3 << '\n';
  }
  return out.str();
}

FramePolynomials frame_polynomials() {
  FramePolynomials fp;
  // (sqrt3 bc - sqrt3 a^2 - ac - ab)(b - c)
  fp.u = (mono(0, 1, 0, 1, 1) + mono(0, -1, 2, 0, 0) + mono(-1, 0, 1, 0, 1) +
          mono(-1, 0, 1, 1, 0)) *
         (mono(1, 0, 0, 1, 0) - mono(1, 0, 0, 0, 1));
  // (a^2 + sqrt3 ab + sqrt3 ac + 3bc)(b + c)
  fp.v = (mono(1, 0, 2, 0, 0) + mono(0, 1, 1, 1, 0) + mono(0, 1, 1, 0, 1) +
          mono(3, 0, 0, 1, 1)) *
         (mono(1, 0, 0, 1, 0) + mono(1, 0, 0, 0, 1));
  // 2 sqrt3 (a^2 + b^2 + c^2) + 6ac + 6ab + 2 sqrt3 bc
  fp.d = mono(0, 2, 2, 0, 0) + mono(0, 2, 0, 2, 0) + mono(0, 2, 0, 0, 2) +
         mono(6, 0, 1, 0, 1) + mono(6, 0, 1, 1, 0) + mono(0, 2, 0, 1, 1);
  return fp;
}

MultiPoly frame_lhs_expanded() {
  const auto [u, v, d] = frame_polynomials();
  const MultiPoly a = mono(1, 0, 1, 0, 0);
  return a * d * u * (mono(1, 0, 0, 0, 1) - mono(1, 0, 0, 1, 0)) +
         d * v * (mono(1, 0, 2, 0, 0) + mono(3, 0, 0, 1, 1)) -
         mono(1, 0, 1, 1, 1) * d * d - mono(3, 0, 1, 0, 0) * u * u -
         mono(3, 0, 1, 0, 0) * v * v;
}

MultiPoly frame_rhs_factored() {
  return (mono(2, 0, 0, 1, 0) + mono(2, 0, 0, 0, 1)) *
         (mono(0, 1, 2, 0, 0) + mono(0, 1, 0, 2, 0) + mono(0, 1, 0, 0, 2) +
          mono(0, 1, 0, 1, 1) + mono(3, 0, 1, 1, 0) + mono(3, 0, 1, 0, 1)) *
         frame_quartic();
}

MultiPoly frame_quartic() {
  return mono(1, 0, 4, 0, 0) + mono(1, 0, 2, 2, 0) + mono(-8, 0, 2, 1, 1) +
         mono(1, 0, 2, 0, 2) + mono(9, 0, 0, 2, 2);
}

bool frame_quartic_is_sum_of_squares() {
  const MultiPoly s1 = mono(1, 0, 2, 0, 0) - mono(3, 0, 0, 1, 1);
  const MultiPoly s2 = mono(1, 0, 1, 1, 0) - mono(1, 0, 1, 0, 1);
  return frame_quartic() == s1 * s1 + s2 * s2;
}

ProofResult prove_frame_identity() {
  ProofResult out;
  const MultiPoly lhs = frame_lhs_expanded();
  const MultiPoly rhs = frame_rhs_factored();
  out.equal = lhs == rhs;
  out.homogeneous = lhs.homogeneous(7) && rhs.homogeneous(7);
  out.sos = frame_quartic_is_sum_of_squares();
  out.expansion = lhs.serialize();
  return out;
}

}  // namespace otk
