#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "core/polyid.hpp"

using namespace otk;

namespace {

MultiPoly var(int i, int j, int k) {
  return MultiPoly::term({1, 0}, {i, j, k});
}

}  // namespace

TEST_CASE("ring arithmetic in Z[sqrt3]") {
  const SqrtThreeInt x{1, 1};   // 1 + sqrt3
  const SqrtThreeInt y{2, -1};  // 2 - sqrt3
  CHECK(x * x == SqrtThreeInt{4, 2});    // 4 + 2 sqrt3
  CHECK(x * y == SqrtThreeInt{-1, 1});   // 2 - sqrt3 + 2 sqrt3 - 3
  CHECK(x + y == SqrtThreeInt{3, 0});
  CHECK(x - x == SqrtThreeInt{0, 0});
  CHECK((x - x).is_zero());
  CHECK(SqrtThreeInt{4, 2}.to_double() ==
        doctest::Approx(4.0 + 2.0 * std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("polynomial arithmetic basics") {
  const MultiPoly a = var(1, 0, 0);
  const MultiPoly b = var(0, 1, 0);
  const MultiPoly sum_sq = (a + b) * (a + b);
  const MultiPoly expanded = a * a + MultiPoly::term({2, 0}, {1, 1, 0}) + b * b;
  CHECK(sum_sq == expanded);
  CHECK((sum_sq - expanded).is_zero());
  CHECK(sum_sq.homogeneous(2));
  CHECK(!sum_sq.homogeneous(3));
  CHECK(sum_sq.coefficient({1, 1, 0}) == SqrtThreeInt{2, 0});
  CHECK(sum_sq.coefficient({5, 0, 0}).is_zero());

  // (a+b)(a-b) = a^2 - b^2: the ab terms must cancel out of the map.
  const MultiPoly diff = (a + b) * (a - b);
  CHECK(diff == a * a - b * b);
  CHECK(diff.coefficient({1, 1, 0}).is_zero());
  CHECK(diff.terms().size() == 2);
}

TEST_CASE("exact and floating evaluation agree") {
  const MultiPoly p =
      var(2, 0, 0) + MultiPoly::term({0, 1}, {0, 1, 1});  // a^2 + sqrt3 bc
  const SqrtThreeInt at = p.eval_exact(2, 3, 5);
  CHECK(at == SqrtThreeInt{4, 15});
  CHECK(p.eval(2, 3, 5) ==
        doctest::Approx(4.0 + 15.0 * std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("serialization is graded lex with both coefficient parts") {
  // d = 2 sqrt3 (a^2+b^2+c^2) + 6ab + 6ac + 2 sqrt3 bc, six terms of
  // degree 2 in a fixed readable order.
  const std::string s = frame_polynomials().d.serialize();
  CHECK(s ==
        "0 0 2 0 2\n"
        "0 1 1 0 2\n"
        "0 2 0 0 2\n"
        "1 0 1 6 0\n"
        "1 1 0 6 0\n"
        "2 0 0 0 2\n");
}

TEST_CASE("frame polynomials at pinned integer points") {
  const FramePolynomials fp = frame_polynomials();
  // b = c kills u; the others were multiplied out by hand.
  CHECK(fp.u.eval_exact(1, 1, 1).is_zero());
  CHECK(fp.v.eval_exact(1, 1, 1) == SqrtThreeInt{8, 4});
  CHECK(fp.d.eval_exact(1, 1, 1) == SqrtThreeInt{12, 8});

  CHECK(fp.u.homogeneous(3));
  CHECK(fp.v.homogeneous(3));
  CHECK(fp.d.homogeneous(2));

  // d^2 starts with 12 a^4.
  CHECK((fp.d * fp.d).coefficient({4, 0, 0}) == SqrtThreeInt{12, 0});
}

TEST_CASE("expanded witness: pinned coefficients and values") {
  const MultiPoly lhs = frame_lhs_expanded();
  CHECK(lhs.homogeneous(7));
  // No pure a^7: every generator carries a base-side factor.
  CHECK(lhs.coefficient({7, 0, 0}).is_zero());
  // a^6 b arises only from d(2 sqrt3 a^2) * v(a^2 b) * a^2.
  CHECK(lhs.coefficient({6, 1, 0}) == SqrtThreeInt{0, 2});
  // Symmetric partner.
  CHECK(lhs.coefficient({6, 0, 1}) == SqrtThreeInt{0, 2});
  // Pure base block b^2 c^5 comes from 18 sqrt3 b^2 c^2 (b+c)(b^2+bc+c^2).
  CHECK(lhs.coefficient({0, 2, 5}) == SqrtThreeInt{0, 18});
  CHECK(lhs.coefficient({0, 5, 2}) == SqrtThreeInt{0, 18});

  CHECK(lhs.eval_exact(1, 1, 1) == SqrtThreeInt{96, 64});
  // Hand-reduced: u = 0, v = 14+8 sqrt3, d = 24+14 sqrt3 give 48+28 sqrt3.
  CHECK(lhs.eval_exact(2, 1, 1) == SqrtThreeInt{48, 28});
}

TEST_CASE("factorized side matches bit for bit") {
  const MultiPoly rhs = frame_rhs_factored();
  CHECK(rhs.homogeneous(7));
  CHECK(rhs == frame_lhs_expanded());
  CHECK(rhs.eval_exact(2, 1, 1) == SqrtThreeInt{48, 28});
}

TEST_CASE("swapping b and c mirrors the witness") {
  // The frame construction is symmetric under reflecting the base, so the
  // expansion must be too.
  const MultiPoly lhs = frame_lhs_expanded();
  for (const auto& [m, coeff] : lhs.terms()) {
    CHECK(lhs.coefficient({m.i, m.k, m.j}) == coeff);
  }
}

TEST_CASE("quartic factor and its sum of squares") {
  const MultiPoly q = frame_quartic();
  CHECK(q.homogeneous(4));
  CHECK(q.coefficient({4, 0, 0}) == SqrtThreeInt{1, 0});
  CHECK(q.coefficient({2, 1, 1}) == SqrtThreeInt{-8, 0});
  CHECK(q.coefficient({0, 2, 2}) == SqrtThreeInt{9, 0});
  CHECK(frame_quartic_is_sum_of_squares());
}

TEST_CASE("full proof result") {
  const ProofResult proof = prove_frame_identity();
  CHECK(proof.equal);
  CHECK(proof.homogeneous);
  CHECK(proof.sos);
  CHECK(proof.expansion == frame_lhs_expanded().serialize());
  CHECK(!proof.expansion.empty());
}

TEST_CASE("expansion matches the committed golden file") {
  std::ifstream in(OTK_SOURCE_DIR "/data/witness_expansion.txt");
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(prove_frame_identity().expansion == buffer.str());
}
