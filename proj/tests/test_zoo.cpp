#include <doctest.h>

#include "linfty/checker.hpp"
#include "linfty/document.hpp"
#include "linfty/zoo.hpp"

using namespace linfty;

TEST_SUITE("zoo") {
  TEST_CASE("eta components") {
    EtaTensor eta = octonion_eta();
    CHECK(eta.at(1, 2, 3) == 1);
    CHECK(eta.at(7, 1, 4) == 1);
    CHECK(eta.at(4, 5, 6) == 0);
    CHECK(eta.at(2, 1, 3) == -1);
    CHECK(eta.at(3, 4, 5) == -1);
    CHECK(eta.at(1, 1, 2) == 0);
  }

  TEST_CASE("eta and theta are totally antisymmetric") {
    EtaTensor eta = octonion_eta();
    ThetaTensor theta = octonion_theta();
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; b <= 7; ++b)
        for (int c = 1; c <= 7; ++c) {
          CHECK(eta.at(a, b, c) == -eta.at(b, a, c));
          CHECK(eta.at(a, b, c) == -eta.at(a, c, b));
          for (int d = 1; d <= 7; ++d) {
            CHECK(theta.at(a, b, c, d) == -theta.at(b, a, c, d));
            CHECK(theta.at(a, b, c, d) == -theta.at(a, c, b, d));
            CHECK(theta.at(a, b, c, d) == -theta.at(a, b, d, c));
          }
        }
  }

  TEST_CASE("theta components") {
    ThetaTensor theta = octonion_theta();
    CHECK(theta.at(1, 2, 3, 7) == 0);  // complement {4,5,6} has eta = 0
    CHECK(theta.at(1, 2, 4, 5) == 1);  // complement {3,6,7}, eta_367 = 1
  }

  TEST_CASE("eta contraction identity") {
    EtaTensor eta = octonion_eta();
    ThetaTensor theta = octonion_theta();
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; b <= 7; ++b)
        for (int c = 1; c <= 7; ++c)
          for (int d = 1; d <= 7; ++d) {
            long lhs = 0;
            for (int e = 1; e <= 7; ++e) lhs += eta.at(a, b, e) * eta.at(c, d, e);
            long rhs = (a == c && b == d ? 1 : 0) - (a == d && b == c ? 1 : 0) -
                       theta.at(a, b, c, d);
            CHECK(lhs == rhs);
          }
  }

  TEST_CASE("octonion jacobiator equals -12 theta") {
    HomotopyAlgebra oct = imaginary_octonions();
    const MultiBracket& l2 = *oct.brackets.bracket(2);
    ThetaTensor theta = octonion_theta();
    for (int a = 1; a <= 7; ++a)
      for (int b = a + 1; b <= 7; ++b)
        for (int c = b + 1; c <= 7; ++c) {
          Vec expected;
          for (int d = 1; d <= 7; ++d)
            expected.add_term(d - 1, Scalar(-12 * theta.at(a, b, c, d)));
          CHECK(jacobiator(l2, Vec::unit(a - 1), Vec::unit(b - 1), Vec::unit(c - 1)) == expected);
        }
  }

  TEST_CASE("jacobiator image spans the whole space") {
    // every generator appears on the right-hand side of some Jacobiator
    ThetaTensor theta = octonion_theta();
    for (int d = 1; d <= 7; ++d) {
      bool hit = false;
      for (int a = 1; a <= 7 && !hit; ++a)
        for (int b = a + 1; b <= 7 && !hit; ++b)
          for (int c = b + 1; c <= 7 && !hit; ++c)
            if (theta.at(a, b, c, d) != 0) hit = true;
      CHECK(hit);
    }
    // rank check: the Jacobiator vectors span a 7-dimensional space
    HomotopyAlgebra oct = imaginary_octonions();
    const MultiBracket& l2 = *oct.brackets.bracket(2);
    GradedBasis index_basis;
    std::vector<Vec> jacs;
    for (int a = 1; a <= 7; ++a)
      for (int b = a + 1; b <= 7; ++b)
        for (int c = b + 1; c <= 7; ++c) {
          index_basis.add("t" + std::to_string(jacs.size()), 0);
          jacs.push_back(jacobiator(l2, Vec::unit(a - 1), Vec::unit(b - 1), Vec::unit(c - 1)));
        }
    LinearMap span_map{index_basis, oct.basis, 0, jacs};
    CHECK(nullspace(span_map).size() == jacs.size() - 7);  // rank 7
  }

  TEST_CASE("contraction with the printed weights reproduces the contracted algebra") {
    HomotopyAlgebra contracted = contract(imaginary_octonions(), rflux_weights());
    HomotopyAlgebra direct = rflux_algebra();
    CHECK(contracted.ring == Ring::Qi);
    CHECK(contracted.basis == direct.basis);
    REQUIRE(contracted.brackets.ops.size() == 1);
    CHECK(contracted.brackets.bracket(2)->table() == direct.brackets.bracket(2)->table());
  }

  TEST_CASE("identity weights leave the algebra unchanged") {
    HomotopyAlgebra oct = imaginary_octonions();
    ScalingWeights identity;
    for (int a = 1; a <= 7; ++a)
      identity.by_old_label["e" + std::to_string(a)] = {"e" + std::to_string(a),
                                                        Gaussian{Rational(1), Rational(0)}, 0};
    HomotopyAlgebra out = contract(oct, identity);
    CHECK(out.basis == oct.basis);
    // same structure constants, promoted to Q(i)
    for (const auto& [tuple, value] : oct.brackets.bracket(2)->table())
      CHECK(out.brackets.bracket(2)->eval_basis(tuple) == value);
  }

  TEST_CASE("divergent weights are rejected") {
    ScalingWeights bad;
    for (int a = 1; a <= 7; ++a)
      bad.by_old_label["e" + std::to_string(a)] = {"e" + std::to_string(a),
                                                   Gaussian{Rational(1), Rational(0)}, 0};
    bad.by_old_label["e7"].mu_exponent = 1;  // [e1,e4] = 2 e7 + ... now scales as mu^-1
    CHECK_THROWS_AS(contract(imaginary_octonions(), bad), DivergentContraction);
  }

  TEST_CASE("missing weights are rejected") {
    ScalingWeights incomplete;
    incomplete.by_old_label["e1"] = {"e1", Gaussian{Rational(1), Rational(0)}, 0};
    CHECK_THROWS_AS(contract(imaginary_octonions(), incomplete), ValidationError);
  }

  TEST_CASE("monopole algebra is the position-momentum exchange") {
    HomotopyAlgebra mono = monopole_algebra();
    const MultiBracket& l2 = *mono.brackets.bracket(2);
    auto lab = [&](const std::string& s) { return mono.basis.require(s); };
    // [p1, p2] = i x3, [x_i, p_i] = -i I, [x_i, x_j] = 0
    CHECK(l2.eval({Vec::unit(lab("p1")), Vec::unit(lab("p2"))}) ==
          Vec::unit(lab("x3"), Scalar::i()));
    CHECK(l2.eval({Vec::unit(lab("x1")), Vec::unit(lab("p1"))}) ==
          Vec::unit(lab("I"), -Scalar::i()));
    CHECK(l2.eval({Vec::unit(lab("x1")), Vec::unit(lab("x2"))}).is_zero());
    // only nonvanishing Jacobiator is Jac(p,p,p), in the I direction
    Vec jac = jacobiator(l2, Vec::unit(lab("p1")), Vec::unit(lab("p2")), Vec::unit(lab("p3")));
    CHECK(jac == Vec::unit(lab("I"), Scalar(3)));
    CHECK(jacobiator(l2, Vec::unit(lab("x1")), Vec::unit(lab("x2")), Vec::unit(lab("x3")))
              .is_zero());
  }

  TEST_CASE("rflux 2-term extension has the printed shape and passes the checker") {
    HomotopyAlgebra a = rflux_linfty();
    CHECK(a.basis.size() == 8);
    CHECK(all_passed(check_linfty(a, 6)));
  }

  TEST_CASE("builtin registry") {
    for (const auto& name : builtin_names()) {
      auto doc = builtin_document(name);
      REQUIRE(doc.has_value());
      // every builtin round-trips through its own serialization
      CHECK(parse_document(serialize(*doc)) == *doc);
    }
    CHECK_FALSE(builtin_document("no-such-thing").has_value());
  }
}
