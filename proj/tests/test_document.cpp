#include <doctest.h>

#include <random>
#include <string>

#include "linfty/document.hpp"

using namespace linfty;

namespace {

const char* kGolden =
    "ring Qi\n"
    "type linfty\n"
    "basis\n"
    "  v : 0\n"
    "  w : 0\n"
    "  u : 1\n"
    "end\n"
    "brackets\n"
    "  l1 (u) -> { v: 1 }\n"
    "  l2 (v w) -> { v: 1/2+1/3*i }\n"
    "end\n";

std::string octonion_text() {
  // constructed from the raw eta table, independently of doc_from_algebra
  EtaTensor eta = octonion_eta();
  std::string text = "ring Q\ntype linfty\nbasis\n";
  for (int a = 1; a <= 7; ++a) text += "  e" + std::to_string(a) + " : 0\n";
  text += "end\nbrackets\n";
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) {
      std::string entries;
      for (int c = 1; c <= 7; ++c) {
        if (eta.at(a, b, c) == 0) continue;
        if (!entries.empty()) entries += ", ";
        entries += "e" + std::to_string(c) + ": " + std::to_string(2 * eta.at(a, b, c));
      }
      text += "  l2 (e" + std::to_string(a) + " e" + std::to_string(b) + ") -> { " + entries +
              " }\n";
    }
  text += "end\n";
  return text;
}

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("golden document parses and re-serializes identically") {
    Document doc = parse_document(kGolden);
    CHECK(doc.ring == Ring::Qi);
    CHECK(doc.kind == DocKind::algebra);
    CHECK(doc.algebra_kind == AlgebraKind::linfty);
    REQUIRE(doc.basis.size() == 3);
    CHECK(doc.basis[2] == std::pair<std::string, int>{"u", 1});
    REQUIRE(doc.brackets.size() == 2);
    CHECK(doc.brackets[1].value[0].second ==
          Scalar(Gaussian{make_rational(1, 2), make_rational(1, 3)}));
    CHECK(serialize(doc) == kGolden);
  }

  TEST_CASE("name and provenance metadata round trip") {
    std::string text = "name toy\nprovenance handwritten\nring Q\ntype linfty\n"
                       "basis\n  v : 0\nend\nbrackets\nend\n";
    Document doc = parse_document(text);
    CHECK(doc.name == "toy");
    CHECK(doc.provenance == "handwritten");
    CHECK(serialize(doc) == text);
    CHECK_THROWS_AS(parse_document("ring Q\nname late\ntype linfty\nbasis\nend\nbrackets\nend\n"),
                    SyntaxError);  // metadata must precede ring/type
  }

  TEST_CASE("comments and blank lines are ignored") {
    std::string text = "# header comment\n\nring Q\ntype linfty\nbasis\n  a : 0  # trailing\n"
                       "\nend\nbrackets\nend\n";
    Document doc = parse_document(text);
    CHECK(doc.basis.size() == 1);
    HomotopyAlgebra a = algebra_from_doc(doc);
    CHECK(a.brackets.ops.empty());  // valid abelian algebra
  }

  TEST_CASE("21-entry octonion document matches the builtin") {
    Document doc = parse_document(octonion_text());
    CHECK(doc.brackets.size() == 21);
    HomotopyAlgebra parsed = algebra_from_doc(doc);
    HomotopyAlgebra builtin = imaginary_octonions();
    CHECK(parsed.basis == builtin.basis);
    CHECK(parsed.brackets.bracket(2)->table() == builtin.brackets.bracket(2)->table());
  }

  TEST_CASE("algebra documents round trip through serialization") {
    for (const char* name : {"octonions", "octonions-theorem1", "rflux-linfty",
                             "rflux-theorem2", "monopole"}) {
      Document doc = *builtin_document(name);
      Document again = parse_document(serialize(doc));
      CHECK(again == doc);
      // and conversion is faithful
      HomotopyAlgebra a = algebra_from_doc(doc);
      Document back = doc_from_algebra(a);
      CHECK(back == doc);
    }
  }

  TEST_CASE("forced zero entries are rejected") {
    std::string text = "ring Q\ntype linfty\nbasis\n  e1 : 0\n  e2 : 0\nend\n"
                       "brackets\n  l2 (e1 e1) -> { e2: 1 }\nend\n";
    CHECK_THROWS_AS(algebra_from_doc(parse_document(text)), ForcedZeroViolated);
  }

  TEST_CASE("non-canonical tuples are rejected") {
    std::string text = "ring Q\ntype linfty\nbasis\n  e1 : 0\n  e2 : 0\nend\n"
                       "brackets\n  l2 (e2 e1) -> { e2: 1 }\nend\n";
    CHECK_THROWS_AS(algebra_from_doc(parse_document(text)), ValidationError);
  }

  TEST_CASE("degree rule violations are rejected") {
    std::string text = "ring Q\ntype linfty\nbasis\n  v : 0\n  w : 0\n  u : 1\nend\n"
                       "brackets\n  l2 (v w) -> { u: 1 }\nend\n";
    CHECK_THROWS_AS(algebra_from_doc(parse_document(text)), DegreeRuleViolation);
  }

  TEST_CASE("unknown labels are rejected") {
    std::string text = "ring Q\ntype linfty\nbasis\n  v : 0\n  w : 0\nend\n"
                       "brackets\n  l2 (v w) -> { z: 1 }\nend\n";
    CHECK_THROWS_AS(algebra_from_doc(parse_document(text)), UnknownLabel);
  }

  TEST_CASE("ring-mismatched literals are rejected with position info") {
    std::string text = "ring Q\ntype linfty\nbasis\n  v : 0\n  w : 0\nend\n"
                       "brackets\n  l2 (v w) -> { v: i }\nend\n";
    try {
      parse_document(text);
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 8);
    }
  }

  TEST_CASE("duplicate basis labels are rejected") {
    std::string text = "ring Q\ntype linfty\nbasis\n  v : 0\n  v : 0\nend\nbrackets\nend\n";
    CHECK_THROWS_AS(algebra_from_doc(parse_document(text)), DuplicateLabel);
  }

  TEST_CASE("duplicate bracket entries are rejected") {
    std::string text = "ring Q\ntype linfty\nbasis\n  v : 0\n  w : 0\nend\n"
                       "brackets\n  l2 (v w) -> { v: 1 }\n  l2 (v w) -> { w: 1 }\nend\n";
    CHECK_THROWS_AS(algebra_from_doc(parse_document(text)), ValidationError);
  }

  TEST_CASE("structural syntax errors carry line numbers") {
    try {
      parse_document("ring Q\ntype linfty\nbasis\n  v 0\nend\nbrackets\nend\n");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 4);
    }
    CHECK_THROWS_AS(parse_document("type linfty\nring Q\n"), SyntaxError);  // type before ring
    CHECK_THROWS_AS(parse_document("ring Q\n"), ValidationError);           // missing type
    CHECK_THROWS_AS(parse_document("ring Q\ntype linfty\nbasis\n  v : 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_document("ring Q\ntype linfty\nbasis\nend\n"
                                   "brackets\n  m2 (v w) -> {}\nend\n"),
                    SyntaxError);  // m-key in an linfty document
  }

  TEST_CASE("weights documents") {
    std::string text = "ring Qi\ntype weights\nentries\n"
                       "  e1 -> p1 : (-1/2*i)*mu^2\n"
                       "  e7 -> I : (1/2*i)*mu^3\nend\n";
    Document doc = parse_document(text);
    ScalingWeights w = weights_from_doc(doc);
    CHECK(w.by_old_label.at("e1").new_label == "p1");
    CHECK(w.by_old_label.at("e1").mu_exponent == 2);
    CHECK(w.by_old_label.at("e1").prefactor == Gaussian{Rational(0), make_rational(-1, 2)});
    CHECK(parse_document(serialize(doc)) == doc);
    // the builtin weights round trip as well
    Document builtin = *builtin_document("rflux-weights");
    CHECK(parse_document(serialize(builtin)) == builtin);
  }

  TEST_CASE("dmap, fmap and actionmap documents resolve against a basis") {
    HomotopyAlgebra r = rflux_algebra();
    Document dmap = parse_document(
        "ring Qi\ntype dmap\nentries\n  I* -> { I: 1 }\n  k -> {}\nend\n");
    LinearMap D = linear_map_from_doc(dmap, r.basis);
    CHECK(D.source.size() == 2);
    CHECK(D.shift == -1);
    CHECK(D.columns[0] == Vec::unit(r.basis.require("I")));
    CHECK(D.columns[1].is_zero());

    Document fmap = parse_document(
        "ring Qi\ntype fmap\nentries\n  (x2 x1 x3) -> { I*: -3 }\nend\n");
    FOverrides f = f_overrides_from_doc(fmap, r.basis, D.source);
    REQUIRE(f.size() == 1);
    // canonicalized to (x1 x2 x3) with the permutation sign applied
    std::vector<int> key{r.basis.require("x1"), r.basis.require("x2"), r.basis.require("x3")};
    REQUIRE(f.count(key));
    CHECK(f.at(key) == Vec::unit(0, Scalar(3)));

    Document amap = parse_document(
        "ring Qi\ntype actionmap\nentries\n  (x1 I*) -> { k: 1 }\nend\n");
    ActionOverrides act = action_overrides_from_doc(amap, r.basis, D.source);
    REQUIRE(act.size() == 1);
    CHECK(act.at({r.basis.require("x1"), 0}) == Vec::unit(1));
  }

  TEST_CASE("laurent-ring algebra documents round trip") {
    std::string text = "ring QiLaurent\ntype linfty\nbasis\n  a : 0\n  b : 0\n  c : 0\nend\n"
                       "brackets\n  l2 (a b) -> { c: (1)*mu^1+(1/2*i)*mu^3 }\nend\n";
    Document doc = parse_document(text);
    HomotopyAlgebra alg = algebra_from_doc(doc);
    Document back = doc_from_algebra(alg);
    CHECK(parse_document(serialize(back)) == back);
    CHECK(serialize(back).find("(1)*mu^1+(1/2*i)*mu^3") != std::string::npos);
    // the scaling limit strips the positive powers once c absorbs one of them
    ScalingWeights w;
    w.by_old_label["a"] = {"a", Gaussian{Rational(1), Rational(0)}, 0};
    w.by_old_label["b"] = {"b", Gaussian{Rational(1), Rational(0)}, 0};
    w.by_old_label["c"] = {"c", Gaussian{Rational(1), Rational(0)}, 1};
    HomotopyAlgebra contracted = contract(alg, w);
    CHECK(contracted.brackets.bracket(2)->eval_basis({0, 1}) == Vec::unit(2));
    w.by_old_label["c"].mu_exponent = 2;
    CHECK_THROWS_AS(contract(alg, w), DivergentContraction);
  }

  TEST_CASE("label grammar") {
    // stars and primes are fine, reserved words and '-' are not
    CHECK_NOTHROW(parse_document("ring Q\ntype linfty\nbasis\n  e1* : 1\n  k' : 2\nend\n"
                                 "brackets\nend\n"));
    CHECK_THROWS_AS(parse_document("ring Q\ntype linfty\nbasis\n  end : 0\nend\nbrackets\nend\n"),
                    SyntaxError);
    CHECK_THROWS_AS(parse_document("ring Q\ntype linfty\nbasis\n  a-b : 0\nend\nbrackets\nend\n"),
                    SyntaxError);
  }

  TEST_CASE("ainfty and star documents round trip") {
    StarProduct star = octonion_star();
    Document star_doc = doc_from_star(star);
    CHECK(parse_document(serialize(star_doc)) == star_doc);
    StarProduct back = star_from_doc(star_doc);
    CHECK(back.basis == star.basis);
    CHECK(back.table == star.table);

    HomotopyAlgebra doubled = ainfty_double(star);
    Document doc = doc_from_algebra(doubled);
    CHECK(doc.algebra_kind == AlgebraKind::ainfty);
    CHECK(serialize(doc).find("m2 (") != std::string::npos);
    Document again = parse_document(serialize(doc));
    CHECK(again == doc);
    HomotopyAlgebra realg = algebra_from_doc(again);
    CHECK(realg.brackets.bracket(3)->table() == doubled.brackets.bracket(3)->table());
  }

  TEST_CASE("mutated documents either parse or throw library errors") {
    std::string base = serialize(*builtin_document("rflux-theorem2"));
    std::mt19937_64 rng(20240202);
    std::uniform_int_distribution<size_t> pos(0, base.size() - 1);
    std::uniform_int_distribution<int> printable(32, 126);
    std::uniform_int_distribution<int> mode(0, 2);
    for (int trial = 0; trial < 2000; ++trial) {
      std::string text = base;
      switch (mode(rng)) {
        case 0: text[pos(rng)] = static_cast<char>(printable(rng)); break;
        case 1: text.erase(pos(rng), 1); break;
        default: text.insert(pos(rng), 1, static_cast<char>(printable(rng))); break;
      }
      try {
        Document doc = parse_document(text);
        algebra_from_doc(doc);  // may throw as well
      } catch (const Error&) {
        // expected for most mutations
      }
    }
    CHECK(true);  // reaching here means no foreign exception or crash
  }

  TEST_CASE("huge mu exponents are rejected cleanly") {
    CHECK_THROWS_AS(Scalar::parse("(1)*mu^99999999999999999999", Ring::QiLaurent), RingMismatch);
    CHECK_THROWS_AS(Scalar::parse("(1)*mu^2000000", Ring::QiLaurent), RingMismatch);
  }

  TEST_CASE("random documents survive a parse/serialize cycle") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
      GradedBasis V;
      int n = dim(rng);
      for (int i = 0; i < n; ++i) V.add("g" + std::to_string(i + 1), 0);
      MultiBracket l2(V, 2, true);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          Vec value;
          for (int c = 0; c < n; ++c) value.add_term(c, Scalar(coeff(rng)));
          l2.set({a, b}, std::move(value));
        }
      HomotopyAlgebra alg{Ring::Q, V, BracketSet{AlgebraKind::linfty, {}}};
      if (!l2.empty()) alg.brackets.ops.emplace(2, std::move(l2));
      Document doc = doc_from_algebra(alg);
      CHECK(parse_document(serialize(doc)) == doc);
      HomotopyAlgebra back = algebra_from_doc(doc);
      CHECK(back.basis == alg.basis);
      CHECK(back.brackets.ops.size() == alg.brackets.ops.size());
    }
  }
}
