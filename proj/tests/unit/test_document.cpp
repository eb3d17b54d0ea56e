#include <gtest/gtest.h>

#include <functional>
#include <string>

#include "hopfkit/document.hpp"
#include "hopfkit/fixtures.hpp"
#include "hopfkit/monoid.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();
const std::string fixture_dir = HOPFKIT_FIXTURE_DIR;

/// One-dimensional document with a configurable product coefficient.
std::string ground(const std::string& field, const std::string& mult_entry,
                   const std::string& extra_mult = "") {
  return R"({"schema":1,"kind":"bialgebra","field":")" + field + R"(","dim":1,"mult":[)" + mult_entry + extra_mult +
         R"(],"comult":[[0,0,0,1,1]],"unit":[[0,1,1]],"counit":[[0,1,1]]})";
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Document, RoundTripsEveryCorpusEntry) {
  for (const Field f : {Q, Field::prime(3)}) {
    for (const Fixture& fx : builtin_corpus(f)) {
      const Bialgebra back = parse_bialgebra(to_json(fx.bialgebra));
      EXPECT_TRUE(back.same_structure(fx.bialgebra)) << fx.name;
      EXPECT_EQ(back.labels(), fx.bialgebra.labels()) << fx.name;
      EXPECT_EQ(to_json(back), to_json(fx.bialgebra)) << fx.name;
      if (fx.monoid) {
        EXPECT_EQ(parse_monoid(to_json(*fx.monoid)).table, fx.monoid->table) << fx.name;
      }
    }
  }
}

TEST(Document, ShippedFilesMatchBuiltins) {
  const Document d = load_document(fixture_dir + "/quotient-quantum-plane.json");
  ASSERT_EQ(d.kind, Document::Kind::bialgebra);
  EXPECT_TRUE(d.bialgebra->same_structure(quotient_quantum_plane()));
  EXPECT_TRUE(load_document(fixture_dir + "/sweedler.json").bialgebra->same_structure(sweedler_algebra()));
  EXPECT_TRUE(load_document(fixture_dir + "/radford-dual-2.json").bialgebra->same_structure(radford_dual(2)));
  const Document m = load_document(fixture_dir + "/monogenic-2-3.monoid.json");
  ASSERT_EQ(m.kind, Document::Kind::monoid);
  EXPECT_EQ(m.monoid->table, monogenic(2, 3).table);
}

TEST(Document, FieldOverrideReducesEntries) {
  const Bialgebra b = load_document(fixture_dir + "/quotient-quantum-plane.json", Field::prime(5)).bialgebra.value();
  EXPECT_EQ(b.field(), Field::prime(5));
  EXPECT_TRUE(b.same_structure(quotient_quantum_plane(Field::prime(5))));
  const Bialgebra half = parse_bialgebra(ground("Q", "[0,0,0,3,2]"), Field::prime(5));
  EXPECT_EQ(half.mult(0, 0, 0), Scalar(Field::prime(5), 4));
}

TEST(Document, VanishingDenominatorIsRejected) {
  EXPECT_THROW(parse_bialgebra(ground("Q", "[0,0,0,1,0]")), ParseError);
  EXPECT_THROW(parse_bialgebra(ground("Q", "[0,0,0,1,5]"), Field::prime(5)), ParseError);
}

TEST(Document, PrimeFieldEntriesMustBeResidues) {
  EXPECT_NO_THROW(parse_bialgebra(ground("F5", "[0,0,0,1,1]")));
  EXPECT_THROW(parse_bialgebra(ground("F5", "[0,0,0,7,1]")), ParseError);
  EXPECT_THROW(parse_bialgebra(ground("F5", "[0,0,0,1,2]")), ParseError);
}

TEST(Document, StructuralMistakesAreLocated) {
  EXPECT_NE(message_of([] { parse_bialgebra(ground("Q", "[0,0,0,1,1]", ",[0,0,0,2,1]")); }).find("mult[1]"),
            std::string::npos);
  EXPECT_NE(message_of([] { parse_bialgebra(ground("Q", "[0,0,3,1,1]")); }).find("mult[0]"), std::string::npos);
  EXPECT_THROW(parse_bialgebra(ground("Q", "[0,0,1]")), ParseError);
  EXPECT_THROW(parse_bialgebra(ground("Z", "[0,0,0,1,1]")), ParseError);
  EXPECT_THROW(parse_bialgebra(R"({"schema":2,"kind":"bialgebra"})"), ParseError);
}

TEST(Document, MalformedJsonReportsPosition) {
  const std::string msg = message_of([] { parse_document("{\"schema\": 1,, }"); });
  EXPECT_NE(msg.find("14"), std::string::npos) << msg;
  EXPECT_THROW(load_document(fixture_dir + "/missing.json"), ParseError);
}

TEST(Document, BigIntegersSurviveAsStrings) {
  const std::string big = "123456789012345678901234567890";
  const Bialgebra b = parse_bialgebra(ground("Q", "[0,0,0,\"" + big + "\",\"11\"]"));
  // big is coprime to 11, so the fraction is already in lowest terms.
  EXPECT_EQ(b.mult(0, 0, 0).numerator(), mpz_class(big));
  EXPECT_EQ(b.mult(0, 0, 0).denominator(), mpz_class(11));
  EXPECT_NE(to_json(b).find("\"" + big + "\""), std::string::npos);
  EXPECT_TRUE(parse_bialgebra(to_json(b)).same_structure(b));
}

TEST(Document, MonoidDocumentsParseWithoutAxiomChecks) {
  EXPECT_EQ(parse_monoid(to_json(cyclic_group(3))).size, 3u);
  EXPECT_THROW(parse_monoid(R"({"schema":1,"kind":"monoid","size":2,"identity":0,"table":[[0,1],[1,3]]})"),
               ParseError);
  const FiniteMonoid no_identity =
      parse_monoid(R"({"schema":1,"kind":"monoid","size":2,"identity":0,"table":[[0,0],[1,1]]})");
  EXPECT_EQ(validate(no_identity).failure, "identity");
}

TEST(Document, CorruptFixtureParsesButFailsCoassociativity) {
  const Bialgebra b = load_document(fixture_dir + "/corrupt-coassociativity.json").bialgebra.value();
  const AxiomReport r = verify_axioms(b);
  EXPECT_FALSE(r.coassociativity.ok);
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->name, "coassociativity");
}
