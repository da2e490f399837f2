#include <gtest/gtest.h>

#include "asmkit/enumerate.hpp"
#include "asmkit/recurrence.hpp"
#include "asmkit/serialize.hpp"

using namespace asmkit;

namespace {

Errc code_of(std::function<void()> const& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::AuditFailed;
}

Asm const kExample = Asm::from_rows({{0, 1, 0, 0}, {1, -1, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}});

}  // namespace

TEST(Text, ParseRows) {
  using Rows = std::vector<std::vector<int>>;
  EXPECT_EQ(parse_rows("0 1\n1 0\n"), (Rows{{0, 1}, {1, 0}}));
  EXPECT_EQ(parse_rows("0 1;1 0"), (Rows{{0, 1}, {1, 0}}));
  EXPECT_EQ(parse_rows("  2\n\n1 3\n"), (Rows{{2}, {1, 3}}));
  EXPECT_EQ(code_of([] { parse_rows("1 x"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse_rows("1 2.5"); }), Errc::ParseError);
  EXPECT_EQ(format_rows({{2}, {1, 3}}), "2\n1 3\n");
}

TEST(Text, KindNames) {
  for (auto const& [k, name] : kKindNames) {
    EXPECT_EQ(parse_kind(name), k);
    EXPECT_STREQ(kind_name(k), name);
  }
  EXPECT_EQ(code_of([] { parse_kind("matrix"); }), Errc::ParseError);
}

TEST(Text, ExampleConversions) {
  EXPECT_EQ(convert_to_text(kExample, Kind::Monotone), "2\n1 3\n1 3 4\n1 2 3 4\n");
  EXPECT_EQ(convert_to_text(kExample, Kind::Tiles), ">+^^\n+-+^\nv>v+\nv+<<\n");
  EXPECT_EQ(convert_to_text(kExample, Kind::CornerSum).substr(0, 20), "0 0 0 0 0\n0 0 1 1 1\n");
  EXPECT_EQ(convert_to_text(Asm::identity(2), Kind::LinkPattern), "1-4,2-3\n");
}

TEST(Json, Shapes) {
  EXPECT_EQ(to_json(Asm::identity(2)).dump(), R"({"kind":"asm","n":2,"data":[[1,0],[0,1]]})");
  EXPECT_EQ(convert_to_json(kExample, Kind::Monotone).dump(),
            R"({"kind":"monotone","n":4,"data":[[2],[1,3],[1,3,4],[1,2,3,4]]})");
  auto const six = convert_to_json(Asm::identity(2), Kind::SixVertex);
  EXPECT_EQ(six["data"]["horizontal"].dump(), "[[1,0,0],[1,1,0]]");
  EXPECT_EQ(six["data"]["vertical"].dump(), "[[1,1],[0,1],[0,0]]");
  EXPECT_EQ(convert_to_json(Asm::identity(2), Kind::Tiles)["data"].dump(),
            R"([["gasket","basket-r180"],["basket","gasket"]])");
  EXPECT_EQ(convert_to_json(Asm::identity(2), Kind::LinkPattern).dump(),
            R"({"kind":"link-pattern","n":2,"data":[[1,4],[2,3]]})");
  auto const ideal = convert_to_json(Asm::identity(3), Kind::Ideal);
  EXPECT_EQ(ideal["kind"], "ideal");
  EXPECT_EQ(ideal["data"].size(), 4u);
}

TEST(Json, PolynomialCoefficientsAreStrings) {
  auto const j = to_json(octahedron(1));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["coeff"], "1");
  EXPECT_EQ(j[0]["vars"]["x(0,0)"], -1);
  EXPECT_EQ(j[0]["vars"]["y(-1,0)"], 1);
}

TEST(Json, RoundTripEveryReadableKind) {
  std::vector<Kind> const readable = {Kind::Asm,       Kind::CornerSum, Kind::Height, Kind::Coloring,
                                      Kind::Monotone,  Kind::SixVertex, Kind::Fpl,    Kind::Ideal};
  for_each_asm(4, [&](Asm const& a) {
    for (Kind k : readable) {
      auto const text = convert_to_json(a, k).dump();
      ASSERT_EQ(asm_from_input(text, Kind::Asm), a) << kind_name(k);
    }
  });
}

TEST(Text, RoundTripMatrixKinds) {
  for (Kind k : {Kind::Asm, Kind::CornerSum, Kind::Height, Kind::Coloring, Kind::Monotone})
    for_each_asm(4, [&](Asm const& a) { ASSERT_EQ(asm_from_input(convert_to_text(a, k), k), a) << kind_name(k); });
  EXPECT_EQ(asm_from_input("[[0,1],[1,0]]", Kind::Asm), Asm::from_rows({{0, 1}, {1, 0}}));
}

TEST(Input, Errors) {
  EXPECT_EQ(code_of([] { asm_from_input("{\"kind\":\"asm\"", Kind::Asm); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { asm_from_input("{\"n\":2}", Kind::Asm); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { asm_from_input("1 0\n1 0", Kind::Asm); }), Errc::AlternationViolated);
  EXPECT_EQ(code_of([] { asm_from_input("0 1\n1 0", Kind::SixVertex); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { asm_from_input("0 1\n1 0", Kind::Tiles); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { asm_from_input(R"({"kind":"ideal","data":[[1,1,0]]})", Kind::Asm); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { asm_from_input(R"({"kind":"ideal","n":3,"data":[[1,1,0]]})", Kind::Asm); }),
            Errc::NotDownwardClosed);
  EXPECT_EQ(code_of([] { asm_from_input(R"({"kind":"ideal","n":3,"data":[[9,9,9]]})", Kind::Asm); }),
            Errc::InvariantViolated);
  EXPECT_EQ(code_of([] {
              asm_from_input(R"({"kind":"six-vertex","data":{"horizontal":[[1,0,0],[1,1,0]],"vertical":[[1,1],[0,2],[0,0]]}})",
                             Kind::Asm);
            }),
            Errc::BadEntryValue);
  EXPECT_EQ(code_of([] { asm_from_input("0 1 0\n0 0 1\n2 0 0", Kind::Coloring); }), Errc::NoLift);
  EXPECT_EQ(code_of([] { asm_from_input("0 1 2\n1 2", Kind::Coloring); }), Errc::NotSquare);
}

TEST(Json, ErrorObject) {
  try {
    Asm::from_rows({{1, 0}, {1, 0}});
  } catch (Error const& e) {
    auto const j = error_json(e);
    EXPECT_EQ(j["error"], "AlternationViolated");
    EXPECT_EQ(j["row"], 2);
    EXPECT_EQ(j["col"], 1);
    EXPECT_EQ(j["message"], e.message());
  }
  EXPECT_FALSE(error_json(Error(Errc::ZeroOrder, "x")).contains("row"));
}
