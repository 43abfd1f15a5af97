#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "deltaring/ring_spec.hpp"

namespace dr = deltaring;

namespace {

std::size_t error_column(std::string const& text) {
  try {
    dr::parse_ring_spec(text);
  } catch (dr::ParseError const& e) {
    return e.column();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return 0;
}

}  // namespace

TEST(RingSpec, CanonicalRoundTrip) {
  for (std::string const s :
       {"Z4", "T(2, Z2)", "M(2, Z4)", "prod(Z2, quot(Z4, 2))", "H(1, 1, Z4)",
        "corner(T(2, Z2), 4)", "dorroh(Z2, self)", "dorroh(Z4, ideal(2))",
        "dorroh(Z2, zmod(Z4, 2))", "dorroh(Z3, zero)", "table:rings/f4.json",
        "quot(Z12, 4, 6)"}) {
    EXPECT_EQ(dr::parse_ring_spec(s)->to_string(), s);
  }
}

TEST(RingSpec, WhitespaceIsIgnored) {
  EXPECT_EQ(dr::parse_ring_spec("  prod( Z2 ,T(2,Z3) ) ")->to_string(),
            "prod(Z2, T(2, Z3))");
}

TEST(RingSpec, ErrorColumns) {
  EXPECT_EQ(error_column(""), 1u);
  EXPECT_EQ(error_column("Z"), 2u);
  EXPECT_EQ(error_column("Z1"), 1u);
  EXPECT_EQ(error_column("foo(Z2)"), 1u);
  EXPECT_EQ(error_column("prod(Z2 Z3)"), 9u);
  EXPECT_EQ(error_column("T(0, Z2)"), 3u);
  EXPECT_EQ(error_column("Z4 x"), 4u);
  EXPECT_EQ(error_column("quot(Z4)"), 8u);
  EXPECT_EQ(error_column("dorroh(Z2, bogus)"), 12u);
}

TEST(RingSpec, BuilderMemoizesSharedComponents) {
  dr::RingBuilder b;
  auto t = b.build("T(2, Z2)");
  auto t_again = b.build(" T(2,Z2) ");
  EXPECT_EQ(t.get(), t_again.get());
  EXPECT_EQ(b.build("Z2").get(), b.build("Z2").get());
}

TEST(RingSpec, BuildErrors) {
  dr::RingBuilder b;
  EXPECT_THROW(b.build("corner(Z4, 2)"), dr::ConstructionError);
  EXPECT_THROW(b.build("quot(Z4, 1)"), dr::ConstructionError);
  EXPECT_THROW(b.build("H(2, 1, Z4)"), dr::ConstructionError);
  EXPECT_THROW(b.build("corner(Z4, 9)"), dr::ConstructionError);
  EXPECT_THROW(b.build("M(3, Z4)"), dr::CapacityError);
  EXPECT_THROW(b.build("table:does/not/exist.json"), dr::ConstructionError);
}

TEST(RingSpec, TablePathsResolveAgainstSearchDirs) {
  auto const dir = std::filesystem::temp_directory_path() / "deltaring_spec";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "z2.json")
      << R"({"size": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]],)"
      << R"( "zero": 0, "one": 1})";
  dr::RingBuilder b({dir});
  auto r = b.build("table:z2.json");
  EXPECT_EQ(r->size(), 2u);
  EXPECT_EQ(r->name(), "table:z2.json");
  // The shipped F_4 table is found through the source data directory.
  EXPECT_EQ(dr::RingBuilder().build("table:rings/f4.json")->size(), 4u);
}
