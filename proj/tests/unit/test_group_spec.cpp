#include <gtest/gtest.h>

#include "diffgraph/group_spec.hpp"
#include "oracles.hpp"

using namespace diffgraph;

TEST(GroupSpec, ParsesEveryKind) {
  EXPECT_EQ(parse_group_spec("cyclic:7"), GroupSpec::cyclic(7));
  EXPECT_EQ(parse_group_spec("dihedral:21"), GroupSpec::dihedral(21));
  EXPECT_EQ(parse_group_spec("semidirect:5,8,2"), GroupSpec::semidirect(5, 8, 2));
  EXPECT_EQ(parse_group_spec("product:cyclic:2,cyclic:20"),
            GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(20)));
  EXPECT_EQ(parse_group_spec("file:/tmp/x,y.txt"), GroupSpec::file("/tmp/x,y.txt"));
}

TEST(GroupSpec, NestedProductsAndRoundTrip) {
  const std::string text = "product:product:cyclic:2,cyclic:2,cyclic:10";
  const GroupSpec spec = parse_group_spec(text);
  EXPECT_EQ(spec, GroupSpec::product(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2)),
                                     GroupSpec::cyclic(10)));
  EXPECT_EQ(to_string(spec), text);
  const Group g = build_group(spec);
  EXPECT_EQ(g.order(), 40u);
  for (const auto* t : {"cyclic:1", "semidirect:7,6,3", "product:dihedral:3,cyclic:7",
                        "product:semidirect:7,3,2,cyclic:2"}) {
    EXPECT_EQ(to_string(parse_group_spec(t)), t);
  }
}

TEST(GroupSpec, Rejects) {
  for (const auto* t : {"", "cyclic", "cyclic:", "cyclic:x", "cyclic:7x", "torus:3", "product:cyclic:2",
                        "semidirect:5,8", "file:"}) {
    try {
      (void)parse_group_spec(t);
      FAIL() << t;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument) << t;
    }
  }
}

TEST(GroupSpec, FileSpecLoadsTable) {
  const auto path = oracle::temp_file("z5.txt");
  oracle::write_text(path, format_cayley_table(build_cyclic(5)));
  const Group g = build_group(parse_group_spec("file:" + path.string()));
  EXPECT_EQ(g, build_cyclic(5));
}

TEST(GroupFamily, Presets) {
  EXPECT_EQ(group_family("abelian40").size(), 3u);
  for (const auto& spec : group_family("abelian40")) {
    const Group g = build_group(spec);
    EXPECT_EQ(g.order(), 40u);
    EXPECT_TRUE(g.abelian());
  }
  const auto na = group_family("nonabelian42");
  ASSERT_EQ(na.size(), 5u);
  std::vector<std::map<std::uint32_t, std::size_t>> profiles;
  for (const auto& spec : na) {
    const Group g = build_group(spec);
    EXPECT_EQ(g.order(), 42u);
    EXPECT_FALSE(g.abelian());
    profiles.push_back(validate_group(g).order_histogram);
  }
  // Element-order statistics already separate the five groups.
  for (std::size_t i = 0; i < profiles.size(); ++i)
    for (std::size_t j = i + 1; j < profiles.size(); ++j) EXPECT_NE(profiles[i], profiles[j]) << i << " " << j;
  EXPECT_THROW((void)group_family("abelian99"), Error);
}

TEST(Elements, IndicesAndIdentity) {
  const Group g = build_cyclic(10);
  EXPECT_EQ(parse_element(g, "7"), 7u);
  EXPECT_EQ(parse_element(g, "e"), 0u);
  EXPECT_THROW((void)parse_element(g, "10"), Error);
  EXPECT_EQ(parse_element_list(g, "0, 1,3"), (std::vector<Element>{0, 1, 3}));
}

TEST(Elements, WordsInGammaOne) {
  const Group g = build_semidirect(5, 8, 2);
  const Element a = g.generators().at('a');
  const Element b = g.generators().at('b');
  const Element binv = g.inv(b);
  EXPECT_EQ(parse_element(g, "b*a^-1*b^2"), g.mul(g.mul(b, g.inv(a)), g.mul(b, b)));
  EXPECT_EQ(parse_element(g, "ba^-1b^2"), parse_element(g, "b*a^-1*b^2"));
  EXPECT_EQ(parse_element(g, "b^-1"), binv);
  EXPECT_EQ(parse_element(g, "a^5"), 0u);
  const auto list = parse_element_list(g, "1,b,b^4,ba,ba^-1b^2,ab^-1,bab^2");
  EXPECT_EQ(list.size(), 7u);
  EXPECT_EQ(list[0], 0u);
  EXPECT_THROW((void)parse_element_list(g, "3,b"), Error);
  EXPECT_THROW((void)parse_element(g, "c"), Error);
  EXPECT_EQ(parse_element(build_cyclic(4), "a^3"), 3u);
  EXPECT_THROW((void)parse_element(build_cyclic(4), "b"), Error);
}

TEST(Elements, FormatRoundTrip) {
  const Group g = build_semidirect(5, 8, 2);
  // A lone "1" is an index; inside a word list it is the identity.
  std::string all;
  for (Element x = 0; x < g.order(); ++x) all += (x ? "," : "") + format_element(g, x);
  const auto back = parse_element_list(g, all);
  ASSERT_EQ(back.size(), g.order());
  for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(back[x], x);
  for (Element x = 1; x < g.order(); ++x) EXPECT_EQ(parse_element(g, format_element(g, x)), x);
  EXPECT_EQ(parse_element(g, "e"), kIdentity);
  EXPECT_EQ(format_element(build_cyclic(9), 4), "4");
}
