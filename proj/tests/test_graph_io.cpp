#include <gtest/gtest.h>

#include <irred/graph_io.hpp>
#include <irred/harness.hpp>

#include "graphs.hpp"

using namespace irred;
using namespace testgraphs;

TEST(EdgeList, ParsesPath) {
  const Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3", GraphFormat::EdgeList);
  EXPECT_EQ(g, path(3));
}

TEST(EdgeList, EmptyEdgeSet) {
  const Graph g = parse_graph("p edge 4 0\n", GraphFormat::EdgeList);
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(EdgeList, CommentsAndBlankLinesIgnored) {
  const Graph g = parse_graph("# a comment\np edge 2 1\n\n# another\ne 2 1\n",
                              GraphFormat::EdgeList);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(EdgeList, RejectsMalformedInput) {
  const char *bad[] = {
      "e 1 2\n",                      // edge before header
      "p edge x 1\n",                 // header
      "p edge 3 1\ne 1 4\n",          // out of range
      "p edge 3 1\ne 0 1\n",          // ids are 1-based
      "p edge 3 1\ne 2 2\n",          // self-loop
      "p edge 3 2\ne 1 2\ne 2 1\n",   // duplicate
      "p edge 3 2\ne 1 2\n",          // count mismatch
      "",                             // missing header
  };
  for (const char *text : bad)
    EXPECT_THROW(parse_graph(text, GraphFormat::EdgeList), parse_error) << text;
}

TEST(EdgeList, EncodePathHasTwoEdgeLines) {
  const std::string s = encode_graph(path(3), GraphFormat::EdgeList);
  EXPECT_EQ(s, "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST(Graph6, PathRoundTrip) {
  // P3 = 0-1-2: upper-triangle bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000
  EXPECT_EQ(encode_graph(path(3), GraphFormat::Graph6), "Bg");
  EXPECT_EQ(parse_graph("Bg", GraphFormat::Graph6), path(3));
  EXPECT_EQ(parse_graph(">>graph6<<Bg\n", GraphFormat::Graph6), path(3));
}

TEST(Graph6, SmallOrders) {
  EXPECT_EQ(encode_graph(edgeless(1), GraphFormat::Graph6), "@");
  EXPECT_EQ(encode_graph(edgeless(0), GraphFormat::Graph6), "?");
  EXPECT_EQ(encode_graph(complete(4), GraphFormat::Graph6), "C~");
}

TEST(Graph6, RejectsBadStrings) {
  EXPECT_THROW(parse_graph("", GraphFormat::Graph6), parse_error);
  EXPECT_THROW(parse_graph("Bgg", GraphFormat::Graph6), parse_error);
  EXPECT_THROW(parse_graph("Bh", GraphFormat::Graph6), parse_error); // padding
  EXPECT_THROW(parse_graph("B ", GraphFormat::Graph6), parse_error);
}

TEST(Graph6, LargeOrderHeader) {
  // 63 vertices need the four-byte size field
  const Graph g = gen_random_graph(63, 0.1, 5);
  const std::string s = encode_graph(g, GraphFormat::Graph6);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph(s, GraphFormat::Graph6), g);
}

TEST(RoundTrip, ThousandRandomGraphsBothFormats) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = static_cast<int>(seed % 40);
    const Graph g = gen_random_graph(n, 0.05 + (seed % 10) / 10.0, seed);
    for (GraphFormat f : {GraphFormat::EdgeList, GraphFormat::Graph6})
      ASSERT_EQ(parse_graph(encode_graph(g, f), f), g) << seed;
  }
}

TEST(Encode, GuardsOrder) {
  EXPECT_EQ(kMaxEncodableOrder, 1L << 18);
}

TEST(Format, FromString) {
  EXPECT_EQ(format_from_string("graph6"), GraphFormat::Graph6);
  EXPECT_EQ(format_from_string("edge-list"), GraphFormat::EdgeList);
  EXPECT_THROW(format_from_string("dimacs"), std::invalid_argument);
}
