#include "graphdss/catalog.hpp"
#include "graphdss/code.hpp"
#include "graphdss/error.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace graphdss;

namespace {

std::vector<Block> make_data(std::size_t k, std::size_t s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<Block> out(k, Block(s));
  for (auto& b : out)
    for (auto& x : b) x = static_cast<std::uint8_t>(byte(rng));
  return out;
}

BitRow row_of(std::size_t m, std::initializer_list<std::size_t> ones) {
  BitRow r(m);
  for (auto i : ones) r.set(i);
  return r;
}

}  // namespace

TEST(Gf2Rank, SmallMatrices) {
  EXPECT_EQ(gf2_rank({}), 0u);
  EXPECT_EQ(gf2_rank({row_of(3, {0, 1}), row_of(3, {1, 2}), row_of(3, {0, 2})}), 2u);
  EXPECT_EQ(gf2_rank({row_of(3, {0}), row_of(3, {1}), row_of(3, {2})}), 3u);
  EXPECT_EQ(gf2_rank({BitRow(130), BitRow(130)}), 0u);
}

TEST(Gf2Rank, AgreesWithNaiveReductionOnRandomRows) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = 1 + t % 20;
    const std::size_t cols = 1 + (t * 7) % 150;
    std::vector<BitRow> a(rows, BitRow(cols));
    std::vector<std::vector<std::uint8_t>> b(rows, std::vector<std::uint8_t>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (coin(rng)) {
          a[r].set(c);
          b[r][c] = 1;
        }
    EXPECT_EQ(gf2_rank(a), oracle::naive_rank(b));
  }
}

TEST(DeriveCode, ParametersOfCatalogGraphs) {
  for (const Graph& g : {complete_graph(5), complete_bipartite_interleaved(4), robertson_graph(),
                         pg23_incidence_graph(), petersen_graph()}) {
    const ParityCode code = derive_code(g);
    EXPECT_EQ(code.length, g.edge_count());
    EXPECT_EQ(code.rank, g.vertex_count() - 1);
    EXPECT_EQ(code.rank, oracle::naive_rank(oracle::incidence_rows(g)));
    EXPECT_EQ(code.dimension, g.edge_count() - g.vertex_count() + 1);
    EXPECT_EQ(code.generator_basis.size(), code.dimension);
    EXPECT_EQ(code.information_set.size(), code.dimension);
    EXPECT_EQ(gf2_rank(code.generator_basis), code.dimension);
    for (const BitRow& row : code.generator_basis) EXPECT_TRUE(is_codeword(code, row));
  }
}

TEST(DeriveCode, RejectsDisconnected) {
  const Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  try {
    derive_code(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(DeriveCode, PetersenChecksFromCubicStructure) {
  const Graph p = petersen_graph();
  const ParityCode code = derive_code(p);
  EXPECT_EQ(code.dimension, 6u);
  for (const BitRow& row : code.parity_rows) EXPECT_EQ(row.count(), 3u);
}

TEST(MinimumDistance, MatchesExhaustiveEdgeSubsetScan) {
  for (const CubicSystem& sys :
       {k5_paper_system(K5Variant::Girth5), k5_paper_system(K5Variant::Girth3),
        default_system(complete_bipartite_interleaved(4))}) {
    const ParityCode code = derive_code(sys.cubic);
    std::uint64_t words = 0;
    const std::size_t expect = oracle::min_weight_by_subsets(sys.cubic, &words);
    EXPECT_EQ(words, std::uint64_t{1} << code.dimension);
    EXPECT_EQ(minimum_distance(code, sys.cubic), expect);
    EXPECT_EQ(expect, *girth(sys.cubic));
  }
}

TEST(MinimumDistance, LargeCodesUseGirth) {
  const CubicSystem sys = default_system(pg23_incidence_graph());
  const ParityCode code = derive_code(sys.cubic);
  EXPECT_EQ(minimum_distance(code, sys.cubic), *girth(sys.cubic));
}

TEST(MinimumDistance, TreeIsAcyclic) {
  const Graph t(4, {{0, 1}, {1, 2}, {1, 3}});
  try {
    minimum_distance(derive_code(t), t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Acyclic);
  }
}

TEST(Encode, SystematicAndValid) {
  std::mt19937_64 rng(5);
  for (const Graph& g : {petersen_graph(), robertson_graph(), complete_graph(6)}) {
    const ParityCode code = derive_code(g);
    const auto data = make_data(code.dimension, 37, rng);
    const StorageState state = encode(code, data);
    EXPECT_EQ(state.blocks.size(), code.length);
    EXPECT_TRUE(verify_state(code, state));
    EXPECT_EQ(extract_data(code, state), data);
    for (std::size_t i = 0; i < code.dimension; ++i) {
      EXPECT_EQ(state.blocks[code.information_set[i]], data[i]);
    }
  }
}

TEST(Encode, BitPlanesAreCodewords) {
  std::mt19937_64 rng(6);
  const Graph g = petersen_graph();
  const ParityCode code = derive_code(g);
  const StorageState state = encode(code, make_data(code.dimension, 4, rng));
  for (std::size_t byte = 0; byte < 4; ++byte) {
    for (int bit = 0; bit < 8; ++bit) {
      BitRow w(code.length);
      for (EdgeId e = 0; e < code.length; ++e) {
        if (state.blocks[e][byte] >> bit & 1) w.set(e);
      }
      EXPECT_TRUE(is_codeword(code, w));
    }
  }
}

TEST(Encode, RejectsBadShapes) {
  const ParityCode code = derive_code(petersen_graph());
  try {
    encode(code, std::vector<Block>(5, Block(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongBlockCount);
  }
  std::vector<Block> uneven(6, Block(3));
  uneven[2].resize(4);
  try {
    encode(code, uneven);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnequalBlockSizes);
  }
}

TEST(VerifyState, DetectsCorruption) {
  std::mt19937_64 rng(8);
  const ParityCode code = derive_code(petersen_graph());
  StorageState state = encode(code, make_data(code.dimension, 8, rng));
  state.blocks[3][5] ^= 0x10;
  EXPECT_FALSE(verify_state(code, state));
}
