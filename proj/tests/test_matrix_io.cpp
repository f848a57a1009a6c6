#include <gtest/gtest.h>

#include <sstream>

#include "logchol/errors.hpp"
#include "logchol/matrix_io.hpp"
#include "logchol/random.hpp"
#include "test_support.hpp"

namespace logchol {
namespace {

TEST(MatrixIo, ReadsBlocksSkippingCommentsAndBlankLines) {
  std::istringstream in("# two blocks\n2\n4 2\n2 5\n\n1\n3\n");
  const auto blocks = read_spd_blocks(in);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].to_dense(), test::dense({{4, 2}, {2, 5}}));
  EXPECT_EQ(blocks[1](0, 0), 3.0);
}

TEST(MatrixIo, RejectsMalformedInput) {
  const char* bad[] = {"x\n", "0\n", "2\n1 2\n", "2\n1 2 3\n2 1\n", "2\n1 a\n1 1\n",
                       "2\n1 nan\nnan 1\n"};
  for (const char* text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(read_dense_blocks(in), ParseError) << text;
  }
}

TEST(MatrixIo, ValidatesDeclaredType) {
  std::istringstream asym("2\n1 2\n3 1\n");
  EXPECT_THROW(read_sym_blocks(asym), ParseError);
  std::istringstream upper("2\n1 2\n0 1\n");
  EXPECT_THROW(read_lower_blocks(upper), ParseError);
  std::istringstream indefinite("2\n1 2\n2 1\n");
  EXPECT_THROW(read_spd_blocks(indefinite), NotSpd);
}

TEST(MatrixIo, MissingFile) {
  EXPECT_THROW(read_spd_file("/nonexistent/fixture.txt"), ParseError);
}

TEST(MatrixIo, WriteReadRoundTripIsExact) {
  Rng rng(3);
  const auto p = random_spd(4, rng);
  std::stringstream buf;
  write_block(buf, p.sym());
  const auto back = read_spd_blocks(buf);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].sym(), p.sym());
}

}  // namespace
}  // namespace logchol
