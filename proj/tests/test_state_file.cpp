#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "fockbound/error.hpp"
#include "fockbound/families.hpp"
#include "fockbound/random_states.hpp"
#include "fockbound/state_file.hpp"

using namespace fockbound;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    parse_state_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(StateFile, Layout) {
  const StateFile f = make_state_file(make_state(std::vector<Complex>{Complex(0.6, 0.0), Complex(0.0, -0.8)}));
  EXPECT_EQ(serialize(f),
            "{\n  \"version\": 1,\n  \"dim\": 2,\n  \"amplitudes\": [\n"
            "    [0.59999999999999998, 0],\n    [0, -0.80000000000000004]\n  ]\n}\n");
  const StateFile g = make_state_file(make_fock(1, 2), "fock(1)", {"top-level weight"});
  EXPECT_NE(serialize(g).find("\"metadata\": {\n    \"family\": \"fock(1)\",\n    \"warnings\": [\"top-level weight\"]\n  }"),
            std::string::npos);
}

TEST(StateFile, RoundTripIsByteIdentical) {
  Rng rng(47);
  for (int i = 0; i < 50; ++i) {
    const StateFile f = make_state_file(random_state(rng, 1, 60), i % 2 ? std::optional<std::string>("x") : std::nullopt);
    const std::string once = serialize(f);
    const StateFile back = parse_state_file(once);
    EXPECT_EQ(serialize(back), once);
    ASSERT_EQ(back.amplitudes.size(), f.amplitudes.size());
    for (std::size_t n = 0; n < f.amplitudes.size(); ++n) EXPECT_EQ(back.amplitudes[n], f.amplitudes[n]);
  }
}

TEST(StateFile, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "fockbound_state_file_test.json";
  const StateFile f = make_state_file(make_coherent(Complex(1.0, -2.0), 40), "coherent(1,-2)");
  write_state_file(path.string(), f);
  const StateFile back = read_state_file(path.string());
  EXPECT_EQ(serialize(back), serialize(f));
  EXPECT_EQ(back.family, f.family);
  const FockState s = to_state(back);
  EXPECT_EQ(s.dim(), 40u);
  std::filesystem::remove(path);
  EXPECT_THROW(read_state_file(path.string()), Error);
}

TEST(StateFile, RejectsMalformedInput) {
  EXPECT_EQ(parse_code("{"), ErrorCode::Parse);
  EXPECT_EQ(parse_code("[]"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"version": 1, "dim": 1})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"version": 2, "dim": 1, "amplitudes": [[1, 0]]})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"version": 1, "dim": 2, "amplitudes": [[1, 0]]})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"version": 1, "dim": 1, "amplitudes": [[1]]})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"version": 1, "dim": 1, "amplitudes": [["1", 0]]})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"version": 1, "dim": 1, "amplitudes": [[1, 0]], "metadata": 3})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"version": 1, "dim": 1, "amplitudes": [[1, 0]], "metadata": {"warnings": [1]}})"),
            ErrorCode::Parse);
  const StateFile zero = parse_state_file(R"({"version": 1, "dim": 2, "amplitudes": [[0, 0], [0, 0]]})");
  EXPECT_THROW(to_state(zero), Error);
}
