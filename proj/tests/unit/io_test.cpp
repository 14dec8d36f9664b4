#include "doctest.h"

#include <filesystem>
#include <string>

#include "cqcap/coding.hpp"
#include "cqcap/io.hpp"
#include "cqcap/suites.hpp"

using cqcap::Code;
using cqcap::CqChannel;
using cqcap::Matrix;
using cqcap::Word;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("channel json with matrix states parses") {
    const std::string text = R"({
        "dim": 2,
        "inputs": [
            {"label": "a", "state": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]},
            {"label": "b", "state": [[[0.5, 0], [0, 0.5]], [[0, -0.5], [0.5, 0]]]}
        ]
    })";
    const CqChannel w = cqcap::parse_channel_json(text);
    CHECK(w.alphabet_size() == 2);
    CHECK(w.dim() == 2);
    CHECK(w.label(0) == "a");
    CHECK(w.label(1) == "b");
    CHECK(w.index_of("b") == 1);
    CHECK(std::abs(w.state(1).mat()(0, 1) - std::complex<double>(0.0, 0.5)) < 1e-12);
}

TEST_CASE("ket inputs become rank one projectors") {
    const std::string text = R"({
        "dim": 2,
        "inputs": [
            {"label": "0", "ket": [[1, 0], [0, 0]]},
            {"label": "+", "ket": [[1, 0], [1, 0]]}
        ]
    })";
    const CqChannel w = cqcap::parse_channel_json(text);
    const Matrix plus = w.state(1).mat();
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(std::abs(plus(r, c) - std::complex<double>(0.5, 0.0)) < 1e-12);
}

TEST_CASE("channel json round trip") {
    const CqChannel w = cqcap::zero_plus_channel();
    const CqChannel back = cqcap::parse_channel_json(cqcap::channel_to_json(w));
    REQUIRE(back.alphabet_size() == w.alphabet_size());
    REQUIRE(back.dim() == w.dim());
    for (int x = 0; x < w.alphabet_size(); ++x) {
        CHECK(back.label(x) == w.label(x));
        CHECK((back.state(x).mat() - w.state(x).mat()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("channel files save and load") {
    const auto path = temp_path("cqcap_io_test_channel.json");
    const CqChannel w = cqcap::orthogonal_pure_channel();
    cqcap::save_channel(w, path.string());
    const CqChannel back = cqcap::load_channel(path.string());
    CHECK(back.alphabet_size() == 2);
    CHECK((back.state(0).mat() - w.state(0).mat()).cwiseAbs().maxCoeff() < 1e-12);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(cqcap::load_channel(temp_path("cqcap_io_test_missing.json").string()),
                    cqcap::ValidationError);
}

TEST_CASE("malformed channel json is rejected") {
    CHECK_THROWS_AS(cqcap::parse_channel_json("{\"dim\": 2, \"inputs\": ["),
                    cqcap::ValidationError);
    CHECK_THROWS_AS(cqcap::parse_channel_json("[]"), cqcap::ValidationError);
    CHECK_THROWS_AS(cqcap::parse_channel_json("{\"dim\": 2}"), cqcap::ValidationError);
    CHECK_THROWS_AS(cqcap::parse_channel_json(R"({"dim": 2, "inputs": []})"),
                    cqcap::ValidationError);
    CHECK_THROWS_AS(cqcap::parse_channel_json(
                        R"({"dim": "two", "inputs": [{"ket": [[1, 0], [0, 0]]}]})"),
                    cqcap::ValidationError);
    // Row count does not match dim.
    CHECK_THROWS_AS(cqcap::parse_channel_json(
                        R"({"dim": 2, "inputs": [{"state": [[[1, 0]]]}]})"),
                    cqcap::ValidationError);
    // Entries must be [re, im] pairs.
    CHECK_THROWS_AS(cqcap::parse_channel_json(
                        R"({"dim": 1, "inputs": [{"state": [[1]]}]})"),
                    cqcap::ValidationError);
    // Neither state nor ket.
    CHECK_THROWS_AS(cqcap::parse_channel_json(R"({"dim": 2, "inputs": [{"label": "x"}]})"),
                    cqcap::ValidationError);
    // Not a density operator.
    CHECK_THROWS_AS(cqcap::parse_channel_json(
                        R"({"dim": 1, "inputs": [{"state": [[[2, 0]]]}]})"),
                    cqcap::ValidationError);
}

TEST_CASE("code json round trip preserves the decoder") {
    const CqChannel w = cqcap::orthogonal_pure_channel();
    const Code code =
        cqcap::greedy_code_build(w, cqcap::InputDistribution::uniform(2), 2, 0.5, 1.0);
    REQUIRE(code.size() == 4);

    const std::string text = cqcap::code_to_json(code, w, "orthogonal_pure.json");
    CHECK(text.find("\"0,1\"") != std::string::npos); // comma-joined labels

    const Code back = cqcap::parse_code_json(text, w);
    REQUIRE(back.size() == code.size());
    CHECK(back.block_length() == 2);
    CHECK(back.lambda() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(back.codewords() == code.codewords());
    for (int m = 0; m < 4; ++m) {
        CHECK((back.dense_element(m) - code.dense_element(m)).cwiseAbs().maxCoeff() < 1e-9);
    }
    CHECK(std::abs(cqcap::error_probability(back, w) - cqcap::error_probability(code, w)) <
          1e-9);

    const auto path = temp_path("cqcap_io_test_code.json");
    cqcap::save_code(code, w, "orthogonal_pure.json", path.string());
    const Code loaded = cqcap::load_code(path.string(), w);
    CHECK(loaded.codewords() == code.codewords());
    std::filesystem::remove(path);
}

TEST_CASE("compact codeword strings read one label per character") {
    const CqChannel w = cqcap::orthogonal_pure_channel();
    const std::string text = R"({
        "n": 2,
        "channel_ref": "x",
        "codewords": ["01", "1,0"],
        "decoder": [
            [[[0.5, 0], [0, 0], [0, 0], [0, 0]],
             [[0, 0], [0, 0], [0, 0], [0, 0]],
             [[0, 0], [0, 0], [0, 0], [0, 0]],
             [[0, 0], [0, 0], [0, 0], [0, 0]]],
            [[[0.5, 0], [0, 0], [0, 0], [0, 0]],
             [[0, 0], [0, 0], [0, 0], [0, 0]],
             [[0, 0], [0, 0], [0, 0], [0, 0]],
             [[0, 0], [0, 0], [0, 0], [0, 0]]]
        ],
        "lambda": 0.5
    })";
    const Code code = cqcap::parse_code_json(text, w);
    REQUIRE(code.size() == 2);
    CHECK(code.codeword(0) == Word{0, 1});
    CHECK(code.codeword(1) == Word{1, 0});
    CHECK(code.element_trace(0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("malformed code json is rejected") {
    const CqChannel w = cqcap::orthogonal_pure_channel();
    CHECK_THROWS_AS(cqcap::parse_code_json("{", w), cqcap::ValidationError);
    CHECK_THROWS_AS(cqcap::parse_code_json(R"({"n": 1})", w), cqcap::ValidationError);
    // Array lengths disagree.
    CHECK_THROWS_AS(cqcap::parse_code_json(
                        R"({"n": 1, "codewords": ["0"], "decoder": [], "lambda": 0.5})", w),
                    cqcap::ValidationError);
    // Codeword length does not match n.
    CHECK_THROWS_AS(
        cqcap::parse_code_json(
            R"({"n": 2, "codewords": ["0"], "decoder": [[[[1, 0], [0, 0]], [[0, 0], [0, 0]]]], "lambda": 0.5})",
            w),
        cqcap::ValidationError);
    // Unknown input label.
    CHECK_THROWS_AS(
        cqcap::parse_code_json(
            R"({"n": 1, "codewords": ["z"], "decoder": [[[[1, 0], [0, 0]], [[0, 0], [0, 0]]]], "lambda": 0.5})",
            w),
        cqcap::ValidationError);
    // Lambda outside [0, 1).
    CHECK_THROWS_AS(
        cqcap::parse_code_json(
            R"({"n": 1, "codewords": ["0"], "decoder": [[[[1, 0], [0, 0]], [[0, 0], [0, 0]]]], "lambda": 1.5})",
            w),
        cqcap::ValidationError);
}

} // TEST_SUITE
