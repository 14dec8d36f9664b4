#include "doctest.h"

#include <sstream>

#include "cqcap/report.hpp"

TEST_SUITE("report") {

TEST_CASE("csv_double keeps twelve significant digits") {
    CHECK(cqcap::csv_double(1.0 / 3.0) == "0.333333333333");
    CHECK(cqcap::csv_double(0.5) == "0.5");
    CHECK(cqcap::csv_double(0.0) == "0");
    CHECK(cqcap::csv_double(-2.0) == "-2");
    CHECK(cqcap::csv_double(1.0614756908460860) == "1.06147569085");
    // Round trips through the printed form stay within the 12-digit grid.
    const double v = 197.147624719857327;
    CHECK(cqcap::csv_double(v) == "197.14762472");
}

TEST_CASE("csv_double survives extreme magnitudes") {
    const std::string tiny = cqcap::csv_double(1.49903127859718e-30);
    CHECK(tiny.find("e-30") != std::string::npos);
    CHECK(tiny.substr(0, 7) == "1.49903");
    const std::string huge = cqcap::csv_double(1e30);
    CHECK(huge.find("e+30") != std::string::npos);
}

TEST_CASE("csv writer quotes only when needed") {
    std::ostringstream out;
    cqcap::CsvWriter w(out);
    w.header({"suite", "witness"});
    w.row({"plain", "hello"});
    w.row({"needs,comma", "has \"quote\""});
    w.row({"multi\nline", ""});
    CHECK(out.str() ==
          "suite,witness\n"
          "plain,hello\n"
          "\"needs,comma\",\"has \"\"quote\"\"\"\n"
          "\"multi\nline\",\n");
}

} // TEST_SUITE
