#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cqcap {

// 12 significant digits, the fixed float format of every CSV report.
std::string csv_double(double v);

// Minimal CSV emitter: one header row, then data rows. Fields containing a
// comma, quote or newline are quoted with doubled inner quotes.
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& columns) { row(columns); }
    void row(const std::vector<std::string>& fields);

  private:
    std::ostream& out_;
};

} // namespace cqcap
