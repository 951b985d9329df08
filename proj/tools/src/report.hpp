#pragma once

#include <string>
#include <vector>

#include "codec.hpp"
#include "families.hpp"
#include "seifinv/laurent.hpp"
#include "seifinv/rational.hpp"

namespace seifinv::cli {

struct ReportRow {
  Triple triple{};
  Rational F;
  long eight_m = 0;
  Rational Z;
  LaurentPolynomial P;
};

struct Report {
  std::vector<ReportRow> rows;
};

ReportRow compute_row(const Triple& t);

/// Rows are computed on worker threads and returned in input order.
Report build_report(const std::vector<Triple>& triples, unsigned threads = 0);

/// Throws std::logic_error if some row has Z != 8m + F.
void check_consistency(const Report& r);

json to_json(const Report& r);
Report report_from_json(const json& j);
std::string to_csv(const Report& r);
std::string to_latex(const Report& r);
std::string to_text(const Report& r);

}  // namespace seifinv::cli
