#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "seifinv/swfloer.hpp"

namespace seifinv::cli {

ReportRow compute_row(const Triple& t) {
  const BrieskornFloer floer(t[0], t[1], t[2]);
  ReportRow row;
  row.triple = t;
  row.P = floer.poincare_polynomial();
  row.F = floer.froyshov_F();
  row.eight_m = 8 * gap_m(row.P);
  row.Z = Rational(row.eight_m) + row.F;
  return row;
}

Report build_report(const std::vector<Triple>& triples, unsigned threads) {
  Report out;
  out.rows.resize(triples.size());
  if (triples.empty()) return out;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(triples.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= triples.size()) return;
      try {
        out.rows[i] = compute_row(triples[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = triples.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

void check_consistency(const Report& r) {
  for (const auto& row : r.rows) {
    if (row.Z != Rational(row.eight_m) + row.F) {
      throw std::logic_error("report row " + triple_str(row.triple) + ": Z != 8m + F");
    }
  }
}

json to_json(const Report& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"triple", row.triple},
                    {"F", encode(row.F)},
                    {"eight_m", row.eight_m},
                    {"Z", encode(row.Z)},
                    {"P", encode(row.P)}});
  }
  return json{{"rows", rows}};
}

Report report_from_json(const json& j) {
  Report r;
  for (const auto& row : j.at("rows")) {
    ReportRow out;
    out.triple = row.at("triple").get<Triple>();
    out.F = decode_rational(row.at("F"));
    out.eight_m = row.at("eight_m").get<long>();
    out.Z = decode_rational(row.at("Z"));
    out.P = decode_polynomial(row.at("P"));
    r.rows.push_back(std::move(out));
  }
  return r;
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "a,b,c,F,eight_m,Z,P\n";
  for (const auto& row : r.rows) {
    os << triple_str(row.triple) << ',' << row.F << ',' << row.eight_m << ',' << row.Z << ",\"" << row.P.str()
       << "\"\n";
  }
  return os.str();
}

std::string to_latex(const Report& r) {
  std::ostringstream os;
  os << "\\begin{tabular}{||c|c|c|c||} \\hline\n";
  os << "$(a,b,c)$ & {\\bf F} & $8m$ & $Z$ \\\\ \\hline\\hline\n";
  for (const auto& row : r.rows) {
    os << "$(" << triple_str(row.triple) << ")$ & $" << row.F << "$ & $" << row.eight_m << "$ & $" << row.Z
       << "$ \\\\ \\hline\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& row : r.rows) {
    os << '(' << triple_str(row.triple) << ")  F=" << row.F << "  8m=" << row.eight_m << "  Z=" << row.Z
       << "  P=" << row.P.str() << '\n';
  }
  return os.str();
}

}  // namespace seifinv::cli
