#include "families.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "seifinv/seifert.hpp"

namespace seifinv::cli {

namespace {

const std::array<std::array<Linear, 3>, 4> kSupported{{
    {{{0, 2}, {0, 3}, {6, 1}}},
    {{{0, 2}, {0, 3}, {6, -1}}},
    {{{0, 2}, {4, 1}, {4, 3}}},
    {{{0, 3}, {3, 1}, {3, 2}}},
}};

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("family '" + std::string(text) + "', position " + std::to_string(pos) + ": " + what);
}

class LinearParser {
 public:
  LinearParser(std::string_view text, std::size_t offset, std::string_view whole, char& variable)
      : text_(text), offset_(offset), whole_(whole), variable_(variable) {}

  Linear run() {
    Linear out;
    if (text_.empty()) fail(whole_, offset_, "empty entry");
    bool any = false;
    while (pos_ < text_.size()) {
      long sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (any) {
        fail(whole_, offset_ + pos_, "expected '+' or '-'");
      }
      long value = 1;
      bool digits = false;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const char* b = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(b, text_.data() + text_.size(), value);
        if (ec != std::errc()) fail(whole_, offset_ + pos_, "integer out of range");
        pos_ += static_cast<std::size_t>(ptr - b);
        digits = true;
      }
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        const char v = text_[pos_];
        if (v != 'k' && v != 's') fail(whole_, offset_ + pos_, std::string("unknown index variable '") + v + "'");
        if (variable_ != 0 && variable_ != v) fail(whole_, offset_ + pos_, "mixed index variables");
        variable_ = v;
        ++pos_;
        out.coeff += sign * value;
      } else if (digits) {
        out.constant += sign * value;
      } else {
        fail(whole_, offset_ + pos_, "expected an integer or index variable");
      }
      any = true;
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::string_view whole_;
  char& variable_;
  std::size_t pos_ = 0;
};

long parse_long_at(std::string_view s, std::string_view whole, std::size_t offset) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("'" + std::string(whole) + "', position " + std::to_string(offset) +
                                ": expected an integer");
  }
  return v;
}

}  // namespace

Family parse_family(std::string_view text) {
  Family f;
  f.text = std::string(text);
  char variable = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    if ((comma == std::string_view::npos) != (i == 2)) fail(text, start, "expected three comma-separated entries");
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    f.entries[i] = LinearParser(text.substr(start, end - start), start, text, variable).run();
    start = end + 1;
  }
  if (variable == 0) fail(text, 0, "no index variable; use explicit triples instead");
  f.variable = variable;
  for (const auto& s : kSupported) {
    if (s == f.entries) return f;
  }
  fail(text, 0, "unsupported family (supported: 2,3,6k+1  2,3,6k-1  2,4k+1,4k+3  3,3s+1,3s+2)");
}

IndexRange parse_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  IndexRange r;
  if (dots == std::string_view::npos) {
    r.first = r.last = parse_long_at(text, text, 0);
  } else {
    r.first = parse_long_at(text.substr(0, dots), text, 0);
    r.last = parse_long_at(text.substr(dots + 2), text, dots + 2);
  }
  if (r.first < 1 || r.last < r.first) {
    throw std::invalid_argument("range '" + std::string(text) + "' must satisfy 1 <= first <= last");
  }
  return r;
}

std::vector<Triple> expand(const Family& f, const IndexRange& r) {
  std::vector<Triple> out;
  for (long k = r.first; k <= r.last; ++k) {
    out.push_back({f.entries[0].at(k), f.entries[1].at(k), f.entries[2].at(k)});
  }
  return out;
}

Triple parse_triple_arg(std::string_view text) {
  const auto v = parse_triple(text);
  return {v[0], v[1], v[2]};
}

std::string triple_str(const Triple& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

}  // namespace seifinv::cli
