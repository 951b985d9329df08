#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace seifinv::cli {

using Triple = std::array<long, 3>;

/// c k + d in a single index variable.
struct Linear {
  long coeff = 0;
  long constant = 0;
  long at(long k) const { return coeff * k + constant; }
  friend bool operator==(const Linear&, const Linear&) = default;
};

/// One of the supported Brieskorn families, e.g. "2,3,6k+1".
struct Family {
  std::string text;
  char variable = 'k';
  std::array<Linear, 3> entries;
};

struct IndexRange {
  long first = 1;
  long last = 1;
};

/// Supported: 2,3,6k+1 / 2,3,6k-1 / 2,4k+1,4k+3 / 3,3s+1,3s+2 (either index
/// letter). Errors carry the character position.
Family parse_family(std::string_view text);

/// "a..b" or a single "a".
IndexRange parse_range(std::string_view text);

std::vector<Triple> expand(const Family& f, const IndexRange& r);

/// "a,b,c".
Triple parse_triple_arg(std::string_view text);

std::string triple_str(const Triple& t);

}  // namespace seifinv::cli
