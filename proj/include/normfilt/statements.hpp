#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace normfilt {

struct StatementInfo {
  std::string_view id;
  std::string_view summary;
};

/// Every checkable statement, in report order.
const std::vector<StatementInfo>& statements();
bool is_statement_id(std::string_view id);

}  // namespace normfilt
