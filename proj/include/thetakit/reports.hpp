#pragma once

#include <string>
#include <vector>

namespace thetakit {

enum class CheckStatus { Pass, Fail, Undecided };

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // witness or explanation on failure
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, CheckStatus status, std::string detail = "") {
    items.push_back({std::move(name), status, std::move(detail)});
  }
  CheckStatus overall() const {
    CheckStatus s = CheckStatus::Pass;
    for (const CheckItem& i : items) {
      if (i.status == CheckStatus::Fail) return CheckStatus::Fail;
      if (i.status == CheckStatus::Undecided) s = CheckStatus::Undecided;
    }
    return s;
  }
  bool passed() const { return overall() == CheckStatus::Pass; }
};

const char* check_status_name(CheckStatus s);

}  // namespace thetakit
