#pragma once

#include <string>
#include <vector>

namespace ybx {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;  // offending basis tuple / entry, empty on pass
};

/// Per-axiom pass/fail listing used by all structure checkers.
struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, std::string witness = "") {
    items.push_back(CheckItem{std::move(name), pass, std::move(witness)});
  }

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  std::string summary() const {
    std::string s;
    for (const auto& it : items) {
      s += it.name;
      s += it.pass ? ": pass" : ": FAIL";
      if (!it.pass && !it.witness.empty()) {
        s += " at ";
        s += it.witness;
      }
      s += "\n";
    }
    return s;
  }
};

}  // namespace ybx
