#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aqg {

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

/// One identity checked on one instance. A failed record always carries a witness.
struct CheckRecord {
  std::string suite;
  std::string case_name;
  CheckStatus status = CheckStatus::pass;
  std::optional<std::string> witness;
  double elapsed_ms = 0.0;
};

class CheckReport {
 public:
  void add(CheckRecord r) {
    if (r.status == CheckStatus::fail && !r.witness) r.witness = "(no witness recorded)";
    records_.push_back(std::move(r));
  }

  void pass(std::string suite, std::string name, double elapsed_ms = 0.0) {
    add({std::move(suite), std::move(name), CheckStatus::pass, std::nullopt, elapsed_ms});
  }
  void fail(std::string suite, std::string name, std::string witness, double elapsed_ms = 0.0) {
    add({std::move(suite), std::move(name), CheckStatus::fail, std::move(witness), elapsed_ms});
  }
  void skip(std::string suite, std::string name, std::string reason = {}) {
    add({std::move(suite), std::move(name), CheckStatus::skip,
         reason.empty() ? std::nullopt : std::optional<std::string>(std::move(reason)), 0.0});
  }
  /// Records pass when witness is empty, fail otherwise.
  void record(std::string suite, std::string name, std::optional<std::string> witness, double elapsed_ms = 0.0) {
    if (witness) {
      fail(std::move(suite), std::move(name), std::move(*witness), elapsed_ms);
    } else {
      pass(std::move(suite), std::move(name), elapsed_ms);
    }
  }

  void append(const CheckReport& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
  }

  const std::vector<CheckRecord>& records() const { return records_; }
  bool all_passed() const { return failed() == 0; }
  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& r : records_) n += r.status == s;
    return n;
  }
  std::size_t passed() const { return count(CheckStatus::pass); }
  std::size_t failed() const { return count(CheckStatus::fail); }
  std::size_t skipped() const { return count(CheckStatus::skip); }

  const CheckRecord* find(const std::string& case_name) const {
    for (const auto& r : records_) {
      if (r.case_name == case_name) return &r;
    }
    return nullptr;
  }

 private:
  std::vector<CheckRecord> records_;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace aqg
