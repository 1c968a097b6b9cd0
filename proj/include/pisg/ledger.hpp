#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pisg/error.hpp"
#include "pisg/io.hpp"

namespace pisg {

struct LedgerRow {
  std::string key;  // canonical ring key
  std::uint64_t budget = 0;
  json data;
};

/// Append-only JSONL store, one row per line.
class Ledger {
 public:
  /// Loads `path` if it exists. Malformed lines are skipped and reported as
  /// Error(CorruptLedger) entries in `problems()` with their line number.
  explicit Ledger(std::string path);

  const std::string& path() const noexcept { return path_; }
  const std::vector<Error>& problems() const noexcept { return problems_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Row with the largest budget for `key` (the latest one on ties).
  std::optional<LedgerRow> lookup(const std::string& key) const;
  /// Writes the row to disk immediately. Throws Error(BadInput) when the file
  /// cannot be opened for appending.
  void append(const LedgerRow& row);

 private:
  std::string path_;
  std::vector<LedgerRow> rows_;
  std::vector<Error> problems_;
};

void ledger_append(const std::string& path, const LedgerRow& row);
std::optional<LedgerRow> ledger_lookup(const std::string& path, const std::string& key, std::vector<Error>* problems = nullptr);

}  // namespace pisg
