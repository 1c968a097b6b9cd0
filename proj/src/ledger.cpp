#include "pisg/ledger.hpp"

#include <fstream>

namespace pisg {

Ledger::Ledger(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = json::parse(line);
      LedgerRow r;
      r.key = j.at("key").get<std::string>();
      r.budget = j.at("budget").get<std::uint64_t>();
      r.data = j.at("data");
      rows_.push_back(std::move(r));
    } catch (const json::exception& e) {
      problems_.emplace_back(ErrorKind::CorruptLedger, path_ + ":" + std::to_string(lineno) + ": malformed ledger line", std::vector<std::string>{e.what()});
    }
  }
}

std::optional<LedgerRow> Ledger::lookup(const std::string& key) const {
  std::optional<LedgerRow> best;
  for (const auto& r : rows_)
    if (r.key == key && (!best || r.budget >= best->budget)) best = r;
  return best;
}

void Ledger::append(const LedgerRow& row) {
  ledger_append(path_, row);
  rows_.push_back(row);
}

void ledger_append(const std::string& path, const LedgerRow& row) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorKind::BadInput, "cannot append to ledger " + path);
  out << json{{"key", row.key}, {"budget", row.budget}, {"data", row.data}}.dump() << '\n';
}

std::optional<LedgerRow> ledger_lookup(const std::string& path, const std::string& key, std::vector<Error>* problems) {
  Ledger l(path);
  if (problems) *problems = l.problems();
  return l.lookup(key);
}

}  // namespace pisg
