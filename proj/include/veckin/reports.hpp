#pragma once

#include <string>
#include <vector>

#include "veckin/diagnostics.hpp"

namespace veckin {

// CSV emission; all numbers with 17 significant digits so reruns of an
// identical manifest are byte-identical.

void write_solution_csv(const std::string& path, const Field& u);
void write_entropy_csv(const std::string& path, const EntropyReport& report,
                       int report_every = 1);
void write_eoc_csv(const std::string& path, const EocTable& table);

struct AuditRow {
  std::string check;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};
void write_audit_csv(const std::string& path, const std::vector<AuditRow>& rows);

std::string format_g17(double v);

}  // namespace veckin
