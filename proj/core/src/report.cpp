#include <json.hpp>

#include <cstdio>
#include <fstream>

#include "warpmech/scenario.hpp"

namespace warpmech {

void write_report(const Report& rep, const std::string& path) {
  nlohmann::ordered_json j;
  j["schema"] = "warpmech-report-v1";
  j["seed"] = rep.seed;
  j["warnings"] = rep.warnings;
  j["checks"] = nlohmann::ordered_json::array();
  int passed = 0;
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["residual"] = c.residual;
    if (!c.informational) {
      e["tolerance"] = c.tolerance;
      e["comparator"] = c.comparator;
    } else {
      e["informational"] = true;
    }
    e["pass"] = c.pass;
    if (!c.note.empty()) e["note"] = c.note;
    j["checks"].push_back(e);
    if (c.pass) ++passed;
  }
  j["summary"] = {{"total", rep.checks.size()},
                  {"passed", passed},
                  {"failed", rep.checks.size() - passed}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

void write_master_table(const std::vector<MasterRelationRow>& rows,
                        const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw Error("cannot open '" + path + "' for writing");
  std::fputs("relation,h,l,max_residual,pass\n", f);
  for (const auto& r : rows)
    std::fprintf(f, "%s,%d,%d,%.17g,%s\n", r.relation.c_str(), r.h, r.l, r.residual,
                 r.pass ? "true" : "false");
  std::fclose(f);
}

}  // namespace warpmech
