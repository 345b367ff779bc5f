// ptie command-line tool. Talks to the library exclusively through the
// public C API so it doubles as a consumer of that surface.
//
// Exit codes: 0 success, 1 verification/decoding failure, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptie/ptie.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

enum class Format { human, csv, record };

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "record") return Format::record;
  return Format::human;
}

struct ScheduleHandle {
  ptie_schedule* ptr = nullptr;
  ~ScheduleHandle() { ptie_schedule_destroy(ptr); }
};

struct ReportHandle {
  ptie_report* ptr = nullptr;
  ~ReportHandle() { ptie_report_destroy(ptr); }
};

[[noreturn]] void die_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

void require_ok(ptie_status status, const std::string& what) {
  if (status == PTIE_OK) return;
  if (status == PTIE_ERROR_INVALID_ARGUMENT || status == PTIE_ERROR_UNSUPPORTED) {
    die_usage(what + ": " + ptie_status_name(status));
  }
  std::cerr << "error: " << what << ": " << ptie_status_name(status) << "\n";
  std::exit(kExitFailure);
}

void require_k_le_n(std::uint32_t n, std::uint32_t k) {
  if (k > n) die_usage("--k must not exceed --n (got k=" + std::to_string(k) +
                       ", n=" + std::to_string(n) + ")");
}

std::vector<std::uint32_t> parse_u32_list(const std::string& text, const std::string& flag,
                                          std::uint32_t minimum) {
  std::vector<std::uint32_t> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(item, &used);
      if (used != item.size() || value > 100000) throw std::invalid_argument(item);
      if (value < minimum) {
        die_usage(flag + " entries must be at least " + std::to_string(minimum) + ", got " + item);
      }
      values.push_back(static_cast<std::uint32_t>(value));
    } catch (const std::exception&) {
      die_usage("cannot parse " + flag + " entry '" + item + "'");
    }
  }
  if (values.empty()) die_usage(flag + " must list at least one value");
  return values;
}

std::string join_u64(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (const std::uint64_t v : values) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

// ------------------------------------------------------------------ optimal

int cmd_optimal(std::uint32_t n, std::uint32_t k, Format format) {
  std::uint64_t coded = 0;
  require_ok(ptie_optimal_count(n, k, &coded), "optimal count");
  bool has_uncoded = k >= 2;
  std::uint64_t uncoded = 0;
  if (has_uncoded) require_ok(ptie_uncoded_count(n, k, &uncoded), "uncoded count");

  switch (format) {
    case Format::human:
      std::cout << "n=" << n << " k=" << k << " coded=" << coded;
      if (has_uncoded) {
        std::cout << " uncoded=" << uncoded << " saving=" << uncoded - coded << "\n";
      } else {
        std::cout << " uncoded=NA saving=NA\n";
      }
      break;
    case Format::csv:
      std::cout << "n,k,coded,uncoded,saving\n" << n << "," << k << "," << coded << ",";
      if (has_uncoded) {
        std::cout << uncoded << "," << uncoded - coded << "\n";
      } else {
        std::cout << "NA,NA\n";
      }
      break;
    case Format::record: {
      json record{{"n", n}, {"k", k}, {"coded", coded}};
      record["uncoded"] = has_uncoded ? json(uncoded) : json(nullptr);
      record["saving"] = has_uncoded ? json(uncoded - coded) : json(nullptr);
      std::cout << record.dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------------- plan

int cmd_plan(std::uint32_t n, std::uint32_t k, Format format) {
  std::vector<std::uint64_t> counts(n);
  require_ok(ptie_plan_counts(n, k, counts.data(), counts.size()), "plan");
  std::uint64_t total = 0;
  for (const std::uint64_t c : counts) total += c;

  switch (format) {
    case Format::human:
      std::cout << "n=" << n << " k=" << k << " y=" << join_u64(counts) << " total=" << total
                << "\n";
      break;
    case Format::csv:
      std::cout << join_u64(counts) << "\n";
      break;
    case Format::record:
      std::cout << json{{"n", n}, {"k", k}, {"y", counts}, {"total", total}}.dump() << "\n";
      break;
  }
  return kExitOk;
}

// ----------------------------------------------------------------- schedule

int cmd_schedule(std::uint32_t n, std::uint32_t k, Format format) {
  ScheduleHandle schedule;
  require_ok(ptie_schedule_create(n, k, &schedule.ptr), "schedule");
  const std::size_t entry_count = ptie_schedule_entry_count(schedule.ptr);

  std::vector<ptie_schedule_entry> entries(entry_count);
  std::vector<std::string> rendered(entry_count);
  char buffer[128];
  for (std::size_t e = 0; e < entry_count; ++e) {
    require_ok(ptie_schedule_entry_at(schedule.ptr, e, &entries[e]), "schedule entry");
    require_ok(ptie_schedule_render_entry(schedule.ptr, e, buffer, sizeof buffer),
               "schedule entry");
    rendered[e] = buffer;
  }

  switch (format) {
    case Format::human: {
      std::cout << "n=" << n << " k=" << k << " transmissions=" << entry_count << "\n";
      std::size_t e = 0;
      for (std::uint32_t sender = 1; sender <= n; ++sender) {
        std::cout << "c_" << sender << ":";
        bool first = true;
        while (e < entry_count && entries[e].sender == sender) {
          std::cout << (first ? " " : ", ") << rendered[e];
          first = false;
          ++e;
        }
        std::cout << "\n";
      }
      break;
    }
    case Format::csv:
      for (std::size_t e = 0; e < entry_count; ++e) {
        std::cout << "sender=" << entries[e].sender << " j=" << entries[e].index
                  << " packet=" << rendered[e] << "\n";
      }
      break;
    case Format::record: {
      json list = json::array();
      for (std::size_t e = 0; e < entry_count; ++e) {
        json terms = json::array();
        for (std::uint32_t t = 0; t < entries[e].term_count; ++t) {
          terms.push_back({entries[e].term_lo[t], entries[e].term_hi[t]});
        }
        list.push_back({{"sender", entries[e].sender},
                        {"j", entries[e].index},
                        {"packet", rendered[e]},
                        {"terms", terms}});
      }
      std::cout << json{{"n", n}, {"k", k}, {"total", entry_count}, {"entries", list}}.dump()
                << "\n";
      break;
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------------- simulate

int cmd_simulate(std::uint32_t n, std::uint32_t k, std::uint64_t seed, std::uint32_t payload_bits,
                 Format format) {
  ReportHandle report;
  require_ok(ptie_simulate(n, k, seed, payload_bits, &report.ptr), "simulate");

  const bool success = ptie_report_success(report.ptr) != 0;
  const std::uint64_t total = ptie_report_total_transmissions(report.ptr);
  std::vector<std::uint64_t> solved(n);
  for (std::uint32_t c = 1; c <= n; ++c) {
    require_ok(ptie_report_solved_count(report.ptr, c, &solved[c - 1]), "report");
  }
  std::vector<std::uint64_t> redundant(k);
  for (std::uint32_t c = 1; c <= k; ++c) {
    require_ok(ptie_report_redundant_count(report.ptr, c, &redundant[c - 1]), "report");
  }

  switch (format) {
    case Format::human:
      std::cout << "n=" << n << " k=" << k << " seed=" << seed << " payload_bits=" << payload_bits
                << " transmissions=" << total << " success=" << (success ? "yes" : "no") << "\n";
      for (std::uint32_t c = 1; c <= n; ++c) {
        std::cout << "client=" << c << " solved=" << solved[c - 1];
        if (c <= k) std::cout << " redundant=" << redundant[c - 1];
        std::cout << "\n";
      }
      break;
    case Format::csv:
      std::cout << "n,k,seed,payload_bits,transmissions,success\n"
                << n << "," << k << "," << seed << "," << payload_bits << "," << total << ","
                << (success ? "true" : "false") << "\n";
      break;
    case Format::record: {
      json record{{"n", n},
                  {"k", k},
                  {"seed", seed},
                  {"payload_bits", payload_bits},
                  {"transmissions", total},
                  {"success", success},
                  {"solved", solved},
                  {"redundant", redundant}};
      std::cout << record.dump() << "\n";
      break;
    }
  }

  if (!success) {
    // Name the first privileged client that could not finish and its gaps.
    for (std::uint32_t c = 1; c <= k; ++c) {
      std::size_t gaps = 0;
      require_ok(ptie_report_missing_count(report.ptr, c, &gaps), "report");
      if (gaps == 0) continue;
      std::cerr << "decode failed: client " << c << " is missing " << gaps << " pair(s):";
      for (std::size_t g = 0; g < gaps; ++g) {
        std::uint32_t lo = 0, hi = 0;
        require_ok(ptie_report_missing_pair(report.ptr, c, g, &lo, &hi), "report");
        std::cerr << " x[" << lo << "," << hi << "]";
      }
      std::cerr << "\n";
      break;
    }
    return kExitFailure;
  }
  return kExitOk;
}

// -------------------------------------------------------------------- table

int cmd_table(const std::vector<std::uint32_t>& n_list, const std::vector<std::uint32_t>& k_list,
              Format format) {
  const bool uncoded_pair_column = std::find(k_list.begin(), k_list.end(), 2u) != k_list.end();
  bool uncoded_group_column = false;
  for (const std::uint32_t k : k_list) uncoded_group_column |= k >= 3;

  struct Cell {
    bool defined = false;
    std::uint64_t value = 0;
  };
  struct Row {
    std::uint32_t n = 0;
    std::vector<Cell> coded;
    Cell uncoded_pair;   // k = 2 baseline
    Cell uncoded_group;  // k >= 3 baseline
  };

  std::vector<Row> rows;
  for (const std::uint32_t n : n_list) {
    Row row;
    row.n = n;
    for (const std::uint32_t k : k_list) {
      Cell cell;
      if (k <= n) {
        cell.defined = true;
        require_ok(ptie_optimal_count(n, k, &cell.value), "table");
      }
      row.coded.push_back(cell);
    }
    if (uncoded_pair_column) {
      row.uncoded_pair.defined = true;
      require_ok(ptie_uncoded_count(n, 2, &row.uncoded_pair.value), "table");
    }
    if (uncoded_group_column && n >= 3) {
      row.uncoded_group.defined = true;
      require_ok(ptie_uncoded_count(n, 3, &row.uncoded_group.value), "table");
    }
    rows.push_back(std::move(row));
  }

  const auto cell_text = [](const Cell& cell) {
    return cell.defined ? std::to_string(cell.value) : std::string("NA");
  };

  switch (format) {
    case Format::human: {
      std::cout << "n";
      for (const std::uint32_t k : k_list) std::cout << "\tnc k=" << k;
      if (uncoded_pair_column) std::cout << "\tplain k=2";
      if (uncoded_group_column) std::cout << "\tplain k>=3";
      std::cout << "\n";
      for (const Row& row : rows) {
        std::cout << row.n;
        for (const Cell& cell : row.coded) std::cout << "\t" << cell_text(cell);
        if (uncoded_pair_column) std::cout << "\t" << cell_text(row.uncoded_pair);
        if (uncoded_group_column) std::cout << "\t" << cell_text(row.uncoded_group);
        std::cout << "\n";
      }
      break;
    }
    case Format::csv: {
      std::cout << "n";
      for (const std::uint32_t k : k_list) std::cout << ",coded_k" << k;
      if (uncoded_pair_column) std::cout << ",uncoded_k2";
      if (uncoded_group_column) std::cout << ",uncoded_k3plus";
      std::cout << "\n";
      for (const Row& row : rows) {
        std::cout << row.n;
        for (const Cell& cell : row.coded) std::cout << "," << cell_text(cell);
        if (uncoded_pair_column) std::cout << "," << cell_text(row.uncoded_pair);
        if (uncoded_group_column) std::cout << "," << cell_text(row.uncoded_group);
        std::cout << "\n";
      }
      break;
    }
    case Format::record: {
      json out{{"n_list", n_list}, {"k_list", k_list}, {"rows", json::array()}};
      for (const Row& row : rows) {
        json coded = json::array();
        for (const Cell& cell : row.coded) {
          coded.push_back(cell.defined ? json(cell.value) : json(nullptr));
        }
        json entry{{"n", row.n}, {"coded", coded}};
        if (uncoded_pair_column) {
          entry["uncoded_k2"] =
              row.uncoded_pair.defined ? json(row.uncoded_pair.value) : json(nullptr);
        }
        if (uncoded_group_column) {
          entry["uncoded_k3plus"] =
              row.uncoded_group.defined ? json(row.uncoded_group.value) : json(nullptr);
        }
        out["rows"].push_back(std::move(entry));
      }
      std::cout << out.dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(std::uint32_t nmax, Format format) {
  struct Verdict {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    int optimality = -1;  // -1 skipped, 0 failed, 1 passed
    int feasibility = -1;
    int decodability = 0;
  };

  std::vector<Verdict> verdicts;
  bool all_pass = true;
  for (std::uint32_t n = 2; n <= nmax; ++n) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      std::uint32_t checks = PTIE_CHECK_DECODABILITY;
      if (n <= 6) checks |= PTIE_CHECK_OPTIMALITY;
      if (n <= 10) checks |= PTIE_CHECK_FEASIBILITY;
      std::uint32_t failed = 0;
      require_ok(ptie_verify_instance(n, k, checks, &failed), "verify");

      Verdict verdict{n, k, -1, -1, 0};
      if (checks & PTIE_CHECK_OPTIMALITY) verdict.optimality = (failed & PTIE_CHECK_OPTIMALITY) ? 0 : 1;
      if (checks & PTIE_CHECK_FEASIBILITY) {
        verdict.feasibility = (failed & PTIE_CHECK_FEASIBILITY) ? 0 : 1;
      }
      verdict.decodability = (failed & PTIE_CHECK_DECODABILITY) ? 0 : 1;
      if (failed != 0) all_pass = false;
      verdicts.push_back(verdict);
    }
  }

  const auto verdict_text = [](int v) { return v < 0 ? "skip" : (v == 0 ? "fail" : "pass"); };

  switch (format) {
    case Format::human:
      for (const Verdict& v : verdicts) {
        std::cout << "n=" << v.n << " k=" << v.k << " optimality=" << verdict_text(v.optimality)
                  << " feasibility=" << verdict_text(v.feasibility)
                  << " decodability=" << verdict_text(v.decodability) << "\n";
      }
      std::cout << "verify " << (all_pass ? "passed" : "FAILED") << " over " << verdicts.size()
                << " instances\n";
      break;
    case Format::csv:
      std::cout << "n,k,optimality,feasibility,decodability\n";
      for (const Verdict& v : verdicts) {
        std::cout << v.n << "," << v.k << "," << verdict_text(v.optimality) << ","
                  << verdict_text(v.feasibility) << "," << verdict_text(v.decodability) << "\n";
      }
      break;
    case Format::record: {
      json list = json::array();
      for (const Verdict& v : verdicts) {
        list.push_back({{"n", v.n},
                        {"k", v.k},
                        {"optimality", verdict_text(v.optimality)},
                        {"feasibility", verdict_text(v.feasibility)},
                        {"decodability", verdict_text(v.decodability)}});
      }
      std::cout << json{{"nmax", nmax}, {"all_pass", all_pass}, {"instances", list}}.dump()
                << "\n";
      break;
    }
  }

  if (!all_pass) {
    std::cerr << "verification failed at:";
    for (const Verdict& v : verdicts) {
      if (v.optimality == 0 || v.feasibility == 0 || v.decodability == 0) {
        std::cerr << " (n=" << v.n << ",k=" << v.k << ")";
      }
    }
    std::cerr << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-broadcast planning, pairwise XOR coding, and exchange simulation"};
  app.set_version_flag("--version", std::string("ptie ") + ptie_version());
  app.require_subcommand(1);

  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t seed = 0;
  std::uint32_t payload_bits = 32;
  std::string format_name = "human";
  std::string n_list_text = "4,7,12,15";
  std::string k_list_text = "2,4,7,10,15";
  std::uint32_t nmax = 6;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"human", "csv", "record"}));
  };
  const auto add_instance = [&](CLI::App* cmd, std::uint32_t n_cap) {
    cmd->add_option("--n", n, "Number of clients")->required()->check(CLI::Range(2u, n_cap));
    cmd->add_option("--k", k, "Privileged clients (first k must decode everything)")
        ->required()
        ->check(CLI::Range(1u, 100000u));
  };

  CLI::App* optimal = app.add_subcommand("optimal", "Minimum broadcast counts, coded vs uncoded");
  add_instance(optimal, 100000u);
  add_format(optimal);

  CLI::App* plan = app.add_subcommand("plan", "Per-client transmission counts");
  add_instance(plan, 100000u);
  add_format(plan);

  CLI::App* schedule = app.add_subcommand("schedule", "Deterministic pairwise-XOR packet schedule");
  add_instance(schedule, 4096u);
  add_format(schedule);

  CLI::App* simulate = app.add_subcommand("simulate", "Run one full exchange and verify decoding");
  add_instance(simulate, 128u);
  simulate->add_option("--seed", seed, "Payload generator seed");
  simulate->add_option("--payload-bits", payload_bits, "Payload width in bits")
      ->check(CLI::Range(1u, 4096u));
  add_format(simulate);

  CLI::App* table = app.add_subcommand("table", "Coded vs uncoded broadcast counts grid");
  table->add_option("--nlist", n_list_text, "Comma-separated client counts");
  table->add_option("--klist", k_list_text, "Comma-separated privileged counts");
  add_format(table);

  CLI::App* verify = app.add_subcommand("verify", "Cross-check closed forms against brute force");
  verify->add_option("--nmax", nmax, "Largest client count to verify")->check(CLI::Range(2u, 20u));
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = parse_format(format_name);
  if (optimal->parsed() || plan->parsed() || schedule->parsed() || simulate->parsed()) {
    require_k_le_n(n, k);
  }

  if (optimal->parsed()) return cmd_optimal(n, k, format);
  if (plan->parsed()) return cmd_plan(n, k, format);
  if (schedule->parsed()) return cmd_schedule(n, k, format);
  if (simulate->parsed()) return cmd_simulate(n, k, seed, payload_bits, format);
  if (table->parsed()) {
    return cmd_table(parse_u32_list(n_list_text, "--nlist", 2),
                     parse_u32_list(k_list_text, "--klist", 2), format);
  }
  if (verify->parsed()) return cmd_verify(nmax, format);
  return kExitUsage;
}
