#ifndef DBIC_SWEEP_HPP
#define DBIC_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "dbic/codes.hpp"
#include "dbic/error.hpp"
#include "dbic/graph.hpp"

namespace dbic {

struct SweepCell {
  std::uint32_t d = 0;
  std::uint32_t n = 0;
  unsigned t = 0;

  friend bool operator==(const SweepCell&, const SweepCell&) = default;
};

/// One row of a parameter sweep. A non-identifiable cell carries a twin
/// witness and no code size.
struct SweepRecord {
  SweepCell cell;
  bool identifiable = false;
  std::optional<std::pair<std::string, std::string>> twin_witness;
  std::optional<std::size_t> min_code_size;
  bool optimal = false;
  double elapsed_ms = 0.0;
  std::optional<std::string> error;
};

struct SweepOptions {
  /// Cells with d^n at or below this run the exact solver; larger cells
  /// report the greedy size with optimal = false.
  std::uint64_t exact_below = 64;
  /// Node limit for each exact cell.
  std::uint64_t node_budget = 200'000;
  std::uint64_t max_vertices = kDefaultMaxVertices;
  unsigned jobs = 1;
};

/// Parses "2..5", "3", "1,4..6" into an ascending-as-written list.
inline std::vector<std::uint32_t> parse_int_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  auto parse_number = [&](std::string_view token, std::size_t offset) {
    if (token.empty()) throw ParseError("empty number", offset + 1);
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < token.size(); ++i) {
      if (token[i] < '0' || token[i] > '9') {
        throw ParseError(std::string("unexpected character '") + token[i] + "'",
                         offset + i + 1);
      }
      value = value * 10 + static_cast<std::uint64_t>(token[i] - '0');
      if (value > UINT32_MAX) throw ParseError("number too large", offset + 1);
    }
    return static_cast<std::uint32_t>(value);
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view item = text.substr(start, end - start);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_number(item, start));
    } else {
      const std::uint32_t lo = parse_number(item.substr(0, dots), start);
      const std::uint32_t hi = parse_number(item.substr(dots + 2), start + dots + 2);
      if (lo > hi) throw ParseError("empty range", start + 1);
      for (std::uint32_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Grid in (d, n, t) order. Without an explicit t list each n expands to
/// t = 1 .. n-1.
inline std::vector<SweepCell> expand_grid(const std::vector<std::uint32_t>& ds,
                                          const std::vector<std::uint32_t>& ns,
                                          const std::optional<std::vector<std::uint32_t>>& ts) {
  std::vector<SweepCell> out;
  for (std::uint32_t d : ds) {
    for (std::uint32_t n : ns) {
      if (ts) {
        for (std::uint32_t t : *ts) out.push_back({d, n, t});
      } else {
        for (std::uint32_t t = 1; t < n; ++t) out.push_back({d, n, t});
      }
    }
  }
  return out;
}

inline SweepRecord run_sweep_cell(const SweepCell& cell, const SweepOptions& options) {
  SweepRecord record;
  record.cell = cell;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (cell.t < 1) throw InvalidParameters("t must be >= 1");
    const auto g = DeBruijnGraph::build(cell.d, cell.n, options.max_vertices);
    const auto verdict = is_identifiable(g, cell.t);
    record.identifiable = verdict.identifiable;
    if (!verdict.identifiable) {
      record.twin_witness = std::make_pair(g.label(verdict.witness->x).to_string(),
                                           g.label(verdict.witness->y).to_string());
    } else if (g.vertex_count() <= options.exact_below) {
      // Sweep cells always run under the node budget so one hard cell
      // cannot stall the grid; an exhausted search reports optimal = false.
      const auto result = min_code(g, cell.t, MinCodeOptions{0, options.node_budget});
      record.min_code_size = result.code.size();
      record.optimal = result.optimal;
    } else {
      record.min_code_size = greedy_code(g, cell.t).size();
      record.optimal = false;
    }
  } catch (const Error& e) {
    record.error = e.what();
  }
  record.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return record;
}

inline std::string sweep_csv_header() {
  return "d,n,t,identifiable,twin_x,twin_y,min_code_size,optimal,elapsed_ms";
}

/// Errors appear as identifiable = "error" with the remaining fields empty.
inline std::string to_csv_row(const SweepRecord& r) {
  std::ostringstream out;
  out << r.cell.d << ',' << r.cell.n << ',' << r.cell.t << ',';
  if (r.error) {
    out << "error,,,,,";
  } else {
    out << (r.identifiable ? "true" : "false") << ',';
    if (r.twin_witness) {
      out << '"' << r.twin_witness->first << "\",\"" << r.twin_witness->second << '"';
    } else {
      out << ',';
    }
    out << ',';
    if (r.min_code_size) out << *r.min_code_size;
    out << ',' << (r.optimal ? "true" : "false") << ',';
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
  out << elapsed;
  return out.str();
}

/// Runs every cell, handing records to `emit` in grid order as soon as each
/// prefix of the grid is complete.
inline void run_sweep(const std::vector<SweepCell>& cells, const SweepOptions& options,
                      const std::function<void(const SweepRecord&)>& emit) {
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    for (const auto& cell : cells) emit(run_sweep_cell(cell, options));
    return;
  }
  std::vector<std::optional<SweepRecord>> done(cells.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
          SweepRecord record = run_sweep_cell(cells[i], options);
          std::lock_guard lock(mutex);
          done[i] = std::move(record);
          ready.notify_all();
        }
      });
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return done[i].has_value(); });
      SweepRecord record = std::move(*done[i]);
      lock.unlock();
      emit(record);
    }
  }
}

inline std::vector<SweepRecord> run_sweep(const std::vector<SweepCell>& cells,
                                          const SweepOptions& options) {
  std::vector<SweepRecord> out;
  run_sweep(cells, options, [&](const SweepRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace dbic

#endif  // DBIC_SWEEP_HPP
