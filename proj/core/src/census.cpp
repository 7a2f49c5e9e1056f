#include "specgraph/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <ostream>
#include <thread>

#include "specgraph/error.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/structure.hpp"

namespace specgraph {

std::optional<Graph> VectorGraphStream::next() {
  if (pos_ >= graphs_.size()) return std::nullopt;
  return graphs_[pos_++];
}

Graph6FileStream::Graph6FileStream(const std::filesystem::path& path) : path_(path), in_(path) {
  if (!in_) throw Error(Errc::io_error, "cannot open " + path.string());
}

std::optional<Graph> Graph6FileStream::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    Graph g{1};
    try {
      g = decode_graph6(line);
    } catch (const Error& e) {
      throw Error(e.code(), path_.string() + ":" + std::to_string(line_) + ": " + e.what());
    }
    if (!is_connected(g)) {
      ++rejected_;
      continue;
    }
    return g;
  }
  if (in_.bad()) throw Error(Errc::io_error, "read failed on " + path_.string());
  return std::nullopt;
}

std::unique_ptr<GraphStream> open_census_source(std::size_t m,
                                                const std::optional<std::filesystem::path>& file) {
  if (file) return std::make_unique<Graph6FileStream>(*file);
  return std::make_unique<VectorGraphStream>(enumerate_connected(m));
}

namespace {

struct Partial {
  std::array<IndexStats, kAllIndices.size()> stats{};
  std::array<Histogram, kAllIndices.size()> histograms{};
};

Partial process_block(const std::vector<Graph>& block, double zero_tol, double bin_width) {
  Partial part;
  for (auto& h : part.histograms) h = Histogram(bin_width, 0.0);
  for (const Graph& g : block) {
    const SpectralIndices idx = compute_indices(eigen_sym(g), zero_tol);
    for (std::size_t k = 0; k < kAllIndices.size(); ++k) {
      const double v = index_value(idx, kAllIndices[k]);
      part.stats[k].update(v, g);
      part.histograms[k].add(v);
    }
  }
  return part;
}

}  // namespace

CensusReport run_census(GraphStream& source, const CensusOptions& options) {
  if (!(options.bin_width > 0.0)) throw Error(Errc::invalid_params, "bin width must be positive");
  const std::size_t block_size = std::max<std::size_t>(options.block_size, 1);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(threads, 1U);

  CensusReport report;
  for (auto& h : report.histograms) h = Histogram(options.bin_width, 0.0);

  bool exhausted = false;
  while (!exhausted) {
    // Read up to `threads` blocks, process them concurrently, merge in order.
    std::vector<std::vector<Graph>> blocks;
    while (blocks.size() < threads) {
      std::vector<Graph> block;
      block.reserve(block_size);
      while (block.size() < block_size) {
        auto g = source.next();
        if (!g) {
          exhausted = true;
          break;
        }
        if (report.order == 0) report.order = g->order();
        if (g->order() != report.order) {
          throw Error(Errc::mixed_orders, "expected order " + std::to_string(report.order) + ", got " +
                                              std::to_string(g->order()));
        }
        block.push_back(std::move(*g));
      }
      if (!block.empty()) blocks.push_back(std::move(block));
      if (exhausted) break;
    }
    if (blocks.empty()) break;
    const double tol = options.zero_tol.value_or(default_zero_tol(report.order));

    std::vector<Partial> partials(blocks.size());
    if (blocks.size() == 1) {
      partials[0] = process_block(blocks[0], tol, options.bin_width);
    } else {
      std::vector<std::future<Partial>> jobs;
      for (const auto& b : blocks) {
        jobs.push_back(std::async(std::launch::async, process_block, std::cref(b), tol, options.bin_width));
      }
      for (std::size_t i = 0; i < jobs.size(); ++i) partials[i] = jobs[i].get();
    }
    for (std::size_t i = 0; i < partials.size(); ++i) {
      report.count += blocks[i].size();
      for (std::size_t k = 0; k < kAllIndices.size(); ++k) {
        report.stats[k].merge(partials[i].stats[k]);
        report.histograms[k].merge(partials[i].histograms[k]);
      }
    }
  }
  report.rejected = source.rejected();
  return report;
}

ExtremalResult extremal(GraphStream& source, IndexKind index, Direction direction,
                        std::optional<double> zero_tol) {
  constexpr double tol = IndexStats::kWitnessTol;
  ExtremalResult res;
  res.index = index;
  res.direction = direction;
  const double sign = direction == Direction::min ? 1.0 : -1.0;

  struct Candidate {
    double value;
    Graph graph;
    Spectrum spectrum;
  };
  std::vector<Candidate> keep;
  double best = 0.0;
  bool any = false;
  while (auto g = source.next()) {
    Spectrum s = eigen_sym(*g);
    const double v = index_value(compute_indices(s, zero_tol.value_or(default_zero_tol(g->order()))), index);
    if (!any || sign * v < sign * best) best = v;
    any = true;
    if (sign * v <= sign * best + tol) keep.push_back({v, std::move(*g), std::move(s)});
    std::erase_if(keep, [&](const Candidate& c) { return sign * c.value > sign * best + tol; });
  }
  if (!any) throw Error(Errc::empty_source, "no graphs in source");
  res.value = best;
  for (auto& c : keep) res.witnesses.push_back({encode_graph6(c.graph), c.graph.edges(), std::move(c.spectrum)});
  return res;
}

bool ClassicalReport::all() const noexcept {
  return !items.empty() && std::all_of(items.begin(), items.end(), [](const ClassicalItem& i) { return i.holds; });
}

namespace {

ClassicalItem classical_item(std::string name, double expected, const Graph& graph, const IndexStats& st,
                             Direction dir) {
  ClassicalItem it;
  it.name = std::move(name);
  it.expected = expected;
  it.observed = dir == Direction::min ? st.min() : st.max();
  it.expected_graph6 = encode_graph6(canonical_form(graph));
  const auto& wit = dir == Direction::min ? st.argmin() : st.argmax();
  const auto total = dir == Direction::min ? st.argmin_total() : st.argmax_total();
  it.unique = total == 1 && wit.size() == 1 &&
              encode_graph6(canonical_form(decode_graph6(wit.front()))) == it.expected_graph6;
  it.holds = it.unique && std::abs(it.observed - expected) <= 1e-9;
  return it;
}

}  // namespace

ClassicalReport verify_classical_extremes(const CensusReport& report) {
  const std::size_t m = report.order;
  if (m < 2) throw Error(Errc::invalid_order, "classical extremes need order >= 2");
  const auto md = static_cast<double>(m);
  ClassicalReport rep;
  rep.order = m;
  const Partition halves({(m + 1) / 2, m / 2});
  rep.items.push_back(classical_item("max lambda_max", md - 1.0, families::complete(m),
                                     report.of(IndexKind::lambda_max), Direction::max));
  rep.items.push_back(classical_item("min lambda_max", 2.0 * std::cos(std::numbers::pi / (md + 1.0)),
                                     families::path(m), report.of(IndexKind::lambda_max), Direction::min));
  rep.items.push_back(classical_item("min lambda_min", -std::sqrt(static_cast<double>((m / 2) * ((m + 1) / 2))),
                                     families::complete_multipartite(halves), report.of(IndexKind::lambda_min),
                                     Direction::min));
  rep.items.push_back(classical_item("max lambda_min", -1.0, families::complete(m),
                                     report.of(IndexKind::lambda_min), Direction::max));
  rep.items.push_back(classical_item("min pow", 2.0 * std::sqrt(md - 1.0), families::star(m),
                                     report.of(IndexKind::pow), Direction::min));
  return rep;
}

std::string format_fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += ';';
    out += s;
  }
  return out;
}

std::string opt_fixed(const IndexStats& st, double (IndexStats::*fn)() const) {
  if (st.count() < 2 || st.m2() == 0.0) return "";
  return format_fixed((st.*fn)());
}

}  // namespace

void write_stats_csv(std::ostream& out, const CensusReport& report) {
  out << "index,count,mean,std,skewness,kurtosis,min,max,argmin_g6,argmax_g6\n";
  for (IndexKind k : kAllIndices) {
    const IndexStats& st = report.of(k);
    out << index_name(k) << ',' << st.count();
    if (st.count() == 0) {
      out << ",,,,,,,,\n";
      continue;
    }
    out << ',' << format_fixed(st.mean()) << ',' << format_fixed(st.sample_std()) << ','
        << opt_fixed(st, &IndexStats::skewness) << ',' << opt_fixed(st, &IndexStats::kurtosis) << ','
        << format_fixed(st.min()) << ',' << format_fixed(st.max()) << ',' << join(st.argmin()) << ','
        << join(st.argmax()) << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const Histogram& histogram) {
  out << "bin_lo,bin_hi,count\n";
  for (const auto& r : histogram.rows()) out << format_fixed(r.lo) << ',' << format_fixed(r.hi) << ',' << r.count << '\n';
}

std::vector<std::filesystem::path> write_census_csv(const CensusReport& report,
                                                    const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Errc::io_error, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  auto open = [&](const std::filesystem::path& p) {
    std::ofstream f(p);
    if (!f) throw Error(Errc::io_error, "cannot write " + p.string());
    written.push_back(p);
    return f;
  };
  {
    auto f = open(dir / "stats.csv");
    write_stats_csv(f, report);
  }
  for (IndexKind k : kAllIndices) {
    auto f = open(dir / ("hist_" + std::string(index_name(k)) + ".csv"));
    write_histogram_csv(f, report.histogram(k));
  }
  return written;
}

}  // namespace specgraph
