#include "mmbp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mmbp/kernels.hpp"

namespace mmbp {

Instance::Instance(std::int32_t vertex_count, std::int32_t dim,
                   std::vector<Edge> edges,
                   std::vector<std::int64_t> weights_milli)
    : n_(vertex_count), k_(dim) {
  if (n_ <= 0 || n_ % 2 != 0)
    throw std::invalid_argument("vertex count must be positive and even, got " +
                                std::to_string(n_));
  if (k_ < 1)
    throw std::invalid_argument("weight dimension must be positive, got " +
                                std::to_string(k_));
  const std::size_t m = edges.size();
  if (weights_milli.size() != m * static_cast<std::size_t>(k_))
    throw std::invalid_argument("expected " + std::to_string(m) + " x " +
                                std::to_string(k_) + " weights, got " +
                                std::to_string(weights_milli.size()));
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n_ || e.u >= e.v)
      throw std::invalid_argument("bad edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") for n=" +
                                  std::to_string(n_));
  }
  for (const std::int64_t w : weights_milli)
    if (w <= 0)
      throw std::invalid_argument("edge weights must be positive");

  // Sort edges and carry their weight rows along.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return edges[a] < edges[b];
  });
  edges_.reserve(m);
  weights_.reserve(weights_milli.size());
  for (const std::size_t idx : order) {
    edges_.push_back(edges[idx]);
    const auto* row = weights_milli.data() + idx * static_cast<std::size_t>(k_);
    weights_.insert(weights_.end(), row, row + k_);
  }
  for (std::size_t i = 1; i < m; ++i)
    if (edges_[i] == edges_[i - 1])
      throw std::invalid_argument("duplicate edge (" +
                                  std::to_string(edges_[i].u) + "," +
                                  std::to_string(edges_[i].v) + ")");

  totals_.assign(static_cast<std::size_t>(k_), 0);
  const auto& ops = kernels::active();
  for (std::size_t e = 0; e < m; ++e)
    ops.add_row(totals_.data(), weights_.data() + e * static_cast<std::size_t>(k_),
                static_cast<std::size_t>(k_));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int_field(std::string_view tok, std::size_t line_no,
                             const char* what) {
  std::int64_t value = 0;
  if (tok.empty() || tok.size() > 18)
    throw ParseError("line " + std::to_string(line_no) + ": malformed " +
                     what + " '" + std::string(tok) + "'");
  for (const char c : tok) {
    if (c < '0' || c > '9')
      throw ParseError("line " + std::to_string(line_no) + ": malformed " +
                       what + " '" + std::string(tok) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // Drop trailing blank lines (canonical files end with one LF).
  while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty instance file");

  const auto header = split_ws(lines[0]);
  if (header.size() != 3)
    throw ParseError("line 1: expected header 'n m k'");
  const std::int64_t n = parse_int_field(header[0], 1, "vertex count");
  const std::int64_t m = parse_int_field(header[1], 1, "edge count");
  const std::int64_t k = parse_int_field(header[2], 1, "dimension");
  if (n <= 0 || n % 2 != 0)
    throw ParseError("line 1: vertex count must be positive and even, got " +
                     std::to_string(n));
  if (k < 1) throw ParseError("line 1: dimension must be positive");
  if (static_cast<std::size_t>(m) != lines.size() - 1)
    throw ParseError("header declares " + std::to_string(m) +
                     " edges but file has " + std::to_string(lines.size() - 1) +
                     " edge lines");

  std::vector<Edge> edges;
  std::vector<std::int64_t> weights;
  edges.reserve(static_cast<std::size_t>(m));
  weights.reserve(static_cast<std::size_t>(m * k));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = split_ws(lines[i]);
    if (fields.size() != 2 + static_cast<std::size_t>(k))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v' and " +
                       std::to_string(k) + " weights, got " +
                       std::to_string(fields.size()) + " fields");
    const std::int64_t u = parse_int_field(fields[0], line_no, "vertex id");
    const std::int64_t v = parse_int_field(fields[1], line_no, "vertex id");
    if (u < 1 || v > n || u >= v)
      throw ParseError("line " + std::to_string(line_no) + ": bad edge (" +
                       std::to_string(u) + "," + std::to_string(v) + ")");
    for (std::size_t f = 2; f < fields.size(); ++f) {
      const auto milli = parse_milli(fields[f]);
      if (!milli)
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed weight '" + std::string(fields[f]) + "'");
      if (*milli <= 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": weight must be positive, got " +
                         std::string(fields[f]));
      weights.push_back(*milli);
    }
    edges.push_back({static_cast<std::int32_t>(u), static_cast<std::int32_t>(v)});
  }
  try {
    return Instance(static_cast<std::int32_t>(n), static_cast<std::int32_t>(k),
                    std::move(edges), std::move(weights));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  std::string out;
  out += std::to_string(instance.vertex_count());
  out += ' ';
  out += std::to_string(instance.edge_count());
  out += ' ';
  out += std::to_string(instance.dim());
  out += '\n';
  for (std::int32_t e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    out += std::to_string(edge.u);
    out += ' ';
    out += std::to_string(edge.v);
    for (const std::int64_t w : instance.weight_row(e)) {
      out += ' ';
      out += format_milli(w);
    }
    out += '\n';
  }
  return out;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << serialize_instance(instance);
}

Instance prefix_instance(const Instance& instance, std::int32_t k_prime) {
  if (k_prime < 1 || k_prime > instance.dim())
    throw std::invalid_argument("prefix dimension " + std::to_string(k_prime) +
                                " out of range [1," +
                                std::to_string(instance.dim()) + "]");
  std::vector<std::int64_t> weights;
  weights.reserve(static_cast<std::size_t>(instance.edge_count()) * k_prime);
  for (std::int32_t e = 0; e < instance.edge_count(); ++e) {
    const auto row = instance.weight_row(e);
    weights.insert(weights.end(), row.begin(), row.begin() + k_prime);
  }
  return Instance(instance.vertex_count(), k_prime, instance.edges(),
                  std::move(weights));
}

Bisection::Bisection(std::int32_t vertex_count,
                     std::vector<std::int32_t> members)
    : n_(vertex_count), members_(std::move(members)) {
  if (n_ <= 0 || n_ % 2 != 0)
    throw std::invalid_argument("vertex count must be positive and even");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("bisection members must be distinct");
  if (!members_.empty() && (members_.front() < 1 || members_.back() > n_))
    throw std::invalid_argument("bisection member out of range");
  if (members_.size() != static_cast<std::size_t>(n_) / 2)
    throw std::invalid_argument("bisection must contain exactly n/2 vertices");
  if (members_.front() != 1) {
    // Complement to the canonical representative containing vertex 1.
    std::vector<std::uint8_t> in(static_cast<std::size_t>(n_) + 1, 0);
    for (const std::int32_t v : members_) in[static_cast<std::size_t>(v)] = 1;
    std::vector<std::int32_t> complement;
    complement.reserve(members_.size());
    for (std::int32_t v = 1; v <= n_; ++v)
      if (!in[static_cast<std::size_t>(v)]) complement.push_back(v);
    members_ = std::move(complement);
  }
}

std::vector<std::uint8_t> Bisection::side_mask() const {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(n_) + 1, 0);
  for (const std::int32_t v : members_) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

std::vector<std::int32_t> cut_edges_of_mask(
    const Instance& instance, std::span<const std::uint8_t> mask) {
  std::vector<std::int32_t> cut;
  for (std::int32_t e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    if (mask[static_cast<std::size_t>(edge.u)] !=
        mask[static_cast<std::size_t>(edge.v)])
      cut.push_back(e);
  }
  return cut;
}

std::vector<std::int32_t> cut_edges(const Instance& instance,
                                    const Bisection& s) {
  const auto mask = s.side_mask();
  return cut_edges_of_mask(instance, mask);
}

CutReport cut_report_of_mask(const Instance& instance,
                             std::span<const std::uint8_t> mask) {
  CutReport report;
  report.cut_edges = cut_edges_of_mask(instance, mask);
  const std::size_t k = static_cast<std::size_t>(instance.dim());
  std::vector<std::int64_t> sums(k, 0);
  const auto& ops = kernels::active();
  for (const std::int32_t e : report.cut_edges)
    ops.add_row(sums.data(), instance.weight_row(e).data(), k);
  report.coordinate_sums.reserve(k);
  for (const std::int64_t s : sums)
    report.coordinate_sums.push_back(Weight::from_milli(s));
  report.weight = Weight::from_milli(ops.min_reduce(sums.data(), k));
  return report;
}

CutReport cut_weight(const Instance& instance, const Bisection& s) {
  const auto mask = s.side_mask();
  return cut_report_of_mask(instance, mask);
}

}  // namespace mmbp
