#include "mmbp/milp.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace mmbp {

MilpModel build_model(const Instance& instance) {
  return MilpModel{
      .vertex_count = instance.vertex_count(),
      .dim = instance.dim(),
      .edges = instance.edges(),
      .weights_milli = instance.weights_milli(),
  };
}

namespace {

std::string x_name(std::int32_t i) { return "x" + std::to_string(i); }

std::string y_name(const Edge& e) {
  return "y" + std::to_string(e.u) + "_" + std::to_string(e.v);
}

}  // namespace

std::string emit_lp(const MilpModel& model) {
  std::string out;
  out += "Maximize\n obj: U\nSubject To\n";
  for (std::int32_t l = 0; l < model.dim; ++l) {
    out += " dim" + std::to_string(l + 1) + ": U";
    for (std::size_t e = 0; e < model.edge_count(); ++e) {
      out += " - ";
      out += format_milli(model.weight_row(e)[static_cast<std::size_t>(l)]);
      out += ' ';
      out += y_name(model.edges[e]);
    }
    out += " <= 0\n";
  }
  for (const Edge& edge : model.edges) {
    out += " lb" + std::to_string(edge.u) + "_" + std::to_string(edge.v) +
           ": " + x_name(edge.u) + " + " + x_name(edge.v) + " - " +
           y_name(edge) + " >= 0\n";
  }
  for (const Edge& edge : model.edges) {
    out += " ub" + std::to_string(edge.u) + "_" + std::to_string(edge.v) +
           ": " + x_name(edge.u) + " + " + x_name(edge.v) + " + " +
           y_name(edge) + " <= 2\n";
  }
  out += " bal:";
  for (std::int32_t i = 1; i <= model.vertex_count; ++i) {
    if (i > 1) out += " +";
    out += ' ';
    out += x_name(i);
  }
  out += " = " + std::to_string(model.vertex_count / 2) + "\n";
  out += "Bounds\n U >= 0\nBinary\n";
  for (std::int32_t i = 1; i <= model.vertex_count; ++i)
    out += " " + x_name(i) + "\n";
  for (const Edge& edge : model.edges) out += " " + y_name(edge) + "\n";
  out += "End\n";
  return out;
}

namespace {

struct Term {
  bool negative = false;
  bool has_coeff = false;
  std::int64_t coeff_milli = 1000;
  std::string var;
};

struct Row {
  std::string name;
  std::vector<Term> terms;
  std::string sense;  // "<=", ">=", "="
  std::int64_t rhs = 0;
};

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_number_token(const std::string& tok) {
  return !tok.empty() && tok[0] >= '0' && tok[0] <= '9';
}

Row parse_row(const std::vector<std::string>& toks, std::size_t line_no) {
  Row row;
  if (toks.empty() || toks[0].size() < 2 || toks[0].back() != ':')
    throw ParseError("lp line " + std::to_string(line_no) +
                     ": expected 'name:' prefix");
  row.name = toks[0].substr(0, toks[0].size() - 1);
  std::size_t i = 1;
  bool pending_sign = false;
  bool negative = false;
  while (i < toks.size()) {
    const std::string& tok = toks[i];
    if (tok == "<=" || tok == ">=" || tok == "=") {
      if (pending_sign)
        throw ParseError("lp line " + std::to_string(line_no) +
                         ": dangling sign before relation");
      row.sense = tok;
      ++i;
      break;
    }
    if (tok == "+" || tok == "-") {
      if (pending_sign)
        throw ParseError("lp line " + std::to_string(line_no) +
                         ": doubled sign");
      pending_sign = true;
      negative = tok == "-";
      ++i;
      continue;
    }
    Term term;
    term.negative = negative;
    if (is_number_token(tok)) {
      const auto milli = parse_milli_exact3(tok);
      if (!milli)
        throw ParseError("lp line " + std::to_string(line_no) +
                         ": coefficient '" + tok +
                         "' must have exactly three fraction digits");
      term.has_coeff = true;
      term.coeff_milli = *milli;
      ++i;
      if (i >= toks.size())
        throw ParseError("lp line " + std::to_string(line_no) +
                         ": coefficient without variable");
      term.var = toks[i];
      ++i;
    } else {
      term.var = tok;
      ++i;
    }
    row.terms.push_back(std::move(term));
    pending_sign = false;
    negative = false;
  }
  if (row.sense.empty())
    throw ParseError("lp line " + std::to_string(line_no) +
                     ": missing relation in row '" + row.name + "'");
  if (i != toks.size() - 1 || !is_number_token(toks[i]))
    throw ParseError("lp line " + std::to_string(line_no) +
                     ": expected single integer right-hand side");
  for (const char c : toks[i])
    if (c < '0' || c > '9')
      throw ParseError("lp line " + std::to_string(line_no) +
                       ": right-hand side must be a plain integer");
  row.rhs = std::stoll(toks[i]);
  return row;
}

// "y12_34" -> edge (12,34); anything else rejected.
Edge edge_of_y_name(const std::string& var, std::size_t line_no) {
  if (var.size() < 4 || var[0] != 'y')
    throw ParseError("lp line " + std::to_string(line_no) +
                     ": unknown variable name '" + var + "'");
  const std::size_t sep = var.find('_');
  if (sep == std::string::npos || sep == 1 || sep + 1 >= var.size())
    throw ParseError("lp line " + std::to_string(line_no) +
                     ": unknown variable name '" + var + "'");
  std::int64_t u = 0, v = 0;
  for (std::size_t i = 1; i < sep; ++i) {
    if (var[i] < '0' || var[i] > '9')
      throw ParseError("lp line " + std::to_string(line_no) +
                       ": unknown variable name '" + var + "'");
    u = u * 10 + (var[i] - '0');
  }
  for (std::size_t i = sep + 1; i < var.size(); ++i) {
    if (var[i] < '0' || var[i] > '9')
      throw ParseError("lp line " + std::to_string(line_no) +
                       ": unknown variable name '" + var + "'");
    v = v * 10 + (var[i] - '0');
  }
  return {static_cast<std::int32_t>(u), static_cast<std::int32_t>(v)};
}

}  // namespace

MilpModel parse_lp(std::string_view text) {
  // Collect non-blank lines with their numbers.
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::size_t start = 0, line_no = 0;
  while (start <= text.size()) {
    ++line_no;
    const std::size_t nl = text.find('\n', start);
    const std::string_view raw =
        nl == std::string_view::npos ? text.substr(start)
                                     : text.substr(start, nl - start);
    auto toks = tokens_of(raw);
    if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  std::size_t pos = 0;
  const auto expect_line = [&](std::initializer_list<const char*> words,
                               const char* what) {
    if (pos >= lines.size())
      throw ParseError(std::string("lp: missing ") + what);
    const auto& [no, toks] = lines[pos];
    if (toks.size() != words.size() ||
        !std::equal(toks.begin(), toks.end(), words.begin(),
                    [](const std::string& a, const char* b) { return a == b; }))
      throw ParseError("lp line " + std::to_string(no) + ": expected " + what);
    ++pos;
  };

  expect_line({"Maximize"}, "'Maximize' section");
  expect_line({"obj:", "U"}, "objective 'obj: U'");
  expect_line({"Subject", "To"}, "'Subject To' section");

  std::vector<Row> dim_rows, lb_rows, ub_rows;
  std::optional<Row> bal_row;
  while (pos < lines.size() && lines[pos].second[0] != "Bounds") {
    Row row = parse_row(lines[pos].second, lines[pos].first);
    if (row.name.rfind("dim", 0) == 0)
      dim_rows.push_back(std::move(row));
    else if (row.name.rfind("lb", 0) == 0)
      lb_rows.push_back(std::move(row));
    else if (row.name.rfind("ub", 0) == 0)
      ub_rows.push_back(std::move(row));
    else if (row.name == "bal")
      bal_row = std::move(row);
    else
      throw ParseError("lp line " + std::to_string(lines[pos].first) +
                       ": unknown constraint '" + row.name + "'");
    ++pos;
  }
  expect_line({"Bounds"}, "'Bounds' section");
  expect_line({"U", ">=", "0"}, "bound 'U >= 0'");
  expect_line({"Binary"}, "'Binary' section");
  std::vector<std::string> binaries;
  while (pos < lines.size() && lines[pos].second[0] != "End") {
    for (const auto& tok : lines[pos].second) binaries.push_back(tok);
    ++pos;
  }
  expect_line({"End"}, "'End' marker");
  if (pos != lines.size())
    throw ParseError("lp: trailing content after 'End'");

  if (dim_rows.empty()) throw ParseError("lp: no dim rows");
  if (!bal_row) throw ParseError("lp: missing 'bal' row");
  if (lb_rows.size() != ub_rows.size())
    throw ParseError("lp: lb/ub row counts differ");

  // Balance row pins n: x1..xn in order, = n/2.
  const std::int32_t n = static_cast<std::int32_t>(bal_row->terms.size());
  if (n <= 0 || n % 2 != 0)
    throw ParseError("lp: balance row must cover an even vertex count");
  for (std::int32_t i = 1; i <= n; ++i) {
    const Term& t = bal_row->terms[static_cast<std::size_t>(i - 1)];
    if (t.negative || t.has_coeff || t.var != x_name(i))
      throw ParseError("lp: balance row must be 'x1 + ... + xn'");
  }
  if (bal_row->sense != "=" || bal_row->rhs != n / 2)
    throw ParseError("lp: balance row must equal n/2");

  // Edge list from lb rows; ub rows must mirror it.
  std::vector<Edge> edges;
  edges.reserve(lb_rows.size());
  for (std::size_t e = 0; e < lb_rows.size(); ++e) {
    const Row& lb = lb_rows[e];
    const Row& ub = ub_rows[e];
    const Edge edge = edge_of_y_name("y" + lb.name.substr(2), 0);
    if (edge.u < 1 || edge.v > n || edge.u >= edge.v)
      throw ParseError("lp: row '" + lb.name + "' names an invalid edge");
    const std::string xu = x_name(edge.u), xv = x_name(edge.v),
                      ye = y_name(edge);
    const auto shape_ok = [&](const Row& row, bool y_negative,
                              const std::string& sense, std::int64_t rhs) {
      return row.terms.size() == 3 && !row.terms[0].negative &&
             !row.terms[0].has_coeff && row.terms[0].var == xu &&
             !row.terms[1].negative && !row.terms[1].has_coeff &&
             row.terms[1].var == xv &&
             row.terms[2].negative == y_negative &&
             !row.terms[2].has_coeff && row.terms[2].var == ye &&
             row.sense == sense && row.rhs == rhs;
    };
    if (lb.name != "lb" + std::to_string(edge.u) + "_" + std::to_string(edge.v) ||
        !shape_ok(lb, true, ">=", 0))
      throw ParseError("lp: malformed lower cut row '" + lb.name + "'");
    if (ub.name != "ub" + std::to_string(edge.u) + "_" + std::to_string(edge.v) ||
        !shape_ok(ub, false, "<=", 2))
      throw ParseError("lp: malformed upper cut row '" + ub.name + "'");
    edges.push_back(edge);
  }
  if (!std::is_sorted(edges.begin(), edges.end()) ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParseError("lp: edges must be sorted and unique");

  // Dim rows carry the weights: "dim{l}: U - w y ... <= 0" in order.
  const std::int32_t k = static_cast<std::int32_t>(dim_rows.size());
  std::vector<std::int64_t> weights(edges.size() * static_cast<std::size_t>(k),
                                    0);
  for (std::int32_t l = 0; l < k; ++l) {
    const Row& row = dim_rows[static_cast<std::size_t>(l)];
    if (row.name != "dim" + std::to_string(l + 1))
      throw ParseError("lp: dim rows must be dim1..dimk in order, found '" +
                       row.name + "'");
    if (row.sense != "<=" || row.rhs != 0)
      throw ParseError("lp: row '" + row.name + "' must be '<= 0'");
    if (row.terms.empty() || row.terms[0].var != "U" ||
        row.terms[0].negative || row.terms[0].has_coeff)
      throw ParseError("lp: row '" + row.name + "' must start with U");
    if (row.terms.size() != edges.size() + 1)
      throw ParseError("lp: row '" + row.name + "' must have one term per edge");
    for (std::size_t t = 1; t < row.terms.size(); ++t) {
      const Term& term = row.terms[t];
      if (!term.negative || !term.has_coeff)
        throw ParseError("lp: row '" + row.name +
                         "' terms must be '- w y{u}_{v}'");
      const Edge edge = edge_of_y_name(term.var, 0);
      const auto it = std::lower_bound(edges.begin(), edges.end(), edge);
      if (it == edges.end() || *it != edge)
        throw ParseError("lp: unknown variable name '" + term.var + "' in '" +
                         row.name + "'");
      const std::size_t e = static_cast<std::size_t>(it - edges.begin());
      if (weights[e * static_cast<std::size_t>(k) +
                  static_cast<std::size_t>(l)] != 0)
        throw ParseError("lp: duplicate coefficient for '" + term.var +
                         "' in '" + row.name + "'");
      if (term.coeff_milli <= 0)
        throw ParseError("lp: weight coefficients must be positive");
      weights[e * static_cast<std::size_t>(k) + static_cast<std::size_t>(l)] =
          term.coeff_milli;
    }
  }

  // Binary section must cover exactly the x and y variables.
  std::vector<std::string> expected;
  expected.reserve(static_cast<std::size_t>(n) + edges.size());
  for (std::int32_t i = 1; i <= n; ++i) expected.push_back(x_name(i));
  for (const Edge& edge : edges) expected.push_back(y_name(edge));
  std::vector<std::string> got = binaries;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  if (got != expected)
    throw ParseError("lp: Binary section must list every x and y exactly once");

  return MilpModel{n, k, std::move(edges), std::move(weights)};
}

Witness witness_from_bisection(const Instance& instance, const Bisection& s) {
  Witness w;
  w.x = s.side_mask();
  const auto cut = cut_weight(instance, s);
  w.y.assign(static_cast<std::size_t>(instance.edge_count()), 0);
  for (const std::int32_t e : cut.cut_edges)
    w.y[static_cast<std::size_t>(e)] = 1;
  w.u_milli = cut.weight.milli;
  return w;
}

CheckReport check_solution(const MilpModel& model, const Witness& witness) {
  const std::size_t n = static_cast<std::size_t>(model.vertex_count);
  const std::size_t m = model.edge_count();
  if (witness.x.size() != n + 1)
    throw std::invalid_argument("witness x must have length n+1 (1-based)");
  if (witness.y.size() != m)
    throw std::invalid_argument("witness y must have one entry per edge");

  CheckReport report;

  for (std::size_t v = 1; v <= n; ++v)
    if (witness.x[v] > 1) {
      report.domains.satisfied = false;
      report.domains.violated.push_back(x_name(static_cast<std::int32_t>(v)));
    }
  for (std::size_t e = 0; e < m; ++e)
    if (witness.y[e] > 1) {
      report.domains.satisfied = false;
      report.domains.violated.push_back(y_name(model.edges[e]));
    }
  if (witness.u_milli < 0) {
    report.domains.satisfied = false;
    report.domains.violated.push_back("U");
  }

  for (std::int32_t l = 0; l < model.dim; ++l) {
    std::int64_t sum = 0;
    for (std::size_t e = 0; e < m; ++e)
      if (witness.y[e] == 1)
        sum += model.weight_row(e)[static_cast<std::size_t>(l)];
    if (witness.u_milli > sum) {
      report.dim_rows.satisfied = false;
      report.dim_rows.violated.push_back("dim" + std::to_string(l + 1));
    }
  }

  for (std::size_t e = 0; e < m; ++e) {
    const Edge& edge = model.edges[e];
    const int xu = witness.x[static_cast<std::size_t>(edge.u)];
    const int xv = witness.x[static_cast<std::size_t>(edge.v)];
    const int ye = witness.y[e];
    if (xu + xv < ye) {
      report.cut_lower.satisfied = false;
      report.cut_lower.violated.push_back(
          "lb" + std::to_string(edge.u) + "_" + std::to_string(edge.v));
    }
    if (xu + xv + ye > 2) {
      report.cut_upper.satisfied = false;
      report.cut_upper.violated.push_back(
          "ub" + std::to_string(edge.u) + "_" + std::to_string(edge.v));
    }
  }

  std::int64_t x_sum = 0;
  for (std::size_t v = 1; v <= n; ++v) x_sum += witness.x[v];
  if (x_sum != model.vertex_count / 2) {
    report.balance.satisfied = false;
    report.balance.violated.push_back("bal");
  }

  // Tightness: y is exactly the cut indicator of S = {i | x_i = 1} and U is
  // that cut's weight.
  bool tight = true;
  std::vector<std::int64_t> cut_sums(static_cast<std::size_t>(model.dim), 0);
  bool any_coordinate = model.dim > 0;
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& edge = model.edges[e];
    const bool in_cut = witness.x[static_cast<std::size_t>(edge.u)] !=
                        witness.x[static_cast<std::size_t>(edge.v)];
    if (witness.y[e] != (in_cut ? 1 : 0)) tight = false;
    if (in_cut)
      for (std::int32_t l = 0; l < model.dim; ++l)
        cut_sums[static_cast<std::size_t>(l)] +=
            model.weight_row(e)[static_cast<std::size_t>(l)];
  }
  if (any_coordinate) {
    const std::int64_t cut_value =
        *std::min_element(cut_sums.begin(), cut_sums.end());
    if (witness.u_milli != cut_value) tight = false;
  }
  report.tight = tight;
  return report;
}

Witness parse_solution(const MilpModel& model, std::string_view text) {
  Witness w;
  w.x.assign(static_cast<std::size_t>(model.vertex_count) + 1, 0);
  w.y.assign(model.edge_count(), 0);
  w.u_milli = 0;

  std::vector<std::string> seen;
  std::size_t start = 0, line_no = 0;
  while (start <= text.size()) {
    ++line_no;
    const std::size_t nl = text.find('\n', start);
    const std::string_view raw =
        nl == std::string_view::npos ? text.substr(start)
                                     : text.substr(start, nl - start);
    const auto advance = [&] {
      if (nl == std::string_view::npos) {
        start = text.size() + 1;
        return false;
      }
      start = nl + 1;
      return true;
    };
    const auto toks = tokens_of(raw);
    if (toks.empty() || toks[0][0] == '#') {
      if (!advance()) break;
      continue;
    }
    if (toks.size() != 2)
      throw ParseError("solution line " + std::to_string(line_no) +
                       ": expected '<name> <value>'");
    const std::string& name = toks[0];
    if (std::find(seen.begin(), seen.end(), name) != seen.end())
      throw ParseError("solution line " + std::to_string(line_no) +
                       ": duplicate assignment for '" + name + "'");
    seen.push_back(name);
    const auto milli = parse_milli(toks[1]);
    if (!milli)
      throw ParseError("solution line " + std::to_string(line_no) +
                       ": malformed value '" + toks[1] + "'");
    if (name == "U") {
      w.u_milli = *milli;
    } else if (name[0] == 'x') {
      std::int64_t i = 0;
      for (std::size_t c = 1; c < name.size(); ++c) {
        if (name[c] < '0' || name[c] > '9')
          throw ParseError("solution line " + std::to_string(line_no) +
                           ": unknown variable '" + name + "'");
        i = i * 10 + (name[c] - '0');
      }
      if (name.size() < 2 || i < 1 || i > model.vertex_count)
        throw ParseError("solution line " + std::to_string(line_no) +
                         ": unknown variable '" + name + "'");
      if (*milli != 0 && *milli != 1000)
        throw ParseError("solution line " + std::to_string(line_no) + ": '" +
                         name + "' must be 0 or 1");
      w.x[static_cast<std::size_t>(i)] = *milli == 1000 ? 1 : 0;
    } else if (name[0] == 'y') {
      const Edge edge = edge_of_y_name(name, line_no);
      const auto it =
          std::lower_bound(model.edges.begin(), model.edges.end(), edge);
      if (it == model.edges.end() || *it != edge)
        throw ParseError("solution line " + std::to_string(line_no) +
                         ": unknown variable '" + name + "'");
      if (*milli != 0 && *milli != 1000)
        throw ParseError("solution line " + std::to_string(line_no) + ": '" +
                         name + "' must be 0 or 1");
      w.y[static_cast<std::size_t>(it - model.edges.begin())] =
          *milli == 1000 ? 1 : 0;
    } else {
      throw ParseError("solution line " + std::to_string(line_no) +
                       ": unknown variable '" + name + "'");
    }
    if (!advance()) break;
  }
  return w;
}

}  // namespace mmbp
