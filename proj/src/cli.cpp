#include "vpart/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "vpart/error.hpp"
#include "vpart/formula_io.hpp"
#include "vpart/frobenius.hpp"
#include "vpart/oracle.hpp"
#include "vpart/quasipoly.hpp"

namespace vpart::cli {
namespace {

using nlohmann::json;

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

/// Inline JSON, "-" for stdin, or a file path.
std::string read_source(const std::string& arg, std::istream& in) {
  if (arg == "-") return slurp(in);
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream file(arg);
  if (!file) throw Error(Errc::InvalidInput, "cannot read '" + arg + "'");
  return slurp(file);
}

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::InvalidInput, std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::string vec_text(Vec2 v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

unsigned default_jobs() {
  if (const char* env = std::getenv("VPART_JOBS")) {
    try {
      std::int64_t v = parse_int(env, "VPART_JOBS");
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const Error&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool closed_form_applies(const ColumnMatrix& m) { return m.is_one_prime() && !m.has_parallel_columns(); }

int cmd_chambers(const ColumnMatrix& m, std::ostream& out) {
  out << "columns:";
  for (Vec2 c : m.columns()) out << " " << vec_text(c);
  out << "\n1-prime: " << (m.is_one_prime() ? "yes" : "no") << "\n";
  const std::size_t n = m.size();
  for (const Chamber& ch : chambers(m)) {
    out << "chamber " << ch.index + 1 << ": " << vec_text(ch.lower_ray) << " -> " << vec_text(ch.upper_ray);
    std::string pairs;
    for (std::size_t i = 0; i <= ch.index; ++i) {
      for (std::size_t j = ch.index + 1; j < n; ++j) {
        std::int64_t y = std::abs(m.minor(i, j));
        if (y < 2) continue;
        pairs += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") mod " + std::to_string(y) + ";";
      }
    }
    if (!pairs.empty()) pairs.pop_back();
    out << "  pairs:" << (pairs.empty() ? " none" : pairs) << "\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out << "Y" << i + 1 << j + 1 << " = " << m.minor(i, j) << "\n";
    }
  }
  return 0;
}

int cmd_count(const std::vector<std::string>& positional, const std::string& from_formula, const std::string& method,
              std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<QuasiPolynomial> q;
  std::optional<ColumnMatrix> m;
  Vec2 b;
  if (!from_formula.empty()) {
    if (positional.size() != 1) throw Error(Errc::InvalidInput, "with --from-formula, give only the point");
    q.emplace(formula_from_json(read_source(from_formula, in)));
    m.emplace(q->matrix());
    b = parse_point(positional[0]);
  } else {
    if (positional.size() != 2) throw Error(Errc::InvalidInput, "count needs MATRIX and POINT");
    m.emplace(parse_matrix_json(read_source(positional[0], in)));
    b = parse_point(positional[1]);
  }

  const bool want_closed = method != "oracle";
  const bool want_oracle = method != "closed";
  if (want_closed && !q) {
    if (closed_form_applies(*m)) {
      q.emplace(build_formula(*m));
    } else {
      err << "warning: no closed form for this matrix (not 1-prime or parallel columns); using the oracle\n";
    }
  }

  std::optional<BigInt> closed;
  if (want_closed && q) closed = evaluate_count(*q, b);
  std::optional<std::uint64_t> oracle;
  if (want_oracle || !q) oracle = brute_count(*m, b).count;

  if (method == "both") {
    if (!closed) {
      out << "closed=unavailable oracle=" << *oracle << " match=unavailable\n";
      return 0;
    }
    const bool match = *closed == static_cast<unsigned long>(*oracle);
    out << "closed=" << closed->get_str() << " oracle=" << *oracle << " match=" << (match ? "true" : "false") << "\n";
    return match ? 0 : 1;
  }
  if (closed) {
    out << closed->get_str() << "\n";
  } else {
    out << *oracle << "\n";
  }
  return 0;
}

int cmd_formula(const ColumnMatrix& m, const std::string& format, std::ostream& out) {
  QuasiPolynomial q = build_formula(m);
  if (format == "text") {
    out << render_text(q);
  } else {
    out << formula_to_json(q) << "\n";
  }
  return 0;
}

int cmd_verify(const ColumnMatrix& m, std::int64_t radius, unsigned jobs, std::ostream& out) {
  if (radius < 0) throw Error(Errc::InvalidInput, "radius must be >= 0");
  QuasiPolynomial q = build_formula(m);
  auto mismatches = grid_verify(q, radius, jobs);
  out << "radius=" << radius << " mismatches=" << mismatches.size() << "\n";
  for (const auto& mm : mismatches) {
    out << "  b=" << vec_text(mm.point) << " closed=" << mm.closed << " oracle=" << mm.oracle << "\n";
  }
  return mismatches.empty() ? 0 : 1;
}

int cmd_frobenius(const ColumnMatrix& m, Vec2 direction, std::int64_t horizon, std::ostream& out, std::ostream& err) {
  json doc;
  try {
    FrobeniusResult r = frobenius_exact(m, direction, horizon);
    doc["bound"] = r.bound ? json(to_string(*r.bound)) : json(nullptr);
    doc["exact"] = r.exact;
    doc["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    doc["checks"] = r.checks;
  } catch (const Error& e) {
    if (e.code() != Errc::HorizonExceeded) throw;
    err << "warning: " << e.detail() << "; exact value unknown\n";
    std::optional<BigRational> bound;
    try {
      bound = frobenius_bound(m, direction);
    } catch (const Error&) {
    }
    doc["bound"] = bound ? json(to_string(*bound)) : json(nullptr);
    doc["exact"] = nullptr;
    doc["witness"] = nullptr;
    doc["checks"] = horizon;
  }
  out << doc.dump() << "\n";
  return 0;
}

void report(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

Vec2 parse_point(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') s += c;
  }
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(Errc::InvalidInput, "point must look like x,y: '" + text + "'");
  return {parse_int(std::string_view(s).substr(0, comma), "coordinate"),
          parse_int(std::string_view(s).substr(comma + 1), "coordinate")};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vector partition functions of 2xn integer matrices", "vpart"};
  app.require_subcommand(1);

  std::string matrix_arg;
  auto* chambers_cmd = app.add_subcommand("chambers", "List chambers, their rays and periodic pair moduli");
  chambers_cmd->add_option("matrix", matrix_arg, "Matrix JSON, file path, or - for stdin")->required();

  // two scalar positionals: CLI11 would split a bracketed matrix given to a vector option
  std::string count_first, count_second;
  std::string method = "closed";
  std::string from_formula;
  auto* count_cmd = app.add_subcommand("count", "Count nonnegative integer solutions of Mx = b");
  count_cmd->add_option("matrix", count_first, "MATRIX (or POINT with --from-formula)")->required();
  count_cmd->add_option("point", count_second, "POINT x,y");
  count_cmd->add_option("--method", method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  count_cmd->add_option("--from-formula", from_formula, "Evaluate a saved formula JSON instead of building one");

  std::string format = "json";
  auto* formula_cmd = app.add_subcommand("formula", "Emit the closed-form quasi-polynomial");
  formula_cmd->add_option("matrix", matrix_arg, "Matrix JSON, file path, or - for stdin")->required();
  formula_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::int64_t radius = 20;
  unsigned jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand("verify", "Compare closed form and oracle on a grid");
  verify_cmd->add_option("matrix", matrix_arg, "Matrix JSON, file path, or - for stdin")->required();
  verify_cmd->add_option("--radius", radius, "Grid radius (sup norm)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads (default: VPART_JOBS or core count)")
      ->check(CLI::PositiveNumber);

  std::string direction;
  std::int64_t horizon = 10000;
  auto* frob_cmd = app.add_subcommand("frobenius", "Bound and exact Frobenius number along a direction");
  frob_cmd->add_option("matrix", matrix_arg, "Matrix JSON, file path, or - for stdin")->required();
  frob_cmd->add_option("--direction", direction, "Direction x,y")->required();
  frob_cmd->add_option("--horizon", horizon, "Largest multiple to test")->check(CLI::PositiveNumber);

  std::int64_t pa = 0, pb = 0, pn = 0;
  auto* pop_cmd = app.add_subcommand("popoviciu", "Count (x, y) >= 0 with a x + b y = n");
  pop_cmd->add_option("a", pa)->required();
  pop_cmd->add_option("b", pb)->required();
  pop_cmd->add_option("n", pn)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report(err, "InvalidInput", e.what());
    return 2;
  }

  try {
    if (*count_cmd) {
      std::vector<std::string> positional{count_first};
      if (!count_second.empty()) positional.push_back(count_second);
      return cmd_count(positional, from_formula, method, in, out, err);
    }
    if (*pop_cmd) {
      out << popoviciu_pair(pa, pb, pn).get_str() << "\n";
      return 0;
    }
    const ColumnMatrix m = parse_matrix_json(read_source(matrix_arg, in));
    if (*chambers_cmd) return cmd_chambers(m, out);
    if (*formula_cmd) return cmd_formula(m, format, out);
    if (*verify_cmd) return cmd_verify(m, radius, jobs, out);
    if (*frob_cmd) return cmd_frobenius(m, parse_point(direction), horizon, out, err);
  } catch (const Error& e) {
    report(err, errc_name(e.code()), e.detail());
    return 2;
  }
  return 2;
}

}  // namespace vpart::cli
