#include "rds/render.hpp"

#include <json.hpp>
#include <sstream>
#include <string>

#include "rds/errors.hpp"

namespace rds {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string power(int i, bool latex) {
  if (i == 0) return "";
  if (i == 1) return "x";
  if (latex) return "x^{" + std::to_string(i) + "}";
  return "x^" + std::to_string(i);
}

std::string term(int i, const Count& c, bool latex) {
  const std::string xs = power(i, latex);
  if (xs.empty()) return c.get_str();
  if (c == 1) return xs;
  return c.get_str() + xs;
}

std::string polynomial_body(const RdPolynomial& p, bool latex) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : p.coeffs) {
    if (!out.empty()) out += " + ";
    out += term(i, c, latex);
  }
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "latex") return OutputFormat::latex;
  throw InvalidRange("unknown output format: " + name);
}

std::string render_polynomial(const RdPolynomial& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      return polynomial_body(p, false) + "\n";
    case OutputFormat::latex:
      return "D_r(C_{" + std::to_string(p.order) +
             "},x) = " + polynomial_body(p, true) + "\n";
    case OutputFormat::csv: {
      std::string out = "n,i,count\n";
      for (const auto& [i, c] : p.coeffs)
        out += std::to_string(p.order) + "," + std::to_string(i) + "," +
               c.get_str() + "\n";
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["n"] = p.order;
      j["coeffs"] = ordered_json::array();
      for (const auto& [i, c] : p.coeffs)
        j["coeffs"].push_back(ordered_json::array({i, c.get_str()}));
      return j.dump() + "\n";
    }
  }
  return "";
}

std::string render_count(int n, int i, const std::string& method,
                         const Count& count, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      return count.get_str() + "\n";
    case OutputFormat::latex:
      return "d_r(C_{" + std::to_string(n) + "}," + std::to_string(i) +
             ") = " + count.get_str() + "\n";
    case OutputFormat::csv:
      return "n,i,count\n" + std::to_string(n) + "," + std::to_string(i) +
             "," + count.get_str() + "\n";
    case OutputFormat::json: {
      ordered_json j;
      j["n"] = n;
      j["i"] = i;
      j["method"] = method;
      j["count"] = count.get_str();
      return j.dump() + "\n";
    }
  }
  return "";
}

std::string render_triangle(const std::vector<CoefficientRow>& rows,
                            OutputFormat format) {
  switch (format) {
    case OutputFormat::text: {
      std::string out;
      for (const auto& row : rows) {
        out += std::to_string(row.order) + ":";
        for (int i = 1; i <= row.order; ++i) out += " " + row.at(i).get_str();
        out += "\n";
      }
      return out;
    }
    case OutputFormat::csv: {
      std::string out = "n,i,count\n";
      for (const auto& row : rows)
        for (const auto& [i, c] : row.counts)
          out += std::to_string(row.order) + "," + std::to_string(i) + "," +
                 c.get_str() + "\n";
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["rows"] = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json r;
        r["n"] = row.order;
        r["counts"] = ordered_json::array();
        for (int i = 1; i <= row.order; ++i)
          r["counts"].push_back(row.at(i).get_str());
        j["rows"].push_back(std::move(r));
      }
      return j.dump() + "\n";
    }
    case OutputFormat::latex: {
      int max_n = 0;
      for (const auto& row : rows) max_n = std::max(max_n, row.order);
      std::ostringstream out;
      out << "\\begin{tabular}{r|";
      for (int i = 1; i <= max_n; ++i) out << "r";
      out << "}\n$n \\backslash i$";
      for (int i = 1; i <= max_n; ++i) out << " & " << i;
      out << " \\\\\n\\hline\n";
      for (const auto& row : rows) {
        out << row.order;
        for (int i = 1; i <= max_n; ++i) {
          out << " & ";
          if (i <= row.order) out << row.at(i).get_str();
        }
        out << " \\\\\n";
      }
      out << "\\end{tabular}\n";
      return out.str();
    }
  }
  return "";
}

std::string render_family(const RdsFamily& family, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: {
      std::string out;
      for (const VertexSet& s : family.sets) {
        out += "{";
        for (std::size_t k = 0; k < s.size(); ++k) {
          if (k > 0) out += ",";
          out += std::to_string(s[k]);
        }
        out += "}\n";
      }
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["n"] = family.order;
      j["i"] = family.cardinality;
      j["count"] = family.sets.size();
      j["sets"] = ordered_json::array();
      for (const VertexSet& s : family.sets) j["sets"].push_back(s);
      return j.dump() + "\n";
    }
    default:
      throw InvalidRange("set listings support only text and json output");
  }
}

std::string render_reports(const std::string& suite,
                           const std::vector<CheckReport>& reports,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::text: {
      std::string out;
      for (const auto& rep : reports) {
        if (rep.passed()) {
          out += "PASS " + rep.name + ": " + rep.range + "\n";
          continue;
        }
        out += "FAIL " + rep.name + ": " + rep.range + ": " +
               std::to_string(rep.total_violations) + " violation(s)\n";
        for (const auto& ce : rep.counterexamples)
          out += "  n=" + std::to_string(ce.n) + " i=" + std::to_string(ce.i) +
                 ": expected " + ce.expected + ", got " + ce.got + "\n";
        if (rep.total_violations > rep.counterexamples.size())
          out += "  ... " +
                 std::to_string(rep.total_violations -
                                rep.counterexamples.size()) +
                 " more\n";
      }
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["suite"] = suite;
      j["reports"] = ordered_json::array();
      for (const auto& rep : reports) {
        ordered_json r;
        r["name"] = rep.name;
        r["range"] = rep.range;
        r["passed"] = rep.passed();
        r["violations"] = rep.total_violations;
        r["counterexamples"] = ordered_json::array();
        for (const auto& ce : rep.counterexamples) {
          ordered_json c;
          c["n"] = ce.n;
          c["i"] = ce.i;
          c["expected"] = ce.expected;
          c["got"] = ce.got;
          r["counterexamples"].push_back(std::move(c));
        }
        j["reports"].push_back(std::move(r));
      }
      return j.dump() + "\n";
    }
    default:
      throw InvalidRange("verification reports support only text and json output");
  }
}

}  // namespace rds
