#ifndef RDS_RENDER_HPP
#define RDS_RENDER_HPP

#include <string>
#include <vector>

#include "rds/construct.hpp"
#include "rds/identities.hpp"
#include "rds/recurrence.hpp"

namespace rds {

enum class OutputFormat { text, json, csv, latex };

// Accepts "text", "json", "csv", "latex"; throws InvalidRange otherwise.
OutputFormat parse_format(const std::string& name);

// All renderers return the complete output including the trailing newline
// (an empty family renders as the empty string).  Output is deterministic:
// same inputs, same bytes.

// text:  3x + x^3            json:  {"n":3,"coeffs":[[1,"3"],[3,"1"]]}
// csv:   n,i,count rows      latex: D_r(C_{3},x) = 3x + x^{3}
std::string render_polynomial(const RdPolynomial& p, OutputFormat f);

std::string render_count(int n, int i, const std::string& method,
                         const Count& c, OutputFormat f);

// Triangle of contiguous rows, lowest order first.  text prints each row
// with zeros ("n: v1 .. vn"), csv only the nonzero cells under a
// "n,i,count" header, latex a tabular mirroring the text layout.
std::string render_triangle(const std::vector<CoefficientRow>& rows,
                            OutputFormat f);

// text: one set per line, "{1,2}".  json only otherwise.
std::string render_family(const RdsFamily& fam, OutputFormat f);

// text: one PASS/FAIL line per check plus indented counterexamples.
// json only otherwise.
std::string render_reports(const std::string& suite,
                           const std::vector<CheckReport>& reports,
                           OutputFormat f);

}  // namespace rds

#endif  // RDS_RENDER_HPP
