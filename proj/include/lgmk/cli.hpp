#pragma once

// Command implementations behind the lgmk executable. Each command returns a
// Report; JSON and text are two renderings of the same Report.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lgmk/error.hpp"
#include "lgmk/serialize.hpp"

namespace lgmk::cli {

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json payload = Json::object();
  std::vector<std::string> warnings;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

/// Indented key/value rendering of the payload; arrays of flat objects are
/// printed as aligned tables.
std::string render_text(const Report& r);

/// "max" | "J" | "sl" | "0" | "a/b,c/d;e/f,g/h". Throws ParseError.
SymmetryGroup parse_group_spec(std::string_view spec, const Polynomial& w);

Report cmd_weights(const std::string& poly);
Report cmd_gmax(const std::string& poly, bool with_elements);
Report cmd_amodel(const std::string& poly, const std::string& group_spec, bool with_elements);
Report cmd_bmodel(const std::string& poly);
Report cmd_mirror_check(const std::string& poly);
Report cmd_search(const std::string& dim, const std::string& top, int vars, long bound, unsigned threads);
Report cmd_paper_tables(long bound, unsigned threads);

/// 0 ok, 2 parse, 3 not admissible, 4 group not admissible, 5 not
/// invertible, 6 resource limit, 1 anything else.
int exit_code(ErrorCode code);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lgmk::cli
