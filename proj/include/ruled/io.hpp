#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ruled/cover.hpp"
#include "ruled/refute.hpp"

namespace ruled {

using Json = nlohmann::ordered_json;

/// Malformed input file; carries one diagnostic per bad record.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, std::vector<std::string> diagnostics = {})
        : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
    [[nodiscard]] const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

[[nodiscard]] Json to_json(const IntervalSet& s);
[[nodiscard]] IntervalSet interval_set_from_json(const Json& j);
[[nodiscard]] Json to_json(const CoverSpec& c);
[[nodiscard]] Json to_json(const Point3& p);
[[nodiscard]] Json to_json(const QPoint3& p);
[[nodiscard]] Json to_json(const Line3& l);
[[nodiscard]] Json to_json(const Certificate& c);
[[nodiscard]] Certificate certificate_from_json(const Json& j);

/// {"q","m","f","eps","support"} record of one body.
[[nodiscard]] Json body_record(const ConvexBody& b);
[[nodiscard]] ConvexBody body_from_record(const Json& j);

/// One JSON object per line.
void write_family(std::ostream& out, const std::vector<ConvexBody>& bodies);
[[nodiscard]] std::vector<ConvexBody> read_family(std::istream& in);

/// Lines file: a JSON array of {"base": [x,y,z], "dir": [dx,dy,dz]} records
/// or the same records one per line.  The ruling class is always recomputed.
[[nodiscard]] std::vector<Line3> parse_lines(const std::string& text);
[[nodiscard]] Line3 line_from_json(const Json& j);

[[nodiscard]] Json to_json(const RefutationReport& r);
/// Rebuilds the witness body and certificates from a serialized report and
/// rechecks them against the lines.
[[nodiscard]] bool verify_report_json(const Json& report, const std::vector<Line3>& lines);

[[nodiscard]] std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace ruled
