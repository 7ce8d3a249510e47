#include "ruled/io.hpp"

#include <fstream>
#include <sstream>

namespace ruled {

namespace {

Rational rat(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a \"num/den\" string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

Point3 point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("expected a 3-element coordinate array");
    return {rat(j[0]), rat(j[1]), rat(j[2])};
}

}  // namespace

Json to_json(const IntervalSet& s) {
    Json out = Json::array();
    for (const auto& iv : s.intervals()) out.push_back({iv.lo.str(), iv.hi.str()});
    return out;
}

IntervalSet interval_set_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("interval set must be an array");
    std::vector<Interval> parts;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw ParseError("interval must be a [lo, hi] pair");
        parts.push_back({rat(p[0]), rat(p[1])});
    }
    return IntervalSet(std::move(parts));
}

Json to_json(const CoverSpec& c) {
    Json centers = Json::array();
    for (const auto& x : c.centers) centers.push_back(x.str());
    return {{"delta", c.delta.str()}, {"level", c.level}, {"length", c.length.str()}, {"centers", centers}};
}

Json to_json(const Point3& p) { return Json::array({p.x.str(), p.y.str(), p.z.str()}); }

Json to_json(const QPoint3& p) { return Json::array({p.x.str(), p.y.str(), p.z.str()}); }

Json to_json(const Line3& l) { return {{"base", to_json(l.base())}, {"dir", to_json(l.dir())}}; }

Json to_json(const Certificate& c) {
    Json ineqs = Json::array();
    for (const auto& q : c.inequalities) {
        ineqs.push_back({{"what", q.what}, {"lhs", q.lhs.str()}, {"rel", q.rel}, {"rhs", q.rhs.str()}});
    }
    return {{"case", c.kind}, {"inequalities", ineqs}};
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.kind = j.at("case").get<std::string>();
    for (const auto& q : j.at("inequalities")) {
        c.inequalities.push_back({q.value("what", ""), rat(q.at("lhs")), q.at("rel").get<std::string>(), rat(q.at("rhs"))});
    }
    return c;
}

Json body_record(const ConvexBody& b) {
    return {{"q", b.q().str()}, {"m", b.m()}, {"f", b.f_index()}, {"eps", b.eps().str()}, {"support", to_json(b.support())}};
}

ConvexBody body_from_record(const Json& j) {
    return {rat(j.at("q")), j.at("m").get<std::size_t>(), j.at("f").get<std::size_t>(), rat(j.at("eps")),
            interval_set_from_json(j.at("support"))};
}

void write_family(std::ostream& out, const std::vector<ConvexBody>& bodies) {
    for (const auto& b : bodies) out << body_record(b).dump() << '\n';
}

std::vector<ConvexBody> read_family(std::istream& in) {
    std::vector<ConvexBody> out;
    std::vector<std::string> diags;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(body_from_record(Json::parse(line)));
        } catch (const std::exception& e) {
            diags.push_back("family record " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!diags.empty()) throw InputError("malformed family file", std::move(diags));
    return out;
}

Line3 line_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("line record must be an object");
    return {point_from_json(j.at("base")), point_from_json(j.at("dir"))};
}

std::vector<Line3> parse_lines(const std::string& text) {
    std::vector<Line3> out;
    std::vector<std::string> diags;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return out;

    auto take = [&](const Json& rec, const std::string& where) {
        try {
            out.push_back(line_from_json(rec));
        } catch (const std::exception& e) {
            diags.push_back(where + ": " + e.what());
        }
    };
    if (text[first] == '[') {
        Json arr;
        try {
            arr = Json::parse(text);
        } catch (const std::exception& e) {
            throw InputError(std::string("lines file is not valid JSON: ") + e.what());
        }
        for (std::size_t k = 0; k < arr.size(); ++k) take(arr[k], "line record " + std::to_string(k));
    } else {
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                take(Json::parse(line), "line " + std::to_string(lineno));
            } catch (const Json::parse_error& e) {
                diags.push_back("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    if (!diags.empty()) throw InputError("malformed lines file", std::move(diags));
    return out;
}

Json to_json(const RefutationReport& r) {
    Json lines = Json::array();
    for (const auto& f : r.lines) {
        Json rec = {{"index", f.index}, {"group", group_name(f.group)}};
        if (f.param) rec["param"] = f.param->str();
        if (f.group != LineGroup::L3) rec["out_of_range"] = f.out_of_range;
        if (f.group == LineGroup::L3) {
            Json pts = Json::array();
            for (const auto& p : f.surface_points) pts.push_back(to_json(p));
            rec["surface_points"] = pts;
        }
        if (r.found) rec["certificate"] = to_json(f.certificate);
        lines.push_back(std::move(rec));
    }
    Json out = {{"status", r.found ? "witness" : "exhausted"}, {"searched", r.searched}};
    if (r.witness) {
        out["witness"] = body_record(*r.witness);
        out["max_vertical_distance"] = max_vertical_distance(*r.witness).str();
    }
    out["lines"] = lines;
    return out;
}

bool verify_report_json(const Json& report, const std::vector<Line3>& lines) {
    if (report.value("status", "") != "witness") return false;
    RefutationReport r;
    r.found = true;
    r.witness = body_from_record(report.at("witness"));
    for (const auto& rec : report.at("lines")) {
        LineFinding f;
        f.index = rec.at("index").get<std::size_t>();
        const std::string g = rec.at("group").get<std::string>();
        f.group = g == "L1" ? LineGroup::L1 : g == "L2" ? LineGroup::L2 : LineGroup::L3;
        f.certificate = certificate_from_json(rec.at("certificate"));
        r.lines.push_back(std::move(f));
    }
    return verify_report(r, lines);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace ruled
