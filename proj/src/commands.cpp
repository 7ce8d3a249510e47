#include "ruled/commands.hpp"

#include <filesystem>
#include <sstream>

#include "ruled/depth.hpp"
#include "ruled/io.hpp"
#include "ruled/line_cover.hpp"

namespace ruled {

void RunConfig::validate() const {
    if (delta.sign() <= 0 || delta >= Rational(1)) throw InputError("--delta must lie in (0,1), got " + delta.str());
    if (t == 0) throw InputError("--t must be at least 1");
    if (count == 0) throw InputError("--count must be at least 1");
    if (nmax == 0) throw InputError("--nmax must be at least 1");
    if (precision < 1 || precision > 200) throw InputError("--precision must be in 1..200");
}

namespace {

void emit(const RunConfig& cfg, std::ostream& sink, const std::string& text) {
    if (cfg.out.empty()) {
        sink << text;
    } else {
        write_text(cfg.out, text);
    }
}

std::vector<ConvexBody> load_family(const RunConfig& cfg) {
    if (cfg.family.empty()) throw InputError("--family is required");
    std::istringstream in(read_text(cfg.family));
    return read_family(in);
}

std::vector<Line3> load_lines(const RunConfig& cfg) {
    if (cfg.lines.empty()) throw InputError("--lines is required");
    return parse_lines(read_text(cfg.lines));
}

bool in_box(const Point3& p) {
    auto ok = [](const Rational& v) { return v.sign() >= 0 && v <= Rational(2); };
    return ok(p.x) && ok(p.y) && ok(p.z);
}

template <typename F>
int guarded(std::ostream& log, F&& body) {
    try {
        return body();
    } catch (const InputError& e) {
        log << "input error: " << e.what() << '\n';
        for (const auto& d : e.diagnostics()) log << "  " << d << '\n';
        return kExitInputError;
    } catch (const ParseError& e) {
        log << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        log << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        log << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int cmd_construct(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log) {
    return guarded(log, [&] {
        cfg.validate();
        const auto bodies = truncate_family(cfg.delta, cfg.count);
        std::ostringstream text;
        write_family(text, bodies);
        emit(cfg, stdout_sink, text.str());
        if (cfg.verify) {
            std::istringstream back(cfg.out.empty() ? text.str() : read_text(cfg.out));
            const auto reread = read_family(back);
            bool ok = reread == bodies;
            for (const auto& b : reread) {
                ok = ok && cfg.delta <= b.support().measure() && b.eps() == eps_of(b.f_index());
                for (const auto& v : b.vertices()) ok = ok && in_box(v);
            }
            log << "verify construct: " << (ok ? "ok" : "FAILED") << '\n';
            if (!ok) return static_cast<int>(kExitVerifyFailed);
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_witness(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log) {
    return guarded(log, [&] {
        cfg.validate();
        const auto bodies = load_family(cfg);
        std::vector<IntervalSet> supports;
        supports.reserve(bodies.size());
        for (const auto& b : bodies) supports.push_back(b.support());

        Json out = {{"t", cfg.t}, {"bodies_in_prefix", bodies.size()}};
        const auto w = deep_witness(supports, cfg.t);
        if (!w) {
            out["status"] = "none";
            out["message"] = "no witness in prefix";
            emit(cfg, stdout_sink, dump(out));
            return static_cast<int>(kExitExhausted);
        }
        const Line3 line = Line3::ruling_x(w->point);
        Json members = Json::array();
        bool all_pierced = true;
        for (const auto k : w->members) {
            const bool p = pierce(line, bodies[k]);
            all_pierced = all_pierced && p;
            members.push_back({{"index", k}, {"q", bodies[k].q().str()}, {"f", bodies[k].f_index()}, {"pierced", p}});
        }
        if (!all_pierced) throw std::logic_error("witness line misses a member body");
        out["status"] = "witness";
        out["r"] = w->point.str();
        out["line"] = to_json(line);
        out["members"] = members;
        emit(cfg, stdout_sink, dump(out));

        if (cfg.verify) {
            bool ok = true;
            for (const auto k : w->members) ok = ok && bodies[k].support().contains(w->point) && pierce(line, bodies[k]);
            log << "verify witness: " << (ok ? "ok" : "FAILED") << '\n';
            if (!ok) return static_cast<int>(kExitVerifyFailed);
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_refute(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log) {
    return guarded(log, [&] {
        cfg.validate();
        const auto lines = load_lines(cfg);
        FamilyStream stream(cfg.delta);
        const RefutationReport report = refute(lines, stream, cfg.nmax);
        const Json j = to_json(report);
        emit(cfg, stdout_sink, dump(j));
        if (!report.found) {
            log << "refute: budget of " << cfg.nmax << " stream elements exhausted\n";
            return static_cast<int>(kExitExhausted);
        }
        if (cfg.verify) {
            const Json back = cfg.out.empty() ? j : Json::parse(read_text(cfg.out));
            const auto relines = load_lines(cfg);
            const bool ok = verify_report_json(back, relines);
            log << "verify refute: " << (ok ? "ok" : "FAILED") << '\n';
            if (!ok) return static_cast<int>(kExitVerifyFailed);
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_cover(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log) {
    return guarded(log, [&] {
        cfg.validate();
        const auto bodies = load_family(cfg);
        const auto lines = load_lines(cfg);
        const PiercingMatrix m = piercing_matrix(bodies, lines);
        const LineCover cover = min_line_cover(m);

        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::string row;
            for (std::size_t c = 0; c < m.cols(); ++c) row += m.at(r, c) ? '1' : '0';
            rows.push_back(row);
        }
        Json out = {{"bodies", m.rows()}, {"lines", m.cols()}, {"matrix", rows}};
        if (!cover.coverable) {
            out["status"] = "uncoverable";
            out["uncovered_rows"] = cover.uncovered_rows;
            emit(cfg, stdout_sink, dump(out));
            return static_cast<int>(kExitUncoverable);
        }
        out["status"] = "covered";
        out["size"] = cover.columns.size();
        out["columns"] = cover.columns;
        out["exact"] = cover.exact;
        out["lower_bound"] = cover.lower_bound;
        emit(cfg, stdout_sink, dump(out));

        if (cfg.verify) {
            bool ok = piercing_matrix_serial(bodies, lines) == m;
            for (std::size_t r = 0; r < m.rows(); ++r) {
                bool hit = false;
                for (const auto c : cover.columns) hit = hit || pierce(lines[c], bodies[r]);
                ok = ok && hit;
            }
            log << "verify cover: " << (ok ? "ok" : "FAILED") << '\n';
            if (!ok) return static_cast<int>(kExitVerifyFailed);
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_export_plot(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log) {
    return guarded(log, [&] {
        cfg.validate();
        if (cfg.samples < 2) throw InputError("--samples must be at least 2");
        if (cfg.grid < 2) throw InputError("--grid must be at least 2");
        const auto bodies = load_family(cfg);
        const int p = cfg.precision;
        auto dec = [p](const Rational& x) { return to_decimal(x, p); };

        std::ostringstream arcs;
        std::ostringstream hull;
        std::ostringstream embed;
        std::ostringstream surface;
        arcs << "body,k,r,x,y,z,u,w,in_support,vertical_distance,eps\n";
        hull << "body,k,u,w\n";
        embed << "body,k,x,y,z\n";
        surface << "i,j,x,y,z\n";

        for (std::size_t b = 0; b < bodies.size(); ++b) {
            const ConvexBody& body = bodies[b];
            const Rational span = body.r_max() - body.r_min();
            const auto last = static_cast<long>(cfg.samples - 1);
            std::vector<ChartPoint> boundary;
            for (long k = 0; k <= last; ++k) {
                const Rational r = body.r_min() + span * Rational(k, last);
                const Point3 pt = body.arc_point(r);
                arcs << b << ',' << k << ',' << dec(r) << ',' << dec(pt.x) << ',' << dec(pt.y) << ',' << dec(pt.z)
                     << ',' << dec(pt.x) << ',' << dec(pt.z) << ',' << (body.support().contains(r) ? 1 : 0) << ','
                     << dec(vertical_distance(pt)) << ',' << dec(body.eps()) << '\n';
                boundary.push_back({r, body.lower(r)});
            }
            // Close along the top chord.
            boundary.push_back({body.r_min(), body.top(body.r_min())});
            for (std::size_t k = 0; k < boundary.size(); ++k) {
                const auto& c = boundary[k];
                hull << b << ',' << k << ',' << dec(c.u) << ',' << dec(c.w) << '\n';
                const Point3 pt = from_plane_coords(body.plane(), c);
                embed << b << ',' << k << ',' << dec(pt.x) << ',' << dec(pt.y) << ',' << dec(pt.z) << '\n';
            }
        }
        const auto g = static_cast<long>(cfg.grid - 1);
        for (long i = 0; i <= g; ++i) {
            for (long j = 0; j <= g; ++j) {
                const Rational x(2 * i, g);
                const Rational y(2 * j, g);
                surface << i << ',' << j << ',' << dec(x) << ',' << dec(y) << ',' << dec(x * y) << '\n';
            }
        }

        if (cfg.out.empty()) {
            stdout_sink << arcs.str();
        } else {
            std::filesystem::create_directories(cfg.out);
            const std::filesystem::path dir(cfg.out);
            write_text((dir / "arcs.csv").string(), arcs.str());
            write_text((dir / "hull.csv").string(), hull.str());
            write_text((dir / "embedding.csv").string(), embed.str());
            write_text((dir / "surface.csv").string(), surface.str());
        }
        log << "exported " << bodies.size() << " bodies\n";
        return static_cast<int>(kExitOk);
    });
}

}  // namespace ruled
