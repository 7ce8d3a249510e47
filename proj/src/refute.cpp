#include "ruled/refute.hpp"

#include <stdexcept>

namespace ruled {

std::string group_name(LineGroup g) {
    switch (g) {
        case LineGroup::L1: return "L1";
        case LineGroup::L2: return "L2";
        case LineGroup::L3: break;
    }
    return "L3";
}

LineGroup group_of(const Line3& l) {
    switch (l.line_class().kind) {
        case RulingKind::R1: return LineGroup::L1;
        case RulingKind::R2: return LineGroup::L2;
        case RulingKind::Other: break;
    }
    return LineGroup::L3;
}

namespace {

bool in_unit(const Rational& x) { return x.sign() >= 0 && x <= Rational(1); }

Certificate slab_certificate(const ConvexBody& body, const Rational& b) {
    const Interval y = body.y_range();
    if (b < y.lo) return {"slab-below", {{"b < q + eps*r_min", b, "<", y.lo}}};
    return {"slab-above", {{"b > q + eps*r_max", b, ">", y.hi}}};
}

Certificate certify(const LineFinding& f, const Line3& line, const ConvexBody& body) {
    const PierceVerdict v = pierce_explained(line, body);
    if (v.pierced) throw std::logic_error("witness body is pierced by line " + std::to_string(f.index));
    if (f.group == LineGroup::L2) return slab_certificate(body, *f.param);
    Certificate c = v.certificate;
    if (f.group == LineGroup::L1) {
        c.kind = (f.out_of_range ? "T1-out-of-range/" : "T1/") + c.kind;
    }
    return c;
}

}  // namespace

RefutationReport refute(std::span<const Line3> lines, FamilyStream& stream, std::size_t n_max) {
    RefutationReport report;
    std::vector<Rational> l1;
    std::vector<Rational> l2;
    std::vector<std::size_t> l3;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        LineFinding f;
        f.index = k;
        f.group = group_of(lines[k]);
        switch (f.group) {
            case LineGroup::L1:
            case LineGroup::L2:
                f.param = lines[k].line_class().param;
                f.out_of_range = !in_unit(*f.param);
                (f.group == LineGroup::L1 ? l1 : l2).push_back(*f.param);
                break;
            case LineGroup::L3: {
                const auto hits = line_surface_intersection(lines[k]);
                f.surface_points = std::get<std::vector<QPoint3>>(hits);
                l3.push_back(k);
                break;
            }
        }
        report.lines.push_back(std::move(f));
    }

    for (std::size_t step = 0; step < n_max; ++step) {
        ConvexBody body = stream.next_body();
        report.searched = step + 1;

        bool rejected = false;
        for (const auto& r : l1) {
            if (body.support().contains(r)) {
                rejected = true;
                break;
            }
        }
        if (rejected) continue;
        const Interval y = body.y_range();
        for (const auto& b : l2) {
            if (y.contains(b)) {
                rejected = true;
                break;
            }
        }
        if (rejected) continue;

        int hits = 0;
        const auto n3 = static_cast<long>(l3.size());
#pragma omp parallel for reduction(+ : hits) schedule(dynamic, 1)
        for (long k = 0; k < n3; ++k) {
            hits += pierce(lines[l3[static_cast<std::size_t>(k)]], body) ? 1 : 0;
        }
        if (hits != 0) continue;

        for (auto& f : report.lines) f.certificate = certify(f, lines[f.index], body);
        report.found = true;
        report.witness = std::move(body);
        return report;
    }
    return report;
}

bool verify_report(const RefutationReport& report, std::span<const Line3> lines) {
    if (!report.found || !report.witness) return false;
    if (report.lines.size() != lines.size()) return false;
    const ConvexBody& body = *report.witness;
    if (body.eps() != eps_of(body.f_index())) return false;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const LineFinding& f = report.lines[k];
        if (f.index != k || f.group != group_of(lines[k])) return false;
        if (pierce(lines[k], body)) return false;
        if (!f.certificate.holds()) return false;
    }
    return true;
}

}  // namespace ruled
