#include "chenlegendre/path.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "chenlegendre/json_util.hpp"

namespace chl {

namespace {

constexpr double kChainTol = 1e-12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Cplx segment_point(const Segment& s, double u) {
    if (const auto* line = std::get_if<LineSegment>(&s))
        return line->from + u * (line->to - line->from);
    const auto& arc = std::get<ArcSegment>(s);
    double angle = arc.angle_from + u * (arc.angle_to - arc.angle_from);
    return arc.center + arc.radius * Cplx(std::cos(angle), std::sin(angle));
}

// 1 - gamma(u) with the constant part 1 - from (or 1 - center) subtracted
// first: near lambda = 1 that difference is exact (Sterbenz) and the result
// keeps full relative precision, which 1.0 - point(u) would not.
Cplx segment_one_minus(const Segment& s, double u) {
    if (const auto* line = std::get_if<LineSegment>(&s))
        return (1.0 - line->from) - u * (line->to - line->from);
    const auto& arc = std::get<ArcSegment>(s);
    double angle = arc.angle_from + u * (arc.angle_to - arc.angle_from);
    return (1.0 - arc.center) - arc.radius * Cplx(std::cos(angle), std::sin(angle));
}

Cplx segment_velocity(const Segment& s, double u) {
    if (const auto* line = std::get_if<LineSegment>(&s)) return line->to - line->from;
    const auto& arc = std::get<ArcSegment>(s);
    double span = arc.angle_to - arc.angle_from;
    double angle = arc.angle_from + u * span;
    return arc.radius * span * Cplx(-std::sin(angle), std::cos(angle));
}

Segment segment_slice(const Segment& s, double u0, double u1) {
    if (const auto* line = std::get_if<LineSegment>(&s)) {
        Cplx d = line->to - line->from;
        return LineSegment{line->from + u0 * d, line->from + u1 * d};
    }
    const auto& arc = std::get<ArcSegment>(s);
    double span = arc.angle_to - arc.angle_from;
    return ArcSegment{arc.center, arc.radius, arc.angle_from + u0 * span,
                      arc.angle_from + u1 * span};
}

Segment segment_reversed(const Segment& s) {
    if (const auto* line = std::get_if<LineSegment>(&s))
        return LineSegment{line->to, line->from};
    const auto& arc = std::get<ArcSegment>(s);
    return ArcSegment{arc.center, arc.radius, arc.angle_to, arc.angle_from};
}

bool is_puncture(Cplx z) {
    return std::abs(z) < kChainTol || std::abs(z - 1.0) < kChainTol;
}

} // namespace

Path::Path(std::vector<Segment> segments, std::optional<Cplx> start_tangent,
           std::optional<Cplx> end_tangent)
    : segments_(std::move(segments)),
      start_tangent_(start_tangent),
      end_tangent_(end_tangent) {
    if (segments_.empty()) throw DomainError("path needs at least one segment");
}

Path Path::line(Cplx from, Cplx to) { return Path({LineSegment{from, to}}); }

Path Path::constant(Cplx at) { return Path({LineSegment{at, at}}); }

Path Path::dch() {
    return Path({LineSegment{0.0, 1.0}}, Cplx(1.0), Cplx(-1.0));
}

Path Path::loop_around_zero() {
    return Path({ArcSegment{0.0, 0.5, 0.0, kTwoPi}});
}

Path Path::loop_around_one() {
    return Path({ArcSegment{1.0, 0.5, std::numbers::pi, std::numbers::pi + kTwoPi}});
}

Path Path::named(const std::string& name) {
    if (name == "dch") return dch();
    if (name == "loop0") return loop_around_zero();
    if (name == "loop1") return loop_around_one();
    throw ParseError("unknown built-in path '" + name + "'");
}

Cplx Path::start() const { return segment_point(segments_.front(), 0.0); }
Cplx Path::end() const { return segment_point(segments_.back(), 1.0); }

Cplx Path::point(double t) const {
    const double n = static_cast<double>(segments_.size());
    double scaled = t * n;
    auto idx = static_cast<std::size_t>(std::min(std::max(scaled, 0.0), n - 1.0));
    if (idx >= segments_.size()) idx = segments_.size() - 1;
    return segment_point(segments_[idx], scaled - static_cast<double>(idx));
}

Cplx Path::one_minus_point(double t) const {
    const double n = static_cast<double>(segments_.size());
    double scaled = t * n;
    auto idx = static_cast<std::size_t>(std::min(std::max(scaled, 0.0), n - 1.0));
    if (idx >= segments_.size()) idx = segments_.size() - 1;
    return segment_one_minus(segments_[idx], scaled - static_cast<double>(idx));
}

Cplx Path::velocity(double t) const {
    const double n = static_cast<double>(segments_.size());
    double scaled = t * n;
    auto idx = static_cast<std::size_t>(std::min(std::max(scaled, 0.0), n - 1.0));
    if (idx >= segments_.size()) idx = segments_.size() - 1;
    return n * segment_velocity(segments_[idx], scaled - static_cast<double>(idx));
}

std::vector<double> Path::joint_parameters() const {
    std::vector<double> ts;
    const double n = static_cast<double>(segments_.size());
    for (std::size_t k = 1; k < segments_.size(); ++k)
        ts.push_back(static_cast<double>(k) / n);
    return ts;
}

Path Path::subpath(double lo_param, double hi_param) const {
    if (!(lo_param >= 0.0 && lo_param < hi_param && hi_param <= 1.0))
        throw DomainError("subpath needs 0 <= a < b <= 1");
    const double n = static_cast<double>(segments_.size());
    std::vector<Segment> out;
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        double lo = static_cast<double>(k) / n;
        double hi = static_cast<double>(k + 1) / n;
        double a = std::max(lo, lo_param);
        double b = std::min(hi, hi_param);
        if (b <= a) continue;
        double u0 = (a - lo) * n;
        double u1 = (b - lo) * n;
        out.push_back(segment_slice(segments_[k], u0, u1));
    }
    return Path(std::move(out));
}

Path Path::shrink(double eps) const {
    if (eps == 0.0) return *this;
    if (!(eps > 0.0 && eps < 0.5)) throw DomainError("shrink needs eps in (0, 1/2)");
    return subpath(eps, 1.0 - eps);
}

Path Path::reversed() const {
    std::vector<Segment> out;
    out.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
        out.push_back(segment_reversed(*it));
    // With lim_{t->0} d(gamma)/dt = u and lim_{t->1} = -v, reversal swaps the
    // stored tangents unchanged.
    return Path(std::move(out), end_tangent_, start_tangent_);
}

Path concat(const Path& a, const Path& b) {
    if (std::abs(a.end() - b.start()) > kChainTol)
        throw DomainError("concatenated paths must chain: end of first != start of second");
    std::vector<Segment> out = a.segments_;
    out.insert(out.end(), b.segments_.begin(), b.segments_.end());
    return Path(std::move(out), a.start_tangent_, b.end_tangent_);
}

void Path::validate() const {
    for (std::size_t k = 1; k < segments_.size(); ++k) {
        Cplx prev = segment_point(segments_[k - 1], 1.0);
        Cplx next = segment_point(segments_[k], 0.0);
        if (std::abs(prev - next) > kChainTol)
            throw DomainError("path segments do not chain continuously at joint " +
                              std::to_string(k));
    }
    if (is_puncture(start()) && !start_tangent_)
        throw DomainError("path starts at a puncture but has no start tangent");
    if (is_puncture(end()) && !end_tangent_)
        throw DomainError("path ends at a puncture but has no end tangent");
    if (start_tangent_) {
        if (std::abs(*start_tangent_) == 0.0) throw DomainError("zero start tangent");
        Cplx v = velocity(0.0);
        if (std::abs(v - *start_tangent_) > 1e-9 * std::max(1.0, std::abs(v)))
            throw DomainError("start tangent does not match the terminal derivative");
    }
    if (end_tangent_) {
        if (std::abs(*end_tangent_) == 0.0) throw DomainError("zero end tangent");
        Cplx v = velocity(1.0);
        if (std::abs(v + *end_tangent_) > 1e-9 * std::max(1.0, std::abs(v)))
            throw DomainError("end tangent does not match the terminal derivative");
    }
}

nlohmann::json path_to_json(const Path& p) {
    nlohmann::json segs = nlohmann::json::array();
    for (const Segment& s : p.segments()) {
        if (const auto* line = std::get_if<LineSegment>(&s)) {
            segs.push_back({{"type", "line"},
                            {"from", {line->from.real(), line->from.imag()}},
                            {"to", {line->to.real(), line->to.imag()}}});
        } else {
            const auto& arc = std::get<ArcSegment>(s);
            segs.push_back({{"type", "arc"},
                            {"center", {arc.center.real(), arc.center.imag()}},
                            {"radius", arc.radius},
                            {"from_angle", arc.angle_from},
                            {"to_angle", arc.angle_to}});
        }
    }
    nlohmann::json j{{"segments", std::move(segs)}};
    if (p.start_tangent())
        j["start_tangent"] = {p.start_tangent()->real(), p.start_tangent()->imag()};
    if (p.end_tangent())
        j["end_tangent"] = {p.end_tangent()->real(), p.end_tangent()->imag()};
    return j;
}

Path path_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Path::named(j.get<std::string>());
    if (!j.contains("segments") || !j["segments"].is_array() || j["segments"].empty())
        throw ParseError("path JSON needs a nonempty 'segments' array");
    std::vector<Segment> segs;
    for (const auto& js : j["segments"]) {
        std::string type = js.at("type").get<std::string>();
        if (type == "line") {
            segs.push_back(LineSegment{complex_from_json(js.at("from")),
                                       complex_from_json(js.at("to"))});
        } else if (type == "arc") {
            segs.push_back(ArcSegment{complex_from_json(js.at("center")),
                                      js.at("radius").get<double>(),
                                      js.at("from_angle").get<double>(),
                                      js.at("to_angle").get<double>()});
        } else {
            throw ParseError("unknown segment type '" + type + "'");
        }
    }
    std::optional<Cplx> u, v;
    if (j.contains("start_tangent")) u = complex_from_json(j["start_tangent"]);
    if (j.contains("end_tangent")) v = complex_from_json(j["end_tangent"]);
    Path p(std::move(segs), u, v);
    p.validate();
    return p;
}

} // namespace chl
